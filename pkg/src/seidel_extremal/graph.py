"""Labeled simple graphs on at most 64 vertices.

Edges are packed into a Python integer: bit ``k`` is set when the ``k``-th
vertex pair in lexicographic order ``(0,1), (0,2), ..., (n-2,n-1)`` is an
edge. This makes a graph directly comparable with an m-subset of pair
indices, which is how the exhaustive scanner in :mod:`seidel_extremal.oracle`
walks the search space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .config import ISOMORPHISM_MAX_ORDER, MAX_ORDER


class GraphError(ValueError):
    """Base class for invalid graph input."""


class VertexOutOfRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class OrderError(GraphError):
    """Vertex count outside the supported range."""


class IsomorphismCapacityError(GraphError):
    pass


class EdgeListFormatError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs ``(i, j)`` with ``i < j < n`` in lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def pair_index(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def cut_bits(n: int, vertex_mask: int) -> int:
    """Packed edge set of the complete bipartite graph between a vertex set and its complement."""
    bits = 0
    for k, (i, j) in enumerate(vertex_pairs(n)):
        if (vertex_mask >> i & 1) != (vertex_mask >> j & 1):
            bits |= 1 << k
    return bits


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise OrderError(f"order must be in [1, {MAX_ORDER}], got {n}")


@dataclass(frozen=True)
class Graph:
    """Immutable labeled graph with vertices ``0..n-1``.

    ``bits`` is the packed edge set. Equality is labeled equality; use
    :func:`are_isomorphic` for the unlabeled comparison.
    """

    n: int
    bits: int = 0

    def __post_init__(self):
        _check_order(self.n)
        if self.bits < 0 or self.bits >> (self.n * (self.n - 1) // 2):
            raise GraphError("packed edge set has bits beyond the last vertex pair")

    @property
    def m(self) -> int:
        return self.bits.bit_count()

    @property
    def edges(self) -> list[tuple[int, int]]:
        pairs = vertex_pairs(self.n)
        out = []
        b, k = self.bits, 0
        while b:
            if b & 1:
                out.append(pairs[k])
            b >>= 1
            k += 1
        return out

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> pair_index(self.n, i, j) & 1)

    def adjacency(self) -> list[int]:
        """Neighbourhoods as vertex bitmasks."""
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency()]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose edge ``{perm[i], perm[j]}`` exists iff ``{i, j}`` does."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        bits = 0
        for i, j in self.edges:
            bits |= 1 << pair_index(self.n, perm[i], perm[j])
        return Graph(self.n, bits)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


def make_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    _check_order(n)
    bits = 0
    for i, j in edge_list:
        if not (0 <= i < n and 0 <= j < n):
            raise VertexOutOfRangeError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        if i == j:
            raise SelfLoopError(f"self-loop at vertex {i}")
        k = pair_index(n, i, j)
        if bits >> k & 1:
            raise DuplicateEdgeError(f"edge ({min(i, j)}, {max(i, j)}) given twice")
        bits |= 1 << k
    return Graph(n, bits)


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def complete_bipartite(d: int, n: int) -> Graph:
    """K_{d,n-d} with parts ``{0..d-1}`` and ``{d..n-1}``."""
    if not 0 <= d <= n:
        raise GraphError(f"part size d={d} must lie in [0, n={n}]")
    return make_graph(n, [(i, j) for i in range(d) for j in range(d, n)])


def star_union(n: int, m: int) -> Graph:
    """The star K_{1,m} centred at 0 with leaves ``1..m``, plus isolated vertices."""
    if not 0 <= m <= n - 1:
        raise GraphError(f"star size m={m} must lie in [0, n-1={n - 1}]")
    return make_graph(n, [(0, j) for j in range(1, m + 1)])


def delete_vertex(g: Graph, v: int) -> Graph:
    if g.n < 2:
        raise OrderError("cannot delete the only vertex")
    if not 0 <= v < g.n:
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")

    def shift(u):
        return u - 1 if u > v else u

    return make_graph(g.n - 1, [(shift(i), shift(j)) for i, j in g.edges if v not in (i, j)])


# ---------------------------------------------------------------------------
# isomorphism


def _refine(adjs: list[list[int]], n: int) -> list[list[int]]:
    """Colour refinement run jointly on several graphs so colours are comparable."""
    colors = [[a.bit_count() for a in adj] for adj in adjs]
    n_classes = -1
    while True:
        sigs = []
        for adj, col in zip(adjs, colors):
            sig = []
            for v in range(n):
                nb = sorted(col[u] for u in range(n) if adj[v] >> u & 1)
                sig.append((col[v], tuple(nb)))
            sigs.append(sig)
        palette = {s: k for k, s in enumerate(sorted({s for sig in sigs for s in sig}))}
        colors = [[palette[s] for s in sig] for sig in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def are_isomorphic(g: Graph, h: Graph, max_order: int | None = ISOMORPHISM_MAX_ORDER) -> bool:
    """Permutation search for a vertex bijection mapping E(g) onto E(h).

    Candidates for each vertex are restricted to vertices of the same
    refined degree colour. ``max_order=None`` lifts the order cap; the
    constructions in :mod:`seidel_extremal.extremal` use that for their
    highly structured graphs.
    """
    if g.n != h.n:
        return False
    n = g.n
    if max_order is not None and n > max_order:
        raise IsomorphismCapacityError(f"isomorphism search is capped at n <= {max_order}, got {n}")
    if g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    if g.bits == h.bits:
        return True

    ag, ah = g.adjacency(), h.adjacency()
    cg, ch = _refine([ag, ah], n)
    if sorted(cg) != sorted(ch):
        return False

    # most constrained vertices first
    class_size = {c: cg.count(c) for c in cg}
    order = sorted(range(n), key=lambda v: (class_size[cg[v]], cg[v], v))
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            ok = True
            for u in order[:pos]:
                if (ag[v] >> u & 1) != (ah[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# edge-list text format


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``i j`` with ``i < j``."""
    lines = text.splitlines()
    if not lines:
        raise EdgeListFormatError(1, "missing header 'n m'")
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise EdgeListFormatError(1, f"header must be two non-negative integers 'n m', got {lines[0]!r}")
    n, m = map(int, head)
    if not 1 <= n <= MAX_ORDER:
        raise EdgeListFormatError(1, f"order {n} outside [1, {MAX_ORDER}]")
    if m > n * (n - 1) // 2:
        raise EdgeListFormatError(1, f"{m} edges cannot fit on {n} vertices")
    body = lines[1:]
    # a trailing blank line is tolerated, nothing else
    while body and not body[-1].strip():
        body.pop()
    if len(body) != m:
        raise EdgeListFormatError(len(lines) + 1, f"header announces {m} edges, found {len(body)}")

    bits = 0
    for lineno, line in enumerate(body, start=2):
        tok = line.split()
        if len(tok) != 2 or not all(t.isdigit() for t in tok):
            raise EdgeListFormatError(lineno, f"expected 'i j', got {line!r}")
        i, j = map(int, tok)
        if not i < j:
            raise EdgeListFormatError(lineno, f"need i < j, got {i} {j}")
        if j >= n:
            raise EdgeListFormatError(lineno, f"vertex {j} outside 0..{n - 1}")
        k = pair_index(n, i, j)
        if bits >> k & 1:
            raise EdgeListFormatError(lineno, f"duplicate edge {i} {j}")
        bits |= 1 << k
    return Graph(n, bits)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
