"""Seidel matrices and the spectral quantities built on them.

For a graph H on n vertices, S(H) = J - I - 2A(H): zero diagonal, -1 on
edges, +1 on non-edges. It is the adjacency matrix of the complete signed
graph whose negative edges are exactly E(H), so its largest eigenvalue is
that signed graph's index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import EIGEN_CLUSTER_TOL, ZERO_ENTRY_TOL
from .eigen import Spectrum, eigen_decompose, jacobi_batch
from .graph import Graph, VertexOutOfRangeError, cut_bits, vertex_pairs


def seidel_matrix(g: Graph) -> np.ndarray:
    s = np.ones((g.n, g.n)) - np.eye(g.n)
    for i, j in g.edges:
        s[i, j] = s[j, i] = -1.0
    return s


def seidel_stack(graphs: Sequence[Graph]) -> np.ndarray:
    """Seidel matrices of equal-order graphs stacked along axis 0."""
    if not graphs:
        raise ValueError("need at least one graph")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("all graphs in a stack must have the same order")
    return np.stack([seidel_matrix(g) for g in graphs])


def seidel_spectrum(g: Graph) -> Spectrum:
    return eigen_decompose(seidel_matrix(g))


def seidel_index(g: Graph) -> float:
    w, _ = jacobi_batch(seidel_matrix(g)[None], vectors=False)
    return float(w[0, 0])


def seidel_spectra(graphs: Sequence[Graph]) -> list[np.ndarray]:
    """Descending Seidel eigenvalues of each graph, solved as one batch per vertex count."""
    out: list[np.ndarray] = [None] * len(graphs)
    by_order: dict[int, list[int]] = {}
    for k, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(k)
    for ks in by_order.values():
        w, _ = jacobi_batch(seidel_stack([graphs[k] for k in ks]), vectors=False)
        for k, row in zip(ks, w):
            out[k] = row
    return out


def seidel_indices(graphs: Sequence[Graph]) -> np.ndarray:
    return np.array([w[0] for w in seidel_spectra(graphs)])


def normalize_sign(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Flip ``v`` so its largest-magnitude entry is positive; ties go to the lowest index."""
    mags = np.abs(v)
    k = int(np.flatnonzero(mags >= mags.max() - tol)[0])
    return -v if v[k] < 0 else v.copy()


@dataclass(frozen=True)
class PrincipalVector:
    vector: np.ndarray
    eigenvalue: float
    simple: bool
    gap: float


def principal_eigenvector(g: Graph, cluster_tol: float = EIGEN_CLUSTER_TOL) -> PrincipalVector:
    """Unit eigenvector of the index with a simplicity flag.

    When the index is degenerate the returned vector is just one element
    of the eigenspace and ``simple`` is False.
    """
    sp = seidel_spectrum(g)
    gap = float(sp.eigenvalues[0] - sp.eigenvalues[1]) if g.n > 1 else float("inf")
    return PrincipalVector(
        vector=normalize_sign(sp.eigenvectors[:, 0]),
        eigenvalue=sp.index,
        simple=gap >= cluster_tol,
        gap=gap,
    )


def switch(g: Graph, u: Iterable[int]) -> Graph:
    """Seidel switching: complement every pair with exactly one end in ``u``."""
    mask = 0
    for v in u:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(f"switching vertex {v} outside 0..{g.n - 1}")
        mask |= 1 << v
    return Graph(g.n, g.bits ^ cut_bits(g.n, mask))


def quadratic_form(g: Graph, x) -> float:
    """x^T S(g) x, summed over pairs without forming eigenvectors."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match order {g.n}")
    total = x.sum() ** 2 - x @ x  # x^T (J - I) x
    for i, j in g.edges:
        total -= 4.0 * x[i] * x[j]
    return float(total)


def negative_term_count(g: Graph, x, zero_tol: float = ZERO_ENTRY_TOL) -> int:
    """Size of E(K_{P,Q}) symmetric-difference E(g).

    P and Q are the positions of positive and negative entries of ``x``.
    This equals the number of pairs with s_ij * x_i * x_j < 0.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match order {g.n}")
    if np.any(np.abs(x) <= zero_tol):
        raise ValueError("vector has a zero entry; the sign split is undefined")
    neg = 0
    for i in range(g.n):
        if x[i] < 0:
            neg |= 1 << i
    return (cut_bits(g.n, neg) ^ g.bits).bit_count()


def negative_term_count_direct(g: Graph, x) -> int:
    """Count pairs whose term s_ij x_i x_j is negative by scanning S(g)."""
    x = np.asarray(x, dtype=np.float64)
    s = seidel_matrix(g)
    return sum(1 for i, j in vertex_pairs(g.n) if s[i, j] * x[i] * x[j] < 0)

