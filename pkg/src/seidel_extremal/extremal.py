"""Closed-form maximal index of complete signed graphs with m negative edges.

Among the products j(n-j), 0 <= j <= n//2, let d(n-d) be the one closest to
m and t = |m - d(n-d)|. The extremal negative graph H_{n,m} is K_{d,n-d}
with a star K_{1,t} removed (m below the product) or added inside one part
(m above it). Switching on a part of K_{d,n-d} turns H_{n,m} into the star
S_{n,t}, whose Seidel spectrum is the three roots of

    f(x) = x^3 + (3-n)x^2 + (3-2n)x - 4t^2 + 4nt - 4t - n + 1

together with -1 repeated n-3 times. Substituting x = n-1-y gives

    g(y) = 4t(n-1-t) - y(n-y)^2,

and the maximal index is n-1-xi for xi the smallest root of g.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import XI_BRACKET_WIDEN, XI_MAX_ITER, XI_TOL
from .graph import Graph, are_isomorphic, complete_bipartite, make_graph


class DomainError(ValueError):
    pass


class BracketError(ArithmeticError):
    """The closed-form bounds failed to bracket a root of g."""


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    m: int
    d: int
    t: int
    r: int
    a: int
    b: int | None
    tie: bool
    d_choices: tuple[int, ...]

    @property
    def conjecture_fails(self) -> bool:
        """Whether (r+1)(n-r-1) - m > m - r(n-r), with m strictly between the two products."""
        return self.b is not None and self.a > 0 and self.b > self.a


@dataclass(frozen=True)
class CubicSolution:
    n: int
    t: int
    xi: float
    xi_lo: float
    xi_hi: float
    rho: float


@dataclass(frozen=True)
class HnmVariant:
    """One labeled H_{n,m} together with how it was built.

    Switching ``graph`` on ``part`` leaves exactly the star with the given
    ``center`` and ``leaves`` (no star at all when t = 0).
    """

    graph: Graph
    d: int
    kind: str  # "bipartite", "remove" or "add"
    center: int | None
    leaves: tuple[int, ...]
    part: tuple[int, ...]


def _check_nm(n: int, m: int) -> None:
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    if m > n * n // 4:
        raise DomainError(f"m exceeds floor(n^2/4): m={m} > {n * n // 4} for n={n}")


def extremal_params(n: int, m: int) -> ExtremalParams:
    _check_nm(n, m)
    products = [j * (n - j) for j in range(n // 2 + 1)]
    dist = [abs(m - p) for p in products]
    t = min(dist)
    ds = tuple(j for j, x in enumerate(dist) if x == t)
    r = max(j for j, p in enumerate(products) if p <= m)
    a = m - products[r]
    b = (r + 1) * (n - r - 1) - m if m < (n // 2) * ((n + 1) // 2) else None
    return ExtremalParams(n=n, m=m, d=ds[0], t=t, r=r, a=a, b=b, tie=len(ds) > 1, d_choices=ds)


def hnm_variants(n: int, m: int) -> list[HnmVariant]:
    """Every star placement of H_{n,m}, one per isomorphism class.

    Parts of K_{d,n-d} are ``{0..d-1}`` and ``{d..n-1}``. A star sits with
    its centre on the first vertex of its part and its leaves on the first
    free vertices of the part that receives them. On a tie both values of
    d are tried.
    """
    p = extremal_params(n, m)
    t = p.t
    found: list[HnmVariant] = []
    for d in p.d_choices:
        first = tuple(range(d))
        second = tuple(range(d, n))
        host = complete_bipartite(d, n)
        if t == 0:
            found.append(HnmVariant(host, d, "bipartite", None, (), first))
            continue
        placements = []
        if m < d * (n - d):
            # centre on one side, leaves on the other
            if d >= 1 and len(second) >= t:
                placements.append((first[0], second[:t]))
            if len(second) >= 1 and d >= t:
                placements.append((second[0], first[:t]))
            kind = "remove"
        else:
            for side in (first, second):
                if len(side) >= t + 1:
                    placements.append((side[0], side[1 : t + 1]))
            kind = "add"
        for center, leaves in placements:
            star = make_graph(n, [(center, v) for v in leaves])
            bits = host.bits & ~star.bits if kind == "remove" else host.bits | star.bits
            found.append(HnmVariant(Graph(n, bits), d, kind, center, tuple(leaves), first))

    unique: list[HnmVariant] = []
    for v in found:
        if not any(are_isomorphic(v.graph, u.graph, max_order=None) for u in unique):
            unique.append(v)
    return unique


def construct_Hnm(n: int, m: int) -> list[Graph]:
    return [v.graph for v in hnm_variants(n, m)]


def quotient_matrix(n: int, t: int) -> np.ndarray:
    """Quotient of S(S_{n,t}) over the partition centre / leaves / isolated vertices."""
    if not 1 <= t <= n - 2:
        raise DomainError(f"star size t={t} must lie in [1, n-2={n - 2}]")
    return np.array(
        [
            [0, -t, n - t - 1],
            [-1, t - 1, n - t - 1],
            [1, t, n - t - 2],
        ],
        dtype=np.float64,
    )


def char_cubic(n: int, t: int) -> tuple[int, int, int, int]:
    """Coefficients of f, highest degree first."""
    return (1, 3 - n, 3 - 2 * n, -4 * t * t + 4 * n * t - 4 * t - n + 1)


def transformed_cubic(n: int, t: int, y: float) -> float:
    """g(y) = f(n-1-y) = 4t(n-1-t) - y(n-y)^2."""
    return 4 * t * (n - 1 - t) - y * (n - y) ** 2


def xi_bounds(n: int, t: int) -> tuple[float, float]:
    c = 4 * t * (n - 1 - t)
    return c / n**2, c / (n - 1) ** 2


def _bisect(fn: Callable[[float], float], lo: float, hi: float, tol: float, max_iter: int) -> float:
    """Root of ``fn`` in [lo, hi] given fn(lo) and fn(hi) of opposite sign or zero."""
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_star_size(n: int, t: int) -> None:
    if n < 2 or (n < 3 and t != 0):
        raise DomainError(f"need n >= 3 for a non-trivial star, got n={n}")
    if not 0 <= 2 * t <= n - 1:
        raise DomainError(f"star size t={t} must lie in [0, (n-1)/2] for n={n}")


def solve_xi(n: int, t: int, tol: float = XI_TOL) -> CubicSolution:
    """Smallest root of g, found by bisection inside the closed-form bounds."""
    _check_star_size(n, t)
    if t == 0:
        return CubicSolution(n, 0, 0.0, 0.0, 0.0, float(n - 1))
    xi_lo, xi_hi = xi_bounds(n, t)
    lo = xi_lo * (1 - XI_BRACKET_WIDEN)
    hi = xi_hi * (1 + XI_BRACKET_WIDEN)

    def g(y):
        return transformed_cubic(n, t, y)

    # g is decreasing on [0, n/3] and the bounds satisfy g(lo) >= 0 >= g(hi)
    if g(xi_hi) == 0:
        xi = xi_hi
    elif g(xi_lo) == 0:
        xi = xi_lo
    elif g(lo) < -1e-9 or g(hi) > 1e-9:
        raise BracketError(f"g({lo})={g(lo)}, g({hi})={g(hi)} do not bracket a root for n={n}, t={t}")
    elif g(lo) <= 0:
        xi = lo
    elif g(hi) >= 0:
        xi = hi
    else:
        xi = _bisect(g, lo, hi, tol, XI_MAX_ITER)
        # one Newton step from the bisection midpoint, kept only if it stays in the last bracket
        slope = -(n - xi) * (n - 3 * xi)
        polished = xi - g(xi) / slope
        if abs(polished - xi) <= tol:
            xi = polished
    xi = min(max(xi, xi_lo), xi_hi)
    return CubicSolution(n, t, xi, xi_lo, xi_hi, n - 1 - xi)


def cubic_roots(n: int, t: int, tol: float = XI_TOL) -> tuple[float, float, float]:
    """The three real roots of f, descending, located by bisection on g.

    g falls on [0, n/3], rises on [n/3, n] and falls again beyond n, with
    g(0) = g(n) >= 0 and g(2n) < 0, so each stretch holds one root.
    """
    if n < 3 or not 0 <= t <= n - 1:
        raise DomainError(f"need n >= 3 and 0 <= t <= n-1, got n={n}, t={t}")

    def g(y):
        return transformed_cubic(n, t, y)

    ys = (
        _bisect(g, 0.0, n / 3, tol, XI_MAX_ITER),
        _bisect(g, n / 3, float(n), tol, XI_MAX_ITER),
        _bisect(g, float(n), 2.0 * n, tol, XI_MAX_ITER),
    )
    return tuple(n - 1 - y for y in ys)


def max_index(n: int, m: int) -> CubicSolution:
    return solve_xi(n, extremal_params(n, m).t)
