"""Exact characteristic polynomials and exact comparison of largest roots.

The exhaustive scan ranks graphs by floating-point eigenvalues. Graphs
whose index lands near the top are re-ranked here without rounding:
det(xI - S) comes from Faddeev-LeVerrier over Python integers, and two
largest roots are compared by Sturm-sequence root isolation over
rationals. Polynomials are coefficient tuples, highest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

Poly = tuple  # of int or Fraction, highest degree first


def charpoly(a) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - A) of an integer matrix."""
    A = np.asarray(a)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("charpoly needs a square matrix")
    if not np.all(A == np.round(A)):
        raise ValueError("charpoly needs integer entries")
    # int64 cannot overflow for |entries| <= 1 at this size; beyond it use exact ints
    dtype = np.int64 if n <= 10 and np.abs(A).max(initial=0) <= 1 else object
    A = A.astype(np.int64).astype(dtype)
    eye = np.eye(n, dtype=np.int64).astype(dtype)
    coeffs = [1]
    M = np.zeros((n, n), dtype=dtype)
    for k in range(1, n + 1):
        M = A @ M + coeffs[-1] * eye
        tr = int(np.trace(A @ M))
        if tr % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(-tr // k)
    return tuple(int(c) for c in coeffs)


# ---------------------------------------------------------------------------
# polynomial arithmetic over Q


def _trim(p) -> tuple:
    k = 0
    while k < len(p) - 1 and p[k] == 0:
        k += 1
    return tuple(p[k:])


def degree(p: Poly) -> int:
    p = _trim(p)
    return -1 if p == (0,) else len(p) - 1


def evaluate(p: Poly, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    d = len(p) - 1
    if d <= 0:
        return (0,)
    return _trim(tuple(c * (d - k) for k, c in enumerate(p[:-1])))


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p = [Fraction(c) for c in _trim(p)]
    q = [Fraction(c) for c in _trim(q)]
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return (Fraction(0),), tuple(p)
    quot = []
    rem = list(p)
    while len(rem) >= len(q):
        c = rem[0] / q[0]
        quot.append(c)
        for k in range(len(q)):
            rem[k] -= c * q[k]
        rem.pop(0)
    return _trim(tuple(quot)), _trim(tuple(rem) or (Fraction(0),))


def monic(p: Poly) -> Poly:
    p = _trim(p)
    lead = Fraction(p[0])
    return tuple(Fraction(c) / lead for c in p)


def gcd_poly(p: Poly, q: Poly) -> Poly:
    a, b = _trim(p), _trim(q)
    while degree(b) >= 0:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def squarefree(p: Poly) -> Poly:
    g = gcd_poly(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


# ---------------------------------------------------------------------------
# Sturm sequences


@lru_cache(maxsize=4096)
def sturm_chain(p: Poly) -> tuple[Poly, ...]:
    """Sturm sequence of the square-free part of ``p``."""
    p0 = squarefree(p)
    chain = [p0, derivative(p0)]
    while degree(chain[-1]) > 0:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if degree(r) < 0:
            break
        chain.append(tuple(-c for c in r))
    return tuple(chain)


def _variations(chain, x) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Poly, lo, hi) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    if degree(p) <= 0:
        return 0
    chain = sturm_chain(tuple(p))
    return _variations(chain, lo) - _variations(chain, hi)


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has absolute value below this."""
    p = _trim(p)
    lead = abs(Fraction(p[0]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[1:]), default=Fraction(0))


class LargestRoot:
    """Isolating interval (lo, hi] for the largest real root of ``p``.

    ``lo`` is never a root of ``p``; the interval holds exactly one root
    and nothing above ``hi`` is a root.
    """

    def __init__(self, p: Poly, hint: float | None = None):
        self.p = tuple(int(c) if isinstance(c, (int, np.integer)) else c for c in p)
        self.sqf = squarefree(self.p)
        top = root_bound(self.p)
        if count_roots(self.sqf, -top, top) == 0:
            raise ValueError("polynomial has no real roots")
        self.lo, self.hi = -top, top
        if hint is not None:
            eps = Fraction(1, 10**6)
            lo, hi = Fraction(hint) - eps, Fraction(hint) + eps
            if (
                evaluate(self.sqf, lo) != 0
                and count_roots(self.sqf, hi, top) == 0
                and count_roots(self.sqf, lo, hi) == 1
            ):
                self.lo, self.hi = lo, hi
                return
        while count_roots(self.sqf, self.lo, self.hi) > 1:
            self._halve()

    def _halve(self) -> None:
        mid = (self.lo + self.hi) / 2
        if count_roots(self.sqf, mid, self.hi) >= 1:
            # mid becomes the open end, so it must not be a root
            step = (self.hi - self.lo) / 8
            while evaluate(self.sqf, mid) == 0:
                mid -= step
                step /= 2
            self.lo = mid
        else:
            self.hi = mid

    def refine(self) -> None:
        self._halve()

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)


def compare_largest_roots(a: LargestRoot, b: LargestRoot, max_steps: int = 400) -> int:
    """Sign of (largest root of a) - (largest root of b), decided exactly."""
    common = gcd_poly(a.sqf, b.sqf)
    for _ in range(max_steps):
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        # each interval isolates its root, so a common root inside the overlap is both
        if degree(common) > 0 and count_roots(common, lo, hi) == 1:
            return 0
        if a.width >= b.width:
            a.refine()
        else:
            b.refine()
    raise ArithmeticError("root comparison did not separate within the step budget")
