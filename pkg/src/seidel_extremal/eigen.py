"""Cyclic Jacobi eigensolver for dense real symmetric matrices.

The rotations are vectorised over a leading batch axis so that a stack of
small matrices (the exhaustive scan feeds hundreds of thousands of 7x7
Seidel matrices) costs one numpy pass per pivot pair rather than one Python
loop per matrix. A single matrix is simply a batch of one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import EIGEN_CLUSTER_TOL, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL


class ConvergenceError(ArithmeticError):
    def __init__(self, off_norm: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")
        self.off_norm = off_norm
        self.sweeps = sweeps


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending with matching orthonormal eigenvectors.

    ``eigenvectors[:, k]`` belongs to ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def index(self) -> float:
        return float(self.eigenvalues[0])

    def multiplicities(self, tol: float = EIGEN_CLUSTER_TOL) -> list[tuple[float, int]]:
        return cluster_eigenvalues(self.eigenvalues, tol)


def as_symmetric(a, tol: float = 0.0) -> np.ndarray:
    m = np.array(a, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.T)) > tol:
        raise ValueError("matrix is not symmetric")
    return m


def _off_norm(a: np.ndarray, iu) -> np.ndarray:
    # summed directly; total minus diagonal cancels catastrophically
    upper = a[iu[0], iu[1], :]
    return np.sqrt(2.0 * np.einsum("kb,kb->b", upper, upper))


def jacobi_batch(
    a: np.ndarray,
    vectors: bool = True,
    rel_tol: float = JACOBI_REL_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
):
    """Diagonalise a stack ``a`` of shape ``(B, n, n)``.

    Returns ``(w, v)`` with ``w`` of shape ``(B, n)`` sorted descending and,
    if requested, ``v`` of shape ``(B, n, n)`` holding eigenvectors as
    columns (``None`` otherwise). A matrix counts as converged once its
    off-diagonal Frobenius norm is at most ``rel_tol * (||a||_F + 1)``.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected shape (B, n, n), got {a.shape}")
    # batch axis last: every row and column slice below is a contiguous block
    A = np.moveaxis(a, 0, -1).copy(order="C")
    n, _, B = A.shape
    V = np.broadcast_to(np.eye(n)[:, :, None], (n, n, B)).copy(order="C") if vectors else None
    iu = np.triu_indices(n, 1)
    pairs = list(zip(iu[0].tolist(), iu[1].tolist()))
    target = rel_tol * (np.sqrt(np.einsum("ijb,ijb->b", A, A)) + 1.0)

    off = _off_norm(A, iu)
    sweep = 0
    while True:
        active = np.flatnonzero(off > target)
        if active.size == 0:
            break
        if sweep >= max_sweeps:
            raise ConvergenceError(float(off[active].max()), sweep)
        full = active.size == B
        sub = A if full else np.ascontiguousarray(A[:, :, active])
        vsub = None
        if vectors:
            vsub = V if full else np.ascontiguousarray(V[:, :, active])
        # threshold sweeping: skip small pivots during the first sweeps
        if sweep < 3:
            mag = np.abs(sub).sum(axis=(0, 1)) - np.abs(np.einsum("iib->ib", sub)).sum(axis=0)
            thresh = 0.1 * mag / (n * n)
        else:
            thresh = np.zeros(active.size)
        for p, q in pairs:
            apq = sub[p, q]
            rot = np.abs(apq) > thresh
            if not rot.any():
                continue
            with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
                theta = (sub[q, q] - sub[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            # an infinite theta means a negligible pivot: t -> 0 is the correct limit
            t = np.where(rot & np.isfinite(t), t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            rp = sub[p].copy()
            rq = sub[q]
            sub[p] = c * rp - s * rq
            sub[q] = s * rp + c * rq
            cp = sub[:, p].copy()
            cq = sub[:, q]
            sub[:, p] = c * cp - s * cq
            sub[:, q] = s * cp + c * cq
            sub[p, q, rot] = 0.0
            sub[q, p, rot] = 0.0
            if vectors:
                vp = vsub[:, p].copy()
                vq = vsub[:, q]
                vsub[:, p] = c * vp - s * vq
                vsub[:, q] = s * vp + c * vq
        if not full:
            A[:, :, active] = sub
            if vectors:
                V[:, :, active] = vsub
        off[active] = _off_norm(sub, iu)
        sweep += 1

    w = np.einsum("iib->bi", A)
    order = np.argsort(-w, axis=1, kind="stable")
    w = np.take_along_axis(w, order, axis=1)
    if vectors:
        V = np.take_along_axis(np.moveaxis(V, -1, 0), order[:, None, :], axis=2)
    return w, V


def eigen_decompose(m) -> Spectrum:
    a = as_symmetric(m)
    w, v = jacobi_batch(a[None])
    return Spectrum(w[0], v[0])


def eigenvalues(m) -> np.ndarray:
    a = as_symmetric(m)
    w, _ = jacobi_batch(a[None], vectors=False)
    return w[0]


def cluster_eigenvalues(values, tol: float = EIGEN_CLUSTER_TOL) -> list[tuple[float, int]]:
    """Group a descending list into ``(mean, multiplicity)`` runs of gaps below ``tol``."""
    out: list[list[float]] = []
    for x in values:
        if out and abs(out[-1][-1] - x) < tol:
            out[-1].append(float(x))
        else:
            out.append([float(x)])
    return [(sum(c) / len(c), len(c)) for c in out]
