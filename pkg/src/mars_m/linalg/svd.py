"""One-sided Jacobi SVD, the exact-decomposition oracle for the rest of the library."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from mars_m.exceptions import ConvergenceError
from mars_m.linalg.matrix import Mat, as_mat

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 60

# Column pairs whose norm product is below this are treated as involving a zero column.
_TINY = float(np.finfo(np.float64).tiny)
_ZERO_COLUMN = float(np.sqrt(_TINY))


@dataclass(frozen=True, slots=True)
class SvdResult:
    """Reduced SVD A = U diag(S) V^T with r = min(m, n).

    U is m x r, V is n x r, both with orthonormal columns; S is non-increasing.
    """

    U: Mat
    S: npt.NDArray[np.float64]
    V: Mat

    def reconstruct(self) -> Mat:
        return (self.U * self.S) @ self.V.T


@lru_cache(maxsize=64)
def _round_robin(n: int) -> tuple[tuple[npt.NDArray[np.intp], npt.NDArray[np.intp]], ...]:
    """Tournament ordering: n-1 rounds (n even) of disjoint column pairs."""
    idx = list(range(n)) + ([-1] if n % 2 else [])
    k = len(idx)
    rounds = []
    for _ in range(k - 1):
        pairs = [
            (min(idx[i], idx[k - 1 - i]), max(idx[i], idx[k - 1 - i]))
            for i in range(k // 2)
            if idx[i] >= 0 and idx[k - 1 - i] >= 0
        ]
        if pairs:
            p, q = zip(*pairs)
            rounds.append((np.array(p, dtype=np.intp), np.array(q, dtype=np.intp)))
        idx = [idx[0], idx[-1], *idx[1:-1]]
    return tuple(rounds)


def _orthogonalize_columns(
    work: Mat, tol: float, max_sweeps: int
) -> tuple[Mat, Mat]:
    """Rotate the columns of a tall ``work`` until they are mutually orthogonal.

    Returns the rotated columns and the accumulated right rotation V.
    """
    n = work.shape[1]
    v = np.eye(n)
    rounds = _round_robin(n)
    off = 0.0
    for _ in range(max_sweeps):
        off = 0.0
        for p_all, q_all in rounds:
            up = work[:, p_all]
            uq = work[:, q_all]
            alpha = np.einsum("ij,ij->j", up, up)
            beta = np.einsum("ij,ij->j", uq, uq)
            gamma = np.einsum("ij,ij->j", up, uq)
            scale = np.sqrt(alpha * beta)
            live = scale > _TINY
            ratio = np.zeros_like(gamma)
            ratio[live] = np.abs(gamma[live]) / scale[live]
            if ratio.size:
                off = max(off, float(ratio.max()))
            rotate = live & (ratio > tol)
            if not rotate.any():
                continue

            p, q = p_all[rotate], q_all[rotate]
            zeta = (beta[rotate] - alpha[rotate]) / (2.0 * gamma[rotate])
            t = np.where(zeta >= 0.0, 1.0, -1.0) / (np.abs(zeta) + np.hypot(1.0, zeta))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = c * t

            wp, wq = work[:, p], work[:, q]
            work[:, p] = c * wp - s * wq
            work[:, q] = s * wp + c * wq
            vp, vq = v[:, p], v[:, q]
            v[:, p] = c * vp - s * vq
            v[:, q] = s * vp + c * vq
        if off <= tol:
            return work, v
    raise ConvergenceError(
        f"Jacobi SVD did not converge in {max_sweeps} sweeps "
        f"(off-diagonal {off:.3e} > tol {tol:.3e}); input may be ill-conditioned",
        sweeps=max_sweeps,
        off_diagonal=off,
    )


def _complete_basis(u: Mat, filled: npt.NDArray[np.bool_]) -> None:
    """Fill the columns of ``u`` not marked ``filled`` with an orthonormal completion."""
    m = u.shape[0]
    for k in np.flatnonzero(~filled):
        q = u[:, filled]
        resid = np.eye(m) - q @ q.T
        j = int(np.argmax(np.einsum("ij,ij->j", resid, resid)))
        col = resid[:, j]
        col = col - q @ (q.T @ col)
        u[:, k] = col / np.linalg.norm(col)
        filled[k] = True


def _canonical_signs(u: Mat, v: Mat) -> None:
    """Make the largest-magnitude entry of every U column positive."""
    rows = np.argmax(np.abs(u), axis=0)
    signs = np.where(u[rows, np.arange(u.shape[1])] < 0.0, -1.0, 1.0)
    u *= signs
    v *= signs


def _tall_svd(a: Mat, tol: float, max_sweeps: int) -> tuple[Mat, npt.NDArray[np.float64], Mat]:
    work, v = _orthogonalize_columns(a.copy(), tol, max_sweeps)
    s = np.linalg.norm(work, axis=0)
    order = np.argsort(-s, kind="stable")
    work, v, s = work[:, order], v[:, order], s[order]

    filled = s > _ZERO_COLUMN
    u = np.zeros_like(work)
    u[:, filled] = work[:, filled] / s[filled]
    s = np.where(filled, s, 0.0)
    _complete_basis(u, filled)
    return u, s, v


def jacobi_svd(
    a: Mat,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> SvdResult:
    """Reduced singular value decomposition by one-sided Jacobi rotations.

    Columns of the (transposed, if wide) input are rotated pairwise in a
    round-robin order until every pair has normalized inner product at most
    ``tol``. Deterministic for identical inputs.

    Args:
        a: Input matrix.
        tol: Convergence threshold on the off-diagonal mass, measured as the
            largest |<a_p, a_q>| / (||a_p|| ||a_q||) seen in a sweep.
        max_sweeps: Sweep cap before giving up.

    Raises:
        ConvergenceError: if the cap is reached.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    a = as_mat(a)
    m, n = a.shape
    if m >= n:
        u, s, v = _tall_svd(a, tol, max_sweeps)
    else:
        v, s, u = _tall_svd(a.T, tol, max_sweeps)
    _canonical_signs(u, v)
    return SvdResult(U=u, S=s, V=v)


def spectral_norm(a: Mat) -> float:
    """Largest singular value."""
    return float(jacobi_svd(a).S[0])


def nuclear_norm(a: Mat) -> float:
    """Sum of singular values."""
    return float(np.sum(jacobi_svd(a).S))
