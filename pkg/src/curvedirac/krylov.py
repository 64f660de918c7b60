"""Matrix-free restarted GMRES for the semi-implicit transport solve.

Works on arrays of any shape (the spinor-field tensor is treated as one flat
complex vector).  Modified Gram-Schmidt with a single re-orthogonalization
pass when orthogonality degrades, Givens rotations for the least-squares
update, warm starts supported through x0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import KrylovError


@dataclass(frozen=True)
class KrylovOptions:
    tol: float = 1e-10
    restart: int = 30
    maxit: int = 200


@dataclass
class KrylovReport:
    iterations: int
    residual: float          # final relative residual
    converged: bool


def _flat(v):
    return np.ascontiguousarray(v).ravel()


def gmres(apply, b, x0=None, tol=1e-10, restart=30, maxit=200):
    """Solve apply(x) = b to relative residual `tol`.

    Parameters
    ----------
    apply : callable
        Linear operator mapping arrays shaped like b to arrays shaped like b.
    b : ndarray
        Right-hand side (any shape, complex).
    x0 : ndarray, optional
        Warm start; defaults to zero.

    Returns
    -------
    (x, KrylovReport)
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    b = np.asarray(b, dtype=np.complex128)
    shape = b.shape
    bnorm = np.linalg.norm(b)
    if bnorm == 0.0:
        return np.zeros(shape, dtype=np.complex128), KrylovReport(0, 0.0, True)

    x = np.zeros(shape, dtype=np.complex128) if x0 is None else np.array(x0, dtype=np.complex128)
    total_iters = 0

    def matvec(v):
        # copy: apply() may hand back a view of its input (e.g. the identity)
        out = np.array(apply(v.reshape(shape)), dtype=np.complex128, copy=True)
        if not np.all(np.isfinite(out)):
            raise KrylovError("operator produced non-finite values")
        return out.ravel()

    resid = None
    while True:
        r = _flat(b) - matvec(_flat(x))
        beta = np.linalg.norm(r)
        resid = beta / bnorm
        if resid <= tol:
            return x.reshape(shape), KrylovReport(total_iters, float(resid), True)
        if total_iters >= maxit:
            return x.reshape(shape), KrylovReport(total_iters, float(resid), False)

        m = min(restart, maxit - total_iters)
        n = b.size
        Q = np.empty((m + 1, n), dtype=np.complex128)
        H = np.zeros((m + 1, m), dtype=np.complex128)
        cs = np.zeros(m, dtype=np.complex128)
        sn = np.zeros(m, dtype=np.complex128)
        g = np.zeros(m + 1, dtype=np.complex128)
        g[0] = beta
        Q[0] = r / beta

        k_used = 0
        for k in range(m):
            w = matvec(Q[k])
            wnorm0 = np.linalg.norm(w)
            # modified Gram-Schmidt
            for j in range(k + 1):
                hjk = np.vdot(Q[j], w)
                H[j, k] = hjk
                w -= hjk * Q[j]
            wnorm = np.linalg.norm(w)
            if wnorm < 1e-8 * wnorm0:
                # severe cancellation: one re-orthogonalization pass
                for j in range(k + 1):
                    corr = np.vdot(Q[j], w)
                    H[j, k] += corr
                    w -= corr * Q[j]
                wnorm = np.linalg.norm(w)
            H[k + 1, k] = wnorm
            total_iters += 1
            k_used = k + 1

            # apply previous Givens rotations to the new column
            for j in range(k):
                t = cs[j] * H[j, k] + sn[j] * H[j + 1, k]
                H[j + 1, k] = -np.conj(sn[j]) * H[j, k] + np.conj(cs[j]) * H[j + 1, k]
                H[j, k] = t
            # new rotation annihilating H[k+1, k]
            denom = np.sqrt(np.abs(H[k, k]) ** 2 + np.abs(H[k + 1, k]) ** 2)
            if denom == 0.0:
                cs[k], sn[k] = 1.0, 0.0
            else:
                cs[k] = np.conj(H[k, k]) / denom
                sn[k] = np.conj(H[k + 1, k]) / denom
            t = cs[k] * H[k, k] + sn[k] * H[k + 1, k]
            H[k, k] = t
            H[k + 1, k] = 0.0
            g[k + 1] = -np.conj(sn[k]) * g[k]
            g[k] = cs[k] * g[k]

            resid = np.abs(g[k + 1]) / bnorm
            if wnorm == 0.0 or resid <= tol or total_iters >= maxit:
                break
            Q[k + 1] = w / wnorm

        # assemble the correction from the k_used-dimensional Krylov space
        try:
            y = np.linalg.solve(H[:k_used, :k_used], g[:k_used])
        except np.linalg.LinAlgError:
            # exact breakdown left a singular block; the outer loop re-checks
            # the true residual, so the least-squares correction stays honest
            y = np.linalg.lstsq(H[:k_used, :k_used], g[:k_used], rcond=None)[0]
        x = x + (y @ Q[:k_used]).reshape(shape)

        if resid <= tol:
            # recompute true residual on return path of the outer loop
            continue
        if total_iters >= maxit:
            r = _flat(b) - matvec(_flat(x))
            resid = np.linalg.norm(r) / bnorm
            return x.reshape(shape), KrylovReport(total_iters, float(resid), resid <= tol)
