"""Shared oracles for the test suite.

These helpers are deliberately independent of the solver code paths they
check: brute-force mode sums, dense linear algebra, analytic dispersion.
"""

import numpy as np
import pytest

from curvedirac.grid_spectral import SpinorField
from curvedirac.spinor_algebra import alpha_matrix, beta_matrix


def flat_exact_evolution(f: SpinorField, mass: float, t: float) -> SpinorField:
    """Exact flat-space evolution by per-mode diagonalization of alpha.xi + beta m.

    Works in any dimension; complexity O(S^3 N), independent of the split
    propagators under test.
    """
    grid = f.grid
    S = f.spinor_dim
    vhat = np.fft.fftn(f.values, axes=tuple(range(1, 1 + grid.d)))
    flat = vhat.reshape(S, -1)
    mesh = np.meshgrid(*grid.freqs, indexing="ij") if grid.d > 1 else [grid.freqs[0]]
    xis = [m.ravel() for m in mesh]
    beta = beta_matrix(S)
    out = np.empty_like(flat)
    for idx in range(flat.shape[1]):
        H = beta * mass
        for i, xi in enumerate(xis):
            H = H + alpha_matrix(i + 1, S) * xi[idx]
        w, V = np.linalg.eigh(H)
        out[:, idx] = (V * np.exp(-1j * w * t)) @ (V.conj().T @ flat[:, idx])
    out = out.reshape(vhat.shape)
    return SpinorField(np.fft.ifftn(out, axes=tuple(range(1, 1 + grid.d))), grid)


def loglog_slope(params, errors) -> float:
    return float(np.polyfit(np.log(params), np.log(errors), 1)[0])


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
