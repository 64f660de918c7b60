"""Periodic grids and FFT derivatives: machine-precision accuracy on resolved modes.

Builds a few grids (even and odd point counts), differentiates plane waves and
a Gaussian, and compares the FFT path against the dense differentiation matrix.
"""

import numpy as np

from curvedirac import SpinorField, dense_diff_matrix, make_grid, spectral_derivative

g = make_grid(1, np.pi, 64)
x = g.axes[0]
print(f"grid: a = pi, N = 64, h = {g.h[0]:.6f}")

print("\nplane-wave derivative errors (exact multiplier i*p):")
for p in (1, 5, 17, 31):
    v = np.zeros((2, 64), dtype=complex)
    v[0] = np.exp(1j * p * x)
    df = spectral_derivative(SpinorField(v, g), 0, 1)
    err = np.max(np.abs(df.values[0] - 1j * p * v[0]))
    print(f"  p = {p:3d}   max error = {err:.3e}")

print("\nGaussian second derivative vs analytic (a = 6 so the tails vanish):")
g6 = make_grid(1, 6.0, 96)
x6 = g6.axes[0]
v = np.zeros((2, 96), dtype=complex)
v[0] = np.exp(-x6 ** 2)
d2 = spectral_derivative(SpinorField(v, g6), 0, 2)
exact = (4 * x6 ** 2 - 2) * np.exp(-x6 ** 2)
print(f"  max error = {np.max(np.abs(d2.values[0] - exact)):.3e}")

print("\ndense differentiation matrix (matches the FFT path, exactly anti-Hermitian):")
for N in (16, 17):
    A = dense_diff_matrix(N, 5.0)
    print(f"  N = {N:2d}: max|A + A^H| = {np.max(np.abs(A + A.conj().T)):.3e}")

godd = make_grid(1, 5.0, 9)
print(f"\nodd N = 9 wavenumber set (symmetric): {np.sort(godd.freqs[0] * 5 / np.pi).astype(int)}")
