"""NumPy implementations of the grid-evaluation kernels.

This is the fallback used when the compiled extension (``tomoscope._core``)
is unavailable; both expose the same three functions with identical
semantics.  The ``threads`` argument is accepted for interface parity and
ignored here (BLAS may still thread internally, which does not affect the
per-element summation order).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def oscillator_table(xs: np.ndarray, n_max: int) -> np.ndarray:
    """Normalized oscillator functions u_n(x) for n = 0..n_max on a grid.

    u_n(x) = pi^(-1/4) 2^(-n/2) (n!)^(-1/2) exp(-x^2/2) H_n(x), evaluated by
    the stable three-term recurrence (values stay O(1) for all n).
    Returns an array of shape (n_max + 1, len(xs)).
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    u = np.empty((n_max + 1, xs.size), dtype=np.float64)
    u[0] = np.pi ** -0.25 * np.exp(-0.5 * xs * xs)
    if n_max >= 1:
        u[1] = np.sqrt(2.0) * xs * u[0]
    for n in range(2, n_max + 1):
        u[n] = np.sqrt(2.0 / n) * xs * u[n - 1] - np.sqrt((n - 1.0) / n) * u[n - 2]
    return u


def pure_grid(
    coeffs: np.ndarray, thetas: np.ndarray, table: np.ndarray, threads: int = 0
) -> np.ndarray:
    """|sum_n c_n e^(-i n theta) u_n(x)|^2 on the (theta, x) lattice.

    ``coeffs`` must already carry any evolution phases.  ``table`` is the
    oscillator_table for the same n range.  Returns shape (T, M).
    """
    coeffs = np.ascontiguousarray(coeffs, dtype=np.complex128)
    n = np.arange(coeffs.size, dtype=np.float64)
    phased = np.exp(-1j * np.outer(thetas, n)) * coeffs
    amp = phased @ table
    return amp.real**2 + amp.imag**2


def mixed_grid(
    rho: np.ndarray, thetas: np.ndarray, table: np.ndarray, threads: int = 0
) -> np.ndarray:
    """sum_{n,n'} rho_{n,n'} u_n(x) u_{n'}(x) e^(-i(n-n')theta), real part.

    Collapses the double sum onto diagonals delta = n - n' (Hermitian rho
    makes the delta < 0 half the conjugate of the delta > 0 half), so the
    cost is O(N^2 M + N M T) instead of O(N^2 M T).
    """
    rho = np.ascontiguousarray(rho, dtype=np.complex128)
    dim = rho.shape[0]
    g = np.zeros((dim, table.shape[1]), dtype=np.complex128)
    for delta in range(dim):
        d = np.diagonal(rho, offset=-delta)  # rho[n + delta, n]
        k = d.size
        g[delta] = np.einsum("n,nx,nx->x", d, table[delta : delta + k], table[:k])
    g[1:] *= 2.0
    phases = np.exp(-1j * np.outer(thetas, np.arange(dim, dtype=np.float64)))
    return (phases @ g).real
