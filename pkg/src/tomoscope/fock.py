"""Truncated Fock-space primitives.

State vectors and density matrices over Fock levels 0..n_max, the Poisson
tail rule that picks n_max, and numerically stable evaluation of the
quadrature wavefunctions <X_theta, theta|n>.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import InitVar, dataclass

import numpy as np

from . import backend
from .errors import CapacityError

NORM_TOL = 1e-12  # truncation tail bound on state norms
TRACE_TOL = 1e-10
HERM_TOL = 1e-12


@dataclass(frozen=True)
class TruncationPolicy:
    """Poisson tail bound plus a hard cap on the basis dimension."""

    tail_bound: float = 1e-12
    hard_cap: int = 512

    def __post_init__(self):
        if not 0.0 < self.tail_bound < 1.0:
            raise ValueError(f"tail_bound must be in (0, 1), got {self.tail_bound}")
        if self.hard_cap < 1:
            raise ValueError(f"hard_cap must be >= 1, got {self.hard_cap}")


DEFAULT_POLICY = TruncationPolicy()

_TAIL_MARGIN = 10  # extra levels beyond the Poisson tail cutoff


def truncation_dim(mean_photon: float, policy: TruncationPolicy = DEFAULT_POLICY) -> int:
    """Basis dimension for a state with Poisson-enveloped photon statistics.

    Smallest N with the Poisson(mean_photon) tail beyond N below
    ``policy.tail_bound``, plus a margin of 10 levels.  Photon-added states
    need ``truncation_dim(|alpha|^2) + m`` (the caller adds m).
    """
    if not math.isfinite(mean_photon) or mean_photon < 0:
        raise ValueError(f"mean_photon must be finite and >= 0, got {mean_photon}")
    limit = policy.hard_cap - _TAIL_MARGIN
    pmf = math.exp(-mean_photon)
    cdf = pmf
    n = 0
    while 1.0 - cdf >= policy.tail_bound:
        n += 1
        if n > limit:
            raise CapacityError(
                f"mean_photon={mean_photon} needs more than "
                f"{policy.hard_cap} Fock levels (hard cap)"
            )
        pmf *= mean_photon / n
        cdf += pmf
    return n + _TAIL_MARGIN


@dataclass(frozen=True)
class FockVector:
    """Pure state: complex amplitudes C_n, n = 0..n_max, with unit norm."""

    coeffs: np.ndarray
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        coeffs = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d array")
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)
        if validate:
            nrm = self.norm_squared()
            if not 1.0 - NORM_TOL <= nrm <= 1.0 + NORM_TOL:
                raise ValueError(
                    f"state norm^2 = {nrm!r} outside [1 - {NORM_TOL}, 1 + {NORM_TOL}]"
                )

    @property
    def n_max(self) -> int:
        return self.coeffs.size - 1

    @property
    def dim(self) -> int:
        return self.coeffs.size

    def norm_squared(self) -> float:
        c = self.coeffs
        return float(np.real(np.vdot(c, c)))


@dataclass(frozen=True)
class DensityMatrix:
    """Mixed state: Hermitian matrix rho_{n,n'} with unit trace."""

    elems: np.ndarray
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        elems = np.ascontiguousarray(self.elems, dtype=np.complex128)
        if elems.ndim != 2 or elems.shape[0] != elems.shape[1] or elems.size == 0:
            raise ValueError("elems must be a non-empty square matrix")
        elems.flags.writeable = False
        object.__setattr__(self, "elems", elems)
        if validate:
            herm = hermiticity_residual(self)
            if herm > HERM_TOL:
                raise ValueError(f"hermiticity residual {herm:.3e} > {HERM_TOL}")
            diag = elems.diagonal()
            if np.max(np.abs(diag.imag)) > HERM_TOL:
                raise ValueError("diagonal entries must be real")
            if np.min(diag.real) < -HERM_TOL:
                raise ValueError("diagonal entries must be >= 0")
            tr = float(diag.real.sum())
            if abs(tr - 1.0) > TRACE_TOL:
                raise ValueError(f"trace = {tr!r} outside [1 - {TRACE_TOL}, 1 + {TRACE_TOL}]")

    @property
    def n_max(self) -> int:
        return self.elems.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.elems.shape[0]


def quadrature_wavefunction(n: int, x: float, theta: float) -> complex:
    """<X_theta, theta|n> at a single quadrature point.

    Evaluated with the normalized oscillator-function recurrence
    u_0 = pi^(-1/4) e^(-x^2/2), u_1 = sqrt(2) x u_0,
    u_n = sqrt(2/n) x u_{n-1} - sqrt((n-1)/n) u_{n-2},
    then multiplied by e^(-i n theta).  Never uses raw Hermite polynomials
    or factorials, which overflow near n ~ 150.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    u_prev = math.pi**-0.25 * math.exp(-0.5 * x * x)
    if n == 0:
        return complex(u_prev)
    u = math.sqrt(2.0) * x * u_prev
    for k in range(2, n + 1):
        u, u_prev = math.sqrt(2.0 / k) * x * u - math.sqrt((k - 1.0) / k) * u_prev, u
    return u * cmath.exp(-1j * n * theta)


def oscillator_table(xs: np.ndarray, n_max: int) -> np.ndarray:
    """u_n(x) for n = 0..n_max over a grid; shape (n_max + 1, len(xs))."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return backend.oscillator_table(np.asarray(xs, dtype=np.float64), n_max)


def outer_product(v: FockVector) -> DensityMatrix:
    """|v><v| as a DensityMatrix."""
    c = v.coeffs
    return DensityMatrix(np.outer(c, c.conj()))


def trace(rho: DensityMatrix) -> float:
    return float(rho.elems.diagonal().real.sum())


def hermiticity_residual(rho: DensityMatrix | np.ndarray) -> float:
    """max element-wise |rho - rho^dagger|."""
    m = rho.elems if isinstance(rho, DensityMatrix) else np.asarray(rho)
    return float(np.max(np.abs(m - m.conj().T)))


def inner(v: FockVector, w: FockVector) -> complex:
    """<v|w> on the common truncated basis (shorter vector zero-padded)."""
    a, b = v.coeffs, w.coeffs
    k = min(a.size, b.size)
    return complex(np.vdot(a[:k], b[:k]))


def fidelity(v: FockVector, w: FockVector) -> float:
    """|<v|w>|^2."""
    return abs(inner(v, w)) ** 2
