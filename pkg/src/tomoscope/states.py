"""Initial-state constructors: coherent, m-photon-added coherent, even/odd cat.

All coefficients are built by stable ratio recurrences (no raw factorials),
and every constructor returns a normalized FockVector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PrecisionError
from .fock import DEFAULT_POLICY, FockVector, truncation_dim

TWO_PI = 2.0 * math.pi

DEFAULT_DELTA = math.pi / 4  # phase of alpha used throughout the scenarios


@dataclass(frozen=True)
class CoherentParams:
    """|alpha|^2 and the phase delta of alpha = sqrt(|alpha|^2) e^(i delta)."""

    mean_photon: float
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        if not math.isfinite(self.mean_photon) or self.mean_photon < 0:
            raise ValueError(f"mean_photon must be >= 0, got {self.mean_photon}")
        object.__setattr__(self, "delta", self.delta % TWO_PI)

    @property
    def alpha(self) -> complex:
        return math.sqrt(self.mean_photon) * complex(math.cos(self.delta), math.sin(self.delta))


@dataclass(frozen=True)
class PhotonAddedParams:
    base: CoherentParams
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"photon-addition count m must be >= 0, got {self.m}")


@dataclass(frozen=True)
class CatParams:
    base: CoherentParams
    h: int  # 0 = even, 1 = odd

    def __post_init__(self):
        if self.h not in (0, 1):
            raise ValueError(f"parity flag h must be 0 or 1, got {self.h}")


def _require_dim(dim: int, needed: int, what: str) -> None:
    if dim < needed:
        raise PrecisionError(
            f"{what}: dim={dim} below truncation requirement {needed}"
        )


def _coherent_coeffs(alpha: complex, dim: int) -> np.ndarray:
    """e^(-|alpha|^2/2) alpha^n / sqrt(n!) via C_n = C_{n-1} alpha / sqrt(n)."""
    c = np.empty(dim, dtype=np.complex128)
    c[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(1, dim):
        c[n] = c[n - 1] * alpha / math.sqrt(n)
    return c


def laguerre_neg(m: int, x: float) -> float:
    """L_m(-x) for x >= 0 via the all-positive series sum_k C(m,k) x^k / k!."""
    if m < 0:
        raise ValueError(f"Laguerre order must be >= 0, got {m}")
    if x < 0:
        raise ValueError(f"argument must be >= 0, got {x}")
    total = 1.0
    term = 1.0
    for k in range(m):
        term *= x * (m - k) / ((k + 1.0) ** 2)
        total += term
    return total


def _photon_added_coeffs(alpha: complex, m: int, dim: int) -> np.ndarray:
    """Coefficients of the normalized (a^dag)^m |alpha> state.

    C_m = e^(-|alpha|^2/2) / sqrt(L_m(-|alpha|^2)), then
    C_{n+1} = C_n alpha sqrt(n+1) / (n+1-m).
    """
    c = np.zeros(dim, dtype=np.complex128)
    c[m] = math.exp(-0.5 * abs(alpha) ** 2) / math.sqrt(laguerre_neg(m, abs(alpha) ** 2))
    for n in range(m, dim - 1):
        c[n + 1] = c[n] * alpha * math.sqrt(n + 1.0) / (n + 1.0 - m)
    return c


def coherent_state(p: CoherentParams, dim: int | None = None) -> FockVector:
    """Coherent state |alpha> on a truncated basis of the given dimension."""
    needed = truncation_dim(p.mean_photon, DEFAULT_POLICY)
    if dim is None:
        dim = needed
    _require_dim(dim, needed, "coherent_state")
    return FockVector(_coherent_coeffs(p.alpha, dim))


def photon_added_state(p: PhotonAddedParams, dim: int | None = None) -> FockVector:
    """m-photon-added coherent state, zero below Fock level m."""
    needed = truncation_dim(p.base.mean_photon, DEFAULT_POLICY) + p.m
    if dim is None:
        dim = needed
    _require_dim(dim, needed, "photon_added_state")
    return FockVector(_photon_added_coeffs(p.base.alpha, p.m, dim))


def cat_normalization(mean_photon: float, h: int) -> float:
    """N_h = [2 (1 + (-1)^h e^(-2|alpha|^2))]^(-1/2)."""
    inner = 2.0 * (1.0 + (-1.0) ** h * math.exp(-2.0 * mean_photon))
    if inner <= 0.0:
        raise ValueError("odd cat state of the vacuum is the zero vector")
    return inner**-0.5


def cat_state(p: CatParams, dim: int | None = None) -> FockVector:
    """Even (h=0) or odd (h=1) coherent state.

    Coefficients 2 N_h e^(-|alpha|^2/2) alpha^n / sqrt(n!) on levels with
    n = h (mod 2), exactly zero elsewhere; renormalized numerically to
    absorb the truncation tail.
    """
    mu = p.base.mean_photon
    if p.h == 1 and mu == 0.0:
        raise ValueError("odd cat state of the vacuum is the zero vector")
    needed = truncation_dim(mu, DEFAULT_POLICY)
    if dim is None:
        dim = needed
    _require_dim(dim, needed, "cat_state")
    c = _coherent_coeffs(p.base.alpha, dim)
    n = np.arange(dim)
    c[(n - p.h) % 2 != 0] = 0.0
    c *= 2.0 * cat_normalization(mu, p.h)
    c /= math.sqrt(float(np.real(np.vdot(c, c))))
    return FockVector(c)


def mean_photon_number(v: FockVector) -> float:
    """<N> = sum_n n |C_n|^2."""
    n = np.arange(v.dim)
    return float(np.sum(n * (v.coeffs.real**2 + v.coeffs.imag**2)))
