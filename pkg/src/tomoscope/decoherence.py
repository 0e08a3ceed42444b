"""Amplitude-decay and phase-damping channels in the Fock basis.

Both channels act on states prepared at some Kerr evolution time t; the
Kerr phases are frozen into the density matrix and only the dimensionless
scaled time (gamma*tau or kappa*tau) advances.  Generic channels transform
stored matrices; the *_closed variants build the decohered matrix elements
directly from the analytic formulas for each initial-state family and are
the independent cross-check route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .fock import DEFAULT_POLICY, DensityMatrix, oscillator_table, truncation_dim
from .kerr import KerrParams, kerr_phase_angles
from .states import cat_normalization, laguerre_neg
from .tomography import QuadratureGrid, TomogramGrid

FAMILIES = ("coherent", "photon_added", "cat")

_REL_CUTOFF = 1e-16  # r-sum term/partial-sum ratio that counts as converged
_CUTOFF_STREAK = 5


@dataclass(frozen=True)
class ChannelParams:
    """kind 'amplitude' or 'phase'; scaled_time is gamma*tau or kappa*tau."""

    kind: str
    scaled_time: float

    def __post_init__(self):
        if self.kind not in ("amplitude", "phase"):
            raise ValueError(f"kind must be 'amplitude' or 'phase', got {self.kind!r}")
        if not self.scaled_time >= 0.0:  # rejects NaN too; +inf = long-time limit
            raise ValueError(f"scaled_time must be >= 0, got {self.scaled_time}")


def _check_scaled_time(value: float, name: str) -> None:
    if not (value >= 0.0 and math.isfinite(value)):
        raise ValueError(f"{name} must be finite and >= 0, got {value}")


def amplitude_decay(rho0: DensityMatrix, gt: float) -> DensityMatrix:
    """Zero-temperature photon loss for scaled time gamma*tau.

    rho_{n,n'}(tau) = e^(-gt (n+n')) sum_r [C(n+r,r) C(n'+r,r)]^(1/2)
                      (1 - e^(-2 gt))^r rho_{n+r,n'+r}(0),
    truncated where n + r leaves the stored basis.  Each r term factorizes
    into an outer product w_r w_r^T against the shifted matrix, with
    w_r[n] = e^(-gt n) C(n+r,r)^(1/2) (1-e^(-2gt))^(r/2) computed in log
    space (binomials overflow doubles near C(300,150)).
    """
    _check_scaled_time(gt, "gamma*tau")
    if gt == 0.0:
        return DensityMatrix(rho0.elems.copy())
    dim = rho0.dim
    src = rho0.elems
    n = np.arange(dim, dtype=np.float64)
    log_eta = math.log(-math.expm1(-2.0 * gt))  # log(1 - e^(-2 gt))
    out = np.zeros((dim, dim), dtype=np.complex128)
    for r in range(dim):
        log_w = (
            -gt * n
            + 0.5 * (gammaln(n + r + 1.0) - gammaln(r + 1.0) - gammaln(n + 1.0))
            + 0.5 * r * log_eta
        )
        w = np.exp(log_w[: dim - r])
        out[: dim - r, : dim - r] += np.outer(w, w) * src[r:, r:]
    return DensityMatrix(out)


def phase_damping(rho0: DensityMatrix, kt: float) -> DensityMatrix:
    """rho_{n,n'} -> e^(-kt (n-n')^2) rho_{n,n'}; diagonals exactly kept."""
    _check_scaled_time(kt, "kappa*tau")
    n = np.arange(rho0.dim, dtype=np.float64)
    damp = np.exp(-kt * (n[:, None] - n[None, :]) ** 2)
    return DensityMatrix(rho0.elems * damp)


def _family_dim(family: str, mean_photon: float, m: int) -> int:
    dim = truncation_dim(mean_photon, DEFAULT_POLICY)
    if family == "photon_added":
        dim += m
    return dim


def _power_log(k: np.ndarray, mu: float) -> np.ndarray:
    """k * log|alpha| with the k = 0 entries exactly 0, even at alpha = 0."""
    if mu > 0.0:
        return k * (0.5 * math.log(mu))
    out = np.full(k.shape, -np.inf)
    out[k == 0] = 0.0
    return out


def _log_coeff_parts(
    family: str, alpha: complex, m: int, h: int, levels: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(log magnitude, phase) of the family's C_k at the given Fock levels.

    Levels outside the family support (k < m, or wrong parity for cats) get
    log magnitude -inf.  Written directly from the coefficient formulas with
    log-gamma factorials, independent of the ratio-recurrence constructors.
    """
    mu = abs(alpha) ** 2
    delta = math.atan2(alpha.imag, alpha.real)
    k = levels.astype(np.float64)
    logmag = np.full(levels.shape, -np.inf)
    if family in ("coherent", "photon_added"):
        sup = levels >= m
        km = k[sup] - m
        logmag[sup] = (
            -0.5 * mu
            + _power_log(km, mu)
            + 0.5 * gammaln(k[sup] + 1.0)
            - gammaln(km + 1.0)
            - 0.5 * (gammaln(m + 1.0) + math.log(laguerre_neg(m, mu)))
        )
        phase = (k - m) * delta
    else:
        sup = (levels - h) % 2 == 0
        logmag[sup] = (
            math.log(2.0 * cat_normalization(mu, h))
            - 0.5 * mu
            + _power_log(k[sup], mu)
            - 0.5 * gammaln(k[sup] + 1.0)
        )
        phase = k * delta
    return logmag, phase


def _closed_family_args(family: str, alpha: complex, m: int, h: int) -> tuple[int, int]:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if family == "coherent":
        m = 0
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if h not in (0, 1):
        raise ValueError(f"h must be 0 or 1, got {h}")
    if family == "cat" and h == 1 and alpha == 0:
        raise ValueError("odd cat state of the vacuum is the zero vector")
    return m, h


def amplitude_decay_closed(
    family: str,
    alpha: complex,
    t: float,
    gt: float,
    k: KerrParams,
    m: int = 0,
    h: int = 0,
    dim: int | None = None,
) -> DensityMatrix:
    """Decohered matrix elements from the closed-form r-sums.

    Each r term is the outer product of
    v_r[n] = e^(-gt n) C(n+r,r)^(1/2) (1-e^(-2gt))^(r/2)
             C_{n+r} e^(-i chi t (n+r)(n+r-1)),
    with C_{n+r} the family coefficient written via log-gamma.  The r-sum
    stops when the running term stays below 1e-16 of the partial sum for 5
    consecutive r, or at the basis edge.
    """
    m, h = _closed_family_args(family, alpha, m, h)
    _check_scaled_time(gt, "gamma*tau")
    if dim is None:
        dim = _family_dim(family, abs(alpha) ** 2, m)
    n = np.arange(dim, dtype=np.float64)
    log_eta = math.log(-math.expm1(-2.0 * gt)) if gt > 0.0 else -math.inf
    out = np.zeros((dim, dim), dtype=np.complex128)
    streak = 0
    for r in range(dim):
        log_r = 0.5 * r * log_eta if r else 0.0
        if log_r == -math.inf:
            break
        levels = np.arange(r, r + dim)
        logmag, phase = _log_coeff_parts(family, alpha, m, h, levels)
        logmag = (
            logmag
            - gt * n
            + 0.5 * (gammaln(n + r + 1.0) - gammaln(r + 1.0) - gammaln(n + 1.0))
            + log_r
        )
        angles = phase - kerr_phase_angles(k.chi * t, levels)
        v = np.exp(logmag) * (np.cos(angles) + 1j * np.sin(angles))
        out += np.outer(v, v.conj())
        term_peak = float(np.max(np.abs(v)) ** 2)
        partial_peak = float(np.max(out.diagonal().real))
        if partial_peak > 0.0 and term_peak < _REL_CUTOFF * partial_peak:
            streak += 1
            if streak >= _CUTOFF_STREAK:
                break
        else:
            streak = 0
    return DensityMatrix(out)


def phase_damping_closed(
    family: str,
    alpha: complex,
    t: float,
    kt: float,
    k: KerrParams,
    m: int = 0,
    h: int = 0,
    dim: int | None = None,
) -> DensityMatrix:
    """rho_{n,n'} = e^(-kt (n-n')^2) C_n(t) conj(C_{n'}(t)) from the closed forms."""
    m, h = _closed_family_args(family, alpha, m, h)
    _check_scaled_time(kt, "kappa*tau")
    if dim is None:
        dim = _family_dim(family, abs(alpha) ** 2, m)
    levels = np.arange(dim)
    logmag, phase = _log_coeff_parts(family, alpha, m, h, levels)
    angles = phase - kerr_phase_angles(k.chi * t, levels)
    c = np.exp(logmag) * (np.cos(angles) + 1j * np.sin(angles))
    n = levels.astype(np.float64)
    damp = np.exp(-kt * (n[:, None] - n[None, :]) ** 2)
    return DensityMatrix(np.outer(c, c.conj()) * damp)


def longtime_amplitude_tomogram(g: QuadratureGrid) -> TomogramGrid:
    """gamma*tau -> inf limit: the vacuum tomogram e^(-X^2)/sqrt(pi), all theta."""
    row = np.exp(-g.xs**2) / math.sqrt(math.pi)
    values = np.broadcast_to(row, (g.n_theta, g.n_x)).copy()
    return TomogramGrid(g, values, {"kind": "longtime_amplitude"})


def longtime_phase_tomogram(
    family: str,
    alpha: complex,
    g: QuadratureGrid,
    m: int = 0,
    h: int = 0,
    dim: int | None = None,
) -> TomogramGrid:
    """kappa*tau -> inf limit: the theta-independent diagonal mixture.

    omega(X) = sum_n |C_n|^2 u_n(X)^2 with the family's closed-form weights
    (the Hermite-squared series evaluated through normalized oscillator
    functions, which never overflow).
    """
    m, h = _closed_family_args(family, alpha, m, h)
    if dim is None:
        dim = _family_dim(family, abs(alpha) ** 2, m)
    levels = np.arange(dim)
    logmag, _ = _log_coeff_parts(family, alpha, m, h, levels)
    weights = np.exp(2.0 * logmag)
    table = oscillator_table(g.xs, dim - 1)
    row = weights @ (table * table)
    values = np.broadcast_to(row, (g.n_theta, g.n_x)).copy()
    return TomogramGrid(g, values, {"kind": "longtime_phase", "family": family})
