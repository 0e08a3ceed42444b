"""Optical tomograms omega(X_theta, theta) on quadrature grids.

A tomogram is the probability density of the rotated quadrature X_theta at
local-oscillator phase theta.  Pure states go through the amplitude series
sum_n C_n e^(-i chi t n(n-1)) e^(-i n theta) u_n(X); mixed states through
the quadratic form in the density matrix.  The module also carries the
closed-form reference tomograms and strand-structure analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy.signal import find_peaks

from . import backend, kerr
from .fock import DensityMatrix, FockVector, hermiticity_residual, oscillator_table
from .kerr import KerrParams
from .states import CoherentParams

VACUUM_PEAK = math.pi**-0.5  # 1/sqrt(pi), the t=0 coherent ridge height

NORM_RESIDUAL_TOL = 1e-6
SYMMETRY_TOL = 1e-10
NEGATIVITY_TOL = -1e-12
CLIP_THRESHOLD = 1e-3  # normalization loss that signals a clipped X range

DEFAULT_N_THETA = 256
DEFAULT_N_X = 513


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform (X_theta, theta) lattice.

    thetas: T points on [0, 2pi), T even so theta + pi stays on-lattice.
    xs: M points on [-x_max, x_max], M odd so X = 0 is a node and the grid
    is exactly negation-symmetric.
    """

    thetas: np.ndarray
    xs: np.ndarray
    x_max: float

    def __post_init__(self):
        thetas = np.ascontiguousarray(self.thetas, dtype=np.float64)
        xs = np.ascontiguousarray(self.xs, dtype=np.float64)
        if thetas.size < 4 or thetas.size % 2:
            raise ValueError(f"need an even number >= 4 of thetas, got {thetas.size}")
        if xs.size < 3 or xs.size % 2 == 0:
            raise ValueError(f"need an odd number >= 3 of xs, got {xs.size}")
        for name, a in (("thetas", thetas), ("xs", xs)):
            steps = np.diff(a)
            if not np.allclose(steps, steps[0], rtol=1e-9, atol=1e-12):
                raise ValueError(f"{name} must be uniformly spaced")
        if np.max(np.abs(xs + xs[::-1])) != 0.0:
            raise ValueError("xs must be exactly symmetric about 0")
        thetas.flags.writeable = False
        xs.flags.writeable = False
        object.__setattr__(self, "thetas", thetas)
        object.__setattr__(self, "xs", xs)

    @classmethod
    def regular(
        cls,
        x_max: float,
        n_theta: int = DEFAULT_N_THETA,
        n_x: int = DEFAULT_N_X,
    ) -> "QuadratureGrid":
        if not math.isfinite(x_max) or x_max <= 0:
            raise ValueError(f"x_max must be > 0, got {x_max}")
        thetas = 2.0 * math.pi / n_theta * np.arange(n_theta)
        half = np.linspace(0.0, x_max, (n_x + 1) // 2)
        xs = np.concatenate([-half[:0:-1], half])
        return cls(thetas, xs, float(x_max))

    @classmethod
    def default_for(
        cls,
        mean_photon: float,
        n_theta: int = DEFAULT_N_THETA,
        n_x: int = DEFAULT_N_X,
        x_max: float | None = None,
    ) -> "QuadratureGrid":
        """Default lattice: X range covers the coherent ring plus 5 vacuum widths."""
        if x_max is None:
            x_max = math.sqrt(2.0 * mean_photon) + 5.0
        return cls.regular(x_max, n_theta, n_x)

    @property
    def n_theta(self) -> int:
        return self.thetas.size

    @property
    def n_x(self) -> int:
        return self.xs.size

    @property
    def dx(self) -> float:
        return float(self.xs[1] - self.xs[0])


@dataclass(frozen=True)
class TomogramGrid:
    """omega values on a QuadratureGrid plus provenance metadata."""

    grid: QuadratureGrid
    values: np.ndarray  # shape (n_theta, n_x)
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        if values.shape != (self.grid.n_theta, self.grid.n_x):
            raise ValueError(
                f"values shape {values.shape} does not match grid "
                f"({self.grid.n_theta}, {self.grid.n_x})"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def slice_at(self, theta: float) -> np.ndarray:
        """omega(., theta) for a theta that lies on the grid."""
        idx = self.theta_index(theta)
        return self.values[idx]

    def theta_index(self, theta: float) -> int:
        th = theta % (2.0 * math.pi)
        idx = int(np.argmin(np.abs(self.grid.thetas - th)))
        if abs(self.grid.thetas[idx] - th) > 1e-9:
            raise ValueError(f"theta={theta} is not on the grid")
        return idx


def _check_normalized(v: FockVector) -> None:
    nrm = v.norm_squared()
    if abs(nrm - 1.0) > 1e-9:
        raise ValueError(f"state norm^2 = {nrm!r}; tomograms need a normalized state")


def tomogram_pure(
    v: FockVector,
    t: float,
    k: KerrParams,
    g: QuadratureGrid,
    threads: int = 0,
    meta: dict[str, Any] | None = None,
) -> TomogramGrid:
    """|sum_n C_n e^(-i chi t n(n-1)) e^(-i n theta) u_n(X)|^2.

    The e^(-X^2)/sqrt(pi) prefactor of the Hermite series is folded into
    the normalized oscillator functions u_n, which keeps every factor O(1).
    """
    _check_normalized(v)
    evolved = kerr.evolve(v, t, k)
    table = oscillator_table(g.xs, v.n_max)
    values = backend.pure_grid(evolved.coeffs, g.thetas, table, threads)
    info = {"kind": "pure", "time": t, "chi": k.chi}
    info.update(meta or {})
    return TomogramGrid(g, values, info)


def tomogram_mixed(
    rho: DensityMatrix,
    g: QuadratureGrid,
    threads: int = 0,
    meta: dict[str, Any] | None = None,
) -> TomogramGrid:
    """sum_{n,n'} rho_{n,n'} u_n(X) u_{n'}(X) e^(-i(n-n')theta) (real part)."""
    herm = hermiticity_residual(rho)
    if herm > 1e-12:
        raise ValueError(f"density matrix hermiticity residual {herm:.3e} > 1e-12")
    table = oscillator_table(g.xs, rho.n_max)
    values = backend.mixed_grid(rho.elems, g.thetas, table, threads)
    info = {"kind": "mixed"}
    info.update(meta or {})
    return TomogramGrid(g, values, info)


def tomogram_coherent_t0(
    p: CoherentParams, g: QuadratureGrid, meta: dict[str, Any] | None = None
) -> TomogramGrid:
    """Closed form at t = 0: a Gaussian ridge of height 1/sqrt(pi) along
    X = sqrt(2|alpha|^2) cos(theta - delta)."""
    ridge = math.sqrt(2.0 * p.mean_photon) * np.cos(p.delta - g.thetas)
    values = np.exp(-((g.xs[None, :] - ridge[:, None]) ** 2)) / math.sqrt(math.pi)
    info = {"kind": "coherent_t0", "mean_photon": p.mean_photon, "delta": p.delta}
    info.update(meta or {})
    return TomogramGrid(g, values, info)


def tomogram_fractional_closed(
    p: CoherentParams,
    l: int,
    g: QuadratureGrid,
    meta: dict[str, Any] | None = None,
) -> TomogramGrid:
    """Closed form at t = pi/(l chi) for an initial coherent state.

    omega = (1/sqrt(pi)) |sum_r f_r exp(-X^2/2 - |alpha|^2/2
            - a_r^2 e^(-2i theta)/2 + sqrt(2) a_r X e^(-i theta))|^2
    with the sub-packet weights f_r and rotated amplitudes a_r.
    """
    d = kerr.decompose_fractional("coherent", p.alpha, 0, l)
    mu = p.mean_photon
    eith = np.exp(-1j * g.thetas)[:, None]  # (T, 1)
    x = g.xs[None, :]  # (1, M)
    amp = np.zeros((g.n_theta, g.n_x), dtype=np.complex128)
    for w, a in d.terms:
        amp += w * np.exp(
            -0.5 * x * x - 0.5 * mu - 0.5 * a * a * eith * eith + math.sqrt(2.0) * a * x * eith
        )
    values = (amp.real**2 + amp.imag**2) / math.sqrt(math.pi)
    info = {"kind": "fractional_closed", "l": l, "mean_photon": mu, "delta": p.delta}
    info.update(meta or {})
    return TomogramGrid(g, values, info)


def count_strands(tg: TomogramGrid, theta: float, prominence: float = 0.05) -> int:
    """Local maxima of omega(., theta) above prominence * (slice maximum).

    Plateaus of equal samples count once (flat peaks are merged).
    """
    slc = tg.slice_at(theta)
    return _count_peaks(slc, prominence)


def _count_peaks(slc: np.ndarray, prominence: float) -> int:
    if slc.size == 0:
        raise ValueError("empty tomogram slice")
    top = float(np.max(slc))
    if top <= 0.0:
        return 0
    peaks, _ = find_peaks(slc, height=prominence * top)
    return int(peaks.size)


def strand_counts(tg: TomogramGrid, prominence: float = 0.05) -> np.ndarray:
    """count_strands for every theta row of the grid."""
    return np.array([_count_peaks(row, prominence) for row in tg.values])


def modal_strand_count(tg: TomogramGrid, prominence: float = 0.05) -> int:
    """Most common per-slice strand count (smallest wins a tie)."""
    counts = strand_counts(tg, prominence)
    return int(np.bincount(counts).argmax())


def collapse_fraction(tg: TomogramGrid, prominence: float = 0.05) -> float:
    """Fraction of theta slices with no clean strand structure.

    A slice is structureless when it has more than 4 prominent maxima or
    its maximum falls below half the coherent ridge height 1/sqrt(pi).
    """
    counts = strand_counts(tg, prominence)
    weak = np.max(tg.values, axis=1) < 0.5 * VACUUM_PEAK
    return float(np.mean((counts > 4) | weak))


@dataclass(frozen=True)
class TomogramReport:
    """Residuals of the tomogram axioms for one grid."""

    norm_residual_per_theta: np.ndarray
    max_norm_residual: float
    symmetry_residual: float
    min_value: float
    clipped: bool

    @property
    def ok(self) -> bool:
        return (
            self.max_norm_residual <= NORM_RESIDUAL_TOL
            and self.symmetry_residual <= SYMMETRY_TOL
            and self.min_value >= NEGATIVITY_TOL
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "normalization_residual_per_theta": self.norm_residual_per_theta.tolist(),
            "max_normalization_residual": self.max_norm_residual,
            "symmetry_residual": self.symmetry_residual,
            "min_value": self.min_value,
            "clipped": self.clipped,
            "ok": self.ok,
        }


def verify_tomogram(tg: TomogramGrid) -> TomogramReport:
    """Check non-negativity, per-theta normalization and the theta+pi symmetry.

    Normalization uses the trapezoidal rule over X; symmetry compares
    omega(X, theta + pi) with omega(-X, theta) on the exactly aligned
    lattice points.
    """
    norms = np.trapezoid(tg.values, tg.grid.xs, axis=1)
    norm_res = np.abs(norms - 1.0)
    half = tg.grid.n_theta // 2
    sym = float(np.max(np.abs(np.roll(tg.values, -half, axis=0) - tg.values[:, ::-1])))
    max_norm = float(np.max(norm_res))
    return TomogramReport(
        norm_residual_per_theta=norm_res,
        max_norm_residual=max_norm,
        symmetry_residual=sym,
        min_value=float(np.min(tg.values)),
        clipped=max_norm > CLIP_THRESHOLD,
    )
