"""Optical tomograms of single-mode fields in a Kerr medium.

Builds coherent, photon-added-coherent and even/odd cat states on a
truncated Fock basis, evolves them under the Kerr Hamiltonian chi N(N-1),
renders optical tomograms omega(X_theta, theta) on quadrature grids,
detects fractional-revival strand structure, and applies amplitude-decay /
phase-damping decoherence channels.  Grid evaluation runs on a compiled
kernel core when built, with a NumPy fallback (see tomoscope.backend).
"""

from .backend import BACKEND
from .decoherence import (
    ChannelParams,
    amplitude_decay,
    amplitude_decay_closed,
    longtime_amplitude_tomogram,
    longtime_phase_tomogram,
    phase_damping,
    phase_damping_closed,
)
from .errors import CapacityError, ConfigError, PrecisionError, TomoscopeError
from .fock import (
    DensityMatrix,
    FockVector,
    TruncationPolicy,
    fidelity,
    hermiticity_residual,
    inner,
    outer_product,
    quadrature_wavefunction,
    trace,
    truncation_dim,
)
from .kerr import (
    KerrParams,
    SuperpositionDecomposition,
    decompose_fractional,
    evolve,
    expand_decomposition,
    fourier_coefficients,
    fractional_revival_time,
    revival_time,
)
from .states import (
    CatParams,
    CoherentParams,
    PhotonAddedParams,
    cat_state,
    coherent_state,
    mean_photon_number,
    photon_added_state,
)
from .tomography import (
    QuadratureGrid,
    TomogramGrid,
    TomogramReport,
    collapse_fraction,
    count_strands,
    modal_strand_count,
    strand_counts,
    tomogram_coherent_t0,
    tomogram_fractional_closed,
    tomogram_mixed,
    tomogram_pure,
    verify_tomogram,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacityError",
    "CatParams",
    "ChannelParams",
    "CoherentParams",
    "ConfigError",
    "DensityMatrix",
    "FockVector",
    "KerrParams",
    "PhotonAddedParams",
    "PrecisionError",
    "QuadratureGrid",
    "SuperpositionDecomposition",
    "TomogramGrid",
    "TomogramReport",
    "TomoscopeError",
    "TruncationPolicy",
    "amplitude_decay",
    "amplitude_decay_closed",
    "cat_state",
    "coherent_state",
    "collapse_fraction",
    "count_strands",
    "decompose_fractional",
    "evolve",
    "expand_decomposition",
    "fidelity",
    "fourier_coefficients",
    "fractional_revival_time",
    "hermiticity_residual",
    "inner",
    "longtime_amplitude_tomogram",
    "longtime_phase_tomogram",
    "mean_photon_number",
    "modal_strand_count",
    "outer_product",
    "phase_damping",
    "phase_damping_closed",
    "photon_added_state",
    "quadrature_wavefunction",
    "revival_time",
    "strand_counts",
    "tomogram_coherent_t0",
    "tomogram_fractional_closed",
    "tomogram_mixed",
    "tomogram_pure",
    "trace",
    "truncation_dim",
    "verify_tomogram",
]
