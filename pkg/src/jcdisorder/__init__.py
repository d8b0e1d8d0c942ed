"""Jaynes-Cummings dynamics with quenched disorder in the atom-cavity coupling.

Single- and double-cavity models at zero detuning: population inversion
(closed-form disorder averages and Monte-Carlo quenched estimates),
atom-photon and atom-atom entanglement, entanglement-sudden-death detection
and region scans, and truncated-basis evolution with Ising / anisotropic XY
atom-atom couplings.

Units: hbar = 1 and the base coupling g = 1 unless stated otherwise, so all
times are the dimensionless g*t.
"""

__version__ = "0.1.0"

from .errors import ValidationError, NumericalError, EigensolverError
from .disorder import (
    DisorderSpec,
    QuenchPlan,
    sample_delta,
    sample_deltas,
    discrete_atoms,
    distribution_quartiles,
    quench_average,
    quenched_series,
)
from .entanglement import (
    von_neumann_entropy,
    qubit_entropy,
    concurrence_general,
    concurrence_xstate,
    partial_trace_cavities,
)
from .singlejc import (
    PhotonDistribution,
    SingleJcConfig,
    photon_weights,
    revival_period,
    inversion_clean,
    inversion_gaussian,
    inversion_uniform,
    inversion_discrete,
    inversion_discrete_enumerated,
    inversion_quenched_mc,
    atom_reduced_state,
    atom_photon_entanglement,
    ap_entanglement_quenched,
)
from .doublejc import (
    DoubleJcConfig,
    EsdReport,
    RegionScanResult,
    concurrence_clean,
    concurrence_realization,
    concurrence_quenched,
    two_atom_density,
    detect_esd,
    esd_region_scan,
)
from .coupled import (
    TruncatedBasis,
    CoupledConfig,
    ISING_BASIS,
    XY_BASIS,
    basis_for,
    build_hamiltonian,
    initial_state,
    evolve,
    coupled_concurrence,
    coupled_concurrence_quenched,
    saturation_value,
)

__all__ = [
    "ValidationError",
    "NumericalError",
    "EigensolverError",
    "DisorderSpec",
    "QuenchPlan",
    "sample_delta",
    "sample_deltas",
    "discrete_atoms",
    "distribution_quartiles",
    "quench_average",
    "quenched_series",
    "von_neumann_entropy",
    "qubit_entropy",
    "concurrence_general",
    "concurrence_xstate",
    "partial_trace_cavities",
    "PhotonDistribution",
    "SingleJcConfig",
    "photon_weights",
    "revival_period",
    "inversion_clean",
    "inversion_gaussian",
    "inversion_uniform",
    "inversion_discrete",
    "inversion_discrete_enumerated",
    "inversion_quenched_mc",
    "atom_reduced_state",
    "atom_photon_entanglement",
    "ap_entanglement_quenched",
    "DoubleJcConfig",
    "EsdReport",
    "RegionScanResult",
    "concurrence_clean",
    "concurrence_realization",
    "concurrence_quenched",
    "two_atom_density",
    "detect_esd",
    "esd_region_scan",
    "TruncatedBasis",
    "CoupledConfig",
    "ISING_BASIS",
    "XY_BASIS",
    "basis_for",
    "build_hamiltonian",
    "initial_state",
    "evolve",
    "coupled_concurrence",
    "coupled_concurrence_quenched",
    "saturation_value",
]
