"""Desk-scale simulator of bipartite entanglement and two-photon interferometry.

The package models an ideal measurement interaction as an entangled state
of a two-level system and a two-state pointer, and reproduces the
laboratory signatures of that state on a two-photon interferometer: local
statistics that form phase-independent mixtures, coincidence correlations
that interfere as the cosine of the phase difference, Bell-inequality
violation, which-path decoherence, and a machine-checked no-signaling
audit.

Modules:
    qmath: dense complex linear algebra (tensor, partial trace, SVD).
    states: entangled-state construction, reduction, Schmidt form.
    optics: beam splitters, phase shifters, the interferometer circuit.
    experiments: correlation fringes, singles, CHSH, visibility scans.
    stochastics: seeded coincidence sampling and estimators.
    audit: the no-signaling auditor.
    cli: command-line front end (``twophoton`` executable).
"""

from .audit import AuditReport, audit_exact, audit_sampled, phase_biased_joint
from .experiments import (
    DEFAULT_CHSH_ANGLES,
    EQUAL_AMPLITUDE,
    JointDistribution,
    chsh,
    fringe_visibility,
    rto_correlation,
    rto_joint,
    singles_marginals,
    unentangled_control,
    zwm_scan,
)
from .optics import PhaseSettings, beam_splitter_5050, build_rto_circuit, phase_shifter
from .qmath import outer, partial_trace, purity, svd_coeff_matrix, tensor, validate
from .states import (
    BipartitePureState,
    SchmidtForm,
    coherence,
    collision_decoherence,
    local_state,
    make_measurement_state,
    make_superposition,
    schmidt,
)
from .stochastics import (
    EstimatedCorrelation,
    EventTally,
    estimate_correlation,
    sample_events,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AuditReport",
    "BipartitePureState",
    "DEFAULT_CHSH_ANGLES",
    "EQUAL_AMPLITUDE",
    "EstimatedCorrelation",
    "EventTally",
    "JointDistribution",
    "PhaseSettings",
    "SchmidtForm",
    "audit_exact",
    "audit_sampled",
    "beam_splitter_5050",
    "build_rto_circuit",
    "chsh",
    "coherence",
    "collision_decoherence",
    "estimate_correlation",
    "fringe_visibility",
    "local_state",
    "make_measurement_state",
    "make_superposition",
    "outer",
    "partial_trace",
    "phase_biased_joint",
    "phase_shifter",
    "purity",
    "rto_correlation",
    "rto_joint",
    "sample_events",
    "schmidt",
    "singles_marginals",
    "svd_coeff_matrix",
    "tensor",
    "unentangled_control",
    "validate",
    "zwm_scan",
]
