"""Experiment drivers on the two-photon interferometer.

Every quantity here is computed by running a state through the circuit of
:mod:`twophoton.optics` and applying the Born rule; no closed-form cosine
is hard-coded anywhere in this module. The closed forms belong to the test
oracles.

The drivers cover the behaviour that distinguishes an entangled pair from
two independent photons: coincidence correlations that interfere in the
phase *difference*, single-detector rates that stay flat, Bell-inequality
violation, and the loss of single-photon visibility when a which-path
record exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from . import qmath, states
from .optics import PhaseSettings, build_rto_circuit

__all__ = [
    "EQUAL_AMPLITUDE",
    "DEFAULT_CHSH_ANGLES",
    "JointDistribution",
    "entangled_mode_state",
    "product_mode_state",
    "rto_joint",
    "rto_correlation",
    "singles_marginals",
    "chsh",
    "fringe_visibility",
    "zwm_scan",
    "unentangled_control",
]

#: Amplitude of the balanced entangled ensemble, ``1/sqrt(2)``.
EQUAL_AMPLITUDE = math.sqrt(0.5)

#: Analyzer angles ``(a, a', b, b')`` that maximise the CHSH combination
#: for a cosine correlation: S = 2*sqrt(2).
DEFAULT_CHSH_ANGLES = (0.0, math.pi / 2, math.pi / 4, -math.pi / 4)


@dataclass(frozen=True)
class JointDistribution:
    """Coincidence probabilities for the four detector pairs.

    ``pXY`` is the probability that side S fires detector X and side A
    fires detector Y. Probabilities must be non-negative and sum to 1
    within double-precision roundoff.
    """

    p11: float
    p12: float
    p21: float
    p22: float

    def __post_init__(self):
        probs = self.as_array()
        if np.any(probs < -qmath.TOL_EXACT) or np.any(probs > 1.0 + qmath.TOL_EXACT):
            raise ValueError(f"probabilities out of range: {probs}")
        total = float(np.sum(probs))
        if abs(total - 1.0) > qmath.TOL_EXACT:
            raise ValueError(f"probabilities sum to {total}, not 1")

    def as_array(self) -> NDArray[np.float64]:
        """Probabilities in the fixed outcome order (11, 12, 21, 22)."""
        return np.array([self.p11, self.p12, self.p21, self.p22], dtype=float)

    def correlation(self) -> float:
        """``E = (p11 + p22) - (p12 + p21)``, in ``[-1, 1]``."""
        return (self.p11 + self.p22) - (self.p12 + self.p21)

    def agreement(self) -> float:
        """Probability that the two sides fire matching detectors."""
        return self.p11 + self.p22

    def marginal(self, side: str) -> tuple[float, float]:
        """Single-side detector probabilities ``(p_det1, p_det2)``."""
        if side == "S":
            return (self.p11 + self.p12, self.p21 + self.p22)
        if side == "A":
            return (self.p11 + self.p21, self.p12 + self.p22)
        raise ValueError(f"side must be 'S' or 'A', got {side!r}")


def entangled_mode_state(c1: complex, c2: complex) -> NDArray[np.complex128]:
    """Entangled pair in the interferometer's path-mode basis.

    The source emits the two photons into path-anticorrelated branch
    pairs (transverse-momentum conservation in down-conversion selects
    crossed path pairs): branch 1 couples S path 0 to A path 1, branch 2
    couples S path 1 to A path 0. With the phase shifters sitting on each
    photon's path 0, branch 1 picks up ``phi_s`` and branch 2 picks up
    ``phi_a``, which is what makes every coincidence quantity depend on
    the phases only through their difference.
    """
    amps = states.make_superposition(c1, c2)
    vector = np.zeros(4, dtype=complex)
    vector[0 * 2 + 1] = amps[0]
    vector[1 * 2 + 0] = amps[1]
    return vector


def product_mode_state() -> NDArray[np.complex128]:
    """Both photons in balanced path superpositions, unentangled."""
    half = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)
    return np.kron(half, half)


def _born_joint(circuit: NDArray[np.complex128], mode_state: NDArray[np.complex128]) -> JointDistribution:
    out = circuit @ mode_state
    probs = np.abs(out) ** 2
    return JointDistribution(*(float(p) for p in probs))


def rto_joint(
    settings: PhaseSettings,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> JointDistribution:
    """Exact coincidence distribution at the given phase settings.

    Born-rule output of the interferometer circuit applied to the
    entangled pair. For the balanced ensemble the agreement probability is
    ``(1 + cos(phi_s - phi_a)) / 2``.
    """
    return _born_joint(build_rto_circuit(settings), entangled_mode_state(c1, c2))


def rto_correlation(
    settings: PhaseSettings,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> float:
    """Detector correlation ``E`` at the given settings.

    For the balanced ensemble this equals ``cos(phi_s - phi_a)``: the
    correlations interfere even though neither photon's own statistics
    move (see :func:`singles_marginals`).
    """
    return rto_joint(settings, c1, c2).correlation()


def singles_marginals(
    settings: PhaseSettings,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
    side: str = "S",
) -> tuple[float, float]:
    """One side's detector probabilities, ignoring the other side.

    These are flat in both phase settings; a 50/50 splitter turns the
    diagonal local state into even odds regardless of the amplitudes.
    """
    return rto_joint(settings, c1, c2).marginal(side)


def chsh(
    a: float,
    a_prime: float,
    b: float,
    b_prime: float,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> float:
    """CHSH combination ``E(a,b) + E(a,b') + E(a',b) - E(a',b')``.

    The first argument of each pair sets ``phi_s``, the second ``phi_a``.
    Any value above 2 is unreachable by local hidden-variable models; the
    circuit reaches ``2*sqrt(2)`` at ``DEFAULT_CHSH_ANGLES``.
    """
    def corr(phi_s: float, phi_a: float) -> float:
        return rto_correlation(PhaseSettings(phi_s, phi_a), c1, c2)

    return corr(a, b) + corr(a, b_prime) + corr(a_prime, b) - corr(a_prime, b_prime)


def fringe_visibility(
    overlap: complex,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> float:
    """Single-photon fringe visibility against which-path record quality.

    Builds the entangled state with pointer overlap ``gamma``, reduces to
    the system side and reads the visibility off the reduced operator's
    off-diagonal: ``V = 2 |rho_S[0, 1]|``. A perfect record
    (``gamma = 0``) kills the fringes entirely; an uninformative pointer
    (``|gamma| = 1``) leaves them at full strength.
    """
    psi = states.make_measurement_state(c1, c2, overlap)
    reduced = states.local_state(psi, "S")
    return 2.0 * float(np.abs(reduced[0, 1]))


def zwm_scan(
    barrier_transmission: float,
    c1: complex = EQUAL_AMPLITUDE,
    c2: complex = EQUAL_AMPLITUDE,
) -> float:
    """Fringe visibility with a partial barrier in the partner photon's path.

    Models the induced-coherence arrangement in which the partner photon
    acts as an optional which-path detector: a blocking barrier
    (transmission 0) makes the record perfect and the system photon lands
    in a mixture; full transmission erases the record and restores the
    interference pattern. The interior is mapped linearly,
    ``gamma = transmission``, which reproduces both endpoints; treating
    the midpoints this way is a modelling choice, not an experimental fit.

    Raises:
        ValueError: If ``barrier_transmission`` is outside ``[0, 1]``.
    """
    t = float(barrier_transmission)
    if not (0.0 <= t <= 1.0):
        raise ValueError(f"barrier transmission must lie in [0, 1], got {t}")
    return fringe_visibility(t, c1, c2)


def unentangled_control(settings: PhaseSettings) -> tuple[float, float]:
    """Detector-1 probabilities when the same circuit runs on a product state.

    Each photon enters in a balanced superposition of its two paths with
    no partner correlations, so each interferes with itself: the S-side
    probability is ``(1 + cos(phi_s - SINGLES_FRINGE_OFFSET)) / 2`` and
    likewise for A. This is the singles fringe the entangled pair lacks.
    """
    joint = _born_joint(build_rto_circuit(settings), product_mode_state())
    return (joint.marginal("S")[0], joint.marginal("A")[0])
