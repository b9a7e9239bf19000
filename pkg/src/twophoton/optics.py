"""Linear-optical elements and the two-photon interferometer circuit.

Each photon occupies two path modes, ordered ``(path 0, path 1)`` with
path 0 the phase-shifted ("solid") branch. The composite space is
``(photon S paths) x (photon A paths)`` in row-major order, matching
:mod:`twophoton.qmath`. Detector 1 of each side is the first output port
of that side's beam splitter.

Conventions (the physics fixes these only up to phases):

* beam splitter ``(1/sqrt(2)) [[1, i], [i, 1]]`` (symmetric convention);
* mirrors contribute no extra phase;
* with these choices a single photon's fringe maximum sits a quarter wave
  away from the phase dial's zero, see ``SINGLES_FRINGE_OFFSET``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "MODE_DIMS",
    "SINGLES_FRINGE_OFFSET",
    "PhaseSettings",
    "beam_splitter_5050",
    "phase_shifter",
    "embed_local",
    "build_rto_circuit",
    "unitarity_deviation",
    "require_unitary",
]

#: Path-mode count per photon: (S modes, A modes).
MODE_DIMS = (2, 2)

#: Phase offset between the dial zero and a single photon's fringe maximum,
#: induced by the symmetric beam-splitter convention. The unentangled
#: detector-1 probability is ``(1 + cos(phi - SINGLES_FRINGE_OFFSET)) / 2``.
SINGLES_FRINGE_OFFSET = math.pi / 2


@dataclass(frozen=True)
class PhaseSettings:
    """Local phase-shifter settings for the two sides, in radians."""

    phi_s: float
    phi_a: float

    def __post_init__(self):
        for name, value in (("phi_s", self.phi_s), ("phi_a", self.phi_a)):
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")

    def canonical(self) -> tuple[float, float]:
        """Both phases wrapped to ``[0, 2*pi)``, for reporting only."""
        two_pi = 2.0 * math.pi
        return (self.phi_s % two_pi, self.phi_a % two_pi)


def beam_splitter_5050() -> NDArray[np.complex128]:
    """Symmetric 50/50 beam splitter ``(1/sqrt(2)) [[1, i], [i, 1]]``."""
    return np.array([[1.0, 1.0j], [1.0j, 1.0]], dtype=complex) / math.sqrt(2.0)


def phase_shifter(phi: float, branch: int = 0, dim: int = 2) -> NDArray[np.complex128]:
    """Diagonal unitary with ``exp(i*phi)`` on one branch, 1 elsewhere."""
    if not math.isfinite(phi):
        raise ValueError(f"phase must be finite, got {phi!r}")
    if not 0 <= branch < dim:
        raise ValueError(f"branch {branch} out of range for {dim} modes")
    diag = np.ones(dim, dtype=complex)
    diag[branch] = np.exp(1.0j * phi)
    return np.diag(diag)


def embed_local(
    u: NDArray[np.complex128], side: str, dims: tuple[int, int] = MODE_DIMS
) -> NDArray[np.complex128]:
    """Lift a one-photon unitary into the composite mode space.

    Side ``"S"`` gives ``u (x) I``, side ``"A"`` gives ``I (x) u``, using
    the package's row-major mode ordering.

    Raises:
        ValueError: If ``u`` does not match that side's mode count.
    """
    mat = np.asarray(u, dtype=complex)
    d_s, d_a = dims
    if side == "S":
        if mat.shape != (d_s, d_s):
            raise ValueError(f"operator shape {mat.shape} does not match S mode count {d_s}")
        return np.kron(mat, np.eye(d_a, dtype=complex))
    if side == "A":
        if mat.shape != (d_a, d_a):
            raise ValueError(f"operator shape {mat.shape} does not match A mode count {d_a}")
        return np.kron(np.eye(d_s, dtype=complex), mat)
    raise ValueError(f"side must be 'S' or 'A', got {side!r}")


def build_rto_circuit(settings: PhaseSettings) -> NDArray[np.complex128]:
    """Composite 4x4 unitary of the two-photon interferometer.

    Each side runs its photon through a phase shifter on path 0 followed by
    a 50/50 beam splitter; mirrors are identities. The result is

        ``(BS_S (x) BS_A) . (phase(phi_s) (x) phase(phi_a))``.
    """
    shift = embed_local(phase_shifter(settings.phi_s), "S") @ embed_local(
        phase_shifter(settings.phi_a), "A"
    )
    splitter = embed_local(beam_splitter_5050(), "S") @ embed_local(beam_splitter_5050(), "A")
    return splitter @ shift


def unitarity_deviation(u) -> float:
    """Return ``max |U^dag U - I|``."""
    mat = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0]))))


def require_unitary(u, tol: float = 1e-9, name: str = "operator") -> NDArray[np.complex128]:
    """Raise unless ``u`` is unitary within ``tol``."""
    mat = np.asarray(u, dtype=complex)
    dev = unitarity_deviation(mat)
    if dev > tol:
        raise ValueError(f"{name} is not unitary: deviation {dev:.3e} exceeds {tol:.1e}")
    return mat
