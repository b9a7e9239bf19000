"""Construction and reduction of bipartite pure states.

The central object is the entangled state produced by an ideal measurement
interaction: a two-level system correlated with a two-state pointer,

    ``c1 |s1>|a1> + c2 |s2>|a2>``,

optionally with non-orthogonal pointer states ``<a1|a2> = gamma``. The
operations here build such states, reduce them to the local state of either
side by partial trace, quantify how much superposition survives locally,
and put any bipartite pure state into biorthogonal (Schmidt) form.

Sides are tagged ``"S"`` (the observed system) and ``"A"`` (the apparatus
or partner subsystem) throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from . import qmath

__all__ = [
    "SIDES",
    "DEGENERACY_TOL",
    "BipartitePureState",
    "SchmidtForm",
    "make_superposition",
    "make_measurement_state",
    "local_state",
    "coherence",
    "schmidt",
    "collision_decoherence",
]

#: Valid subsystem tags.
SIDES = ("S", "A")

#: Two Schmidt coefficients closer than this count as degenerate.
DEGENERACY_TOL = 1e-9

#: Schmidt coefficients below this are treated as numerically zero.
_COEFF_CUTOFF = 1e-9

_DEFAULT_LABELS = (("sys0", "sys1"), ("ptr0", "ptr1"))


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


@dataclass(frozen=True)
class BipartitePureState:
    """A pure state on a composite space with declared subsystem dimensions.

    Attributes:
        dims: ``(dS, dA)`` subsystem dimensions.
        vector: Normalised amplitudes of length ``dS * dA``, indexed
            row-major as ``i * dA + j``.
        labels: Basis names for each side, used only for reporting.
    """

    dims: tuple[int, int]
    vector: NDArray[np.complex128]
    labels: tuple[tuple[str, ...], tuple[str, ...]] = _DEFAULT_LABELS

    def __post_init__(self):
        d_s, d_a = int(self.dims[0]), int(self.dims[1])
        if d_s < 1 or d_a < 1:
            raise ValueError(f"subsystem dimensions must be positive, got {self.dims}")
        vec = qmath.require_state(self.vector, name="bipartite state")
        if vec.size != d_s * d_a:
            raise ValueError(f"vector length {vec.size} does not match dims {self.dims}")
        vec.setflags(write=False)
        object.__setattr__(self, "dims", (d_s, d_a))
        object.__setattr__(self, "vector", vec)

    def coefficient_matrix(self) -> NDArray[np.complex128]:
        """The ``(dS, dA)`` matrix ``M`` with ``psi = sum_ij M[i,j] |i>|j>``."""
        return self.vector.reshape(self.dims).copy()

    def density(self) -> NDArray[np.complex128]:
        """Density operator ``|psi><psi|`` on the composite space."""
        return qmath.outer(self.vector)


@dataclass(frozen=True)
class SchmidtForm:
    """Biorthogonal decomposition ``psi = sum_k coeffs[k] |s_k>|a_k>``.

    Attributes:
        coeffs: Non-negative coefficients in descending order; their squares
            sum to 1.
        basis_s: ``(k, dS)`` array; row ``k`` is the k-th orthonormal vector
            on side S.
        basis_a: ``(k, dA)`` array of orthonormal vectors on side A.
        degenerate: True when two adjacent coefficients coincide within
            ``DEGENERACY_TOL``, in which case the bases are not unique.
    """

    coeffs: NDArray[np.float64]
    basis_s: NDArray[np.complex128]
    basis_a: NDArray[np.complex128]
    degenerate: bool

    def __post_init__(self):
        for name in ("coeffs", "basis_s", "basis_a"):
            arr = np.asarray(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def rank(self) -> int:
        return int(self.coeffs.size)

    def reconstruct(self) -> NDArray[np.complex128]:
        """Rebuild the composite state vector from the decomposition."""
        parts = [
            self.coeffs[k] * np.kron(self.basis_s[k], self.basis_a[k])
            for k in range(self.rank)
        ]
        return np.sum(parts, axis=0)

    def reconstruction_error(self, psi: BipartitePureState) -> float:
        """Max amplitude mismatch against the state the form came from."""
        return float(np.max(np.abs(self.reconstruct() - psi.vector)))


def make_superposition(c1: complex, c2: complex) -> NDArray[np.complex128]:
    """Two-level superposition with the given amplitudes.

    Args:
        c1: Amplitude on the first basis state.
        c2: Amplitude on the second.

    Returns:
        The 2-dim state vector ``[c1, c2]``, stored verbatim.

    Raises:
        ValueError: If ``|c1|^2 + |c2|^2`` deviates from 1 by more than the
            normalisation tolerance; the message carries the deviation.
    """
    return qmath.require_state([c1, c2], name="superposition amplitudes")


def _require_overlap(overlap: complex) -> complex:
    gamma = complex(overlap)
    if not (np.isfinite(gamma.real) and np.isfinite(gamma.imag)):
        raise ValueError("pointer overlap must be finite")
    if abs(gamma) > 1.0 + 1e-12:
        raise ValueError(f"pointer overlap magnitude {abs(gamma):.6f} exceeds 1")
    return gamma


def make_measurement_state(
    c1: complex,
    c2: complex,
    overlap: complex = 0.0,
    labels: tuple[tuple[str, ...], tuple[str, ...]] = _DEFAULT_LABELS,
) -> BipartitePureState:
    """Entangle a superposed system with a two-state pointer.

    For ``overlap = 0`` this is exactly ``c1|s1>|a1> + c2|s2>|a2>`` with
    orthonormal pointer states. For ``overlap = gamma != 0`` the pointer
    states satisfy ``<a1|a2> = gamma``; the second pointer state is
    completed in a fixed 2-dim space as
    ``|a2> = gamma |a1> + sqrt(1 - |gamma|^2) |a1_perp>``, so the output
    stays normalised for any admissible ``gamma``.

    A unit-magnitude overlap leaves the system side fully coherent (no
    measurement took place); zero overlap is a perfect which-state record.

    Raises:
        ValueError: If the amplitudes are not normalised or ``|gamma| > 1``.
    """
    amps = make_superposition(c1, c2)
    gamma = _require_overlap(overlap)
    residue = float(np.sqrt(max(0.0, 1.0 - abs(gamma) ** 2)))
    # Row-major composite index i*dA + j with |a1> = e0, |a1_perp> = e1.
    vector = np.array([amps[0], 0.0, amps[1] * gamma, amps[1] * residue], dtype=complex)
    return BipartitePureState(dims=(2, 2), vector=vector, labels=labels)


def local_state(psi: BipartitePureState, side: str) -> NDArray[np.complex128]:
    """Reduced density operator of one side of a bipartite pure state.

    This is the state that predicts every measurement statistic available
    to an observer holding only that subsystem. For the ideal entangled
    measurement state it is diagonal, ``diag(|c1|^2, |c2|^2)``: a mixture
    with no surviving superposition.
    """
    _check_side(side)
    return qmath.partial_trace(psi.density(), psi.dims, keep=side)


def coherence(rho, basis: NDArray[np.complex128] | None = None) -> float:
    """Off-diagonal l1 mass of a density operator in a given basis.

    Args:
        rho: Density operator.
        basis: Optional unitary whose columns define the basis to express
            ``rho`` in before summing. Default is the basis the matrix is
            already written in.

    Returns:
        ``sum_{i != j} |rho_ij|``. Zero means the operator is an incoherent
        mixture in that basis; 1 is maximal for a 2-dim state.
    """
    mat = np.asarray(rho, dtype=complex)
    if basis is not None:
        b = np.asarray(basis, dtype=complex)
        mat = b.conj().T @ mat @ b
    off = np.abs(mat) - np.diag(np.diag(np.abs(mat)))
    return float(np.sum(off))


def schmidt(psi: BipartitePureState) -> SchmidtForm:
    """Biorthogonal decomposition of a bipartite pure state.

    Coefficients come out non-negative and descending, bases orthonormal,
    and ``reconstruct()`` matches the input vector to numerical precision.
    Coefficients below the numerical cutoff are dropped, so a product state
    reports rank 1. The ``degenerate`` flag marks coinciding coefficients,
    the case where the decomposition (and with it any preferred local
    basis) stops being unique.
    """
    sigma, left, right = qmath.svd_coeff_matrix(psi.coefficient_matrix())
    keep = sigma > _COEFF_CUTOFF
    if not np.any(keep):
        # Normalised input guarantees at least one significant coefficient.
        keep = np.zeros_like(keep)
        keep[0] = True
    sigma, left, right = sigma[keep], left[keep], right[keep]
    degenerate = bool(np.any(np.abs(np.diff(sigma)) < DEGENERACY_TOL))
    return SchmidtForm(coeffs=sigma, basis_s=left, basis_a=right, degenerate=degenerate)


def collision_decoherence(overlap: complex, collisions: int) -> complex:
    """Pointer overlap after repeated identical environment collisions.

    Each collision multiplies the which-state overlap by the same factor,
    so ``collisions`` scattering events map ``gamma -> gamma**collisions``:
    geometric progress toward orthogonal pointer states. This is a toy
    model; real environments differ per collision but share the monotone
    decay.

    Args:
        overlap: Overlap ``gamma`` imprinted by a single collision.
        collisions: Number of collisions, ``>= 0``. Zero collisions leave
            the pointer states indistinguishable (overlap 1).
    """
    gamma = _require_overlap(overlap)
    n = int(collisions)
    if n < 0:
        raise ValueError(f"collision count must be non-negative, got {collisions}")
    if n == 0:
        return complex(1.0)
    return gamma**n
