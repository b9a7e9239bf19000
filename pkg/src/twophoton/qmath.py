"""Dense complex linear algebra for small Hilbert spaces.

Everything here works on plain numpy arrays: state vectors are 1-d complex
arrays, operators are square complex matrices. Dimensions are capped at
``MAX_DIM`` so the dense algorithms stay honest; the systems this package
models are 2- and 4-dimensional.

All functions are pure and never mutate their inputs, so they are safe to
call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "MAX_DIM",
    "TOL_NORM",
    "TOL_HERM",
    "PSD_SLACK",
    "TOL_EXACT",
    "norm_deviation",
    "require_state",
    "tensor",
    "outer",
    "partial_trace",
    "svd_coeff_matrix",
    "purity",
    "ValidityReport",
    "validate",
    "require_density",
]

#: Largest composite dimension the dense routines accept.
MAX_DIM = 64

#: Tolerance on state-vector normalisation.
TOL_NORM = 1e-9
#: Tolerance on Hermiticity and unit trace of density operators.
TOL_HERM = 1e-9
#: Slack allowed below zero for density-operator eigenvalues.
PSD_SLACK = 1e-10
#: Tolerance for identities that should hold to double-precision roundoff.
TOL_EXACT = 1e-12


def _as_complex_vector(v, name: str = "state") -> NDArray[np.complex128]:
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-d array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(float))):
        raise ValueError(f"{name} contains non-finite amplitudes")
    return arr


def _as_complex_matrix(m, name: str = "operator") -> NDArray[np.complex128]:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise ValueError(f"{name} must be a non-empty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.view(float))):
        raise ValueError(f"{name} contains non-finite entries")
    return arr


def norm_deviation(v) -> float:
    """Return ``|sum_k |v_k|^2 - 1|`` for a would-be state vector."""
    arr = _as_complex_vector(v)
    return abs(float(np.sum(np.abs(arr) ** 2)) - 1.0)


def require_state(v, tol: float = TOL_NORM, name: str = "state") -> NDArray[np.complex128]:
    """Coerce ``v`` to a complex vector and reject it unless normalised.

    Args:
        v: Array-like of complex amplitudes.
        tol: Allowed deviation of the squared norm from 1.
        name: Label used in error messages.

    Returns:
        The amplitudes as a fresh ``complex128`` array.

    Raises:
        ValueError: If ``v`` is not a finite 1-d array normalised within
            ``tol``; the message reports the norm deviation.
    """
    arr = _as_complex_vector(v, name)
    dev = abs(float(np.sum(np.abs(arr) ** 2)) - 1.0)
    if dev > tol:
        raise ValueError(f"{name} is not normalised: squared-norm deviation {dev:.3e} exceeds {tol:.1e}")
    return arr


def tensor(v, w) -> NDArray[np.complex128]:
    """Tensor product of two normalised state vectors.

    Index convention is row-major: entry ``i * len(w) + j`` holds
    ``v[i] * w[j]``.

    Raises:
        ValueError: If either factor is not normalised or the product
            dimension exceeds ``MAX_DIM``.
    """
    a = require_state(v, name="left factor")
    b = require_state(w, name="right factor")
    if a.size * b.size > MAX_DIM:
        raise ValueError(f"tensor dimension {a.size * b.size} exceeds the configured maximum {MAX_DIM}")
    return np.kron(a, b)


def outer(v) -> NDArray[np.complex128]:
    """Rank-1 density operator ``|v><v|`` of a normalised state vector."""
    arr = require_state(v)
    return np.outer(arr, arr.conj())


def partial_trace(rho, dims: tuple[int, int], keep: str) -> NDArray[np.complex128]:
    """Trace a bipartite density operator down to one subsystem.

    Args:
        rho: ``(dS*dA, dS*dA)`` density operator on the composite space,
            indexed row-major as ``i * dA + j``.
        dims: Subsystem dimensions ``(dS, dA)``.
        keep: ``"S"`` to keep the first subsystem, ``"A"`` the second.

    Returns:
        The reduced density operator on the kept subsystem. The trace of
        the input is preserved.

    Raises:
        ValueError: If ``dims`` do not factor the operator dimension or
            ``keep`` is not one of ``"S"``/``"A"``.
    """
    mat = _as_complex_matrix(rho, "density operator")
    d_s, d_a = int(dims[0]), int(dims[1])
    if d_s < 1 or d_a < 1 or d_s * d_a != mat.shape[0]:
        raise ValueError(f"dims {dims} do not match operator dimension {mat.shape[0]}")
    blocks = mat.reshape(d_s, d_a, d_s, d_a)
    if keep == "S":
        return np.trace(blocks, axis1=1, axis2=3)
    if keep == "A":
        return np.trace(blocks, axis1=0, axis2=2)
    raise ValueError(f"keep must be 'S' or 'A', got {keep!r}")


def svd_coeff_matrix(
    coeffs,
) -> tuple[NDArray[np.float64], NDArray[np.complex128], NDArray[np.complex128]]:
    """Singular value decomposition of a bipartite coefficient matrix.

    The input is the ``(dS, dA)`` matrix ``M`` with ``psi = sum_ij M[i, j]
    |i>|j>``. Returns ``(sigma, left, right)`` where ``sigma`` holds the
    non-negative singular values in descending order, ``left[k]`` is the
    k-th orthonormal vector on the first subsystem and ``right[k]`` on the
    second, such that ``M = sum_k sigma[k] * np.outer(left[k], right[k])``.

    Ties between equal singular values are broken deterministically by the
    index of the first significant component of the left vector, so equal
    inputs always produce identical outputs.
    """
    mat = np.asarray(coeffs, dtype=complex)
    if mat.ndim != 2 or mat.size == 0:
        raise ValueError(f"coefficient matrix must be 2-d and non-empty, got shape {mat.shape}")
    u, sigma, vh = np.linalg.svd(mat, full_matrices=False)
    left = u.T.copy()
    right = vh.copy()

    # Fix the overall phase of each pair: first significant component of the
    # left vector is made real non-negative, compensated on the right vector
    # so the reconstruction is unchanged.
    for k in range(sigma.size):
        idx = np.flatnonzero(np.abs(left[k]) > TOL_NORM)
        if idx.size:
            pivot = left[k][idx[0]]
            phase = pivot / abs(pivot)
            left[k] = left[k] * np.conj(phase)
            right[k] = right[k] * phase

    # Deterministic order inside groups of equal singular values.
    order = _tie_break_order(sigma, left)
    return sigma[order], left[order], right[order]


def _tie_break_order(sigma: NDArray[np.float64], left: NDArray[np.complex128]) -> NDArray[np.intp]:
    def first_support(vec: NDArray[np.complex128]) -> int:
        idx = np.flatnonzero(np.abs(vec) > TOL_NORM)
        return int(idx[0]) if idx.size else vec.size

    order = np.arange(sigma.size)
    start = 0
    while start < sigma.size:
        stop = start + 1
        while stop < sigma.size and abs(sigma[stop] - sigma[start]) < TOL_NORM:
            stop += 1
        if stop - start > 1:
            group = order[start:stop]
            keys = [first_support(left[k]) for k in group]
            order[start:stop] = group[np.argsort(keys, kind="stable")]
        start = stop
    return order


def purity(rho) -> float:
    """Return ``Tr(rho^2)``, which lies in ``[1/dim, 1]`` for a valid state."""
    mat = _as_complex_matrix(rho, "density operator")
    return float(np.trace(mat @ mat).real)


@dataclass(frozen=True)
class ValidityReport:
    """Deviations of a matrix from the density-operator invariants.

    Each deviation is compared against the module tolerances; ``ok`` is the
    conjunction of the three individual checks.
    """

    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float
    tol_hermiticity: float = TOL_HERM
    tol_trace: float = TOL_HERM
    psd_slack: float = PSD_SLACK

    @property
    def hermitian(self) -> bool:
        return self.hermiticity_deviation <= self.tol_hermiticity

    @property
    def unit_trace(self) -> bool:
        return self.trace_deviation <= self.tol_trace

    @property
    def positive(self) -> bool:
        return self.min_eigenvalue >= -self.psd_slack

    @property
    def ok(self) -> bool:
        return self.hermitian and self.unit_trace and self.positive

    def __str__(self) -> str:
        marks = {True: "ok", False: "FAIL"}
        return (
            f"hermiticity {self.hermiticity_deviation:.3e} [{marks[self.hermitian]}], "
            f"trace {self.trace_deviation:.3e} [{marks[self.unit_trace]}], "
            f"min eigenvalue {self.min_eigenvalue:.3e} [{marks[self.positive]}]"
        )


def validate(rho) -> ValidityReport:
    """Check Hermiticity, unit trace and positivity of a square matrix.

    Never raises on invariant violations; the caller inspects the report.
    The minimum eigenvalue is taken from the Hermitian part of the matrix.
    """
    mat = _as_complex_matrix(rho, "density operator")
    herm_dev = float(np.max(np.abs(mat - mat.conj().T)))
    trace_dev = abs(float(np.trace(mat).real) - 1.0) + abs(float(np.trace(mat).imag))
    hermitian_part = (mat + mat.conj().T) / 2.0
    min_eig = float(np.linalg.eigvalsh(hermitian_part)[0])
    return ValidityReport(herm_dev, trace_dev, min_eig)


def require_density(rho, name: str = "density operator") -> NDArray[np.complex128]:
    """Coerce to a complex matrix and raise unless it is a valid state."""
    mat = _as_complex_matrix(rho, name)
    report = validate(mat)
    if not report.ok:
        raise ValueError(f"{name} violates density-operator invariants: {report}")
    return mat
