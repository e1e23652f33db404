"""Quantum operations in Kraus form, plus the Pauli / shift-phase channel families.

The double-ket convention used throughout: a d x d matrix A corresponds to the
bipartite vector |A>> with component A[n, m] at index n*d + m, so
|A>> = (A x I)|I>> = (I x A^T)|I>>  and  <<A|B>> = Tr[A^dag B].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import (
    COMPLETENESS_TOL,
    PROBABILITY_TOL,
    STATE_POSITIVITY_FLOOR,
    TOLERANCES,
    UNITARITY_TOL,
)
from .errors import (
    CompletenessViolation,
    DimensionMismatch,
    InvalidProbabilityVector,
    InvalidState,
    NonSquare,
    UnsupportedDimension,
)
from .linalg import dagger, is_hermitian, is_unitary, mat_to_biket

PAULI_MATRICES: tuple[np.ndarray, ...] = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def check_probability_vector(q, length: int | None = None) -> np.ndarray:
    """Validate nonnegative entries summing to 1; returns the vector as floats."""
    q = np.asarray(q, dtype=float).reshape(-1)
    if length is not None and q.size != length:
        raise InvalidProbabilityVector(f"expected {length} entries, got {q.size}")
    if np.min(q) < -PROBABILITY_TOL:
        raise InvalidProbabilityVector(f"negative entry {float(np.min(q)):.3e}")
    if abs(float(np.sum(q)) - 1.0) > PROBABILITY_TOL:
        raise InvalidProbabilityVector(f"entries sum to {float(np.sum(q))!r}, not 1")
    return q


@dataclass(frozen=True)
class QuantumOperation:
    """A completely positive trace-preserving map given by Kraus operators.

    kraus holds d x d complex matrices K_n with sum K_n^dag K_n = I within
    the completeness tolerance.
    """

    dim: int
    kraus: tuple[np.ndarray, ...]

    def __post_init__(self):
        kraus = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not kraus:
            raise CompletenessViolation("an operation needs at least one Kraus operator")
        d = int(self.dim)
        for k in kraus:
            if k.ndim != 2 or k.shape[0] != k.shape[1]:
                raise NonSquare(f"Kraus operator of shape {k.shape} is not square")
            if k.shape != (d, d):
                raise DimensionMismatch(
                    f"Kraus operator is {k.shape[0]}x{k.shape[1]}, operation is {d}-dimensional"
                )
        total = sum(dagger(k) @ k for k in kraus)
        deviation = float(np.max(np.abs(total - np.eye(d))))
        if deviation > COMPLETENESS_TOL:
            raise CompletenessViolation(
                f"sum K^dag K deviates from identity by {deviation:.3e}"
            )
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "kraus", kraus)


def make_operation(kraus) -> QuantumOperation:
    """Build a validated QuantumOperation from a list of square matrices."""
    kraus = tuple(np.asarray(k, dtype=complex) for k in kraus)
    if not kraus:
        raise CompletenessViolation("an operation needs at least one Kraus operator")
    if kraus[0].ndim != 2 or kraus[0].shape[0] != kraus[0].shape[1]:
        raise NonSquare(f"Kraus operator of shape {kraus[0].shape} is not square")
    return QuantumOperation(dim=kraus[0].shape[0], kraus=kraus)


@dataclass(frozen=True)
class PauliChannel:
    """rho -> sum_a q[a] sigma_a rho sigma_a over {I, sigma_x, sigma_y, sigma_z}."""

    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "q", check_probability_vector(self.q, 4))

    def as_operation(self) -> QuantumOperation:
        """Kraus form, keeping only the strictly positive weights."""
        kraus = tuple(
            np.sqrt(w) * s for w, s in zip(self.q, PAULI_MATRICES) if w > 0
        )
        return QuantumOperation(dim=2, kraus=kraus)


@dataclass(frozen=True)
class RandomUnitaryChannel:
    """rho -> sum_n weights[n] U_n rho U_n^dag for a fixed list of unitaries.

    Zero weights are legal and kept, so two channels over the same family can
    be compared index by index.
    """

    dim: int
    unitaries: tuple[np.ndarray, ...]
    weights: np.ndarray

    def __post_init__(self):
        d = int(self.dim)
        unitaries = tuple(np.asarray(u, dtype=complex) for u in self.unitaries)
        if not unitaries:
            raise CompletenessViolation("a random-unitary channel needs at least one unitary")
        for u in unitaries:
            if u.shape != (d, d):
                raise DimensionMismatch(f"unitary of shape {u.shape} in a {d}-dimensional channel")
            if not is_unitary(u, UNITARITY_TOL):
                raise InvalidState("matrix in the unitary list is not unitary within tolerance")
        weights = check_probability_vector(self.weights)
        if weights.size != len(unitaries):
            raise DimensionMismatch(
                f"{weights.size} weights for {len(unitaries)} unitaries"
            )
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "unitaries", unitaries)
        object.__setattr__(self, "weights", weights)

    def as_operation(self) -> QuantumOperation:
        """Kraus form sqrt(weights[n]) U_n, keeping only the strictly positive weights."""
        kraus = tuple(
            np.sqrt(w) * u for w, u in zip(self.weights, self.unitaries) if w > 0
        )
        return QuantumOperation(dim=self.dim, kraus=kraus)


def pauli_channel(q) -> QuantumOperation:
    """Kraus form of the qubit Pauli channel with weights q over {I, x, y, z}."""
    return PauliChannel(q=np.asarray(q, dtype=float)).as_operation()


def weyl_unitaries(d: int) -> tuple[np.ndarray, ...]:
    """The d^2 shift-phase unitaries U[a*d + b] = sum_k w^(k b) |k+a mod d><k|, w = exp(2 pi i/d).

    They are pairwise orthogonal: Tr[U_m^dag U_n] = d delta_mn. For d = 2 they
    reproduce the Pauli matrices up to phase.
    """
    d = int(d)
    if d < 2:
        raise UnsupportedDimension(f"dimension must be at least 2, got {d}")
    omega = np.exp(2j * np.pi / d)
    family = []
    for a in range(d):
        for b in range(d):
            u = np.zeros((d, d), dtype=complex)
            for k in range(d):
                u[(k + a) % d, k] = omega ** (k * b)
            family.append(u)
    return tuple(family)


def weyl_channel(d: int, q) -> RandomUnitaryChannel:
    """Random-unitary channel over the d^2 shift-phase unitaries with weights q."""
    family = weyl_unitaries(d)
    return RandomUnitaryChannel(dim=d, unitaries=family, weights=check_probability_vector(q, d * d))


def check_density_matrix(rho, d: int) -> np.ndarray:
    """Validate a d x d density matrix (Hermitian, unit trace, positive within tolerance)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (d, d):
        raise DimensionMismatch(f"state of shape {rho.shape} for a {d}-dimensional operation")
    if not is_hermitian(rho, TOLERANCES.hermiticity):
        raise InvalidState("state is not Hermitian within tolerance")
    if abs(float(np.trace(rho).real) - 1.0) > 1e-9 or abs(float(np.trace(rho).imag)) > 1e-9:
        raise InvalidState(f"state trace is {complex(np.trace(rho))}, not 1")
    if float(np.min(np.linalg.eigvalsh(rho))) < -STATE_POSITIVITY_FLOOR:
        raise InvalidState("state has an eigenvalue below the positivity floor")
    return rho


def apply(op: QuantumOperation, rho) -> np.ndarray:
    """Apply the operation to a density matrix: sum_n K_n rho K_n^dag."""
    rho = check_density_matrix(rho, op.dim)
    out = np.zeros((op.dim, op.dim), dtype=complex)
    for k in op.kraus:
        out += k @ rho @ dagger(k)
    return out


def unnormalized_choi(op: QuantumOperation) -> np.ndarray:
    """sum_n |K_n>><<K_n|, the d^2 x d^2 positive operator carrying the whole map.

    Invariant under unitary remixing of the Kraus list; equals d times the
    Choi matrix.
    """
    d2 = op.dim * op.dim
    out = np.zeros((d2, d2), dtype=complex)
    for k in op.kraus:
        v = mat_to_biket(k)
        out += np.outer(v, v.conj())
    return out


def apply_extended(op: QuantumOperation, xi) -> np.ndarray:
    """Output of (E x I) on the bipartite pure state |xi>><<xi|, Tr[xi^dag xi] = 1.

    Computed as (I x xi^T) sum_n |K_n>><<K_n| (I x xi^*), which agrees with
    applying the extended Kraus operators K_n x I directly.
    """
    xi = np.asarray(xi, dtype=complex)
    d = op.dim
    if xi.shape != (d, d):
        raise DimensionMismatch(f"input operator of shape {xi.shape} for dimension {d}")
    norm2 = float(np.trace(dagger(xi) @ xi).real)
    if abs(norm2 - 1.0) > 1e-9:
        raise InvalidState(f"Tr[xi^dag xi] is {norm2!r}, not 1")
    eye = np.eye(d)
    left = np.kron(eye, xi.T)
    return left @ unnormalized_choi(op) @ dagger(left)
