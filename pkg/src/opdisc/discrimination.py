"""Minimal-error discrimination of two quantum operations.

Two figures of merit for a pair of channels with prior p1:

* pe_unentangled: the best error probability using a single pure input state,
  max over psi of 1/2 (1 - ||p1 E1(psi) - p2 E2(psi)||_1).
* pe_entangled: the best error probability when the input may be entangled
  with an ancilla, computed by maximizing ||(I x P) Delta (I x P)||_1 over
  positive P with Tr[P^2] = 1, where Delta = p1 sum |K1>><<K1| - p2 sum
  |K2>><<K2|.

Channels mixing the same orthogonal unitary family (Tr[U_m^dag U_n] =
d delta_mn) admit closed forms: with r_n = p1 q1[n] - p2 q2[n], the entangled
optimum is 1/2 (1 - sum |r_n|), reached by any maximally entangled input.
For qubit Pauli channels the unentangled optimum also closes, with the best
product input an eigenstate of sigma_z, sigma_x or sigma_y; entanglement
strictly helps exactly when r0 r1 r2 r3 < 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import (
    QuantumOperation,
    RandomUnitaryChannel,
    check_density_matrix,
    check_probability_vector,
    unnormalized_choi,
)
from .config import ENTANGLEMENT_GAP, ORTHOGONALITY_TOL
from .errors import DimensionMismatch, FamilyMismatch, NotOrthogonal
from .linalg import dagger, eig_hermitian, mat_to_biket, trace_norm
from .optimizer import MaximizeSummary, OptimizerConfig, decode_p, decode_pure_state, maximize
from .oracle import TwoOutcomePovm

# Unitary lists count as "the same family" only when equal entry by entry.
_FAMILY_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class DiscriminationProblem:
    """Two same-dimension operations and the prior probability of the first."""

    op1: QuantumOperation
    op2: QuantumOperation
    p1: float

    def __post_init__(self):
        if self.op1.dim != self.op2.dim:
            raise DimensionMismatch(f"dimension mismatch: {self.op1.dim} vs {self.op2.dim}")
        if not 0.0 <= self.p1 <= 1.0:
            raise ValueError(f"p1 must lie in [0, 1], got {self.p1!r}")
        object.__setattr__(self, "p1", float(self.p1))

    @property
    def p2(self) -> float:
        return 1.0 - self.p1


@dataclass(frozen=True)
class DiscriminationResult:
    """Output of one discrimination computation; unused fields stay None.

    optimal_xi is the input operator xi (Tr[xi^dag xi] = 1) whose double-ket
    realizes pe_entangled; optimal_pure_input is the state vector realizing
    pe_unentangled. method names the route taken: "numeric",
    "closed-form-pauli" or "closed-form-orthogonal".
    """

    method: str
    pe_entangled: float | None = None
    pe_unentangled: float | None = None
    upper_bound: float | None = None
    lower_bound: float | None = None
    optimal_xi: np.ndarray | None = None
    optimal_pure_input: np.ndarray | None = None
    diagnostics: MaximizeSummary | None = None


@dataclass(frozen=True)
class PauliDiscriminationSummary:
    """Everything the qubit Pauli closed forms produce for one problem.

    r[i] = p1 q1[i] - p2 q2[i] are the prior-weighted weight differences over
    {I, x, y, z}. a = r0 + r3, b = r1 + r2, c = r0 - r3, d = r1 - r2 are the
    entries of the 4 x 4 difference operator in the computational basis. m is
    the largest trace-norm value reachable with a product input, and det_sign
    is the sign of r0 r1 r2 r3: entanglement strictly helps exactly when it
    is negative.
    """

    r: tuple[float, float, float, float]
    a: float
    b: float
    c: float
    d: float
    det_sign: int
    m: float
    pe_entangled: float
    pe_unentangled: float
    optimal_unentangled_axis: str
    entanglement_needed: bool

    @property
    def singular_values(self) -> tuple[float, float, float, float]:
        """(|a+c|, |a-c|, |b+d|, |b-d|), which is (2|r0|, 2|r3|, 2|r1|, 2|r2|)."""
        return (
            abs(self.a + self.c),
            abs(self.a - self.c),
            abs(self.b + self.d),
            abs(self.b - self.d),
        )


def helstrom(rho1, rho2, p1: float) -> tuple[float, TwoOutcomePovm]:
    """Minimum error for two states, 1/2 (1 - ||p1 rho1 - p2 rho2||_1), with its measurement.

    The returned POVM projects onto the positive and negative support of
    p1 rho1 - p2 rho2; the zero eigenspace is assigned to outcome 1.
    """
    if not 0.0 <= p1 <= 1.0:
        raise ValueError(f"p1 must lie in [0, 1], got {p1!r}")
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho1.shape != rho2.shape:
        raise DimensionMismatch(f"states of shapes {rho1.shape} and {rho2.shape}")
    d = rho1.shape[0]
    rho1 = check_density_matrix(rho1, d)
    rho2 = check_density_matrix(rho2, d)
    dec = eig_hermitian(p1 * rho1 - (1.0 - p1) * rho2)
    pe = 0.5 * (1.0 - float(np.sum(np.abs(dec.eigenvalues))))
    keep = dec.eigenvalues >= 0
    v_pos = dec.eigenvectors[:, keep]
    v_neg = dec.eigenvectors[:, ~keep]
    pi1 = v_pos @ dagger(v_pos)
    pi2 = v_neg @ dagger(v_neg)
    return pe, TwoOutcomePovm(pi1=pi1, pi2=pi2)


def delta_operator(prob: DiscriminationProblem) -> np.ndarray:
    """The d^2 x d^2 Hermitian operator p1 sum |K1>><<K1| - p2 sum |K2>><<K2|."""
    return prob.p1 * unnormalized_choi(prob.op1) - prob.p2 * unnormalized_choi(prob.op2)


def bound_max_entangled(prob: DiscriminationProblem) -> float:
    """Error 1/2 (1 - ||Delta||_1 / d) reached by a maximally entangled input.

    An upper bound on pe_entangled, since the optimum minimizes over all
    bipartite inputs. It is tight (and the bound is the exact value) for
    channels mixing one orthogonal unitary family.
    """
    return 0.5 * (1.0 - trace_norm(delta_operator(prob)) / prob.op1.dim)


def _p_seed_points(d: int) -> list[np.ndarray]:
    # start 0: maximally mixed direction (maximally entangled input);
    # start 1: rank-one direction (product input)
    identity = np.concatenate([np.ones(d), np.zeros(d * d - d)])
    rank_one = np.zeros(d * d)
    rank_one[0] = 1.0
    seeds = [identity, rank_one]
    if d == 2:
        # rank-one directions along the other two qubit axes
        seeds.append(np.array([1.0, 0.0, 1.0, 0.0]))
        seeds.append(np.array([1.0, 0.0, 0.0, 1.0]))
    return seeds


def _state_seed_points(d: int) -> list[np.ndarray]:
    basis = np.zeros(2 * d)
    basis[0] = 1.0
    uniform = np.concatenate([np.ones(d), np.zeros(d)])
    seeds = [basis, uniform]
    if d == 2:
        seeds.append(np.array([1.0, 0.0, 0.0, 1.0]))  # (|0> + i|1>)/sqrt(2)
    return seeds


def _apply_kraus(kraus, rho: np.ndarray) -> np.ndarray:
    out = np.zeros_like(rho)
    for k in kraus:
        out += k @ rho @ dagger(k)
    return out


def _degenerate_prior(prob: DiscriminationProblem) -> bool:
    # one channel is certain, so guessing it never errs
    return prob.p1 == 0.0 or prob.p1 == 1.0


def pe_entangled(prob: DiscriminationProblem, config: OptimizerConfig | None = None) -> DiscriminationResult:
    """Numerically minimal error with an entangled input, via the P parameterization.

    Maximizes ||(I x P) Delta (I x P)||_1 over positive P with Tr[P^2] = 1.
    The optimizing input operator is reported as optimal_xi with xi^T = P
    (local unitary freedom fixed to the identity).
    """
    config = config or OptimizerConfig()
    d = prob.op1.dim
    if _degenerate_prior(prob):
        return DiscriminationResult(
            method="numeric",
            pe_entangled=0.0,
            upper_bound=bound_max_entangled(prob),
            optimal_xi=np.eye(d, dtype=complex) / np.sqrt(d),
        )
    delta = delta_operator(prob)
    eye = np.eye(d)

    def objective(theta: np.ndarray) -> float:
        sandwich = np.kron(eye, decode_p(theta, d))
        return trace_norm(sandwich @ delta @ sandwich)

    value, params, summary = maximize(objective, d * d, config, seed_points=_p_seed_points(d))
    p_opt = decode_p(params, d)
    return DiscriminationResult(
        method="numeric",
        pe_entangled=max(0.0, 0.5 * (1.0 - value)),
        upper_bound=bound_max_entangled(prob),
        optimal_xi=p_opt.T.copy(),
        diagnostics=summary,
    )


def pe_unentangled(prob: DiscriminationProblem, config: OptimizerConfig | None = None) -> DiscriminationResult:
    """Numerically minimal error with a single pure input state (no ancilla).

    Maximizes ||p1 E1(psi) - p2 E2(psi)||_1 over pure states; convexity makes
    pure inputs sufficient.
    """
    config = config or OptimizerConfig()
    d = prob.op1.dim
    if _degenerate_prior(prob):
        psi = np.zeros(d, dtype=complex)
        psi[0] = 1.0
        return DiscriminationResult(method="numeric", pe_unentangled=0.0, optimal_pure_input=psi)
    kraus1, kraus2 = prob.op1.kraus, prob.op2.kraus
    p1, p2 = prob.p1, prob.p2

    def objective(theta: np.ndarray) -> float:
        psi = decode_pure_state(theta, d)
        rho = np.outer(psi, psi.conj())
        return trace_norm(p1 * _apply_kraus(kraus1, rho) - p2 * _apply_kraus(kraus2, rho))

    value, params, summary = maximize(objective, 2 * d, config, seed_points=_state_seed_points(d))
    return DiscriminationResult(
        method="numeric",
        pe_unentangled=max(0.0, 0.5 * (1.0 - value)),
        optimal_pure_input=decode_pure_state(params, d),
        diagnostics=summary,
    )


def entanglement_needed_numeric(prob: DiscriminationProblem, config: OptimizerConfig | None = None) -> bool:
    """True when the numeric entangled error beats the unentangled one beyond the gap tolerance."""
    ent = pe_entangled(prob, config).pe_entangled
    un = pe_unentangled(prob, config).pe_unentangled
    return un - ent > ENTANGLEMENT_GAP


def is_orthogonal_unitary_family(channel: RandomUnitaryChannel) -> bool:
    """True when the channel's unitaries satisfy Tr[U_m^dag U_n] = d delta_mn within tolerance."""
    us = channel.unitaries
    d = channel.dim
    for m in range(len(us)):
        for n in range(m, len(us)):
            overlap = complex(np.trace(dagger(us[m]) @ us[n]))
            target = d if m == n else 0.0
            if abs(overlap - target) > ORTHOGONALITY_TOL:
                return False
    return True


def _check_same_family(ch1: RandomUnitaryChannel, ch2: RandomUnitaryChannel) -> None:
    if ch1.dim != ch2.dim:
        raise FamilyMismatch(f"dimension mismatch: {ch1.dim} vs {ch2.dim}")
    if len(ch1.unitaries) != len(ch2.unitaries):
        raise FamilyMismatch(
            f"unitary lists of lengths {len(ch1.unitaries)} and {len(ch2.unitaries)}"
        )
    for n, (u1, u2) in enumerate(zip(ch1.unitaries, ch2.unitaries)):
        if float(np.max(np.abs(u1 - u2))) > _FAMILY_MATCH_TOL:
            raise FamilyMismatch(f"unitary lists differ at index {n}")


def _weight_differences(ch1: RandomUnitaryChannel, ch2: RandomUnitaryChannel, p1: float) -> np.ndarray:
    if not 0.0 <= p1 <= 1.0:
        raise ValueError(f"p1 must lie in [0, 1], got {p1!r}")
    return p1 * ch1.weights - (1.0 - p1) * ch2.weights


def pe_random_unitary_exact(ch1: RandomUnitaryChannel, ch2: RandomUnitaryChannel, p1: float) -> float:
    """Exact entangled error 1/2 (1 - sum |r_n|) for one orthogonal unitary family.

    Requires both channels to mix the same list of unitaries (entrywise) and
    the list to be orthogonal; any maximally entangled input attains the
    optimum, so no ancilla search is needed.
    """
    _check_same_family(ch1, ch2)
    if not is_orthogonal_unitary_family(ch1):
        raise NotOrthogonal("the shared unitary family is not orthogonal")
    r = _weight_differences(ch1, ch2, p1)
    return 0.5 * (1.0 - float(np.sum(np.abs(r))))


def pe_random_unitary_bounds(ch1: RandomUnitaryChannel, ch2: RandomUnitaryChannel, p1: float) -> tuple[float, float]:
    """(lower, upper) bounds on the entangled error for one shared unitary family.

    lower = 1/2 (1 - sum |r_n|); upper = 1/2 (1 - ||Delta||_1 / d), the value
    at a maximally entangled input. They coincide when the family is
    orthogonal; orthogonality is not required here.
    """
    _check_same_family(ch1, ch2)
    r = _weight_differences(ch1, ch2, p1)
    d = ch1.dim
    delta = np.zeros((d * d, d * d), dtype=complex)
    for rn, u in zip(r, ch1.unitaries):
        v = mat_to_biket(u)
        delta += rn * np.outer(v, v.conj())
    lower = 0.5 * (1.0 - float(np.sum(np.abs(r))))
    upper = 0.5 * (1.0 - trace_norm(delta) / d)
    return lower, upper


def pauli_delta_summary(q1, q2, p1: float) -> PauliDiscriminationSummary:
    """Closed-form discrimination data for two qubit Pauli channels.

    With r = p1 q1 - p2 q2 over {I, x, y, z}: the entangled optimum is
    1/2 (1 - sum |r_i|); the best product input is an eigenstate of sigma_z,
    sigma_x or sigma_y, whichever maximizes the matching bracket (ties broken
    in that order); entanglement strictly helps exactly when r0 r1 r2 r3 < 0.
    """
    q1 = check_probability_vector(q1, 4)
    q2 = check_probability_vector(q2, 4)
    if not 0.0 <= p1 <= 1.0:
        raise ValueError(f"p1 must lie in [0, 1], got {p1!r}")
    r = p1 * q1 - (1.0 - p1) * q2
    a = float(r[0] + r[3])
    b = float(r[1] + r[2])
    c = float(r[0] - r[3])
    dd = float(r[1] - r[2])
    product = float(r[0] * r[1] * r[2] * r[3])
    sum_abs = float(np.sum(np.abs(r)))
    candidates = (
        abs(r[0] + r[3]) + abs(r[1] + r[2]),  # sigma_z eigenstate input
        abs(r[0] + r[1]) + abs(r[2] + r[3]),  # sigma_x eigenstate input
        abs(r[0] + r[2]) + abs(r[1] + r[3]),  # sigma_y eigenstate input
    )
    best = 0
    for i in (1, 2):
        if candidates[i] > candidates[best]:
            best = i
    return PauliDiscriminationSummary(
        r=(float(r[0]), float(r[1]), float(r[2]), float(r[3])),
        a=a,
        b=b,
        c=c,
        d=dd,
        det_sign=int(np.sign(product)),
        m=float(candidates[best]),
        pe_entangled=0.5 * (1.0 - sum_abs),
        pe_unentangled=0.5 * (1.0 - float(candidates[best])),
        optimal_unentangled_axis=("z", "x", "y")[best],
        entanglement_needed=product < 0,
    )


def pe_pauli_entangled(q1, q2, p1: float) -> float:
    """Closed-form entangled error for two qubit Pauli channels."""
    return pauli_delta_summary(q1, q2, p1).pe_entangled


def pe_pauli_unentangled(q1, q2, p1: float) -> float:
    """Closed-form unentangled error for two qubit Pauli channels."""
    return pauli_delta_summary(q1, q2, p1).pe_unentangled


def entanglement_needed_pauli(q1, q2, p1: float) -> bool:
    """True when entanglement strictly lowers the error for two qubit Pauli channels."""
    return pauli_delta_summary(q1, q2, p1).entanglement_needed
