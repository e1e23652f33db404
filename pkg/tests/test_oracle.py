"""Tests for the brute-force reference implementations.

The oracles are the ground truth for everything else, so they get checked
against hand arithmetic and trivial identities only.
"""

import numpy as np
import pytest

from opdisc import (
    DimensionMismatch,
    DiscriminationProblem,
    InvalidPovm,
    OptimizerConfig,
    TwoOutcomePovm,
    brute_force_entangled,
    brute_force_unentangled,
    helstrom,
    make_operation,
    pauli_channel,
    pe_pauli_entangled,
    pe_unentangled,
    povm_error,
    weyl_channel,
)

from helpers import random_prob_vector, random_two_outcome_povm

KET0 = np.diag([1.0, 0.0]).astype(complex)
PLUS = np.full((2, 2), 0.5, dtype=complex)

# 1/2 (1 - 1/sqrt 2), the minimum error for |0><0| vs |+><+| at even priors
HELSTROM_PLUS = 0.14644660940672624


def _identity_vs_depolarizing(p1=0.5):
    return DiscriminationProblem(pauli_channel([1, 0, 0, 0]), pauli_channel([0.25] * 4), p1)


def _identical_problem(p1):
    op = pauli_channel([0.5, 0.5, 0, 0])
    return DiscriminationProblem(op, op, p1)


# --- povm_error ---

def test_povm_error_always_guess_first():
    povm = TwoOutcomePovm(pi1=np.eye(2), pi2=np.zeros((2, 2)))
    assert abs(povm_error(KET0, PLUS, 0.3, povm) - 0.7) < 1e-15


def test_povm_error_at_helstrom_measurement():
    pe, povm = helstrom(KET0, PLUS, 0.5)
    assert abs(pe - HELSTROM_PLUS) < 1e-14
    assert abs(povm_error(KET0, PLUS, 0.5, povm) - pe) < 1e-12


def test_povm_error_never_beats_helstrom():
    rng = np.random.default_rng(31)
    pe, _ = helstrom(KET0, PLUS, 0.5)
    for _ in range(40):
        err = povm_error(KET0, PLUS, 0.5, random_two_outcome_povm(2, rng))
        assert err >= pe - 1e-12
        assert err >= HELSTROM_PLUS - 1e-7


def test_povm_error_rejects_bad_measurements():
    with pytest.raises(InvalidPovm):
        povm_error(KET0, PLUS, 0.5, TwoOutcomePovm(pi1=np.diag([2.0, 0.0]), pi2=np.diag([-1.0, 1.0])))
    with pytest.raises(InvalidPovm):
        # sums to 2I
        povm_error(KET0, PLUS, 0.5, TwoOutcomePovm(pi1=np.eye(2), pi2=np.eye(2)))
    with pytest.raises(DimensionMismatch):
        TwoOutcomePovm(pi1=np.eye(2), pi2=np.eye(3))
    with pytest.raises(ValueError):
        povm_error(KET0, PLUS, 1.5, TwoOutcomePovm(pi1=np.eye(2), pi2=np.zeros((2, 2))))


# --- unentangled brute force ---

def test_grid_identical_channels_is_flat():
    prob = _identical_problem(0.3)
    assert abs(brute_force_unentangled(prob, 20) - 0.3) < 1e-12


def test_grid_identity_vs_depolarizing():
    got = brute_force_unentangled(_identity_vs_depolarizing(), 200)
    assert abs(got - 0.25) < 2e-3


def test_grid_perfect_discrimination_family():
    prob = DiscriminationProblem(
        pauli_channel([0, 1 / 3, 1 / 3, 1 / 3]), pauli_channel([1, 0, 0, 0]), 0.5
    )
    assert abs(brute_force_unentangled(prob, 200) - 1 / 6) < 2e-3


def test_sampled_qutrit_never_undercuts_library():
    ch_id = weyl_channel(3, [1.0] + [0.0] * 8).as_operation()
    ch_dep = weyl_channel(3, np.full(9, 1.0 / 9.0)).as_operation()
    prob = DiscriminationProblem(ch_id, ch_dep, 0.5)
    oracle = brute_force_unentangled(prob, 6, seed=5)
    library = pe_unentangled(prob, OptimizerConfig(num_starts=8)).pe_unentangled
    assert oracle >= library - 1e-9


def test_grid_rejects_bad_inputs():
    with pytest.raises(ValueError):
        brute_force_unentangled(_identity_vs_depolarizing(), 1)
    from opdisc import UnsupportedDimension

    ch5 = weyl_channel(5, np.full(25, 1.0 / 25.0)).as_operation()
    id5 = make_operation([np.eye(5)])
    with pytest.raises(UnsupportedDimension):
        brute_force_unentangled(DiscriminationProblem(id5, ch5, 0.5), 4)


# --- entangled brute force ---

def test_samples_identity_vs_depolarizing():
    # any maximally entangled input attains the optimum, so few samples suffice
    got = brute_force_entangled(_identity_vs_depolarizing(), 10)
    assert abs(got - 0.125) < 1e-6


def test_samples_identical_channels():
    assert abs(brute_force_entangled(_identical_problem(0.4), 5) - 0.4) < 1e-12


def test_samples_match_pauli_closed_form():
    rng = np.random.default_rng(32)
    for _ in range(3):
        q1 = random_prob_vector(4, rng)
        q2 = random_prob_vector(4, rng)
        p1 = float(rng.uniform(0.1, 0.9))
        prob = DiscriminationProblem(pauli_channel(q1), pauli_channel(q2), p1)
        got = brute_force_entangled(prob, 10, seed=2)
        assert abs(got - pe_pauli_entangled(q1, q2, p1)) < 1e-6


def test_samples_deterministic_per_seed():
    prob = _identity_vs_depolarizing(0.35)
    assert brute_force_entangled(prob, 25, seed=7) == brute_force_entangled(prob, 25, seed=7)


def test_samples_reject_bad_inputs():
    from opdisc import UnsupportedDimension

    with pytest.raises(ValueError):
        brute_force_entangled(_identity_vs_depolarizing(), 0)
    ch5 = weyl_channel(5, np.full(25, 1.0 / 25.0)).as_operation()
    id5 = make_operation([np.eye(5)])
    with pytest.raises(UnsupportedDimension):
        brute_force_entangled(DiscriminationProblem(id5, ch5, 0.5), 5)
