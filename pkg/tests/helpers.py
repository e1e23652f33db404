"""Random-object generators shared across the test modules.

Every helper takes an explicit numpy Generator, so each test file owns its
seeds and reruns stay bit-identical.
"""

import numpy as np

from opdisc import DiscriminationProblem, TwoOutcomePovm, make_operation


def haar_unitary(d, rng):
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    # fix the phase freedom of QR so the distribution is Haar
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_pure_state(d, rng):
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_density(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_prob_vector(n, rng):
    w = rng.uniform(0.0, 1.0, size=n)
    return w / w.sum()


def random_kraus_operation(d, n_kraus, rng):
    # columns of a Haar-ish isometry, cut into d x d blocks: completeness is
    # exact by construction
    z = rng.standard_normal((n_kraus * d, d)) + 1j * rng.standard_normal((n_kraus * d, d))
    q, _ = np.linalg.qr(z)
    return make_operation([q[i * d:(i + 1) * d, :] for i in range(n_kraus)])


def random_qubit_problem(rng):
    op1 = random_kraus_operation(2, int(rng.integers(1, 5)), rng)
    op2 = random_kraus_operation(2, int(rng.integers(1, 5)), rng)
    return DiscriminationProblem(op1, op2, float(rng.uniform(0.05, 0.95)))


def random_two_outcome_povm(d, rng):
    u = haar_unitary(d, rng)
    evals = rng.uniform(0.0, 1.0, size=d)
    pi1 = (u * evals) @ u.conj().T
    return TwoOutcomePovm(pi1=pi1, pi2=np.eye(d) - pi1)
