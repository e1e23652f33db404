"""Multi-start derivative-free maximization with constraint-free parameterizations.

Feasibility is enforced by the decoders, never by penalties: decode_p maps any
real vector to a positive matrix with Tr[P^2] = 1, and decode_pure_state maps
any real vector to a normalized state vector. Starts are deterministic, keyed
by (seed, start index), so identical configurations reproduce identical runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.optimize import minimize

from .errors import DimensionMismatch, OptimizerFailure

# Simplex displacement tolerance; values near a smooth maximum are quadratically
# flat, so 1e-8 in parameters is far below the 1e-9 value tolerance.
_XATOL = 1e-8


@dataclass(frozen=True)
class OptimizerConfig:
    """Knobs for maximize. Defaults suit the d <= 4 problems in this package."""

    num_starts: int = 32
    max_iters: int = 2000
    ftol: float = 1e-9
    seed: int = 0

    def __post_init__(self):
        if self.num_starts < 1:
            raise ValueError("num_starts must be at least 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if not self.ftol > 0:
            raise ValueError("ftol must be positive")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")


@dataclass(frozen=True)
class MaximizeSummary:
    """What happened across all starts of one maximize call."""

    n_starts: int
    best_start: int
    best_value: float
    converged: bool
    n_evaluations: int
    start_values: tuple[float, ...]
    failed_starts: tuple[int, ...]


class MaximizeResult(NamedTuple):
    value: float
    params: np.ndarray
    summary: MaximizeSummary


def _start_point(seed: int, index: int, dim_params: int) -> np.ndarray:
    # Counter-based generator keyed by (seed, start index): no sequential state
    # shared between starts, so any start can be reproduced in isolation.
    rng = np.random.Generator(np.random.Philox(key=(int(seed) << 64) + int(index)))
    return rng.uniform(-1.0, 1.0, size=dim_params)


class _EvaluationFailure(Exception):
    pass


def maximize(
    objective: Callable[[np.ndarray], float],
    dim_params: int,
    config: OptimizerConfig | None = None,
    seed_points: Sequence[np.ndarray] = (),
) -> MaximizeResult:
    """Best value of `objective` over num_starts independent simplex searches.

    The first starts come from seed_points (clipped to num_starts); the rest
    are uniform in [-1, 1]^dim_params from the per-start generator. Each local
    search runs until its value spread drops below ftol or max_iters is hit,
    then is restarted once from its own best point to polish. Raises
    OptimizerFailure only if every start fails to produce a finite value.
    """
    config = config or OptimizerConfig()

    def negated(theta: np.ndarray) -> float:
        value = objective(theta)
        if not np.isfinite(value):
            raise _EvaluationFailure(f"objective returned {value!r}")
        return -float(value)

    options = {
        "maxiter": config.max_iters,
        "maxfev": 4 * config.max_iters,
        "fatol": config.ftol,
        "xatol": _XATOL,
    }

    best_value = -np.inf
    best_params: np.ndarray | None = None
    best_start = -1
    best_converged = False
    start_values: list[float] = []
    failed: list[int] = []
    n_evaluations = 0

    for index in range(config.num_starts):
        if index < len(seed_points):
            x0 = np.asarray(seed_points[index], dtype=float).reshape(-1)
            if x0.size != dim_params:
                raise DimensionMismatch(
                    f"seed point of length {x0.size}, expected {dim_params}"
                )
        else:
            x0 = _start_point(config.seed, index, dim_params)
        try:
            res = minimize(negated, x0, method="Nelder-Mead", options=options)
            n_evaluations += res.nfev
            # one polish pass from the found vertex; a fresh simplex often
            # shaves the last few digits
            res2 = minimize(negated, res.x, method="Nelder-Mead", options=options)
            n_evaluations += res2.nfev
        except _EvaluationFailure:
            failed.append(index)
            start_values.append(float("nan"))
            continue
        if res2.fun <= res.fun:
            value, params, converged = -res2.fun, res2.x, bool(res2.success)
        else:
            value, params, converged = -res.fun, res.x, bool(res.success)
        start_values.append(float(value))
        if value > best_value:
            best_value = float(value)
            best_params = params
            best_start = index
            best_converged = converged

    if best_params is None:
        raise OptimizerFailure("every start failed to evaluate the objective")

    summary = MaximizeSummary(
        n_starts=config.num_starts,
        best_start=best_start,
        best_value=best_value,
        converged=best_converged,
        n_evaluations=n_evaluations,
        start_values=tuple(start_values),
        failed_starts=tuple(failed),
    )
    return MaximizeResult(value=best_value, params=best_params, summary=summary)


def decode_p(theta, d: int) -> np.ndarray:
    """Map d^2 reals to a positive d x d matrix with Tr[P^2] = 1 exactly.

    Builds a lower-triangular L (first d entries squared onto the diagonal,
    the rest filling the strict lower triangle as re/im pairs, row by row)
    and returns L L^dag normalized in Frobenius norm. theta = (1, 0, ..., 0)
    decodes to the rank-one |0><0|; ones on the first d slots decode to the
    maximally mixed direction I/sqrt(d).
    """
    theta = np.asarray(theta, dtype=float).reshape(-1)
    d = int(d)
    if theta.size != d * d:
        raise DimensionMismatch(f"theta of length {theta.size}, expected {d * d}")
    ell = np.zeros((d, d), dtype=complex)
    for i in range(d):
        ell[i, i] = theta[i] ** 2
    pos = d
    for i in range(1, d):
        for j in range(i):
            ell[i, j] = theta[pos] + 1j * theta[pos + 1]
            pos += 2
    gram = ell @ ell.conj().T
    norm = float(np.linalg.norm(gram))
    if norm == 0.0:
        # all-zero theta carries no direction; fall back to maximally mixed
        return np.eye(d, dtype=complex) / np.sqrt(d)
    return gram / norm


def decode_pure_state(theta, d: int) -> np.ndarray:
    """Map 2d reals (real parts, then imaginary parts) to a normalized state vector.

    The global phase is fixed by making the first nonzero amplitude real and
    nonnegative. An all-zero theta falls back to the first basis state.
    """
    theta = np.asarray(theta, dtype=float).reshape(-1)
    d = int(d)
    if theta.size != 2 * d:
        raise DimensionMismatch(f"theta of length {theta.size}, expected {2 * d}")
    v = theta[:d] + 1j * theta[d:]
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        v = np.zeros(d, dtype=complex)
        v[0] = 1.0
        return v
    v = v / norm
    for amp in v:
        if amp != 0:
            v = v * (amp.conjugate() / abs(amp))
            break
    return v
