"""Command-line front end.

Three subcommands:

* ``pauli``    closed forms for two qubit Pauli channels given as weight vectors.
* ``general``  two channels from spec files; closed forms when both are
               recognized as mixtures of one orthogonal unitary family,
               the multi-start optimizer otherwise.
* ``oracle``   naive brute-force reference values for two channels (d <= 4).

Channel spec files are JSON documents:

    {"dim": 2, "kind": "kraus", "kraus": [[[ [re, im], ... ], ...], ...]}
    {"dim": 2, "kind": "pauli", "q": [0.7, 0.1, 0.1, 0.1]}
    {"dim": 3, "kind": "weyl", "q": [0.9, 0.0125, ...]}        # d^2 weights
    {"dim": 3, "kind": "depolarizing"}
    {"dim": 2, "kind": "unitary", "u": [[ [re, im], ... ], ...]}

Results are printed as a JSON document with a fixed key order; numbers are
decimal strings with 10 significant digits so output is diff-stable. Weight
vectors are accepted when they sum to 1 within 1e-9 and are renormalized
exactly before use. Exit codes: 0 on success, 2 on any parse or validation
problem, 3 when the optimizer fails outright.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .channels import (
    QuantumOperation,
    RandomUnitaryChannel,
    make_operation,
    pauli_channel,
    weyl_channel,
)
from .config import TOLERANCES
from .discrimination import (
    DiscriminationProblem,
    bound_max_entangled,
    pauli_delta_summary,
    pe_entangled,
    pe_random_unitary_exact,
    pe_unentangled,
)
from .errors import OpdiscError, OptimizerFailure
from .linalg import is_unitary
from .optimizer import OptimizerConfig
from .oracle import brute_force_entangled, brute_force_unentangled

# Weight vectors typed on a command line get this much slack before rejection.
_CLI_SUM_TOL = 1e-9

_KINDS = ("kraus", "pauli", "weyl", "depolarizing", "unitary")


def _fmt(x: float) -> str:
    return f"{float(x):.10g}"


@dataclass
class ParsedChannel:
    """A channel spec file after validation.

    pauli_q is set when the channel is a qubit Pauli mixture; family is set
    when it mixes a shift-phase (orthogonal) unitary family. Either enables
    the matching closed form when both inputs carry it.
    """

    kind: str
    dim: int
    operation: QuantumOperation
    pauli_q: np.ndarray | None = None
    family: RandomUnitaryChannel | None = None


def _normalize_weights(q, length: int, what: str) -> np.ndarray:
    q = np.asarray(q, dtype=float).reshape(-1)
    if q.size != length:
        raise ValueError(f"{what}: expected {length} entries, got {q.size}")
    if np.min(q) < 0.0:
        raise ValueError(f"{what}: negative entry {float(np.min(q))!r}")
    total = float(np.sum(q))
    if abs(total - 1.0) > _CLI_SUM_TOL:
        raise ValueError(f"{what}: entries sum to {total!r}, not 1")
    return q / total


def _parse_weights_arg(text: str, what: str, length: int) -> np.ndarray:
    try:
        values = [float(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"{what}: expected comma-separated decimals, got {text!r}") from None
    return _normalize_weights(values, length, what)


def _parse_p1(value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"--p1 must lie in [0, 1], got {value!r}")
    return float(value)


def _parse_matrix(entries, what: str) -> np.ndarray:
    if not isinstance(entries, list) or not entries:
        raise ValueError(f"{what}: expected a list of rows")
    rows = []
    width = None
    for row in entries:
        if not isinstance(row, list) or not row:
            raise ValueError(f"{what}: each row must be a nonempty list")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"{what}: ragged rows")
        parsed = []
        for entry in row:
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(part, (int, float)) for part in entry)
            ):
                raise ValueError(f"{what}: entries must be [re, im] pairs")
            parsed.append(complex(entry[0], entry[1]))
        rows.append(parsed)
    return np.array(rows, dtype=complex)


def parse_channel_file(path: str) -> ParsedChannel:
    """Read, validate and build one channel from a spec file."""
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    kind = doc.get("kind")
    if kind not in _KINDS:
        raise ValueError(f"{path}: kind must be one of {', '.join(_KINDS)}; got {kind!r}")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 2:
        raise ValueError(f"{path}: dim must be an integer >= 2, got {dim!r}")

    if kind == "kraus":
        if "kraus" not in doc:
            raise ValueError(f"{path}: kind kraus needs a 'kraus' list")
        matrices = doc["kraus"]
        if not isinstance(matrices, list) or not matrices:
            raise ValueError(f"{path}: 'kraus' must be a nonempty list of matrices")
        kraus = [_parse_matrix(m, f"{path}: kraus[{i}]") for i, m in enumerate(matrices)]
        for i, k in enumerate(kraus):
            if k.shape != (dim, dim):
                raise ValueError(f"{path}: kraus[{i}] is {k.shape[0]}x{k.shape[1]}, dim is {dim}")
        return ParsedChannel(kind=kind, dim=dim, operation=make_operation(kraus))

    if kind == "pauli":
        if dim != 2:
            raise ValueError(f"{path}: kind pauli requires dim 2, got {dim}")
        q = _normalize_weights(doc.get("q", ()), 4, f"{path}: q")
        return ParsedChannel(
            kind=kind,
            dim=2,
            operation=pauli_channel(q),
            pauli_q=q,
        )

    if kind == "weyl":
        q = _normalize_weights(doc.get("q", ()), dim * dim, f"{path}: q")
        family = weyl_channel(dim, q)
        return ParsedChannel(kind=kind, dim=dim, operation=family.as_operation(), family=family)

    if kind == "depolarizing":
        q = np.full(dim * dim, 1.0 / (dim * dim))
        family = weyl_channel(dim, q)
        pauli_q = np.full(4, 0.25) if dim == 2 else None
        return ParsedChannel(
            kind=kind,
            dim=dim,
            operation=family.as_operation(),
            pauli_q=pauli_q,
            family=family,
        )

    # kind == "unitary"
    if "u" not in doc:
        raise ValueError(f"{path}: kind unitary needs a 'u' matrix")
    u = _parse_matrix(doc["u"], f"{path}: u")
    if u.shape != (dim, dim):
        raise ValueError(f"{path}: u is {u.shape[0]}x{u.shape[1]}, dim is {dim}")
    if not is_unitary(u):
        raise ValueError(f"{path}: u is not unitary within tolerance")
    return ParsedChannel(kind=kind, dim=dim, operation=make_operation([u]))


def operation_to_spec(op: QuantumOperation) -> dict:
    """ChannelSpec document (kind kraus, full precision) for an operation."""
    return {
        "dim": op.dim,
        "kind": "kraus",
        "kraus": [
            [[[float(entry.real), float(entry.imag)] for entry in row] for row in k]
            for k in op.kraus
        ],
    }


def _tolerances_doc() -> dict:
    return {
        "hermiticity": _fmt(TOLERANCES.hermiticity),
        "reconstruction": _fmt(TOLERANCES.reconstruction),
        "optimizer": _fmt(TOLERANCES.optimizer),
    }


def cmd_pauli(args: argparse.Namespace) -> dict:
    """Closed-form report for two qubit Pauli channels."""
    q1 = _parse_weights_arg(args.q1, "--q1", 4)
    q2 = _parse_weights_arg(args.q2, "--q2", 4)
    p1 = _parse_p1(args.p1)
    summary = pauli_delta_summary(q1, q2, p1)
    doc = {
        "pe_entangled": _fmt(summary.pe_entangled),
        "pe_unentangled": _fmt(summary.pe_unentangled),
        "r": [_fmt(x) for x in summary.r],
        "M": _fmt(summary.m),
        "det_sign": summary.det_sign,
        "entanglement_needed": summary.entanglement_needed,
        "optimal_unentangled_axis": summary.optimal_unentangled_axis,
        "method": "closed-form-pauli",
        "tolerances": _tolerances_doc(),
    }
    if args.dump_spec:
        doc["channel1_spec"] = operation_to_spec(pauli_channel(q1))
        doc["channel2_spec"] = operation_to_spec(pauli_channel(q2))
    return doc


def cmd_general(args: argparse.Namespace) -> dict:
    """Discrimination report for two channels given as spec files."""
    ch1 = parse_channel_file(args.file1)
    ch2 = parse_channel_file(args.file2)
    p1 = _parse_p1(args.p1)
    config = OptimizerConfig(num_starts=args.starts, seed=args.seed)
    prob = DiscriminationProblem(ch1.operation, ch2.operation, p1)

    lower = None
    if ch1.pauli_q is not None and ch2.pauli_q is not None:
        summary = pauli_delta_summary(ch1.pauli_q, ch2.pauli_q, p1)
        method = "closed-form-pauli"
        ent, unent = summary.pe_entangled, summary.pe_unentangled
        lower = ent
        converged = True
    elif ch1.family is not None and ch2.family is not None:
        method = "closed-form-orthogonal"
        ent = pe_random_unitary_exact(ch1.family, ch2.family, p1)
        lower = ent
        # no closed form for the unentangled value above the qubit case
        result_u = pe_unentangled(prob, config)
        unent = result_u.pe_unentangled
        converged = result_u.diagnostics is None or result_u.diagnostics.converged
    else:
        method = "numeric"
        result_e = pe_entangled(prob, config)
        result_u = pe_unentangled(prob, config)
        ent, unent = result_e.pe_entangled, result_u.pe_unentangled
        converged = all(
            r.diagnostics is None or r.diagnostics.converged for r in (result_e, result_u)
        )

    doc = {
        "pe_entangled": _fmt(ent),
        "pe_unentangled": _fmt(unent),
        "upper_bound": _fmt(bound_max_entangled(prob)),
    }
    if lower is not None:
        doc["lower_bound"] = _fmt(lower)
    doc.update(
        {
            "method": method,
            "optimizer": {
                "starts": int(args.starts),
                "seed": int(args.seed),
                "converged": bool(converged),
            },
            "tolerances": _tolerances_doc(),
        }
    )
    if args.dump_spec:
        doc["channel1_spec"] = operation_to_spec(ch1.operation)
        doc["channel2_spec"] = operation_to_spec(ch2.operation)
    return doc


def cmd_oracle(args: argparse.Namespace) -> dict:
    """Brute-force reference values for two channels given as spec files."""
    ch1 = parse_channel_file(args.file1)
    ch2 = parse_channel_file(args.file2)
    p1 = _parse_p1(args.p1)
    prob = DiscriminationProblem(ch1.operation, ch2.operation, p1)
    unent = brute_force_unentangled(prob, args.grid, seed=args.seed)
    ent = brute_force_entangled(prob, args.samples, seed=args.seed)
    return {
        "oracle_pe_entangled": _fmt(ent),
        "oracle_pe_unentangled": _fmt(unent),
        "grid_density": int(args.grid),
        "samples": int(args.samples),
        "seed": int(args.seed),
        "tolerances": _tolerances_doc(),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opdisc",
        description="Minimal-error discrimination of two quantum operations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pauli = sub.add_parser("pauli", help="closed forms for two qubit Pauli channels")
    pauli.add_argument("--q1", required=True, help="four comma-separated weights over I,x,y,z")
    pauli.add_argument("--q2", required=True, help="four comma-separated weights over I,x,y,z")
    pauli.add_argument("--p1", type=float, default=0.5, help="prior of the first channel")
    pauli.add_argument("--dump-spec", action="store_true", help="embed Kraus spec documents in the output")
    pauli.set_defaults(handler=cmd_pauli)

    general = sub.add_parser("general", help="discriminate two channels from spec files")
    general.add_argument("--file1", required=True, help="channel spec file for the first channel")
    general.add_argument("--file2", required=True, help="channel spec file for the second channel")
    general.add_argument("--p1", type=float, default=0.5, help="prior of the first channel")
    general.add_argument("--starts", type=int, default=32, help="optimizer starts")
    general.add_argument("--seed", type=int, default=0, help="optimizer seed")
    general.add_argument("--dump-spec", action="store_true", help="embed Kraus spec documents in the output")
    general.set_defaults(handler=cmd_general)

    oracle = sub.add_parser("oracle", help="brute-force reference values (d <= 4)")
    oracle.add_argument("--file1", required=True, help="channel spec file for the first channel")
    oracle.add_argument("--file2", required=True, help="channel spec file for the second channel")
    oracle.add_argument("--p1", type=float, default=0.5, help="prior of the first channel")
    oracle.add_argument("--grid", type=int, default=200, help="grid density for the unentangled search")
    oracle.add_argument("--samples", type=int, default=500, help="sample count for the entangled search")
    oracle.add_argument("--seed", type=int, default=0, help="sampling seed")
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        doc = args.handler(args)
    except OptimizerFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OpdiscError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(doc, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
