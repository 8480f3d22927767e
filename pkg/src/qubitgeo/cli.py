"""Batch command line: classify, construct and check qubit states.

State files are JSON documents {"qubits": n, "amplitudes": [[re, im], ...]}
with amplitudes in big-endian basis order (index = 4A + 2B + C for three
qubits; qubit 1 is the leftmost tensor slot).  Numbers are printed with 17
significant digits so emitted files re-parse bit-exactly.

Exit codes: 0 success, 1 input error, 2 semantic refusal (e.g. factoring
an entangled state), 3 invariance violation from orbit-check.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reports
from .statefile import StateFileError, dumps_json, loads_state, state_to_doc
from .two_qubit import NotProductStateError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUSED = 2
EXIT_VIOLATION = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the exit-code contract
    # reserves 2 for semantic refusals, so route usage errors to 1 instead.
    def error(self, message):
        raise _UsageError(message)


_GLOBAL_DEFAULTS = {"tol": 1e-10, "seed": 0, "output": "-", "format": "json"}


def _build_parser() -> _Parser:
    # the global flags are valid both before and after the subcommand, so
    # they live on a shared parent with SUPPRESS defaults (a subparser must
    # not clobber a value already parsed from the front of the line)
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="membership/refusal tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for random draws (default 0)")
    common.add_argument("--output", default=argparse.SUPPRESS,
                        help="output path, or - for stdout (default)")
    common.add_argument("--format", choices=["json"], default=argparse.SUPPRESS,
                        help="output format (json)")

    parser = _Parser(prog="qubitgeo", description=__doc__, parents=[common],
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="SLOCC class and memberships of a 3-qubit state")
    p.add_argument("file", help="3-qubit state file, or - for stdin")

    p = sub.add_parser("invariants", parents=[common],
                       help="invariants appropriate to the qubit count")
    p.add_argument("file")

    p = sub.add_parser("construct", parents=[common],
                       help="emit a canonical state as a state file")
    p.add_argument("name", choices=list(reports.CONSTRUCT_NAMES))
    p.add_argument("--theta", type=float, default=0.0, help="polar angle in radians")
    p.add_argument("--phi", type=float, default=0.0, help="azimuth in radians")
    p.add_argument("--party", type=int, default=1, choices=[1, 2, 3],
                   help="disentangled party for asym-line")
    p.add_argument("--m", type=int, default=0, choices=[-1, 0, 1],
                   help="spin projection for triplet")

    p = sub.add_parser("distance", parents=[common],
                       help="geodesic angle between two states")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = sub.add_parser("bloch", parents=[common],
                       help="Bloch vector of a 1-qubit state")
    p.add_argument("file")

    p = sub.add_parser("factor", parents=[common],
                       help="split a 2-qubit product state into factors")
    p.add_argument("file")

    p = sub.add_parser("orbit-check", parents=[common],
                       help="class preservation under random local ops")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("random", parents=[common],
                       help="emit a seeded random state file")
    p.add_argument("--qubits", type=int, default=3, choices=[1, 2, 3])

    return parser


def _read_state(path: str, qubits: int | None = None):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise StateFileError(f"cannot read {path}: {exc}") from exc
    return loads_state(text, qubits=qubits)


def _emit(doc: dict, output: str) -> None:
    text = dumps_json(doc) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _run(args) -> int:
    if args.command == "classify":
        _emit(reports.classify_report(_read_state(args.file, qubits=3), tol=args.tol),
              args.output)
    elif args.command == "invariants":
        _emit(reports.invariants_report(_read_state(args.file), tol=args.tol),
              args.output)
    elif args.command == "construct":
        state = reports.construct_state(
            args.name, theta=args.theta, phi=args.phi, party=args.party, m=args.m
        )
        _emit(state_to_doc(state), args.output)
    elif args.command == "distance":
        a = _read_state(args.file_a)
        b = _read_state(args.file_b)
        _emit(reports.distance_report(a, b), args.output)
    elif args.command == "bloch":
        _emit(reports.bloch_report(_read_state(args.file, qubits=1)), args.output)
    elif args.command == "factor":
        _emit(reports.factor_report(_read_state(args.file, qubits=2)), args.output)
    elif args.command == "orbit-check":
        if args.trials < 1:
            raise _UsageError("--trials must be at least 1")
        report = reports.orbit_report(
            _read_state(args.file, qubits=3), trials=args.trials, seed=args.seed
        )
        _emit(report, args.output)
        if not report["class_preserved"]:
            return EXIT_VIOLATION
    elif args.command == "random":
        _emit(reports.random_state_doc(args.qubits, args.seed), args.output)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        for name, value in _GLOBAL_DEFAULTS.items():
            if not hasattr(args, name):
                setattr(args, name, value)
        return _run(args)
    except NotProductStateError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (_UsageError, StateFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
