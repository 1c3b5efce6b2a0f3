"""Command-line front end.

Subcommands::

    paulidecomp decompose GRAPH PAULI [--strategy S] [--vm M] [--verify MODE]
    paulidecomp lhz PROBLEM [--verify MODE]
    paulidecomp baseline GRAPH PAULI [--variant V]

Circuits go to ``--output`` (default ``-``, standard output). Statistics go
to standard output, or to standard error when the circuit itself is written
to standard output.

Exit codes: 0 success, 2 usage, 3 unparsable or mis-sized input, 4 graph not
connected enough for the target, 5 unsupported target support, 6
verification failure, 7 unsupported request.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .circuit import Circuit
from .decompose import STRATEGIES, cnot_baseline, decompose, route_support
from .errors import DecompositionError, DimensionError, ParseError, UnsupportedError, VerificationFailed
from .graph import HardwareGraph, depth_lower_bound, diameter, load_graph
from .lhz import build_problem_circuit, grid_depth_report, load_problem
from .pauli import PauliString
from .schedule import assign_layers, circuit_stats
from .verify import VerificationReport, verify

EXIT_OK = 0
EXIT_USAGE = 2


def _read_target(text: str, g: HardwareGraph) -> PauliString:
    p = PauliString.from_str(text)
    if p.n != g.n:
        raise DimensionError(f"Pauli string has {p.n} letters, graph has {g.n} qubits")
    return p


def _emit(rows: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    for row in rows:
        out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def _write_circuit(c: Circuit, dest: str) -> TextIO:
    """Write the circuit; return the stream the statistics should use."""
    if dest == "-":
        sys.stdout.write(c.to_json())
        return sys.stderr
    Path(dest).write_text(c.to_json())
    return sys.stdout


def _check(report: VerificationReport, out: TextIO) -> None:
    out.write(report.to_json() + "\n")
    if not report.passed:
        raise VerificationFailed(f"{report.mode} verification failed (max error {report.max_error:.3e})")


def cmd_decompose(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    p = _read_target(args.pauli, g)
    c = assign_layers(decompose(p, g, args.strategy, args.vm))
    stats = circuit_stats(c)
    d, _ = diameter(g.subgraph(route_support(p, g).nodes))
    bound = depth_lower_bound(d) if d >= 1 else 0
    out = _write_circuit(c, args.output)
    row = stats.as_row() | {"lower_bound": bound, "bound_met": stats.two_qubit_depth == bound}
    _emit([row], args.stats_format, out)
    if args.verify:
        _check(verify(c, p, args.verify, seed=args.seed), out)
    return EXIT_OK


def cmd_lhz(args: argparse.Namespace) -> int:
    if args.verify == "symbolic":
        raise UnsupportedError("the LHZ circuit is a sum of terms; use numeric or statevector")
    problem = load_problem(args.problem)
    c = build_problem_circuit(problem)
    report = grid_depth_report(problem)
    out = _write_circuit(c, args.output)
    row = {k: v for k, v in report.as_dict().items() if k != "color_depths"}
    row |= {f"depth_{k}": v for k, v in report.color_depths.items()}
    _emit([row], args.stats_format, out)
    if args.verify:
        _check(verify(c, problem.terms(), args.verify, seed=args.seed), out)
    return EXIT_OK


def cmd_baseline(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    p = _read_target(args.pauli, g)
    sub = g.subgraph(p.support)
    if not sub.is_connected() or not sub.is_path():
        raise UnsupportedError("the CNOT baseline needs a target supported on a path")
    order = sub.path_order()
    variants = ["ladder", "x_shaped"] if args.variant == "all" else [args.variant]
    rows = []
    for variant in variants:
        c = assign_layers(cnot_baseline(p, variant, order))
        s = circuit_stats(c)
        rows.append({"method": variant, "two_qubit_count": s.two_qubit_count, "two_qubit_depth": s.two_qubit_depth})
        if args.verify:
            _check(verify(c, p, "numeric", seed=args.seed), sys.stderr)
    ours = assign_layers(decompose(p, g, "path"))
    s = circuit_stats(ours)
    rows.append({"method": "this_work", "two_qubit_count": s.two_qubit_count, "two_qubit_depth": s.two_qubit_depth})
    _emit(rows, args.stats_format, sys.stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paulidecomp", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, verify_modes: Sequence[str]) -> None:
        sp.add_argument("--verify", choices=verify_modes)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--stats-format", choices=("text", "csv"), default="text")

    d = sub.add_parser("decompose", help="decompose exp(i gamma P) on a hardware graph")
    d.add_argument("graph")
    d.add_argument("pauli")
    d.add_argument("--strategy", choices=STRATEGIES, default="auto")
    d.add_argument("--vm", type=int, help="1-based split index for the path strategy")
    d.add_argument("--output", default="-")
    common(d, ("symbolic", "numeric", "statevector"))
    d.set_defaults(func=cmd_decompose)

    lz = sub.add_parser("lhz", help="build a parity-encoded problem circuit")
    lz.add_argument("problem")
    lz.add_argument("--output", default="-")
    common(lz, ("symbolic", "numeric", "statevector"))
    lz.set_defaults(func=cmd_lhz)

    b = sub.add_parser("baseline", help="compare CNOT constructions with the conjugation circuit")
    b.add_argument("graph")
    b.add_argument("pauli")
    b.add_argument("--variant", choices=("all", "ladder", "x_shaped"), default="all")
    common(b, ("numeric",))
    b.set_defaults(func=cmd_baseline)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DecompositionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ParseError.exit_code


if __name__ == "__main__":
    sys.exit(main())
