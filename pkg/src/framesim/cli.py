"""Command line front end: ``framesim run | sweep | report``.

Exit codes: 0 success, 1 configuration error (bad flags, missing or
malformed input, memory ceiling), 2 runtime error (simulation failure or a
backend cross-check mismatch).
"""
from __future__ import annotations

import argparse
import sys

from . import bench
from .bench import BenchConfig, BenchConfigError, RandomSpec
from .hamiltonian import HamiltonianParseError

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; our contract reserves 2 for
    # runtime failures, so remap usage problems to the config-error code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backends", default="baseline,hybrid",
                   help="comma-separated subset of {baseline,hybrid}")
    p.add_argument("--time", type=float, default=1.0, help="evolution time t")
    p.add_argument("--steps", type=int, default=1, help="Trotter steps")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--warmups", type=int, default=1)
    p.add_argument("--max-qubits", type=int, default=26,
                   help="refuse workloads above this qubit count")
    p.add_argument("--output", default=None, help="write records here (default stdout)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")


def _build_parser() -> _Parser:
    parser = _Parser(prog="framesim",
                     description="Benchmark the fullstate and Pauli-frame hybrid "
                                 "backends on Trotterized Hamiltonians.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="benchmark a single Hamiltonian")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--random", nargs=4, type=int,
                     metavar=("N_QUBITS", "LOCALITY", "N_TERMS", "SEED"),
                     help="generate a random exact-locality Hamiltonian")
    src.add_argument("--file", help="read a Pauli-sum text file")
    run.add_argument("--no-verify", action="store_true",
                     help="skip the cross-backend probability check")
    _add_common(run)

    swp = sub.add_parser("sweep",
                         help="benchmark the (n_qubits, locality, n_terms) grid")
    swp.add_argument("--qubits", default="8:24:2", help="range lo:hi:step (inclusive)")
    swp.add_argument("--localities", default=None,
                     help="range lo:hi:step; default 4..n_qubits step 2 per cell")
    swp.add_argument("--terms", default="50,100", help="comma-separated term counts")
    swp.add_argument("--seed", type=int, default=0, help="base seed for the grid")
    _add_common(swp)

    rep = sub.add_parser("report",
                         help="summarize speedups and compile ratios from records")
    rep.add_argument("records", help="records file produced by run/sweep")
    rep.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    return parser


def _parse_range(text: str) -> tuple[int, ...]:
    lo, hi, step = (int(v) for v in text.split(":"))
    return tuple(range(lo, hi + 1, step))


def _open_output(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _cmd_run(args) -> int:
    if args.random is not None:
        source = RandomSpec(*args.random)
    else:
        source = args.file
    config = BenchConfig(
        source=source, backends=tuple(args.backends.split(",")),
        trotter_time=args.time, trotter_steps=args.steps,
        repetitions=args.repetitions, warmups=args.warmups,
        max_qubits=args.max_qubits, verify=not args.no_verify)
    records = bench.run_config(config)
    stream, close = _open_output(args.output)
    try:
        bench.write_records(records, stream, args.format)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _cmd_sweep(args) -> int:
    cells = bench.default_sweep_cells(
        qubits=_parse_range(args.qubits),
        localities=_parse_range(args.localities) if args.localities else None,
        terms=tuple(int(v) for v in args.terms.split(",")))
    records = bench.sweep(
        cells, seed=args.seed, backends=tuple(args.backends.split(",")),
        repetitions=args.repetitions, warmups=args.warmups,
        max_qubits=args.max_qubits, trotter_time=args.time,
        trotter_steps=args.steps)
    stream, close = _open_output(args.output)
    try:
        bench.write_records(records, stream, args.format)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def _cmd_report(args) -> int:
    with open(args.records, "r", encoding="utf-8") as fh:
        records = bench.read_records(fh, args.format)
    summary = bench.report(records)
    sys.stdout.write(bench.render_report(summary))
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_report(args)
    except (BenchConfigError, HamiltonianParseError, FileNotFoundError,
            ValueError) as exc:
        print(f"framesim: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (RuntimeError, MemoryError) as exc:
        print(f"framesim: runtime error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
