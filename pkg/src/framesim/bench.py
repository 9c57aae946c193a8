"""Benchmark harness: timed backend comparisons over Hamiltonian workloads.

A benchmark cell builds a Hamiltonian (random or from a file), Trotterizes
it, and executes the gate stream on each selected backend.  Compile time is
the Hamiltonian construction plus circuit generation, which both backends
share by design; run time is the gate-stream execution.  Every cell runs
``warmups`` untimed repetitions followed by ``repetitions`` timed ones and
reports the median, since single wall-clock samples are too noisy to
compare backends with.

The rescaled runtime t_run / (n_terms * 2**n_qubits) normalizes out the
trivial workload scaling so the locality dependence stands out.
"""
from __future__ import annotations

import csv
import io
import json
import statistics
import sys
import time
from dataclasses import dataclass

import numpy as np

from .backends import run_baseline, run_hybrid
from .circuit import trotterize
from .hamiltonian import Hamiltonian, parse_hamiltonian, random_hamiltonian

BACKENDS = ("baseline", "hybrid")

# fixed CSV column order; the header is part of the interchange contract
CSV_FIELDS = ("name", "n_qubits", "n_terms", "L_mean", "L_std", "L_max",
              "backend", "t_compile_s", "t_run_s", "rescaled_runtime",
              "speedup_vs_baseline", "seed")

VERIFY_TOLERANCE = 1e-10


class BenchConfigError(ValueError):
    """Invalid benchmark configuration (bad source, ceiling, backend set)."""


@dataclass(frozen=True)
class RandomSpec:
    """Parameters of a generated random Hamiltonian workload."""

    num_qubits: int
    locality: int
    n_terms: int
    seed: int


@dataclass
class BenchConfig:
    source: RandomSpec | str
    backends: tuple[str, ...] = BACKENDS
    trotter_time: float = 1.0
    trotter_steps: int = 1
    repetitions: int = 3
    warmups: int = 1
    max_qubits: int = 26
    verify: bool = True

    def __post_init__(self):
        if self.repetitions < 1:
            raise BenchConfigError("repetitions must be >= 1")
        if self.warmups < 0:
            raise BenchConfigError("warmups must be >= 0")
        bad = [b for b in self.backends if b not in BACKENDS]
        if bad or not self.backends:
            raise BenchConfigError(f"backends must be a non-empty subset of {BACKENDS}")


@dataclass
class BenchRecord:
    name: str
    n_qubits: int
    n_terms: int
    l_mean: float
    l_std: float
    l_max: int
    backend: str
    t_compile_s: float
    t_run_s: float
    rescaled_runtime: float
    speedup_vs_baseline: float | None
    seed: int | None


def _load_hamiltonian(config: BenchConfig) -> Hamiltonian:
    src = config.source
    if isinstance(src, RandomSpec):
        return random_hamiltonian(src.num_qubits, src.locality, src.n_terms, src.seed)
    with open(src, "r", encoding="utf-8") as fh:
        name = str(src).rsplit("/", 1)[-1].rsplit(".", 1)[0]
        return parse_hamiltonian(fh, name=name)


def run_config(config: BenchConfig) -> list[BenchRecord]:
    """Execute one benchmark cell and return one record per backend."""
    probe = _load_hamiltonian(config)
    if probe.num_qubits > config.max_qubits:
        raise BenchConfigError(
            f"{probe.num_qubits} qubits exceeds the memory ceiling of "
            f"{config.max_qubits} (raise max_qubits to override)")
    l_mean, l_std, l_max = probe.locality_stats()
    seed = config.source.seed if isinstance(config.source, RandomSpec) else None

    runners = {"baseline": run_baseline, "hybrid": run_hybrid}
    timings: dict[str, tuple[float, float]] = {}
    final_state: dict[str, object] = {}
    for backend in config.backends:
        compile_times: list[float] = []
        run_times: list[float] = []
        for rep in range(config.warmups + config.repetitions):
            t0 = time.perf_counter()
            ham = _load_hamiltonian(config)
            circuit = trotterize(ham, config.trotter_time, config.trotter_steps)
            t_compile = time.perf_counter() - t0
            state, report = runners[backend](circuit, rng=seed)
            if rep >= config.warmups:
                compile_times.append(t_compile)
                run_times.append(report.t_run_s)
        timings[backend] = (statistics.median(compile_times),
                            statistics.median(run_times))
        final_state[backend] = state

    if config.verify and set(config.backends) == set(BACKENDS):
        _verify_states(final_state["baseline"], final_state["hybrid"])

    records = []
    dim = 1 << probe.num_qubits
    for backend in config.backends:
        t_compile, t_run = timings[backend]
        speedup = None
        if "baseline" in timings:
            speedup = timings["baseline"][1] / t_run
        records.append(BenchRecord(
            name=probe.name, n_qubits=probe.num_qubits, n_terms=len(probe),
            l_mean=l_mean, l_std=l_std, l_max=l_max, backend=backend,
            t_compile_s=t_compile, t_run_s=t_run,
            rescaled_runtime=t_run / (len(probe) * dim),
            speedup_vs_baseline=speedup, seed=seed))
    return records


def _verify_states(baseline_state, hybrid_state) -> None:
    """Cross-check the two backends on the cell that was just timed."""
    hybrid_state.flush_to_origin()
    diff = np.max(np.abs(baseline_state.probabilities()
                         - hybrid_state.phi.probabilities()))
    if diff > VERIFY_TOLERANCE:
        raise RuntimeError(f"backend mismatch: post-flush probabilities differ "
                           f"by {diff:.3e} (> {VERIFY_TOLERANCE})")


def default_sweep_cells(qubits=None, localities=None, terms=(50, 100)):
    """The (n, k, n_terms) grid: n in 8..24 step 2, k in 4..n step 2."""
    qubits = tuple(qubits) if qubits is not None else tuple(range(8, 25, 2))
    cells = []
    for n in qubits:
        ks = tuple(localities) if localities is not None else tuple(range(4, n + 1, 2))
        for k in ks:
            if k > n:
                continue
            for t in terms:
                cells.append((n, k, t))
    return cells


def sweep(cells, seed: int = 0, backends=BACKENDS, repetitions: int = 3,
          warmups: int = 1, max_qubits: int = 26, trotter_time: float = 1.0,
          trotter_steps: int = 1, verify: bool = False, log=sys.stderr):
    """Run a grid of cells, yielding records as they complete.

    Per-cell failures are logged and skipped so long sweeps always make
    progress; callers should write records incrementally.
    """
    for index, (n, k, n_terms) in enumerate(cells):
        config = BenchConfig(
            source=RandomSpec(n, k, n_terms, seed + index),
            backends=tuple(backends), repetitions=repetitions, warmups=warmups,
            max_qubits=max_qubits, trotter_time=trotter_time,
            trotter_steps=trotter_steps, verify=verify)
        try:
            yield from run_config(config)
        except Exception as exc:  # noqa: BLE001 - sweeps must survive bad cells
            print(f"[sweep] cell n={n} k={k} terms={n_terms} failed: {exc}",
                  file=log)


# ----------------------------------------------------------------------
# record serialization

def _record_to_row(r: BenchRecord) -> dict[str, str]:
    raw = (r.name, r.n_qubits, r.n_terms, r.l_mean, r.l_std, r.l_max, r.backend,
           r.t_compile_s, r.t_run_s, r.rescaled_runtime, r.speedup_vs_baseline,
           r.seed)
    return {key: ("" if value is None else
                  repr(value) if isinstance(value, float) else str(value))
            for key, value in zip(CSV_FIELDS, raw)}


def _row_to_record(row: dict[str, str]) -> BenchRecord:
    def opt(text, conv):
        return None if text == "" else conv(text)

    return BenchRecord(
        name=row["name"], n_qubits=int(row["n_qubits"]), n_terms=int(row["n_terms"]),
        l_mean=float(row["L_mean"]), l_std=float(row["L_std"]), l_max=int(row["L_max"]),
        backend=row["backend"], t_compile_s=float(row["t_compile_s"]),
        t_run_s=float(row["t_run_s"]), rescaled_runtime=float(row["rescaled_runtime"]),
        speedup_vs_baseline=opt(row["speedup_vs_baseline"], float),
        seed=opt(row["seed"], int))


def write_records(records, stream, fmt: str = "csv") -> None:
    if fmt == "csv":
        writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for r in records:
            writer.writerow(_record_to_row(r))
            stream.flush()
    elif fmt == "jsonl":
        for r in records:
            row = _record_to_row(r)
            typed = {k: (None if v == "" else v) for k, v in row.items()}
            stream.write(json.dumps(typed) + "\n")
            stream.flush()
    else:
        raise BenchConfigError(f"unknown format {fmt!r}")


def read_records(stream, fmt: str = "csv") -> list[BenchRecord]:
    if fmt == "csv":
        return [_row_to_record(row) for row in csv.DictReader(stream)]
    if fmt == "jsonl":
        out = []
        for line in stream:
            if line.strip():
                row = {k: ("" if v is None else v) for k, v in json.loads(line).items()}
                out.append(_row_to_record(row))
        return out
    raise BenchConfigError(f"unknown format {fmt!r}")


# ----------------------------------------------------------------------
# reporting

@dataclass
class ReportRow:
    name: str
    n_qubits: int
    n_terms: int
    seed: int | None
    speedup: float
    compile_ratio: float


@dataclass
class ReportSummary:
    rows: list[ReportRow]
    groups: dict[tuple[int, int], dict[str, float]]


def report(records) -> ReportSummary:
    """Pair baseline/hybrid records per config and summarize the ratios."""
    paired: dict[tuple, dict[str, BenchRecord]] = {}
    for r in records:
        paired.setdefault((r.name, r.n_qubits, r.n_terms, r.seed), {})[r.backend] = r
    rows = []
    for (name, n, n_terms, seed), group in sorted(paired.items(),
                                                  key=lambda kv: str(kv[0])):
        if set(group) != set(BACKENDS):
            raise ValueError(f"config {name!r} has records for {sorted(group)} only; "
                             "report needs a baseline/hybrid pair per config")
        base, hyb = group["baseline"], group["hybrid"]
        rows.append(ReportRow(name, n, n_terms, seed,
                              speedup=base.t_run_s / hyb.t_run_s,
                              compile_ratio=hyb.t_compile_s / base.t_compile_s))
    groups: dict[tuple[int, int], dict[str, float]] = {}
    for key in sorted({(r.n_qubits, r.n_terms) for r in rows}):
        members = [r for r in rows if (r.n_qubits, r.n_terms) == key]
        speedups = [r.speedup for r in members]
        ratios = [r.compile_ratio for r in members]
        groups[key] = {
            "count": len(members),
            "speedup_mean": float(np.mean(speedups)),
            "speedup_std": float(np.std(speedups)),
            "compile_ratio_mean": float(np.mean(ratios)),
            "compile_ratio_std": float(np.std(ratios)),
        }
    return ReportSummary(rows, groups)


def render_report(summary: ReportSummary) -> str:
    out = io.StringIO()
    out.write(f"{'name':24s} {'n':>3s} {'terms':>6s} {'speedup':>9s} {'compile':>9s}\n")
    for r in summary.rows:
        out.write(f"{r.name[:24]:24s} {r.n_qubits:3d} {r.n_terms:6d} "
                  f"{r.speedup:9.3f} {r.compile_ratio:9.3f}\n")
    out.write("\nper (n_qubits, n_terms):\n")
    for (n, t), stats in summary.groups.items():
        out.write(f"  n={n:2d} terms={t:5d}: speedup {stats['speedup_mean']:.2f} "
                  f"+- {stats['speedup_std']:.2f}, compile ratio "
                  f"{stats['compile_ratio_mean']:.2f} +- {stats['compile_ratio_std']:.2f} "
                  f"({stats['count']} configs)\n")
    return out.getvalue()
