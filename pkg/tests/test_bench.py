"""Benchmark harness: records, serialization, sweep, report, CLI."""
import io

import pytest

from framesim import BenchConfig, BenchRecord, RandomSpec
from framesim.bench import (BenchConfigError, default_sweep_cells, read_records,
                            render_report, report, run_config, sweep,
                            write_records)
from framesim.cli import main as cli_main


def small_config(**kw):
    defaults = dict(source=RandomSpec(4, 2, 10, 7), repetitions=2, warmups=1)
    defaults.update(kw)
    return BenchConfig(**defaults)


def test_run_config_both_backends():
    records = run_config(small_config())
    assert [r.backend for r in records] == ["baseline", "hybrid"]
    for r in records:
        assert r.n_qubits == 4 and r.n_terms == 10 and r.seed == 7
        assert (r.l_mean, r.l_std, r.l_max) == (2.0, 0.0, 2)
        assert r.rescaled_runtime == r.t_run_s / (10 * 16)
        assert r.t_compile_s > 0 and r.t_run_s > 0
    assert records[0].speedup_vs_baseline == pytest.approx(1.0)
    assert records[1].speedup_vs_baseline == pytest.approx(
        records[0].t_run_s / records[1].t_run_s)


def test_run_config_deterministic_nontiming_fields():
    def stable(records):
        return [(r.name, r.n_qubits, r.n_terms, r.l_mean, r.l_std, r.l_max,
                 r.backend, r.seed) for r in records]

    assert stable(run_config(small_config())) == stable(run_config(small_config()))


def test_run_config_respects_ceiling():
    with pytest.raises(BenchConfigError, match="ceiling"):
        run_config(small_config(source=RandomSpec(8, 2, 5, 0), max_qubits=6))


def test_run_config_single_backend():
    records = run_config(small_config(backends=("hybrid",)))
    assert len(records) == 1
    assert records[0].speedup_vs_baseline is None


def test_config_validation():
    with pytest.raises(BenchConfigError):
        BenchConfig(source=RandomSpec(4, 2, 5, 0), repetitions=0)
    with pytest.raises(BenchConfigError):
        BenchConfig(source=RandomSpec(4, 2, 5, 0), backends=("gpu",))


def test_run_config_file_source(tmp_path):
    path = tmp_path / "toy.txt"
    path.write_text("qubits: 3\n0.5 ZZI\n-0.25 IXX\n")
    records = run_config(small_config(source=str(path)))
    assert records[0].name == "toy"
    assert records[0].n_terms == 2
    assert records[0].seed is None


def test_csv_round_trip():
    records = run_config(small_config())
    buf = io.StringIO()
    write_records(records, buf, "csv")
    text = buf.getvalue()
    assert text.splitlines()[0] == ("name,n_qubits,n_terms,L_mean,L_std,L_max,"
                                    "backend,t_compile_s,t_run_s,rescaled_runtime,"
                                    "speedup_vs_baseline,seed")
    back = read_records(io.StringIO(text), "csv")
    assert back == records


def test_jsonl_round_trip():
    records = run_config(small_config(backends=("hybrid",)))
    buf = io.StringIO()
    write_records(records, buf, "jsonl")
    back = read_records(io.StringIO(buf.getvalue()), "jsonl")
    assert back == records


def test_default_sweep_cells_grid():
    cells = default_sweep_cells()
    # n in 8..24 step 2 with k in 4..n step 2, two term counts per cell
    per_n = {n: len(range(4, n + 1, 2)) for n in range(8, 25, 2)}
    assert len(cells) == 2 * sum(per_n.values()) == 126
    small = default_sweep_cells(qubits=(4, 6), localities=(2, 4), terms=(5,))
    assert small == [(4, 2, 5), (4, 4, 5), (6, 2, 5), (6, 4, 5)]


def test_sweep_yields_records_and_survives_failures():
    log = io.StringIO()
    cells = [(4, 2, 5), (30, 2, 5), (5, 3, 5)]  # middle cell exceeds ceiling
    records = list(sweep(cells, seed=1, repetitions=1, warmups=0,
                         max_qubits=8, log=log))
    assert [(r.n_qubits, r.backend) for r in records] == [
        (4, "baseline"), (4, "hybrid"), (5, "baseline"), (5, "hybrid")]
    assert "n=30" in log.getvalue() and "failed" in log.getvalue()


def _fake(name, n, terms, backend, t_compile, t_run, seed=0):
    return BenchRecord(name, n, terms, 4.0, 0.0, 4, backend, t_compile, t_run,
                       t_run / (terms * 2 ** n), None, seed)


def test_report_speedups():
    records = [_fake("a", 4, 10, "baseline", 1.0, 2.0),
               _fake("a", 4, 10, "hybrid", 1.0, 2.0),
               _fake("b", 4, 10, "baseline", 1.0, 3.0),
               _fake("b", 4, 10, "hybrid", 0.9, 1.0)]
    summary = report(records)
    by_name = {r.name: r for r in summary.rows}
    assert by_name["a"].speedup == pytest.approx(1.0)
    assert by_name["b"].speedup == pytest.approx(3.0)
    assert by_name["b"].compile_ratio == pytest.approx(0.9)
    stats = summary.groups[(4, 10)]
    assert stats["count"] == 2
    assert stats["speedup_mean"] == pytest.approx(2.0)
    text = render_report(summary)
    assert "speedup" in text and "n= 4" in text


def test_report_rejects_unpaired_records():
    with pytest.raises(ValueError, match="pair"):
        report([_fake("a", 4, 10, "baseline", 1.0, 2.0)])


# ----------------------------------------------------------------------
# CLI

def test_cli_run_produces_csv(tmp_path, capsys):
    out = tmp_path / "records.csv"
    code = cli_main(["run", "--random", "4", "2", "8", "3", "--repetitions", "1",
                     "--warmups", "0", "--output", str(out)])
    assert code == 0
    records = read_records(io.StringIO(out.read_text()), "csv")
    assert len(records) == 2
    report_code = cli_main(["report", str(out)])
    assert report_code == 0
    assert "speedup" in capsys.readouterr().out


def test_cli_run_stdout_jsonl(capsys):
    code = cli_main(["run", "--random", "3", "2", "4", "1", "--backends", "hybrid",
                     "--repetitions", "1", "--warmups", "0", "--format", "jsonl"])
    assert code == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 1 and '"backend": "hybrid"' in lines[0]


def test_cli_sweep(tmp_path):
    out = tmp_path / "sweep.csv"
    code = cli_main(["sweep", "--qubits", "3:4:1", "--localities", "2:2:1",
                     "--terms", "4", "--repetitions", "1", "--warmups", "0",
                     "--output", str(out)])
    assert code == 0
    records = read_records(io.StringIO(out.read_text()), "csv")
    assert len(records) == 4


def test_cli_exit_codes(tmp_path, capsys):
    assert cli_main(["run", "--file", str(tmp_path / "missing.txt")]) == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("0.5 QQ\n")
    assert cli_main(["run", "--file", str(bad)]) == 1
    over = cli_main(["run", "--random", "9", "2", "4", "1", "--max-qubits", "8"])
    assert over == 1
    with pytest.raises(SystemExit) as exc:
        cli_main(["run"])  # missing source
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        cli_main(["bogus"])
    assert exc.value.code == 1
    capsys.readouterr()
