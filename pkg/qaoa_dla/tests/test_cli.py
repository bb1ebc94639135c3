import json
from pathlib import Path

import pytest

from qaoa_dla.cli import EXIT_INSTANCE_ERROR, EXIT_OK, EXIT_USAGE, main
from qaoa_dla.graphs.families import generate_family
from qaoa_dla.instances.formats import emit_edgelist, emit_mqlib, parse_mqlib


def write(path: Path, spec: str, fmt: str = "mqlib") -> str:
    g = generate_family(spec)
    path.write_text(emit_edgelist(g) if fmt == "edgelist" else emit_mqlib(g), encoding="utf-8")
    return str(path)


def test_analyze_prints_report(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["analyze", write(tmp_path / "spider.txt", "Spider(1,2,3)")])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["instance_id"] == "spider"
    assert payload["freeness"] == "Splittable"
    assert payload["ma_dim_exact"] == "4095"


def test_analyze_reports_parse_errors(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "bad.txt"
    path.write_text("2 1\n1 1 1\n", encoding="utf-8")
    assert main(["analyze", str(path)]) == EXIT_INSTANCE_ERROR
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["code"] == "PARSE_ERROR"


def test_missing_file_is_instance_error(tmp_path: Path) -> None:
    assert main(["analyze", str(tmp_path / "nope.txt")]) == EXIT_INSTANCE_ERROR


def test_unknown_flag_is_usage_error() -> None:
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "x.txt", "--bogus"])
    assert exc.value.code == EXIT_USAGE


def test_enumerate_lists_graphs(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["enumerate", "--n", "5"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 21


def test_closure_dimension(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = write(tmp_path / "c4.edges", "Cycle(4)", "edgelist")
    assert main(["closure", path, "--format", "edgelist", "--max-dim", "100"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["dimension"] == 11


def test_batch_strict_and_csv(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    write(tmp_path / "a.txt", "Spider(1,2,3)")
    (tmp_path / "b.txt").write_text("nonsense\n", encoding="utf-8")
    assert main(["batch", str(tmp_path), "--output", "csv", "--threads", "1"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.splitlines()[1].startswith("a,7,6")
    assert json.loads(captured.err.strip().splitlines()[-1])["errors"] == 1
    assert main(["batch", str(tmp_path), "--strict", "--threads", "1"]) == EXIT_INSTANCE_ERROR


def test_batch_writes_jsonl_file(tmp_path: Path) -> None:
    instances = tmp_path / "in"
    instances.mkdir()
    write(instances / "s.txt", "Spider(1,2,3)")
    out = tmp_path / "rows.jsonl"
    assert main(["batch", str(instances), "--out", str(out)]) == EXIT_OK
    row = json.loads(out.read_text(encoding="utf-8"))
    assert row["is_free"] is True
    assert row["timings_ms"] == {}


def test_reduce_verifies_maxcut(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    emitted = tmp_path / "sub.txt"
    assert main(["reduce", write(tmp_path / "k3.txt", "Complete(3)"), "--emit", str(emitted)]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["verified"] is True
    assert payload["vertex_delta"] == payload["maxcut_delta"] == 45
    assert parse_mqlib(emitted.read_text(encoding="utf-8")).n == payload["subdivided_n"] == 48


def test_families_and_sample(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["families", "--spec", "Cycle(5)"]) == EXIT_OK
    assert parse_mqlib(capsys.readouterr().out) == generate_family("Cycle(5)").with_weights([1] * 5)
    assert main(["sample-er", "--n", "6", "--p", "0.5", "--count", "3", "--seed", "7", "--out-dir", str(tmp_path)]) == EXIT_OK
    assert sorted(p.name for p in tmp_path.iterdir()) == [f"er_n6_p0.5_s{s}.txt" for s in (7, 8, 9)]
    first = (tmp_path / "er_n6_p0.5_s7.txt").read_text(encoding="utf-8")
    assert first.startswith("# prng=") and "seed=7" in first.splitlines()[0]


def test_certify_writes_certificate(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["certify", write(tmp_path / "spider.txt", "Spider(1,2,3)"), "--verify"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("0 Axiom X 0 1 2 3 4 5 6\n")


def test_certify_rejects_non_subdivision(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["certify", write(tmp_path / "k3.txt", "Complete(3)")]) == EXIT_INSTANCE_ERROR
    assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])["code"] == "NOT_A_SUBDIVISION"


def test_check_free(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["check-free", write(tmp_path / "c12.txt", "Cycle(12)"), "--cap", "7"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["free"] is False
