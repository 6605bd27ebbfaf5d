from __future__ import annotations

import json
from pathlib import Path

import pytest

from coincide.cli import main

QUERIES = Path(__file__).resolve().parents[1] / "queries"


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, doc, name="query.json") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def factory_path() -> str:
    return str(QUERIES / "factory.json")


def test_check_factory_json(capsys, factory_path):
    code, out, _ = run(capsys, "check", "--input", factory_path, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["coincides"] is True
    assert doc["partition"] == {"g": 1, "R": 7, "S": 8}
    assert doc["cycle"] == 56
    assert doc["method"] == "gcd-partition"
    assert doc["witness"] == {"start": 37, "end": 38}


def test_check_modified_factory(capsys):
    code, out, _ = run(
        capsys,
        "check",
        "--input",
        str(QUERIES / "factory_short_rest.json"),
        "--format",
        "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coincides"] is False
    assert doc["witness"] is None


def test_check_verdict_not_in_exit_code(capsys):
    code, _, _ = run(capsys, "check", "--input", str(QUERIES / "factory_short_rest.json"))
    assert code == 0


def test_check_text_output(capsys, factory_path):
    code, out, _ = run(capsys, "check", "--input", factory_path)
    assert code == 0
    assert "coincides: true" in out
    assert "partition: g=1 R=7 S=8" in out
    assert "cycle: 56 days" in out


def test_check_flag_overrides(capsys, factory_path):
    code, out, _ = run(
        capsys, "check", "--input", factory_path, "--p", "5", "--q", "Working", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["coincides"] is True


def test_check_out_of_range_names_bound(capsys, tmp_path):
    doc = json.load(open(QUERIES / "factory.json"))
    doc["q"] = 5
    code, _, err = run(capsys, "check", "--input", write_doc(tmp_path, doc), "--format", "json")
    assert code == 2
    assert "0..1" in err


def test_check_rejects_bad_duration(capsys, tmp_path):
    doc = {
        "x": {"name": "x", "components": [{"name": "a", "dur": 0}]},
        "y": {"name": "y", "components": [{"name": "b", "dur": 1}]},
        "p": 0,
        "q": 0,
    }
    code, _, err = run(capsys, "check", "--input", write_doc(tmp_path, doc))
    assert code == 2
    assert "duration" in err


def test_check_rejects_garbage_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "check", "--input", str(path))
    assert code == 2
    assert "error" in err


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "--input", "/nonexistent/query.json")
    assert code == 2


def test_witness_factory(capsys, factory_path):
    code, out, _ = run(capsys, "witness", "--input", factory_path, "--format", "json")
    assert code == 0
    assert json.loads(out)["witness"] == {"start": 23, "end": 24}


def test_witness_absent_still_exit_zero(capsys):
    code, out, _ = run(
        capsys,
        "witness",
        "--input",
        str(QUERIES / "factory_short_rest.json"),
        "--format",
        "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coincides"] is False and doc["witness"] is None


def test_enumerate_factory(capsys, factory_path):
    code, out, _ = run(capsys, "enumerate", "--input", factory_path, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["method"] == "oracle"
    assert doc["windows"] == [
        {"start": 23, "end": 24},
        {"start": 30, "end": 31},
        {"start": 37, "end": 38},
    ]
    assert doc["comparisons"] == 56


def test_enumerate_production_line(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--input", str(QUERIES / "production_line.json"), "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["coincides"] is True
    assert doc["windows"] == [{"start": 3, "end": 4}]


def test_partition_command(capsys, factory_path):
    code, out, _ = run(capsys, "partition", "--input", factory_path)
    assert code == 0
    assert "g=1 R=7 S=8" in out


def test_network_command(capsys, factory_path):
    code, out, _ = run(capsys, "network", "--input", factory_path, "--side", "y", "--index", "1")
    assert code == 0
    assert "slot 5: started-by" in out
    assert "slot 6: contains" in out
    assert "slot 7: finished-by" in out
    assert "flag: true" in out


def test_network_json(capsys):
    code, out, _ = run(
        capsys,
        "network",
        "--input",
        str(QUERIES / "production_line.json"),
        "--side",
        "x",
        "--index",
        "0",
        "--format",
        "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["entries"] == [
        {"slot": 0, "rel": "starts", "left_gap": 0, "right_gap": 1, "common_dur": 3}
    ]
    assert doc["flag"] is False


def test_network_bad_index(capsys, factory_path):
    code, _, err = run(capsys, "network", "--input", factory_path, "--side", "y", "--index", "9")
    assert code == 2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "50", "--seed", "42")
    assert code == 0
    assert "verdict mismatches: 0" in out
    assert "result: PASS" in out


def test_verify_deterministic_output(capsys):
    _, out1, _ = run(capsys, "verify", "--trials", "30", "--seed", "5")
    _, out2, _ = run(capsys, "verify", "--trials", "30", "--seed", "5")
    assert out1 == out2


def test_verify_zero_trials(capsys):
    code, _, err = run(capsys, "verify", "--trials", "0")
    assert code == 2


def test_bench_command(capsys):
    code, out, _ = run(capsys, "bench", "--max-exponent", "6")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "max_dur,gcd_method_ops,oracle_ops"
    assert lines[1].startswith("16,")
    assert lines[1].endswith(",240")


def test_bench_json_round_trip(capsys):
    code, out, _ = run(capsys, "bench", "--max-exponent", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == json.loads(json.dumps(doc))
    assert doc["rows"][0]["oracle_ops"] == 240


def test_bench_small_exponent(capsys):
    code, _, _ = run(capsys, "bench", "--max-exponent", "3")
    assert code == 2


def test_result_document_round_trips(capsys, factory_path):
    _, out, _ = run(capsys, "check", "--input", factory_path, "--format", "json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc


def test_check_deterministic(capsys, factory_path):
    _, out1, _ = run(capsys, "check", "--input", factory_path, "--format", "json")
    _, out2, _ = run(capsys, "check", "--input", factory_path, "--format", "json")
    assert out1 == out2


def test_ambiguous_name_is_input_error(capsys, tmp_path):
    doc = {
        "x": {"name": "x", "components": [{"name": "A", "dur": 1}, {"name": "A", "dur": 2}]},
        "y": {"name": "y", "components": [{"name": "B", "dur": 1}]},
        "p": "A",
        "q": "B",
    }
    code, _, err = run(capsys, "check", "--input", write_doc(tmp_path, doc))
    assert code == 2
    assert "ambiguous" in err
