import csv
import io
import json
import math
import subprocess
import sys

import pytest

from skewcode.capacity import LOG2_PHI
from skewcode.cli import main
from skewcode.coding import Codebook, build_codebook, decode
from skewcode.channel import ReceivedBlock
from skewcode.graph import WeightComponent, build_component


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_capacity_csv(capsys):
    code, out = run(capsys, "capacity", "--w-max", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "w,F_w,C_1w,gap_to_log2phi"
    rows = list(csv.DictReader(io.StringIO("\n".join(ln for ln in lines if not ln.startswith("#")))))
    assert len(rows) == 10
    assert [int(r["F_w"]) for r in rows] == [2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert rows[1]["C_1w"] == format(math.log2(3) / 2, ".12g")
    assert rows[3]["C_1w"] == "0.75"
    assert float(rows[3]["gap_to_log2phi"]) == pytest.approx(0.75 - LOG2_PHI, abs=1e-12)
    assert lines[-1].startswith("# AAS zero-error capacity")


def test_capacity_w2_text(capsys):
    code, out = run(capsys, "capacity", "--w-max", "2", "--format", "text")
    assert code == 0
    assert "0.792481250361" in out
    assert "C_AAS = log2(phi) = 0.694241913631 exactly" in out


def test_capacity_json(capsys):
    code, out = run(capsys, "capacity", "--w-max", "5", "--format", "json")
    data = json.loads(out)
    assert [r["fib"] for r in data["rows"]] == [2, 3, 5, 8, 13]
    assert set(data["rows"][0]) == {"w", "fib", "capacity", "limit_gap", "binet_check"}
    assert data["aas"]["lower"] == data["aas"]["resolved"] == 0.694241913631
    assert data["aas"]["upper"] == pytest.approx(math.log2(13) / 5, abs=1e-12)


def test_capacity_w1_has_no_sandwich(capsys):
    code, out = run(capsys, "capacity", "--w-max", "1")
    assert code == 0
    assert out == "w,F_w,C_1w,gap_to_log2phi\n1,2,1,0.305758086369\n"


def test_capacity_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["capacity", "--w-max", "0"])
    assert exc.value.code == 2


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["capacity", "--bogus"])
    assert exc.value.code == 2


def test_codebook_json_and_text(capsys):
    code, out = run(capsys, "codebook", "--w", "4")
    assert Codebook.from_json(out) == build_codebook(4)
    code, out = run(capsys, "codebook", "--w", "2", "--format", "text")
    assert out == "0 00 h=0\n1 10 h=1\n2 11 h=2\n"


def test_graph_export(capsys):
    code, out = run(capsys, "graph", "--w", "4", "--h", "2")
    assert code == 0
    assert WeightComponent.from_edgelist(out) == build_component(4, 2)
    code, oracle_out = run(capsys, "graph", "--w", "4", "--h", "2", "--oracle", "--mode", "ternary")
    assert oracle_out == out


def test_graph_all_components(capsys):
    code, out = run(capsys, "graph", "--w", "3")
    headers = [ln for ln in out.splitlines() if not ln.startswith("#") and len(ln.split()) == 4]
    # h=2 vertices 00, 01, 11 are pairwise within distance 1: a triangle
    assert headers == ["3 0 1 0", "3 1 3 2", "3 2 3 3", "3 3 1 0"]


def test_verify_w4(capsys):
    code, out = run(capsys, "verify", "--w", "4")
    assert code == 0
    assert out.splitlines()[-1] == "ALL PASS (10/10)"
    assert "FAIL" not in out


def test_verify_guard():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--w", "20"])
    assert exc.value.code == 2


def test_roundtrip_exhaustive_w4(capsys):
    code, out = run(capsys, "roundtrip", "--w", "4", "--exhaustive")
    assert code == 0
    assert "mode=binary exhaustive trials=32 failures=0" in out
    assert out.splitlines()[-1] == "PASS"


def test_roundtrip_random_w30(capsys):
    code, out = run(capsys, "roundtrip", "--w", "30", "--trials", "10000", "--seed", "7")
    assert code == 0
    assert "mode=binary seed=7 trials=10000 failures=0" in out
    assert "mode=ternary seed=7 trials=10000 failures=0" in out


def test_roundtrip_w1(capsys):
    code, out = run(capsys, "roundtrip", "--w", "1", "--mode", "binary")
    assert code == 0
    assert "trials=2 failures=0" in out


def test_roundtrip_flag_conflicts():
    for argv in (["roundtrip", "--w", "9", "--exhaustive"], ["roundtrip", "--w", "3", "--exhaustive", "--trials", "5"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_seed_must_be_unsigned():
    with pytest.raises(SystemExit) as exc:
        main(["roundtrip", "--w", "3", "--trials", "1", "--seed", "-1"])
    assert exc.value.code == 2


def test_simulate_stream_decodes(capsys):
    code, out = run(capsys, "simulate", "--w", "7", "--trials", "50", "--seed", "3", "--mode", "ternary")
    cb = build_codebook(7)
    recs = [json.loads(ln) for ln in out.splitlines()]
    assert [r["block"] for r in recs] == list(range(50))
    for r in recs:
        assert set(r) == {"block", "message", "word", "arrivals"}
        assert decode(ReceivedBlock(tuple(r["arrivals"]), 7), cb).index == r["message"]


def test_simulate_timestamps(capsys):
    code, out = run(capsys, "simulate", "--w", "3", "--trials", "2", "--T", "1.0", "--tau", "0.5")
    for ln in out.splitlines():
        r = json.loads(ln)
        assert r["timestamps"] == [0.5 + r["block"] * 3 + a / 2 for a in r["arrivals"]]


def test_deterministic_output(capsys):
    a = run(capsys, "simulate", "--w", "12", "--trials", "20", "--seed", "99")
    b = run(capsys, "simulate", "--w", "12", "--trials", "20", "--seed", "99")
    assert a == b
    c = run(capsys, "capacity", "--w-max", "40", "--format", "json")
    d = run(capsys, "capacity", "--w-max", "40", "--format", "json")
    assert c == d


def test_out_path(tmp_path, capsys):
    path = tmp_path / "cap.csv"
    code, out = run(capsys, "capacity", "--w-max", "3", "--out", str(path))
    assert out == ""
    assert path.read_text().startswith("w,F_w,C_1w,gap_to_log2phi\n1,2,1,")


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "skewcode", "capacity", "--w-max", "4", "--format", "csv"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert result.stderr == ""
    assert "4,8,0.75," in result.stdout
