import json
import os
import subprocess
import sys

import pytest

from hfold import VerificationRecord
from hfold.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sumset(capsys):
    code, out, _ = run(capsys, "sumset", "--set", "0,2,3,4,5", "--h", "2", "--format", "json")
    assert code == 0 and json.loads(out)["cardinality"] == 10
    code, out, _ = run(capsys, "sumset", "--set", "0,1", "--h", "7", "--format", "json")
    assert json.loads(out)["elements"] == list(range(8))
    code, out, _ = run(capsys, "sumset", "--set", "0,1,4", "--h", "3", "--format", "json")
    assert json.loads(out) == {"set": [0, 1, 4], "h": 3,
                               "elements": [0, 1, 2, 3, 4, 5, 6, 8, 9, 12], "cardinality": 10}
    code, out, _ = run(capsys, "sumset", "--set", "0,1,4", "--h", "3")
    assert "|3A| = 10" in out


def test_set_file(capsys, tmp_path):
    p = tmp_path / "A.txt"
    p.write_text("0\n2\n3\n4\n5\n")
    code, out, _ = run(capsys, "sumset", "--set-file", str(p), "--h", "2", "--format", "json")
    assert json.loads(out)["cardinality"] == 10


def test_exit_codes(capsys):
    assert run(capsys, "sumset", "--set", "0,x", "--h", "2")[0] == 2
    assert run(capsys, "sumset", "--set", "1,1", "--h", "2")[0] == 2
    assert run(capsys, "sumset", "--set", "0,1", "--h", "0")[0] == 2
    assert run(capsys, "sumset", "--set", "0,4611686018427387904", "--h", "2")[0] == 3
    assert run(capsys, "normalize", "--set", "7")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["sumset", "--set", "0,1", "--h", "2", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "remark1", "--k", "9..5", "--h", "3"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "--theorem", "nope", "--k", "5", "--h", "3")[0] == 2


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "--set", "3,5,9,13", "--format", "json")
    assert json.loads(out) == {"set": [3, 5, 9, 13], "normal": [0, 1, 3, 5], "base": 3,
                               "dilation": 2}
    code, out, _ = run(capsys, "normalize", "--set", "0,1,2", "--format", "json")
    d = json.loads(out)
    assert d["normal"] == [0, 1, 2] and (d["base"], d["dilation"]) == (0, 1)
    code, _, err = run(capsys, "normalize", "--set", "7")
    assert code == 2 and "TooSmall" in err


def test_inverse(capsys):
    code, out, _ = run(capsys, "inverse", "--h", "3", "--k", "5", "--card", "14", "--format", "json")
    assert json.loads(out)["status"] == "Impossible"
    code, out, _ = run(capsys, "inverse", "--h", "2", "--k", "5", "--card", "9", "--format", "json")
    d = json.loads(out)
    assert d["status"] == "ExactMinimum" and d["structures"] == [{"kind": "FullInterval", "k": 5}]
    code, out, _ = run(capsys, "inverse", "--h", "3", "--k", "5", "--card", "17", "--format", "json")
    got = {(s["i"], s["j"]) for s in json.loads(out)["structures"]}
    assert got == {(1, 2), (4, 5), (1, 5), (1, 3), (3, 5)}
    assert run(capsys, "inverse", "--h", "3", "--k", "4", "--card", "14")[0] == 2


def test_classify_roundtrip(capsys):
    code, out, _ = run(capsys, "classify", "--set", "0,2,3,4,5", "--h", "2", "--format", "json")
    rec = VerificationRecord.from_dict(json.loads(out))
    assert code == 0 and rec.cardinality == 10 and rec.checks["theorem1"] == "pass"
    assert json.loads(rec.to_json()) == json.loads(out)
    code, out, _ = run(capsys, "classify", "--set", "0,1,2,3,4", "--h", "3", "--format", "json")
    assert json.loads(out)["cardinality"] == 13
    code, out, _ = run(capsys, "classify", "--set", "0,1,4,5,6", "--h", "3")
    assert code == 0 and "theorem2: vacuous" in out


def test_verify_writes_report(capsys, tmp_path):
    out_p, sum_p = tmp_path / "r.jsonl", tmp_path / "s.json"
    code, out, _ = run(capsys, "verify", "--theorem", "theorem1,theorem2", "--k", "5..6",
                       "--h", "2..3", "--jobs", "1", "--out", str(out_p), "--summary", str(sum_p))
    assert code == 0 and "PASS" in out
    lines = out_p.read_text().splitlines()
    recs = [VerificationRecord.from_json(x) for x in lines]
    assert [r.sort_key for r in recs] == sorted(r.sort_key for r in recs)
    summary = json.loads(sum_p.read_text())
    assert summary["failure_count"] == 0
    assert [s["spec"]["max_diameter"] for s in summary["sweeps"]] == [6, 7]


def test_verify_remark1_auto(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "remark1", "--k", "5..6", "--h", "3",
                       "--format", "json", "--jobs", "1")
    d = json.loads(out)
    assert code == 0
    for sweep in d["sweeps"]:
        k = sweep["spec"]["k"]
        assert sweep["spec"]["max_diameter"] == 2 * k + 2
        assert 3 * k - 1 in sweep["achievable_gaps"]["3"]


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "prop4", "--k", "5..12", "--h", "2..5",
                       "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["sweeps"][0]["spec"]["kinds"] == ["P4"]


def test_env_jobs_and_module_entry(tmp_path):
    env = dict(os.environ, SUMSET_JOBS="2")
    res = subprocess.run(
        [sys.executable, "-m", "hfold", "verify", "--theorem", "theorem1", "--k", "5",
         "--h", "2..3"],
        capture_output=True, text=True, env=env,
    )
    assert res.returncode == 0 and "PASS" in res.stdout
