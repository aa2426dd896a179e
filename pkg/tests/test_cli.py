import csv
import io
import json

import pytest

from bsymbol import cli, reports
from bsymbol.code_core import WeightEnumerator


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


P3R4 = ("--p", "3", "--e", "1", "--r", "4", "--N", "2")


def test_enumerate_b2_to_file(tmp_path):
    out = tmp_path / "enum.txt"
    assert cli.main(["enumerate", *P3R4, "--b", "2", "--out", str(out)]) == 0
    assert "1 + 40T^34 + 40T^38" in out.read_text()


def test_enumerate_b1(capsys):
    code, out, _ = run(capsys, "enumerate", *P3R4, "--b", "1")
    assert code == 0 and "1 + 40T^24 + 40T^30" in out


def test_enumerate_q3_r2(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "3", "--r", "2", "--N", "2", "--b", "2")
    assert code == 0 and "1 + 8T^4" in out


def test_enumerate_json_and_csv(capsys):
    code, out, _ = run(capsys, "enumerate", *P3R4, "--b-range", "1:5", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema_version"] == reports.SCHEMA_VERSION
    assert [e["b"] for e in doc["enumerators"]] == [1, 2, 3, 4, 5]
    assert all(a["agree"] for a in doc["agreement"])
    assert doc["enumerators"][3]["counts"] == {"0": 1, "40": 80}
    code, out, _ = run(capsys, "enumerate", *P3R4, "--b", "2", "--format", "csv")
    assert out == "weight,count\n0,1\n34,40\n38,40\n"


def test_enumerate_disagreement_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(reports, "closed_enumerator", lambda params, b: WeightEnumerator(b, {0: 1, 1: 80}))
    code, out, _ = run(capsys, "enumerate", *P3R4, "--b", "2")
    assert code == 1 and "DISAGREES" in out


@pytest.mark.parametrize("argv", [
    ("enumerate", "--p", "3", "--r", "4", "--N", "4", "--b", "2"),
    ("enumerate", "--p", "2", "--r", "2", "--N", "1"),
    ("enumerate", "--p", "3", "--r", "3", "--N", "2"),
    ("enumerate", "--p", "3", "--r", "4"),
    ("mu", *P3R4, "--b", "5"),
    ("enumerate", *P3R4, "--b", "40"),
    ("verify", *P3R4, "--samples", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv, expected", [
    (("--p", "3", "--e", "2", "--r", "4", "--N", "2", "--b", "3"), 50),
    (("--p", "5", "--e", "2", "--r", "4", "--N", "2", "--b", "3"), 338),
])
def test_mu(capsys, argv, expected):
    code, out, _ = run(capsys, "mu", *argv, "--format", "json")
    assert code == 0 and json.loads(out)["results"][0]["mu"] == expected


def test_mu_scan(capsys):
    code, out, _ = run(capsys, "mu", "--p", "3", "--r", "2", "--N", "2", "--b", "2", "--scan", "--format", "json")
    res = json.loads(out)["results"][0]
    assert code == 0 and res["primitive_count"] == 4 and sum(res["distribution"].values()) == 4


def test_table22_csv(capsys):
    code, out, err = run(capsys, "table22", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["p", "q", "r", "N", "b", "mu"]
    assert len(rows) == 22
    assert ["3", "3", "4", "2", "4", "20"] in rows
    assert ["3", "9", "6", "2", "6", "33215"] in rows
    assert ["5", "5", "4", "2", "2", "4"] in rows
    # the single differing row is reported, and is consistent locally
    assert "(3,9,6,2,5)" in err and "consistent with brute force: True" in err
    assert code == 0


def test_table22_json(capsys):
    code, out, _ = run(capsys, "table22", "--format", "json")
    rows = json.loads(out)["rows"]
    bad = [r for r in rows if not r["matches_published"]]
    assert code == 0 and len(bad) == 1
    analysis = bad[0]["mismatch_analysis"]
    assert analysis["local_mu_consistent"] and not analysis["published_mu_integral"]


@pytest.mark.parametrize("argv", [P3R4, ("--p", "5", "--e", "1", "--r", "4", "--N", "2")])
def test_verify_exhaustive(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv, "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and doc["provenance"]["exhaustive"]
    assert len(doc["checks"]) == 10 and all(c["pass"] for c in doc["checks"])


def test_verify_sampled_q9_r6(capsys):
    code, out, _ = run(capsys, "verify", "--p", "3", "--e", "2", "--r", "6", "--N", "2",
                       "--samples", "200", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert doc["provenance"]["seed"] == 0 and not doc["provenance"]["exhaustive"]


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(reports.theorems, "verify_lemma42", lambda params, a: False)
    code, out, _ = run(capsys, "verify", "--p", "3", "--r", "2", "--N", "2")
    assert code == 1 and "FAIL  lemma_multiset" in out


def test_mds(capsys):
    code, out, _ = run(capsys, "mds", *P3R4, "--b-range", "2:4", "--format", "json")
    res = {r["b"]: r for r in json.loads(out)["results"]}
    assert code == 0
    assert res[4]["is_mds"] and res[4]["d_b"] == 40
    assert not res[2]["is_mds"] and res[2]["d_b"] == 34


def test_json_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "--p", "5", "--r", "2", "--N", "2", "--format", "json", "--seed", "4")
        outs.append(out)
    assert outs[0] == outs[1]
    assert "seconds" not in outs[0]
    _, out, _ = run(capsys, "verify", "--p", "5", "--r", "2", "--N", "2", "--format", "json", "--timings")
    assert "seconds" in out


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "mu", *P3R4, "--b", "3", "--format", "csv")
    assert code == 0 and out == ""
    assert (tmp_path / "mu.csv").read_text() == "p,q,r,N,b,mu\n3,3,4,2,3,8\n"


def test_reports_embed_provenance(capsys):
    _, out, _ = run(capsys, "mu", *P3R4, "--b", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["params"]["modulus"] and doc["params"]["eta"]
    assert doc["results"][0]["eta_provenance"]["modulus"]
