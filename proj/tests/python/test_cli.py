import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("SPHEREX_CLI", "spherex")


def run(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


def test_group_info():
    p = run("group", "info", "D:2,2")
    assert p.returncode == 0
    assert "order:          40" in p.stdout
    j = json.loads(run("--format", "json", "group", "info", "BT").stdout)
    assert j["order"] == 24 and j["num_classes"] == 7 and j["invariant_factors"] == [3]


def test_xi_table_rows():
    rows = list(csv.reader(io.StringIO(run("--format", "csv", "xi-table", "D:2,2").stdout)))
    scaled = {r[0]: r[-1] for r in rows[2:]}
    assert {k: v for k, v in scaled.items() if k.startswith("varrho")} == {
        "varrho_1,0": "-4", "varrho_1,1": "-9", "varrho_2,0": "-16", "varrho_2,1": "-1",
        "varrho_3,0": "4", "varrho_3,1": "-1", "varrho_4,0": "16", "varrho_4,1": "-9",
    }


def test_ccs_table_lens_space():
    j = json.loads(run("--format", "json", "ccs-table", "C:5,2").stdout)
    assert [r["c1"]["g"] for r in j["irreps"]] == ["0", "1/5", "2/5", "3/5", "4/5"]


def test_char_table_csv_is_rectangular():
    rows = list(csv.reader(io.StringIO(run("--format", "csv", "char-table", "BO").stdout)))
    assert rows[0][0].startswith("# group=BO")
    assert rows[1][:2] == ["label", "degree"]
    assert len(rows) == 2 + 8 and all(len(r) == 10 for r in rows[1:])


def test_classify():
    p = run("classify", "BIxC:7")
    assert p.returncode == 0
    assert p.stdout.startswith("BIxC:7: Injective, 63 irreps")
    j = json.loads(run("--format", "json", "classify", "D:3,1").stdout)
    assert j["verdict"] == "Injective"
    # equal CCS vectors for rho_1 and rho_5 of BD(6)
    p = run("classify", "BD:6")
    assert p.returncode == 1 and "collision: rho_1 rho_5" in p.stdout


def test_conjecture_scan():
    p = run("--format", "json", "conjecture-scan", "--k-max", "3", "--r-max", "2")
    assert p.returncode == 0
    pts = json.loads(p.stdout)
    assert [pt["params"] for pt in pts] == [[2, 1], [2, 2], [3, 1], [3, 2]]
    assert all(pt["status"] == "verified" and pt["counterexamples"] == [] for pt in pts)


def test_iso_check():
    p = run("iso-check")
    assert p.returncode == 0
    assert "FAIL" not in p.stdout


def test_spin_override():
    assert run("--spin-character", "x=5", "xi-table", "D:2,2").returncode == 0
    p = run("--spin-character", "x=2", "xi-table", "D:2,2")
    assert p.returncode == 2 and "spin character" in p.stderr


@pytest.mark.parametrize("args", [
    ["xi-table", "Q:1"],
    ["xi-table", "C:4,2"],
    ["--format", "yaml", "irreps", "BT"],
    ["irreps"],
    ["conjecture-scan", "--k-max", "1"],
    [],
])
def test_usage_errors(args):
    assert run(*args).returncode == 2


def test_element_cap():
    p = run("irreps", "BI", env={"SPHEREX_ELEMENT_CAP": "100"})
    assert p.returncode == 2 and "resource limit" in p.stderr
    assert run("--element-cap", "100", "irreps", "BI").returncode == 2
    assert run("--element-cap", "200", "irreps", "BI").returncode == 0
