import json
import subprocess
import sys

import pytest

from polebound.cli import main, parse_case
from polebound.algebra import CaseSpec, InvalidCaseSpec, SideSpec


def run_cli(*argv):
    from io import StringIO
    import contextlib
    out = StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


def test_parse_case_grammar():
    assert parse_case("dihedral:Q,octahedral") == \
        CaseSpec(SideSpec("dihedral", "Q"), SideSpec("octahedral"))
    assert parse_case("dihedral:P,dihedral:P,diffK") == \
        CaseSpec(SideSpec("dihedral", "P"), SideSpec("dihedral", "P"), False)
    assert parse_case("non-solvable-polyhedral,tetrahedral").side1.cls == "nsp"
    for bad in ("dihedral", "dihedral:P,dihedral:Q", "foo,bar",
                "tetrahedral:P,octahedral", "dihedral:Z,octahedral"):
        with pytest.raises(InvalidCaseSpec):
            parse_case(bad)


def test_usage_error_exit_code_two():
    proc = subprocess.run(
        [sys.executable, "-m", "polebound", "bounds", "--case", "bogus"],
        capture_output=True, text=True)
    assert proc.returncode == 2


def test_table_json_round_trip():
    code, out = run_cli("table", "--id", "thm3.2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc) == 9
    again = json.dumps(doc, sort_keys=True, indent=2, separators=(",", ": "))
    assert again == out.strip()
    nsp_row = [r for r in doc if r["case"] == "nsp, nsp"][0]
    assert nsp_row["bound"]["expr"] == "7 - 4*sqrt(3)"
    assert nsp_row["bound"]["exact"] == {"a": "7", "b": "0", "c": "-4",
                                         "d": "0"}


def test_chebotarev_example_output():
    code, out = run_cli("chebotarev", "--example", "dihedral1",
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)[0]
    assert doc["group_order"] == 32
    assert doc["density_gt"] == "1/8" and doc["density_neq"] == "1/4"
    code, _ = run_cli("chebotarev", "--example", "z4-check")
    assert code == 0


def test_poles_and_bounds_commands():
    code, out = run_cli("poles", "--case", "dihedral:P,dihedral:IP,sameK",
                        "--format", "json")
    assert code == 0
    doc = json.loads(out)
    c22 = [r for r in doc if r["moment"] == "c22"][0]
    assert c22["outcomes"] == [8, 12]
    code, out = run_cli("bounds", "--case", "tetrahedral,tetrahedral",
                        "--target", "gt", "--strategy", "S1",
                        "--mode", "pinned", "--format", "json")
    assert code == 0
    doc = json.loads(out)[0]
    assert doc["uniform_bound"]["exact"]["a"] == "1/16"
    assert doc["mode"] == "pinned"
    assert len(doc["branches"]) >= 2  # the mu identification forks


def test_formats_render():
    for fmt in ("md", "csv"):
        code, out = run_cli("table", "--id", "lemma3.1", "--format", fmt)
        assert code == 0 and "c40" in out


def test_verify_all_reports_known_discrepancies():
    code, out = run_cli("verify-all", "--format", "json")
    doc = json.loads(out)
    bad = [r for r in doc if not r["match"]]
    # exactly the two source rows the engine refutes, both annotated
    assert code == 1
    assert len(bad) == 2
    assert all(r["section"] == "lemma 4.3" and r["note"] for r in bad)
    good = [r for r in doc if r["match"]]
    assert len(good) == len(doc) - 2 >= 100
