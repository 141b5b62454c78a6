import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from affhecke.cli import REPORT_SCHEMA, RunConfig, run
from affhecke.qring import MultiplicityParams
from affhecke.rootsys import build_root_system
from affhecke.spherical import spherical_value


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_spherical_value_matches_library():
    code, out = call("spherical", "--type", "B2", "--lambda", "1,0", "--x", "2/3,5/7", "--q", "1/2")
    assert code == 0
    rs = build_root_system("B2")
    want = spherical_value(rs, MultiplicityParams.numeric(rs, "1/2"), (1, 0), (Fraction(2, 3), Fraction(5, 7)))
    assert Fraction(json.loads(out)) == want


def test_spherical_formal_q():
    code, out = call("compute", "spherical", "--type", "A1", "--lambda", "0", "--x", "3", "--formal-q")
    assert code == 0
    assert json.loads(out) == "1 + q^2"


def test_spherical_table_csv():
    code, out = call("spherical", "--type", "A1", "--lambda", "0", "--x", "3", "--q", "1/2", "--table", "-L", "2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out), delimiter=";"))
    # dominant weights of norm at most 2
    assert [r["lambda"] for r in rows] == ["[0]", "[1]", "[2]"]
    assert set(rows[0]) == {"lambda", "Phi", "Delta"}


def test_degenerate_point_is_usage_error():
    code, _ = call("spherical", "--type", "A2", "--lambda", "1,0", "--x", "1,1", "--q", "1/2")
    assert code == 2


def test_bad_type_is_usage_error():
    assert call("verify", "--type", "Z9")[0] == 2
    assert call("verify", "--type", "A2", "--suite", "nonsense")[0] == 2
    assert call("P", "--type", "A2", "--lambda", "1,x")[0] == 2


def test_compute_P_and_pieri():
    code, out = call("compute", "P", "--type", "A1", "--lambda", "1")
    assert code == 0 and "e[1]" in out and "e[-1]" in out
    code, out = call("pieri", "--type", "A1", "--lambda", "0")
    d = json.loads(out)
    assert str(d["U"]) == "0"
    assert d["terms"] == [{"nu": [1], "V": "q^-1 + q"}]


def test_compute_hl_and_morris():
    code, out = call("hl", "--n", "2", "--lambda", "1,0")
    assert code == 0 and "q" in out
    code, out = call("hl", "--n", "2", "--lambda", "1,0", "--q", "0")
    assert code == 0
    code, out = call("morris", "--n", "2", "--r", "2", "--lambda", "1,0")
    assert code == 0
    assert json.loads(out)["terms"] == [{"mu": [2, 1], "V": "1"}]


def test_verify_report_schema():
    code, out = call("verify", "--type", "A1", "--suite", "all", "--q", "1/2", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == REPORT_SCHEMA
    assert rep["status"] == "pass"
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids)
    assert all(c["status"] in ("pass", "skip", "deviation") for c in rep["checks"])
    assert set(rep["timings"]) >= {"relations", "spherical", "pieri"}


def test_verify_is_deterministic():
    a = json.loads(call("verify", "--type", "A2", "--suite", "relations", "--seeds", "1,2")[1])
    b = json.loads(call("verify", "--type", "A2", "--suite", "relations", "--seeds", "1,2")[1])
    assert a["checks"] == b["checks"]


def test_deviation_is_reported_not_failed():
    code, out = call("verify", "--type", "A2", "--suite", "spherical", "--format", "text")
    assert code == 0
    assert "DEVIATION" in out
    rep = json.loads(call("verify", "--type", "A2", "--suite", "spherical")[1])
    assert rep["deviations"]


def test_braid_suite_has_table():
    rep = json.loads(call("verify", "--type", "A2", "--suite", "braid")[1])
    assert len(rep["tables"]["a2_braid_table"]) == 13


def test_config_file(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"type": "A1", "suite": "relations", "seeds": [1, 2]}))
    code, out = call("verify", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["config"]["seeds"] == [1, 2]
    assert RunConfig.from_file(str(cfg)).type == "A1"


def test_gln_suite():
    code, out = call("verify", "--suite", "gln", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("id")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "affhecke.cli", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()


@pytest.mark.parametrize("fmt", ["json", "csv", "text"])
def test_formats(fmt):
    code, out = call("verify", "--type", "A1", "--suite", "braid", "--format", fmt)
    assert code == 0 and out
