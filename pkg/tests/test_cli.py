import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from eulerian import formats
from eulerian.cli import main, parse_rational
from eulerian.triangles import row


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_gen_csv():
    code, out = run("gen", "--family", "D", "--n", "4", "--route", "recurrence", "--format", "csv")
    assert code == 0
    assert out.splitlines()[-1] == "4,1,36,118,36,1"


def test_gen_brenti():
    code, out = run("gen", "--family", "BrentiD", "--n", "4", "--route", "brute")
    assert code == 0 and out.splitlines()[-1] == "4,1,44,102,44,1"


def test_gen_trivial():
    assert run("gen", "--family", "A", "--n", "0") == (0, "0,1\n")


@pytest.mark.parametrize("family, route", [("A", "derived"), ("D", "closed"), ("BrentiD", "recurrence"), ("X", None)])
def test_gen_bad_combination(family, route):
    argv = ["gen", "--family", family, "--n", "3"] + (["--route", route] if route else [])
    assert run(*argv)[0] == 2


def test_gen_budget():
    assert run("gen", "--family", "B", "--n", "6", "--route", "brute", "--budget", "100")[0] == 3


def test_gen_routes_agree():
    outs = {r: run("gen", "--family", "Dtilde", "--n", "7", "--route", r)[1] for r in ("recurrence", "derived", "independent", "brute")}
    assert len(set(outs.values())) == 1


@pytest.mark.parametrize("fmt", ["csv", "bfile", "json"])
def test_formats_round_trip_through_cli(fmt):
    _, out = run("gen", "--family", "B", "--n", "25", "--format", fmt)
    assert formats.DECODERS[fmt](out) == [row("B", n) for n in range(26)]


def test_bfile_offset():
    _, out = run("gen", "--family", "B", "--n", "2", "--format", "bfile", "--offset", "1")
    assert out.splitlines()[:3] == ["1 1", "2 1", "3 1"]
    assert formats.from_bfile(out, offset=1) == [(1,), (1, 1), (1, 6, 1)]


@given(st.lists(st.integers(0, 10**40), min_size=0, max_size=10))
def test_encodings_agree(values):
    # pack into a triangle shape
    rows, pos, n = [], 0, 0
    while pos + n + 1 <= len(values):
        rows.append(tuple(values[pos : pos + n + 1]))
        pos += n + 1
        n += 1
    for fmt in ("csv", "bfile", "json"):
        assert formats.DECODERS[fmt](formats.ENCODERS[fmt](rows)) == rows


def test_output_records_round_trip():
    recs = list(formats.records("B", [row("B", n) for n in range(30)]))
    assert all(r.as_int == row("B", r.n)[r.k] for r in recs)


def test_hankel_command():
    code, out = run("hankel", "--family", "B", "--t", "1", "--m", "3")
    assert code == 0
    assert out.splitlines()[:2] == ["minor 1: 1", "minor 2: 4"]
    assert out.rstrip().endswith("PASS (positive)")

    code, out = run("hankel", "--family", "A", "--t", "0", "--m", "2")
    assert code == 0 and "minor 2: 0" in out and "PASS" in out

    code, out = run("hankel", "--family", "Dtilde", "--t", "1/2", "--m", "2")
    assert code == 0 and "minor 2: -1/4" in out and "expected-negative" in out


def test_decimal_rejected():
    assert run("hankel", "--family", "A", "--t", "0.5", "--m", "2")[0] == 2
    assert parse_rational("-3/4") == parse_rational("-6/8")


def test_check_identities():
    code, out = run("check", "--suite", "identities", "--n-max", "15")
    assert code == 0
    assert out.rstrip().splitlines()[-1].endswith("checks passed")


def test_check_moments():
    code, out = run("check", "--suite", "moments", "--t", "1/2,2", "--tol", "1e-9")
    assert code == 0
    assert "FAIL" not in out


def test_check_conjectures():
    code, out = run("check", "--suite", "conjectures", "--n-max", "25")
    assert code == 0 and "no violations found" in out and "(empirical)" in out


def test_check_json():
    code, out = run("check", "--suite", "conjectures", "--n-max", "10", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["checks"][0]["checked"] > 0


def test_check_failure_exit_code(monkeypatch):
    from eulerian import verify

    def broken(*a, **k):
        return [verify.CheckResult("fake", "n<=1", 1, {"n": 1, "k": 0})]

    monkeypatch.setattr(verify, "run_suite", broken)
    code, out = run("check")
    assert code == 1 and "FAIL fake" in out and "n=1,k=0" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerian", "gen", "--family", "B", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "0,1\n1,1,1\n2,1,6,1\n"
