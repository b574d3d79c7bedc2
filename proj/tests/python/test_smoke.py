"""End-to-end checks of the python surface against known exact values."""

import json
import pathlib

import pytest

import cayleylsa as c

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_cayley_polynomial_n2():
    assert c.cayley_polynomial_str(2) == "x1*x2 - 1/3*x1^3"
    assert c.cayley_polynomial(2) == {
        "nvars": 2,
        "terms": [{"exp": [1, 1], "c": "1"}, {"exp": [3, 0], "c": "-1/3"}],
    }


def test_recognition():
    f = c.cayley_polynomial(4)
    assert c.is_cayley(f)
    f["terms"][0]["c"] = "2"
    assert not c.is_cayley(f)


def test_bundle_cross_checks():
    b = c.cayley_bundle(3)
    assert b["n"] == 3
    assert b["F"] == c.cayley_polynomial(3)
    assert b["algebra"] == c.standard_filiform(3)
    assert b["H"] == c.canonical_filiform_metric(3)
    assert b["B"] == [["1/4", "0", "0"], ["0", "1/2", "0"], ["0", "0", "3/4"]]


def test_report_on_shipped_data():
    a = json.loads((DATA / "filiform_n4.json").read_text())
    h = json.loads((DATA / "filiform_n4_metric.json").read_text())
    r = c.report(a, h)
    assert all(chk["pass"] for chk in r["checks"])
    assert r["dims"] == {"ann": 1, "der": 4, "sder": 1, "ider": 0, "series": [4, 3, 2, 1, 0]}
    assert r["verdicts"] == {"filiform": True, "cayley": True, "extensible": True}
    assert c.report_text(a, h).strip().endswith("result: PASS")


def test_build_and_recover_round_trip():
    a = c.standard_filiform(5)
    h = c.canonical_filiform_metric(5)
    model = c.build_polynomial(a, h)
    assert model["F"] == c.cayley_polynomial(5)
    assert c.recover_lsa(model["F"], h) == a


def test_canonicalize_postconditions():
    n = 4
    a = c.standard_filiform(n)
    h = c.canonical_filiform_metric(n)
    res = c.canonicalize_filiform_metric(a, h)
    assert res["sign"] in (1, -1)
    target = [
        ["1" if i + j == n - 1 else "0" for j in range(n)] for i in range(n)
    ]
    assert res["canonical"]["matrix"] == target


def test_derivation_dims_and_isometry():
    a = c.standard_filiform(3)
    h = c.canonical_filiform_metric(3)
    assert c.derivation_dims(a) == {"der": 3}
    assert c.derivation_dims(a, h) == {"der": 3, "sder": 1, "ider": 0}

    trivial = {"dim": 2, "products": []}
    identity = {"dim": 2, "matrix": [["1", "0"], ["0", "1"]]}
    b = c.isometry_derivation(trivial, identity)
    assert b == [["0", "-1"], ["1", "0"]]


def test_verify_flags_broken_axioms():
    non_abelian = {
        "dim": 2,
        "products": [{"i": 1, "j": 2, "k": 1, "c": "1"}],
    }
    r = c.verify(non_abelian)
    failed = {chk["name"] for chk in r["checks"] if not chk["pass"]}
    assert "abelian" in failed


def test_group_law_sampled_matches_symbolic():
    a = c.standard_filiform(3)
    h = c.canonical_filiform_metric(3)
    assert c.group_law_holds(a, h)
    assert c.group_law_holds(a, h, samples=25, seed=11)


def test_malformed_input_raises_value_error():
    with pytest.raises(ValueError):
        c.verify({"dim": "four", "products": []})
    with pytest.raises(ValueError):
        c.report({"dim": 2, "products": []}, {"dim": 3, "matrix": [["1"]]})
    with pytest.raises(ValueError):
        c.cayley_polynomial(0)
