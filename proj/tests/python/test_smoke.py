import os
from fractions import Fraction
from pathlib import Path

import pytest

import subtrop

GOLDEN = Path(os.environ.get("SUBTROP_GOLDEN_DIR", Path(__file__).resolve().parents[2] / "golden"))


def load(name):
    return subtrop.parse_system((GOLDEN / name).read_text())


def test_parse_and_print_round_trip():
    sys = load("two_rows_sat.spp")
    assert sys.is_parametric
    assert len(sys.signs) == 2
    assert subtrop.parse_system(sys.to_text()) == sys


def test_decide_golden_systems():
    sat = subtrop.decide(load("two_rows_sat.spp"))
    assert sat["status"] == "sat"
    assert subtrop.decide(load("two_rows_unsat.spp"))["status"] == "unsat"
    zero = subtrop.decide(load("zero_row.spp"))
    assert zero["status"] == "unsat"
    assert zero["condition_satisfiable"]
    assert zero["zero_row"] == 1
    assert subtrop.exhaustive_decide(load("two_rows_unsat.spp")) == "unsat"
    assert subtrop.grid_search(load("two_rows_unsat.spp"), 20) is None


def test_symbolic_witness():
    w = subtrop.symbolic_t(load("two_rows_sat.spp"), [-12, -11])
    assert len(w["terms"]) == 7
    assert w["terms"][0] == ("c11", "c12")
    assert w["text"].endswith("z = (t^-12, t^-11)")


def test_verify_quadratic():
    f = load("quadratic_sat.spp").instantiate({"c0": 1, "c1": 1, "c2": 1})
    n = subtrop.decide(f, shrink=True)["n"]
    assert n == [1]
    report = subtrop.verify_witness(f, n)
    assert report["t"] == Fraction(3)
    assert report["values"] == [Fraction(7)]
    assert report["ok"]
    assert subtrop.verify_witness(f, n, Fraction(7, 2))["ok"]


def test_explain_and_errors():
    assert subtrop.explain(load("quadratic_unsat.spp")) == "clause 1 1: [2: -1]\nclause 1 3: [2: 1]\n"
    cnf = subtrop.build_cnf(load("quadratic_unsat.spp"))
    assert cnf["dim"] == 1 and len(cnf["clauses"]) == 2
    with pytest.raises(subtrop.SubtropError):
        subtrop.parse_system("vars x\npoly f = 2*x +\n")
    with pytest.raises(ValueError):
        subtrop.verify_witness(load("quadratic_sat.spp"), [1])
