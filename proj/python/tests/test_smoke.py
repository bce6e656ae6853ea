import json
from fractions import Fraction

import pytest

import rbl_py as rbl


def test_colouring_roundtrip():
    c = rbl.random_colouring(40, "1/2", 3)
    assert rbl.Colouring.from_rbc1(c.to_rbc1()) == c
    p = rbl.paley_colouring(13)
    assert all(len(p.red_neighbours(v)) == 6 for v in range(13))
    with pytest.raises(ValueError):
        rbl.paley_colouring(7)


def test_density_is_exact():
    c = rbl.Colouring(4)
    c.set_red(0, 2)
    assert Fraction(rbl.red_density(c, [0], [2, 3])) == Fraction(1, 2)
    with pytest.raises(ValueError):
        rbl.red_density(c, [], [1])


def test_cliques():
    p = rbl.paley_colouring(17)
    assert len(rbl.max_clique(p, "red")) == 3
    assert rbl.has_mono_clique(p, 4, 4)[0] == "neither"


def test_run_and_check():
    c = rbl.random_colouring(300, "1/2", 5)
    trace = rbl.run_book(c, 12, 12, mu="3/5", epsilon="0.3", x_min=5, w_min=300)
    doc = json.loads(trace)
    assert doc["summary"]["halting_reason"]
    ok, report = rbl.check_trace(c, trace)
    assert ok
    assert json.loads(report)["checks"]["2"]["status"] == "pass"

    doc["steps"][0]["p"] = "1/3"
    ok, _ = rbl.check_trace(c, json.dumps(doc))
    assert not ok


def test_ladder():
    assert rbl.height("0.503", "1/2", "0.1", 100) == 3
    assert Fraction(rbl.alpha(3, "1/10", 100)) == Fraction(121, 100000)


def test_bounds():
    assert rbl.eval("f1", 0.0, 0.0) == pytest.approx(2.0)
    ok, csv = rbl.verify_bounds("A", jobs=2)
    assert ok
    assert csv.startswith("claim_id,")


def test_tables():
    assert rbl.es_bound(10, 10) == 184756
    assert rbl.es_bound(200, 200) > 2**390
    assert rbl.tables(10, 11).startswith("k,ell,es_bound")
    outcome, clique = rbl.es_greedy(rbl.random_colouring(20, "1/2", 1), 3, 3)
    assert outcome != "exhausted" and len(clique) == 3
    assert rbl.known_ramsey(3, 3) == 6
