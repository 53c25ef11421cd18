import json
from fractions import Fraction

import pytest

import catsum


def test_edge_sum_closed_form_and_value():
    s = catsum.tree_sum("(())")
    assert s == catsum.parse_algebra("(H1 - 1)/(4*t^2)")
    assert s.value() == catsum.parse_pipoly("16/pi - 4")
    assert str(s.value()) == "16/pi - 4"


def test_series_matches_oracle():
    s = catsum.tree_sum("((())())")
    assert s.series(10) == catsum.oracle("((())())", 10)


def test_decorated_tree():
    tree = {"vertices": [
        {"parent": -1, "color": "white", "rel": "ge", "k": 1},
        {"parent": 0, "color": "black", "rel": "none", "k": 0},
        {"parent": 0, "color": "white", "rel": "le", "k": -1}]}
    e = catsum.Engine()
    s = e.sum_decorated(json.dumps(tree))
    assert s.series(8) == catsum.oracle_decorated(json.dumps(tree), 8)


def test_star_and_meander():
    assert catsum.star_eval(3) == catsum.parse_pipoly("64/(15*pi)")
    assert catsum.star_3f2_partial(1, 1) == Fraction(1)
    p = catsum.meander_probability("upper: 0-1; lower: 0-1")
    assert p.coeffs == {0: Fraction(-1, 2), 1: Fraction(2)}
    assert catsum.meander_count(3) == 8


def test_parse_errors():
    with pytest.raises(ValueError):
        catsum.tree_sum("(()")
    with pytest.raises(ValueError):
        catsum.meander_probability("upper: 0-2; lower: 0-1")


def test_table_small():
    rows = catsum.table(4)
    assert len(rows) == 4 and all(r["ok"] for r in rows)
