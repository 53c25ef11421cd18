"""Exact Catalan sums over trees, evaluated at t = 1/4 in Q[1/pi]."""

import json

from ._catsum import (
    AlgebraElt,
    BudgetExceeded,
    Engine,
    ParseError,
    PiPoly,
    meander_count,
    meander_probability,
    oracle,
    oracle_decorated,
    parse_algebra,
    parse_pipoly,
    star_3f2_partial,
    star_eval,
)
from ._catsum import table as _table


def tree_sum(tree):
    """Closed form of S(T) for a tree given as nested parentheses."""
    return Engine().sum(tree)


def table(max_vertices=7):
    return [json.loads(row) for row in _table(max_vertices)]


__all__ = [
    "AlgebraElt",
    "BudgetExceeded",
    "Engine",
    "ParseError",
    "PiPoly",
    "meander_count",
    "meander_probability",
    "oracle",
    "oracle_decorated",
    "parse_algebra",
    "parse_pipoly",
    "star_3f2_partial",
    "star_eval",
    "table",
    "tree_sum",
]
