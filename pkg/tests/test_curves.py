from fractions import Fraction

import pytest

from nodecurves.constructions import (
    chung_yao_lattice,
    extremal_seven_config,
    points_on_line,
    random_independent_set,
    random_line_arrangement,
)
from nodecurves.curves import (
    Curve,
    curve_from_json,
    curve_to_json,
    d,
    find_maximal_curve,
    is_maximal_curve,
    line_product,
    maximal_curve_factorization_check,
    nodes_on_curve,
    uses_line,
)
from nodecurves.nodesets import NodeSet, is_independent, node
from nodecurves.poly2 import Line, X, Y, space_dimension


def test_capacity_known_values():
    assert d(5, 1) == 6
    assert d(5, 2) == 11
    assert d(6, 2) == 13
    assert d(7, 2) == 15
    assert d(3, 1) == 4
    assert d(3, 2) == 7


def test_capacity_identities():
    for n in range(8):
        assert d(n, 0) == 0
        assert d(n, n) == space_dimension(n) - 1
        if n >= 1:
            assert d(n, 1) == n + 1


def test_capacity_range_validation():
    with pytest.raises(ValueError):
        d(3, 4)
    with pytest.raises(ValueError):
        d(3, -1)


def test_curve_requires_positive_degree():
    with pytest.raises(ValueError):
        Curve(X * 0 + 1)


def test_line_product_degree():
    l1 = Line(Fraction(0), Fraction(1), Fraction(0))
    l2 = Line(Fraction(1), Fraction(0), Fraction(0))
    c = line_product([l1, l2])
    assert c.degree == 2
    assert c.poly == Y * X


def test_nodes_on_curve_preserves_order():
    c = Curve.from_line(Line(Fraction(0), Fraction(1), Fraction(0)))
    xs = NodeSet.from_pairs([(3, 0), (0, 1), (1, 0), (2, 2)])
    on = nodes_on_curve(xs, c)
    assert tuple(on) == (node(3, 0), node(1, 0))


def test_line_holds_at_most_capacity_independent_nodes():
    # seven nodes on a line: at n = 5 the line's capacity is six
    line = Line(Fraction(1), Fraction(-1), Fraction(0))
    xs = points_on_line(line, 7, seed=3)
    assert not is_independent(xs, 5)
    assert is_independent(xs.subset(range(6)), 5)


def test_is_maximal_curve():
    line = Line(Fraction(0), Fraction(1), Fraction(-1))
    six = points_on_line(line, 6, seed=0)
    c = Curve.from_line(line)
    assert is_maximal_curve(six, c, 5)
    assert not is_maximal_curve(six.subset(range(5)), c, 5)


def test_is_maximal_curve_validation():
    line = Line(Fraction(0), Fraction(1), Fraction(-1))
    c = Curve.from_line(line)
    with pytest.raises(ValueError):
        is_maximal_curve(points_on_line(line, 7, seed=1), c, 5)
    with pytest.raises(ValueError):
        is_maximal_curve(NodeSet(()), Curve((X * Y) ** 3), 5)


def test_maximal_curve_factorization():
    cfg = extremal_seven_config(5, 4, seed=2)
    assert maximal_curve_factorization_check(cfg.nodes, cfg.curve, 5)


def test_find_maximal_curve_on_extremal_config():
    cfg = extremal_seven_config(5, 4, seed=5)
    found = find_maximal_curve(cfg.nodes, 1, 5, residual=3)
    assert found is not None
    assert len(nodes_on_curve(cfg.nodes, found)) == d(5, 1)


def test_find_maximal_curve_absent_on_generic_set():
    xs = random_independent_set(9, 5, seed=9)
    assert find_maximal_curve(xs, 1, 5, residual=3) is None


def test_find_maximal_curve_validation():
    xs = random_independent_set(4, 2, seed=0)
    with pytest.raises(ValueError):
        find_maximal_curve(xs, 0, 2, residual=0)
    with pytest.raises(ValueError):
        find_maximal_curve(xs, 1, 2, residual=4)


def test_uses_line_on_chung_yao():
    lattice = chung_yao_lattice(random_line_arrangement(4, seed=1), 2)
    xs = lattice.nodes
    for li, line in enumerate(lattice.arrangement.lines):
        users = [i for i in range(len(xs)) if uses_line(xs, i, line, 2)]
        off = [i for i in range(len(xs)) if li not in lattice.node_lines[i]]
        assert users == off
        assert len(users) == 3


def test_uses_line_requires_poised():
    xs = random_independent_set(5, 2, seed=0)
    with pytest.raises(ValueError):
        uses_line(xs, 0, Line(Fraction(0), Fraction(1), Fraction(0)), 2)


def test_curve_json_round_trip():
    c = Curve((X + Y) * (X - Y) + 1)
    assert curve_from_json(curve_to_json(c)) == c


def test_curve_json_degree_must_match():
    obj = curve_to_json(Curve(X * Y))
    obj["degree"] = 3
    with pytest.raises(ValueError):
        curve_from_json(obj)
    with pytest.raises(ValueError):
        curve_from_json({"coeffs": {"1,1": "1"}})
