import random
from fractions import Fraction
from itertools import combinations

import pytest

from nodecurves.constructions import (
    GenerationError,
    LineArrangement,
    PairDivisionInstance,
    chung_yao_lattice,
    extend_to_maximal_on_curve,
    extend_to_poised,
    extremal_config,
    extremal_seven_config,
    gc_corollary_config,
    independent_set_on_curve,
    pair_division,
    points_on_line,
    principal_lattice,
    random_independent_set,
    random_line_arrangement,
)
from nodecurves.curves import d, line_product, nodes_on_curve
from nodecurves.nodesets import NodeSet, is_independent, is_poised, node
from nodecurves.poly2 import Line, space_dimension


def test_random_independent_set_properties():
    xs = random_independent_set(12, 5, seed=4)
    assert len(xs) == 12
    assert is_independent(xs, 5)


def test_random_independent_set_deterministic():
    assert random_independent_set(8, 4, seed=1) == random_independent_set(8, 4, seed=1)
    assert random_independent_set(8, 4, seed=1) != random_independent_set(8, 4, seed=2)


def test_random_independent_set_size_cap():
    with pytest.raises(ValueError):
        random_independent_set(22, 5, seed=0)


def test_points_on_line():
    line = Line(Fraction(2), Fraction(1), Fraction(-3))
    xs = points_on_line(line, 9, seed=0)
    assert len(xs) == 9
    assert all(line.contains(p) for p in xs)


def test_random_line_arrangement_general_position():
    arr = random_line_arrangement(5, seed=3)
    assert len(arr) == 5
    assert arr.is_general_position()


def test_line_arrangement_detects_concurrence():
    lines = (
        Line(Fraction(1), Fraction(-1), Fraction(0)),
        Line(Fraction(2), Fraction(-1), Fraction(0)),
        Line(Fraction(3), Fraction(-1), Fraction(0)),
    )
    assert not LineArrangement(lines).is_general_position()


def test_line_arrangement_detects_parallels():
    lines = (
        Line(Fraction(1), Fraction(-1), Fraction(0)),
        Line(Fraction(1), Fraction(-1), Fraction(5)),
    )
    assert not LineArrangement(lines).is_general_position()


def test_chung_yao_lattice_is_poised_with_delta_fundamentals():
    lattice = chung_yao_lattice(random_line_arrangement(5, seed=2), 3)
    xs = lattice.nodes
    assert len(xs) == space_dimension(3)
    assert is_poised(xs, 3)
    for i, fund in enumerate(lattice.fundamentals):
        for j, p in enumerate(xs):
            assert fund.evaluate(p) == (1 if i == j else 0)


def test_chung_yao_wrong_line_count():
    with pytest.raises(ValueError):
        chung_yao_lattice(random_line_arrangement(4, seed=0), 3)


def test_principal_lattice():
    xs = principal_lattice(3)
    assert len(xs) == 10
    assert is_poised(xs, 3)
    assert principal_lattice(0) == NodeSet((node(0, 0),))


def test_independent_set_on_curve():
    cfg = independent_set_on_curve(5, 2, 9, seed=6)
    assert len(cfg.nodes) == 9
    assert is_independent(cfg.nodes, 5)
    assert all(cfg.curve.poly.evaluate(p) == 0 for p in cfg.nodes)
    assert cfg.curve.degree == 2


def test_independent_set_on_curve_size_cap():
    with pytest.raises(ValueError):
        independent_set_on_curve(5, 1, 7, seed=0)


def test_extremal_config_layout():
    cfg = extremal_config(5, 2, 2, seed=8)
    assert len(cfg.nodes) == d(5, 2) + 2
    assert is_independent(cfg.nodes, 5)
    assert cfg.residual_indices == (11, 12)
    for idx in cfg.residual_indices:
        assert cfg.curve.poly.evaluate(cfg.nodes[idx]) != 0
    assert len(nodes_on_curve(cfg.nodes, cfg.curve)) == d(5, 2)


def test_extremal_seven_window():
    with pytest.raises(ValueError):
        extremal_seven_config(5, 5, seed=0)
    with pytest.raises(ValueError):
        extremal_seven_config(5, 3, seed=0)


def test_extremal_config_respects_total_capacity():
    with pytest.raises(ValueError):
        # d(3,3) + 3 = 9 + 3 exceeds dim = 10
        extremal_config(3, 3, 3, seed=0)


def test_extend_to_maximal_on_curve():
    line = Line(Fraction(1), Fraction(1), Fraction(-4))
    start = points_on_line(line, 2, seed=0)
    grown = extend_to_maximal_on_curve(start, [line], 5, seed=1)
    assert len(grown) == d(5, 1)
    assert tuple(grown)[:2] == tuple(start)
    assert is_independent(grown, 5)
    assert extend_to_maximal_on_curve(grown, [line], 5, seed=2) == grown


def test_extend_to_maximal_rejects_off_curve_nodes():
    line = Line(Fraction(0), Fraction(1), Fraction(0))
    xs = NodeSet.from_pairs([(0, 0), (1, 1)])
    with pytest.raises(ValueError):
        extend_to_maximal_on_curve(xs, [line], 5, seed=0)


def test_extend_to_poised():
    start = random_independent_set(5, 3, seed=3)
    full = extend_to_poised(start, 3, seed=4)
    assert len(full) == space_dimension(3)
    assert is_poised(full, 3)
    assert tuple(full)[:5] == tuple(start)


def test_poisedness_survives_tiny_jitter():
    # openness: a poised set stays poised under small rational perturbation
    rng = random.Random(0)
    eps = Fraction(1, 10**9)
    for trial in range(100):
        xs = extend_to_poised(NodeSet(()), 2, seed=trial, grid=6)
        moved = NodeSet(
            tuple(
                node(p.x + rng.randrange(-5, 6) * eps, p.y + rng.randrange(-5, 6) * eps)
                for p in xs
            )
        )
        assert is_poised(moved, 2)


def test_gc_corollary_layout():
    cfg = gc_corollary_config(seed=0)
    xs = cfg.nodes
    assert len(xs) == 21
    assert is_poised(xs, 5)
    assert [cfg.ell.contains(xs[i]) for i in cfg.ell_indices] == [True] * 5
    assert [cfg.mu.contains(xs[i]) for i in cfg.mu_indices] == [True] * 6
    assert is_poised(xs.subset(cfg.s_indices), 3)
    # the two carrier lines are parallel
    assert cfg.ell.a == cfg.mu.a and cfg.ell.b == cfg.mu.b and cfg.ell.c != cfg.mu.c


HORIZ = Line(Fraction(0), Fraction(1), Fraction(0))
VERT = Line(Fraction(1), Fraction(0), Fraction(0))
DIAG = Line(Fraction(1), Fraction(-1), Fraction(100))


def _instance(loads):
    """Distinct nodes per line, away from the pairwise intersections."""
    lines = (HORIZ, VERT, DIAG)[: len(loads)]
    pts, assignment = [], []
    offset = 1
    for li, count in enumerate(loads):
        for j in range(count):
            t = offset + j
            if li == 0:
                pts.append((t, 0))
            elif li == 1:
                pts.append((0, t))
            else:
                pts.append((t, t + 100))
            assignment.append(li)
        offset += count
    return PairDivisionInstance(lines, NodeSet.from_pairs(pts), tuple(assignment))


def test_pair_division_feasible():
    pairs = pair_division(_instance([2, 2, 2]))
    assert pairs is not None
    assert len(pairs) == 3


def test_pair_division_overloaded_line():
    assert pair_division(_instance([5, 1])) is None


def test_pair_division_empty():
    assert pair_division(_instance([])) == []


def test_pair_division_validation():
    with pytest.raises(ValueError):
        _instance([2, 1])  # odd total
    with pytest.raises(ValueError):
        PairDivisionInstance(
            (HORIZ, VERT),
            NodeSet.from_pairs([(1, 0), (0, 1)]),
            (1, 0),  # nodes are on the other line
        )
    with pytest.raises(ValueError):
        PairDivisionInstance(
            (HORIZ, VERT),
            NodeSet.from_pairs([(0, 0), (1, 0)]),
            (0, 0),  # (0,0) sits on both lines
        )


def test_pair_division_pairs_are_cross_line():
    inst = _instance([3, 2, 1])
    pairs = pair_division(inst)
    assert pairs is not None
    used = [i for pair in pairs for i in pair]
    assert sorted(used) == list(range(6))
    for i, j in pairs:
        assert inst.assignment[i] != inst.assignment[j]
