"""End-to-end acceptance checks.

Each test is one acceptance criterion, exercised at the stated scale with
fixed seeds.  The terminal summary prints one PASS/FAIL line per test via
the hook in conftest.py.
"""

import random
from fractions import Fraction
from itertools import combinations

from nodecurves.constructions import (
    PairDivisionInstance,
    chung_yao_lattice,
    extremal_config,
    extremal_seven_config,
    gc_corollary_config,
    independent_set_on_curve,
    pair_division,
    points_on_line,
    random_line_arrangement,
)
from nodecurves.curves import d, is_maximal_curve, maximal_curve_factorization_check, uses_line
from nodecurves.exactnum import Matrix, rank
from nodecurves.nodesets import (
    NodeSet,
    collocation_matrix,
    is_independent,
    maximal_independent_indices,
    node,
    vanishing_space,
)
from nodecurves.poly2 import Line, Poly2, divides, is_square_free, space_dimension
from nodecurves.verify import check_gc, run_trials
from oracles import naive_rank, pairing_exists


def test_c01_seven_dimensional_extremal_case():
    """The tight configuration at (5, 4) has vanishing dimension exactly 7."""
    for seed in range(5):
        cfg = extremal_seven_config(5, 4, seed=seed)
        assert len(cfg.nodes) == 9
        assert is_independent(cfg.nodes, 5)
        assert vanishing_space(cfg.nodes, 4).dimension == 7


def test_c02_main_bound_hundred_trials_per_window():
    """100 seeded trials at each window; bound 7 holds, tight cases witnessed."""
    for n, k in [(5, 4), (6, 4), (6, 5), (7, 5)]:
        reports = run_trials("main", n, k, trials=100, seed=1000 * n + k)
        assert all(r.verdict for r in reports), (n, k)
        for t, report in enumerate(reports):
            assert report.dimension <= 7
            if t % 2 == 1:  # extremal phase must attain the bound
                assert report.dimension == 7
                assert report.witness is not None


def test_c03_three_bound_hundred_trials_per_window():
    """100 seeded trials of the dimension-3 statement at each window."""
    for n, k in [(5, 3), (6, 4)]:
        reports = run_trials("hkv", n, k, trials=100, seed=3000 + 100 * n + k)
        assert all(r.verdict for r in reports), (n, k)
        for t, report in enumerate(reports):
            if t % 3 in (1, 2):  # on-curve and extremal phases are tight
                assert report.dimension == 3
                assert report.witness is not None


def test_c04_companion_bounds_hundred_trials():
    """Bounds 4, 2 and the exact dimension-1 statement across their windows."""
    for n, k in [(5, 3), (6, 4)]:
        hk = run_trials("hk", n, k, trials=100, seed=4000 + 10 * n + k)
        assert all(r.verdict for r in hk), ("hk", n, k)
        assert all(r.dimension == 4 for t, r in enumerate(hk) if t % 2 == 1)
        ht2 = run_trials("ht2", n, k, trials=100, seed=4100 + 10 * n + k)
        assert all(r.verdict for r in ht2), ("ht2", n, k)
        assert all(r.dimension == 2 for t, r in enumerate(ht2) if t % 2 == 1)
    for n, k in [(4, 2), (5, 3)]:
        ht = run_trials("ht", n, k, trials=100, seed=4200 + 10 * n + k)
        assert all(r.verdict for r in ht), ("ht", n, k)
        assert all(r.dimension == 1 for r in ht)


def test_c05_vanishing_dimension_identity():
    """dim of the vanishing space = dim of the space minus max independent count.

    100 clustered random sets, degrees up to 6, with an independent rank
    oracle and explicit maximality of the greedy subset.
    """
    rng = random.Random(55)
    for _ in range(100):
        n = rng.randrange(1, 7)
        count = rng.randrange(1, 12)
        pts = {node(rng.randrange(-3, 4), rng.randrange(-3, 4)) for _ in range(count)}
        xs = NodeSet(tuple(pts))
        indices = maximal_independent_indices(xs, n)
        sub = xs.subset(indices)
        assert is_independent(sub, n)
        assert vanishing_space(xs, n).dimension == space_dimension(n) - len(indices)
        assert len(indices) == naive_rank(collocation_matrix(xs, n).entries)
        for i in range(len(xs)):
            if i not in indices:
                assert not is_independent(sub.with_node(xs[i]), n)


def test_c06_line_divides_polynomials_vanishing_on_it():
    """A degree-n polynomial vanishing at n+1 points of a line has the line
    as a factor; with only n points that generally fails."""
    rng = random.Random(66)
    for trial in range(100):
        n = 1 + trial % 5
        if trial % 4 == 0:
            line = Line(Fraction(1), Fraction(0), Fraction(rng.randrange(-9, 10)))
        else:
            line = Line(
                Fraction(rng.randrange(-4, 5)),
                Fraction(-1),
                Fraction(rng.randrange(-9, 10)),
            )
        pts = points_on_line(line, n + 1, seed=660 + trial)
        space = vanishing_space(pts, n)
        assert space.dimension == space_dimension(n) - (n + 1)
        for p in space.basis:
            assert divides(line.as_poly(), p) is not None
        short = pts.subset(range(n))
        loose = vanishing_space(short, n)
        assert any(divides(line.as_poly(), p) is None for p in loose.basis)


def test_c07_maximal_curves_factor_every_vanishing_polynomial():
    """Whatever vanishes on a full curve's worth of nodes is divisible by
    the curve, across degrees, windows and seeds."""
    for n, m in [(5, 1), (5, 2), (6, 2), (6, 3), (7, 2)]:
        for seed in range(3):
            cfg = independent_set_on_curve(n, m, d(n, m), seed=70 + seed)
            assert is_maximal_curve(cfg.nodes, cfg.curve, n)
            assert maximal_curve_factorization_check(cfg.nodes, cfg.curve, n)
    for n, k in [(5, 4), (6, 5)]:
        for seed in range(3):
            cfg = extremal_config(n, k - 3, 3, seed=75 + seed)
            on = cfg.nodes.subset(range(cfg.on_curve_count))
            assert is_maximal_curve(on, cfg.curve, n)
            assert maximal_curve_factorization_check(on, cfg.curve, n)


def test_c08_line_usage_in_the_21_node_layout():
    """ell is used by exactly the ten S nodes; the four-line degree-2
    lattice control has each line used by exactly the three nodes off it."""
    for seed in (0, 1, 2):
        report = check_gc(gc_corollary_config(seed), seed)
        assert report.verdict, report.checks
        assert report.dimension == 10
    lattice = chung_yao_lattice(random_line_arrangement(4, seed=8), 2)
    xs = lattice.nodes
    for li, line in enumerate(lattice.arrangement.lines):
        users = {i for i in range(len(xs)) if uses_line(xs, i, line, 2)}
        assert users == {i for i in range(len(xs)) if li not in lattice.node_lines[i]}
        assert len(users) == 3


HORIZ = Line(Fraction(0), Fraction(1), Fraction(0))
VERT = Line(Fraction(1), Fraction(0), Fraction(0))
DIAG = Line(Fraction(1), Fraction(-1), Fraction(100))


def _pairing_instance(loads):
    lines = (HORIZ, VERT, DIAG)
    pts, assignment = [], []
    offset = 1
    for li, count in enumerate(loads):
        for j in range(count):
            t = offset + j
            pts.append([(t, 0), (0, t), (t, t + 100)][li])
            assignment.append(li)
        offset += count
    return PairDivisionInstance(lines, NodeSet.from_pairs(pts), tuple(assignment))


def test_c09_pair_division_matches_exhaustive_search():
    """Greedy pairing agrees with brute force on every small load profile,
    and produced pairs are disjoint, complete and cross-line."""
    for a in range(9):
        for b in range(9):
            for c in range(9):
                total = a + b + c
                if total % 2 or total > 8:
                    continue
                inst = _pairing_instance((a, b, c))
                pairs = pair_division(inst)
                assert (pairs is not None) == pairing_exists((a, b, c)), (a, b, c)
                if pairs is not None:
                    used = sorted(i for pair in pairs for i in pair)
                    assert used == list(range(total))
                    for i, j in pairs:
                        assert inst.assignment[i] != inst.assignment[j]


def test_c10_square_free_survives_small_perturbation():
    """p1 square-free stays square-free after adding 10^-6 times a random
    polynomial of degree at most deg p1 + 1; 50 seeded instances."""
    rng = random.Random(10)
    eps = Fraction(1, 10**6)
    done = 0
    while done < 50:
        deg = rng.randrange(1, 6)
        p1 = _random_poly(rng, deg)
        if p1.degree != deg or not is_square_free(p1):
            continue
        p2 = _random_poly(rng, rng.randrange(0, deg + 2))
        if p2.is_zero():
            continue
        assert is_square_free(p1 + eps * p2)
        done += 1


def _random_poly(rng, max_degree):
    coeffs = {}
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if rng.random() < 0.5:
                coeffs[(i, j)] = Fraction(rng.randrange(-5, 6))
    return Poly2(coeffs)


def test_c11_elimination_agrees_with_naive_gauss_jordan():
    """Fraction-free rank equals the textbook result on 100 random
    matrices, including engineered rank-deficient ones."""
    rng = random.Random(11)
    for trial in range(100):
        rows_n = rng.randrange(1, 9)
        cols_n = rng.randrange(1, 9)
        rows = [
            [Fraction(rng.randrange(-9, 10)) for _ in range(cols_n)]
            for _ in range(rows_n)
        ]
        if trial % 3 == 0 and rows_n >= 2:
            rows[-1] = [3 * v for v in rows[0]]  # forced dependency
        if trial % 5 == 0:
            for row in rows:
                row[rng.randrange(cols_n)] = Fraction(0)
        m = Matrix.from_rows([tuple(r) for r in rows])
        assert rank(m) == naive_rank(rows), (trial, rows)
