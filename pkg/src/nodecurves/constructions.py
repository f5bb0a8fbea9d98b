"""Seeded generators for node configurations, plus the pairing solver.

Every generator is deterministic for a given seed, draws integer or small
rational coordinates, and verifies its own advertised property (rank,
curve membership, poisedness) before returning.  Placement is rejection
sampling with a budget of MAX_TRIES tries per node; exhausting the budget
raises GenerationError rather than returning a half-built configuration.

Sets on a product of lines are built line by line with the descending
quota n+1, n, n-1, ... nodes per line, each candidate accepted only when
it raises the collocation rank.  That quota pattern is exactly what a
maximal independent set on such a curve supports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .curves import Curve, d, line_product, nodes_on_curve
from .exactnum import RankTracker
from .nodesets import (
    Node,
    NodeSet,
    is_independent,
    is_poised,
    monomial_row,
    node,
)
from .poly2 import Line, Poly2, line_intersection, space_dimension

MAX_TRIES = 1000


class GenerationError(RuntimeError):
    """Retry budget exhausted while building a configuration."""


def _grid_bound(size: int) -> int:
    return max(10, 10 * size)


def random_independent_set(
    size: int, n: int, seed: int, grid: Optional[int] = None
) -> NodeSet:
    """Uniform integer-grid nodes accepted one by one on rank increase."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    if size < 0:
        raise ValueError("size must be nonnegative")
    if size > space_dimension(n):
        raise ValueError(
            f"no {n}-independent set of {size} nodes exists "
            f"(dim Pi_{n} = {space_dimension(n)})"
        )
    rng = random.Random(seed)
    bound = grid if grid is not None else _grid_bound(size)
    tracker = RankTracker(space_dimension(n))
    picked: list[Node] = []
    seen: set[Node] = set()
    while len(picked) < size:
        for _ in range(MAX_TRIES):
            p = node(rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1))
            if p in seen:
                continue
            if tracker.add(monomial_row(p, n)):
                picked.append(p)
                seen.add(p)
                break
        else:
            raise GenerationError("generation failed: no rank-raising grid node found")
    out = NodeSet(tuple(picked))
    if not is_independent(out, n):
        raise GenerationError("generation failed: output is not independent")
    return out


def points_on_line(line: Line, count: int, seed: int) -> NodeSet:
    """Distinct nodes on the line from distinct integer parameters."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(seed)
    bound = max(10, 10 * count)
    params: set[int] = set()
    picked: list[Node] = []
    while len(picked) < count:
        for _ in range(MAX_TRIES):
            t = rng.randrange(-bound, bound + 1)
            if t in params:
                continue
            params.add(t)
            picked.append(node(*line.point_at(t)))
            break
        else:
            raise GenerationError("generation failed: parameter pool exhausted")
    return NodeSet(tuple(picked))


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple[Line, ...]

    def __post_init__(self) -> None:
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("arrangement lines must be distinct")

    def __len__(self) -> int:
        return len(self.lines)

    def is_general_position(self) -> bool:
        """Pairwise non-parallel and no three lines through one point."""
        points = []
        for l1, l2 in combinations(self.lines, 2):
            pt = line_intersection(l1, l2)
            if pt is None:
                return False
            points.append(pt)
        return len(set(points)) == len(points)


def _random_general_lines(count: int, rng: random.Random) -> LineArrangement:
    span = max(4 * count, 8)
    for _ in range(MAX_TRIES):
        slopes = rng.sample(range(-span, span + 1), count)
        lines = tuple(
            Line(Fraction(s), Fraction(-1), Fraction(rng.randrange(-span, span + 1)))
            for s in slopes
        )
        arrangement = LineArrangement(lines)
        if arrangement.is_general_position():
            return arrangement
    raise GenerationError("generation failed: no general-position arrangement found")


def random_line_arrangement(count: int, seed: int) -> LineArrangement:
    """Lines in general position with distinct integer slopes."""
    if count < 1:
        raise ValueError("at least one line required")
    return _random_general_lines(count, random.Random(seed))


@dataclass(frozen=True)
class ChungYaoLattice:
    """Natural lattice of n+2 general-position lines.

    Nodes are the pairwise intersections; each node's fundamental
    polynomial is the normalized product of the n lines missing it.
    """

    nodes: NodeSet
    arrangement: LineArrangement
    node_lines: tuple[tuple[int, int], ...]
    fundamentals: tuple[Poly2, ...]


def chung_yao_lattice(arrangement: LineArrangement, n: int) -> ChungYaoLattice:
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    if len(arrangement) != n + 2:
        raise ValueError(f"need {n + 2} lines for degree {n}")
    if not arrangement.is_general_position():
        raise ValueError("lines must be in general position")
    pairs = list(combinations(range(n + 2), 2))
    points = []
    for i, j in pairs:
        pt = line_intersection(arrangement.lines[i], arrangement.lines[j])
        assert pt is not None
        points.append(node(*pt))
    nodes = NodeSet(tuple(points))
    fundamentals = []
    for (i, j), p in zip(pairs, points):
        prod = Poly2.constant(1)
        for k, line in enumerate(arrangement.lines):
            if k != i and k != j:
                prod = prod * line.as_poly()
        value = prod.evaluate(p)
        assert value != 0
        fundamentals.append(prod * (Fraction(1) / value))
    if not is_poised(nodes, n):
        raise GenerationError("generation failed: lattice is not poised")
    return ChungYaoLattice(nodes, arrangement, tuple(pairs), tuple(fundamentals))


def principal_lattice(n: int) -> NodeSet:
    """Triangular lattice {(i/n, j/n) : i + j <= n}; poised at degree n."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    if n == 0:
        return NodeSet((node(0, 0),))
    return NodeSet(
        tuple(
            node(Fraction(i, n), Fraction(j, n))
            for i in range(n + 1)
            for j in range(n + 1 - i)
        )
    )


def _fill_on_lines(
    lines: Sequence[Line],
    needed: int,
    n: int,
    rng: random.Random,
    tracker: RankTracker,
    picked: list[Node],
    seen: set[Node],
) -> None:
    """Place `needed` rank-raising nodes on the lines, descending quotas first."""
    existing_per_line = [
        sum(1 for p in picked if line.contains(p)) for line in lines
    ]
    bound = max(10, 10 * (needed + len(picked)))
    remaining = needed
    for li, line in enumerate(lines):
        quota = min(max(0, n + 1 - li - existing_per_line[li]), remaining)
        placed = 0
        tries = 0
        while placed < quota:
            tries += 1
            if tries > MAX_TRIES:
                raise GenerationError("generation failed: line quota unreachable")
            t = rng.randrange(-bound, bound + 1)
            p = node(*line.point_at(t))
            if p in seen:
                continue
            if any(other.contains(p) for oi, other in enumerate(lines) if oi != li):
                continue
            if tracker.add(monomial_row(p, n)):
                picked.append(p)
                seen.add(p)
                placed += 1
                remaining -= 1
    tries = 0
    while remaining > 0:
        tries += 1
        if tries > MAX_TRIES:
            raise GenerationError("generation failed: curve sweep stalled")
        li = rng.randrange(len(lines))
        line = lines[li]
        t = rng.randrange(-bound, bound + 1)
        p = node(*line.point_at(t))
        if p in seen:
            continue
        if any(other.contains(p) for oi, other in enumerate(lines) if oi != li):
            continue
        if tracker.add(monomial_row(p, n)):
            picked.append(p)
            seen.add(p)
            remaining -= 1


def extend_to_maximal_on_curve(
    xs: NodeSet, lines: Sequence[Line], n: int, seed: int
) -> NodeSet:
    """Grow an independent subset of a line-product curve to d(n, m) nodes.

    The curve is the product of the given distinct lines (m of them); the
    input nodes must already lie on it and be n-independent.  An input that
    is already maximal comes back unchanged.
    """
    lines = tuple(lines)
    if not 1 <= len(lines) <= n:
        raise ValueError("need between 1 and n lines")
    if len(set(lines)) != len(lines):
        raise ValueError("lines must be distinct")
    curve = line_product(lines)
    for p in xs:
        if curve.poly.evaluate(p) != 0:
            raise ValueError(f"node {p} is not on the curve")
    if not is_independent(xs, n):
        raise ValueError("node set must be n-independent")
    target = d(n, len(lines))
    if len(xs) > target:
        raise ValueError("more nodes than a curve of this degree can hold")
    if len(xs) == target:
        return xs
    rng = random.Random(seed)
    tracker = RankTracker(space_dimension(n))
    picked = list(xs.nodes)
    seen = set(xs.nodes)
    for p in xs:
        tracker.add(monomial_row(p, n))
    _fill_on_lines(lines, target - len(xs), n, rng, tracker, picked, seen)
    out = NodeSet(tuple(picked))
    if not is_independent(out, n) or len(nodes_on_curve(out, curve)) != target:
        raise GenerationError("generation failed: extension self-check")
    return out


def extend_to_poised(
    xs: NodeSet, n: int, seed: int, grid: Optional[int] = None
) -> NodeSet:
    """Complete an n-independent set to an n-poised one with grid nodes."""
    if not is_independent(xs, n):
        raise ValueError("node set must be n-independent")
    target = space_dimension(n)
    rng = random.Random(seed)
    bound = grid if grid is not None else _grid_bound(target)
    tracker = RankTracker(target)
    for p in xs:
        tracker.add(monomial_row(p, n))
    picked = list(xs.nodes)
    seen = set(xs.nodes)
    while len(picked) < target:
        for _ in range(MAX_TRIES):
            p = node(rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1))
            if p in seen:
                continue
            if tracker.add(monomial_row(p, n)):
                picked.append(p)
                seen.add(p)
                break
        else:
            raise GenerationError("generation failed: completion stalled")
    out = NodeSet(tuple(picked))
    if not is_poised(out, n):
        raise GenerationError("generation failed: completion is not poised")
    return out


@dataclass(frozen=True)
class OnCurveConfig:
    """Independent nodes lying on a product-of-lines curve."""

    nodes: NodeSet
    curve: Curve
    curve_lines: tuple[Line, ...]


def independent_set_on_curve(
    n: int, num_lines: int, size: int, seed: int
) -> OnCurveConfig:
    """n-independent nodes, all on a random product of num_lines lines."""
    if not 1 <= num_lines <= n:
        raise ValueError("need between 1 and n lines")
    if not 0 <= size <= d(n, num_lines):
        raise ValueError(f"a degree-{num_lines} curve holds at most {d(n, num_lines)} nodes")
    rng = random.Random(seed)
    lines = _random_general_lines(num_lines, rng).lines
    tracker = RankTracker(space_dimension(n))
    picked: list[Node] = []
    seen: set[Node] = set()
    _fill_on_lines(lines, size, n, rng, tracker, picked, seen)
    nodes = NodeSet(tuple(picked))
    curve = line_product(lines)
    if not is_independent(nodes, n) or len(nodes_on_curve(nodes, curve)) != size:
        raise GenerationError("generation failed: on-curve self-check")
    return OnCurveConfig(nodes, curve, lines)


@dataclass(frozen=True)
class ExtremalConfig:
    """Maximal curve nodes plus a few residual nodes off the curve.

    The node order is on-curve nodes first, residual nodes last, so
    residual_indices is always the tail of the range.
    """

    nodes: NodeSet
    curve: Curve
    curve_lines: tuple[Line, ...]
    residual_indices: tuple[int, ...]

    @property
    def on_curve_count(self) -> int:
        return len(self.nodes) - len(self.residual_indices)


def extremal_config(
    n: int, curve_degree: int, residual_count: int, seed: int
) -> ExtremalConfig:
    """d(n, curve_degree) nodes on a line-product curve and residual_count off it."""
    if not 1 <= curve_degree <= n:
        raise ValueError("curve degree out of range")
    if not 0 <= residual_count <= 3:
        raise ValueError("residual count must be between 0 and 3")
    on_curve = d(n, curve_degree)
    total = on_curve + residual_count
    if total > space_dimension(n):
        raise ValueError("configuration does not fit in an n-independent set")
    rng = random.Random(seed)
    lines = _random_general_lines(curve_degree, rng).lines
    tracker = RankTracker(space_dimension(n))
    picked: list[Node] = []
    seen: set[Node] = set()
    _fill_on_lines(lines, on_curve, n, rng, tracker, picked, seen)
    curve = line_product(lines)
    bound = _grid_bound(total)
    while len(picked) < total:
        for _ in range(MAX_TRIES):
            p = node(rng.randrange(-bound, bound + 1), rng.randrange(-bound, bound + 1))
            if p in seen or curve.poly.evaluate(p) == 0:
                continue
            if tracker.add(monomial_row(p, n)):
                picked.append(p)
                seen.add(p)
                break
        else:
            raise GenerationError("generation failed: residual placement stalled")
    nodes = NodeSet(tuple(picked))
    if not is_independent(nodes, n):
        raise GenerationError("generation failed: extremal set is not independent")
    if len(nodes_on_curve(nodes, curve)) != on_curve:
        raise GenerationError("generation failed: curve node count is off")
    return ExtremalConfig(
        nodes, curve, lines, tuple(range(on_curve, total))
    )


def extremal_seven_config(n: int, k: int, seed: int) -> ExtremalConfig:
    """The configuration that attains the seven-dimensional bound.

    d(n, k-3) nodes filling a curve of degree k-3 plus three nodes off it;
    the vanishing space at degree k then has dimension exactly 7.
    """
    if not 4 <= k <= n - 1:
        raise ValueError("need 4 <= k <= n - 1")
    return extremal_config(n, k - 3, 3, seed)


@dataclass(frozen=True)
class GcCorollaryConfig:
    """21-node 5-poised layout: 5 nodes on ell, 6 on mu, 10-node poised block S."""

    nodes: NodeSet
    ell: Line
    mu: Line
    ell_indices: tuple[int, ...]
    mu_indices: tuple[int, ...]
    s_indices: tuple[int, ...]


def gc_corollary_config(seed: int) -> GcCorollaryConfig:
    """Build the line-usage test configuration for degree 5.

    ell and mu are parallel horizontal lines well away from the unit
    square; S is a jittered triangular lattice inside it.  Any polynomial
    of degree 5 vanishing on all 21 nodes must contain both lines as
    factors, so the whole set is 5-poised exactly when S is 3-poised.
    """
    rng = random.Random(seed)
    for _ in range(100):
        c_ell = rng.randrange(-9, 0)
        c_mu = rng.randrange(2, 10)
        ell = Line(Fraction(0), Fraction(1), Fraction(-c_ell))
        mu = Line(Fraction(0), Fraction(1), Fraction(-c_mu))
        ell_nodes = [node(xv, c_ell) for xv in rng.sample(range(-30, 31), 5)]
        mu_nodes = [node(xv, c_mu) for xv in rng.sample(range(-30, 31), 6)]
        s_nodes = []
        for p in principal_lattice(3):
            dx = Fraction(rng.randrange(-5, 6), 100)
            dy = Fraction(rng.randrange(-5, 6), 100)
            s_nodes.append(node(p.x + dx, p.y + dy))
        s_set = NodeSet(tuple(s_nodes))
        if not is_poised(s_set, 3):
            continue
        nodes = NodeSet(tuple(ell_nodes + mu_nodes + s_nodes))
        if sum(1 for p in nodes if ell.contains(p)) != 5:
            continue
        if sum(1 for p in nodes if mu.contains(p)) != 6:
            continue
        if not is_poised(nodes, 5):
            continue
        return GcCorollaryConfig(
            nodes,
            ell,
            mu,
            tuple(range(5)),
            tuple(range(5, 11)),
            tuple(range(11, 21)),
        )
    raise GenerationError("generation failed: no poised layout found")


@dataclass(frozen=True)
class PairDivisionInstance:
    """Nodes on lines, each node assigned to the unique line holding it."""

    lines: tuple[Line, ...]
    nodes: NodeSet
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.lines)) != len(self.lines):
            raise ValueError("instance lines must be distinct")
        if len(self.assignment) != len(self.nodes):
            raise ValueError("one line index per node required")
        if len(self.nodes) % 2:
            raise ValueError("the node count must be even")
        for p, li in zip(self.nodes, self.assignment):
            if not 0 <= li < len(self.lines):
                raise ValueError(f"line index {li} out of range")
            if not self.lines[li].contains(p):
                raise ValueError(f"node {p} is not on its assigned line")
            for oi, other in enumerate(self.lines):
                if oi != li and other.contains(p):
                    raise ValueError(f"node {p} lies on two instance lines")

    @property
    def pair_count(self) -> int:
        return len(self.nodes) // 2


def pair_division(instance: PairDivisionInstance) -> Optional[list[tuple[int, int]]]:
    """Split the 2m nodes into m pairs, no pair sharing a line.

    Greedy rule: take a node from a currently most loaded line and pair it
    with a node from the most loaded other line, lowest line index breaking
    ties.  Feasible exactly when no line holds more than m nodes; None
    otherwise.
    """
    m = instance.pair_count
    buckets: list[list[int]] = [[] for _ in instance.lines]
    for i, li in enumerate(instance.assignment):
        buckets[li].append(i)
    if any(len(b) > m for b in buckets):
        return None
    pairs: list[tuple[int, int]] = []
    for _ in range(m):
        order = sorted(range(len(buckets)), key=lambda li: (-len(buckets[li]), li))
        first = order[0]
        second = next((li for li in order[1:] if buckets[li]), None)
        if not buckets[first] or second is None:
            return None
        pairs.append((buckets[first].pop(0), buckets[second].pop(0)))
    return pairs
