"""Algebraic curves through node sets and the capacity function d.

d(n, k) = dim Pi_n - dim Pi_{n-k} = k(2n + 3 - k)/2 is the largest number
of n-independent nodes a curve of degree k can hold (0 <= k <= n).  A
degree-k curve passing through exactly d(n, k) nodes of an n-independent
set X is called maximal for X.  Maximal curves are what the dimension
bounds in the verify module pivot on: when the vanishing space of X at some
degree hits its extremal dimension, a maximal curve of the right degree
must be present, and every polynomial vanishing on the curve's nodes must
be divisible by the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .exactnum import Matrix, nullspace
from .nodesets import (
    NodeSet,
    fundamental_polynomial,
    is_independent,
    is_poised,
    monomial_row,
    vanishing_space,
)
from .poly2 import (
    Line,
    Poly2,
    divides,
    monomials,
    poly_from_json,
    poly_to_json,
    space_dimension,
)


def d(n: int, k: int) -> int:
    """Largest number of n-independent nodes a degree-k curve can hold."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return space_dimension(n) - space_dimension(n - k)


@dataclass(frozen=True)
class Curve:
    """Plane algebraic curve given by a polynomial of degree >= 1."""

    poly: Poly2

    def __post_init__(self) -> None:
        if self.poly.degree < 1:
            raise ValueError("a curve needs a polynomial of degree at least 1")

    @property
    def degree(self) -> int:
        return self.poly.degree

    @staticmethod
    def from_line(line: Line) -> "Curve":
        return Curve(line.as_poly())


def line_product(lines) -> Curve:
    """Curve cut out by the product of the given lines."""
    poly = Poly2.constant(1)
    for line in lines:
        poly = poly * line.as_poly()
    return Curve(poly)


def nodes_on_curve(xs: NodeSet, c: Curve) -> NodeSet:
    """Subset of xs lying on the curve, input order preserved."""
    return NodeSet(tuple(p for p in xs if c.poly.evaluate(p) == 0))


def is_maximal_curve(xs: NodeSet, c: Curve, n: int) -> bool:
    """True when the curve passes through exactly d(n, deg c) nodes of xs.

    Sets smaller than d(n, deg c) can never host a maximal curve, so they
    simply report False.
    """
    if c.degree > n:
        raise ValueError("curve degree exceeds the degree bound")
    if not is_independent(xs, n):
        raise ValueError("node set must be n-independent")
    return len(nodes_on_curve(xs, c)) == d(n, c.degree)


def maximal_curve_factorization_check(xs: NodeSet, c: Curve, n: int) -> bool:
    """Divisibility characterization of maximality.

    For a maximal curve, every p in Pi_n vanishing on the curve's nodes
    must be divisible by the curve polynomial.  Checks every basis element
    of that vanishing space.  ValueError when the curve is not maximal for
    xs (the precondition of the characterization).
    """
    if not is_maximal_curve(xs, c, n):
        raise ValueError("curve is not maximal for the node set")
    on_curve = nodes_on_curve(xs, c)
    for p in vanishing_space(on_curve, n).basis:
        if divides(c.poly, p) is None:
            return False
    return True


def find_maximal_curve(xs: NodeSet, m: int, n: int, residual: int) -> Optional[Curve]:
    """Brute-force search for a degree-m curve through exactly d(n, m) nodes.

    Every subset S of xs with #S = residual is dropped in turn (subsets in
    index order); each basis element of the degree-m vanishing space of the
    rest is tested for the exact node count, and the first hit wins.  The
    enumeration order makes the result deterministic, and exhausting it
    proves nonexistence.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0 <= residual <= 3:
        raise ValueError("residual must be between 0 and 3")
    if residual > len(xs):
        raise ValueError("residual exceeds the set size")
    if not is_independent(xs, n):
        raise ValueError("node set must be n-independent")
    target = d(n, m)
    width = space_dimension(m)
    mono = monomials(m)
    rows = [monomial_row(p, m) for p in xs]
    indices = range(len(xs))
    for dropped in combinations(indices, residual):
        dropped_set = set(dropped)
        kept_rows = [rows[i] for i in indices if i not in dropped_set]
        for vec in nullspace(Matrix.from_rows(kept_rows, cols=width)):
            poly = Poly2({e: vec[idx] for idx, e in enumerate(mono)})
            if poly.degree < 1:
                continue
            count = 0
            for row in rows:
                if not sum(row[j] * vec[j] for j in range(width) if vec[j]):
                    count += 1
            if count == target:
                return Curve(poly)
    return None


def uses_line(xs: NodeSet, idx: int, line: Line, n: int) -> bool:
    """Does the fundamental polynomial of node idx contain the line as a factor?

    Defined for n-poised sets, where the fundamental polynomial is unique.
    """
    if not is_poised(xs, n):
        raise ValueError("line usage is defined for n-poised sets")
    pstar = fundamental_polynomial(xs, idx, n)
    assert pstar is not None
    return divides(line.as_poly(), pstar) is not None


def curve_to_json(c: Curve) -> dict:
    out = poly_to_json(c.poly)
    out["degree"] = c.degree
    return out


def curve_from_json(obj: object) -> Curve:
    if not isinstance(obj, dict) or set(obj) != {"coeffs", "degree"}:
        raise ValueError("curve JSON must be an object with keys coeffs, degree")
    poly = poly_from_json({"coeffs": obj["coeffs"]})
    declared = obj["degree"]
    if not isinstance(declared, int) or declared != poly.degree:
        raise ValueError("declared curve degree does not match the coefficients")
    return Curve(poly)
