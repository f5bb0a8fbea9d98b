"""Finite node sets in the plane and their interpolation-theoretic invariants.

A set X of distinct nodes is n-independent when its collocation matrix
(rows indexed by nodes, columns by the monomials of Pi_n in graded
lexicographic order) has full row rank, equivalently when every node A of X
admits an n-fundamental polynomial: some p in Pi_n with p(A) = 1 and p = 0
on the rest of X.  X is n-poised when additionally #X equals dim Pi_n, so
interpolation from X is unisolvent.

The vanishing space of X at degree n is P = {p in Pi_n : p = 0 on X}.  Its
dimension always equals dim Pi_n minus the size of a maximal n-independent
subset of X, which is what makes the dimension computable by pure rank
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .exactnum import Matrix, format_rational, nullspace, parse_rational, rank, solve
from .poly2 import Poly2, monomials, space_dimension


class Node(NamedTuple):
    x: Fraction
    y: Fraction


def node(x: Fraction | int, y: Fraction | int) -> Node:
    return Node(Fraction(x), Fraction(y))


@dataclass(frozen=True)
class NodeSet:
    """Ordered collection of distinct nodes.  Duplicates are an error."""

    nodes: tuple[Node, ...]

    def __post_init__(self) -> None:
        coerced = tuple(Node(Fraction(p[0]), Fraction(p[1])) for p in self.nodes)
        object.__setattr__(self, "nodes", coerced)
        seen = set()
        for p in coerced:
            if p in seen:
                raise ValueError(f"duplicate node {p}")
            seen.add(p)

    @staticmethod
    def from_pairs(pairs: Sequence[Sequence[Fraction | int]]) -> "NodeSet":
        return NodeSet(tuple(Node(Fraction(p[0]), Fraction(p[1])) for p in pairs))

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, idx: int) -> Node:
        return self.nodes[idx]

    def without(self, idx: int) -> "NodeSet":
        return NodeSet(self.nodes[:idx] + self.nodes[idx + 1 :])

    def with_node(self, p: Node) -> "NodeSet":
        return NodeSet(self.nodes + (Node(Fraction(p[0]), Fraction(p[1])),))

    def subset(self, indices: Sequence[int]) -> "NodeSet":
        return NodeSet(tuple(self.nodes[i] for i in indices))


@dataclass(frozen=True)
class VanishingSpace:
    """Basis of the polynomials of degree <= degree_bound vanishing on a node set."""

    degree_bound: int
    basis: tuple[Poly2, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def monomial_row(p: Node, n: int) -> list[Fraction]:
    x, y = Fraction(p[0]), Fraction(p[1])
    return [x**i * y**j for (i, j) in monomials(n)]


def collocation_matrix(xs: NodeSet, n: int) -> Matrix:
    """Rows follow the node order of xs, columns the monomials of Pi_n."""
    if n < 0:
        raise ValueError("degree bound must be nonnegative")
    return Matrix.from_rows(
        [monomial_row(p, n) for p in xs], cols=space_dimension(n)
    )


def is_independent(xs: NodeSet, n: int) -> bool:
    """Full row rank of the collocation matrix.  The empty set qualifies."""
    if len(xs) > space_dimension(n):
        return False
    return rank(collocation_matrix(xs, n)) == len(xs)


def is_poised(xs: NodeSet, n: int) -> bool:
    return len(xs) == space_dimension(n) and is_independent(xs, n)


def _vector_to_poly(vec: Sequence[Fraction], n: int) -> Poly2:
    return Poly2({e: vec[idx] for idx, e in enumerate(monomials(n))})


def vanishing_space(xs: NodeSet, n: int) -> VanishingSpace:
    """All p in Pi_n with p = 0 on xs, as a deterministic nullspace basis."""
    basis = nullspace(collocation_matrix(xs, n))
    return VanishingSpace(n, tuple(_vector_to_poly(v, n) for v in basis))


def fundamental_polynomial(xs: NodeSet, idx: int, n: int) -> Optional[Poly2]:
    """p in Pi_n with p = 1 at node idx and p = 0 at the others, or None.

    None means the node has no n-fundamental polynomial, which for a single
    node happens exactly when the set fails to be n-independent at it.
    """
    if not 0 <= idx < len(xs):
        raise ValueError(f"node index {idx} out of range")
    rhs = [Fraction(1) if i == idx else Fraction(0) for i in range(len(xs))]
    sol = solve(collocation_matrix(xs, n), rhs)
    if sol is None:
        return None
    return _vector_to_poly(sol, n)


def maximal_independent_indices(xs: NodeSet, n: int) -> list[int]:
    """Greedy scan in node order; keeps a node iff it raises the rank."""
    from .exactnum import RankTracker

    tracker = RankTracker(space_dimension(n))
    kept = []
    for i, p in enumerate(xs):
        if tracker.add(monomial_row(p, n)):
            kept.append(i)
    return kept


def maximal_independent_subset(xs: NodeSet, n: int) -> NodeSet:
    """An n-independent subset no strict superset of which is n-independent."""
    return xs.subset(maximal_independent_indices(xs, n))


def replace_node(xs: NodeSet, idx: int, replacement: Node, n: int) -> NodeSet:
    """Swap node idx for the replacement, keeping n-independence.

    The swap is legal exactly when the fundamental polynomial of the old
    node does not vanish at the new one; otherwise ValueError.
    """
    if not is_independent(xs, n):
        raise ValueError("node set must be n-independent before replacing")
    replacement = Node(Fraction(replacement[0]), Fraction(replacement[1]))
    pstar = fundamental_polynomial(xs, idx, n)
    assert pstar is not None
    if pstar.evaluate(replacement) == 0:
        raise ValueError("replacement breaks independence")
    out = NodeSet(xs.nodes[:idx] + (replacement,) + xs.nodes[idx + 1 :])
    assert is_independent(out, n)
    return out


def are_collinear(points: Sequence[Node]) -> bool:
    """True when all points lie on one line (fewer than three always do)."""
    if len(points) < 3:
        return True
    rows = Matrix.from_rows([monomial_row(Node(Fraction(p[0]), Fraction(p[1])), 1) for p in points], cols=3)
    return rank(rows) <= 2


def nodeset_to_json(xs: NodeSet) -> dict:
    return {"nodes": [[format_rational(p.x), format_rational(p.y)] for p in xs]}


def nodeset_from_json(obj: object) -> NodeSet:
    if not isinstance(obj, dict) or set(obj) != {"nodes"}:
        raise ValueError("node set JSON must be an object with only a 'nodes' key")
    raw = obj["nodes"]
    if not isinstance(raw, list):
        raise ValueError("'nodes' must be a list")
    pairs = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ValueError(f"node entry must be a pair of strings: {entry!r}")
        pairs.append(Node(parse_rational(entry[0]), parse_rational(entry[1])))
    return NodeSet(tuple(pairs))
