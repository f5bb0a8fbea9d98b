"""Bivariate polynomials over the rationals, lines, and curve predicates.

Polynomials live in Pi_n, the space of real polynomials in x and y of total
degree at most n, whose dimension is (n+1)(n+2)/2.  The monomial order is
graded lexicographic with x ahead of y:

    1, x, y, x^2, x*y, y^2, x^3, ...

and this single order fixes the column order of every collocation matrix
and the key order of every serialized polynomial.

A line a*x + b*y + c = 0 is normalized so the first nonzero of (a, b) is 1.
Restriction of a polynomial to a line substitutes the rational
parametrization (t, -(a*t + c)/b) when b != 0, else (-c/a, t), producing a
univariate polynomial in t.

Square-freeness is decided over the algebraic closure.  In characteristic
zero it can be read off exactly: split off the content with respect to y
(the gcd in Q[x] of the y-coefficients), test the content by a univariate
gcd with its derivative, and test the primitive part by the resultant with
its y-derivative, computed by a subresultant polynomial remainder sequence
over Q[x].  The polynomial is square-free exactly when the content is
square-free and that resultant is nonzero.

Univariate polynomials (type alias Poly1) are plain lists of Fractions by
ascending power, trimmed so the leading coefficient is nonzero; the zero
polynomial is the empty list and has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .exactnum import Matrix, format_rational, parse_rational, solve

Exponent = tuple[int, int]
Poly1 = list  # list[Fraction], ascending powers


def space_dimension(n: int) -> int:
    """Dimension of Pi_n, the polynomials of total degree at most n."""
    if n < -1:
        raise ValueError("degree bound must be at least -1")
    if n == -1:
        return 0
    return (n + 1) * (n + 2) // 2


def monomials(n: int) -> list[Exponent]:
    """Exponent pairs of Pi_n in graded lexicographic order, x ahead of y."""
    out = []
    for total in range(n + 1):
        for i in range(total, -1, -1):
            out.append((i, total - i))
    return out


class Poly2:
    """Immutable sparse bivariate polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Exponent, Fraction | int] | None = None):
        clean: dict[Exponent, Fraction] = {}
        if coeffs:
            for key, value in coeffs.items():
                i, j = key
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in {key}")
                f = Fraction(value)
                if f:
                    clean[(int(i), int(j))] = f
        self._coeffs = clean

    @staticmethod
    def constant(value: Fraction | int) -> "Poly2":
        return Poly2({(0, 0): Fraction(value)})

    @staticmethod
    def zero() -> "Poly2":
        return Poly2()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._coeffs.items())

    def terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms sorted in the graded lexicographic order."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0]))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._coeffs:
            return -1
        return max(i + j for i, j in self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        x, y = Fraction(point[0]), Fraction(point[1])
        total = Fraction(0)
        for (i, j), c in self._coeffs.items():
            total += c * x**i * y**j
        return total

    def __add__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        other = _as_poly(other)
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return Poly2(out)

    def __radd__(self, other: "Fraction | int") -> "Poly2":
        return self.__add__(other)

    def __neg__(self) -> "Poly2":
        return Poly2({key: -c for key, c in self._coeffs.items()})

    def __sub__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        return self.__add__(-_as_poly(other))

    def __rsub__(self, other: "Fraction | int") -> "Poly2":
        return _as_poly(other).__sub__(self)

    def __mul__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        other = _as_poly(other)
        out: dict[Exponent, Fraction] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly2(out)

    def __rmul__(self, other: "Fraction | int") -> "Poly2":
        return self.__mul__(other)

    def __pow__(self, power: int) -> "Poly2":
        if power < 0:
            raise ValueError("negative power")
        out = Poly2.constant(1)
        for _ in range(power):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_poly(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for (i, j), c in reversed(self.terms()):
            factors = []
            if c != 1 or (i, j) == (0, 0):
                factors.append(str(c))
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("y" if j == 1 else f"y^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def _as_poly(value: "Poly2 | Fraction | int") -> Poly2:
    if isinstance(value, Poly2):
        return value
    return Poly2.constant(value)


X = Poly2({(1, 0): 1})
Y = Poly2({(0, 1): 1})


@dataclass(frozen=True)
class Line:
    """Line a*x + b*y + c = 0, normalized so the first nonzero of (a, b) is 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ValueError("a line needs a nonzero linear part")
        lead = a if a else b
        object.__setattr__(self, "a", a / lead)
        object.__setattr__(self, "b", b / lead)
        object.__setattr__(self, "c", c / lead)

    @staticmethod
    def through(p: Sequence[Fraction], q: Sequence[Fraction]) -> "Line":
        px, py = Fraction(p[0]), Fraction(p[1])
        qx, qy = Fraction(q[0]), Fraction(q[1])
        if (px, py) == (qx, qy):
            raise ValueError("two distinct points are needed")
        return Line(py - qy, qx - px, px * qy - qx * py)

    def as_poly(self) -> Poly2:
        return Poly2({(1, 0): self.a, (0, 1): self.b, (0, 0): self.c})

    def contains(self, point: Sequence[Fraction]) -> bool:
        return self.a * Fraction(point[0]) + self.b * Fraction(point[1]) + self.c == 0

    def point_at(self, t: Fraction | int) -> tuple[Fraction, Fraction]:
        """Rational parametrization: (t, -(a t + c)/b) if b != 0, else (-c/a, t)."""
        t = Fraction(t)
        if self.b:
            return (t, -(self.a * t + self.c) / self.b)
        return (-self.c / self.a, t)


def line_intersection(l1: Line, l2: Line) -> Optional[tuple[Fraction, Fraction]]:
    """Intersection point of two lines, or None when parallel (or equal)."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = (-l1.c * l2.b + l2.c * l1.b) / det
    y = (-l1.a * l2.c + l2.a * l1.c) / det
    return (x, y)


def divides(q: Poly2, p: Poly2) -> Optional[Poly2]:
    """Exact quotient r with q * r == p, or None when q is not a factor.

    Solved as a linear system in the coefficients of r over Pi_{deg p - deg q};
    the quotient is unique because Q[x, y] has no zero divisors.
    """
    if q.degree < 1:
        raise ValueError("divisor must have degree at least 1")
    if p.is_zero():
        raise ValueError("dividend must be nonzero")
    m = p.degree - q.degree
    if m < 0:
        return None
    unknowns = monomials(m)
    equations = monomials(p.degree)
    col_index = {e: idx for idx, e in enumerate(unknowns)}
    rows = [[Fraction(0)] * len(unknowns) for _ in equations]
    for r_idx, (a, b) in enumerate(equations):
        row = rows[r_idx]
        for (qi, qj), qc in q.items():
            ri, rj = a - qi, b - qj
            if ri >= 0 and rj >= 0 and ri + rj <= m:
                row[col_index[(ri, rj)]] += qc
    rhs = [p.coeff(a, b) for (a, b) in equations]
    sol = solve(Matrix.from_rows(rows, cols=len(unknowns)), rhs)
    if sol is None:
        return None
    return Poly2({e: sol[idx] for idx, e in enumerate(unknowns)})


# ---------------------------------------------------------------------------
# Univariate helpers (Poly1: list of Fractions by ascending power, trimmed).


def poly1_trim(u: Iterable[Fraction]) -> Poly1:
    out = [Fraction(v) for v in u]
    while out and not out[-1]:
        out.pop()
    return out


def poly1_degree(u: Poly1) -> int:
    return len(u) - 1


def poly1_is_zero(u: Poly1) -> bool:
    return not u


def poly1_add(u: Poly1, v: Poly1) -> Poly1:
    out = [Fraction(0)] * max(len(u), len(v))
    for idx, c in enumerate(u):
        out[idx] += c
    for idx, c in enumerate(v):
        out[idx] += c
    return poly1_trim(out)


def poly1_sub(u: Poly1, v: Poly1) -> Poly1:
    return poly1_add(u, [-c for c in v])


def poly1_scale(u: Poly1, s: Fraction | int) -> Poly1:
    s = Fraction(s)
    if not s:
        return []
    return [c * s for c in u]


def poly1_mul(u: Poly1, v: Poly1) -> Poly1:
    if not u or not v:
        return []
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i + j] += a * b
    return poly1_trim(out)


def poly1_pow(u: Poly1, k: int) -> Poly1:
    out = [Fraction(1)]
    for _ in range(k):
        out = poly1_mul(out, u)
    return out


def poly1_eval(u: Poly1, t: Fraction | int) -> Fraction:
    t = Fraction(t)
    total = Fraction(0)
    for c in reversed(u):
        total = total * t + c
    return total


def poly1_derivative(u: Poly1) -> Poly1:
    return poly1_trim([c * idx for idx, c in enumerate(u)][1:])


def poly1_divmod(u: Poly1, v: Poly1) -> tuple[Poly1, Poly1]:
    if not v:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(u)
    quot = [Fraction(0)] * max(len(u) - len(v) + 1, 0)
    lead = v[-1]
    for shift in range(len(rem) - len(v), -1, -1):
        f = rem[shift + len(v) - 1] / lead
        if f:
            quot[shift] = f
            for idx, c in enumerate(v):
                rem[shift + idx] -= f * c
    return poly1_trim(quot), poly1_trim(rem)


def poly1_exact_div(u: Poly1, v: Poly1) -> Poly1:
    q, r = poly1_divmod(u, v)
    if r:
        raise ArithmeticError("division expected to be exact left a remainder")
    return q


def poly1_gcd(u: Poly1, v: Poly1) -> Poly1:
    a, b = poly1_trim(u), poly1_trim(v)
    while b:
        a, b = b, poly1_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def restrict_to_line(p: Poly2, line: Line) -> Poly1:
    """Substitute the line's parametrization into p; univariate in t."""
    if line.b:
        xt: Poly1 = [Fraction(0), Fraction(1)]
        yt: Poly1 = poly1_trim([-line.c / line.b, -line.a / line.b])
    else:
        xt = poly1_trim([-line.c / line.a])
        yt = [Fraction(0), Fraction(1)]
    max_i = max((i for (i, j), _ in p.items()), default=0)
    max_j = max((j for (i, j), _ in p.items()), default=0)
    xpow: list[Poly1] = [[Fraction(1)]]
    for _ in range(max_i):
        xpow.append(poly1_mul(xpow[-1], xt))
    ypow: list[Poly1] = [[Fraction(1)]]
    for _ in range(max_j):
        ypow.append(poly1_mul(ypow[-1], yt))
    out: Poly1 = []
    for (i, j), c in p.items():
        out = poly1_add(out, poly1_scale(poly1_mul(xpow[i], ypow[j]), c))
    return out


def distinct_line_intersections(p: Poly2, line: Line) -> Optional[int]:
    """Number of distinct complex points of p = 0 on the line.

    None means the whole line lies in the curve (the restriction vanishes
    identically).  The count is deg u - deg gcd(u, u') for the restricted
    univariate u, so it sees complex intersections, not just real ones.
    """
    if p.degree < 1:
        raise ValueError("curve must have degree at least 1")
    u = restrict_to_line(p, line)
    if not u:
        return None
    g = poly1_gcd(u, poly1_derivative(u))
    return poly1_degree(u) - poly1_degree(g)


# ---------------------------------------------------------------------------
# Square-freeness over the algebraic closure.


def _univariate_square_free(u: Poly1) -> bool:
    return poly1_degree(poly1_gcd(u, poly1_derivative(u))) == 0


def _y_coefficients(p: Poly2) -> list[Poly1]:
    """View p as an element of Q[x][y]: coefficient polynomials by y power."""
    dy = max((j for (i, j), _ in p.items()), default=0)
    out: list[list[Fraction]] = [[] for _ in range(dy + 1)]
    for (i, j), c in p.items():
        col = out[j]
        while len(col) <= i:
            col.append(Fraction(0))
        col[i] += c
    return [poly1_trim(col) for col in out]


def _yp_trim(coeffs: list[Poly1]) -> list[Poly1]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def _yp_pseudo_rem(a: list[Poly1], b: list[Poly1]) -> list[Poly1]:
    """Pseudo-remainder of a by b in (Q[x])[y]: lc(b)^(da-db+1) * a mod b."""
    da, db = len(a) - 1, len(b) - 1
    lead = b[-1]
    rem = [u[:] for u in a]
    e = da - db + 1
    while True:
        rem = _yp_trim(rem)
        dr = len(rem) - 1
        if dr < db:
            break
        top = rem[-1]
        shift = dr - db
        nxt: list[Poly1] = []
        for idx in range(dr):
            term = poly1_mul(lead, rem[idx])
            k = idx - shift
            if 0 <= k <= db:
                term = poly1_sub(term, poly1_mul(top, b[k]))
            nxt.append(term)
        rem = nxt
        e -= 1
    if e > 0:
        factor = poly1_pow(lead, e)
        rem = [poly1_mul(factor, u) for u in rem]
    return _yp_trim(rem)


def _resultant_y(a: list[Poly1], b: list[Poly1]) -> Poly1:
    """Resultant with respect to y of two nonzero elements of (Q[x])[y].

    Subresultant polynomial remainder sequence (the classical fraction-free
    scheme with the g, h divisor bookkeeping), so every division along the
    way is exact in Q[x].
    """
    a = _yp_trim([u[:] for u in a])
    b = _yp_trim([u[:] for u in b])
    if not a or not b:
        raise ValueError("resultant of a zero polynomial")
    sign = 1
    if len(a) < len(b):
        if ((len(a) - 1) * (len(b) - 1)) % 2:
            sign = -sign
        a, b = b, a
    if len(b) == 1:
        return poly1_scale(poly1_pow(b[0], len(a) - 1), sign)
    g: Poly1 = [Fraction(1)]
    h: Poly1 = [Fraction(1)]
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        rem = _yp_pseudo_rem(a, b)
        if not rem:
            return []
        divisor = poly1_mul(g, poly1_pow(h, delta))
        a, b = b, _yp_trim([poly1_exact_div(u, divisor) for u in rem])
        g = a[-1]
        if delta == 1:
            h = g[:]
        elif delta > 1:
            h = poly1_exact_div(poly1_pow(g, delta), poly1_pow(h, delta - 1))
        if len(b) == 1:
            break
    da = len(a) - 1
    res = poly1_pow(b[0], da)
    if da > 1:
        res = poly1_exact_div(res, poly1_pow(h, da - 1))
    return poly1_scale(res, sign)


def is_square_free(p: Poly2) -> bool:
    """True when p has no repeated factor over the algebraic closure."""
    if p.degree < 1:
        raise ValueError("square-freeness needs degree at least 1")
    ycoeffs = _y_coefficients(p)
    if len(ycoeffs) == 1:
        return _univariate_square_free(ycoeffs[0])
    content: Poly1 = []
    for col in ycoeffs:
        content = poly1_gcd(content, col)
    if poly1_degree(content) >= 1 and not _univariate_square_free(content):
        return False
    primitive = [poly1_exact_div(col, content) if col else [] for col in ycoeffs]
    derivative = _yp_trim(
        [poly1_scale(primitive[j], j) for j in range(1, len(primitive))]
    )
    res = _resultant_y(primitive, derivative)
    return not poly1_is_zero(res)


# ---------------------------------------------------------------------------
# JSON forms.


def poly_to_json(p: Poly2) -> dict:
    return {
        "coeffs": {f"{i},{j}": format_rational(c) for (i, j), c in p.terms()}
    }


def poly_from_json(obj: object) -> Poly2:
    if not isinstance(obj, dict) or set(obj) != {"coeffs"}:
        raise ValueError("polynomial JSON must be an object with a single 'coeffs' key")
    raw = obj["coeffs"]
    if not isinstance(raw, dict):
        raise ValueError("'coeffs' must be an object")
    coeffs: dict[Exponent, Fraction] = {}
    for key, text in raw.items():
        parts = key.split(",")
        if len(parts) != 2 or not all(
            part.isdigit() and str(int(part)) == part for part in parts
        ):
            raise ValueError(f"malformed exponent key {key!r}")
        value = parse_rational(text)
        if value == 0:
            raise ValueError(f"zero coefficient for {key!r} must be omitted")
        coeffs[(int(parts[0]), int(parts[1]))] = value
    return Poly2(coeffs)


def line_to_json(line: Line) -> dict:
    return {
        "a": format_rational(line.a),
        "b": format_rational(line.b),
        "c": format_rational(line.c),
    }


def line_from_json(obj: object) -> Line:
    if not isinstance(obj, dict) or set(obj) != {"a", "b", "c"}:
        raise ValueError("line JSON must be an object with keys a, b, c")
    return Line(parse_rational(obj["a"]), parse_rational(obj["b"]), parse_rational(obj["c"]))
