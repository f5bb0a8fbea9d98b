"""Independent reference implementations used only by tests.

Deliberately naive: textbook Gauss-Jordan over Fraction for rank, and
exhaustive recursion for the pairing feasibility question.  They share no
code with the package so agreement is evidence, not tautology.
"""

from fractions import Fraction


def naive_rank(rows) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    rank = 0
    for col in range(len(m[0])):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def pairing_exists(loads) -> bool:
    """Exhaustive check: can per-line node counts be drained in cross pairs?"""
    trimmed = tuple(sorted(v for v in loads if v > 0))
    if not trimmed:
        return True
    if len(trimmed) == 1:
        return False
    tried = set()
    for i in range(len(trimmed)):
        for j in range(i + 1, len(trimmed)):
            nxt = list(trimmed)
            nxt[i] -= 1
            nxt[j] -= 1
            key = tuple(sorted(v for v in nxt if v > 0))
            if key in tried:
                continue
            tried.add(key)
            if pairing_exists(key):
                return True
    return False
