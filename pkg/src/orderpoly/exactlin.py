"""Exact rational linear algebra: ranks, affine hulls and nullspaces.

Rationals are :class:`fractions.Fraction`; integer rows go through
fraction-free (Bareiss) elimination so no rounding ever happens.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def _integer_row(row: Sequence) -> list[int]:
    """Scale a row of ints/Fractions to an integer row with the same span."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
        elif not isinstance(x, int):
            x = Fraction(x)
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(Fraction(x) * den) for x in row]


def primitive(row: Sequence[int]) -> list[int]:
    """Divide an integer row by the gcd of its entries (sign kept)."""
    g = 0
    for x in row:
        g = gcd(g, x)
    if g <= 1:
        return list(row)
    return [x // g for x in row]


def linear_rank(rows: Iterable[Sequence]) -> int:
    """Rank over Q by fraction-free Gaussian elimination."""
    m = [_integer_row(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("matrix is not rectangular")
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            if f:
                for c in range(col + 1, ncols):
                    row[c] = (row[c] * p - f * prow[c]) // prev
            else:
                for c in range(col + 1, ncols):
                    row[c] = (row[c] * p) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


class RankAccumulator:
    """Incremental row basis in echelon form over the integers.

    ``add`` reports whether the vector raised the rank.  Once ``bound`` is
    reached further vectors are ignored.
    """

    def __init__(self, ncols: int, bound: int | None = None):
        self.ncols = ncols
        self.bound = ncols if bound is None else min(bound, ncols)
        self.rows: list[tuple[int, list[int]]] = []  # (pivot column, row), sorted by pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def full(self) -> bool:
        return len(self.rows) >= self.bound

    def reduce(self, vec: Sequence) -> list[int]:
        v = _integer_row(vec)
        for p, row in self.rows:
            a = v[p]
            if a:
                b = row[p]
                v = [b * x - a * y for x, y in zip(v, row)]
        return v

    def add(self, vec: Sequence) -> bool:
        if self.full:
            return False
        v = self.reduce(vec)
        for p, x in enumerate(v):
            if x:
                break
        else:
            return False
        v = primitive(v)
        pos = 0
        while pos < len(self.rows) and self.rows[pos][0] < p:
            pos += 1
        self.rows.insert(pos, (p, v))
        return True


def affine_rank(points: Iterable[Sequence], bound: int | None = None) -> int:
    """Dimension of the affine hull of a nonempty point list.

    With ``bound``, stops as soon as that dimension is certified.
    """
    it = iter(points)
    try:
        p0 = _integer_row(next(it))
    except StopIteration:
        raise ValueError("affine_rank of an empty point list") from None
    acc = RankAccumulator(len(p0), bound)
    for p in it:
        q = _integer_row(p)
        acc.add([a - b for a, b in zip(q, p0)])
        if acc.full:
            break
    return acc.rank


def rref(rows: Iterable[Sequence], reverse: bool = False) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and its pivot columns.

    With ``reverse`` the columns are scanned from last to first, so pivots
    land on the latest columns.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    order = range(ncols - 1, -1, -1) if reverse else range(ncols)
    pivots = []
    r = 0
    for c in order:
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} over Q."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def affine_hull_equations(points: Sequence[Sequence]) -> list[tuple[list[int], Fraction | int]]:
    """Equations  c . x = d  cutting out the affine hull of ``points``.

    The system is in reduced echelon form with pivots on the latest columns,
    each equation scaled to coprime integers with positive pivot.
    """
    if not points:
        raise ValueError("affine hull of an empty point list")
    p0 = [Fraction(x) for x in points[0]]
    ncols = len(p0)
    acc = RankAccumulator(ncols)
    for p in points[1:]:
        acc.add([Fraction(a) - b for a, b in zip(p, p0)])
        if acc.full:
            break
    if acc.rank == ncols:
        return []
    normals = nullspace([row for _, row in acc.rows], ncols) if acc.rows else [
        [Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)
    ]
    red, pivots = rref(normals, reverse=True)
    eqs = []
    for row, p in zip(red, pivots):
        ints = primitive(_integer_row(row))
        if ints[p] < 0:
            ints = [-x for x in ints]
        rhs = sum(c * x for c, x in zip(ints, p0))
        eqs.append((ints, int(rhs) if rhs.denominator == 1 else rhs))
    return eqs
