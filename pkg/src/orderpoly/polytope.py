"""The five order polytopes: vertex sets, face checks, facets, symmetry, lifting."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import dd
from .exactlin import RankAccumulator, affine_hull_equations
from .relations import (
    OrderClass,
    Relation,
    arc_index,
    arcs,
    characteristic_vector,
    enumerate_relations,
    num_arcs,
)

# Facet enumeration refuses anything larger; P_LO^6 (720 vertices) and
# P_SWO^5 (dimension 20) are deliberately out of reach.
MAX_FACET_DIM = 15
MAX_FACET_VERTICES = 600


class SizeGuardError(RuntimeError):
    """Raised when a computation exceeds its configured size guard."""


def expected_dim(n: int, cls: OrderClass | str) -> int:
    cls = OrderClass.parse(cls)
    if cls is OrderClass.LO:
        return n * (n - 1) // 2
    return n * (n - 1)


@dataclass(frozen=True, eq=False)
class VertexSet:
    """V-representation of one order polytope."""

    n: int
    cls: OrderClass
    relations: tuple[Relation, ...]
    matrix: np.ndarray = field(repr=False)
    dim: int

    @property
    def vertices(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in row) for row in self.matrix]

    def __len__(self) -> int:
        return len(self.relations)


@lru_cache(maxsize=None)
def _build(n: int, cls: OrderClass) -> VertexSet:
    rels = tuple(enumerate_relations(n, cls))
    mat = np.array([characteristic_vector(r) for r in rels], dtype=np.int8)
    mat.setflags(write=False)
    want = expected_dim(n, cls)
    got = _affine_rank_rows(mat, bound=want + 1)
    if got != want:
        raise AssertionError(f"P_{cls.value}^{n}: affine dimension {got}, expected {want}")
    return VertexSet(n, cls, rels, mat, want)


def build(n: int, cls: OrderClass | str) -> VertexSet:
    """Vertex set of the order polytope of class ``cls`` on {1..n}."""
    return _build(n, OrderClass.parse(cls))


def _affine_rank_rows(rows: np.ndarray, bound: int | None = None) -> int:
    if len(rows) == 0:
        return -1
    base = rows[0].astype(np.int64)
    acc = RankAccumulator(rows.shape[1], bound)
    for row in rows[1:]:
        acc.add((row.astype(np.int64) - base).tolist())
        if acc.full:
            break
    return acc.rank


# ---------------------------------------------------------------------------
# Inequalities


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GeneralInequality:
    """``sum alpha_ij x_ij <= rhs`` over A_n with exact rational data.

    ``alpha`` is dense, in canonical arc order.
    """

    n: int
    alpha: tuple[Fraction, ...]
    rhs: Fraction

    def __post_init__(self):
        if len(self.alpha) != num_arcs(self.n):
            raise ValueError("coefficient vector does not match the arc set")
        object.__setattr__(self, "alpha", tuple(_frac(x) for x in self.alpha))
        object.__setattr__(self, "rhs", _frac(self.rhs))
        if not any(self.alpha):
            raise ValueError("inequality needs at least one nonzero coefficient")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Mapping[tuple[int, int], object], rhs) -> GeneralInequality:
        idx = arc_index(n)
        alpha = [Fraction(0)] * num_arcs(n)
        for a, v in coeffs.items():
            alpha[idx[tuple(a)]] = _frac(v)
        return cls(n, tuple(alpha), _frac(rhs))

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return {a: v for a, v in zip(arcs(self.n), self.alpha) if v}

    def integer_form(self) -> tuple[list[int], int]:
        den = lcm(*(x.denominator for x in self.alpha), self.rhs.denominator)
        return [int(x * den) for x in self.alpha], int(self.rhs * den)

    def canonical(self) -> GeneralInequality:
        """Scale by a positive factor to coprime integer coefficients."""
        a, b = self.integer_form()
        g = 0
        for x in a:
            g = gcd(g, x)
        return GeneralInequality(self.n, tuple(Fraction(x // g) for x in a), Fraction(b, g))

    def key(self) -> tuple:
        c = self.canonical()
        return tuple(int(x) for x in c.alpha) + (c.rhs,)

    def relabel(self, perm: Sequence[int]) -> GeneralInequality:
        """Image under x_ij -> x_{perm(i) perm(j)} (perm is 1-based, as a tuple)."""
        idx = arc_index(self.n)
        alpha = [Fraction(0)] * num_arcs(self.n)
        for (i, j), v in zip(arcs(self.n), self.alpha):
            alpha[idx[(perm[i - 1], perm[j - 1])]] = v
        return GeneralInequality(self.n, tuple(alpha), self.rhs)

    def __add__(self, other: GeneralInequality) -> GeneralInequality:
        if self.n != other.n:
            raise ValueError("inequalities live on different arc sets")
        return GeneralInequality(
            self.n, tuple(a + b for a, b in zip(self.alpha, other.alpha)), self.rhs + other.rhs
        )

    def __str__(self) -> str:
        return format_inequality(self)


def format_inequality(q: GeneralInequality) -> str:
    parts = []
    for (i, j), v in q.coeffs.items():
        if v == 1:
            term = f"x({i},{j})"
        elif v == -1:
            term = f"-x({i},{j})"
        else:
            term = f"{v}*x({i},{j})"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts) + f"<={q.rhs}"


@dataclass(frozen=True)
class FaceReport:
    valid: bool
    violating_vertex: Relation | None
    tight_count: int
    face_dim: int
    is_facet: bool

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violating_vertex": None if self.violating_vertex is None else [list(p) for p in self.violating_vertex.pairs()],
            "tight_count": self.tight_count,
            "face_dim": self.face_dim,
            "is_facet": self.is_facet,
        }


def _values(vs: VertexSet, a: Sequence[int]) -> np.ndarray:
    if max((abs(x) for x in a), default=0) < 2**40:
        return vs.matrix.astype(np.int64) @ np.asarray(a, dtype=np.int64)
    return vs.matrix.astype(object) @ np.asarray(a, dtype=object)


def check_face(vs: VertexSet, q: GeneralInequality) -> FaceReport:
    """Validity, tight-set size, face dimension and facet verdict of q on vs."""
    if q.n != vs.n:
        raise ValueError("inequality and polytope have different n")
    a, b = q.integer_form()
    vals = _values(vs, a)
    worst = int(np.argmax(vals))
    if vals[worst] > b:
        tight = np.flatnonzero(vals == b)
        return FaceReport(False, vs.relations[worst], len(tight), _affine_rank_rows(vs.matrix[tight]), False)
    tight = np.flatnonzero(vals == b)
    fdim = _affine_rank_rows(vs.matrix[tight], bound=vs.dim)
    return FaceReport(True, None, len(tight), fdim, fdim == vs.dim - 1)


def tight_relations(vs: VertexSet, q: GeneralInequality) -> list[Relation]:
    a, b = q.integer_form()
    vals = _values(vs, a)
    return [vs.relations[k] for k in np.flatnonzero(vals == b)]


# ---------------------------------------------------------------------------
# Affine hull charts and facet enumeration


@dataclass(frozen=True)
class Equality:
    """``sum coeffs . x = rhs`` over A_n (integers)."""

    coeffs: tuple[int, ...]
    rhs: int

    @property
    def pivot(self) -> int:
        # Latest nonzero column: the coordinate this equation eliminates.
        return max(k for k, c in enumerate(self.coeffs) if c)


def reduce_modulo(q: GeneralInequality, equalities: Sequence[Equality]) -> GeneralInequality:
    """Rewrite q on the affine hull so it has no weight on eliminated coordinates."""
    alpha = list(q.alpha)
    rhs = q.rhs
    for e in equalities:
        p = e.pivot
        if alpha[p]:
            f = alpha[p] / e.coeffs[p]
            alpha = [x - f * c for x, c in zip(alpha, e.coeffs)]
            rhs -= f * e.rhs
    return GeneralInequality(q.n, tuple(alpha), rhs)


def normal_form(q: GeneralInequality, equalities: Sequence[Equality] = ()) -> tuple:
    """Comparable key of q: reduced modulo the equalities, canonically scaled."""
    if equalities:
        q = reduce_modulo(q, equalities)
    return q.key()


@dataclass(frozen=True)
class FacetSystem:
    """H-representation modulo the affine hull: equalities plus one inequality per facet."""

    vs: VertexSet
    equalities: tuple[Equality, ...]
    facets: tuple[GeneralInequality, ...]
    incidence: tuple[frozenset[int], ...]  # vertex indices tight on each facet

    def to_json(self) -> dict:
        return hrep_to_json(self)


def enumerate_facets(
    vs: VertexSet, max_dim: int = MAX_FACET_DIM, max_vertices: int = MAX_FACET_VERTICES
) -> FacetSystem:
    """All facets of conv(vs) by exact double description.

    Works in the coordinate chart of the affine hull (for P_LO this drops
    x_ji = 1 - x_ij, i < j).  Facets are reported on the kept coordinates,
    scaled to coprime integers, and sorted by their key.
    """
    if vs.dim > max_dim or len(vs) > max_vertices:
        raise SizeGuardError(
            f"facet enumeration limited to dim <= {max_dim} and <= {max_vertices} vertices; "
            f"P_{vs.cls.value}^{vs.n} has dim {vs.dim} and {len(vs)} vertices"
        )
    pts = vs.vertices
    eqs = tuple(Equality(tuple(c), int(r)) for c, r in affine_hull_equations(pts))
    eliminated = {e.pivot for e in eqs}
    keep = [k for k in range(num_arcs(vs.n)) if k not in eliminated]
    chart = [[p[k] for k in keep] for p in pts]
    found = []
    for a, b, inc in dd.facets_full_dimensional(chart):
        alpha = [0] * num_arcs(vs.n)
        for k, x in zip(keep, a):
            alpha[k] = x
        q = GeneralInequality(vs.n, tuple(alpha), b)
        tight = frozenset(k for k in range(len(pts)) if inc >> k & 1)
        found.append((q.key(), q, tight))
    found.sort(key=lambda t: t[0])
    return FacetSystem(vs, eqs, tuple(q for _, q, _ in found), tuple(t for _, _, t in found))


@lru_cache(maxsize=None)
def facets_of(n: int, cls: OrderClass | str) -> FacetSystem:
    """Cached ``enumerate_facets(build(n, cls))`` under the default guards."""
    return enumerate_facets(build(n, OrderClass.parse(cls)))


def orbit_representative(q: GeneralInequality, equalities: Sequence[Equality] = ()) -> tuple:
    """Lexicographically least normal form over all relabellings of {1..n}."""
    return min(
        normal_form(q.relabel(p), equalities)
        for p in itertools.permutations(range(1, q.n + 1))
    )


def orbit_count(
    ineqs: Iterable[GeneralInequality], n: int, equalities: Sequence[Equality] = ()
) -> int:
    """Number of relabelling orbits among ``ineqs`` (normal forms modulo ``equalities``)."""
    reps = set()
    for q in ineqs:
        if q.n != n:
            raise ValueError("inequality on the wrong arc set")
        reps.add(orbit_representative(q, equalities))
    return len(reps)


def lift_inequality(q: GeneralInequality, to_n: int | None = None) -> GeneralInequality:
    """Zero-pad q from A_n to A_{to_n} (default n + 1), keeping the rhs."""
    m = q.n + 1 if to_n is None else to_n
    if m < q.n:
        raise ValueError("cannot lift to a smaller ground set")
    coeffs = q.coeffs
    return GeneralInequality.from_coeffs(m, coeffs, q.rhs)


# ---------------------------------------------------------------------------
# JSON files


def _bitstring(row) -> str:
    return "".join(str(int(x)) for x in row)


def _coeff_map(n: int, alpha) -> dict[str, int | str]:
    out = {}
    for (i, j), v in zip(arcs(n), alpha):
        if v:
            v = Fraction(v)
            out[f"{i},{j}"] = int(v) if v.denominator == 1 else str(v)
    return out


def _num(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else str(v)


def vrep_to_json(vs: VertexSet) -> dict:
    return {
        "n": vs.n,
        "class": vs.cls.value,
        "vertices": [_bitstring(r) for r in vs.matrix],
    }


def hrep_to_json(fs: FacetSystem) -> dict:
    vs = fs.vs
    return {
        "n": vs.n,
        "class": vs.cls.value,
        "vertices": [_bitstring(r) for r in vs.matrix],
        "equalities": [{"coeffs": _coeff_map(vs.n, e.coeffs), "rhs": e.rhs} for e in fs.equalities],
        "facets": [{"coeffs": _coeff_map(vs.n, q.alpha), "rhs": _num(q.rhs)} for q in fs.facets],
    }


def inequality_from_json(n: int, obj: Mapping) -> GeneralInequality:
    coeffs = {}
    for key, v in obj["coeffs"].items():
        i, j = (int(t) for t in key.split(","))
        coeffs[(i, j)] = Fraction(v)
    return GeneralInequality.from_coeffs(n, coeffs, Fraction(obj["rhs"]))


def hrep_from_json(obj) -> tuple[int, OrderClass, list[Equality], list[GeneralInequality]]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    cls = OrderClass.parse(obj["class"])
    idx = arc_index(n)
    eqs = []
    for e in obj.get("equalities", []):
        c = [0] * num_arcs(n)
        for key, v in e["coeffs"].items():
            i, j = (int(t) for t in key.split(","))
            c[idx[(i, j)]] = int(v)
        eqs.append(Equality(tuple(c), int(e["rhs"])))
    facets = [inequality_from_json(n, f) for f in obj.get("facets", [])]
    return n, cls, eqs, facets


def vertices_from_json(obj) -> tuple[int, OrderClass, list[Relation]]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    rels = []
    for s in obj["vertices"]:
        bits = sum(1 << k for k, ch in enumerate(s) if ch == "1")
        rels.append(Relation(n, bits))
    return n, OrderClass.parse(obj["class"]), rels
