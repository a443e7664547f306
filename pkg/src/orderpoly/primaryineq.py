"""Primary inequalities: sum over A minus sum over B is at most beta.

Coefficients and right-hand side all lie in {-1, 0, 1}.  This module holds
the combinatorial conditions C0 to C5 on (A, B), the forced completions of
B, A-minimality, the exceptional six-element pattern, theorem-based
classifiers for the partial order, interval order and semiorder polytopes,
and generators for the named families.

Every negative answer carries a witness that can be rechecked on its own.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .polytope import Equality, GeneralInequality, format_inequality
from .relations import arc_index, arcs, num_arcs

Arc = tuple[int, int]


def _arcset(items: Iterable) -> frozenset[Arc]:
    return frozenset((int(a), int(b)) for a, b in items)


@dataclass(frozen=True)
class PrimaryInequality:
    """``sum_{a in A} x_a - sum_{b in B} x_b <= beta`` on A_n."""

    n: int
    A: frozenset[Arc]
    B: frozenset[Arc]
    beta: int

    def __post_init__(self):
        object.__setattr__(self, "A", _arcset(self.A))
        object.__setattr__(self, "B", _arcset(self.B))
        if self.beta not in (-1, 0, 1):
            raise ValueError("beta must be -1, 0 or 1")
        if self.A & self.B:
            raise ValueError("A and B must be disjoint")
        if not (self.A or self.B):
            raise ValueError("A and B cannot both be empty")
        for i, j in self.A | self.B:
            if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"arc ({i},{j}) is not in A_{self.n}")

    def to_general(self) -> GeneralInequality:
        coeffs = {a: 1 for a in self.A}
        coeffs.update({b: -1 for b in self.B})
        return GeneralInequality.from_coeffs(self.n, coeffs, self.beta)

    @classmethod
    def from_general(cls, q: GeneralInequality) -> PrimaryInequality:
        if q.rhs not in (-1, 0, 1) or any(v not in (-1, 0, 1) for v in q.alpha):
            raise ValueError("inequality is not primary")
        A = [a for a, v in zip(arcs(q.n), q.alpha) if v == 1]
        B = [a for a, v in zip(arcs(q.n), q.alpha) if v == -1]
        return cls(q.n, A, B, int(q.rhs))

    def relabel(self, perm: Sequence[int]) -> PrimaryInequality:
        """Image under i -> perm[i-1]."""
        f = lambda arcs_: [(perm[i - 1], perm[j - 1]) for i, j in arcs_]
        return PrimaryInequality(self.n, f(self.A), f(self.B), self.beta)

    def lift(self, m: int) -> PrimaryInequality:
        if m < self.n:
            raise ValueError("cannot lift to a smaller ground set")
        return PrimaryInequality(m, self.A, self.B, self.beta)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "A": [list(a) for a in sorted(self.A)],
            "B": [list(b) for b in sorted(self.B)],
            "beta": self.beta,
        }

    @classmethod
    def from_json(cls, obj) -> PrimaryInequality:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), obj.get("A", []), obj.get("B", []), int(obj["beta"]))

    def __str__(self) -> str:
        return format_inequality(self.to_general())


# ---------------------------------------------------------------------------
# Conditions


@dataclass(frozen=True)
class Check:
    """Outcome of a condition test; ``witness`` explains a failure."""

    ok: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


OK = Check(True)


def cond_c0(A: Iterable[Arc]) -> Check:
    """No two arcs of A on four distinct elements."""
    A = sorted(A)
    for (i, j), (k, l) in itertools.combinations(A, 2):
        if len({i, j, k, l}) == 4:
            return Check(False, ((i, j), (k, l)))
    return OK


def cond_c1(A: Iterable[Arc]) -> Check:
    """Distinct arcs of A have distinct tails and distinct heads."""
    A = sorted(A)
    for (i, j), (k, l) in itertools.combinations(A, 2):
        if i == k or j == l:
            return Check(False, ((i, j), (k, l)))
    return OK


def cond_c2(A: Iterable[Arc], B: Iterable[Arc]) -> Check:
    B = set(B)
    A = sorted(A)
    for (i, j), (k, l) in itertools.permutations(A, 2):
        if len({i, j, k, l}) == 4 and (i, l) not in B:
            return Check(False, ((i, j), (k, l), (i, l)))
    return OK


def _two_paths(A: Iterable[Arc]):
    """All (i, j, k) distinct with (i,j), (j,k) in A."""
    A = sorted(A)
    out = {}
    for i, j in A:
        out.setdefault(i, []).append(j)
    for i, j in A:
        for k in out.get(j, ()):
            if k != i:
                yield i, j, k


def cond_c3(A: Iterable[Arc], B: Iterable[Arc]) -> Check:
    B = set(B)
    for i, j, k in _two_paths(A):
        if (i, k) not in B:
            return Check(False, ((i, j), (j, k), (i, k)))
    return OK


def cond_c4(A: Iterable[Arc], B: Iterable[Arc], n: int) -> Check:
    B = set(B)
    for i, j, k in _two_paths(A):
        if (i, k) in B:
            continue
        if any((i, p) in B and (p, k) in B for p in range(1, n + 1) if p not in (i, j, k)):
            continue
        return Check(False, (i, j, k))
    return OK


def _three_paths(A: Iterable[Arc]):
    A = sorted(A)
    out = {}
    for i, j in A:
        out.setdefault(i, []).append(j)
    for i, j, k in _two_paths(A):
        for l in out.get(k, ()):
            if l not in (i, j):
                yield i, j, k, l


def c5_requirements(i: int, j: int, k: int, l: int, B: set[Arc], n: int) -> list[str]:
    """Names of the requirements v1..v6 that hold at the path i->j->k->l."""
    others = [x for x in range(1, n + 1) if x not in (i, j, k, l)]
    held = []
    if (i, k) in B:
        held.append("v1")
    if (j, l) in B:
        held.append("v2")
    if any((i, r) in B and (r, k) in B for r in others):
        held.append("v3")
    if any((j, s) in B and (s, l) in B for s in others):
        held.append("v4")
    if any((i, t) in B and (t, l) in B for t in others):
        held.append("v5")
    if any((i, u) in B and (u, v) in B and (v, l) in B for u in others for v in others if u != v):
        held.append("v6")
    return held


def cond_c5(A: Iterable[Arc], B: Iterable[Arc], n: int) -> Check:
    """At every A-path i->j->k->l on distinct elements some requirement v1..v6 holds."""
    B = set(B)
    for i, j, k, l in _three_paths(A):
        if not c5_requirements(i, j, k, l, B, n):
            return Check(False, (i, j, k, l))
    return OK


def is_pc_graph(A: Iterable[Arc], n: int | None = None) -> bool:
    """In- and out-degrees of (V_n, A) are at most one."""
    tails, heads = set(), set()
    for i, j in A:
        if i in tails or j in heads:
            return False
        tails.add(i)
        heads.add(j)
    return True


def _require_pc(A) -> None:
    if not is_pc_graph(A):
        raise ValueError("A is not a PC-graph (Condition C1 fails)")


def forced_b_c2(A: Iterable[Arc], n: int | None = None) -> frozenset[Arc]:
    """Arcs (i,l) with (i,j), (k,l) in A on four distinct elements."""
    A = list(A)
    _require_pc(A)
    return frozenset(
        (i, l) for (i, j), (k, l) in itertools.permutations(A, 2) if len({i, j, k, l}) == 4
    )


def forced_b_c2c3(A: Iterable[Arc], n: int | None = None) -> frozenset[Arc]:
    """The C2-forced arcs together with the shortcuts (i,k) of A-paths i->j->k."""
    A = list(A)
    return forced_b_c2(A) | frozenset((i, k) for i, j, k in _two_paths(A))


def pso_conditions(A, B, n: int) -> Check:
    """C1, C2, C4 and C5 in that order; the witness is tagged by condition."""
    for tag, c in (
        ("C1", lambda: cond_c1(A)),
        ("C2", lambda: cond_c2(A, B)),
        ("C4", lambda: cond_c4(A, B, n)),
        ("C5", lambda: cond_c5(A, B, n)),
    ):
        r = c()
        if not r:
            return Check(False, (tag, r.witness))
    return OK


def is_a_minimal(A: Iterable[Arc], B: Iterable[Arc], n: int) -> Check:
    """Every arc of B is needed: dropping it breaks one of C1, C2, C4, C5."""
    A = frozenset(A)
    B = frozenset(B)
    for c in sorted(B):
        if pso_conditions(A, B - {c}, n):
            return Check(False, (c,))
    return OK


# ---------------------------------------------------------------------------
# The exceptional pattern

A6 = frozenset({(1, 2), (2, 3), (3, 4), (4, 1)})
B6 = frozenset({
    (2, 1), (3, 2), (4, 3), (1, 4),
    (5, 1), (5, 2), (5, 3), (5, 4), (6, 5),
    (1, 6), (2, 6), (3, 6), (4, 6),
})


def _signature(v, A, B):
    return (
        sum(1 for a in A if a[0] == v), sum(1 for a in A if a[1] == v),
        sum(1 for b in B if b[0] == v), sum(1 for b in B if b[1] == v),
    )


def match_pattern(PA, PB, A, B) -> dict[int, int] | None:
    """An injective map of the pattern's elements carrying PA onto A and PB onto B.

    Elements outside the pattern must be isolated in A and B.  Backtracks
    over candidates with equal degree signatures.
    """
    PA, PB, A, B = frozenset(PA), frozenset(PB), frozenset(A), frozenset(B)
    if len(PA) != len(A) or len(PB) != len(B):
        return None
    pverts = sorted({x for a in PA | PB for x in a})
    tverts = sorted({x for a in A | B for x in a})
    if len(pverts) != len(tverts):
        return None
    psig = {v: _signature(v, PA, PB) for v in pverts}
    tsig = {v: _signature(v, A, B) for v in tverts}
    # most constrained pattern elements first
    pverts.sort(key=lambda v: -sum(psig[v]))

    def kind(u, v, X, Y):
        return 1 if (u, v) in X else (-1 if (u, v) in Y else 0)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(pverts):
            return True
        p = pverts[pos]
        for t in tverts:
            if t in used or tsig[t] != psig[p]:
                continue
            if all(
                kind(p, q, PA, PB) == kind(t, mapping[q], A, B)
                and kind(q, p, PA, PB) == kind(mapping[q], t, A, B)
                for q in mapping
            ):
                mapping[p] = t
                used.add(t)
                if extend(pos + 1):
                    return True
                del mapping[p]
                used.discard(t)
        return False

    return dict(mapping) if extend(0) else None


def exceptional_relabelling(A, B, n: int) -> tuple[int, ...] | None:
    """A permutation sigma of V_n with sigma(A6) = A, sigma(B6) = B, if any."""
    if n < 6:
        return None
    m = match_pattern(A6, B6, A, B)
    if m is None:
        return None
    rest = iter(x for x in range(1, n + 1) if x not in m.values())
    return tuple(m[i] if i in m else next(rest) for i in range(1, n + 1))


def is_exceptional(A, B, n: int) -> bool:
    return exceptional_relabelling(A, B, n) is not None


# ---------------------------------------------------------------------------
# Classifiers


@dataclass(frozen=True)
class Verdict:
    """Validity and facet status with the first failed clause and its witness."""

    valid: bool
    fdi: bool
    failed_condition: str | None = None
    witness: tuple | None = None

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, (tuple, list)):
                return [enc(y) for y in x]
            return x

        return {
            "valid": self.valid,
            "fdi": self.fdi,
            "failed_condition": self.failed_condition,
            "witness": enc(self.witness),
        }


PsoVerdict = Verdict

FDI = Verdict(True, True)


def _beta_rule(p: PrimaryInequality) -> Verdict | None:
    """Verdicts decided by the right-hand side alone.

    The empty relation refutes beta = -1 and a single arc of A refutes
    beta = 0.  The witness is the refuting relation's arc list.
    """
    if p.beta == -1:
        return Verdict(False, False, "BetaRule", ())
    if p.A and p.beta == 0:
        return Verdict(False, False, "BetaRule", (min(p.A),))
    if not p.A:
        # -sum_B x <= beta with beta in {0, 1}
        if p.beta == 0 and len(p.B) == 1:
            return FDI
        if p.beta == 0:
            return Verdict(True, False, "NotMinimal", (min(p.B),))
        return Verdict(True, False, "ASize", ())
    return None


def _nonneg_face(p: PrimaryInequality) -> Verdict | None:
    if len(p.A) == 1:
        return Verdict(True, False, "ASize", tuple(p.A))
    return None


def classify_ppo(p: PrimaryInequality) -> Verdict:
    """Partial order polytope.

    Valid (beta = 1) exactly when A is one arc, a 2-cycle, a 2-path i->j->k
    with (i,k) in B, or a 3-cycle whose three reversed arcs lie in B.  The
    facets are the 2-cycle with B empty, the 2-path with B = {(i,k)}, the
    3-cycle with exactly the reversed arcs, and nonnegativity.
    """
    v = _beta_rule(p)
    if v is not None:
        return v
    A, B = p.A, p.B
    c1 = cond_c1(A)
    if not c1:
        return Verdict(False, False, "C1", c1.witness)
    c0 = cond_c0(A)
    if not c0:
        return Verdict(False, False, "C0", c0.witness)
    c3 = cond_c3(A, B)
    if not c3:
        return Verdict(False, False, "C3", c3.witness)
    v = _nonneg_face(p)
    if v is not None:
        return v
    # C0 and C1 leave a 2-cycle, a 2-path or a 3-cycle
    need = frozenset((i, k) for i, j, k in _two_paths(A))
    extra = B - need
    if extra:
        return Verdict(True, False, "NotMinimal", (min(extra),))
    return FDI


def classify_pio(p: PrimaryInequality) -> Verdict:
    """Interval order polytope: valid iff C1, C2, C3; facet iff moreover B is forced."""
    v = _beta_rule(p)
    if v is not None:
        return v
    A, B = p.A, p.B
    for tag, r in (("C1", lambda: cond_c1(A)), ("C2", lambda: cond_c2(A, B)), ("C3", lambda: cond_c3(A, B))):
        r = r()
        if not r:
            return Verdict(False, False, tag, r.witness)
    v = _nonneg_face(p)
    if v is not None:
        return v
    extra = B - forced_b_c2c3(A)
    if extra:
        return Verdict(True, False, "NotMinimal", (min(extra),))
    return FDI


def classify_pso_valid(p: PrimaryInequality) -> bool:
    """Semiorder polytope validity: beta rule, then C1, C2, C4 and C5."""
    v = _beta_rule(p)
    if v is not None:
        return v.valid
    return bool(pso_conditions(p.A, p.B, p.n))


def classify_pso_fdi(p: PrimaryInequality) -> PsoVerdict:
    """Semiorder polytope facets.

    Besides nonnegativity, a facet needs beta = 1, |A| >= 2, C1, C2, C4, C5,
    no exceptional relabelling, and an A-minimal B.
    """
    v = _beta_rule(p)
    if v is not None:
        return v
    A, B, n = p.A, p.B, p.n
    r = pso_conditions(A, B, n)
    if not r:
        tag, w = r.witness
        return Verdict(False, False, tag, w)
    v = _nonneg_face(p)
    if v is not None:
        return v
    sigma = exceptional_relabelling(A, B, n)
    if sigma is not None:
        return Verdict(True, False, "Exceptional", sigma)
    m = is_a_minimal(A, B, n)
    if not m:
        return Verdict(True, False, "NotMinimal", m.witness)
    return FDI


CLASSIFIERS = {"po": classify_ppo, "io": classify_pio, "so": classify_pso_fdi}


def components(A: Iterable[Arc], n: int) -> list[frozenset[Arc]]:
    """Arc sets of the nontrivial weak components of (V_n, A)."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    A = list(A)
    for i, j in A:
        parent[find(i)] = find(j)
    comps: dict[int, set] = {}
    for a in A:
        comps.setdefault(find(a[0]), set()).add(a)
    return [frozenset(c) for _, c in sorted(comps.items())]


def shortcut_forced_pso(A: Iterable[Arc], n: int) -> bool | None:
    """True when the component shape of A pins the facet completion to the C2-forced B.

    Answers for four shapes: a component that is a 2-cycle, two components
    with at least two arcs, a component with at least six arcs, or all
    nontrivial components single arcs.  Otherwise returns None.  A needs at
    least two arcs.
    """
    A = frozenset(A)
    _require_pc(A)
    if len(A) < 2:
        return None
    comps = components(A, n)
    sizes = [len(c) for c in comps]
    if any(len(c) == 2 and all((j, i) in c for i, j in c) for c in comps):
        return True
    if sum(1 for s in sizes if s >= 2) >= 2:
        return True
    if any(s >= 6 for s in sizes):
        return True
    if all(s == 1 for s in sizes):
        return True
    return None


# ---------------------------------------------------------------------------
# Generators


def _need(n: int, m: int, what: str) -> None:
    if n < m:
        raise ValueError(f"{what} needs n >= {m}")


def fence(m: int, n: int, relabelings: bool = False) -> list[PrimaryInequality]:
    """The m-fence on a_t = 2t-1, b_t = 2t: A = {(a_t, b_t)}, B = {(a_s, b_t) : s != t}."""
    if m < 1:
        raise ValueError("m must be positive")
    _need(n, 2 * m, f"the {m}-fence")
    A = [(2 * t - 1, 2 * t) for t in range(1, m + 1)]
    B = [(2 * s - 1, 2 * t) for s in range(1, m + 1) for t in range(1, m + 1) if s != t]
    base = PrimaryInequality(n, A, B, 1)
    return all_relabelings(base) if relabelings else [base]


def axiomatic(n: int, relabelings: bool = False) -> list[PrimaryInequality]:
    """The four axiomatic semiorder inequalities on i, j, k, l = 1, 2, 3, 4."""
    _need(n, 4, "the axiomatic inequalities")
    i, j, k, l = 1, 2, 3, 4
    base = [
        PrimaryInequality(n, [(i, j), (j, i)], [], 1),
        PrimaryInequality(n, [(i, j), (j, k)], [(i, k)], 1),
        PrimaryInequality(n, [(i, j), (k, l)], [(i, l), (k, j)], 1),
        PrimaryInequality(n, [(i, j), (j, k)], [(i, l), (l, k)], 1),
    ]
    if not relabelings:
        return base
    return [q for p in base for q in all_relabelings(p)]


AXIOMATIC_MIN_N = (2, 3, 4, 4)


def exceptional(n: int, relabelings: bool = False) -> list[PrimaryInequality]:
    _need(n, 6, "the exceptional inequality")
    base = PrimaryInequality(n, A6, B6, 1)
    return all_relabelings(base) if relabelings else [base]


BASIC_MIN_N = (2, 2, 3, 3, 4)


def basic_inequality(k: int, n: int) -> PrimaryInequality:
    """The k-th (1..5) inequality of the basic list on i, j, k, l = 1, 2, 3, 4."""
    if not 1 <= k <= 5:
        raise ValueError("k must be 1..5")
    _need(n, BASIC_MIN_N[k - 1], f"basic inequality {k}")
    i, j, kk, l = 1, 2, 3, 4
    A, B, b = (
        ([], [(i, j)], 0),
        ([(i, j), (j, i)], [], 1),
        ([(i, j), (j, kk)], [(i, kk)], 1),
        ([(i, j), (j, kk), (kk, i)], [(j, i), (kk, j), (i, kk)], 1),
        ([(i, j), (kk, l)], [(i, l), (kk, j)], 1),
    )[k - 1]
    return PrimaryInequality(n, A, B, b)


def five_basic(n: int) -> list[PrimaryInequality]:
    _need(n, 4, "the five basic inequalities")
    return [basic_inequality(k, n) for k in range(1, 6)]


def all_relabelings(p: PrimaryInequality) -> list[PrimaryInequality]:
    """Distinct images of p under all permutations of V_n, sorted."""
    seen = {}
    for perm in itertools.permutations(range(1, p.n + 1)):
        q = p.relabel(perm)
        seen[(tuple(sorted(q.A)), tuple(sorted(q.B)))] = q
    return [seen[k] for k in sorted(seen)]


# Nine primary inequalities for the strict weak order polytope on 1..4,
# as (A, B, rhs), transcribed without amendment.
def _both(i, j):
    return [(i, j), (j, i)]


PSWO_TRANSCRIBED: dict[str, tuple[list[Arc], list[Arc], int]] = {
    "F1": ([], [(1, 2)], 0),
    "F2": (_both(1, 2), [], 1),
    "F3": ([(1, 3)], [(1, 2), (2, 3)], 0),
    "F4": (_both(1, 2) + _both(2, 4) + _both(1, 4), _both(2, 3) + _both(1, 3) + _both(3, 4), 0),
    "F5": (_both(1, 3) + [(2, 4)], [(1, 2), (3, 2), (4, 1), (4, 3), (4, 2)], 0),
    "F6": (_both(2, 4) + [(2, 3), (4, 3)], _both(1, 2) + _both(1, 4) + [(1, 3)], 1),
    "F7": (_both(2, 4) + [(3, 1)], _both(1, 2) + _both(1, 4) + [(3, 2), (3, 4)], 0),
    "F8": (_both(2, 4) + [(3, 2), (3, 4)], _both(1, 2) + _both(1, 4) + [(3, 1)], 1),
    "F9": (_both(2, 4) + [(1, 3)], _both(1, 2) + _both(1, 4) + [(2, 3), (4, 3)], 0),
}

# As transcribed, F4 and F5 are not valid on P_SWO^4.  These are the nearest
# facets: F4 with right-hand side 1, F5 with the 2<->4 arcs swapped between
# A and B.  Kept separate so the transcription stays inspectable.
PSWO_CORRECTIONS: dict[str, tuple[list[Arc], list[Arc], int, str]] = {
    "F4": (_both(1, 2) + _both(2, 4) + _both(1, 4), _both(2, 3) + _both(1, 3) + _both(3, 4), 1,
           "right-hand side 1 instead of 0"),
    "F5": (_both(1, 3) + [(4, 2)], [(1, 2), (3, 2), (4, 1), (4, 3), (2, 4)], 0,
           "arc (2,4) in B and (4,2) in A, instead of the reverse"),
}


def pswo_catalog(n: int = 4, corrected: bool = False) -> dict[str, PrimaryInequality]:
    """F1..F9 lifted to n; with ``corrected`` the two amended entries replace the transcribed ones."""
    _need(n, 4, "the strict weak order catalog")
    out = {}
    for name, (A, B, b) in PSWO_TRANSCRIBED.items():
        if corrected and name in PSWO_CORRECTIONS:
            A, B, b, _ = PSWO_CORRECTIONS[name]
        out[name] = PrimaryInequality(n, A, B, b)
    return out


# ---------------------------------------------------------------------------
# Linear ordering polytope


def plo_equalities(n: int) -> list[Equality]:
    """x_ij + x_ji = 1 for i < j."""
    idx = arc_index(n)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = [0] * num_arcs(n)
            c[idx[(i, j)]] = 1
            c[idx[(j, i)]] = 1
            out.append(Equality(tuple(c), 1))
    return out


def plo_trivial_transitive(n: int) -> list[PrimaryInequality]:
    """Trivial -x_ij <= 0 for every arc, and x_ij + x_jk - x_ik <= 1 once per facet.

    The three rotations of a cyclic triple define the same facet on the affine
    hull, so each 3-set contributes two transitive inequalities (i smallest).
    """
    _need(n, 2, "the linear ordering polytope")
    out = [PrimaryInequality(n, [], [a], 0) for a in arcs(n)]
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        if i < j and i < k:
            out.append(PrimaryInequality(n, [(i, j), (j, k)], [(i, k)], 1))
    return out


MOBIUS_N = 14
MOBIUS_RHS = 17
MOBIUS_ARCS: tuple[Arc, ...] = (
    (1, 2), (2, 9), (9, 8), (8, 1), (3, 2), (10, 3), (9, 10), (3, 4), (4, 11),
    (11, 10), (5, 4), (12, 5), (11, 12), (5, 6), (6, 13), (13, 12), (7, 6),
    (14, 7), (13, 14), (7, 8), (1, 14),
)


def mobius_inequality() -> GeneralInequality:
    return GeneralInequality.from_coeffs(MOBIUS_N, {a: 1 for a in MOBIUS_ARCS}, MOBIUS_RHS)


def plo_mobius_primary(pairs: Iterable[Sequence[int]]) -> PrimaryInequality:
    """The Moebius inequality minus x_ij + x_ji = 1 for each chosen unordered pair.

    Rejects repeated pairs and any choice leaving a coefficient or the
    right-hand side outside {-1, 0, 1}.
    """
    chosen = []
    seen = set()
    for pr in pairs:
        i, j = (int(x) for x in pr)
        key = frozenset((i, j))
        if i == j or not (1 <= i <= MOBIUS_N and 1 <= j <= MOBIUS_N):
            raise ValueError(f"({i},{j}) is not a pair of distinct elements of V_{MOBIUS_N}")
        if key in seen:
            raise ValueError(f"pair {{{i},{j}}} chosen twice")
        seen.add(key)
        chosen.append((i, j))
    coeffs = {a: 1 for a in MOBIUS_ARCS}
    for i, j in chosen:
        coeffs[(i, j)] = coeffs.get((i, j), 0) - 1
        coeffs[(j, i)] = coeffs.get((j, i), 0) - 1
    rhs = MOBIUS_RHS - len(chosen)
    if rhs not in (-1, 0, 1):
        raise ValueError(f"right-hand side {rhs} after {len(chosen)} equalities is not in {{-1,0,1}}")
    if any(v not in (-1, 0, 1) for v in coeffs.values()):
        raise ValueError("a coefficient leaves {-1,0,1}")
    A = [a for a, v in coeffs.items() if v == 1]
    B = [a for a, v in coeffs.items() if v == -1]
    return PrimaryInequality(MOBIUS_N, A, B, rhs)


def max_over_linear_orders(q: GeneralInequality) -> Fraction:
    """Maximum of q's left-hand side over all linear orders of V_n (subset DP)."""
    n = q.n
    w = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for (i, j), v in q.coeffs.items():
        w[i][j] = v
    best = {0: Fraction(0)}
    for mask in range(1, 1 << n):
        # the element placed last among `mask` is above all others in it
        top = None
        for v in range(n):
            if mask >> v & 1:
                rest = mask & ~(1 << v)
                gain = sum(w[u + 1][v + 1] for u in range(n) if rest >> u & 1)
                cand = best[rest] + gain
                if top is None or cand > top:
                    top = cand
        best[mask] = top
    return best[(1 << n) - 1]


# ---------------------------------------------------------------------------
# Text form


class DSLError(ValueError):
    def __init__(self, msg: str, col: int):
        super().__init__(f"column {col}: {msg}")
        self.col = col


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?x\(\s*(\d+)\s*,\s*(\d+)\s*\)")
_RHS = re.compile(r"\s*<=\s*([+-]?\d+(?:/\d+)?)\s*$")


def parse_inequality(text: str, n: int | None = None) -> GeneralInequality:
    """Parse ``x(1,2)+x(2,3)-x(1,3)<=1``; coefficients like ``2*x(1,2)`` are allowed.

    Columns in error messages are 1-based.
    """
    pos = 0
    coeffs: dict[Arc, Fraction] = {}
    first = True
    while True:
        m = _RHS.match(text, pos)
        if m and not first:
            rhs = Fraction(m.group(1))
            break
        m = _TERM.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise DSLError("expected a term like x(i,j) or '<= rhs'", col)
        sign, c, i, j = m.groups()
        if not sign and not first:
            lead = len(m.group(0)) - len(m.group(0).lstrip())
            raise DSLError("missing '+' or '-' between terms", m.start() + lead + 1)
        v = Fraction(c) if c else Fraction(1)
        if sign == "-":
            v = -v
        a = (int(i), int(j))
        if a[0] == a[1]:
            raise DSLError(f"loop x({a[0]},{a[1]}) is not a variable", m.start(3) + 1)
        if a in coeffs:
            raise DSLError(f"duplicate term x({a[0]},{a[1]})", m.start() + 1)
        coeffs[a] = v
        pos = m.end()
        first = False
    big = max(max(a) for a in coeffs)
    if n is None:
        n = big
    elif big > n:
        raise DSLError(f"element {big} exceeds n={n}", 1)
    return GeneralInequality.from_coeffs(n, coeffs, rhs)


def parse_primary(text: str, n: int | None = None) -> PrimaryInequality:
    q = parse_inequality(text, n)
    try:
        return PrimaryInequality.from_general(q)
    except ValueError:
        raise DSLError("coefficients and right-hand side must lie in {-1,0,1}", 1) from None


def load_inequality(obj: Mapping | str, n: int | None = None) -> GeneralInequality:
    """Inequality from a DSL string or a JSON object (primary or coefficient-map form)."""
    if isinstance(obj, str):
        s = obj.strip()
        if not s.startswith("{"):
            return parse_inequality(s, n)
        obj = json.loads(s)
    if "A" in obj or "B" in obj:
        p = PrimaryInequality.from_json(obj)
        return p.to_general() if n is None else p.lift(n).to_general()
    from .polytope import inequality_from_json

    return inequality_from_json(int(obj.get("n", n)), obj)
