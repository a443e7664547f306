"""Relations on {1..n}, the five order classes and their enumerators.

A relation is stored as an integer bitmask over the arc set
``A_n = {(i, j) : i != j}``.  Arcs are indexed lexicographically:
(1,2), (1,3), ..., (1,n), (2,1), (2,3), ...
"""
from __future__ import annotations

import enum
import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

MIN_N = 2
MAX_N = 8


class OrderClass(enum.Enum):
    LO = "lo"
    SWO = "swo"
    SO = "so"
    IO = "io"
    PO = "po"

    @classmethod
    def parse(cls, text: str | OrderClass) -> OrderClass:
        if isinstance(text, OrderClass):
            return text
        key = text.strip().lower()
        aliases = {
            "linearorder": "lo", "linear": "lo",
            "strictweakorder": "swo", "weak": "swo",
            "semiorder": "so",
            "intervalorder": "io", "interval": "io",
            "partialorder": "po", "partial": "po",
        }
        key = aliases.get(key.replace("_", "").replace("-", ""), key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown order class {text!r}") from None


# Inclusion chain LO ⊆ SWO ⊆ SO ⊆ IO ⊆ PO.
CLASS_CHAIN = (OrderClass.LO, OrderClass.SWO, OrderClass.SO, OrderClass.IO, OrderClass.PO)

# Largest n each enumerator accepts.
ENUM_LIMITS = {
    OrderClass.LO: 8,
    OrderClass.SWO: 7,
    OrderClass.SO: 7,
    OrderClass.IO: 6,
    OrderClass.PO: 6,
}


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not MIN_N <= n <= MAX_N:
        raise ValueError(f"ground-set size must be an integer in [{MIN_N}, {MAX_N}], got {n!r}")


@lru_cache(maxsize=None)
def arcs(n: int) -> tuple[tuple[int, int], ...]:
    """The arc set A_n in canonical (lexicographic) order."""
    # no upper cap here: inequalities may live on larger ground sets than relations
    if not isinstance(n, int) or n < MIN_N:
        raise ValueError(f"ground-set size must be an integer >= {MIN_N}, got {n!r}")
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j)


@lru_cache(maxsize=None)
def arc_index(n: int) -> dict[tuple[int, int], int]:
    return {a: k for k, a in enumerate(arcs(n))}


@lru_cache(maxsize=None)
def _bit_table(n: int) -> tuple[tuple[int, ...], ...]:
    # _bit_table(n)[i][j] = 1 << index of arc (i, j), 0 on the diagonal; 1-based.
    idx = arc_index(n)
    return tuple(
        tuple(0 if i == j or 0 in (i, j) else 1 << idx[(i, j)] for j in range(n + 1))
        for i in range(n + 1)
    )


def num_arcs(n: int) -> int:
    return n * (n - 1)


@dataclass(frozen=True)
class Relation:
    """An irreflexive relation on {1..n}; ``bits`` has bit k set iff arc k is present."""

    n: int
    bits: int = 0

    def __post_init__(self):
        _check_n(self.n)
        if self.bits < 0 or self.bits >> num_arcs(self.n):
            raise ValueError("bitmask has bits outside the arc set")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> Relation:
        table = _bit_table(n)
        bits = 0
        for i, j in pairs:
            if i == j:
                raise ValueError(f"loop ({i},{i}) is not allowed")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i},{j}) outside ground set 1..{n}")
            bits |= table[i][j]
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> Relation:
        return cls(n, 0)

    def __contains__(self, pair) -> bool:
        i, j = pair
        if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
            return False
        return bool(self.bits & _bit_table(self.n)[i][j])

    def with_pair(self, i: int, j: int) -> Relation:
        return Relation(self.n, self.bits | Relation.from_pairs(self.n, [(i, j)]).bits)

    def without_pair(self, i: int, j: int) -> Relation:
        return Relation(self.n, self.bits & ~Relation.from_pairs(self.n, [(i, j)]).bits)

    def pairs(self) -> list[tuple[int, int]]:
        return [a for k, a in enumerate(arcs(self.n)) if self.bits >> k & 1]

    def __len__(self) -> int:
        return self.bits.bit_count()

    def successors(self) -> list[int]:
        """``succ[i]`` is a bitmask over elements (bit j for element j), index 0 unused."""
        return _succ_masks(self.n, self.bits)

    def relabel(self, perm) -> Relation:
        """Image under the relabelling i -> perm[i-1]."""
        table = _bit_table(self.n)
        bits = 0
        for i, j in self.pairs():
            bits |= table[perm[i - 1]][perm[j - 1]]
        return Relation(self.n, bits)

    def sort_key(self) -> tuple[int, ...]:
        return characteristic_vector(self)

    def __str__(self) -> str:
        return format_relation(self)


def characteristic_vector(r: Relation) -> tuple[int, ...]:
    """The 0/1 vector chi^r indexed by A_n in canonical order."""
    return tuple((r.bits >> k) & 1 for k in range(num_arcs(r.n)))


def _succ_masks(n: int, bits: int) -> list[int]:
    succ = [0] * (n + 1)
    k = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                if bits >> k & 1:
                    succ[i] |= 1 << j
                k += 1
    return succ


def _pred_masks(n: int, succ: list[int]) -> list[int]:
    pred = [0] * (n + 1)
    for i in range(1, n + 1):
        s = succ[i]
        for j in range(1, n + 1):
            if s >> j & 1:
                pred[j] |= 1 << i
    return pred


def _is_po_succ(n: int, succ: list[int]) -> bool:
    for i in range(1, n + 1):
        si = succ[i]
        for j in range(1, n + 1):
            if si >> j & 1:
                if succ[j] >> i & 1:
                    return False
                if succ[j] & ~si:
                    return False
    return True


def is_partial_order(r: Relation) -> bool:
    """Asymmetric and transitive (irreflexivity holds by construction)."""
    return _is_po_succ(r.n, r.successors())


def is_linear_order(r: Relation) -> bool:
    return is_partial_order(r) and 2 * len(r) == num_arcs(r.n)


def is_strict_weak_order(r: Relation) -> bool:
    """Partial order with  i r k  =>  i r j or j r k  for every j."""
    if not is_partial_order(r):
        return False
    succ = r.successors()
    n = r.n
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if succ[i] >> k & 1:
                for j in range(1, n + 1):
                    if j != i and j != k and not (succ[i] >> j & 1 or succ[j] >> k & 1):
                        return False
    return True


def _has_2p2(n: int, pred: list[int]) -> bool:
    # For a poset, an induced 2+2 exists iff two predecessor sets are incomparable.
    for b in range(1, n + 1):
        pb = pred[b]
        for d in range(b + 1, n + 1):
            pd = pred[d]
            if pb & ~pd and pd & ~pb:
                return True
    return False


def _has_3p1(n: int, succ: list[int], pred: list[int]) -> bool:
    full = ((1 << (n + 1)) - 1) & ~1
    for b in range(1, n + 1):
        cb = succ[b] | pred[b] | 1 << b
        for a in range(1, n + 1):
            if not pred[b] >> a & 1:
                continue
            ca = succ[a] | pred[a] | 1 << a
            for c in range(1, n + 1):
                if succ[b] >> c & 1:
                    cc = succ[c] | pred[c] | 1 << c
                    if full & ~(ca | cb | cc):
                        return True
    return False


def _require_po(r: Relation) -> list[int]:
    succ = r.successors()
    if not _is_po_succ(r.n, succ):
        raise ValueError(f"not a partial order: {r}")
    return succ


def contains_two_plus_two(r: Relation) -> bool:
    """Whether the partial order r induces the poset 2+2."""
    succ = _require_po(r)
    return _has_2p2(r.n, _pred_masks(r.n, succ))


def contains_three_plus_one(r: Relation) -> bool:
    """Whether the partial order r induces the poset 3+1."""
    succ = _require_po(r)
    return _has_3p1(r.n, succ, _pred_masks(r.n, succ))


def is_interval_order(r: Relation) -> bool:
    succ = r.successors()
    if not _is_po_succ(r.n, succ):
        return False
    return not _has_2p2(r.n, _pred_masks(r.n, succ))


def is_semiorder(r: Relation) -> bool:
    succ = r.successors()
    if not _is_po_succ(r.n, succ):
        return False
    pred = _pred_masks(r.n, succ)
    return not _has_2p2(r.n, pred) and not _has_3p1(r.n, succ, pred)


PREDICATES = {
    OrderClass.LO: is_linear_order,
    OrderClass.SWO: is_strict_weak_order,
    OrderClass.SO: is_semiorder,
    OrderClass.IO: is_interval_order,
    OrderClass.PO: is_partial_order,
}


def belongs_to(r: Relation, cls: OrderClass | str) -> bool:
    return PREDICATES[OrderClass.parse(cls)](r)


# ---------------------------------------------------------------------------
# Unit interval representations


@dataclass(frozen=True)
class UnitRepresentation:
    """Interval starts ``f``; element i occupies [f(i), f(i) + 1]."""

    f: tuple[Fraction, ...]

    def __call__(self, i: int) -> Fraction:
        return self.f[i - 1]

    def relation(self) -> Relation:
        n = len(self.f)
        return Relation.from_pairs(
            n, [(i, j) for i, j in arcs(n) if self.f[i - 1] + 1 < self.f[j - 1]]
        )

    def represents(self, r: Relation) -> bool:
        return len(self.f) == r.n and self.relation() == r


def find_unit_representation(r: Relation) -> UnitRepresentation | None:
    """A unit interval representation of the partial order r, or None if r is not a semiorder.

    Solves the difference system  f(j) - f(i) > 1  for (i,j) in r  and
    |f(i) - f(j)| <= 1  for incomparable i, j.  Weights are pairs
    (value, epsilon-count) compared lexicographically, so strict constraints
    are exact; a concrete epsilon is chosen afterwards by halving from 1.
    """
    succ = _require_po(r)
    n = r.n
    # Edge (v, u, w) encodes  f(u) - f(v) <= w.
    edges = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if succ[i] >> j & 1:
                edges.append((j, i, (-1, -1)))
            elif not succ[j] >> i & 1:
                edges.append((j, i, (1, 0)))
    dist = [(0, 0)] * (n + 1)
    for _ in range(n + 1):
        changed = False
        for v, u, (wa, wb) in edges:
            cand = (dist[v][0] + wa, dist[v][1] + wb)
            if cand < dist[u]:
                dist[u] = cand
                changed = True
        if not changed:
            break
    else:
        return None
    eps = Fraction(1)
    while True:
        vals = [Fraction(dist[u][0]) + dist[u][1] * eps for u in range(1, n + 1)]
        lo = min(vals)
        rep = UnitRepresentation(tuple(v - lo for v in vals))
        if rep.represents(r):
            return rep
        eps /= 2


# ---------------------------------------------------------------------------
# Enumeration


def _sorted_relations(n: int, bitsets) -> list[Relation]:
    width = num_arcs(n)
    rev = {b: int(format(b, f"0{width}b")[::-1], 2) for b in bitsets}
    return [Relation(n, b) for b in sorted(rev, key=rev.__getitem__)]


def _lo_bits(n: int) -> set[int]:
    table = _bit_table(n)
    out = set()
    for p in itertools.permutations(range(1, n + 1)):
        bits = 0
        for a in range(n):
            row = table[p[a]]
            for b in range(a + 1, n):
                bits |= row[p[b]]
        out.add(bits)
    return out


def _swo_bits(n: int) -> set[int]:
    # Ordered set partitions: level(i) < level(j)  =>  i r j.
    table = _bit_table(n)
    out = set()
    for levels in itertools.product(range(n), repeat=n):
        used = set(levels)
        if used != set(range(len(used))):
            continue
        bits = 0
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if levels[i - 1] < levels[j - 1]:
                    bits |= table[i][j]
        out.add(bits)
    return out


def semiorder_patterns(n: int) -> list[list[tuple[int, int]]]:
    """Unlabelled semiorders as endpoint interleavings (Catalan many).

    A pattern is a ballot sequence of n left and n right endpoints, the k-th
    right endpoint following the k-th left one; interval k precedes interval m
    when its right end comes before the left end of m.  Returned as lists of
    position pairs (a, b) over 0..n-1.
    """
    patterns = []

    def rec(seq, lefts, rights):
        if rights == n:
            rpos = [p for p, c in enumerate(seq) if c == "R"]
            lpos = [p for p, c in enumerate(seq) if c == "L"]
            patterns.append([(a, b) for a in range(n) for b in range(n) if rpos[a] < lpos[b]])
            return
        if lefts < n:
            rec(seq + "L", lefts + 1, rights)
        if rights < lefts:
            rec(seq + "R", lefts, rights + 1)

    rec("", 0, 0)
    return patterns


def _so_bits(n: int) -> set[int]:
    table = _bit_table(n)
    out = set()
    perms = list(itertools.permutations(range(1, n + 1)))
    for pat in semiorder_patterns(n):
        for p in perms:
            bits = 0
            for a, b in pat:
                bits |= table[p[a]][p[b]]
            out.add(bits)
    return out


def _extend_posets(n: int, interval_only: bool) -> set[int]:
    """Grow labelled posets element by element (each poset on {1..k+1} restricts
    uniquely to one on {1..k}); with ``interval_only`` prune any 2+2."""
    # A poset on {1..k} is a tuple succ[1..k] of element bitmasks.
    level = [()]
    for k in range(0, n):
        x = k + 1
        nxt = []
        for succ in level:
            els = range(1, k + 1)
            sv = (0,) + succ
            pv = [0] * (k + 2)
            for i in els:
                for j in els:
                    if sv[i] >> j & 1:
                        pv[j] |= 1 << i
            ups, downs = [], []
            for mask in range(1 << k):
                m = mask << 1
                up = all(not (m >> i & 1) or not (sv[i] & ~m) for i in els)
                dn = all(not (m >> i & 1) or not (pv[i] & ~m) for i in els)
                if up:
                    ups.append(m)
                if dn:
                    downs.append(m)
            for U in ups:
                allowed = 0
                for d in els:
                    if not (U & ~sv[d]):
                        allowed |= 1 << d
                for D in downs:
                    if D & ~allowed:
                        continue
                    new = [sv[i] | (U if D >> i & 1 else 0) for i in els]
                    for i in els:
                        if D >> i & 1:
                            new[i - 1] |= 1 << x
                    new.append(U)
                    if interval_only:
                        full = (0,) + tuple(new)
                        if _has_2p2(x, _pred_masks(x, list(full))):
                            continue
                    nxt.append(tuple(new))
        level = nxt
    table = _bit_table(n)
    out = set()
    for succ in level:
        bits = 0
        for i in range(1, n + 1):
            s = succ[i - 1]
            for j in range(1, n + 1):
                if s >> j & 1:
                    bits |= table[i][j]
        out.add(bits)
    return out


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, cls: OrderClass) -> tuple[Relation, ...]:
    if cls is OrderClass.LO:
        bits = _lo_bits(n)
    elif cls is OrderClass.SWO:
        bits = _swo_bits(n)
    elif cls is OrderClass.SO:
        bits = _so_bits(n)
    elif cls is OrderClass.IO:
        bits = _extend_posets(n, interval_only=True)
    else:
        bits = _extend_posets(n, interval_only=False)
    return tuple(_sorted_relations(n, bits))


def enumerate_relations(n: int, cls: OrderClass | str) -> list[Relation]:
    """All labelled relations of class ``cls`` on {1..n}, in canonical order.

    Canonical order sorts characteristic vectors lexicographically.
    """
    cls = OrderClass.parse(cls)
    _check_n(n)
    if n > ENUM_LIMITS[cls]:
        raise ValueError(
            f"enumeration of class {cls.value} supports n <= {ENUM_LIMITS[cls]}, got n={n}"
        )
    return list(_enumerate_cached(n, cls))


def brute_force_relations(n: int, cls: OrderClass | str) -> list[Relation]:
    """Filter all 2^(n(n-1)) relations by the class predicate (n <= 4)."""
    if n > 4:
        raise ValueError("brute force is limited to n <= 4")
    pred = PREDICATES[OrderClass.parse(cls)]
    return [r for r in (Relation(n, b) for b in range(1 << num_arcs(n))) if pred(r)]


# ---------------------------------------------------------------------------
# Text and JSON forms

_REL_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*\{(.*)\}\s*$", re.S)
_PAIR_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_relation(text: str) -> Relation:
    """Parse ``n=4; {(1,2),(2,3),(1,3)}``."""
    m = _REL_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse relation {text!r}")
    n = int(m.group(1))
    body = m.group(2)
    pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(body)]
    leftover = _PAIR_RE.sub("", body).replace(",", "").strip()
    if leftover:
        raise ValueError(f"unexpected text in relation body: {leftover!r}")
    return Relation.from_pairs(n, pairs)


def format_relation(r: Relation) -> str:
    return f"n={r.n}; {{{','.join(f'({i},{j})' for i, j in r.pairs())}}}"


def relation_to_json(r: Relation) -> dict:
    return {"n": r.n, "pairs": [list(p) for p in r.pairs()]}


def relation_from_json(obj) -> Relation:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Relation.from_pairs(int(obj["n"]), [tuple(p) for p in obj["pairs"]])
