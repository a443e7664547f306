"""Double description over the integers for full-dimensional 0/1 polytopes.

The facets of conv(P) are the extreme rays of the cone
{y : y . (1, p) >= 0 for all p in P}; a ray y = (b, -a) reads a . x <= b.
Constraints are inserted one point at a time and adjacency of rays is
decided by the combinatorial test on their sets of tight points.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

from .exactlin import RankAccumulator, primitive


def _inverse_columns(rows: list[list[int]]) -> list[list[int]]:
    """Columns of rows^{-1}, each scaled to a primitive integer vector."""
    k = len(rows)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(rows)]
    for c in range(k):
        piv = next(i for i in range(c, k) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(k):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    cols = []
    for j in range(k):
        col = [m[i][k + j] for i in range(k)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append(primitive([int(x * den) for x in col]))
    return cols


def _words(mask: int, nwords: int) -> np.ndarray:
    return np.array([(mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF for w in range(nwords)], dtype=np.uint64)


def facets_full_dimensional(points: Sequence[Sequence[int]]) -> list[tuple[list[int], int, int]]:
    """Facets ``(a, b, incidence)`` of the full-dimensional polytope conv(points).

    ``a . x <= b`` with ``a`` primitive and ``incidence`` a bitmask over the
    point indices tight on the facet.  Points are inserted by increasing
    1-count.
    """
    pts = [list(map(int, p)) for p in points]
    m = len(pts)
    d = len(pts[0])
    H = [[1] + p for p in pts]
    order = sorted(range(m), key=lambda i: (sum(pts[i]), i))

    acc = RankAccumulator(d + 1)
    init = []
    for i in order:
        if acc.add(H[i]):
            init.append(i)
            if acc.full:
                break
    if len(init) != d + 1:
        raise ValueError("points are not full-dimensional")

    cols = _inverse_columns([H[i] for i in init])
    all_init = 0
    for i in init:
        all_init |= 1 << i
    vecs = cols
    zs = [all_init & ~(1 << init[k]) for k in range(d + 1)]

    init_set = set(init)
    nwords = (m + 63) // 64
    for i in order:
        if i in init_set:
            continue
        h = H[i]
        bit = 1 << i
        s = [sum(a * b for a, b in zip(v, h)) for v in vecs]
        pos = [k for k, x in enumerate(s) if x > 0]
        neg = [k for k, x in enumerate(s) if x < 0]
        if not neg:
            for k, x in enumerate(s):
                if x == 0:
                    zs[k] |= bit
            continue
        zmat = np.array([_words(z, nwords) for z in zs], dtype=np.uint64)
        new_vecs, new_zs = [], []
        for p in pos:
            zp = zs[p]
            sp = s[p]
            vp = vecs[p]
            for q in neg:
                c = zp & zs[q]
                if c.bit_count() < d - 1:
                    continue
                cw = _words(c, nwords)
                if np.count_nonzero(np.all((zmat & cw) == cw, axis=1)) > 2:
                    continue
                sq = -s[q]
                vq = vecs[q]
                new_vecs.append(primitive([sp * b + sq * a for a, b in zip(vp, vq)]))
                new_zs.append(c | bit)
        keep_vecs, keep_zs = [], []
        for k, x in enumerate(s):
            if x > 0:
                keep_vecs.append(vecs[k])
                keep_zs.append(zs[k])
            elif x == 0:
                keep_vecs.append(vecs[k])
                keep_zs.append(zs[k] | bit)
        vecs = keep_vecs + new_vecs
        zs = keep_zs + new_zs

    out = []
    for v, z in zip(vecs, zs):
        a = [-x for x in v[1:]]
        out.append((a, v[0], z))
    return out
