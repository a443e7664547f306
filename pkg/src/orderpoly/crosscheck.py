"""Exhaustive agreement between theorem classifiers and the vertex oracle.

The universe at n is every sign vector s in {-1,0,1}^{A_n} except zero, paired
with beta in {-1,0,1}.  The oracle side evaluates all vertices at once with
numpy and decides facets by exact affine rank of the tight set; the theorem
side calls the classifiers in :mod:`primaryineq`, which never look at
vertices.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .polytope import _affine_rank_rows, build
from .primaryineq import CLASSIFIERS, PrimaryInequality
from .relations import OrderClass, arcs, num_arcs

CHUNK = 1 << 14


@dataclass
class Disagreement:
    ineq: str
    oracle: tuple[bool, bool]
    theorem: tuple[bool, bool]

    def to_json(self) -> dict:
        return {"ineq": self.ineq, "oracle": list(self.oracle), "theorem": list(self.theorem)}


@dataclass
class CrosscheckReport:
    n: int
    cls: str
    candidates: int = 0
    valid: int = 0
    fdi: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "class": self.cls,
            "candidates": self.candidates,
            "valid": self.valid,
            "fdi": self.fdi,
            "disagreements": [d.to_json() for d in self.disagreements],
        }


def _sign_block(N: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the base-3 table of {-1,0,1}^N (digit 0 -> -1)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, N), dtype=np.int8)
    for col in range(N - 1, -1, -1):
        out[:, col] = idx % 3 - 1
        idx //= 3
    return out


def _run_chunk(args) -> tuple[int, int, int, list]:
    n, cls, start, stop = args
    vs = build(n, cls)
    classify = CLASSIFIERS[OrderClass.parse(cls).value]
    V = vs.matrix.astype(np.int16)
    N = num_arcs(n)
    arc_list = arcs(n)
    S = _sign_block(N, start, stop)
    vals = V @ S.T.astype(np.int16)
    M = vals.max(axis=0)
    ranks: dict[bytes, int] = {}
    cand = valid = fdi = 0
    bad = []
    for col in range(S.shape[0]):
        s = S[col]
        if not s.any():
            continue
        A = [arc_list[k] for k in np.flatnonzero(s == 1)]
        B = [arc_list[k] for k in np.flatnonzero(s == -1)]
        m = int(M[col])
        tight = None
        for beta in (-1, 0, 1):
            cand += 1
            o_valid = m <= beta
            o_fdi = False
            if o_valid and m == beta:
                if tight is None:
                    mask = vals[:, col] == m
                    key = np.packbits(mask).tobytes()
                    if key not in ranks:
                        ranks[key] = _affine_rank_rows(vs.matrix[mask], bound=vs.dim)
                    tight = ranks[key]
                o_fdi = tight == vs.dim - 1
            p = PrimaryInequality(n, A, B, beta)
            v = classify(p)
            valid += o_valid
            fdi += o_fdi
            if (v.valid, v.fdi) != (o_valid, o_fdi):
                bad.append(Disagreement(str(p), (o_valid, o_fdi), (v.valid, v.fdi)))
    return cand, valid, fdi, bad


def crosscheck(n: int, cls: OrderClass | str, workers: int = 1) -> CrosscheckReport:
    """Compare classifier and oracle on every primary inequality at n.

    Only the partial order, interval order and semiorder polytopes have a
    classifier.  Output does not depend on ``workers``.
    """
    cls = OrderClass.parse(cls)
    if cls.value not in CLASSIFIERS:
        raise ValueError(f"no primary classifier for {cls.value}")
    N = num_arcs(n)
    total = 3**N
    jobs = [(n, cls.value, a, min(a + CHUNK, total)) for a in range(0, total, CHUNK)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_run_chunk, jobs))
    else:
        parts = [_run_chunk(j) for j in jobs]
    rep = CrosscheckReport(n, cls.value)
    for c, v, f, bad in parts:
        rep.candidates += c
        rep.valid += v
        rep.fdi += f
        rep.disagreements.extend(bad)
    rep.disagreements.sort(key=lambda d: d.ineq)
    return rep


def primary_facets_by_oracle(n: int, cls: OrderClass | str) -> list[PrimaryInequality]:
    """All primary FDIs at n found by scanning sign vectors against the vertices."""
    vs = build(n, cls)
    V = vs.matrix.astype(np.int16)
    N = num_arcs(n)
    arc_list = arcs(n)
    out = []
    for start in range(0, 3**N, CHUNK):
        S = _sign_block(N, start, min(start + CHUNK, 3**N))
        vals = V @ S.T.astype(np.int16)
        M = vals.max(axis=0)
        for col in np.flatnonzero(M <= 1):
            s = S[col]
            if not s.any():
                continue
            m = int(M[col])
            if m < 0:
                continue
            mask = vals[:, col] == m
            if _affine_rank_rows(vs.matrix[mask], bound=vs.dim) == vs.dim - 1:
                A = [arc_list[k] for k in np.flatnonzero(s == 1)]
                B = [arc_list[k] for k in np.flatnonzero(s == -1)]
                out.append(PrimaryInequality(n, A, B, m))
    return out
