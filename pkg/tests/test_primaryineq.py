import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orderpoly import crosscheck as xc
from orderpoly import polytope as pt
from orderpoly import primaryineq as pi
from orderpoly.primaryineq import PrimaryInequality as P
from orderpoly.relations import arcs, enumerate_relations

i, j, k, l = 1, 2, 3, 4


def degree_oracle(A):
    outs = [a for a, _ in A]
    ins = [b for _, b in A]
    return len(set(outs)) == len(outs) and len(set(ins)) == len(ins)


def all_arc_sets(n):
    arc_list = arcs(n)
    for mask in range(1 << len(arc_list)):
        yield [a for t, a in enumerate(arc_list) if mask >> t & 1]


# --- basic type -------------------------------------------------------------

def test_primary_validation():
    with pytest.raises(ValueError):
        P(3, [(1, 2)], [(1, 2)], 1)
    with pytest.raises(ValueError):
        P(3, [], [], 1)
    with pytest.raises(ValueError):
        P(3, [(1, 4)], [], 1)
    with pytest.raises(ValueError):
        P(3, [(1, 2)], [], 2)


def test_primary_round_trips():
    p = pi.exceptional(6)[0]
    assert P.from_json(p.to_json()) == p
    assert P.from_general(p.to_general()) == p
    assert pi.parse_primary(str(p), 6) == p
    with pytest.raises(ValueError):
        P.from_general(pt.GeneralInequality.from_coeffs(3, {(1, 2): 2}, 1))


# --- conditions -------------------------------------------------------------

def test_condition_examples():
    assert not pi.cond_c1([(i, k), (i, l)])
    assert not pi.cond_c2([(i, j), (k, l)], [])
    A = [(i, j), (j, k), (k, l)]
    B = [(i, l), (l, k), (k, j), (j, i)]
    assert not pi.cond_c5(A, B, 4)
    assert pi.cond_c5(A, B, 4).witness == (i, j, k, l)
    assert not pi.cond_c0([(1, 2), (3, 4)])
    assert pi.cond_c0([(1, 2), (2, 3), (3, 1)])
    assert not pi.cond_c3([(1, 2), (2, 3)], [])


TABLE4 = {
    "C1": ([(i, k), (i, l)], []),
    "C2": ([(i, j), (k, l)], []),
    "C4": ([(i, j), (j, k)], []),
    "C5": ([(i, j), (j, k), (k, l)], [(i, l), (l, k), (k, j), (j, i)]),
}


@pytest.mark.parametrize("name", list(TABLE4))
def test_condition_independence(name):
    A, B = TABLE4[name]
    for n in (4, 5):
        res = {
            "C1": bool(pi.cond_c1(A)),
            "C2": bool(pi.cond_c2(A, B)),
            "C4": bool(pi.cond_c4(A, B, n)),
            "C5": bool(pi.cond_c5(A, B, n)),
        }
        assert [c for c, ok in res.items() if not ok] == [name]


def test_failed_conditions_have_witnesses():
    for name, (A, B) in TABLE4.items():
        v = pi.classify_pso_fdi(P(4, A, B, 1))
        assert not v.valid and v.failed_condition == name and v.witness


def test_pc_graph_examples():
    assert pi.is_pc_graph([(1, 2), (2, 3), (3, 4), (4, 1)], 4)
    assert not pi.is_pc_graph([(1, 2), (1, 3)], 3)
    assert pi.is_pc_graph([(1, 2), (2, 3), (4, 5)], 5)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c1_is_pc_graph_exhaustive(n):
    for A in all_arc_sets(n):
        assert bool(pi.cond_c1(A)) == pi.is_pc_graph(A, n) == degree_oracle(A)


@pytest.mark.slow
def test_c1_is_pc_graph_exhaustive_n5():
    for A in all_arc_sets(5):
        assert bool(pi.cond_c1(A)) == pi.is_pc_graph(A, 5) == degree_oracle(A)


@given(st.integers(6, 7).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(arcs(n)), max_size=12))))
def test_c1_is_pc_graph_random(arg):
    n, A = arg
    assert bool(pi.cond_c1(A)) == pi.is_pc_graph(A, n) == degree_oracle(A)


# --- forced completions and minimality --------------------------------------

def test_forced_examples():
    assert pi.forced_b_c2c3([(1, 2), (3, 4)], 4) == {(1, 4), (3, 2)}
    assert pi.forced_b_c2c3([(1, 2), (2, 3)], 3) == {(1, 3)}
    assert pi.forced_b_c2c3([(1, 2)], 2) == frozenset()
    assert pi.forced_b_c2([(1, 2), (3, 4)], 4) == pi.forced_b_c2c3([(1, 2), (3, 4)], 4)
    assert pi.forced_b_c2([(1, 2), (2, 3)], 3) == frozenset()
    cycle = [(1, 2), (2, 3), (3, 4), (4, 1)]
    assert pi.forced_b_c2(cycle, 4) == {(1, 4), (2, 1), (3, 2), (4, 3)}
    with pytest.raises(ValueError):
        pi.forced_b_c2([(1, 2), (1, 3)], 3)
    with pytest.raises(ValueError):
        pi.forced_b_c2c3([(1, 2), (1, 3)], 3)


def test_a_minimal_examples():
    assert pi.is_a_minimal([(1, 2), (2, 3)], [(1, 3)], 3)
    A = [(1, 2), (3, 4)]
    m = pi.is_a_minimal(A, [(1, 4), (3, 2), (2, 1)], 4)
    assert not m and m.witness == ((2, 1),)
    assert pi.is_a_minimal(pi.A6, pi.B6, 6)


# --- exceptional pattern ----------------------------------------------------

def brute_exceptional(A, B, n):
    A, B = frozenset(A), frozenset(B)
    for perm in itertools.permutations(range(1, n + 1)):
        f = lambda S: frozenset((perm[a - 1], perm[b - 1]) for a, b in S)
        if f(A) == pi.A6 and f(B) == pi.B6:
            return True
    return False


def test_exceptional_examples():
    assert len(pi.A6) == 4 and len(pi.B6) == 13
    assert pi.is_exceptional(pi.A6, pi.B6, 6)
    p = pi.exceptional(6)[0].relabel((3, 2, 1, 4, 6, 5))
    assert pi.is_exceptional(p.A, p.B, 6)
    f = pi.fence(2, 4)[0]
    assert not pi.is_exceptional(f.A, f.B, 4)
    assert pi.is_exceptional(pi.A6, pi.B6, 7)


def test_exceptional_relabelling_is_certificate():
    rng = random.Random(11)
    base = pi.exceptional(6)[0]
    for _ in range(10):
        perm = list(range(1, 7))
        rng.shuffle(perm)
        p = base.relabel(perm)
        sigma = pi.exceptional_relabelling(p.A, p.B, 6)
        assert sigma is not None
        assert base.relabel(sigma) == p


def test_exceptional_matcher_against_permutation_search():
    rng = random.Random(5)
    base = pi.exceptional(6)[0]
    all_arcs = arcs(6)
    for _ in range(40):
        perm = list(range(1, 7))
        rng.shuffle(perm)
        p = base.relabel(perm)
        A, B = set(p.A), set(p.B)
        # perturb half of the samples by moving or toggling one arc
        if rng.random() < 0.5:
            a = rng.choice(all_arcs)
            if a in A:
                A.discard(a)
            elif a in B:
                B.discard(a)
                A.add(a)
            else:
                B.add(a)
        assert pi.is_exceptional(A, B, 6) == brute_exceptional(A, B, 6)


# --- classifiers ------------------------------------------------------------

def test_ppo_examples():
    v = pi.classify_ppo(P(3, [(1, 2), (2, 3)], [(1, 3)], 1))
    assert v.valid and v.fdi
    v = pi.classify_ppo(P(3, [(1, 2), (2, 3)], [(1, 3), (3, 1)], 1))
    assert v.valid and not v.fdi
    for B in ([], [(1, 4), (3, 2)], [(2, 1)]):
        v = pi.classify_ppo(P(4, [(1, 2), (3, 4)], B, 1))
        assert not v.valid and v.failed_condition == "C0"


def test_pio_examples():
    assert pi.classify_pio(pi.fence(2, 4)[0]).fdi
    assert pi.classify_pio(P(3, [(1, 2), (2, 3)], [(1, 3)], 1)).fdi
    v = pi.classify_pio(P(3, [(1, 2), (2, 3)], [(1, 3), (2, 1)], 1))
    assert v.valid and not v.fdi


def test_pso_examples():
    assert pi.classify_pso_valid(pi.axiomatic(4)[3])
    assert not pi.classify_pso_valid(P(3, [(1, 2), (2, 3)], [], 1))
    assert pi.classify_pso_valid(pi.exceptional(6)[0])
    v = pi.classify_pso_fdi(pi.exceptional(6)[0])
    assert v.valid and not v.fdi and v.failed_condition == "Exceptional"
    assert pi.classify_pso_fdi(pi.fence(2, 4)[0]).fdi
    assert pi.classify_pso_fdi(pi.fence(3, 6)[0]).fdi
    v = pi.classify_pso_fdi(P(3, [(1, 2)], [], 1))
    assert not v.fdi and v.failed_condition == "ASize"


def test_verdicts_fdi_implies_valid():
    for p in pi.axiomatic(4) + pi.five_basic(4) + pi.fence(2, 4):
        for classify in pi.CLASSIFIERS.values():
            v = classify(p)
            assert v.valid or not v.fdi
            if not v.fdi:
                assert v.failed_condition is not None


@pytest.mark.parametrize("cls", ["po", "io", "so"])
def test_crosscheck_n3(cls):
    rep = xc.crosscheck(3, cls)
    assert rep.ok and rep.candidates == 3 * (3**6 - 1)
    assert rep.fdi == 17


def test_crosscheck_workers_same_result():
    a = xc.crosscheck(3, "so", workers=1).to_json()
    b = xc.crosscheck(3, "so", workers=2).to_json()
    assert a == b


def _universe(n):
    arc_list = arcs(n)
    for signs in itertools.product((-1, 0, 1), repeat=len(arc_list)):
        if any(signs):
            A = [a for a, s in zip(arc_list, signs) if s == 1]
            B = [a for a, s in zip(arc_list, signs) if s == -1]
            yield A, B


def test_pso_validity_against_oracle_n3():
    vs = pt.build(3, "so")
    for A, B in _universe(3):
        for beta in (-1, 0, 1):
            p = P(3, A, B, beta)
            assert pi.classify_pso_valid(p) == pt.check_face(vs, p.to_general()).valid


def test_beta_rule_against_oracle():
    # the rule needs single-arc relations among the vertices
    for n in (2, 3):
        vss = [pt.build(n, c) for c in ("po", "io", "so")]
        for A, B in _universe(n):
            for beta in (-1, 0, 1):
                q = P(n, A, B, beta).to_general()
                for vs in vss:
                    if pt.check_face(vs, q).valid:
                        assert beta == 1 if A else beta >= 0


@settings(max_examples=150)
@given(st.data())
def test_pso_validity_against_oracle_n4(data):
    arc_list = arcs(4)
    signs = data.draw(st.lists(st.sampled_from((-1, 0, 1)), min_size=12, max_size=12).filter(any))
    A = [a for a, s in zip(arc_list, signs) if s == 1]
    B = [a for a, s in zip(arc_list, signs) if s == -1]
    p = P(4, A, B, 1)
    assert pi.classify_pso_valid(p) == pt.check_face(pt.build(4, "so"), p.to_general()).valid


def pc_graph_count(n):
    return sum(1 for A in all_arc_sets(n) if A and degree_oracle(A))


def test_pio_bijection_n3():
    fdis = xc.primary_facets_by_oracle(3, "io")
    assert len(fdis) == pc_graph_count(3) == 17


@pytest.mark.slow
def test_pio_bijection_n4():
    fdis = xc.primary_facets_by_oracle(4, "io")
    assert len(fdis) == pc_graph_count(4) == 107
    # each PC-graph A with |A| >= 2 carries exactly one facet, and its B is forced
    by_a = {}
    for p in fdis:
        if p.A:
            by_a.setdefault(p.A, []).append(p)
    for A, ps in by_a.items():
        assert len(ps) == 1
        if len(A) >= 2:
            assert ps[0].B == pi.forced_b_c2c3(A)


# --- shortcut ---------------------------------------------------------------

def test_shortcut_examples():
    assert pi.shortcut_forced_pso([(1, 2), (2, 1), (3, 4)], 4) is True
    assert pi.shortcut_forced_pso([(1, 2), (3, 4), (5, 6)], 6) is True
    path5 = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]
    assert pi.shortcut_forced_pso(path5, 6) is None
    assert pi.shortcut_forced_pso([(1, 2)], 2) is None


def pc_graphs(n):
    for A in all_arc_sets(n):
        if len(A) >= 2 and degree_oracle(A):
            yield A


@pytest.mark.parametrize("n", [4, 5])
def test_shortcut_agrees_with_classifier(n):
    answered = 0
    for A in pc_graphs(n):
        s = pi.shortcut_forced_pso(A, n)
        if s is None:
            continue
        answered += 1
        v = pi.classify_pso_fdi(P(n, A, pi.forced_b_c2(A), 1))
        assert v.fdi == s
    assert answered > 0


def test_shortcut_against_oracle_sample():
    rng = random.Random(2)
    graphs = [A for A in pc_graphs(5) if pi.shortcut_forced_pso(A, 5)]
    vs = pt.build(5, "so")
    for A in rng.sample(graphs, 25):
        assert pt.check_face(vs, P(5, A, pi.forced_b_c2(A), 1).to_general()).is_facet


# --- semiorders violating a C1, C2 inequality --------------------------------

@settings(max_examples=60)
@given(st.data())
def test_violators_shape(data):
    n = data.draw(st.integers(4, 5))
    perm = data.draw(st.permutations(range(1, n + 1)))
    # a random PC-graph: paths and cycles on a shuffled vertex order
    cuts = data.draw(st.lists(st.booleans(), min_size=n, max_size=n))
    A = set()
    for t in range(n - 1):
        if not cuts[t]:
            A.add((perm[t], perm[t + 1]))
    if not A:
        A.add((perm[0], perm[1]))
    B = set(pi.forced_b_c2(A))
    rest = [a for a in arcs(n) if a not in A and a not in B]
    B |= set(data.draw(st.lists(st.sampled_from(rest), max_size=6))) if rest else set()
    vs = pt.build(n, "so")
    q = P(n, A, B, 1).to_general()
    a, _ = q.integer_form()
    vals = vs.matrix.astype(np.int64) @ np.asarray(a)
    for idx in np.flatnonzero(vals >= 1):
        S = set(vs.relations[idx].pairs())
        SA, SB = S & A, S & B
        assert 1 <= len(SA) <= 4
        if vals[idx] > 1:
            tails = {x for x, _ in SA}
            heads = {y for _, y in SA}
            start = (tails - heads).pop()
            path = [start]
            nxt = dict(SA)
            while path[-1] in nxt:
                path.append(nxt[path[-1]])
            assert len(path) == len(SA) + 1
            if len(SA) == 2:
                assert not SB
            else:
                assert len(SA) == 3 and SB == {(path[0], path[3])}


# --- generators --------------------------------------------------------------

def test_generators():
    assert pi.fence(2, 4)[0] == pi.basic_inequality(5, 4)
    assert pi.fence(2, 4)[0].B == {(1, 4), (3, 2)}
    e = pi.exceptional(6)[0]
    assert len(e.A) == 4 and len(e.B) == 13
    assert len(pi.axiomatic(4)) == 4
    assert len(pi.five_basic(4)) == 5
    with pytest.raises(ValueError):
        pi.fence(3, 5)
    with pytest.raises(ValueError):
        pi.exceptional(5)
    with pytest.raises(ValueError):
        pi.axiomatic(3)
    assert pi.basic_inequality(3, 3).A == {(1, 2), (2, 3)}


def test_relabelings():
    rel = pi.all_relabelings(pi.basic_inequality(2, 3))
    assert len(rel) == 3
    assert len(pi.fence(2, 4, relabelings=True)) == 12
    assert len(pi.exceptional(6, relabelings=True)) == 720 // 4


def test_axiomatic_are_pso_facets():
    vs = pt.build(4, "so")
    for p in pi.axiomatic(4):
        assert pi.classify_pso_fdi(p).fdi
        assert pt.check_face(vs, p.to_general()).is_facet


# --- strict weak order catalog ----------------------------------------------

def test_pswo_catalog_examples():
    cat = pi.pswo_catalog(4)
    assert list(cat) == [f"F{t}" for t in range(1, 10)]
    assert cat["F1"] == P(4, [], [(1, 2)], 0)
    assert cat["F2"] == P(4, [(1, 2), (2, 1)], [], 1)


def test_pswo_catalog_flags_two_entries():
    vs = pt.build(4, "swo")
    verdict = {name: pt.check_face(vs, p.to_general()) for name, p in pi.pswo_catalog(4).items()}
    assert sorted(n for n, r in verdict.items() if not r.is_facet) == ["F4", "F5"]
    assert not verdict["F4"].valid and not verdict["F5"].valid


def test_pswo_catalog_corrected():
    fs = pt.facets_of(4, "swo")
    cat = pi.pswo_catalog(4, corrected=True)
    for p in cat.values():
        assert pt.check_face(fs.vs, p.to_general()).is_facet
    reps = {pt.orbit_representative(p.to_general()) for p in cat.values()}
    assert len(reps) == 9
    assert reps == {pt.orbit_representative(q) for q in fs.facets}


def test_pswo_catalog_lifts():
    vs = pt.build(5, "swo")
    for p in pi.pswo_catalog(5, corrected=True).values():
        assert pt.check_face(vs, p.to_general()).valid


# --- linear ordering polytope -------------------------------------------------

def test_plo_equalities():
    eqs = pi.plo_equalities(4)
    assert len(eqs) == 6
    vs = pt.build(4, "lo")
    for e in eqs:
        assert all(int(np.dot(v, e.coeffs)) == e.rhs for v in vs.matrix)


@pytest.mark.parametrize("n,count", [(3, 8), (4, 20), (5, 40)])
def test_plo_trivial_transitive(n, count):
    fs = pt.facets_of(n, "lo")
    ineqs = pi.plo_trivial_transitive(n)
    eqs = pi.plo_equalities(n)
    forms = {pt.normal_form(p.to_general(), fs.equalities) for p in ineqs}
    assert len(forms) == count
    assert forms == {pt.normal_form(q, fs.equalities) for q in fs.facets}
    for p in ineqs:
        assert pt.check_face(fs.vs, p.to_general()).is_facet
    assert len(eqs) == n * (n - 1) // 2


def test_max_over_linear_orders_matches_enumeration():
    rng = random.Random(4)
    for n in (3, 4, 5):
        rels = enumerate_relations(n, "lo")
        for _ in range(10):
            coeffs = {a: rng.randint(-3, 3) for a in arcs(n)}
            if not any(coeffs.values()):
                continue
            q = pt.GeneralInequality.from_coeffs(n, coeffs, 0)
            best = max(sum(v for a, v in coeffs.items() if a in r) for r in rels)
            assert pi.max_over_linear_orders(q) == best


def test_mobius():
    q = pi.mobius_inequality()
    assert len(q.coeffs) == 21
    assert pi.max_over_linear_orders(q) == pi.MOBIUS_RHS == 17
    assert len({frozenset(a) for a in pi.MOBIUS_ARCS}) == 21


def test_mobius_primary_conversions():
    pairs = list(pi.MOBIUS_ARCS)
    p = pi.plo_mobius_primary(pairs[:17])
    assert p.beta == 0 and len(p.A) == 4 and len(p.B) == 17
    assert pi.plo_mobius_primary(pairs[:16]).beta == 1
    assert pi.plo_mobius_primary(pairs[:18]).beta == -1
    # the conversion is the same inequality on the affine hull
    eqs = pi.plo_equalities(pi.MOBIUS_N)
    assert pt.reduce_modulo(p.to_general(), eqs).key() == pt.reduce_modulo(pi.mobius_inequality(), eqs).key()
    with pytest.raises(ValueError):
        pi.plo_mobius_primary(pairs[:19])
    with pytest.raises(ValueError):
        pi.plo_mobius_primary(pairs[:16] + [pairs[0][::-1]])
    off = pi.plo_mobius_primary(pairs[:16] + [(1, 3)])
    assert (1, 3) in off.B and (3, 1) in off.B and off.beta == 0


# --- text form ----------------------------------------------------------------

def test_dsl_parse():
    q = pi.parse_inequality("x(1,2)+x(2,3)-x(1,3)<=1")
    assert q.n == 3 and q.coeffs == {(1, 2): 1, (2, 3): 1, (1, 3): -1} and q.rhs == 1
    q = pi.parse_inequality(" -x(3,1) + 2*x(1,2) - 1/2 x(2,1) <= 3/2", 4)
    assert q.n == 4 and q.coeffs[(1, 2)] == 2 and q.coeffs[(2, 1)] == Fraction(-1, 2)
    assert pi.parse_inequality(str(q), 4) == q


@pytest.mark.parametrize("text,col", [
    ("x(1,2)+x(1,2)<=1", 7),
    ("x(1,2) x(2,3)<=1", 8),
    ("x(1,2)+y(2,3)<=1", 7),
    ("x(2,2)<=1", 3),
    ("<=1", 1),
])
def test_dsl_errors(text, col):
    with pytest.raises(pi.DSLError) as e:
        pi.parse_inequality(text)
    assert e.value.col == col


def test_dsl_range_and_primary():
    with pytest.raises(pi.DSLError):
        pi.parse_inequality("x(1,5)<=1", 4)
    with pytest.raises(pi.DSLError):
        pi.parse_primary("2*x(1,2)<=1")
    assert pi.parse_primary("x(1,2)-x(2,1)<=0") == P(2, [(1, 2)], [(2, 1)], 0)


def test_load_inequality_forms():
    a = pi.load_inequality("x(1,2)<=1", 3)
    b = pi.load_inequality('{"n": 3, "A": [[1, 2]], "B": [], "beta": 1}')
    c = pi.load_inequality('{"n": 3, "coeffs": {"1,2": 1}, "rhs": 1}')
    assert a == b == c
