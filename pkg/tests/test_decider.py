import itertools
import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from eirep.category import (connected_components, full_subcategory, hom_biset, opposite,
                            quotient_orbit_collapse)
from eirep.decider import CITATIONS, decide, decide_symmetrized, abelian_pair_finite
from eirep.errors import InputError
from eirep.fixtures import corpus_documents, decider_table, fix_a, fix_c, fix_f, free_pair
from eirep.category import FiniteCategory, free_ei_cover
from eirep.groups import cyclic_group, p_part
from eirep.io import category_from_document
from eirep.verdict import FAIL, FINITE, INFINITE, NOT_APPLICABLE, UNKNOWN

import oracles
from randomdata import random_category

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)
TABLE = decider_table()
CHARS = [0, 2, 3, 5, 7]


# ---------------------------------------------------------------- regression table

@pytest.mark.parametrize("case", TABLE, ids=[c.slug for c in TABLE])
def test_regression_table(case):
    start = time.perf_counter()
    v = decide(case.category(), case.p)
    assert v.outcome == case.expected
    assert time.perf_counter() - start < 10
    if v.outcome == INFINITE:
        assert any(r.status == FAIL for r in v.trace)
    if v.outcome == FINITE:
        assert any(r.terminal and r.status == "pass" for r in v.trace)


@pytest.mark.parametrize("case", TABLE, ids=[c.slug for c in TABLE])
def test_regression_table_symmetrized_and_exhaustive(case):
    C = case.category()
    assert decide_symmetrized(C, case.p).outcome == case.expected
    assert decide(C, case.p, exhaustive=True).outcome == case.expected
    assert decide(C, case.p, extended=True).outcome in (case.expected, INFINITE if case.expected == UNKNOWN else case.expected)


def test_documented_decide_examples():
    assert decide(fix_c(2), 2).outcome == FINITE
    v = decide(free_ei_cover(free_pair(2)), 0)
    assert v.outcome == INFINITE and next(r for r in v.trace if r.status == FAIL).rule == "N5"
    v = decide(fix_a(), 0)
    assert v.outcome == FINITE and any(r.rule == "S2" for r in v.trace)
    assert v.field_used == "GF(7)"


def test_every_trace_entry_is_cited():
    for case in TABLE:
        for r in decide(case.category(), case.p, exhaustive=True).trace:
            assert r.citation == CITATIONS[r.rule]


def test_unknown_lists_missing_classifications():
    v = decide(fix_f(), 0)
    assert v.outcome == UNKNOWN
    assert any(r.status == NOT_APPLICABLE and r.rule.startswith("S") for r in v.trace)


def test_rejects_non_ei_and_bad_characteristic():
    monoid = FiniteCategory.from_triples(["x"], [("1", "x", "x"), ("e", "x", "x")], {"x": "1"}, [("e", "e", "e")])
    with pytest.raises(InputError):
        decide(monoid, 0)
    with pytest.raises(InputError):
        decide(fix_a(), 4)


def test_non_skeletal_input_is_normalized():
    C = FiniteCategory.from_triples(
        ["x", "y"], [("1x", "x", "x"), ("1y", "y", "y"), ("f", "x", "y"), ("g", "y", "x")],
        {"x": "1x", "y": "1y"}, [("f", "g", "1x"), ("g", "f", "1y")])
    v = decide(C, 0)
    assert v.trace[0].rule == "normalize" and v.outcome == FINITE


def test_disconnected_input_is_split():
    from eirep.category import poset_category
    C = poset_category(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    v = decide(C, 0)
    assert v.outcome == FINITE and v.trace[0].rule == "normalize"


@pytest.mark.parametrize("s,t,n,finite", [
    (1, 1, 1, True), (1, 1, 3, True), (1, 1, 4, False),
    (1, 5, 2, True), (5, 1, 2, True), (1, 5, 3, False),
    (5, 5, 1, True), (5, 7, 2, False),
])
def test_abelian_index_bound(s, t, n, finite):
    assert abelian_pair_finite(s, t, n) == finite


def test_abelian_examples_from_documentation():
    from eirep.fixtures import klein, transitive_target
    assert decide(free_ei_cover(transitive_target(klein())), 5).outcome == INFINITE
    assert decide(free_ei_cover(transitive_target(cyclic_group(2))), 5).outcome == FINITE


def test_first_family_chain_both_orientations():
    from eirep.fixtures import fix_d
    C = fix_d("chain", 1, 1, 1)
    assert decide(C, 5).outcome == decide(opposite(C), 5).outcome == FINITE


# ---------------------------------------------------------------- witness revalidation

def _pair(C, label):
    x, y = label.split("->")
    return x, y


def revalidate(C, r, p):
    """Independently recheck the fact a failing rule reports."""
    w = r.witness
    if r.rule == "N1":
        G = C.aut_group(w["object"]).group
        # a cyclic Sylow p-subgroup exists iff some element has order equal to the p-part of |G|
        assert not any(p_part(g.order(), p) == p_part(G.order, p) for g in G.elements)
    elif r.rule == "N2":
        x, y = _pair(C, w["pair"])
        a, b = (C.index_of(l) for l in w["orbit_representatives"])
        orbit = {C.compose(h, C.compose(a, g)) for g in C.hom(x, x) for h in C.hom(y, y)}
        assert b not in orbit
    elif r.rule == "N3":
        x, y, z = w["objects"]
        target = C.index_of(w["not_a_composite"])
        assert all(C.compose(g, f) != target for f in C.hom(x, y) for g in C.hom(y, z))
    elif r.rule == "N5":
        x, y = _pair(C, w["pair"])
        B = hom_biset(C, x, y)
        left = {B.left(h, 0) for h in B.left_group.elements}
        right = {B.right(0, g) for g in B.right_group.elements}
        assert len(left) < B.size and len(right) < B.size
    elif r.rule == "N6":
        assert all(o > 1 for o in w["p_part_orders"])
    elif r.rule == "N9":
        x, y = _pair(C, w["pair"])
        B = hom_biset(C, x, y)
        _, G1, _, H1 = oracles.stabilizers(B, 0)
        K, K1 = (B.left_group, H1) if w["side"] == "H" else (B.right_group, G1)
        from eirep.groups import subgroup_generated
        S = subgroup_generated(K, list(K1))
        assert oracles.double_cosets(K, S, S) == w["double_cosets"] > 3
    elif r.rule == "R":
        assert decide(full_subcategory(C, w["objects"]), p).outcome == INFINITE


def test_table_witnesses_revalidate():
    for case in TABLE:
        C = case.category()
        for r in decide(C, case.p, exhaustive=True).trace:
            if r.status == FAIL:
                revalidate(C, r, case.p)


# ---------------------------------------------------------------- properties

def _random(seed):
    rng = random.Random(seed)
    return random_category(rng, n_objects=rng.randint(2, 3)), rng.choice(CHARS)


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_decide_agrees_with_symmetrized(seed):
    C, p = _random(seed)
    v = decide(C, p, seed=seed)
    s = decide_symmetrized(C, p, seed=seed)
    if v.outcome != UNKNOWN:
        assert s.outcome == v.outcome
    assert decide(opposite(C), p).outcome in (v.outcome, UNKNOWN) or v.outcome == UNKNOWN


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_exhaustive_mode_finds_no_contradiction(seed):
    C, p = _random(seed)
    # every rule runs; ConsistencyError is raised on any Finite/Infinite disagreement
    full = decide(C, p, exhaustive=True)
    assert full.outcome == decide(C, p).outcome


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_infinite_witnesses_revalidate(seed):
    C, p = _random(seed)
    for r in decide(C, p, exhaustive=True).trace:
        if r.status == FAIL:
            assert r.witness is not None
            revalidate(C, r, p)


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_monotone_under_full_subcategories(seed):
    rng = random.Random(seed)
    C = random_category(rng, n_objects=3)
    p = rng.choice(CHARS)
    v = decide(C, p)
    for k in (1, 2):
        for objs in itertools.combinations(C.objects, k):
            D = full_subcategory(C, objs)
            if len(connected_components(D)) == 1 and decide(D, p).outcome == INFINITE:
                assert v.outcome == INFINITE


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_quotient_infinite_forces_infinite(seed):
    rng = random.Random(seed)
    C = random_category(rng, n_objects=2)
    p = rng.choice(CHARS)
    q = decide(quotient_orbit_collapse(C), p).outcome
    v = decide(C, p).outcome
    if q == INFINITE:
        assert v == INFINITE
    if v == FINITE:
        assert q != INFINITE


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_decide_is_deterministic(seed):
    C, p = _random(seed)
    a = decide(C, p, seed=seed, extended=True).to_dict()
    b = decide(C, p, seed=seed, extended=True).to_dict()
    assert a == b


def test_corpus_has_no_contradiction():
    for name, doc in sorted(corpus_documents().items()):
        if doc.get("schema") != "eirep/category@1":
            continue
        C = category_from_document(doc)
        p = doc.get("meta", {}).get("char", 0)
        v = decide(C, p, exhaustive=True)
        s = decide_symmetrized(C, p)
        assert {v.outcome, s.outcome} - {UNKNOWN} in ({FINITE}, {INFINITE}, set()), name
        expected = doc.get("meta", {}).get("expected")
        if expected is not None:
            assert v.outcome == expected, name
