import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from eirep.category import Quiver, free_category, hom_biset, underlying_quiver_and_poset
from eirep.errors import PreconditionError
from eirep.fields import GF
from eirep.fixtures import fix_a, fix_c, fix_e
from eirep.groups import Biset, cyclic_group
from eirep.category import two_object_category
from eirep.quiver import decide_free_invertible, default_field, dynkin_classify, ordinary_quiver
from eirep.verdict import FAIL, PASS

import oracles
from randomdata import random_category

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)


def path(n):
    return Quiver(tuple(range(n)), tuple((i, i + 1) for i in range(n - 1)))


def star(*legs):
    """Tree with a centre 0 and legs of the given lengths."""
    vs, arrows, nxt = [0], [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            vs.append(nxt)
            arrows.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Quiver(tuple(vs), tuple(arrows))


def kinds(Q):
    return dynkin_classify(Q).kinds


# ---------------------------------------------------------------- FIX-A

def test_fix_a_ordinary_quiver_matches_figure():
    C = fix_a()
    F = default_field(C)
    assert F.p == 7
    Q = ordinary_quiver(C, F)
    assert len(Q.vertices) == 5
    assert sorted(v.dim for v in Q.vertices if v.obj == "x") == [1, 1]
    assert sorted(v.dim for v in Q.vertices if v.obj == "y") == [1, 1, 2]
    kx, sx = Q.vertex_index("x", 0), Q.vertex_index("x", 1)
    ky = Q.vertex_index("y", 0)
    eps = next(i for i, v in enumerate(Q.vertices) if v.obj == "y" and v.dim == 1 and v.index != 0)
    v2 = next(i for i, v in enumerate(Q.vertices) if v.obj == "y" and v.dim == 2)
    assert Q.arrows == Counter({(kx, ky): 1, (kx, v2): 1, (sx, v2): 1, (sx, eps): 1})
    assert kinds(Q) == ["A5"]


def test_trivial_groups_reproduce_underlying_quiver():
    C = free_category(["x", "y"], [("x", "y")])
    Q = ordinary_quiver(C)
    assert len(Q.vertices) == 2 and Q.arrows == Counter({(0, 1): 1})


def test_c2_singleton_over_f3():
    C2 = cyclic_group(2)
    C = two_object_category(C2, C2, Biset(1, C2, C2, [[0]], [[0]]))
    Q = ordinary_quiver(C, GF(3))
    assert len(Q.vertices) == 4
    assert Q.arrows == Counter({(Q.vertex_index("x", 0), Q.vertex_index("y", 0)): 1})


def test_noninvertible_order_rejected():
    with pytest.raises(PreconditionError):
        ordinary_quiver(fix_c(2), GF(2))


# ---------------------------------------------------------------- Dynkin classification

def test_dynkin_examples():
    assert kinds(path(5)) == ["A5"]
    two = Quiver(("a", "b"), (("a", "b"), ("a", "b")))
    rep = dynkin_classify(two)
    assert not rep.all_dynkin and rep.first_violation().witness is not None
    assert kinds(star(1, 1, 1)) == ["D4"]


@pytest.mark.parametrize("legs,kind", [
    ((1, 1, 3), "D6"), ((1, 2, 2), "E6"), ((1, 2, 3), "E7"), ((1, 2, 4), "E8"),
    ((2, 2, 2), "not-Dynkin"), ((1, 3, 3), "not-Dynkin"), ((1, 2, 5), "not-Dynkin"),
    ((1, 1, 1, 1), "not-Dynkin"),
])
def test_star_classification(legs, kind):
    assert kinds(star(*legs)) == [kind]


def test_cycle_is_not_dynkin():
    tri = Quiver((0, 1, 2), ((0, 1), (1, 2), (0, 2)))
    assert kinds(tri) == ["not-Dynkin"]


def test_disjoint_union_reports_each_component():
    Q = Quiver((0, 1, 2, 3, 4), ((0, 1), (2, 3), (3, 4)))
    assert sorted(kinds(Q)) == ["A2", "A3"]
    assert sorted(kinds(Quiver((0,), ()))) == ["A1"]


def test_d_type_with_long_tail_and_two_short_legs():
    assert kinds(star(1, 1, 5)) == ["D8"]


def test_two_branch_points_not_dynkin():
    # D~5: two vertices of degree 3
    Q = Quiver(tuple(range(6)), ((0, 1), (0, 2), (0, 3), (3, 4), (3, 5)))
    assert kinds(Q) == ["not-Dynkin"]


# ---------------------------------------------------------------- free invertible decision

def test_decide_free_invertible_examples():
    assert decide_free_invertible(fix_a()).status == PASS
    assert decide_free_invertible(fix_e()).status == FAIL
    chain = free_category(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
    r = decide_free_invertible(chain)
    assert r.status == PASS and r.witness["types"] == ["A4"]


# ---------------------------------------------------------------- properties

def _invertible_category(rng):
    return random_category(rng, n_objects=rng.randint(2, 3), max_order=6, max_size=12)


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_ordinary_quiver_is_independent_of_representatives(seed):
    rng = random.Random(seed)
    C = _invertible_category(rng)
    F = default_field(C)
    base = ordinary_quiver(C, F, seed=seed)
    data = underlying_quiver_and_poset(C)
    choice = {k: rng.choice(orb) for k, orb in enumerate(data.orbits)}
    other = ordinary_quiver(C, F, seed=seed + 1, representatives=choice)
    assert other.arrows == base.arrows


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_ordinary_quiver_structure(seed):
    rng = random.Random(seed)
    C = _invertible_category(rng)
    Q = ordinary_quiver(C, default_field(C), seed=seed)
    assert Q.as_quiver().is_acyclic()
    simples = Q.simples
    assert len(Q.vertices) == sum(len(simples[x]) for x in C.objects)
    # the trivial modules span a copy of the underlying quiver
    under = Counter(underlying_quiver_and_poset(C).quiver.arrows)
    for (x, y), m in under.items():
        assert Q.arrows[(Q.vertex_index(x, 0), Q.vertex_index(y, 0))] >= m


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_arrow_counts_equal_connecting_map_dimensions(seed):
    rng = random.Random(seed)
    C = random_category(rng, n_objects=2, max_order=6, max_size=12)
    F = default_field(C)
    Q = ordinary_quiver(C, F, seed=seed)
    x, y = C.objects
    data = underlying_quiver_and_poset(C)
    B = hom_biset(C, x, y)
    carrier = C.hom(x, y)
    expected = Counter()
    for alpha in data.representatives:
        a = carrier.index(alpha)
        pairs = [(g, h) for g in B.right_group.elements for h in B.left_group.elements
                 if B.right(a, g) == B.left(h, a)]
        for i, V in enumerate(Q.simples[x]):
            for j, W in enumerate(Q.simples[y]):
                mats = [(V.matrix_of(g).tolist(), W.matrix_of(h).tolist()) for g, h in pairs]
                d = oracles.intertwiner_dim(mats, V.dim, W.dim, F.p)
                if d:
                    expected[(Q.vertex_index(x, i), Q.vertex_index(y, j))] += d
    assert Q.arrows == expected


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_trivial_groups_ordinary_equals_underlying(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    arrows = [(f"v{i}", f"v{j}") for i in range(n) for j in range(i + 1, n) if j == i + 1 or rng.random() < 0.3]
    arrows += [arrows[0]] * rng.randint(0, 1)
    C = free_category([f"v{i}" for i in range(n)], arrows)
    Q = ordinary_quiver(C)
    under = Counter(underlying_quiver_and_poset(C).quiver.arrows)
    got = Counter({(Q.vertices[i].obj, Q.vertices[j].obj): m for (i, j), m in Q.arrows.items()})
    assert got == under
