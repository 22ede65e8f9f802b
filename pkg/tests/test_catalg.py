import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eirep.catalg import (CatRep, TwoObjectRepWitness, catrep_from_generators, catrep_hom_space,
                          catrep_is_isomorphic, category_algebra, induce_rep, induce_two_object_fastpath,
                          rep_conditions, rep_from_witness, rep_valid, restrict_rep, valid_phi_space,
                          witness_from_rep)
from eirep.category import full_subcategory, group_category, hom_biset, poset_category, subcategory
from eirep.errors import InputError, PreconditionError, StructuralError
from eirep.fields import GF
from eirep.fixtures import fix_a, fix_b, fix_b_singleton, fix_b_subcategory_labels, fix_c
from eirep.groups import subgroup_generated, symmetric_group
from eirep.modrep import direct_sum, hom_dim, permutation_module, regular_module, trivial_module

import oracles
from randomdata import random_category, random_subgroup

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)


def a2():
    return poset_category(["x", "y"], [("x", "y")])


def a2_rep(F, dx, dy, m):
    C = a2()
    return catrep_from_generators(C, F, {"x": dx, "y": dy}, {"x<y": m})


def module_rep(M, C, z):
    """A module for the automorphisms of z, as a representation of the one-object full subcategory."""
    Z = full_subcategory(C, [z])
    A = Z.aut_group(z)
    return CatRep(Z, M.field, {z: M.dim}, {m: M.matrix_of(A.perm_of[m]) for m in Z.hom(z, z)})


def two_object_sub(C, Gs, Hs, alpha):
    """Subcategory of a two-object C with automorphisms Gs, Hs and morphisms Hs alpha Gs."""
    x, y = C.src[alpha], C.tgt[alpha]
    Ax, Ay = C.aut_group(x), C.aut_group(y)
    gx = {g: Ax.mor_of[g] for g in Gs.elements}
    hy = {h: Ay.mor_of[h] for h in Hs.elements}
    mors = set(gx.values()) | set(hy.values())
    mors |= {C.compose(hm, C.compose(alpha, gm)) for gm in gx.values() for hm in hy.values()}
    return subcategory(C, [C.labels[m] for m in sorted(mors)])


# ---------------------------------------------------------------- category algebra

def test_group_algebra_product_table():
    S3 = symmetric_group(3)
    C = group_category(S3)
    A = category_algebra(C, GF(7))
    Ax = C.aut_group("x")
    for a in C.hom("x", "x"):
        for b in C.hom("x", "x"):
            assert A.product_of_basis(a, b) == Ax.mor_of[Ax.perm_of[a] * Ax.perm_of[b]]


def test_a2_algebra_has_one_nilpotent():
    A = category_algebra(a2(), GF(2))
    assert A.dimension == 3
    nil = [m for m in range(3) if A.product_of_basis(m, m) is None]
    assert len(nil) == 1 and a2().labels[nil[0]] == "x<y"


def test_fix_a_algebra_dimension_and_unit():
    A = category_algebra(fix_a(), GF(7))
    assert A.dimension == 14
    A.check_associative()
    one = A.one()
    rng = np.random.default_rng(0)
    u = rng.integers(0, 7, A.dimension)
    assert np.array_equal(A.multiply(one, u), u) and np.array_equal(A.multiply(u, one), u)


# ---------------------------------------------------------------- representations and witnesses

def test_functoriality_violation_rejected():
    C = a2()
    F = GF(3)
    with pytest.raises(StructuralError):
        CatRep(C, F, {"x": 1, "y": 1}, {C.index_of("1_x"): [[2]], C.index_of("1_y"): [[1]], C.index_of("x<y"): [[1]]})


def test_zero_phi_is_valid():
    C = fix_a()
    F = GF(7)
    x, y = "x", "y"
    V = regular_module(F, C.aut_group(x).group)
    W = regular_module(F, C.aut_group(y).group)
    w = TwoObjectRepWitness(V, W, F.zeros((W.dim, V.dim)))
    assert rep_valid(w, hom_biset(C, x, y), 0)
    R = rep_from_witness(w, C)
    assert all(not R.mats[m].any() for m in C.hom(x, y))


def test_identity_phi_on_a2():
    R = a2_rep(GF(5), 1, 1, [[1]])
    w = witness_from_rep(R)
    assert np.array_equal(rep_from_witness(w, a2()).matrix("x<y"), [[1]])


def test_fix_c_validity_matches_top_into_socle_for_p2():
    # every phi on dim-2 modules of C2 over F2: valid iff phi is a hom with phi(rad M) = 0 and im phi in Soc N
    F, C = GF(2), fix_c(2)
    x, y = C.objects
    B = hom_biset(C, x, y)
    Gx, Hy = C.aut_group(x).group, C.aut_group(y).group
    mods_x = [regular_module(F, Gx), direct_sum(trivial_module(F, Gx), trivial_module(F, Gx))]
    mods_y = [regular_module(F, Hy), direct_sum(trivial_module(F, Hy), trivial_module(F, Hy))]
    checked = 0
    for M in mods_x:
        for N in mods_y:
            gM = [[int(v) for v in r] for r in M.matrices[0]]
            gN = [[int(v) for v in r] for r in N.matrices[0]]
            radM = [[(gM[i][j] - (i == j)) % 2 for j in range(2)] for i in range(2)]
            socN_eq = [[(gN[i][j] - (i == j)) % 2 for j in range(2)] for i in range(2)]
            for X in oracles.all_matrices(2, 2, 2):
                is_hom = oracles.matmul_mod(X, gM, 2) == oracles.matmul_mod(gN, X, 2)
                kills_rad = not any(any(r) for r in oracles.matmul_mod(X, radM, 2))
                into_soc = not any(any(r) for r in oracles.matmul_mod(socN_eq, X, 2))
                expected = is_hom and kills_rad and into_soc
                assert rep_valid(TwoObjectRepWitness(M, N, X), B, 0) == expected
                checked += 1
    assert checked == 4 * 16


def test_regular_to_permutation_phi_space_has_dimension_three():
    F = GF(3)
    C = fix_a()
    G, H = C.aut_group("x").group, C.aut_group("y").group
    V = regular_module(F, G)
    t = next(h for h in H.elements if h.order() == 2)
    W = permutation_module(F, H, subgroup_generated(H, [t]))  # projective cover of k in characteristic 3
    assert hom_dim(W, trivial_module(F, H)) == 1 and W.dim == 3
    basis = valid_phi_space(V, W, hom_biset(C, "x", "y"), 0)
    assert len(basis) == 3
    R = rep_from_witness(TwoObjectRepWitness(V, W, basis[0]), C)
    assert R.total_dim() == 5


def test_kronecker_induction_collapses():
    F, C = GF(5), fix_b()
    D = subcategory(C, fix_b_subcategory_labels(C))
    N = catrep_from_generators(D, F, {"x": 1, "y": 1}, {"a.0": [[1]], "a.1": [[3]]})
    R = induce_rep(N, C)
    assert R.dims == {"x": 1, "y": 0}


def test_kronecker_induction_by_tensor_oracle():
    F, C = GF(5), fix_b()
    D = subcategory(C, fix_b_subcategory_labels(C))
    N = catrep_from_generators(D, F, {"x": 1, "y": 1}, {"a.0": [[1]], "a.1": [[3]]})
    emb = [C.index_of(l) for l in D.labels]
    assert oracles.tensor_induction_dims(N, C, emb, 5) == {"x": 1, "y": 0}


def test_singleton_induction_returns_input():
    F, C = GF(2), fix_b_singleton()
    D = subcategory(C, ["1_x", "1_y", "a.0"])
    N = catrep_from_generators(D, F, {"x": 1, "y": 1}, {"a.0": [[1]]})
    R = induce_rep(N, C)
    assert R.dims == {"x": 1, "y": 1}
    assert np.array_equal(R.matrix("y:g1"), [[1]])   # h (x) w = 1_y (x) w
    assert catrep_is_isomorphic(restrict_rep(R, D), N)


def test_hom_space_examples_on_a2():
    F = GF(5)
    R = a2_rep(F, 1, 1, [[1]])
    assert catrep_hom_space(R, R)[0] == 1
    Z = a2_rep(F, 1, 1, [[0]])
    assert catrep_hom_space(R, Z)[0] == 1
    Sx, Sy = a2_rep(F, 1, 0, F.zeros((0, 1))), a2_rep(F, 0, 1, F.zeros((1, 0)))
    assert catrep_hom_space(Sx, Sy)[0] == 0 and catrep_hom_space(Sy, Sx)[0] == 0


def test_restrict_to_object_gives_module():
    F = GF(7)
    C = fix_a()
    V = regular_module(F, C.aut_group("x").group)
    W = regular_module(F, C.aut_group("y").group)
    basis = valid_phi_space(V, W, hom_biset(C, "x", "y"), 0)
    R = rep_from_witness(TwoObjectRepWitness(V, W, basis[-1]), C)
    Rx = restrict_rep(R, full_subcategory(C, ["x"]))
    assert Rx.dims == {"x": 2}
    assert catrep_is_isomorphic(Rx, module_rep(V, C, "x"))


def test_fastpath_identity_when_d_is_c():
    F = GF(5)
    C = fix_a()
    V = regular_module(F, C.aut_group("x").group)
    W = regular_module(F, C.aut_group("y").group)
    phi = valid_phi_space(V, W, hom_biset(C, "x", "y"), 0)[0]
    w = TwoObjectRepWitness(V, W, phi)
    out = induce_two_object_fastpath(w, C, C)
    assert out.V.dim == V.dim and out.W.dim == W.dim
    assert catrep_is_isomorphic(rep_from_witness(out, C), rep_from_witness(w, C))


def test_fastpath_precondition_failure():
    F = GF(5)
    C = fix_a()
    t = next(g for g in C.aut_group("x").group.elements if not g.is_identity())
    G = C.aut_group("x").group
    Gs, Hs = subgroup_generated(G, [t]), subgroup_generated(C.aut_group("y").group, [])
    D = two_object_sub(C, Gs, Hs, C.hom("x", "y")[0])
    V = trivial_module(F, Gs)
    W = trivial_module(F, Hs)
    with pytest.raises(PreconditionError):
        induce_two_object_fastpath(TwoObjectRepWitness(V, W, [[1]]), D, C)


def test_trivial_chain_fastpath_matches_induction():
    F = GF(3)
    C = fix_a()
    E = subgroup_generated(C.aut_group("x").group, [])
    Eh = subgroup_generated(C.aut_group("y").group, [])
    D = two_object_sub(C, E, Eh, C.hom("x", "y")[0])
    w = TwoObjectRepWitness(trivial_module(F, E), trivial_module(F, Eh), [[1]])
    fast = induce_two_object_fastpath(w, D, C)
    slow = induce_rep(rep_from_witness(w, D), C)
    assert (fast.V.dim, fast.W.dim) == (slow.dims["x"], slow.dims["y"])


def test_rep_from_witness_rejects_invalid():
    F = GF(7)
    C = fix_a()
    V = trivial_module(F, C.aut_group("x").group)
    W = regular_module(F, C.aut_group("y").group)
    phi = np.zeros((6, 1), dtype=np.int64)
    phi[0, 0] = 1
    conds = rep_conditions(TwoObjectRepWitness(V, W, phi), hom_biset(C, "x", "y"), 0)
    assert not all(conds.values())
    with pytest.raises(InputError):
        rep_from_witness(TwoObjectRepWitness(V, W, phi), C)


# ---------------------------------------------------------------- properties

def _small_category(rng):
    return random_category(rng, n_objects=rng.randint(2, 3), max_order=4, max_size=6)


def _random_one_object_rep(rng, C, F):
    z = rng.choice(C.objects)
    A = C.aut_group(z).group
    M = permutation_module(F, A, random_subgroup(rng, A))
    return module_rep(M, C, z)


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5]))
def test_induce_then_restrict_is_identity_on_full_subcategories(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    C = _small_category(rng)
    objs = rng.sample(C.objects, rng.randint(1, len(C.objects) - 1))
    D = full_subcategory(C, objs)
    # N: restriction to D of something induced up from a single object of C
    N = restrict_rep(induce_rep(_random_one_object_rep(rng, C, F), C), D)
    back = restrict_rep(induce_rep(N, C), D)
    assert back.dims == N.dims
    assert catrep_is_isomorphic(back, N, seed=seed)


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3]))
def test_induction_dims_match_tensor_oracle(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    C = random_category(rng, n_objects=2, max_order=3, max_size=4)
    N = _random_one_object_rep(rng, C, F)
    emb = [C.index_of(l) for l in N.category.labels]
    R = induce_rep(N, C)
    assert R.dims == oracles.tensor_induction_dims(N, C, emb, p)


def _fix_a_subgroup_choice(rng, C):
    G, H = C.aut_group("x").group, C.aut_group("y").group
    return random_subgroup(rng, G, 1), random_subgroup(rng, H, 1)


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5]))
def test_fastpath_agrees_with_generic_induction(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    C = fix_a()
    alpha = rng.choice(C.hom("x", "y"))
    Gs, Hs = _fix_a_subgroup_choice(rng, C)
    D = two_object_sub(C, Gs, Hs, alpha)
    V = permutation_module(F, Gs, random_subgroup(rng, Gs))
    W = permutation_module(F, Hs, random_subgroup(rng, Hs))
    Bd = hom_biset(D, "x", "y")
    a_d = D.hom("x", "y").index(D.index_of(C.labels[alpha]))
    basis = valid_phi_space(V, W, Bd, a_d)
    phi = F.zeros((W.dim, V.dim))
    for b in basis:
        phi = F.add(phi, F.mul(b, rng.randrange(p)))
    w = TwoObjectRepWitness(V, W, phi)
    slow = induce_rep(rep_from_witness(w, D, C.labels[alpha]), C)
    try:
        fast = induce_two_object_fastpath(w, D, C, C.labels[alpha])
    except PreconditionError:
        # the shortcut's hypotheses must really fail: some h outside H' stabilises alpha G'
        B = hom_biset(C, "x", "y")
        a = C.hom("x", "y").index(alpha)
        orbit = {B.right(a, g) for g in Gs.elements}
        assert any(h not in Hs and {B.left(h, b) for b in orbit} == orbit for h in B.left_group.elements)
        return
    assert catrep_is_isomorphic(rep_from_witness(fast, C, C.labels[alpha]), slow, seed=seed)


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([3, 5, 7]))
def test_witness_round_trip(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    C = random_category(rng, n_objects=2, max_order=4, max_size=8)
    x, y = C.objects
    G, H = C.aut_group(x).group, C.aut_group(y).group
    V = permutation_module(F, G, random_subgroup(rng, G))
    W = permutation_module(F, H, random_subgroup(rng, H))
    basis = valid_phi_space(V, W, hom_biset(C, x, y), 0)
    phi = F.zeros((W.dim, V.dim))
    for b in basis:
        phi = F.add(phi, F.mul(b, rng.randrange(p)))
    R = rep_from_witness(TwoObjectRepWitness(V, W, phi), C)
    w2 = witness_from_rep(R)
    assert np.array_equal(w2.phi, phi)
    assert np.array_equal(rep_from_witness(w2, C).mats[C.hom(x, y)[-1]], R.mats[C.hom(x, y)[-1]])
