import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from eirep.errors import InputError
from eirep.fields import GF
from eirep.groups import Perm, cyclic_group, double_coset_count, subgroup_generated, symmetric_group, trivial_group
from eirep.modrep import (chop, conjugate, direct_sum, factor_multiset, hom_dim, hom_space, induce, is_isomorphic,
                          one_dim_module, permutation_module, radical_series, random_invertible, regular_module,
                          restrict, simple_modules, splitting_degree, splitting_prime, top_and_socle_multiplicities, trivial_module)

import oracles
from randomdata import group_pool, random_subgroup, small_group

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)
S3 = symmetric_group(3)
F7 = GF(7)
T12 = Perm.from_cycles(3, [[0, 1]])
R123 = Perm.from_cycles(3, [[0, 1, 2]])


def parity(g):
    seen, sign = set(), 1
    for i in range(len(g.images)):
        n = 0
        while i not in seen:
            seen.add(i)
            i, n = g(i), n + 1
        if n and n % 2 == 0:
            sign = -sign
    return sign


def sign_module(F, G):
    return one_dim_module(F, G, [parity(g) % F.p for g in G.generators], name="sign")


def dims(mods):
    return sorted(m.dim for m in mods)


# ---------------------------------------------------------------- splitting primes

def test_splitting_prime_examples():
    assert splitting_prime([S3]) == 7
    assert splitting_prime([cyclic_group(2)]) == 3
    assert splitting_prime([trivial_group()]) == 2


def test_splitting_prime_skips_forbidden():
    assert splitting_prime([cyclic_group(2)], forbidden_char=3) == 5


# ---------------------------------------------------------------- constructions

def test_permutation_module_examples():
    A = subgroup_generated(S3, [T12])
    assert permutation_module(F7, S3, A).dim == 3
    assert is_isomorphic(permutation_module(F7, S3, S3), trivial_module(F7, S3))
    assert is_isomorphic(permutation_module(F7, S3, subgroup_generated(S3, [])), regular_module(F7, S3))


def test_permutation_module_requires_subgroup():
    with pytest.raises(InputError):
        permutation_module(F7, cyclic_group(3), S3)


def test_chop_examples():
    assert dims(chop(regular_module(F7, S3))) == [1, 1, 2, 2]
    natural = permutation_module(F7, S3, subgroup_generated(S3, [T12]))
    assert dims(chop(natural)) == [1, 2]
    assert dims(chop(regular_module(F7, trivial_group()))) == [1]


def test_natural_module_has_one_fixed_line():
    # brute force: invariant vectors of the 3-point permutation module over F7
    natural = permutation_module(F7, S3, subgroup_generated(S3, [T12]))
    fixed = [v for v in oracles.all_matrices(7, 3, 1)
             if all(np.array_equal(F7.matmul(natural.matrix_of(g), np.array(v)), np.array(v) % 7) for g in S3.generators)]
    assert len(fixed) == 7


def test_hom_space_examples():
    simples = simple_modules(F7, S3)
    for S in simples:
        assert hom_dim(S, S) == 1
    A = subgroup_generated(S3, [T12])
    assert hom_dim(trivial_module(F7, S3), permutation_module(F7, S3, A)) == 1
    assert hom_dim(regular_module(F7, S3), trivial_module(F7, S3)) == 1
    d, basis = hom_space(regular_module(F7, S3), trivial_module(F7, S3))
    assert d == len(basis) == 1 and basis[0].shape == (1, 6)


def test_is_isomorphic_examples():
    M = regular_module(F7, S3)
    assert is_isomorphic(M, M)
    assert not is_isomorphic(trivial_module(F7, S3), sign_module(F7, S3))
    rng = random.Random(3)
    A = conjugate(M, random_invertible(F7, 6, rng))
    B = conjugate(M, random_invertible(F7, 6, rng))
    assert is_isomorphic(A, B)


def test_simple_modules_examples():
    assert dims(simple_modules(F7, S3)) == [1, 1, 2]
    assert dims(simple_modules(GF(3), cyclic_group(2))) == [1, 1]
    assert dims(simple_modules(GF(5), trivial_group())) == [1]


def test_simple_modules_trivial_first():
    simples = simple_modules(F7, S3)
    assert simples[0].name == "k" and is_isomorphic(simples[0], trivial_module(F7, S3))


def test_simple_modules_in_modular_characteristic():
    # F2 S3: trivial and the 2-dim reduction of the reflection module
    assert dims(simple_modules(GF(2), S3)) == [1, 2]
    assert dims(simple_modules(GF(3), S3)) == [1, 1]


def test_restrict_examples():
    V2 = next(S for S in simple_modules(F7, S3) if S.dim == 2)
    C2 = subgroup_generated(S3, [T12])
    assert dims(chop(restrict(V2, C2))) == [1, 1]
    E = subgroup_generated(S3, [])
    R = restrict(V2, E)
    assert R.dim == 2 and all(np.array_equal(R.matrix_of(e), F7.eye(2)) for e in E.elements)
    C3 = subgroup_generated(S3, [R123])
    got = factor_multiset(restrict(regular_module(F7, S3), C3), simple_modules(F7, C3))
    want = factor_multiset(direct_sum(regular_module(F7, C3), regular_module(F7, C3)), simple_modules(F7, C3))
    assert got == want == Counter({0: 2, 1: 2, 2: 2})


def test_induce_examples():
    A = subgroup_generated(S3, [T12])
    assert is_isomorphic(induce(trivial_module(F7, A), S3), permutation_module(F7, S3, A))
    assert is_isomorphic(induce(regular_module(F7, A), S3), regular_module(F7, S3))
    C3 = subgroup_generated(S3, [R123])
    omega = one_dim_module(F7, C3, [2])  # 2 has order 3 mod 7
    ind = induce(omega, S3)
    assert ind.dim == 2 and dims(chop(ind)) == [2]


def test_top_socle_examples():
    simples = simple_modules(F7, S3)
    for i, S in enumerate(simples):
        top, soc = top_and_socle_multiplicities(S, simples)
        assert top == soc == [int(j == i) for j in range(len(simples))]
    top, soc = top_and_socle_multiplicities(regular_module(F7, S3), simples)
    assert top == soc == [1, 1, 2]


def test_uniserial_permutation_module_in_characteristic_two():
    F2, C2 = GF(2), cyclic_group(2)
    M = permutation_module(F2, C2, trivial_group(2))
    simples = simple_modules(F2, C2)
    assert top_and_socle_multiplicities(M, simples) == ([1], [1])
    assert radical_series(M, simples) == [[1], [1]]


def test_radical_series_examples():
    simples = simple_modules(F7, S3)
    assert radical_series(regular_module(F7, S3), simples) == [[1, 1, 2]]
    M = trivial_module(F7, S3)
    zero = type(M)(F7, S3, [np.zeros((0, 0), dtype=np.int64) for _ in S3.generators], dim=0, check=False)
    assert radical_series(zero, simples) == []


def test_incomplete_simple_list_rejected():
    simples = simple_modules(F7, S3)
    with pytest.raises(InputError):
        top_and_socle_multiplicities(regular_module(F7, S3), simples[:2])


def test_extension_field_splits_c3():
    # over F2 the faithful C3 characters need F4
    C3 = cyclic_group(3)
    from eirep.errors import FieldNotSplittingError
    with pytest.raises(FieldNotSplittingError):
        simple_modules(GF(2), C3)
    assert dims(simple_modules(GF(2, 2), C3)) == [1, 1, 1]


# ---------------------------------------------------------------- properties

def _random_module(rng, G, F):
    """A direct sum of one or two permutation modules, then conjugated."""
    parts = [permutation_module(F, G, random_subgroup(rng, G)) for _ in range(rng.randint(1, 2))]
    M = direct_sum(*parts) if len(parts) > 1 else parts[0]
    if M.dim > 12:
        M = parts[0]
    return conjugate(M, random_invertible(F, M.dim, rng))


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5, 7]))
def test_frobenius_reciprocity_dimension(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    G = small_group(rng, 8)
    A = random_subgroup(rng, G)
    M = _random_module(rng, A, F) if A.order <= 4 else permutation_module(F, A, random_subgroup(rng, A))
    N = permutation_module(F, G, random_subgroup(rng, G))
    lhs = hom_dim(induce(M, G), N)
    rhs = hom_dim(M, restrict(N, A))
    assert lhs == rhs == oracles.module_hom_dim(M, restrict(N, A))


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5, 7]))
def test_permutation_endomorphisms_count_double_cosets(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    G = small_group(rng, 12)
    A, B = random_subgroup(rng, G), random_subgroup(rng, G)
    MA, MB = permutation_module(F, G, A), permutation_module(F, G, B)
    assert hom_dim(MA, MA) == double_coset_count(G, A, A) == oracles.double_cosets(G, A, A)
    assert hom_dim(MA, MB) == oracles.double_cosets(G, A, B)
    assert hom_dim(trivial_module(F, G), MA) == 1


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5]))
def test_chop_multiset_invariant_under_conjugation(seed, p):
    rng = random.Random(seed)
    G = small_group(rng, 8)
    F = GF(p, splitting_degree(p, [G]))
    M = _random_module(rng, G, F)
    simples = simple_modules(F, G, seed=seed)
    N = conjugate(M, random_invertible(F, M.dim, rng))
    a, b = factor_multiset(M, simples, seed), factor_multiset(N, simples, seed + 1)
    assert a == b
    assert sum(simples[i].dim * c for i, c in a.items()) == M.dim


@PROPERTY
@given(st.integers(0, 10 ** 9))
def test_simple_dimensions_square_sum_over_splitting_prime(seed):
    G = random.Random(seed).choice(group_pool())
    F = GF(splitting_prime([G]))
    simples = simple_modules(F, G)
    assert sum(S.dim ** 2 for S in simples) == G.order
    assert all(hom_dim(S, S) == 1 for S in simples)


@PROPERTY
@given(st.integers(0, 10 ** 9), st.sampled_from([2, 3, 5]))
def test_hom_dim_matches_element_wise_oracle(seed, p):
    rng = random.Random(seed)
    F = GF(p)
    G = small_group(rng, 8)
    M, N = _random_module(rng, G, F), _random_module(rng, G, F)
    assert hom_dim(M, N) == oracles.module_hom_dim(M, N)
