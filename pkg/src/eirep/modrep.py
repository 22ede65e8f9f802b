"""Modules over group algebras of permutation groups, with exact matrices.

Matrices act on column vectors: ``v -> A @ v``.  Subspaces are stored as
matrices whose rows form a basis in reduced echelon form.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import FieldNotSplittingError, InputError, ResourceError, StructuralError
from .fields import GF, Field, irreducible_factors, is_prime, poly_of_matrix
from .groups import FiniteGroup, Perm, is_subgroup, left_cosets

MEATAXE_RETRIES = 200
EXACT_CHECK_ORDER = 256


class FqModule:
    """A representation of ``group`` over ``field``: one matrix per generator."""

    def __init__(self, field: Field, group: FiniteGroup, matrices: Sequence, dim: int | None = None,
                 name: str | None = None, check: bool = True):
        self.field = field
        self.group = group
        mats = tuple(field.asarray(m) for m in matrices)
        if len(mats) != len(group.generators):
            raise InputError("need one matrix per group generator")
        if dim is None:
            if not mats:
                raise InputError("dimension required for a group without generators")
            dim = mats[0].shape[0]
        self.dim = dim
        for m in mats:
            if m.shape != (dim, dim):
                raise InputError(f"matrix of shape {m.shape} in a module of dimension {dim}")
        self.matrices = mats
        self.name = name
        self._cache: dict[int, np.ndarray] = {}
        if check:
            self.validate()

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FqModule{label} dim={self.dim} over {self.field} for group of order {self.group.order}>"

    def matrix_of(self, g: Perm) -> np.ndarray:
        i = self.group.index(g)
        cached = self._cache.get(i)
        if cached is not None:
            return cached
        word = []
        j = i
        while j:
            j, s = self.group.tree[j]
            word.append(s)
        F = self.field
        out = F.eye(self.dim)
        for s in reversed(word):
            out = F.matmul(self.matrices[s], out)
        self._cache[i] = out
        return out

    @cached_property
    def _table(self) -> list[np.ndarray]:
        F = self.field
        return self.group.extend(self.matrices, F.matmul, F.eye(self.dim))

    def validate(self, seed: int = 0) -> None:
        F, G = self.field, self.group
        for m in self.matrices:
            if not F.is_invertible(m):
                raise StructuralError("a generator matrix is singular")
        if G.order <= EXACT_CHECK_ORDER:
            table = self._table
            for i, g in enumerate(G.elements):
                for s, gs in enumerate(G.generators):
                    j = G.index(gs * g)
                    if not np.array_equal(table[j], F.matmul(self.matrices[s], table[i])):
                        raise StructuralError("generator matrices violate a group relation")
            return
        rng = random.Random(seed)
        ngens = len(G.generators)
        for _ in range(64):
            word = [rng.randrange(ngens) for _ in range(rng.randint(1, 8))]
            g = G.identity
            m = F.eye(self.dim)
            for s in word:
                g = G.generators[s] * g
                m = F.matmul(self.matrices[s], m)
            if not np.array_equal(m, self.matrix_of(g)):
                raise StructuralError("generator matrices violate a group relation")


# ---------------------------------------------------------------- fields

def splitting_prime(groups: Sequence[FiniteGroup], forbidden_char: int = 0, limit: int = 1 << 20) -> int:
    """Smallest prime l with l = 1 mod exponent(G) and l not dividing |G|, for all G."""
    for ell in range(2, limit):
        if not is_prime(ell) or ell == forbidden_char:
            continue
        if all(G.order % ell != 0 and (ell - 1) % G.exponent == 0 for G in groups):
            return ell
    raise ResourceError("no splitting prime below the search limit")


def splitting_degree(p: int, groups: Sequence[FiniteGroup]) -> int:
    """Smallest e such that F_{p^e} contains the p'-part of every exponent's roots of unity."""
    m = 1
    for G in groups:
        ex = G.exponent
        while ex % p == 0:
            ex //= p
        m = m * ex // np.gcd(m, ex)
    e = 1
    while (p ** e - 1) % m:
        e += 1
    return e


# ---------------------------------------------------------------- constructors

def trivial_module(F: Field, G: FiniteGroup) -> FqModule:
    return FqModule(F, G, [F.eye(1) for _ in G.generators], dim=1, name="k", check=False)


def one_dim_module(F: Field, G: FiniteGroup, scalars: Sequence[int], name=None) -> FqModule:
    return FqModule(F, G, [np.array([[s]], dtype=np.int64) for s in scalars], dim=1, name=name)


def permutation_module(F: Field, G: FiniteGroup, A: FiniteGroup) -> FqModule:
    """The module k[G/A] with G permuting the left cosets of A."""
    if not is_subgroup(A, G):
        raise InputError("A is not a subgroup of G")
    cosets = left_cosets(G, A)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    reps = [c[0] for c in cosets]
    n = len(cosets)
    mats = []
    for g in G.generators:
        P = np.zeros((n, n), dtype=np.int64)
        for i, r in enumerate(reps):
            P[where[g * r], i] = 1
        mats.append(P)
    return FqModule(F, G, mats, dim=n, check=False)


def regular_module(F: Field, G: FiniteGroup) -> FqModule:
    return permutation_module(F, G, FiniteGroup([], G.degree))


def module_from_matrices(F: Field, G: FiniteGroup, matrices, name=None) -> FqModule:
    return FqModule(F, G, matrices, name=name)


def direct_sum(*mods: FqModule) -> FqModule:
    F, G = mods[0].field, mods[0].group
    dim = sum(m.dim for m in mods)
    mats = []
    for s in range(len(G.generators)):
        A = np.zeros((dim, dim), dtype=np.int64)
        off = 0
        for m in mods:
            A[off:off + m.dim, off:off + m.dim] = m.matrices[s]
            off += m.dim
        mats.append(A)
    return FqModule(F, G, mats, dim=dim, check=False)


def conjugate(M: FqModule, P: np.ndarray) -> FqModule:
    """The module with matrices P^-1 A P (isomorphic to M)."""
    F = M.field
    Pinv = F.inverse(P)
    mats = [F.matmul(Pinv, F.matmul(A, P)) for A in M.matrices]
    return FqModule(F, M.group, mats, dim=M.dim, name=M.name, check=False)


def random_invertible(F: Field, n: int, rng: random.Random) -> np.ndarray:
    while True:
        P = F.random(rng, (n, n))
        if F.is_invertible(P):
            return P


# ---------------------------------------------------------------- restriction / induction

def restrict(M: FqModule, A: FiniteGroup) -> FqModule:
    if not is_subgroup(A, M.group):
        raise InputError("not a subgroup of the module's group")
    mats = [M.matrix_of(a) for a in A.generators]
    return FqModule(M.field, A, mats, dim=M.dim, name=M.name, check=False)


def induce(M: FqModule, G: FiniteGroup) -> FqModule:
    """kG tensored over kA with M, on the basis t_i (x) v_j for a left transversal t_i."""
    A = M.group
    if not is_subgroup(A, G):
        raise InputError("the module's group is not a subgroup of G")
    F = M.field
    cosets = left_cosets(G, A)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    reps = [c[0] for c in cosets]
    inv_reps = [r.inverse() for r in reps]
    n, d = len(reps), M.dim
    mats = []
    for g in G.generators:
        B = np.zeros((n * d, n * d), dtype=np.int64)
        for i, t in enumerate(reps):
            gt = g * t
            k = where[gt]
            a = inv_reps[k] * gt
            B[k * d:(k + 1) * d, i * d:(i + 1) * d] = M.matrix_of(a)
        mats.append(B)
    return FqModule(F, G, mats, dim=n * d, check=False)


def inflate_transport(U: FqModule, target: FiniteGroup, lift) -> FqModule:
    """Module over ``target`` acting on U through ``lift: target element -> U.group element``.

    The caller guarantees that ``lift`` induces a homomorphism.
    """
    mats = [U.matrix_of(lift(h)) for h in target.generators]
    return FqModule(U.field, target, mats, dim=U.dim, name=U.name, check=True)


# ---------------------------------------------------------------- Hom spaces

def _same_setting(M: FqModule, N: FqModule) -> None:
    if M.field != N.field:
        raise InputError("modules over different fields")
    if not M.group.same_as(N.group):
        raise InputError("modules over different groups")


def _generator_pairs(M: FqModule, N: FqModule):
    if M.group is N.group or len(M.group.generators) == len(N.group.generators) and all(
            a == b for a, b in zip(M.group.generators, N.group.generators)):
        return list(zip(M.matrices, N.matrices))
    return [(M.matrix_of(g), N.matrix_of(g)) for g in M.group.generators]


def intertwiner_space(F: Field, pairs, dM: int, dN: int) -> list[np.ndarray]:
    """Basis of {X (dN x dM) : X A = B X for every (A, B) in pairs}."""
    if dM == 0 or dN == 0:
        return []
    if not pairs:
        basis = []
        for i in range(dN):
            for j in range(dM):
                X = np.zeros((dN, dM), dtype=np.int64)
                X[i, j] = 1
                basis.append(X)
        return basis
    blocks = []
    IN = F.eye(dN)
    IM = F.eye(dM)
    for A, B in pairs:
        left = np.kron(IN, np.asarray(A).T)
        right = np.kron(np.asarray(B), IM)
        blocks.append(F.sub(left, right))
    system = np.vstack(blocks)
    null = F.nullspace(system)
    return [row.reshape(dN, dM) for row in null]


def hom_space(M: FqModule, N: FqModule) -> tuple[int, list[np.ndarray]]:
    """All X with X rho_M(g) = rho_N(g) X; returns (dimension, basis)."""
    _same_setting(M, N)
    basis = intertwiner_space(M.field, _generator_pairs(M, N), M.dim, N.dim)
    return len(basis), basis


def hom_dim(M: FqModule, N: FqModule) -> int:
    return hom_space(M, N)[0]


def find_invertible_combination(F: Field, basis: list, is_invertible, seed: int = 0, tries: int = 64,
                                exhaustive_limit: int = 4096):
    """Search the span of ``basis`` (list of equally shaped tuples/arrays) for an invertible element."""
    if not basis:
        return None
    rng = random.Random(seed)

    def combo(coeffs):
        out = None
        for c, b in zip(coeffs, basis):
            if c == 0:
                continue
            term = [F.mul(x, c) for x in b]
            out = term if out is None else [F.add(u, v) for u, v in zip(out, term)]
        return out

    for _ in range(tries):
        coeffs = [rng.randrange(F.q) for _ in basis]
        X = combo(coeffs)
        if X is not None and is_invertible(X):
            return X
    if F.q ** len(basis) <= exhaustive_limit:
        for coeffs in itertools.product(range(F.q), repeat=len(basis)):
            X = combo(coeffs)
            if X is not None and is_invertible(X):
                return X
    return None


def is_isomorphic(M: FqModule, N: FqModule, seed: int = 0) -> bool:
    _same_setting(M, N)
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    F = M.field
    for A, B in _generator_pairs(M, N):
        if F.charpoly(A) != F.charpoly(B):
            return False
    dim, basis = hom_space(M, N)
    if dim == 0:
        return False
    found = find_invertible_combination(F, [[X] for X in basis],
                                        lambda Xs: F.is_invertible(Xs[0]), seed=seed)
    return found is not None


# ---------------------------------------------------------------- subspaces

def spin(F: Field, vectors: np.ndarray, matrices: Sequence[np.ndarray]) -> np.ndarray:
    """Smallest subspace containing the rows of ``vectors`` and invariant under the matrices."""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    basis = F.row_space(vectors)
    frontier = basis
    while frontier.shape[0] and matrices:
        images = np.vstack([F.matmul(frontier, np.asarray(A).T) for A in matrices])
        reduced = _reduce_against(F, basis, images)
        if not reduced.any():
            break
        frontier = F.row_space(reduced)
        basis = F.row_space(np.vstack([basis, frontier]))
    return basis


def _pivots(R: np.ndarray) -> list[int]:
    return [int(np.flatnonzero(row)[0]) for row in R]


def _reduce_against(F: Field, basis: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """Reduce rows of ``vectors`` modulo a reduced-echelon ``basis``."""
    out = np.array(vectors, dtype=np.int64, copy=True)
    for row, c in zip(basis, _pivots(basis)):
        coef = out[:, c].copy()
        nz = np.flatnonzero(coef)
        if nz.size:
            out[nz] = F.sub(out[nz], F.mul(coef[nz, None], row[None, :]))
    return out


def is_invariant(F: Field, basis: np.ndarray, matrices: Sequence[np.ndarray]) -> bool:
    if basis.shape[0] == 0:
        return True
    for A in matrices:
        img = F.matmul(basis, np.asarray(A).T)
        if _reduce_against(F, basis, img).any():
            return False
    return True


def submodule(M: FqModule, basis: np.ndarray) -> FqModule:
    """Action on an invariant subspace, in the coordinates of the echelon basis."""
    F = M.field
    basis = F.row_space(basis)
    piv = _pivots(basis)
    k = basis.shape[0]
    mats = []
    for A in M.matrices:
        img = F.matmul(basis, A.T)
        if _reduce_against(F, basis, img).any():
            raise InputError("subspace is not invariant")
        mats.append(img[:, piv].T.copy())
    return FqModule(F, M.group, mats, dim=k, check=False)


def quotient(M: FqModule, basis: np.ndarray) -> FqModule:
    """Action on M / span(basis), using the non-pivot unit vectors as a basis."""
    F = M.field
    basis = F.row_space(basis) if basis.shape[0] else basis.reshape(0, M.dim)
    piv = set(_pivots(basis))
    free = [c for c in range(M.dim) if c not in piv]
    mats = []
    for A in M.matrices:
        cols = A[:, free].T  # images of the free unit vectors, as rows
        red = _reduce_against(F, basis, cols) if basis.shape[0] else cols
        mats.append(red[:, free].T.copy())
    return FqModule(F, M.group, mats, dim=len(free), check=False)


# ---------------------------------------------------------------- Meataxe

IRREDUCIBLE = "irreducible"


def find_submodule(M: FqModule, rng: random.Random):
    """A proper nonzero invariant subspace, or IRREDUCIBLE (Holt-Rees / Norton test)."""
    F, n = M.field, M.dim
    if n <= 1:
        return IRREDUCIBLE
    gens = [np.asarray(A) for A in M.matrices]
    if not gens:
        basis = np.zeros((1, n), dtype=np.int64)
        basis[0, 0] = 1
        return basis
    gens_t = [A.T.copy() for A in gens]
    words = list(gens)
    for _ in range(MEATAXE_RETRIES):
        a, b = rng.randrange(len(words)), rng.randrange(len(words))
        words.append(F.matmul(words[a], words[b]))
        if len(words) > 12:
            words.pop(len(gens))
        theta = F.zeros((n, n))
        for W in rng.sample(words, min(len(words), 4)):
            c = rng.randrange(1, F.q)
            theta = F.add(theta, F.mul(W, c))
        cp = F.charpoly(theta)
        for f in irreducible_factors(F, cp, seed=rng.randrange(1 << 30)):
            N = poly_of_matrix(F, f, theta)
            K = F.nullspace(N)
            if K.shape[0] == 0:
                continue
            S = spin(F, K[:1], gens)
            if S.shape[0] < n:
                return S
            if K.shape[0] != len(f) - 1:
                continue
            KT = F.nullspace(N.T)
            ST = spin(F, KT[:1], gens_t)
            if ST.shape[0] < n:
                return F.row_space(F.nullspace(ST))
            return IRREDUCIBLE
    raise ResourceError("Meataxe retry budget exhausted")


def chop(M: FqModule, seed: int = 0) -> list[FqModule]:
    """Composition factors of M (with multiplicity)."""
    rng = random.Random(seed)
    out: list[FqModule] = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.dim == 0:
            continue
        res = find_submodule(X, rng)
        if isinstance(res, str):
            out.append(X)
            continue
        stack.append(quotient(X, res))
        stack.append(submodule(X, res))
    return out


def is_irreducible_module(M: FqModule, seed: int = 0) -> bool:
    return M.dim > 0 and isinstance(find_submodule(M, random.Random(seed)), str)


def _sort_key(M: FqModule):
    F = M.field
    traces = tuple(_trace(F, A) for A in M.matrices)
    nontrivial = any(not np.array_equal(A, F.eye(M.dim)) for A in M.matrices)
    return (M.dim, nontrivial, traces)


def _trace(F: Field, A: np.ndarray) -> int:
    t = 0
    for i in range(A.shape[0]):
        t = int(F.add(t, A[i, i]))
    return t


def dedupe(mods: Sequence[FqModule], seed: int = 0) -> list[tuple[FqModule, int]]:
    """Group modules into isomorphism classes; returns (representative, count)."""
    classes: list[list] = []
    for m in mods:
        for entry in classes:
            if is_isomorphic(entry[0], m, seed=seed):
                entry[1] += 1
                break
        else:
            classes.append([m, 1])
    return [(m, c) for m, c in classes]


def simple_modules(F: Field, G: FiniteGroup, seed: int = 0) -> list[FqModule]:
    """Pairwise non-isomorphic simple modules, trivial first, then by dimension."""
    factors = chop(regular_module(F, G), seed=seed)
    reps = [m for m, _ in dedupe(factors, seed=seed)]
    for S in reps:
        if hom_dim(S, S) != 1:
            raise FieldNotSplittingError(f"{F} is not a splitting field for a group of order {G.order}", S)
    reps.sort(key=_sort_key)
    if G.order % F.p and sum(S.dim ** 2 for S in reps) != G.order:
        raise StructuralError("simple modules do not account for the regular module")
    named = []
    for i, S in enumerate(reps):
        name = "k" if i == 0 else f"S{i}"
        named.append(FqModule(F, G, S.matrices, dim=S.dim, name=name, check=False))
    return named


def identify(M: FqModule, simples: Sequence[FqModule], seed: int = 0) -> int:
    """Index of the simple module isomorphic to M."""
    for i, S in enumerate(simples):
        if S.dim == M.dim and is_isomorphic(S, M, seed=seed):
            return i
    raise InputError("module is not isomorphic to any listed simple module")


def factor_multiset(M: FqModule, simples: Sequence[FqModule], seed: int = 0) -> Counter:
    return Counter(identify(X, simples, seed) for X in chop(M, seed))


# ---------------------------------------------------------------- top, socle, radical

def radical_basis(M: FqModule, simples: Sequence[FqModule]) -> np.ndarray:
    """rad M as the common kernel of all homomorphisms to simple modules."""
    F = M.field
    rows = []
    for S in simples:
        for X in hom_space(M, S)[1]:
            rows.append(X)
    if not rows:
        return F.eye(M.dim)
    ker = F.nullspace(np.vstack(rows))
    return F.row_space(ker) if ker.shape[0] else ker


def _regular_class_count(G: FiniteGroup, ell: int) -> int:
    # over a splitting field this is the number of simple modules
    return sum(1 for c in G.conjugacy_classes if next(iter(c)).order() % ell)


def top_and_socle_multiplicities(M: FqModule, simples: Sequence[FqModule]) -> tuple[list[int], list[int]]:
    top = []
    soc = []
    for S in simples:
        end = hom_dim(S, S)
        if end != 1:
            raise InputError("simple list is not absolutely irreducible")
        top.append(hom_dim(M, S))
        soc.append(hom_dim(S, M))
    if len(simples) != _regular_class_count(M.group, M.field.p):
        raise InputError("simple module list is incomplete")
    rad = radical_basis(M, simples)
    if sum(t * S.dim for t, S in zip(top, simples)) != M.dim - rad.shape[0]:
        raise InputError("simple module list is incomplete")
    return top, soc


def radical_series(M: FqModule, simples: Sequence[FqModule]) -> list[list[int]]:
    """Multiplicities of each simple in rad^i M / rad^(i+1) M, i = 0, 1, ..."""
    layers = []
    cur = M
    while cur.dim:
        top, _ = top_and_socle_multiplicities(cur, simples)
        layers.append(top)
        rad = radical_basis(cur, simples)
        if rad.shape[0] == 0:
            break
        cur = submodule(cur, rad)
    return layers


__all__ = [
    "FqModule", "GF", "splitting_prime", "splitting_degree", "trivial_module", "one_dim_module",
    "permutation_module", "regular_module", "direct_sum", "conjugate", "restrict", "induce",
    "hom_space", "hom_dim", "is_isomorphic", "chop", "simple_modules", "top_and_socle_multiplicities",
    "radical_series", "spin", "submodule", "quotient", "identify", "factor_multiset", "dedupe",
]
