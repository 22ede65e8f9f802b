"""Category algebras and their representations.

A representation assigns a vector space ``k^dims[x]`` to each object and a
matrix of shape ``dims[y] x dims[x]`` to each morphism ``x -> y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .category import FiniteCategory, hom_biset, two_sided_orbits, unfactorizables
from .errors import InputError, PreconditionError, StructuralError
from .fields import Field
from .groups import Biset, StabilizerChain, is_subgroup, left_cosets, stabilizer_chain
from .modrep import FqModule, find_invertible_combination, induce, intertwiner_space


@dataclass(frozen=True)
class CategoryAlgebra:
    category: FiniteCategory
    field: Field

    @property
    def dimension(self) -> int:
        return self.category.num_morphisms

    @property
    def basis(self) -> list[str]:
        return list(self.category.labels)

    def product_of_basis(self, a: int, b: int) -> int | None:
        """Index of the basis product a*b (= a o b), or None when it is zero."""
        h = int(self.category.comp[a, b])
        return None if h < 0 else h

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        F = self.field
        out = F.zeros(self.dimension)
        comp = self.category.comp
        for a in np.flatnonzero(u):
            for b in np.flatnonzero(v):
                h = comp[a, b]
                if h >= 0:
                    out[h] = F.add(out[h], F.mul(u[a], v[b]))
        return out

    def one(self) -> np.ndarray:
        e = self.field.zeros(self.dimension)
        for x in self.category.objects:
            e[self.category.identities[x]] = 1
        return e

    def check_associative(self) -> None:
        comp = self.category.comp
        n = self.dimension
        for a in range(n):
            for b in range(n):
                ab = comp[a, b]
                for c in range(n):
                    bc = comp[b, c]
                    left = -1 if ab < 0 else comp[ab, c]
                    right = -1 if bc < 0 else comp[a, bc]
                    if left != right:
                        raise StructuralError("category algebra is not associative")


def category_algebra(C: FiniteCategory, F: Field) -> CategoryAlgebra:
    A = CategoryAlgebra(C, F)
    A.check_associative()
    return A


class CatRep:
    def __init__(self, category: FiniteCategory, field: Field, dims: dict, mats: dict, check: bool = True):
        self.category = category
        self.field = field
        self.dims = {x: int(dims.get(x, 0)) for x in category.objects}
        self.mats = {}
        for f in range(category.num_morphisms):
            if f not in mats:
                raise InputError(f"no matrix for morphism {category.labels[f]}")
            m = field.asarray(mats[f]).reshape(self.dims[category.tgt[f]], self.dims[category.src[f]])
            self.mats[f] = m
        if check:
            self.validate()

    def validate(self) -> None:
        C, F = self.category, self.field
        for x in C.objects:
            if not np.array_equal(self.mats[C.identities[x]], F.eye(self.dims[x])):
                raise StructuralError(f"identity of {x!r} is not represented by the identity matrix")
        for g in range(C.num_morphisms):
            for f in C.hom_into(C.src[g]):
                h = int(C.comp[g, f])
                if not np.array_equal(self.mats[h], F.matmul(self.mats[g], self.mats[f])):
                    raise StructuralError(
                        f"functoriality fails for {C.labels[g]} o {C.labels[f]}")

    def matrix(self, label: str) -> np.ndarray:
        return self.mats[self.category.index_of(label)]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def __repr__(self) -> str:
        return f"<CatRep dims={self.dims} over {self.field}>"


def catrep_from_generators(C: FiniteCategory, F: Field, dims: dict, partial: dict) -> CatRep:
    """Extend matrices given on a generating set of morphisms to a full representation.

    ``partial`` maps morphism ids or labels to matrices; composites are filled
    in until every morphism has a matrix, then functoriality is checked.
    """
    known = {}
    for key, m in partial.items():
        i = C.index_of(key) if isinstance(key, str) else int(key)
        known[i] = F.asarray(m).reshape(dims.get(C.tgt[i], 0), dims.get(C.src[i], 0))
    for x in C.objects:
        known.setdefault(C.identities[x], F.eye(dims.get(x, 0)))
    changed = True
    while changed and len(known) < C.num_morphisms:
        changed = False
        for g in list(known):
            for f in list(known):
                h = int(C.comp[g, f])
                if h >= 0 and h not in known:
                    known[h] = F.matmul(known[g], known[f])
                    changed = True
    if len(known) < C.num_morphisms:
        missing = [C.labels[i] for i in range(C.num_morphisms) if i not in known]
        raise InputError(f"generators do not reach morphisms {missing}")
    return CatRep(C, F, dims, known)


def zero_rep(C: FiniteCategory, F: Field) -> CatRep:
    return CatRep(C, F, {}, {f: F.zeros((0, 0)) for f in range(C.num_morphisms)}, check=False)


# ---------------------------------------------------------------- two-object witnesses

@dataclass
class TwoObjectRepWitness:
    """Data (V, W, phi) of a representation of a two-object category."""
    V: FqModule
    W: FqModule
    phi: np.ndarray

    def __post_init__(self):
        self.phi = self.V.field.asarray(self.phi).reshape(self.W.dim, self.V.dim)
        if self.V.field != self.W.field:
            raise InputError("V and W live over different fields")

    @cached_property
    def kernel(self) -> np.ndarray:
        F = self.V.field
        K = F.nullspace(self.phi)
        return F.row_space(K) if K.shape[0] else K

    @cached_property
    def image(self) -> np.ndarray:
        F = self.V.field
        return F.row_space(self.phi.T) if self.phi.size else self.phi.T[:0]


def _check_shapes(w: TwoObjectRepWitness, B: Biset) -> None:
    if not w.V.group.same_as(B.right_group):
        raise InputError("V must be a module for the biset's right group")
    if not w.W.group.same_as(B.left_group):
        raise InputError("W must be a module for the biset's left group")
    if w.phi.shape != (w.W.dim, w.V.dim):
        raise InputError("phi has the wrong shape")


def _stabilizer_pairs(B: Biset, chain: StabilizerChain):
    """Generators of {(h, g) : h.alpha = alpha.g}: G1 paired with rho, plus H0."""
    pairs = [(chain.rho(g), g) for g in chain.G1.generators]
    pairs += [(h, B.right_group.identity) for h in chain.H0.generators]
    return pairs


def rep_conditions(w: TwoObjectRepWitness, B: Biset, alpha: int) -> dict:
    """The individual validity conditions for (V, W, phi) at the point alpha."""
    _check_shapes(w, B)
    F = w.V.field
    chain = stabilizer_chain(B, alpha)
    V, W, phi = w.V, w.W, w.phi
    from .modrep import is_invariant
    out = {
        "kernel_G1_stable": is_invariant(F, w.kernel, [V.matrix_of(g) for g in chain.G1.generators]),
        "image_H1_stable": is_invariant(F, w.image, [W.matrix_of(h) for h in chain.H1.generators]),
        "G0_trivial_on_quotient": all(
            np.array_equal(F.matmul(phi, V.matrix_of(g)), phi) for g in chain.G0.generators),
        "H0_trivial_on_image": all(
            np.array_equal(F.matmul(W.matrix_of(h), phi), phi) for h in chain.H0.generators),
        "intertwines": all(
            np.array_equal(F.matmul(phi, V.matrix_of(g)), F.matmul(W.matrix_of(chain.rho(g)), phi))
            for g in chain.G1.generators),
    }
    return out


def rep_valid(w: TwoObjectRepWitness, B: Biset, alpha: int) -> bool:
    return all(rep_conditions(w, B, alpha).values())


def valid_phi_space(V: FqModule, W: FqModule, B: Biset, alpha: int) -> list[np.ndarray]:
    """Basis of all phi making (V, W, phi) a representation."""
    chain = stabilizer_chain(B, alpha)
    pairs = [(V.matrix_of(g), W.matrix_of(h)) for h, g in _stabilizer_pairs(B, chain)]
    return intertwiner_space(V.field, pairs, V.dim, W.dim)


def _two_objects(C: FiniteCategory):
    if len(C.objects) != 2:
        raise InputError("expected a category with two objects")
    a, b = C.objects
    if C.hom(a, b):
        return a, b
    if C.hom(b, a):
        return b, a
    raise InputError("the two objects are not connected")


def _orbit_factorizations(C: FiniteCategory, x, y, alpha: int) -> dict:
    """For each morphism beta in the orbit of alpha, a pair (h, g) with beta = h o alpha o g."""
    Hx, Gx = C.aut_group(y), C.aut_group(x)
    out = {}
    for g in Gx.group.elements:
        ag = int(C.comp[alpha, Gx.mor_of[g]])
        for h in Hx.group.elements:
            beta = int(C.comp[Hx.mor_of[h], ag])
            out.setdefault(beta, (h, g))
    return out


def _original_element(C: FiniteCategory, m: int):
    o = C.origin[m]
    while isinstance(o, tuple) and o and o[0] == "op":
        o = o[1]
    if isinstance(o, tuple) and len(o) == 3 and o[0] == "aut":
        return o[2]
    return None


def module_on_automorphisms(M: FqModule, C: FiniteCategory, x) -> FqModule:
    """Re-express a module for the group that built object x as a module for C.aut_group(x).

    Modules already over the automorphism group are returned unchanged.
    """
    A = C.aut_group(x)
    if M.group.same_as(A.group):
        return M
    mats = []
    for g in A.group.generators:
        orig = _original_element(C, A.mor_of[g])
        if orig is None or orig not in M.group:
            raise InputError(f"module group does not match the automorphisms of {x!r}")
        mats.append(M.matrix_of(orig))
    return FqModule(M.field, A.group, mats, dim=M.dim, name=M.name, check=False)


def _alpha_index(C: FiniteCategory, x, y, alpha) -> int:
    carrier = C.hom(x, y)
    if alpha is None:
        return carrier[0]
    if isinstance(alpha, str):
        alpha = C.index_of(alpha)
    if alpha not in carrier:
        raise InputError("alpha is not a morphism x -> y")
    return alpha


def rep_from_witness(w: TwoObjectRepWitness, C: FiniteCategory, alpha: int | str | None = None) -> CatRep:
    """The representation of a two-object category with R(h alpha g) = W(h) phi V(g)."""
    x, y = _two_objects(C)
    if len(two_sided_orbits(C, x, y)) != 1:
        raise InputError("rep_from_witness needs a single two-sided orbit")
    alpha = _alpha_index(C, x, y, alpha)
    V = module_on_automorphisms(w.V, C, x)
    W = module_on_automorphisms(w.W, C, y)
    B = hom_biset(C, x, y)
    if not rep_valid(TwoObjectRepWitness(V, W, w.phi), B, C.hom(x, y).index(alpha)):
        raise InputError("witness does not define a representation")
    F = V.field
    Gx, Hy = C.aut_group(x), C.aut_group(y)
    mats = {}
    for m in C.hom(x, x):
        mats[m] = V.matrix_of(Gx.perm_of[m])
    for m in C.hom(y, y):
        mats[m] = W.matrix_of(Hy.perm_of[m])
    for beta, (h, g) in _orbit_factorizations(C, x, y, alpha).items():
        mats[beta] = F.matmul(W.matrix_of(h), F.matmul(w.phi, V.matrix_of(g)))
    return CatRep(C, F, {x: V.dim, y: W.dim}, mats)


def witness_from_rep(R: CatRep, alpha: int | str | None = None) -> TwoObjectRepWitness:
    C = R.category
    x, y = _two_objects(C)
    if alpha is None:
        alpha = C.hom(x, y)[0]
    elif isinstance(alpha, str):
        alpha = C.index_of(alpha)
    Gx, Hy = C.aut_group(x), C.aut_group(y)
    F = R.field
    V = FqModule(F, Gx.group, [R.mats[Gx.mor_of[g]] for g in Gx.group.generators], dim=R.dims[x])
    W = FqModule(F, Hy.group, [R.mats[Hy.mor_of[h]] for h in Hy.group.generators], dim=R.dims[y])
    return TwoObjectRepWitness(V, W, R.mats[alpha])


# ---------------------------------------------------------------- restriction / induction

def _embedding(D: FiniteCategory, C: FiniteCategory) -> list[int]:
    try:
        emb = [C.index_of(l) for l in D.labels]
    except InputError:
        raise InputError("D is not a subcategory of C (labels do not match)") from None
    for i, j in enumerate(emb):
        if D.src[i] != C.src[j] or D.tgt[i] != C.tgt[j]:
            raise InputError("D is not a subcategory of C (endpoints differ)")
    for g in range(D.num_morphisms):
        for f in D.hom_into(D.src[g]):
            if emb[int(D.comp[g, f])] != int(C.comp[emb[g], emb[f]]):
                raise InputError("D is not a subcategory of C (composition differs)")
    return emb


def restrict_rep(R: CatRep, D: FiniteCategory) -> CatRep:
    emb = _embedding(D, R.category)
    dims = {x: R.dims[x] for x in D.objects}
    return CatRep(D, R.field, dims, {i: R.mats[j] for i, j in enumerate(emb)}, check=False)


def induce_rep(N: CatRep, C: FiniteCategory) -> CatRep:
    """kC tensored over kD with N, as the cokernel of the balancing relations."""
    D = N.category
    F = N.field
    emb = _embedding(D, C)
    dobjs = set(D.objects)
    gens = {}    # target object -> list of (morphism a of C, j)
    where = {}   # (a, j) -> column index within its target's free space
    for a in range(C.num_morphisms):
        if C.src[a] in dobjs:
            y = C.tgt[a]
            for j in range(N.dims[C.src[a]]):
                where[(a, j)] = len(gens.setdefault(y, []))
                gens[y].append((a, j))
    rel_rows = {y: [] for y in C.objects}
    for d in range(D.num_morphisms):
        dc = emb[d]
        z, s = C.tgt[dc], C.src[dc]
        Nd = N.mats[d]
        for a in C.hom_from(z):
            y = C.tgt[a]
            ad = int(C.comp[a, dc])
            for j in range(N.dims[s]):
                row = np.zeros(len(gens[y]), dtype=np.int64)
                row[where[(ad, j)]] = F.add(row[where[(ad, j)]], 1)
                for i in np.flatnonzero(Nd[:, j]):
                    col = where[(a, int(i))]
                    row[col] = F.sub(row[col], Nd[i, j])
                if row.any():
                    rel_rows[y].append(row)
    reducer = {}
    dims = {}
    for y in C.objects:
        n = len(gens.get(y, []))
        rows = np.array(rel_rows[y], dtype=np.int64).reshape(len(rel_rows[y]), n)
        R = F.row_space(rows) if rows.shape[0] else rows
        piv = [int(np.flatnonzero(r)[0]) for r in R]
        free = [c for c in range(n) if c not in set(piv)]
        reducer[y] = (R, piv, free)
        dims[y] = len(free)

    def reduce(y, vec):
        R, piv, free = reducer[y]
        v = vec.copy()
        for r, c in zip(R, piv):
            if v[c]:
                v = F.sub(v, F.mul(r, v[c]))
        return v[free]

    mats = {}
    for b in range(C.num_morphisms):
        x, y = C.src[b], C.tgt[b]
        M = F.zeros((dims[y], dims[x]))
        _, _, free_x = reducer[x]
        for k, c in enumerate(free_x):
            a, j = gens[x][c]
            vec = np.zeros(len(gens[y]), dtype=np.int64)
            vec[where[(int(C.comp[b, a]), j)]] = 1
            M[:, k] = reduce(y, vec)
        mats[b] = M
    return CatRep(C, F, dims, mats)


def induce_two_object_fastpath(w: TwoObjectRepWitness, D: FiniteCategory, C: FiniteCategory,
                               alpha: int | str | None = None) -> TwoObjectRepWitness:
    """Induce a witness for a two-object subcategory D of C directly on the vertex groups.

    D has automorphism groups G' <= G and H' <= H and contains alpha.  The
    shortcut needs H transitive on C(x,y) and Stab_H(alpha G') <= H'; the result
    is (Ind V, Ind W, phi) with phi(t (x) v) = h (x) phi(v) whenever alpha t = h alpha.
    """
    _embedding(D, C)
    x, y = _two_objects(C)
    if set(D.objects) != {x, y}:
        raise InputError("D must contain both objects of C")
    alpha = _alpha_index(C, x, y, C.index_of(D.labels[_alpha_index(D, x, y, alpha)]))
    Vd = module_on_automorphisms(w.V, D, x)
    Wd = module_on_automorphisms(w.W, D, y)
    G, H = C.aut_group(x).group, C.aut_group(y).group
    Gs, Hs = Vd.group, Wd.group
    if not (is_subgroup(Gs, G) and is_subgroup(Hs, H)):
        raise InputError("automorphism groups of D are not subgroups of those of C")
    B = hom_biset(C, x, y)
    a = C.hom(x, y).index(alpha)
    if not B.is_left_transitive():
        raise PreconditionError("H does not act transitively on C(x,y)")
    orbit_aG = {B.right(a, g) for g in Gs.elements}
    for h in H.elements:
        if h not in Hs and {B.left(h, b) for b in orbit_aG} == orbit_aG:
            raise PreconditionError("Stab_H(alpha G') is not contained in H'")
    F = Vd.field
    Vi, Wi = induce(Vd, G), induce(Wd, H)
    g_reps = [c[0] for c in left_cosets(G, Gs)]
    h_cosets = left_cosets(H, Hs)
    h_where = {z: k for k, c in enumerate(h_cosets) for z in c}
    h_reps = [c[0] for c in h_cosets]
    left_w = {}
    for h in H.elements:
        left_w.setdefault(B.left(h, a), h)
    dV, dW = Vd.dim, Wd.dim
    phi = F.zeros((Wi.dim, Vi.dim))
    for i, t in enumerate(g_reps):
        h = left_w[B.right(a, t)]
        k = h_where[h]
        inner = h_reps[k].inverse() * h
        phi[k * dW:(k + 1) * dW, i * dV:(i + 1) * dV] = F.matmul(Wd.matrix_of(inner), w.phi)
    return TwoObjectRepWitness(Vi, Wi, phi)


# ---------------------------------------------------------------- natural transformations

def _generating_morphisms(C: FiniteCategory) -> list[int]:
    try:
        gens = set(unfactorizables(C))
    except InputError:
        return [f for f in range(C.num_morphisms)]
    for x in C.objects:
        A = C.aut_group(x)
        gens.update(A.mor_of[g] for g in A.group.generators)
    return sorted(gens)


def catrep_hom_space(R1: CatRep, R2: CatRep) -> tuple[int, list[dict]]:
    """Natural transformations R1 -> R2 as dicts object -> matrix."""
    if R1.category is not R2.category and R1.category.labels != R2.category.labels:
        raise InputError("representations of different categories")
    if R1.field != R2.field:
        raise InputError("representations over different fields")
    C, F = R1.category, R1.field
    offsets = {}
    total = 0
    for x in C.objects:
        offsets[x] = total
        total += R2.dims[x] * R1.dims[x]
    if total == 0:
        return 0, []
    blocks = []
    for f in _generating_morphisms(C):
        x, y = C.src[f], C.tgt[f]
        rows = R2.dims[y] * R1.dims[x]
        if rows == 0:
            continue
        E = np.zeros((rows, total), dtype=np.int64)
        ny = R2.dims[y] * R1.dims[y]
        nx = R2.dims[x] * R1.dims[x]
        if ny:
            E[:, offsets[y]:offsets[y] + ny] = np.kron(F.eye(R2.dims[y]), R1.mats[f].T)
        if nx:
            part = np.kron(R2.mats[f], F.eye(R1.dims[x]))
            E[:, offsets[x]:offsets[x] + nx] = F.sub(E[:, offsets[x]:offsets[x] + nx], part)
        blocks.append(E)
    null = F.nullspace(np.vstack(blocks)) if blocks else F.eye(total)
    basis = []
    for row in null:
        eta = {}
        for x in C.objects:
            o = offsets[x]
            eta[x] = row[o:o + R2.dims[x] * R1.dims[x]].reshape(R2.dims[x], R1.dims[x])
        basis.append(eta)
    return len(basis), basis


def catrep_is_isomorphic(R1: CatRep, R2: CatRep, seed: int = 0) -> bool:
    if R1.dims != R2.dims:
        return False
    if all(d == 0 for d in R1.dims.values()):
        return True
    F = R1.field
    dim, basis = catrep_hom_space(R1, R2)
    if dim == 0:
        return False
    objs = [x for x in R1.category.objects if R1.dims[x]]
    tuples = [[eta[x] for x in objs] for eta in basis]
    found = find_invertible_combination(F, tuples, lambda Xs: all(F.is_invertible(X) for X in Xs), seed=seed)
    return found is not None
