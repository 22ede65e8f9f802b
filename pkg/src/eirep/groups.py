"""Permutation groups, subgroups and bisets.

Elements are :class:`Perm` objects.  Products compose right to left, so
``(a * b)(i) == a(b(i))``.  Every group is fully enumerated; each element is
reached from the identity along a breadth-first spanning tree, which is also
how homomorphisms given on generators are extended to all elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Callable, Iterable, Sequence

from .errors import InputError, StructuralError


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(int(i) for i in images)
        if check and sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        mine = self.images
        return Perm([mine[j] for j in other.images], check=False)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv, check=False)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        seen = [False] * len(self.images)
        result = 1
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            result = result * length // gcd(result, length)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class FiniteGroup:
    """A permutation group with its full list of elements.

    ``elements[0]`` is the identity.  ``tree[i] = (j, s)`` records that
    ``elements[i] == generators[s] * elements[j]``.
    """

    MAX_ORDER = 20000

    def __init__(self, generators: Iterable[Perm], degree: int | None = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise InputError("degree required for a group with no generators")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise InputError("generators have different degrees")
        self.generators = gens
        self.degree = degree
        ident = Perm.identity(degree)
        elements = [ident]
        index = {ident: 0}
        tree: list[tuple[int, int]] = [(-1, -1)]
        pos = 0
        while pos < len(elements):
            x = elements[pos]
            for s, g in enumerate(gens):
                y = g * x
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    tree.append((pos, s))
                    if len(elements) > self.MAX_ORDER:
                        raise InputError("group too large to enumerate")
            pos += 1
        self.elements: list[Perm] = elements
        self._index = index
        self.tree = tree

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: Perm) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise InputError(f"{g!r} is not an element of the group") from None

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or (
            self.degree == other.degree and self.order == other.order
            and all(g in other for g in self.elements))

    def extend(self, gen_images: Sequence, mul: Callable, identity) -> list:
        """Images of all elements under the map ``generators[s] -> gen_images[s]``.

        ``mul(a, b)`` must represent the image of a product ``s * x`` as
        ``mul(image(s), image(x))``.
        """
        out = [identity]
        for i in range(1, len(self.elements)):
            j, s = self.tree[i]
            out.append(mul(gen_images[s], out[j]))
        return out

    @cached_property
    def exponent(self) -> int:
        e = 1
        for g in self.elements:
            o = g.order()
            e = e * o // gcd(e, o)
        return e

    @cached_property
    def conjugacy_classes(self) -> list[frozenset]:
        classes, seen = [], set()
        for g in self.elements:
            if g in seen:
                continue
            cls = frozenset(x * g * x.inverse() for x in self.elements)
            seen |= cls
            classes.append(cls)
        return classes

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroup order={self.order} degree={self.degree}>"


class Subgroup(FiniteGroup):
    """A subgroup of ``parent``; itself a :class:`FiniteGroup` on the same points."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[Perm]):
        elems = set(elements)
        for g in elems:
            if g not in parent:
                raise InputError(f"{g!r} is not an element of the parent group")
        gens: list[Perm] = []
        closure = {parent.identity}
        for g in parent.elements:
            if g in elems and g not in closure:
                gens.append(g)
                closure = set(FiniteGroup(gens, parent.degree).elements)
        super().__init__(gens, parent.degree)
        if set(self.elements) != elems | {parent.identity}:
            raise InputError("element set is not closed under multiplication")
        self.parent = parent

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of order {self.parent.order}>"


# ---------------------------------------------------------------- constructors

def trivial_group(degree: int = 1) -> FiniteGroup:
    return FiniteGroup([], degree)


def cyclic_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    return FiniteGroup([Perm([(i + 1) % n for i in range(n)])])


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return trivial_group()
    if n == 2:
        return cyclic_group(2)
    return FiniteGroup([Perm.from_cycles(n, [(0, 1)]),
                        Perm.from_cycles(n, [tuple(range(n))])])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of an n-gon, order 2n (n >= 3)."""
    rot = Perm([(i + 1) % n for i in range(n)])
    ref = Perm([(-i) % n for i in range(n)])
    return FiniteGroup([rot, ref])


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Product acting on the disjoint union of the factors' points."""
    total = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for s in g.generators:
            images = list(range(total))
            for i, j in enumerate(s.images):
                images[offset + i] = offset + j
            gens.append(Perm(images, check=False))
        offset += g.degree
    return FiniteGroup(gens, total)


def from_cayley_table(table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Regular permutation representation of an abstract group.

    ``table[a][b]`` is the index of ``a*b``; left multiplication gives the
    permutation attached to ``a``.
    """
    n = len(table)
    perms = [Perm([table[a][b] for b in range(n)]) for a in range(n)]
    return FiniteGroup(perms, n)


def regular_representation(elements: Sequence, mul: Callable) -> tuple[FiniteGroup, dict]:
    """Left-regular permutation group of a finite group given by a product.

    Returns the group (generated by a small generating set) and a map from each
    original element to its permutation.
    """
    pos = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    perm_of = {}
    for a in elements:
        perm_of[a] = Perm([pos[mul(a, b)] for b in elements])
    all_perms = [perm_of[a] for a in elements]
    gens: list[Perm] = []
    closure = {Perm.identity(n)}
    for p in all_perms:
        if p not in closure:
            gens.append(p)
            closure = set(FiniteGroup(gens, n).elements)
    if len(closure) != n:
        raise StructuralError("multiplication does not define a group")
    return FiniteGroup(gens, n), perm_of


# ---------------------------------------------------------------- subgroups

def subgroup_generated(G: FiniteGroup, seed: Iterable[Perm]) -> Subgroup:
    seed = list(seed)
    for g in seed:
        if g not in G:
            raise InputError(f"{g!r} is not an element of the group")
    closure = FiniteGroup(seed, G.degree)
    return Subgroup(G, closure.elements)


def is_subgroup(A: FiniteGroup, G: FiniteGroup) -> bool:
    return A.degree == G.degree and all(a in G for a in A.elements)


def as_subgroup(A: FiniteGroup, G: FiniteGroup) -> Subgroup:
    if isinstance(A, Subgroup) and A.parent is G:
        return A
    if not is_subgroup(A, G):
        raise InputError("not a subgroup of the given group")
    return Subgroup(G, A.elements)


def is_normal(N: FiniteGroup, G: FiniteGroup) -> bool:
    nset = N.element_set()
    for g in G.generators:
        ginv = g.inverse()
        for n in N.generators:
            if g * n * ginv not in nset:
                return False
    return True


def p_part(n: int, p: int) -> int:
    if p == 0:
        return 1
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _is_p_power(n: int, p: int) -> bool:
    if p == 0:
        return n == 1
    while n % p == 0:
        n //= p
    return n == 1


def is_p_group(G: FiniteGroup, p: int) -> bool:
    return _is_p_power(G.order, p)


def p_elements(G: FiniteGroup, p: int) -> list[Perm]:
    """Elements whose order is a power of p (the identity included)."""
    return [g for g in G.elements if _is_p_power(g.order(), p)]


def sylow_p_cyclic(G: FiniteGroup, p: int) -> bool:
    if p == 0:
        return True
    target = p_part(G.order, p)
    return any(g.order() == target for g in G.elements)


def o_p_prime(G: FiniteGroup, p: int) -> Subgroup:
    """Subgroup generated by all elements of p-power order."""
    if p == 0:
        return Subgroup(G, [G.identity])
    return subgroup_generated(G, [g for g in p_elements(G, p) if not g.is_identity()])


def normal_sylow(G: FiniteGroup, p: int) -> Subgroup | None:
    """The Sylow p-subgroup if it is normal (equivalently unique), else None."""
    if p == 0:
        return Subgroup(G, [G.identity])
    pel = p_elements(G, p)
    if len(pel) == p_part(G.order, p):
        return Subgroup(G, pel)
    return None


def cyclic_p_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    """Distinct nontrivial cyclic subgroups generated by single p-elements."""
    seen = set()
    out = []
    for g in p_elements(G, p):
        if g.is_identity():
            continue
        sub = frozenset(FiniteGroup([g]).elements)
        if sub not in seen:
            seen.add(sub)
            out.append(Subgroup(G, sub))
    return out


def left_cosets(G: FiniteGroup, A: FiniteGroup) -> list[list[Perm]]:
    """Left cosets gA in order of first appearance; the first is A itself."""
    seen = set()
    out = []
    for g in G.elements:
        if g in seen:
            continue
        coset = [g * a for a in A.elements]
        seen.update(coset)
        out.append(coset)
    return out


def double_coset_count(H: FiniteGroup, A: FiniteGroup, B: FiniteGroup) -> int:
    seen = set()
    count = 0
    for h in H.elements:
        if h in seen:
            continue
        count += 1
        for a in A.elements:
            ah = a * h
            for b in B.elements:
                seen.add(ah * b)
    return count


# ---------------------------------------------------------------- bisets

class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        a, b = self.find(i), self.find(j)
        if a != b:
            if a < b:
                self.parent[b] = a
            else:
                self.parent[a] = b

    def blocks(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values())


def _compose(a: tuple, b: tuple) -> tuple:
    """Tuple permutation a after b."""
    return tuple(a[j] for j in b)


class Biset:
    """A finite set with commuting left and right group actions.

    ``left_gens[s][b]`` is ``h_s . b`` for the s-th generator of the left group;
    ``right_gens[s][b]`` is ``b . g_s`` for the s-th generator of the right group.
    """

    def __init__(self, size: int, left_group: FiniteGroup, right_group: FiniteGroup,
                 left_gens: Sequence[Sequence[int]], right_gens: Sequence[Sequence[int]],
                 check: bool = True):
        self.size = size
        self.left_group = left_group
        self.right_group = right_group
        self.left_gens = tuple(tuple(int(i) for i in p) for p in left_gens)
        self.right_gens = tuple(tuple(int(i) for i in p) for p in right_gens)
        if check:
            self.validate()

    @classmethod
    def from_functions(cls, size: int, left_group: FiniteGroup, right_group: FiniteGroup,
                       left: Callable[[Perm, int], int], right: Callable[[int, Perm], int],
                       check: bool = True) -> "Biset":
        lg = [[left(h, b) for b in range(size)] for h in left_group.generators]
        rg = [[right(b, g) for b in range(size)] for g in right_group.generators]
        return cls(size, left_group, right_group, lg, rg, check=check)

    def validate(self) -> None:
        m = self.size
        if len(self.left_gens) != len(self.left_group.generators):
            raise StructuralError("left action needs one permutation per generator")
        if len(self.right_gens) != len(self.right_group.generators):
            raise StructuralError("right action needs one permutation per generator")
        for p in self.left_gens + self.right_gens:
            if sorted(p) != list(range(m)):
                raise StructuralError(f"action table {p} is not a permutation of the carrier")
        self._check_extends(self.left_group, self.left_gens, self._left_table, left=True)
        self._check_extends(self.right_group, self.right_gens, self._right_table, left=False)
        for lp in self.left_gens:
            for rp in self.right_gens:
                for b in range(m):
                    if rp[lp[b]] != lp[rp[b]]:
                        raise StructuralError(f"left and right actions do not commute at point {b}")

    @staticmethod
    def _check_extends(G: FiniteGroup, gens, table, left: bool) -> None:
        for i, g in enumerate(G.elements):
            for s, gs in enumerate(G.generators):
                j = G.index(gs * g)
                expect = _compose(gens[s], table[i]) if left else _compose(table[i], gens[s])
                if table[j] != expect:
                    side = "left" if left else "right"
                    raise StructuralError(f"{side} generator images violate a group relation")

    @cached_property
    def _left_table(self) -> list[tuple]:
        ident = tuple(range(self.size))
        return self.left_group.extend(self.left_gens, _compose, ident)

    @cached_property
    def _right_table(self) -> list[tuple]:
        ident = tuple(range(self.size))
        # b.(s x) = (b.s).x, so the table entry for s*x is r_x after r_s.
        return self.right_group.extend(self.right_gens, lambda rs, rx: _compose(rx, rs), ident)

    def left_perm(self, h: Perm) -> tuple:
        return self._left_table[self.left_group.index(h)]

    def right_perm(self, g: Perm) -> tuple:
        return self._right_table[self.right_group.index(g)]

    def left(self, h: Perm, b: int) -> int:
        return self.left_perm(h)[b]

    def right(self, b: int, g: Perm) -> int:
        return self.right_perm(g)[b]

    def restrict_to(self, points: Sequence[int]) -> "Biset":
        """Sub-biset on an invariant subset, renumbered in the given order."""
        pos = {b: i for i, b in enumerate(points)}
        try:
            lg = [[pos[p[b]] for b in points] for p in self.left_gens]
            rg = [[pos[p[b]] for b in points] for p in self.right_gens]
        except KeyError:
            raise InputError("point set is not invariant") from None
        return Biset(len(points), self.left_group, self.right_group, lg, rg, check=False)

    def is_left_transitive(self) -> bool:
        return len(biset_orbits(self, "left")) <= 1

    def is_right_transitive(self) -> bool:
        return len(biset_orbits(self, "right")) <= 1

    def __repr__(self) -> str:
        return (f"<Biset size={self.size} left order={self.left_group.order} "
                f"right order={self.right_group.order}>")


def biset_orbits(B: Biset, side: str = "two-sided") -> list[list[int]]:
    if side not in ("left", "right", "two-sided"):
        raise InputError(f"unknown side {side!r}")
    uf = _UnionFind(B.size)
    perms = []
    if side in ("left", "two-sided"):
        perms += B.left_gens
    if side in ("right", "two-sided"):
        perms += B.right_gens
    for p in perms:
        for b in range(B.size):
            uf.union(b, p[b])
    return uf.blocks()


@dataclass(frozen=True)
class StabilizerChain:
    biset: Biset
    alpha: int
    G0: Subgroup
    G1: Subgroup
    H0: Subgroup
    H1: Subgroup
    _left_witness: dict   # point of H.alpha -> h with h.alpha = point
    _right_witness: dict  # point of alpha.G -> g with alpha.g = point

    def rho(self, g: Perm) -> Perm:
        """Some h in H1 with alpha.g = h.alpha (well defined modulo H0)."""
        point = self.biset.right(self.alpha, g)
        try:
            return self._left_witness[point]
        except KeyError:
            raise InputError("element does not lie in G1") from None

    def rho_inverse(self, h: Perm) -> Perm:
        """Some g in G1 with h.alpha = alpha.g."""
        point = self.biset.left(h, self.alpha)
        try:
            return self._right_witness[point]
        except KeyError:
            raise InputError("element does not lie in H1") from None


def stabilizer_chain(B: Biset, alpha: int) -> StabilizerChain:
    if not 0 <= alpha < B.size:
        raise InputError("alpha is not a carrier point")
    H, G = B.left_group, B.right_group
    left_w: dict[int, Perm] = {}
    for h in H.elements:
        left_w.setdefault(B.left(h, alpha), h)
    right_w: dict[int, Perm] = {}
    for g in G.elements:
        right_w.setdefault(B.right(alpha, g), g)
    G0 = Subgroup(G, [g for g in G.elements if B.right(alpha, g) == alpha])
    G1 = Subgroup(G, [g for g in G.elements if B.right(alpha, g) in left_w])
    H0 = Subgroup(H, [h for h in H.elements if B.left(h, alpha) == alpha])
    H1 = Subgroup(H, [h for h in H.elements if B.left(h, alpha) in right_w])
    if not (is_normal(G0, G1) and is_normal(H0, H1)):
        raise StructuralError("stabilizers are not normal in the orbit stabilizers")
    if G1.order * H0.order != G0.order * H1.order:
        raise StructuralError("stabilizer quotients have different orders")
    return StabilizerChain(B, alpha, G0, G1, H0, H1, left_w, right_w)


def biset_product(B2: Biset, B1: Biset) -> Biset:
    """Amalgamated product B2 x_H B1 for B2 over (L, H) and B1 over (H, G)."""
    H = B2.right_group
    if not H.same_as(B1.left_group):
        raise InputError("middle groups of the biset product differ")
    m1 = B1.size
    uf = _UnionFind(B2.size * m1)
    for h in H.generators:
        r = B2.right_perm(h)
        l = B1.left_perm(h)
        for b2 in range(B2.size):
            for b1 in range(m1):
                uf.union(r[b2] * m1 + b1, b2 * m1 + l[b1])
    blocks = uf.blocks()
    cls = {}
    for i, blk in enumerate(blocks):
        for t in blk:
            cls[t] = i
    reps = [blk[0] for blk in blocks]
    lg = [[cls[p[t // m1] * m1 + t % m1] for t in reps] for p in B2.left_gens]
    rg = [[cls[(t // m1) * m1 + p[t % m1]] for t in reps] for p in B1.right_gens]
    return Biset(len(blocks), B2.left_group, B1.right_group, lg, rg)


def coset_biset(H: FiniteGroup, G: FiniteGroup, K: FiniteGroup) -> Biset:
    """Transitive (H, G)-biset on the cosets of K <= H x G.

    ``K`` is a subgroup of ``direct_product(H, G)``; the pair (h, g) acts on a
    coset by left multiplication with (h, g^-1), giving a left H- and right
    G-action.
    """
    HG = direct_product(H, G)
    if not is_subgroup(K, HG):
        raise InputError("K must be a subgroup of direct_product(H, G)")
    cosets = left_cosets(HG, K)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    reps = [c[0] for c in cosets]
    dH = H.degree

    def embed(h: Perm | None, g: Perm | None) -> Perm:
        images = list(range(HG.degree))
        if h is not None:
            images[:dH] = h.images
        if g is not None:
            images[dH:] = [dH + j for j in g.images]
        return Perm(images, check=False)

    lg = [[where[embed(h, None) * r] for r in reps] for h in H.generators]
    rg = [[where[embed(None, g.inverse()) * r] for r in reps] for g in G.generators]
    return Biset(len(cosets), H, G, lg, rg)
