"""Finite categories as composition tables, EI quivers and the free EI cover.

A :class:`FiniteCategory` numbers its morphisms ``0..N-1``.  ``comp[g, f]`` is
the id of ``g o f`` (apply f first) or -1 when the pair is not composable.
Every morphism also carries a unique string label, preserved by
subcategory constructions so that morphisms can be matched across them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from .errors import InputError, StructuralError
from .groups import Biset, FiniteGroup, Subgroup, _UnionFind, biset_orbits, regular_representation


@dataclass(frozen=True)
class AutGroup:
    """C(x,x) realised as a permutation group, with the dictionary both ways."""
    obj: Hashable
    group: FiniteGroup
    perm_of: dict  # morphism id -> Perm
    mor_of: dict   # Perm -> morphism id


@dataclass(frozen=True)
class EIReport:
    is_ei: bool
    is_connected: bool
    is_skeletal: bool


class FiniteCategory:
    def __init__(self, objects: Sequence, src: Sequence, tgt: Sequence, identities: dict,
                 comp: np.ndarray, labels: Sequence[str] | None = None, origin: Sequence | None = None,
                 check: bool = True):
        self.objects = list(objects)
        if len(set(self.objects)) != len(self.objects):
            raise InputError("duplicate object names")
        self.src = list(src)
        self.tgt = list(tgt)
        self.identities = dict(identities)
        self.comp = np.asarray(comp, dtype=np.int64)
        n = len(self.src)
        self.labels = [str(i) for i in range(n)] if labels is None else [str(l) for l in labels]
        if len(set(self.labels)) != n:
            raise InputError("morphism labels must be unique")
        self.origin = list(origin) if origin is not None else [None] * n
        self._hom: dict = {}
        for i in range(n):
            self._hom.setdefault((self.src[i], self.tgt[i]), []).append(i)
        if check:
            self.check_structure()

    # ------------------------------------------------------------ construction

    @classmethod
    def from_triples(cls, objects: Sequence, morphisms: Sequence[tuple[str, Hashable, Hashable]],
                     identities: dict, triples: Iterable[tuple[str, str, str]]) -> "FiniteCategory":
        """Build from (label, source, target) morphisms and composition triples [f, g, g o f]."""
        index = {}
        for i, (label, s, t) in enumerate(morphisms):
            if label in index:
                raise InputError(f"duplicate morphism {label!r}")
            if s not in objects or t not in objects:
                raise InputError(f"morphism {label!r} has an unknown endpoint")
            index[label] = i
        n = len(morphisms)
        src = [m[1] for m in morphisms]
        tgt = [m[2] for m in morphisms]
        ids = {}
        for x in objects:
            if x not in identities:
                raise InputError(f"object {x!r} has no identity")
            lab = identities[x]
            if lab not in index:
                raise InputError(f"identity {lab!r} is not a morphism")
            ids[x] = index[lab]
        comp = -np.ones((n, n), dtype=np.int64)
        for f, g, gf in triples:
            for lab in (f, g, gf):
                if lab not in index:
                    raise InputError(f"unknown morphism {lab!r} in composition table")
            fi, gi, hi = index[f], index[g], index[gf]
            if tgt[fi] != src[gi]:
                raise StructuralError(f"composition {g} o {f} is not composable")
            if comp[gi, fi] >= 0 and comp[gi, fi] != hi:
                raise StructuralError(f"composition {g} o {f} defined twice")
            comp[gi, fi] = hi
        # identity composites may be omitted
        for i in range(n):
            if comp[i, ids[src[i]]] < 0:
                comp[i, ids[src[i]]] = i
            if comp[ids[tgt[i]], i] < 0:
                comp[ids[tgt[i]], i] = i
        return cls(objects, src, tgt, ids, comp, labels=[m[0] for m in morphisms])

    def check_structure(self) -> None:
        n = len(self.src)
        comp = self.comp
        if comp.shape != (n, n):
            raise StructuralError("composition table has the wrong shape")
        for x in self.objects:
            e = self.identities.get(x)
            if e is None or self.src[e] != x or self.tgt[e] != x:
                raise StructuralError(f"bad identity for object {x!r}")
        for g in range(n):
            for f in range(n):
                h = comp[g, f]
                composable = self.tgt[f] == self.src[g]
                if composable and h < 0:
                    raise StructuralError(f"composite {self.labels[g]} o {self.labels[f]} missing")
                if not composable and h >= 0:
                    raise StructuralError(f"composite {self.labels[g]} o {self.labels[f]} of non-composable pair")
                if composable and (self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]):
                    raise StructuralError(f"composite {self.labels[g]} o {self.labels[f]} has wrong endpoints")
        for f in range(n):
            if comp[self.identities[self.tgt[f]], f] != f or comp[f, self.identities[self.src[f]]] != f:
                raise StructuralError(f"identity law fails for {self.labels[f]}")
        for g in range(n):
            for f in self.hom_into(self.src[g]):
                gf = comp[g, f]
                for h in self.hom_from(self.tgt[g]):
                    if comp[h, gf] != comp[comp[h, g], f]:
                        raise StructuralError(
                            "associativity fails for "
                            f"({self.labels[h]}, {self.labels[g]}, {self.labels[f]})")

    # ------------------------------------------------------------ access

    @property
    def num_morphisms(self) -> int:
        return len(self.src)

    def hom(self, x, y) -> list[int]:
        return self._hom.get((x, y), [])

    def hom_into(self, y) -> list[int]:
        return [i for i in range(len(self.src)) if self.tgt[i] == y]

    def hom_from(self, x) -> list[int]:
        return [i for i in range(len(self.src)) if self.src[i] == x]

    def compose(self, g: int, f: int) -> int:
        h = int(self.comp[g, f])
        if h < 0:
            raise InputError(f"{self.labels[g]} o {self.labels[f]} is not composable")
        return h

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InputError(f"no morphism labelled {label!r}") from None

    @cached_property
    def _label_index(self) -> dict:
        return {l: i for i, l in enumerate(self.labels)}

    @cached_property
    def is_iso(self) -> list[bool]:
        out = []
        for f in range(len(self.src)):
            ex, ey = self.identities[self.src[f]], self.identities[self.tgt[f]]
            out.append(any(self.comp[g, f] == ex and self.comp[f, g] == ey
                           for g in self.hom(self.tgt[f], self.src[f])))
        return out

    def aut_group(self, x) -> AutGroup:
        cache = self.__dict__.setdefault("_aut_cache", {})
        if x not in cache:
            mors = self.hom(x, x)
            if not all(self.is_iso[m] for m in mors):
                raise InputError(f"End({x!r}) is not a group")
            parent = self.__dict__.get("_parent")
            if parent is not None:
                # automorphisms of a subcategory form a subgroup of the parent's
                P, keep = parent
                pa = P.aut_group(x)
                perm_of = {m: pa.perm_of[keep[m]] for m in mors}
                if len(mors) == pa.group.order:
                    group = pa.group
                else:
                    group = Subgroup(pa.group, perm_of.values())
                cache[x] = AutGroup(x, group, perm_of, {p: m for m, p in perm_of.items()})
                return cache[x]
            e = self.identities[x]
            ordered = [e] + [m for m in mors if m != e]
            G, perm_of = regular_representation(ordered, lambda a, b: int(self.comp[a, b]))
            cache[x] = AutGroup(x, G, perm_of, {p: m for m, p in perm_of.items()})
        return cache[x]

    def __repr__(self) -> str:
        return f"<FiniteCategory objects={self.objects} morphisms={len(self.src)}>"


# ---------------------------------------------------------------- validation

def validate_ei(C: FiniteCategory) -> EIReport:
    C.check_structure()
    is_ei = all(C.is_iso[m] for x in C.objects for m in C.hom(x, x))
    return EIReport(is_ei, is_connected(C), is_skeletal(C))


def connected_components(C: FiniteCategory) -> list[list]:
    pos = {x: i for i, x in enumerate(C.objects)}
    uf = _UnionFind(len(C.objects))
    for f in range(C.num_morphisms):
        uf.union(pos[C.src[f]], pos[C.tgt[f]])
    return [[C.objects[i] for i in blk] for blk in uf.blocks()]


def is_connected(C: FiniteCategory) -> bool:
    return len(connected_components(C)) <= 1


def is_skeletal(C: FiniteCategory) -> bool:
    return not any(C.is_iso[f] and C.src[f] != C.tgt[f] for f in range(C.num_morphisms))


def skeleton_objects(C: FiniteCategory) -> list:
    """One object from each isomorphism class, keeping the first in order."""
    chosen = []
    for x in C.objects:
        if not any(C.is_iso[f] for y in chosen for f in C.hom(x, y)):
            chosen.append(x)
    return chosen


def _require_ei(C: FiniteCategory, skeletal: bool = True) -> None:
    if not all(C.is_iso[m] for x in C.objects for m in C.hom(x, x)):
        raise InputError("category is not EI")
    if skeletal and not is_skeletal(C):
        raise InputError("category is not skeletal")


# ---------------------------------------------------------------- bisets of a category

def hom_biset(C: FiniteCategory, x, y) -> Biset:
    if x == y:
        raise InputError("hom_biset needs distinct objects")
    carrier = C.hom(x, y)
    pos = {m: i for i, m in enumerate(carrier)}
    H, G = C.aut_group(y), C.aut_group(x)
    lg = [[pos[int(C.comp[H.mor_of[h], m])] for m in carrier] for h in H.group.generators]
    rg = [[pos[int(C.comp[m, G.mor_of[g]])] for m in carrier] for g in G.group.generators]
    return Biset(len(carrier), H.group, G.group, lg, rg, check=False)


def two_sided_orbits(C: FiniteCategory, x, y) -> list[list[int]]:
    """Two-sided orbits of C(x,y) as lists of morphism ids, ordered by least id."""
    carrier = C.hom(x, y)
    if not carrier:
        return []
    B = hom_biset(C, x, y)
    return [[carrier[i] for i in blk] for blk in biset_orbits(B, "two-sided")]


# ---------------------------------------------------------------- factorization

def _factor_witness(C: FiniteCategory) -> dict:
    cache = C.__dict__.get("_factor_witness")
    if cache is None:
        cache = {}
        iso = C.is_iso
        for g in range(C.num_morphisms):
            if iso[g]:
                continue
            for f in C.hom_into(C.src[g]):
                if iso[f]:
                    continue
                h = int(C.comp[g, f])
                cache.setdefault(h, (g, f))
        C.__dict__["_factor_witness"] = cache
    return cache


def unfactorizables(C: FiniteCategory) -> list[int]:
    _require_ei(C, skeletal=False)
    wit = _factor_witness(C)
    return [a for a in range(C.num_morphisms) if not C.is_iso[a] and a not in wit]


def factorize(C: FiniteCategory, alpha: int) -> list[int]:
    """Unfactorizable morphisms u_1, ..., u_n (in order of application) with composite alpha."""
    if C.is_iso[alpha]:
        raise InputError("isomorphisms have no factorization into unfactorizables")
    wit = _factor_witness(C)
    if alpha not in wit:
        return [alpha]
    g, f = wit[alpha]
    return factorize(C, f) + factorize(C, g)


def compose_list(C: FiniteCategory, morphisms: Sequence[int]) -> int:
    out = morphisms[0]
    for m in morphisms[1:]:
        out = C.compose(m, out)
    return out


# ---------------------------------------------------------------- quivers and posets

@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (source, target) pairs, repeated for multiple arrows

    def __post_init__(self):
        vs = set(self.vertices)
        for s, t in self.arrows:
            if s not in vs or t not in vs:
                raise InputError("arrow endpoint is not a vertex")

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        out = {v: [] for v in self.vertices}
        for s, t in self.arrows:
            indeg[t] += 1
            out[s].append(t)
        ready = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for t in out[v]:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
        return seen == len(self.vertices)

    def reachability(self) -> set:
        reach = {(v, v) for v in self.vertices}
        changed = True
        while changed:
            changed = False
            for s, t in self.arrows:
                for (a, b) in list(reach):
                    if b == s and (a, t) not in reach:
                        reach.add((a, t))
                        changed = True
        return reach


@dataclass(frozen=True)
class Poset:
    elements: tuple
    leq: frozenset  # pairs (a, b) with a <= b

    def __post_init__(self):
        els = self.elements
        for a in els:
            if (a, a) not in self.leq:
                raise InputError("poset relation is not reflexive")
        for a, b in self.leq:
            if a != b and (b, a) in self.leq:
                raise InputError("poset relation is not antisymmetric")
            for c in els:
                if (b, c) in self.leq and (a, c) not in self.leq:
                    raise InputError("poset relation is not transitive")


@dataclass(frozen=True)
class UnderlyingData:
    quiver: Quiver
    poset: Poset
    representatives: tuple  # morphism id per quiver arrow
    orbits: tuple           # the orbit (morphism ids) of each representative


def underlying_quiver_and_poset(C: FiniteCategory) -> UnderlyingData:
    _require_ei(C, skeletal=True)
    unf = set(unfactorizables(C))
    arrows, reps, orbits = [], [], []
    for x in C.objects:
        for y in C.objects:
            if x == y:
                continue
            for orb in two_sided_orbits(C, x, y):
                if orb[0] in unf:
                    arrows.append((x, y))
                    reps.append(orb[0])
                    orbits.append(tuple(orb))
    leq = frozenset((x, y) for x in C.objects for y in C.objects if C.hom(x, y))
    Q = Quiver(tuple(C.objects), tuple(arrows))
    return UnderlyingData(Q, Poset(tuple(C.objects), leq), tuple(reps), tuple(orbits))


# ---------------------------------------------------------------- EI quivers

@dataclass(frozen=True)
class Arrow:
    source: Hashable
    target: Hashable
    biset: Biset
    name: str | None = None


@dataclass
class EIQuiver:
    objects: list
    aut: dict
    arrows: list = field(default_factory=list)

    def __post_init__(self):
        for x in self.objects:
            if x not in self.aut:
                raise InputError(f"object {x!r} has no automorphism group")
        for a in self.arrows:
            if a.source not in self.aut or a.target not in self.aut:
                raise InputError("arrow endpoint is not an object")
            if a.source == a.target:
                raise InputError("arrows must join distinct objects")
            if not a.biset.left_group.same_as(self.aut[a.target]):
                raise InputError("arrow biset's left group must be the target's automorphism group")
            if not a.biset.right_group.same_as(self.aut[a.source]):
                raise InputError("arrow biset's right group must be the source's automorphism group")
        if not Quiver(tuple(self.objects), tuple((a.source, a.target) for a in self.arrows)).is_acyclic():
            raise InputError("EI quiver has a directed cycle")

    def paths(self) -> list[tuple[int, ...]]:
        """All directed paths of positive length, as tuples of arrow indices."""
        out_arrows = {x: [] for x in self.objects}
        for i, a in enumerate(self.arrows):
            out_arrows[a.source].append(i)
        result = []

        def extend(path):
            result.append(path)
            for j in out_arrows[self.arrows[path[-1]].target]:
                extend(path + (j,))

        for i in range(len(self.arrows)):
            extend((i,))
        return result


class _PathClasses:
    """Classes of tuples (b_1, ..., b_n) for a path a_1 ... a_n under the amalgamation."""

    def __init__(self, Q: EIQuiver, path: tuple[int, ...]):
        bisets = [Q.arrows[i].biset for i in path]
        sizes = [B.size for B in bisets]
        self.path = path
        self.bisets = bisets
        self.sizes = sizes
        total = int(np.prod(sizes)) if sizes else 0
        strides = [1] * len(sizes)
        for i in range(len(sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * sizes[i + 1]
        self.strides = strides
        uf = _UnionFind(total)
        for k in range(len(path) - 1):
            mid = Q.aut[Q.arrows[path[k]].target]
            for h in mid.generators:
                lh = bisets[k].left_perm(h)
                rh = bisets[k + 1].right_perm(h)
                for t in range(total):
                    tup = self.decode(t)
                    a = list(tup)
                    b = list(tup)
                    a[k + 1] = rh[tup[k + 1]]
                    b[k] = lh[tup[k]]
                    uf.union(self.encode(a), self.encode(b))
        blocks = uf.blocks()
        self.class_of = [0] * total
        for c, blk in enumerate(blocks):
            for t in blk:
                self.class_of[t] = c
        self.reps = [self.decode(blk[0]) for blk in blocks]

    def encode(self, tup) -> int:
        return int(sum(b * s for b, s in zip(tup, self.strides)))

    def decode(self, t: int) -> tuple:
        return tuple((t // s) % n for s, n in zip(self.strides, self.sizes))

    def cls(self, tup) -> int:
        return self.class_of[self.encode(tup)]


def free_ei_cover(Q: EIQuiver) -> FiniteCategory:
    """The free EI category generated by an EI quiver."""
    labels, src, tgt, origin = [], [], [], []
    identities = {}
    aut_ids = {}
    for x in Q.objects:
        G = Q.aut[x]
        for i, g in enumerate(G.elements):
            aut_ids[(x, g)] = len(labels)
            if i == 0:
                identities[x] = len(labels)
            labels.append(f"1_{x}" if i == 0 else f"{x}:g{i}")
            src.append(x)
            tgt.append(x)
            origin.append(("aut", x, g))
    paths = Q.paths()
    path_index = {p: k for k, p in enumerate(paths)}
    classes = [_PathClasses(Q, p) for p in paths]
    path_ids = []
    for k, (p, pc) in enumerate(zip(paths, classes)):
        x, y = Q.arrows[p[0]].source, Q.arrows[p[-1]].target
        ids = []
        single = len(paths) == 1 or sum(1 for q in paths if Q.arrows[q[0]].source == x
                                        and Q.arrows[q[-1]].target == y) == 1
        for c, rep in enumerate(pc.reps):
            ids.append(len(labels))
            name = Q.arrows[p[0]].name if len(p) == 1 and Q.arrows[p[0]].name else None
            if name:
                labels.append(f"{name}.{c}")
            elif single:
                labels.append(f"{x}->{y}.{c}")
            else:
                labels.append(f"{x}->{y}#{k}.{c}")
            src.append(x)
            tgt.append(y)
            origin.append(("path", p, rep))
        path_ids.append(ids)
    n = len(labels)
    comp = -np.ones((n, n), dtype=np.int64)
    for g in range(n):
        for f in range(n):
            if tgt[f] != src[g]:
                continue
            og, of = origin[g], origin[f]
            if og[0] == "aut" and of[0] == "aut":
                comp[g, f] = aut_ids[(og[1], og[2] * of[2])]
            elif og[0] == "aut":
                p, rep = of[1], list(of[2])
                k = path_index[p]
                rep[-1] = classes[k].bisets[-1].left(og[2], rep[-1])
                comp[g, f] = path_ids[k][classes[k].cls(rep)]
            elif of[0] == "aut":
                p, rep = og[1], list(og[2])
                k = path_index[p]
                rep[0] = classes[k].bisets[0].right(rep[0], of[2])
                comp[g, f] = path_ids[k][classes[k].cls(rep)]
            else:
                p = of[1] + og[1]
                k = path_index[p]
                comp[g, f] = path_ids[k][classes[k].cls(tuple(of[2]) + tuple(og[2]))]
    return FiniteCategory(Q.objects, src, tgt, identities, comp, labels=labels, origin=origin, check=False)


def underlying_ei_quiver(C: FiniteCategory) -> tuple[EIQuiver, list[list[int]]]:
    """The EI quiver of a skeletal EI category and, per arrow, the morphism ids of its carrier."""
    data = underlying_quiver_and_poset(C)
    aut = {x: C.aut_group(x).group for x in C.objects}
    arrows, carriers = [], []
    for (x, y), orb in zip(data.quiver.arrows, data.orbits):
        full = C.hom(x, y)
        pos = {m: i for i, m in enumerate(full)}
        B = hom_biset(C, x, y).restrict_to([pos[m] for m in orb])
        arrows.append(Arrow(x, y, B))
        carriers.append(list(orb))
    return EIQuiver(list(C.objects), aut, arrows), carriers


def cover_functor(C: FiniteCategory) -> tuple[FiniteCategory, list[int]]:
    """The free cover of C and the canonical functor on morphisms (cover id -> C id)."""
    Q, carriers = underlying_ei_quiver(C)
    cover = free_ei_cover(Q)
    fmap = []
    for o in cover.origin:
        if o[0] == "aut":
            fmap.append(C.aut_group(o[1]).mor_of[o[2]])
        else:
            mors = [carriers[a][b] for a, b in zip(o[1], o[2])]
            fmap.append(compose_list(C, mors))
    return cover, fmap


def is_free(C: FiniteCategory) -> bool:
    _require_ei(C, skeletal=True)
    cover, fmap = cover_functor(C)
    return len(set(fmap)) == len(fmap) == C.num_morphisms


# ---------------------------------------------------------------- derived categories

def full_subcategory(C: FiniteCategory, objects: Iterable) -> FiniteCategory:
    objs = [x for x in C.objects if x in set(objects)]
    if not objs:
        raise InputError("a full subcategory needs at least one object")
    keep = [i for i in range(C.num_morphisms) if C.src[i] in objs and C.tgt[i] in objs]
    return _sub(C, objs, keep)


def _sub(C: FiniteCategory, objs: list, keep: list[int]) -> FiniteCategory:
    new = {old: i for i, old in enumerate(keep)}
    n = len(keep)
    comp = -np.ones((n, n), dtype=np.int64)
    for gi, g in enumerate(keep):
        for fi, f in enumerate(keep):
            h = C.comp[g, f]
            if h >= 0:
                if int(h) not in new:
                    raise InputError("morphism set is not closed under composition")
                comp[gi, fi] = new[int(h)]
    ids = {x: new[C.identities[x]] for x in objs}
    D = FiniteCategory(objs, [C.src[i] for i in keep], [C.tgt[i] for i in keep], ids, comp,
                       labels=[C.labels[i] for i in keep], origin=[C.origin[i] for i in keep],
                       check=False)
    D._parent = (C, list(keep))
    return D


def subcategory(C: FiniteCategory, labels: Iterable[str]) -> FiniteCategory:
    """Subcategory on the given morphisms (must contain identities and be closed)."""
    keep = sorted({C.index_of(l) for l in labels})
    objs = [x for x in C.objects if any(C.src[i] == x or C.tgt[i] == x for i in keep)]
    for x in objs:
        if C.identities[x] not in keep:
            raise InputError(f"subcategory misses the identity of {x!r}")
    return _sub(C, objs, keep)


def opposite(C: FiniteCategory) -> FiniteCategory:
    origin = [("op", o) for o in C.origin]
    return FiniteCategory(C.objects, C.tgt, C.src, C.identities, C.comp.T.copy(), labels=C.labels,
                          origin=origin, check=False)


def quotient_orbit_collapse(C: FiniteCategory) -> FiniteCategory:
    """Identify morphisms in the same two-sided orbit; automorphisms become identities."""
    _require_ei(C, skeletal=True)
    cls = {}
    reps = []
    for x in C.objects:
        for m in C.hom(x, x):
            cls[m] = ("id", x)
    for x in C.objects:
        for y in C.objects:
            if x != y:
                for orb in two_sided_orbits(C, x, y):
                    for m in orb:
                        cls[m] = orb[0]
                    reps.append(orb[0])
    return _collapse(C, cls, reps)


def poset_collapse(C: FiniteCategory) -> FiniteCategory:
    """Collapse every hom-set to a single morphism (the underlying poset category)."""
    _require_ei(C, skeletal=True)
    cls = {}
    reps = []
    for x in C.objects:
        for m in C.hom(x, x):
            cls[m] = ("id", x)
        for y in C.objects:
            hs = C.hom(x, y)
            if x != y and hs:
                for m in hs:
                    cls[m] = hs[0]
                reps.append(hs[0])
    return _collapse(C, cls, reps)


def _collapse(C: FiniteCategory, cls: dict, reps: list[int]) -> FiniteCategory:
    keys = [("id", x) for x in C.objects] + reps
    new = {k: i for i, k in enumerate(keys)}
    n = len(keys)
    src = [x for x in C.objects] + [C.src[r] for r in reps]
    tgt = [x for x in C.objects] + [C.tgt[r] for r in reps]
    labels = [C.labels[C.identities[x]] for x in C.objects] + [C.labels[r] for r in reps]
    comp = -np.ones((n, n), dtype=np.int64)
    for g in range(C.num_morphisms):
        for f in C.hom_into(C.src[g]):
            h = int(C.comp[g, f])
            gi, fi, hi = new[cls[g]], new[cls[f]], new[cls[h]]
            if comp[gi, fi] >= 0 and comp[gi, fi] != hi:
                raise StructuralError("quotient composition is not well defined")
            comp[gi, fi] = hi
    ids = {x: new[("id", x)] for x in C.objects}
    return FiniteCategory(C.objects, src, tgt, ids, comp, labels=labels, check=True)


# ---------------------------------------------------------------- standard examples

def group_category(G: FiniteGroup, name="x") -> FiniteCategory:
    return free_ei_cover(EIQuiver([name], {name: G}, []))


def poset_category(elements: Sequence, relations: Iterable[tuple]) -> FiniteCategory:
    """Category of a finite poset given by generating relations a <= b."""
    els = list(elements)
    leq = {(a, a) for a in els} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    for a, b in leq:
        if a != b and (b, a) in leq:
            raise InputError("relations contain a cycle")
    pairs = sorted(leq, key=lambda ab: (els.index(ab[0]), els.index(ab[1])))
    index = {ab: i for i, ab in enumerate(pairs)}
    n = len(pairs)
    comp = -np.ones((n, n), dtype=np.int64)
    for (b, c), g in index.items():
        for (a, b2), f in index.items():
            if b2 == b:
                comp[g, f] = index[(a, c)]
    labels = [f"1_{a}" if a == b else f"{a}<{b}" for a, b in pairs]
    ids = {a: index[(a, a)] for a in els}
    return FiniteCategory(els, [a for a, _ in pairs], [b for _, b in pairs], ids, comp, labels=labels)


def trivial_arrow(G: FiniteGroup, H: FiniteGroup) -> Biset:
    """Singleton (H, G)-biset."""
    return Biset(1, H, G, [[0] for _ in H.generators], [[0] for _ in G.generators])


def two_object_category(G: FiniteGroup, H: FiniteGroup, B: Biset, x="x", y="y", name=None) -> FiniteCategory:
    """Category with C(x,x) = G, C(y,y) = H and C(x,y) = B."""
    return free_ei_cover(EIQuiver([x, y], {x: G, y: H}, [Arrow(x, y, B, name)]))


def free_category(vertices: Sequence, arrows: Sequence[tuple]) -> FiniteCategory:
    """Free category of an acyclic quiver (trivial automorphism groups)."""
    from .groups import trivial_group
    T = trivial_group()
    aut = {v: T for v in vertices}
    arr = [Arrow(s, t, trivial_arrow(T, T), name) for (s, t, *rest) in arrows
           for name in [rest[0] if rest else None]]
    return free_ei_cover(EIQuiver(list(vertices), aut, arr))
