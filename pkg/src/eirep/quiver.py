"""Ordinary quivers of category algebras in invertible characteristic, and Dynkin recognition."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .category import FiniteCategory, Quiver, _require_ei, hom_biset, is_free, underlying_quiver_and_poset
from .errors import InputError, PreconditionError
from .fields import Field, GF
from .groups import stabilizer_chain
from .modrep import (chop, dedupe, hom_dim, inflate_transport, permutation_module, restrict, simple_modules,
                     splitting_prime)
from .verdict import CITATIONS, FAIL, NOT_APPLICABLE, PASS, CriterionResult


@dataclass(frozen=True)
class Vertex:
    obj: object
    index: int   # position in the object's list of simple modules, 0 = trivial
    dim: int
    name: str

    def __str__(self) -> str:
        return f"{self.obj}:{self.name}"


@dataclass
class OrdinaryQuiver:
    vertices: list
    arrows: Counter = field(default_factory=Counter)  # (i, j) vertex indices -> multiplicity
    field_used: Field | None = None
    simples: dict = field(default_factory=dict)  # object -> list of simple modules

    @property
    def num_arrows(self) -> int:
        return sum(self.arrows.values())

    def as_quiver(self) -> Quiver:
        arrows = []
        for (i, j), m in sorted(self.arrows.items()):
            arrows += [(i, j)] * m
        return Quiver(tuple(range(len(self.vertices))), tuple(arrows))

    def vertex_index(self, obj, index: int) -> int:
        for i, v in enumerate(self.vertices):
            if v.obj == obj and v.index == index:
                return i
        raise InputError(f"no vertex for simple {index} of {obj!r}")

    def edge_list(self) -> list[tuple[str, str, int]]:
        return [(str(self.vertices[i]), str(self.vertices[j]), m) for (i, j), m in sorted(self.arrows.items())]


def _check_invertible(C: FiniteCategory, F: Field) -> None:
    for x in C.objects:
        n = C.aut_group(x).group.order
        if n % F.p == 0:
            raise PreconditionError(f"|Aut({x})| = {n} is not invertible in characteristic {F.p}")


def default_field(C: FiniteCategory, forbidden_char: int = 0) -> Field:
    groups = [C.aut_group(x).group for x in C.objects]
    return GF(splitting_prime(groups, forbidden_char))


def ordinary_quiver(C: FiniteCategory, F: Field | None = None, seed: int = 0,
                    representatives: dict | None = None) -> OrdinaryQuiver:
    """Ordinary quiver of kC for a skeletal EI category whose automorphism orders are invertible in F.

    ``representatives`` optionally maps an underlying-quiver arrow index to the
    morphism id used in place of the default orbit representative.
    """
    _require_ei(C, skeletal=True)
    if F is None:
        F = default_field(C)
    _check_invertible(C, F)
    simples = {x: simple_modules(F, C.aut_group(x).group, seed=seed) for x in C.objects}
    vertices = [Vertex(x, i, S.dim, S.name) for x in C.objects for i, S in enumerate(simples[x])]
    Q = OrdinaryQuiver(vertices, Counter(), F, simples)
    data = underlying_quiver_and_poset(C)
    for k, ((x, y), alpha) in enumerate(zip(data.quiver.arrows, data.representatives)):
        if representatives and k in representatives:
            alpha = representatives[k]
            if alpha not in data.orbits[k]:
                raise InputError("replacement representative lies in a different orbit")
        for (i, j), m in arrow_multiplicities(C, x, y, alpha, simples[x], simples[y], seed).items():
            if m:
                Q.arrows[(Q.vertex_index(x, i), Q.vertex_index(y, j))] += m
    return Q


def arrow_multiplicities(C: FiniteCategory, x, y, alpha: int, simples_x, simples_y, seed: int = 0) -> dict:
    """Number of arrows V_i -> W_j contributed by the orbit of alpha, summed over the U_r."""
    B = hom_biset(C, x, y)
    chain = stabilizer_chain(B, C.hom(x, y).index(alpha))
    F = simples_x[0].field
    perm = permutation_module(F, chain.G1, chain.G0)
    us = [U for U, _ in dedupe(chop(perm, seed=seed), seed=seed)]
    out = {}
    ends = [hom_dim(U, U) for U in us]
    e = [[hom_dim(U, restrict(V, chain.G1)) // d for U, d in zip(us, ends)] for V in simples_x]
    moved = [inflate_transport(U, chain.H1, chain.rho_inverse) for U in us]
    f = [[hom_dim(U, restrict(W, chain.H1)) // d for U, d in zip(moved, ends)] for W in simples_y]
    for i in range(len(simples_x)):
        for j in range(len(simples_y)):
            out[(i, j)] = sum(a * b for a, b in zip(e[i], f[j]))
    return out


# ---------------------------------------------------------------- Dynkin diagrams

@dataclass
class ComponentReport:
    vertices: list
    kind: str           # "A5", "D4", "E6", ... or "not-Dynkin"
    witness: object = None

    @property
    def is_dynkin(self) -> bool:
        return self.kind != "not-Dynkin"


@dataclass
class DynkinReport:
    components: list

    @property
    def all_dynkin(self) -> bool:
        return all(c.is_dynkin for c in self.components)

    @property
    def kinds(self) -> list[str]:
        return [c.kind for c in self.components]

    def first_violation(self) -> ComponentReport | None:
        return next((c for c in self.components if not c.is_dynkin), None)


def _find_cycle(vertices, adj) -> list:
    parent = {}
    for root in vertices:
        if root in parent:
            continue
        parent[root] = None
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w == parent[v]:
                    continue
                if w in parent:
                    path_v, path_w = [v], [w]
                    while path_v[-1] is not None:
                        path_v.append(parent[path_v[-1]])
                    while path_w[-1] is not None:
                        path_w.append(parent[path_w[-1]])
                    common = next(a for a in path_v if a in set(path_w))
                    return path_v[:path_v.index(common) + 1] + path_w[:path_w.index(common)][::-1]
                parent[w] = v
                stack.append(w)
    return []


def _classify_component(vs: list, edges: Counter) -> ComponentReport:
    for (a, b), m in edges.items():
        if a == b:
            return ComponentReport(vs, "not-Dynkin", {"loop": a})
        if m > 1:
            return ComponentReport(vs, "not-Dynkin", {"multi-edge": (a, b), "count": m})
    adj = {v: [] for v in vs}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if len(edges) >= len(vs):
        return ComponentReport(vs, "not-Dynkin", {"cycle": _find_cycle(vs, adj)})
    n = len(vs)
    for v in vs:
        if len(adj[v]) >= 4:
            return ComponentReport(vs, "not-Dynkin", {"star": [v] + adj[v][:4]})
    branch = [v for v in vs if len(adj[v]) == 3]
    if not branch:
        return ComponentReport(vs, f"A{n}")
    if len(branch) > 1:
        return ComponentReport(vs, "not-Dynkin", {"branch-vertices": branch})
    c = branch[0]
    legs = []
    for start in adj[c]:
        leg, prev, cur = [start], c, start
        while len(adj[cur]) == 2:
            nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
            prev, cur = cur, nxt
            leg.append(cur)
        legs.append(leg)
    legs.sort(key=len)
    a, b, l3 = (len(l) for l in legs)
    if a == 1 and b == 1:
        return ComponentReport(vs, f"D{n}")
    if a == 1 and b == 2 and l3 in (2, 3, 4):
        return ComponentReport(vs, f"E{n}")
    # smallest Euclidean subdiagram: E~6 (2,2,2), E~7 (1,3,3), E~8 (1,2,5)
    if a >= 2:
        wit = [c] + legs[0][:2] + legs[1][:2] + legs[2][:2]
    elif b >= 3:
        wit = [c] + legs[0][:1] + legs[1][:3] + legs[2][:3]
    else:
        wit = [c] + legs[0][:1] + legs[1][:2] + legs[2][:5]
    return ComponentReport(vs, "not-Dynkin", {"euclidean-subgraph": wit})


def dynkin_classify(Q) -> DynkinReport:
    """Classify the underlying undirected graph of each connected component."""
    if isinstance(Q, OrdinaryQuiver):
        Q = Q.as_quiver()
    vs = list(Q.vertices)
    edges = Counter()
    for s, t in Q.arrows:
        key = (s, t) if vs.index(s) <= vs.index(t) else (t, s)
        edges[key] += 1
    comp = {v: v for v in vs}

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for a, b in edges:
        comp[find(a)] = find(b)
    groups = {}
    for v in vs:
        groups.setdefault(find(v), []).append(v)
    reports = []
    for members in groups.values():
        ms = set(members)
        sub = Counter({e: m for e, m in edges.items() if e[0] in ms})
        reports.append(_classify_component(members, sub))
    return DynkinReport(reports)


# ---------------------------------------------------------------- free categories

def decide_free_invertible(C: FiniteCategory, F: Field | None = None, seed: int = 0) -> CriterionResult:
    """Finite iff the ordinary quiver is a disjoint union of Dynkin quivers (free, invertible orders)."""
    cite = CITATIONS["S2"]
    try:
        if not is_free(C):
            return CriterionResult("S2", cite, NOT_APPLICABLE, note="category is not free")
        if F is None:
            F = default_field(C)
        _check_invertible(C, F)
    except (PreconditionError, InputError) as exc:
        return CriterionResult("S2", cite, NOT_APPLICABLE, note=str(exc))
    Q = ordinary_quiver(C, F, seed=seed)
    report = dynkin_classify(Q)
    names = {i: str(v) for i, v in enumerate(Q.vertices)}
    if report.all_dynkin:
        return CriterionResult("S2", cite, PASS, witness={"types": report.kinds}, terminal=True,
                               note=f"ordinary quiver over {F!r}")
    bad = report.first_violation()
    wit = {k: v if k == "count" else _rename(v, names) for k, v in bad.witness.items()}
    return CriterionResult("S2", cite, FAIL, witness=wit, terminal=True,
                           note=f"ordinary quiver over {F!r}")


def _rename(v, names):
    if isinstance(v, (list, tuple)):
        return [_rename(u, names) for u in v]
    return names.get(v, v) if isinstance(v, int) else v
