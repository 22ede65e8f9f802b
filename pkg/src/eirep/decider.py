"""Representation type of finite EI categories: an ordered pipeline of criteria.

Necessary rules (prefix N) can only prove infinite type.  Terminal rules
(prefix S) are two-sided classifications for special shapes.  When nothing
applies the answer is Unknown.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .category import (FiniteCategory, connected_components, full_subcategory, hom_biset, is_free, opposite,
                       skeleton_objects, two_sided_orbits, underlying_quiver_and_poset, validate_ei)
from .errors import ConsistencyError, FieldNotSplittingError, InputError, ResourceError
from .fields import GF, is_prime
from .groups import (FiniteGroup, Subgroup, StabilizerChain, cyclic_p_subgroups, double_coset_count,
                     is_p_group, normal_sylow, o_p_prime, stabilizer_chain, sylow_p_cyclic)
from .modrep import induce, permutation_module, simple_modules, splitting_degree, top_and_socle_multiplicities
from .quiver import decide_free_invertible, default_field, dynkin_classify
from .verdict import (CITATIONS, FAIL, FINITE, INCONCLUSIVE, INFINITE, NOT_APPLICABLE, PASS, UNKNOWN,
                      CriterionResult, Verdict)


RECURSION_LIMIT = 8  # largest object count for which every full subcategory is examined


@dataclass
class Options:
    extended: bool = False
    seed: int = 0
    exhaustive: bool = False  # evaluate every rule and cross-check the decided ones


def _result(rule, status, witness=None, note="", terminal=False) -> CriterionResult:
    return CriterionResult(rule, CITATIONS[rule], status, witness, note, terminal)


# ---------------------------------------------------------------- per-pair data

class PairContext:
    """Data attached to a nonempty hom-set C(x,y) with x != y."""

    def __init__(self, C: FiniteCategory, x, y, p: int):
        self.C, self.x, self.y, self.p = C, x, y, p
        self.carrier = C.hom(x, y)
        self.biset = hom_biset(C, x, y)
        self.G = C.aut_group(x).group
        self.H = C.aut_group(y).group

    @property
    def label(self) -> str:
        return f"{self.x}->{self.y}"

    @cached_property
    def chain(self) -> StabilizerChain:
        return stabilizer_chain(self.biset, 0)

    @cached_property
    def G_transitive(self) -> bool:
        return self.biset.is_right_transitive()

    @cached_property
    def H_transitive(self) -> bool:
        return self.biset.is_left_transitive()

    @cached_property
    def OG(self) -> Subgroup:
        return o_p_prime(self.G, self.p)

    @cached_property
    def OH(self) -> Subgroup:
        return o_p_prime(self.H, self.p)

    def OG_trivial(self) -> bool:
        return all(g in self.chain.G0 for g in self.OG.generators)

    def OH_trivial(self) -> bool:
        return all(h in self.chain.H0 for h in self.OH.generators)

    def transitive_sides(self) -> list[tuple[str, FiniteGroup, Subgroup, Subgroup]]:
        """(name, group, orbit stabilizer, point stabilizer) for each transitive side."""
        out = []
        ch = self.chain
        if self.H_transitive:
            out.append(("H", self.H, ch.H1, ch.H0))
        if self.G_transitive:
            out.append(("G", self.G, ch.G1, ch.G0))
        return out


def _pairs(C: FiniteCategory, p: int) -> list[PairContext]:
    return [PairContext(C, x, y, p) for x in C.objects for y in C.objects if x != y and C.hom(x, y)]


# ---------------------------------------------------------------- necessary rules

def rule_n1_cyclic_sylow(C: FiniteCategory, p: int) -> CriterionResult:
    for x in C.objects:
        G = C.aut_group(x).group
        if not sylow_p_cyclic(G, p):
            return _result("N1", FAIL, {"object": x, "order": G.order})
    return _result("N1", PASS)


def rule_n2_single_orbit(C: FiniteCategory, pairs) -> CriterionResult:
    for pc in pairs:
        orbits = two_sided_orbits(C, pc.x, pc.y)
        if len(orbits) > 1:
            return _result("N2", FAIL, {"pair": pc.label, "orbit_representatives":
                                        [C.labels[o[0]] for o in orbits[:2]]})
    return _result("N2", PASS)


def rule_n3_composites(C: FiniteCategory) -> CriterionResult:
    for x, y, z in itertools.permutations(C.objects, 3):
        first, second = C.hom(x, y), C.hom(y, z)
        if not first or not second:
            continue
        made = {int(C.comp[b, a]) for a in first for b in second}
        missing = [m for m in C.hom(x, z) if m not in made]
        if missing:
            return _result("N3", FAIL, {"objects": [x, y, z], "not_a_composite": C.labels[missing[0]]})
    return _result("N3", PASS)


def rule_n4_dynkin_underlying(C: FiniteCategory, free: bool) -> CriterionResult:
    if not free:
        return _result("N4", NOT_APPLICABLE, note="category is not free")
    report = dynkin_classify(underlying_quiver_and_poset(C).quiver)
    bad = report.first_violation()
    if bad is not None:
        return _result("N4", FAIL, bad.witness)
    return _result("N4", PASS, note="underlying quiver " + "+".join(report.kinds))


def rule_n5_transitive(pairs) -> CriterionResult:
    for pc in pairs:
        if not (pc.G_transitive or pc.H_transitive):
            return _result("N5", FAIL, {"pair": pc.label, "size": len(pc.carrier)})
    return _result("N5", PASS)


def rule_n6_p_actions(pairs, p: int) -> CriterionResult:
    if p < 5:
        return _result("N6", NOT_APPLICABLE, note="needs characteristic at least 5")
    for pc in pairs:
        if not pc.OG_trivial() and not pc.OH_trivial():
            return _result("N6", FAIL, {"pair": pc.label, "p_part_orders": [pc.OG.order, pc.OH.order]})
    return _result("N6", PASS)


def rule_n7_stabilizer_intersections(pairs, p: int) -> CriterionResult:
    if p < 5:
        return _result("N7", NOT_APPLICABLE, note="needs characteristic at least 5")
    for pc in pairs:
        for side, group, stab in (("G", pc.G, pc.chain.G0), ("H", pc.H, pc.chain.H0)):
            for P in cyclic_p_subgroups(group, p):
                meet = sum(1 for g in P.elements if g in stab)
                if 1 < meet < P.order:
                    return _result("N7", FAIL, {"pair": pc.label, "side": side, "p_subgroup_order": P.order,
                                                "intersection_order": meet})
    return _result("N7", PASS)


def rule_n8_normal_sylow(pairs, p: int) -> CriterionResult:
    if p < 17:
        return _result("N8", NOT_APPLICABLE, note="needs characteristic at least 17")
    for pc in pairs:
        for side, group, stab in (("G", pc.G, pc.chain.G0), ("H", pc.H, pc.chain.H0)):
            P = normal_sylow(group, p)
            if P is not None and not all(g in stab for g in P.generators):
                return _result("N8", FAIL, {"pair": pc.label, "side": side, "sylow_order": P.order})
    return _result("N8", PASS)


def rule_n9_double_cosets(pairs, p: int) -> CriterionResult:
    if p in (2, 3):
        return _result("N9", NOT_APPLICABLE, note="characteristic 2 or 3")
    for pc in pairs:
        for side, K, K1, _ in pc.transitive_sides():
            d = double_coset_count(K, K1, K1)
            if d > 3:
                return _result("N9", FAIL, {"pair": pc.label, "side": side, "double_cosets": d})
    return _result("N9", PASS)


def _arrow_stabilizer(C: FiniteCategory, alpha: int, at) -> tuple[Subgroup, bool]:
    """Stabilizer in Aut(at) of the orbit of alpha under the other endpoint's group,
    and whether Aut(at) is transitive on the hom-set of alpha."""
    x, y = C.src[alpha], C.tgt[alpha]
    B = hom_biset(C, x, y)
    ch = stabilizer_chain(B, C.hom(x, y).index(alpha))
    if at == y:
        return ch.H1, B.is_left_transitive()
    return ch.G1, B.is_right_transitive()


def rule_n10_adjacency(C: FiniteCategory, free: bool, p: int) -> CriterionResult:
    if not free:
        return _result("N10", NOT_APPLICABLE, note="category is not free")
    if p in (2, 3):
        return _result("N10", NOT_APPLICABLE, note="characteristic 2 or 3")
    data = underlying_quiver_and_poset(C)
    for v in C.objects:
        at = [a for (s, t), a in zip(data.quiver.arrows, data.representatives) if v in (s, t)]
        info = [_arrow_stabilizer(C, a, v) for a in at]
        names = [C.labels[a] for a in at]
        for (i, (Sa, ta)), (j, (Sb, tb)) in itertools.combinations(enumerate(info), 2):
            if not (ta or tb):
                return _result("N10", FAIL, {"object": v, "arrows": [names[i], names[j]],
                                             "reason": "automorphisms transitive on neither"})
            H = C.aut_group(v).group
            d = double_coset_count(H, Sa, Sb)
            if d != 1:
                return _result("N10", FAIL, {"object": v, "arrows": [names[i], names[j]], "double_cosets": d})
        if len(at) == 3 and not all(t for _, t in info):
            return _result("N10", FAIL, {"object": v, "arrows": names,
                                         "reason": "three arrows, automorphisms not transitive on all"})
    return _result("N10", PASS)


def rule_n11_tops(pairs, p: int, seed: int = 0) -> CriterionResult:
    if p < 5:
        return _result("N11", NOT_APPLICABLE, note="needs characteristic at least 5")
    try:
        for pc in pairs:
            for side, K, K1, K0 in pc.transitive_sides():
                F = GF(p, splitting_degree(p, [K]))
                simples_K1 = simple_modules(F, K1, seed=seed)
                simples_K = simple_modules(F, K, seed=seed)
                top, _ = top_and_socle_multiplicities(permutation_module(F, K1, K0), simples_K1)
                for S, mult in zip(simples_K1, top):
                    if not mult:
                        continue
                    tops, _ = top_and_socle_multiplicities(induce(S, K), simples_K)
                    if max(tops) > 1 or sum(tops) > 3:
                        return _result("N11", FAIL, {"pair": pc.label, "side": side, "simple_dim": S.dim,
                                                     "top_multiplicities": tops})
    except (ResourceError, FieldNotSplittingError) as exc:
        return _result("N11", INCONCLUSIVE, note=str(exc))
    return _result("N11", PASS)


# ---------------------------------------------------------------- terminal rules

def _only_pair(pairs):
    return pairs[0] if len(pairs) == 1 else None


def rule_s0_single_object(C: FiniteCategory, p: int) -> CriterionResult:
    if len(C.objects) != 1:
        return _result("S0", NOT_APPLICABLE)
    G = C.aut_group(C.objects[0]).group
    ok = sylow_p_cyclic(G, p)
    return _result("S0", PASS if ok else FAIL, None if ok else {"order": G.order}, terminal=True)


def rule_s1_singleton(C: FiniteCategory, pairs) -> CriterionResult:
    pc = _only_pair(pairs)
    if len(C.objects) != 2 or pc is None or len(pc.carrier) != 1:
        return _result("S1", NOT_APPLICABLE)
    return _result("S1", PASS, {"pair": pc.label}, terminal=True)


def rule_s2_free_invertible(C: FiniteCategory, p: int, free: bool, seed: int) -> CriterionResult:
    if not free:
        return _result("S2", NOT_APPLICABLE, note="category is not free")
    orders = [C.aut_group(x).group.order for x in C.objects]
    if p and any(n % p == 0 for n in orders):
        return _result("S2", NOT_APPLICABLE, note="an automorphism group order is divisible by p")
    if p == 0:
        F = default_field(C)
    else:
        F = GF(p, splitting_degree(p, [C.aut_group(x).group for x in C.objects]))
    res = decide_free_invertible(C, F, seed=seed)
    res.citation = CITATIONS["S2"]
    return res


def p_group_pair_verdict(pc: PairContext, p: int) -> tuple[bool, dict]:
    """Two objects with p-group automorphisms: finite type conditions, as (finite?, witness)."""
    G, H = pc.G, pc.H
    m = len(pc.carrier)
    if not (G.is_cyclic() and H.is_cyclic()):
        return False, {"pair": pc.label, "reason": "automorphism group not cyclic"}
    if not (pc.G_transitive or pc.H_transitive):
        return False, {"pair": pc.label, "reason": "neither side transitive"}
    cases = {
        "a": m <= 1,
        "b": G.order * H.order <= 3,
        "c": p == 2 and m == 2 and (G.order == 1 or H.order == 1),
        "d": p == 2 and m == 2 and ((G.order == 2 and pc.G_transitive) or (H.order == 2 and pc.H_transitive)),
        "e": p == 3 and m == 3 and G.order == H.order == 3 and pc.G_transitive and pc.H_transitive,
    }
    hit = [k for k, v in cases.items() if v]
    if hit:
        return True, {"pair": pc.label, "case": hit[0]}
    return False, {"pair": pc.label, "size": m, "orders": [G.order, H.order], "reason": "no case applies"}


def rule_s3_p_groups_two(C: FiniteCategory, pairs, p: int) -> CriterionResult:
    pc = _only_pair(pairs)
    if len(C.objects) != 2 or pc is None or p == 0:
        return _result("S3", NOT_APPLICABLE)
    if not (is_p_group(pc.G, p) and is_p_group(pc.H, p)):
        return _result("S3", NOT_APPLICABLE, note="automorphism groups are not p-groups")
    ok, wit = p_group_pair_verdict(pc, p)
    return _result("S3", PASS if ok else FAIL, wit, terminal=True)


def _linear_shape(C: FiniteCategory):
    """For three objects joined by single morphisms: ('chain', order) or ('sink'|'source', middle, ends)."""
    data = underlying_quiver_and_poset(C)
    arrows = list(data.quiver.arrows)
    if len(arrows) != 2 or any(len(C.hom(x, y)) > 1 for x in C.objects for y in C.objects if x != y):
        return None
    (a, b), (c, d) = arrows
    if b == c:
        return ("chain", [a, b, d])
    if d == a:
        return ("chain", [c, d, b])
    if b == d:
        return ("sink", b, [a, c])
    if a == c:
        return ("source", a, [b, d])
    return None


def _exponent(C: FiniteCategory, x, p: int) -> int:
    n, e = C.aut_group(x).group.order, 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def rule_s4_three_p_groups(C: FiniteCategory, p: int) -> CriterionResult:
    if len(C.objects) != 3 or p < 5:
        return _result("S4", NOT_APPLICABLE)
    if not all(is_p_group(C.aut_group(x).group, p) for x in C.objects):
        return _result("S4", NOT_APPLICABLE, note="automorphism groups are not p-groups")
    shape = _linear_shape(C)
    if shape is None:
        return _result("S4", NOT_APPLICABLE, note="not one of the linear families")
    if shape[0] == "chain":
        return _result("S4", PASS, {"family": "first", "order": shape[1]}, terminal=True)
    middle, ends = shape[1], shape[2]
    s = _exponent(C, middle, p)
    r, t = (_exponent(C, e, p) for e in ends)
    wit = {"family": "second" if shape[0] == "sink" else "second (opposite)", "middle": middle,
           "exponents": {"ends": [r, t], "middle": s}}
    ok = s == 0 or (r == 0 and t == 0)
    return _result("S4", PASS if ok else FAIL, wit, terminal=True)


def rule_s5_both_transitive(C: FiniteCategory, pairs, p: int) -> CriterionResult:
    pc = _only_pair(pairs)
    if len(C.objects) != 2 or pc is None or p in (2, 3):
        return _result("S5", NOT_APPLICABLE)
    if not (pc.G_transitive and pc.H_transitive):
        return _result("S5", NOT_APPLICABLE, note="not transitive on both sides")
    ok = pc.OG_trivial() and pc.OH_trivial()
    wit = {"pair": pc.label, "p_parts_act_trivially": [pc.OG_trivial(), pc.OH_trivial()]}
    return _result("S5", PASS if ok else FAIL, wit, terminal=True)


def abelian_pair_finite(s: int, t: int, n: int) -> bool:
    """Index bound for abelian automorphism groups; s, t are the orders of the p-parts."""
    if s == 1 and t == 1:
        return n <= 3
    if s == 1 or t == 1:
        return n <= 2
    return n == 1


def rule_s6_abelian(C: FiniteCategory, pairs, p: int) -> CriterionResult:
    pc = _only_pair(pairs)
    if len(C.objects) != 2 or pc is None or p in (2, 3):
        return _result("S6", NOT_APPLICABLE)
    if not (pc.G.is_abelian and pc.H.is_abelian):
        return _result("S6", NOT_APPLICABLE, note="automorphism groups not abelian")
    sides = pc.transitive_sides()
    if not sides:
        return _result("S6", NOT_APPLICABLE, note="neither side transitive")
    side, K, K1, _ = sides[0]
    s, t = pc.OG.order, pc.OH.order
    n = K.order // K1.order
    note = "both p-parts nontrivial: read as index 1 (thresholds p and 5 agree for p >= 5)" if s > 1 and t > 1 else ""
    trivial = pc.OG_trivial() and pc.OH_trivial()
    ok = trivial and abelian_pair_finite(s, t, n)
    wit = {"pair": pc.label, "side": side, "s": s, "t": t, "n": n, "p_parts_act_trivially": trivial}
    return _result("S6", PASS if ok else FAIL, wit, note=note, terminal=True)


def rule_s7_chain(C: FiniteCategory, p: int) -> CriterionResult:
    if len(C.objects) < 2 or p == 0:
        return _result("S7", NOT_APPLICABLE)
    if not all(is_p_group(C.aut_group(x).group, p) for x in C.objects):
        return _result("S7", NOT_APPLICABLE, note="automorphism groups are not p-groups")
    data = underlying_quiver_and_poset(C)
    arrows = list(data.quiver.arrows)
    if len(arrows) != len(C.objects) - 1:
        return _result("S7", NOT_APPLICABLE)
    nxt = dict(arrows)
    starts = [x for x in C.objects if x not in {t for _, t in arrows}]
    if len(nxt) != len(arrows) or len(starts) != 1:
        return _result("S7", NOT_APPLICABLE, note="not a linear chain")
    order = [starts[0]]
    while order[-1] in nxt:
        order.append(nxt[order[-1]])
    if len(order) != len(C.objects):
        return _result("S7", NOT_APPLICABLE, note="not a linear chain")
    for i, j in itertools.combinations(range(len(order)), 2):
        if len(C.hom(order[i], order[j])) != 1:
            return _result("S7", NOT_APPLICABLE, note="a hom-set of the chain is not a singleton")
    return _result("S7", PASS, {"order": order}, terminal=True)


# ---------------------------------------------------------------- pipeline

def _combine(outcomes) -> str:
    outcomes = list(outcomes)
    if INFINITE in outcomes:
        return INFINITE
    if outcomes and all(o == FINITE for o in outcomes):
        return FINITE
    return UNKNOWN


def _field_label(p: int) -> str:
    return "characteristic 0" if p == 0 else f"characteristic {p}"


NEEDS_CYCLIC_SYLOW = {"S1", "S4", "S5", "S6", "S7"}


def decide(C: FiniteCategory, p: int = 0, extended: bool = False, seed: int = 0,
           exhaustive: bool = False) -> Verdict:
    """Finite, Infinite or Unknown representation type of kC over an algebraically closed field of char p."""
    if p != 0 and not is_prime(p):
        raise InputError(f"characteristic must be 0 or a prime, got {p}")
    opts = Options(extended, seed, exhaustive)
    report = validate_ei(C)
    if not report.is_ei:
        raise InputError("category is not EI")
    trace = []
    if not report.is_skeletal:
        keep = skeleton_objects(C)
        trace.append(_result("normalize", PASS, {"skeleton": keep}, note="replaced by a skeleton"))
        C = full_subcategory(C, keep)
    comps = connected_components(C)
    if len(comps) > 1:
        trace.append(_result("normalize", PASS, {"components": comps}, note="split into components"))
        outcomes = []
        for comp in comps:
            sub = _decide_connected(full_subcategory(C, comp), p, opts, {})
            trace.append(_result("R", _status_of(sub.outcome), {"objects": comp, "outcome": sub.outcome}))
            outcomes.append(sub.outcome)
        return Verdict(_combine(outcomes), trace, _field_label(p), p)
    v = _decide_connected(C, p, opts, {})
    v.trace = trace + v.trace
    return v


def _status_of(outcome: str) -> str:
    return {FINITE: PASS, INFINITE: FAIL}.get(outcome, INCONCLUSIVE)


def _decide_connected(C: FiniteCategory, p: int, opts: Options, memo: dict) -> Verdict:
    key = tuple(C.objects)
    if key in memo:
        return memo[key]
    trace: list[CriterionResult] = []
    fields_used: list[str] = []

    def finish(outcome):
        v = Verdict(outcome, trace, ", ".join(fields_used) or _field_label(p), p)
        memo[key] = v
        return v

    def necessary(res):
        trace.append(res)
        return res.status == FAIL and not opts.exhaustive

    if necessary(rule_n1_cyclic_sylow(C, p)):
        return finish(INFINITE)
    if len(C.objects) == 1:
        trace.append(rule_s0_single_object(C, p))
        return finish(FINITE if trace[-1].status == PASS else INFINITE)

    pairs = _pairs(C, p)
    free = is_free(C)
    checks = [
        lambda: rule_n2_single_orbit(C, pairs),
        lambda: rule_n3_composites(C),
        lambda: rule_n4_dynkin_underlying(C, free),
        lambda: rule_n5_transitive(pairs),
        lambda: rule_n6_p_actions(pairs, p),
        lambda: rule_n7_stabilizer_intersections(pairs, p),
        lambda: rule_n8_normal_sylow(pairs, p),
        lambda: rule_n9_double_cosets(pairs, p),
        lambda: rule_n10_adjacency(C, free, p),
    ]
    for check in checks:
        if necessary(check()):
            return finish(INFINITE)

    n = len(C.objects)
    if n >= 3:
        if n <= RECURSION_LIMIT:
            sizes = range(2, n)
        else:
            sizes = [2, 3]
        for size in sizes:
            for objs in itertools.combinations(C.objects, size):
                D = full_subcategory(C, objs)
                if len(connected_components(D)) != 1:
                    continue
                sub = _decide_connected(D, p, opts, memo)
                if sub.outcome == INFINITE:
                    failing = next((r for r in sub.trace if r.status == FAIL), None)
                    trace.append(_result("R", FAIL, {"objects": list(objs), "rule": failing and failing.rule,
                                                     "witness": failing and failing.witness}))
                    if not opts.exhaustive:
                        return finish(INFINITE)
        if not any(r.rule == "R" for r in trace):
            trace.append(_result("R", PASS, note="no full subcategory is known to be infinite"))

    if opts.extended and necessary(rule_n11_tops(pairs, p, opts.seed)):
        return finish(INFINITE)
    if opts.extended and p >= 5:
        fields_used.append(f"GF({p}^e) for top checks")

    terminals = [
        lambda: rule_s1_singleton(C, pairs),
        lambda: rule_s2_free_invertible(C, p, free, opts.seed),
        lambda: rule_s3_p_groups_two(C, pairs, p),
        lambda: rule_s4_three_p_groups(C, p),
        lambda: rule_s5_both_transitive(C, pairs, p),
        lambda: rule_s6_abelian(C, pairs, p),
        lambda: rule_s7_chain(C, p),
    ]
    # these classifications assume cyclic Sylow subgroups, which N1 checked
    cyclic_sylow = trace[0].status != FAIL
    decided, skipped = [], []
    for term in terminals:
        res = term()
        if not cyclic_sylow and res.rule in NEEDS_CYCLIC_SYLOW and res.status != NOT_APPLICABLE:
            res = _result(res.rule, NOT_APPLICABLE, note="needs cyclic Sylow subgroups")
        if res.status == NOT_APPLICABLE and not opts.exhaustive:
            skipped.append(res)
            continue
        trace.append(res)
        if res.rule == "S2" and res.note:
            fields_used.append(res.note.replace("ordinary quiver over ", ""))
        if res.status in (PASS, FAIL):
            decided.append(res)
            if not opts.exhaustive:
                break

    necessary_fail = any(r.status == FAIL and not r.terminal for r in trace)
    outcomes = {FINITE if r.status == PASS else INFINITE for r in decided}
    if necessary_fail:
        if FINITE in outcomes:
            raise ConsistencyError(f"rules disagree on {C!r}: " +
                                   ", ".join(f"{r.rule}={r.status}" for r in trace if r.status in (PASS, FAIL)))
        return finish(INFINITE)
    if len(outcomes) > 1:
        raise ConsistencyError(f"terminal rules disagree on {C!r}: " +
                               ", ".join(f"{r.rule}={r.status}" for r in decided))
    if outcomes:
        return finish(outcomes.pop())
    trace.extend(skipped)  # shows which classification hypotheses were missed
    return finish(UNKNOWN)


def decide_symmetrized(C: FiniteCategory, p: int = 0, extended: bool = False, seed: int = 0) -> Verdict:
    """Decide C and its opposite; representation type is invariant under duality."""
    a = decide(C, p, extended, seed)
    b = decide(opposite(C), p, extended, seed)
    decided = {v.outcome for v in (a, b) if v.outcome != UNKNOWN}
    if len(decided) > 1:
        raise ConsistencyError(f"C is {a.outcome} but its opposite is {b.outcome}")
    outcome = decided.pop() if decided else UNKNOWN
    trace = list(a.trace)
    trace.append(CriterionResult("op", "duality", _status_of(b.outcome), {"opposite_outcome": b.outcome}))
    return Verdict(outcome, trace, a.field_used, p)


__all__ = ["decide", "decide_symmetrized", "Options", "CITATIONS", "PairContext", "abelian_pair_finite",
           "p_group_pair_verdict"]
