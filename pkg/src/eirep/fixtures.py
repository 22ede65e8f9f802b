"""Small named categories used by the examples, the CLI corpus and the regression tests."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .category import Arrow, EIQuiver, FiniteCategory, free_ei_cover, poset_category, trivial_arrow
from .groups import Biset, FiniteGroup, Perm, cyclic_group, direct_product, symmetric_group, trivial_group


def shift_biset(H: FiniteGroup, G: FiniteGroup, m: int, h_step: int = 1, g_step: int = 1) -> Biset:
    """Both cyclic groups act on Z/m by translation: the generator of H adds h_step, that of G adds g_step."""
    left = [[(b + h_step) % m for b in range(m)] for _ in H.generators]
    right = [[(b + g_step) % m for b in range(m)] for _ in G.generators]
    return Biset(m, H, G, left, right)


def left_regular_biset(H: FiniteGroup, G: FiniteGroup) -> Biset:
    """Carrier H, H acting by left multiplication, G (a subgroup of H) by right multiplication."""
    return Biset.from_functions(H.order, H, G, lambda h, b: H.index(h * H.elements[b]),
                                lambda b, g: H.index(H.elements[b] * g))


def free_product_biset(H: FiniteGroup, G: FiniteGroup) -> Biset:
    """Carrier H x G with both actions free; one two-sided orbit, neither side transitive."""
    n = G.order
    return Biset.from_functions(H.order * n, H, G,
                                lambda h, b: H.index(h * H.elements[b // n]) * n + b % n,
                                lambda b, g: (b // n) * n + G.index(G.elements[b % n] * g))


def permutation_biset(H: FiniteGroup, points: int, G: FiniteGroup | None = None) -> Biset:
    """H acts on points through its own permutations; G (default trivial) acts trivially."""
    G = G or trivial_group()
    return Biset(points, H, G, [list(h.images[:points]) for h in H.generators], [list(range(points)) for _ in G.generators])


def two_object(G: FiniteGroup, H: FiniteGroup, B: Biset, name: str = "a") -> EIQuiver:
    return EIQuiver(["x", "y"], {"x": G, "y": H}, [Arrow("x", "y", B, name)])


def fix_a_quiver() -> EIQuiver:
    """C2 = <(0 1)> on x, S3 on y, hom-set S3 with the regular left action and right multiplication by C2."""
    S3 = symmetric_group(3)
    G = FiniteGroup([Perm.from_cycles(3, [[0, 1]])], 3)
    return two_object(G, S3, left_regular_biset(S3, G))


def fix_a() -> FiniteCategory:
    return free_ei_cover(fix_a_quiver())


def fix_b_quiver() -> EIQuiver:
    """Trivial group on x, C2 on y swapping the two morphisms x -> y."""
    T, H = trivial_group(), cyclic_group(2)
    return two_object(T, H, Biset(2, H, T, [[1, 0]], []))


def fix_b() -> FiniteCategory:
    return free_ei_cover(fix_b_quiver())


def fix_b_subcategory_labels(C: FiniteCategory) -> list[str]:
    """Everything except the nontrivial automorphism of y."""
    return [lab for lab in C.labels if lab != "y:g1"]


def fix_b_singleton_quiver() -> EIQuiver:
    """Trivial group on x, C2 on y, a single morphism x -> y fixed by C2."""
    T, H = trivial_group(), cyclic_group(2)
    return two_object(T, H, Biset(1, H, T, [[0]], []))


def fix_b_singleton() -> FiniteCategory:
    return free_ei_cover(fix_b_singleton_quiver())


def fix_c_quiver(p: int) -> EIQuiver:
    """Cyclic groups of order p on both objects and a single morphism between them."""
    G = cyclic_group(p)
    return two_object(G, G, trivial_arrow(G, G))


def fix_c(p: int) -> FiniteCategory:
    return free_ei_cover(fix_c_quiver(p))


def fix_d(family: str, r: int, s: int, t: int, p: int = 5) -> FiniteCategory:
    return free_ei_cover(fix_d_quiver(family, r, s, t, p))


def fix_d_quiver(family: str, r: int, s: int, t: int, p: int = 5) -> EIQuiver:
    """Three objects x, y, z with cyclic groups of orders p^r, p^s, p^t and single morphisms.

    family "chain": x -> y -> z.  "sink": x -> y <- z.  "source": x <- y -> z.
    """
    aut = {"x": cyclic_group(p ** r), "y": cyclic_group(p ** s), "z": cyclic_group(p ** t)}
    ends = {"chain": [("x", "y"), ("y", "z")], "sink": [("x", "y"), ("z", "y")],
            "source": [("y", "x"), ("y", "z")]}[family]
    arrows = [Arrow(a, b, trivial_arrow(aut[a], aut[b]), f"{a}{b}") for a, b in ends]
    return EIQuiver(["x", "y", "z"], aut, arrows)


def fix_e_quiver() -> EIQuiver:
    """Kronecker quiver with trivial groups."""
    T = trivial_group()
    return EIQuiver(["x", "y"], {"x": T, "y": T}, [Arrow("x", "y", trivial_arrow(T, T), n) for n in "ab"])


def fix_e() -> FiniteCategory:
    return free_ei_cover(fix_e_quiver())


def fix_f() -> FiniteCategory:
    """Commutative square a < b < d, a < c < d; not free."""
    return poset_category(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def transitive_target(H: FiniteGroup, points: int | None = None) -> EIQuiver:
    """Trivial group on x and H permuting C(x,y); used for the abelian index-bound cases."""
    if points is None:
        B = left_regular_biset(H, trivial_group(H.degree))
    else:
        B = permutation_biset(H, points)
    return two_object(B.right_group, H, B)


def cyclic_pair(m: int, n: int, points: int, h_step: int = 1, g_step: int = 1) -> EIQuiver:
    """C_m on x, C_n on y, both translating Z/points (a step of 0 means a trivial action)."""
    G, H = cyclic_group(m), cyclic_group(n)
    return two_object(G, H, shift_biset(H, G, points, h_step, g_step))


def free_pair(m: int) -> EIQuiver:
    G = cyclic_group(m)
    return two_object(G, G, free_product_biset(G, G))


def klein() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


@dataclass(frozen=True)
class DeciderCase:
    name: str
    build: Callable[[], EIQuiver | FiniteCategory]
    p: int
    expected: str
    slug: str = ""

    def category(self) -> FiniteCategory:
        obj = self.build()
        return free_ei_cover(obj) if isinstance(obj, EIQuiver) else obj


def decider_table() -> list[DeciderCase]:
    """Regression cases with known representation type."""
    F, I, U = "Finite", "Infinite", "Unknown"
    return [
        DeciderCase("p-groups (a): singleton hom-set, C2 and C2", lambda: fix_c_quiver(2), 2, F, "pgroup-a-c2"),
        DeciderCase("p-groups (a): singleton hom-set, C3 and C3", lambda: fix_c_quiver(3), 3, F, "pgroup-a-c3"),
        DeciderCase("p-groups (b): C3 on 3 points, trivial target", lambda: cyclic_pair(3, 1, 3, 0, 1), 3, F,
                    "pgroup-b"),
        DeciderCase("p-groups (c): C4 on 2 points, trivial target", lambda: cyclic_pair(4, 1, 2, 0, 1), 2, F,
                    "pgroup-c"),
        DeciderCase("p-groups (d): C2 and C4 both swapping 2 points", lambda: cyclic_pair(2, 4, 2), 2, F, "pgroup-d"),
        DeciderCase("p-groups (e): C3 and C3 both regular on 3 points", lambda: cyclic_pair(3, 3, 3), 3, F,
                    "pgroup-e"),
        DeciderCase("p-groups: C4 regular, trivial target", lambda: cyclic_pair(4, 1, 4, 0, 1), 2, I,
                    "pgroup-none"),
        DeciderCase("three objects: chain, all C5", lambda: fix_d_quiver("chain", 1, 1, 1), 5, F, "three-chain"),
        DeciderCase("three objects: sink, trivial middle", lambda: fix_d_quiver("sink", 1, 0, 1), 5, F,
                    "three-sink-middle-trivial"),
        DeciderCase("three objects: sink, C5 everywhere", lambda: fix_d_quiver("sink", 1, 1, 1), 5, I,
                    "three-sink-all"),
        DeciderCase("three objects: sink, trivial ends", lambda: fix_d_quiver("sink", 0, 1, 0), 5, F,
                    "three-sink-ends-trivial"),
        DeciderCase("three objects: source, C5 everywhere", lambda: fix_d_quiver("source", 1, 1, 1), 5, I,
                    "three-source-all"),
        DeciderCase("both transitive: C10 through C2", lambda: cyclic_pair(10, 10, 2), 5, F, "both-c10"),
        DeciderCase("both transitive: C5 regular", lambda: cyclic_pair(5, 5, 5), 5, I, "both-c5"),
        DeciderCase("abelian: C2 regular on target, n = 2", lambda: transitive_target(cyclic_group(2)), 5, F,
                    "abelian-c2"),
        DeciderCase("abelian: Klein four regular on target, n = 4", lambda: transitive_target(klein()), 5, I,
                    "abelian-klein"),
        DeciderCase("abelian: C10 on 2 points, n = 2, t = 5", lambda: cyclic_pair(1, 10, 2, 1, 0), 5, F,
                    "abelian-c10"),
        DeciderCase("abelian: C15 on 3 points, n = 3, t = 5", lambda: cyclic_pair(1, 15, 3, 1, 0), 5, I,
                    "abelian-c15"),
        DeciderCase("free Kronecker", fix_e_quiver, 0, I, "kronecker"),
        DeciderCase("free Kronecker in characteristic 5", fix_e_quiver, 5, I, "kronecker-p5"),
        DeciderCase("S3 and C2, regular hom-set", fix_a_quiver, 0, F, "fix-a"),
        DeciderCase("neither side transitive: C2 x C2 free", lambda: free_pair(2), 0, I, "free-c2"),
        DeciderCase("S3 on 3 points in characteristic 2", lambda: transitive_target(symmetric_group(3), 3), 2, U,
                    "s3-points-p2"),
    ]


# ---------------------------------------------------------------- shipped corpus

CORPUS_DIR = Path(__file__).parent / "corpus"


def _with_meta(doc: dict, **meta) -> dict:
    doc = dict(doc)
    doc["meta"] = meta
    return doc


def corpus_documents() -> dict[str, dict]:
    """File name -> JSON document for every shipped example."""
    from .io import category_to_document, eiquiver_to_document, MODULE_SCHEMA

    docs = {
        "fix-a.json": _with_meta(eiquiver_to_document(fix_a_quiver()), name="S3 and C2, regular hom-set",
                                 char=0, expected="Finite"),
        "fix-b.json": _with_meta(eiquiver_to_document(fix_b_quiver()),
                                 name="trivial group and C2 swapping two morphisms"),
        "fix-b-singleton.json": _with_meta(eiquiver_to_document(fix_b_singleton_quiver()),
                                           name="trivial group and C2 fixing one morphism"),
        "fix-e.json": _with_meta(eiquiver_to_document(fix_e_quiver()), name="free Kronecker", char=0,
                                 expected="Infinite"),
        "fix-f.json": _with_meta(category_to_document(fix_f()), name="commutative square", char=0,
                                 expected="Unknown"),
    }
    for p in (2, 3, 5):
        docs[f"fix-c-{p}.json"] = _with_meta(eiquiver_to_document(fix_c_quiver(p)),
                                             name=f"C{p} on both objects, one morphism", char=p, expected="Finite")
    for case in decider_table():
        obj = case.build()
        doc = eiquiver_to_document(obj) if isinstance(obj, EIQuiver) else category_to_document(obj)
        docs[f"case-{case.slug}.json"] = _with_meta(doc, name=case.name, char=case.p, expected=case.expected)
    docs["kronecker-1-3.module.json"] = {
        "schema": MODULE_SCHEMA, "category": "fix-b.json", "subcategory": ["1_x", "1_y", "a.0", "a.1"],
        "field": {"p": 5, "e": 1}, "dims": {"x": 1, "y": 1}, "maps": {"a.0": [[1]], "a.1": [[3]]}}
    docs["singleton-f2.module.json"] = {
        "schema": MODULE_SCHEMA, "category": "fix-b-singleton.json", "subcategory": ["1_x", "1_y", "a.0"],
        "field": {"p": 2, "e": 1}, "dims": {"x": 1, "y": 1}, "maps": {"a.0": [[1]]}}
    return docs


def write_corpus(directory: Path = CORPUS_DIR) -> list[Path]:
    from .io import dumps

    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name, doc in corpus_documents().items():
        path = directory / name
        path.write_text(dumps(doc))
        out.append(path)
    return out
