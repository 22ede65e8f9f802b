"""JSON documents for categories, representations and verdicts.

Schemas:

* ``eirep/category@1`` with ``kind`` "explicit" (composition table) or
  "ei_quiver" (automorphism generators plus arrow bisets).
* ``eirep/module@1``: a representation given on generating morphisms.
* ``eirep/verdict@1``: output of ``decide``.

Permutations are 0-based image lists.  See docs/format.md for examples.
"""

from __future__ import annotations

import json
from pathlib import Path

from .catalg import CatRep, catrep_from_generators
from .category import Arrow, EIQuiver, FiniteCategory, free_ei_cover
from .errors import EirepError, InputError
from .fields import GF, Field
from .groups import Biset, FiniteGroup, Perm
from .verdict import CriterionResult, Verdict

CATEGORY_SCHEMA = "eirep/category@1"
MODULE_SCHEMA = "eirep/module@1"
VERDICT_SCHEMA = "eirep/verdict@1"


class DocumentError(InputError):
    """A document could not be read; carries a position or a JSON path when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None, path: str = ""):
        where = []
        if line is not None:
            where.append(f"line {line}, column {column}")
        if path:
            where.append(f"at {path}")
        super().__init__(f"{message} ({'; '.join(where)})" if where else message)
        self.line, self.column, self.path = line, column, path


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", 1, 1)
    return doc


def load_file(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _need(d: dict, key: str, path: str, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise DocumentError(f"missing field {key!r}", path=path)
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise DocumentError(f"field {key!r} has the wrong type", path=f"{path}.{key}")
    return v


def _check_schema(doc: dict, schema: str) -> None:
    got = doc.get("schema")
    if got != schema:
        raise DocumentError(f"expected schema {schema!r}, found {got!r}", path="$.schema")


# ---------------------------------------------------------------- categories

def category_from_document(doc: dict) -> FiniteCategory:
    _check_schema(doc, CATEGORY_SCHEMA)
    kind = _need(doc, "kind", "$", str)
    try:
        if kind == "explicit":
            return _explicit(doc)
        if kind == "ei_quiver":
            return free_ei_cover(eiquiver_from_document(doc))
    except DocumentError:
        raise
    except EirepError:
        raise
    except (TypeError, ValueError, IndexError, KeyError) as exc:
        raise DocumentError(f"malformed {kind} document: {exc}") from None
    raise DocumentError(f"unknown kind {kind!r}", path="$.kind")


def _explicit(doc: dict) -> FiniteCategory:
    objects = _need(doc, "objects", "$", list)
    mors = _need(doc, "morphisms", "$", list)
    morphisms = []
    for i, m in enumerate(mors):
        p = f"$.morphisms[{i}]"
        morphisms.append((str(_need(m, "id", p)), _need(m, "src", p), _need(m, "tgt", p)))
    identities = _need(doc, "identities", "$", dict)
    triples = []
    for i, t in enumerate(doc.get("composition", [])):
        if not (isinstance(t, list) and len(t) == 3):
            raise DocumentError("composition entries are [f, g, g o f]", path=f"$.composition[{i}]")
        triples.append(tuple(str(s) for s in t))
    return FiniteCategory.from_triples(objects, morphisms, identities, triples)


def _perm(images, degree: int, path: str) -> Perm:
    if not isinstance(images, list) or len(images) != degree:
        raise DocumentError(f"permutation must list {degree} images", path=path)
    try:
        return Perm(images)
    except InputError as exc:
        raise DocumentError(str(exc), path=path) from None


def eiquiver_from_document(doc: dict) -> EIQuiver:
    objs = _need(doc, "objects", "$", list)
    names, aut = [], {}
    for i, o in enumerate(objs):
        p = f"$.objects[{i}]"
        name = _need(o, "name", p)
        gens = o.get("generators", [])
        degree = o.get("degree", len(gens[0]) if gens else 1)
        perms = [_perm(g, degree, f"{p}.generators[{j}]") for j, g in enumerate(gens)]
        names.append(name)
        aut[name] = FiniteGroup(perms, degree)
    arrows = []
    for i, a in enumerate(doc.get("arrows", [])):
        p = f"$.arrows[{i}]"
        s, t = _need(a, "source", p), _need(a, "target", p)
        if s not in aut or t not in aut:
            raise DocumentError("arrow endpoint is not an object", path=p)
        size = _need(a, "size", p, int)
        left = _need(a, "left", p, list)
        right = _need(a, "right", p, list)
        if len(left) != len(aut[t].generators) or len(right) != len(aut[s].generators):
            raise DocumentError("one action list per group generator is required", path=p)
        for j, img in enumerate(left + right):
            _perm(img, size, f"{p}.{'left' if j < len(left) else 'right'}")
        B = Biset(size, aut[t], aut[s], left, right)
        arrows.append(Arrow(s, t, B, a.get("name")))
    return EIQuiver(names, aut, arrows)


def category_to_document(C: FiniteCategory) -> dict:
    """Explicit document listing every non-identity composite."""
    n = C.num_morphisms
    ids = set(C.identities.values())
    triples = []
    for g in range(n):
        for f in range(n):
            h = int(C.comp[g, f])
            if h >= 0 and f not in ids and g not in ids:
                triples.append([C.labels[f], C.labels[g], C.labels[h]])
    return {"schema": CATEGORY_SCHEMA, "kind": "explicit", "objects": list(C.objects),
            "morphisms": [{"id": C.labels[i], "src": C.src[i], "tgt": C.tgt[i]} for i in range(n)],
            "identities": {x: C.labels[e] for x, e in C.identities.items()},
            "composition": triples}


def eiquiver_to_document(Q: EIQuiver) -> dict:
    objs = [{"name": x, "degree": Q.aut[x].degree, "generators": [list(g.images) for g in Q.aut[x].generators]}
            for x in Q.objects]
    arrows = []
    for a in Q.arrows:
        d = {"source": a.source, "target": a.target, "size": a.biset.size,
             "left": [list(t) for t in a.biset.left_gens], "right": [list(t) for t in a.biset.right_gens]}
        if a.name is not None:
            d["name"] = a.name
        arrows.append(d)
    return {"schema": CATEGORY_SCHEMA, "kind": "ei_quiver", "objects": objs, "arrows": arrows}


# ---------------------------------------------------------------- representations

def field_from_document(d) -> Field:
    if isinstance(d, int):
        return GF(d)
    return GF(_need(d, "p", "$.field", int), d.get("e", 1))


def module_from_document(doc: dict, C: FiniteCategory) -> CatRep:
    _check_schema(doc, MODULE_SCHEMA)
    F = field_from_document(_need(doc, "field", "$"))
    dims = _need(doc, "dims", "$", dict)
    for x in dims:
        if x not in C.objects:
            raise DocumentError(f"unknown object {x!r}", path="$.dims")
    maps = doc.get("maps", {})
    for lab in maps:
        if lab not in C.labels:
            raise DocumentError(f"unknown morphism {lab!r}", path="$.maps")
    return catrep_from_generators(C, F, dims, maps)


def module_to_document(R: CatRep, labels=None) -> dict:
    C = R.category
    if labels is None:
        labels = [C.labels[i] for i in range(C.num_morphisms) if i not in C.identities.values()]
    F = R.field
    return {"schema": MODULE_SCHEMA, "field": {"p": F.p, "e": F.e},
            "dims": {x: int(R.dims.get(x, 0)) for x in C.objects},
            "maps": {lab: R.matrix(lab).tolist() for lab in labels}}


# ---------------------------------------------------------------- verdicts

def verdict_from_document(doc: dict) -> Verdict:
    _check_schema(doc, VERDICT_SCHEMA)
    trace = []
    for i, r in enumerate(_need(doc, "trace", "$", list)):
        p = f"$.trace[{i}]"
        trace.append(CriterionResult(_need(r, "rule", p), _need(r, "citation", p), _need(r, "status", p),
                                     r.get("witness"), r.get("note", "")))
    return Verdict(_need(doc, "outcome", "$"), trace, doc.get("field", ""), doc.get("char", 0))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
