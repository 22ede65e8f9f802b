"""Command-line front end: ``eirep validate|decide|ordinary-quiver|induce|info``."""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import io
from .catalg import induce_rep
from .category import (is_free, subcategory, full_subcategory, underlying_quiver_and_poset, unfactorizables,
                       validate_ei)
from .decider import decide, decide_symmetrized
from .errors import EirepError, InputError, PreconditionError, StructuralError
from .fields import GF, is_prime
from .fixtures import CORPUS_DIR
from .modrep import splitting_degree
from .quiver import default_field, dynkin_classify, ordinary_quiver
from .verdict import FINITE, INFINITE, NOT_APPLICABLE

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INFINITE = 10
EXIT_UNKNOWN = 20
OUTCOME_CODES = {FINITE: EXIT_OK, INFINITE: EXIT_INFINITE}


def _default_seed() -> int:
    try:
        return int(os.environ.get("EIREP_SEED", "0"))
    except ValueError:
        return 0


def _load_category(path):
    doc = io.load_file(path)
    return doc, io.category_from_document(doc)


def _write_atomic(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _char_arg(text: str) -> int:
    p = int(text)
    if p != 0 and not is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is neither 0 nor a prime")
    return p


# ---------------------------------------------------------------- validate

def cmd_validate(args, out) -> int:
    try:
        doc = io.load_file(args.path)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    try:
        C = io.category_from_document(doc)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    except (StructuralError, InputError) as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_INVALID
    rep = validate_ei(C)
    print(f"objects: {len(C.objects)}  morphisms: {C.num_morphisms}", file=out)
    print(f"EI: {'yes' if rep.is_ei else 'no'}", file=out)
    print(f"connected: {'yes' if rep.is_connected else 'no'}", file=out)
    print(f"skeletal: {'yes' if rep.is_skeletal else 'no'}", file=out)
    if not rep.is_ei:
        print("invalid: some endomorphism is not an isomorphism", file=out)
        return EXIT_INVALID
    print("valid", file=out)
    return EXIT_OK


# ---------------------------------------------------------------- decide

def format_verdict(v, out) -> None:
    print(f"outcome: {v.outcome}", file=out)
    print(f"characteristic: {v.char_p}   field: {v.field_used}", file=out)
    for r in v.trace:
        line = f"  [{r.status}] {r.rule} ({r.citation})"
        if r.witness is not None:
            line += f" witness={r.to_dict()['witness']}"
        if r.note:
            line += f"  -- {r.note}"
        print(line, file=out)
    if v.outcome not in OUTCOME_CODES:
        gaps = [f"{r.rule} ({r.citation})" for r in v.trace if r.rule.startswith("S") and r.status == NOT_APPLICABLE]
        print("undecided: the necessary conditions hold but no classification covers this shape; "
              "a criterion extending one of " + ", ".join(gaps) + " would be needed", file=out)


def _decide_one(path, args):
    doc, C = _load_category(path)
    p = args.char if args.char is not None else int(doc.get("meta", {}).get("char", 0))
    run = decide_symmetrized if args.symmetrized else decide
    if args.symmetrized:
        v = run(C, p, extended=args.extended, seed=args.seed)
    else:
        v = run(C, p, extended=args.extended, seed=args.seed, exhaustive=args.exhaustive)
    return doc, v


def cmd_decide(args, out) -> int:
    if args.all:
        return _decide_batch(args, out)
    if not args.path:
        print("decide needs a path or --all DIR", file=out)
        return EXIT_PARSE
    try:
        _, v = _decide_one(args.path, args)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    except (StructuralError, InputError) as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_INVALID
    format_verdict(v, out)
    if args.json:
        _write_atomic(Path(args.json), io.dumps(v.to_dict()))
    return OUTCOME_CODES.get(v.outcome, EXIT_UNKNOWN)


def _decide_batch(args, out) -> int:
    files = sorted(p for p in Path(args.all).glob("*.json") if not p.name.endswith(".module.json"))

    def work(path):
        try:
            doc, v = _decide_one(path, args)
        except EirepError as exc:
            return path, None, str(exc)
        if args.json:
            _write_atomic(Path(args.json) / f"{path.stem}.verdict.json", io.dumps(v.to_dict()))
        return path, v, doc.get("meta", {}).get("expected")

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(work, files))
    code = EXIT_OK
    for path, v, extra in results:
        if v is None:
            print(f"{path.name}: error: {extra}", file=out)
            code = EXIT_INVALID
            continue
        mark = ""
        if extra is not None:
            mark = "  (as expected)" if extra == v.outcome else f"  (expected {extra})"
            if extra != v.outcome:
                code = EXIT_INVALID
        print(f"{path.name}: {v.outcome} at p={v.char_p}{mark}", file=out)
    return code


# ---------------------------------------------------------------- ordinary quiver

def cmd_ordinary_quiver(args, out) -> int:
    try:
        _, C = _load_category(args.path)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    except (StructuralError, InputError) as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_INVALID
    try:
        if args.char == "auto":
            F = default_field(C)
        else:
            ell = _char_arg(args.char)
            if ell == 0:
                F = default_field(C)
            else:
                F = GF(ell, splitting_degree(ell, [C.aut_group(x).group for x in C.objects]))
        Q = ordinary_quiver(C, F, seed=args.seed)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}; the construction needs every automorphism group order "
              "to be invertible in the field", file=out)
        return EXIT_PRECONDITION
    except argparse.ArgumentTypeError as exc:
        print(str(exc), file=out)
        return EXIT_PARSE
    print(f"field: {F!r}", file=out)
    print(f"vertices: {len(Q.vertices)}", file=out)
    for v in Q.vertices:
        print(f"  {v}  object={v.obj} dim={v.dim}", file=out)
    print(f"arrows: {Q.num_arrows}", file=out)
    for s, t, m in Q.edge_list():
        print(f"  {s} -> {t}" + (f"  x{m}" if m > 1 else ""), file=out)
    print("type: " + " + ".join(dynkin_classify(Q).kinds), file=out)
    if args.edges:
        lines = [f"{s}\t{t}\t{m}" for s, t, m in Q.edge_list()]
        _write_atomic(Path(args.edges), "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- induce

def cmd_induce(args, out) -> int:
    try:
        _, C = _load_category(args.category)
        mdoc = io.load_file(args.module)
        if args.objects:
            D = full_subcategory(C, args.objects.split(","))
        elif args.keep:
            D = subcategory(C, args.keep.split(","))
        elif "subcategory" in mdoc:
            D = subcategory(C, mdoc["subcategory"])
        else:
            D = C
        N = io.module_from_document(mdoc, D)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    except (StructuralError, InputError) as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_INVALID
    R = induce_rep(N, C)
    print("dims: " + " ".join(f"{x}:{R.dims.get(x, 0)}" for x in C.objects), file=out)
    ids = set(C.identities.values())
    for i in range(C.num_morphisms):
        if i in ids:
            continue
        M = R.mats[i]
        if M.size:
            print(f"  {C.labels[i]}: {np.asarray(M).tolist()}", file=out)
    if args.json:
        _write_atomic(Path(args.json), io.dumps(io.module_to_document(R)))
    return EXIT_OK


# ---------------------------------------------------------------- info

def cmd_info(args, out) -> int:
    if args.fixtures or not args.path:
        print(f"fixture corpus: {CORPUS_DIR}", file=out)
        for p in sorted(CORPUS_DIR.glob("*.json")):
            meta = io.load_file(p).get("meta", {})
            print(f"  {p.name}: {meta.get('name', '')}", file=out)
        return EXIT_OK
    try:
        _, C = _load_category(args.path)
    except io.DocumentError as exc:
        print(f"parse error: {exc}", file=out)
        return EXIT_PARSE
    except (StructuralError, InputError) as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_INVALID
    rep = validate_ei(C)
    print(f"objects: {', '.join(map(str, C.objects))}", file=out)
    if not rep.is_ei:
        print("not EI", file=out)
        return EXIT_INVALID
    for x in C.objects:
        print(f"  |Aut({x})| = {C.aut_group(x).group.order}", file=out)
    for x in C.objects:
        for y in C.objects:
            if x != y and C.hom(x, y):
                print(f"  |C({x},{y})| = {len(C.hom(x, y))}", file=out)
    print(f"connected: {rep.is_connected}  skeletal: {rep.is_skeletal}", file=out)
    if rep.is_skeletal:
        unf = unfactorizables(C)
        print(f"unfactorizable morphisms: {len(unf)}", file=out)
        data = underlying_quiver_and_poset(C)
        print("underlying quiver: " + ", ".join(f"{s}->{t}" for s, t in data.quiver.arrows), file=out)
        print(f"free: {is_free(C)}", file=out)
    return EXIT_OK


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eirep", description="Finite EI categories and their representation type.")
    sub = ap.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    v = sub.add_parser("validate", help="check a category document")
    v.add_argument("path")

    d = sub.add_parser("decide", help="decide the representation type")
    d.add_argument("path", nargs="?")
    d.add_argument("--char", type=_char_arg, default=None, help="characteristic (default: meta.char or 0)")
    d.add_argument("--extended", action="store_true", help="also run module-theoretic top checks")
    d.add_argument("--exhaustive", action="store_true", help="evaluate every rule and cross-check")
    d.add_argument("--symmetrized", action="store_true", help="decide the category and its opposite")
    d.add_argument("--seed", type=int, default=seed)
    d.add_argument("--json", help="write the verdict document here (a directory with --all)")
    d.add_argument("--all", metavar="DIR", help="decide every category document in DIR")
    d.add_argument("--jobs", type=int, default=4)

    q = sub.add_parser("ordinary-quiver", help="ordinary quiver of the category algebra")
    q.add_argument("path")
    q.add_argument("--char", default="auto", help="'auto' or a prime not dividing any automorphism order")
    q.add_argument("--seed", type=int, default=seed)
    q.add_argument("--edges", help="write a tab-separated edge list here")

    i = sub.add_parser("induce", help="induce a representation from a subcategory")
    i.add_argument("category")
    i.add_argument("module")
    i.add_argument("--keep", help="comma-separated morphism labels of the subcategory")
    i.add_argument("--objects", help="comma-separated objects of a full subcategory")
    i.add_argument("--json", help="write the induced module document here")

    n = sub.add_parser("info", help="summary of a category document")
    n.add_argument("path", nargs="?")
    n.add_argument("--fixtures", action="store_true", help="list the shipped examples")
    return ap


COMMANDS = {"validate": cmd_validate, "decide": cmd_decide, "ordinary-quiver": cmd_ordinary_quiver,
            "induce": cmd_induce, "info": cmd_info}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except EirepError as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
