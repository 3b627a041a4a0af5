"""``fuscat`` command line.

Category arguments are file paths or built-in catalog ids. Exit codes:
0 success, 1 validation failure, 2 syntax error or unreadable input,
3 unsupported surface configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from . import catalog
from .braiding import TRANSPARENCY_TOL, centralizer, classify, monodromy, mueger_center
from .category_data import (
    ObjectClass,
    validate_embedding,
    validate_fusion_ring,
    validate_ribbon_data,
    vec_embedding,
)
from .enriched_hom import enriched_hom, internal_hom_dual_swap
from .errors import FuscatError, ParseError, SemanticError, UnsupportedConfigurationError
from .fact_homology import CYLINDER, SurfaceSpec, fh_closed_surface, fh_cylinder_check, morita_necessary
from .fp_dimension import fpdims
from .io import CategoryFile, parse_category_file, parse_class, parse_surface_spec, resolve_embedding

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _read(arg: str) -> CategoryFile:
    if os.path.exists(arg):
        with open(arg, "rb") as fh:
            return parse_category_file(fh.read())
    try:
        return catalog.load(arg)
    except KeyError:
        raise ParseError(f"{arg!r} is neither a readable file nor a catalog id") from None


def _embedding(args, cat: CategoryFile):
    if cat.ribbon is None:
        raise SemanticError("twists are required for braided computations", "twists")
    if args.base:
        return resolve_embedding(cat, _read(args.base))
    if cat.base is not None:
        try:
            base = catalog.find_by_name(cat.base.category)
        except KeyError:
            raise SemanticError(f"pass --base for {cat.base.category!r}", "base.category") from None
        return resolve_embedding(cat, base)
    return vec_embedding(cat.ribbon)


def _emit(args, text: str, payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _labels(ring, idx):
    return [ring.simples[i] for i in sorted(idx)]


def cmd_validate(args):
    cat = _read(args.file)
    reports = [validate_fusion_ring(cat.ring)]
    if reports[0].ok and cat.ribbon is not None:
        reports.append(validate_ribbon_data(cat.ribbon))
    if args.base or cat.base is not None:
        reports.append(validate_embedding(_embedding(args, cat)))
    ok = all(r.ok for r in reports)
    payload = {
        "valid": ok,
        "reports": [
            {"subject": r.subject, "violations": [str(v) for v in r.violations], "warnings": r.warnings}
            for r in reports
        ],
    }
    _emit(args, "\n".join(map(str, reports)), payload)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_fpdim(args):
    cat = _read(args.file)
    validate_fusion_ring(cat.ring).raise_if_invalid()
    d = fpdims(cat.ring)
    lines = [f"{s}\t{x:.10g}" for s, x in zip(cat.ring.simples, d.dims)]
    lines.append(f"FPdim({cat.name})\t{d.category_dim:.10g}")
    payload = {"dims": {s: float(x) for s, x in zip(cat.ring.simples, d.dims)}, "category_dim": d.category_dim}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _braided(cat):
    if cat.ribbon is None:
        raise SemanticError("twists are required for braided computations", "twists")
    validate_fusion_ring(cat.ring).raise_if_invalid()
    validate_ribbon_data(cat.ribbon).raise_if_invalid()
    d = fpdims(cat.ring)
    return d, monodromy(cat.ribbon, d)


def cmd_center(args):
    cat = _read(args.file)
    d, S = _braided(cat)
    center = _labels(cat.ring, mueger_center(S, d, args.tol))
    _emit(args, f"Muger center of {cat.name}: {{{', '.join(center)}}}", {"mueger_center": center})
    return EXIT_OK


def cmd_centralizer(args):
    cat = _read(args.file)
    d, S = _braided(cat)
    subset = [s.strip() for s in args.subset.split(",") if s.strip()]
    for s in subset:
        if s not in cat.ring.simples:
            raise SemanticError(f"unknown label {s!r}", "--subset")
    cen = _labels(cat.ring, centralizer(S, d, subset, args.tol))
    _emit(
        args,
        f"centralizer of {{{', '.join(subset)}}} in {cat.name}: {{{', '.join(cen)}}}",
        {"subset": subset, "centralizer": cen},
    )
    return EXIT_OK


def cmd_classify(args):
    cat = _read(args.file)
    emb = _embedding(args, cat)
    cls = classify(emb, args.tol)
    ring = emb.target.ring
    payload = {
        "category": cat.name,
        "base": emb.base.name,
        "embedding": emb.label_map(),
        "is_symmetric": cls.is_symmetric,
        "is_over_base": cls.is_over_base,
        "base_centralizer_equals_base": cls.base_centralizer_equals_base,
        "is_umtc_over_E": cls.is_umtc_over_E,
        "transparent_simples": _labels(ring, cls.transparent_simples),
        "notes": cls.notes,
    }
    lines = [f"{cat.name} over {emb.base.name}"]
    lines += [f"  {k}: {payload[k]}" for k in list(payload)[3:]]
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_hom(args):
    cat = _read(args.file)
    emb = _embedding(args, cat)
    ring = emb.target.ring
    m, n = parse_class(ring, getattr(args, "from")), parse_class(ring, args.to)
    res = enriched_hom(emb, m, n)
    swap = internal_hom_dual_swap(emb, m, n)
    payload = {
        "from": m.to_dict(),
        "to": n.to_dict(),
        "internal_hom": {s: int(x) for s, x in zip(emb.base.ring.simples, res.base_class.mults)},
        "hom_dim": res.hom_dim,
        "dual_swap": swap.ok,
    }
    text = f"[{m}, {n}]_{emb.base.name} = {res.base_class}\ndim Hom_C = {res.hom_dim}\n{swap}"
    _emit(args, text, payload)
    return EXIT_OK if swap.ok else EXIT_INVALID


def _surface(args, ring):
    if args.surface:
        with open(args.surface, "rb") as fh:
            return parse_surface_spec(fh.read(), ring)
    if args.variant == "cylinder":
        if args.defect or args.genus:
            raise SemanticError("a cylinder with a line defect takes no genus or point defects")
        if args.defect_fpdim is None:
            raise SemanticError("cylinder requires --defect-fpdim")
        return SurfaceSpec(variant=CYLINDER, defect_fpdim=args.defect_fpdim)
    if args.variant != "closed":
        raise UnsupportedConfigurationError(f"unknown surface variant {args.variant!r}")
    if args.genus < 0:
        raise SemanticError(f"genus must be nonnegative, got {args.genus}", "--genus")
    defects = tuple(parse_class(ring, d) for d in args.defect)
    handle = parse_class(ring, args.handle) if args.handle else None
    return SurfaceSpec(genus=args.genus, defects=defects, handle_override=handle)


def cmd_fh(args):
    cat = _read(args.file)
    emb = _embedding(args, cat)
    spec = _surface(args, emb.target.ring)
    if spec.variant == CYLINDER:
        rep = fh_cylinder_check(emb, spec, fpdims(emb.target.ring), fpdims(emb.base.ring))
        payload = {
            "checks": [{"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "passed": c.passed} for c in rep.checks],
            "conclusion": rep.conclusion,
        }
        _emit(args, str(rep), payload)
        return EXIT_OK if rep.ok else EXIT_INVALID
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        res = fh_closed_surface(emb, spec, force=args.force, tol=args.tol)
    for w in caught:
        print(f"WARNING: {w.message}", file=sys.stderr)
    inv = {s: int(x) for s, x in zip(emb.base.ring.simples, res.invariant_class.mults)}
    payload = {"invariant": inv, "gsd": res.gsd, "log": res.derivation_log}
    text = "\n".join([*res.derivation_log, f"invariant: {res.invariant_class}", f"GSD: {res.gsd}"])
    _emit(args, text, payload)
    return EXIT_OK


def cmd_morita(args):
    c, d = _read(args.file), _read(args.other)
    rep = morita_necessary(_embedding(args, c), _embedding(args, d))
    payload = {
        "checks": [{"name": x.name, "lhs": x.lhs, "rhs": x.rhs, "passed": x.passed} for x in rep.checks],
        "verdict": rep.verdict,
    }
    _emit(args, str(rep), payload)
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        entries = catalog.builtin_catalog()
        _emit(
            args,
            "\n".join(f"{e.id:20s} {e.description}" for e in entries),
            {"entries": [{"id": e.id, "description": e.description} for e in entries]},
        )
        return EXIT_OK
    if not args.id:
        raise SemanticError("catalog show needs an id")
    try:
        entry = catalog.get_entry(args.id)
    except KeyError as exc:
        raise SemanticError(exc.args[0]) from None
    payload = {"id": entry.id, "description": entry.description, "file": json.loads(entry.category_file)}
    if args.json:
        _emit(args, "", payload)
    else:
        print(f"# {entry.description}")
        print(entry.category_file, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--tol", type=float, default=TRANSPARENCY_TOL, help="transparency tolerance")
    common.add_argument("--force", action="store_true", help="bypass the anomaly-free gate")

    p = argparse.ArgumentParser(prog="fuscat", description="Skeletal fusion-category engine")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help, base=False):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        if base:
            sp.add_argument("--base", help="base category file or catalog id")
        return sp

    sp = add("validate", cmd_validate, "check fusion, twist and embedding axioms", base=True)
    sp.add_argument("file")
    add("fpdim", cmd_fpdim, "Frobenius-Perron dimensions").add_argument("file")
    add("center", cmd_center, "Muger center").add_argument("file")
    sp = add("centralizer", cmd_centralizer, "centralizer of a set of simples")
    sp.add_argument("file")
    sp.add_argument("--subset", required=True, help="comma-separated labels")
    add("classify", cmd_classify, "classify C over a base E", base=True).add_argument("file")
    sp = add("hom", cmd_hom, "internal hom [m, n]_E", base=True)
    sp.add_argument("file")
    sp.add_argument("--from", required=True, help="class expression, e.g. '1' or '2*tau'")
    sp.add_argument("--to", required=True, help="class expression, e.g. 'sigma,sigma'")
    sp = add("fh", cmd_fh, "factorization homology / ground-state degeneracy", base=True)
    sp.add_argument("file")
    sp.add_argument("--surface", help="surface spec JSON file")
    sp.add_argument("--genus", type=int, default=0)
    sp.add_argument("--defect", action="append", default=[], help="point defect class (repeatable)")
    sp.add_argument("--handle", help="handle class, required over a nontrivial base")
    sp.add_argument("--variant", default="closed", help="closed or cylinder")
    sp.add_argument("--defect-fpdim", type=float, help="FPdim of the line defect (cylinder)")
    sp = add("morita", cmd_morita, "dimension obstructions to Morita equivalence", base=True)
    sp.add_argument("file")
    sp.add_argument("other")
    sp = add("catalog", cmd_catalog, "built-in examples")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("id", nargs="?")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedConfigurationError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except FuscatError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        cls = getattr(exc, "classification", None)
        if cls is not None:
            print(f"  is_over_base={cls.is_over_base} is_umtc_over_E={cls.is_umtc_over_E}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
