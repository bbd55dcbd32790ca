"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed (regression signal),
2 usage error, 3 budget or size overflow.  All randomness flows from
explicit --seeds; identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .closure import (
    CategoryClosure,
    ClosureBudget,
    close,
    intermediate_scan,
)
from .diagrams import PartitionDiagram, enumerate_pairings, CLASS_NAMES
from .errors import BudgetExceeded, MalformedPartition, PartcatError, \
    SizeOverflow, UnknownGeometry
from .geometries import GEOMETRY_NAMES, named_geometry
from .render import ascii_render, svg_render
from .sampling import antidiag_relations_report
from .spheremodel import model_report
from .tannaka import brauer_check
from .torus import (
    embed_zh,
    freeness_witness,
    relations_json,
    relations_text,
    separate_tori,
    torus_relations,
)

DEFAULT_BUDGET = int(os.environ.get("PARTCAT_MAX_POINTS", "8"))

EXIT_OK = 0
EXIT_PROPERTY_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3


def _emit(args, payload: dict, text: str | None = None,
          csv: str | None = None) -> None:
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv" and csv is not None:
        out = csv
    else:
        out = (text if text is not None
               else json.dumps(payload, sort_keys=True, indent=2)) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _seeds(args) -> list[int]:
    return [int(s) for s in args.seeds.split(",") if s != ""]


def cmd_enumerate(args) -> int:
    diagrams = enumerate_pairings(args.upper, args.lower, args.klass)
    payload = {"upper": args.upper, "lower": args.lower, "class": args.klass,
               "count": len(diagrams), "diagrams": [str(d) for d in diagrams]}
    text = "\n".join([str(d) for d in diagrams] + [f"count: {len(diagrams)}"])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_closure(args) -> int:
    budget = ClosureBudget(args.budget)
    if args.geometry:
        gens = list(named_geometry(args.geometry).category_generators)
    else:
        gens = [PartitionDiagram.parse(t) for t in args.generator or []]
    c = close(gens, budget, seed_matching_base=not args.no_base)
    payload = c.to_json()
    _emit(args, payload)
    return EXIT_OK


def cmd_member(args) -> int:
    budget = ClosureBudget(args.budget)
    d = PartitionDiagram.parse(args.diagram)
    gens = list(named_geometry(args.geometry).category_generators)
    c = close(gens, budget)
    found = c.contains(d)
    verdict = "IN" if found else "NOT-FOUND-WITHIN-BUDGET"
    _emit(args, {"geometry": args.geometry, "diagram": str(d),
                 "budget": args.budget, "saturated": c.saturated,
                 "verdict": verdict}, verdict)
    return EXIT_OK


def cmd_scan_intermediate(args) -> int:
    report = intermediate_scan(ClosureBudget(args.budget))
    lines = [f"{e['pairing']}  [{e['n_points']} pts, orbit {e['orbit_size']}]"
             f" -> {e['classification']}" for e in report["entries"]]
    lines.append(f"counts: {report['counts']}")
    _emit(args, report, "\n".join(lines))
    return EXIT_PROPERTY_FAILED if report["counts"]["OTHER"] else EXIT_OK


def cmd_brauer(args) -> int:
    g = named_geometry(args.geometry)
    category = None
    if g.class_predicate is None:
        category = close(list(g.category_generators),
                         ClosureBudget(max(2 * args.budget, 8)))
    report = brauer_check(g, args.N, args.budget, _seeds(args),
                          category=category)
    rows = ["upper,lower,n_diagrams,dim_span,verdict"]
    lines = []
    for p in report["pairs"]:
        rows.append(f"{p['upper']},{p['lower']},{p['n_diagrams']},"
                    f"{p['dim_span']},{p['verdict']}")
        lines.append(f"({p['upper']!r},{p['lower']!r}): span {p['dim_span']}"
                     f" -> {p['verdict']}")
    lines.append(f"all_equal: {report['all_equal']}")
    _emit(args, report, "\n".join(lines), "\n".join(rows) + "\n")
    if report["experimental_sampler"]:
        hard_ok = all(p["verdict"] != "SPAN-NOT-CONTAINED"
                      for p in report["pairs"])
        return EXIT_OK if hard_ok else EXIT_PROPERTY_FAILED
    return EXIT_OK if report["all_equal"] else EXIT_PROPERTY_FAILED


def cmd_torus_relations(args) -> int:
    g = named_geometry(args.geometry)
    c = close(list(g.category_generators), ClosureBudget(args.budget))
    rels = torus_relations(c, args.N, include_trivial=args.include_trivial)
    payload = {"geometry": args.geometry, "N": args.N, "budget": args.budget,
               "relations": relations_json(rels)}
    _emit(args, payload, relations_text(rels))
    return EXIT_OK


def cmd_freeness(args) -> int:
    x = embed_zh(((1, -1), (2, 1)), args.N)
    y = embed_zh(((1, 1), (2, -1)), args.N)
    report = freeness_witness([x, y], args.max_len)
    verdict = "PASS" if report["all_nontrivial"] else "FAIL"
    _emit(args, report,
          f"{verdict}: {report['words_checked']} reduced words checked")
    return EXIT_OK if report["all_nontrivial"] else EXIT_PROPERTY_FAILED


def cmd_separate_tori(args) -> int:
    report = separate_tori(args.N)
    ok = report["monomial_trivial"] and not report["zh_trivial"]
    text = (f"word {report['word']}\n"
            f"monomial model: {report['monomial_value']}"
            f" (trivial: {report['monomial_trivial']})\n"
            f"zh image: {report['zh_value']}"
            f" (trivial: {report['zh_trivial']})")
    _emit(args, report, text)
    return EXIT_OK if ok else EXIT_PROPERTY_FAILED


def cmd_sphere_model(args) -> int:
    reports = [model_report(args.N, s) for s in _seeds(args)]
    ok = all(r["block_formulae"] and r["half_commutation"]
             and r["starstar_relations"] and r["normalization_on_unit_point"]
             for r in reports)
    if args.N >= 2:
        ok = ok and all(r["noncommutativity_witness"] for r in reports)
    payload = {"N": args.N, "seeds": _seeds(args), "reports": reports,
               "all_ok": ok}
    rows = ["seed,block_formulae,half_commutation,starstar,normalization,"
            "witness"]
    for r in reports:
        rows.append(f"{r['seed']},{r['block_formulae']},"
                    f"{r['half_commutation']},{r['starstar_relations']},"
                    f"{r['normalization_on_unit_point']},"
                    f"{r['noncommutativity_witness']}")
    _emit(args, payload, f"all checks pass: {ok}", "\n".join(rows) + "\n")
    return EXIT_OK if ok else EXIT_PROPERTY_FAILED


def cmd_model_relations(args) -> int:
    kind = ("antidiag_real_pair" if args.variant == "real"
            else "antidiag_complex_pair")
    reports = [antidiag_relations_report(kind, args.N, s) for s in _seeds(args)]
    ok = all(r["ok"] for r in reports)
    _emit(args, {"kind": kind, "N": args.N, "reports": reports, "all_ok": ok},
          f"all relations hold exactly: {ok}")
    return EXIT_OK if ok else EXIT_PROPERTY_FAILED


def cmd_render(args) -> int:
    d = PartitionDiagram.parse(args.diagram)
    out = svg_render(d) if args.render_format == "svg" else ascii_render(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="partcat",
        description="exact engine for two-colored pairing categories")
    ap.add_argument("--format", choices=("text", "json", "csv"),
                    default="text")
    ap.add_argument("--out", help="write output to this path")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="pairings in a named class")
    p.add_argument("--upper", default="")
    p.add_argument("--lower", default="")
    p.add_argument("--class", dest="klass", choices=CLASS_NAMES, default="P2")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("closure", help="generate a category closure")
    p.add_argument("--geometry", choices=[n for n in GEOMETRY_NAMES] +
                   [n.replace("*", "star").replace("+", "plus")
                    for n in GEOMETRY_NAMES])
    p.add_argument("--generator", action="append",
                   help="diagram text form; repeatable")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--no-base", action="store_true",
                   help="do not seed the matching cups and caps")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("member", help="closure membership within budget")
    p.add_argument("--geometry", required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("scan-intermediate",
                       help="classify closures of single crossings")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_scan_intermediate)

    p = sub.add_parser("brauer", help="span vs sampled intertwiner spaces")
    p.add_argument("--geometry", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--budget", type=int, default=4)
    p.add_argument("--seeds", default="1,2,3")
    p.set_defaults(func=cmd_brauer)

    p = sub.add_parser("torus-relations",
                       help="relations of the diagonal torus group")
    p.add_argument("--geometry", required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--include-trivial", action="store_true")
    p.set_defaults(func=cmd_torus_relations)

    p = sub.add_parser("freeness", help="free-subgroup witness in Z * Z^N")
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--N", type=int, default=2)
    p.set_defaults(func=cmd_freeness)

    p = sub.add_parser("separate-tori",
                       help="word separating the two torus models")
    p.add_argument("--N", type=int, default=2)
    p.set_defaults(func=cmd_separate_tori)

    p = sub.add_parser("sphere-model", help="antidiagonal 2x2 model checks")
    p.add_argument("--N", type=int, default=4)
    p.add_argument("--seeds", default=",".join(str(i) for i in range(1, 21)))
    p.set_defaults(func=cmd_sphere_model)

    p = sub.add_parser("model-relations",
                       help="defining relations of the antidiagonal samples")
    p.add_argument("--variant", choices=("real", "complex"), required=True)
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--seeds", default="1,2,3")
    p.set_defaults(func=cmd_model_relations)

    p = sub.add_parser("render", help="draw a diagram")
    p.add_argument("diagram")
    p.add_argument("--format", dest="render_format",
                   choices=("ascii", "svg"), default="ascii")
    p.set_defaults(func=cmd_render)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, SizeOverflow) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (MalformedPartition, UnknownGeometry, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PartcatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
