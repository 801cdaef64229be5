"""Command-line interface.

Subcommands: gamma-a, gamma-b, check, witness, analyze, batch, verify.
Exit codes are a stable contract: 0 success, 1 parse/I-O failure,
2 precondition failure, 3 verification mismatch, 4 resource bound.

Reports on stdout are byte-identical across runs on identical input;
timing goes to stderr so it cannot break that.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import engine, spectral, witness
from .errors import (BoundExceededError, GraphFormatError, PreconditionError,
                     SepGammaError, VerificationError)
from .graphs import Graph, classify, parse_graph, to_edge_list_text
from .interior import MAX_CUT_SUM_VERTICES
from .polynomials import Poly, check_properties
from .ehrhart import oracle_hstar_a, reflexivity_check
from .polynomials import hstar_to_gamma

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3
EXIT_BOUND = 4

BOUND_KEYS = ("cut-sum", "matched-sets", "hrep-dim", "hrep-points", "box",
              "cliques", "trees")
BATCH_AGREEMENT_MAX_N = 12


# ---------------------------------------------------------------------------
# Input and output helpers
# ---------------------------------------------------------------------------

def _load_graph(path: str, strict: bool = False) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None
    return parse_graph(text, strict=strict)


def _poly_text(p, fmt: str):
    if p is None:
        return None if fmt == "structured" else "n/a"
    if fmt == "pretty":
        return p.pretty()
    if fmt == "structured":
        return [str(c) if isinstance(c, Fraction) else c for c in p.coeffs]
    return p.coeff_text()


def _yn(flag: bool) -> str:
    return "yes" if flag else "NO"


def _parse_bound_overrides(pairs) -> dict:
    out = {}
    for item in pairs or ():
        if "=" not in item:
            raise GraphFormatError(f"bad --bound-override {item!r}, want name=value")
        name, _, value = item.partition("=")
        if name not in BOUND_KEYS:
            raise GraphFormatError(
                f"unknown bound {name!r}; known: {', '.join(BOUND_KEYS)}")
        try:
            out[name] = int(value)
        except ValueError:
            raise GraphFormatError(f"bound value {value!r} is not an integer") from None
    return out


def _oracle_kwargs(bounds: dict) -> dict:
    kw = {}
    if "hrep-dim" in bounds:
        kw["max_dim"] = bounds["hrep-dim"]
    if "hrep-points" in bounds:
        kw["max_points"] = bounds["hrep-points"]
    if "box" in bounds:
        kw["budget"] = bounds["box"]
    return kw


def _emit(pairs) -> None:
    for key, value in pairs:
        print(f"{key}: {value}")


def _result_doc(res, fmt: str) -> list:
    return [
        ("method", res.method),
        ("gamma", _poly_text(res.gamma, fmt)),
        ("hstar", _poly_text(res.hstar, fmt)),
        ("volume", res.volume),
        ("dim", res.dim),
    ]


def _print_report(doc: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(doc, indent=2))
    else:
        for key, value in doc.items():
            if isinstance(value, dict):
                print(f"{key}:")
                for k2, v2 in value.items():
                    print(f"  {k2}: {v2}")
            elif isinstance(value, list):
                print(f"{key}:")
                for item in value:
                    print(f"  {item}")
            else:
                print(f"{key}: {value}")


def _properties_doc(p: Poly, fmt: str) -> dict:
    rep = check_properties(p)
    doc = {
        "degree": rep.degree,
        "palindromic": _yn(rep.palindromic),
        "unimodal": _yn(rep.unimodal),
        "log-concave": _yn(rep.log_concave),
        "gamma-positive": _yn(rep.gamma_positive),
        "real-rooted": _yn(rep.real_rooted),
        "real-root-count": rep.real_root_count,
    }
    if rep.gamma is not None:
        doc["gamma"] = _poly_text(rep.gamma, fmt)
    return doc


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gamma_a(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    g = _load_graph(args.path)
    kw = {}
    if args.method in ("auto", "cuts"):
        kw["max_n"] = bounds.get("cut-sum", MAX_CUT_SUM_VERTICES)
    if args.method == "ehrhart":
        kw.update(_oracle_kwargs(bounds))
    res = engine.gamma_a(g, args.method, **kw)
    doc = {"input": args.path, "command": "gamma-a"}
    doc.update(_result_doc(res, args.format))
    _print_report(doc, args.format)
    return EXIT_OK


def cmd_gamma_b(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    g = _load_graph(args.path)
    kw = {}
    if args.method in ("auto", "interior"):
        kw["max_n"] = bounds.get("matched-sets", 16)
    if args.method == "ehrhart":
        kw.update(_oracle_kwargs(bounds))
    res = engine.gamma_b_dispatch(g, args.method, **kw)
    doc = {"input": args.path, "command": "gamma-b"}
    doc.update(_result_doc(res, args.format))
    _print_report(doc, args.format)
    return EXIT_OK


def cmd_check(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    g = _load_graph(args.path)
    okw = _oracle_kwargs(bounds)
    if args.polytope == "a":
        if args.method not in ("auto", "ehrhart"):
            raise PreconditionError(
                "no formula computes the type-A polytope of a raw graph; "
                "--polytope a implies the ehrhart oracle")
        data = oracle_hstar_a(g, **okw)
        hstar = data.hstar
        gamma = (hstar_to_gamma(hstar)
                 if reflexivity_check(hstar, hstar.degree) else None)
        res = engine.SepResult(gamma, hstar, hstar(1), hstar.degree, "ehrhart")
    elif args.polytope == "ahat":
        res = engine.gamma_a(g, args.method, **(_oracle_kwargs(bounds)
                                                if args.method == "ehrhart" else {}))
    else:
        res = engine.gamma_b_dispatch(g, args.method,
                                      **(_oracle_kwargs(bounds)
                                         if args.method == "ehrhart" else {}))
    doc = {"input": args.path, "command": "check", "polytope": args.polytope}
    doc.update(_result_doc(res, args.format))
    doc["hstar properties"] = _properties_doc(res.hstar, args.format)
    if res.gamma is not None:
        doc["gamma properties"] = _properties_doc(res.gamma, args.format)
    _print_report(doc, args.format)
    return EXIT_OK


def cmd_witness(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    g = _load_graph(args.path)
    kw = {"max_cliques": bounds["cliques"]} if "cliques" in bounds else {}
    fw = witness.witness_a(g, **kw) if args.type == "a" else witness.witness_b(g, **kw)
    doc = {
        "input": args.path,
        "command": "witness",
        "type": args.type,
        "target-gamma": _poly_text(fw.target, args.format),
        "f-poly": _poly_text(fw.f_poly, args.format),
        "witness-vertices": fw.witness_graph.n,
        "witness-edges": fw.witness_graph.edge_count,
        "verdict": "ok",
    }
    if args.format == "structured":
        doc["witness-edge-list"] = fw.witness_graph.sorted_edges()
        print(json.dumps(doc, indent=2))
    else:
        _print_report(doc, args.format)
        print("witness-edge-list:")
        sys.stdout.write(to_edge_list_text(fw.witness_graph))
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _load_graph(args.path)
    cls = classify(g)
    doc = {
        "input": args.path,
        "command": "analyze",
        "n": g.n,
        "edges": g.edge_count,
        "connected": _yn(cls.connected),
        "bipartite": _yn(cls.bipartite),
    }
    if cls.bipartition is not None:
        doc["part1"] = sorted(cls.bipartition.part1)
        doc["part2"] = sorted(cls.bipartition.part2)
    doc.update({
        "forest": _yn(cls.forest),
        "cactus": _yn(cls.cactus),
        "unique-even-cycle": _yn(cls.unique_even_cycle_condition),
        "simple-cycle-count": len(cls.simple_cycles),
    })
    if 0 < len(cls.simple_cycles) <= 50:
        doc["simple-cycles"] = [list(c) for c in cls.simple_cycles]
    _print_report(doc, args.format)
    return EXIT_OK


def _verify_checks(g: Graph, level: str, bounds: dict) -> list:
    """Run the cross-method suite; returns (name, status, detail) triples
    where status is pass | FAIL | skipped."""
    checks = []
    cls = classify(g)
    cut_max = bounds.get("cut-sum", MAX_CUT_SUM_VERTICES)

    res_formula = engine.gamma_a_suspension(g) if cls.unique_even_cycle_condition else None
    res_cuts = engine.gamma_a_cut_sum(g, max_n=cut_max) if g.n <= cut_max else None

    if res_formula is not None and res_cuts is not None:
        ok = res_formula.gamma == res_cuts.gamma
        checks.append(("a-formula-vs-cuts", ok,
                       f"{res_formula.gamma.coeff_text()} vs {res_cuts.gamma.coeff_text()}"))
    else:
        why = ("even-cycle condition fails" if res_formula is None
               else f"cut sum bound {cut_max}")
        checks.append(("a-formula-vs-cuts", None, why))

    res_b = None
    if cls.bipartite:
        res_b_int = engine.gamma_b_interior(g, max_n=bounds.get("matched-sets", 16))
        res_b = res_b_int
        if cls.cactus:
            res_b_formula = engine.gamma_b(g)
            ok = res_b_formula.gamma == res_b_int.gamma
            checks.append(("b-formula-vs-interior", ok,
                           f"{res_b_formula.gamma.coeff_text()} vs {res_b_int.gamma.coeff_text()}"))
        else:
            checks.append(("b-formula-vs-interior", None, "not a cactus"))
    else:
        checks.append(("b-formula-vs-interior", None, "not bipartite"))

    best_a = res_formula or res_cuts
    if best_a is not None:
        hs = best_a.hstar
        ok = (hs.is_palindromic() and hs.degree == best_a.dim
              and hs(1) == best_a.volume
              and best_a.volume == (1 << best_a.dim) * best_a.gamma(Fraction(1, 4)))
        checks.append(("a-hstar-invariants", ok,
                       f"hstar={hs.coeff_text()} volume={best_a.volume}"))

    if level == "full":
        okw = _oracle_kwargs(bounds)
        if best_a is not None:
            oracle_a = engine.gamma_a_oracle(g, **okw)
            ok = oracle_a.hstar == best_a.hstar
            checks.append(("a-vs-ehrhart", ok,
                           f"{best_a.hstar.coeff_text()} vs {oracle_a.hstar.coeff_text()}"))
        if res_b is not None:
            oracle_b = engine.gamma_b_oracle(g, **okw)
            ok = oracle_b.hstar == res_b.hstar
            checks.append(("b-vs-ehrhart", ok,
                           f"{res_b.hstar.coeff_text()} vs {oracle_b.hstar.coeff_text()}"))
        if cls.cactus:
            ok = spectral.verify_gamma_mu_bridge(g)
            checks.append(("mu-bridge", ok, f"samples 1..{g.n + 1}"))
        else:
            checks.append(("mu-bridge", None, "not a cactus"))
    return checks


def cmd_verify(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    g = _load_graph(args.path)
    checks = _verify_checks(g, args.level, bounds)
    failed = False
    if args.format == "structured":
        doc = {
            "input": args.path,
            "command": "verify",
            "level": args.level,
            "checks": [
                {"name": name,
                 "status": "skipped" if ok is None else ("pass" if ok else "FAIL"),
                 "detail": detail}
                for name, ok, detail in checks
            ],
        }
        print(json.dumps(doc, indent=2))
        failed = any(ok is False for _, ok, _ in checks)
    else:
        print(f"input: {args.path}")
        print(f"level: {args.level}")
        for name, ok, detail in checks:
            if ok is None:
                print(f"{name}: skipped ({detail})")
            elif ok:
                print(f"{name}: pass")
            else:
                print(f"{name}: FAIL ({detail})")
                failed = True
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_batch(args) -> int:
    bounds = _parse_bound_overrides(args.bound_override)
    try:
        names = sorted(
            e.name for e in os.scandir(args.dir) if e.is_file()
        )
    except OSError as exc:
        raise GraphFormatError(f"cannot read directory {args.dir}: {exc}") from None
    rows = []
    failures = []
    cut_max = min(bounds.get("cut-sum", MAX_CUT_SUM_VERTICES), BATCH_AGREEMENT_MAX_N)
    for name in names:
        path = os.path.join(args.dir, name)
        try:
            g = _load_graph(path)
            cls = classify(g)
            res = engine.gamma_a(g, "auto",
                                 **({"max_n": bounds.get("cut-sum", MAX_CUT_SUM_VERTICES)}
                                    if not cls.unique_even_cycle_condition else {}))
            flags = [label for label, on in (
                ("connected", cls.connected),
                ("bipartite", cls.bipartite),
                ("forest", cls.forest),
                ("cactus", cls.cactus),
                ("uec", cls.unique_even_cycle_condition),
            ) if on]
            if res.method == "formula" and g.n <= cut_max:
                other = engine.gamma_a_cut_sum(g, max_n=cut_max)
                agreement = "yes" if other.gamma == res.gamma else "no"
            else:
                agreement = "n/a"
            rows.append({
                "name": name,
                "n": g.n,
                "edges": g.edge_count,
                "class": "+".join(flags),
                "gamma": res.gamma.coeff_text(),
                "hstar": res.hstar.coeff_text(),
                "volume": res.volume,
                "real_rooted": _yn(check_properties(res.hstar).real_rooted),
                "agreement": agreement,
            })
        except SepGammaError as exc:
            failures.append((name, str(exc)))
    if args.out_format == "structured":
        print(json.dumps(rows, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=[
            "name", "n", "edges", "class", "gamma", "hstar", "volume",
            "real_rooted", "agreement"])
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    if failures:
        for name, msg in failures:
            print(f"FAILED {name}: {msg}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepgamma",
        description="gamma/h*-polynomials and normalized volumes of "
                    "symmetric edge polytopes, exactly.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "coeffs", "structured"),
                        default="coeffs", help="polynomial/report rendering")
    common.add_argument("--bound-override", action="append", metavar="NAME=VALUE",
                        help=f"override a resource guard ({', '.join(BOUND_KEYS)})")
    common.add_argument("--seed", type=int, default=None,
                        help="reserved; all computation is deterministic")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker pool size; results are identical for any value")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma-a", parents=[common],
                       help="suspension polytope of the input graph")
    p.add_argument("path")
    p.add_argument("--method", choices=("auto", "formula", "cuts", "ehrhart"),
                   default="auto")
    p.set_defaults(func=cmd_gamma_a)

    p = sub.add_parser("gamma-b", parents=[common],
                       help="type-B polytope of the input graph")
    p.add_argument("path")
    p.add_argument("--method", choices=("auto", "formula", "interior", "ehrhart"),
                   default="auto")
    p.set_defaults(func=cmd_gamma_b)

    p = sub.add_parser("check", parents=[common],
                       help="property report of h* and gamma")
    p.add_argument("path")
    p.add_argument("--polytope", choices=("a", "ahat", "b"), default="a",
                   help="a = type A of the graph itself (oracle), "
                        "ahat = suspension, b = type B")
    p.add_argument("--method", choices=("auto", "formula", "cuts", "interior",
                                        "ehrhart"), default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witness", parents=[common],
                       help="flag-complex witness for the gamma-polynomial")
    p.add_argument("path")
    p.add_argument("--type", choices=("a", "b"), required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("analyze", parents=[common], help="structural classification")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("batch", parents=[common],
                       help="one report row per graph file in a directory")
    p.add_argument("dir")
    p.add_argument("--out-format", choices=("csv", "structured"), default="csv")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("verify", parents=[common],
                       help="cross-method agreement suite on one input")
    p.add_argument("path")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BoundExceededError as exc:
        print(f"resource bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    finally:
        elapsed = int((time.perf_counter() - start) * 1000)
        print(f"timing_ms: {elapsed}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
