"""Command line entry point: ``distspec <command> ...``.

Exit status is 0 when everything checked passes, 1 when a verification
failed, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from . import harness
from .classify import ClassifyPrecondition, classify_spectral, classify_structural, is_H_member, h_form
from .families import FamilyError, build_family, expected_spectrum, parse_family
from .graph import Graph, GraphError, distance_matrix, parse_graph6, to_graph6
from .linalg import char_poly, real_roots
from .partitions import (
    PartitionError, divisor_matrix, divisor_radius, is_distance_equitable, orbit_partition, refine_distance_equitable,
    verify_commutation, verify_divisibility, verify_radius,
)
from .spectra import distance_spectrum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _graphs(arg: str) -> Iterator[Graph]:
    if arg == "-":
        for _, g in harness.read_graph6_stream(sys.stdin):
            yield g
    else:
        yield parse_graph6(arg)


def _emit(obj: dict, as_json: bool, text: str) -> None:
    print(json.dumps(obj, sort_keys=True, default=str) if as_json else text)


def cmd_spectrum(args) -> int:
    for g in _graphs(args.graph):
        spec = distance_spectrum(g)
        out = {"graph6": to_graph6(g), "spectrum": [[v, m] for v, m in spec.entries], "text": str(spec)}
        text = f"{to_graph6(g)}\t{spec}"
        if args.exact:
            p = char_poly(distance_matrix(g).rows())
            roots = real_roots(p)
            out.update(char_poly=p.descending(), roots=[[v, m] for v, m in roots])
            text += f"\n  char_poly: {p}\n  roots: " + ", ".join(f"{v:.10f}^{m}" if m > 1 else f"{v:.10f}" for v, m in roots)
        _emit(out, args.json, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    status = EXIT_OK
    for g in _graphs(args.graph):
        a = classify_structural(g)
        b = classify_spectral(g)
        form = h_form(g)
        out = {
            "graph6": to_graph6(g),
            "structural": harness._verdict_dict(a),
            "spectral": harness._verdict_dict(b),
            "H_member": is_H_member(g),
            "H_form": str(form) if form else None,
            "agree": a.in_class == b.in_class,
        }
        if not out["agree"]:
            status = EXIT_FAIL
        text = (f"{to_graph6(g)}\tstructural={'member' if a.in_class else 'non-member'}"
                f"\tspectral={'member' if b.in_class else 'non-member'}")
        if a.family is not None:
            text += f"\tfamily={a.family}"
        if a.witness:
            text += f"\twitness={a.witness}"
        if form:
            text += f"\tH-form={form}"
        _emit(out, args.json, text)
    return status


def cmd_partition(args) -> int:
    status = EXIT_OK
    for g in _graphs(args.graph):
        p = orbit_partition(g) if args.orbit else refine_distance_equitable(g)
        eq = is_distance_equitable(g, p)
        out = {"graph6": to_graph6(g), "cells": [list(c) for c in p.cells], "equitable": eq}
        if eq:
            out.update(
                divisor=divisor_matrix(g, p).rows(),
                commutes=verify_commutation(g, p),
                divides=verify_divisibility(g, p),
                radius_matches=verify_radius(g, p),
                radius=divisor_radius(g, p),
            )
        if not all(out[k] for k in ("equitable", "commutes", "divides", "radius_matches") if k in out):
            status = EXIT_FAIL
        text = "\n".join(f"{k}: {v}" for k, v in out.items())
        _emit(out, args.json, text)
    return status


def cmd_family(args) -> int:
    spec = parse_family(args.tag, args.params)
    g = build_family(spec)
    if args.check:
        res = harness.compare_closed_form(spec)
        print(f"{spec}\trow={res['row']}\t" + ("ok" if not res["problems"] else "; ".join(res["problems"])))
        return EXIT_OK if not res["problems"] else EXIT_FAIL
    if args.spectrum:
        cf = expected_spectrum(spec)
        print(f"{spec}\tcomputed={distance_spectrum(g)}")
        print(f"\trow {cf.row}: fixed {dict(cf.fixed)}, f(x) = {cf.poly}")
        return EXIT_OK
    print(to_graph6(g))
    return EXIT_OK


def _source(args) -> harness.GraphSource:
    if args.enum is not None:
        return harness.GraphSource("enum", args.enum, dedup=args.dedup)
    if args.g6 is not None:
        return harness.GraphSource("graph6-file", args.g6, skip_bad=args.skip_bad)
    raise UsageError("a graph source is required: --enum N or --g6 FILE")


def _finish(rep: harness.VerificationReport, json_out: str | None) -> int:
    if json_out:
        text = rep.to_json()
        if json_out == "-":
            print(text)
        else:
            with open(json_out, "w") as fh:
                fh.write(text + "\n")
    print(f"{rep.campaign}: {rep.passes}/{rep.total} passed, {len(rep.failures)} failed ({rep.elapsed_ms} ms)",
          file=sys.stderr if json_out == "-" else sys.stdout)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    args.campaign = harness.ALIASES.get(args.campaign, args.campaign)
    if args.campaign == "closed-forms":
        rep = harness.campaign_closed_forms(args.r_max, args.p_max, jobs=args.jobs)
    elif args.campaign == "h-collisions":
        rep = harness.campaign_h_collisions(args.max_order)
    else:
        rep = harness.CAMPAIGNS[args.campaign](_source(args), jobs=args.jobs)
    return _finish(rep, args.json)


def cmd_dds(args) -> int:
    if args.family:
        target = build_family(parse_family(args.family[0], [int(x) for x in args.family[1:]]))
    else:
        target = parse_graph6(args.g6_target)
    src = _source(args)
    rep = harness.campaign_dds(target, src.graphs(), src.describe())
    return _finish(rep, args.json)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="distspec", description="Distance spectra of graphs and membership checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="distance spectrum of a graph6 string ('-' reads stdin)")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="also print char poly and isolated roots")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="structural and spectral membership verdicts")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("partition", help="coarsest distance equitable partition and divisor checks")
    p.add_argument("graph")
    p.add_argument("--orbit", action="store_true", help="use the automorphism orbit partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("family", help="build a named family member, e.g. 'S(2,1)' or 'K2vT4 3 0'")
    p.add_argument("tag")
    p.add_argument("params", nargs="*", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--g6", action="store_true", help="print graph6 (default)")
    mode.add_argument("--spectrum", action="store_true", help="computed spectrum and the closed form")
    mode.add_argument("--check", action="store_true", help="verify the closed form")
    p.set_defaults(func=cmd_family)

    def add_source(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--enum", type=int, metavar="N", help="all connected graphs on N vertices")
        g.add_argument("--g6", metavar="FILE", help="graph6 file ('-' for stdin)")
        p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class (N <= 7)")
        p.add_argument("--skip-bad", action="store_true", help="skip unparsable graph6 lines")
        p.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", choices=sorted(harness.CAMPAIGNS) + ["closed-forms", "h-collisions"] + sorted(harness.ALIASES))
    add_source(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--p-max", type=int, default=5)
    p.add_argument("--max-order", type=int, default=40)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dds", help="search a universe for cospectral mates of a target")
    t = p.add_mutually_exclusive_group(required=True)
    t.add_argument("--family", nargs="+", metavar=("TAG", "PARAMS"))
    t.add_argument("--g6-target", metavar="S")
    add_source(p)
    p.set_defaults(func=cmd_dds)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyError, ClassifyPrecondition, harness.SourceError, PartitionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
