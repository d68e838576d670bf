"""Command-line front end.

Exit codes: 0 on success, 1 on bad input or an inconclusive enumeration,
2 when an internal identity fails (a bug, not an input problem).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from . import enumeration, invariants, knot_table, xu
from .errors import ConsistencyError
from .hecke import homfly, pretzel_homfly, torus_homfly
from .laurent import parse_poly, render_poly
from .words import parse_word, render_word

ENV_MAX_BANDS = "BRAID3_MAX_BANDS"


def _default_cap() -> int:
    value = os.environ.get(ENV_MAX_BANDS)
    return int(value) if value else enumeration.DEFAULT_MAX_BANDS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid3",
        description="Exact invariants of closed 3-braids in the band presentation.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="human-readable text or JSON records",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="minimal band word, Euler characteristic, genus")
    p.add_argument("word")

    p = sub.add_parser("homfly", help="skein polynomial of a closed braid word")
    p.add_argument("word")

    p = sub.add_parser("invariants", help="full invariant report for a word")
    p.add_argument("word")

    p = sub.add_parser("enumerate", help="minimal-word census up to a band count")
    p.add_argument("--max-bands", type=int, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--table", default=None)

    p = sub.add_parser("check-poly", help="decide 3-braid realizability of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--table", default=None)
    p.add_argument("--max-bands", type=int, default=None)

    p = sub.add_parser("torus", help="skein polynomial of the (2,k) torus link")
    p.add_argument("k", type=int)

    p = sub.add_parser("pretzel", help="skein polynomial of a parallel pretzel link")
    p.add_argument("twists", help="comma-separated non-negative twist counts")

    p = sub.add_parser("make-table", help="write a reference table from braid words")
    p.add_argument("-o", "--output", default=None)

    return parser


def _emit(args, structured: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(structured, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _reduce_payload(word) -> dict:
    nf = xu.reduce(word)
    chi = 3 - nf.minimal_length
    return {
        "kind": nf.kind,
        "L": render_word(nf.L),
        "k": nf.k,
        "R": render_word(nf.R),
        "minimal_word": render_word(nf.minimal_word),
        "minimal_length": nf.minimal_length,
        "chi": chi,
        "genus": xu.genus(word),
        "quasipositive": xu.is_strongly_quasipositive(word),
    }


def _run(args) -> int:
    cap = _default_cap()

    if args.command == "reduce":
        word = parse_word(args.word)
        payload = _reduce_payload(word)
        _emit(args, payload, [f"{k}: {v}" for k, v in payload.items()])
        return 0

    if args.command == "homfly":
        word = parse_word(args.word)
        text = render_poly(homfly(word))
        _emit(args, {"polynomial": text}, [text])
        return 0

    if args.command == "invariants":
        word = parse_word(args.word)
        rep = invariants.report(word)
        payload = {
            "word": render_word(rep.word),
            "minimal_length": rep.minimal_length,
            "chi": rep.chi,
            "components": rep.components,
            "genus": rep.genus,
            "quasipositive": rep.quasipositive,
            "polynomial": render_poly(rep.polynomial),
            "max_deg_z": rep.max_deg_z,
            "min_deg_v": rep.min_deg_v,
            "max_deg_v": rep.max_deg_v,
            "leading_class": str(rep.leading_class),
            "mwf_bound": rep.mwf_bound,
            "conway": rep.conway.render(),
            "alexander": rep.alexander.render(),
        }
        _emit(args, payload, [f"{k}: {v}" for k, v in payload.items()])
        return 0

    if args.command == "enumerate":
        max_bands = args.max_bands if args.max_bands is not None else cap
        table = knot_table.load_table(args.table) if args.table else None
        rows = []
        if args.genus is not None:
            entries = enumeration.genus_census(args.genus, table=table, cap=max(cap, max_bands))
        else:
            entries = []
            for n in range(max_bands + 1):
                entries.extend(enumeration.enumerate_minimal(n, cap=max(cap, max_bands)))
            if table is not None:
                entries = [
                    dataclasses.replace(e, matched_name=table.match(e.polynomial))
                    for e in entries
                ]
        for e in entries:
            rows.append(
                {
                    "length": e.length,
                    "word": render_word(e.word),
                    "kind": e.kind,
                    "components": e.components,
                    "chi": e.chi,
                    "polynomial": render_poly(e.polynomial),
                    "name": e.matched_name or "",
                }
            )
        if args.format == "structured":
            print(json.dumps(rows, sort_keys=True))
        else:
            print("length,word,kind,components,chi,polynomial,name")
            for r in rows:
                print(
                    f"{r['length']},\"{r['word']}\",{r['kind']},{r['components']},"
                    f"{r['chi']},\"{r['polynomial']}\",{r['name']}"
                )
        return 0

    if args.command == "check-poly":
        p = parse_poly(args.poly)
        table = knot_table.load_table(args.table) if args.table else None
        max_bands = args.max_bands if args.max_bands is not None else cap
        verdict = enumeration.realizable_3braid(p, table=table, cap=max_bands)
        name = table.match(p) if table is not None else None
        payload = {
            "realizable": verdict.realizable,
            "reason": verdict.reason,
            "witness": render_word(verdict.witness) if verdict.witness else None,
            "matched_name": name,
        }
        lines = [
            "realizable" if verdict.realizable else f"not realizable ({verdict.reason})"
        ]
        if verdict.witness:
            lines.append(f"witness: {render_word(verdict.witness)}")
        if name:
            lines.append(f"matched name: {name}")
        _emit(args, payload, lines)
        return 0

    if args.command == "torus":
        text = render_poly(torus_homfly(args.k))
        _emit(args, {"polynomial": text}, [text])
        return 0

    if args.command == "pretzel":
        twists = [int(t) for t in args.twists.split(",") if t.strip()]
        text = render_poly(pretzel_homfly(twists))
        _emit(args, {"polynomial": text}, [text])
        return 0

    if args.command == "make-table":
        content = knot_table.render_table(knot_table.make_table())
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(content)
        else:
            sys.stdout.write(content)
        return 0

    raise AssertionError("unreachable")


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
