"""Command-line interface.

Subcommands: analyze (full report on one set), cover (minimal AP/BP
covers), iso (sum-structure isomorphism tools), verify (exhaustive claim
sweeps), search (extremal-set frontier search and the doubling-ratio
histogram), examples (the parametric families and their deficiency
identities).

All commands emit the same envelope — schema_version, tool, version,
command, input echo, elapsed_ms, report — as JSON (--json) or as an
indented text rendering of the very same dictionary (--pretty, the
default).  Special formats: search --jsonl streams one record per line;
search --histogram --csv emits bare CSV.

Exit codes: 0 success; 1 a violation or counterexample was found by
verify/search (so CI can gate on it); 2 usage or parse error; 3 resource
ceiling exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import ParseError, ResourceCeilingError
from .intset import IntSet, parse_set, render
from .isomorphism import (
    F2Progression,
    embed_bp_as_two_lines,
    f2_rank,
    is_f2_isomorphism,
    parse_planar,
    planar_sumset_stats,
    render_planar,
)
from .progressions import ap_cover, bp_cover, bp_cover_within
from .search import frontier_search, ratio_histogram
from .structure import residue_decomposition, triangle_profile
from .sumset import stats
from .verify import CLAIM_IDS, build_report, example_family, sweep

SCHEMA_VERSION = 1


@dataclass
class CmdResult:
    report: Optional[dict]
    exit_code: int = 0
    raw: Optional[str] = None  # bypasses the envelope (CSV / JSON-lines)


# --- output ---------------------------------------------------------------------


def _envelope(command: str, input_echo: dict, report: dict, elapsed_ms: int) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "sumstruct",
        "version": __version__,
        "command": command,
        "input": input_echo,
        "elapsed_ms": elapsed_ms,
        "report": report,
    }


def _pretty_lines(value, indent: int, lines: list) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for key, val in value.items():
            if isinstance(val, dict) and val:
                lines.append(f"{pad}{key}:")
                _pretty_lines(val, indent + 1, lines)
            elif isinstance(val, list) and val and isinstance(val[0], dict):
                lines.append(f"{pad}{key}:")
                for item in val:
                    lines.append(f"{pad}  -")
                    _pretty_lines(item, indent + 2, lines)
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")


def _scalar(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(v) for v in val) + "]"
    if val is None:
        return "null"
    if isinstance(val, bool):
        return "true" if val else "false"
    return str(val)


def _emit(envelope: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(envelope, indent=2))
    else:
        lines: list = []
        _pretty_lines(envelope, 0, lines)
        print("\n".join(lines))


# --- subcommand handlers -----------------------------------------------------------


def _cmd_analyze(args) -> CmdResult:
    a = parse_set(args.set)
    report = build_report(a).to_dict()
    report["residues"] = [
        residue_decomposition(a, d).to_dict() for d in range(1, 7)
    ]
    window = (a.min, a.max)
    if window[1] > window[0]:
        report["triangle"] = triangle_profile(a, window, args.theta).to_dict()
    else:
        report["triangle"] = None
    return CmdResult(report)


def _cmd_cover(args) -> CmdResult:
    a = parse_set(args.set)
    bp = bp_cover(a)
    report = {
        "set": render(a),
        "stats": stats(a).to_dict(),
        "ap": ap_cover(a).to_dict(),
        "bp": bp.to_dict() if bp is not None else None,
        "bp_within_budget": None,
    }
    if args.bp_budget is not None:
        within = bp_cover_within(a, args.bp_budget)
        report["bp_within_budget"] = within.to_dict() if within is not None else None
    return CmdResult(report)


def _parse_carrier(text: str):
    return parse_planar(text) if "(" in text else parse_set(text)


def _cmd_iso_check(args) -> CmdResult:
    a = _parse_carrier(args.a)
    b = _parse_carrier(args.b)
    targets = b.points if hasattr(b, "points") else b.elements
    if args.phi is not None:
        phi = tuple(int(part) for part in args.phi.split(","))
    else:
        phi = targets
    sources = a.points if hasattr(a, "points") else a.elements
    iso = is_f2_isomorphism(a, b, phi, method=args.method)
    return CmdResult(
        {
            "isomorphic": iso,
            "method": args.method,
            "phi": [[list(s) if isinstance(s, tuple) else s,
                     list(t) if isinstance(t, tuple) else t]
                    for s, t in zip(sources, phi)],
        }
    )


def _cmd_iso_rank(args) -> CmdResult:
    prog = F2Progression(x0=args.x0, x1=args.x1, x2=args.x2, b1=args.b1, b2=args.b2)
    rank = f2_rank(prog)
    return CmdResult(
        {
            "rank": rank,
            "proper": rank is not None,
            "size": args.b1 * args.b2,
            "values": sorted(set(prog.values())),
        }
    )


def _cmd_iso_embed(args) -> CmdResult:
    a = parse_set(args.set)
    bp = bp_cover(a)
    if bp is None:
        return CmdResult(
            {"set": render(a), "bp": None, "planar": None, "isomorphic": None}
        )
    planar, phi = embed_bp_as_two_lines(bp, a)
    return CmdResult(
        {
            "set": render(a),
            "bp": bp.to_dict(),
            "planar": render_planar(planar),
            "phi": [[s, list(t)] for s, t in zip(a.elements, phi)],
            "isomorphic": is_f2_isomorphism(a, planar, phi),
            "planar_stats": planar_sumset_stats(planar).to_dict(),
        }
    )


def _cmd_verify(args) -> CmdResult:
    claims = set(args.claims.split(",")) if args.claims else set(CLAIM_IDS)
    summaries = sweep(max_span=args.max_span, claims=claims, workers=args.workers)
    ordered = [summaries[c].to_dict() for c in CLAIM_IDS if c in summaries]
    violated = any(row["violations"] for row in ordered)
    return CmdResult({"summaries": ordered}, exit_code=1 if violated else 0)


def _cmd_search(args) -> CmdResult:
    if args.csv and not args.histogram:
        raise _Usage("--csv requires --histogram")
    if args.histogram:
        hist = ratio_histogram(args.max_span)
        if args.csv:
            rows = ["lo,structured,unstructured"]
            for bucket in hist.to_dict()["buckets"]:
                rows.append(
                    f"{bucket['lo']},{bucket['structured']},{bucket['unstructured']}"
                )
            return CmdResult(None, raw="\n".join(rows))
        return CmdResult(hist.to_dict())
    if args.k is None:
        raise _Usage("search requires --k (or --histogram)")
    result = frontier_search(
        k=args.k,
        max_span=args.max_span,
        budget=args.budget,
        seed=args.seed,
        workers=args.workers,
    )
    exit_code = 1 if any(r.applicable for r in result.records) else 0
    if args.jsonl:
        lines = [json.dumps(r.to_dict()) for r in result.records]
        lines.append(
            json.dumps(
                {
                    "k": result.k,
                    "max_span": result.max_span,
                    "exhaustive": result.exhaustive,
                    "nodes": result.nodes,
                    "records": len(result.records),
                }
            )
        )
        return CmdResult(None, exit_code=exit_code, raw="\n".join(lines))
    return CmdResult(result.to_dict(), exit_code=exit_code)


def _cmd_examples(args) -> CmdResult:
    rows = []

    def add(family: str, params: dict, expected_b: int) -> None:
        member = example_family(family, **params)
        st = stats(member)
        rows.append(
            {
                "family": family,
                "params": params,
                "k": st.k,
                "doubling": st.doubling,
                "b": st.deficiency_b,
                "expected_b": expected_b,
                "ok": st.deficiency_b == expected_b,
            }
        )

    max_span = args.max_span
    a = 1
    while 2 * (6 * a + 1) + a - 1 <= max_span:
        add("ex12", {"a": a, "c": 6 * a + 1}, a - 2)
        if 2 * (8 * a) + a - 1 <= max_span:
            add("ex12", {"a": a, "c": 8 * a}, a - 2)
        a += 1
    k = 16
    while 2 * k + 20 <= max_span:
        add("ex15", {"k": k}, 11)
        k += 1
    k = 15
    while 3 * k + 12 <= max_span:
        add("ex16", {"k": k}, 11)
        k += 1
    all_ok = all(row["ok"] for row in rows)
    return CmdResult(
        {"max_span": max_span, "rows": rows, "all_ok": all_ok},
        exit_code=0 if all_ok else 1,
    )


class _Usage(Exception):
    """Usage error discovered after argparse (exit code 2)."""


# --- parser -----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumstruct",
        description="Sumset structure analysis: doubling statistics, minimal "
        "AP/BP covers, isomorphism tools, exhaustive claim sweeps, and "
        "extremal-set search.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format_flags(p):
        group = p.add_mutually_exclusive_group()
        group.add_argument(
            "--json", action="store_true", help="emit the envelope as JSON"
        )
        group.add_argument(
            "--pretty", action="store_true",
            help="emit the envelope as indented text (default)",
        )

    p = sub.add_parser("analyze", help="full structure report for one set")
    p.add_argument("set", help="set literal, e.g. 0-12,45,57")
    p.add_argument(
        "--theta", default="0.05",
        help="triangle margin in (0, 1/4), exact decimal or fraction",
    )
    add_format_flags(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("cover", help="minimal AP and BP covers")
    p.add_argument("set")
    p.add_argument(
        "--bp-budget", type=int, default=None,
        help="also search for a BP cover within this total length",
    )
    add_format_flags(p)
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser("iso", help="sum-structure isomorphism tools")
    iso_sub = p.add_subparsers(dest="iso_command", required=True)

    q = iso_sub.add_parser("check", help="test a pairing of two sets")
    q.add_argument("a", help="integer set literal or planar literal (x,y);...")
    q.add_argument("b")
    q.add_argument(
        "--phi", default=None,
        help="comma-separated images of the sorted source elements "
        "(default: sorted target order)",
    )
    q.add_argument(
        "--method", choices=("fingerprint", "definitional"), default="fingerprint"
    )
    add_format_flags(q)
    q.set_defaults(handler=_cmd_iso_check)

    q = iso_sub.add_parser("rank", help="rank of a two-parameter progression")
    for flag in ("--x0", "--x1", "--x2", "--b1", "--b2"):
        q.add_argument(flag, type=int, required=True)
    add_format_flags(q)
    q.set_defaults(handler=_cmd_iso_rank)

    q = iso_sub.add_parser("embed", help="embed a BP-covered set as two lines")
    q.add_argument("set")
    add_format_flags(q)
    q.set_defaults(handler=_cmd_iso_embed)

    p = sub.add_parser("verify", help="sweep claims over all small sets")
    p.add_argument("--max-span", type=int, required=True)
    p.add_argument(
        "--claims", default=None,
        help=f"comma-separated subset of {','.join(CLAIM_IDS)} (default all)",
    )
    p.add_argument("--workers", type=int, default=1)
    add_format_flags(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "search", help="frontier search for structure-failing sets"
    )
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-span", type=int, required=True)
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--jsonl", action="store_true",
        help="stream one record per line instead of one envelope",
    )
    p.add_argument(
        "--histogram", action="store_true",
        help="emit the doubling-ratio histogram instead of searching",
    )
    p.add_argument("--csv", action="store_true", help="CSV output (histogram only)")
    add_format_flags(p)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser(
        "examples", help="parametric families and their deficiency identities"
    )
    p.add_argument("--max-span", type=int, default=400)
    add_format_flags(p)
    p.set_defaults(handler=_cmd_examples)

    return parser


def _input_echo(args) -> dict:
    skip = {"handler", "command", "iso_command", "json", "pretty"}
    return {
        key: val
        for key, val in sorted(vars(args).items())
        if key not in skip and val is not None
    }


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = args.command
    if getattr(args, "iso_command", None):
        command = f"{command} {args.iso_command}"
    started = time.perf_counter()
    try:
        result = args.handler(args)
    except ParseError as exc:
        offset = getattr(exc, "offset", None)
        where = f" at offset {offset}" if offset is not None else ""
        print(f"sumstruct: parse error{where}: {exc}", file=sys.stderr)
        return 2
    except _Usage as exc:
        print(f"sumstruct: {exc}", file=sys.stderr)
        return 2
    except ResourceCeilingError as exc:
        print(f"sumstruct: resource ceiling: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"sumstruct: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    if result.raw is not None:
        print(result.raw)
        return result.exit_code
    envelope = _envelope(command, _input_echo(args), result.report, elapsed_ms)
    _emit(envelope, as_json=args.json)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
