"""
``braid3-cosmetic`` command line.

Exit codes: 0 NO_PCS (or success for ``invariants``/``batch``),
10 RESIDUAL, 11 INCONCLUSIVE, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from . import __version__
from .braidcore import as_artin
from .kauffman import build_diagram
from .pipeline import DEFAULT_MAX_STATES, Certificate, InvalidInputError, analyze, parse_input
from .wordopt import RewriteBudget

EXIT_CODES = {"NO_PCS": 0, "RESIDUAL": 10, "INCONCLUSIVE": 11}
EXIT_INVALID = 2


def _error_obj(kind: str, message: str, text: str) -> dict:
    return {"error": kind, "message": message, "input": text}


def render_text(c: Certificate) -> str:
    g = c.genus
    t = c.thickness
    lines = [
        f"word:            {c.input} ({c.alphabet})",
        f"band word:       {c.band_word} (length {c.band_length})",
        f"genus:           {g.lower} <= g <= {g.upper}" + (" (certified)" if g.certified else ""),
        f"crossing bound:  {c.crossing_bound}",
        f"alexander:       {c.alexander}",
        f"a2:              {c.a2}",
        f"determinant:     {c.determinant}",
        f"thickness <=     {t.value} (delta span {t.delta_span}, genus bound {t.genus_bound}; using {t.active})",
    ]
    if c.verdict is not None:
        v = c.verdict
        lines.append(f"verdict:         {v.verdict}" + (f" via {v.reason}" if v.reason else ""))
        if v.ratio is not None:
            lines.append(f"ratio:           {v.ratio} (q_max {v.q_max})")
        if v.residual_slopes:
            lines.append("residual pairs:  " + ", ".join("{%s, %s}" % p for p in v.residual_slopes))
        for n in v.notes:
            lines.append(f"note:            {n}")
    for n in c.notes:
        lines.append(f"note:            {n}")
    lines.append(f"version:         {c.version}")
    return "\n".join(lines) + "\n"


def _budget(args) -> RewriteBudget:
    return RewriteBudget(args.search_budget, args.search_depth)


def _single(args, with_verdict: bool) -> int:
    try:
        cert = analyze(args.word, _budget(args), args.max_states, with_verdict=with_verdict)
    except InvalidInputError as e:
        if not args.quiet:
            if args.format == "json":
                print(json.dumps(_error_obj(e.kind, str(e), args.word)))
            else:
                print(f"error ({e.kind}): {e}", file=sys.stderr)
        return EXIT_INVALID

    if args.dump_diagram:
        dump = build_diagram(as_artin(parse_input(args.word))).dump()
        (sys.stderr if args.format == "json" else sys.stdout).write(dump)
    if not args.quiet:
        sys.stdout.write(cert.to_json() + "\n" if args.format == "json" else render_text(cert))
    if not with_verdict:
        return 0
    return EXIT_CODES[cert.verdict.verdict]


def parse_batch_line(line: str) -> Optional[Tuple[Optional[str], str]]:
    """``[label:] word``; returns None for blank and comment lines."""
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    if ":" in body:
        label, word = body.split(":", 1)
        label = label.strip()
        if not label or any(ch.isspace() for ch in label):
            raise ValueError(f"bad label {label!r}")
        return label, word.strip()
    return None, body


def _batch_item(item):
    lineno, line, budget, max_states = item
    try:
        parsed = parse_batch_line(line)
    except ValueError as e:
        return {"line": lineno, "label": None, **_error_obj("label", str(e), line.strip())}
    if parsed is None:
        return None
    label, word = parsed
    try:
        cert = analyze(word, budget, max_states)
    except InvalidInputError as e:
        return {"line": lineno, "label": label, **_error_obj(e.kind, str(e), word)}
    return {"line": lineno, "label": label, "certificate": cert.to_dict()}


def run_batch(lines: List[str], budget: RewriteBudget, max_states: int, jobs: int = 1):
    """Yield one result object per word line, in input order, then a summary."""
    items = [(i + 1, line, budget, max_states) for i, line in enumerate(lines)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_batch_item, items))
    else:
        results = map(_batch_item, items)
    counts = {"NO_PCS": 0, "RESIDUAL": 0, "INCONCLUSIVE": 0, "ERROR": 0}
    for r in results:
        if r is None:
            continue
        if "error" in r:
            counts["ERROR"] += 1
        else:
            counts[r["certificate"]["verdict"]["verdict"]] += 1
        yield r
    yield {"summary": dict(counts, total=sum(counts.values()))}


def _batch(args) -> int:
    try:
        with open(args.path, encoding="utf-8") as f:
            lines = f.read().splitlines()
    except OSError as e:
        print(json.dumps(_error_obj("io", str(e), args.path)))
        return EXIT_INVALID
    for obj in run_batch(lines, _budget(args), args.max_states, args.jobs):
        if not args.quiet or "summary" in obj:
            print(json.dumps(obj, separators=(",", ":"), ensure_ascii=False), flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--search-budget", type=int, default=200_000, metavar="N",
                        help="states explored by the band-word search")
    common.add_argument("--search-depth", type=int, default=64, metavar="N")
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES, metavar="N",
                        help="cap on Kauffman states per diagram")
    common.add_argument("--dump-diagram", action="store_true")
    common.add_argument("--quiet", action="store_true")

    p = argparse.ArgumentParser(prog="braid3-cosmetic",
                                description="Purely cosmetic surgery obstructions for closed 3-braids.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (("check", "run the full obstruction pipeline"),
                           ("invariants", "compute invariants only")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("word")
    bp = sub.add_parser("batch", parents=[common], help="process a file of [label:] word lines")
    bp.add_argument("path")
    bp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.search_budget <= 0 or args.search_depth <= 0 or args.max_states <= 0:
        print("budgets must be positive", file=sys.stderr)
        return EXIT_INVALID
    if args.command == "check":
        return _single(args, True)
    if args.command == "invariants":
        return _single(args, False)
    return _batch(args)


if __name__ == "__main__":
    sys.exit(main())
