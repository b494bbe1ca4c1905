"""Command-line front end.

    powsemi decide --precision 16 --depth 6 generators.txt
    powsemi normalize --bottcher "z^2 + z^3"
    powsemi witness "z^2" "-z^2"
    powsemi verify report.json

Positional inputs are series literals, or a single path to a file with one
literal per line (``#`` comments allowed).  ``decide`` exits with 0, 1 or 2
for Amenable, NotAmenable and Inconclusive; any error exits with 3.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import report as rep
from .decide import DEFAULT_DEPTH, DEFAULT_PRECISION, decide
from .errors import PowsemiError
from .explorer import enumerate_words, free_pair_evidence, RelationFound
from .literals import parse_cyclo, parse_series, parse_series_file
from .monomial import Monomial, MonomialSemigroup, indecomposables, quotient, reversibility_witness
from .normalize import bottcher, branches, monomial_normalizer

EXIT_CODES = {"Amenable": 0, "NotAmenable": 1, "Inconclusive": 2}
EXIT_ERROR = 3


def _inputs(items: list[str]):
    if len(items) == 1 and os.path.isfile(items[0]):
        with open(items[0], encoding="utf-8") as fh:
            return parse_series_file(fh.read())
    return [parse_series(t, semigroup=True) for t in items]


def _monomials(items):
    return [Monomial.from_series(s) for s in _inputs(items)]


def _cmd_decide(args):
    gens = _inputs(args.inputs)
    t0 = time.perf_counter()
    verdict = decide(gens, args.precision, args.depth)
    report = rep.decide_report(gens, verdict, args.precision, args.depth, time.perf_counter() - t0)
    summary = verdict.kind
    if verdict.kind == "NotAmenable":
        summary += f": {report['result']['certificate']}"
    elif verdict.kind == "Amenable":
        summary += f": witness words {report['result']['witness']['words']} ({report['result']['witness']['status']})"
    else:
        summary += f": {verdict.reason}"
    return report, summary, EXIT_CODES[verdict.kind]


def _cmd_normalize(args):
    (A,) = _inputs(args.inputs)
    t0 = time.perf_counter()
    norm = monomial_normalizer(A, args.precision)
    b = brs = None
    if args.bottcher:
        b = bottcher(A, args.precision)
        brs = branches(norm.source_order)
    report = rep.normalize_report(A, norm, args.precision, b, brs, time.perf_counter() - t0)
    lines = [f"beta = {report['result']['beta']}",
             f"normal form = {report['result']['normal_form']} ({report['result']['functional_equation']})"]
    if b is not None:
        lines.append(f"boettcher = {report['result']['bottcher']}")
        lines.append(f"branches = {', '.join(report['result']['branches'])}")
    return report, "\n".join(lines), 0


def _cmd_witness(args):
    F1, F2 = _monomials(args.inputs)
    t0 = time.perf_counter()
    w = reversibility_witness(F1, F2, args.limit)
    report = rep.witness_report(F1, F2, w, time.perf_counter() - t0)
    if w is None:
        return report, "no witness within the search limit", 1
    return report, f"X = {w.x}, Y = {w.y}, common value {w.value}", 0


def _cmd_quotient(args):
    S = MonomialSemigroup(_monomials(args.inputs))
    t0 = time.perf_counter()
    q = quotient(S)
    report = rep.quotient_report(q, time.perf_counter() - t0)
    lines = [f"P2 = {sorted(q.P2)}"] + [f"{c['image']} <- generators {c['members']}" for c in report["result"]["classes"]]
    return report, "\n".join(lines), 0


def _cmd_indecomposable(args):
    units = [parse_cyclo(u) for u in args.units]
    t0 = time.perf_counter()
    elements = indecomposables(units, args.degrees, args.bound)
    report = rep.indecomposable_report(units, args.degrees, args.bound, elements, time.perf_counter() - t0)
    return report, "\n".join(report["result"]["elements"]), 0


def _cmd_explore(args):
    gens = _inputs(args.inputs)
    t0 = time.perf_counter()
    table = enumerate_words(gens, args.depth, args.precision)
    relations = []
    for words in table.collisions():
        first = words[0]
        for w in words[1:]:
            st = table.verify(first, w)
            if st:
                relations.append(((first, w), st))
    evidence = []
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            ev = free_pair_evidence(gens[i], gens[j], args.depth, args.precision)
            if isinstance(ev, RelationFound):
                evidence.append({"pair": [i + 1, j + 1], "result": "RelationFound",
                                 "words": [list(w) for w in ev.words], "status": str(ev.status)})
            else:
                evidence.append({"pair": [i + 1, j + 1], "result": "NoRelationUpTo", "depth": ev.depth})
    report = rep.explore_report(gens, table, relations, evidence, args.precision, args.depth,
                                time.perf_counter() - t0)
    lines = [f"{len(table.listing)} words, {len(table.entries)} distinct values, {len(relations)} relations"]
    lines += [f"{list(a)} = {list(b)} ({st})" for (a, b), st in relations[:20]]
    return report, "\n".join(lines), 0


def _cmd_verify(args):
    with open(args.report, encoding="utf-8") as fh:
        data = json.load(fh)
    ok, message = rep.verify_report(data)
    return None, ("OK: " if ok else "FAILED: ") + message, 0 if ok else 1


class _Parser(argparse.ArgumentParser):
    # usage errors must not collide with the Inconclusive exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _protect_literals(argv: list[str]) -> list[str]:
    """Keep literals such as ``-z^2`` from being read as options."""
    return [" " + a if a.startswith("-") and not a.startswith("--") and a not in ("-h",) else a for a in argv]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="powsemi", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision=True, depth=False):
        if precision:
            p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="series precision N")
        if depth:
            p.add_argument("--depth", type=int, default=DEFAULT_DEPTH, help="word length bound L")
        p.add_argument("--output", help="write the JSON report to this path")
        p.add_argument("--json", action="store_true", help="print the JSON report instead of a summary")

    p = sub.add_parser("decide", help="decide right amenability of <Q_1, ..., Q_k>")
    p.add_argument("inputs", nargs="+")
    common(p, depth=True)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("normalize", help="monomial normal form of one series")
    p.add_argument("inputs", nargs=1)
    p.add_argument("--bottcher", action="store_true", help="also compute the true Boettcher function")
    common(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("explore", help="enumerate words and report relations")
    p.add_argument("inputs", nargs="+")
    common(p, depth=True)
    p.set_defaults(func=_cmd_explore)

    p = sub.add_parser("quotient", help="quotient of a monomial semigroup by s o x = s o y")
    p.add_argument("inputs", nargs="+")
    common(p, precision=False)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("witness", help="solve X o F1 = Y o F2 for two monomials")
    p.add_argument("inputs", nargs=2)
    p.add_argument("--limit", type=int, default=None, help="pigeonhole search limit")
    common(p, precision=False)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("indecomposable", help="indecomposable elements of U x N")
    p.add_argument("--units", nargs="+", required=True, help="generators of U (coefficient literals)")
    p.add_argument("--degrees", nargs="+", type=int, required=True, help="generators of N")
    p.add_argument("--bound", type=int, default=4)
    common(p, precision=False)
    p.set_defaults(func=_cmd_indecomposable)

    p = sub.add_parser("verify", help="replay the certificates of a saved report")
    p.add_argument("report")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_protect_literals(argv))
    for name in ("precision", "depth"):
        if getattr(args, name, 2) < (2 if name == "precision" else 1):
            print(f"error: --{name} too small", file=sys.stderr)
            return EXIT_ERROR
    try:
        report, summary, code = args.func(args)
    except (PowsemiError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if report is not None:
        text = rep.dumps(report)
        if getattr(args, "output", None):
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        if getattr(args, "json", False):
            sys.stdout.write(text)
            return code
    print(summary)
    return code


if __name__ == "__main__":
    sys.exit(main())
