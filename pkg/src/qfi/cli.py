"""Command-line front end: ``qfi <subcommand> ...``.

Each subcommand writes one JSON document to stdout (JSON lines for
``enumerate``).  Exit status: 0 success, 1 domain error (JSON error object
on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .complexes import (
    facet_complex,
    f_vector,
    height,
    minimal_vertex_covers,
    stanley_reisner_complex,
)
from .core import MonomialIdeal, parse_ideal, render, render_monomial, support
from .dual import check_duality_theorem, dual_f_vectors, newton_dual
from .errors import DimensionMismatch, QfiError, TooLarge
from .golden import run_selftest
from .hilbert import expand_series, hilbert_function, hilbert_oracle, hilbert_series
from .quasi import characterize, is_f_ideal, perfection, quasi_type
from .search import SearchSpec, SearchStats, enumerate_quasi, random_ideal


class UsageError(Exception):
    pass


def _parse_int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_ideal(args) -> MonomialIdeal:
    if args.json_in:
        if args.ideal:
            raise UsageError("give either an inline ideal or --json-in, not both")
        with open(args.json_in) as fh:
            ideal = MonomialIdeal.from_json(json.load(fh))
        if args.vars is not None and args.vars != ideal.n:
            raise UsageError(f"--vars {args.vars} disagrees with n={ideal.n} in {args.json_in}")
        return ideal
    if not args.ideal:
        raise UsageError("missing ideal: pass generator text or --json-in")
    if args.vars is None:
        raise UsageError("--vars is required with inline ideal text")
    return parse_ideal(args.ideal, args.vars)


def _error_json(exc: QfiError):
    return exc.to_json()


def _sets(xs):
    return [list(x) for x in xs]


def cmd_analyze(args, out):
    I = _load_ideal(args)
    fF = f_vector(facet_complex(I))
    fN = f_vector(stanley_reisner_complex(I))
    doc = {
        "ideal": I.to_json(),
        "text": render(I),
        "support": sorted(support(I)),
        "full_support": I.full_support,
        "equigenerated": I.is_equigenerated,
        "degree": I.degree,
        "r": I.r,
        "facet_complex": facet_complex(I).to_json(),
        "stanley_reisner_complex": stanley_reisner_complex(I).to_json(),
        "minimal_primes": _sets(minimal_vertex_covers(I)),
        "height": height(I),
        "f_vectors": {"facet": fF.to_json(), "nonface": fN.to_json()},
    }
    try:
        doc["quasi_type"] = list(quasi_type(I).a)
    except DimensionMismatch as exc:
        doc["quasi_type"] = None
        doc["quasi_type_error"] = _error_json(exc)
    try:
        doc["characterization"] = characterize(I, args.type).to_json()
        doc["is_f_ideal"] = is_f_ideal(I)
    except QfiError as exc:
        doc["characterization"] = _error_json(exc)
        doc["is_f_ideal"] = None
    if args.pretty:
        lines = [
            f"ideal        {doc['text']}  (n={I.n}, r={I.r})",
            f"facets F     {_brace(I.gens)}",
            f"facets N     {_brace(stanley_reisner_complex(I).facets)}",
            f"primes       {_brace(minimal_vertex_covers(I))}",
            f"height       {doc['height']}",
            f"f(facet)     {tuple(fF.entries)}",
            f"f(non-face)  {tuple(fN.entries)}",
            f"quasi type   {tuple(doc['quasi_type']) if doc['quasi_type'] is not None else 'undefined (dimensions differ)'}",
        ]
        ch = doc["characterization"]
        if "verdict" in ch:
            lines.append(f"characterize {'holds' if ch['verdict'] else 'fails'} for type "
                         f"{tuple(ch['claimed_type'])}: height {ch['height']['ok']}, "
                         f"parity {ch['parity']['ok']}, count {ch['count']['ok']}, "
                         f"non-faces {ch['nonface']['ok']}")
        else:
            lines.append(f"characterize n/a ({ch['error']})")
        return "\n".join(lines)
    return doc


def _brace(sets):
    return ", ".join("{" + ",".join(map(str, s)) + "}" for s in sets)


def cmd_dual(args, out):
    I = _load_ideal(args)
    D = newton_dual(I)
    pN, pF = dual_f_vectors(I)
    doc = {
        "ideal": I.to_json(),
        "dual": D.to_json(),
        "dual_text": render(D),
        "predicted": {"nonface": pN.to_json(), "facet": pF.to_json()},
        "computed": {
            "nonface": f_vector(stanley_reisner_complex(D)).to_json(),
            "facet": f_vector(facet_complex(D)).to_json(),
        },
    }
    try:
        doc["duality"] = check_duality_theorem(I).to_json()
    except QfiError as exc:
        doc["duality"] = _error_json(exc)
    if args.pretty:
        rep = doc["duality"]
        lines = [f"dual         {doc['dual_text']}"]
        if "applicable" in rep:
            status = ("applicable" if rep["applicable"]
                      else "inapplicable (generating set not perfect)")
            lines += [
                f"theorem      {status}",
                f"I type       {rep['original_type']}",
                f"dual type    {rep['dual_type']}",
                f"expected     {rep['expected_dual_type']}",
                f"match        {rep['match']}",
            ]
        else:
            lines.append(f"theorem      n/a ({rep['error']})")
        return "\n".join(lines)
    return doc


def cmd_hilbert(args, out):
    I = _load_ideal(args)
    K = args.max_degree
    series = hilbert_series(I)
    values = [hilbert_function(I, k) for k in range(K + 1)]
    expansion = expand_series(series, K)
    try:
        oracle = [hilbert_oracle(I, k) for k in range(K + 1)]
    except TooLarge:
        oracle = None
    doc = {
        "ideal": I.to_json(),
        "series": series.to_json(),
        "series_text": series.render(),
        "hilbert_function": values,
        "expansion": expansion,
        "oracle": oracle,
        "agree": values == expansion and (oracle is None or oracle == values),
    }
    if args.pretty:
        return "\n".join([
            f"F(R/I,k) = {doc['series_text']}",
            f"H(R/I,k), k=0..{K}: {values}",
            f"expansion agrees: {values == expansion}; "
            f"oracle agrees: {'skipped' if oracle is None else oracle == values}",
        ])
    return doc


def cmd_perfect(args, out):
    I = _load_ideal(args)
    rep = perfection(I.gens, I.n)
    doc = {"ideal": I.to_json(), "perfection": rep.to_json()}
    if args.pretty:
        return "\n".join([
            f"lower perfect  {rep.lower}" + (f"  missing: {', '.join(map(render_monomial, rep.missing_lower))}" if rep.missing_lower else ""),
            f"upper perfect  {rep.upper}" + (f"  missing: {', '.join(map(render_monomial, rep.missing_upper))}" if rep.missing_upper else ""),
            f"perfect        {rep.perfect}",
        ])
    return doc


def cmd_enumerate(args, out):
    try:
        spec = SearchSpec(
            n=args.vars, d=args.degree, target_type=tuple(args.type),
            modulo_symmetry=args.modulo_symmetry, limit=args.limit,
        )
    except ValueError as exc:
        if isinstance(exc, QfiError):
            raise
        raise UsageError(str(exc))
    stats = SearchStats()
    for ideal in enumerate_quasi(spec, stats, threads=args.threads, start_rank=args.start_rank):
        line = render(ideal) if args.pretty else json.dumps(ideal.to_json())
        out.write(line + "\n")
    summary = {"summary": True, **stats.to_json()}
    out.write((f"# {summary}" if args.pretty else json.dumps(summary)) + "\n")
    return None


def cmd_random(args, out):
    I = random_ideal(args.vars, args.degree, args.count, args.seed)
    return render(I) if args.pretty else I.to_json()


def cmd_selftest(args, out):
    results = run_selftest()
    if args.pretty:
        text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results)
    else:
        text = {"passed": all(ok for _, ok in results),
                "checks": [{"name": name, "ok": ok} for name, ok in results]}
    return text, (0 if all(ok for _, ok in results) else 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfi",
        description="Quasi f-ideal toolkit for squarefree monomial ideals.",
        epilog="QFI_BUDGET overrides the enumeration candidate budget.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    ideal_in = argparse.ArgumentParser(add_help=False)
    ideal_in.add_argument("ideal", nargs="?", help='generators, e.g. "x1*x2,x2*x3"')
    ideal_in.add_argument("--vars", type=int, help="number of variables n")
    ideal_in.add_argument("--json-in", metavar="PATH", help='read {"n":..,"generators":..}')

    p = sub.add_parser("analyze", parents=[common, ideal_in],
                       help="complexes, f-vectors, quasi type, characterization")
    p.add_argument("--type", type=_parse_int_list, metavar="LIST",
                   help="claimed type to test (short or long form)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", parents=[common, ideal_in],
                       help="Newton complementary dual and duality report")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("hilbert", parents=[common, ideal_in],
                       help="Hilbert function and series of R/I")
    p.add_argument("--max-degree", type=int, default=6, metavar="K")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("perfect", parents=[common, ideal_in],
                       help="lower/upper perfection of the generating set")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("enumerate", parents=[common],
                       help="all quasi f-ideals of a given type (JSON lines)")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--type", type=_parse_int_list, required=True, metavar="LIST")
    p.add_argument("--modulo-symmetry", action="store_true",
                   help="one representative per variable relabeling orbit")
    p.add_argument("--limit", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--start-rank", type=int, default=0,
                   help="resume from this colex candidate rank")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", parents=[common], help="seeded random equigenerated ideal")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--count", type=int, required=True, help="number of generators r")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("selftest", parents=[common], help="run the worked-example checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    try:
        result = args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except QfiError as exc:
        out.write(json.dumps(exc.to_json()) + "\n")
        return 1
    if isinstance(result, tuple):
        result, code = result
    if result is None:
        return code
    out.write((result if isinstance(result, str) else json.dumps(result)) + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
