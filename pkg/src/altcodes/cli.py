"""Command-line entry point: ``altcodes <command> ...``.

Exit codes: 0 ran to completion, 1 negative verdict (only with
``--exit-status``), 2 input error, 3 budget or timeout exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from . import bench, reports
from .alternative import check_strong, check_unambiguous
from .codes import NotACodeError, ambiguity_witness, classify, sardinas_patterson
from .errors import BudgetExceeded
from .fic import (
    DEFAULT_MAX_CANDIDATES,
    SearchBudget,
    decide_alt_induced,
    enumerate_decompositions,
    enumerate_strong_decompositions,
)
from .fileformat import LanguageFileError, read_language, render_language
from .generate import KINDS, InfeasibleError, gen_instance
from .language import AlphabetError, EmptyWordError
from .oracle import OracleBudget, brute_force_decompositions

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False),
                        help="print a machine-readable JSON report")
    parser.add_argument("--exit-status", action="store_true", default=default(False),
                        help="exit 0 on a positive verdict and 1 on a negative one")
    parser.add_argument("--budget", type=int, default=default(DEFAULT_MAX_CANDIDATES),
                        help="maximum number of candidate sets the search may try")
    parser.add_argument("--timeout", type=float, default=default(None),
                        help="wall-clock limit in seconds for the search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altcodes",
        description="Codes, alternative codes and alt-induced codes over finite languages.",
    )
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        _global_flags(p, suppress=True)
        return p

    check = add("check", help="code, class and product checks")
    check_sub = check.add_subparsers(dest="check_kind", required=True)
    for name, helptext in (("code", "Sardinas-Patterson verdict and witness"),
                           ("class", "prefix / suffix / bifix / maximal classification")):
        p = check_sub.add_parser(name, help=helptext)
        _global_flags(p, suppress=True)
        p.add_argument("file")
    p = check_sub.add_parser("product", help="unambiguity, alternative and strong checks of (X, Y)")
    _global_flags(p, suppress=True)
    p.add_argument("xfile")
    p.add_argument("yfile")

    p = add("decide", help="is the code induced by an alternative code?")
    p.add_argument("file")

    p = add("enumerate", help="list every inducing decomposition")
    p.add_argument("file")
    p.add_argument("--strong", action="store_true", help="only strong alternative codes")

    p = add("oracle", help="brute-force decompositions and code check")
    p.add_argument("file")

    p = add("gen", help="generate a random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--alphabet", type=int, required=True, metavar="K")
    p.add_argument("--size", type=int, required=True, metavar="N")
    p.add_argument("--maxlen", type=int, required=True, metavar="L")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--out", help="write the language file here instead of stdout")

    p = add("bench", help="benchmark the decision procedure over a parameter grid")
    p.add_argument("--param-grid", required=True, metavar="SPEC",
                   help="e.g. 'kind=hard;k=2;n=4,6,8;maxlen=5;reps=5'")
    p.add_argument("--out", required=True, metavar="FILE.csv")
    return parser


def _emit(args, doc: dict, text: str) -> None:
    print(reports.dumps(doc) if args.json else text)


def _fmt_pairs(decs) -> str:
    return "\n".join(f"  X = {d.x}  Y = {d.y}" for d in decs) or "  (none)"


def _cmd_check(args) -> bool:
    if args.check_kind == "code":
        z = read_language(args.file)
        trace = sardinas_patterson(z)
        witness = None if trace.is_code else ambiguity_witness(z)
        lines = [f"{trace.verdict.value} ({trace.halting_reason.value})"]
        lines += [f"  U{i} = {u}" for i, u in enumerate(trace.u_sets, start=1)]
        if witness:
            lines.append(f"  witness: {witness}")
        _emit(args, reports.report("check code", verdict=trace.verdict,
                                   halting_reason=trace.halting_reason,
                                   u_sets=trace.u_sets, witness=witness), "\n".join(lines))
        return trace.is_code
    if args.check_kind == "class":
        z = read_language(args.file)
        rep = classify(z)
        text = "\n".join(f"{k}: {v}" for k, v in reports.to_jsonable(rep).items())
        _emit(args, reports.report("check class", **reports.to_jsonable(rep)), text)
        return rep.is_code
    x, y = read_language(args.xfile), read_language(args.yfile)
    unamb = check_unambiguous(x, y)
    strong = check_strong(x, y)
    alt = strong.alternative
    text = "\n".join([
        f"unambiguous: {unamb.unambiguous}  |XY| = {unamb.cardinality_check[0]}, "
        f"|X|·|Y| = {unamb.cardinality_check[1]}  overlap: {unamb.overlap_set}",
        f"XY is a code: {alt.product_code.is_code}",
        f"alternative code: {alt.is_alternative}",
        f"strong alternative code: {strong.is_strong}  "
        f"(X prefix {strong.char_route[0]}, Y suffix {strong.char_route[1]}, "
        f"XY code {strong.char_route[2]})",
        f"  X⁻¹(XY) \\ Y = {strong.condition1_violations}",
        f"  (XY)Y⁻¹ \\ X = {strong.condition2_violations}",
    ])
    doc = reports.report(
        "check product",
        product=unamb,
        alternative={"is_alternative": alt.is_alternative,
                     "product_code": alt.product_code.verdict,
                     "product_unambiguous": unamb.unambiguous},
        strong={"is_strong": strong.is_strong,
                "condition1_violations": strong.condition1_violations,
                "condition2_violations": strong.condition2_violations,
                "char_route": {"x_prefix": strong.char_route[0],
                               "y_suffix": strong.char_route[1],
                               "xy_code": strong.char_route[2]}},
    )
    _emit(args, doc, text)
    return alt.is_alternative


def _cmd_decide(args, budget: SearchBudget) -> bool:
    z = read_language(args.file)
    rep = decide_alt_induced(z, budget)
    lines = [f"{rep.verdict.value} via {rep.route.value}"]
    if rep.decomposition:
        lines.append(f"  X = {rep.decomposition.x}")
        lines.append(f"  Y = {rep.decomposition.y}")
    if rep.gcd:
        lines.append(f"  block sizes {rep.gcd.block_sizes}, gcd {rep.gcd.gcd}")
    if rep.route.value.startswith("Fic"):
        s = rep.stats
        lines.append(f"  tried {s.u_tried} prefixes, {s.y_tried} Y, {s.x_tried} X")
    _emit(args, reports.report("decide", **reports.decision_payload(rep)), "\n".join(lines))
    return rep.is_alt_induced


def _cmd_enumerate(args, budget: SearchBudget) -> bool:
    z = read_language(args.file)
    decs = (enumerate_strong_decompositions if args.strong else enumerate_decompositions)(z, budget)
    label = "strong decompositions" if args.strong else "decompositions"
    doc = reports.report("enumerate", strong=args.strong, count=len(decs), decompositions=decs)
    _emit(args, doc, f"{len(decs)} {label}\n" + _fmt_pairs(decs))
    return bool(decs)


def _cmd_oracle(args) -> bool:
    z = read_language(args.file)
    res = brute_force_decompositions(z, OracleBudget())
    text = (f"code: {res.is_code}" + (f"  witness: {res.witness}" if res.witness else "")
            + f"\n{len(res.decompositions)} decompositions\n" + _fmt_pairs(res.decompositions))
    doc = reports.report("oracle", is_code=res.is_code, witness=res.witness,
                         count=len(res.decompositions), decompositions=res.decompositions)
    _emit(args, doc, text)
    return bool(res.decompositions)


def _cmd_gen(args) -> bool:
    z, planted = gen_instance(args.kind, args.alphabet, args.size, args.maxlen, args.seed)
    text = render_language(z)
    if planted is not None:
        text += f"# planted X: {' '.join(planted.x)}\n# planted Y: {' '.join(planted.y)}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        print(reports.dumps(reports.report("gen", kind=args.kind, seed=args.seed,
                                           alphabet="".join(sorted(z.alphabet)),
                                           language=z, planted=planted)))
    elif not args.out:
        sys.stdout.write(text)
    return True


def _cmd_bench(args, budget: SearchBudget) -> bool:
    records = bench.bench_fic(args.param_grid, args.out, budget)
    summ = bench.summary(records)
    text = (f"{summ['runs']} runs written to {args.out}\n"
            + "\n".join(f"  n={n}: median candidates {c}"
                        for n, c in summ["median_candidates_by_n"].items()))
    _emit(args, reports.report("bench", out=args.out, **summ), text)
    return summ["invalid"] == 0


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = SearchBudget(max_candidates=args.budget, timeout=args.timeout)
    try:
        if args.command == "check":
            ok = _cmd_check(args)
        elif args.command == "decide":
            ok = _cmd_decide(args, budget)
        elif args.command == "enumerate":
            ok = _cmd_enumerate(args, budget)
        elif args.command == "oracle":
            ok = _cmd_oracle(args)
        elif args.command == "gen":
            ok = _cmd_gen(args)
        else:
            ok = _cmd_bench(args, budget)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        if args.json:
            print(reports.dumps(reports.report(args.command, error="budget", message=str(exc))))
        return EXIT_BUDGET
    except NotACodeError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        if args.json:
            print(reports.dumps(reports.report(args.command, error="not a code",
                                               witness=exc.witness)))
        return EXIT_INPUT
    except (LanguageFileError, AlphabetError, EmptyWordError, InfeasibleError, ValueError,
            OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.exit_status and not ok:
        return EXIT_NEGATIVE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
