"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks, dual, emspaces
from .coefficients import Laurent
from .grading import ParseError, RepDegree
from .steenrod import (
    Config,
    SteenrodElement,
    act_element,
    admissible_basis,
    conjugate,
    coproduct,
    excess,
    excess_filter,
    instability_filter,
    is_admissible,
    parse_element,
    parse_terms,
    parse_word,
    word_str,
)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _config(args) -> Config:
    return Config(sq_on_a=args.sq_on_a, relations=args.relations)


def _filtered(args, x: SteenrodElement) -> SteenrodElement:
    if args.instability_filter is not None:
        return instability_filter(x, RepDegree.parse(args.instability_filter))
    return x


def cmd_adem(args) -> int:
    x = _filtered(args, parse_element(args.element, _config(args)))
    _emit(args, str(x), {"terms": x.to_json()})
    return 0


def cmd_basis(args) -> int:
    if args.degree is not None:
        words = admissible_basis(RepDegree.parse(args.degree))
    elif args.index_sum is not None:
        words = admissible_basis(index_sum=args.index_sum)
    else:
        words = admissible_basis(bound=args.bound if args.bound is not None else 0)
    _emit(args, "\n".join(word_str(w) for w in words), {"words": [list(w) for w in words]})
    return 0


def cmd_excess(args) -> int:
    if args.word is not None:
        w = parse_word(args.word)
        if not is_admissible(tuple(k for k in w if k)):
            raise ParseError(f"excess needs an admissible word, got {args.word!r}", args.word)
        e = excess(w)
        _emit(args, str(e), {"excess": e.to_json()})
        return 0
    if args.value is None:
        raise ParseError("give a word or --value", "")
    value = int(args.value) if args.total else RepDegree.parse(args.value)
    words = excess_filter(value, args.bound)
    _emit(args, "\n".join(word_str(w) for w in words), {"words": [list(w) for w in words]})
    return 0


def cmd_act(args) -> int:
    x = Laurent.parse(args.on)
    cfg = _config(args)
    out = Laurent()
    # words act letter by letter as written; no Adem rewriting first
    for c, w in parse_terms(args.word):
        out = out + Laurent.mono(c.i, c.j) * act_element(x, w, cfg)
    _emit(args, str(out), {"value": out.to_json()})
    return 0


def cmd_coproduct(args) -> int:
    t = coproduct(args.k)
    _emit(args, str(t), {"terms": t.to_json()})
    return 0


def cmd_conjugate(args) -> int:
    x = conjugate(args.k, _config(args))
    _emit(args, str(x), {"terms": x.to_json()})
    return 0


def cmd_square_expr(args) -> int:
    e = emspaces.square_expression(RepDegree.parse(args.degree))
    _emit(args, str(e), e.to_json())
    return 0


def cmd_em_gens(args) -> int:
    p = emspaces.em_presentation(args.n, args.cutoff)
    lines = [f"{g.degree.pretty():>10}  {g}" for g in sorted(p.generators, key=lambda g: (g.degree, str(g)))]
    lines += [f"relation: {r}" for r in p.relations]
    _emit(args, "\n".join(lines), p.to_json())
    return 0


def cmd_poincare(args) -> int:
    if args.collapse == "none":
        s = emspaces.em_series(args.n, args.cutoff)
        text = "\n".join(f"{d} : {n}" for d, n in s.items())
        _emit(args, text, s.to_json())
        return 0
    series = emspaces.em_collapsed(args.n, args.cutoff, args.collapse)
    text = "\n".join(f"{d} : {n}" for d, n in series.items())
    _emit(args, text, {"series": [{"degree": d, "rank": n} for d, n in series.items()]})
    return 0


def cmd_dual_check(args) -> int:
    reports = dual.dual_check(args.bound)
    return _report(args, reports)


def cmd_conjecture1(args) -> int:
    degs = emspaces.conjecture1_generators(args.k)
    text = "CONJECTURE: " + ", ".join(str(d) for d in degs)
    _emit(args, text, {"label": degs.label, "degrees": [d.to_json() for d in degs]})
    return 0


def cmd_check(args) -> int:
    kwargs = {}
    if args.suite == "em":
        if args.n is not None:
            kwargs["nmax"] = args.n
        if args.cutoff is not None:
            kwargs["cutoff"] = args.cutoff
            kwargs["series_cutoff"] = args.cutoff
    elif args.suite == "dual" and args.bound is not None:
        kwargs["bound"] = args.bound
    elif args.suite == "eilenberg-moore" and args.cutoff is not None:
        kwargs["cutoff"] = args.cutoff
    reports = checks.run_suite(args.suite, **kwargs)
    return _report(args, reports)


def _report(args, reports) -> int:
    ok = checks.all_passed(reports)
    lines = [r.line() for r in reports]
    lines.append(f"{sum(r.passed and not r.known_issue for r in reports)} passed, "
                 f"{sum(not r.passed and not r.known_issue for r in reports)} failed, "
                 f"{sum(r.known_issue for r in reports)} informational")
    _emit(args, "\n".join(lines), {"passed": ok, "checks": [r.to_json() for r in reports]})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--sq-on-a", choices=["trivial", "frobenius"], default="trivial")
    common.add_argument("--relations", choices=["printed", "coherent"], default="printed",
                        help="variant of the odd Adem correction")
    common.add_argument("--instability-filter", metavar="DEGREE", default=None,
                        help="drop terms that vanish on a class of this degree")

    parser = argparse.ArgumentParser(prog="c2steenrod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adem", parents=[common], help="admissible normal form")
    p.add_argument("element", help='e.g. "Sq[2,2]" or "u*Sq[3,2] + Sq[1,2]"')
    p.set_defaults(func=cmd_adem)

    p = sub.add_parser("basis", parents=[common], help="admissible words")
    p.add_argument("--degree")
    p.add_argument("--index-sum", type=int)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("excess", parents=[common], help="excess of a word, or words of given excess")
    p.add_argument("word", nargs="?")
    p.add_argument("--value", help="RepDegree, or an integer with --total")
    p.add_argument("--total", action="store_true", help="match the total degree of the excess")
    p.add_argument("--bound", type=int, default=12)
    p.set_defaults(func=cmd_excess)

    p = sub.add_parser("act", parents=[common], help="right action on a Laurent polynomial")
    p.add_argument("--on", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_act)

    for name, fn in (("coproduct", cmd_coproduct), ("conjugate", cmd_conjugate)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("k", type=int)
        p.set_defaults(func=fn)

    p = sub.add_parser("square-expr", parents=[common], help="x^2 in terms of squares")
    p.add_argument("degree")
    p.set_defaults(func=cmd_square_expr)

    p = sub.add_parser("em-gens", parents=[common], help="generators of H(K_{n+sigma})")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=12)
    p.set_defaults(func=cmd_em_gens)

    p = sub.add_parser("poincare", parents=[common], help="Poincare series of H(K_{n+sigma})")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=12)
    p.add_argument("--collapse", choices=["total", "fixed", "none"], default="none")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("dual-check", parents=[common], help="dual algebra sanity checks")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(func=cmd_dual_check)

    p = sub.add_parser("conjecture1", parents=[common], help="conjectured generator degrees")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_conjecture1)

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("suite", nargs="?", choices=sorted(checks.SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--cutoff", type=int)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e} (token: {e.token!r})", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
