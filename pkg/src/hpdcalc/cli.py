"""Command-line driver.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Tuple

from .cohom.engine import cohomology, convention_self_test, ext, push_to_base
from .cohom.hilbert import hilbert_data_gr, hilbert_data_pfaffian
from .cohom.objects import EquivariantObject, GrassmannianSpace, ResolutionSpace, SpaceMismatch, parse_space
from .expr import ParseError, parse_object
from .hpd import (
    builtin_lefschetz,
    section_decompositions,
    pfaffian_stratum,
    verify_exceptional_e,
    verify_fkl,
    verify_gsk_chi,
    verify_quiver,
    verify_semiorthogonality,
    VerificationLog,
)
from .weights import RankMismatch, bbw_reduce, parse_weight, weight_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print usage and exit(2) itself
        raise UsageError(message)


def _space(text: str):
    s = text.replace(" ", "").lower()
    if s.startswith("pf("):
        s = "ty(" + s[3:]
    try:
        return parse_space(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _object(text: str, space) -> Tuple[EquivariantObject, List[str]]:
    e = parse_object(text, space)
    return e.obj, e.warnings


# ---------------------------------------------------------------------------
# subcommands: each returns (result payload, status, text rendering)
# ---------------------------------------------------------------------------


def cmd_bbw(args):
    alpha = parse_weight(args.weight, rank=args.rank)
    out = bbw_reduce(alpha)
    if out is None:
        return {"zero": True}, "ok", f"alpha = ({args.weight}): alpha + rho is singular, all cohomology vanishes"
    res = {"zero": False, "degree": out.degree, "weight": weight_to_json(out.weight), "on": "V*"}
    text = f"H^{out.degree} = Sigma^({','.join(map(str, out.weight))}) V*, all other degrees vanish"
    return res, "ok", text


def _answer_payload(ans, warnings, expect_vanishing):
    res = ans.to_json()
    if warnings:
        res["warnings"] = warnings
    status = "ok"
    if expect_vanishing and not ans.is_zero():
        status = "failed"
    lines = []
    if ans.exact:
        lines.append("exact")
        for d, rep in ans.upper.degrees.items():
            lines.append(f"  H^{d} = {rep.pretty('W*')}   (dim {rep.dimension()})")
        if ans.upper.is_zero():
            lines.append("  0 in all degrees")
    else:
        lines.append("bounds (spectral sequence differentials may cancel terms)")
        for name, g in (("upper", ans.upper), ("lower", ans.lower)):
            lines.append(f"  {name}:")
            for d, rep in g.degrees.items():
                lines.append(f"    H^{d} = {rep.pretty('W*')}")
        lines.append(f"  euler = {ans.euler.pretty('W*')}")
    lines += [f"warning: {w}" for w in warnings]
    return res, status, "\n".join(lines)


def cmd_cohomology(args):
    space = _space(args.space)
    obj, warns = _object(args.expr, space)
    return _answer_payload(cohomology(obj), warns, args.expect_vanishing)


def cmd_ext(args):
    space = _space(args.space)
    a, wa = _object(args.source, space)
    b, wb = _object(args.target, space)
    return _answer_payload(ext(a, b), wa + wb, args.expect_vanishing)


def cmd_pushforward(args):
    if args.n - 4 < 1:
        raise UsageError("pushforward needs n >= 5")
    space = ResolutionSpace(args.n)
    obj, warns = _object(args.expr, space) if args.expr else (EquivariantObject.structure_sheaf(space), [])
    pushed = push_to_base(obj.twist(0, args.twist)).canonical()
    res = {"object": pushed.to_json(), "description": pushed.describe()}
    if warns:
        res["warnings"] = warns
    return res, "ok", pushed.describe()


def cmd_hilbert(args):
    space = _space(args.space)
    if isinstance(space, ResolutionSpace):
        data = hilbert_data_pfaffian(space.n)
        label = f"Pf(4,{space.n}) via ty({space.n})"
    else:
        data = hilbert_data_gr(space.k, space.n)
        label = space.label
    text = f"{label}: P(t) = {data.expression()}\ndimension {data.dimension}, degree {data.degree}"
    return data.to_json(), "ok", text


def cmd_pfaffian(args):
    s = pfaffian_stratum(args.n, args.t)
    text = f"Pf({2 * args.t},{args.n}): dim {s.dim}, codim {s.codim}"
    if s.hypersurface_degree:
        text += f", hypersurface of degree {s.hypersurface_degree}"
    if s.note:
        text += f" ({s.note})"
    return s.to_json(), "ok", text


def cmd_hpd_case(args):
    rep = section_decompositions(args.n, args.r)
    return rep.to_json(), "ok", rep.markdown()


_SUITES: Dict[str, Callable[[], List[VerificationLog]]] = {
    "ldx6": lambda: [verify_semiorthogonality(builtin_lefschetz("ldx6")), verify_exceptional_e(6)],
    "ldx7": lambda: [verify_semiorthogonality(builtin_lefschetz("ldx7")), verify_exceptional_e(7)],
    "fkl6": lambda: [verify_fkl(6), verify_quiver(6)],
    "fkl7": lambda: [verify_fkl(7), verify_quiver(7)],
    "gsk-chi6": lambda: [verify_gsk_chi(6)],
    "gsk-chi7": lambda: [verify_gsk_chi(7)],
}


def cmd_verify(args):
    names = sorted(_SUITES) if args.suite == "all" else [args.suite]
    logs = [log for name in names for log in _SUITES[name]()]
    failed = sum(len(l.failures) for l in logs)
    res = {
        "suites": [l.to_json() for l in logs],
        "passed": sum(l.passed for l in logs),
        "failed": failed,
        "derived": sum(l.derived for l in logs),
        "refuted": sum(len(l.refuted) for l in logs),
    }
    text = "\n\n".join(l.markdown() for l in logs)
    text += (f"\n\ntotal: {res['passed']} passed, {failed} failed, {res['derived']} derived by rule, "
             f"{res['refuted']} quoted claims refuted")
    return res, ("ok" if not failed else "failed"), text


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="hpdcalc", description="Borel-Bott-Weil and HPD bookkeeping for Gr(2,n) and Pfaffians")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", parser_class=_ArgumentParser)

    s = sub.add_parser(parents=[common], name="bbw", help="Borel-Bott-Weil for one weight")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--weight", required=True, help="comma-separated integers")
    s.set_defaults(func=cmd_bbw)

    s = sub.add_parser(parents=[common], name="cohomology", help="cohomology of an object")
    s.add_argument("--space", required=True, help="gr(k,n) or ty(n)")
    s.add_argument("--expect-vanishing", action="store_true", help="exit 1 unless the answer is certainly zero")
    s.add_argument("expr")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser(parents=[common], name="ext", help="Ext between two objects")
    s.add_argument("--space", required=True)
    s.add_argument("--expect-vanishing", action="store_true")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser(parents=[common], name="pushforward", help="zeta_*(E (x) O(t H_Y)) to Gr(n-4, n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--twist", type=int, required=True)
    s.add_argument("expr", nargs="?")
    s.set_defaults(func=cmd_pushforward)

    s = sub.add_parser(parents=[common], name="hilbert", help="Hilbert polynomial and degree")
    s.add_argument("--space", required=True, help="gr(k,n), ty(n) or pf(n)")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser(parents=[common], name="pfaffian", help="Pfaffian stratum Pf(2t, W*)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.set_defaults(func=cmd_pfaffian)

    s = sub.add_parser(parents=[common], name="hpd-case", help="linear-section report for dim L = r")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_hpd_case)

    s = sub.add_parser(parents=[common], name="verify", help="run a verification suite")
    s.add_argument("--suite", required=True, choices=sorted(_SUITES) + ["all"])
    s.set_defaults(func=cmd_verify)
    return p


def _inputs(args) -> dict:
    skip = {"func", "json", "out", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: Optional[List[str]] = None) -> Tuple[int, str]:
    """Run the CLI; returns (exit code, rendered output)."""
    code, output, _ = _run(argv)
    return code, output


def _run(argv):
    parser = build_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required")
        convention_self_test()
        result, status, text = args.func(args)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}\n{parser.format_usage()}", None
    except ParseError as exc:
        caret = " " * (exc.offset - 1) + "^"
        return EXIT_USAGE, f"{exc}\n  {exc.text}\n  {caret}", None
    except (ValueError, RankMismatch, SpaceMismatch, LookupError, NotImplementedError) as exc:
        return EXIT_USAGE, f"error: {exc}", None
    code = EXIT_OK if status == "ok" else EXIT_FAIL
    if args.json:
        report = {"command": args.command, "inputs": _inputs(args), "result": result, "status": status}
        return code, json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True), args.out
    return code, text, args.out


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, output, out_path = _run(argv)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(output + "\n")
    else:
        stream = sys.stderr if code == EXIT_USAGE else sys.stdout
        print(output, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
