"""Command-line calculator.

Every rational is printed as a reduced "n/d" string. Exit codes: 0 when
the command succeeds, 2 when a mathematically valid verdict says a bound
is violated, 1 for bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import cabling, foliation, invariants, lens, unknots
from .arith import format_rational, parse_rational

OK, VIOLATED, ERROR = "ok", "violated", "error"
EXIT_CODES = {OK: 0, VIOLATED: 2, ERROR: 1}

# values argparse would otherwise mistake for options: -7/5, -1,2, -K1
_NEGATIVE_VALUE = re.compile(r"^-(\d+(/\d+)?(,-?\d+)*|\d*(,-?\d+)+|K[01])$")


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: object = None
    text: str = ""
    message: str = ""
    extra: str = ""  # appended after the JSON line (rewritten graphs)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def render(self) -> str:
        if self.text:
            return self.text
        out = json.dumps(self.payload, separators=(",", ":"), ensure_ascii=False) + "\n"
        return out + self.extra


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fmt(x) -> str:
    return format_rational(x)


def _read_graph(path: str) -> foliation.FoliationGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return foliation.parse_graph(text)


def _counts_payload(c: invariants.SingularityCounts) -> dict:
    return c.as_dict()


def cmd_lens_info(args) -> CommandResult:
    L = lens.LensSpace(args.p, args.q)
    d = lens.dual_params(L)
    return CommandResult(OK, {"p": L.p, "q": L.q, "ncf": lens.ncf_expand(L.p, L.q), "dual": {"p": d.p_dual, "q": d.q_dual}})


def _legendrian(args) -> invariants.LegendrianRecord:
    seifert = invariants.SeifertData(order=args.r, boundary_slope=args.s)
    return invariants.LegendrianRecord(seifert, args.tb, args.rot)


def cmd_pushoff(args) -> CommandResult:
    t = invariants.transverse_pushoff(_legendrian(args))
    return CommandResult(OK, {"sl": _fmt(t.sl)})


def cmd_stabilize(args) -> CommandResult:
    seifert = invariants.SeifertData(order=args.r, boundary_slope=args.s)
    if args.kind == "transverse":
        if args.sl is None:
            raise UsageError("transverse stabilization needs --sl")
        t = invariants.TransverseRecord(seifert, args.sl)
        for _ in range(args.times):
            t = invariants.transverse_stabilize(t)
        return CommandResult(OK, {"sl": _fmt(t.sl)})
    if args.tb is None or args.rot is None:
        raise UsageError("Legendrian stabilization needs --tb and --rot")
    rec = invariants.LegendrianRecord(seifert, args.tb, args.rot)
    for _ in range(args.times):
        rec = invariants.legendrian_stabilize(rec, args.kind)
    return CommandResult(OK, {"tb": _fmt(rec.tb), "rot": _fmt(rec.rot)})


def cmd_bennequin(args) -> CommandResult:
    slack = invariants.bennequin_slack(args.sl, args.chi, args.r)
    status = OK if slack >= 0 else VIOLATED
    return CommandResult(status, {
        "status": status,
        "sl": _fmt(args.sl),
        "chi": args.chi,
        "r": args.r,
        "slack": _fmt(slack),
        "sharp": slack == 0,
    })


def cmd_cable(args) -> CommandResult:
    c = cabling.CableParams(args.p, args.q)
    payload = {
        "chi_new": cabling.cable_chi(args.chi, args.r, args.s, c),
        "order": cabling.cable_order(args.r, c.p),
        "multiplicity": cabling.cable_multiplicity(args.r, args.s, c),
        "positive": cabling.is_positive_cable(args.r, args.s, c),
    }
    if args.sl is not None:
        payload["sl_new"] = _fmt(cabling.cable_sl(args.sl, args.r, args.s, c))
    return CommandResult(OK, payload)


def cmd_resolve(args) -> CommandResult:
    slopes, coeffs = args.slopes, args.coeffs
    chi_new = cabling.link_resolution_chi(args.chi, args.r, slopes, coeffs)
    parts = [cabling.integral_resolution(args.r, s, l) for s, l in zip(slopes, coeffs)]
    payload = {
        "chi_new": chi_new,
        "components": sum(x.components for x in parts),
        "positive": all(x.positive for x in parts),
    }
    if args.sl is not None:
        payload["sl_new"] = _fmt(cabling.link_resolution_sl(args.sl, args.r, slopes, coeffs))
    return CommandResult(OK, payload)


def cmd_foliation_check(args) -> CommandResult:
    g = _read_graph(args.file)
    c = foliation.counts(g)
    payload = {"counts": _counts_payload(c)}
    status = OK
    if args.r is not None:
        payload["sl"] = _fmt(invariants.sl_from_counts(args.r, c))
    if args.chi is not None:
        ph = invariants.poincare_hopf_check(args.chi, c)
        payload["poincare_hopf"] = ph
        if not ph:
            status = VIOLATED
    return CommandResult(status, payload)


def cmd_foliation_simplify(args) -> CommandResult:
    g = _read_graph(args.file)
    res = foliation.normalize(g, args.r)
    c = foliation.counts(res.graph)
    payload = {
        "result": "overtwisted" if res.overtwisted else "normalized",
        "cancellations": res.cancellations,
        "counts": _counts_payload(c),
        "sl": _fmt(invariants.sl_from_counts(args.r, c)),
    }
    if res.overtwisted:
        payload["certificate"] = {
            "sink": res.certificate.sink,
            "frontier": sorted(res.certificate.frontier),
        }
    return CommandResult(OK, payload, extra=foliation.dump_graph(res.graph))


def cmd_unknot_classify(args) -> CommandResult:
    L = lens.LensSpace(args.p, args.q)
    types = sorted(unknots.classify_unknots(L), key=lambda t: (t.core, t.orientation))
    return CommandResult(OK, {
        "p": L.p,
        "q": L.q,
        "unknots": [str(t) for t in types],
        "max_tb": _fmt(unknots.max_tb(L)),
    })


def cmd_unknot_mountain(args) -> CommandResult:
    points = sorted(
        unknots.mountain_range(args.p, args.l, args.orient, args.depth),
        key=lambda pt: (pt.depth, pt.split),
    )
    if args.format == "tsv":
        return CommandResult(OK, text="".join(f"{_fmt(pt.tb)}\t{_fmt(pt.rot)}\n" for pt in points))
    return CommandResult(OK, {
        "p": args.p,
        "l": args.l,
        "orient": args.orient,
        "points": [{"tb": _fmt(pt.tb), "rot": _fmt(pt.rot), "k": pt.depth, "m": pt.split} for pt in points],
    })


def cmd_unknot_sl(args) -> CommandResult:
    values = unknots.sl_spectrum(args.p, args.l, args.orient, args.depth)
    if args.format == "tsv":
        return CommandResult(OK, text="".join(f"{_fmt(v)}\n" for v in values))
    return CommandResult(OK, {"p": args.p, "l": args.l, "orient": args.orient, "sl": [_fmt(v) for v in values]})


def cmd_selftest(args) -> CommandResult:
    from . import selftest

    report = selftest.run(max_p=args.max_p, grid=args.grid)
    status = OK if all(report.values()) else VIOLATED
    return CommandResult(status, {"status": status, "checks": report})


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ratknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_lens = sub.add_parser("lens", help="lens space data")
    lens_sub = p_lens.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = lens_sub.add_parser("info", help="continued fraction and dual parameters of L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_lens_info)

    p_inv = sub.add_parser("invariants", help="push-offs and stabilizations")
    inv_sub = p_inv.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = inv_sub.add_parser("pushoff", help="sl of the transverse push-off")
    p.add_argument("--tb", type=_rational, required=True)
    p.add_argument("--rot", type=_rational, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, default=0, help="Seifert slope (default 0)")
    p.set_defaults(func=cmd_pushoff)
    p = inv_sub.add_parser("stabilize", help="Legendrian (+/-) or transverse stabilization")
    p.add_argument("kind", choices=["+", "-", "transverse"])
    p.add_argument("--tb", type=_rational)
    p.add_argument("--rot", type=_rational)
    p.add_argument("--sl", type=_rational)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, default=0)
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("bennequin", help="transverse Bennequin bound")
    p.add_argument("--sl", type=_rational, required=True)
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_bennequin)

    p = sub.add_parser("cable", help="(p,q)-cable of an (r,s) Seifert cable")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--sl", type=_rational)
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("resolve", help="integral resolution of a link with uniform order r")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--slopes", type=_int_list, required=True)
    p.add_argument("--coeffs", type=_int_list, required=True)
    p.add_argument("--sl", type=_rational)
    p.set_defaults(func=cmd_resolve)

    p_fol = sub.add_parser("foliation", help="characteristic foliation graphs")
    fol_sub = p_fol.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = fol_sub.add_parser("check", help="counts, sl and Poincare-Hopf verdict")
    p.add_argument("file", help="graph file, or - for standard input")
    p.add_argument("-r", type=int)
    p.add_argument("--chi", type=int)
    p.set_defaults(func=cmd_foliation_check)
    p = fol_sub.add_parser("simplify", help="cancel negative elliptic points")
    p.add_argument("file")
    p.add_argument("-r", type=int, required=True)
    p.set_defaults(func=cmd_foliation_simplify)

    p_unk = sub.add_parser("unknot", help="rational unknots in lens spaces")
    unk_sub = p_unk.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = unk_sub.add_parser("classify", help="rational unknot types in L(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_unknot_classify)
    for name, func, default_format in (
        ("mountain", cmd_unknot_mountain, "tsv"),
        ("sl", cmd_unknot_sl, "json"),
    ):
        p = unk_sub.add_parser(name, help=f"{name} spectrum in L(p,1), p odd")
        p.add_argument("p", type=int)
        p.add_argument("l", type=int)
        p.add_argument("--orient", choices=["K1", "-K1"], default="K1")
        p.add_argument("--depth", type=int, default=8)
        p.add_argument("--format", choices=["json", "tsv"], default=default_format)
        p.set_defaults(func=func)

    p = sub.add_parser("selftest")
    p.add_argument("--max-p", type=int, default=100)
    p.add_argument("--grid", type=int, default=6)
    p.set_defaults(func=cmd_selftest)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    for tok in argv:
        if out and _NEGATIVE_VALUE.match(tok) and out[-1].startswith("-") and not _NEGATIVE_VALUE.match(out[-1]):
            prev = out[-1]
            if prev.startswith("--") and "=" not in prev:
                out[-1] = f"{prev}={tok}"
                continue
            if len(prev) == 2 and prev != "--":
                out[-1] = prev + tok
                continue
        out.append(tok)
    return out


def dispatch(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
        return args.func(args)
    except UsageError as exc:
        return CommandResult(ERROR, message=f"usage error: {exc}")
    except (ValueError, ArithmeticError, OSError) as exc:
        return CommandResult(ERROR, message=f"error: {exc}")
    except Exception as exc:  # never let a traceback reach the terminal
        return CommandResult(ERROR, message=f"internal error: {type(exc).__name__}: {exc}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.status == ERROR:
        print(result.message.splitlines()[0] if result.message else "error", file=sys.stderr)
    else:
        sys.stdout.write(result.render())
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
