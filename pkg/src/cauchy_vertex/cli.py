"""Command-line front end.

Exit status: 0 when the identity holds or the command succeeded, 1 when an
identity fails (the witness is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as V
from .hpp import enumerate_chains, from_chain, hpp_stats
from .partitions import CapError, Partition
from .schur import SchurContext

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cauchy-vertex", description="Exact checks of Cauchy-type identities via half-vertex operators.")
    parser.add_argument("--threads", type=_nonneg, default=1, help="worker processes for sums over partitions (default 1)")
    parser.add_argument("--display-cap", type=_nonneg, default=20, help="series terms shown in text mode")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_flag(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    vp = top.add_parser("verify", help="check an identity").add_subparsers(dest="identity", required=True, parser_class=_Parser)
    p = vp.add_parser("dual-cauchy")
    p.add_argument("--rows", type=_nonneg, required=True)
    p.add_argument("--cols", type=_nonneg, required=True)
    out_flag(p)
    p = vp.add_parser("cauchy")
    p.add_argument("--rows", type=_nonneg, required=True)
    p.add_argument("--cols", type=_nonneg, required=True)
    p.add_argument("--degree", type=_nonneg, required=True)
    p.add_argument("--signed", action="store_true", help="signed conjugate pairing instead of the classical one")
    out_flag(p)
    for name in ("correlation", "q-box"):
        p = vp.add_parser(name)
        p.add_argument("--rows", type=_nonneg, required=True)
        p.add_argument("--cols", type=_nonneg, required=True)
        out_flag(p)
    for name in ("limit", "macmahon"):
        p = vp.add_parser(name)
        p.add_argument("--degree", type=_nonneg, required=True)
        out_flag(p)
    p = vp.add_parser("fock")
    p.add_argument("--max-weight", type=_nonneg, required=True)
    out_flag(p)

    ep = top.add_parser("expand", help="print an expansion").add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = ep.add_parser("schur")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--vars", type=_nonneg, required=True)
    out_flag(p)
    p = ep.add_parser("series")
    p.add_argument("kind", choices=["limit", "macmahon", "q-box"])
    p.add_argument("--degree", type=_nonneg)
    p.add_argument("--rows", type=_nonneg)
    p.add_argument("--cols", type=_nonneg)
    out_flag(p)

    np_ = top.add_parser("enumerate", help="list chains").add_subparsers(dest="what", required=True, parser_class=_Parser)
    for name in ("chains", "hpp-stats"):
        p = np_.add_parser(name)
        p.add_argument("--from", dest="start", type=_partition, required=True)
        p.add_argument("--steps", type=_nonneg, required=True)
        if name == "chains":
            p.add_argument("--weight-cap", type=_nonneg)
        out_flag(p)
    return parser


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _report_text(report: V.Report, display_cap: int) -> str:
    lines = [report.verdict()]
    for side, text in (("lhs", report.text_lhs), ("rhs", report.text_rhs)):
        if len(text) > 40 * display_cap:
            text = text[: 40 * display_cap] + " ..."
        lines.append(f"  {side}: {text}")
    return "\n".join(lines)


def _run_verify(args) -> int:
    t = args.threads
    name = args.identity
    if name == "dual-cauchy":
        reports = [V.verify_dual_cauchy(args.rows, args.cols, threads=t)]
    elif name == "cauchy":
        reports = [V.verify_cauchy_truncated(args.rows, args.cols, args.degree, signed=args.signed)]
    elif name == "correlation":
        reports = [V.verify_correlation(args.rows, args.cols)]
    elif name == "q-box":
        reports = [V.verify_q_box(args.rows, args.cols, threads=t)]
    elif name == "limit":
        reports = [V.verify_limit_series(args.degree, threads=t)]
    elif name == "macmahon":
        reports = [V.verify_macmahon(args.degree)]
    else:
        reports = V.verify_fock(args.max_weight)
    if args.json:
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in reports:
            print(_report_text(r, args.display_cap))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def _run_expand(args) -> int:
    if args.what == "schur":
        poly = SchurContext(args.vars).schur(args.partition)
        _emit(args, poly.to_json(), poly.format())
        return EXIT_OK
    kind = args.kind
    if kind == "q-box":
        if args.rows is None or args.cols is None:
            raise UsageError("expand series q-box requires --rows and --cols")
        series = V.q_box_product(args.rows, args.cols, args.degree)
    else:
        if args.degree is None:
            raise UsageError(f"expand series {kind} requires --degree")
        series = V.limit_product(args.degree) if kind == "limit" else V.macmahon_product(args.degree)
    _emit(args, series.to_json(), series.format(args.display_cap))
    return EXIT_OK


def _run_enumerate(args) -> int:
    if args.what == "chains":
        chains = enumerate_chains(args.start, args.steps, args.weight_cap)
        payload = [{"slices": [str(p) for p in c], "weight": c.weight} for c in chains]
        text = "\n".join(f"{c}  (weight {c.weight})" for c in chains) or "(no chains)"
        text += f"\n{len(chains)} chain(s)"
        _emit(args, payload, text)
        return EXIT_OK
    rows = []
    for c in enumerate_chains(args.start, args.steps):
        pi = from_chain(c)
        weight, height = hpp_stats(pi)
        rows.append({"hpp": pi.to_json(), "weight": weight, "height": height})
    text = "\n".join(f"rows={r['hpp']['rows']} weight={r['weight']} height={r['height']}" for r in rows)
    text = (text or "(none)") + f"\n{len(rows)} half plane partition(s)"
    _emit(args, rows, text)
    return EXIT_OK


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "expand":
            return _run_expand(args)
        return _run_enumerate(args)
    except (UsageError, CapError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
