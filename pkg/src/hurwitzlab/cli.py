"""Command-line entry point.

Subcommands: hurwitz, polyfit, bm, elsv, fock, curve, all.  Every run writes
a JSON (or CSV) report and exits 0 only if all checks passed, 1 on an
identity failure, 2 when a truncation was too small to decide.
"""

from __future__ import annotations

import argparse
import sys

from . import harness
from .hurwitz import ConflictError
from .rationals import rational_to_str


def _parse_mu(text: str):
    return tuple(int(p) for p in text.split(",") if p.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzlab",
        description="Exact verifications around simple Hurwitz numbers",
    )
    parser.add_argument("--cache", default=None, help="Hurwitz cache file (JSON); "
                        "the HURWITZLAB_CACHE environment variable overrides this")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--out", default=None, help="report file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hurwitz", help="one connected Hurwitz number, with route checks")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--mu", type=_parse_mu, required=True, metavar="a,b,c")

    p = sub.add_parser("polyfit", help="interpolate the scaled Hurwitz polynomial")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--holdout", type=int, default=2)

    p = sub.add_parser("bm", help="kernel-residue recursion checks")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-order", type=int, default=6, dest="x_order")

    p = sub.add_parser("elsv", help="fitted coefficients vs Hodge integrals")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--holdout", type=int, default=2)

    p = sub.add_parser("fock", help="wedge-space operator checks")
    p.add_argument("--order", type=int, default=1, help="u-order for expansions")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--cutoff", type=int, default=7)

    p = sub.add_parser("curve", help="Lambert-curve series and kernel checks")
    p.add_argument("--order", type=int, default=12)

    sub.add_parser("all", help="the full acceptance suite")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_path = harness.resolve_cache_path(args.cache)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "out", "format")}
    params = {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}
    try:
        table = harness.load_cache(cache_path)
        if args.command == "hurwitz":
            checks = harness.campaign_hurwitz(args.g, args.mu, table)
            value = table.get(args.g, tuple(sorted(args.mu, reverse=True)))
            print(rational_to_str(value), file=sys.stderr)
        elif args.command == "polyfit":
            checks = harness.campaign_polyfit(args.g, args.n, args.grid, args.holdout)
        elif args.command == "bm":
            checks = harness.campaign_bm(args.g, args.n, args.x_order)
        elif args.command == "elsv":
            checks = harness.campaign_elsv(args.g, args.n, args.grid, args.holdout)
        elif args.command == "fock":
            checks = harness.campaign_fock(args.order, args.kmax, args.cutoff)
        elif args.command == "curve":
            checks = harness.campaign_curve(args.order)
        elif args.command == "all":
            checks = harness.campaign_all()
        else:  # pragma: no cover
            raise SystemExit(2)
        save_cache_needed = args.command == "hurwitz"
        if save_cache_needed and cache_path:
            harness.save_cache(table, cache_path)
    except ConflictError as exc:
        print(f"cache conflict: {exc}", file=sys.stderr)
        return 1
    report = harness.report_emit(args.command, params, checks)
    text = harness.format_report(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + ("\n" if not text.endswith("\n") else ""))
    else:
        print(text)
    return harness.report_status(report)


if __name__ == "__main__":
    raise SystemExit(main())
