"""``hspec`` command line: analyze, verify, gen.

Exit codes: 0 when every claim holds, 1 when a verdict FAILED (the witness
is saved next to the output), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .bounds import analyze
from .campaign import CampaignConfig, render_csv, render_json, run_campaign, summarize
from .hypergraph import HypergraphError, gen_random, read_khg, to_khg
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_range(text: str) -> tuple[int, ...]:
    """``"5"``, ``"5-8"`` or ``"3,4,5"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                a, b = (int(p) for p in part.split("-", 1))
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return tuple(out)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="enclosure width target")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--restarts", type=int, default=64, help="descent restarts for mu")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hspec", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="report for one .khg file")
    p.add_argument("path")
    _common(p)

    p = sub.add_parser("verify", help="batch verification campaign")
    p.add_argument("--mode", choices=("enumerate", "random"), default="random")
    p.add_argument("--n", type=_int_range, default=(5, 6, 7, 8))
    p.add_argument("--k", type=_int_range, default=(3, 4, 5))
    p.add_argument("--count", type=int, default=200, help="instances per (k, n) cell")
    p.add_argument("--no-mu", action="store_true", help="skip the minimum H-eigenvalue search")
    _common(p)

    p = sub.add_parser("gen", help="write a random .khg instance")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _save_witnesses(rows: list[dict], out: str | None) -> None:
    base = os.path.dirname(os.path.abspath(out)) if out else os.getcwd()
    for row in rows:
        if "witness" in row:
            path = os.path.join(base, f"hspec_witness_{row['id']}.khg")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(row["witness"])
            print(f"refutation witness saved to {path}", file=sys.stderr)


def cmd_analyze(args) -> int:
    try:
        H = read_khg(args.path)
    except (OSError, HypergraphError) as exc:
        print(f"hspec analyze: {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = analyze(H, tol=args.tol, max_iter=args.max_iter, restarts=args.restarts, seed=args.seed)
    row = {"id": os.path.basename(args.path), **report.to_dict()}
    _emit(render_json(row) if args.format == "json" else render_csv([row]), args.out)
    if report.failed:
        _save_witnesses([row], args.out)
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cfg = CampaignConfig(
            mode=args.mode, n_values=args.n, k_values=args.k, count=args.count,
            seed=args.seed, tol=args.tol, max_iter=args.max_iter,
            restarts=args.restarts, with_mu=not args.no_mu,
        )
    except ValueError as exc:
        print(f"hspec verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = run_campaign(cfg)
    summary = summarize(rows)
    if args.format == "json":
        _emit(render_json({"summary": summary, "instances": rows}), args.out)
    else:
        _emit(render_csv(rows), args.out)
        sys.stderr.write(json.dumps(summary, indent=2) + "\n")
    if summary["failed"]:
        _save_witnesses(rows, args.out)
        return EXIT_FAILED
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        H = gen_random(args.n, args.k, args.m, args.seed)
    except HypergraphError as exc:
        print(f"hspec gen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(to_khg(H), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    handler = {"analyze": cmd_analyze, "verify": cmd_verify, "gen": cmd_gen}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
