"""Command line: ``treespec analyze | verify | generate``.

Exit codes: 0 all claims hold or are not applicable, 1 some claim was
violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import configparser
import json
import logging
import os
import sys
from pathlib import Path

from .checkers import ALL_CLAIMS
from .corpus import (
    FAMILIES,
    FORMATS,
    RunConfig,
    analysis_exit_code,
    analyze_graph,
    generate_family,
    parse_checks,
    parse_sizes,
    render_analysis,
    run_verify,
)
from .errors import TreespecError
from .graph6 import parse_graph6, read_graph6_file, to_graph6

log = logging.getLogger("treespec")

CONFIG_SECTION = "treespec"
_CONFIG_KEYS = {
    "corpus", "family", "sizes", "count", "seed", "edge-prob", "checks",
    "jobs", "format", "out", "fail-fast",
}


def _default_jobs() -> int:
    raw = os.environ.get("TREESPEC_JOBS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise TreespecError(f"TREESPEC_JOBS must be an integer, got {raw!r}") from None


def read_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` file; an optional ``[treespec]`` header is allowed."""
    text = Path(path).read_text()
    parser = configparser.ConfigParser()
    if not text.lstrip().startswith("["):
        text = f"[{CONFIG_SECTION}]\n" + text
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise TreespecError(f"bad config file {path}: {exc}") from None
    values: dict[str, str] = {}
    for section in parser.sections():
        for key, value in parser.items(section):
            key = key.replace("_", "-")
            if key not in _CONFIG_KEYS:
                raise TreespecError(f"unknown config key {key!r} in {path}")
            values[key] = value
    return values


def _bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise TreespecError(f"expected a boolean, got {text!r}")


def build_run_config(args: argparse.Namespace) -> RunConfig:
    merged: dict[str, str] = read_config_file(args.config) if args.config else {}
    # flags override the config file
    for key in _CONFIG_KEYS:
        value = getattr(args, key.replace("-", "_"), None)
        if value is not None and value is not False:
            merged[key] = value if not isinstance(value, bool) else "true"
    try:
        return RunConfig(
            corpus=merged.get("corpus"),
            family=merged.get("family"),
            sizes=parse_sizes(merged["sizes"]) if "sizes" in merged else None,
            count=int(merged["count"]) if "count" in merged else None,
            seed=int(merged["seed"]) if "seed" in merged else None,
            edge_prob=float(merged.get("edge-prob", 0.4)),
            checks=parse_checks(merged.get("checks", "all")),
            jobs=int(merged["jobs"]) if "jobs" in merged else _default_jobs(),
            format=merged.get("format", "human"),
            out=merged.get("out"),
            fail_fast=_bool(str(merged.get("fail-fast", "false"))),
        )
    except ValueError as exc:
        if isinstance(exc, TreespecError):
            raise
        raise TreespecError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    target = args.graph
    if Path(target).is_file():
        graphs = read_graph6_file(target)
    else:
        graphs = [parse_graph6(target)]
    claims = parse_checks(args.checks or "all")
    analyses = [analyze_graph(g, claims) for g in graphs]
    if args.format == "json":
        payload = analyses[0] if len(analyses) == 1 else analyses
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "".join(render_analysis(a) for a in analyses)
    _emit(text, args.out)
    return analysis_exit_code(analyses)


def cmd_verify(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    report = run_verify(config)
    _emit(report.render(config.format), config.out)
    if report.violations:
        log.error("%d violated verdicts", len(report.violations))
    return report.exit_code


def cmd_generate(args: argparse.Namespace) -> int:
    sizes = parse_sizes(args.sizes)
    lines = [to_graph6(g) + "\n" for g in generate_family(
        args.family, sizes, args.count, args.seed, args.edge_prob)]
    _emit("".join(lines), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treespec",
        description="Exact spectral invariants of graphs and corpus verification "
                    "of even-eigenvalue / spanning-tree theorems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    claim_help = "comma-separated claim ids or 'all' (" + ", ".join(c.value for c in ALL_CLAIMS) + ")"

    p = sub.add_parser("analyze", help="report invariants and verdicts for one graph")
    p.add_argument("graph", help="graph6 string, or a file of graph6 lines")
    p.add_argument("--checks", help=claim_help)
    p.add_argument("--format", choices=("json", "human"), default="human")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run checkers over a corpus")
    p.add_argument("--config", help="key = value file; flags override it")
    p.add_argument("--corpus", help="file of graph6 lines ('#' comments allowed)")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--sizes", help="order range A..B")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--edge-prob", type=float, dest="edge_prob")
    p.add_argument("--checks", help=claim_help)
    p.add_argument("--jobs", type=int, help="worker processes (default $TREESPEC_JOBS or 1)")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out")
    p.add_argument("--fail-fast", action="store_true", dest="fail_fast", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded corpus as graph6 lines")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("sizes", help="order range A..B")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--edge-prob", type=float, default=0.4, dest="edge_prob")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="treespec: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (TreespecError, OSError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
