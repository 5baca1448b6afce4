"""Corpus construction, batch verification and report rendering."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

from . import __version__
from .checkers import ALL_CLAIMS, CHECKERS, ClaimId, Status, char_polynomial, spectrum, tree_count
from .errors import ConfigError, InvalidFamily, InvalidSizeRange
from .generators import complete_graph, cycle, random_connected, random_tree, random_unicyclic
from .graph import (
    Graph,
    adjacency,
    bipartite_component_count,
    components,
    is_bipartite,
    is_connected,
    laplacian,
    line_graph,
)
from .graph6 import MAX_ORDER, parse_graph6, read_graph6_file, to_graph6
from .linalg import rank_gf2, smith_normal_form
from .oracle import factor_tree_count

SCHEMA_VERSION = 1

RANDOM_FAMILIES = ("trees", "unicyclic", "connected-random")
FIXED_FAMILIES = ("complete", "cycles")
FAMILIES = RANDOM_FAMILIES + FIXED_FAMILIES
FORMATS = ("json", "csv", "human")

_MIN_ORDER = {"trees": 1, "unicyclic": 3, "connected-random": 1, "complete": 1, "cycles": 3}


def parse_sizes(text: str) -> tuple[int, int]:
    """'A..B' or a single 'A'."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            sizes = (int(lo), int(hi))
        else:
            sizes = (int(text), int(text))
    except ValueError:
        raise InvalidSizeRange(f"cannot parse size range {text!r}; expected A..B") from None
    return sizes


def parse_checks(text: str | Sequence[str]) -> tuple[ClaimId, ...]:
    items = text.split(",") if isinstance(text, str) else list(text)
    items = [s.strip() for s in items if s.strip()]
    if not items or any(s.lower() == "all" for s in items):
        return ALL_CLAIMS
    chosen = set()
    for s in items:
        try:
            chosen.add(ClaimId(s.upper()))
        except ValueError:
            raise ConfigError(f"unknown claim id {s!r}") from None
    return tuple(c for c in ALL_CLAIMS if c in chosen)


def _validate_family(family: str, sizes: tuple[int, int]) -> None:
    if family not in FAMILIES:
        raise InvalidFamily(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    lo, hi = sizes
    if lo > hi:
        raise InvalidSizeRange(f"empty size range {lo}..{hi}")
    if lo < _MIN_ORDER[family]:
        raise InvalidSizeRange(f"family {family} needs order >= {_MIN_ORDER[family]}, got {lo}")
    if hi > MAX_ORDER:
        raise InvalidSizeRange(f"orders above {MAX_ORDER} cannot be written as graph6")


def generate_family(
    family: str,
    sizes: tuple[int, int],
    count: int | None = None,
    seed: int | None = None,
    edge_prob: float = 0.4,
) -> Iterator[Graph]:
    """Deterministic stream of graphs.

    Fixed families (complete, cycles) give one graph per order in the range,
    truncated to ``count`` if given.  Random families draw ``count`` graphs
    with orders uniform in the range; the seed is mandatory for them.
    """
    _validate_family(family, sizes)
    lo, hi = sizes
    if family in FIXED_FAMILIES:
        build = complete_graph if family == "complete" else cycle
        orders = range(lo, hi + 1)
        if count is not None:
            orders = orders[:count]
        for n in orders:
            yield build(n)
        return
    if seed is None:
        raise ConfigError(f"family {family} is random and needs --seed")
    if count is None or count < 0:
        raise ConfigError(f"family {family} needs a non-negative --count")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(lo, hi)
        sub = rng.getrandbits(64)
        if family == "trees":
            yield random_tree(n, sub)
        elif family == "unicyclic":
            yield random_unicyclic(n, sub)
        else:
            yield random_connected(n, edge_prob, sub)


@dataclass
class RunConfig:
    corpus: str | None = None
    family: str | None = None
    sizes: tuple[int, int] | None = None
    count: int | None = None
    seed: int | None = None
    edge_prob: float = 0.4
    checks: tuple[ClaimId, ...] = ALL_CLAIMS
    jobs: int = 1
    format: str = "human"
    out: str | None = None
    fail_fast: bool = False

    def validate(self) -> None:
        if (self.corpus is None) == (self.family is None):
            raise ConfigError("give exactly one of --corpus or --family")
        if self.family is not None:
            if self.sizes is None:
                raise ConfigError("--family needs --sizes A..B")
            _validate_family(self.family, self.sizes)
            if self.family in RANDOM_FAMILIES:
                if self.seed is None:
                    raise ConfigError(f"family {self.family} is random and needs --seed")
                if self.count is None:
                    raise ConfigError(f"family {self.family} needs --count")
        if self.jobs < 1:
            raise ConfigError("--jobs must be at least 1")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        if not 0 < self.edge_prob <= 1:
            raise ConfigError("--edge-prob must lie in (0, 1]")

    def echo(self) -> dict[str, Any]:
        """Settings that determine report content; jobs, format and out do not."""
        return {
            "corpus": self.corpus,
            "family": self.family,
            "sizes": list(self.sizes) if self.sizes else None,
            "count": self.count,
            "seed": self.seed,
            "edge_prob": self.edge_prob if self.family == "connected-random" else None,
            "checks": [c.value for c in self.checks],
            "fail_fast": self.fail_fast,
        }

    def load_graphs(self) -> list[Graph]:
        if self.corpus is not None:
            return read_graph6_file(self.corpus)
        return list(generate_family(self.family, self.sizes, self.count, self.seed, self.edge_prob))


@dataclass
class GraphRecord:
    index: int
    graph6: str
    order: int
    size: int
    verdicts: list[dict[str, Any]]

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "order": self.order,
            "size": self.size,
            "verdicts": self.verdicts,
        }


@dataclass
class RunReport:
    config: dict[str, Any]
    records: list[GraphRecord]
    wall_time: float = 0.0
    stopped_early: bool = False
    claims: tuple[ClaimId, ...] = field(default=ALL_CLAIMS)

    @property
    def aggregates(self) -> dict[str, dict[str, int]]:
        counts = {c.value: Counter() for c in self.claims}
        for rec in self.records:
            for v in rec.verdicts:
                bucket = counts[v["claim_id"]]
                bucket[v["status"]] += 1
                bucket["TIGHT"] += v["tight"]
        keys = [s.value for s in Status] + ["TIGHT"]
        return {c: {k: counts[c][k] for k in keys} for c in counts}

    @property
    def violations(self) -> list[tuple[int, dict[str, Any]]]:
        return [
            (rec.index, v)
            for rec in self.records
            for v in rec.verdicts
            if v["status"] == Status.VIOLATED.value
        ]

    @property
    def exit_code(self) -> int:
        return 1 if self.violations else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "tool": "treespec",
            "version": __version__,
            "config": self.config,
            "graphs": len(self.records),
            "stopped_early": self.stopped_early,
            "aggregates": self.aggregates,
            "records": [r.to_dict() for r in self.records],
            "wall_time": round(self.wall_time, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "graph6", "claim_id", "status", "tight", "witness"])
        for rec in self.records:
            for v in rec.verdicts:
                writer.writerow([
                    rec.index, rec.graph6, v["claim_id"], v["status"], int(v["tight"]),
                    json.dumps(v["witness"], sort_keys=True, separators=(",", ":")),
                ])
        return buf.getvalue()

    def to_human(self) -> str:
        lines = [f"treespec {__version__}: {len(self.records)} graphs in {self.wall_time:.2f}s"]
        if self.stopped_early:
            lines.append("stopped at first violation (--fail-fast)")
        header = f"{'claim':<16} {'HOLDS':>7} {'VIOLATED':>9} {'N/A':>7} {'TIGHT':>7}"
        lines += [header, "-" * len(header)]
        for claim, row in self.aggregates.items():
            lines.append(
                f"{claim:<16} {row['HOLDS']:>7} {row['VIOLATED']:>9} "
                f"{row['NOT_APPLICABLE']:>7} {row['TIGHT']:>7}"
            )
        for index, v in self.violations:
            lines.append(f"VIOLATED {v['claim_id']} on graph #{index} {v['graph6']}: "
                         f"{json.dumps(v['witness'], sort_keys=True)}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_human()


def _check_one(task: tuple[int, str, tuple[str, ...]]) -> GraphRecord:
    index, g6, claim_values = task
    g = parse_graph6(g6)
    verdicts = [CHECKERS[ClaimId(c)](g).to_dict() for c in claim_values]
    return GraphRecord(index, g6, g.order, g.size, verdicts)


def _results(tasks: list, jobs: int) -> Iterator[GraphRecord]:
    if jobs <= 1 or len(tasks) <= 1:
        yield from map(_check_one, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(tasks) // (4 * jobs))
        # map yields in submission order, so output never depends on scheduling
        yield from pool.map(_check_one, tasks, chunksize=chunk)


def run_verify(config: RunConfig, graphs: Sequence[Graph] | None = None) -> RunReport:
    config.validate()
    start = time.perf_counter()
    if graphs is None:
        graphs = config.load_graphs()
    claim_values = tuple(c.value for c in config.checks)
    tasks = [(i, to_graph6(g), claim_values) for i, g in enumerate(graphs)]
    records = []
    stopped = False
    results = _results(tasks, config.jobs)
    try:
        for rec in results:
            records.append(rec)
            if config.fail_fast and any(v["status"] == Status.VIOLATED.value for v in rec.verdicts):
                stopped = rec.index < len(tasks) - 1
                break
    finally:
        results.close()
    return RunReport(config.echo(), records, time.perf_counter() - start, stopped, config.checks)


# -- single-graph analysis ------------------------------------------------------------

def _spectrum_dict(g: Graph, which: str) -> dict[str, Any]:
    spec = spectrum(g, which)
    return {
        "char_poly": str(char_polynomial(g, which)),
        "integer_eigenvalues": [[lam, m] for lam, m in spec.eigenvalues],
        "residual": str(spec.residual),
    }


def analyze_graph(g: Graph, claims: Iterable[ClaimId] = ALL_CLAIMS) -> dict[str, Any]:
    connected = is_connected(g)
    tau = tree_count(g)
    out: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "graph6": to_graph6(g),
        "order": g.order,
        "size": g.size,
        "connected": connected,
        "bipartite": is_bipartite(g),
        "components": len(components(g)),
        "bipartite_components": bipartite_component_count(g),
        "tau": tau,
    }
    if tau > 0:
        f = factor_tree_count(tau)
        out["tau_factored"] = {"t": f.t, "s": f.s}
    out["spectra"] = {name: _spectrum_dict(g, name) for name in ("A", "L", "Q")}
    if g.size:
        out["spectra"]["LINE"] = _spectrum_dict(g, "LINE")
        out["rank_gf2_line"] = rank_gf2(adjacency(line_graph(g)))
    out["smith_L"] = list(smith_normal_form(laplacian(g)).invariant_factors)
    out["verdicts"] = [CHECKERS[c](g).to_dict() for c in claims]
    return out


def analysis_exit_code(analyses: Iterable[dict[str, Any]]) -> int:
    for a in analyses:
        if any(v["status"] == Status.VIOLATED.value for v in a["verdicts"]):
            return 1
    return 0


def render_analysis(a: dict[str, Any]) -> str:
    lines = [f"graph {a['graph6']}: n={a['order']} e={a['size']} "
             f"connected={a['connected']} bipartite={a['bipartite']}"]
    if "tau_factored" in a:
        f = a["tau_factored"]
        lines.append(f"spanning trees: {a['tau']} = 2^{f['t']} * {f['s']}")
    else:
        lines.append("spanning trees: 0")
    for name, spec in a["spectra"].items():
        eig = ", ".join(f"{lam}^{m}" if m > 1 else str(lam) for lam, m in spec["integer_eigenvalues"])
        lines.append(f"{name:<5} integer eigenvalues: {{{eig}}}  residual: {spec['residual']}")
    lines.append(f"Smith invariants of L: {a['smith_L']}")
    if "rank_gf2_line" in a:
        lines.append(f"GF(2) rank of A(line graph): {a['rank_gf2_line']}")
    for v in a["verdicts"]:
        flag = " TIGHT" if v["tight"] else ""
        lines.append(f"  {v['claim_id']:<16} {v['status']}{flag}")
    return "\n".join(lines) + "\n"
