"""Workload generation, method comparison, verification, and reports.

A workload is a sequence of (source, target) queries run under up to
three methods: plain Dijkstra, guided search over the full embedding
(alt), and guided search over the distributed embedding (alp). Every
row carries the search statistics; alp rows additionally histogram the
landmark-configuration scenario (S1..S5) of each heuristic evaluation.

Reports serialize to CSV or JSON with identical field names and round-
trip losslessly. All numeric gates in the test suite use deterministic
counters only; wall time is recorded when asked for and otherwise
written as zero so that repeated runs stay byte-identical.
"""

from __future__ import annotations

import csv
import json
import random
import time
from dataclasses import dataclass, fields
from typing import Sequence, TextIO

from .embedding import (
    LandmarkSet,
    build_alt_embedding,
    build_distributed_embedding,
)
from .graph import Graph
from .heuristics import make_alp_evaluator, make_alt_evaluator
from .search import QueryResult, astar, dijkstra_query
from .sssp import shortest_path_tree

METHODS = ("dijkstra", "alt", "alp")
STRATIFICATIONS = ("none", "by-distance-decile")

CSV_HEADER = (
    "method", "source", "target", "distance",
    "settled", "expanded", "reopened", "heuristic_evals",
    "subs", "muls", "divs",
    "s1", "s2", "s3", "s4", "s5",
    "wall_time_ns",
)


class BenchError(RuntimeError):
    """Cross-method disagreement; signals an implementation bug."""


@dataclass(frozen=True)
class WorkloadSpec:
    """How many queries to draw, from which seed, and how to spread them."""

    query_count: int
    seed: int = 0
    stratification: str = "none"

    def __post_init__(self):
        if self.query_count < 1:
            raise ValueError(f"query_count must be >= 1, got {self.query_count}")
        if self.stratification not in STRATIFICATIONS:
            raise ValueError(
                f"stratification {self.stratification!r} not in {STRATIFICATIONS}"
            )


@dataclass(frozen=True)
class BenchRow:
    """One (method, query) outcome; field names match CSV_HEADER."""

    method: str
    source: int
    target: int
    distance: float
    settled: int
    expanded: int
    reopened: int
    heuristic_evals: int
    subs: int
    muls: int
    divs: int
    s1: int = 0
    s2: int = 0
    s3: int = 0
    s4: int = 0
    s5: int = 0
    wall_time_ns: int = 0


def generate_queries(g: Graph, spec: WorkloadSpec) -> list:
    """Deterministic (source, target) pairs; source != target unless the
    graph has a single vertex.

    Stratified mode buckets a candidate pool by true-distance decile
    (pilot single-source runs provide the distances) and draws round-
    robin across the nonempty deciles, so every represented decile
    contributes queries.
    """
    rng = random.Random(spec.seed)
    n = g.vertex_count
    if n == 1:
        return [(0, 0)] * spec.query_count
    if spec.stratification == "none":
        out = []
        for _ in range(spec.query_count):
            s = rng.randrange(n)
            t = rng.randrange(n - 1)
            if t >= s:
                t += 1
            out.append((s, t))
        return out
    return _stratified_queries(g, spec, rng)


def _stratified_queries(g: Graph, spec: WorkloadSpec, rng) -> list:
    n = g.vertex_count
    if n * n <= 10_000:
        pool = [(s, t) for s in range(n) for t in range(n) if s != t]
    else:
        want = min(20 * spec.query_count, n * (n - 1))
        seen = set()
        while len(seen) < want:
            s = rng.randrange(n)
            t = rng.randrange(n - 1)
            if t >= s:
                t += 1
            seen.add((s, t))
        pool = sorted(seen)
    rows = {}
    for s in sorted({s for s, _ in pool}):
        rows[s] = shortest_path_tree(g, s).dist
    dists = [rows[s][t] for s, t in pool]
    max_d = max(dists)
    buckets: list = [[] for _ in range(10)]
    for pair, d in zip(pool, dists):
        b = min(9, int(10 * d / max_d)) if max_d > 0 else 0
        buckets[b].append(pair)
    for b in buckets:
        rng.shuffle(b)
    nonempty = [b for b in buckets if b]
    out = []
    idx = 0
    while len(out) < spec.query_count:
        bucket = nonempty[idx % len(nonempty)]
        out.append(bucket[(idx // len(nonempty)) % len(bucket)])
        idx += 1
    return out


def _make_classifier(alt_table: list, owner: list):
    """Scenario index 0..4 per evaluation, matching classify_scenario."""
    nv = len(alt_table[0])
    cols = [tuple(row[v] for row in alt_table) for v in range(nv)]
    k = len(alt_table)

    def classify(v: int, t: int) -> int:
        cv = cols[v]
        ct = cols[t]
        la = 0
        best = -1
        for i in range(k):
            c = cv[i] - ct[i]
            if c < 0:
                c = -c
            if c > best:
                best = c
                la = i
        l1 = owner[v]
        l2 = owner[t]
        if l1 == l2:
            return 2 if la == l1 else 3
        if la == l1:
            return 0
        if la == l2:
            return 1
        return 4

    return classify


def run_workload(
    g: Graph,
    L: LandmarkSet,
    queries: Sequence,
    methods: Sequence = METHODS,
    *,
    mode: str = "literal",
    ptolemy_enabled: bool = True,
    timing: bool = False,
) -> list:
    """One BenchRow per (query, method), grouped by query.

    All requested methods must agree on every distance; disagreement
    raises BenchError. Scenario classification for alp rows builds the
    full embedding too; that cost is bench instrumentation, not part of
    the distributed method's preprocessing.
    """
    chosen = tuple(methods)
    if not chosen:
        raise ValueError("methods must be nonempty")
    for m in chosen:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}, expected subset of {METHODS}")
    if len(set(chosen)) != len(chosen):
        raise ValueError(f"duplicate methods in {chosen}")
    need_alt = "alt" in chosen or "alp" in chosen
    alt_e = build_alt_embedding(g, L) if need_alt else None
    alt_eval = make_alt_evaluator(alt_e) if "alt" in chosen else None
    alp_eval = None
    classify = None
    if "alp" in chosen:
        alp_e = build_distributed_embedding(g, L)
        alp_eval = make_alp_evaluator(alp_e, mode=mode, ptolemy_enabled=ptolemy_enabled)
        classify = _make_classifier(alt_e.table, alp_e.owner)
    rows = []
    for s, t in queries:
        agreed = None
        for m in chosen:
            hist = [0, 0, 0, 0, 0]
            if m == "dijkstra":
                res, wall = _timed(dijkstra_query, timing, g, s, t)
            elif m == "alt":
                res, wall = _timed(astar, timing, g, s, t, alt_eval)
            else:
                def counted(v, tt, _h=alp_eval, _c=classify, _hist=hist):
                    _hist[_c(v, tt)] += 1
                    return _h(v, tt)

                res, wall = _timed(astar, timing, g, s, t, counted)
            if agreed is None:
                agreed = res.distance
            elif res.distance != agreed:
                raise BenchError(
                    f"distance mismatch on query ({s},{t}): "
                    f"{chosen[0]}={agreed}, {m}={res.distance}"
                )
            rows.append(_to_row(m, res, hist, wall))
    return rows


def _timed(fn, timing: bool, *args) -> tuple:
    if not timing:
        return fn(*args), 0
    t0 = time.perf_counter_ns()
    res = fn(*args)
    return res, time.perf_counter_ns() - t0


def _to_row(method: str, res: QueryResult, hist: list, wall: int) -> BenchRow:
    return BenchRow(
        method=method,
        source=res.source,
        target=res.target,
        distance=res.distance,
        settled=res.settled,
        expanded=res.expanded,
        reopened=res.reopened,
        heuristic_evals=res.heuristic_evals,
        subs=res.op_totals.subtractions,
        muls=res.op_totals.multiplications,
        divs=res.op_totals.divisions,
        s1=hist[0], s2=hist[1], s3=hist[2], s4=hist[3], s5=hist[4],
        wall_time_ns=wall,
    )


@dataclass(frozen=True)
class VerificationReport:
    """Oracle check of a report: how many rows held, which did not."""

    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_workload(g: Graph, rows: Sequence, cap: int = 5000) -> VerificationReport:
    """Recompute every row's distance from scratch and compare exactly.

    One pilot single-source run per distinct source (memoized), capped
    like the quadratic oracle to keep memory bounded.
    """
    if g.vertex_count > cap:
        raise ValueError(f"graph has {g.vertex_count} vertices, cap is {cap}")
    memo = {}
    violations = []
    for i, row in enumerate(rows):
        if row.source not in memo:
            memo[row.source] = shortest_path_tree(g, row.source).dist
        expected = memo[row.source][row.target]
        if row.distance != expected:
            violations.append(
                {
                    "row": i,
                    "method": row.method,
                    "source": row.source,
                    "target": row.target,
                    "reported": row.distance,
                    "expected": expected,
                }
            )
    return VerificationReport(checked=len(rows), violations=violations)


def emit_report(rows: Sequence, format: str, sink: TextIO) -> None:
    """Write rows as CSV (fixed header) or JSON (same field names)."""
    if format == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow([getattr(r, name) for name in CSV_HEADER])
    elif format == "json":
        payload = [{name: getattr(r, name) for name in CSV_HEADER} for r in rows]
        json.dump(payload, sink, indent=2)
        sink.write("\n")
    else:
        raise ValueError(f"unknown report format {format!r}")


def _parse_number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def load_report(stream: TextIO, format: str) -> list:
    """Inverse of emit_report."""
    int_fields = {
        f.name for f in fields(BenchRow) if f.name not in ("method", "distance")
    }
    if format == "csv":
        reader = csv.DictReader(stream)
        if reader.fieldnames is None or tuple(reader.fieldnames) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        out = []
        for rec in reader:
            kwargs = {"method": rec["method"], "distance": _parse_number(rec["distance"])}
            for name in int_fields:
                kwargs[name] = int(rec[name])
            out.append(BenchRow(**kwargs))
        return out
    if format == "json":
        out = []
        for rec in json.load(stream):
            kwargs = {"method": rec["method"], "distance": rec["distance"]}
            for name in int_fields:
                kwargs[name] = int(rec[name])
            out.append(BenchRow(**kwargs))
        return out
    raise ValueError(f"unknown report format {format!r}")


def summarize(rows: Sequence) -> dict:
    """Per-method means of the deterministic counters, plus scenario
    totals for alp rows. Keys ordered by first appearance."""
    groups: dict = {}
    for r in rows:
        groups.setdefault(r.method, []).append(r)
    out = {}
    for method, rs in groups.items():
        n = len(rs)
        stats = {
            "queries": n,
            "mean_settled": sum(r.settled for r in rs) / n,
            "mean_expanded": sum(r.expanded for r in rs) / n,
            "mean_reopened": sum(r.reopened for r in rs) / n,
            "mean_heuristic_evals": sum(r.heuristic_evals for r in rs) / n,
            "mean_subs": sum(r.subs for r in rs) / n,
            "mean_muls": sum(r.muls for r in rs) / n,
            "mean_divs": sum(r.divs for r in rs) / n,
            "mean_arith_total": sum(r.subs + r.muls + r.divs for r in rs) / n,
        }
        if method == "alp":
            for key in ("s1", "s2", "s3", "s4", "s5"):
                stats[f"total_{key}"] = sum(getattr(r, key) for r in rs)
        out[method] = stats
    return out


def format_summary(summary: dict) -> str:
    """Human-readable comparison block, stable across runs."""
    lines = []
    for method, stats in summary.items():
        lines.append(f"[{method}] queries={stats['queries']}")
        lines.append(
            "  search space: settled={:.2f} expanded={:.2f} reopened={:.2f}".format(
                stats["mean_settled"], stats["mean_expanded"], stats["mean_reopened"]
            )
        )
        lines.append(
            "  heuristic work: evals={:.2f} subs={:.2f} muls={:.2f} divs={:.2f}"
            " arith_total={:.2f}".format(
                stats["mean_heuristic_evals"], stats["mean_subs"],
                stats["mean_muls"], stats["mean_divs"], stats["mean_arith_total"],
            )
        )
        if "total_s1" in stats:
            lines.append(
                "  scenarios: S1={} S2={} S3={} S4={} S5={}".format(
                    stats["total_s1"], stats["total_s2"], stats["total_s3"],
                    stats["total_s4"], stats["total_s5"],
                )
            )
    return "\n".join(lines)
