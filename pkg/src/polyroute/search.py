"""Point-to-point search: guided A* with reopening, and plain Dijkstra.

The dual-landmark heuristic is admissible but not consistent, so a
settled vertex can later receive a better tentative distance. The A*
here reinserts such vertices (reopening), which keeps returned
distances exact for any admissible heuristic; the extra settle events
are reported so the cost is visible.

Both searches share the exact tie-breaking rule: heap entries compare
by (f, -g, vertex id), so equal-f ties prefer the larger g and then the
smaller id. With h = 0 the guided search therefore settles the same
vertices in the same order as the plain one.

Heuristic values are recomputed on every push, never cached, so the
reported operation totals reflect what the heuristic actually costs
during the search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush

from .graph import Graph
from .heuristics import Evaluator, OpCounters

INF = math.inf


@dataclass(frozen=True)
class QueryResult:
    """Outcome and effort of one point-to-point query.

    distance is inf and path is [] when the target is unreachable.
    expanded counts settle events, settled counts distinct settled
    vertices, and reopened = expanded - settled. settle_order is
    populated only when the search ran with trace=True.
    """

    source: int
    target: int
    distance: float
    path: list = field(repr=False)
    settled: int
    expanded: int
    reopened: int
    heuristic_evals: int
    op_totals: OpCounters
    settle_order: "list | None" = field(default=None, repr=False)


def _check_endpoints(g: Graph, source: int, target: int) -> None:
    n = g.vertex_count
    if not (0 <= source < n):
        raise ValueError(f"source {source} out of range [0,{n})")
    if not (0 <= target < n):
        raise ValueError(f"target {target} out of range [0,{n})")


def _reconstruct(parent: list, source: int, target: int) -> list:
    path = [target]
    v = target
    while v != source:
        v = parent[v]
        path.append(v)
    path.reverse()
    return path


def astar(
    g: Graph, source: int, target: int, h: Evaluator, trace: bool = False
) -> QueryResult:
    """Guided search; exact for admissible h thanks to reopening.

    h follows the evaluator protocol: h(v, target) returns
    (value, subtractions, multiplications, divisions, arity).
    """
    _check_endpoints(g, source, target)
    n = g.vertex_count
    g_dist = [INF] * n
    parent = [-1] * n
    closed = bytearray(n)
    g_dist[source] = 0
    hv, subs, muls, divs, arity = h(source, target)
    evals = 1
    total_subs, total_muls, total_divs = subs, muls, divs
    max_arity = arity
    heap = [(hv, 0, source)]
    expanded = 0
    settled = 0
    order = [] if trace else None
    adj = g.adjacency
    found = False
    while heap:
        f, neg_g, u = heappop(heap)
        gu = -neg_g
        if gu > g_dist[u]:
            continue
        expanded += 1
        if not closed[u]:
            closed[u] = 1
            settled += 1
        if order is not None:
            order.append(u)
        if u == target:
            found = True
            break
        for v, w in adj[u]:
            ng = gu + w
            if ng < g_dist[v]:
                g_dist[v] = ng
                parent[v] = u
                hv, subs, muls, divs, arity = h(v, target)
                evals += 1
                total_subs += subs
                total_muls += muls
                total_divs += divs
                if arity > max_arity:
                    max_arity = arity
                heappush(heap, (ng + hv, -ng, v))
    totals = OpCounters(total_subs, total_muls, total_divs, max_arity)
    if not found:
        return QueryResult(
            source, target, INF, [], settled, expanded,
            expanded - settled, evals, totals, order,
        )
    return QueryResult(
        source, target, g_dist[target],
        _reconstruct(parent, source, target),
        settled, expanded, expanded - settled, evals, totals, order,
    )


def dijkstra_query(
    g: Graph, source: int, target: int, trace: bool = False
) -> QueryResult:
    """Plain search, stopping as soon as the target is settled.

    No heuristic work: zero evaluations and zero arithmetic totals.
    """
    _check_endpoints(g, source, target)
    n = g.vertex_count
    g_dist = [INF] * n
    parent = [-1] * n
    closed = bytearray(n)
    g_dist[source] = 0
    heap = [(0, 0, source)]
    expanded = 0
    settled = 0
    order = [] if trace else None
    adj = g.adjacency
    found = False
    while heap:
        f, neg_g, u = heappop(heap)
        gu = -neg_g
        if gu > g_dist[u]:
            continue
        expanded += 1
        if not closed[u]:
            closed[u] = 1
            settled += 1
        if order is not None:
            order.append(u)
        if u == target:
            found = True
            break
        for v, w in adj[u]:
            ng = gu + w
            if ng < g_dist[v]:
                g_dist[v] = ng
                parent[v] = u
                heappush(heap, (ng, -ng, v))
    totals = OpCounters(0, 0, 0, 0)
    if not found:
        return QueryResult(
            source, target, INF, [], settled, expanded,
            expanded - settled, 0, totals, order,
        )
    return QueryResult(
        source, target, g_dist[target],
        _reconstruct(parent, source, target),
        settled, expanded, expanded - settled, 0, totals, order,
    )
