"""Single-source and multi-source shortest-path kernels.

One Dijkstra kernel serves every caller: full single-source trees,
multi-source (nearest-seed) trees, truncated runs that stop once a watch
set is settled, and the quadratic test oracle. Unreached vertices carry
dist = inf and owner/parent = -1.

Determinism: the heap is keyed (distance, owner rank, vertex id), and a
relaxation that ties on distance is accepted only when it improves the
owner rank, so owner assignment and parent pointers are reproducible.
Callers choose what rank means: vertex id for the public multi-source
API, position in a landmark sequence for embedding construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Sequence

from .graph import Graph

INF = math.inf


@dataclass(frozen=True)
class DistanceMap:
    """Result of one kernel run.

    dist[s] = 0 and owner[s] = s for every source; otherwise owner[v] is
    the source nearest to v and parent[v] the predecessor on a shortest
    path from that source. Sources and unreached vertices have parent -1.
    """

    sources: tuple
    dist: list = field(repr=False)
    owner: list = field(repr=False)
    parent: list = field(repr=False)

    def reached(self, v: int) -> bool:
        return self.dist[v] != INF

    def path_from_source(self, v: int) -> list:
        """Vertices from owner[v] to v along the tree; [] if unreached."""
        if not self.reached(v):
            return []
        out = [v]
        while self.parent[v] != -1:
            v = self.parent[v]
            out.append(v)
        out.reverse()
        return out


@dataclass
class KernelCounters:
    """Counts kernel invocations, for preprocessing-cost assertions."""

    full_spt: int = 0
    multi_source: int = 0
    truncated_spt: int = 0


_active_counters: list = []


class track_kernels:
    """Context manager recording kernel invocations in its dynamic extent.

    >>> with track_kernels() as kc:
    ...     shortest_path_tree(g, 0)
    >>> kc.full_spt
    1
    """

    def __enter__(self) -> KernelCounters:
        self.counters = KernelCounters()
        _active_counters.append(self.counters)
        return self.counters

    def __exit__(self, *exc) -> None:
        _active_counters.remove(self.counters)


def _count(kind: str) -> None:
    for c in _active_counters:
        setattr(c, kind, getattr(c, kind) + 1)


def _run_kernel(
    g: Graph,
    sources: Sequence[int],
    ranks: Sequence[int],
    stop_at: "set | None" = None,
) -> tuple:
    """Dijkstra with lazy deletion from several sources at once.

    ranks orders the sources for tie-breaking (lower rank wins at equal
    distance). If stop_at is given, the run ends once every vertex in it
    is settled; distances outside the settled region are then only upper
    bounds and are reported as unreached.
    """
    n = g.vertex_count
    dist = [INF] * n
    rank = [-1] * n
    owner = [-1] * n
    parent = [-1] * n
    done = bytearray(n)
    heap = []
    for s, r in zip(sources, ranks):
        # A later duplicate source with lower rank would win; callers
        # reject duplicates before reaching the kernel.
        dist[s] = 0
        rank[s] = r
        owner[s] = s
        heappush(heap, (0, r, s))
    adj = g.adjacency
    pending = set(stop_at) if stop_at is not None else None
    while heap:
        d, r, u = heappop(heap)
        if done[u] or d > dist[u] or r > rank[u]:
            continue
        done[u] = 1
        if pending is not None:
            pending.discard(u)
            if not pending:
                break
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v] or (nd == dist[v] and r < rank[v]):
                dist[v] = nd
                rank[v] = r
                owner[v] = owner[u]
                parent[v] = u
                heappush(heap, (nd, r, v))
    if pending is not None:
        # Report only settled vertices; the frontier holds upper bounds.
        for v in range(n):
            if not done[v]:
                dist[v] = INF
                owner[v] = -1
                parent[v] = -1
    return dist, owner, parent


def _check_vertex(g: Graph, v: int, what: str) -> None:
    if not (0 <= v < g.vertex_count):
        raise ValueError(f"{what} {v} out of range [0,{g.vertex_count})")


def shortest_path_tree(g: Graph, source: int) -> DistanceMap:
    """Exact single-source distances (full Dijkstra run)."""
    _check_vertex(g, source, "source")
    _count("full_spt")
    dist, owner, parent = _run_kernel(g, (source,), (source,))
    return DistanceMap(sources=(source,), dist=dist, owner=owner, parent=parent)


def multi_source_spt(
    g: Graph, sources: Sequence[int], tie_ranks: "Sequence[int] | None" = None
) -> DistanceMap:
    """Distance to the nearest source for every vertex.

    owner[v] is the attaining source. Equal-distance ties go to the
    source with the lowest tie rank; the default rank is the source id
    itself, so ties break toward the smallest source id. Callers that
    need positional priority (embedding construction) pass their own
    ranks.
    """
    srcs = tuple(sources)
    if not srcs:
        raise ValueError("sources must be nonempty")
    if len(set(srcs)) != len(srcs):
        raise ValueError(f"duplicate sources in {srcs}")
    for s in srcs:
        _check_vertex(g, s, "source")
    ranks = srcs if tie_ranks is None else tuple(tie_ranks)
    if len(ranks) != len(srcs):
        raise ValueError("tie_ranks must match sources in length")
    _count("multi_source")
    dist, owner, parent = _run_kernel(g, srcs, ranks)
    return DistanceMap(sources=srcs, dist=dist, owner=owner, parent=parent)


def truncated_spt(g: Graph, source: int, targets: Sequence[int]) -> DistanceMap:
    """Single-source run that stops once all targets are settled."""
    _check_vertex(g, source, "source")
    for t in targets:
        _check_vertex(g, t, "target")
    _count("truncated_spt")
    dist, owner, parent = _run_kernel(
        g, (source,), (source,), stop_at=set(targets)
    )
    return DistanceMap(sources=(source,), dist=dist, owner=owner, parent=parent)


def landmark_matrix(g: Graph, landmarks: Sequence[int]) -> list:
    """Pairwise true distances among landmarks, |L| truncated runs.

    Keeps only the |L| x |L| block; rows to non-landmarks are discarded.
    """
    lms = tuple(landmarks)
    if len(set(lms)) != len(lms):
        raise ValueError(f"duplicate landmarks in {lms}")
    for l in lms:
        _check_vertex(g, l, "landmark")
    matrix = []
    for l in lms:
        dm = truncated_spt(g, l, lms)
        matrix.append([dm.dist[other] for other in lms])
    return matrix


def all_pairs_oracle(g: Graph, cap: int = 5000) -> list:
    """Full distance table via one tree per vertex; table[u][v] = d(u,v).

    Quadratic storage, so refuses graphs above cap vertices.
    """
    if g.vertex_count > cap:
        raise ValueError(
            f"graph has {g.vertex_count} vertices, oracle cap is {cap}"
        )
    table = []
    for s in range(g.vertex_count):
        table.append(shortest_path_tree(g, s).dist)
    return table


def iter_tree_children(dm: DistanceMap, n: int) -> list:
    """children[u] = tree children of u under dm's parent pointers."""
    children: list = [[] for _ in range(n)]
    for v in range(n):
        p = dm.parent[v]
        if p != -1:
            children[p].append(v)
    return children
