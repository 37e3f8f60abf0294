"""Undirected positive-weight graphs: construction, generators, and file I/O.

Vertices are dense 0-based integers. The adjacency structure is symmetric
(every edge appears in both endpoint lists) and canonically sorted, so two
graphs built from the same edge set compare equal regardless of input order.

Two text formats are supported:

* DIMACS shortest-path ``.gr``: ``c`` comment lines, one ``p sp <n> <m>``
  problem line, and ``a <u> <v> <w>`` arc lines with 1-based ids.
  Reciprocal arc pairs collapse into a single undirected edge; an arc that
  appears in only one direction is treated as undirected as well.
* Plain edge list: a ``<n>`` header line, then one ``u v [w]`` line per
  edge with 0-based ids (weight defaults to 1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, TextIO

VertexId = int
Weight = "int | float"


class GraphError(ValueError):
    """Raised for malformed graph input: bad ids, weights, or file syntax."""


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph with strictly positive edge weights.

    ``adjacency[u]`` lists ``(neighbor, weight)`` pairs sorted by neighbor
    id. Unweighted graphs use weight 1 everywhere.
    """

    vertex_count: int
    adjacency: list = field(repr=False)
    edge_count: int

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterable[tuple[int, int, "int | float"]]:
        """Yield each undirected edge once, as (u, v, w) with u < v."""
        for u, neighbors in enumerate(self.adjacency):
            for v, w in neighbors:
                if u < v:
                    yield u, v, w

    def is_connected(self) -> bool:
        """True if every vertex is reachable from vertex 0."""
        if self.vertex_count == 0:
            return True
        seen = bytearray(self.vertex_count)
        seen[0] = 1
        stack = [0]
        count = 1
        adj = self.adjacency
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.vertex_count


def build_graph(vertex_count: int, edges: Iterable[tuple]) -> Graph:
    """Build a graph from (u, v, weight) triples.

    Rejects out-of-range endpoints, nonpositive weights, self-loops, and
    duplicate unordered pairs.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex_count must be nonnegative, got {vertex_count}")
    adjacency: list[list[tuple[int, float]]] = [[] for _ in range(vertex_count)]
    seen: set[tuple[int, int]] = set()
    count = 0
    for u, v, w in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u},{v}) endpoint out of range [0,{vertex_count})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not w > 0:
            raise GraphError(f"edge ({u},{v}) has nonpositive weight {w}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))
        count += 1
    for lst in adjacency:
        lst.sort()
    return Graph(vertex_count=vertex_count, adjacency=adjacency, edge_count=count)


def _parse_weight(text: str, context: str) -> "int | float":
    try:
        return int(text)
    except ValueError:
        pass
    try:
        w = float(text)
    except ValueError:
        raise GraphError(f"{context}: bad weight {text!r}") from None
    return w


def load_dimacs(stream: "TextIO | str") -> Graph:
    """Parse a DIMACS shortest-path ``.gr`` stream into an undirected graph.

    1-based ids shift to 0-based. The arc count on the ``p`` line must match
    the number of ``a`` lines. A pair of reciprocal arcs must agree on
    weight and becomes one edge.
    """
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    n = m = -1
    arcs = 0
    merged: dict[tuple[int, int], float] = {}
    directed_seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise GraphError(f"line {lineno}: repeated problem line")
            if len(parts) != 4 or parts[1] != "sp":
                raise GraphError(f"line {lineno}: expected 'p sp <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: bad problem line counts") from None
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative counts")
        elif parts[0] == "a":
            if n < 0:
                raise GraphError(f"line {lineno}: arc before problem line")
            if len(parts) != 4:
                raise GraphError(f"line {lineno}: expected 'a <u> <v> <w>'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex id") from None
            w = _parse_weight(parts[3], f"line {lineno}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"line {lineno}: vertex id out of range 1..{n}")
            if u == v:
                raise GraphError(f"line {lineno}: self-loop arc")
            if not w > 0:
                raise GraphError(f"line {lineno}: nonpositive weight {w}")
            if (u, v) in directed_seen:
                raise GraphError(f"line {lineno}: duplicate arc ({u + 1},{v + 1})")
            directed_seen.add((u, v))
            key = (u, v) if u < v else (v, u)
            if key in merged:
                if merged[key] != w:
                    raise GraphError(
                        f"line {lineno}: reciprocal arcs for ({key[0] + 1},{key[1] + 1}) "
                        f"disagree on weight ({merged[key]} vs {w})"
                    )
            else:
                merged[key] = w
            arcs += 1
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n < 0:
        raise GraphError("missing problem line")
    if arcs != m:
        raise GraphError(f"problem line declares {m} arcs, body has {arcs}")
    g = build_graph(n, [(u, v, w) for (u, v), w in sorted(merged.items())])
    _require_connected(g, "DIMACS input")
    return g


def save_dimacs(g: Graph, stream: TextIO) -> None:
    """Write a graph as DIMACS ``.gr`` text, one reciprocal arc pair per edge."""
    stream.write(f"p sp {g.vertex_count} {2 * g.edge_count}\n")
    for u, v, w in g.edges():
        stream.write(f"a {u + 1} {v + 1} {w}\n")
        stream.write(f"a {v + 1} {u + 1} {w}\n")


def save_edge_list(g: Graph, stream: TextIO) -> None:
    """Write a graph in the plain edge-list format."""
    stream.write(f"{g.vertex_count}\n")
    for u, v, w in g.edges():
        stream.write(f"{u} {v} {w}\n")


def load_edge_list(stream: "TextIO | str") -> Graph:
    """Parse the plain edge-list format: ``n`` header, then ``u v [w]`` lines."""
    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = stream.read().splitlines()
    n = -1
    edges = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n < 0:
            if len(parts) != 1:
                raise GraphError(f"line {lineno}: expected single vertex-count header")
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphError(f"line {lineno}: bad vertex count") from None
            continue
        if len(parts) not in (2, 3):
            raise GraphError(f"line {lineno}: expected 'u v [w]'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: bad vertex id") from None
        w = _parse_weight(parts[2], f"line {lineno}") if len(parts) == 3 else 1
        edges.append((u, v, w))
    if n < 0:
        raise GraphError("missing vertex-count header")
    g = build_graph(n, edges)
    _require_connected(g, "edge-list input")
    return g


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise GraphError(f"{what} is not connected")


def generate_grid(rows: int, cols: int) -> Graph:
    """4-neighbor lattice with unit weights; vertex id = row * cols + col."""
    if rows < 1 or cols < 1:
        raise GraphError(f"grid dimensions must be positive, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1, 1))
            if r + 1 < rows:
                edges.append((v, v + cols, 1))
    return build_graph(rows * cols, edges)


def generate_random_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Random connected unit-weight graph: uniform-attachment spanning tree
    plus ``extra_edges`` distinct non-tree edges. Deterministic per seed."""
    if n < 1:
        raise GraphError(f"need at least one vertex, got {n}")
    capacity = n * (n - 1) // 2 - (n - 1)
    if extra_edges < 0 or extra_edges > capacity:
        raise GraphError(
            f"extra_edges={extra_edges} outside [0, {capacity}] for n={n}"
        )
    rng = random.Random(seed)
    used: set[tuple[int, int]] = set()
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        used.add((u, v))
        edges.append((u, v, 1))
    # Rejection sampling is cheap while the graph stays sparse; fall back to
    # explicit enumeration once most pairs are taken.
    remaining = extra_edges
    total_pairs = n * (n - 1) // 2
    if remaining > 0 and remaining * 4 >= total_pairs - len(used):
        free = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if (u, v) not in used
        ]
        for u, v in rng.sample(free, remaining):
            edges.append((u, v, 1))
    else:
        while remaining > 0:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in used:
                continue
            used.add(key)
            edges.append((key[0], key[1], 1))
            remaining -= 1
    return build_graph(n, edges)
