"""Landmark selection and the two landmark embeddings.

Two preprocessed forms back the two heuristics:

* full embedding: every landmark keeps its whole distance row, plus the
  landmark pairwise matrix. Entry count |L|*|V| + |L|^2.
* distributed embedding: every vertex keeps only its nearest landmark
  (its owner) and the true distance to it, plus the same pairwise
  matrix. Entry count |V| + |L|^2.

Ownership regions are nearest-landmark cells computed by one
multi-source run over the whole graph, so stored distances are true
graph distances and lower bounds derived from them stay valid even when
a region's internal shortest path leaves the region. Ties go to the
smaller landmark index.
"""

from __future__ import annotations

import random
import struct
from dataclasses import dataclass, field
from typing import BinaryIO, Sequence, Union

from .graph import Graph
from .sssp import (
    iter_tree_children,
    landmark_matrix,
    multi_source_spt,
    shortest_path_tree,
)

_MAGIC = b"LEMB"
_VERSION = 1
_KIND_FULL = 1
_KIND_DISTRIBUTED = 2


@dataclass(frozen=True)
class LandmarkSet:
    """Ordered distinct vertex ids; order defines the landmark index."""

    ids: tuple

    def __post_init__(self):
        ids = tuple(self.ids)
        object.__setattr__(self, "ids", ids)
        if not ids:
            raise ValueError("landmark set must be nonempty")
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate landmark ids in {ids}")

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)


@dataclass(frozen=True)
class AltEmbedding:
    """Full per-landmark distance rows: table[i][v] = d(landmarks[i], v)."""

    landmarks: LandmarkSet
    table: list = field(repr=False)
    lmatrix: list = field(repr=False)


@dataclass(frozen=True)
class DistributedEmbedding:
    """One owner landmark per vertex plus the landmark pairwise matrix.

    owner[v] indexes into landmarks.ids; dist_to_owner[v] is the true
    distance from v to that landmark.
    """

    landmarks: LandmarkSet
    owner: list = field(repr=False)
    dist_to_owner: list = field(repr=False)
    lmatrix: list = field(repr=False)


def _check_k(g: Graph, k: int) -> None:
    if not (1 <= k <= g.vertex_count):
        raise ValueError(f"landmark count {k} outside [1,{g.vertex_count}]")


def _check_landmarks(g: Graph, L: LandmarkSet) -> None:
    for l in L.ids:
        if not (0 <= l < g.vertex_count):
            raise ValueError(f"landmark {l} out of range [0,{g.vertex_count})")


def select_random(g: Graph, k: int, seed: int) -> LandmarkSet:
    """k distinct uniform vertices, deterministic per seed."""
    _check_k(g, k)
    rng = random.Random(seed)
    return LandmarkSet(tuple(rng.sample(range(g.vertex_count), k)))


def select_farthest(g: Graph, k: int, seed: int) -> LandmarkSet:
    """Greedy farthest-point traversal.

    The first landmark is the vertex farthest from a seed-chosen start;
    each next landmark maximizes the minimum distance to those already
    chosen. Ties go to the smallest vertex id.
    """
    _check_k(g, k)
    n = g.vertex_count
    start = random.Random(seed).randrange(n)
    chosen: list = []
    taken = set()
    # Distances from the start pick the first landmark only; afterwards
    # min_dist tracks min over chosen landmarks, start excluded.
    min_dist = shortest_path_tree(g, start).dist
    while len(chosen) < k:
        best = -1
        best_d = -1
        for v in range(n):
            if v not in taken and min_dist[v] > best_d:
                best, best_d = v, min_dist[v]
        chosen.append(best)
        taken.add(best)
        if len(chosen) == k:
            break
        row = shortest_path_tree(g, best).dist
        if len(chosen) == 1:
            min_dist = list(row)
        else:
            for v in range(n):
                if row[v] < min_dist[v]:
                    min_dist[v] = row[v]
    return LandmarkSet(tuple(chosen))


def select_avoid(g: Graph, k: int, seed: int) -> LandmarkSet:
    """Iterative selection that steers away from well-covered regions.

    Each round roots a shortest-path tree at a random vertex, weights
    every vertex by how much the existing landmarks UNDER-estimate its
    distance from the root (true distance minus best current lower
    bound), then walks from the heaviest subtree down max-weight
    children to a leaf. That leaf joins the landmark set. When every
    weight is zero (the bounds are already exact) or the walk lands on
    an existing landmark, the fallback picks the vertex farthest from
    the current landmarks, ties to the smallest id.
    """
    _check_k(g, k)
    n = g.vertex_count
    rng = random.Random(seed)
    chosen: list = []
    rows: list = []
    while len(chosen) < k:
        root = rng.randrange(n)
        spt = shortest_path_tree(g, root)
        weight = [0.0] * n
        for v in range(n):
            lb = 0
            for row in rows:
                cand = abs(row[v] - row[root])
                if cand > lb:
                    lb = cand
            w = spt.dist[v] - lb
            weight[v] = w if w > 0 else 0
        pick = _descend_heaviest(spt, weight, n)
        if pick is None or pick in chosen:
            pick = _farthest_from(g, chosen, n)
        chosen.append(pick)
        rows.append(shortest_path_tree(g, pick).dist)
    return LandmarkSet(tuple(chosen))


def _descend_heaviest(spt, weight: list, n: int):
    """Max-subtree-weight vertex, then down max-weight children to a leaf.

    Returns None when total weight is zero (nothing to steer by).
    """
    children = iter_tree_children(spt, n)
    subtree = list(weight)
    # parent pointers always lead toward the root, so ordering vertices
    # by decreasing distance visits children before parents.
    order = sorted(range(n), key=lambda v: spt.dist[v], reverse=True)
    for v in order:
        p = spt.parent[v]
        if p != -1:
            subtree[p] += subtree[v]
    best = -1
    best_w = 0
    for v in range(n):
        if subtree[v] > best_w:
            best, best_w = v, subtree[v]
    if best == -1:
        return None
    v = best
    while children[v]:
        v = max(children[v], key=lambda c: (subtree[c], -c))
    return v


def _farthest_from(g: Graph, chosen: list, n: int) -> int:
    if not chosen:
        return 0
    dm = multi_source_spt(g, tuple(sorted(chosen)))
    best = -1
    best_d = -1
    for v in range(n):
        if v in chosen:
            continue
        if dm.dist[v] > best_d:
            best, best_d = v, dm.dist[v]
    return best


def build_alt_embedding(g: Graph, L: LandmarkSet) -> AltEmbedding:
    """One full distance row per landmark; matrix read off the rows."""
    _check_landmarks(g, L)
    table = [shortest_path_tree(g, l).dist for l in L.ids]
    lmatrix = [[row[other] for other in L.ids] for row in table]
    return AltEmbedding(landmarks=L, table=table, lmatrix=lmatrix)


def build_distributed_embedding(g: Graph, L: LandmarkSet) -> DistributedEmbedding:
    """Nearest-landmark ownership in one multi-source pass over the
    whole graph, plus the pairwise matrix from truncated per-landmark
    runs. All stored distances are true graph distances."""
    _check_landmarks(g, L)
    index_of = {l: i for i, l in enumerate(L.ids)}
    # Tie ranks = landmark positions: equal-distance ownership ties go
    # to the smaller landmark index even when ids are not id-sorted.
    dm = multi_source_spt(g, L.ids, tie_ranks=range(len(L.ids)))
    owner = [index_of[ov] if ov != -1 else -1 for ov in dm.owner]
    lmatrix = landmark_matrix(g, L.ids)
    return DistributedEmbedding(
        landmarks=L, owner=owner, dist_to_owner=dm.dist, lmatrix=lmatrix
    )


Embedding = Union[AltEmbedding, DistributedEmbedding]


def space_accounting(e: Embedding) -> tuple:
    """(stored distance entries, closed-form prediction); must agree.

    Full embedding: |L|*|V| + |L|^2. Distributed: |V| + |L|^2.
    """
    k = len(e.landmarks)
    if isinstance(e, AltEmbedding):
        stored = sum(len(row) for row in e.table)
        formula = k * len(e.table[0]) + k * k
    else:
        stored = len(e.dist_to_owner)
        formula = len(e.dist_to_owner) + k * k
    stored += sum(len(row) for row in e.lmatrix)
    return stored, formula


def _num_list(values) -> list:
    """float64 payload back to ints where the value is integral."""
    out = []
    for x in values:
        out.append(int(x) if x == int(x) else x)
    return out


def save_embedding(e: Embedding, stream: BinaryIO) -> None:
    """Versioned binary layout (all integers little-endian):

    magic "LEMB" | version u8 | kind u8 (1 full, 2 distributed) |
    2 pad bytes | |V| u64 | |L| u64 | landmark ids |L| x u64 | payload.

    Full payload: |L| distance rows of |V| f64, then |L|^2 matrix f64.
    Distributed payload: |V| owner indices u64, |V| f64 distances, then
    |L|^2 matrix f64. Distances are stored as f64; integral values are
    restored to ints on load.
    """
    k = len(e.landmarks)
    if isinstance(e, AltEmbedding):
        kind = _KIND_FULL
        nv = len(e.table[0])
    else:
        kind = _KIND_DISTRIBUTED
        nv = len(e.dist_to_owner)
    stream.write(struct.pack("<4sBB2x", _MAGIC, _VERSION, kind))
    stream.write(struct.pack("<QQ", nv, k))
    stream.write(struct.pack(f"<{k}Q", *e.landmarks.ids))
    if isinstance(e, AltEmbedding):
        for row in e.table:
            stream.write(struct.pack(f"<{nv}d", *row))
    else:
        stream.write(struct.pack(f"<{nv}Q", *e.owner))
        stream.write(struct.pack(f"<{nv}d", *e.dist_to_owner))
    for row in e.lmatrix:
        stream.write(struct.pack(f"<{k}d", *row))


def load_embedding(stream: BinaryIO) -> Embedding:
    """Inverse of save_embedding; validates magic, version, and kind."""
    head = stream.read(8)
    if len(head) != 8:
        raise ValueError("embedding file truncated in header")
    magic, version, kind = struct.unpack("<4sBB2x", head)
    if magic != _MAGIC:
        raise ValueError(f"bad magic {magic!r}, expected {_MAGIC!r}")
    if version != _VERSION:
        raise ValueError(f"unsupported embedding version {version}")
    nv, k = struct.unpack("<QQ", _read_exact(stream, 16))
    ids = struct.unpack(f"<{k}Q", _read_exact(stream, 8 * k))
    L = LandmarkSet(tuple(ids))
    if kind == _KIND_FULL:
        table = [
            _num_list(struct.unpack(f"<{nv}d", _read_exact(stream, 8 * nv)))
            for _ in range(k)
        ]
        lmatrix = _read_matrix(stream, k)
        return AltEmbedding(landmarks=L, table=table, lmatrix=lmatrix)
    if kind == _KIND_DISTRIBUTED:
        owner = list(struct.unpack(f"<{nv}Q", _read_exact(stream, 8 * nv)))
        dist = _num_list(struct.unpack(f"<{nv}d", _read_exact(stream, 8 * nv)))
        lmatrix = _read_matrix(stream, k)
        return DistributedEmbedding(
            landmarks=L, owner=owner, dist_to_owner=dist, lmatrix=lmatrix
        )
    raise ValueError(f"unknown embedding kind {kind}")


def _read_matrix(stream: BinaryIO, k: int) -> list:
    return [
        _num_list(struct.unpack(f"<{k}d", _read_exact(stream, 8 * k)))
        for _ in range(k)
    ]


def _read_exact(stream: BinaryIO, count: int) -> bytes:
    data = stream.read(count)
    if len(data) != count:
        raise ValueError("embedding file truncated in payload")
    return data
