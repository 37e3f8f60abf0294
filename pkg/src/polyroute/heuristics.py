"""Landmark lower-bound heuristics with exact operation accounting.

Two heuristics over the two embeddings:

* full-table bound (alt_h): max over landmarks l of |d(v,l) - d(t,l)|,
  one subtraction per landmark.
* dual-landmark bound (alp_dual_h): v and t each know only their owner
  landmark (l1, l2) and the owner pairwise matrix. With a = d(v,l1),
  b = d(t,l2), D = d(l1,l2), the candidate lower bounds on d(v,t) are

      pi1 = |a - D| - b
      pi2 = |a - b| - D
      pi3 = |D - b| - a
      pi4 = pi5 = |a - b|        (only when l1 = l2)
      pi6 = (|a - D| * |D - b| - a*b) / D   (only when l1 != l2)

  pi1..pi3 come from four-point triangle chains, pi4/pi5 are the
  one-landmark bound available when both endpoints share an owner, and
  pi6 rearranges Ptolemy's inequality over the quadrilateral
  (v, l1, l2, t). The heuristic value is max(0, max of the available
  candidates); the clamp matters because every candidate can go
  negative.

Operation counting: a binary minus counts as one subtraction whether or
not it sits inside an absolute value; taking the absolute value itself
is free. Two counting modes:

* "literal" (default): every available candidate is evaluated as
  written, nothing shared. Cross-owner evaluations cost exactly
  (9 sub, 2 mul, 1 div) over 4 candidates; same-owner evaluations cost
  exactly (8 sub, 0 mul, 0 div) over 5 candidates (the zero diagonal
  entry is still subtracted as written).
* "optimized": common subexpressions are reused; values are identical,
  counters reflect the reduced work (7 sub, 2 mul, 1 div cross-owner;
  1 sub same-owner).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .embedding import AltEmbedding, DistributedEmbedding

MODES = ("literal", "optimized")

SCENARIOS = ("S1", "S2", "S3", "S4", "S5")
"""Joint configuration of v's owner l1, t's owner l2, and the landmark
the full-table bound would pick (l_alpha, ties to the smallest index):

S1: l1 = l_alpha, l2 differs.   S2: l2 = l_alpha, l1 differs.
S3: l1 = l2 = l_alpha.          S4: l1 = l2, l_alpha differs.
S5: l1, l2, l_alpha pairwise distinct.
"""


@dataclass(frozen=True)
class OpCounters:
    """Arithmetic cost of one heuristic evaluation.

    max_arity = number of candidate bounds fed to the final max.
    """

    subtractions: int
    multiplications: int
    divisions: int
    max_arity: int

    def total(self) -> int:
        return self.subtractions + self.multiplications + self.divisions


@dataclass(frozen=True)
class HeuristicEval:
    """One evaluation: clamped value, labeled candidates, and cost.

    components maps candidate labels to values; None marks a candidate
    unavailable under the embedding (pi4/pi5 cross-owner, pi6
    same-owner).
    """

    value: float
    components: dict
    counters: OpCounters


# Lightweight evaluator protocol used by the search engine: returns
# (value, subtractions, multiplications, divisions, arity) per call.
Evaluator = Callable[[int, int], tuple]


def alt_h(e: AltEmbedding, v: int, t: int) -> HeuristicEval:
    """Full-table bound: max over landmarks of |d(v,l) - d(t,l)|."""
    table = e.table
    components = {}
    best = 0
    for i, row in enumerate(table):
        c = abs(row[v] - row[t])
        components[f"lm{i}"] = c
        if c > best:
            best = c
    k = len(table)
    return HeuristicEval(
        value=best,
        components=components,
        counters=OpCounters(k, 0, 0, k),
    )


def alp_components(e: DistributedEmbedding, v: int, t: int) -> dict:
    """All candidate bounds for (v, t), None where unavailable."""
    l1 = e.owner[v]
    l2 = e.owner[t]
    a = e.dist_to_owner[v]
    b = e.dist_to_owner[t]
    D = e.lmatrix[l1][l2]
    if l1 == l2:
        return {
            "pi1": abs(a - D) - b,
            "pi2": abs(a - b) - D,
            "pi3": abs(D - b) - a,
            "pi4": abs(a - b),
            "pi5": abs(a - b),
            "pi6": None,
        }
    return {
        "pi1": abs(a - D) - b,
        "pi2": abs(a - b) - D,
        "pi3": abs(D - b) - a,
        "pi4": None,
        "pi5": None,
        "pi6": (abs(a - D) * abs(D - b) - a * b) / D,
    }


def _alp_counters(same_owner: bool, mode: str, ptolemy_enabled: bool) -> OpCounters:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    if same_owner:
        # The Ptolemy candidate is never available here, its flag is moot.
        return OpCounters(8, 0, 0, 5) if mode == "literal" else OpCounters(1, 0, 0, 1)
    if not ptolemy_enabled:
        return OpCounters(6, 0, 0, 3)
    return OpCounters(9, 2, 1, 4) if mode == "literal" else OpCounters(7, 2, 1, 4)


def alp_dual_h(
    e: DistributedEmbedding,
    v: int,
    t: int,
    mode: str = "literal",
    ptolemy_enabled: bool = True,
) -> HeuristicEval:
    """Dual-landmark bound: max(0, max of available candidates).

    ptolemy_enabled=False drops pi6 from the max (and from the counters).
    """
    comps = alp_components(e, v, t)
    same = comps["pi6"] is None
    if not same and not ptolemy_enabled:
        comps = dict(comps, pi6=None)
    candidates = [c for c in comps.values() if c is not None]
    value = max(candidates)
    if value < 0:
        value = 0
    return HeuristicEval(
        value=value,
        components=comps,
        counters=_alp_counters(same, mode, ptolemy_enabled),
    )


def classify_scenario(
    alt: AltEmbedding, alp: DistributedEmbedding, v: int, t: int
) -> str:
    """Scenario label from (owner of v, owner of t, full-table argmax)."""
    if alt.landmarks.ids != alp.landmarks.ids:
        raise ValueError(
            f"embeddings disagree on landmarks: "
            f"{alt.landmarks.ids} vs {alp.landmarks.ids}"
        )
    la = 0
    best = -1
    for i, row in enumerate(alt.table):
        c = abs(row[v] - row[t])
        if c > best:
            best = c
            la = i
    l1 = alp.owner[v]
    l2 = alp.owner[t]
    if l1 == l2:
        return "S3" if la == l1 else "S4"
    if la == l1:
        return "S1"
    if la == l2:
        return "S2"
    return "S5"


def zero_evaluator(v: int, t: int) -> tuple:
    """h = 0 everywhere; degenerates the guided search to plain Dijkstra."""
    return 0, 0, 0, 0, 0


def make_alt_evaluator(e: AltEmbedding) -> Evaluator:
    """Closure form of alt_h for the search inner loop."""
    nv = len(e.table[0])
    cols = [tuple(row[v] for row in e.table) for v in range(nv)]
    k = len(e.table)

    def h(v: int, t: int) -> tuple:
        best = 0
        for a, b in zip(cols[v], cols[t]):
            d = a - b
            if d < 0:
                d = -d
            if d > best:
                best = d
        return best, k, 0, 0, k

    return h


def make_alp_evaluator(
    e: DistributedEmbedding,
    mode: str = "literal",
    ptolemy_enabled: bool = True,
) -> Evaluator:
    """Closure form of alp_dual_h for the search inner loop.

    Identical values to alp_dual_h in every mode; per-call counter
    constants come from the declared mode.
    """
    same_c = _alp_counters(True, mode, ptolemy_enabled)
    cross_c = _alp_counters(False, mode, ptolemy_enabled)
    same_ops = (same_c.subtractions, same_c.multiplications,
                same_c.divisions, same_c.max_arity)
    cross_ops = (cross_c.subtractions, cross_c.multiplications,
                 cross_c.divisions, cross_c.max_arity)
    owner = e.owner
    dto = e.dist_to_owner
    lmatrix = e.lmatrix

    def h(v: int, t: int) -> tuple:
        l1 = owner[v]
        l2 = owner[t]
        a = dto[v]
        b = dto[t]
        if l1 == l2:
            # max over pi1..pi5 collapses to |a - b|, which is >= 0.
            d = a - b
            if d < 0:
                d = -d
            return (d, *same_ops)
        D = lmatrix[l1][l2]
        x = a - D
        if x < 0:
            x = -x
        y = a - b
        if y < 0:
            y = -y
        z = D - b
        if z < 0:
            z = -z
        best = x - b
        c2 = y - D
        if c2 > best:
            best = c2
        c3 = z - a
        if c3 > best:
            best = c3
        if ptolemy_enabled:
            c6 = (x * z - a * b) / D
            if c6 > best:
                best = c6
        if best < 0:
            best = 0
        return (best, *cross_ops)

    return h
