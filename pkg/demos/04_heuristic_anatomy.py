"""Anatomy of one dual-landmark evaluation.

For endpoints owned by different landmarks the bound is the best of
several candidates: three quadrilateral differences and one ratio
bound that multiplies two gaps and divides by the landmark distance.
When both endpoints share an owner everything collapses to the plain
distance gap. The evaluator reports each candidate and the exact
arithmetic bill.

    python3 demos/04_heuristic_anatomy.py
"""

from polyroute import (
    LandmarkSet,
    alp_components,
    alp_dual_h,
    alt_h,
    build_alt_embedding,
    build_distributed_embedding,
    build_graph,
    classify_scenario,
)

# Unit path 0-1-2-3-4-5, landmarks at both ends.
g = build_graph(6, [(i, i + 1, 1) for i in range(5)])
L = LandmarkSet((0, 5))
dist = build_distributed_embedding(g, L)
full = build_alt_embedding(g, L)


def show(v, t):
    ev = alp_dual_h(dist, v, t)
    c = ev.counters
    owner_v, owner_t = dist.owner[v], dist.owner[t]
    kind = "same owner" if owner_v == owner_t else "cross owner"
    print(f"({v},{t}) {kind}: value={ev.value}")
    print(f"   candidates: {ev.components}")
    print(f"   cost: {c.subtractions} sub, {c.multiplications} mul, "
          f"{c.divisions} div, widest intermediate {c.max_arity} terms")
    print(f"   scenario vs full table: "
          f"{classify_scenario(full, dist, v, t)}, "
          f"full-table value {alt_h(full, v, t).value}")


# Cross-owner pair: vertex 1 sits in landmark 0's cell, vertex 4 in
# landmark 5's cell. The true distance is 3 and two candidates hit it.
show(1, 4)
print()

# Same-owner pair: both vertices belong to landmark 0, the value is
# exactly the gap between their owner distances.
show(1, 2)
print()

# Cheaper evaluation modes on the same pair. The literal mode prices
# the formulas exactly as written; optimized reuses shared
# subexpressions; dropping the ratio bound removes the only
# multiplication and division.
for label, kwargs in (
    ("literal      ", {}),
    ("optimized    ", {"mode": "optimized"}),
    ("ratio dropped", {"ptolemy_enabled": False}),
):
    ev = alp_dual_h(dist, 1, 4, **kwargs)
    c = ev.counters
    print(f"{label} value={ev.value} cost=({c.subtractions} sub, "
          f"{c.multiplications} mul, {c.divisions} div)")
