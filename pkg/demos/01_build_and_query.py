"""Build a graph three ways, then answer one query three ways.

The engine keeps queries honest by instrumentation: every result
carries the number of settled and expanded vertices, reopen events,
heuristic evaluations, and the exact arithmetic spent inside the
heuristic. Run me from the repository root:

    python3 demos/01_build_and_query.py
"""

from polyroute import (
    LandmarkSet,
    astar,
    build_distributed_embedding,
    build_alt_embedding,
    build_graph,
    dijkstra_query,
    generate_grid,
    generate_random_connected,
    make_alp_evaluator,
    make_alt_evaluator,
)

# Three constructors. Explicit edge lists for hand-made graphs, a
# 4-neighbor lattice, and a seeded random connected graph whose layout
# never changes between runs.
path6 = build_graph(6, [(i, i + 1, 1) for i in range(5)])
grid = generate_grid(8, 8)
rnd = generate_random_connected(200, 80, seed=7)

print("path6:", path6.vertex_count, "vertices /", path6.edge_count, "edges")
print("grid :", grid.vertex_count, "vertices /", grid.edge_count, "edges")
print("rnd  :", rnd.vertex_count, "vertices /", rnd.edge_count, "edges")
print()

# Blind baseline: textbook shortest path, no preprocessing.
r = dijkstra_query(rnd, 0, 199)
print(f"dijkstra  distance={r.distance}  settled={r.settled}")

# Full-table guidance: one distance row per landmark, strongest bound.
L = LandmarkSet((0, 50, 100, 150))
full = build_alt_embedding(rnd, L)
r = astar(rnd, 0, 199, make_alt_evaluator(full))
print(f"full tbl  distance={r.distance}  settled={r.settled}  "
      f"evals={r.heuristic_evals}  subs={r.op_totals.subtractions}")

# Distributed guidance: each vertex remembers only its nearest landmark
# and that one distance. Far less memory, weaker bound, and the search
# may reopen vertices because the bound is not consistent.
dist = build_distributed_embedding(rnd, L)
r = astar(rnd, 0, 199, make_alp_evaluator(dist))
print(f"dist emb  distance={r.distance}  settled={r.settled}  "
      f"evals={r.heuristic_evals}  subs={r.op_totals.subtractions}  "
      f"muls={r.op_totals.multiplications}  divs={r.op_totals.divisions}  "
      f"reopened={r.reopened}")

# All three agree on the distance; they differ in work profile only.
