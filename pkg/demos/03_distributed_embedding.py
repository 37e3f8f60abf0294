"""Inside the distributed embedding: ownership, memory, serialization.

The full table stores every landmark-to-vertex distance, k rows of n
entries. The distributed form keeps one owner landmark per vertex plus
the single distance to it, and adds the small k-by-k landmark matrix.
Preprocessing is one multi-source sweep instead of k full trees.

    python3 demos/03_distributed_embedding.py
"""

import io
from collections import Counter

from polyroute import (
    build_alt_embedding,
    build_distributed_embedding,
    generate_random_connected,
    load_embedding,
    save_embedding,
    select_farthest,
    space_accounting,
    track_kernels,
)

g = generate_random_connected(500, 200, seed=21)
L = select_farthest(g, 8, seed=21)

with track_kernels() as kc:
    dist = build_distributed_embedding(g, L)
print(f"distributed build: full_spt={kc.full_spt} "
      f"multi_source={kc.multi_source} truncated_spt={kc.truncated_spt}")

with track_kernels() as kc:
    full = build_alt_embedding(g, L)
print(f"full-table build : full_spt={kc.full_spt} "
      f"multi_source={kc.multi_source} truncated_spt={kc.truncated_spt}")
print()

# Ownership partitions the graph into nearest-landmark cells.
cells = Counter(dist.owner)
print("cell sizes by landmark index:", dict(sorted(cells.items())))
print()

# The stored-entry counter matches the closed form for each layout.
for label, e in (("full table", full), ("distributed", dist)):
    stored, formula = space_accounting(e)
    print(f"{label:11s} stores {stored} distance entries "
          f"(formula gives {formula})")
print()

# Round-trip through the binary format. Integral distances come back
# as ints, landmark ids and owners intact.
buf = io.BytesIO()
save_embedding(dist, buf)
print(f"serialized distributed embedding: {len(buf.getvalue())} bytes")
buf.seek(0)
assert load_embedding(buf) == dist
print("round trip: ok")
