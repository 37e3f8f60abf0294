"""Deterministic seed derivation.

One top-level seed reproduces a whole experiment: every stochastic stage
(graph generation, landmark selection, workload sampling) draws from a
sub-seed derived here. sha256 rather than hash() because the latter is
salted per process.
"""

from __future__ import annotations

import hashlib


def derive_seed(root: int, *labels) -> int:
    """Map (root seed, label path) to a stable 64-bit sub-seed."""
    h = hashlib.sha256(str(root).encode())
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode())
    return int.from_bytes(h.digest()[:8], "big")
