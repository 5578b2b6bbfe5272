"""Deterministic, purpose-tagged random streams.

One 64-bit master seed drives everything. Each subsystem derives its own
stream from (master seed, purpose tags) via sha256, so adding draws in one
code path can never perturb another. Never uses Python's built-in hash(),
which is randomized per process.
"""

from __future__ import annotations

import hashlib
import random

# Recorded in sweep metadata so runs are replayable.
RNG_ALGORITHM = "mt19937+sha256-tags"


def derive_seed(master_seed: int, *tags: int | str) -> int:
    """64-bit child seed from a master seed and a sequence of purpose tags."""
    h = hashlib.sha256()
    h.update(str(int(master_seed)).encode())
    for tag in tags:
        h.update(b"/")
        h.update(str(tag).encode())
    return int.from_bytes(h.digest()[:8], "big")


def derive_rng(master_seed: int, *tags: int | str) -> random.Random:
    """Independent seeded stream for one purpose."""
    return random.Random(derive_seed(master_seed, *tags))
