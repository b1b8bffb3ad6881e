"""Deterministic seed derivation.

Every random draw in the package descends from an explicit integer seed
through a tag path (e.g. ``(seed, "tree", 17)``), so independent work
units such as trees, folds and permutation repeats get independent
streams whose values do not depend on execution order.
"""

import hashlib

import numpy as np


def derive_seed(seed, *tags):
    """Hash (seed, *tags) into a new 64-bit seed."""
    h = hashlib.sha256(str(int(seed)).encode("ascii"))
    for tag in tags:
        h.update(b"\x1f")
        h.update(str(tag).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def make_rng(seed, *tags) -> np.random.Generator:
    """Generator for the stream identified by (seed, *tags)."""
    if tags:
        seed = derive_seed(seed, *tags)
    return np.random.default_rng(int(seed))
