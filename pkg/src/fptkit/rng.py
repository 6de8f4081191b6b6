"""Seeded, splittable randomness.

All randomized behavior in the package flows through here: a root seed
plus a tuple of labels deterministically names an independent stream.
Splitting is done by hashing (seed, labels) into a child seed, so
distinct labels give statistically independent `random.Random` streams
and the same (seed, labels) always reproduces the same stream.
"""

from __future__ import annotations

import hashlib
import random

_SEED_BYTES = 8


def derive_seed(seed: int, *labels: int | str) -> int:
    """Derive a child seed from a root seed and a label path."""
    h = hashlib.blake2b(digest_size=_SEED_BYTES)
    h.update(str(seed).encode())
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode())
    return int.from_bytes(h.digest(), "big")


def make_rng(seed: int, *labels: int | str) -> random.Random:
    """Return a fresh generator for the stream named by (seed, labels)."""
    if labels:
        seed = derive_seed(seed, *labels)
    return random.Random(seed)
