"""Deterministic seed derivation.

Child seeds come from hashing the master seed with context tags, so a
scan's per-task randomness is reproducible no matter how the tasks are
ordered or interleaved.
"""

from __future__ import annotations

import hashlib


def derive_seed(master: int, *tags) -> int:
    """A 64-bit child seed determined by the master seed and the tags."""
    data = repr((master,) + tags).encode()
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")
