"""Seeded impartial-culture profiles.

Rankings come from a Fisher-Yates shuffle driven only by
``random.Random(seed).random()``, whose output stream Python guarantees
across versions and platforms.  Changing the procedure requires bumping
``GENERATOR_VERSION``.
"""

from __future__ import annotations

import random

import numpy as np

from .profile import Profile, build_profile

GENERATOR_VERSION = "ic-mt19937-fisher-yates-v1"


def _shuffle(items: list, rng: random.Random) -> None:
    for i in range(len(items) - 1, 0, -1):
        j = int(rng.random() * (i + 1))
        items[i], items[j] = items[j], items[i]


def generate_impartial_culture(m: int, n: int, seed: int) -> Profile:
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    rng = random.Random(seed)
    rows = []
    for _ in range(n):
        order = list(range(1, m + 1))
        _shuffle(order, rng)
        rows.append(order)
    return build_profile(rows, m)


def derive_seed(master: int, *keys: int) -> int:
    """Per-trial seed from the master seed and cell coordinates."""
    return int(np.random.SeedSequence([master, *keys]).generate_state(1)[0])
