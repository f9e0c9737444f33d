import random

import pytest

from dodgson_young import build_profile, generate_impartial_culture
from dodgson_young.generate import derive_seed

A, B, C, D, E = 1, 2, 3, 4, 5

EX5_ROWS = [
    [A, B, C, D, E],
    [A, B, C, D, E],
    [D, A, E, C, B],
    [D, A, E, C, B],
    [C, E, B, D, A],
]


@pytest.fixture
def ex5():
    return build_profile(EX5_ROWS, 5)


def random_suite(count, m_range, n_range, master):
    """Deterministic list of (m, n, seed, profile) drawn like the bench harness."""
    rng = random.Random(master)
    out = []
    for i in range(count):
        m = rng.randint(*m_range)
        n = rng.randint(*n_range)
        seed = derive_seed(master, i)
        out.append((m, n, seed, generate_impartial_culture(m, n, seed)))
    return out


def brute_tally(rows, m):
    """counts[d][c] by direct pairwise counting, 1-based dict of dicts."""
    counts = {d: {c: 0 for c in range(1, m + 1)} for d in range(1, m + 1)}
    for row in rows:
        for i, d in enumerate(row):
            for c in row[i + 1:]:
                counts[d][c] += 1
    return counts
