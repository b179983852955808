"""Seed derivation shared by every stage of the toolkit.

All randomized stages draw from seeds derived here so that adding or
reordering a stage never perturbs the random streams of the others.
"""

import hashlib

MASK64 = (1 << 64) - 1


def splitmix64(state: int):
    """Yield an endless stream of 64-bit values from a splitmix-style generator."""
    x = state & MASK64
    while True:
        x = (x + 0x9E3779B97F4A7C15) & MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def select_indices(seed: int, population: int, count: int) -> list[int]:
    """Choose `count` distinct indices out of `population` without replacement.

    Partial Fisher-Yates driven by splitmix64; deterministic across platforms.
    """
    if count > population:
        raise ValueError("cannot select %d of %d" % (count, population))
    gen = splitmix64(seed)
    idx = list(range(population))
    for i in range(count):
        j = i + next(gen) % (population - i)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:count]


def derive_seed(master: int, stage: str) -> int:
    """Stage-scoped sub-seed: hash of (master seed, stage name), 63-bit."""
    h = hashlib.blake2b(
        ("%d:%s" % (master, stage)).encode("ascii"), digest_size=8
    ).digest()
    return int.from_bytes(h, "little") >> 1
