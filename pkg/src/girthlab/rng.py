"""Deterministic 64-bit PRNG used by every randomized procedure.

The generator is SplitMix64: state advances by the odd constant
0x9E3779B97F4A7C15 and each output is the xor-shift/multiply finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

applied to the new state. The stream is a pure function of the seed, so a
reimplementation in any language that follows this recipe reproduces all
generated objects bit for bit. Derived draws are pinned as follows and are
part of the reproducibility contract:

* ``randrange(n)``: rejection sampling. Draw ``u = next_u64()`` until
  ``u < 2**64 - (2**64 % n)``, then return ``u % n``.
* ``shuffle(xs)``: Fisher-Yates from the back; ``j = randrange(i + 1)``.
* ``sample_distinct(n, k)``: repeated ``randrange(n)`` discarding repeats,
  returned in draw order (uniform over ordered k-tuples without repetition).
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer (wider seeds are masked)."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection."""
        if n <= 0:
            raise ValueError("randrange needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def shuffle(self, xs: list) -> None:
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def sample_distinct(self, n: int, k: int) -> list[int]:
        """Ordered sample of k distinct integers from [0, n)."""
        if not 0 <= k <= n:
            raise ValueError("need 0 <= k <= n")
        chosen: list[int] = []
        seen: set[int] = set()
        while len(chosen) < k:
            v = self.randrange(n)
            if v not in seen:
                seen.add(v)
                chosen.append(v)
        return chosen


def derive_seed(seed: int, *salts: int) -> int:
    """Derive an independent child seed; the chain is part of the stream contract."""
    x = SplitMix64(seed).next_u64()
    for s in salts:
        x = SplitMix64(x ^ (s & _MASK64)).next_u64()
    return x
