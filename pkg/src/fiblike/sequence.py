"""Exact Fibonacci, Lucas and Fibonacci-like sequence values at signed indices.

Values are plain Python ints.  ``fib`` and ``lucas`` use fast doubling, so
index-to-value cost is O(log |j|) big-int multiplications.  ``g_at`` builds
on them through the addition formula; ``g_iter``/``g_range`` are the slow
linear sweeps kept around as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "SequenceSpec",
    "FIBONACCI",
    "LUCAS",
    "sign",
    "fib",
    "fib_pair",
    "lucas",
    "g_at",
    "g_iter",
    "g_range",
]


def sign(e: int) -> int:
    """(-1)**e for any integer e, negative exponents included."""
    return -1 if e & 1 else 1


@dataclass(frozen=True, order=True)
class SequenceSpec:
    """A Fibonacci-like sequence fixed by its two initial terms."""

    g0: int
    g1: int

    def __post_init__(self) -> None:
        if self.g0 == 0 and self.g1 == 0:
            raise ValueError("initial terms must not both be zero")

    def __str__(self) -> str:
        return f"({self.g0},{self.g1})"


FIBONACCI = SequenceSpec(0, 1)
LUCAS = SequenceSpec(2, 1)


def _doubling(n: int) -> tuple[int, int]:
    # (F_n, F_{n+1}) for n >= 0, walking the bits of n from the top.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(j: int) -> tuple[int, int]:
    """Return ``(F_j, F_{j+1})`` for any signed j."""
    if j >= 0:
        return _doubling(j)
    # F_{-m} = (-1)^(m-1) F_m
    m = -j
    fm, fm1 = _doubling(m)
    fm_1 = fm1 - fm  # F_{m-1}
    return sign(m - 1) * fm, sign(m) * fm_1


@lru_cache(maxsize=8192)
def fib(j: int) -> int:
    """Fibonacci number F_j for any signed integer j."""
    if j >= 0:
        return _doubling(j)[0]
    return sign(-j - 1) * _doubling(-j)[0]


@lru_cache(maxsize=8192)
def lucas(j: int) -> int:
    """Lucas number L_j for any signed integer j."""
    m = abs(j)
    fm, fm1 = _doubling(m)
    value = 2 * fm1 - fm  # L_m = F_{m-1} + F_{m+1}
    return sign(m) * value if j < 0 else value


def g_at(spec: SequenceSpec, j: int) -> int:
    """G_j of the sequence with G_0 = spec.g0, G_1 = spec.g1.

    Non-negative indices use G_j = F_{j-1} G_0 + F_j G_1; negative ones use
    G_{-j} = (-1)^j (G_0 L_j - G_j).
    """
    if j >= 0:
        fj, fj1 = fib_pair(j)
        return (fj1 - fj) * spec.g0 + fj * spec.g1
    m = -j
    fm, fm1 = fib_pair(m)
    gm = (fm1 - fm) * spec.g0 + fm * spec.g1
    lm = 2 * fm1 - fm
    return sign(m) * (spec.g0 * lm - gm)


def g_iter(spec: SequenceSpec, lo: int, hi: int) -> Iterator[int]:
    """Yield G_lo, ..., G_hi by plain recurrence, starting from G_0 and G_1.

    Only the recurrence is used (forward G_{j+1} = G_j + G_{j-1}, backward
    G_{j-1} = G_{j+1} - G_j), so this is independent of the fast paths.  The
    sweep starts at the origin, so cost is O(max(|lo|, |hi|)) additions.
    """
    if lo > hi:
        raise ValueError(f"invalid range: lo={lo} > hi={hi}")
    if lo >= 0:
        a, b = spec.g0, spec.g1  # (G_j, G_{j+1}) with j = 0
        for _ in range(lo):
            a, b = b, a + b
        for _ in range(hi - lo + 1):
            yield a
            a, b = b, a + b
        return
    # walk backward to lo, then forward
    a, b = spec.g0, spec.g1
    for _ in range(-lo):
        a, b = b - a, a
    for _ in range(hi - lo + 1):
        yield a
        a, b = b, a + b


def g_range(spec: SequenceSpec, lo: int, hi: int) -> list[int]:
    """``[G_lo, ..., G_hi]`` from a single recurrence sweep."""
    return list(g_iter(spec, lo, hi))
