"""Closed-form vs direct summation timings."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .sequence import SequenceSpec, g_iter
from .sums import Weight, sum_sq_closed, weighted_sum


class BudgetExceeded(Exception):
    pass


@dataclass
class BenchRow:
    n: int
    t_closed: float
    t_brute: float
    brute_complete: bool
    match: Optional[bool]

    @property
    def ratio(self) -> float:
        return self.t_brute / self.t_closed if self.t_closed > 0 else float("inf")


def _budgeted(terms: Iterable[int], deadline: float) -> Iterator[int]:
    for i, t in enumerate(terms):
        if i & 255 == 0 and time.perf_counter() > deadline:
            raise BudgetExceeded
        yield t


def time_closed(spec: SequenceSpec, k: int, x: Weight, n: int, repeat: int = 3) -> tuple[float, Fraction]:
    best = float("inf")
    value = Fraction(0)
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = sum_sq_closed(spec, k, x, n)
        best = min(best, time.perf_counter() - t0)
    return best, value


def time_brute(
    spec: SequenceSpec, k: int, x: Weight, n: int, budget: Optional[float] = None
) -> tuple[float, Optional[Fraction]]:
    """Time direct summation; with ``budget`` seconds, give up once it runs out.

    An abandoned run returns ``(elapsed, None)``; its elapsed time is a lower
    bound on the full brute-force cost.
    """
    t0 = time.perf_counter()
    terms: Iterable[int] = (g * g for g in g_iter(spec, k, k + n))
    if budget is not None:
        terms = _budgeted(terms, t0 + budget)
    try:
        value: Optional[Fraction] = weighted_sum(terms, x)
    except BudgetExceeded:
        value = None
    return time.perf_counter() - t0, value


def bench_row(
    spec: SequenceSpec, k: int, x: Weight, n: int, budget: Optional[float] = None
) -> BenchRow:
    t_closed, closed = time_closed(spec, k, x, n)
    t_brute, brute = time_brute(spec, k, x, n, budget)
    return BenchRow(
        n=n,
        t_closed=t_closed,
        t_brute=t_brute,
        brute_complete=brute is not None,
        match=None if brute is None else brute == closed,
    )


def ladder(n_min: int, n_max: int, factor: int = 10) -> list[int]:
    if n_min < 1 or n_max < n_min or factor < 2:
        raise ValueError("need 1 <= n_min <= n_max and factor >= 2")
    out = []
    n = n_min
    while n <= n_max:
        out.append(n)
        n *= factor
    if out[-1] != n_max:
        out.append(n_max)
    return out
