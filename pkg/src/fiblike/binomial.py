"""Partial sums and double binomial sums driven by linear recurrences.

A :class:`RecurrenceDescriptor` describes ``h X_j = sum_m f_m X_{j - c_m}``.
``lemma1_partial_sum`` turns such a relation into a closed weighted partial
sum; ``lemma5_residual`` checks the six double binomial sums a four-term
relation implies.  ``theorem7_residual`` instantiates them with the squares
of a Fibonacci-like sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .sequence import SequenceSpec, fib, g_at, sign

Number = Union[int, Fraction]
SequenceOracle = Callable[[int], int]

__all__ = [
    "OracleMismatch",
    "SingularDenominator",
    "RecurrenceDescriptor",
    "binomial",
    "squares_oracle",
    "square_recurrence",
    "fibonacci_recurrence",
    "main_descriptor",
    "check_oracle",
    "lemma1_partial_sum",
    "lemma5_sides",
    "lemma5_residual",
    "theorem7_sides",
    "theorem7_residual",
    "theorem7_nondegenerate",
    "theorem7_sign",
    "theorem7_printed_third",
    "THEOREM7_TO_LEMMA5",
]


class SingularDenominator(ZeroDivisionError):
    """1 - sum x^{c_m} f_m vanishes at the requested weight."""


class OracleMismatch(ValueError):
    """The supplied sequence does not satisfy the recurrence it was paired with."""


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class RecurrenceDescriptor:
    """``h X_j = f_1 X_{j-c_1} + ... + f_r X_{j-c_r}`` with nonzero coefficients."""

    coefficients: tuple[Number, ...]
    gaps: tuple[int, ...]
    h: Number = 1

    def __post_init__(self) -> None:
        if len(self.coefficients) != len(self.gaps):
            raise ValueError("one gap per coefficient")
        if any(f == 0 for f in self.coefficients) or self.h == 0:
            raise ValueError("recurrence coefficients must be non-vanishing")
        if len(set(self.gaps)) != len(self.gaps):
            raise ValueError("gaps must be pairwise distinct")

    @property
    def four_term(self) -> bool:
        return len(self.gaps) == 3

    def holds_at(self, oracle: SequenceOracle, j: int) -> bool:
        rhs = sum(f * oracle(j - c) for f, c in zip(self.coefficients, self.gaps))
        return self.h * oracle(j) == rhs


def squares_oracle(spec: SequenceSpec) -> SequenceOracle:
    return lambda j: g_at(spec, j) ** 2


def square_recurrence() -> RecurrenceDescriptor:
    """X_j = 2X_{j-1} + 2X_{j-2} - X_{j-3}, satisfied by X_j = G_j^2."""
    return RecurrenceDescriptor((2, 2, -1), (1, 2, 3))


def fibonacci_recurrence() -> RecurrenceDescriptor:
    return RecurrenceDescriptor((1, 1), (1, 2))


def main_descriptor(s: int, k: int, m: int) -> RecurrenceDescriptor:
    """Four-term relation for X_r = G_r^2 obtained from the main identity.

    h = F_{m-s} F_{m-k} F_{s-k}, f1 = (-1)^{s+k} F_k F_s F_{s-k},
    f2 = (-1)^{s+k+1} F_k F_m F_{m-k}, f3 = F_s F_m F_{m-s};
    gaps (a, b, c) = (-m, -s, -k).  Needs s, k, m nonzero and distinct.
    """
    e = sign(s + k)
    h = fib(m - s) * fib(m - k) * fib(s - k)
    f1 = e * fib(k) * fib(s) * fib(s - k)
    f2 = -e * fib(k) * fib(m) * fib(m - k)
    f3 = fib(s) * fib(m) * fib(m - s)
    return RecurrenceDescriptor((f1, f2, f3), (-m, -s, -k), h)


def _signed_range_sum(terms: Callable[[int], Fraction], lo: int, hi: int) -> Fraction:
    # sum_{j=lo}^{hi} with the usual convention for reversed limits:
    # empty when hi = lo - 1 and -sum_{hi+1}^{lo-1} when hi < lo - 1.
    if hi >= lo:
        return sum((terms(j) for j in range(lo, hi + 1)), Fraction(0))
    return -sum((terms(j) for j in range(hi + 1, lo)), Fraction(0))


def check_oracle(desc: RecurrenceDescriptor, oracle: SequenceOracle, lo: int, hi: int) -> None:
    for j in range(lo, hi + 1):
        if not desc.holds_at(oracle, j):
            raise OracleMismatch(f"recurrence fails at index {j}")


def lemma1_partial_sum(
    desc: RecurrenceDescriptor, oracle: SequenceOracle, x: Number, n: int
) -> Fraction:
    """sum_{j=0}^{n} x^j X_j from the recurrence, the values X_{-c}..X_{-1}
    and the last few X_j below n.

    A nontrivial ``h`` is folded into the coefficients.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    fs = [Fraction(f) / desc.h for f in desc.coefficients]
    den = 1 - sum(x**c * f for f, c in zip(fs, desc.gaps))
    if den == 0:
        raise SingularDenominator(f"partial sum formula is singular at x = {x}")
    num = Fraction(0)
    for f, c in zip(fs, desc.gaps):
        head = _signed_range_sum(lambda j: x ** (c - j) * oracle(-j), 1, c)
        tail = _signed_range_sum(lambda j: x ** (c + j) * oracle(j), n - c + 1, n)
        num += f * (head - tail)
    return num / den


def _pow(base: Number, e: int) -> Number:
    return base**e


def lemma5_sides(
    desc: RecurrenceDescriptor, oracle: SequenceOracle, variant: int, r: int, n: int
) -> tuple[Number, Number]:
    """(double sum, closed right side) of the ``variant``-th identity, 1..6."""
    if not desc.four_term:
        raise ValueError("the double binomial identities need a four-term recurrence")
    if n < 0:
        raise ValueError("n must be >= 0")
    f1, f2, f3 = desc.coefficients
    a, b, c = desc.gaps
    h = desc.h

    # For each variant: (weight(j, i), index(j, i), right side)
    if variant == 1:
        weight = lambda j, i: _pow(f3, n - j) * _pow(f2, n + j - i) * _pow(f1, i)  # noqa: E731
        index = lambda j, i: r - c * n + (c - b) * j + (b - a) * i  # noqa: E731
        rhs_coeff = _pow(h, n) * _pow(f2, n)
    elif variant == 2:
        weight = lambda j, i: _pow(f2, n - j) * _pow(f3, n + j - i) * _pow(f1, i)  # noqa: E731
        index = lambda j, i: r - b * n + (b - c) * j + (c - a) * i  # noqa: E731
        rhs_coeff = _pow(h, n) * _pow(f3, n)
    elif variant == 3:
        weight = lambda j, i: _pow(f1, n - j) * _pow(f3, n + j - i) * _pow(f2, i)  # noqa: E731
        index = lambda j, i: r - a * n + (a - c) * j + (c - b) * i  # noqa: E731
        rhs_coeff = _pow(h, n) * _pow(f3, n)
    elif variant == 4:
        weight = lambda j, i: sign(i) * _pow(h, i) * _pow(f3, n - j) * _pow(f2, j - i)  # noqa: E731
        index = lambda j, i: r - (c - a) * n + (c - b) * j + b * i  # noqa: E731
        rhs_coeff = _pow(-f1, n)
    elif variant == 5:
        weight = lambda j, i: sign(i) * _pow(h, i) * _pow(f3, n - j) * _pow(f1, j - i)  # noqa: E731
        index = lambda j, i: r - (c - b) * n + (c - a) * j + a * i  # noqa: E731
        rhs_coeff = _pow(-f2, n)
    elif variant == 6:
        weight = lambda j, i: sign(i) * _pow(h, i) * _pow(f2, n - j) * _pow(f1, j - i)  # noqa: E731
        index = lambda j, i: r - (b - c) * n + (b - a) * j + a * i  # noqa: E731
        rhs_coeff = _pow(-f3, n)
    else:
        raise ValueError(f"variant must be 1..6, got {variant}")

    lhs = 0
    for j in range(n + 1):
        cj = binomial(n, j)
        for i in range(j + 1):
            lhs += cj * binomial(j, i) * weight(j, i) * oracle(index(j, i))
    return lhs, rhs_coeff * oracle(r)


def lemma5_residual(
    desc: RecurrenceDescriptor,
    oracle: SequenceOracle,
    variant: int,
    r: int,
    n: int,
    check: bool = True,
) -> Number:
    """Double sum minus right side; zero whenever ``oracle`` obeys ``desc``.

    With ``check`` the recurrence is first verified over every index the
    double sum can touch; a violation raises :class:`OracleMismatch`.
    """
    if check:
        span = n * (max(map(abs, desc.gaps)) * 2 + 1) + 1
        check_oracle(desc, oracle, r - span, r + span)
    lhs, rhs = lemma5_sides(desc, oracle, variant, r, n)
    return lhs - rhs


# square identity number -> generic variant it instantiates
THEOREM7_TO_LEMMA5 = {1: 1, 2: 2, 3: 3}


def theorem7_nondegenerate(s: int, k: int, m: int) -> bool:
    """True when F_s, F_k, F_m, F_{m-s}, F_{m-k}, F_{s-k} are all nonzero."""
    return 0 not in (s, k, m) and len({s, k, m}) == 3


def theorem7_sides(
    spec: SequenceSpec,
    which: int,
    n: int,
    s: int,
    k: int,
    m: int,
    r: int,
    oracle: SequenceOracle | None = None,
) -> tuple[int, int]:
    """(double sum, right side) of the three square identities.

    The third identity carries the factor (F_k F_s F_{s-k})^{n-j}; see the
    README for why it is present.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    F = fib
    fs, fk, fm = F(s), F(k), F(m)
    fms, fmk, fsk = F(m - s), F(m - k), F(s - k)
    G2 = oracle or squares_oracle(spec)

    if which == 1:
        def term(j, i):
            return (sign(i + (s + k + 1) * j) * fs ** (n - j + i) * fk ** (n + j)
                    * fm ** (2 * n - i) * fms ** (n - j) * fmk ** (n + j - i) * fsk**i
                    * G2(r + k * n + (s - k) * j + (m - s) * i))
        rhs = (fm * fk * fmk**2 * fms * fsk) ** n * G2(r)
    elif which == 2:
        def term(j, i):
            return (sign(j + (s + k) * (i + j)) * fs ** (n + j) * fk ** (n - j + i)
                    * fm ** (2 * n - i) * fms ** (n + j - i) * fmk ** (n - j) * fsk**i
                    * G2(r + s * n + (k - s) * j + (m - k) * i))
        rhs = sign((s + k - 1) * n) * (fm * fs * fms**2 * fmk * fsk) ** n * G2(r)
    elif which == 3:
        def term(j, i):
            return (sign((s + k) * (i + j) + i) * fs ** (2 * n - i) * fk ** (n - j + i)
                    * fm ** (n + j) * fms ** (n + j - i) * fmk**i * fsk ** (n - j)
                    * G2(r + m * n + (k - m) * j + (s - k) * i))
        rhs = sign((s + k) * n) * (fm * fs * fmk * fsk * fms**2) ** n * G2(r)
    else:
        raise ValueError(f"which must be 1..3, got {which}")

    lhs = 0
    for j in range(n + 1):
        cj = binomial(n, j)
        for i in range(j + 1):
            lhs += cj * binomial(j, i) * term(j, i)
    return lhs, rhs


def theorem7_residual(
    spec: SequenceSpec,
    which: int,
    n: int,
    s: int,
    k: int,
    m: int,
    r: int,
    oracle: SequenceOracle | None = None,
) -> int:
    """Double sum minus right side of square identity ``which`` (1..3).

    ``oracle`` may supply precomputed squares G_i^2; it defaults to g_at.
    """
    lhs, rhs = theorem7_sides(spec, which, n, s, k, m, r, oracle)
    return lhs - rhs


def theorem7_printed_third(spec: SequenceSpec, n: int, s: int, k: int, m: int, r: int) -> int:
    """Residual of the third identity with the exponents exactly as typeset
    (F_s^{n+j-i} F_k^i and no F_{s-k} factor).  Kept to document that this
    form does not hold; see ``theorem7_sides`` for the working one."""
    F = fib
    fs, fk, fm = F(s), F(k), F(m)
    fms, fmk, fsk = F(m - s), F(m - k), F(s - k)
    lhs = 0
    for j in range(n + 1):
        for i in range(j + 1):
            lhs += (binomial(n, j) * binomial(j, i) * sign((s + k) * (i + j) + i)
                    * fs ** (n + j - i) * fk**i * fm ** (n + j) * fms ** (n + j - i)
                    * fmk**i * g_at(spec, r + m * n + (k - m) * j + (s - k) * i) ** 2)
    rhs = sign((s + k) * n) * (fm * fs * fmk * fsk * fms**2) ** n * g_at(spec, r) ** 2
    return lhs - rhs


def theorem7_sign(which: int, s: int, k: int, n: int) -> int:
    """Sign e with theorem7_residual == e * lemma5_residual on the main descriptor."""
    return {1: sign((s + k + 1) * n), 2: sign((s + k - 1) * n), 3: sign((s + k) * n)}[which]

