"""Weighted partial sums of squares and products of Fibonacci-like numbers.

Every closed form here has a brute-force twin (``*_brute``) that sums the
terms directly from a recurrence sweep.  Weights are exact rationals; the
only rational root of the characteristic denominator x^3 - 2x^2 - 2x + 1
is x = -1, and every closed form handles it (and x = 0, x = 1) by dispatch.
Sums start at j = 0 with the convention 0**0 == 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .report import IdentityReport
from .sequence import FIBONACCI, SequenceSpec, fib, fib_pair, g_at, g_iter, lucas, sign
from .series import Poly, series_expand

Weight = Union[int, Fraction]

__all__ = [
    "DegenerateFactor",
    "weighted_sum",
    "product_sum_brute",
    "sum_sq_brute",
    "sum_sq_closed",
    "sum_sq_initfree",
    "s_g",
    "sum_F_sq_closed",
    "sum_product_closed",
    "product_sum_unit",
    "product_sum_unit_shift_free",
    "corollary_product_sums",
    "corollary_unit",
    "spread_product_closed",
    "spread_product_unit",
    "UnitSums",
    "unit_sum_specials",
    "FIB_SQ_NUM",
    "CHAR_DEN",
    "gf_fib_square_check",
    "gf_spread_product_check",
]


class DegenerateFactor(ZeroDivisionError):
    """The closed form divides by a factor that vanishes for these shifts."""


def _q(x: Weight) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"upper limit n must be >= 0, got {n}")


# -- brute force ------------------------------------------------------------

def weighted_sum(terms: Iterable[int], x: Weight) -> Fraction:
    """sum(t_j * x**j) over an iterable of integer terms t_0, t_1, ...

    Runs on integers only: with x = p/q it accumulates sum(t_j p^j q^(n-j))
    and divides by q^n once at the end.
    """
    x = _q(x)
    p, q = x.numerator, x.denominator
    acc, pj, qn = 0, 1, 1
    first = True
    for t in terms:
        if first:
            acc, first = t, False
        else:
            pj *= p
            qn *= q
            acc = acc * q + t * pj
    return Fraction(acc, qn)


def product_sum_brute(spec: SequenceSpec, a: int, b: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+a} G_{j+b} by direct summation."""
    _check_n(n)
    terms = (u * v for u, v in zip(g_iter(spec, a, a + n), g_iter(spec, b, b + n)))
    return weighted_sum(terms, x)


def sum_sq_brute(spec: SequenceSpec, k: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+k}^2 by direct summation."""
    _check_n(n)
    return weighted_sum((g * g for g in g_iter(spec, k, k + n)), x)


# -- squares ----------------------------------------------------------------

def _window(spec: SequenceSpec, start: int, count: int) -> list[int]:
    out = [g_at(spec, start), g_at(spec, start + 1)]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def _s_g_generic(spec: SequenceSpec, x: Fraction, n: int) -> Fraction:
    # Closed form through the initial terms; undefined only at x = -1.
    g0, g1 = spec.g0, spec.g1
    g2 = g0 + g1
    gn1, gn2, gn3 = _window(spec, n + 1, 3)
    den = x**3 - 2 * x**2 - 2 * x + 1
    xn1 = x ** (n + 1)
    a = 2 * x**2 + 2 * x - 1
    num = (
        -a * g0 * g0
        - (2 * x**2 - x) * g1 * g1
        + x**2 * g2 * g2
        + a * xn1 * gn1 * gn1
        + (2 * x - 1) * xn1 * x * gn2 * gn2
        - xn1 * x**2 * gn3 * gn3
    )
    return num / den


def s_g(spec: SequenceSpec, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_j^2 for any rational x."""
    _check_n(n)
    x = _q(x)
    if x == -1:
        return sum_sq_initfree(spec, 0, x, n)
    return _s_g_generic(spec, x, n)


def _unit_sq(spec: SequenceSpec, k: int, n: int) -> int:
    # x = 1, written through G_0, G_1, G_n, G_{n+1}.
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    fk_1, fk, fk1 = fib(k - 1), fib(k), fib(k + 1)
    return (
        (fk1 * fk_1 + fk * fk) * (gn * gn1 - g0 * g1 + g0 * g0)
        + fk_1 * fk * (gn - g1 + g0) * (gn + g1 - g0)
        + fk1 * fk * (gn1 - g0) * (gn1 + g0)
    )


def sum_sq_closed(spec: SequenceSpec, k: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+k}^2 in O(log n) big-int work.

    Generic x goes through the initial-term formula (which carries an
    overall factor x); x = 0, 1 and -1 are dispatched to exact special cases.
    """
    _check_n(n)
    x = _q(x)
    if x == 0:
        return Fraction(g_at(spec, k) ** 2)
    if x == -1:
        return sum_sq_initfree(spec, k, x, n)
    if x == 1:
        return Fraction(_unit_sq(spec, k, n))
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    fk_1, fk, fk1 = fib(k - 1), fib(k), fib(k + 1)
    xn1 = x ** (n + 1)
    total = (
        (x * fk1 * fk_1 + fk1 * fk - x * x * fk_1 * fk) * _s_g_generic(spec, x, n)
        + x * fk_1 * fk * (xn1 * gn * gn - (g1 - g0) ** 2)
        + fk1 * fk * (xn1 * gn1 * gn1 - g0 * g0)
    )
    return total / x


def _alternating_geometric(x: Fraction, n: int) -> Fraction:
    # sum_{j=0}^{n} (-x)^j, including x = -1
    if x == -1:
        return Fraction(n + 1)
    return (1 - (-x) ** (n + 1)) / (1 + x)


def sum_sq_initfree(spec: SequenceSpec, k: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+k}^2 from G_k, G_{k+1} and the Fibonacci sum alone.

    The factor (1 + (-1)^n x^(n+1)) / (1 + x) is evaluated as the finite
    alternating geometric sum, so x = -1 needs no special treatment.
    """
    _check_n(n)
    x = _q(x)
    gk, gk1 = _window(spec, k, 2)
    fn = fib(n)
    sf = sum_F_sq_closed(x, n)
    cross = 2 * gk * gk1
    return (
        sf * (gk1 * gk1 + x * gk * gk + (1 - x) * cross)
        + (1 - x ** (n + 1) * fn * fn) * (gk * gk - cross)
        + _alternating_geometric(x, n) * cross
    )


def sum_F_sq_closed(x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j F_j^2 with separate branches for x = 1 and x = -1."""
    _check_n(n)
    x = _q(x)
    fn, fn1 = fib_pair(n)
    fn2 = fn + fn1
    fn3 = fn1 + fn2
    if x == 1:
        return Fraction(fn * fn1)
    if x == -1:
        e = sign(n - 1)
        rhs = (n + 3) * fn3 * fn3 - (3 * n + 8) * fn2 * fn2 + (n - 1) * fn1 * fn1 + 3 * e
        return Fraction(rhs, 5 * e)
    xn1 = x ** (n + 1)
    num = (
        x * (1 - x)
        - (1 - 2 * x - 2 * x**2) * xn1 * fn1 * fn1
        - (1 - 2 * x) * xn1 * x * fn2 * fn2
        - xn1 * x**2 * fn3 * fn3
    )
    return num / (1 - 2 * x - 2 * x**2 + x**3)


# -- products ---------------------------------------------------------------

def sum_product_closed(spec: SequenceSpec, k: int, s: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+k} G_{j+s} via three sums of squares.

    Raises DegenerateFactor when k or s is zero (the formula divides by
    2 F_s F_k).
    """
    _check_n(n)
    if k == 0 or s == 0:
        raise DegenerateFactor(f"F_k F_s vanishes for k={k}, s={s}")
    x = _q(x)
    fk, fs, fsk = fib(k), fib(s), fib(s - k)
    total = (
        fs * fs * sum_sq_closed(spec, k, x, n)
        + fk * fk * sum_sq_closed(spec, s, x, n)
        - fsk * fsk * sum_sq_closed(spec, 0, x, n)
    )
    return total / (2 * fs * fk)


def product_sum_unit(spec: SequenceSpec, k: int, s: int, n: int) -> Fraction:
    """x = 1 case of :func:`sum_product_closed` written through G_0, G_1, G_n, G_{n+1}.

    The coefficient of (G_{n+1} - G_0)(G_{n+1} + G_0) is
    F_s F_k (F_s F_{k+1} + F_k F_{s+1}).
    """
    _check_n(n)
    if k == 0 or s == 0:
        raise DegenerateFactor(f"F_k F_s vanishes for k={k}, s={s}")
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    F = fib
    fk, fs = F(k), F(s)
    total = (
        (fs * fs * (F(k + 1) * F(k - 1) + fk * fk) + fk * fk * (F(s + 1) * F(s - 1) + fs * fs)
         - F(s - k) ** 2) * (gn * gn1 - g0 * g1 + g0 * g0)
        + fs * fk * (fs * F(k - 1) + fk * F(s - 1)) * (gn - g1 + g0) * (gn + g1 - g0)
        + fs * fk * (fs * F(k + 1) + fk * F(s + 1)) * (gn1 - g0) * (gn1 + g0)
    )
    return Fraction(total, 2 * fs * fk)


def product_sum_unit_shift_free(spec: SequenceSpec, k: int, s: int, n: int) -> Fraction:
    """Second x = 1 evaluation, using G_{k-1..k+1} and G_{s-1..s+1}."""
    _check_n(n)
    if k == 0 or s == 0:
        raise DegenerateFactor(f"F_k F_s vanishes for k={k}, s={s}")
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    gk_1, gk, gk1 = _window(spec, k - 1, 3)
    gs_1, gs, gs1 = _window(spec, s - 1, 3)
    fn, fn1 = fib_pair(n)
    fk, fs = fib(k), fib(s)
    fk2, fs2 = fk * fk, fs * fs
    total = (
        fn * fn1 * (fs2 * (gk1 * gk1 + gk * gk) + fk2 * (gs1 * gs1 + gs * gs))
        + (fn * fn - 1) * (fs2 * (gk1 * gk1 - gk_1 * gk_1) + fk2 * (gs1 * gs1 - gs_1 * gs_1))
        + (1 + sign(n)) * (fs2 * gk1 * gk + fk2 * gs1 * gs)
        - fib(s - k) ** 2 * (gn * gn1 - g0 * g1 + g0 * g0)
    )
    return Fraction(total, 2 * fs * fk)


def corollary_product_sums(spec: SequenceSpec, x: Weight, n: int) -> tuple[Fraction, Fraction]:
    """(sum x^j G_{j+1} G_{j-2}, sum x^j G_j G_{j-1}) for j = 0..n."""
    _check_n(n)
    x = _q(x)
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    sg = s_g(spec, x, n)
    xn1 = x ** (n + 1)
    first = (1 - x) * sg + xn1 * gn * gn - (g1 - g0) ** 2
    if x == 0:
        second = Fraction(g0 * (g1 - g0))  # G_0 G_{-1}
    else:
        second = (
            (1 - x - x * x) * sg
            + xn1 * gn1 * gn1
            + xn1 * x * gn * gn
            - x * (g1 - g0) ** 2
            - g0 * g0
        ) / (2 * x)
    return first, second


def corollary_unit(spec: SequenceSpec, n: int) -> tuple[int, Fraction]:
    """x = 1 forms of :func:`corollary_product_sums`."""
    _check_n(n)
    g0, g1 = spec.g0, spec.g1
    gn_1, gn, gn1 = _window(spec, n - 1, 3)
    first = (gn - g1 + g0) * (gn + g1 - g0)
    second = Fraction(gn1 * gn_1 + (gn - g0) * (gn + g0) + (g1 - g0) * (2 * g0 - g1), 2)
    return first, second


def spread_product_closed(spec: SequenceSpec, k: int, x: Weight, n: int) -> Fraction:
    """sum_{j=0}^{n} x^j G_{j+k} G_{j-k}."""
    _check_n(n)
    x = _q(x)
    if x == 0:
        return Fraction(g_at(spec, k) * g_at(spec, -k))
    g0, g1 = spec.g0, spec.g1
    gn, gn1 = _window(spec, n, 2)
    fk, lk = fib(k), lucas(k)
    fk2 = fk * fk
    xn1 = x ** (n + 1)
    coeff = x * lk * lk - (1 + x * x) * fk2 - 2 * x * fib(k - 1) * fib(k + 1)
    total = (
        coeff * s_g(spec, x, n)
        + x * fk2 * (xn1 * gn * gn - (g1 - g0) ** 2)
        - fk2 * (xn1 * gn1 * gn1 - g0 * g0)
    )
    return total / (2 * x * sign(k))


def spread_product_unit(spec: SequenceSpec, k: int, n: int) -> Fraction:
    """x = 1 form of :func:`spread_product_closed`."""
    _check_n(n)
    g0, g1 = spec.g0, spec.g1
    gn_1, gn, gn1, gn2 = _window(spec, n - 1, 4)
    fk, lk = fib(k), lucas(k)
    total = (lk * lk - 2 * fib(k - 1) * fib(k + 1) - 2 * fk * fk) * (gn * gn1 - g0 * g1 + g0 * g0)
    total -= fk * fk * (gn_1 * gn2 - 2 * g0 * g1 + g1 * g1)
    return Fraction(total, 2 * sign(k))


# -- x = 1 specials ---------------------------------------------------------

@dataclass(frozen=True)
class UnitSums:
    """Several closed forms of sum_{j=0}^{n} G_{j+k}^2; all fields must agree.

    ``fib_general`` and ``fib_parity`` are only filled for the Fibonacci
    sequence itself.
    """

    n: int
    k: int
    initial_terms: int
    shift_free: int
    parity: int
    fib_general: Optional[int] = None
    fib_parity: Optional[int] = None

    def values(self) -> list[int]:
        vals = [self.initial_terms, self.shift_free, self.parity]
        vals += [v for v in (self.fib_general, self.fib_parity) if v is not None]
        return vals


def unit_sum_specials(spec: SequenceSpec, k: int, n: int) -> UnitSums:
    _check_n(n)
    gk_1, gk, gk1 = _window(spec, k - 1, 3)
    fn, fn1 = fib_pair(n)
    a, b = gk1 * gk1 + gk * gk, gk1 * gk1 - gk_1 * gk_1
    shift_free = fn * fn1 * a + (fn * fn - 1) * b + (1 + sign(n)) * gk1 * gk

    if n % 2:  # n = 2p - 1
        p = (n + 1) // 2
        f_odd, f_even = fib(2 * p - 1), fib(2 * p)
        parity = f_odd * f_even * a + (f_odd * f_odd - 1) * b
    else:  # n = 2p
        p = n // 2
        f_even, f_next = fib(2 * p), fib(2 * p + 1)
        parity = f_even * f_next * a + (f_even * f_even - 1) * b + 2 * gk1 * gk

    fib_general = fib_parity = None
    if spec == FIBONACCI:
        f2k, f2k1 = fib(2 * k), fib(2 * k + 1)
        fk, fk1 = fib(k), fib(k + 1)
        fib_general = fn * fn1 * f2k1 + (fn * fn - 1) * f2k + (1 + sign(n)) * fk * fk1
        if n % 2:
            fib_parity = f_even * f_odd * f2k1 + (f_odd * f_odd - 1) * f2k
        else:
            fib_parity = f_even * f_next * f2k1 + (f_even * f_even - 1) * f2k + 2 * fk * fk1

    return UnitSums(
        n=n,
        k=k,
        initial_terms=_unit_sq(spec, k, n),
        shift_free=shift_free,
        parity=parity,
        fib_general=fib_general,
        fib_parity=fib_parity,
    )


# -- generating functions ---------------------------------------------------

FIB_SQ_NUM = Poly([0, 1, -1])  # x(1 - x)
CHAR_DEN = Poly([1, -2, -2, 1])  # 1 - 2x - 2x^2 + x^3


def gf_fib_square_check(order: int) -> IdentityReport:
    """Compare the expansion of x(1-x)/(1-2x-2x^2+x^3) with F_j^2, j <= order."""
    report = IdentityReport("GF_FIB_SQUARES")
    coeffs = series_expand(FIB_SQ_NUM, CHAR_DEN, order)
    for j, c in enumerate(coeffs):
        report.record((j,), c - fib(j) ** 2)
    return report


def spread_gf_parts(spec: SequenceSpec, k: int) -> tuple[Poly, Poly, Poly]:
    """(numerator, denominator, polynomial part) of the closed generating
    function of (-1)^k 2x sum x^j G_{j+k} G_{j-k}."""
    g0, g1 = spec.g0, spec.g1
    g2 = g0 + g1
    fk, lk = fib(k), lucas(k)
    fk2 = fk * fk
    weight = Poly([-fk2, lk * lk - 2 * fib(k + 1) * fib(k - 1), -fk2])
    initial = Poly([g0 * g0, g1 * g1 - 2 * g0 * g0, g2 * g2 - 2 * g0 * g0 - 2 * g1 * g1])
    correction = Poly([fk2 * g0 * g0, -fk2 * (g1 - g0) ** 2])
    return weight * initial, CHAR_DEN, correction


def gf_spread_product_check(spec: SequenceSpec, k: int, order: int) -> IdentityReport:
    """Coefficient-wise check of the generating function of G_{j+k} G_{j-k}.

    The left side's coefficient of x^t is (-1)^k 2 G_{t-1+k} G_{t-1-k}
    (zero for t = 0); the right side is the rational part expanded by
    :func:`series_expand` plus the polynomial correction.
    """
    report = IdentityReport("GF_SPREAD_PRODUCT")
    num, den, correction = spread_gf_parts(spec, k)
    rhs = series_expand(num, den, order)
    sk = sign(k)
    for t in range(order + 1):
        lhs = 0 if t == 0 else 2 * sk * g_at(spec, t - 1 + k) * g_at(spec, t - 1 - k)
        report.record((spec.g0, spec.g1, k, t), lhs - (rhs[t] + correction[t]))
    return report
