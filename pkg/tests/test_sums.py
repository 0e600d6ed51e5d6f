from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from fiblike import sums
from fiblike.sequence import FIBONACCI, LUCAS, SequenceSpec, fib, g_at

SPECS = [SequenceSpec(0, 1), SequenceSpec(2, 1), SequenceSpec(1, 1), SequenceSpec(1, 0),
         SequenceSpec(3, -5), SequenceSpec(-2, 7)]
WEIGHTS = [Q(0), Q(1), Q(-1), Q(2), Q(-2), Q(1, 2), Q(-1, 3), Q(3, 7), Q(-7, 2)]

specs = st.sampled_from(SPECS)
weights = st.fractions(max_denominator=9).filter(lambda q: abs(q) <= 5) | st.sampled_from(WEIGHTS)
ns = st.integers(0, 40)
shifts = st.integers(-8, 8)


def plain(spec, x, n, a, b):
    """sum_{j=0}^{n} x^j G_{j+a} G_{j+b} the slow way, term by term in Q."""
    return sum((Q(x) ** j * g_at(spec, j + a) * g_at(spec, j + b) for j in range(n + 1)), Q(0))


# -- brute oracle itself ----------------------------------------------------

def test_brute_examples():
    assert sums.sum_sq_brute(FIBONACCI, 0, 2, 2) == 6
    assert sums.sum_sq_brute(FIBONACCI, 0, 1, 5) == 40 == fib(5) * fib(6)
    assert sums.sum_sq_brute(LUCAS, 4, Q(3, 7), 0) == g_at(LUCAS, 4) ** 2


@given(specs, shifts, weights, ns)
def test_brute_matches_plain(spec, k, x, n):
    assert sums.sum_sq_brute(spec, k, x, n) == plain(spec, x, n, k, k)


def test_weighted_sum_zero_weight():
    assert sums.weighted_sum([7, 5, 3], 0) == 7


# -- squares ----------------------------------------------------------------

def test_closed_examples():
    assert sums.sum_sq_closed(FIBONACCI, 0, 2, 2) == 6
    assert sums.sum_sq_closed(LUCAS, 0, 1, 3) == 30
    assert sums.sum_sq_closed(FIBONACCI, 0, -1, 3) == -4


def test_generic_initial_term_formula_example():
    # numerator -18 over denominator -3 at x = 2, n = 2 on F
    assert sums._s_g_generic(FIBONACCI, Q(2), 2) == Q(-18, -3)


@given(specs, shifts, weights, ns)
def test_closed_matches_brute(spec, k, x, n):
    assert sums.sum_sq_closed(spec, k, x, n) == sums.sum_sq_brute(spec, k, x, n)


@given(specs, shifts, weights, ns)
def test_initfree_matches_brute(spec, k, x, n):
    assert sums.sum_sq_initfree(spec, k, x, n) == sums.sum_sq_brute(spec, k, x, n)


def test_initfree_examples():
    assert sums.sum_sq_initfree(LUCAS, 3, Q(1, 2), 10) == sums.sum_sq_brute(LUCAS, 3, Q(1, 2), 10)
    assert sums.sum_sq_initfree(LUCAS, 0, -1, 4) == sum((-1) ** j * g_at(LUCAS, j) ** 2 for j in range(5))
    for x in WEIGHTS:
        assert sums.sum_sq_initfree(FIBONACCI, 0, x, 7) == sums.sum_sq_closed(FIBONACCI, 0, x, 7)


@pytest.mark.parametrize("x, n, expected", [(2, 2, 6), (1, 5, 40), (-1, 3, -4)])
def test_fib_square_sum_examples(x, n, expected):
    assert sums.sum_F_sq_closed(x, n) == expected


def test_alternating_fib_squares():
    for n in range(0, 120):
        assert sums.sum_F_sq_closed(-1, n) == sum((-1) ** j * fib(j) ** 2 for j in range(n + 1))


@given(weights, ns)
def test_fib_square_sum_matches_brute(x, n):
    assert sums.sum_F_sq_closed(x, n) == sums.sum_sq_brute(FIBONACCI, 0, x, n)


def test_s_g_agrees_with_k0(tmp_path):
    for spec in SPECS:
        for x in WEIGHTS:
            assert sums.s_g(spec, x, 9) == sums.sum_sq_closed(spec, 0, x, 9)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        sums.sum_sq_closed(FIBONACCI, 0, 1, -1)


# -- products ---------------------------------------------------------------

def test_product_examples():
    assert sums.sum_product_closed(FIBONACCI, 1, 2, 1, 3) == 24 == 1 * 1 + 1 * 2 + 2 * 3 + 3 * 5
    assert sums.sum_product_closed(LUCAS, 2, -1, Q(1, 3), 6) == plain(LUCAS, Q(1, 3), 6, 2, -1)
    assert sums.sum_product_closed(LUCAS, 3, 3, Q(2), 6) == sums.sum_sq_closed(LUCAS, 3, 2, 6)


def test_product_degenerate():
    with pytest.raises(sums.DegenerateFactor):
        sums.sum_product_closed(FIBONACCI, 0, 2, 1, 3)
    with pytest.raises(sums.DegenerateFactor):
        sums.product_sum_unit(FIBONACCI, 2, 0, 3)


nonzero = shifts.filter(bool)


@given(specs, nonzero, nonzero, weights, ns)
def test_product_matches_brute(spec, k, s, x, n):
    assert sums.sum_product_closed(spec, k, s, x, n) == sums.product_sum_brute(spec, k, s, x, n)


@given(specs, nonzero, nonzero, ns)
def test_unit_product_forms_agree(spec, k, s, n):
    brute = sums.product_sum_brute(spec, k, s, 1, n)
    assert sums.product_sum_unit(spec, k, s, n) == brute
    assert sums.product_sum_unit_shift_free(spec, k, s, n) == brute


def test_corollary_examples():
    first, second = sums.corollary_product_sums(FIBONACCI, 1, 3)
    assert second == 3
    assert Q(fib(4) * fib(2) + fib(3) ** 2 - 1, 2) == 3
    for g0, g1 in [(0, 1), (2, 1), (3, -5)]:
        spec = SequenceSpec(g0, g1)
        assert sums.corollary_product_sums(spec, 1, 0)[0] == g_at(spec, 1) * g_at(spec, -2)
    for i, (a, b) in enumerate([(1, -2), (0, -1)]):
        assert sums.corollary_product_sums(LUCAS, -2, 5)[i] == plain(LUCAS, -2, 5, a, b)


@given(specs, weights, ns)
def test_corollary_matches_brute(spec, x, n):
    first, second = sums.corollary_product_sums(spec, x, n)
    assert first == sums.product_sum_brute(spec, 1, -2, x, n)
    assert second == sums.product_sum_brute(spec, 0, -1, x, n)


@given(specs, ns)
def test_corollary_unit_forms(spec, n):
    assert sums.corollary_unit(spec, n) == sums.corollary_product_sums(spec, 1, n)


def test_spread_examples():
    assert sums.spread_product_closed(FIBONACCI, 1, 1, 2) == 3
    assert -2 * 3 == 2 * (-1) ** 1 * sums.spread_product_unit(FIBONACCI, 1, 2)
    for x in WEIGHTS:
        assert sums.spread_product_closed(LUCAS, 0, x, 6) == sums.s_g(LUCAS, x, 6)
    spec = SequenceSpec(3, -5)
    assert sums.spread_product_closed(spec, 4, Q(2, 5), 8) == plain(spec, Q(2, 5), 8, 4, -4)


@given(specs, shifts, weights, ns)
def test_spread_matches_brute(spec, k, x, n):
    brute = sums.product_sum_brute(spec, k, -k, x, n)
    assert sums.spread_product_closed(spec, k, x, n) == brute
    if x == 1:
        assert sums.spread_product_unit(spec, k, n) == brute


# -- x = 1 specials ---------------------------------------------------------

def test_unit_specials_example():
    rec = sums.unit_sum_specials(FIBONACCI, 2, 4)
    assert 1 + 4 + 9 + 25 + 64 == 103
    assert fib(4) * fib(5) * fib(5) + (fib(4) ** 2 - 1) * fib(4) + 2 * fib(2) * fib(3) == 103
    assert rec.values() == [103] * 5


def test_unit_specials_k0_is_fn_fn1():
    for n in range(30):
        assert set(sums.unit_sum_specials(FIBONACCI, 0, n).values()) == {fib(n) * fib(n + 1)}


def test_unit_specials_non_fib_has_no_fib_fields():
    rec = sums.unit_sum_specials(LUCAS, -3, 7)
    assert rec.fib_general is None and rec.fib_parity is None
    assert rec.values() == [sums.sum_sq_brute(LUCAS, -3, 1, 7)] * 3


@given(specs, shifts, st.integers(1, 30))
def test_parity_split(spec, k, n):
    odd = sums.unit_sum_specials(spec, k, 2 * n - 1)
    even = sums.unit_sum_specials(spec, k, 2 * n)
    term = g_at(spec, 2 * n + k) ** 2
    for a, b in zip(odd.values(), even.values()):
        assert a + term == b


# -- generating functions ---------------------------------------------------

def test_fib_square_gf():
    report = sums.gf_fib_square_check(64)
    assert report.passed and report.checked == 65


@pytest.mark.parametrize("spec, k, order", [(FIBONACCI, 1, 32), (LUCAS, 0, 16), (FIBONACCI, 3, 24)])
def test_spread_gf(spec, k, order):
    report = sums.gf_spread_product_check(spec, k, order)
    assert report.passed and report.checked == order + 1


def test_spread_gf_detects_wrong_sign():
    num, den, corr = sums.spread_gf_parts(LUCAS, 2)
    from fiblike.series import series_expand

    wrong = series_expand(-num, den, 10)
    right = series_expand(num, den, 10)
    assert wrong != right
