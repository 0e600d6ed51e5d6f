import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from fiblike import binomial as bk
from fiblike.sequence import FIBONACCI, LUCAS, SequenceSpec, fib, g_at
from fiblike.sums import sum_sq_brute, weighted_sum

SPECS = [SequenceSpec(0, 1), SequenceSpec(2, 1), SequenceSpec(1, 1), SequenceSpec(3, -5)]


def pascal(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_binomial_values():
    assert bk.binomial(5, 2) == 10
    assert all(bk.binomial(n, 0) == 1 for n in range(10))
    assert bk.binomial(30, 15) == pascal(30)[15] == 155117520
    assert bk.binomial(4, -1) == bk.binomial(4, 5) == 0


def test_descriptor_validation():
    with pytest.raises(ValueError):
        bk.RecurrenceDescriptor((1, 0), (1, 2))
    with pytest.raises(ValueError):
        bk.RecurrenceDescriptor((1, 1), (1, 1))
    with pytest.raises(ValueError):
        bk.RecurrenceDescriptor((1, 1), (1, 2), h=0)


# -- partial sums -----------------------------------------------------------

def test_lemma1_fibonacci_example():
    assert bk.lemma1_partial_sum(bk.fibonacci_recurrence(), fib, 1, 5) == 12 == fib(7) - 1


def test_lemma1_squares_example():
    value = bk.lemma1_partial_sum(bk.square_recurrence(), bk.squares_oracle(FIBONACCI), 2, 6)
    assert value == sum(2**j * fib(j) ** 2 for j in range(7))


def test_lemma1_n0():
    for spec in SPECS:
        oracle = bk.squares_oracle(spec)
        assert bk.lemma1_partial_sum(bk.square_recurrence(), oracle, Q(3, 7), 0) == oracle(0)


def test_lemma1_singular():
    with pytest.raises(bk.SingularDenominator):
        bk.lemma1_partial_sum(bk.square_recurrence(), bk.squares_oracle(LUCAS), -1, 4)


WEIGHTS = [Q(0), Q(1), Q(2), Q(-2), Q(1, 2), Q(-1, 3), Q(3, 7), Q(-7, 2)]


@pytest.mark.parametrize("x", WEIGHTS)
def test_lemma1_reproduces_square_sums(x):
    desc = bk.square_recurrence()
    for spec in SPECS:
        oracle = bk.squares_oracle(spec)
        for n in list(range(21)) + [100]:
            assert bk.lemma1_partial_sum(desc, oracle, x, n) == sum_sq_brute(spec, 0, x, n)
            if 1 - x - x * x != 0:
                assert bk.lemma1_partial_sum(bk.fibonacci_recurrence(), fib, x, n) == weighted_sum(
                    (fib(j) for j in range(n + 1)), x
                )


def test_lemma1_negative_gaps():
    # X_j = X_{j+1} - X_{j-1} is the Fibonacci rule with one forward gap.
    desc = bk.RecurrenceDescriptor((1, -1), (-1, 1))
    for x in (Q(1, 2), Q(3), Q(-2, 5)):
        for n in range(8):
            assert bk.lemma1_partial_sum(desc, fib, x, n) == weighted_sum((fib(j) for j in range(n + 1)), x)


def test_lemma1_with_h():
    desc = bk.RecurrenceDescriptor((3, 3), (1, 2), h=3)
    assert bk.lemma1_partial_sum(desc, fib, 1, 5) == 12


# -- double binomial sums ---------------------------------------------------

def test_main_descriptor_satisfied():
    for s, k, m in [(1, -1, 2), (2, 3, -1), (-4, 1, 3)]:
        desc = bk.main_descriptor(s, k, m)
        for spec in SPECS:
            bk.check_oracle(desc, bk.squares_oracle(spec), -30, 30)


def test_oracle_mismatch():
    desc = bk.main_descriptor(1, -1, 2)
    with pytest.raises(bk.OracleMismatch):
        bk.lemma5_residual(desc, lambda j: j * j * j, 1, 0, 2)


@pytest.mark.parametrize("variant", range(1, 7))
def test_lemma5_n0(variant):
    desc = bk.main_descriptor(2, 3, -1)
    oracle = bk.squares_oracle(SequenceSpec(3, -5))
    lhs, rhs = bk.lemma5_sides(desc, oracle, variant, 4, 0)
    assert lhs == rhs == oracle(4)


def test_lemma5_examples():
    desc = bk.main_descriptor(1, -1, 2)
    oracle = bk.squares_oracle(LUCAS)
    assert bk.lemma5_residual(desc, oracle, 1, 3, 4) == 0
    assert bk.lemma5_residual(desc, oracle, 4, -2, 3) == 0


def test_lemma5_bad_variant():
    with pytest.raises(ValueError):
        bk.lemma5_residual(bk.main_descriptor(1, -1, 2), bk.squares_oracle(LUCAS), 7, 0, 1)


def test_lemma5_generic_four_term():
    # Not from the main identity: Tribonacci-like X_r = X_{r-1} + 2X_{r-2} + 3X_{r-3}, h = 1
    desc = bk.RecurrenceDescriptor((1, 2, 3), (1, 2, 3))
    values = {0: 1, 1: -2, 2: 5}
    for r in range(3, 60):
        values[r] = values[r - 1] + 2 * values[r - 2] + 3 * values[r - 3]
    oracle = values.__getitem__
    for variant in range(1, 7):
        for n in range(0, 5):
            lhs, rhs = bk.lemma5_sides(desc, oracle, variant, 30, n)
            assert lhs == rhs


nonzero = st.integers(-4, 4).filter(bool)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPECS), st.tuples(nonzero, nonzero, nonzero).filter(lambda t: len(set(t)) == 3),
       st.integers(-5, 5), st.integers(0, 4), st.integers(1, 6))
def test_lemma5_on_main_descriptor(spec, skm, r, n, variant):
    desc = bk.main_descriptor(*skm)
    assert bk.lemma5_residual(desc, bk.squares_oracle(spec), variant, r, n) == 0


@pytest.mark.parametrize("which", [1, 2, 3])
def test_theorem7_n0(which):
    for spec in SPECS:
        lhs, rhs = bk.theorem7_sides(spec, which, 0, 2, -3, 4, 1)
        assert lhs == rhs == g_at(spec, 1) ** 2


def test_theorem7_examples():
    assert bk.theorem7_residual(FIBONACCI, 1, 2, 2, 1, 3, 0) == 0
    assert bk.theorem7_residual(LUCAS, 3, 3, -1, 2, 4, 5) == 0


def test_theorem7_first_by_hand():
    # spec F, n = 1, (s, k, m) = (2, 1, 3), r = 1: three terms against the right side
    F = fib
    s, k, m, r, n = 2, 1, 3, 1, 1
    lhs = 0
    for j in range(2):
        for i in range(j + 1):
            lhs += ((-1) ** (i + (s + k + 1) * j) * bk.binomial(n, j) * bk.binomial(j, i)
                    * F(s) ** (n - j + i) * F(k) ** (n + j) * F(m) ** (2 * n - i)
                    * F(m - s) ** (n - j) * F(m - k) ** (n + j - i) * F(s - k) ** i
                    * F(r + k * n + (s - k) * j + (m - s) * i) ** 2)
    rhs = (F(m) * F(k) * F(m - k) ** 2 * F(m - s) * F(s - k)) ** n * F(r) ** 2
    assert lhs == rhs == 2
    assert bk.theorem7_sides(FIBONACCI, 1, n, s, k, m, r) == (lhs, rhs)


def test_theorem7_consistent_with_lemma5():
    for s, k, m in itertools.permutations([-2, 1, 3], 3):
        desc = bk.main_descriptor(s, k, m)
        for spec in SPECS[:2]:
            oracle = bk.squares_oracle(spec)
            for which in (1, 2, 3):
                variant = bk.THEOREM7_TO_LEMMA5[which]
                for n in range(4):
                    for r in (-3, 0, 2):
                        t7 = bk.theorem7_residual(spec, which, n, s, k, m, r)
                        l5 = bk.lemma5_residual(desc, oracle, variant, r, n, check=False)
                        assert t7 == l5 == 0
                        lhs7, _ = bk.theorem7_sides(spec, which, n, s, k, m, r)
                        lhs5, _ = bk.lemma5_sides(desc, oracle, variant, r, n)
                        assert lhs7 == bk.theorem7_sign(which, s, k, n) * lhs5


def test_theorem7_degenerate_tuples_still_hold():
    for s, k, m in [(0, 1, 2), (1, 1, 3), (2, 2, 2), (0, 0, 0), (-1, 3, 3)]:
        assert not bk.theorem7_nondegenerate(s, k, m)
        for which in (1, 2, 3):
            for n in range(4):
                assert bk.theorem7_residual(LUCAS, which, n, s, k, m, 2) == 0


def test_printed_third_identity_differs():
    # As typeset, the third identity fails at e.g. (s, k, m) = (-3, -2, 1), n = 1.
    assert bk.theorem7_printed_third(FIBONACCI, 1, -3, -2, 1, 0) != 0
    assert bk.theorem7_residual(FIBONACCI, 3, 1, -3, -2, 1, 0) == 0
