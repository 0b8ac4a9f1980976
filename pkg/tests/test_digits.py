import random

import pytest
from hypothesis import given, strategies as st

from steinberg.digits import (
    PrimePower,
    build_profile,
    dim_Lk,
    expand_base,
    is_prime,
    parity_class,
)


def test_prime_power_construction():
    pp = PrimePower.from_q(9)
    assert (pp.p, pp.e, pp.q) == (3, 2, 9)
    assert PrimePower(2, 3).q == 8
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(ValueError):
            PrimePower.from_q(bad)
    with pytest.raises(ValueError):
        PrimePower(4, 1)


@pytest.mark.parametrize(
    "k, b, digits",
    [(6, 2, [0, 1, 1]), (0, 5, [0]), (4, 5, [4]), (10**20, 10, [0] * 20 + [1])],
)
def test_expand_base(k, b, digits):
    assert expand_base(k, b) == digits


def test_expand_base_rejects_small_base():
    with pytest.raises(ValueError):
        expand_base(3, 1)


def test_profile_single_digit():
    P = build_profile(4, PrimePower(5))
    assert P.m == ((0,), (0,), (0,), (0,), (1,))


def test_profile_q4_hand_expansion():
    # 6 = 2 + 1*4; base-4 digits 2 = (0,1)_2 and 1 = (1,0)_2
    P = build_profile(6, PrimePower(2, 2))
    assert P.base_q_digits == (2, 1)
    assert P.m[1][0] == 1 and P.m[1][1] == 1
    assert P.m[0][0] == 1 and P.m[0][1] == 1


def test_profile_q_equals_p_counts_digits():
    k = 3 + 0 * 7 + 5 * 49 + 3 * 343 + 6 * 7**5
    P = build_profile(k, PrimePower(7))
    digits = expand_base(k, 7)
    for i in range(7):
        assert P.mi(i) == digits.count(i)


def test_zero_convention(pp):
    P = build_profile(0, pp)
    assert P.base_p_digits == (0,) and P.base_q_digits == (0,)
    assert all(P.m[0][j] == 1 for j in range(pp.e))
    assert dim_Lk(P) == 1 and P.M == 0


@pytest.mark.parametrize("k, q, dim", [(4, 5, 5), (0, 7, 1), (5, 2, 4), (2, 3, 3), (63, 4, 64)])
def test_dim_Lk_examples(k, q, dim):
    assert dim_Lk(build_profile(k, PrimePower.from_q(q))) == dim


def test_dim_Lk_q_equals_p_formula():
    P = build_profile(4 + 2 * 5 + 1 * 25 + 2 * 125, PrimePower(5))
    assert dim_Lk(P) == 2 ** P.mi(1) * 3 ** P.mi(2) * 4 ** P.mi(3) * 5 ** P.mi(4)


@pytest.mark.parametrize("k, q, expected", [(4, 5, (0, 0)), (7, 3, (1, 1)), (8, 3, (0, 0))])
def test_parity_class_examples(k, q, expected):
    assert parity_class(build_profile(k, PrimePower.from_q(q))) == expected


def test_parity_class_rejects_p2():
    with pytest.raises(ValueError):
        parity_class(build_profile(3, PrimePower(2)))


def check_profile(k, pp):
    P = build_profile(k, pp)
    p, e, q = pp.p, pp.e, pp.q
    assert sum(d * p**i for i, d in enumerate(P.base_p_digits)) == k
    assert sum(d * q**i for i, d in enumerate(P.base_q_digits)) == k
    padded = list(P.base_p_digits) + [0] * (e * len(P.base_q_digits))
    for i, l in enumerate(P.base_q_digits):
        assert l == sum(padded[i * e + j] * p**j for j in range(e))
    for j in range(e):
        assert sum(P.m[i][j] for i in range(p)) == len(P.base_q_digits)
    assert (P.M >= 1) == (k >= 1)
    assert (dim_Lk(P) == 1) == (k == 0)
    if p != 2:
        a, b = parity_class(P)
        assert a == b


def test_profile_invariants_exhaustive_small(pp):
    for k in range(0, 2000):
        check_profile(k, pp)


@pytest.mark.slow
def test_profile_invariants_exhaustive_1e5():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 25):
        pp = PrimePower.from_q(q)
        for k in range(10**5 + 1):
            check_profile(k, pp)


@given(k=st.integers(min_value=0, max_value=10**300), q=st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 25]))
def test_profile_invariants_big_k(k, q):
    check_profile(k, PrimePower.from_q(q))


def test_is_prime_trial_division():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
