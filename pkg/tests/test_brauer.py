import math
from fractions import Fraction

import pytest

from steinberg.brauer import (
    CENTRAL,
    NONSPLIT,
    SPLIT,
    COUNTERS,
    CharacterValue,
    brauer_inner_product,
    character,
    dkq_general,
    dkq_via_mu_products,
    lk_character,
    psi_delta,
    psi_Lk,
    psi_st,
    psi_st_value,
    regular_classes,
    st_character,
)
from steinberg.cyclotomic import ring
from steinberg.digits import PrimePower, build_profile, dim_Lk

Q_SMALL = [2, 3, 4, 5, 7, 8, 9, 11]


def classes(q):
    return regular_classes(PrimePower.from_q(q))


def find(q, kind, n_exp):
    return next(c for c in classes(q) if c.kind == kind and c.zeta_exponent == n_exp)


def test_regular_class_counts(pp):
    cs = regular_classes(pp)
    q = pp.q
    kinds = [c.kind for c in cs]
    assert len(cs) == q
    if pp.p == 2:
        assert kinds.count(CENTRAL) == 1
        assert kinds.count(SPLIT) == (q - 2) // 2
        assert kinds.count(NONSPLIT) == q // 2
    else:
        assert kinds.count(CENTRAL) == 2
        assert kinds.count(SPLIT) == (q - 3) // 2
        assert kinds.count(NONSPLIT) == (q - 1) // 2
    # p-regular elements: everything except the 2 (or 1) unipotent families
    unipotent = (q * q - 1) * (2 if pp.p != 2 else 1)
    assert sum(c.size for c in cs) == pp.group_order - unipotent


def test_regular_classes_q2_q5():
    assert [(c.kind, c.n, c.zeta_exponent) for c in classes(2)] == [(CENTRAL, 2, 0), (NONSPLIT, 3, 1)]
    labels = [c.label() for c in classes(5)]
    assert labels == ["1", "-1", "zeta_4^1", "zeta_6^1", "zeta_6^2"]


def test_class_sizes_and_weights():
    for c in classes(5):
        if c.kind == SPLIT:
            assert c.size == 30 and c.weight == 15
        elif c.kind == NONSPLIT:
            assert c.size == 20 and c.weight == 10


Q5_TABLE = {
    # zeta -> psi_{Delta_1..4}
    "1": [2, 3, 4, 5],
    "-1": [-2, 3, -4, 5],
    "zeta_4^1": [0, -1, 0, 1],
    "zeta_6^1": [1, 0, -1, -1],
    "zeta_6^2": [-1, 0, 1, -1],
}


def test_psi_delta_q5_table():
    for c in classes(5):
        assert [psi_delta(i, c) for i in range(1, 5)] == Q5_TABLE[c.label()]


def test_psi_delta_sqrt3():
    c = find(11, NONSPLIT, 1)
    R = ring(12)
    assert psi_delta(1, c) == R.root_of_unity(1) + R.root_of_unity(-1)


def test_psi_delta_matches_imaginary_ratio():
    for q in Q_SMALL:
        for c in classes(q):
            if c.kind == CENTRAL:
                continue
            theta = 2 * math.pi * c.zeta_exponent / c.n
            for i in range(0, 3 * q):
                expected = math.sin((i + 1) * theta) / math.sin(theta)
                assert abs(psi_delta(i, c).numeric_embed() - expected) < 1e-9


def test_psi_st_values():
    pp5 = PrimePower(5)
    cs = classes(5)
    assert psi_st_value(cs[0], pp5) == 5
    assert psi_st(find(5, SPLIT, 1)) == 1
    assert psi_st(find(2, NONSPLIT, 1)) == -1
    with pytest.raises(TypeError):
        psi_st(cs[0])


def test_psi_st_equals_psi_L_q_minus_1():
    for q in Q_SMALL:
        pp = PrimePower.from_q(q)
        P = build_profile(q - 1, pp)
        for c in regular_classes(pp):
            assert psi_Lk(P, c) == psi_st_value(c, pp)


def test_psi_Lk_examples():
    P = build_profile(4, PrimePower(5))
    assert psi_Lk(P, find(5, SPLIT, 1)) == 1
    P = build_profile(5, PrimePower(2))
    assert psi_Lk(P, find(2, NONSPLIT, 1)) == 1


def test_psi_Lk_identity_is_dimension():
    for q in Q_SMALL:
        pp = PrimePower.from_q(q)
        for k in range(0, 400, 7):
            P = build_profile(k, pp)
            assert psi_Lk(P, regular_classes(pp)[0]) == dim_Lk(P)


def test_inner_product_examples():
    for q in (2, 3, 5):
        pp = PrimePower.from_q(q)
        st_ = st_character(pp)
        assert brauer_inner_product(st_, st_, pp) == 1
    pp3 = PrimePower(3)
    trivial = lk_character(build_profile(0, pp3))
    assert brauer_inner_product(st_character(pp3), trivial, pp3) == 0
    for q in Q_SMALL:
        pp = PrimePower.from_q(q)
        lq = lk_character(build_profile(q - 1, pp))
        assert brauer_inner_product(st_character(pp), lq, pp) == 1


def test_inner_product_coverage_mismatch():
    pp = PrimePower(5)
    st_ = st_character(pp)
    with pytest.raises(ValueError):
        brauer_inner_product(st_[:-1], st_, pp)


@pytest.mark.parametrize(
    "k, q, d",
    [(4, 5, 1), (0, 3, 0), (7, 3, 0), (1, 2, 1), (0, 2, 0), (2, 3, 1), (24, 5, 2)],
)
def test_dkq_general_examples(k, q, d):
    res = dkq_general(k, PrimePower.from_q(q))
    assert res.d == d
    assert res.numerator == (q + 1) * res.S_minus - (q - 1) * res.S_plus


def test_dkq_general_diagnostics_k0():
    res = dkq_general(0, PrimePower(5))
    # trivial module: psi = 1 on every root
    assert (res.S_minus, res.S_plus, res.d) == (4, 6, 0)


def test_counters_track_checks():
    before = COUNTERS.snapshot()
    dkq_general(10, PrimePower(7))
    after = COUNTERS.snapshot()
    assert after["calls"] == before["calls"] + 1
    assert after["orbit_sums_checked"] == before["orbit_sums_checked"] + 2
    assert after["divisions_checked"] == before["divisions_checked"] + 1
    assert after["failures"] == before["failures"]


def test_orbit_formula_equals_inner_product():
    for q in Q_SMALL:
        pp = PrimePower.from_q(q)
        st_ = st_character(pp)
        step = 1 if q <= 5 else 3
        for k in range(0, 2001, step):
            P = build_profile(k, pp)
            d = dkq_general(k, pp).d
            assert brauer_inner_product(st_, lk_character(P), pp) == d, (k, q)


def test_nonnegative_and_odd_vanishing():
    for q in Q_SMALL:
        pp = PrimePower.from_q(q)
        for k in range(0, 1500):
            d = dkq_general(k, pp).d
            assert d >= 0
            if pp.p != 2 and k % 2:
                assert d == 0


def _orbit_sum_frobenius(profile, n, shift):
    # S over mu_n after re-indexing zeta -> zeta^{p^shift}
    from steinberg.brauer import _psi_Lk_at

    N = math.lcm(2, n)
    s = N // n
    p = profile.pp.p
    total = ring(N).zero
    for a in range(n):
        total = total + _psi_Lk_at(profile, N, (a * p**shift * s) % N)
    return total.as_rational_integer()


def test_frobenius_reindexing_invariance():
    for q in (4, 8, 9, 25):
        pp = PrimePower.from_q(q)
        for k in range(0, 300, 7):
            P = build_profile(k, pp)
            res = dkq_general(k, pp)
            for shift in range(pp.e):
                assert _orbit_sum_frobenius(P, q - 1, shift) == res.S_minus
                assert _orbit_sum_frobenius(P, q + 1, shift) == res.S_plus


def test_mu_product_expression_matches():
    for q in (2, 3, 5):
        pp = PrimePower.from_q(q)
        for k in range(0, 201):
            assert dkq_via_mu_products(k, pp) == dkq_general(k, pp).d


def test_character_helper_accepts_ints():
    pp = PrimePower(3)
    chi = character(lambda c: 1, pp)
    assert all(isinstance(v, CharacterValue) and v.value == 1 for v in chi)
    assert brauer_inner_product(chi, chi, pp) == Fraction(8, 24)


def test_big_k_exact():
    pp = PrimePower(5)
    k = 5**200 - 1
    res = dkq_general(k, pp)
    assert res.dim_Lk == 5**200
    assert res.d == (res.dim_Lk + 7) // 12
