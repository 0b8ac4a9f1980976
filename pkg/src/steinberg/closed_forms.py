"""Closed formulas for d_{k,q} when q is 2, 3, 4, 5, 7 or 11, and the
residue-class statements about dim L_k for q = 2, 3, 5."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digits import DigitProfile, PrimePower, build_profile, dim_Lk
from .errors import InconsistencyError, UnsupportedModulus

SUPPORTED = (2, 3, 4, 5, 7, 11)


def lucas_number(n: int) -> int:
    """F_0 = 2, F_1 = 1, F_n = F_{n-1} + F_{n-2}."""
    if n < 0:
        raise ValueError("Lucas numbers are defined here for n >= 0 only")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas_signed(n: int) -> int:
    """Lucas numbers extended by F_{-n} = (-1)^n F_n."""
    if n >= 0:
        return lucas_number(n)
    return (-1) ** n * lucas_number(-n)


def zpow(n: int) -> int:
    """0^n with 0^0 = 1."""
    return 1 if n == 0 else 0


def sgn(n: int) -> int:
    """(-1)^n."""
    return -1 if n % 2 else 1


def _exact(num: int, den: int, what: str) -> int:
    d, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"{what}: {num} is not divisible by {den}")
    if d < 0:
        raise InconsistencyError(f"{what}: negative value {d}")
    return d


def _q2(P: DigitProfile, dim: int) -> int:
    return (dim + 1) // 3


def _q3(P: DigitProfile, dim: int) -> int:
    return 0 if P.k % 2 else (dim + 1) // 4


def _q5(P: DigitProfile, dim: int) -> int:
    return 0 if P.k % 2 else (dim + 7) // 12


def _q7(P: DigitProfile, dim: int) -> int:
    m = [P.mi(i) for i in range(7)]
    odd15 = m[1] + m[5]
    # 2^{(m1+m5)/2} (1 + (-1)^{m1+m5}) is 0 or 2^{.../2 + 1}
    pow_term = 0 if odd15 % 2 else 2 ** (odd15 // 2 + 1)
    num = (
        (1 + sgn(m[1] + m[3] + m[5])) * dim
        + 8 * zpow(m[2] + m[5]) * sgn(m[1] + m[4]) * (1 + sgn(m[1] + m[3]))
        - 6
        * zpow(m[3])
        * (sgn(m[2] + m[6]) * zpow(m[1] + m[5]) + pow_term * sgn(m[1] + m[4] + m[6]))
    )
    return _exact(num, 48, "q=7 formula")


def _q11(P: DigitProfile, dim: int) -> int:
    m = [P.mi(i) for i in range(11)]
    odd = m[1] + m[3] + m[5] + m[7] + m[9]
    n = m[1] + m[3] + m[7] + m[9]
    root3_term = 0 if n % 2 else 2 * 3 ** (n // 2)
    # the -10 factor collects every nontrivial mu_12 contribution; the +12
    # term (mu_10) stands outside it
    mu12 = (
        (sgn(m[1] + m[4] + m[7] + m[10]) + sgn(m[3] + m[4] + m[9] + m[10]))
        * zpow(m[2] + m[5] + m[8])
        + zpow(odd) * sgn(m[2] + m[6] + m[10])
        + zpow(m[5]) * sgn(m[1] + m[3] + m[6] + m[8] + m[10]) * 2 ** (m[2] + m[8]) * root3_term
    )
    mu10 = (
        zpow(m[4] + m[9])
        * sgn(m[8] + m[6])
        * (sgn(m[3] + m[1]) + sgn(m[5] + m[7]))
        * lucas_number(m[1] + m[2] + m[6] + m[7])
    )
    num = dim * (1 + sgn(odd)) - 10 * mu12 + 12 * mu10
    return _exact(num, 120, "q=11 formula")


def _q4(P: DigitProfile, dim: int) -> int:
    a, b = P.m[1][0], P.m[1][1]
    num = dim + 5 * sgn(a + b) - 3 * sgn(a) * lucas_signed(a - b)
    return _exact(num, 15, "q=4 formula")


def q4_as_printed(k: int) -> Fraction | None:
    """The q = 4 expression with sign (-1)^{m_{1,0}} and Lucas index
    m_{1,1} - m_{1,0}; None where that index is negative."""
    P = build_profile(k, PrimePower(2, 2))
    a, b = P.m[1][0], P.m[1][1]
    if b < a:
        return None
    return Fraction(dim_Lk(P) + 5 * sgn(a + b) - 3 * sgn(a) * lucas_number(b - a), 15)


_FORMULAS = {2: _q2, 3: _q3, 4: _q4, 5: _q5, 7: _q7, 11: _q11}


def dkq_closed(k: int, pp: PrimePower) -> int:
    try:
        f = _FORMULAS[pp.q]
    except KeyError:
        raise UnsupportedModulus(f"no closed formula for q={pp.q}") from None
    P = build_profile(k, pp)
    return f(P, dim_Lk(P))


def sign_form(k: int, pp: PrimePower) -> int:
    """The intermediate expressions in m_i before the floor simplification
    (q = 2, 3, 5)."""
    P = build_profile(k, pp)
    dim = dim_Lk(P)
    if pp.q == 2:
        return _exact(dim - sgn(P.mi(1)), 3, "q=2 sign form")
    if pp.q == 3:
        m1, m2 = P.mi(1), P.mi(2)
        return _exact((1 + sgn(m1)) * dim - 2 * zpow(m1) * sgn(m2), 8, "q=3 sign form")
    if pp.q == 5:
        m1, m2, m3, m4 = (P.mi(i) for i in range(1, 5))
        num = (dim - 4 * sgn(m4 + m3) * zpow(m2)) * (1 + sgn(m1 + m3)) + 6 * sgn(
            m2
        ) * zpow(m1 + m3)
        return _exact(num, 24, "q=5 sign form")
    raise UnsupportedModulus(f"no sign form for q={pp.q}")


def expanded_form_q5(k: int, as_printed: bool = False) -> Fraction:
    """The q = 5 expression before substituting dim L_k, with the explicit
    (+-2)^{m1} 3^{m2} (+-4)^{m3} 5^{m4} products.

    The nonsplit contribution carries 0^{m2} since psi_{Delta_2} vanishes
    there; ``as_printed=True`` drops that factor, as in the published display.
    """
    P = build_profile(k, PrimePower(5))
    m1, m2, m3, m4 = (P.mi(i) for i in range(1, 5))
    plus = 2**m1 * 3**m2 * 4**m3 * 5**m4
    minus = (-2) ** m1 * 3**m2 * (-4) ** m3 * 5**m4
    nonsplit = 2 * sgn(m4) * (sgn(m1) + sgn(m3))
    if not as_printed:
        nonsplit *= zpow(m2)
    return Fraction(plus + minus + 2 * sgn(m2) * zpow(m1 + m3), 8) - Fraction(
        plus + minus + nonsplit, 12
    )


RESIDUES = {2: (3, {1, 2}), 3: (4, {0, 1, 3}), 5: (12, {0, 1, 3, 4, 5, 8, 9})}


@dataclass(frozen=True)
class ResidueCheck:
    passed: bool
    residue: int
    modulus: int
    m: tuple[int, ...]


def residue_class_check(k: int, pp: PrimePower) -> ResidueCheck:
    """dim L_k mod 3 (q=2), 4 (q=3) or 12 (q=5) lies in the allowed set;
    for q = 3, 5 only even k are constrained."""
    if pp.q not in RESIDUES:
        raise UnsupportedModulus(f"no residue statement for q={pp.q}")
    mod, allowed = RESIDUES[pp.q]
    P = build_profile(k, pp)
    r = dim_Lk(P) % mod
    ok = r in allowed or (pp.q != 2 and k % 2 == 1)
    return ResidueCheck(ok, r, mod, tuple(row[0] for row in P.m))
