"""Brauer characters of Delta_i, st and L_k on the p-regular classes of
SL2(F_q), and d_{k,q} from the torus orbit sums."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .cyclotomic import CycInt, CycRing, ring
from .digits import DigitProfile, PrimePower, build_profile, dim_Lk
from .errors import InconsistencyError

CENTRAL = "central"
SPLIT = "split-torus"
NONSPLIT = "nonsplit-torus"


@dataclass(frozen=True)
class RegularClass:
    """Class of A_zeta with zeta = zeta_n^a.

    ``n`` is q - 1 for split classes, q + 1 for nonsplit ones and 2 for the
    central classes (a = 0 is the identity, a = 1 is -I). ``size`` is the
    number of elements in the class; ``weight`` is the coefficient each of
    zeta, zeta^{-1} receives when summing over roots instead of classes.
    """

    kind: str
    n: int
    zeta_exponent: int
    size: int

    @property
    def order(self) -> int:
        return self.n // gcd(self.n, self.zeta_exponent)

    @property
    def conductor(self) -> int:
        return lcm(2, self.order)

    @property
    def weight(self) -> int:
        return self.size if self.kind == CENTRAL else self.size // 2

    @property
    def is_identity(self) -> bool:
        return self.kind == CENTRAL and self.zeta_exponent == 0

    def label(self) -> str:
        if self.kind == CENTRAL:
            return "1" if self.zeta_exponent == 0 else "-1"
        return f"zeta_{self.n}^{self.zeta_exponent}"


@dataclass(frozen=True)
class CharacterValue:
    cls: RegularClass
    value: CycInt


@dataclass(frozen=True)
class DimResult:
    k: int
    q: int
    d: int
    method: str
    dim_Lk: int
    S_minus: int | None = None
    S_plus: int | None = None
    numerator: int | None = None


class IntegralityCounters:
    """Tally of exact checks made by :func:`dkq_general`."""

    def __init__(self):
        self._lock = threading.Lock()
        self.reset()

    def reset(self):
        self.calls = 0
        self.orbit_sums_checked = 0
        self.divisions_checked = 0
        self.failures = 0

    def record(self, sums: int, divisions: int, failed: bool):
        with self._lock:
            self.calls += 1
            self.orbit_sums_checked += sums
            self.divisions_checked += divisions
            self.failures += failed

    def snapshot(self) -> dict[str, int]:
        return {
            "calls": self.calls,
            "orbit_sums_checked": self.orbit_sums_checked,
            "divisions_checked": self.divisions_checked,
            "failures": self.failures,
        }


COUNTERS = IntegralityCounters()


def regular_classes(pp: PrimePower) -> list[RegularClass]:
    q = pp.q
    split_size, nonsplit_size = q * (q + 1), q * (q - 1)
    out = [RegularClass(CENTRAL, 2, 0, 1)]
    if pp.p != 2:
        out.append(RegularClass(CENTRAL, 2, 1, 1))
    # zeta and zeta^{-1} give the same class; skip +-1 inside each torus
    for a in range(1, (q - 1 + 1) // 2):
        if 2 * a != q - 1:
            out.append(RegularClass(SPLIT, q - 1, a, split_size))
    for a in range(1, (q + 1) // 2 + 1):
        if 2 * a != q + 1:
            out.append(RegularClass(NONSPLIT, q + 1, a, nonsplit_size))
    return out


@lru_cache(maxsize=None)
def _delta_at(N: int, b: int, i: int) -> CycInt:
    """psi_{Delta_i} at zeta = zeta_N^b: the eigenvalue sum over zeta^{2j-i}."""
    return ring(N).from_exponents((b * (2 * j - i), 1) for j in range(i + 1))


def _class_root(cls: RegularClass) -> tuple[CycRing, int]:
    N = cls.conductor
    return ring(N), cls.zeta_exponent * N // cls.n


def psi_delta(i: int, cls: RegularClass) -> CycInt:
    R, b = _class_root(cls)
    return _delta_at(R.N, b, i)


def psi_st(cls: RegularClass) -> int:
    if cls.kind == CENTRAL:
        # q = size of the split class / (q + 1) is awkward; recover q from n
        raise TypeError("use psi_st_value(cls, pp) for central classes")
    return 1 if cls.kind == SPLIT else -1


def psi_st_value(cls: RegularClass, pp: PrimePower) -> int:
    if cls.kind == CENTRAL:
        return pp.q
    return psi_st(cls)


def _psi_Lk_at(profile: DigitProfile, N: int, b: int) -> CycInt:
    # Frobenius twist j evaluates Delta_i at zeta^{p^j}
    p = profile.pp.p
    R = ring(N)
    val = R.one
    for i in range(1, p):
        row = profile.m[i]
        for j, c in enumerate(row):
            if c:
                val = val * _delta_at(N, (b * p**j) % N, i) ** c
    return val


def psi_Lk(profile: DigitProfile, cls: RegularClass) -> CycInt:
    R, b = _class_root(cls)
    return _psi_Lk_at(profile, R.N, b)


def _orbit_sum(profile: DigitProfile, n: int) -> int:
    N = lcm(2, n)
    s = N // n
    R = ring(N)
    total = R.zero
    for a in range(n):
        total = total + _psi_Lk_at(profile, N, a * s)
    try:
        return total.as_rational_integer()
    except ValueError:
        COUNTERS.record(1, 0, True)
        raise InconsistencyError(
            f"orbit sum over mu_{n} is not rational for k={profile.k}: {total!r}"
        ) from None


def dkq_general(k: int, pp: PrimePower) -> DimResult:
    """d_{k,q} = (1/2) (S_-/(q-1) - S_+/(q+1)), with S_{-/+} the sums of
    psi_{L_k}(A_zeta) over every zeta in mu_{q-1} / mu_{q+1}."""
    q = pp.q
    profile = build_profile(k, pp)
    s_minus = _orbit_sum(profile, q - 1)
    s_plus = _orbit_sum(profile, q + 1)
    numerator = (q + 1) * s_minus - (q - 1) * s_plus
    d, r = divmod(numerator, 2 * (q * q - 1))
    if r:
        COUNTERS.record(2, 1, True)
        raise InconsistencyError(
            f"2(q^2-1) does not divide {numerator} for k={k}, q={q}"
        )
    COUNTERS.record(2, 1, False)
    return DimResult(
        k=k,
        q=q,
        d=d,
        method="general",
        dim_Lk=dim_Lk(profile),
        S_minus=s_minus,
        S_plus=s_plus,
        numerator=numerator,
    )


def character(values, pp: PrimePower) -> list[CharacterValue]:
    """Tabulate a class function given as ``values(cls) -> CycInt | int``."""
    out = []
    for cls in regular_classes(pp):
        v = values(cls)
        if isinstance(v, int):
            v = ring(cls.conductor).from_int(v)
        out.append(CharacterValue(cls, v))
    return out


def st_character(pp: PrimePower) -> list[CharacterValue]:
    return character(lambda c: psi_st_value(c, pp), pp)


def lk_character(profile: DigitProfile) -> list[CharacterValue]:
    return character(lambda c: psi_Lk(profile, c), profile.pp)


def brauer_inner_product(
    phi: Sequence[CharacterValue], psi: Sequence[CharacterValue], pp: PrimePower
) -> Fraction:
    """(1/#G) * sum over classes of |class| * phi(g) * conj(psi(g))."""
    classes = regular_classes(pp)
    lookup_phi = {v.cls: v.value for v in phi}
    lookup_psi = {v.cls: v.value for v in psi}
    expected = set(classes)
    if set(lookup_phi) != expected or set(lookup_psi) != expected:
        raise ValueError("characters must cover every p-regular class exactly")
    R = ring(lcm(*(c.conductor for c in classes)))
    total = R.zero
    for cls in classes:
        a = lookup_phi[cls].lift(R)
        b = lookup_psi[cls].lift(R).conjugate()
        total = total + (a * b) * cls.size
    return Fraction(total.as_rational_integer(), pp.group_order)


def _mu_inner_product(profile: DigitProfile, n: int, pp: PrimePower) -> Fraction:
    # <psi_st, psi_V> over the cyclic group mu_n, every element its own class
    N = lcm(2, n)
    s = N // n
    R = ring(N)
    total = R.zero
    for a in range(n):
        central = (a * s) % N in (0, N // 2)
        st = pp.q if central else (1 if n == pp.q - 1 else -1)
        total = total + _psi_Lk_at(profile, N, a * s).conjugate() * st
    return Fraction(total.as_rational_integer(), n)


def dkq_via_mu_products(k: int, pp: PrimePower) -> Fraction:
    """Alternative expression through inner products over mu_{q-1}, mu_{q+1},
    minus the central character values."""
    profile = build_profile(k, pp)
    q = pp.q
    central = dim_Lk(profile)
    if pp.p != 2:
        central += (-1) ** k * dim_Lk(profile)
    return (
        Fraction(1, 2)
        * (_mu_inner_product(profile, q - 1, pp) + _mu_inner_product(profile, q + 1, pp))
        - central
    )
