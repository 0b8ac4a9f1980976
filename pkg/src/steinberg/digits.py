"""Digit expansions of k and the digit statistics m_{i,j}."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int = 1
    q: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"exponent must be >= 1, got {self.e}")
        object.__setattr__(self, "q", self.p**self.e)

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        """Factor q by trial division; raise ValueError unless q is a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = next(d for d in range(2, q + 1) if q % d == 0)
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if r != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, e)

    @property
    def group_order(self) -> int:
        return self.q * (self.q * self.q - 1)

    def __str__(self):
        return str(self.q)


def expand_base(k: int, b: int) -> list[int]:
    """Little-endian digits of k in base b; k = 0 gives [0]."""
    if b < 2:
        raise ValueError("base must be >= 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return [0]
    digits = []
    while k:
        k, r = divmod(k, b)
        digits.append(r)
    return digits


@dataclass(frozen=True)
class DigitProfile:
    k: int
    pp: PrimePower
    base_p_digits: tuple[int, ...]
    base_q_digits: tuple[int, ...]
    # m[i][j] = number of base-q digits whose j-th base-p digit equals i
    m: tuple[tuple[int, ...], ...]

    @cached_property
    def M(self) -> int:
        return sum(sum(row) for row in self.m[1:])

    def mi(self, i: int) -> int:
        """m_{i,0}; the only column when q = p."""
        return self.m[i][0]


def build_profile(k: int, pp: PrimePower) -> DigitProfile:
    p, e, q = pp.p, pp.e, pp.q
    qd = expand_base(k, q)
    pd = expand_base(k, p)
    m = [[0] * e for _ in range(p)]
    # every base-q digit position (including the 0-th) is counted
    for l in qd:
        sub = expand_base(l, p) + [0] * e
        for j in range(e):
            m[sub[j]][j] += 1
    return DigitProfile(
        k=k,
        pp=pp,
        base_p_digits=tuple(pd),
        base_q_digits=tuple(qd),
        m=tuple(tuple(row) for row in m),
    )


def dim_Lk(profile: DigitProfile) -> int:
    """Dimension of L_k: the product of (i+1)^{m_{i,j}}."""
    return prod((i + 1) ** c for i, row in enumerate(profile.m) for c in row if i)


def parity_class(profile: DigitProfile) -> tuple[int, int]:
    """Return (k mod 2, sum of m_{i,j} over odd i, mod 2); equal for odd p."""
    if profile.pp.p == 2:
        raise ValueError("parity identity needs an odd prime")
    odd = sum(sum(row) for i, row in enumerate(profile.m) if i % 2)
    return profile.k % 2, odd % 2
