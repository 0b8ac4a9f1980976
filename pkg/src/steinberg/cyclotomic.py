"""Exact arithmetic in Z[zeta_N], stored modulo the N-th cyclotomic polynomial.

Elements are integer coefficient vectors of length phi(N) in the power basis
1, zeta, ..., zeta^{phi(N)-1}. The representation is canonical, so equality
is coefficient equality.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # den monic; little-endian coefficient lists
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Phi_N as a little-endian coefficient tuple, by exact division of x^N - 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CycRing:
    """The ring Z[zeta_N]. Use :func:`ring` to get the shared instance."""

    def __init__(self, N: int):
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.phi = len(self.modulus) - 1
        # x^a mod Phi_N for 0 <= a < max(N, 2*phi - 1)
        top = max(N, 2 * self.phi - 1)
        powers = []
        cur = [1] + [0] * (self.phi - 1) if self.phi else []
        for _ in range(top):
            powers.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for i in range(self.phi):
                    cur[i] -= lead * self.modulus[i]
        self._powers = powers
        self.zero = CycInt(self, (0,) * self.phi)
        self.one = self.from_int(1)

    def __repr__(self):
        return f"CycRing({self.N})"

    def __reduce__(self):
        return (ring, (self.N,))

    def from_int(self, c: int) -> "CycInt":
        return CycInt(self, (c,) + (0,) * (self.phi - 1))

    def reduce(self, raw) -> tuple[int, ...]:
        """Reduce a coefficient sequence of length < 2*phi - 1 (or <= N) mod Phi_N."""
        phi = self.phi
        out = list(raw[:phi]) + [0] * max(0, phi - len(raw))
        for d in range(phi, len(raw)):
            c = raw[d]
            if c:
                row = self._powers[d]
                for i in range(phi):
                    out[i] += c * row[i]
        return tuple(out)

    def from_exponents(self, counts) -> "CycInt":
        """Sum of c * zeta^a over (a, c) pairs, exponents taken mod N."""
        raw = [0] * self.N
        for a, c in counts:
            raw[a % self.N] += c
        return CycInt(self, self.reduce(raw))

    def root_of_unity(self, a: int) -> "CycInt":
        return CycInt(self, self._powers[a % self.N])


@lru_cache(maxsize=None)
def ring(N: int) -> CycRing:
    if N < 1:
        raise ValueError("conductor must be >= 1")
    return CycRing(N)


def root_of_unity(R: CycRing, a: int) -> "CycInt":
    return R.root_of_unity(a)


class CycInt:
    __slots__ = ("ring", "coeffs")

    def __init__(self, R: CycRing, coeffs: tuple[int, ...]):
        self.ring = R
        self.coeffs = coeffs

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, CycInt):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.ring, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = len(a)
        if n == 1:
            return CycInt(self.ring, (a[0] * b[0],))
        raw = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return CycInt(self.ring, self.ring.reduce(raw))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.N, self.coeffs))

    def __repr__(self):
        return f"CycInt({list(self.coeffs)}@{self.ring.N})"

    def serialize(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + f"]@{self.ring.N}"

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def conjugate(self) -> "CycInt":
        """Complex conjugate: zeta -> zeta^{N-1}."""
        R = self.ring
        return R.from_exponents((-i, c) for i, c in enumerate(self.coeffs) if c)

    def as_rational_integer(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def lift(self, target: CycRing) -> "CycInt":
        """Embed into Z[zeta_M] for N | M via zeta_N -> zeta_M^{M/N}."""
        if target.N % self.ring.N:
            raise ValueError(f"cannot embed conductor {self.ring.N} into {target.N}")
        s = target.N // self.ring.N
        return target.from_exponents((i * s, c) for i, c in enumerate(self.coeffs) if c)

    def galois(self, a: int) -> "CycInt":
        """Apply zeta -> zeta^a for a coprime to N."""
        if gcd(a, self.ring.N) != 1:
            raise ValueError("Galois exponent must be a unit mod N")
        return self.ring.from_exponents((i * a, c) for i, c in enumerate(self.coeffs) if c)

    def numeric_embed(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.ring.N)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def common_ring(*values: CycInt) -> CycRing:
    from math import lcm

    return ring(lcm(*(v.ring.N for v in values)))
