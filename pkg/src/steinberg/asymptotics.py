"""Numeric checks of the decay bounds on normalized character values and of
the limit d_{k,q} / dim L_k -> gcd(2, q^2 - 1) / (q^2 - 1)."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .brauer import CENTRAL, SPLIT, dkq_general, psi_Lk, regular_classes
from .digits import PrimePower, build_profile, dim_Lk


def contraction_constant(pp: PrimePower, sign: int) -> float | None:
    """Per-digit decay constant C_{q+sign} for nontrivial classes of the
    torus mu_{q+sign}.

    For q + sign >= 4 this is cos(2 pi / m) with m = max(4p, lcm(2, q + sign)).
    When q + sign = 3 (q = 2 nonsplit, q = 4 split) the only nontrivial roots
    have order 3 and the one factor that occurs is |cos(2 pi / 3)| = 1/2.
    Returns None when the torus has no element other than +-1.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = pp.q + sign
    if n >= 4:
        m = max(4 * pp.p, math.lcm(2, n))
        return math.cos(2 * math.pi / m)
    if n == 3:
        return 0.5
    return None


def _class_sign(cls) -> int:
    return -1 if cls.kind == SPLIT else 1


def ratio_bound_check(k: int, pp: PrimePower, slack: float = 1e-9) -> list[tuple[str, float, float, bool]]:
    """For each non-central class: (label, |psi/dim|, C^M, ratio < C^M + slack)."""
    if k < 1:
        raise ValueError("k >= 1 required")
    P = build_profile(k, pp)
    dim = dim_Lk(P)
    out = []
    for cls in regular_classes(pp):
        if cls.kind == CENTRAL:
            continue
        C = contraction_constant(pp, _class_sign(cls))
        ratio = abs(psi_Lk(P, cls).numeric_embed()) / dim
        bound = C**P.M
        out.append((cls.label(), ratio, bound, ratio < bound + slack))
    return out


def chebyshev_bound_check(p: int, samples: int = 1000) -> bool:
    """Sample sin(l x) / (l sin x) on a grid: for each l in 1..p the value at
    x0 in (0, pi/(2l)] beats |value| on (x0, pi/2], and at fixed x0 the value
    strictly decreases in l."""
    for l in range(1, p + 1):
        x0s = np.linspace(math.pi / (2 * l), 0, samples, endpoint=False)[::-1]
        for x0 in x0s[:: max(1, samples // 50)]:
            f0 = math.sin(l * x0) / (l * math.sin(x0))
            xs = np.linspace(x0, math.pi / 2, samples + 1)[1:]
            vals = np.abs(np.sin(l * xs) / (l * np.sin(xs)))
            if l > 1 and not np.all(f0 > vals):
                return False
            if l == 1 and not np.allclose(vals, 1.0):
                return False
    for x0 in np.linspace(0, math.pi / (2 * p), samples + 1)[1:]:
        seq = [abs(math.sin(l * x0) / (l * math.sin(x0))) for l in range(1, p + 1)]
        if any(b >= a for a, b in zip(seq, seq[1:])):
            return False
    return True


def target_ratio(pp: PrimePower) -> Fraction:
    return Fraction(math.gcd(2, pp.q * pp.q - 1), pp.q * pp.q - 1)


def envelope(pp: PrimePower, M: int) -> float:
    """Bound on |d/dim - target|: half of the per-class bounds C^M summed over
    the nontrivial roots of each torus, weighted 1/(q -+ 1)."""
    q = pp.q
    total = 0.0
    for sign in (-1, 1):
        n = q + sign
        nontrivial = n - math.gcd(2, n)
        C = contraction_constant(pp, sign)
        if nontrivial and C is not None:
            total += nontrivial * C**M / n
    return total / 2


@dataclass(frozen=True)
class AsymptoticReport:
    k: int
    q: int
    dim_Lk: int
    d: int
    M: int
    ratio: float
    target: float
    deviation: float
    bound: float

    @property
    def within(self) -> bool:
        # the bound is attained exactly for q = 2; allow float rounding
        return self.deviation <= self.bound * (1 + 1e-9)


def convergence_sweep(pp: PrimePower, schedule) -> list[AsymptoticReport]:
    out = []
    target = target_ratio(pp)
    for k in schedule:
        if pp.p != 2 and k % 2:
            raise ValueError(f"odd k={k} with odd p: d vanishes, no convergence")
        P = build_profile(k, pp)
        res = dkq_general(k, pp)
        ratio = Fraction(res.d, res.dim_Lk)
        out.append(
            AsymptoticReport(
                k=k,
                q=pp.q,
                dim_Lk=res.dim_Lk,
                d=res.d,
                M=P.M,
                ratio=float(ratio),
                target=float(target),
                deviation=float(abs(ratio - target)),
                bound=envelope(pp, P.M),
            )
        )
    return out


def top_digit_schedule(pp: PrimePower, Ms) -> list[int]:
    """k = p^M - 1: M base-p digits, all equal to p - 1."""
    return [pp.p**M - 1 for M in Ms]


def random_digit_schedule(pp: PrimePower, Ms, seed: int = 0) -> list[int]:
    """k with exactly M nonzero base-p digits at random positions and values,
    even when p is odd."""
    rng = random.Random(seed)
    p = pp.p
    out = []
    for M in Ms:
        while True:
            positions = rng.sample(range(3 * M), M)
            k = sum(rng.randrange(1, p) * p**t for t in positions)
            if p == 2 or k % 2 == 0:
                out.append(k)
                break
    return out
