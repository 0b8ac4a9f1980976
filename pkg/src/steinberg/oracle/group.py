"""Enumeration of SL2(F_q) and a brute-force audit of its conjugacy classes."""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

from ..brauer import CENTRAL, RegularClass, regular_classes
from ..digits import PrimePower
from ..errors import GuardError
from .gf import GF, field

Element = tuple[int, int, int, int]  # (a, b, c, d) for [[a, b], [c, d]]

MAX_GROUP_Q = 13


def guard_lifted() -> bool:
    return bool(os.environ.get("STEINBERG_GUARD_OVERRIDE"))


def gmul(F: GF, x: Element, y: Element) -> Element:
    A, M = F.add_t, F.mul_t
    a, b, c, d = x
    e, f, g, h = y
    return (
        A[M[a][e]][M[b][g]],
        A[M[a][f]][M[b][h]],
        A[M[c][e]][M[d][g]],
        A[M[c][f]][M[d][h]],
    )


def ginv(F: GF, x: Element) -> Element:
    a, b, c, d = x
    n = F.neg_t
    return (d, n[b], n[c], a)


def det(F: GF, x: Element) -> int:
    a, b, c, d = x
    return F.add_t[F.mul_t[a][d]][F.neg_t[F.mul_t[b][c]]]


def element_order(F: GF, x: Element) -> int:
    one = (1, 0, 0, 1)
    y, n = x, 1
    while y != one:
        y = gmul(F, y, x)
        n += 1
    return n


def sl2_enumerate(pp: PrimePower) -> list[Element]:
    if pp.q > MAX_GROUP_Q and not guard_lifted():
        raise GuardError(f"q={pp.q} exceeds enumeration guard {MAX_GROUP_Q}")
    F = field(pp)
    q = pp.q
    return [
        (a, b, c, d)
        for a in range(q)
        for b in range(q)
        for c in range(q)
        for d in range(q)
        if det(F, (a, b, c, d)) == 1
    ]


def representatives(pp: PrimePower) -> list[Element]:
    """Distinct matrices of the families (a)-(d): +-I, companion matrices of
    T^2 - bT + 1 with b != +-2, the two unipotent Jordan blocks, and the
    blocks with upper-right entry 1 replaced by a fixed non-square z.

    Multiplying the blocks by [[1, z], [0, 1]] instead would give upper-right
    entry 1 + z, which is a square for some q (q = 3 yields the identity).
    """
    F = field(pp)
    one, neg1 = 1, F.neg_t[1]
    two = F.add_t[1][1]
    twos = {two, F.neg_t[two]}
    reps: list[Element] = [(one, 0, 0, one), (neg1, 0, 0, neg1)]
    reps += [(0, neg1, one, b) for b in F.elements() if b not in twos]
    unip = [(one, one, 0, one), (neg1, neg1, 0, neg1)]
    reps += unip
    # in characteristic 2 every element is a square and z = 0
    z = next(x for x in F.elements() if not F.is_square(x) or (pp.p == 2 and x == 0))
    reps += [(one, z, 0, one), (neg1, F.neg_t[z], 0, neg1)]
    out: list[Element] = []
    for r in reps:
        if r not in out:
            out.append(r)
    return out


def torus_trace(pp: PrimePower, cls: RegularClass) -> int:
    """Trace zeta + zeta^{-1} in F_q of the class, via F_{q^2}."""
    from .modules import BrauerLift

    lift = BrauerLift.for_field(pp)
    z = lift.torus_element(cls)
    K = lift.big
    return lift.restrict(K.add_t[z][K.inv_t[z]])


@dataclass
class ClassAudit:
    q: int
    n_classes: int
    n_regular: int
    class_sizes: list[int]
    regular_sizes: dict[str, int]
    failures: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [
            f"q={self.q} classes={self.n_classes} p-regular={self.n_regular}",
            "class sizes: " + " ".join(str(s) for s in sorted(self.class_sizes)),
        ]
        out += [f"  {lab}: size {s}" for lab, s in self.regular_sizes.items()]
        out += [f"FAIL {f}" for f in self.failures]
        out.append("PASS" if self.passed else "FAIL")
        return out


def conjugacy_class_audit(pp: PrimePower) -> ClassAudit:
    F = field(pp)
    q, p = pp.q, pp.p
    G = sl2_enumerate(pp)
    failures = []
    if len(G) != pp.group_order:
        failures.append(f"|G| = {len(G)}, expected {pp.group_order}")

    class_of: dict[Element, int] = {}
    classes: list[list[Element]] = []
    inverses = [(g, ginv(F, g)) for g in G]
    for x in G:
        if x in class_of:
            continue
        idx = len(classes)
        orbit = {gmul(F, gmul(F, g, x), gi) for g, gi in inverses}
        for y in orbit:
            class_of[y] = idx
        classes.append(sorted(orbit))

    reps = representatives(pp)
    hits = [class_of[r] for r in reps]
    if sorted(hits) != list(range(len(classes))):
        failures.append(f"representatives hit classes {sorted(hits)} of {len(classes)}")

    regular = [i for i, c in enumerate(classes) if element_order(F, c[0]) % p]
    if len(regular) != q:
        failures.append(f"{len(regular)} p-regular classes, expected {q}")
    n_semisimple_reps = 1 + (p != 2) + sum(1 for r in reps if r[0] == 0)
    if set(regular) != set(hits[:n_semisimple_reps]):
        failures.append("p-regular classes differ from those of families (a), (b)")

    regular_sizes = {}
    by_trace = {}
    for i in regular:
        c = classes[i]
        tr = F.add_t[c[0][0]][c[0][3]]
        by_trace.setdefault(tr, []).append(i)
    for cls in regular_classes(pp):
        if cls.kind == CENTRAL:
            target = (1, 0, 0, 1) if cls.zeta_exponent == 0 else (F.neg_t[1], 0, 0, F.neg_t[1])
            i = class_of[target]
        else:
            tr = torus_trace(pp, cls)
            cand = by_trace.get(tr, [])
            if len(cand) != 1:
                failures.append(f"{cls.label()}: {len(cand)} regular classes with trace {tr}")
                continue
            i = cand[0]
        size = len(classes[i])
        regular_sizes[f"{cls.kind} {cls.label()}"] = size
        if size != cls.size:
            failures.append(f"{cls.label()}: brute-force size {size}, expected {cls.size}")
        if cls.kind != CENTRAL and 2 * cls.weight != size:
            failures.append(f"{cls.label()}: per-root weight {cls.weight} is not half of {size}")

    return ClassAudit(
        q=q,
        n_classes=len(classes),
        n_regular=len(regular),
        class_sizes=[len(c) for c in classes],
        regular_sizes=regular_sizes,
        failures=failures,
    )
