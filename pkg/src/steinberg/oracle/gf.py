"""Finite fields F_{p^e} with table arithmetic, and dense linear algebra
over them on numpy arrays of element codes.

An element sum c_i x^i is encoded as the integer sum c_i p^i, so 0 and 1
are the field's zero and one and F_p sits inside as 0..p-1.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ..digits import PrimePower


def _poly_mulmod(a, b, mod, p):
    e = len(mod) - 1
    raw = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                raw[i + j] = (raw[i + j] + x * y) % p
    for d in range(len(raw) - 1, e - 1, -1):
        c = raw[d]
        if c:
            for i in range(e + 1):
                raw[d - e + i] = (raw[d - e + i] - c * mod[i]) % p
    return raw[:e]


def _monic_polys(p, deg):
    # increasing code order: lower coefficients vary fastest
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail[::-1]) + [1]


def _poly_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d] * inv % p
        if c:
            for i in range(db + 1):
                a[d - db + i] = (a[d - db + i] - c * b[i]) % p
    return a[:db]


def _is_irreducible(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e whose coefficient code sum c_i p^i (i < e)
    is smallest."""
    for code in range(p**e):
        f = [(code // p**i) % p for i in range(e)] + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field F_q with q = p^e, elements encoded as ints 0..q-1."""

    def __init__(self, pp: PrimePower):
        self.pp = pp
        p, e, q = pp.p, pp.e, pp.q
        self.p, self.e, self.q = p, e, q
        self.modulus = smallest_irreducible(p, e)
        vecs = [[(c // p**i) % p for i in range(e)] for c in range(q)]
        weights = [p**i for i in range(e)]

        def enc(v):
            return sum(x * w for x, w in zip(v, weights))

        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = enc([(x + y) % p for x, y in zip(vecs[a], vecs[b])])
                mul[a, b] = enc(_poly_mulmod(vecs[a], vecs[b], self.modulus, p))
        self.ADD, self.MUL = add, mul
        self.NEG = np.array([enc([(-x) % p for x in v]) for v in vecs], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.INV = inv
        self.SUB = add[:, self.NEG]
        # python-level tables for scalar hot loops
        self.add_t = add.tolist()
        self.mul_t = mul.tolist()
        self.neg_t = self.NEG.tolist()
        self.inv_t = inv.tolist()
        self.generator = next(g for g in range(2, q) if self.order(g) == q - 1) if q > 2 else 1
        self.exp = [1] * (q - 1)
        for i in range(1, q - 1):
            self.exp[i] = self.mul_t[self.exp[i - 1]][self.generator]
        self.log = {x: i for i, x in enumerate(self.exp)}

    def __repr__(self):
        return f"GF({self.q})"

    def order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul_t[x][a]
            n += 1
        return n

    def power(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n else 1
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int, s: int = 1) -> int:
        return self.power(a, self.p**s)

    def is_square(self, a: int) -> bool:
        return a == 0 or any(self.mul_t[x][x] == a for x in range(1, self.q))

    def basis(self) -> list[int]:
        """F_p-basis 1, x, ..., x^{e-1}."""
        return [self.p**i for i in range(self.e)]

    def elements(self) -> range:
        return range(self.q)

    def from_int(self, n: int) -> int:
        return n % self.p


@lru_cache(maxsize=None)
def field(pp: PrimePower) -> GF:
    return GF(pp)


def matmul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.e == 1:
        return (A @ B) % F.p
    # split codes into F_p coordinates, multiply as polynomials in x, then
    # reduce by the monic modulus; float products are exact at these sizes
    p, e = F.p, F.e
    As = [((A // p**i) % p).astype(np.float64) for i in range(e)]
    Bs = [((B // p**j) % p).astype(np.float64) for j in range(e)]
    raw = [np.zeros((A.shape[0], B.shape[1]), dtype=np.int64) for _ in range(2 * e - 1)]
    for i in range(e):
        for j in range(e):
            raw[i + j] += (As[i] @ Bs[j]).astype(np.int64) % p
    for s in range(2 * e - 2, e - 1, -1):
        top = raw[s] % p
        for t in range(e):
            if F.modulus[t]:
                raw[s - e + t] -= F.modulus[t] * top
    return sum((raw[i] % p) * p**i for i in range(e))


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def kron(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return F.MUL[A[:, None, :, None], B[None, :, None, :]].reshape(
        A.shape[0] * B.shape[0], A.shape[1] * B.shape[1]
    )


def rref(F: GF, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = np.array(A, dtype=np.int64, copy=True)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.MUL[F.INV[A[r, c]], A[r]]
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            f = F.NEG[A[others, c]]
            A[others] = F.ADD[A[others], F.MUL[f[:, None], A[r][None, :]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: GF, A: np.ndarray) -> int:
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: GF, A: np.ndarray) -> np.ndarray:
    """Basis of {x : A x = 0} as rows of the returned array."""
    cols = A.shape[1]
    # zero and repeated rows carry no constraint
    A = A[A.any(axis=1)]
    if A.shape[0] > 1:
        A = np.unique(A, axis=0)
    R, pivots = rref(F, A) if A.shape[0] else (A, [])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, fcol in enumerate(free):
        basis[t, fcol] = 1
        for r, pc in enumerate(pivots):
            basis[t, pc] = F.NEG[R[r, fcol]]
    return basis
