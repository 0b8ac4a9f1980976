"""Action matrices of Delta_k and L_k, Hom_G(st, L_k) by linear algebra, and
Brauer characters from eigenvalues lifted out of F_{q^2}."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..brauer import CENTRAL, RegularClass
from ..cyclotomic import CycInt, ring
from ..digits import PrimePower, expand_base
from ..errors import GuardError, InconsistencyError
from .gf import GF, field, identity, kron, matmul, nullspace, rank, rref
from .group import Element, det, gmul, guard_lifted

DELTA_GUARD = 128
LK_DIM_GUARD = 256
LK_K_GUARD = 4096
HOM_Q_GUARD = 9
HOM_SIZE_GUARD = 10_000


def _binomials_mod(n: int, p: int) -> np.ndarray:
    """Pascal's triangle mod p, rows 0..n."""
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[0, 0] = 1
    for m in range(1, n + 1):
        out[m, 0] = 1
        out[m, 1 : m + 1] = (out[m - 1, : m] + out[m - 1, 1 : m + 1]) % p
    return out


def _linear_powers(F: GF, x_coef: int, y_coef: int, n: int) -> np.ndarray:
    """Row m holds (x_coef X + y_coef Y)^m, indexed by the power of X."""
    xp = np.array([F.power(x_coef, r) for r in range(n + 1)], dtype=np.int64)
    yp = np.array([F.power(y_coef, r) for r in range(n + 1)], dtype=np.int64)
    r = np.arange(n + 1)
    m = r[:, None]
    ypow = yp[np.clip(m - r[None, :], 0, n)]
    out = F.MUL[F.MUL[_binomials_mod(n, F.p), xp[None, :]], ypow]
    out[r[None, :] > m] = 0
    return out


def _image_columns(F: GF, g: Element, k: int, cols: list[int]) -> np.ndarray:
    """Coordinates of g . X^i Y^{k-i} for i in cols, on the basis X^r Y^{k-r}."""
    a, b, c, d = g
    px = _linear_powers(F, a, c, k)[cols]
    py = _linear_powers(F, b, d, k)[[k - i for i in cols]]
    # column t is the product of the polynomials px[t] and py[t], computed on
    # F_p coordinates with one reduction at the end
    p, e = F.p, F.e
    xs = [(px // p**i) % p for i in range(e)]
    ys = [(py // p**j) % p for j in range(e)]
    # power-of-two length keeps the transforms fast; no wraparound past 2k
    width = 1 << (2 * k).bit_length()
    fx = [np.fft.rfft(x, width, axis=1) for x in xs]
    fy = [np.fft.rfft(y, width, axis=1) for y in ys]
    raw = []
    for s in range(2 * e - 1):
        prod = sum(fx[i] * fy[s - i] for i in range(max(0, s - e + 1), min(s, e - 1) + 1))
        vals = np.fft.irfft(prod, width, axis=1)
        ints = np.rint(vals)
        # integer coefficients below k p^2 e: rounding must be exact
        if ints.size and np.abs(vals - ints).max() > 0.25:
            raise InconsistencyError("convolution lost precision")
        raw.append(ints.astype(np.int64))
    return _reduce_coords(F, raw)[:, : k + 1].T.copy()


def _reduce_coords(F: GF, raw: list[np.ndarray]) -> np.ndarray:
    """Element codes from integer coordinate arrays of a polynomial in x of
    degree <= 2e - 2."""
    p, e = F.p, F.e
    for s in range(2 * e - 2, e - 1, -1):
        top = raw[s] % p
        for t in range(e):
            if F.modulus[t]:
                raw[s - e + t] -= F.modulus[t] * top
    return sum((raw[i] % p) * p**i for i in range(e))


def delta_action(g: Element, k: int, pp: PrimePower) -> np.ndarray:
    """Matrix of g on Delta_k, basis X^i Y^{k-i} (i = 0..k), images in columns.

    The action is (a b; c d) . X^i Y^j = (aX + cY)^i (bX + dY)^j.
    """
    if k > DELTA_GUARD and not guard_lifted():
        raise GuardError(f"k={k} exceeds Delta_k guard {DELTA_GUARD}")
    return _image_columns(field(pp), g, k, list(range(k + 1)))


def lk_basis(k: int, pp: PrimePower) -> list[int]:
    """Exponents i with C(k, i) nonzero mod p: base-p digits of i bounded by
    those of k."""
    out = [0]
    for t, d in enumerate(expand_base(k, pp.p)):
        step = pp.p**t
        out = [x + c * step for c in range(d + 1) for x in out]
    return out


def _check_lk_guard(k: int, pp: PrimePower):
    if guard_lifted():
        return
    n = len(lk_basis(k, pp)) if k <= LK_K_GUARD else None
    if n is None or n > LK_DIM_GUARD:
        raise GuardError(f"L_{k} for q={pp.q} exceeds guard (dim <= {LK_DIM_GUARD}, k <= {LK_K_GUARD})")


def lk_action(g: Element, k: int, pp: PrimePower) -> np.ndarray:
    """Restriction of the Delta_k action to L_k, on the lk_basis monomials."""
    _check_lk_guard(k, pp)
    basis = lk_basis(k, pp)
    full = _image_columns(field(pp), g, k, basis)
    outside = np.ones(k + 1, dtype=bool)
    outside[basis] = False
    if full[outside].any():
        raise InconsistencyError(f"L_{k} is not stable under {g}")
    return full[basis]


def twist(F: GF, g: Element, s: int) -> Element:
    return tuple(F.frobenius(x, s) for x in g)


def lk_action_tensor(g: Element, k: int, pp: PrimePower) -> np.ndarray:
    """L_k action assembled as the tensor product of twisted Delta_{k_i}."""
    F = field(pp)
    digits = expand_base(k, pp.p)
    mat = np.ones((1, 1), dtype=np.int64)
    exps = [0]
    for s, ks in enumerate(digits):
        mat = kron(F, mat, delta_action(twist(F, g, s), ks, pp))
        exps = [e + a * pp.p**s for e in exps for a in range(ks + 1)]
    order = np.argsort(exps)
    return mat[np.ix_(order, order)]


def elementary(F: GF, b: int, upper: bool) -> Element:
    return (1, b, 0, 1) if upper else (1, 0, b, 1)


def generators(pp: PrimePower) -> list[Element]:
    F = field(pp)
    return [elementary(F, b, up) for up in (True, False) for b in F.basis()]


def random_element(F: GF, rng: random.Random) -> Element:
    while True:
        g = tuple(rng.randrange(F.q) for _ in range(4))
        if det(F, g) == 1:
            return g


def _weights(k: int, idx: list[int], q: int) -> np.ndarray:
    # diag(alpha, alpha^{-1}) scales X^i Y^{k-i} by alpha^{2i-k}
    return (2 * np.asarray(idx) - k) % (q - 1)


def _equations(F: GF, L: np.ndarray, S: np.ndarray, unknowns) -> np.ndarray:
    """Rows of L M - M S = 0 for M supported on ``unknowns``."""
    n, q = L.shape[0], S.shape[0]
    A = np.zeros((n * q, len(unknowns)), dtype=np.int64)
    col_rows = np.arange(n) * q
    for u, (r, c) in enumerate(unknowns):
        A[col_rows + c, u] = L[:, r]
        rows = r * q + np.arange(q)
        A[rows, u] = F.ADD[A[rows, u], F.NEG[S[c, :]]]
    return A


def _check_hom_guard(k: int, pp: PrimePower):
    if guard_lifted():
        return
    q = pp.q
    if q > HOM_Q_GUARD:
        raise GuardError(f"q={q} exceeds solver guard {HOM_Q_GUARD}")
    dim = len(lk_basis(k, pp))
    if dim * q > HOM_SIZE_GUARD:
        raise GuardError(f"dim(st)*dim(L_{k}) = {dim * q} exceeds {HOM_SIZE_GUARD}")


def hom_space_full(k: int, pp: PrimePower) -> np.ndarray:
    """Basis of Hom_G(st, L_k) over all weight-compatible entries M[r, c]."""
    _check_hom_guard(k, pp)
    q = pp.q
    F = field(pp)
    lb, sb = lk_basis(k, pp), lk_basis(q - 1, pp)
    wl, ws = _weights(k, lb, q), _weights(q - 1, sb, q)
    # an equivariant map preserves torus weights
    unknowns = [(r, c) for r in range(len(lb)) for c in range(len(sb)) if wl[r] == ws[c]]
    if not unknowns:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = [
        _equations(F, lk_action(g, k, pp), lk_action(g, q - 1, pp), unknowns)
        for g in generators(pp)
    ]
    basis = nullspace(F, np.vstack(blocks))
    out = np.zeros((len(basis), len(lb), len(sb)), dtype=np.int64)
    rs = np.array([u[0] for u in unknowns])
    cs = np.array([u[1] for u in unknowns])
    for t, vec in enumerate(basis):
        out[t][rs, cs] = vec
    return out


def _spanning_elements(pp: PrimePower) -> tuple[list[Element], np.ndarray]:
    """Group elements g_1..g_q whose images g_i e_0 of the first st basis
    vector form a basis of st, found by breadth-first search over words in
    the generators. Raises if e_0 does not generate st."""
    F = field(pp)
    q = pp.q
    gens = generators(pp)
    one: Element = (1, 0, 0, 1)
    chosen, cols = [], []
    seen = {one}
    frontier = [one]
    while frontier and len(chosen) < q:
        nxt = []
        for g in frontier:
            v = lk_action(g, q - 1, pp)[:, 0]
            trial = np.array(cols + [v]).T
            if rank(F, trial) == len(cols) + 1:
                chosen.append(g)
                cols.append(v)
                if len(chosen) == q:
                    break
            for s in gens:
                h = gmul(F, s, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    if len(chosen) < q:
        raise InconsistencyError("e_0 does not generate st")
    return chosen, np.array(cols).T


def _inverse(F: GF, T: np.ndarray) -> np.ndarray:
    n = T.shape[0]
    R, piv = rref(F, np.hstack([T, identity(n)]))
    if piv[:n] != list(range(n)):
        raise InconsistencyError("matrix is singular")
    return R[:, n:]


def hom_space(k: int, pp: PrimePower) -> np.ndarray:
    """Basis of Hom_G(st, L_k) as an array of dim(L_k) x q matrices.

    A G-map M is fixed by w = M e_0, because the images g_i e_0 span st:
    M = [g_i w]_i T^{-1} with T = [g_i e_0]_i. The unknowns are the
    coordinates of w in the torus weight space of e_0, and the equations
    are L(g) M = M S(g) for the generators g.
    """
    _check_hom_guard(k, pp)
    q = pp.q
    F = field(pp)
    lb = lk_basis(k, pp)
    n = len(lb)
    e0_weight = _weights(q - 1, [0], q)[0]
    W = np.nonzero(_weights(k, lb, q) == e0_weight)[0]
    if len(W) == 0:
        return np.zeros((0, n, q), dtype=np.int64)
    elems, T = _spanning_elements(pp)
    Tinv = _inverse(F, T)
    # B[j][:, i] = L(g_i) applied to the j-th weight basis vector
    acts = [lk_action(g, k, pp) for g in elems]
    B = np.stack([np.stack([A[:, j] for A in acts], axis=1) for j in W])
    Ms = matmul(F, B.reshape(len(W) * n, q), Tinv).reshape(len(W), n, q)
    blocks = []
    for g in generators(pp):
        L, S = lk_action(g, k, pp), lk_action(g, q - 1, pp)
        flat = Ms.transpose(1, 0, 2).reshape(n, len(W) * q)
        left = matmul(F, L, flat).reshape(n, len(W), q).transpose(1, 0, 2)
        right = matmul(F, Ms.reshape(len(W) * n, q), S).reshape(len(W), n, q)
        diff = F.SUB[left, right]
        blocks.append(diff.reshape(len(W), n * q).T)
    null = nullspace(F, np.vstack(blocks))
    out = np.zeros((len(null), n, q), dtype=np.int64)
    for t, coeffs in enumerate(null):
        acc = np.zeros((n, q), dtype=np.int64)
        for j, c in enumerate(coeffs.tolist()):
            if c:
                acc = F.ADD[acc, F.MUL[c, Ms[j]]]
        out[t] = acc
    return out


def hom_dim_oracle(k: int, pp: PrimePower, checks: int = 5, seed: int = 0) -> int:
    """dim_{F_q} Hom_G(st, L_k), re-verified on random group elements."""
    basis = hom_space(k, pp)
    if checks and len(basis):
        verify_equivariant(basis, k, pp, checks, seed)
    return len(basis)


def verify_equivariant(basis: np.ndarray, k: int, pp: PrimePower, checks: int = 5, seed: int = 0):
    F = field(pp)
    rng = random.Random(seed * 1_000_003 + k * 131 + pp.q)
    for _ in range(checks):
        g = random_element(F, rng)
        L, S = lk_action(g, k, pp), lk_action(g, pp.q - 1, pp)
        for M in basis:
            if not np.array_equal(matmul(F, L, M), matmul(F, M, S)):
                raise InconsistencyError(f"solution for k={k} not equivariant under {g}")


@dataclass
class BrauerLift:
    """F_q inside F_{q^2}, and the monoid map alpha^m -> xi^m from F_{q^2}
    to Z[zeta_{q^2-1}], alpha the stored generator."""

    small: GF
    big: GF
    embed_table: list[int]

    @classmethod
    def for_field(cls, pp: PrimePower) -> "BrauerLift":
        return _lift(pp)

    @property
    def order(self) -> int:
        return self.big.q - 1

    def embed(self, x: int) -> int:
        return self.embed_table[x]

    def restrict(self, y: int) -> int:
        try:
            return self.embed_table.index(y)
        except ValueError:
            raise ValueError(f"{y} does not lie in F_{self.small.q}") from None

    def lift(self, y: int) -> CycInt:
        R = ring(self.order)
        if y == 0:
            return R.zero
        return R.root_of_unity(self.big.log[y])

    def torus_element(self, cls: RegularClass) -> int:
        """The eigenvalue zeta in F_{q^2} whose lift is zeta_n^a."""
        return self.big.exp[(cls.zeta_exponent * (self.order // cls.n)) % self.order]


@lru_cache(maxsize=None)
def _lift(pp: PrimePower) -> BrauerLift:
    F = field(pp)
    K = field(PrimePower(pp.p, 2 * pp.e))

    def evaluate(poly, x):
        acc = 0
        for c in reversed(poly):
            acc = K.add_t[K.mul_t[acc][x]][c]
        return acc

    beta = next(x for x in range(K.q) if evaluate(F.modulus, x) == 0)
    powers = [1]
    for _ in range(pp.e - 1):
        powers.append(K.mul_t[powers[-1]][beta])
    table = []
    for x in range(F.q):
        acc = 0
        for i in range(pp.e):
            c = (x // pp.p**i) % pp.p
            for _ in range(c):
                acc = K.add_t[acc][powers[i]]
        table.append(acc)
    for x in range(F.q):
        for y in range(F.q):
            if table[F.add_t[x][y]] != K.add_t[table[x]][table[y]] or table[
                F.mul_t[x][y]
            ] != K.mul_t[table[x]][table[y]]:
                raise InconsistencyError("F_q does not embed in F_{q^2}")
    return BrauerLift(F, K, table)


def class_matrix(pp: PrimePower, cls: RegularClass) -> Element:
    """A_zeta: +-I for central classes, else the companion matrix of
    T^2 - (zeta + zeta^{-1}) T + 1."""
    lift = _lift(pp)
    F, K = lift.small, lift.big
    if cls.kind == CENTRAL:
        s = 1 if cls.zeta_exponent == 0 else F.neg_t[1]
        return (s, 0, 0, s)
    z = lift.torus_element(cls)
    b = lift.restrict(K.add_t[z][K.inv_t[z]])
    return (0, F.neg_t[1], 1, b)


def brauer_char_oracle(k: int, pp: PrimePower, cls: RegularClass) -> CycInt:
    """Sum of lifted eigenvalues of A_zeta on L_k, from eigenspace dimensions
    over F_{q^2}."""
    lift = _lift(pp)
    K = lift.big
    A = lk_action(class_matrix(pp, cls), k, pp)
    n = A.shape[0]
    B = np.array(lift.embed_table, dtype=np.int64)[A]
    counts = []
    total = 0
    for m in range(lift.order):
        beta = K.exp[m]
        shifted = B.copy()
        diag = np.arange(n)
        shifted[diag, diag] = K.SUB[shifted[diag, diag], beta]
        mult = n - rank(K, shifted)
        if mult:
            counts.append((m, mult))
            total += mult
            if total == n:
                break
    if total != n:
        raise InconsistencyError(f"A_zeta is not diagonalizable on L_{k} (eigenspaces sum to {total} < {n})")
    return ring(lift.order).from_exponents(counts)
