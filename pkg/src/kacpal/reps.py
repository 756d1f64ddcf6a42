"""The m-dimensional modules V_{a,b}: matrix construction, relation checks,
simplicity via multiplicative span closure, exact isomorphism testing, and
inner-faithfulness over the base ring (gcd criterion plus the brute-force
subgroup oracle).

Matrices act on coordinate columns, so rho(h1 h2) = rho(h1) rho(h2) for the
left module structure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd

from .cyclotomic import CycContext
from .errors import SizeGuardError
from .hopf import AxiomReport, HopfElem
from .linalg import Mat, kernel_basis, rref
from .symmetric import Perm, canonical_word

SUBGROUP_GUARD = 4096


@dataclass
class RepParams:
    n: int
    m: int
    a: int
    b: int

    def __post_init__(self):
        self.a %= self.n
        self.b %= self.n


class Rep:
    """V_{a,b}: the generator matrices X_i and Z_k over Q(zeta_2n)."""

    def __init__(self, params: RepParams):
        self.params = params
        n, m, a, b = params.n, params.m, params.a, params.b
        self.ctx = CycContext(n)
        ctx = self.ctx
        self.xs = []
        for i in range(1, m + 1):
            rows = [
                [
                    (ctx.q_pow(a) if i == r + 1 else ctx.q_pow(b)) if r == c else ctx.zero
                    for c in range(m)
                ]
                for r in range(m)
            ]
            self.xs.append(Mat(ctx, rows))
        self.zs = []
        p_b2 = ctx.p_pow(b * b)
        q_ab = ctx.q_pow(a * b)
        for k in range(1, m):
            rows = [[ctx.zero] * m for _ in range(m)]
            for r in range(m):
                if r not in (k - 1, k):
                    rows[r][r] = p_b2
            rows[k - 1][k] = ctx.one
            rows[k][k - 1] = q_ab
            self.zs.append(Mat(ctx, rows))

    @property
    def dim(self) -> int:
        return self.params.m

    def x(self, i: int) -> Mat:
        return self.xs[i - 1]

    def z(self, k: int) -> Mat:
        return self.zs[k - 1]

    def rho_ring_monomial(self, exps) -> Mat:
        out = Mat.identity(self.ctx, self.params.m)
        for i, e in enumerate(exps):
            out = out * self.xs[i] ** (e % self.params.n)
        return out

    def rho_word(self, w: Perm) -> Mat:
        out = Mat.identity(self.ctx, self.params.m)
        for i in canonical_word(w):
            out = out * self.zs[i - 1]
        return out

    def rho(self, h: HopfElem) -> Mat:
        """Linear extension of the generator assignment over the basis."""
        out = Mat.zeros(self.ctx, self.params.m, self.params.m)
        for (e, w), c in h.terms.items():
            out = out + (self.rho_ring_monomial(e) * self.rho_word(w)).scale(c)
        return out

    def rho_t(self, k: int) -> Mat:
        """rho(t_k) = (1/n) sum_{s,t} q^{-st} X_k^s X_{k+1}^t, evaluated
        through the X matrices."""
        n = self.params.n
        ctx = self.ctx
        acc = Mat.zeros(ctx, self.params.m, self.params.m)
        xk_pows = [self.xs[k - 1] ** s for s in range(n)]
        xk1_pows = [self.xs[k] ** t for t in range(n)]
        for s in range(n):
            for t in range(n):
                acc = acc + (xk_pows[s] * xk1_pows[t]).scale(ctx.q_pow(-s * t))
        return acc.scale(ctx.scalar(1) / ctx.scalar(n))


def build_rep(params: RepParams) -> Rep:
    return Rep(params)


def verify_rep(params: RepParams, rep: Rep | None = None) -> AxiomReport:
    """All defining relations of H_{n,m} hold for the matrices."""
    rep = rep or Rep(params)
    n, m = params.n, params.m
    ident = Mat.identity(rep.ctx, m)
    report = AxiomReport(instance=f"V({params.a},{params.b}) over H({n},{m})")

    ok = all(rep.x(i) ** n == ident for i in range(1, m + 1))
    report.add("x-order", "X_i^n = I", ok, None)

    ok = all(
        rep.x(i) * rep.x(j) == rep.x(j) * rep.x(i)
        for i in range(1, m + 1)
        for j in range(1, m + 1)
    )
    report.add("x-commute", "X_i X_j = X_j X_i", ok, None)

    ok = True
    witness = None
    for k in range(1, m):
        sk = Perm.transposition(m, k)
        for i in range(1, m + 1):
            if rep.z(k) * rep.x(i) != rep.x(sk(i)) * rep.z(k):
                ok = False
                witness = {"k": k, "i": i}
                break
        if not ok:
            break
    report.add("conjugation", "Z_k X_i = X_{s_k(i)} Z_k", ok, witness)

    ok = all(
        rep.z(k) * rep.z(k + 1) * rep.z(k) == rep.z(k + 1) * rep.z(k) * rep.z(k + 1)
        for k in range(1, m - 1)
    )
    report.add("braid", "Z_k Z_{k+1} Z_k = Z_{k+1} Z_k Z_{k+1}", ok, None)

    ok = all(
        rep.z(k) * rep.z(l) == rep.z(l) * rep.z(k)
        for k in range(1, m)
        for l in range(1, m)
        if abs(k - l) > 1
    )
    report.add("far-commute", "Z_k Z_l = Z_l Z_k for |k-l| > 1", ok, None)

    ok = True
    witness = None
    for k in range(1, m):
        if rep.z(k) ** 2 != rep.rho_t(k):
            ok = False
            witness = {"k": k}
            break
    report.add("z-square", "Z_k^2 = rho(t_k)", ok, witness)
    return report


def is_simple(params: RepParams) -> bool:
    """Multiplicative span closure: the module is certified simple when the
    algebra generated by the X_i and Z_k matrices has dimension m^2."""
    rep = Rep(params)
    m = params.m
    ctx = rep.ctx
    gens = rep.xs + rep.zs
    basis_rows: list = []
    matrices: list[Mat] = []

    def insert(mat: Mat) -> bool:
        rows = basis_rows + [mat.flatten()]
        red, _ = rref(rows, ctx)
        if len(red) > len(basis_rows):
            basis_rows.clear()
            basis_rows.extend(red)
            matrices.append(mat)
            return True
        return False

    insert(Mat.identity(ctx, m))
    frontier = [Mat.identity(ctx, m)]
    while frontier and len(basis_rows) < m * m:
        new_frontier = []
        for u in frontier:
            for g in gens:
                v = u * g
                if insert(v):
                    new_frontier.append(v)
        frontier = new_frontier
    return len(basis_rows) == m * m


def modules_isomorphic(p1: RepParams, p2: RepParams) -> bool:
    """Exact test for an invertible intertwiner T with T rho1(g) = rho2(g) T
    over all generators g."""
    if (p1.n, p1.m) != (p2.n, p2.m):
        raise ValueError("modules over different algebras")
    r1, r2 = Rep(p1), Rep(p2)
    m = p1.m
    ctx = r1.ctx
    gens = list(zip(r1.xs + r1.zs, r2.xs + r2.zs))
    # unknowns T[i][j], row-major; equation T A - B T = 0 per generator (A, B)
    rows = []
    for A, B in gens:
        for i in range(m):
            for j in range(m):
                row = [ctx.zero] * (m * m)
                for k in range(m):
                    row[i * m + k] = row[i * m + k] + A[k, j]
                    row[k * m + j] = row[k * m + j] - B[i, k]
                rows.append(row)
    space = kernel_basis(rows, m * m, ctx)
    if not space:
        return False
    mats = [Mat(ctx, [v[i * m : (i + 1) * m] for i in range(m)]) for v in space]
    for T in mats:
        if T.is_invertible():
            return True
    if is_simple(p1) and is_simple(p2):
        # a nonzero intertwiner between simple modules is invertible
        return True
    # det is a polynomial of degree m^2 in the combination coefficients; it is
    # identically zero iff it vanishes on a full grid of side m^2 + 1
    grid = range(m * m + 1)
    total = (m * m + 1) ** len(mats)
    if total > 200000:
        raise SizeGuardError("intertwiner combination grid too large")
    for coeffs in iproduct(grid, repeat=len(mats)):
        T = Mat.zeros(ctx, m, m)
        for c, M in zip(coeffs, mats):
            if c:
                T = T + M.scale(c)
        if T.is_invertible():
            return True
    return False


# ---------------------------------------------------------------------------
# inner-faithfulness over R


def int_matrix_M(m: int, a: int, b: int) -> list[list[int]]:
    """a on the diagonal, b elsewhere."""
    return [[a if i == j else b for j in range(m)] for i in range(m)]


def det_M(m: int, a: int, b: int) -> int:
    """Integer determinant of M_{m,a,b} by fraction-free elimination."""
    mat = [row[:] for row in int_matrix_M(m, a, b)]
    return _int_det(mat)


def _int_det(mat: list[list[int]]) -> int:
    # Bareiss fraction-free Gaussian elimination
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def inner_faithful_criterion(params: RepParams) -> bool:
    """gcd(det(M_{m,a,b}), n) = 1 certifies inner-faithfulness over R."""
    return gcd(det_M(params.m, params.a, params.b), params.n) == 1


def subgroups_of_znm(n: int, m: int) -> list[frozenset]:
    """All subgroups of Z_n^m, by closing generated subsets incrementally."""
    if n**m > SUBGROUP_GUARD:
        raise SizeGuardError(f"subgroup enumeration refused for n^m = {n**m} > {SUBGROUP_GUARD}")
    elems = [tuple(v) for v in iproduct(range(n), repeat=m)]

    def close(gens) -> frozenset:
        seen = {(0,) * m}
        frontier = list(gens)
        for g in frontier:
            if g not in seen:
                seen.add(g)
        frontier = list(seen)
        while frontier:
            nxt = []
            for u in frontier:
                for g in list(seen):
                    s = tuple((a + b) % n for a, b in zip(u, g))
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return frozenset(seen)

    trivial = frozenset({(0,) * m})
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in elems:
                if g not in H:
                    K = close(H | {g})
                    if K not in found:
                        found.add(K)
                        nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def inner_faithful_bruteforce(params: RepParams) -> tuple[bool, list[list[list[int]]]]:
    """Enumerate all subgroups N of Z_n^m; V_{a,b} is inner-faithful over R
    iff the only N whose every element acts as the identity matrix is the
    trivial one.  Returns (verdict, annihilating subgroups as element lists)."""
    rep = Rep(params)
    ident = Mat.identity(rep.ctx, params.m)
    annihilating = []
    for H in subgroups_of_znm(params.n, params.m):
        if all(rep.rho_ring_monomial(alpha) == ident for alpha in H):
            annihilating.append(sorted(H))
    verdict = len(annihilating) == 1  # only the trivial subgroup
    return verdict, [[list(v) for v in H] for H in annihilating]
