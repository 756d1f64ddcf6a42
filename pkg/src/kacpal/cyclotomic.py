"""Exact arithmetic in the cyclotomic field Q(zeta_N) with N = 2n.

The field hosts both q = zeta_N^2, a primitive n-th root of unity, and its
square root p = zeta_N.  Elements are polynomials in zeta_N reduced modulo
the N-th cyclotomic polynomial Phi_N; working modulo Phi_N (rather than
x^N - 1) keeps the quotient a field, so every nonzero element is invertible.

Coefficients are rationals, stored as an integer vector over a common
positive denominator with the gcd divided out.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ContextMismatchError, NotInvertibleError


# ---------------------------------------------------------------------------
# integer polynomials, ascending coefficient lists


def poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact long division of integer polynomials; den must be monic."""
    assert den[-1] == 1, "divisor must be monic"
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients (ascending) of Phi_N, via exact division of x^N - 1
    by the product of Phi_d over proper divisors d of N."""
    if N < 1:
        raise ValueError("N must be positive")
    if N == 1:
        return (-1, 1)
    num = [-1] + [0] * (N - 1) + [1]
    den = [1]
    for d in range(1, N):
        if N % d == 0:
            den = poly_mul_int(den, list(cyclotomic_polynomial(d)))
    q, r = poly_divmod_int(num, den)
    assert r == [0], "cyclotomic division must be exact"
    return tuple(q)


# ---------------------------------------------------------------------------


class CycContext:
    """The field Q(zeta_N) with N = 2n, n >= 2.

    Fixes p := zeta_N and q := p^2 uniformly for all n, so one context
    serves both the Hopf algebra construction (which needs q) and the
    representations (which need the square root p).
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n must be >= 2")
        self.n = n
        self.N = 2 * n
        self.phi = cyclotomic_polynomial(self.N)
        self.degree = len(self.phi) - 1
        assert self.degree == euler_phi(self.N)
        # x^(degree + i) mod Phi_N for the multiplication reduction sweep
        self._red: list[tuple[int, ...]] = []
        prev = [-c for c in self.phi[:-1]]  # x^degree mod Phi (Phi monic)
        self._red.append(tuple(prev))
        for _ in range(self.degree - 1):
            nxt = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for j in range(self.degree):
                    nxt[j] -= top * self.phi[j]
            self._red.append(tuple(nxt))
            prev = nxt
        self.zero = CycScalar(self, (0,) * self.degree, 1)
        self.one = CycScalar(self, (1,) + (0,) * (self.degree - 1), 1)
        # zeta_N^e for 0 <= e < N
        self._roots: list[CycScalar] = []
        cur = self.one
        zeta = self._monomial(1)
        for _ in range(self.N):
            self._roots.append(cur)
            cur = cur * zeta

    def _monomial(self, e: int) -> "CycScalar":
        if e < self.degree:
            nums = [0] * self.degree
            nums[e] = 1
            return CycScalar(self, tuple(nums), 1)
        nums = [0] * (e + 1)
        nums[e] = 1
        return CycScalar(self, _reduce(self, nums), 1)

    def scalar(self, value) -> "CycScalar":
        """Embed an int or Fraction as a constant."""
        f = Fraction(value)
        nums = [f.numerator] + [0] * (self.degree - 1)
        return CycScalar(self, tuple(nums), f.denominator)

    def root(self, e: int) -> "CycScalar":
        """p^e = zeta_N^e, reduced modulo Phi_N. root(2) is the canonical q."""
        return self._roots[e % self.N]

    def q_pow(self, e: int) -> "CycScalar":
        return self._roots[(2 * e) % self.N]

    def p_pow(self, e: int) -> "CycScalar":
        return self._roots[e % self.N]

    @property
    def q(self) -> "CycScalar":
        return self.root(2)

    @property
    def p(self) -> "CycScalar":
        return self.root(1)

    def __eq__(self, other):
        return isinstance(other, CycContext) and other.n == self.n

    def __hash__(self):
        return hash(("CycContext", self.n))

    def __repr__(self):
        return f"CycContext(n={self.n})"

    def to_json(self) -> dict:
        return {"n": self.n, "N": self.N, "degree": self.degree}


def _reduce(ctx: CycContext, nums: list[int]) -> tuple[int, ...]:
    """Reduce an integer coefficient vector modulo Phi_N (any length)."""
    d = ctx.degree
    out = list(nums[:d]) + [0] * max(0, d - len(nums))
    for e in range(d, len(nums)):
        c = nums[e]
        if c:
            row = ctx._red[e - d]
            for j in range(d):
                out[j] += c * row[j]
    return tuple(out)


class CycScalar:
    """An element of Q(zeta_N): integer coefficient vector over a common
    positive denominator, always stored reduced (content gcd divided out)."""

    __slots__ = ("ctx", "nums", "den")

    def __init__(self, ctx: CycContext, nums: tuple[int, ...], den: int):
        if den < 0:
            nums = tuple(-c for c in nums)
            den = -den
        g = den
        for c in nums:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums = tuple(c // g for c in nums)
            den //= g
        self.ctx = ctx
        self.nums = nums
        self.den = den

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.ctx != self.ctx:
                raise ContextMismatchError("scalars from different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        d = a.den * b.den // gcd(a.den, b.den)
        fa, fb = d // a.den, d // b.den
        return CycScalar(self.ctx, tuple(x * fa + y * fb for x, y in zip(a.nums, b.nums)), d)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.ctx, tuple(-c for c in self.nums), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.ctx.degree
        a, b = self.nums, other.nums
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycScalar(self.ctx, _reduce(self.ctx, prod), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Inverse via the extended Euclidean algorithm on polynomials over Q."""
        if self.is_zero():
            raise NotInvertibleError("division by zero in cyclotomic field")
        phi = [Fraction(c) for c in self.ctx.phi]
        a = [Fraction(c, self.den) for c in self.nums]
        # invariant: r0 = s0*a mod phi, r1 = s1*a mod phi
        r0, r1 = phi, list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul_frac(q, s1))
        while len(r0) > 1 and r0[-1] == 0:
            r0.pop()
        assert len(r0) == 1 and r0[0] != 0, "Phi_N is irreducible; gcd must be constant"
        c = r0[0]
        inv_coeffs = [s / c for s in s0]
        return _from_fractions(self.ctx, inv_coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out = self.ctx.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.ctx.n, self.nums, self.den))

    # -- formatting / serialization -------------------------------------------

    def to_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def to_json(self) -> list[str]:
        return [f"{f.numerator}/{f.denominator}" for f in self.to_fractions()]

    def __repr__(self):
        parts = []
        for e, f in enumerate(self.to_fractions()):
            if f == 0:
                continue
            if e == 0:
                parts.append(str(f))
            elif e == 1:
                parts.append(f"{f}*z")
            else:
                parts.append(f"{f}*z^{e}")
        return " + ".join(parts) if parts else "0"


def _poly_divmod_frac(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(1, len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / lead
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


def _from_fractions(ctx: CycContext, coeffs: list[Fraction]) -> CycScalar:
    coeffs = list(coeffs)
    while len(coeffs) > ctx.degree and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) > ctx.degree:
        raise ValueError("coefficient vector longer than field degree")
    coeffs += [Fraction(0)] * (ctx.degree - len(coeffs))
    den = 1
    for f in coeffs:
        den = den * f.denominator // gcd(den, f.denominator)
    nums = [int(f * den) for f in coeffs]
    return CycScalar(ctx, tuple(nums), den)
