"""The base ring R = K[Z_n]^(tensor m): group-algebra arithmetic, idempotents,
slot embeddings, the symmetric-group slot action, and the canonical twist.

Monomials x_1^a1 ... x_m^am are keyed by exponent vectors in [0, n)^m;
multiplication is convolution (exponents add mod n, coefficients multiply).
Tensor powers R^(tensor k) are represented the same way with k exponent
vectors per key (class KTensor).

Slot action convention, used consistently everywhere in this package:

    sigma_w(a_1 (x) ... (x) a_m) = a_{w(1)} (x) ... (x) a_{w(m)},

i.e. sigma_w moves the content of slot w(i) into slot i.  With this formula
sigma_w . sigma_v = sigma_{w*v} holds for the left-to-right permutation
product (w*v)(i) = v(w(i)) implemented in kacpal.symmetric, which is what
makes the crossed product associative; see symmetric.py for the discussion.
"""

from __future__ import annotations

from itertools import product as iproduct

from .cyclotomic import CycContext, CycScalar
from .errors import ContextMismatchError, NotInvertibleError
from .symmetric import Perm


class GroupAlgebra:
    """Context for R = K[Z_n]^(tensor m).  m = 1 gives the slice B = K[Z_n]."""

    def __init__(self, n: int, m: int):
        if n < 2 or m < 1:
            raise ValueError("need n >= 2 and m >= 1")
        self.n = n
        self.m = m
        self.cyc = CycContext(n)
        self.zero = RingElem(self, {})
        zero_exp = (0,) * m
        self.one = RingElem(self, {zero_exp: self.cyc.one})
        self.zero_exp = zero_exp

    def monomial(self, exps, coeff=None) -> "RingElem":
        exps = tuple(e % self.n for e in exps)
        if len(exps) != self.m:
            raise ValueError("exponent vector has wrong length")
        c = self.cyc.one if coeff is None else coeff
        if isinstance(c, int):
            c = self.cyc.scalar(c)
        return RingElem(self, {exps: c} if c else {})

    def gen(self, i: int) -> "RingElem":
        """x_i, the generator of the i-th tensor slot (1-based)."""
        if not 1 <= i <= self.m:
            raise ValueError("slot out of range")
        exps = [0] * self.m
        exps[i - 1] = 1
        return self.monomial(exps)

    def from_terms(self, terms: dict) -> "RingElem":
        return RingElem(self, {k: c for k, c in terms.items() if c})

    def exponent_vectors(self):
        return iproduct(range(self.n), repeat=self.m)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebra) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash(("GroupAlgebra", self.n, self.m))

    def __repr__(self):
        return f"GroupAlgebra(n={self.n}, m={self.m})"


class RingElem:
    """Sparse element of R: map from exponent vectors to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GroupAlgebra, terms: dict):
        self.ring = ring
        self.terms = terms

    def _check(self, other) -> "RingElem":
        if isinstance(other, (int, CycScalar)):
            return self.ring.from_terms({self.ring.zero_exp: _as_scalar(self.ring, other)})
        if not isinstance(other, RingElem):
            return NotImplemented  # type: ignore[return-value]
        if other.ring != self.ring:
            raise ContextMismatchError("ring elements from different contexts")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return RingElem(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        n = self.ring.n
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple((a + b) % n for a, b in zip(ka, kb))
                c = ca * cb
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return RingElem(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return self._check(other) * self

    def scale(self, c) -> "RingElem":
        c = _as_scalar(self.ring, c)
        if not c:
            return self.ring.zero
        return RingElem(self.ring, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            return ring_inverse(self) ** (-e)
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = self._check(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.n, self.ring.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def to_json(self) -> list:
        return [{"exponents": list(k), "coeff": c.to_json()} for k, c in self.sorted_terms()]

    def __repr__(self):
        def mono(k):
            parts = [f"x{i+1}^{e}" if e != 1 else f"x{i+1}" for i, e in enumerate(k) if e]
            return "*".join(parts) if parts else "1"

        body = " + ".join(f"({c})*{mono(k)}" for k, c in self.sorted_terms())
        return body if body else "0"


def _as_scalar(ring: GroupAlgebra, c) -> CycScalar:
    return ring.cyc.scalar(c) if isinstance(c, int) else c


# ---------------------------------------------------------------------------
# standard group-algebra Hopf structure on R (monomials are group-like)


def eps_ring(a: RingElem) -> CycScalar:
    out = a.ring.cyc.zero
    for c in a.terms.values():
        out = out + c
    return out


def delta_ring(a: RingElem) -> "KTensor":
    """Delta(x^alpha) = x^alpha (x) x^alpha, extended linearly."""
    return KTensor(a.ring, 2, {(k, k): c for k, c in a.terms.items()})


def antipode_ring(a: RingElem) -> RingElem:
    n = a.ring.n
    return RingElem(a.ring, {tuple((-e) % n for e in k): c for k, c in a.terms.items()})


def sigma(w: Perm, a: RingElem) -> RingElem:
    """Slot action: sigma_w(x^alpha)_i = alpha_{w(i)}."""
    if w.size != a.ring.m:
        raise ContextMismatchError("permutation degree does not match tensor length")
    img = w.images
    out = {}
    for k, c in a.terms.items():
        nk = tuple(k[img[i]] for i in range(len(k)))
        s = out.get(nk)
        out[nk] = c if s is None else s + c
    return a.ring.from_terms(out)


def idempotent(B: GroupAlgebra, k: int) -> RingElem:
    """e_k = (1/n) sum_i q^{-ik} x^i in B = K[Z_n] (one-slot context)."""
    if B.m != 1:
        raise ValueError("idempotents live in the one-slot algebra B")
    if not 0 <= k < B.n:
        raise ValueError("index out of range")
    inv_n = B.cyc.scalar(1) / B.cyc.scalar(B.n)
    return B.from_terms({(i,): B.cyc.q_pow(-i * k) * inv_n for i in range(B.n)})


def embed(R: GroupAlgebra, i: int, b: RingElem) -> RingElem:
    """Place a B-element in tensor slot i of R, identity elsewhere."""
    if b.ring.m != 1 or b.ring.n != R.n:
        raise ContextMismatchError("embed expects a one-slot element over the same n")
    if not 1 <= i <= R.m:
        raise ValueError("slot out of range")
    out = {}
    for (e,), c in b.terms.items():
        key = [0] * R.m
        key[i - 1] = e
        out[tuple(key)] = c
    return R.from_terms(out)


# ---------------------------------------------------------------------------
# tensor powers


class KTensor:
    """Sparse element of R^(tensor k): map from k-tuples of exponent vectors
    to scalars.  Componentwise convolution product."""

    __slots__ = ("ring", "arity", "terms")

    def __init__(self, ring: GroupAlgebra, arity: int, terms: dict):
        self.ring = ring
        self.arity = arity
        self.terms = terms

    def _check(self, other: "KTensor"):
        if other.ring != self.ring or other.arity != self.arity:
            raise ContextMismatchError("tensor elements from different contexts")

    def __add__(self, other: "KTensor"):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return KTensor(self.ring, self.arity, out)

    def __neg__(self):
        return KTensor(self.ring, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "KTensor"):
        self._check(other)
        n = self.ring.n
        out: dict = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(
                    tuple((a + b) % n for a, b in zip(la, lb)) for la, lb in zip(ka, kb)
                )
                c = ca * cb
                s = out.get(k)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return KTensor(self.ring, self.arity, out)

    def scale(self, c) -> "KTensor":
        c = _as_scalar(self.ring, c)
        if not c:
            return KTensor(self.ring, self.arity, {})
        return KTensor(self.ring, self.arity, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, KTensor):
            return NotImplemented
        return (
            self.ring == other.ring and self.arity == other.arity and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.n, self.ring.m, self.arity, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    # -- structure maps -------------------------------------------------------

    def comultiply_leg(self, leg: int) -> "KTensor":
        """Apply Delta_R to one leg; monomials are group-like, so the leg
        is duplicated in place."""
        out = {}
        for k, c in self.terms.items():
            nk = k[: leg + 1] + (k[leg],) + k[leg + 1 :]
            out[nk] = c
        return KTensor(self.ring, self.arity + 1, out)

    def counit_leg(self, leg: int) -> "KTensor":
        """Apply eps_R to one leg (eps of every monomial is 1)."""
        out: dict = {}
        for k, c in self.terms.items():
            nk = k[:leg] + k[leg + 1 :]
            s = out.get(nk)
            s = c if s is None else s + c
            if s:
                out[nk] = s
            else:
                out.pop(nk, None)
        return KTensor(self.ring, self.arity - 1, out)

    def antipode_leg(self, leg: int) -> "KTensor":
        n = self.ring.n
        out = {}
        for k, c in self.terms.items():
            nk = k[:leg] + (tuple((-e) % n for e in k[leg]),) + k[leg + 1 :]
            out[nk] = c
        return KTensor(self.ring, self.arity, out)

    def unit_leg(self, position: int) -> "KTensor":
        """Insert a trivial leg (tensor with 1) at the given position."""
        z = self.ring.zero_exp
        out = {}
        for k, c in self.terms.items():
            out[k[:position] + (z,) + k[position:]] = c
        return KTensor(self.ring, self.arity + 1, out)

    def sigma_all(self, w: Perm) -> "KTensor":
        """(sigma_w (x) ... (x) sigma_w) applied to every leg."""
        img = w.images
        out = {}
        for k, c in self.terms.items():
            nk = tuple(tuple(leg[img[i]] for i in range(len(leg))) for leg in k)
            out[nk] = c
        return KTensor(self.ring, self.arity, out)

    def tensor(self, other: "KTensor") -> "KTensor":
        if other.ring != self.ring:
            raise ContextMismatchError("tensor product across contexts")
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                out[ka + kb] = ca * cb
        return KTensor(self.ring, self.arity + other.arity, out)

    def multiply_legs(self) -> RingElem:
        """mu_R applied across all legs: multiply the legs together."""
        n = self.ring.n
        out: dict = {}
        for k, c in self.terms.items():
            key = tuple(sum(leg[i] for leg in k) % n for i in range(self.ring.m))
            s = out.get(key)
            s = c if s is None else s + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return RingElem(self.ring, out)

    def to_json(self) -> list:
        return [
            {"exponents": [list(leg) for leg in k], "coeff": c.to_json()}
            for k, c in self.sorted_terms()
        ]


def tensor_from_pair(a: RingElem, b: RingElem) -> KTensor:
    """a (x) b as an arity-2 tensor."""
    if a.ring != b.ring:
        raise ContextMismatchError("tensor product across contexts")
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            out[(ka, kb)] = ca * cb
    return KTensor(a.ring, 2, out)


# ---------------------------------------------------------------------------
# the canonical twist of B = K[Z_n] and its derived elements


def canonical_twist(B: GroupAlgebra) -> KTensor:
    """J = sum_k e_k (x) x^k = (1/n) sum_{i,j} q^{-ij} x^i (x) x^j in B (x) B."""
    if B.m != 1:
        raise ValueError("the canonical twist lives over the one-slot algebra B")
    inv_n = B.cyc.scalar(1) / B.cyc.scalar(B.n)
    terms = {}
    for i in range(B.n):
        for j in range(B.n):
            terms[((i,), (j,))] = B.cyc.q_pow(-i * j) * inv_n
    return KTensor(B, 2, terms)


def embed_pair(J: KTensor, i: int, j: int, R: GroupAlgebra) -> KTensor:
    """(e_i^m (x) e_j^m)(J): left legs into slot i, right legs into slot j."""
    if J.ring.m != 1 or J.ring.n != R.n or J.arity != 2:
        raise ContextMismatchError("embed_pair expects an arity-2 tensor over B")
    if not (1 <= i <= R.m and 1 <= j <= R.m and i != j):
        raise ValueError("slots out of range")
    out = {}
    for ((a,), (b,)), c in J.terms.items():
        left = [0] * R.m
        right = [0] * R.m
        left[i - 1] = a
        right[j - 1] = b
        out[(tuple(left), tuple(right))] = c
    return KTensor(R, 2, out)


def twist_Js(R: GroupAlgebra, k: int) -> KTensor:
    """J_{s_k} = (e_k^m (x) e_{k+1}^m)(J) = (1/n) sum q^{-ij} x_k^i (x) x_{k+1}^j."""
    if not 1 <= k <= R.m - 1:
        raise ValueError("transposition index out of range")
    B = GroupAlgebra(R.n, 1)
    return embed_pair(canonical_twist(B), k, k + 1, R)


def t_of(R: GroupAlgebra, k: int) -> RingElem:
    """t_k = mu_R(J_{s_k}) = (1/n) sum q^{-ij} x_k^i x_{k+1}^j."""
    return twist_Js(R, k).multiply_legs()


def t_inv_of(R: GroupAlgebra, k: int) -> RingElem:
    """Closed form t_k^{-1} = (1/n) sum q^{-ij} x_k^i x_{k+1}^{-j}."""
    if not 1 <= k <= R.m - 1:
        raise ValueError("transposition index out of range")
    n = R.n
    inv_n = R.cyc.scalar(1) / R.cyc.scalar(n)
    out: dict = {}
    for i in range(n):
        for j in range(n):
            key = [0] * R.m
            key[k - 1] = i
            key[k] = (-j) % n
            key = tuple(key)
            c = R.cyc.q_pow(-i * j) * inv_n
            s = out.get(key)
            out[key] = c if s is None else s + c
    return R.from_terms(out)


# ---------------------------------------------------------------------------
# inversion in R and its tensor powers via the character basis


def _fourier_inverse_terms(ring: GroupAlgebra, terms: dict, width: int) -> dict:
    """Invert an element of the group algebra of Z_n^width given sparse terms
    keyed by flat exponent tuples of that length."""
    n = ring.n
    cyc = ring.cyc
    chars = list(iproduct(range(n), repeat=width))
    eigen = []
    for chi in chars:
        v = cyc.zero
        for key, c in terms.items():
            v = v + c * cyc.q_pow(sum(x * y for x, y in zip(chi, key)))
        if v.is_zero():
            raise NotInvertibleError("element is not a unit of the group algebra")
        eigen.append(v.inv())
    inv_size = cyc.scalar(1) / cyc.scalar(n**width)
    out = {}
    for beta in chars:
        v = cyc.zero
        for chi, ev in zip(chars, eigen):
            v = v + ev * cyc.q_pow(-sum(x * y for x, y in zip(chi, beta)))
        v = v * inv_size
        if v:
            out[beta] = v
    return out


def ring_inverse(a: RingElem) -> RingElem:
    """Exact inverse of a unit of R.  Raises NotInvertibleError otherwise."""
    flat = _fourier_inverse_terms(a.ring, a.terms, a.ring.m)
    return RingElem(a.ring, flat)


def tensor_inverse(J: KTensor) -> KTensor:
    """Exact inverse of a unit of R^(tensor k)."""
    m = J.ring.m
    flat_terms = {tuple(e for leg in k for e in leg): c for k, c in J.terms.items()}
    inv_flat = _fourier_inverse_terms(J.ring, flat_terms, m * J.arity)
    out = {}
    for key, c in inv_flat.items():
        legs = tuple(key[i * m : (i + 1) * m] for i in range(J.arity))
        out[legs] = c
    return KTensor(J.ring, J.arity, out)


def check_tensor_invertible(J: KTensor) -> None:
    """Raise NotInvertibleError unless J is a unit: scan the character
    eigenvalues without reconstructing the inverse."""
    ring = J.ring
    cyc = ring.cyc
    n = ring.n
    items = [(tuple(e for leg in k for e in leg), c) for k, c in J.terms.items()]
    for chi in iproduct(range(n), repeat=ring.m * J.arity):
        v = cyc.zero
        for key, c in items:
            v = v + c * cyc.q_pow(sum(x * y for x, y in zip(chi, key)))
        if v.is_zero():
            raise NotInvertibleError("element is not a unit of the group algebra")


def tensor_is_invertible(J: KTensor) -> bool:
    try:
        check_tensor_invertible(J)
        return True
    except NotInvertibleError:
        return False
