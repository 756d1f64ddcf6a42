"""The Hopf algebra H_{n,m} = R #_gamma Sigma_m on the basis {x^alpha w-bar}.

Multiplication is the crossed product

    (x^alpha # w)(x^beta # v) = x^alpha sigma_w(x^beta) gamma(w, v) # w*v,

with gamma the operational 2-cocycle from kacpal.cocycle.  The coproduct of
a basis element is Delta(x^alpha # w) = (x^alpha (x) x^alpha) J(w) (w (x) w)
where J(w) is defined by the recursion J(id) = 1 (x) 1 and
J(s_i v) = J_i (sigma_i (x) sigma_i)(J(v)) over the canonical word of w.
The antipode is computed operationally, S(x^alpha # w) = S(w-bar) x^{-alpha}
with S(w-bar) the product of the generators of the reversed canonical word.

Structure constants are evaluated lazily per product and memoized by the
permutation pair; all values are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as iproduct

from .cocycle import WordCalculus
from .cyclotomic import CycScalar
from .errors import ContextMismatchError, SizeGuardError
from .group_ring import (
    GroupAlgebra,
    KTensor,
    RingElem,
    delta_ring,
    ring_inverse,
    tensor_from_pair,
    twist_Js,
)
from .symmetric import Perm, all_perms, canonical_word, cycle_perm

ALL_PAIRS_GUARD = 5000


class HopfAlgebra:
    """Context object for H_{n,m}; holds the base ring and all memo tables."""

    def __init__(self, n: int, m: int):
        if n < 2 or m < 2:
            raise ValueError("need n, m >= 2")
        self.n = n
        self.m = m
        self.ring = GroupAlgebra(n, m)
        self.cyc = self.ring.cyc
        self.words = WordCalculus(self.ring)
        self.perms = all_perms(m)
        self.dim = n**m * _factorial(m)
        self._j_cache: dict[Perm, KTensor] = {}
        self._sproduct: dict[tuple[Perm, Perm], tuple[Perm, list]] = {}
        self._antipode_word: dict[Perm, "HopfElem"] = {}
        self._antipode_basis: dict = {}
        self._pair_lhs: dict = {}
        self._pair_rhs: dict = {}

    # -- element constructors --------------------------------------------------

    def zero(self) -> "HopfElem":
        return HopfElem(self, {})

    def unit(self) -> "HopfElem":
        return self.basis_elem(self.ring.zero_exp, Perm.identity(self.m))

    def basis_elem(self, exps, w: Perm, coeff=None) -> "HopfElem":
        exps = tuple(e % self.n for e in exps)
        c = self.cyc.one if coeff is None else coeff
        if isinstance(c, int):
            c = self.cyc.scalar(c)
        return HopfElem(self, {(exps, w): c} if c else {})

    def x(self, i: int) -> "HopfElem":
        """The group-like generator x_i (1-based slot)."""
        exps = [0] * self.m
        exps[i - 1] = 1
        return self.basis_elem(exps, Perm.identity(self.m))

    def z(self, k: int) -> "HopfElem":
        """The generator z_k = s_k-bar."""
        return self.basis_elem(self.ring.zero_exp, Perm.transposition(self.m, k))

    def from_ring(self, a: RingElem) -> "HopfElem":
        ident = Perm.identity(self.m)
        return HopfElem(self, {(k, ident): c for k, c in a.terms.items()})

    def generators(self) -> list["HopfElem"]:
        return [self.x(i) for i in range(1, self.m + 1)] + [
            self.z(k) for k in range(1, self.m)
        ]

    def basis_keys(self) -> list:
        return [
            (exps, w) for exps in self.ring.exponent_vectors() for w in self.perms
        ]

    # -- structure constants ----------------------------------------------------

    def _single_product(self, w: Perm, v: Perm):
        """Template for (x^0 # w)(x^0 # v): target permutation and the sparse
        gamma(w, v) terms."""
        key = (w, v)
        out = self._sproduct.get(key)
        if out is None:
            g = self.words.cocycle(w, v)
            out = (w * v, list(g.terms.items()))
            self._sproduct[key] = out
        return out

    def hmul(self, a: "HopfElem", b: "HopfElem") -> "HopfElem":
        if a.algebra != self:
            raise ContextMismatchError("left factor from a different algebra")
        if b.algebra != self:
            raise ContextMismatchError("right factor from a different algebra")
        n = self.n
        rng = range(self.m)
        out: dict = {}
        for (ea, wa), ca in a.terms.items():
            img = wa.images
            for (eb, wb), cb in b.terms.items():
                c = ca * cb
                shifted = tuple((ea[i] + eb[img[i]]) % n for i in rng)
                wv, gamma_terms = self._single_product(wa, wb)
                for dg, cg in gamma_terms:
                    key = (tuple((shifted[i] + dg[i]) % n for i in rng), wv)
                    s = out.get(key)
                    s = c * cg if s is None else s + c * cg
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return HopfElem(self, out)

    def j_of_word(self, w: Perm) -> KTensor:
        """J(w) by recursion over the canonical word; cached."""
        out = self._j_cache.get(w)
        if out is None:
            word = canonical_word(w)
            if not word:
                out = KTensor(
                    self.ring, 2, {(self.ring.zero_exp,) * 2: self.cyc.one}
                )
            else:
                i = word[0]
                s_i = Perm.transposition(self.m, i)
                rest = s_i * w
                out = twist_Js(self.ring, i) * self.j_of_word(rest).sigma_all(s_i)
            self._j_cache[w] = out
        return out

    def coproduct(self, h: "HopfElem") -> "HTensor":
        n = self.n
        out: dict = {}
        for (e, w), c in h.terms.items():
            for (d1, d2), cj in self.j_of_word(w).terms.items():
                key = (
                    (tuple((e[i] + d1[i]) % n for i in range(self.m)), w),
                    (tuple((e[i] + d2[i]) % n for i in range(self.m)), w),
                )
                s = out.get(key)
                s = c * cj if s is None else s + c * cj
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return HTensor(self, out)

    def counit(self, h: "HopfElem"):
        out = self.cyc.zero
        for c in h.terms.values():
            out = out + c
        return out

    def antipode_word(self, w: Perm) -> "HopfElem":
        """S(w-bar): the product of generators of the reversed canonical word."""
        out = self._antipode_word.get(w)
        if out is None:
            out = self.unit()
            for i in reversed(canonical_word(w)):
                out = self.hmul(out, self.z(i))
            self._antipode_word[w] = out
        return out

    def antipode_basis(self, e, w: Perm) -> "HopfElem":
        out = self._antipode_basis.get((e, w))
        if out is None:
            neg = tuple((-x) % self.n for x in e)
            out = self.hmul(self.antipode_word(w), self.basis_elem(neg, Perm.identity(self.m)))
            self._antipode_basis[(e, w)] = out
        return out

    def antipode(self, h: "HopfElem") -> "HopfElem":
        out = self.zero()
        for (e, w), c in h.terms.items():
            out = out + self.antipode_basis(e, w).scale(c)
        return out

    # -- integral ----------------------------------------------------------------

    def integral(self) -> "HopfElem":
        """Lambda = (int_B)^(x m) sum_w w-bar, with int_B = (1/n) sum_i x^i."""
        inv = self.cyc.scalar(1) / self.cyc.scalar(self.n**self.m)
        terms = {}
        for exps in self.ring.exponent_vectors():
            for w in self.perms:
                terms[(exps, w)] = inv
        return HopfElem(self, terms)

    def verify_integral(self) -> "AxiomReport":
        report = AxiomReport(instance=f"H({self.n},{self.m})")
        lam = self.integral()
        eps_lam = self.counit(lam)
        report.add(
            "integral-counit",
            "eps(Lambda) = m!",
            eps_lam == self.cyc.scalar(_factorial(self.m)),
            None if eps_lam == self.cyc.scalar(_factorial(self.m)) else {"eps": eps_lam.to_json()},
        )
        witness = None
        ok = True
        for key in self.basis_keys():
            h = self.basis_elem(*key)
            if self.hmul(h, lam) != lam or self.hmul(lam, h) != lam:
                ok = False
                witness = {"basis": _key_json(key)}
                break
        report.add("integral-invariance", "h Lambda = eps(h) Lambda = Lambda h", ok, witness)
        return report

    # -- axiom verification --------------------------------------------------------

    def _pair_tensors(self, w: Perm, v: Perm) -> tuple[KTensor, KTensor]:
        """For basis elements with permutations (w, v) and any exponents, both
        sides of Delta(ab) = Delta(a)Delta(b) equal a common translate of

            lhs(w,v) = Delta_R(gamma(w,v)) J(wv)
            rhs(w,v) = J(w) (sigma_w (x) sigma_w)(J(v)) (gamma(w,v) (x) gamma(w,v)),

        so the pair check reduces to these memoized tensors."""
        key = (w, v)
        lhs = self._pair_lhs.get(key)
        if lhs is None:
            g = self.words.cocycle(w, v)
            lhs = delta_ring(g) * self.j_of_word(w * v)
            rhs = (
                self.j_of_word(w)
                * self.j_of_word(v).sigma_all(w)
                * tensor_from_pair(g, g)
            )
            self._pair_lhs[key] = lhs
            self._pair_rhs[key] = rhs
        return lhs, self._pair_rhs[key]

    def _delta_mult_pair_ok(self, a_key, b_key) -> bool:
        (ea, wa), (eb, wb) = a_key, b_key
        img = wa.images
        delta = tuple((ea[i] + eb[img[i]]) % self.n for i in range(self.m))
        lhs, rhs = self._pair_tensors(wa, wb)
        if lhs is rhs or lhs == rhs:
            # translation by a group-like is a key bijection: translates agree
            return True
        n = self.n
        t_l = {
            (
                tuple((k[0][i] + delta[i]) % n for i in range(self.m)),
                tuple((k[1][i] + delta[i]) % n for i in range(self.m)),
            ): c
            for k, c in lhs.terms.items()
        }
        t_r = {
            (
                tuple((k[0][i] + delta[i]) % n for i in range(self.m)),
                tuple((k[1][i] + delta[i]) % n for i in range(self.m)),
            ): c
            for k, c in rhs.terms.items()
        }
        return t_l == t_r

    def verify_axioms(self, scope: str = "auto", seed: int = 0, sample_size: int = 10000) -> "AxiomReport":
        """Exact verification of the Hopf axioms.

        scope "all": associativity over all basis triples and
        Delta-multiplicativity over all basis pairs; "sampled": seeded samples
        of the given size instead.  Coassociativity, counit, antipode and
        S^2 = id always run over every basis element."""
        basis = self.basis_keys()
        if scope == "auto":
            scope = "all" if self.dim <= 64 else "sampled"
        if scope == "all" and self.dim > ALL_PAIRS_GUARD:
            raise SizeGuardError(
                f"all-pairs sweep refused for dim {self.dim} > {ALL_PAIRS_GUARD}"
            )
        report = AxiomReport(
            instance=f"H({self.n},{self.m})", scope=scope, seed=seed if scope == "sampled" else None
        )
        report.add("dimension", "basis count = n^m m!", len(basis) == self.dim, None)

        rng = random.Random(seed)
        if scope == "all":
            triples = iproduct(basis, repeat=3)
            pairs = iproduct(basis, repeat=2)
            n_triples = len(basis) ** 3
            n_pairs = len(basis) ** 2
        else:
            triples = (
                (rng.choice(basis), rng.choice(basis), rng.choice(basis))
                for _ in range(sample_size)
            )
            # sampled pairs plus every generator pair
            gk = [next(iter(g.terms)) for g in self.generators()]
            sampled_pairs = [
                (rng.choice(basis), rng.choice(basis)) for _ in range(sample_size)
            ]
            pairs = sampled_pairs + [(a, b) for a in gk for b in gk]
            n_triples = sample_size
            n_pairs = len(pairs)

        ok = True
        witness = None
        for ka, kb, kc in triples:
            a, b, c = (self.basis_elem(*k) for k in (ka, kb, kc))
            if self.hmul(self.hmul(a, b), c) != self.hmul(a, self.hmul(b, c)):
                ok = False
                witness = {"triple": [_key_json(k) for k in (ka, kb, kc)]}
                break
        report.add("associativity", "(ab)c = a(bc) on basis triples", ok, witness, checked=n_triples)

        ok = True
        witness = None
        for ka, kb in pairs:
            if not self._delta_mult_pair_ok(ka, kb):
                ok = False
                witness = {"pair": [_key_json(ka), _key_json(kb)]}
                break
        report.add(
            "comultiplicativity",
            "Delta(ab) = Delta(a)Delta(b) on basis pairs",
            ok,
            witness,
            checked=n_pairs,
        )

        # direct end-to-end spot check through the public tensor product,
        # one pair per permutation pair
        ok = True
        witness = None
        for w in self.perms:
            for v in self.perms:
                a = self.basis_elem(self.ring.zero_exp, w)
                b = self.basis_elem(self.ring.zero_exp, v)
                if self.coproduct(self.hmul(a, b)) != self.coproduct(a) * self.coproduct(b):
                    ok = False
                    witness = {"pair": [list(w.one_line()), list(v.one_line())]}
                    break
            if not ok:
                break
        report.add(
            "comultiplicativity-direct",
            "Delta(w v) = Delta(w)Delta(v) via the full tensor product",
            ok,
            witness,
            checked=len(self.perms) ** 2,
        )

        ok = True
        witness = None
        for key in basis:
            d = self.coproduct(self.basis_elem(*key))
            lhs: dict = {}
            rhs: dict = {}
            for (k1, k2), c in d.terms.items():
                for (k1a, k1b), c1 in self.coproduct(self.basis_elem(*k1)).terms.items():
                    kk = (k1a, k1b, k2)
                    s = lhs.get(kk)
                    s = c * c1 if s is None else s + c * c1
                    if s:
                        lhs[kk] = s
                    else:
                        lhs.pop(kk, None)
                for (k2a, k2b), c2 in self.coproduct(self.basis_elem(*k2)).terms.items():
                    kk = (k1, k2a, k2b)
                    s = rhs.get(kk)
                    s = c * c2 if s is None else s + c * c2
                    if s:
                        rhs[kk] = s
                    else:
                        rhs.pop(kk, None)
            if lhs != rhs:
                ok = False
                witness = {"basis": _key_json(key)}
                break
        report.add(
            "coassociativity",
            "(Delta(x)id)Delta = (id(x)Delta)Delta on all basis elements",
            ok,
            witness,
            checked=len(basis),
        )

        ok = True
        witness = None
        for key in basis:
            h = self.basis_elem(*key)
            d = self.coproduct(h)
            left = self.zero()
            right = self.zero()
            for (k1, k2), c in d.terms.items():
                left = left + self.basis_elem(*k2).scale(c)  # (eps(x)id), eps(basis)=1
                right = right + self.basis_elem(*k1).scale(c)
            if left != h or right != h:
                ok = False
                witness = {"basis": _key_json(key)}
                break
        report.add(
            "counit",
            "(eps(x)id)Delta = id = (id(x)eps)Delta",
            ok,
            witness,
            checked=len(basis),
        )

        ok = True
        witness = None
        for key in basis:
            h = self.basis_elem(*key)
            d = self.coproduct(h)
            left = self.zero()
            right = self.zero()
            for ((e1, w1), (e2, w2)), c in d.terms.items():
                left = left + self.hmul(
                    self.antipode_basis(e1, w1), self.basis_elem(e2, w2)
                ).scale(c)
                right = right + self.hmul(
                    self.basis_elem(e1, w1), self.antipode_basis(e2, w2)
                ).scale(c)
            target = self.unit()  # eps(basis) = 1
            if left != target or right != target:
                ok = False
                witness = {"basis": _key_json(key)}
                break
        report.add(
            "antipode",
            "mu(S(x)id)Delta = eta eps = mu(id(x)S)Delta",
            ok,
            witness,
            checked=len(basis),
        )

        ok = True
        witness = None
        for key in basis:
            h = self.basis_elem(*key)
            if self.antipode(self.antipode(h)) != h:
                ok = False
                witness = {"basis": _key_json(key)}
                break
        report.add("involution", "S^2 = id on the basis", ok, witness, checked=len(basis))
        return report

    # -- the cyclic Hopf subalgebra R #_gamma <s> -----------------------------------

    def cyclic_subalgebra(self) -> "CyclicSubalgebra":
        s = cycle_perm(self.m)
        theta = self.basis_elem(self.ring.zero_exp, s)
        report = AxiomReport(instance=f"H({self.n},{self.m}) cyclic subalgebra")

        powers = [self.unit()]
        for _ in range(self.m):
            powers.append(self.hmul(powers[-1], theta))

        # theta^k = (prod_{i<k} gamma(s^i, s)) # (s^k)-bar
        ok = True
        witness = None
        coeff = self.ring.one
        sk = Perm.identity(self.m)
        for k in range(1, self.m + 1):
            coeff = coeff * self.words.cocycle(sk, s)
            sk = sk * s
            expected = self.from_ring(coeff) if sk.is_identity() else HopfElem(
                self, {(key, sk): c for key, c in coeff.terms.items()}
            )
            if powers[k] != expected:
                ok = False
                witness = {"k": k}
                break
        report.add("theta-powers", "theta^k = prod gamma(s^i, s) (s^k)-bar", ok, witness)

        t = self.ring.one
        sk = s
        for _ in range(1, self.m):
            t = t * self.words.cocycle(sk, s)
            sk = sk * s
        ok = powers[self.m] == self.from_ring(t)
        report.add("theta-order", "theta^m = t in R", ok, None if ok else {"t": t.to_json()})

        try:
            t_inv = ring_inverse(t)
            invertible = True
        except Exception:
            t_inv = None
            invertible = False
        report.add("t-invertible", "t is a unit of R", invertible, None)

        if invertible:
            g = self.words.cocycle(_power(s, self.m - 1), s)
            rhs = self.hmul(self.from_ring(t_inv * g), powers[self.m - 1])
            ok = self.antipode(theta) == rhs
            report.add(
                "antipode-theta",
                "S(theta) = t^{-1} gamma(s^{m-1}, s) theta^{m-1}",
                ok,
                None,
            )

        s_powers = set()
        p = Perm.identity(self.m)
        for _ in range(self.m):
            s_powers.add(p)
            p = p * s
        ok = True
        witness = None
        for k in range(self.m):
            for (k1, k2) in self.coproduct(powers[k]).terms:
                if k1[1] not in s_powers or k2[1] not in s_powers:
                    ok = False
                    witness = {"k": k}
                    break
            if not ok:
                break
        report.add("hopf-subalgebra", "Delta(theta^k) lies in H'(x)H'", ok, witness)

        ok = self.coproduct(theta) == HTensor(
            self,
            {
                ((d1, s), (d2, s)): c
                for (d1, d2), c in self.j_of_word(s).terms.items()
            },
        )
        report.add("coproduct-theta", "Delta(theta) = J(s)(theta(x)theta)", ok, None)

        ok = True
        witness = None
        for i in range(1, self.m + 1):
            j = i % self.m + 1
            if self.hmul(theta, self.x(i)) != self.hmul(self.x(j), theta):
                ok = False
                witness = {"i": i}
                break
        report.add("theta-conjugation", "theta x_i = x_{i+1} theta (cyclic)", ok, witness)

        dim = self.m * self.n**self.m
        report.add("subalgebra-dimension", "dim H' = m n^m", len(s_powers) == self.m, None)
        labels = []
        p = Perm.identity(self.m)
        for _ in range(self.m):
            labels.append(p)
            p = p * s
        basis_labels = [
            (exps, u) for exps in self.ring.exponent_vectors() for u in labels
        ]
        return CyclicSubalgebra(
            algebra=self,
            s=s,
            theta=theta,
            t=t,
            t_inverse=t_inv,
            antipode_theta=self.antipode(theta),
            basis_labels=basis_labels,
            dim=dim,
            report=report,
        )

    def __eq__(self, other):
        return isinstance(other, HopfAlgebra) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash(("HopfAlgebra", self.n, self.m))

    def __repr__(self):
        return f"HopfAlgebra(n={self.n}, m={self.m})"


def _factorial(m: int) -> int:
    out = 1
    for k in range(2, m + 1):
        out *= k
    return out


def _power(p: Perm, k: int) -> Perm:
    out = Perm.identity(p.size)
    for _ in range(k):
        out = out * p
    return out


def _key_json(key) -> dict:
    exps, w = key
    return {"exponents": list(exps), "perm": list(w.one_line())}


class HopfElem:
    """Sparse element of H: map from (exponent vector, Perm) to scalars."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other):
        if isinstance(other, int):
            return self.algebra.unit().scale(self.algebra.cyc.scalar(other))
        if not isinstance(other, HopfElem):
            return NotImplemented
        if other.algebra != self.algebra:
            raise ContextMismatchError("elements of different Hopf algebras")
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
        return HopfElem(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return HopfElem(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.algebra.hmul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return self._check(other) * self

    def scale(self, c) -> "HopfElem":
        if isinstance(c, int):
            c = self.algebra.cyc.scalar(c)
        if not c:
            return HopfElem(self.algebra, {})
        return HopfElem(self.algebra, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, e: int) -> "HopfElem":
        out = self.algebra.unit()
        for _ in range(e):
            out = self.algebra.hmul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._check(other)
        if not isinstance(other, HopfElem):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra.n, self.algebra.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1].images))

    def to_json(self) -> list:
        return [
            {
                "exponents": list(e),
                "perm": list(w.one_line()),
                "word": list(canonical_word(w)),
                "coeff": c.to_json(),
            }
            for (e, w), c in self.sorted_terms()
        ]

    def __repr__(self):
        def mono(e, w):
            parts = [f"x{i+1}^{v}" if v != 1 else f"x{i+1}" for i, v in enumerate(e) if v]
            parts += [f"z{i}" for i in canonical_word(w)]
            return "*".join(parts) if parts else "1"

        body = " + ".join(f"({c})*{mono(e, w)}" for (e, w), c in self.sorted_terms())
        return body if body else "0"


class HTensor:
    """Sparse element of H (x) H keyed by pairs of basis keys."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HopfAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other: "HTensor"):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return HTensor(self.algebra, out)

    def __sub__(self, other: "HTensor"):
        return self + HTensor(self.algebra, {k: -c for k, c in other.terms.items()})

    def __mul__(self, other: "HTensor"):
        """Componentwise product in H (x) H."""
        alg = self.algebra
        n, m = alg.n, alg.m
        out: dict = {}
        for (kl1, kr1), c1 in self.terms.items():
            img_l = kl1[1].images
            img_r = kr1[1].images
            for (kl2, kr2), c2 in other.terms.items():
                c = c1 * c2
                sl = tuple((kl1[0][i] + kl2[0][img_l[i]]) % n for i in range(m))
                sr = tuple((kr1[0][i] + kr2[0][img_r[i]]) % n for i in range(m))
                wl, gl = alg._single_product(kl1[1], kl2[1])
                wr, gr = alg._single_product(kr1[1], kr2[1])
                for dgl, cgl in gl:
                    left_key = (tuple((sl[i] + dgl[i]) % n for i in range(m)), wl)
                    ccl = c * cgl
                    for dgr, cgr in gr:
                        key = (
                            left_key,
                            (tuple((sr[i] + dgr[i]) % n for i in range(m)), wr),
                        )
                        s = out.get(key)
                        s = ccl * cgr if s is None else s + ccl * cgr
                        if s:
                            out[key] = s
                        else:
                            out.pop(key, None)
        return HTensor(alg, out)

    def __eq__(self, other):
        if not isinstance(other, HTensor):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list:
        def kj(k):
            return {"exponents": list(k[0]), "perm": list(k[1].one_line())}

        items = sorted(
            self.terms.items(),
            key=lambda kv: (kv[0][0][0], kv[0][0][1].images, kv[0][1][0], kv[0][1][1].images),
        )
        return [{"left": kj(k1), "right": kj(k2), "coeff": c.to_json()} for (k1, k2), c in items]


@dataclass
class CyclicSubalgebra:
    """H' = R #_gamma <s> for the m-cycle s; theta generates it over R.
    Basis {x^alpha theta^k, 0 <= k < m} labeled by (exponents, s^k)."""

    algebra: HopfAlgebra
    s: Perm
    theta: HopfElem
    t: RingElem
    t_inverse: RingElem | None
    antipode_theta: HopfElem
    basis_labels: list
    dim: int
    report: "AxiomReport"


@dataclass
class AxiomReport:
    instance: str
    scope: str | None = None
    seed: int | None = None
    checks: list = field(default_factory=list)

    def add(self, name: str, identity: str, ok: bool, witness, checked: int | None = None):
        self.checks.append(
            {
                "name": name,
                "identity": identity,
                "status": "pass" if ok else "fail",
                "witness": witness,
                "checked": checked,
            }
        )

    def add_skipped(self, name: str, identity: str, reason: str):
        self.checks.append(
            {
                "name": name,
                "identity": identity,
                "status": "skipped",
                "witness": {"reason": reason},
                "checked": None,
            }
        )

    @property
    def ok(self) -> bool:
        return not any(c["status"] == "fail" for c in self.checks)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {"instance": self.instance, "checks": self.checks, "ok": self.ok}
        if self.scope is not None:
            out["scope"] = self.scope
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def embedding_map(h: HopfElem, target: HopfAlgebra) -> HopfElem:
    """x_i -> x_i, z_i -> z_i from H_{n,m} into H_{n,m+1}: append a trivial
    tensor slot and extend permutations by a fixed point."""
    src = h.algebra
    if target.n != src.n or target.m != src.m + 1:
        raise ContextMismatchError("target must be H_{n,m+1}")
    out = {}
    for (e, w), c in h.terms.items():
        out[(e + (0,), Perm(w.images + (src.m,)))] = c
    return HopfElem(target, out)


def embedding_check(n: int, m: int) -> AxiomReport:
    """Verify that the generator map intertwines product, coproduct, counit
    and antipode between H_{n,m} and H_{n,m+1}."""
    small = HopfAlgebra(n, m)
    big = HopfAlgebra(n, m + 1)
    report = AxiomReport(instance=f"H({n},{m}) -> H({n},{m+1})")
    basis = small.basis_keys()

    ok = True
    witness = None
    for ka in basis:
        for kb in basis:
            a, b = small.basis_elem(*ka), small.basis_elem(*kb)
            lhs = embedding_map(small.hmul(a, b), big)
            rhs = big.hmul(embedding_map(a, big), embedding_map(b, big))
            if lhs != rhs:
                ok = False
                witness = {"pair": [_key_json(ka), _key_json(kb)]}
                break
        if not ok:
            break
    report.add("embedding-product", "phi(ab) = phi(a)phi(b)", ok, witness, checked=len(basis) ** 2)

    ok = True
    witness = None
    for key in basis:
        h = small.basis_elem(*key)
        lhs = {}
        for (k1, k2), c in small.coproduct(h).terms.items():
            e1 = embedding_map(small.basis_elem(*k1), big)
            e2 = embedding_map(small.basis_elem(*k2), big)
            kk = (next(iter(e1.terms)), next(iter(e2.terms)))
            s = lhs.get(kk)
            s = c if s is None else s + c
            if s:
                lhs[kk] = s
            else:
                lhs.pop(kk, None)
        if HTensor(big, lhs) != big.coproduct(embedding_map(h, big)):
            ok = False
            witness = {"basis": _key_json(key)}
            break
    report.add("embedding-coproduct", "(phi(x)phi)Delta = Delta phi", ok, witness, checked=len(basis))

    ok = True
    witness = None
    for key in basis:
        h = small.basis_elem(*key)
        if small.counit(h) != big.counit(embedding_map(h, big)):
            ok = False
            witness = {"basis": _key_json(key)}
            break
    report.add("embedding-counit", "eps phi = eps", ok, witness, checked=len(basis))

    ok = True
    witness = None
    for key in basis:
        h = small.basis_elem(*key)
        if embedding_map(small.antipode(h), big) != big.antipode(embedding_map(h, big)):
            ok = False
            witness = {"basis": _key_json(key)}
            break
    report.add("embedding-antipode", "phi S = S phi", ok, witness, checked=len(basis))
    return report
