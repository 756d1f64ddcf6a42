"""The quantum polynomial algebra A_{a,b} with its H_{n,m}-module-algebra
structure, truncated at a configurable degree bound.

Relations u_i u_j = r_{ij} u_j u_i with r_ii = 1, r_ij = lambda^{j-i-1} mu
for i < j (lambda = q^{b^2-ab}, mu = p^{b^2-a^2}) and r_ij = r_ji^{-1}
otherwise.  Monomials are kept normal-ordered, u_1^{a_1} ... u_m^{a_m}.

Generators act by the degree-one module V_{a,b}; the action on a degree-k
monomial expands the iterated coproduct of the acting element, one leg per
letter, then re-normal-orders.  Iterated coproduct expansions are cached per
(permutation, degree), and whole-operator matrices per (element, degree).
"""

from __future__ import annotations

import random
import warnings

from .cyclotomic import CycScalar
from .errors import ContextMismatchError
from .hopf import AxiomReport, HopfAlgebra, HopfElem
from .linalg import Mat, kernel_basis, rref
from .reps import RepParams, inner_faithful_bruteforce, inner_faithful_criterion
from .symmetric import Perm, canonical_word, cycle_perm


def monomials_of_degree(m: int, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree k in graded lexicographic order with
    u_1 > u_2 > ... (descending lex), so degree one lists u_1, ..., u_m."""
    if m == 1:
        return [(k,)]
    out = []
    for first in range(k + 1):
        for rest in monomials_of_degree(m - 1, k - first):
            out.append((first,) + rest)
    return sorted(out, reverse=True)


class QuantumPolyAlgebra:
    def __init__(self, hopf: HopfAlgebra, a: int, b: int, degree_bound: int | None = None):
        self.hopf = hopf
        self.n = hopf.n
        self.m = hopf.m
        self.a = a % self.n
        self.b = b % self.n
        if self.a == self.b:
            warnings.warn(
                "a = b mod n: the module-algebra statement assumes a != b",
                stacklevel=2,
            )
        self.ctx = hopf.cyc
        self.degree_bound = degree_bound if degree_bound is not None else 2 * self.n
        b2 = self.b * self.b
        self.lam = self.ctx.q_pow(b2 - self.a * self.b)
        self.mu = self.ctx.p_pow(b2 - self.a * self.a)
        self._r: dict[tuple[int, int], CycScalar] = {}
        for i in range(1, self.m + 1):
            for j in range(1, self.m + 1):
                if i == j:
                    self._r[(i, j)] = self.ctx.one
                elif i < j:
                    self._r[(i, j)] = self.lam ** (j - i - 1) * self.mu
        for i in range(1, self.m + 1):
            for j in range(1, i):
                self._r[(i, j)] = self._r[(j, i)].inv()
        self._delta_power: dict = {}
        self._line_action: dict = {}
        self._op_cache: dict = {}

    # -- relation data ---------------------------------------------------------

    def r(self, i: int, j: int) -> CycScalar:
        return self._r[(i, j)]

    def r_matrix(self) -> list[list[CycScalar]]:
        return [[self._r[(i, j)] for j in range(1, self.m + 1)] for i in range(1, self.m + 1)]

    # -- elements ----------------------------------------------------------------

    def zero(self) -> "QpaElem":
        return QpaElem(self, {})

    def one(self) -> "QpaElem":
        return QpaElem(self, {(0,) * self.m: self.ctx.one})

    def monomial(self, exps, coeff=None) -> "QpaElem":
        exps = tuple(exps)
        if len(exps) != self.m or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        if sum(exps) > self.degree_bound:
            raise ValueError("degree overflow beyond the truncation bound")
        c = self.ctx.one if coeff is None else coeff
        if isinstance(c, int):
            c = self.ctx.scalar(c)
        return QpaElem(self, {exps: c} if c else {})

    def u(self, i: int) -> "QpaElem":
        exps = [0] * self.m
        exps[i - 1] = 1
        return self.monomial(exps)

    def normal_order(self, word) -> "QpaElem":
        """Sort a generator word into normal order; each adjacent swap
        u_j u_i -> r_{ji} u_i u_j (j > i) multiplies the coefficient by r_{ji}."""
        letters = list(word)
        if len(letters) > self.degree_bound:
            raise ValueError("degree overflow beyond the truncation bound")
        coeff = self.ctx.one
        changed = True
        while changed:
            changed = False
            for p in range(len(letters) - 1):
                if letters[p] > letters[p + 1]:
                    coeff = coeff * self._r[(letters[p], letters[p + 1])]
                    letters[p], letters[p + 1] = letters[p + 1], letters[p]
                    changed = True
        exps = [0] * self.m
        for i in letters:
            exps[i - 1] += 1
        return self.monomial(exps, coeff)

    def _swap_factor(self, ea, eb) -> CycScalar:
        """Scalar from normal-ordering u^ea * u^eb: each beta-letter u_i moves
        left past every alpha-letter u_k with k > i."""
        out = self.ctx.one
        for i in range(1, self.m + 1):
            bi = eb[i - 1]
            if not bi:
                continue
            for k in range(i + 1, self.m + 1):
                ak = ea[k - 1]
                if ak:
                    out = out * self._r[(k, i)] ** (ak * bi)
        return out

    # -- the H-action --------------------------------------------------------------

    def _z_on_letter(self, k: int, j: int) -> tuple[CycScalar, int]:
        """z_k . u_j from the degree-one module."""
        if j == k:
            return self.ctx.q_pow(self.a * self.b), k + 1
        if j == k + 1:
            return self.ctx.one, k
        return self.ctx.p_pow(self.b * self.b), j

    def line_action(self, w: Perm) -> list[tuple[CycScalar, int]]:
        """w-bar . u_j = scalar * u_{j'}; index j is 1-based (list entry j-1)."""
        out = self._line_action.get(w)
        if out is None:
            out = []
            word = canonical_word(w)
            for j in range(1, self.m + 1):
                c = self.ctx.one
                cur = j
                for k in reversed(word):
                    c2, cur = self._z_on_letter(k, cur)
                    c = c * c2
                out.append((c, cur))
            self._line_action[w] = out
        return out

    def _x_scalar(self, exps, j: int) -> CycScalar:
        """x^exps . u_j = q^{a exps_j + b sum_{l != j} exps_l} u_j."""
        e = self.a * exps[j - 1] + self.b * (sum(exps) - exps[j - 1])
        return self.ctx.q_pow(e)

    def delta_power(self, w: Perm, k: int) -> list[tuple[CycScalar, tuple]]:
        """Iterated coproduct Delta^{(k-1)}(w-bar): list of (coeff, leg exponent
        vectors); every leg carries the same permutation w."""
        key = (w, k)
        out = self._delta_power.get(key)
        if out is None:
            if k == 1:
                out = [(self.ctx.one, ((0,) * self.m,))]
            else:
                n = self.n
                prev = self.delta_power(w, k - 1)
                j_terms = list(self.hopf.j_of_word(w).terms.items())
                out = []
                for c, legs in prev:
                    last = legs[-1]
                    for (d1, d2), cj in j_terms:
                        out.append(
                            (
                                c * cj,
                                legs[:-1]
                                + (
                                    tuple((last[i] + d1[i]) % n for i in range(self.m)),
                                    tuple((last[i] + d2[i]) % n for i in range(self.m)),
                                ),
                            )
                        )
            self._delta_power[key] = out
        return out

    def act(self, h: HopfElem, f: "QpaElem") -> "QpaElem":
        """h . f through the iterated coproduct, one leg per letter."""
        if h.algebra != self.hopf:
            raise ContextMismatchError("acting element from a different algebra")
        n = self.n
        out = self.zero()
        for exps_f, c_f in f.terms.items():
            k = sum(exps_f)
            if k == 0:
                out = out + self.monomial(exps_f, self.hopf.counit(h) * c_f)
                continue
            word = [i + 1 for i, e in enumerate(exps_f) for _ in range(e)]
            for (e_h, w), c_h in h.terms.items():
                lines = self.line_action(w)
                base = c_h * c_f
                for c_t, legs in self.delta_power(w, k):
                    scalar = base * c_t
                    new_letters = []
                    dead = False
                    for leg, j in zip(legs, word):
                        c_line, j2 = lines[j - 1]
                        total = tuple((leg[i] + e_h[i]) % n for i in range(self.m))
                        scalar = scalar * c_line * self._x_scalar(total, j2)
                        if not scalar:
                            dead = True
                            break
                        new_letters.append(j2)
                    if not dead:
                        out = out + self.normal_order(new_letters).scale(scalar)
        return out

    def monomials(self, k: int) -> list[tuple[int, ...]]:
        return monomials_of_degree(self.m, k)

    def action_matrix(self, h: HopfElem, k: int) -> Mat:
        """The exact operator of h on the degree-k monomial space."""
        key = (_elem_key(h), k)
        out = self._op_cache.get(key)
        if out is None:
            mons = self.monomials(k)
            index = {mon: i for i, mon in enumerate(mons)}
            cols = []
            for mon in mons:
                res = self.act(h, self.monomial(mon))
                col = [self.ctx.zero] * len(mons)
                for e, c in res.terms.items():
                    col[index[e]] = c
                cols.append(col)
            out = Mat(self.ctx, [list(row) for row in zip(*cols)])
            self._op_cache[key] = out
        return out

    def act_monomial_cached(self, h: HopfElem, mon: tuple) -> "QpaElem":
        """h . u^mon through the cached degree operator."""
        k = sum(mon)
        mat = self.action_matrix(h, k)
        mons = self.monomials(k)
        j = mons.index(mon)
        return QpaElem(
            self, {mons[i]: mat[i, j] for i in range(len(mons)) if mat[i, j]}
        )

    # -- verification -----------------------------------------------------------

    def module_algebra_check(
        self,
        degree: int | None = None,
        sample_elements: int = 3,
        seed: int = 0,
        delta_terms=None,
    ) -> AxiomReport:
        """Verify h.(fg) = sum (h_(1).f)(h_(2).g) for h over the algebra
        generators plus a seeded sample of basis elements, and f, g over all
        monomial pairs with deg f + deg g <= degree; also h.1 = eps(h)1.

        delta_terms overrides the coproduct expansion of the acting element
        (an iterable of ((key1, key2), coeff)); used by negative controls."""
        d = self.degree_bound if degree is None else degree
        if d > self.degree_bound:
            raise ValueError("degree exceeds the truncation bound")
        hopf = self.hopf
        if delta_terms is None:
            delta_terms = lambda h: hopf.coproduct(h).terms.items()  # noqa: E731
        report = AxiomReport(
            instance=f"A({self.a},{self.b}) over H({self.n},{self.m})", seed=seed
        )
        hs = [(f"x{i}", hopf.x(i)) for i in range(1, self.m + 1)]
        hs += [(f"z{k}", hopf.z(k)) for k in range(1, self.m)]
        rng = random.Random(seed)
        basis = hopf.basis_keys()
        for idx in range(sample_elements):
            key = rng.choice(basis)
            hs.append((f"basis{idx}:{key[0]}#{key[1].one_line()}", hopf.basis_elem(*key)))

        ok = True
        witness = None
        for name, h in hs:
            if self.act(h, self.one()) != self.one().scale(hopf.counit(h)):
                ok = False
                witness = {"element": name}
                break
        report.add("unit-action", "h . 1 = eps(h) 1", ok, witness)

        pairs = [
            (mf, mg)
            for kf in range(d + 1)
            for kg in range(d + 1 - kf)
            for mf in self.monomials(kf)
            for mg in self.monomials(kg)
        ]
        ok = True
        witness = None
        checked = 0
        for name, h in hs:
            dterms = [
                ((hopf.basis_elem(*k1), hopf.basis_elem(*k2)), c)
                for (k1, k2), c in delta_terms(h)
            ]
            for mf, mg in pairs:
                f = self.monomial(mf)
                g = self.monomial(mg)
                fg = f * g
                ((e_fg, c_fg),) = fg.terms.items()
                lhs = self.act_monomial_cached(h, e_fg).scale(c_fg)
                rhs = self.zero()
                for (h1, h2), c in dterms:
                    rhs = rhs + (
                        self.act_monomial_cached(h1, mf) * self.act_monomial_cached(h2, mg)
                    ).scale(c)
                checked += 1
                if lhs != rhs:
                    ok = False
                    witness = {
                        "element": name,
                        "f": list(mf),
                        "g": list(mg),
                        "lhs": lhs.to_json(),
                        "rhs": rhs.to_json(),
                    }
                    break
            if not ok:
                break
        report.add(
            "module-algebra",
            "h.(fg) = sum (h_(1).f)(h_(2).g)",
            ok,
            witness,
            checked=checked,
        )
        return report

    def subalgebra_generators(self, subalgebra: str) -> list[tuple[str, HopfElem]]:
        hopf = self.hopf
        gens = [(f"x{i}", hopf.x(i)) for i in range(1, self.m + 1)]
        if subalgebra == "full":
            gens += [(f"z{k}", hopf.z(k)) for k in range(1, self.m)]
        elif subalgebra == "cyclic":
            gens.append(("theta", hopf.basis_elem(hopf.ring.zero_exp, cycle_perm(self.m))))
        elif subalgebra == "ring":
            pass
        else:
            raise ValueError("subalgebra must be full, cyclic or ring")
        return gens

    def _subalgebra_integral(self, subalgebra: str) -> HopfElem:
        """Lambda' = int_R sum over the subgroup labels; a two-sided integral
        of the corresponding subalgebra."""
        hopf = self.hopf
        if subalgebra == "full":
            return hopf.integral()
        inv = self.ctx.scalar(1) / self.ctx.scalar(self.n**self.m)
        if subalgebra == "ring":
            labels = [Perm.identity(self.m)]
        else:
            labels = []
            s = cycle_perm(self.m)
            p = Perm.identity(self.m)
            for _ in range(self.m):
                labels.append(p)
                p = p * s
        terms = {}
        for exps in hopf.ring.exponent_vectors():
            for w in labels:
                terms[(exps, w)] = inv
        return HopfElem(hopf, terms)

    def invariants(self, subalgebra: str, degree: int) -> dict[int, list["QpaElem"]]:
        """Exact basis (reduced echelon form) of the invariant space in each
        degree k <= degree: the joint kernel of (g - eps(g)) over the chosen
        generators."""
        gens = self.subalgebra_generators(subalgebra)
        out: dict[int, list[QpaElem]] = {}
        for k in range(degree + 1):
            mons = self.monomials(k)
            dim = len(mons)
            rows = []
            for _, g in gens:
                mat = self.action_matrix(g, k)
                eps_g = self.hopf.counit(g)
                for i in range(dim):
                    row = [
                        mat[i, j] - eps_g if i == j else mat[i, j] for j in range(dim)
                    ]
                    rows.append(row)
            kern = kernel_basis(rows, dim, self.ctx)
            basis_rows = rref(kern, self.ctx)[0] if kern else []
            out[k] = [
                QpaElem(self, {mons[j]: v[j] for j in range(dim) if v[j]})
                for v in basis_rows
            ]
        return out

    def invariants_oracle(self, subalgebra: str, degree: int) -> dict[int, list[list[CycScalar]]]:
        """Independent route: the invariant space is the image of the
        normalized integral projector rho_k(Lambda')/eps(Lambda').  Returns
        the canonical RREF rows of the column space per degree."""
        lam = self._subalgebra_integral(subalgebra)
        eps_lam = self.hopf.counit(lam)
        out = {}
        for k in range(degree + 1):
            mat = self.action_matrix(lam, k)
            cols = [list(col) for col in zip(*mat.rows)]
            red = rref(cols, self.ctx)[0] if cols else []
            out[k] = red
            # the projector must be idempotent after normalization
            proj = mat.scale(eps_lam.inv())
            assert proj * proj == proj, "integral projector failed idempotence"
        return out

    def containment_check(self, degree: int, subalgebra: str = "ring") -> AxiomReport:
        """Exponent divisibility of computed invariants, and for n even the
        commutation u_i^n u_j^n = u_j^n u_i^n through normal_order scalars."""
        report = AxiomReport(instance=f"A({self.a},{self.b}) over H({self.n},{self.m})")
        params = RepParams(self.n, self.m, self.a, self.b)
        criterion = inner_faithful_criterion(params)
        inv = self.invariants(subalgebra, degree)
        bad = []
        for k, basis in inv.items():
            for f in basis:
                for exps in f.terms:
                    if any(e % self.n for e in exps):
                        bad.append({"degree": k, "exponents": list(exps)})
        if criterion:
            report.add(
                "exponent-divisibility",
                "invariant supports have all exponents divisible by n",
                not bad,
                {"offending": bad} if bad else None,
            )
        else:
            report.add(
                "exponent-divisibility",
                "gcd criterion fails: odd-exponent invariants may appear (reported)",
                True,
                {"offending": bad, "criterion": False} if bad else {"criterion": False},
            )
        if self.n % 2 == 0:
            ok = True
            witness = None
            for i in range(1, self.m + 1):
                for j in range(i + 1, self.m + 1):
                    if self._r[(j, i)] ** (self.n * self.n) != self.ctx.one:
                        ok = False
                        witness = {"i": i, "j": j}
                        break
                if not ok:
                    break
            report.add("r-power", "r_{ij}^{n^2} = 1 (n even)", ok, witness)
            if 2 * self.n <= self.degree_bound:
                ok = True
                witness = None
                for i in range(1, self.m + 1):
                    for j in range(i + 1, self.m + 1):
                        w1 = [i] * self.n + [j] * self.n
                        w2 = [j] * self.n + [i] * self.n
                        if self.normal_order(w1) != self.normal_order(w2):
                            ok = False
                            witness = {"i": i, "j": j}
                            break
                    if not ok:
                        break
                report.add("un-commute", "u_i^n u_j^n = u_j^n u_i^n (n even)", ok, witness)
        else:
            report.add_skipped("r-power", "r_{ij}^{n^2} = 1", "holds only for even n")
            report.add_skipped(
                "un-commute", "u_i^n u_j^n = u_j^n u_i^n", "holds only for even n"
            )
        return report

    def cyclic_inner_faithful_check(self, theta_matrix: Mat | None = None) -> AxiomReport:
        """The cyclic subalgebra acts inner-faithfully: the degree-one matrix
        of theta permutes the coordinate lines through a single m-cycle (so
        sums over theta powers split), and the base ring acts faithfully by
        the brute-force subgroup oracle."""
        hopf = self.hopf
        report = AxiomReport(instance=f"A({self.a},{self.b}) over H({self.n},{self.m})")
        theta = hopf.basis_elem(hopf.ring.zero_exp, cycle_perm(self.m))
        mat = theta_matrix if theta_matrix is not None else self.action_matrix(theta, 1)
        line_map = {}
        ok = True
        for j in range(self.m):
            nz = [i for i in range(self.m) if mat[i, j]]
            if len(nz) != 1:
                ok = False
                break
            line_map[j] = nz[0]
        if ok:
            # the line map must be a single m-cycle
            seen = set()
            cur = 0
            for _ in range(self.m):
                if cur in seen:
                    break
                seen.add(cur)
                cur = line_map[cur]
            ok = len(seen) == self.m and cur == 0
        report.add(
            "theta-line-structure",
            "theta maps coordinate lines through a single m-cycle",
            ok,
            None if ok else {"matrix": mat.to_json()},
        )
        params = RepParams(self.n, self.m, self.a, self.b)
        ring_ok, annihilating = inner_faithful_bruteforce(params)
        report.add(
            "ring-faithful",
            "only the trivial subgroup of Z_n^m acts trivially",
            ring_ok,
            None if ring_ok else {"annihilating": annihilating},
        )
        report.add(
            "inner-faithful",
            "cyclic subalgebra acts inner-faithfully",
            ok and ring_ok,
            None,
        )
        return report


def _elem_key(h: HopfElem):
    return frozenset(h.terms.items())


class QpaElem:
    """Normal-ordered element of A_{a,b}: sparse map from exponent vectors
    (non-negative, total degree within the bound) to scalars."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: QuantumPolyAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, QpaElem):
            return NotImplemented
        if other.algebra is not self.algebra and (
            other.algebra.hopf != self.algebra.hopf
            or (other.algebra.a, other.algebra.b) != (self.algebra.a, self.algebra.b)
        ):
            raise ContextMismatchError("elements of different quantum polynomial algebras")
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
        return QpaElem(self.algebra, out)

    def __neg__(self):
        return QpaElem(self.algebra, {k: -c for k, c in self.terms.items()})

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
        alg = self.algebra
        out = alg.zero()
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = tuple(x + y for x, y in zip(ea, eb))
                if sum(exps) > alg.degree_bound:
                    raise ValueError("degree overflow beyond the truncation bound")
                out = out + alg.monomial(exps, ca * cb * alg._swap_factor(ea, eb))
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, CycScalar)):
            return self.scale(other)
        return self._check(other) * self

    def scale(self, c) -> "QpaElem":
        if isinstance(c, int):
            c = self.algebra.ctx.scalar(c)
        if not c:
            return QpaElem(self.algebra, {})
        return QpaElem(self.algebra, {k: v * c for k, v in self.terms.items()})

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def to_json(self) -> list:
        return [{"exponents": list(k), "coeff": c.to_json()} for k, c in self.sorted_terms()]

    def __repr__(self):
        def mono(k):
            parts = [f"u{i+1}^{e}" if e != 1 else f"u{i+1}" for i, e in enumerate(k) if e]
            return "*".join(parts) if parts else "1"

        body = " + ".join(f"({c})*{mono(k)}" for k, c in self.sorted_terms())
        return body if body else "0"
