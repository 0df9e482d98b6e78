"""The small quantum group u_zeta(sl2) over Q(zeta), in the PBW basis E^l 1_m F^(n).

A single-factor basis vector E^l 1_m F^(n) (0 <= l, n < r, m mod r) is stored as
the integer ``(l * r + m) * r + n``.  Elements of the g-th tensor power are
dicts from g-tuples of such integers to CycRat coefficients.

Conventions:  K = sum_n zeta^(-2n) 1_n,  1_k E = E 1_(k+1),  F 1_m = 1_(m+1) F,
[E, F] = K - K^-1,  Delta(E) = E (x) K + 1 (x) E,  Delta(F) = K^-1 (x) F + F (x) 1,
Delta(1_n) = sum_m 1_(n-m) (x) 1_m,  S(E) = -E K^-1,  S(F) = -K F,  S(1_n) = 1_(-n).

The integral lambda and cointegral Lambda are used in the rescaled forms
lambda' = sqrt(r) lambda and Lambda' = Lambda / sqrt(r), which keep all values in
Q(zeta) while preserving lambda'(Lambda') = 1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable

from .arith import CycContext, CycRat, context
from .qcomb import qint_at_zeta
from .report import CheckReport

__all__ = [
    "QuantumGroup",
    "AlgebraElement",
    "quantum_group",
    "multiply",
    "tensor",
    "coproduct",
    "iterated_coproduct",
    "antipode",
    "counit",
    "r_matrix",
    "r_matrix_alt",
    "ribbon",
    "ribbon_inv",
    "m_matrix",
    "integral_lambda_rescaled",
    "cointegral_rescaled",
    "adjoint_action",
    "drinfeld_check",
]


def _acc(out: dict, key, c) -> None:
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


class QuantumGroup:
    """Structure tables of u_zeta(sl2) for one r, built lazily and shared read-only."""

    def __init__(self, ctx: CycContext):
        self.ctx = ctx
        r = self.r = ctx.r
        self.dim = r ** 3
        self.zp = [ctx.zeta_rat(k) for k in range(r)]
        self.one_c = ctx.one()
        self.qint = [ctx.rat(qint_at_zeta(n, ctx)) for n in range(r + 1)]
        self.inv_qint = [None] + [x.inverse() if x else None for x in self.qint[1:]]
        self._fn = None
        self._mul = {}
        self._cop = {}
        self._ant = {}
        self._ad = {}
        self._cache = {}

    # -- indexing

    def idx(self, l: int, m: int, n: int) -> int:
        r = self.r
        return (l * r + m % r) * r + n

    def triple(self, i: int) -> tuple:
        r = self.r
        return i // (r * r), (i // r) % r, i % r

    def z(self, k: int) -> CycRat:
        return self.zp[k % self.r]

    # -- multiplication

    def _f_left(self, vec: dict) -> dict:
        """Left multiplication by F = F^(1) on a single-factor vector."""
        r = self.r
        out = {}
        for i, c in vec.items():
            l, m, n = self.triple(i)
            if n + 1 < r:
                _acc(out, self.idx(l, m + 1, n + 1), c * self.qint[n + 1])
            if l:
                # F E^l 1_m = E^l F 1_m - sum_j zeta-coefficient * E^(l-1) 1_m
                w = self.ctx.zero()
                for j in range(l):
                    w = w + self.z(2 * (j - m)) - self.z(-2 * (j - m))
                if w:
                    _acc(out, self.idx(l - 1, m, n), -(c * w))
        return out

    def _fn_table(self):
        """fn[n][j] = F^(n) * b_j."""
        if self._fn is None:
            r = self.r
            one = self.one_c
            cur = [{j: one} for j in range(self.dim)]
            table = [cur]
            for n in range(1, r):
                inv = self.inv_qint[n]
                cur = [{k: c * inv for k, c in self._f_left(v).items()} for v in cur]
                table.append(cur)
            self._fn = table
        return self._fn

    def mul_basis(self, i: int, j: int) -> dict:
        key = (i, j)
        got = self._mul.get(key)
        if got is not None:
            return got
        r = self.r
        l, m, n = self.triple(i)
        out = {}
        for k, c in self._fn_table()[n][j].items():
            a, b, cc = self.triple(k)
            if (b - m - a) % r == 0 and l + a < r:
                out[self.idx(l + a, b, cc)] = c
        self._mul[key] = out
        return out

    # -- elements

    def elem(self, terms: dict, g: int = 1) -> AlgebraElement:
        return AlgebraElement(self, g, terms)

    def basis_elem(self, l: int, m: int, n: int) -> AlgebraElement:
        return AlgebraElement(self, 1, {(self.idx(l, m, n),): self.one_c})

    def unit(self, g: int = 1) -> AlgebraElement:
        one = self.one_c
        return AlgebraElement(self, g, {k: one for k in product(
            [self.idx(0, m, 0) for m in range(self.r)], repeat=g)})

    def zero_elem(self, g: int = 1) -> AlgebraElement:
        return AlgebraElement(self, g, {})

    def E(self) -> AlgebraElement:
        return AlgebraElement(self, 1, {(self.idx(1, m, 0),): self.one_c for m in range(self.r)})

    def F(self) -> AlgebraElement:
        return AlgebraElement(self, 1, {(self.idx(0, m, 1),): self.one_c for m in range(self.r)})

    def idem(self, m: int) -> AlgebraElement:
        return self.basis_elem(0, m, 0)

    def K(self, j: int = 1) -> AlgebraElement:
        return AlgebraElement(self, 1, {(self.idx(0, n, 0),): self.z(-2 * j * n) for n in range(self.r)})

    def E_pow(self, l: int) -> AlgebraElement:
        if l >= self.r:
            return self.zero_elem()
        return AlgebraElement(self, 1, {(self.idx(l, m, 0),): self.one_c for m in range(self.r)})

    def F_div(self, n: int) -> AlgebraElement:
        if n >= self.r:
            return self.zero_elem()
        return AlgebraElement(self, 1, {(self.idx(0, m, n),): self.one_c for m in range(self.r)})

    def basis(self) -> list:
        return [self.basis_elem(*self.triple(i)) for i in range(self.dim)]

    # -- Hopf structure on basis vectors

    def coproduct_basis(self, i: int) -> dict:
        got = self._cop.get(i)
        if got is not None:
            return got
        l, m, n = self.triple(i)
        r = self.r
        dE = tensor(self.E(), self.K(1)) + tensor(self.unit(), self.E())
        dF = tensor(self.K(-1), self.F()) + tensor(self.F(), self.unit())
        one = self.one_c
        d1 = AlgebraElement(self, 2, {(self.idx(0, m - k, 0), self.idx(0, k, 0)): one for k in range(r)})
        x = d1
        for _ in range(l):
            x = dE * x
        for _ in range(n):
            x = x * dF
        if n:
            x = x * self._inv_fact(n)
        self._cop[i] = x.terms
        return x.terms

    def _inv_fact(self, n: int) -> CycRat:
        c = self.one_c
        for j in range(1, n + 1):
            c = c * self.inv_qint[j]
        return c

    def antipode_basis(self, i: int) -> dict:
        got = self._ant.get(i)
        if got is not None:
            return got
        l, m, n = self.triple(i)
        sE = -(self.E() * self.K(-1))
        sF = -(self.K(1) * self.F())
        x = self.idem(-m)
        for _ in range(n):
            x = sF * x
        for _ in range(l):
            x = x * sE
        if n:
            x = x * self._inv_fact(n)
        self._ant[i] = x.terms
        return x.terms

    def counit_basis(self, i: int) -> CycRat:
        return self.one_c if i == 0 else self.ctx.zero()

    def lambda_basis(self, i: int) -> CycRat:
        # E^l 1_k F^(n) = E^l F^(n) 1_(k-n)
        l, k, n = self.triple(i)
        r = self.r
        if l == r - 1 and n == r - 1:
            return self.z(-2 * (k - n))
        return self.ctx.zero()

    def ad_basis(self, i: int, j: int) -> dict:
        """b_i |> b_j = b_i(1) b_j S(b_i(2)) on single-factor basis vectors."""
        key = (i, j)
        got = self._ad.get(key)
        if got is not None:
            return got
        out = {}
        for (a1, a2), c in self.coproduct_basis(i).items():
            left = self.mul_basis(a1, j)
            if not left:
                continue
            for (s,), cs in self.antipode_basis(a2).items():
                cc = c * cs
                for k1, c1 in left.items():
                    for k2, c2 in self.mul_basis(k1, s).items():
                        _acc(out, k2, cc * c1 * c2)
        self._ad[key] = out
        return out

    def cached(self, name: str, build):
        got = self._cache.get(name)
        if got is None:
            got = self._cache[name] = build()
        return got


@lru_cache(maxsize=None)
def _qg(r: int) -> QuantumGroup:
    return QuantumGroup(context(r))


def quantum_group(ctx_or_r) -> QuantumGroup:
    r = ctx_or_r if isinstance(ctx_or_r, int) else ctx_or_r.r
    return _qg(r)


class AlgebraElement:
    """Sparse element of the g-th tensor power of u_zeta(sl2)."""

    __slots__ = ("qg", "g", "terms")

    def __init__(self, qg: QuantumGroup, g: int, terms: dict):
        self.qg = qg
        self.g = g
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, qg, g, terms):
        x = cls.__new__(cls)
        x.qg, x.g, x.terms = qg, g, terms
        return x

    def _scalar(self, c) -> CycRat:
        return self.qg.ctx.rat(c)

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if other.g != self.g:
            raise ValueError("tensor degree mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return AlgebraElement._raw(self.qg, self.g, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._raw(self.qg, self.g, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        c = self._scalar(other)
        if not c:
            return AlgebraElement._raw(self.qg, self.g, {})
        return AlgebraElement._raw(self.qg, self.g, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __matmul__(self, other: AlgebraElement) -> AlgebraElement:
        return tensor(self, other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.g == other.g and self.terms == other.terms

    def __hash__(self):
        return hash((self.g, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, *triples) -> CycRat:
        key = tuple(self.qg.idx(*t) for t in triples)
        return self.terms.get(key, self.qg.ctx.zero())

    def items_triples(self):
        tr = self.qg.triple
        for k, c in self.terms.items():
            yield tuple(tr(i) for i in k), c

    def is_integral(self) -> bool:
        return all(c.den == 1 for c in self.terms.values())

    def permute(self, perm: Iterable[int]) -> AlgebraElement:
        """Leg permutation: output leg i is input leg perm[i]."""
        perm = tuple(perm)
        return AlgebraElement._raw(
            self.qg, len(perm), {tuple(k[p] for p in perm): c for k, c in self.terms.items()}
        )

    def embed(self, g: int, legs: Iterable[int]) -> AlgebraElement:
        """Place the legs of ``self`` at positions ``legs`` of a degree-g element, with 1 elsewhere."""
        legs = tuple(legs)
        qg = self.qg
        units = [qg.idx(0, m, 0) for m in range(qg.r)]
        free = [p for p in range(g) if p not in legs]
        out = {}
        for k, c in self.terms.items():
            for fill in product(units, repeat=len(free)):
                key = [0] * g
                for p, v in zip(legs, k):
                    key[p] = v
                for p, v in zip(free, fill):
                    key[p] = v
                out[tuple(key)] = c
        return AlgebraElement._raw(qg, g, out)

    def __repr__(self):
        parts = []
        for tr, c in sorted(self.items_triples()):
            mono = " (x) ".join(f"E^{l} 1_{m} F^({n})" for l, m, n in tr)
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Algebra operations


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.g != b.g:
        raise ValueError("tensor degree mismatch")
    qg = a.qg
    mul = qg.mul_basis
    out = {}
    if a.g == 1:
        for (i,), ca in a.terms.items():
            for (j,), cb in b.terms.items():
                p = mul(i, j)
                if p:
                    c = ca * cb
                    for k, ck in p.items():
                        _acc(out, (k,), c * ck)
        return AlgebraElement._raw(qg, 1, out)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            legs = []
            for i, j in zip(ka, kb):
                p = mul(i, j)
                if not p:
                    break
                legs.append(p.items())
            else:
                c = ca * cb
                for combo in product(*legs):
                    cc = c
                    key = []
                    for k, ck in combo:
                        key.append(k)
                        cc = cc * ck
                    _acc(out, tuple(key), cc)
    return AlgebraElement._raw(qg, a.g, out)


def tensor(*xs: AlgebraElement) -> AlgebraElement:
    qg = xs[0].qg
    out = {(): qg.one_c}
    for x in xs:
        nxt = {}
        for k, c in out.items():
            for k2, c2 in x.terms.items():
                nxt[k + k2] = c * c2
        out = nxt
    return AlgebraElement._raw(qg, sum(x.g for x in xs), out)


def _apply_leg_linear(x: AlgebraElement, leg: int, images, new_width: int) -> AlgebraElement:
    """Apply a linear map given on basis vectors (``images(i)`` -> dict of tuples) to one leg."""
    out = {}
    for k, c in x.terms.items():
        for sub, cs in images(k[leg]).items():
            _acc(out, k[:leg] + sub + k[leg + 1:], c * cs)
    return AlgebraElement._raw(x.qg, x.g - 1 + new_width, out)


def coproduct(x: AlgebraElement, leg: int = 0) -> AlgebraElement:
    """Delta applied to tensor leg ``leg`` (the only leg for degree-1 input)."""
    return _apply_leg_linear(x, leg, x.qg.coproduct_basis, 2)


def iterated_coproduct(x: AlgebraElement, g: int) -> AlgebraElement:
    """Delta^(g): degree-1 element to degree-g, splitting the last leg repeatedly."""
    if g < 1:
        raise ValueError("g must be positive")
    for _ in range(g - 1):
        x = coproduct(x, x.g - 1)
    return x


def antipode(x: AlgebraElement) -> AlgebraElement:
    """S applied to every leg."""
    qg = x.qg
    for leg in range(x.g):
        x = _apply_leg_linear(x, leg, qg.antipode_basis, 1)
    return x


def counit(x: AlgebraElement) -> CycRat:
    """epsilon on a degree-1 element."""
    if x.g != 1:
        raise ValueError("counit expects a degree-1 element")
    qg = x.qg
    return x.terms.get((0,), qg.ctx.zero())


def counit_leg(x: AlgebraElement, leg: int) -> AlgebraElement:
    out = {}
    for k, c in x.terms.items():
        if k[leg] == 0:
            _acc(out, k[:leg] + k[leg + 1:], c)
    return AlgebraElement._raw(x.qg, x.g - 1, out)


def integral_lambda_rescaled(x: AlgebraElement) -> CycRat:
    """lambda'(x) for a degree-1 element, lambda'(E^l F^(m) 1_n) = zeta^(-2n) [l = m = r-1]."""
    if x.g != 1:
        raise ValueError("lambda' expects a degree-1 element")
    qg = x.qg
    acc = qg.ctx.zero()
    for (i,), c in x.terms.items():
        v = qg.lambda_basis(i)
        if v:
            acc = acc + c * v
    return acc


def lambda_leg(x: AlgebraElement, leg: int) -> AlgebraElement:
    qg = x.qg
    out = {}
    for k, c in x.terms.items():
        v = qg.lambda_basis(k[leg])
        if v:
            _acc(out, k[:leg] + k[leg + 1:], c * v)
    return AlgebraElement._raw(qg, x.g - 1, out)


def cointegral_rescaled(ctx) -> AlgebraElement:
    """Lambda' = E^(r-1) F^(r-1) 1_0 = E^(r-1) 1_(r-1) F^(r-1)."""
    qg = quantum_group(ctx)
    r = qg.r
    return qg.basis_elem(r - 1, r - 1, r - 1)


# ---------------------------------------------------------------------------
# Ribbon data


def r_matrix(ctx) -> AlgebraElement:
    """R = sum_{m,n} zeta^(n(n-1)/2) K^-m E^n (x) 1_m F^(n)."""
    qg = quantum_group(ctx)

    def build():
        r = qg.r
        out = qg.zero_elem(2)
        for n in range(r):
            En = qg.E_pow(n)
            c = qg.z(n * (n - 1) // 2)
            for m in range(r):
                left = qg.K(-m) * En
                right = qg.idem(m) * qg.F_div(n)
                out = out + tensor(left, right) * c
        return out

    return qg.cached("R", build)


def r_matrix_alt(ctx) -> AlgebraElement:
    """The second displayed form: sum_{m,n} zeta^(n(n-1)/2) 1_m E^n (x) K^-m F^(n)."""
    qg = quantum_group(ctx)

    def build():
        r = qg.r
        out = qg.zero_elem(2)
        for n in range(r):
            c = qg.z(n * (n - 1) // 2)
            for m in range(r):
                out = out + tensor(qg.idem(m) * qg.E_pow(n), qg.K(-m) * qg.F_div(n)) * c
        return out

    return qg.cached("R_alt", build)


def ribbon(ctx) -> AlgebraElement:
    """theta = sum_{m,n} (-1)^m zeta^(-(m+3)m/2 - 2(m+n+1)n) E^m F^(m) 1_n."""
    qg = quantum_group(ctx)

    def build():
        r = qg.r
        terms = {}
        for m in range(r):
            for n in range(r):
                c = qg.z(-(m + 3) * m // 2 - 2 * (m + n + 1) * n)
                if m % 2:
                    c = -c
                terms[(qg.idx(m, n + m, m),)] = c
        return qg.elem(terms)

    return qg.cached("theta", build)


def ribbon_inv(ctx) -> AlgebraElement:
    """theta^-1 = sum_{m,n} zeta^((m+3)m/2 + 2(m+n+1)n) E^m F^(m) 1_n."""
    qg = quantum_group(ctx)

    def build():
        r = qg.r
        terms = {}
        for m in range(r):
            for n in range(r):
                terms[(qg.idx(m, n + m, m),)] = qg.z((m + 3) * m // 2 + 2 * (m + n + 1) * n)
        return qg.elem(terms)

    return qg.cached("theta_inv", build)


def m_matrix(ctx) -> AlgebraElement:
    """M = R''_j R'_i (x) R'_j R''_i = R_21 R."""
    qg = quantum_group(ctx)
    return qg.cached("M", lambda: r_matrix(ctx).permute((1, 0)) * r_matrix(ctx))


# ---------------------------------------------------------------------------
# Adjoint action


def adjoint_action(x: AlgebraElement, y: AlgebraElement, g: int | None = None) -> AlgebraElement:
    """x |> y for x of degree 1 and y of degree g, through the iterated coproduct of x."""
    qg = x.qg
    if g is None:
        g = y.g
    if y.g != g or x.g != 1:
        raise ValueError("adjoint action expects x of degree 1 and y of degree g")
    dx = iterated_coproduct(x, g)
    out = {}
    ad = qg.ad_basis
    for kx, cx in dx.terms.items():
        for ky, cy in y.terms.items():
            legs = []
            for i, j in zip(kx, ky):
                p = ad(i, j)
                if not p:
                    break
                legs.append(p.items())
            else:
                c = cx * cy
                for combo in product(*legs):
                    cc = c
                    key = []
                    for k, ck in combo:
                        key.append(k)
                        cc = cc * ck
                    _acc(out, tuple(key), cc)
    return AlgebraElement._raw(qg, g, out)


# ---------------------------------------------------------------------------
# Factorizability


def drinfeld_element(ctx, R: AlgebraElement | None = None) -> AlgebraElement:
    """lambda'(R'_j R''_i) R''_j R'_i, i.e. (lambda' (x) id)(R R_21)."""
    if R is None:
        R = r_matrix(ctx)
    return lambda_leg(R * R.permute((1, 0)), 0)


def drinfeld_check(ctx, R: AlgebraElement | None = None) -> CheckReport:
    """Checks lambda'(R'_j R''_i) R''_j R'_i = r Lambda'."""
    qg = quantum_group(ctx)
    lhs = drinfeld_element(ctx, R)
    rhs = cointegral_rescaled(ctx) * qg.r
    params = {"r": qg.r, "perturbed": R is not None}
    if lhs == rhs:
        return CheckReport.passed("factorizability", "drinfeld_cointegral", params)
    diff = lhs - rhs
    (tr, c) = next(iter(sorted(diff.items_triples(), key=lambda t: t[0])))
    return CheckReport.failed(
        "factorizability", "drinfeld_cointegral", params,
        {"index": [list(t) for t in tr], "difference": str(c)},
    )
