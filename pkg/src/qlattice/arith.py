"""Exact arithmetic: Laurent polynomials over Z, cyclotomic integers Z[zeta] and the field Q(zeta).

``zeta`` is a primitive r-th root of unity for an odd prime r.  Elements of
Z[zeta] are stored in the power basis 1, zeta, ..., zeta^(r-2); elements of
Q(zeta) carry one positive integer denominator coprime to the content of the
numerator.  Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .kernels import cyc_content, cyc_fold, cyc_mul

__all__ = [
    "LaurentPoly",
    "CycContext",
    "CycInt",
    "CycRat",
    "NotDivisible",
    "context",
    "reduce_at_zeta",
    "cyc_inverse",
    "is_integral",
    "is_unit",
    "gauss_sum",
    "divide_exact_h",
    "divide_exact_h_zeta",
    "h_valuation",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Element of Z[q, q^-1] as a sparse map exponent -> nonzero int."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, dict):
            self._c = {e: c for e, c in coeffs.items() if c}
        else:
            self._c = {}
            for e, c in coeffs:
                if c:
                    v = self._c.get(e, 0) + c
                    if v:
                        self._c[e] = v
                    else:
                        del self._c[e]
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p._c = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls._raw({e: c} if c else {})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        return min(self._c)

    def max_degree(self) -> int:
        return max(self._c)

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for e, c in o._c.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = ea + eb
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) == 1:
                (e, c), = self._c.items()
                if c in (1, -1):
                    return LaurentPoly._raw({e * n: c ** (-n)})
            raise ValueError("only signed monomials are invertible in Z[q, q^-1]")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def derivative(self) -> LaurentPoly:
        return LaurentPoly._raw({e - 1: e * c for e, c in self._c.items() if e})

    def at_one(self) -> int:
        return sum(self._c.values())

    def evaluate(self, x):
        """Value at a nonzero int or Fraction ``x``."""
        x = Fraction(x)
        return sum(c * x**e for e, c in self._c.items())

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Quotient ``self / other`` in Z[q, q^-1]; ValueError unless exact."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        lo_a, lo_b = self.min_degree(), other.min_degree()
        a = [0] * (self.max_degree() - lo_a + 1)
        for e, c in self._c.items():
            a[e - lo_a] = c
        b = [0] * (other.max_degree() - lo_b + 1)
        for e, c in other._c.items():
            b[e - lo_b] = c
        nb = len(b) - 1
        lead = b[nb]
        if len(a) < len(b):
            raise ValueError("inexact division")
        quot = [0] * (len(a) - nb)
        for s in range(len(a) - 1 - nb, -1, -1):
            c = a[s + nb]
            if c:
                qc, m = divmod(c, lead)
                if m:
                    raise ValueError("inexact division")
                quot[s] = qc
                for i, bc in enumerate(b):
                    if bc:
                        a[s + i] -= qc * bc
        if any(a):
            raise ValueError("inexact division")
        shift = lo_a - lo_b
        return LaurentPoly._raw({i + shift: c for i, c in enumerate(quot) if c})

    def __repr__(self):
        if not self._c:
            return "LaurentPoly(0)"
        terms = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            if e == 0:
                terms.append(f"{c}")
            elif c == 1:
                terms.append(f"q^{e}")
            elif c == -1:
                terms.append(f"-q^{e}")
            else:
                terms.append(f"{c}*q^{e}")
        return "LaurentPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)


# ---------------------------------------------------------------------------
# Cyclotomic integers and rationals


class CycContext:
    """Arithmetic context for Z[zeta] with zeta a primitive r-th root of unity, r an odd prime."""

    __slots__ = ("r", "phi", "_zpow", "_one", "_zero", "_hinv", "__weakref__")

    def __init__(self, r: int):
        if not isinstance(r, int) or r < 3 or not is_prime(r):
            raise ValueError(f"r must be an odd prime >= 3, got {r!r}")
        self.r = r
        self.phi = LaurentPoly({e: 1 for e in range(r)})
        zero = (0,) * (r - 1)
        self._zpow = []
        for k in range(r):
            if k == r - 1:
                self._zpow.append(CycInt._raw(self, (-1,) * (r - 1)))
            else:
                c = list(zero)
                c[k] = 1
                self._zpow.append(CycInt._raw(self, tuple(c)))
        self._one = self._zpow[0]
        self._zero = CycInt._raw(self, zero)
        self._hinv = None

    def __repr__(self):
        return f"CycContext(r={self.r})"

    def __reduce__(self):
        return (context, (self.r,))

    @property
    def dim(self) -> int:
        return self.r - 1

    def zeta(self, k: int = 1) -> CycInt:
        return self._zpow[k % self.r]

    def zeta_rat(self, k: int = 1) -> CycRat:
        return CycRat._raw(self, self._zpow[k % self.r].c, 1)

    def one(self) -> CycRat:
        return CycRat._raw(self, self._one.c, 1)

    def zero(self) -> CycRat:
        return CycRat._raw(self, self._zero.c, 1)

    def integer(self, n: int) -> CycInt:
        return CycInt._raw(self, (n,) + (0,) * (self.r - 2))

    def rat(self, x) -> CycRat:
        """Coerce an int, Fraction, CycInt or CycRat into Q(zeta)."""
        if isinstance(x, (CycRat, CycInt)) and x.ctx.r != self.r:
            raise ValueError(f"element of Q(zeta_{x.ctx.r}) used with r = {self.r}")
        if isinstance(x, CycRat):
            return x
        if isinstance(x, CycInt):
            return CycRat._raw(self, x.c, 1)
        if isinstance(x, int):
            return CycRat._raw(self, (x,) + (0,) * (self.r - 2), 1)
        if isinstance(x, Fraction):
            return CycRat(self, (x.numerator,) + (0,) * (self.r - 2), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(zeta)")

    def h(self) -> CycInt:
        """h(zeta) = 1 - zeta."""
        return self._one - self._zpow[1]

    def h_inverse(self) -> CycRat:
        if self._hinv is None:
            self._hinv = cyc_inverse(self.rat(self.h()))
        return self._hinv


@lru_cache(maxsize=None)
def context(r: int) -> CycContext:
    """Shared CycContext for ``r``."""
    return CycContext(r)


class CycInt:
    """Element of Z[zeta] in the power basis of degree <= r-2."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: CycContext, coeffs):
        coeffs = tuple(int(x) for x in coeffs)
        if len(coeffs) != ctx.r - 1:
            coeffs = cyc_fold(coeffs, ctx.r)
        self.ctx = ctx
        self.c = coeffs

    @classmethod
    def _raw(cls, ctx, coeffs):
        x = cls.__new__(cls)
        x.ctx = ctx
        x.c = coeffs
        return x

    def _other(self, other):
        if isinstance(other, CycInt):
            return other.c
        if isinstance(other, int):
            return (other,) + (0,) * (self.ctx.r - 2)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycInt._raw(self.ctx, tuple(a + b for a, b in zip(self.c, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycInt._raw(self.ctx, tuple(a - b for a, b in zip(self.c, o)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycInt._raw(self.ctx, tuple(b - a for a, b in zip(self.c, o)))

    def __neg__(self):
        return CycInt._raw(self.ctx, tuple(-a for a in self.c))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt._raw(self.ctx, tuple(a * other for a in self.c))
        if isinstance(other, CycInt):
            return CycInt._raw(self.ctx, cyc_mul(self.c, other.c, self.ctx.r))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in CycRat")
        out = self.ctx._one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, CycRat):
            return other.den == 1 and other.num == self.c
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.c == o

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def conjugate(self, k: int) -> CycInt:
        """Galois conjugate zeta -> zeta^k, k prime to r."""
        r = self.ctx.r
        if k % r == 0:
            raise ValueError("k must be prime to r")
        coeffs = [0] * r
        for i, a in enumerate(self.c):
            coeffs[(i * k) % r] += a
        return CycInt._raw(self.ctx, cyc_fold(coeffs, r))

    def content(self) -> int:
        return cyc_content(self.c)

    def __repr__(self):
        return f"CycInt(r={self.ctx.r}, {list(self.c)})"

    def __str__(self):
        return _render(self.c)


def _render(c) -> str:
    terms = []
    for i, a in enumerate(c):
        if not a:
            continue
        mon = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
        if not mon:
            terms.append(str(a))
        elif a == 1:
            terms.append(mon)
        elif a == -1:
            terms.append("-" + mon)
        else:
            terms.append(f"{a}*{mon}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


class CycRat:
    """Element of Q(zeta): power-basis numerator over a positive integer denominator."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CycContext, num, den: int = 1):
        if isinstance(num, CycInt):
            num = num.c
        else:
            num = tuple(int(x) for x in num)
            if len(num) != ctx.r - 1:
                num = cyc_fold(num, ctx.r)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-a for a in num)
            den = -den
        self.ctx = ctx
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, ctx, num, den):
        x = cls.__new__(cls)
        x.ctx = ctx
        x.num = num
        x.den = den
        return x

    @property
    def numerator(self) -> CycInt:
        return CycInt._raw(self.ctx, self.num)

    @property
    def denominator(self) -> int:
        return self.den

    def _other(self, other):
        if isinstance(other, CycRat):
            return other.num, other.den
        if isinstance(other, CycInt):
            return other.c, 1
        if isinstance(other, int):
            return (other,) + (0,) * (self.ctx.r - 2), 1
        if isinstance(other, Fraction):
            return (other.numerator,) + (0,) * (self.ctx.r - 2), other.denominator
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        onum, oden = o
        if self.den == 1 and oden == 1:
            return CycRat._raw(self.ctx, tuple(a + b for a, b in zip(self.num, onum)), 1)
        d = self.den * oden
        num = tuple(a * oden + b * self.den for a, b in zip(self.num, onum))
        num, d = _normalize(num, d)
        return CycRat._raw(self.ctx, num, d)

    __radd__ = __add__

    def __neg__(self):
        return CycRat._raw(self.ctx, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        onum, oden = o
        if self.den == 1 and oden == 1:
            return CycRat._raw(self.ctx, tuple(a - b for a, b in zip(self.num, onum)), 1)
        d = self.den * oden
        num = tuple(a * oden - b * self.den for a, b in zip(self.num, onum))
        num, d = _normalize(num, d)
        return CycRat._raw(self.ctx, num, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycRat):
            num = cyc_mul(self.num, other.num, self.ctx.r)
            d = self.den * other.den
            if d == 1:
                return CycRat._raw(self.ctx, num, 1)
            num, d = _normalize(num, d)
            return CycRat._raw(self.ctx, num, d)
        if isinstance(other, int):
            if self.den == 1:
                return CycRat._raw(self.ctx, tuple(a * other for a in self.num), 1)
            num, d = _normalize(tuple(a * other for a in self.num), self.den)
            return CycRat._raw(self.ctx, num, d)
        if isinstance(other, CycInt):
            num = cyc_mul(self.num, other.c, self.ctx.r)
            if self.den == 1:
                return CycRat._raw(self.ctx, num, 1)
            num, d = _normalize(num, self.den)
            return CycRat._raw(self.ctx, num, d)
        if isinstance(other, Fraction):
            return self * other.numerator / other.denominator
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> CycRat:
        return cyc_inverse(self)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            d = self.den * other
            num = self.num
            if d < 0:
                num = tuple(-a for a in num)
                d = -d
            num, d = _normalize(num, d)
            return CycRat._raw(self.ctx, num, d)
        if isinstance(other, (CycInt, CycRat)):
            return self * cyc_inverse(self.ctx.rat(other))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.ctx.rat(other) * cyc_inverse(self)

    def __pow__(self, n: int):
        if n < 0:
            return cyc_inverse(self) ** (-n)
        out = self.ctx.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.den == o[1] and self.num == o[0]

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return any(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_integral(self) -> bool:
        return self.den == 1

    def conjugate(self, k: int) -> CycRat:
        return CycRat._raw(self.ctx, self.numerator.conjugate(k).c, self.den)

    def __repr__(self):
        return f"CycRat(r={self.ctx.r}, {list(self.num)}, den={self.den})"

    def __str__(self):
        s = _render(self.num)
        if self.den == 1:
            return s
        return f"({s})/{self.den}"


def _normalize(num: tuple, den: int):
    if den == 1:
        return num, 1
    g = gcd(cyc_content(num), den)
    if g == 0:
        return num, 1
    if g == 1:
        return num, den
    return tuple(a // g for a in num), den // g


# ---------------------------------------------------------------------------
# Operations


def reduce_at_zeta(p: LaurentPoly, ctx: CycContext) -> CycInt:
    """Class of p(zeta) in Z[zeta]; a ring homomorphism Z[q, q^-1] -> Z[zeta]."""
    r = ctx.r
    acc = [0] * r
    for e, c in p.items():
        acc[e % r] += c
    return CycInt._raw(ctx, cyc_fold(acc, r))


def _poly_divmod(a: list, b: list):
    """Division of dense Fraction polynomials (lowest degree first)."""
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        s = len(a) - len(b)
        c = a[-1] / lead
        out[s] = c
        for i, bc in enumerate(b):
            a[s + i] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return out, a


def _trim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def cyc_inverse(x) -> CycRat:
    """Inverse in Q(zeta) by the extended Euclidean algorithm against 1 + q + ... + q^(r-1)."""
    if isinstance(x, CycInt):
        x = x.ctx.rat(x)
    ctx = x.ctx
    r = ctx.r
    if not x:
        raise ZeroDivisionError("zero has no inverse in Q(zeta)")
    a = _trim([Fraction(c) for c in x.num])
    b = [Fraction(1)] * r
    # invariant: s0*a_orig == r0 (mod phi)
    r0, r1 = a, b
    s0, s1 = [Fraction(1)], []
    while r1:
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, _trim(rem)
        prod = _poly_mul_frac(quo, s1)
        s_new = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
                 for i in range(max(len(s0), len(prod)))]
        s0, s1 = s1, _trim(s_new)
    # r0 is a nonzero constant since phi is irreducible
    if len(r0) != 1:
        raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
    inv = [c / r0[0] for c in s0]
    d = 1
    for c in inv:
        d = d * c.denominator // gcd(d, c.denominator)
    coeffs = [int(c * d) * x.den for c in inv]
    return CycRat(ctx, cyc_fold(coeffs, r), d)


def _poly_mul_frac(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def is_integral(x) -> bool:
    """True iff ``x`` lies in Z[zeta]."""
    if isinstance(x, CycInt):
        return True
    return x.den == 1


def is_unit(x) -> bool:
    """True iff ``x`` is an invertible element of Z[zeta]."""
    if isinstance(x, CycRat):
        if x.den != 1:
            return False
    if not x:
        return False
    return is_integral(cyc_inverse(x))


def gauss_sum(n: int, ctx: CycContext) -> CycInt:
    """G_n = sum over l in [0, r) of zeta^(-2 l (l - n))."""
    r = ctx.r
    acc = [0] * r
    for l in range(r):
        acc[(-2 * l * (l - n)) % r] += 1
    return CycInt._raw(ctx, cyc_fold(acc, r))


@dataclass(frozen=True)
class NotDivisible:
    """Failed division by (1 - q)^k: ``stage`` is the 1-based factor that failed, ``remainder`` the value at q = 1."""

    stage: int
    remainder: int

    def __bool__(self):
        return False


def divide_exact_h(p: LaurentPoly, k: int):
    """Quotient of ``p`` by (1 - q)^k, or a NotDivisible value."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    cur = p
    for stage in range(1, k + 1):
        if not cur:
            return cur
        at_one = cur.at_one()
        if at_one:
            return NotDivisible(stage, at_one)
        lo, hi = cur.min_degree(), cur.max_degree()
        out = {}
        run = 0
        for e in range(lo, hi):
            run += cur[e]
            if run:
                out[e] = run
        cur = LaurentPoly._raw(out)
    return cur


def divide_exact_h_zeta(x, k: int) -> CycRat:
    """x / h(zeta)^k in Q(zeta)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ctx = x.ctx
    x = ctx.rat(x)
    if k == 0:
        return x
    return x * ctx.h_inverse() ** k


def h_valuation(x) -> int:
    """Exponent of the prime h(zeta) = 1 - zeta in the nonzero element ``x``."""
    ctx = x.ctx
    x = ctx.rat(x)
    if not x:
        raise ValueError("valuation of zero")
    r = ctx.r
    v = 0
    d = x.den
    while d % r == 0:
        d //= r
        v -= r - 1
    y = CycRat._raw(ctx, x.num, 1)
    hinv = ctx.h_inverse()
    while True:
        z = y * hinv
        if z.den != 1:
            return v
        y = z
        v += 1
