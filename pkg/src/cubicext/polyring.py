"""Dense univariate polynomials and rational functions.

Poly is generic over its coefficient domain: a Field, a FuncField (rational
functions), or a PolyRing (polynomials again, for the nested reductions the
identity checks use).  Coefficients are a trimmed tuple, low degree first;
the zero polynomial has an empty tuple and degree -1.

Rational functions are kept reduced with a monic denominator, so equal
functions have equal representations.

Determinism contracts honoured here:

  * deterministic_irreducible enumerates monic candidates in counter order
    (the constant coefficient is the fastest digit) and returns the first
    irreducible one;
  * factor_fq uses distinct-degree splitting followed by equal-degree
    splitting driven by random.Random(FACTOR_SEED), so repeated runs produce
    identical factor lists;
  * factor lists are sorted by (degree, coefficient counter key).
"""
from __future__ import annotations

import functools
import random
from typing import Callable, Iterator, Optional, Sequence, Union

from . import ffield
from .errors import (DivisionByZero, DomainMismatch, FieldMismatch,
                     SizeExceeded, ZeroDenominator, ZeroPolynomial)
from .ffield import Field, FieldElem, field_make

FACTOR_SEED = 2718281828459045
FACTOR_DEGREE_LIMIT = 512


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    __slots__ = ("dom", "coeffs")

    def __init__(self, dom, coeffs: Sequence):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.dom = dom
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(dom) -> "Poly":
        return Poly(dom, ())

    @staticmethod
    def one(dom) -> "Poly":
        return Poly(dom, (dom.one,))

    @staticmethod
    def gen(dom) -> "Poly":
        return Poly(dom, (dom.zero, dom.one))

    @staticmethod
    def const(dom, c) -> "Poly":
        return Poly(dom, (c,))

    @staticmethod
    def of_ints(dom, ints: Sequence[int]) -> "Poly":
        return Poly(dom, [dom.from_int(n) for n in ints])

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of 0")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.dom.one

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.dom.zero

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.dom is not self.dom:
                raise DomainMismatch("polynomials over different domains")
            return other
        if isinstance(other, int):
            return Poly.const(self.dom, self.dom.from_int(other))
        c = _as_domain_elem(self.dom, other)
        if c is not None:
            return Poly.const(self.dom, c)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.dom, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.dom, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Poly.zero(self.dom)
        out = [self.dom.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.dom, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Poly.one(self.dom)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if o.lc == self.dom.one:
            inv = None
        else:
            try:
                inv = self.dom.one / o.lc
            except TypeError:
                raise DomainMismatch("division needs a monic divisor over this domain")
        q = [self.dom.zero] * max(1, len(self.coeffs) - len(o.coeffs) + 1)
        r = list(self.coeffs)
        while len(r) >= len(o.coeffs) and r:
            c = r[-1] if inv is None else r[-1] * inv
            d = len(r) - len(o.coeffs)
            q[d] = q[d] + c
            for i, bi in enumerate(o.coeffs):
                r[d + i] = r[d + i] - c * bi
            while r and _is_zero(r[-1]):
                r.pop()
        return Poly(self.dom, q), Poly(self.dom, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomial("monic of 0")
        if self.is_monic():
            return self
        inv = self.dom.one / self.lc
        return Poly(self.dom, [c * inv for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def derivative(self) -> "Poly":
        return Poly(self.dom, [self.coeffs[i] * i for i in range(1, len(self.coeffs))])

    def __call__(self, v):
        """Horner evaluation at an element of the coefficient domain."""
        acc = self.dom.zero
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, q: "Poly") -> "Poly":
        acc = Poly.zero(self.dom)
        for c in reversed(self.coeffs):
            acc = acc * q + Poly.const(self.dom, c)
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by gen^k."""
        if self.is_zero():
            return self
        return Poly(self.dom, (self.dom.zero,) * k + self.coeffs)

    # -- comparisons / ordering ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((id(self.dom), self.coeffs))

    def counter_key(self):
        """(degree, high-first value tuple): the package-wide polynomial order."""
        return (self.degree, tuple(c.value for c in reversed(self.coeffs)))

    # -- rendering -------------------------------------------------------------

    def render(self, var: str = "x") -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            cs = c.render() if hasattr(c, "render") else str(c)
            if i == 0:
                terms.append(cs)
                continue
            pw = var if i == 1 else f"{var}^{i}"
            if c == self.dom.one:
                terms.append(pw)
            else:
                if "+" in cs or "-" in cs:
                    cs = f"({cs})"
                terms.append(f"{cs}*{pw}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return self.render()


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return not c


def _as_domain_elem(dom, v):
    """v as an element of dom, converting where a canonical inclusion exists."""
    if isinstance(dom, Field):
        if isinstance(v, FieldElem) and v.field is dom:
            return v
    elif isinstance(dom, FuncField):
        if isinstance(v, RatFunc) and v.ff is dom:
            return v
        if isinstance(v, FieldElem) and v.field is dom.field:
            return dom.from_elem(v)
    elif isinstance(dom, PolyRing):
        if isinstance(v, Poly) and v.dom is dom.dom:
            return v
    return None


class PolyRing:
    """Adapter letting Poly-over-D serve as the coefficient domain of an
    outer Poly.  Division by non-monic outer divisors is refused."""

    __slots__ = ("dom", "zero", "one")

    def __init__(self, dom):
        self.dom = dom
        self.zero = Poly.zero(dom)
        self.one = Poly.one(dom)

    def from_int(self, n: int) -> Poly:
        return Poly.const(self.dom, self.dom.from_int(n))


# ---------------------------------------------------------------------------
# rational functions over GF(q)
# ---------------------------------------------------------------------------

class FuncField:
    """The rational function field GF(q)(x); one cached instance per field."""

    __slots__ = ("field", "zero", "one", "x")

    def __init__(self, field: Field):
        self.field = field
        pzero, pone = Poly.zero(field), Poly.one(field)
        self.zero = RatFunc(self, pzero, pone, reduced=True)
        self.one = RatFunc(self, pone, pone, reduced=True)
        self.x = RatFunc(self, Poly.gen(field), pone, reduced=True)

    def from_int(self, n: int) -> "RatFunc":
        return self.from_elem(self.field.from_int(n))

    def from_elem(self, c: FieldElem) -> "RatFunc":
        if c.field is not self.field:
            raise FieldMismatch("constant from a different field")
        return RatFunc(self, Poly.const(self.field, c), Poly.one(self.field), reduced=True)

    def from_poly(self, f: Poly) -> "RatFunc":
        return RatFunc(self, f, Poly.one(self.field))

    def poly(self, ints: Sequence[int]) -> Poly:
        return Poly.of_ints(self.field, ints)

    def rat(self, num, den) -> "RatFunc":
        num = num if isinstance(num, Poly) else self.poly(num)
        den = den if isinstance(den, Poly) else self.poly(den)
        return RatFunc(self, num, den)

    def __repr__(self):
        return f"{self.field!r}(x)"


@functools.lru_cache(maxsize=None)
def func_field(F: Field) -> FuncField:
    return FuncField(F)


class RatFunc:
    """Reduced fraction num/den of polynomials over GF(q), den monic."""

    __slots__ = ("ff", "num", "den")

    def __init__(self, ff: FuncField, num: Poly, den: Poly, reduced: bool = False):
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        if not reduced:
            if num.is_zero():
                den = Poly.one(ff.field)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num // g, den // g
                if not den.is_monic():
                    inv = den.lc.inverse()
                    num = num * inv
                    den = den * inv
        self.ff = ff
        self.num = num
        self.den = den

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> FieldElem:
        assert self.is_constant()
        return self.num.coeff(0)

    @property
    def height(self) -> int:
        """max(deg num, deg den); 0 for constants (including 0)."""
        return max(self.num.degree, self.den.degree, 0)

    def is_poly(self) -> bool:
        return self.den.degree == 0

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> Optional["RatFunc"]:
        if isinstance(other, RatFunc):
            if other.ff is not self.ff:
                raise FieldMismatch("rational functions over different fields")
            return other
        if isinstance(other, int):
            return self.ff.from_int(other)
        if isinstance(other, FieldElem):
            return self.ff.from_elem(other)
        if isinstance(other, Poly) and other.dom is self.ff.field:
            return self.ff.from_poly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.ff, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.ff, -self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.ff, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZero("division by the zero function")
        return RatFunc(self.ff, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.is_zero():
                raise DivisionByZero("0 to a negative power")
            return RatFunc(self.ff, self.den, self.num) ** (-e)
        result = self.ff.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, c: FieldElem) -> FieldElem:
        dv = self.den(c)
        if dv.is_zero():
            raise ZeroDenominator("evaluation at a pole")
        return self.num(c) / dv

    # -- comparisons -------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((id(self.ff), self.num.coeffs, self.den.coeffs))

    # -- rendering ----------------------------------------------------------------

    def render(self, var: str = "x") -> str:
        ns = self.num.render(var)
        if self.den.degree == 0:
            return ns
        ds = self.den.render(var)
        if "+" in ns or "-" in ns:
            ns = f"({ns})"
        if "+" in ds or "-" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return self.render()


# ---------------------------------------------------------------------------
# quadratics (delegates to the field-level solver)
# ---------------------------------------------------------------------------

def quadratic_roots(f: Poly) -> tuple:
    """Roots in GF(q) of a quadratic over GF(q), ascending.

    Works in both characteristics: odd q by discriminant, q even via
    half-trace (odd m) or a GF(2) kernel solve (even m).  A double root is
    reported once.
    """
    if not isinstance(f.dom, Field):
        raise DomainMismatch("quadratic_roots works over a finite field")
    if f.degree != 2:
        raise DomainMismatch(f"expected degree 2, got {f.degree}")
    g = f.monic()
    return ffield._solve_quadratic(f.dom, g.coeff(1), g.coeff(0))


# ---------------------------------------------------------------------------
# irreducibility / enumeration
# ---------------------------------------------------------------------------

def _powmod_q(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.dom)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over GF(q) by the Frobenius power criterion."""
    if not isinstance(f.dom, Field):
        raise DomainMismatch("irreducibility is tested over a finite field")
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    d = f.degree
    if d == 0:
        return False
    if d == 1:
        return True
    F = f.dom
    g = f.monic()
    x = Poly.gen(F)
    h = x
    frob = {}
    for i in range(1, d + 1):
        h = _powmod_q(h, F.order, g)
        frob[i] = h
    if frob[d] != x % g:
        return False
    for ell in ffield._prime_divisors(d):
        if frob[d // ell] == x % g:
            return False
        if g.gcd(frob[d // ell] - x).degree != 0:
            return False
    return True


def monic_polys(F: Field, d: int) -> Iterator[Poly]:
    """All monic degree-d polynomials over F in counter order."""
    q = F.order
    for i in range(q ** d):
        digits = []
        k = i
        for _ in range(d):
            digits.append(F.from_value(k % q))
            k //= q
        yield Poly(F, digits + [F.one])


def deterministic_irreducible(F: Union[Field, int], d: int) -> Poly:
    """First monic irreducible of degree d over F in counter order."""
    if isinstance(F, int):
        F = field_make(F)
    for cand in monic_polys(F, d):
        if is_irreducible(cand):
            return cand
    raise AssertionError("no irreducible candidate")  # pragma: no cover


# ---------------------------------------------------------------------------
# factorization over GF(q)
# ---------------------------------------------------------------------------

def _pth_root_poly(f: Poly) -> Poly:
    """h with h^p = f, for f whose derivative vanishes (exponents all p|i)."""
    F = f.dom
    p = F.p
    e = F.order // p  # c -> c^(q/p) is the p-th root in GF(q)
    return Poly(F, [f.coeff(i) ** e for i in range(0, f.degree + 1, p)])


def _squarefree_decomposition(f: Poly) -> list:
    """[(monic squarefree g_i, multiplicity e_i)] with f = prod g_i^e_i."""
    F = f.dom
    p = F.p
    out = []
    e = 1
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero():
            f = _pth_root_poly(f)
            e *= p
            continue
        g = f.gcd(df)
        w = f // g
        i = 1
        while w.degree > 0:
            y = w.gcd(g)
            z = w // y
            if z.degree > 0:
                out.append((z, i * e))
            w = y
            g = g // y
            i += 1
        f = g
        e *= p
        if f.degree > 0:
            f = _pth_root_poly(f)
    return out


def _distinct_degree(f: Poly) -> list:
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    F = f.dom
    out = []
    x = Poly.gen(F)
    h = x
    g = f
    d = 0
    while g.degree > 2 * (d + 1) - 1 and g.degree > 0:
        d += 1
        h = _powmod_q(h, F.order, g)
        gd = g.gcd(h - x)
        if gd.degree > 0:
            out.append((gd, d))
            g = g // gd
            h = h % g
    if g.degree > 0:
        out.append((g, g.degree))
    return out


def _equal_degree_split(f: Poly, d: int, rng: random.Random) -> list:
    """All monic irreducible factors of f, each of degree d (Cantor-Zassenhaus)."""
    F = f.dom
    if f.degree == d:
        return [f]
    q = F.order
    n = f.degree
    while True:
        r = Poly(F, [F.from_value(rng.randrange(q)) for _ in range(n)])
        if r.degree < 1:
            continue
        if F.p == 2:
            w = Poly.zero(F)
            t = r % f
            for _ in range(d * F.m):
                w = (w + t) % f
                t = (t * t) % f
        else:
            w = _powmod_q(r, (q ** d - 1) // 2, f) - Poly.one(F)
        g = f.gcd(w)
        if 0 < g.degree < f.degree:
            return (_equal_degree_split(g, d, rng)
                    + _equal_degree_split(f // g, d, rng))


def factor_fq(f: Poly):
    """Complete factorization over GF(q): (unit, [(monic irreducible, mult)]).

    The factor list is sorted by (degree, counter key), and the random choices
    inside equal-degree splitting come from a fixed-seed PRNG, so the result
    is identical run to run.
    """
    if not isinstance(f.dom, Field):
        raise DomainMismatch("factor_fq works over a finite field")
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_LIMIT:
        raise SizeExceeded(f"degree {f.degree} exceeds {FACTOR_DEGREE_LIMIT}")
    unit = f.lc
    if f.degree == 0:
        return unit, []
    rng = random.Random(FACTOR_SEED)
    factors = []
    for g, mult in _squarefree_decomposition(f.monic()):
        for gd, d in _distinct_degree(g):
            for irr in _equal_degree_split(gd, d, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda t: t[0].counter_key())
    return unit, factors


def poly_roots(f: Poly) -> list:
    """Roots of f in GF(q), ascending, without multiplicity."""
    _, factors = factor_fq(f)
    roots = [-g.coeff(0) for g, _ in factors if g.degree == 1]
    return sorted(roots)


def xgcd(a: Poly, b: Poly):
    """(g, u, v) with u*a + v*b = g, g the monic gcd (or zero)."""
    dom = a.dom
    r0, r1 = a, b
    s0, s1 = Poly.one(dom), Poly.zero(dom)
    t0, t1 = Poly.zero(dom), Poly.one(dom)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = dom.one / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


# ---------------------------------------------------------------------------
# embeddings GF(q) -> GF(q^d)
# ---------------------------------------------------------------------------

class Embedding:
    """The field embedding sending F1's generator to the least root of F1's
    modulus inside F2.  Callable on elements of F1."""

    __slots__ = ("src", "dst", "root")

    def __init__(self, src: Field, dst: Field, root: FieldElem):
        self.src = src
        self.dst = dst
        self.root = root

    def __call__(self, e: FieldElem) -> FieldElem:
        if e.field is not self.src:
            raise FieldMismatch("element not in the embedding's source field")
        acc = self.dst.zero
        for c in reversed(e.coeffs):
            acc = acc * self.root + self.dst.from_int(c)
        return acc


@functools.lru_cache(maxsize=None)
def embedding(F1: Field, F2: Field) -> Embedding:
    if F1.p != F2.p or F2.m % F1.m != 0:
        raise FieldMismatch(f"no embedding {F1!r} -> {F2!r}")
    if F1 is F2:
        return Embedding(F1, F2, F2.gen())
    mod = Poly.of_ints(F2, list(F1.modulus))
    roots = poly_roots(mod)
    assert roots, "modulus must split in the extension"
    return Embedding(F1, F2, roots[0])
