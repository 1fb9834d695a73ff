"""Places of the rational function field GF(q)(x).

A place is either a monic irreducible polynomial (the finite place it
generates) or the infinite place.  The infinite place sorts first, finite
places sort by (degree, counter key); every list of places this module
returns is in that order.

Valuation conventions: v_P(f) counts the power of the monic carrier dividing
f, and v_infinity(num/den) = deg den - deg num, so deg-degree bookkeeping
sums to zero on principal divisors (asserted in divisor_of).

residue_field returns a ResidueData bundle: the residue field GF(q^d)
itself, the embedding GF(q) -> GF(q^d), and the distinguished root of the
carrier (the least one), so that reduction is literally evaluation at the
root.  ResidueData.lift inverts reduction on polynomials of degree < d,
which the local Artin-Schreier machinery in arith relies on.
"""
from __future__ import annotations

import functools
import math
from typing import Iterator, Optional, Union

from .errors import DomainMismatch, NegativeValuation, ZeroInput
from .ffield import FieldElem, invert_modp
from .polyring import (Embedding, FuncField, Poly, RatFunc, embedding,
                       is_irreducible, monic_polys)

INFINITE_VALUATION = math.inf


class Place:
    """A place of GF(q)(x): finite (monic irreducible carrier) or infinite."""

    __slots__ = ("ff", "pi")

    def __init__(self, ff: FuncField, pi: Optional[Poly]):
        self.ff = ff
        self.pi = pi

    @staticmethod
    def finite(pi: Poly) -> "Place":
        if pi.degree < 1:
            raise DomainMismatch("a finite place needs a nonconstant carrier")
        if not pi.is_monic():
            raise DomainMismatch("the carrier of a finite place must be monic")
        if not is_irreducible(pi):
            raise DomainMismatch("the carrier of a finite place must be irreducible")
        return Place(func_field_of(pi), pi)

    @staticmethod
    def infinity(ff: FuncField) -> "Place":
        return Place(ff, None)

    @property
    def is_infinite(self) -> bool:
        return self.pi is None

    @property
    def degree(self) -> int:
        return 1 if self.pi is None else self.pi.degree

    def sort_key(self):
        if self.pi is None:
            return (0, 0, ())
        return (1,) + self.pi.counter_key()

    def render(self) -> str:
        return "infinity" if self.pi is None else self.pi.render()

    def __repr__(self):
        return self.render()

    def __eq__(self, other):
        if not isinstance(other, Place):
            return NotImplemented
        if self.ff is not other.ff:
            return False
        if self.pi is None or other.pi is None:
            return self.pi is None and other.pi is None
        return self.pi == other.pi

    def __hash__(self):
        return hash((id(self.ff), None if self.pi is None else self.pi.coeffs))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


def func_field_of(p: Poly) -> FuncField:
    from .polyring import func_field
    return func_field(p.dom)


# ---------------------------------------------------------------------------
# valuations
# ---------------------------------------------------------------------------

def _ord_in(f: Poly, pi: Poly) -> int:
    n = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return n
        f = q
        n += 1


def valuation(a: RatFunc, P: Place) -> Union[int, float]:
    """v_P(a); +infinity for a = 0."""
    if a.is_zero():
        return INFINITE_VALUATION
    if P.is_infinite:
        return a.den.degree - a.num.degree
    # the fraction is reduced, so at most one of num/den is divisible
    if (a.num % P.pi).is_zero():
        return _ord_in(a.num, P.pi)
    if (a.den % P.pi).is_zero():
        return -_ord_in(a.den, P.pi)
    return 0


def uniformizer(P: Place) -> RatFunc:
    """pi for a finite place, 1/x at infinity."""
    if P.is_infinite:
        return P.ff.one / P.ff.x
    return P.ff.from_poly(P.pi)


# ---------------------------------------------------------------------------
# residue fields
# ---------------------------------------------------------------------------

class ResidueData:
    """Residue field of a place with the maps in and out of it.

    field  -- GF(q^d) (GF(q) itself at infinity)
    embed  -- the embedding GF(q) -> field
    root   -- the least root of the carrier in field (None at infinity)
    """

    __slots__ = ("place", "field", "embed", "root", "_lift_inverse")

    def __init__(self, place: Place, field, embed: Embedding, root):
        self.place = place
        self.field = field
        self.embed = embed
        self.root = root
        self._lift_inverse = None

    def eval_poly(self, f: Poly) -> FieldElem:
        """f(root) with coefficients pushed through the embedding."""
        if self.place.is_infinite:
            raise DomainMismatch("no carrier root at infinity")
        acc = self.field.zero
        for c in reversed(f.coeffs):
            acc = acc * self.root + self.embed(c)
        return acc

    def reduce(self, a: RatFunc) -> FieldElem:
        """The residue of a at the place; caller guarantees v_P(a) >= 0."""
        if self.place.is_infinite:
            dn, dd = a.num.degree, a.den.degree
            if dn < dd:
                return self.field.zero
            return a.num.lc / a.den.lc
        return self.eval_poly(a.num) / self.eval_poly(a.den)

    def lift(self, c: FieldElem) -> Poly:
        """The unique polynomial of degree < d reducing to c at the place."""
        base = self.place.ff.field
        if self.place.is_infinite:
            return Poly.const(base, c)
        if c.field is not self.field:
            raise DomainMismatch("element not in the residue field")
        d = self.place.degree
        m = base.m
        if self._lift_inverse is None:
            cols = []
            for i in range(d):
                ri = self.root ** i
                for j in range(m):
                    basis = base.elem([0] * j + [1])
                    cols.append((self.embed(basis) * ri).coeffs)
            n = d * m
            matrix = [[cols[col][row] for col in range(n)] for row in range(n)]
            self._lift_inverse = invert_modp(matrix, base.p)
        vec = list(c.coeffs)
        n = len(vec)
        sol = [sum(self._lift_inverse[i][j] * vec[j] for j in range(n)) % base.p
               for i in range(n)]
        coeffs = [base.elem(sol[i * m:(i + 1) * m]) for i in range(d)]
        return Poly(base, coeffs)


@functools.lru_cache(maxsize=None)
def residue_field(P: Place) -> ResidueData:
    from .ffield import field_make
    base = P.ff.field
    if P.is_infinite:
        return ResidueData(P, base, embedding(base, base), None)
    d = P.degree
    k = field_make(base.p, base.m * d)
    emb = embedding(base, k)
    if d == 1:
        root = emb(-P.pi.coeff(0))
    else:
        from .polyring import poly_roots
        lifted = Poly(k, [emb(c) for c in P.pi.coeffs])
        root = poly_roots(lifted)[0]
    return ResidueData(P, k, emb, root)


def reduce_at(a: RatFunc, P: Place) -> FieldElem:
    """The image of a in the residue field; NegativeValuation at a pole."""
    v = valuation(a, P)
    if v < 0:
        raise NegativeValuation(f"v = {v} at {P.render()}")
    return residue_field(P).reduce(a)


# ---------------------------------------------------------------------------
# divisors and place enumeration
# ---------------------------------------------------------------------------

def divisor_of(a: RatFunc) -> list:
    """[(Place, v_P(a))] over the support, in place order; ZeroInput on 0."""
    if a.is_zero():
        raise ZeroInput("the zero function has no divisor")
    from .polyring import factor_fq
    out = []
    v_inf = a.den.degree - a.num.degree
    if v_inf:
        out.append((Place.infinity(a.ff), v_inf))
    for g, mult in factor_fq(a.num)[1]:
        out.append((Place(a.ff, g), mult))
    for g, mult in factor_fq(a.den)[1]:
        out.append((Place(a.ff, g), -mult))
    out.sort(key=lambda t: t[0].sort_key())
    assert sum(v * P.degree for P, v in out) == 0
    return out


@functools.lru_cache(maxsize=None)
def places_up_to(ff: FuncField, dmax: int) -> tuple:
    """Infinity plus every finite place of degree <= dmax, in place order."""
    out = [Place.infinity(ff)]
    for d in range(1, dmax + 1):
        for f in monic_polys(ff.field, d):
            if is_irreducible(f):
                out.append(Place(ff, f))
    return tuple(out)
