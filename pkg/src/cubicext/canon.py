"""Canonical families of cubics and explicit root transport between them.

Every monic cubic X^3 + eX^2 + fX + g over a base B (a finite field or a
rational function field GF(q)(x)) reduces to exactly one of five shapes:

  Pure{a}              X^3 - a                    (characteristic != 3)
  DepressedTrace{a}    X^3 - 3X - a               (characteristic != 3)
  Char3{a}             X^3 + aX + a^2             (characteristic 3)
  InseparablePure{a}   X^3 - a                    (characteristic 3, e=f=0)
  Reducible{root, (b, c)}   (X - root)(X^2 + bX + c)

reduce_cubic returns the canonical shape together with the fractional-linear
substitution sending a root of the input to a root of the canonical form.
The substitution convention: FracLinear(m00, m01, m10, m11) acts as

    y  |->  (m11*y + m10) / (m01*y + m00),

i.e. as the matrix [[m00, m01], [m10, m11]] on the column (1, y); composition
of maps is then the matrix product.  Matrices are normalized projectively
(first nonzero entry scaled to 1), so equal maps have equal entries.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import (DegenerateParameter, DomainMismatch, FieldMismatch,
                     PoleHit, ReducibleInput, SingularMatrix,
                     WrongCharacteristic, WrongFieldClass)
from .ffield import (Cube, Field, FieldElem, NonCube, NonSquare, Square,
                     cube_classify, square_classify, trace_to_prime,
                     _solve_quadratic)
from .polyring import (FuncField, Poly, RatFunc, factor_fq, poly_roots, xgcd)
from . import places as places_mod

Value = Union[FieldElem, RatFunc]


def base_of(v: Value):
    if isinstance(v, FieldElem):
        return v.field
    if isinstance(v, RatFunc):
        return v.ff
    raise DomainMismatch(f"not a field value: {v!r}")


def char_of(base) -> int:
    return base.p if isinstance(base, Field) else base.field.p


def value_key(v: Value):
    """Deterministic total order on values of one base."""
    if isinstance(v, FieldElem):
        return (v.value,)
    return (v.den.counter_key(), v.num.counter_key())


# ---------------------------------------------------------------------------
# the shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cubic:
    """Monic cubic X^3 + eX^2 + fX + g; e, f, g in one base."""
    e: Value
    f: Value
    g: Value

    @property
    def base(self):
        return base_of(self.e)

    def as_poly(self) -> Poly:
        b = self.base
        return Poly(b, (self.g, self.f, self.e, b.one))

    def __call__(self, y):
        return ((y + self.e) * y + self.f) * y + self.g


@dataclass(frozen=True)
class Pure:
    a: Value

    @property
    def base(self):
        return base_of(self.a)

    def cubic(self) -> Cubic:
        b = self.base
        return Cubic(b.zero, b.zero, -self.a)


@dataclass(frozen=True)
class DepressedTrace:
    a: Value

    @property
    def base(self):
        return base_of(self.a)

    def cubic(self) -> Cubic:
        b = self.base
        return Cubic(b.zero, b.from_int(-3), -self.a)


@dataclass(frozen=True)
class Char3:
    a: Value

    @property
    def base(self):
        return base_of(self.a)

    def cubic(self) -> Cubic:
        b = self.base
        return Cubic(b.zero, self.a, self.a * self.a)


@dataclass(frozen=True)
class InseparablePure:
    a: Value

    @property
    def base(self):
        return base_of(self.a)

    def cubic(self) -> Cubic:
        b = self.base
        return Cubic(b.zero, b.zero, -self.a)


@dataclass(frozen=True)
class Reducible:
    root: Value
    quad: tuple  # (b, c): the cofactor X^2 + bX + c

    @property
    def base(self):
        return base_of(self.root)

    def cubic(self) -> Cubic:
        b, c = self.quad
        r = self.root
        return Cubic(b - r, c - r * b, -r * c)


CanonicalCubic = Union[Pure, DepressedTrace, Char3, InseparablePure, Reducible]


# ---------------------------------------------------------------------------
# fractional-linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FracLinear:
    m00: Value
    m01: Value
    m10: Value
    m11: Value

    def __post_init__(self):
        det = self.m00 * self.m11 - self.m01 * self.m10
        if _is_zero(det):
            raise SingularMatrix("zero determinant")
        for pivot in (self.m00, self.m01, self.m10, self.m11):
            if not _is_zero(pivot):
                break
        if pivot != base_of(pivot).one:
            inv = 1 / pivot
            object.__setattr__(self, "m00", self.m00 * inv)
            object.__setattr__(self, "m01", self.m01 * inv)
            object.__setattr__(self, "m10", self.m10 * inv)
            object.__setattr__(self, "m11", self.m11 * inv)

    @staticmethod
    def identity(base) -> "FracLinear":
        return FracLinear(base.one, base.zero, base.zero, base.one)

    def is_identity(self) -> bool:
        return (_is_zero(self.m01) and _is_zero(self.m10)
                and self.m00 == self.m11)

    def apply(self, y: Value) -> Value:
        den = self.m01 * y + self.m00
        if _is_zero(den):
            raise PoleHit("map evaluated at its pole")
        return (self.m11 * y + self.m10) / den

    def inverse(self) -> "FracLinear":
        return FracLinear(self.m11, -self.m01, -self.m10, self.m00)

    def compose(self, other: "FracLinear") -> "FracLinear":
        """self after other (matrix product self * other)."""
        return FracLinear(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def entries(self) -> tuple:
        return (self.m00, self.m01, self.m10, self.m11)


def _is_zero(v) -> bool:
    return v.is_zero()


def frac_apply(M: FracLinear, y: Value) -> Value:
    return M.apply(y)


def frac_invert(M: FracLinear) -> FracLinear:
    return M.inverse()


# ---------------------------------------------------------------------------
# reduction to canonical form
# ---------------------------------------------------------------------------

def reduce_cubic(T: Cubic):
    """(canonical shape, map sending roots of T to roots of the shape)."""
    b = T.base
    e, f, g = T.e, T.f, T.g
    ident = FracLinear.identity(b)
    if _is_zero(g):
        return Reducible(b.zero, (e, f)), ident
    if char_of(b) == 3:
        return _reduce_char3(b, e, f, g, ident)
    # a detected rational root ends the reduction
    if _is_zero(27 * g * g + 2 * f ** 3 - 9 * e * f * g):
        r = -3 * g / f  # f != 0 here, else g would be 0
        return Reducible(r, (e + r, f + r * (e + r))), ident
    if _is_zero(e) and f == b.from_int(-3):
        return DepressedTrace(-g), ident
    if 3 * e * g == f * f:
        a = 27 * g ** 3 / (f ** 3 - 27 * g * g)
        m = FracLinear(3 * g, f, b.zero, 3 * g)
        return Pure(a), m
    d = 3 * e * g - f * f
    a = -2 - (27 * g * g - 9 * e * f * g + 2 * f ** 3) ** 2 / d ** 3
    m = FracLinear(3 * g * d, f * d, 3 * g * d, f ** 3 + 27 * g * g - 6 * e * f * g)
    return DepressedTrace(a), m


def _reduce_char3(b, e, f, g, ident):
    if not _is_zero(e) and _is_zero(g * e ** 3 + f ** 3 - f * f * e * e):
        r = f / e
        return Reducible(r, (e + r, f + r * (e + r))), ident
    if _is_zero(e) and _is_zero(f):
        return InseparablePure(-g), ident
    if _is_zero(e):
        a = g * g / f ** 3
        return Char3(a), FracLinear(b.one, b.zero, b.zero, g / (f * f))
    n = g * e ** 3 + f ** 3 - f * f * e * e
    a = n / e ** 6
    return Char3(a), FracLinear(-f * e ** 4, e ** 5, n, b.zero)


def cubic_of(shape) -> Cubic:
    return shape.cubic()


# ---------------------------------------------------------------------------
# global square / cube tests over GF(q)(x)
# ---------------------------------------------------------------------------

def global_square_test(u: RatFunc) -> Optional[RatFunc]:
    """A square root of u in GF(q)(x), or None.  0 -> 0."""
    if u.is_zero():
        return u
    return _global_power_root(u, 2)


def global_cube_test(u: RatFunc) -> Optional[RatFunc]:
    """A cube root of u in GF(q)(x), or None.  0 -> 0."""
    if u.is_zero():
        return u
    return _global_power_root(u, 3)


def _global_power_root(u: RatFunc, n: int) -> Optional[RatFunc]:
    ff = u.ff
    unit = u.num.lc  # den is monic
    if n == 2:
        cls = square_classify(unit)
        if isinstance(cls, NonSquare):
            return None
    else:
        cls = cube_classify(unit)
        if isinstance(cls, NonCube):
            return None
    root_num = Poly.const(ff.field, cls.roots[0])
    root_den = Poly.one(ff.field)
    for p, mult in factor_fq(u.num.monic())[1]:
        if mult % n:
            return None
        root_num = root_num * p ** (mult // n)
    for p, mult in factor_fq(u.den)[1]:
        if mult % n:
            return None
        root_den = root_den * p ** (mult // n)
    root = RatFunc(ff, root_num, root_den)
    assert root ** n == u
    return root


def _square_root_in(base, v: Value) -> Optional[Value]:
    if isinstance(base, Field):
        cls = square_classify(v)
        return None if isinstance(cls, NonSquare) else cls.roots[0]
    return global_square_test(v)


def _cube_root_in(base, v: Value) -> Optional[Value]:
    if isinstance(base, Field):
        cls = cube_classify(v)
        return None if isinstance(cls, NonCube) else cls.roots[0]
    return global_cube_test(v)


# ---------------------------------------------------------------------------
# purely cubic detection; Galois tests
# ---------------------------------------------------------------------------

def purely_cubic_root(a: Value) -> Optional[Value]:
    """The least root c of X^2 + aX + 1 over the base of a, or None.

    Such a c exists exactly when X^3 - 3X - a generates a purely cubic
    extension; the pure parameter is c itself.
    """
    base = base_of(a)
    if isinstance(base, Field):
        roots = _solve_quadratic(base, a, base.one)
        return roots[0] if roots else None
    p = char_of(base)
    if p != 2:
        d = _square_root_in(base, a * a - 4)
        if d is None:
            return None
        cands = [(-a + d) / 2, (-a - d) / 2]
        return min(cands, key=value_key)
    # characteristic 2: c = a*y with y^2 + y = 1/a^2
    if a.is_zero():
        return base.one  # X^2 + 1 = (X + 1)^2
    from .arith import artin_schreier_solve
    y0 = artin_schreier_solve(1 / (a * a))
    if y0 is None:
        return None
    return min((a * y0, a * y0 + a), key=value_key)


def is_galois(shape: CanonicalCubic) -> bool:
    """Whether the (assumed irreducible) canonical cubic is Galois over its base."""
    base = shape.base
    p = char_of(base)
    if isinstance(shape, Reducible):
        raise ReducibleInput("Galois test expects an irreducible cubic")
    if isinstance(shape, InseparablePure):
        return False
    if isinstance(shape, Pure):
        q = base.order if isinstance(base, Field) else base.field.order
        return q % 3 == 1
    if isinstance(shape, Char3):
        return _square_root_in(base, -shape.a) is not None
    # DepressedTrace
    a = shape.a
    if p != 2:
        return _square_root_in(base, -27 * (a * a - 4)) is not None
    if a.is_zero():
        raise ReducibleInput("X^3 - 3X is reducible")
    u = 1 / (a * a) + 1
    if isinstance(base, Field):
        return trace_to_prime(u).coeffs[0] == 0
    from .arith import artin_schreier_solve
    return artin_schreier_solve(u) is not None


def galois_param(A: Value, B: Value) -> Value:
    """(2A^2 + 2AB - B^2)/(A^2 + AB + B^2): a parameter whose depressed
    form is always Galois.  DegenerateParameter when the denominator is 0."""
    den = A * A + A * B + B * B
    if _is_zero(den):
        raise DegenerateParameter("A^2 + AB + B^2 = 0")
    return (2 * A * A + 2 * A * B - B * B) / den


def galois_denominator_check(a: RatFunc) -> bool:
    """When q = -1 mod 3: every irreducible factor of a's denominator has
    even degree (a necessary condition for the depressed form to be Galois).
    """
    if not isinstance(a, RatFunc):
        raise DomainMismatch("expects a rational function")
    q = a.ff.field.order
    if q % 3 != 2:
        raise WrongFieldClass(f"needs |F| = -1 mod 3, got {q}")
    return all(g.degree % 2 == 0 for g, _ in factor_fq(a.den)[1])


def shanks_to_canonical(a: Value):
    """Rewrite X^3 + aX^2 - (a+3)X + 1 in depressed form.

    Returns (DepressedTrace, map); the map sends roots of the input family to
    roots of the depressed form.  Degenerates when a^2 + 3a + 9 = 0, and the
    family member at 2a + 3 = 0 is reducible (rational root 2), which makes
    the root map singular.
    """
    base = base_of(a)
    if char_of(base) == 3:
        raise WrongCharacteristic("the conversion degenerates in characteristic 3")
    d = a * a + 3 * a + 9
    if _is_zero(d):
        raise DegenerateParameter("a^2 + 3a + 9 = 0")
    if _is_zero(2 * a + 3):
        raise ReducibleInput("2a + 3 = 0: that family member has the rational root 2")
    param = (2 * a * a + 6 * a - 9) / d
    m = FracLinear(base.from_int(3), -(a + 3), base.from_int(3), a)
    return DepressedTrace(param), m


def artin_schreier_normalize(shape: Char3):
    """Characteristic-3 Galois normal form.

    For Char3{a} with -a = h^2 a square, the substitution w = -y/h turns
    y^3 + ay + a^2 = 0 into w^3 - w - h = 0.  Returns (h, map).
    """
    if not isinstance(shape, Char3):
        raise DomainMismatch("expects a Char3 shape")
    base = shape.base
    h = _square_root_in(base, -shape.a)
    if h is None:
        raise DegenerateParameter("-a is not a square: the form is not Galois")
    m = FracLinear(base.one, base.zero, base.zero, -1 / h)
    return h, m


# ---------------------------------------------------------------------------
# isomorphism of canonical families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Isomorphic:
    witness: tuple


@dataclass(frozen=True)
class NotIsomorphic:
    witness: Optional[object]  # a separating Place when one was found


@dataclass(frozen=True)
class Unknown:
    pass


IsomResult = Union[Isomorphic, NotIsomorphic, Unknown]


def isom_pure(a1: Value, a2: Value) -> bool:
    """K(y1)=K(y2) for y_i^3 = a_i (both assumed irreducible): a1/a2 or
    a1/a2^2 must be a cube in the base."""
    base = base_of(a1)
    if base is not base_of(a2):
        raise FieldMismatch("parameters live over different bases")
    if _is_zero(a1) or _is_zero(a2):
        raise ReducibleInput("pure parameter 0")
    return (_cube_root_in(base, a1 / a2) is not None
            or _cube_root_in(base, a1 / (a2 * a2)) is not None)


def _depressed_witness_ok(a1: Value, a2: Value, alpha: Value, beta: Value) -> bool:
    if alpha * alpha + a2 * alpha * beta + beta * beta != base_of(a1).one:
        return False
    cand = (-3 * a2 * alpha * alpha * beta + a2 * beta ** 3 + 6 * alpha
            + alpha ** 3 * a2 * a2 - 8 * alpha ** 3)
    return cand == a1


def _char3_witness_ok(a1: Value, a2: Value, j: int, w: Value) -> bool:
    num = j * a1 * a1 + w ** 3 + a1 * w
    return a2 == num * num / a1 ** 3


def _polys_of_degree(F: Field, d: int):
    """Polynomials over F of degree exactly d, counter order within each lead."""
    q = F.order
    if d == 0:
        for v in range(1, q):
            yield Poly.const(F, F.from_value(v))
        return
    for lead in range(1, q):
        for rest in range(q ** d):
            digits = []
            k = rest
            for _ in range(d):
                digits.append(F.from_value(k % q))
                k //= q
            yield Poly(F, digits + [F.from_value(lead)])


def _rat_candidates(ff: FuncField, max_height: int, budget: int):
    """Reduced rational functions graded by height, at most budget of them."""
    from .polyring import monic_polys
    count = 0
    F = ff.field
    for h in range(max_height + 1):
        if h == 0:
            for c in F.elements():
                yield ff.from_elem(c)
                count += 1
                if count >= budget:
                    return
            continue
        for dd in range(h + 1):
            for den in monic_polys(F, dd):
                for dn in range(h + 1):
                    if max(dn, dd) != h:
                        continue
                    for num in _polys_of_degree(F, dn):
                        cand = RatFunc(ff, num, den)
                        if cand.num.coeffs != num.coeffs or cand.den.coeffs != den.coeffs:
                            continue  # not in lowest terms: seen earlier
                        yield cand
                        count += 1
                        if count >= budget:
                            return


DEPRESSED_SEARCH_BUDGET = 6000
SEPARATION_PLACE_BUDGET = 240


def _separate_by_signature(shape1, shape2, search_bound: int):
    """Scan places for differing splitting signatures.  Place or None."""
    from . import arith
    e1 = arith.Extension(shape1)
    e2 = arith.Extension(shape2)
    ff = shape1.base
    scanned = 0
    for P in places_mod.places_up_to(ff, max(1, min(search_bound, 4))):
        if arith.signature(e1, P) != arith.signature(e2, P):
            return P
        scanned += 1
        if scanned >= SEPARATION_PLACE_BUDGET:
            break
    return None


def isom_depressed(a1: Value, a2: Value, search_bound: int = 6) -> IsomResult:
    """Decide K(y1) = K(y2) for y_i^3 - 3y_i = a_i (both irreducible).

    A witness is (alpha, beta) with alpha^2 + a2*alpha*beta + beta^2 = 1 and
    a1 = -3*a2*alpha^2*beta + a2*beta^3 + 6*alpha + a2^2*alpha^3 - 8*alpha^3;
    then y1 = alpha*y2^2 + beta*y2 - 2*alpha.  Over GF(q)(x) the witness
    search walks the conic's rational parametrization in height order under a
    fixed budget, so Unknown is a possible (honest) outcome.
    """
    base = base_of(a1)
    if base is not base_of(a2):
        raise FieldMismatch("parameters live over different bases")
    if isinstance(base, Field):
        for alpha in base.elements():
            for beta in base.elements():
                if _depressed_witness_ok(a1, a2, alpha, beta):
                    return Isomorphic((alpha, beta))
        return NotIsomorphic(None)
    # conic points: the two axis points, then the chord parametrization
    one = base.one
    for beta in (one, -one):
        if _depressed_witness_ok(a1, a2, base.zero, beta):
            return Isomorphic((base.zero, beta))
    tried = 0
    for t in _rat_candidates(base, search_bound, DEPRESSED_SEARCH_BUDGET):
        den = t * t + a2 * t + 1
        if den.is_zero():
            continue
        alpha = -(a2 + 2 * t) / den
        beta = 1 + t * alpha
        tried += 1
        if _depressed_witness_ok(a1, a2, alpha, beta):
            return Isomorphic((alpha, beta))
    sep = _separate_by_signature(DepressedTrace(a1), DepressedTrace(a2), search_bound)
    if sep is not None:
        return NotIsomorphic(sep)
    return Unknown()


CHAR3_SEARCH_BUDGET = 6000


def isom_char3(a1: Value, a2: Value, search_bound: int = 6) -> IsomResult:
    """Decide K(y1) = K(y2) for y_i^3 + a_i y_i + a_i^2 = 0 (both irreducible).

    A witness is (j, w), j in {1, 2}: a2 = (j*a1^2 + w^3 + a1*w)^2 / a1^3.
    """
    base = base_of(a1)
    if base is not base_of(a2):
        raise FieldMismatch("parameters live over different bases")
    if _is_zero(a1) or _is_zero(a2):
        raise ReducibleInput("char-3 parameter 0")
    if isinstance(base, Field):
        for j in (1, 2):
            for w in base.elements():
                if _char3_witness_ok(a1, a2, j, w):
                    return Isomorphic((j, w))
        return NotIsomorphic(None)
    for j in (1, 2):
        for w in _rat_candidates(base, search_bound, CHAR3_SEARCH_BUDGET // 2):
            if _char3_witness_ok(a1, a2, j, w):
                return Isomorphic((j, w))
    sep = _separate_by_signature(Char3(a1), Char3(a2), search_bound)
    if sep is not None:
        return NotIsomorphic(sep)
    return Unknown()


# ---------------------------------------------------------------------------
# rational roots of canonical shapes
# ---------------------------------------------------------------------------

def has_rational_root(shape: CanonicalCubic) -> Optional[Value]:
    """The least root of the canonical cubic in its base, or None.

    Over GF(q) this is plain factorization.  Over GF(q)(x) pure shapes go
    through the global cube test, and the other shapes clear denominators to
    a monic integral cubic whose polynomial roots are found by residue
    interpolation (CRT over enough places, each candidate verified exactly).
    """
    base = shape.base
    if isinstance(shape, Reducible):
        return shape.root
    if isinstance(base, Field):
        roots = poly_roots(shape.cubic().as_poly())
        return roots[0] if roots else None
    if isinstance(shape, (Pure, InseparablePure)):
        return global_cube_test(shape.a)
    a = shape.a
    B = a.den
    A = a.num
    ff = base
    if isinstance(shape, DepressedTrace):
        # y = z/B with z^3 - 3 B^2 z - A B^2 = 0
        c1 = Poly.const(ff.field, ff.field.from_int(-3)) * B * B
        c0 = -A * B * B
        bound = max(B.degree, (A.degree + 2 * B.degree) // 3) + 1
    else:  # Char3
        # y = z/B with z^3 + A B z + A^2 B = 0
        c1 = A * B
        c0 = A * A * B
        bound = max((A.degree + B.degree + 1) // 2, (2 * A.degree + B.degree) // 3) + 1
    roots = _integral_cubic_roots(ff, c1, c0, bound)
    if not roots:
        return None
    cands = sorted((RatFunc(ff, z, B) for z in roots), key=value_key)
    return cands[0]


def _integral_cubic_roots(ff: FuncField, c1: Poly, c0: Poly, bound: int) -> list:
    """All z in GF(q)[x] with z^3 + c1 z + c0 = 0 and deg z <= bound."""
    from .polyring import monic_polys, is_irreducible
    F = ff.field
    # collect places with total degree > bound
    chosen = []
    total = 0
    d = 1
    while total <= bound:
        for pi in monic_polys(F, d):
            if is_irreducible(pi):
                chosen.append(pi)
                total += d
                if total > bound:
                    break
        d += 1
    # per-place root sets of the reduced cubic
    root_sets = []
    for pi in chosen:
        P = places_mod.Place(ff, pi)
        rd = places_mod.residue_field(P)
        k = rd.field
        red = Poly(k, (rd.eval_poly(c0), rd.eval_poly(c1), k.zero, k.one))
        rts = poly_roots(red)
        if not rts:
            return []
        root_sets.append([rd.lift(r) for r in rts])
    # CRT combinations
    candidates = [Poly.zero(F)]
    modulus = Poly.one(F)
    for pi, lifts in zip(chosen, root_sets):
        g, u, v = xgcd(modulus, pi)
        assert g.degree == 0 and g.is_monic()
        new = []
        combined_mod = modulus * pi
        for cand in candidates:
            for lift in lifts:
                # z = cand mod modulus, z = lift mod pi
                z = cand * v * pi + lift * u * modulus
                new.append(z % combined_mod)
        candidates = new
        modulus = combined_mod
    out = []
    seen = set()
    for z in candidates:
        if z.degree > bound:
            continue
        if z.coeffs in seen:
            continue
        seen.add(z.coeffs)
        if (z ** 3 + c1 * z + c0).is_zero():
            out.append(z)
    return out
