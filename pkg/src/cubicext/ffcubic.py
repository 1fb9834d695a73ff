"""Decomposition of cubic polynomials over finite fields.

A monic cubic over GF(s) lands in exactly one of five bins:

* ``Irreducible``     no roots in GF(s);
* ``LinTimesQuad``    one simple root times an irreducible quadratic;
* ``ThreeDistinct``   three distinct roots in GF(s);
* ``LinTimesSquare``  a simple root times the square of another linear factor;
* ``Triple``          one root of multiplicity three.

``decompose_pure``, ``decompose_depressed`` and ``decompose_char3`` classify
the three canonical one-parameter families by closed-form criteria (cube
characters, discriminants, absolute traces); witnesses are then pulled out by
direct root finding.  ``decompose_any`` accepts an arbitrary monic cubic (or
an already-reduced canonical shape), reduces it, and transports the witnesses
back through the inverse fractional-linear substitution.

``brute_factor`` is an independent oracle: it scans every field element and
never consults the criteria.  Keep it dumb; the tests rely on that.
"""

from dataclasses import dataclass
from typing import ClassVar, Tuple, Union

from .canon import (
    Char3,
    Cubic,
    DepressedTrace,
    FracLinear,
    InseparablePure,
    Pure,
    Reducible,
    reduce_cubic,
)
from .errors import SizeExceeded, WrongCharacteristic, WrongFieldClass
from .ffield import (
    Cube,
    Field,
    FieldElem,
    NonSquare,
    Square,
    _solve_quadratic,
    cube_classify,
    square_classify,
    trace_to_prime,
)
from .polyring import poly_roots

BRUTE_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# outcome types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Irreducible:
    kind: ClassVar[str] = "irreducible"


@dataclass(frozen=True)
class LinTimesQuad:
    """(X - root) * (X^2 + quad[0]*X + quad[1]), the quadratic irreducible."""

    root: FieldElem
    quad: Tuple[FieldElem, FieldElem]
    kind: ClassVar[str] = "linear_times_quadratic"


@dataclass(frozen=True)
class ThreeDistinct:
    roots: Tuple[FieldElem, FieldElem, FieldElem]  # ascending
    kind: ClassVar[str] = "three_distinct"


@dataclass(frozen=True)
class LinTimesSquare:
    """(X - simple) * (X - double)^2 with simple != double."""

    simple: FieldElem
    double: FieldElem
    kind: ClassVar[str] = "linear_times_square"


@dataclass(frozen=True)
class Triple:
    root: FieldElem
    kind: ClassVar[str] = "triple"


Decomp = Union[Irreducible, LinTimesQuad, ThreeDistinct, LinTimesSquare, Triple]


# ---------------------------------------------------------------------------
# small shared helpers
# ---------------------------------------------------------------------------

def _require_finite(F) -> Field:
    if not isinstance(F, Field):
        raise WrongFieldClass("decomposition types are defined over a finite field")
    return F


def _cofactor(c: Cubic, r: FieldElem) -> Tuple[FieldElem, FieldElem]:
    """Quadratic cofactor of a known root: c = (X - r)(X^2 + bX + cc)."""
    assert c(r).is_zero()
    b = c.e + r
    return (b, c.f + r * b)


def _single_root(c: Cubic) -> FieldElem:
    roots = poly_roots(c.as_poly())
    assert len(roots) == 1, "criterion promised exactly one root"
    return roots[0]


def _three_roots(c: Cubic) -> Tuple[FieldElem, FieldElem, FieldElem]:
    roots = poly_roots(c.as_poly())
    assert len(roots) == 3, "criterion promised a full split"
    return tuple(roots)


def _quad_root_is_cube(F: Field, beta: FieldElem, gamma: FieldElem) -> bool:
    """Is a root of the irreducible W^2 + beta*W + gamma a cube in GF(s^2)?

    Works in GF(s)[W]/(W^2 + beta*W + gamma) directly -- no extension field
    is materialised.  Cube-ness of a unit u in GF(s^2) is u^((s^2-1)/3) = 1,
    so raise W to that power by square-and-multiply on coefficient pairs.
    """
    s = F.order
    assert s % 3 == 2, "only the inert-cube case needs the quadratic detour"
    n = (s * s - 1) // 3

    def mul(u, v):
        c0 = u[0] * v[0]
        c1 = u[0] * v[1] + u[1] * v[0]
        c2 = u[1] * v[1]
        return (c0 - c2 * gamma, c1 - c2 * beta)

    acc = (F.one, F.zero)
    base = (F.zero, F.one)
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        n >>= 1
    return acc == (F.one, F.zero)


# ---------------------------------------------------------------------------
# the brute oracle
# ---------------------------------------------------------------------------

def brute_factor(c: Cubic) -> Decomp:
    """Classify by scanning the whole field.  Independent of every criterion.

    Refuses fields above 2^16 elements; the scan is the point, so there is no
    clever fallback.
    """
    F = _require_finite(c.base)
    if F.order > BRUTE_LIMIT:
        raise SizeExceeded(f"brute_factor scans the field; |F| = {F.order} > {BRUTE_LIMIT}")
    roots = []
    for x in F.elements():
        if c(x).is_zero():
            roots.append(x)
    if not roots:
        return Irreducible()
    # multiplicities by repeated synthetic division
    mults = []
    for r in roots:
        e1 = c.e + r
        f1 = c.f + r * e1
        # cofactor X^2 + e1 X + f1; r is a double root iff it kills the cofactor
        m = 1
        if (r * (r + e1) + f1).is_zero():
            m = 2
            if (r + r + e1).is_zero():  # cofactor = (X - r)^2
                m = 3
        mults.append(m)
    total = sum(mults)
    if total == 1:
        return LinTimesQuad(roots[0], _cofactor(c, roots[0]))
    assert total == 3, "a cubic root count off the scan must be 1 or 3"
    if len(roots) == 3:
        return ThreeDistinct(tuple(roots))
    if len(roots) == 1:
        return Triple(roots[0])
    simple, double = (roots[0], roots[1]) if mults[0] == 1 else (roots[1], roots[0])
    return LinTimesSquare(simple=simple, double=double)


# ---------------------------------------------------------------------------
# canonical families
# ---------------------------------------------------------------------------

def decompose_pure(a: FieldElem) -> Decomp:
    """X^3 - a over GF(s), p != 3.

    a = 0 is the triple root; s = 2 mod 3 makes cubing a bijection (one root,
    irreducible quadratic cofactor); s = 1 mod 3 is decided by the cube
    character of a.
    """
    F = _require_finite(a.field)
    if F.p == 3:
        raise WrongCharacteristic("X^3 - a is inseparable in characteristic 3")
    if a.is_zero():
        return Triple(F.zero)
    if F.order % 3 == 2:
        r = cube_classify(a).roots[0]
        return LinTimesQuad(r, (r, r * r))
    out = cube_classify(a)
    if isinstance(out, Cube):
        return ThreeDistinct(out.roots)
    return Irreducible()


def decompose_depressed(a: FieldElem) -> Decomp:
    """X^3 - 3X - a over GF(s), p != 3.

    Odd p: a = +-2 are the square cases; otherwise the discriminant
    -27(a^2-4) sorts reducible-with-quadratic from the Galois half, and the
    Galois half is decided by whether a root w of W^2 - aW + 1 is a cube --
    in GF(s) when s = 1 mod 3, in GF(s^2) when s = 2 mod 3.

    p = 2: a = 0 gives X(X+1)^2; otherwise Tr(1/a^2) != Tr(1) means a single
    root, and when the traces agree the same resolvent-cube test applies
    (roots of T^2 + aT + 1 live in GF(s) for even m, GF(s^2) for odd m).
    """
    F = _require_finite(a.field)
    if F.p == 3:
        raise WrongCharacteristic("X^3 - 3X - a degenerates to a pure cubic in characteristic 3")
    cubic = Cubic(F.zero, F.from_int(-3), -a)
    if F.p == 2:
        if a.is_zero():
            return LinTimesSquare(simple=F.zero, double=F.one)
        u = (a * a).inverse()
        if trace_to_prime(u + F.one).value != 0:
            r = _single_root(cubic)
            return LinTimesQuad(r, _cofactor(cubic, r))
        if F.m % 2 == 0:
            roots = _solve_quadratic(F, a, F.one)
            assert len(roots) == 2
            split = isinstance(cube_classify(roots[0]), Cube)
        else:
            split = _quad_root_is_cube(F, a, F.one)
        if split:
            return ThreeDistinct(_three_roots(cubic))
        return Irreducible()
    two = F.from_int(2)
    if a == two:
        return LinTimesSquare(simple=two, double=-F.one)
    if a == -two:
        return LinTimesSquare(simple=-two, double=F.one)
    d = a * a - F.from_int(4)
    if isinstance(square_classify(F.from_int(-27) * d), NonSquare):
        r = _single_root(cubic)
        return LinTimesQuad(r, _cofactor(cubic, r))
    if F.order % 3 == 1:
        # -3 is a square here, so delta = sqrt(a^2 - 4) exists in GF(s)
        sq = square_classify(d)
        assert isinstance(sq, Square)
        w = (a + sq.roots[0]) / two
        split = isinstance(cube_classify(w), Cube)
    else:
        # w lives in GF(s^2); its two conjugates are w, 1/w, so the choice
        # of root of W^2 - aW + 1 does not matter
        split = _quad_root_is_cube(F, -a, F.one)
    if split:
        return ThreeDistinct(_three_roots(cubic))
    return Irreducible()


def decompose_char3(a: FieldElem) -> Decomp:
    """X^3 + aX + a^2 over GF(3^m).

    a = 0 is the triple root.  For a != 0 put -a = b^2 when possible: the
    substitution X = bZ turns the cubic into b^3 (Z^3 - Z + b), so the split
    is governed by the absolute trace of b; when -a is a non-square there is
    exactly one root.  A square factor never appears for a != 0.
    """
    F = _require_finite(a.field)
    if F.p != 3:
        raise WrongCharacteristic("X^3 + aX + a^2 is the characteristic-3 family")
    if a.is_zero():
        return Triple(F.zero)
    cubic = Cubic(F.zero, a, a * a)
    sq = square_classify(-a)
    if isinstance(sq, NonSquare):
        r = _single_root(cubic)
        return LinTimesQuad(r, _cofactor(cubic, r))
    if trace_to_prime(sq.roots[0]).value != 0:
        return Irreducible()
    return ThreeDistinct(_three_roots(cubic))


# ---------------------------------------------------------------------------
# arbitrary cubics
# ---------------------------------------------------------------------------

_SHAPES = (Pure, DepressedTrace, Char3, InseparablePure, Reducible)


def decompose_any(c) -> Decomp:
    """Classify a monic cubic (or pre-reduced canonical shape) over GF(s).

    Reduction happens in a fractional-linear coordinate; the substitution is
    invertible away from its pole, and no witness root can sit on the pole
    (the pole's image under the forward map is the image of infinity, which
    is never a root of the reduced cubic).  So witnesses transport back
    exactly.
    """
    if isinstance(c, Cubic):
        F = _require_finite(c.base)
        shape, mob = reduce_cubic(c)
        orig = c
    elif isinstance(c, _SHAPES):
        F = _require_finite(c.base)
        shape, mob = c, FracLinear.identity(c.base)
        orig = c.cubic()
    else:
        raise TypeError(f"expected a cubic or canonical shape, got {type(c).__name__}")
    if isinstance(shape, Reducible):
        return _decompose_reducible(shape)
    if isinstance(shape, InseparablePure):
        # X^3 - a in characteristic 3: the Frobenius is surjective, so this
        # is always a triple root
        r = cube_classify(shape.a).roots[0]
        return _transport(Triple(r), mob, orig)
    if isinstance(shape, Pure):
        d = decompose_pure(shape.a)
    elif isinstance(shape, DepressedTrace):
        d = decompose_depressed(shape.a)
    else:
        d = decompose_char3(shape.a)
    return _transport(d, mob, orig)


def _decompose_reducible(shape: Reducible) -> Decomp:
    F = shape.base
    r = shape.root
    b, cc = shape.quad
    qroots = _solve_quadratic(F, b, cc)
    if not qroots:
        return LinTimesQuad(r, (b, cc))
    if len(qroots) == 1:
        u = qroots[0]
        if u == r:
            return Triple(r)
        return LinTimesSquare(simple=r, double=u)
    u, v = qroots
    if r == u:
        return LinTimesSquare(simple=v, double=r)
    if r == v:
        return LinTimesSquare(simple=u, double=r)
    return ThreeDistinct(tuple(sorted((r, u, v))))


def _transport(d: Decomp, mob: FracLinear, orig: Cubic) -> Decomp:
    if mob.is_identity() or isinstance(d, Irreducible):
        return d
    inv = mob.inverse()

    def pull(z: FieldElem) -> FieldElem:
        y = inv.apply(z)
        assert orig(y).is_zero(), "transported witness must be a root"
        return y

    if isinstance(d, LinTimesQuad):
        r = pull(d.root)
        return LinTimesQuad(r, _cofactor(orig, r))
    if isinstance(d, ThreeDistinct):
        return ThreeDistinct(tuple(sorted(pull(z) for z in d.roots)))
    if isinstance(d, LinTimesSquare):
        return LinTimesSquare(simple=pull(d.simple), double=pull(d.double))
    return Triple(pull(d.root))
