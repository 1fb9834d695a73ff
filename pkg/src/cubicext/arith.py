"""Place-by-place arithmetic of cubic extensions of GF(q)(x).

An ``Extension`` wraps one of the three separable canonical forms over
K = GF(q)(x).  Everything here is local-to-global: ``signature`` computes the
splitting type (e_i, f_i) of one place; ``ramification_report`` walks the
support of the parameter and collects every ramified place together with its
different exponent; ``genus`` plugs the report into Riemann-Hurwitz.

Local normalisation comes first in each family:

* pure          y^3 = a       strip cube powers of the uniformizer;
* trace form    y^3 - 3y = a  poles deep enough are pure again; elsewhere the
                              residual cubic decides, with a quadratic
                              resolvent handling the boundary case;
* char 3        y^3 + ay = -a^2  strip poles of order divisible by three by a
                              parameter surgery that keeps the extension
                              isomorphic (an explicit witness each time).

The characteristic-2 resolvent is additive, so its local and global solvers
(``as_local_reduce``, ``artin_schreier_solve``) live here too; the canonical-
form layer borrows them.
"""

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .canon import Char3, Cubic, DepressedTrace, InseparablePure, Pure, Reducible
from .errors import (
    ConstantExtension,
    NonIntegralGenus,
    ReducibleInput,
    WrongCharacteristic,
    WrongFieldClass,
    ZeroInput,
)
from .ffcubic import (
    Decomp,
    Irreducible,
    LinTimesQuad,
    LinTimesSquare,
    ThreeDistinct,
    decompose_char3,
    decompose_depressed,
    decompose_pure,
)
from .ffield import Cube, Square, cube_classify, square_classify, trace_to_prime
from .ffield import _artin_schreier_particular
from .places import Place, divisor_of, residue_field, uniformizer, valuation
from .polyring import RatFunc, factor_fq


# ---------------------------------------------------------------------------
# the extension wrapper
# ---------------------------------------------------------------------------

_FORMS = (Pure, DepressedTrace, Char3)


@dataclass(frozen=True)
class Extension:
    """A cubic extension L = K[y]/(canonical form) of K = GF(q)(x)."""

    form: Union[Pure, DepressedTrace, Char3]

    def __post_init__(self):
        form = self.form
        if isinstance(form, InseparablePure):
            raise WrongCharacteristic(
                "y^3 = a is inseparable in characteristic 3; no place arithmetic applies")
        if isinstance(form, Reducible):
            raise ReducibleInput("the defining cubic has a root in the base field")
        if not isinstance(form, _FORMS):
            raise TypeError(f"expected a canonical form, got {type(form).__name__}")
        if not isinstance(form.a, RatFunc):
            raise WrongFieldClass("place arithmetic needs a rational function field base")
        a = form.a
        if a.is_zero():
            raise ReducibleInput("parameter 0 makes the cubic reducible")
        if isinstance(form, DepressedTrace):
            two = a.ff.from_int(2)
            if (a - two).is_zero() or (a + two).is_zero():
                raise ReducibleInput("parameter +-2 makes the trace form reducible")

    @property
    def ff(self):
        return self.form.a.ff

    @property
    def field(self):
        return self.ff.field

    @property
    def family(self) -> str:
        if isinstance(self.form, Pure):
            return "pure"
        if isinstance(self.form, DepressedTrace):
            return "depressed_trace"
        return "char3"

    def cubic(self) -> Cubic:
        return self.form.cubic()


# ---------------------------------------------------------------------------
# signatures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Signature:
    """Splitting type of one place: pairs (e, f) with sum(e*f) = 3.

    Stored sorted by descending e then ascending f, so signatures compare by
    plain equality.  Rendered like ``(2,1;1,1)``.
    """

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.pairs, key=lambda ef: (-ef[0], ef[1])))
        object.__setattr__(self, "pairs", pairs)
        assert sum(e * f for e, f in pairs) == 3, pairs

    def render(self) -> str:
        return "(" + ";".join(f"{e},{f}" for e, f in self.pairs) + ")"

    def __str__(self):
        return self.render()

    @property
    def is_ramified(self) -> bool:
        return any(e > 1 for e, _ in self.pairs)


SIG_FULLY_RAMIFIED = Signature(((3, 1),))
SIG_INERT = Signature(((1, 3),))
SIG_SPLIT = Signature(((1, 1), (1, 1), (1, 1)))
SIG_MIXED = Signature(((1, 1), (1, 2)))
SIG_PARTIAL = Signature(((2, 1), (1, 1)))


def _sig_unramified(d: Decomp) -> Signature:
    """Residual decomposition -> signature, valid when the residual cubic is
    separable (Hensel lifts each factor)."""
    if isinstance(d, Irreducible):
        return SIG_INERT
    if isinstance(d, ThreeDistinct):
        return SIG_SPLIT
    if isinstance(d, LinTimesQuad):
        return SIG_MIXED
    raise AssertionError(f"residual cubic unexpectedly inseparable: {d}")


def signature(ext: Extension, P: Place) -> Signature:
    """Splitting type of the place P in the extension."""
    form = ext.form
    if isinstance(form, Pure):
        return signature_pure(ext, P)
    if isinstance(form, DepressedTrace):
        return signature_depressed(ext, P)
    return signature_char3(ext, P)


# -- pure family ------------------------------------------------------------

def pure_local_form(a: RatFunc, P: Place) -> Tuple[RatFunc, RatFunc]:
    """(a', c) with a = a' * c^3 and v_P(a') in {0, 1, 2}.

    Replacing y by y/c turns y^3 = a into y'^3 = a', so the extension is
    unchanged and the parameter is a P-unit up to at most pi^2.
    """
    if a.is_zero():
        raise ZeroInput("no local form for the zero parameter")
    v = valuation(a, P)
    j = v // 3  # floor, also for negative v
    c = uniformizer(P) ** j
    return a / c ** 3, c


def signature_pure(ext: Extension, P: Place) -> Signature:
    a = ext.form.a
    v = valuation(a, P)
    if v % 3 != 0:
        return SIG_FULLY_RAMIFIED
    ap, _ = pure_local_form(a, P)
    abar = residue_field(P).reduce(ap)
    return _sig_unramified(decompose_pure(abar))


# -- characteristic-2 resolvent ---------------------------------------------

def as_local_reduce(u: RatFunc, P: Place) -> Tuple[RatFunc, RatFunc]:
    """Strip even-order pole parts of u at P, additively (characteristic 2).

    Returns (u', w) with u' = u - w^2 - w, where v_P(u') is >= 0 or negative
    odd, and w has poles at most at P.  Each pass subtracts the exact leading
    term: if v_P(u) = -2k with leading residue r, then w gains s/pi^k where
    s lifts sqrt(r), and the pole order strictly drops.  Solvability of
    z^2 + z = u at P is untouched.
    """
    ff = u.ff
    if ff.field.p != 2:
        raise WrongCharacteristic("additive pole reduction is a characteristic-2 step")
    rd = residue_field(P)
    pi = uniformizer(P)
    w = ff.zero
    while True:
        v = valuation(u, P)
        if not isinstance(v, int) or v >= 0 or v % 2 == 1:
            break
        k = (-v) // 2
        sbar = square_classify(rd.reduce(u * pi ** (2 * k))).roots[0]
        wstep = ff.from_poly(rd.lift(sbar)) * pi ** (-k)
        u = u - wstep * wstep - wstep
        w = w + wstep
    return u, w


def artin_schreier_solve(u: RatFunc) -> Optional[RatFunc]:
    """A global y with y^2 + y = u over GF(q)(x), q even, or None.

    Reduce every pole of u additively; a solution exists iff every reduced
    pole part vanishes and the leftover constant has absolute trace zero.
    (The other solution is y + 1.)
    """
    ff = u.ff
    if ff.field.p != 2:
        raise WrongCharacteristic("y^2 + y = u is a characteristic-2 equation")
    w = ff.zero
    if u.is_zero():
        return w
    for P, v in divisor_of(u):
        if v < 0:
            u, wp = as_local_reduce(u, P)
            w = w + wp
            if u.is_zero():
                return w
    if any(v < 0 for _, v in divisor_of(u)):
        return None
    c = u.constant_value()
    if trace_to_prime(c).value != 0:
        return None
    return w + ff.from_elem(_artin_schreier_particular(ff.field, c))


# -- trace (depressed) family ------------------------------------------------

class ResolventBehavior(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


Split = ResolventBehavior.SPLIT
Inert = ResolventBehavior.INERT
Ramified = ResolventBehavior.RAMIFIED


def resolvent_place_behavior(a: RatFunc, P: Place) -> ResolventBehavior:
    """Behavior at P of the quadratic resolvent of y^3 - 3y = a.

    Odd characteristic: the resolvent field is K(sqrt(-27(a^2-4))), so read
    off the parity of v_P and the square class of the unit part.  Even
    characteristic: the resolvent is z^2 + z = 1/a^2 + 1; reduce the pole and
    read the residual absolute trace.
    """
    ff = a.ff
    if ff.field.p != 2:
        disc = ff.from_int(-27) * (a * a - ff.from_int(4))
        if disc.is_zero():
            raise ReducibleInput("parameter +-2 makes the trace form reducible")
        v = valuation(disc, P)
        if v % 2 == 1:
            return Ramified
        unit = disc * uniformizer(P) ** (-v)
        res = residue_field(P).reduce(unit)
        if isinstance(square_classify(res), Square):
            return Split
        return Inert
    if a.is_zero():
        raise ReducibleInput("parameter 0 makes the trace form reducible")
    u = ff.one / (a * a) + ff.one
    if u.is_zero():  # a = 1: resolvent z^2 + z = 0 splits
        return Split
    ur, _ = as_local_reduce(u, P)
    v = valuation(ur, P)
    if isinstance(v, int) and v < 0:
        assert v % 2 == 1, "reduction must leave an odd pole"
        return Ramified
    if ur.is_zero():
        return Split
    res = residue_field(P).reduce(ur)
    if trace_to_prime(res).value == 0:
        return Split
    return Inert


def signature_depressed(ext: Extension, P: Place) -> Signature:
    a = ext.form.a
    v = valuation(a, P)
    if v < 0:
        if v % 3 != 0:
            return SIG_FULLY_RAMIFIED
        # deep pole: y = z/pi^(v/3) turns the form into z^3 = a*pi^(-v) + small,
        # a separable pure residual
        abar = residue_field(P).reduce(a * uniformizer(P) ** (-v))
        return _sig_unramified(decompose_pure(abar))
    abar = residue_field(P).reduce(a)
    d = decompose_depressed(abar)
    if not isinstance(d, LinTimesSquare):
        return _sig_unramified(d)
    # residual double root: the merged pair is separated by the resolvent
    b = resolvent_place_behavior(a, P)
    if b is Split:
        return SIG_SPLIT
    if b is Inert:
        return SIG_MIXED
    return SIG_PARTIAL


# -- characteristic-3 family -------------------------------------------------

def char3_local_form(a: RatFunc, P: Place) -> Tuple[RatFunc, int, Tuple[RatFunc, ...]]:
    """Strip poles of order divisible by 3 from the char-3 parameter at P.

    Returns (a*, v*, steps): v* = v_P(a*) is >= 0 or negative prime to 3, and
    each step w in steps replaced a by (a^2 + w^3 + a*w)^2 / a^3 -- exactly
    the isomorphism-witness surgery, so the extension class is unchanged.
    Each pass raises v_P by at least 2.  A vanishing numerator would mean w
    itself is a root of y^3 + ay + a^2, so the input was reducible.
    """
    ff = a.ff
    if ff.field.p != 3:
        raise WrongCharacteristic("this local form is the characteristic-3 family's")
    if a.is_zero():
        raise ZeroInput("no local form for the zero parameter")
    rd = residue_field(P)
    pi = uniformizer(P)
    steps: List[RatFunc] = []
    while True:
        v = valuation(a, P)
        if v >= 0 or v % 3 != 0:
            break
        k = (-v) // 3
        rho = rd.reduce(-(a * a) * pi ** (6 * k))
        w1 = cube_classify(rho).roots[0]
        w2 = ff.from_poly(rd.lift(w1)) * pi ** (-2 * k)
        n = a * a + w2 ** 3 + a * w2
        if n.is_zero():
            raise ReducibleInput("the characteristic-3 cubic has a root in the base field")
        a = n * n / a ** 3
        steps.append(w2)
    return a, v, tuple(steps)


def signature_char3(ext: Extension, P: Place) -> Signature:
    astar, vstar, _ = char3_local_form(ext.form.a, P)
    if vstar < 0:
        return SIG_FULLY_RAMIFIED  # v* prime to 3: one place, e = 3
    rd = residue_field(P)
    if vstar == 0:
        return _sig_unramified(decompose_char3(rd.reduce(astar)))
    # a* = 0 at P: Newton polygon gives one unit root and a pair of slope
    # v*/2; parity of v* decides ramification, the square class of the
    # leading coefficient decides split vs inert
    if vstar % 2 == 1:
        return SIG_PARTIAL
    res = rd.reduce(astar * uniformizer(P) ** (-vstar))
    if isinstance(square_classify(-res), Square):
        return SIG_SPLIT
    return SIG_MIXED


# ---------------------------------------------------------------------------
# global ramification and the genus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RamificationReport:
    """Every ramified place with its different exponent d.

    fully_ramified   -- places with e = 3 (one place above, f = 1);
    partially_ramified -- places with signature (2,1;1,1).
    deg(Different) = sum of d * deg(P) over both lists.
    """

    fully_ramified: Tuple[Tuple[Place, int], ...]
    partially_ramified: Tuple[Tuple[Place, int], ...]

    @property
    def different_degree(self) -> int:
        return sum(d * P.degree for P, d in self.fully_ramified) + \
            sum(d * P.degree for P, d in self.partially_ramified)

    @property
    def is_empty(self) -> bool:
        return not self.fully_ramified and not self.partially_ramified


def ramification_report(ext: Extension) -> RamificationReport:
    """Walk the support of the parameter and classify every ramified place.

    Pure family: exactly the places with v_P(a) prime to 3 ramify (tame,
    e = 3, d = 2).  Trace family: poles prime to 3 as in the pure case, plus
    partially ramified places where the residual cubic has a double root and
    the resolvent ramifies (tame d = 1 for odd q; wild d = m+1 for even q,
    m the reduced pole order of the resolvent parameter).  Char 3: poles
    surviving local normalisation are wild with d = -v* + 2; places where the
    normalised parameter vanishes to odd order carry the tame quadratic
    (d = 1).
    """
    form = ext.form
    a = form.a
    ff = ext.ff
    fully: List[Tuple[Place, int]] = []
    partial: List[Tuple[Place, int]] = []
    if isinstance(form, Pure):
        for P, v in divisor_of(a):
            if v % 3 != 0:
                fully.append((P, 2))
    elif isinstance(form, DepressedTrace):
        for P, v in divisor_of(a):
            if v < 0 and v % 3 != 0:
                fully.append((P, 2))
        if ff.field.p != 2:
            two = ff.from_int(2)
            cands = []
            for shifted in (a - two, a + two):
                cands.extend(P for P, v in divisor_of(shifted) if v > 0)
            for P in sorted(set(cands)):
                if resolvent_place_behavior(a, P) is Ramified:
                    partial.append((P, 1))
        else:
            u = ff.one / (a * a) + ff.one
            for P, v in divisor_of(a):
                if v <= 0:
                    continue
                ur, _ = as_local_reduce(u, P)
                m = valuation(ur, P)
                if isinstance(m, int) and m < 0:
                    partial.append((P, -m + 1))
    else:
        for P, v in divisor_of(a):
            if v > 0:
                if v % 2 == 1:
                    partial.append((P, 1))
                continue
            _, vstar, _ = char3_local_form(a, P)
            if vstar < 0:
                fully.append((P, -vstar + 2))
            elif vstar > 0 and vstar % 2 == 1:
                partial.append((P, 1))
    fully.sort(key=lambda pd: pd[0].sort_key())
    partial.sort(key=lambda pd: pd[0].sort_key())
    return RamificationReport(tuple(fully), tuple(partial))


# -- constant-field detection -------------------------------------------------

@dataclass(frozen=True)
class Constant:
    """The extension only enlarges the constant field.

    For the pure family the witness unit u (a = u * h^3, u a non-cube
    constant) is carried; the other families have no natural unit.
    """

    unit: Optional[object] = None


@dataclass(frozen=True)
class Geometric:
    """The constant field does not grow; certificate is one ramified place."""

    certificate: Place


def _cube_class_cofactor(a: RatFunc) -> RatFunc:
    """h with a / h^3 constant, given every divisor exponent of a is 0 mod 3."""
    ff = a.ff
    h = ff.one
    for f, e in factor_fq(a.num)[1]:
        assert e % 3 == 0
        h = h * ff.from_poly(f) ** (e // 3)
    for f, e in factor_fq(a.den)[1]:
        assert e % 3 == 0
        h = h / ff.from_poly(f) ** (e // 3)
    return h


def is_constant_extension(ext: Extension):
    """Constant(unit) / Geometric(place) for the wrapped extension.

    A geometric cubic extension of a rational function field must ramify
    somewhere (Riemann-Hurwitz leaves no room at genus >= 0 otherwise), so an
    empty ramification report certifies a constant-field extension.  The pure
    family is decided directly on the divisor: all exponents divisible by
    three mean a = u * h^3, and the extension is constant for a non-cube unit
    u -- a cube u would make the cubic reducible, which is reported instead.
    """
    form = ext.form
    if isinstance(form, Pure):
        a = form.a
        for P, v in divisor_of(a):
            if v % 3 != 0:
                return Geometric(P)
        u = (a / _cube_class_cofactor(a) ** 3).constant_value()
        if isinstance(cube_classify(u), Cube):
            raise ReducibleInput("the parameter is a cube, so y^3 = a is reducible")
        return Constant(u)
    rep = ramification_report(ext)
    if rep.is_empty:
        return Constant(None)
    place = (rep.fully_ramified or rep.partially_ramified)[0][0]
    return Geometric(place)


def genus(ext: Extension) -> int:
    """Genus of L via Riemann-Hurwitz: 2g - 2 = 3(2*0 - 2) + deg(Different).

    Raises ConstantExtension when the constant field grows (the formula
    would need the larger field) and NonIntegralGenus if the collected
    different degree is inconsistent (odd, or too small for a field).
    """
    ice = is_constant_extension(ext)
    if isinstance(ice, Constant):
        raise ConstantExtension(
            "the extension only enlarges the constant field; its genus over the"
            " larger constants is 0")
    deg = ramification_report(ext).different_degree
    if deg % 2 != 0 or deg < 4:
        # geometric irreducible forces deg >= 4 and even; anything else means
        # the defining cubic already had a root in K (or an internal bug)
        from .canon import has_rational_root
        if has_rational_root(ext.form) is not None:
            raise ReducibleInput("the defining cubic has a root in the base field")
        raise NonIntegralGenus(
            f"different degree {deg} is impossible for a geometric cubic extension")
    return deg // 2 - 2
