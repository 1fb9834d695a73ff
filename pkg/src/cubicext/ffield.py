"""Exact arithmetic in finite fields GF(p^m).

Representation invariants:

  * A field is identified by the pair (p, m); ``field_make`` caches one
    ``Field`` object per pair, so fields compare by identity.
  * For m > 1 the field is GF(p)[t] modulo a fixed irreducible polynomial:
    the first monic irreducible of degree m in counter order (candidates are
    enumerated by writing 0, 1, 2, ... in base p, least-significant digit as
    the constant term).  This makes every derived value reproducible.
  * An element is an immutable tuple of m ints in [0, p), low degree first.
  * Elements are totally ordered by their counter value sum(c_i * p^i); every
    "least root" / "least witness" promise in this package refers to that
    order.

The quadratic solver lives here (rather than with the polynomial machinery)
because the square/cube classifiers below need it; polyring re-exports it.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import DivisionByZero, FieldMismatch, NotPrime, SizeExceeded

MAX_ORDER = 1 << 20  # guard for field constructions that would never finish


# ---------------------------------------------------------------------------
# primes and GF(p)[t] on plain int lists (low degree first)
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _ptrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], mod: Sequence[int], p: int) -> list:
    # mod is monic
    a = list(a)
    dm = len(mod) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _ptrim(a)


def _ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list:
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _pirreducible(f: Sequence[int], p: int) -> bool:
    """Monic f of degree >= 1 irreducible over GF(p)?"""
    d = len(f) - 1
    if d == 1:
        return True
    x = [0, 1]
    # x^(p^d) == x mod f, and gcd(x^(p^(d/l)) - x, f) == 1 for primes l | d
    h = list(x)
    powers = {}
    for i in range(1, d + 1):
        h = _ppowmod(h, p, f, p)
        powers[i] = list(h)
    top = list(powers[d])
    if _ptrim([(a - b) % p for a, b in _zipl(top, x)]):
        return False
    for ell in _prime_divisors(d):
        g = powers[d // ell]
        diff = _ptrim([(a - b) % p for a, b in _zipl(g, x)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def _zipl(a: Sequence[int], b: Sequence[int]):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def _prime_divisors(n: int) -> list:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def least_irreducible(p: int, d: int) -> tuple:
    """First monic irreducible of degree d over GF(p), counter order.

    Returned as a coefficient tuple of length d+1, low degree first.
    The counter writes i = 0, 1, 2, ... in base p with the constant
    coefficient as the least significant digit.
    """
    for i in range(p ** d):
        coeffs = []
        k = i
        for _ in range(d):
            coeffs.append(k % p)
            k //= p
        cand = coeffs + [1]
        if _pirreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible found")  # pragma: no cover


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

class Field:
    """The finite field GF(p^m).  Obtain instances through field_make."""

    __slots__ = ("p", "m", "order", "modulus", "zero", "one", "_elems")

    def __init__(self, p: int, m: int):
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = least_irreducible(p, m) if m > 1 else (0, 1)
        self.zero = FieldElem(self, (0,) * m)
        self.one = FieldElem(self, (1,) + (0,) * (m - 1))
        self._elems = None

    # -- constructors ------------------------------------------------------

    def elem(self, coeffs: Sequence[int]) -> "FieldElem":
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.m:
            c = _pmod(c, list(self.modulus), self.p)
        c = c + [0] * (self.m - len(c))
        return FieldElem(self, tuple(c))

    def from_int(self, n: int) -> "FieldElem":
        return self.elem([n])

    def from_value(self, v: int) -> "FieldElem":
        """Inverse of FieldElem.value: base-p digits, low digit = constant."""
        digits = []
        for _ in range(self.m):
            digits.append(v % self.p)
            v //= self.p
        return FieldElem(self, tuple(digits))

    def gen(self) -> "FieldElem":
        if self.m == 1:
            return self.one
        return self.elem([0, 1])

    # -- enumeration ---------------------------------------------------------

    def elements(self) -> Iterator["FieldElem"]:
        """All p^m elements, ascending counter value."""
        for v in range(self.order):
            yield self.from_value(v)

    def __repr__(self):
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __reduce__(self):  # keep identity semantics across pickling
        return (field_make, (self.p, self.m))


class FieldElem:
    """An element of a Field; immutable, operator-overloaded.

    Integers mix freely on either side of +,-,*,/ and == (they coerce through
    Field.from_int), which keeps formulas with small literals readable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    @property
    def value(self) -> int:
        """Counter value sum(c_i p^i); the package-wide total order."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if F.m == 1:
            return FieldElem(F, ((self.coeffs[0] * o.coeffs[0]) % F.p,))
        prod = _pmod(_pmul(self.coeffs, o.coeffs, F.p), list(F.modulus), F.p)
        return FieldElem(F, tuple(prod) + (0,) * (F.m - len(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of 0")
        F = self.field
        if F.m == 1:
            return FieldElem(F, (pow(self.coeffs[0], -1, F.p),))
        # extended Euclid in GF(p)[t]
        p = F.p
        r0, r1 = list(F.modulus), _ptrim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = []
            r = list(r0)
            inv_lead = pow(r1[-1], -1, p)
            while len(r) >= len(r1) and r:
                c = (r[-1] * inv_lead) % p
                d = len(r) - len(r1)
                qq = [0] * (d + 1)
                qq[d] = c
                q = _ptrim([(a + b) % p for a, b in _zipl(q, qq)])
                r = _ptrim([(a - b) % p for a, b in _zipl(r, _pmul(qq, r1, p))])
            r0, r1 = r1, r
            s0, s1 = s1, _ptrim([(a - b) % p for a, b in _zipl(s0, _pmul(q, s1, p))])
        # r0 = gcd (a unit times 1), s0 * self == r0 mod modulus
        c = pow(r0[0], -1, p)
        inv = [(v * c) % p for v in s0]
        inv = _pmod(inv, list(F.modulus), p)
        return FieldElem(F, tuple(inv) + (0,) * (F.m - len(inv)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparisons ------------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value < o.value

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.value <= o.value

    # -- rendering ----------------------------------------------------------------

    def render(self, var: str = "t") -> str:
        """Ascending-power text like '2+t^2'; parses back with the CLI grammar."""
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                pw = var if i == 1 else f"{var}^{i}"
                terms.append(pw if c == 1 else f"{c}*{pw}")
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return self.render()


def field_make(p: int, m: int = 1) -> Field:
    """The finite field GF(p^m), cached so fields compare by identity."""
    return _field_cached(p, m)


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int) -> Field:
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise NotPrime(f"extension degree must be >= 1, got {m}")
    if p ** m > MAX_ORDER:
        raise SizeExceeded(f"field order {p}^{m} exceeds {MAX_ORDER}")
    return Field(p, m)


def enumerate_field(F: Field) -> Iterator[FieldElem]:
    return F.elements()


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------

def trace_to_prime(x: FieldElem) -> FieldElem:
    """Trace of GF(p^m) over GF(p), returned as an element of GF(p)."""
    F = x.field
    acc = x
    term = x
    for _ in range(F.m - 1):
        term = term ** F.p
        acc = acc + term
    assert not any(acc.coeffs[1:]), "trace landed outside the prime field"
    return field_make(F.p, 1).from_int(acc.coeffs[0])


# ---------------------------------------------------------------------------
# squares
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Square:
    roots: tuple  # all square roots, ascending


@dataclass(frozen=True)
class NonSquare:
    pass


def square_classify(x: FieldElem):
    """Square(roots)/NonSquare for x in GF(p^m); roots listed ascending."""
    F = x.field
    if x.is_zero():
        return Square((F.zero,))
    if F.p == 2:
        # squaring is a bijection; the inverse is the (m-1)-fold square
        r = x ** (2 ** (F.m - 1))
        return Square((r,))
    if x ** ((F.order - 1) // 2) != F.one:
        return NonSquare()
    r = _sqrt_odd(F, x)
    return Square(tuple(sorted((r, -r))))


def _sqrt_odd(F: Field, a: FieldElem) -> FieldElem:
    """Tonelli-Shanks with the least non-residue as auxiliary; a is a square."""
    u = F.order - 1
    e = 0
    while u % 2 == 0:
        u //= 2
        e += 1
    if e == 1:
        return a ** ((u + 1) // 2)
    n = None
    half = (F.order - 1) // 2
    for z in F.elements():
        if z.is_zero():
            continue
        if z ** half != F.one:
            n = z
            break
    z = n ** u
    x = a ** ((u + 1) // 2)
    b = a ** u
    r = e
    while b != F.one:
        k = 0
        t = b
        while t != F.one:
            t = t * t
            k += 1
        w = z ** (2 ** (r - k - 1))
        z = w * w
        b = b * z
        x = x * w
        r = k
    return x


# ---------------------------------------------------------------------------
# cubes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cube:
    roots: tuple  # all cube roots, ascending


@dataclass(frozen=True)
class NonCube:
    pass


def cube_classify(x: FieldElem):
    """Cube(roots)/NonCube for x in GF(p^m) = GF(s).

    s = 0, 2 mod 3: cubing is a bijection, one root.
    s = 1 mod 3: cube character first; if trivial, all three roots.
    """
    F = x.field
    if x.is_zero():
        return Cube((F.zero,))
    s = F.order
    if F.p == 3:
        return Cube((x ** (3 ** (F.m - 1)),))
    if s % 3 == 2:
        return Cube((x ** pow(3, -1, s - 1),))
    chi = x ** ((s - 1) // 3)
    if chi != F.one:
        return NonCube()
    return Cube(tuple(sorted(_cube_roots_split(F, x))))


def _cube_roots_split(F: Field, x: FieldElem) -> list:
    """All roots of Y^3 - x when they lie in F (s = 1 mod 3, x a cube)."""
    elems3 = (F.order - 1) // 3
    # arithmetic mod Y^3 - x on length-3 coefficient lists over F
    def mulmod(u, v):
        out = [F.zero] * 5
        for i in range(3):
            if u[i].is_zero():
                continue
            for j in range(3):
                out[i + j] = out[i + j] + u[i] * v[j]
        # Y^3 = x, Y^4 = x Y
        return [out[0] + x * out[3], out[1] + x * out[4], out[2]]

    def powmod(u, e):
        result = [F.one, F.zero, F.zero]
        while e:
            if e & 1:
                result = mulmod(result, u)
            u = mulmod(u, u)
            e >>= 1
        return result

    for delta in F.elements():
        h = powmod([delta, F.one, F.zero], elems3)
        h[0] = h[0] - F.one
        g = _lst_gcd(F, h, [-x, F.zero, F.zero, F.one])
        if len(g) == 2:  # linear: one root split off
            r1 = -g[0]
            rest = _solve_quadratic(F, r1, r1 * r1)
            return [r1, *rest]
        if len(g) == 3:  # quadratic: two roots split off
            r1, r2 = _solve_quadratic(F, g[1], g[0])
            return [r1, r2, x / (r1 * r2)]
    raise AssertionError("cube splitting did not terminate")  # pragma: no cover


def _lst_trim(c: list) -> list:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _lst_divmod(F: Field, a: list, b: list):
    q = [F.zero] * max(1, len(a) - len(b) + 1)
    r = list(a)
    inv = b[-1].inverse()
    while len(r) >= len(b) and r:
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = q[d] + c
        for i, bi in enumerate(b):
            r[d + i] = r[d + i] - c * bi
        _lst_trim(r)
    return _lst_trim(q), r


def _lst_gcd(F: Field, a: list, b: list) -> list:
    a, b = _lst_trim(list(a)), _lst_trim(list(b))
    while b:
        a, b = b, _lst_divmod(F, a, b)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def primitive_cube_root_of_unity(F: Field) -> Optional[FieldElem]:
    """Least xi with xi^3 = 1, xi != 1; None unless |F| = 1 mod 3."""
    if F.order % 3 != 1:
        return None
    roots = _solve_quadratic(F, F.one, F.one)  # X^2 + X + 1
    assert roots, "X^2+X+1 must split when |F| = 1 mod 3"
    return roots[0]


# ---------------------------------------------------------------------------
# monic quadratics (shared with polyring.quadratic_roots)
# ---------------------------------------------------------------------------

def _solve_quadratic(F: Field, b: FieldElem, c: FieldElem) -> tuple:
    """Roots of X^2 + bX + c over F, ascending; () if none, one entry if double.

    Odd characteristic goes through the discriminant; characteristic 2 uses
    the absolute trace, with the half trace for odd m and a GF(2) linear
    solve for even m.
    """
    b = F.from_int(b) if isinstance(b, int) else b
    c = F.from_int(c) if isinstance(c, int) else c
    if F.p != 2:
        disc = b * b - 4 * c
        cls = square_classify(disc)
        if isinstance(cls, NonSquare):
            return ()
        if disc.is_zero():
            return (-b / 2,)
        r = cls.roots[1]
        return tuple(sorted(((-b + r) / 2, (-b - r) / 2)))
    # characteristic 2
    if b.is_zero():
        return (square_classify(c).roots[0],)  # (X + sqrt(c))^2
    u = c / (b * b)
    if trace_to_prime(u).coeffs[0] != 0:
        return ()
    y0 = _artin_schreier_particular(F, u)
    return tuple(sorted((b * y0, b * y0 + b)))


def _artin_schreier_particular(F: Field, u: FieldElem) -> FieldElem:
    """Some y with y^2 + y = u over GF(2^m); requires Tr(u) = 0."""
    if F.m % 2 == 1:
        ht = F.zero
        term = u
        for i in range((F.m + 1) // 2):
            ht = ht + term
            term = (term * term) ** 2  # u^(2^(2(i+1)))
        assert ht * ht + ht == u
        return ht
    # even m: solve the GF(2)-linear system (y^2 + y = u) on coefficients
    cols = []
    for j in range(F.m):
        basis = F.elem([0] * j + [1])
        img = basis * basis + basis
        cols.append(img.coeffs)
    matrix = [[cols[j][i] for j in range(F.m)] for i in range(F.m)]
    sol = solve_modp(matrix, list(u.coeffs), 2)
    assert sol is not None, "trace-zero element must be reachable"
    y = F.elem(sol)
    assert y * y + y == u
    return y


# ---------------------------------------------------------------------------
# small exact linear algebra mod p (shared with the residue-field machinery)
# ---------------------------------------------------------------------------

def solve_modp(matrix: list, rhs: list, p: int) -> Optional[list]:
    """One solution of matrix * x = rhs over GF(p), or None.  Gaussian elimination."""
    n = len(matrix)
    m = len(matrix[0]) if n else 0
    aug = [[v % p for v in row] + [rhs[i] % p] for i, row in enumerate(matrix)]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, n) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], -1, p)
        aug[r] = [(v * inv) % p for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if aug[i][m]:
            return None
    x = [0] * m
    for i, col in enumerate(pivots):
        x[col] = aug[i][m]
    return x


def invert_modp(matrix: list, p: int) -> list:
    """Inverse of a square matrix over GF(p); raises on singular input."""
    n = len(matrix)
    aug = [[v % p for v in row] + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix mod p")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(v * inv) % p for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]
