"""The always-Galois slice of the depressed family.

Parameters of the shape a = (2A^2 + 2AB - B^2)/(A^2 + AB + B^2) make
y^3 - 3y = a Galois over its base: the discriminant-related quantity
(a^2 - 4) becomes -3 times a square.  Galois cubics can only be fully
ramified, inert, or split at a place -- never partially -- and when
q = 2 mod 3 every irreducible factor of the denominator of a has even
degree.  This script samples the family and watches both facts hold.
"""

import random

from cubicext.arith import SIG_PARTIAL, Extension, signature
from cubicext.canon import DepressedTrace, galois_param, galois_denominator_check, has_rational_root, is_galois
from cubicext.errors import CubicExtError
from cubicext.ffield import field_make
from cubicext.places import places_up_to
from cubicext.polyring import Poly, factor_fq, func_field


def main():
    rng = random.Random(11)
    K = func_field(field_make(5))
    places = places_up_to(K, 2)

    shown = 0
    while shown < 4:
        A = K.from_poly(Poly(K.field, [K.field.from_value(rng.randrange(5)) for _ in range(3)]))
        B = K.from_poly(Poly(K.field, [K.field.from_value(rng.randrange(5)) for _ in range(3)]))
        try:
            a = galois_param(A, B)
        except CubicExtError:
            continue
        shape = DepressedTrace(a)
        if has_rational_root(shape) is not None:
            continue
        try:
            ext = Extension(shape)
        except CubicExtError:
            continue
        shown += 1

        print(f"A = {A.render()},  B = {B.render()}")
        print(f"  a = {a.render()}")
        print(f"  is_galois: {is_galois(shape)}")
        degs = sorted(g.degree for g, _ in factor_fq(a.den)[1])
        print(f"  denominator factor degrees (all even over GF(5)): {degs}")
        print(f"  denominator check: {galois_denominator_check(a)}")
        sigs = {signature(ext, P).render() for P in places}
        assert SIG_PARTIAL.render() not in sigs
        print(f"  signatures seen at places of degree <= 2: {sorted(sigs)}")
        print()


if __name__ == "__main__":
    main()
