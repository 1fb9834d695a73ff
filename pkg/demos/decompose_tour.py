"""A tour of cubic classification over finite fields.

Every separable cubic over GF(q) is equivalent, by a fractional-linear
substitution on its roots, to a member of one canonical one-parameter family.
This script reduces a handful of cubics, shows the transporting map, and
compares the family decomposition criteria against plain brute force.
"""

from cubicext.canon import Cubic, cubic_of, reduce_cubic
from cubicext.ffcubic import brute_factor, decompose_any
from cubicext.ffield import field_make


def show(F, e, f, g):
    c = Cubic(F.from_int(e), F.from_int(f), F.from_int(g))
    shape, mob = reduce_cubic(c)
    print(f"X^3 + {e}X^2 + {f}X + {g}  over GF({F.order})")
    print(f"  canonical form : {shape}")
    print(f"  root map       : y -> ({mob.m11.render()}*y + {mob.m10.render()})"
          f"/({mob.m01.render()}*y + {mob.m00.render()})")
    print(f"  decomposition  : {decompose_any(c)}")
    print(f"  brute force    : {brute_factor(c)}")
    print()


def main():
    F7 = field_make(7)
    show(F7, 1, 0, 1)    # irreducible, lands in the depressed family
    show(F7, 0, 0, -2)   # the pure cubic y^3 = 2
    show(F7, 0, 1, 0)    # X(X^2 + 1): reducible, the reducer spots the root

    F9 = field_make(3, 2)   # GF(9), generator t
    t = F9.elem([0, 1])
    c = Cubic(F9.zero, t, F9.one)
    shape, _ = reduce_cubic(c)
    print(f"X^3 + t*X + 1 over GF(9) -> {shape}")
    print(f"  decomposition  : {decompose_any(c)}")
    print()

    # the criteria agree with brute force on every cubic over GF(8)
    F8 = field_make(2, 3)
    elems = list(F8.elements())
    n = sum(decompose_any(Cubic(e, f, g)) == brute_factor(Cubic(e, f, g))
            for e in elems for f in elems for g in elems)
    print(f"all {n} cubics over GF(8) decompose identically both ways")


if __name__ == "__main__":
    main()
