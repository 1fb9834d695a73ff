"""Splitting, ramification, and genus over rational function fields.

An irreducible cubic over K = GF(q)(x) defines a degree-3 extension L/K.
Place by place the cubic splits with a signature (e_i, f_i pairs); summing
the different over the ramified places gives the genus via Riemann-Hurwitz.
"""

from cubicext.arith import Extension, genus, ramification_report, signature
from cubicext.canon import Char3, DepressedTrace, Pure
from cubicext.ffield import field_make
from cubicext.places import places_up_to
from cubicext.polyring import func_field


def splitting_table(ext, dmax=1):
    for P in places_up_to(ext.ff, dmax):
        print(f"    {P.render():<10} {signature(ext, P).render()}")


def report(title, ext):
    print(title)
    rep = ramification_report(ext)
    for P, d in rep.fully_ramified:
        print(f"    fully ramified at {P.render()} (d = {d})")
    for P, d in rep.partially_ramified:
        print(f"    partially ramified at {P.render()} (d = {d})")
    print(f"    different degree {rep.different_degree}, genus {genus(ext)}")
    print()


def main():
    K5 = func_field(field_make(5))
    K7 = func_field(field_make(7))
    K3 = func_field(field_make(3))
    x5, x7, x3 = K5.x, K7.x, K3.x

    # y^3 - 3y = x: the base is rational in y, so genus 0
    ext = Extension(DepressedTrace(x5))
    print("y^3 - 3y = x over GF(5)(x), splitting at degree-1 places:")
    splitting_table(ext)
    report("  ramification:", ext)

    # y^3 = x(x - 1): tame full ramification at 0, 1, infinity -> genus 1
    report("y^3 = x(x-1) over GF(7)(x):", Extension(Pure(x7 * (x7 - 1))))

    # y^3 = x^4(x+1): exponents 4, 1, and -5 at the three branch points
    report("y^3 = x^4(x+1) over GF(7)(x):", Extension(Pure(x7 ** 4 * (x7 + 1))))

    # characteristic 3 is wild: d exceeds e - 1 at every ramified place
    report("y^3 + xy + x^2 = 0 over GF(3)(x):", Extension(Char3(x3)))
    report("y^3 + (x^3+x)y + (x^3+x)^2 = 0 over GF(3)(x):",
           Extension(Char3(x3 ** 3 + x3)))


if __name__ == "__main__":
    main()
