"""cubicext: exact classification of cubic extensions of GF(q) and GF(q)(x).

The layers, bottom up:

  ffield    arithmetic in GF(p^m), square/cube classification, traces
  polyring  dense univariate polynomials, factorization, rational functions
  places    places of GF(q)(x), valuations, residue fields, divisors
  canon     reduction of a general cubic to its canonical family + transport
  ffcubic   decomposition types of canonical cubics over a finite field
  arith     splitting signatures, ramification and genus over GF(q)(x)
  cli       the `cubicext` command-line front end
"""

__version__ = "0.1.0"

from .ffield import field_make  # noqa: F401
