"""The sl2 story at a fifth root of unity, end to end.

Take ell = 5 and the trivial semisimple part.  The fifth roots of chi_s^2 = 1
are the candidate component labels; the Weyl group acts by inversion, the
blocks are its orbits, and each block's local dimension is the stabilizer
index [W(t^ell) : W(t)].  With regular unipotent part the whole algebra is
Mat_5 over the sum of these local pieces: one copy of the ground field and
two local algebras of dimension 2.
"""

from lieram.quantum import QChar, q_blocks, q_regularity_and_counts, hc_shift, q_unramified
from lieram.rootdata import build_root_system

rs = build_root_system("A1")
chi = QChar(rs, ell=5, support=(0,))   # chi_s = 1, regular unipotent part

print("fiber of chi_s^2 = 1 under t -> t^5, as exponents of t(K_varpi):")
blocks = q_blocks(chi)
for b in blocks:
    print(f"  block rep {b.rep}: orbit size {b.orbit_size}, dim {b.dim},"
          f" unramified={b.unramified}")

st = q_regularity_and_counts(chi, blocks)
print(f"\nregular: {st['regular']}; matrix size {st['descriptor']['matrix_size']};"
      f" local dimensions {st['descriptor']['local_dims']}")
print(f"unramified blocks: predicted {st['unramifiedPredicted']},"
      f" enumerated {st['unramifiedEnumerated']}")

# The baby Verma labels are fifth roots of chi_s = 1.  Exactly one of them is
# projective: the one whose Harish-Chandra shift squares to the trivial
# component label.
from fractions import Fraction
from lieram.quantum import TorusElement

print("\nbaby Verma labels t with t^5 = 1:")
for k in range(5):
    t = TorusElement((Fraction(k, 5),))
    u = hc_shift(rs, t, 5, "forward")
    flag = q_unramified(rs, t, "highestWeight", 5)
    print(f"  t = exp(2*pi*i*{k}/5): projective={flag},"
          f" shifted label {u}, component label {u.pow(2)}")
