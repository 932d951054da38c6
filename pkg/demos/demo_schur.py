"""Symmetric-group idempotents and Schur finiteness of super spaces.

Run:  python demos/demo_schur.py
"""

from ncmotives.schur import (character_table_row, central_idempotent,
                             partitions_of, schur_dimension,
                             super_schur_value, is_schur_finite)
from ncmotives.supers import SuperSpace

print("Characters of S_3 (Murnaghan-Nakayama, hook-checked):")
for parts in partitions_of(3):
    row = character_table_row(parts)
    print("  lambda = %-9s %s" % (parts, dict(sorted(row.items()))))
print()

print("The block idempotent of (2,1) in Q[S_3]:")
c = central_idempotent((2, 1))
for perm, coeff in sorted(c.coeffs.items()):
    print("  %s: %s" % (perm, coeff))
print("(idempotency and centrality are verified at construction)\n")

print("Schur dimensions on super spaces, against the hook oracle:")
for parts in ((2,), (1, 1), (2, 1), (2, 2)):
    for dims in ((2, 0), (1, 1), (0, 2)):
        v = SuperSpace(*dims)
        d = schur_dimension(parts, v)
        o = super_schur_value(parts, v)
        assert d == o
        print("  S_%-7s (%d|%d) -> %d" % (parts, dims[0], dims[1], d))
print()

print("Schur finiteness: the minimal annihilating partition is the")
print("smallest rectangle sticking out of the (d+, d-) hook:")
for dims in ((1, 0), (0, 1), (1, 1), (2, 1)):
    lam = is_schur_finite(SuperSpace(*dims))
    print("  (%d|%d) annihilated by %s" % (dims[0], dims[1], lam.parts))
