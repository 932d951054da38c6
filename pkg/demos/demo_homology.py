"""Hochschild, cyclic, and periodic cyclic homology on the example zoo.

Run:  python demos/demo_homology.py
"""

from ncmotives import zoo
from ncmotives.hochschild import (hochschild_homology, cyclic_homology,
                                  periodic_cyclic)

print("Hochschild homology of the dual numbers Q[e]/e^2")
print("------------------------------------------------")
dual = zoo.get("dual")
hh = hochschild_homology(dual, n_max=7)
print("dims:", hh.dims, " (exact for degrees 0..%d)" % hh.certified_upto)
print("The tail of 1's never vanishes: the dual numbers have infinite")
print("global dimension, so no vanishing certificate exists.\n")

print("Cyclic homology comes from the (b, B)-bicomplex totalization:")
hc = cyclic_homology(dual, n_max=7)
print("dims:", hc.dims)
print("Even degrees carry rank 2, odd degrees vanish.\n")

print("Periodic cyclic homology: images of the periodicity operator S")
hp = periodic_cyclic(dual, n_max=6)
print(hp)
print("The stable part is (1|0): nilpotent extensions are invisible to")
print("the periodic theory, and the window detection finds exactly that,")
print("flagged WINDOW-STABLE because no global-dimension certificate")
print("can promote it.\n")

print("The same computation across the zoo")
print("------------------------------------")
for name in ("Q", "QxQ", "QxQxQ", "M2(Q)", "A2", "A3"):
    a = zoo.get(name)
    hh = hochschild_homology(a, n_max=5)
    hp = periodic_cyclic(a, n_max=5)
    print("%-7s HH %s   HP (%d|%d) %s" %
          (name, hh.dims, hp.even, hp.odd, hp.certificate))
print()
print("M2(Q) matches Q line for line: Morita invariance, computed rather")
print("than assumed.  The A2 algebra shows (2|0): its derived category")
print("splits into two exceptional pieces, each contributing one even")
print("dimension.")
