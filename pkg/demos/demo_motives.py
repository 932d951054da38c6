"""Correspondences, intersection numbers, and numerical equivalence.

Run:  python demos/demo_motives.py
"""

from fractions import Fraction

from ncmotives import zoo
from ncmotives.motives import (unit_correspondence, canonical_span, compose,
                               categorical_trace, intersection_number,
                               correspondence_class_vector, numerical_kernel,
                               semisimplicity_check)

a = zoo.get("A2")
print("The A2 path algebra (upper triangular 2x2 matrices), dim", a.dim)
print()

print("Correspondences A -> A are rational combinations of bimodules;")
print("the canonical span consists of the projective classes Ae_i (x) e_jA:")
span = canonical_span(a)
for x in span:
    print("  ", x.name, "dim", x.terms[0][1].dim,
          " class vector", dict(correspondence_class_vector(x)))
print()

print("Composition is the derived tensor product; over the projective")
print("span it reduces to the Cartan matrix in the middle:")
x, y = span[1], span[3]     # [Ae_1 (x) e_2 A] o [Ae_2 (x) e_2 A]
z = compose(x, y)
print("  %s o %s has class vector %s" %
      (x.name, y.name, dict(correspondence_class_vector(z))))
print()

print("The categorical trace of the unit correspondence is the Euler")
print("characteristic of Hochschild homology:")
for name in ("Q", "QxQ", "A2", "A3", "square"):
    u = unit_correspondence(zoo.get(name))
    print("  tr[%s] = %s" % (name, categorical_trace(u)))
print()

print("Intersection numbers pair spans; the kernel of the pairing is")
print("numerical equivalence.  On the projective span of A2 the pairing")
print("is nondegenerate:")
nq = numerical_kernel(a, a, span)
print("  span %d -> quotient %d (kernel %d)" %
      (nq.dim_before, nq.dim_after, nq.kernel.dim))
print()

print("The numerical End algebra of the unit motive is semisimple:")
for name in ("QxQ", "A2", "dual", "square"):
    rep = semisimplicity_check(zoo.get(name))
    print("  %-7s quotient dim %2d, Jacobson radical %d" %
          (name, rep.quotient_dim, rep.radical_dim))
