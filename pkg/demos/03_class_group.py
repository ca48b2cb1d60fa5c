"""Ideal class group of the h = 4, genus 3 ring y^2 + (x^2+x)y = x^7+x^6+x^5+x.

Ideal counts by degree determine the L-polynomial; P(1) equals the class
number found by direct class enumeration, and the coefficients satisfy the
functional equation p_{2g-i} = q^{g-i} p_i.
"""

from ffzeta import class_group, parse_ring_spec
from ffzeta.ring import elem_to_str

spec = parse_ring_spec("h4g3.ring")
cg = class_group(spec)

print(f"ring {spec.name}: genus {cg.genus}, q = {spec.q}")
print(f"ideal counts c_0..c_{2 * cg.genus}: {', '.join(map(str, cg.counts))}")
print(f"L-polynomial coefficients p_0..p_{2 * cg.genus}: {list(cg.lpoly)}")
print(f"P(1) = {sum(cg.lpoly)}   class number h = {cg.h}   exponent e = {cg.e}")

g, q = cg.genus, spec.q
ok = all(cg.lpoly[2 * g - i] == q ** (g - i) * cg.lpoly[i]
         for i in range(g + 1))
print(f"functional equation p_(2g-i) = q^(g-i) p_i: {ok}")

print()
print("nontrivial ideal classes (class group Z/2 x Z/2):")
for k, c in enumerate(cg.nontrivial(), start=1):
    print(f"  class {k}: min degree d_{k} = {c.degree}, order e_{k} = {c.order},"
          f" monic generator of the power: f_{k} = {elem_to_str(c.generator)}")
