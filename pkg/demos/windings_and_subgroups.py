"""
Winding numbers and Specht subgroups of the pure braid group
=============================================================

Run with ``python3 demos/windings_and_subgroups.py``.
"""

from specht_lab.braids import (BraidWord, generator_lattice, named_braid, rho, specht_lattice,
                               specht_membership, winding_vector)
from specht_lab.linalg import lattice_index
from specht_lab.modules import classify_submodule, pairs

strands = 4

# a braid is a word in signed generator indices; rho sends it to a permutation
word = BraidWord.parse(strands, "1 2 -1 3")
print("permutation of", word, "->", rho(word))

# a pure braid has a winding number for every pair of strands
full_twist = named_braid("z", (), strands)
print("full twist windings:", dict(zip(pairs(strands), winding_vector(full_twist).coords)))

# the generators a_ij wind exactly once around their own pair
a13 = named_braid("a", (1, 3), strands)
print("a_13 windings:", dict(zip(pairs(strands), winding_vector(a13).coords)))

# membership in a Specht subgroup is a set of linear equations on the windings
for ident in ("N0", "N1", "N2", "N12"):
    print(f"full twist in {ident}:", specht_membership(full_twist, ident))

# the Specht class of a submodule depends on which isotypic pieces its generators touch
print("class of <full twist>:", classify_submodule([winding_vector(full_twist)], strands))
print("class of <a_13>:", classify_submodule([winding_vector(a13)], strands))

# the listed generators of N02 span a proper sublattice of its solution lattice
for n in (4, 5, 6):
    gap = lattice_index(generator_lattice("N02", n), specht_lattice("N02", n))
    print(f"N02 at n={n}: generators reach index {gap} in the solution lattice")

witness = named_braid("a", (1, 2), 4) * named_braid("a", (3, 4), 4)
print("a_12 a_34 lies in N02:", specht_membership(witness, "N02"),
      "but outside the generated lattice:",
      not generator_lattice("N02", 4).contains(list(winding_vector(witness).coords)))
