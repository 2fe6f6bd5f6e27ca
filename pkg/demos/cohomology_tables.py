"""
Low-degree cohomology of the symmetric group
============================================

Run with ``python3 demos/cohomology_tables.py``.  The first run builds the
degree-two kernel cache in ``$SPECHT_LAB_CACHE`` (default ``.specht-cache``).
"""

from specht_lab import expected
from specht_lab.cohomology import cohomology_group, is_coboundary, module_map, pushforward
from specht_lab.modules import module
from specht_lab.resolution import named_cocycle
from specht_lab.symmetric import Ring, ZZ


def show(group):
    free, torsion = group.free_rank, group.torsion
    parts = ["Z"] * free + [f"Z/{d}" for d in torsion]
    return " + ".join(parts) or "0"


# every module is a lattice inside a permutation module, reduced mod m when asked
for n in (4, 5):
    print(f"--- n = {n}")
    for ident in ("S0", "M1", "M2", "S1", "K12", "S2"):
        for ring in (ZZ, Ring(2)):
            groups = [cohomology_group(k, module(ident, n, ring)) for k in range(3)]
            row = [show(g) for g in groups]
            table = [expected.cohomology(ident, k, n, ring) for k in range(3)]
            agree = all(t is None or t == (g.free_rank, g.torsion) for t, g in zip(table, groups))
            mark = "ok" if agree else "differs from table"
            print(f"{ident:>4} over {str(ring):>4}:  H0 = {row[0]:<10} H1 = {row[1]:<14} H2 = {row[2]:<20} {mark}")

# generators come back as explicit cochains on the resolution cells
group = cohomology_group(1, module("M2", 4, Ring(2)))
for gen in group.generators:
    print("H1 generator:", gen.to_json()["values"])

# pushing the structure cocycle along f0 gives the untwisted class
pushed = pushforward(module_map("f0", module("M2", 4)), named_cocycle("hat_alpha2", 1, 4))
print("f0 of the structure class equals alpha0(1):", pushed == named_cocycle("alpha0", 1, 4))

# coboundary questions return either a witness or the class as a certificate
over_three = pushforward(module_map("reduce:3", module("M2", 4)), named_cocycle("hat_alpha2", 1, 4))
witness, certificate = is_coboundary(over_three)
print("over Z/3 the structure class is a coboundary:", witness is not None)
over_two = pushforward(module_map("reduce:2", module("M2", 4)), named_cocycle("hat_alpha2", 1, 4))
witness, certificate = is_coboundary(over_two)
print("over Z/2 it is not; certificate:", certificate)
