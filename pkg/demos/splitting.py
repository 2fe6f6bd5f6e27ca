"""
Which braid group quotients split over the symmetric group
==========================================================

Run with ``python3 demos/splitting.py``.
"""

import itertools

from specht_lab import expected
from specht_lab.cohomology import MAP_IDS, ExtensionGroup, QuotientSpec, splitting_check
from specht_lab.symmetric import Permutation, Ring, ZZ

rings = (ZZ, Ring(2), Ring(3), Ring(4), Ring(5), Ring(6))

# the grid: yes/no per quotient, with a relation-checked section whenever it splits
for n in (4, 5):
    print(f"--- n = {n}")
    print("map   " + "".join(f"{str(r):>6}" for r in rings))
    for map_id in MAP_IDS:
        cells = []
        for ring in rings:
            if map_id == "pi_m" and ring.is_integral:
                cells.append("     -")
                continue
            result = splitting_check(QuotientSpec(n, ring, map_id))
            flag = "yes" if result["splits"] else "no"
            if result["splits"] != expected.splits(n, ring, map_id):
                flag += "*"
            cells.append(f"{flag:>6}")
        print(f"{map_id:<6}" + "".join(cells))
print("(* = differs from the closed-form table)")

# at n = 4 the f2 quotient has sections; find them by brute force in the finite group
spec = QuotientSpec(4, Ring(2), "f2")
group = ExtensionGroup(spec)
values = sorted({x.wind.coords for x in group.elements()})
one = group.identity()
mul = group.multiply
lifts = []
for i in range(1, 4):
    s = Permutation.s(4, i)
    lifts.append([x for x in (group.element(s, list(v)) for v in values) if mul(x, x) == one])
sections = [
    xs for xs in itertools.product(*lifts)
    if all(mul(mul(xs[i], xs[i + 1]), xs[i]) == mul(mul(xs[i + 1], xs[i]), xs[i + 1]) for i in range(2))
    and mul(xs[0], xs[2]) == mul(xs[2], xs[0])
]
print(f"n = 4, f2 over Z/2: {len(sections)} sections found by exhaustive search")
print("one of them:", [str(x) for x in sections[0]])
