"""Closed-form expectations: cohomology tables, splitting table, index formulas.

Abelian groups are written as ``(free_rank, invariant_factors)``.  Ring-valued
pieces are built from three primitives on ``R = Z`` or ``Z/m``:
``R`` itself, the torsion ``R[k]`` and the quotient ``R/kR``.
"""

from __future__ import annotations

from math import comb, gcd
from typing import List, Optional, Tuple

from .linalg import snf
from .symmetric import Constants, Ring

Group = Tuple[int, List[int]]


def _whole(ring: Ring) -> Group:
    return (1, []) if ring.is_integral else (0, [ring.modulus])


def _torsion(ring: Ring, k: int) -> Group:
    if ring.is_integral:
        return (0, [])
    return (0, [gcd(k, ring.modulus)])


def _quot(ring: Ring, k: int) -> Group:
    if ring.is_integral:
        return (0, [abs(k)])
    return (0, [gcd(k, ring.modulus)])


def _sum(*parts: Group) -> Group:
    free = sum(p[0] for p in parts)
    orders = [d for p in parts for d in p[1] if d != 1]
    if not orders:
        return (free, [])
    divs = snf([[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)])
    return (free, [d for d in divs if d != 1])


def _cyclic(order: int) -> Group:
    return (0, [order] if order > 1 else [])


def _kernel_times_two(ring: Ring, n: int) -> int:
    """Order of ker(R/C(n,2)R --2--> R/nR)."""
    g = _quot(ring, comb(n, 2))[1][0]
    h = _quot(ring, n)[1][0]
    return sum(1 for x in range(g) if (2 * x) % h == 0)


def _s2_h1_sub(ring: Ring, n: int) -> int:
    """Order of R[n] / (n-1) R[C(n,2)] for even n."""
    if ring.is_integral:
        return 1
    m = ring.modulus
    rn = gcd(n, m)
    gen = (n - 1) * (m // gcd(comb(n, 2), m)) % m
    sub = m // gcd(m, gen) if gen else 1
    return rn // sub


def cohomology(module_id: str, degree: int, n: int, ring: Ring) -> Optional[Group]:
    """Expected H^degree(S_n; module); None where the tables leave the group undetermined."""
    g = _cohomology(module_id, degree, n, ring)
    return None if g is None else _sum(g)


def _cohomology(module_id: str, degree: int, n: int, ring: Ring) -> Optional[Group]:
    c = Constants(n)
    C = comb(n, 2)
    R2 = _torsion(ring, 2)
    R_2 = _quot(ring, 2)
    if module_id == "S0":
        return [_whole(ring), R2, _sum(R2, R_2) if n >= 4 else R_2][degree]
    if module_id == "M1":
        if degree == 0:
            return _whole(ring)
        if degree == 1:
            return R2
        return _sum(R2, R_2) if n >= 5 else R_2
    if module_id == "M2":
        if degree == 0:
            return _whole(ring)
        if degree == 1:
            return _sum(R2, R2) if n >= 4 else R2
        if n >= 6:
            return _sum(R2, R2, R_2, R_2)
        if n >= 4:
            return _sum(R2, R_2, R_2)
        return R_2
    if module_id == "S1":
        if degree == 0:
            return _torsion(ring, n)
        if degree == 1:
            return _quot(ring, n) if n % 2 else _sum(_quot(ring, n), R2)
        if n % 2:
            return (0, [])
        return _sum(R2, R_2) if n == 4 else _sum(R2, R2, R_2)
    if module_id == "K12":
        if degree == 0:
            return _torsion(ring, C)
        if degree == 1:
            return _quot(ring, 3) if n == 3 else _sum(R2, _quot(ring, C))
        if n == 3:
            return (0, [])
        if n in (4, 5) or C % 2:
            return _sum(R2, R_2)
        return _sum(R2, R2, R_2)
    if module_id == "S2":
        if n < 4:
            return None
        if degree == 0:
            return _torsion(ring, c.b_n1)
        if degree == 1:
            quot = _kernel_times_two(ring, n)
            if n % 2:
                return _sum(R2, _cyclic(quot))
            sub = _s2_h1_sub(ring, n)
            if sub == 1:
                return _cyclic(quot)
            if quot == 1:
                return _cyclic(sub)
            if gcd(sub, quot) == 1:
                return _cyclic(sub * quot)
            return None
        if n % 4 == 0:
            return R_2
        if n % 4 == 1 and n >= 9:
            return _sum(R2, R2, R_2)
        return _sum(R2, R_2)
    raise ValueError(f"no table for module {module_id}")


def splits(n: int, ring: Ring, map_id: str) -> bool:
    """Splitting table for quotients of B_n by Specht-type kernels."""
    odd_m = not ring.is_integral and ring.modulus % 2 == 1
    if map_id == "f1":
        return n % 2 == 1 or odd_m
    return odd_m


def f1_index(n: int) -> int:
    """[S1_Z : f1(M2_Z)] = (na)^(n-2)."""
    return Constants(n).na ** (n - 2)


def f2_index(n: int) -> int:
    """[S2_Z : f2(M2_Z)] = 2b ((n-1)b)^(C(n,2)-n-1) (n-2)^(C(n-1,2)-n), valid for n >= 5."""
    if n < 5:
        raise ValueError("the closed form has a negative exponent below n = 5")
    c = Constants(n)
    return c.two_b * c.b_n1 ** (comb(n, 2) - n - 1) * (n - 2) ** (comb(n - 1, 2) - n)


def s2_dual_order(n: int) -> int:
    """|epsilon_bar(S2_Z)| = 2b (n-2)^(C(n-1,2)-n)."""
    return Constants(n).two_b * (n - 2) ** (comb(n - 1, 2) - n)
