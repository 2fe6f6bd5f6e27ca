"""Braid words, the projection to S_n, winding numbers and Specht subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Sequence, Tuple

from .linalg import IntMatrix, Lattice, kernel_basis
from .modules import (ModuleElement, UnsupportedAtN3, module, pairs, standard_pairs, u_vec,
                      w_vec)
from .symmetric import Permutation


class NotPure(ValueError):
    """A winding vector was requested for a braid that is not pure."""

    def __init__(self, perm: Permutation):
        super().__init__(f"braid is not pure (permutation {perm})")
        self.perm = perm


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_k^{+-1}, stored as signed indices."""

    n: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(k) for k in self.letters)
        for k in letters:
            if k == 0 or abs(k) >= self.n:
                raise ValueError(f"letter {k} invalid for {self.n} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, n: int, text: str) -> "BraidWord":
        return cls(n, tuple(int(tok) for tok in text.split()))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise ValueError("strand counts differ")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)


def rho(w: BraidWord) -> Permutation:
    """Image in S_n: sigma_k -> s_k, multiplied as function composition."""
    pos = list(range(1, w.n + 1))  # pos[p-1] = strand at position p
    for k in w.letters:
        a = abs(k)
        pos[a - 1], pos[a] = pos[a], pos[a - 1]
    return Permutation(tuple(pos))


def doubled_windings(w: BraidWord) -> List[int]:
    """Signed crossing counts per strand pair, in M2 coordinate order."""
    idx = {p: k for k, p in enumerate(pairs(w.n))}
    out = [0] * len(idx)
    pos = list(range(1, w.n + 1))
    for k in w.letters:
        a = abs(k)
        s1, s2 = pos[a - 1], pos[a]
        out[idx[(min(s1, s2), max(s1, s2))]] += 1 if k > 0 else -1
        pos[a - 1], pos[a] = s2, s1
    return out


def winding_vector(w: BraidWord) -> ModuleElement:
    """Abelianization image of a pure braid in M2 over Z."""
    p = rho(w)
    if not p.is_identity():
        raise NotPure(p)
    dbl = doubled_windings(w)
    assert all(x % 2 == 0 for x in dbl)
    return module("M2", w.n).element([x // 2 for x in dbl])


# ---------------------------------------------------------------------------
# named braids


def _a(n: int, i: int, j: int) -> BraidWord:
    if not 1 <= i < j <= n:
        raise IndexError(f"a_{i}{j} needs 1 <= i < j <= {n}")
    outer = tuple(range(j - 1, i, -1))
    return BraidWord(n, outer + (i, i) + tuple(-k for k in reversed(outer)))


def _y(n: int, i: int) -> BraidWord:
    w = BraidWord(n)
    for k in range(1, i):
        w = w * _a(n, k, i)
    for k in range(i + 1, n + 1):
        w = w * _a(n, i, k)
    return w


def _z(n: int) -> BraidWord:
    w = BraidWord(n)
    for i, j in pairs(n):
        w = w * _a(n, i, j)
    return w


def _lift(n: int, i: int, j: int) -> BraidWord:
    if (i, j) not in standard_pairs(n):
        raise IndexError(f"({i}, {j}) is not a standard polytabloid index for n={n}")
    if i == 2:
        return _a(n, 1, 3) * _a(n, 2, j) * _a(n, 1, j).inverse() * _a(n, 2, 3).inverse()
    return _a(n, 1, 2) * _a(n, i, j) * _a(n, 1, j).inverse() * _a(n, 2, i).inverse()


def named_braid(kind: str, indices: Sequence[int], n: int) -> BraidWord:
    """``a`` (i, j), ``y`` (i), ``z`` (), ``lift`` (i, j)."""
    idx = tuple(indices)
    if kind == "a":
        return _a(n, *idx)
    if kind == "y":
        if len(idx) != 1 or not 1 <= idx[0] <= n:
            raise IndexError("y takes one index in 1..n")
        return _y(n, idx[0])
    if kind == "z":
        if idx:
            raise IndexError("z takes no indices")
        return _z(n)
    if kind == "lift":
        if n < 4:
            raise IndexError("lifts need n >= 4")
        return _lift(n, *idx)
    raise ValueError(f"unknown braid kind {kind}")


# ---------------------------------------------------------------------------
# Specht subgroups via winding equations

SUBGROUPS = ("N0", "N1", "N2", "N01", "N02", "N12")


def _check_id(ident: str, n: int):
    if ident not in SUBGROUPS:
        raise ValueError(f"unknown subgroup {ident}")
    if n == 3 and ident not in ("N0", "N1"):
        raise UnsupportedAtN3(f"{ident} is not defined at n = 3")


@lru_cache(maxsize=None)
def winding_equations(ident: str, n: int) -> IntMatrix:
    """Rows are the linear equations cutting out the subgroup's windings."""
    _check_id(ident, n)
    P = pairs(n)
    d = len(P)
    idx = {p: k for k, p in enumerate(P)}

    def key(a, b):
        return idx[(min(a, b), max(a, b))]

    rows: List[List[int]] = []
    if n == 3:
        if ident == "N0":
            rows = [[1, -1, 0], [1, 0, -1]]
        else:
            rows = [[1, 1, 1]]
        return IntMatrix.from_dense(rows)
    if ident == "N0":
        for k in range(1, d):
            r = [0] * d
            r[0], r[k] = 1, -1
            rows.append(r)
    elif ident == "N1":
        for i, j in P:
            r = [0] * d
            r[key(i, j)] += n - 4
            for k in range(1, n + 1):
                if k not in (i, j):
                    r[key(i, k)] -= 1
                    r[key(j, k)] -= 1
            rows.append(r)
    elif ident == "N2":
        rows = [w_vec(n, i) for i in range(1, n + 1)]
    elif ident == "N01":
        for i, j in P:
            r = [0] * d
            r[key(i, j)] += (n - 2) * (n - 3)
            for k, l in P:
                if not {k, l} & {i, j}:
                    r[key(k, l)] += 2
            for k in range(1, n + 1):
                if k not in (i, j):
                    r[key(i, k)] -= n - 3
                    r[key(j, k)] -= n - 3
            rows.append(r)
    elif ident == "N02":
        for i in range(1, n + 1):
            r = [0] * d
            for j in range(1, n + 1):
                if j != i:
                    r[key(i, j)] += n - 2
            for j, k in P:
                if i not in (j, k):
                    r[key(j, k)] -= 2
            rows.append(r)
    elif ident == "N12":
        rows = [u_vec(n)]
    return IntMatrix.from_dense(rows)


def _satisfies(ident: str, n: int, omega: Sequence[int]) -> bool:
    return not any(winding_equations(ident, n).apply(list(omega)))


def specht_membership(w: BraidWord, ident: str) -> bool:
    _check_id(ident, w.n)
    omega = winding_vector(w).coords
    return _satisfies(ident, w.n, omega)


def specht_lattice(ident: str, n: int) -> Lattice:
    """Image of the subgroup in M2_Z: the solution lattice of its winding equations."""
    return kernel_basis(winding_equations(ident, n))


def subgroup_generators(ident: str, n: int) -> List[BraidWord]:
    """Explicit normal generating braids whose windings span the subgroup's image."""
    _check_id(ident, n)
    a = lambda i, j: _a(n, i, j)
    if n == 3:
        if ident == "N0":
            return [a(1, 2) * a(1, 3) * a(2, 3)]
        return [a(2, 3) * a(1, 3).inverse(), a(2, 3) * a(1, 2).inverse()]
    lifts = [_lift(n, i, j) for i, j in standard_pairs(n)]
    z = _z(n)
    ys = [_y(n, i) for i in range(1, n + 1)]
    if ident == "N0":
        return [z]
    if ident == "N1":
        gens = [ys[i] * ys[0].inverse() for i in range(1, n)]
        if n % 2 == 0:
            gens.append(z * ys[0] ** (-(n // 2)))
        return gens
    if ident == "N2":
        return lifts
    if ident == "N01":
        return [z] + ys[: n - 1]
    if ident == "N02":
        return lifts + [z]
    return [a(i, j) * a(1, 2).inverse() for i, j in pairs(n) if (i, j) != (1, 2)]


def generator_lattice(ident: str, n: int) -> Lattice:
    return Lattice(comb(n, 2), [list(winding_vector(g).coords) for g in subgroup_generators(ident, n)])
