"""Permutation modules M1, M2 and their Specht-type sub- and quotient modules.

Every module is presented inside an ambient permutation module Z^d (basis
labels ``t_i`` or ``v_ij``, or a direct sum of such blocks) as

    (L + Rel) / Rel

where ``L`` is an action-invariant sublattice and ``Rel`` an ambient relation
lattice (``m Z^d`` for the ring Z/m, plus any quotient sublattice).  Elements
are stored as ambient coordinates reduced to a canonical representative
modulo ``Rel``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .linalg import Echelon, IntMatrix, Lattice, SparseVec, _axpy, to_dense, to_sparse
from .symmetric import ZZ, Constants, Permutation, Ring


class AmbientMismatch(ValueError):
    """An element does not live in the ambient a function expects."""


class UnsupportedAtN3(ValueError):
    """The requested object is not defined for three strands."""


# ---------------------------------------------------------------------------
# ambient permutation modules


def pairs(n: int) -> List[Tuple[int, int]]:
    """Labels of M2 in standard order, sorted by (min, max)."""
    return list(combinations(range(1, n + 1), 2))


def standard_pairs(n: int) -> List[Tuple[int, int]]:
    """Index pairs of the standard polytabloids: (2, i) for i >= 4, then (i, j) for 3 <= i < j."""
    return [(2, i) for i in range(4, n + 1)] + [(i, j) for i in range(3, n + 1) for j in range(i + 1, n + 1)]


BLOCKS = ("S0", "M1", "M2")


@dataclass(frozen=True)
class Ambient:
    """A direct sum of permutation modules from ``S0``, ``M1``, ``M2``."""

    n: int
    blocks: Tuple[str, ...]

    def __post_init__(self):
        for b in self.blocks:
            if b not in BLOCKS:
                raise ValueError(f"unknown block {b}")

    @property
    def labels(self) -> List[Tuple[str, Tuple[int, ...]]]:
        return _labels(self.n, self.blocks)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def label_names(self) -> List[str]:
        out = []
        for b, idx in self.labels:
            if b == "S0":
                out.append("1")
            elif b == "M1":
                out.append(f"t{idx[0]}")
            else:
                out.append(f"v{idx[0]}{idx[1]}" if self.n < 10 else f"v{idx[0]},{idx[1]}")
        return out

    def index(self, block: str, idx: Tuple[int, ...]) -> int:
        return _label_index(self.n, self.blocks)[(block, tuple(idx))]

    def coord_perm(self, g: Permutation) -> Tuple[int, ...]:
        """``pc`` with ``(g x)[pc[k]] == x[k]``."""
        return _coord_perm(self.n, self.blocks, g)

    def act(self, g: Permutation, vec: Sequence[int]) -> List[int]:
        pc = self.coord_perm(g)
        out = [0] * len(vec)
        for k, x in enumerate(vec):
            if x:
                out[pc[k]] = x
        return out

    def act_sparse(self, g: Permutation, vec: SparseVec) -> SparseVec:
        pc = self.coord_perm(g)
        return {pc[k]: x for k, x in vec.items()}

    def __str__(self) -> str:
        return "+".join(self.blocks)


@lru_cache(maxsize=None)
def _labels(n: int, blocks: Tuple[str, ...]):
    out = []
    for b in blocks:
        if b == "S0":
            out.append((b, ()))
        elif b == "M1":
            out.extend((b, (i,)) for i in range(1, n + 1))
        else:
            out.extend((b, p) for p in pairs(n))
    return out


@lru_cache(maxsize=None)
def _label_index(n: int, blocks: Tuple[str, ...]):
    return {lab: k for k, lab in enumerate(_labels(n, blocks))}


@lru_cache(maxsize=None)
def _coord_perm(n: int, blocks: Tuple[str, ...], g: Permutation) -> Tuple[int, ...]:
    if g.n != n:
        raise ValueError(f"permutation on {g.n} points acting on n={n}")
    index = _label_index(n, blocks)
    out = []
    for b, idx in _labels(n, blocks):
        img = tuple(sorted(g(i) for i in idx))
        out.append(index[(b, img)])
    return tuple(out)


def check_generator_action(n: int, blocks: Tuple[str, ...]) -> bool:
    """The s_i label permutations satisfy the Coxeter relations of S_n."""
    amb = Ambient(n, blocks)
    d = amb.dim
    ident = tuple(range(d))

    def table(i):
        return amb.coord_perm(Permutation.s(n, i))

    def mul(p, q):  # apply q then p
        return tuple(p[q[k]] for k in range(d))

    for i in range(1, n):
        si = table(i)
        if mul(si, si) != ident:
            return False
        if i + 1 < n:
            sj = table(i + 1)
            if mul(si, mul(sj, si)) != mul(sj, mul(si, sj)):
                return False
        for j in range(i + 2, n):
            sj = table(j)
            if mul(si, sj) != mul(sj, si):
                return False
    return True


# ---------------------------------------------------------------------------
# presented modules


def _hnf_reducer(lat: Optional[Lattice]):
    if lat is None or lat.rank == 0:
        return []
    ech = Echelon()
    for v in lat.vectors():
        ech.insert(v)
    return [(min(r), r) for r in ech.hnf_rows()]


class PresentedModule:
    """``(L + Rel)/Rel`` inside an ambient permutation module.

    ``lattice`` is L (None for the whole ambient), ``relations`` an extra
    action-invariant ambient lattice to quotient by (beyond ``m Z^d``).
    """

    def __init__(self, ident: str, n: int, ring: Ring, ambient: Ambient,
                 lattice: Optional[Lattice] = None, relations: Optional[Lattice] = None,
                 check: bool = True):
        self.id = ident
        self.n = n
        self.ring = ring
        self.ambient = ambient
        d = ambient.dim
        self.lattice = lattice if lattice is not None else Lattice.full(d)
        self.extra_relations = relations
        rel_gens: List[SparseVec] = []
        if ring.modulus is not None:
            rel_gens += [{i: ring.modulus} for i in range(d)]
        if relations is not None:
            rel_gens += relations.vectors()
        self.ambient_relations = Lattice(d, rel_gens) if rel_gens else Lattice.zero(d)
        self._reducer = _hnf_reducer(self.ambient_relations)
        if check:
            self._check_invariant()

    def __repr__(self) -> str:
        return f"PresentedModule({self.id}, n={self.n}, ring={self.ring})"

    @property
    def dim(self) -> int:
        return self.ambient.dim

    def _check_invariant(self) -> None:
        amb = self.ambient
        for i in range(1, self.n):
            s = Permutation.s(self.n, i)
            for v in self.lattice.vectors():
                if not self.lattice.contains(amb.act_sparse(s, v)):
                    raise ValueError(f"{self.id}: lattice not invariant under s_{i}")
            if self.extra_relations is not None:
                for v in self.extra_relations.vectors():
                    if not self.extra_relations.contains(amb.act_sparse(s, v)):
                        raise ValueError(f"{self.id}: relations not invariant under s_{i}")

    # -- element handling -------------------------------------------------

    def canonical(self, coords: Union[Sequence[int], SparseVec]) -> Tuple[int, ...]:
        v = list(coords) if not isinstance(coords, dict) else to_dense(coords, self.dim)
        if len(v) != self.dim:
            raise AmbientMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        for c, row in self._reducer:
            q = v[c] // row[c]
            if q:
                for k, x in row.items():
                    v[k] -= q * x
        return tuple(v)

    def is_member(self, coords: Sequence[int]) -> bool:
        """Whether ambient coords represent an element of (L + Rel)/Rel."""
        v = to_sparse(coords)
        if self.lattice.contains(v):
            return True
        if self.ambient_relations.rank == 0:
            return False
        return _sum_lattice(self).contains(v)

    def element(self, coords: Union[Sequence[int], SparseVec], check: bool = True) -> "ModuleElement":
        c = self.canonical(coords)
        if check and not self.is_member(c):
            raise AmbientMismatch(f"coordinates do not lie in {self.id}")
        return ModuleElement(self, c)

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, (0,) * self.dim)

    # -- lattice-coordinate data for cohomology --------------------------

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def basis_vectors(self) -> List[SparseVec]:
        return self.lattice.vectors()

    def lattice_coords(self, coords: Sequence[int]) -> List[int]:
        """Coordinates in the L basis of a representative lying in L."""
        v = to_sparse(coords)
        c = self.lattice.coordinates(v)
        if c is None:
            c = _lift_into_lattice(self, v)
        return c

    def from_lattice_coords(self, x: Sequence[int]) -> "ModuleElement":
        acc: SparseVec = {}
        for c, b in zip(x, self.lattice.vectors()):
            _axpy(acc, c, b)
        return ModuleElement(self, self.canonical(acc))

    def relation_lattice_coords(self) -> List[List[int]]:
        """Generators of L ∩ Rel in L coordinates."""
        return _relations_in_l(self)

    def action_matrices(self) -> Dict[Permutation, List[List[int]]]:
        """r x r integer matrices of every group element in L coordinates."""
        return _action_matrices(self)

    def key(self):
        return (self.id, self.n, self.ring, self.ambient, self.lattice, self.ambient_relations)

    def __eq__(self, other):
        return isinstance(other, PresentedModule) and self.key() == other.key()

    def __hash__(self):
        return hash((self.id, self.n, self.ring))


def _cached(M: PresentedModule, name: str, build):
    cache = M.__dict__.setdefault("_cache", {})
    if name not in cache:
        cache[name] = build()
    return cache[name]


def _sum_lattice(M: PresentedModule) -> Lattice:
    return _cached(M, "sum", lambda: M.lattice + M.ambient_relations)


def _lift_into_lattice(M: PresentedModule, v: SparseVec) -> List[int]:
    # v = l + r with l in L, r in Rel; find l's coordinates
    gens = M.lattice.vectors() + M.ambient_relations.vectors()
    ech = Echelon(track=True)
    for i, g in enumerate(gens):
        ech.insert(g, {i: 1})
    rem, tag = ech.reduce(v, {})
    if rem:
        raise AmbientMismatch(f"vector does not represent an element of {M.id}")
    return [-tag.get(i, 0) for i in range(M.lattice.rank)]


def _relations_in_l(M: PresentedModule) -> List[List[int]]:
    def build():
        if M.ambient_relations.rank == 0:
            return []
        inter = M.lattice.intersect(M.ambient_relations)
        return M.lattice.coordinate_matrix(inter.vectors())

    return _cached(M, "rels", build)


def _action_matrices(M: PresentedModule) -> Dict[Permutation, List[List[int]]]:
    return _cached(M, "acts", lambda: _build_action_matrices(M))


def _build_action_matrices(M: PresentedModule) -> Dict[Permutation, List[List[int]]]:
    n, r = M.n, M.rank
    basis = M.lattice.vectors()
    gens = {}
    for i in range(1, n):
        s = Permutation.s(n, i)
        cols = M.lattice.coordinate_matrix([M.ambient.act_sparse(s, b) for b in basis])
        # cols[j] = coordinates of s * b_j; matrix entry [row][col]
        gens[s] = [[cols[j][k] for j in range(r)] for k in range(r)]
    ident = Permutation.identity(n)
    mats = {ident: [[int(i == j) for j in range(r)] for i in range(r)]}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s, A in gens.items():
                h = s * g
                if h not in mats:
                    B = mats[g]
                    mats[h] = [[sum(A[i][k] * B[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
                    nxt.append(h)
        frontier = nxt
    return mats


@dataclass(frozen=True)
class ModuleElement:
    module: PresentedModule = field(compare=False)
    coords: Tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.module.key() == other.module.key() and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def _same(self, other: "ModuleElement"):
        if self.module.key() != other.module.key():
            raise AmbientMismatch(f"{self.module.id} vs {other.module.id}")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._same(other)
        return ModuleElement(self.module, self.module.canonical([a + b for a, b in zip(self.coords, other.coords)]))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        self._same(other)
        return ModuleElement(self.module, self.module.canonical([a - b for a, b in zip(self.coords, other.coords)]))

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.module, self.module.canonical([-a for a in self.coords]))

    def __rmul__(self, k: int) -> "ModuleElement":
        return ModuleElement(self.module, self.module.canonical([k * a for a in self.coords]))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> dict:
        names = self.module.ambient.label_names()
        return {
            "module": self.module.id,
            "n": self.module.n,
            "ring": self.module.ring.to_json(),
            "coords": {k: c for k, c in zip(names, self.coords) if c},
        }

    def __repr__(self) -> str:
        names = self.module.ambient.label_names()
        terms = [f"{c}*{k}" for k, c in zip(names, self.coords) if c]
        return f"<{self.module.id}: {' + '.join(terms) or '0'}>"


def act(g: Permutation, v: ModuleElement) -> ModuleElement:
    if g.n != v.module.n:
        raise ValueError("permutation size does not match the module")
    M = v.module
    return ModuleElement(M, M.canonical(M.ambient.act(g, v.coords)))


# ---------------------------------------------------------------------------
# named vectors (integer, ambient coordinates)


def _pidx(n: int) -> Dict[Tuple[int, int], int]:
    return {p: k for k, p in enumerate(pairs(n))}


def v_vec(n: int, i: int, j: int) -> List[int]:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"v_{i}{j} not defined for n={n}")
    out = [0] * comb(n, 2)
    out[_pidx(n)[(min(i, j), max(i, j))]] = 1
    return out


def t_vec(n: int, i: int) -> List[int]:
    if not 1 <= i <= n:
        raise IndexError(f"t_{i} not defined for n={n}")
    out = [0] * n
    out[i - 1] = 1
    return out


def u_vec(n: int) -> List[int]:
    return [1] * comb(n, 2)


def w_vec(n: int, i: int) -> List[int]:
    if not 1 <= i <= n:
        raise IndexError(f"w_{i} not defined for n={n}")
    return [1 if i in p else 0 for p in pairs(n)]


def e_vec(n: int, i: int, j: int) -> List[int]:
    """Standard polytabloid e_{2i} (i >= 4) or e_{ij} (3 <= i < j)."""
    if (i, j) not in standard_pairs(n):
        raise IndexError(f"e_{i}{j} is not a standard polytabloid for n={n}")
    out = [0] * comb(n, 2)
    idx = _pidx(n)

    def add(a, b, c):
        out[idx[(min(a, b), max(a, b))]] += c

    if i == 2:
        add(2, j, 1); add(1, 3, 1); add(1, j, -1); add(2, 3, -1)
    else:
        add(i, j, 1); add(1, 2, 1); add(1, j, -1); add(2, i, -1)
    return out


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


# ---------------------------------------------------------------------------
# module catalogue


def _m1(n):
    return Ambient(n, ("M1",))


def _m2(n):
    return Ambient(n, ("M2",))


@lru_cache(maxsize=None)
def s1_lattice(n: int) -> Lattice:
    return Lattice(n, [[1 if k == 0 else (-1 if k == i else 0) for k in range(n)] for i in range(1, n)])


@lru_cache(maxsize=None)
def k12_lattice(n: int) -> Lattice:
    d = comb(n, 2)
    return Lattice(d, [[1 if k == 0 else (-1 if k == i else 0) for k in range(d)] for i in range(1, d)])


@lru_cache(maxsize=None)
def s2_lattice(n: int) -> Lattice:
    if n == 3:
        return Lattice.zero(3)
    return Lattice(comb(n, 2), [e_vec(n, i, j) for i, j in standard_pairs(n)])


def f_matrix(i: int, n: int) -> IntMatrix:
    """Integer matrix of f^i : M2 -> S^i ambient (S0, M1 or M2)."""
    c = Constants(n)
    P = pairs(n)
    d = len(P)
    if i == 0:
        return IntMatrix.from_dense([[1] * d])
    if i == 1:
        rows = [[0] * d for _ in range(n)]
        for col, (a, b) in enumerate(P):
            for k in range(1, n + 1):
                rows[k - 1][col] = -c.two_a + (c.na if k in (a, b) else 0)
        return IntMatrix.from_dense(rows)
    if i == 2:
        if n == 3:
            return IntMatrix(3, 3)
        rows = [[0] * d for _ in range(d)]
        for col, p in enumerate(P):
            for row, q in enumerate(P):
                shared = len(set(p) & set(q))
                if shared == 2:
                    val = (n - 2) * (n - 3) * c.two_b // 2
                elif shared == 1:
                    val = (3 - n) * c.two_b // 2
                else:
                    val = c.two_b
                rows[row][col] = val
        return IntMatrix.from_dense(rows)
    raise ValueError("f-map index must be 0, 1 or 2")


def mu_matrix(n: int) -> IntMatrix:
    rows = [[1 if k in p else 0 for p in pairs(n)] for k in range(1, n + 1)]
    return IntMatrix.from_dense(rows)


def nu_matrix(n: int) -> IntMatrix:
    """t_i -> w_i."""
    return mu_matrix(n).transpose()


_F_BLOCK = {0: "S0", 1: "M1", 2: "M2"}


def f_sum_matrix(indices: Tuple[int, ...], n: int) -> IntMatrix:
    mats = [f_matrix(i, n) for i in indices]
    out = mats[0]
    for m in mats[1:]:
        out = out.vstack(m)
    return out


@lru_cache(maxsize=None)
def image_lattice(indices: Tuple[int, ...], n: int) -> Lattice:
    F = f_sum_matrix(indices, n)
    return Lattice(F.nrows, F.columns())


@lru_cache(maxsize=None)
def m2_equiv_lattice(n: int) -> Lattice:
    """Congruence-defined M2_≡ over Z, generated as a lattice by u, b(n-1)w_i, b(n-1)(n-2)v_ij."""
    c = Constants(n)
    gens = [u_vec(n)] + [[c.b_n1 * x for x in w_vec(n, i)] for i in range(1, n + 1)]
    gens += [[c.b_n1_n2 * x for x in v_vec(n, a, b)] for a, b in pairs(n)]
    return Lattice(comb(n, 2), gens)


MODULE_IDS = ("S0", "M1", "M2", "S1", "S2", "K12", "IM_F0", "IM_F1", "IM_F2",
              "IM_F01", "IM_F02", "IM_F12", "M2_EQUIV")


@lru_cache(maxsize=None)
def module(ident: str, n: int, ring: Ring = ZZ) -> PresentedModule:
    """Look up a module of the catalogue by id."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if ident == "S0":
        return PresentedModule("S0", n, ring, Ambient(n, ("S0",)))
    if ident == "M1":
        return PresentedModule("M1", n, ring, _m1(n))
    if ident == "M2":
        return PresentedModule("M2", n, ring, _m2(n))
    if ident == "S1":
        return PresentedModule("S1", n, ring, _m1(n), s1_lattice(n))
    if ident == "K12":
        return PresentedModule("K12", n, ring, _m2(n), k12_lattice(n))
    if ident == "S2":
        return PresentedModule("S2", n, ring, _m2(n), s2_lattice(n))
    if ident == "M2_EQUIV":
        return PresentedModule("M2_EQUIV", n, ring, _m2(n), m2_equiv_lattice(n))
    if ident.startswith("IM_F"):
        idx = tuple(int(ch) for ch in ident[4:])
        if not idx or any(i not in (0, 1, 2) for i in idx) or list(idx) != sorted(set(idx)):
            raise ValueError(f"unknown module {ident}")
        if 2 in idx and n == 3:
            raise UnsupportedAtN3("f^2 vanishes at n = 3")
        amb = Ambient(n, tuple(_F_BLOCK[i] for i in idx))
        return PresentedModule(ident, n, ring, amb, image_lattice(idx, n))
    raise ValueError(f"unknown module {ident}")


def quotient(base: PresentedModule, sub: Lattice, name: Optional[str] = None) -> PresentedModule:
    """``base / sub`` for an invariant sublattice ``sub`` of base's lattice."""
    rel = sub if base.extra_relations is None else base.extra_relations + sub
    return PresentedModule(name or f"QUOTIENT({base.id})", base.n, base.ring, base.ambient, base.lattice, rel)


# ---------------------------------------------------------------------------
# element constructors and maps


def special_element(kind: str, indices: Sequence[int], n: int, ring: Ring = ZZ) -> ModuleElement:
    """Named elements: ``u``, ``w`` (i), ``e`` (i, j), ``v`` (i, j) in M2; ``t`` (i) in M1."""
    idx = tuple(indices)
    if kind == "t":
        return module("M1", n, ring).element(t_vec(n, *idx))
    if kind == "u":
        if idx:
            raise IndexError("u takes no indices")
        vec = u_vec(n)
    elif kind == "w":
        vec = w_vec(n, *idx)
    elif kind == "v":
        vec = v_vec(n, *idx)
    elif kind == "e":
        if n < 4:
            raise IndexError("standard polytabloids need n >= 4")
        vec = e_vec(n, *idx)
    else:
        raise ValueError(f"unknown element kind {kind}")
    return module("M2", n, ring).element(vec)


def _require_m2(v: ModuleElement):
    if v.module.ambient.blocks != ("M2",):
        raise AmbientMismatch(f"expected an element of M2, got {v.module.id}")


def project(i: int, v: Union[ModuleElement, Sequence[int]], n: Optional[int] = None) -> List[Fraction]:
    """Rational projection of an integral M2 vector onto the S^i isotypic summand."""
    if isinstance(v, ModuleElement):
        _require_m2(v)
        if not v.module.ring.is_integral:
            raise ValueError("projections are defined over Z (rational output)")
        n = v.module.n
        vec = v.coords
    else:
        vec = list(v)
    P = pairs(n)
    d = len(P)
    out = [Fraction(0)] * d
    if i == 2 and n == 3:
        return out
    u = u_vec(n)
    for col, (a, b) in enumerate(P):
        c = vec[col]
        if not c:
            continue
        if i == 0:
            img = [Fraction(2, n * (n - 1)) * x for x in u]
        elif i == 1:
            ww = [x + y for x, y in zip(w_vec(n, a), w_vec(n, b))]
            img = [Fraction(x, n - 2) - Fraction(4 * y, n * (n - 2)) for x, y in zip(ww, u)]
        elif i == 2:
            ww = [x + y for x, y in zip(w_vec(n, a), w_vec(n, b))]
            e = v_vec(n, a, b)
            img = [e_ - Fraction(x, n - 2) + Fraction(2 * y, (n - 1) * (n - 2)) for e_, x, y in zip(e, ww, u)]
        else:
            raise ValueError("projection index must be 0, 1 or 2")
        for k in range(d):
            out[k] += c * img[k]
    return out


def f_map(i: int, v: ModuleElement) -> ModuleElement:
    """f^0, f^1, f^2 of an M2 element, landing in S0, S1 or S2 over the same ring."""
    _require_m2(v)
    n, ring = v.module.n, v.module.ring
    if i == 2 and n == 3:
        return module("M2", n, ring).zero()
    target = {0: "S0", 1: "S1", 2: "S2"}[i]
    img = f_matrix(i, n).apply(list(v.coords))
    return module(target, n, ring).element(img)


def mu(v: ModuleElement) -> ModuleElement:
    _require_m2(v)
    return module("M1", v.module.n, v.module.ring).element(mu_matrix(v.module.n).apply(list(v.coords)))


def nu(v: ModuleElement) -> ModuleElement:
    if v.module.ambient.blocks != ("M1",):
        raise AmbientMismatch("nu expects an element of M1")
    return module("M2", v.module.n, v.module.ring).element(nu_matrix(v.module.n).apply(list(v.coords)))


# ---------------------------------------------------------------------------
# membership by congruences


def membership(v: ModuleElement, target: str) -> bool:
    """Congruence-based membership tests (no lattice solving)."""
    ring = v.module.ring
    n = v.module.n
    c = list(v.coords)
    blocks = v.module.ambient.blocks
    if target in ("S1", "IM_F1"):
        if blocks != ("M1",):
            raise AmbientMismatch(f"{target} lives in M1")
        if ring.reduce(sum(c)) != 0:
            return False
        if target == "S1":
            return True
        k = Constants(n).na
        return all(ring.divides(k, c[i] - c[0]) for i in range(1, n))
    if blocks != ("M2",):
        raise AmbientMismatch(f"{target} lives in M2")
    if target == "K12":
        return ring.reduce(sum(c)) == 0
    if target == "S2":
        if n == 3:
            return all(ring.reduce(x) == 0 for x in c)
        return ring.reduce(sum(c)) == 0 and all(ring.reduce(x) == 0 for x in mu_matrix(n).apply(c))
    if target == "IM_F2":
        if n == 3:
            return all(ring.reduce(x) == 0 for x in c)
        if not membership(v, "S2"):
            return False
        if not _equiv_congruences(n, ring, c):
            return False
        if n % 2 == 0:
            idx = _pidx(n)
            for i, j, k in combinations(range(1, n + 1), 3):
                s = c[idx[(i, j)]] + c[idx[(i, k)]] + c[idx[(j, k)]]
                if not ring.divides(2, s):
                    return False
        return True
    if target == "M2_EQUIV":
        return _equiv_congruences(n, ring, c)
    raise ValueError(f"unknown membership target {target}")


def _equiv_congruences(n: int, ring: Ring, c: Sequence[int]) -> bool:
    k = Constants(n).b_n1
    if not all(ring.divides(k, x - c[0]) for x in c):
        return False
    idx = _pidx(n)

    def cc(a, b):
        return c[idx[(min(a, b), max(a, b))]]

    for i, j, k_, l in _distinct_quads(n):
        if not ring.divides(n - 2, cc(i, j) + cc(k_, l) - cc(i, l) - cc(k_, j)):
            return False
    return True


@lru_cache(maxsize=None)
def _distinct_quads(n: int):
    out = []
    rng = range(1, n + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    if len({i, j, k, l}) == 4:
                        out.append((i, j, k, l))
    return tuple(out)


def lattice_membership(v: ModuleElement, target: str) -> bool:
    """Membership by solving in the generated lattice (independent of the congruences)."""
    n, ring = v.module.n, v.module.ring
    if target in ("IM_F1", "IM_F2", "M2_EQUIV", "S1", "S2", "K12"):
        lat = {
            "IM_F1": lambda: image_lattice((1,), n),
            "IM_F2": lambda: image_lattice((2,), n),
            "M2_EQUIV": lambda: m2_equiv_lattice(n),
            "S1": lambda: s1_lattice(n),
            "S2": lambda: s2_lattice(n),
            "K12": lambda: k12_lattice(n),
        }[target]()
    else:
        raise ValueError(f"unknown target {target}")
    vec = to_sparse(v.coords)
    if ring.modulus is None:
        return lat.contains(vec)
    gens = lat.vectors() + [{i: ring.modulus} for i in range(lat.ambient_rank)]
    return Lattice(lat.ambient_rank, gens).contains(vec)


# ---------------------------------------------------------------------------
# epsilon bar and classification


def epsilon_bar(v: Union[ModuleElement, Sequence[int]], n: Optional[int] = None) -> List[int]:
    """Inner products with the standard polytabloids, reduced mod n-2."""
    if isinstance(v, ModuleElement):
        _require_m2(v)
        n = v.module.n
        vec = v.coords
    else:
        vec = list(v)
    if n < 4:
        raise ValueError("epsilon_bar needs n >= 4")
    return [dot(vec, e_vec(n, i, j)) % (n - 2) for i, j in standard_pairs(n)]


LABELS = ("PBn", "N0", "N1", "N2", "N01", "N02", "N12", "PBn'")


def classify_submodule(gens: Iterable[Union[ModuleElement, Sequence[int]]], n: int) -> str:
    """Which Specht-type subgroup the generated submodule is of finite index in."""
    vecs = [list(g.coords) if isinstance(g, ModuleElement) else list(g) for g in gens]
    present = []
    top = 2 if n >= 4 else 1
    for i in range(top + 1):
        present.append(any(any(x != 0 for x in project(i, v, n)) for v in vecs))
    on = tuple(i for i in range(top + 1) if present[i])
    if n == 3:
        return {(0, 1): "PB3", (0,): "N0", (1,): "N1", (): "PB3'"}[on]
    if on == (0, 1, 2):
        return "PBn"
    if not on:
        return "PBn'"
    return "N" + "".join(map(str, on))


def s2_dual_image_order(n: int) -> int:
    """Order of epsilon_bar(S2_Z) inside (Z/(n-2))^{#standard polytabloids}."""
    from .linalg import snf

    m = n - 2
    E = [e_vec(n, i, j) for i, j in standard_pairs(n)]
    gram = [[dot(a, b) for b in E] for a in E]
    k = len(E)
    if m == 1:
        return 1
    # image of Z^k -> (Z/m)^k; its order is m^k / [Z^k : G Z^k + m Z^k]
    cols = [[gram[r][c] for r in range(k)] for c in range(k)] + [[m if r == c else 0 for r in range(k)] for c in range(k)]
    divs = snf(IntMatrix.from_columns(cols, k))
    idx = 1
    for d in divs:
        idx *= d
    return m ** k // idx
