"""Low-degree cohomology of S_n, pushforwards, and splitting of braid-group quotients.

Every module is a quotient ``L / (L ∩ Rel)`` of a lattice ``L``.  Cochains are
lifted to integer vectors in L-coordinates, one block per generating cell, so
that cocycles, coboundaries and cohomology are all computed over Z:

* ``Z~`` = lifted cochains whose coboundary (or, in degree 2, whose values on
  generators of ker d2) lands in the relations;
* ``B~`` = image of the previous coboundary plus the relations themselves;
* ``H = Z~ / B~`` read off from a Smith normal form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .braids import BraidWord, doubled_windings, rho
from .linalg import Echelon, IntMatrix, Lattice, SparseVec, kernel_basis, smith_form
from .modules import (ModuleElement, PresentedModule, UnsupportedAtN3, f_sum_matrix,
                      module, mu_matrix)
from .resolution import (STAR_P, Cell, Cochain, GroupChain, _check_n, boundary, cells,
                         kernel_d2_generators, named_cocycle, zero_cochain)
from .symmetric import Permutation, Ring, group_elements

__all__ = [
    "NotACocycle", "DomainMismatch", "MAP_IDS", "CohomologyGroup", "cohomology_group", "is_coboundary",
    "ModuleMap", "module_map", "pushforward", "QuotientSpec", "ExtensionElement", "ExtensionGroup",
    "section_word", "extension_multiply", "braid_image", "splitting_check", "verify_splitting_witness",
]


class NotACocycle(ValueError):
    """A coboundary question was asked about a cochain that is not a cocycle."""


class DomainMismatch(ValueError):
    """A module map was applied to a cochain with a different target module."""


# ---------------------------------------------------------------------------
# lifted cochain complex


def _matmul(A: List[List[int]], x: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


class _Complex:
    """Lifted cochain groups of one module in degrees 0, 1, 2."""

    def __init__(self, M: PresentedModule):
        self.M = M
        self.n = M.n
        self.r = M.rank
        self.acts = M.action_matrices()
        self.rel = M.relation_lattice_coords()
        self.cells = {k: cells("P", k, self.n) for k in (0, 1, 2)}

    def size(self, k: int) -> int:
        return self.r * len(self.cells[k])

    def block(self, k: int, c: Cell) -> int:
        return self.cells[k].index(c) * self.r

    def _chain_rows(self, ch: GroupChain, dim: int) -> List[SparseVec]:
        """Rows of the map (lifted k-cochain) -> value on ``ch``, in L-coordinates."""
        r = self.r
        rows: List[SparseVec] = [dict() for _ in range(r)]
        for (g, c), coef in ch.terms.items():
            A = self.acts[g]
            base = self.block(dim, c)
            for i in range(r):
                Ai = A[i]
                row = rows[i]
                for j in range(r):
                    if Ai[j]:
                        col = base + j
                        v = row.get(col, 0) + coef * Ai[j]
                        if v:
                            row[col] = v
                        else:
                            row.pop(col, None)
        return rows

    def coboundary_matrix(self, k: int) -> IntMatrix:
        """delta : C^k -> C^{k+1} in lifted coordinates."""
        rows: List[SparseVec] = []
        for c in self.cells[k + 1]:
            rows.extend(self._chain_rows(boundary(c, self.n), k))
        return IntMatrix.from_rows(rows, self.size(k))

    def cocycle_test_matrix(self, k: int) -> Tuple[IntMatrix, int]:
        """Rows whose values must lie in the relations for a k-cochain to be a cocycle."""
        if k < 2:
            M = self.coboundary_matrix(k)
            return M, len(self.cells[k + 1])
        rows: List[SparseVec] = []
        gens = kernel_d2_generators(self.n)
        for ch in gens:
            rows.extend(self._chain_rows(ch, 2))
        return IntMatrix.from_rows(rows, self.size(2)), len(gens)

    def relation_vectors(self, k: int, blocks: Optional[int] = None) -> List[SparseVec]:
        nb = len(self.cells[k]) if blocks is None else blocks
        out = []
        for b in range(nb):
            for rv in self.rel:
                v = {b * self.r + j: x for j, x in enumerate(rv) if x}
                if v:
                    out.append(v)
        return out

    def lift(self, f: Cochain) -> List[int]:
        if f.target != self.M:
            raise DomainMismatch(f"cochain targets {f.target.id}, expected {self.M.id}")
        out: List[int] = []
        for c in self.cells[f.degree]:
            out.extend(self.M.lattice_coords(f.values[c].coords))
        return out

    def unlift(self, k: int, x: Sequence[int]) -> Cochain:
        r = self.r
        vals = {c: self.M.from_lattice_coords(x[i * r:(i + 1) * r]) for i, c in enumerate(self.cells[k])}
        return Cochain(k, self.M, vals)

    @lru_cache(maxsize=None)
    def cocycles(self, k: int) -> Lattice:
        E, blocks = self.cocycle_test_matrix(k)
        N = self.size(k)
        relv = self.relation_vectors(0, blocks) if self.rel else []
        if not relv:
            return kernel_basis(E)
        # x with E x in Rel: kernel of [E | -Rel], projected to x
        cols = E.columns() + [{i: -v for i, v in rv.items()} for rv in relv]
        K = kernel_basis(IntMatrix.from_columns(cols, E.nrows))
        proj = [{i: v for i, v in vec.items() if i < N} for vec in K.vectors()]
        return Lattice(N, [p for p in proj if p])

    @lru_cache(maxsize=None)
    def boundaries(self, k: int) -> Lattice:
        gens = self.relation_vectors(k)
        if k > 0:
            gens += self.coboundary_matrix(k - 1).columns()
        return Lattice(self.size(k), [g for g in gens if g])


# ---------------------------------------------------------------------------
# cohomology groups


@dataclass
class CohomologyGroup:
    degree: int
    module: PresentedModule
    free_rank: int
    torsion: List[int]
    generators: List[Cochain]
    # internal: change of basis to read classes
    _orders: List[int] = field(default_factory=list, repr=False)
    _U: List[List[int]] = field(default_factory=list, repr=False)
    _keep: List[int] = field(default_factory=list, repr=False)
    _cx: Optional[_Complex] = field(default=None, repr=False)

    @property
    def order(self) -> Union[int, str]:
        if self.free_rank:
            return "infinite"
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def invariants(self) -> Tuple[int, List[int]]:
        return self.free_rank, list(self.torsion)

    def class_of(self, f: Cochain) -> List[int]:
        """Coordinates of [f] against ``generators`` (torsion entries reduced)."""
        cx = self._cx
        x = cx.lift(f)
        Z = cx.cocycles(self.degree)
        c = Z.coordinates(x)
        if c is None:
            raise NotACocycle(f"{f!r} is not a cocycle")
        out = []
        for i, d in zip(self._keep, self._orders):
            val = sum(self._U[i][j] * c[j] for j in range(len(c)))
            out.append(val % d if d else val)
        return out

    def generated_by(self, fs: Sequence[Cochain]) -> bool:
        """Whether the classes of ``fs`` generate the whole group."""
        k = len(self._orders)
        vecs = [self.class_of(f) for f in fs]
        vecs += [[d if j == i else 0 for j in range(k)] for i, d in enumerate(self._orders) if d]
        return Lattice(k, vecs) == Lattice.full(k)

    def to_json(self) -> dict:
        return {
            "H": self.degree,
            "module": {"id": self.module.id, "n": self.module.n, "ring": self.module.ring.to_json()},
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "generators": [g.to_json() for g in self.generators],
        }


_complexes: Dict[tuple, _Complex] = {}


def _complex(M: PresentedModule) -> _Complex:
    key = M.key()
    if key not in _complexes:
        _complexes[key] = _Complex(M)
    return _complexes[key]


def cohomology_group(degree: int, M: PresentedModule, n: Optional[int] = None) -> CohomologyGroup:
    """H^degree(S_n; M) for degree 0, 1 or 2."""
    if degree not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    if n is not None and n != M.n:
        raise ValueError(f"module is over S_{M.n}, not S_{n}")
    if degree == 2:
        _check_n(M.n)
    cx = _complex(M)
    Z = cx.cocycles(degree)
    B = cx.boundaries(degree)
    z = Z.rank
    Zb = Z.vectors()
    if z == 0:
        return CohomologyGroup(degree, M, 0, [], [], [], [], [], cx)
    C = Z.coordinate_matrix(B.vectors())
    if any(row is None for row in C):
        raise RuntimeError("boundaries escape the cocycle lattice")
    # U C^T V = D; new cocycle basis Zb'_i = sum_j Uinv[j][i] Zb_j, boundaries = D_ii Zb'_i
    if C:
        CT = [[C[i][j] for i in range(len(C))] for j in range(z)]
        U, D, _V, Uinv = smith_form(IntMatrix.from_dense(CT, len(C)))
        diag = [D[i][i] if i < len(C) else 0 for i in range(z)]
    else:
        U = Uinv = [[int(i == j) for j in range(z)] for i in range(z)]
        diag = [0] * z
    keep, orders, gens = [], [], []
    for i, d in enumerate(diag):
        if d == 1:
            continue
        keep.append(i)
        orders.append(d)
        vec = [0] * cx.size(degree)
        for j in range(z):
            a = Uinv[j][i]
            if a:
                for col, v in Zb[j].items():
                    vec[col] += a * v
        gens.append(cx.unlift(degree, vec) if degree else zero_cochain(M.from_lattice_coords(vec)))
    # order: free summands after torsion, torsion as a divisibility chain
    idx = sorted(range(len(orders)), key=lambda t: (orders[t] == 0, orders[t]))
    keep = [keep[t] for t in idx]
    orders = [orders[t] for t in idx]
    gens = [gens[t] for t in idx]
    torsion = [d for d in orders if d]
    return CohomologyGroup(degree, M, orders.count(0), torsion, gens, orders, U, keep, cx)


def _lift0(cx: _Complex, f: Cochain) -> List[int]:
    return cx.M.lattice_coords(f.values[STAR_P].coords)


def is_coboundary(f: Cochain, M: Optional[PresentedModule] = None):
    """``(witness, certificate)``: a 1-cochain ``g`` with ``delta g == f``, or None with
    the class of ``f`` in H^2 as an obstruction certificate."""
    if f.degree != 2:
        raise ValueError("is_coboundary expects a 2-cochain")
    M = M or f.target
    if f.target != M:
        raise DomainMismatch("cochain target differs from the module")
    cx = _complex(M)
    x = cx.lift(f)
    if not cx.cocycles(2).contains(x):
        raise NotACocycle("cochain does not vanish on ker d2")
    ech = Echelon(track=True)
    D1 = cx.coboundary_matrix(1).columns()
    gens = D1 + cx.relation_vectors(2)
    for i, g in enumerate(gens):
        if g:
            ech.insert(g, {i: 1})
    rem, tag = ech.reduce({i: v for i, v in enumerate(x) if v}, {})
    if not rem:
        coeffs = [-tag.get(i, 0) for i in range(len(D1))]
        return cx.unlift(1, coeffs), None
    H = cohomology_group(2, M)
    return None, {"H2_torsion": H.torsion, "H2_free_rank": H.free_rank, "class": H.class_of(f)}


# ---------------------------------------------------------------------------
# module maps and pushforward


@dataclass(frozen=True)
class ModuleMap:
    name: str
    source: PresentedModule
    target: PresentedModule
    matrix: IntMatrix  # ambient(source) -> ambient(target)

    def __call__(self, v: ModuleElement) -> ModuleElement:
        if v.module != self.source:
            raise DomainMismatch(f"{self.name} expects {self.source.id}")
        return self.target.element(self.matrix.apply(list(v.coords)))

    def then(self, other: "ModuleMap") -> "ModuleMap":
        if other.source != self.target:
            raise DomainMismatch("maps do not compose")
        return ModuleMap(f"{other.name}*{self.name}", self.source, other.target, other.matrix @ self.matrix)


def module_map(name: str, source: PresentedModule, target: Optional[PresentedModule] = None) -> ModuleMap:
    """``f0``, ``f1``, ``f2``, ``f01``, ``f02``, ``f12``, ``mu``, ``reduce:m``, ``inclusion``, ``identity``."""
    n, ring = source.n, source.ring
    if name.startswith("f"):
        idx = tuple(int(ch) for ch in name[1:])
        if source.ambient.blocks != ("M2",):
            raise DomainMismatch("f-maps are defined on M2")
        if target is None:
            target = module("S0" if idx == (0,) else "S1" if idx == (1,) else "S2" if idx == (2,)
                            else "IM_F" + name[1:], n, ring)
        return ModuleMap(name, source, target, f_sum_matrix(idx, n))
    if name == "mu":
        if source.ambient.blocks != ("M2",):
            raise DomainMismatch("mu is defined on M2")
        return ModuleMap(name, source, target or module("M1", n, ring), mu_matrix(n))
    if name.startswith("reduce:"):
        m = int(name.split(":")[1])
        if not ring.is_integral:
            raise DomainMismatch("reduction starts from a module over Z")
        tgt = target or module(source.id, n, Ring(m))
        return ModuleMap(name, source, tgt, IntMatrix.identity(source.dim))
    if name in ("inclusion", "identity"):
        tgt = target or source
        if tgt.ambient != source.ambient:
            raise DomainMismatch("inclusion needs a common ambient module")
        return ModuleMap(name, source, tgt, IntMatrix.identity(source.dim))
    raise ValueError(f"unknown module map {name}")


def pushforward(h: ModuleMap, f: Cochain) -> Cochain:
    """Value-wise composition ``h ∘ f``."""
    if f.target != h.source:
        raise DomainMismatch(f"{h.name} has domain {h.source.id}; cochain targets {f.target.id}")
    return Cochain(f.degree, h.target, {c: h(v) for c, v in f.values.items()}, f.complex)


# ---------------------------------------------------------------------------
# extensions of S_n by quotients of M2_Z

MAP_IDS = ("pi_m", "f0", "f1", "f2", "f01", "f02", "f12")


@dataclass(frozen=True)
class QuotientSpec:
    n: int
    ring: Ring
    map_id: str

    def __post_init__(self):
        if self.map_id not in MAP_IDS:
            raise ValueError(f"unknown map id {self.map_id}")
        if self.map_id == "pi_m" and self.ring.is_integral:
            raise ValueError("pi_m needs the ring Z/m")
        if self.n < 4 and self.map_id != "pi_m":
            raise UnsupportedAtN3("f-map quotients need n >= 4")

    @property
    def module(self) -> PresentedModule:
        if self.map_id == "pi_m":
            return module("M2", self.n, self.ring)
        return module("IM_F" + self.map_id[1:], self.n, self.ring)

    def quotient_matrix(self) -> IntMatrix:
        """M2_Z ambient coordinates -> quotient module ambient coordinates."""
        if self.map_id == "pi_m":
            return IntMatrix.identity(len(module("M2", self.n).zero().coords))
        return f_sum_matrix(tuple(int(ch) for ch in self.map_id[1:]), self.n)

    def quotient_map(self) -> ModuleMap:
        return ModuleMap(self.map_id, module("M2", self.n), self.module, self.quotient_matrix())

    def label(self) -> str:
        m = self.ring.modulus
        ident = f"pi:{m}" if self.map_id == "pi_m" else self.map_id
        return f"n={self.n} {ident} over {self.ring}"


@dataclass(frozen=True)
class ExtensionElement:
    perm: Permutation
    wind: ModuleElement

    def __str__(self) -> str:
        return f"({self.perm}, {list(self.wind.coords)})"


@lru_cache(maxsize=None)
def _section_words(n: int) -> Dict[Permutation, Tuple[int, ...]]:
    # BFS over positive words in increasing length, letters in increasing order: first hit is shortlex-least
    out = {Permutation.identity(n): ()}
    queue = deque([()])
    while queue:
        w = queue.popleft()
        for k in range(1, n):
            w2 = w + (k,)
            p = rho(BraidWord(n, w2))
            if p not in out:
                out[p] = w2
                queue.append(w2)
    return out


def section_word(p: Permutation) -> BraidWord:
    """Canonical positive braid word lifting ``p``."""
    return BraidWord(p.n, _section_words(p.n)[p])


class ExtensionGroup:
    """``B_n / ker(q)`` as pairs (permutation, element of the quotient module)."""

    def __init__(self, q: QuotientSpec):
        self.q = q
        self.n = q.n
        self.M = q.module
        self._map = q.quotient_matrix()
        self._cocycle: Dict[Tuple[Permutation, Permutation], ModuleElement] = {}

    def _pure_image(self, w: BraidWord) -> ModuleElement:
        dbl = doubled_windings(w)
        return self.M.element(self._map.apply([x // 2 for x in dbl]))

    def identity(self) -> ExtensionElement:
        return ExtensionElement(Permutation.identity(self.n), self.M.zero())

    def element(self, perm: Permutation, wind: Union[ModuleElement, Sequence[int]]) -> ExtensionElement:
        if not isinstance(wind, ModuleElement):
            wind = self.M.element(wind)
        return ExtensionElement(perm, wind)

    def correction(self, p: Permutation, q: Permutation) -> ModuleElement:
        """Image of the pure braid ``s(p) s(q) s(pq)^-1``."""
        key = (p, q)
        if key not in self._cocycle:
            w = section_word(p) * section_word(q) * section_word(p * q).inverse()
            self._cocycle[key] = self._pure_image(w)
        return self._cocycle[key]

    def act(self, p: Permutation, v: ModuleElement) -> ModuleElement:
        perm = self.M.ambient.coord_perm(p)
        out = [0] * self.M.dim
        for k, x in enumerate(v.coords):
            out[perm[k]] += x
        return ModuleElement(self.M, self.M.canonical(out))

    def multiply(self, x: ExtensionElement, y: ExtensionElement) -> ExtensionElement:
        w = x.wind + self.act(x.perm, y.wind) + self.correction(x.perm, y.perm)
        return ExtensionElement(x.perm * y.perm, w)

    def inverse(self, x: ExtensionElement) -> ExtensionElement:
        pinv = x.perm.inverse()
        # (p, a)(p^-1, b) = (id, a + p b + c(p, p^-1)) = identity
        rhs = -(x.wind + self.correction(x.perm, pinv))
        return ExtensionElement(pinv, self.act(pinv, rhs))

    def braid_image(self, w: BraidWord) -> ExtensionElement:
        p = rho(w)
        return ExtensionElement(p, self._pure_image(w * section_word(p).inverse()))

    def elements(self):
        """Every element; only sensible for finite quotient modules."""
        from itertools import product
        if self.M.ring.is_integral:
            raise ValueError("the quotient module is infinite")
        m = self.M.ring.modulus
        seen = set()
        vals = []
        for coords in product(range(m), repeat=self.M.rank):
            v = self.M.from_lattice_coords(coords)
            if v.coords not in seen:
                seen.add(v.coords)
                vals.append(v)
        for p in group_elements(self.n):
            for v in vals:
                yield ExtensionElement(p, v)


def extension_multiply(q: QuotientSpec, x: ExtensionElement, y: ExtensionElement) -> ExtensionElement:
    return _group(q).multiply(x, y)


def braid_image(q: QuotientSpec, w: BraidWord) -> ExtensionElement:
    return _group(q).braid_image(w)


@lru_cache(maxsize=None)
def _group(q: QuotientSpec) -> ExtensionGroup:
    return ExtensionGroup(q)


def _section(q: QuotientSpec, g: Cochain) -> List[ExtensionElement]:
    n = q.n
    return [ExtensionElement(Permutation.s(n, i), -g.values[cells("P", 1, n)[i - 1]]) for i in range(1, n)]


def verify_splitting_witness(q: QuotientSpec, g: Cochain) -> bool:
    """Check the Coxeter relations on ``s_i -> (s_i, -g(e_i))``."""
    G = _group(q)
    if g.target != G.M or g.degree != 1:
        raise DomainMismatch("witness must be a 1-cochain in the quotient module")
    x = _section(q, g)
    one = G.identity()
    mul = G.multiply
    n = q.n
    for i in range(n - 1):
        if mul(x[i], x[i]) != one:
            return False
    for i in range(n - 2):
        a, b = x[i], x[i + 1]
        if mul(mul(a, b), a) != mul(mul(b, a), b):
            return False
    for i in range(n - 1):
        for j in range(i + 2, n - 1):
            if mul(x[i], x[j]) != mul(x[j], x[i]):
                return False
    return True


def structure_cocycle(q: QuotientSpec) -> Cochain:
    """Pushforward of ``hat_alpha2(1)`` to the quotient module."""
    return pushforward(q.quotient_map(), named_cocycle("hat_alpha2", 1, q.n))


def splitting_check(q: QuotientSpec) -> dict:
    """Decide whether ``1 -> Q -> B_n/ker -> S_n -> 1`` splits."""
    _check_n(q.n)
    f = structure_cocycle(q)
    g, cert = is_coboundary(f, q.module)
    if g is None:
        return {"splits": False, "witness": None, "certificate": cert}
    return {"splits": True, "witness": g, "certificate": None, "verified": verify_splitting_witness(q, g)}
