"""Truncated free resolutions of S_n, cochains, and the degree-two cocycle test.

Two complexes of free Z[S_n]-modules are modelled:

* ``P``: cells ``*``; ``e_i``; ``b_i``, ``c_i``, ``d_ij`` (the Coxeter presentation).
* ``R``: cells ``*``; ``x_ij``; ``c_ij``, ``d_ijkl``, ``e_ikj`` (all transpositions).

Neither complex is materialized beyond degree two.  A 2-cochain on ``P`` is a
cocycle iff it kills ``ker d2``; that kernel is computed once per ``n`` and
reduced to a small set of Z[S_n]-module generators, cached on disk.
"""

from __future__ import annotations

import gzip
import json
import os
import threading
from functools import lru_cache
from itertools import permutations
from math import comb
from pathlib import Path
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .linalg import Echelon, IntMatrix, Lattice, SparseVec, unit_kernel
from .modules import (ModuleElement, PresentedModule, module, pairs, u_vec, v_vec, w_vec)
from .symmetric import ZZ, Permutation, Ring, group_elements, group_index

MAX_N = 6


class SizeLimit(ValueError):
    """The requested computation exceeds the configured strand limit."""


class TorsionViolation(ValueError):
    """A 2-torsion cocycle family was given a parameter outside R[2]."""


# ---------------------------------------------------------------------------
# cells


class Cell(NamedTuple):
    complex: str
    dim: int
    kind: str
    indices: Tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "*":
            return "*"
        name = self.kind if self.complex == "P" else self.kind + "~"
        return f"{name}_{''.join(map(str, self.indices))}" if all(i < 10 for i in self.indices) else f"{name}_{','.join(map(str, self.indices))}"

    def label(self) -> str:
        return str(self)


STAR_P = Cell("P", 0, "*", ())
STAR_R = Cell("R", 0, "*", ())


def _sort(cells: Iterable[Cell]) -> List[Cell]:
    return sorted(cells, key=lambda c: (c.kind, c.indices))


@lru_cache(maxsize=None)
def cells(complex_: str, dim: int, n: int) -> Tuple[Cell, ...]:
    """Generating cells in the pinned order (kind, indices)."""
    if complex_ == "P":
        if dim == 0:
            return (STAR_P,)
        if dim == 1:
            return tuple(Cell("P", 1, "e", (i,)) for i in range(1, n))
        if dim == 2:
            out = [Cell("P", 2, "b", (i,)) for i in range(1, n - 1)]
            out += [Cell("P", 2, "c", (i,)) for i in range(1, n)]
            out += [Cell("P", 2, "d", (i, j)) for i in range(1, n) for j in range(i + 2, n)]
            return tuple(_sort(out))
    elif complex_ == "R":
        if dim == 0:
            return (STAR_R,)
        if dim == 1:
            return tuple(Cell("R", 1, "x", p) for p in pairs(n))
        if dim == 2:
            out = [Cell("R", 2, "c", p) for p in pairs(n)]
            for p in pairs(n):
                for q in pairs(n):
                    if not set(p) & set(q):
                        out.append(Cell("R", 2, "d", p + q))
            out += [Cell("R", 2, "e", t) for t in permutations(range(1, n + 1), 3)]
            return tuple(_sort(out))
    raise ValueError(f"no cells of dimension {dim} in complex {complex_}")


def make_cell(complex_: str, kind: str, indices: Sequence[int], n: int) -> Cell:
    dim = {"*": 0, "e": 1, "x": 1}.get(kind, 2)
    if complex_ == "R" and kind == "e":
        dim = 2
    c = Cell(complex_, dim, kind, tuple(indices))
    if c not in cells(complex_, dim, n):
        raise ValueError(f"{c} is not a cell of {complex_} for n={n}")
    return c


# ---------------------------------------------------------------------------
# chains


class GroupChain:
    """A finite Z-combination of terms ``g * cell``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Tuple[Permutation, Cell], int]] = None):
        self.n = n
        self.terms: Dict[Tuple[Permutation, Cell], int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, n: int, cell: Cell, coeffs: Iterable[Tuple[int, Permutation]] = None) -> "GroupChain":
        """``(sum c_k g_k) * cell``; default coefficient is the identity."""
        ch = cls(n)
        if coeffs is None:
            coeffs = [(1, Permutation.identity(n))]
        for c, g in coeffs:
            ch._add((g, cell), c)
        return ch

    def _add(self, key, c: int):
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "GroupChain") -> "GroupChain":
        out = GroupChain(self.n, dict(self.terms))
        for k, v in other.terms.items():
            out._add(k, v)
        return out

    def __neg__(self) -> "GroupChain":
        return GroupChain(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "GroupChain") -> "GroupChain":
        return self + (-other)

    def __rmul__(self, scalar: Union[int, Permutation]) -> "GroupChain":
        if isinstance(scalar, Permutation):
            return GroupChain(self.n, {(scalar * g, c): v for (g, c), v in self.terms.items()})
        return GroupChain(self.n, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupChain) and self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def cells(self) -> List[Cell]:
        return sorted({c for _, c in self.terms}, key=lambda c: (c.kind, c.indices))

    def __repr__(self) -> str:
        parts = [f"{v}*{g}{c}" for (g, c), v in sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0].images))]
        return "GroupChain(" + (" + ".join(parts) or "0") + ")"


def _gr(n: int, *terms: Tuple[int, Sequence[int]]) -> List[Tuple[int, Permutation]]:
    """Group-ring element from (coefficient, word in adjacent transpositions)."""
    out = []
    for c, word in terms:
        g = Permutation.identity(n)
        for k in word:
            g = g * Permutation.s(n, k)
        out.append((c, g))
    return out


def _tr(n: int, i: int, j: int) -> Permutation:
    return Permutation.transposition(n, i, j)


def _x(i: int, j: int) -> Cell:
    return Cell("R", 1, "x", (min(i, j), max(i, j)))


def _cell_boundary(n: int, c: Cell) -> GroupChain:
    one = Permutation.identity(n)
    if c.dim == 0:
        raise ValueError("0-cells have no boundary")
    if c.complex == "P":
        if c.kind == "e":
            (i,) = c.indices
            return GroupChain.of(n, STAR_P, _gr(n, (1, [i]), (-1, [])))
        if c.kind == "c":
            (i,) = c.indices
            return GroupChain.of(n, Cell("P", 1, "e", (i,)), _gr(n, (1, [i]), (1, [])))
        if c.kind == "b":
            (i,) = c.indices
            e_i, e_j = Cell("P", 1, "e", (i,)), Cell("P", 1, "e", (i + 1,))
            return (GroupChain.of(n, e_j, _gr(n, (1, []), (-1, [i]), (1, [i + 1, i])))
                    - GroupChain.of(n, e_i, _gr(n, (1, []), (-1, [i + 1]), (1, [i, i + 1]))))
        if c.kind == "d":
            i, j = c.indices
            e_i, e_j = Cell("P", 1, "e", (i,)), Cell("P", 1, "e", (j,))
            return (GroupChain.of(n, e_i, _gr(n, (1, [j]), (-1, [])))
                    - GroupChain.of(n, e_j, _gr(n, (1, [i]), (-1, []))))
    else:
        if c.kind == "x":
            i, j = c.indices
            return GroupChain.of(n, STAR_R, [(1, _tr(n, i, j)), (-1, one)])
        if c.kind == "c":
            i, j = c.indices
            return GroupChain.of(n, _x(i, j), [(1, _tr(n, i, j)), (1, one)])
        if c.kind == "d":
            i, j, k, l = c.indices
            return (GroupChain.of(n, _x(i, j), [(1, one), (-1, _tr(n, k, l))])
                    - GroupChain.of(n, _x(k, l), [(1, one), (-1, _tr(n, i, j))]))
        if c.kind == "e":
            i, k, j = c.indices
            return (GroupChain.of(n, _x(j, k), [(1, _tr(n, i, j))])
                    + GroupChain.of(n, _x(i, j), [(1, one), (-1, _tr(n, i, k))])
                    - GroupChain.of(n, _x(i, k)))
    raise ValueError(f"unknown cell {c}")


_BOUNDARY_CACHE: Dict[Tuple[int, Cell], GroupChain] = {}


def boundary(x: Union[Cell, GroupChain], n: Optional[int] = None) -> GroupChain:
    """Boundary of a cell (``n`` required) or of a chain, Z[S_n]-linearly."""
    if isinstance(x, Cell):
        if n is None:
            raise ValueError("n is required for a bare cell")
        key = (n, x)
        if key not in _BOUNDARY_CACHE:
            _BOUNDARY_CACHE[key] = _cell_boundary(n, x)
        return _BOUNDARY_CACHE[key]
    out = GroupChain(x.n)
    for (g, c), v in x.terms.items():
        for (h, c2), w in boundary(c, x.n).terms.items():
            out._add((g * h, c2), v * w)
    return out


def psi(x: Union[Cell, GroupChain], n: Optional[int] = None) -> GroupChain:
    """The chain map from P to R."""
    if isinstance(x, GroupChain):
        out = GroupChain(x.n)
        for (g, c), v in x.terms.items():
            for (h, c2), w in psi(c, x.n).terms.items():
                out._add((g * h, c2), v * w)
        return out
    c = x
    if c.complex != "P":
        raise ValueError("psi is defined on cells of P")
    if c.kind == "*":
        return GroupChain.of(n, STAR_R)
    if c.kind == "e":
        (i,) = c.indices
        return GroupChain.of(n, _x(i, i + 1))
    if c.kind == "c":
        (i,) = c.indices
        return GroupChain.of(n, Cell("R", 2, "c", (i, i + 1)))
    if c.kind == "d":
        i, j = c.indices
        # pair order (j, i): with the R boundary sign convention this is the chain-map lift
        return GroupChain.of(n, Cell("R", 2, "d", (j, j + 1, i, i + 1)))
    if c.kind == "b":
        (i,) = c.indices
        return (GroupChain.of(n, Cell("R", 2, "e", (i + 2, i, i + 1)))
                - GroupChain.of(n, Cell("R", 2, "e", (i, i + 2, i + 1)))
                - GroupChain.of(n, Cell("R", 2, "c", (i, i + 1)), _gr(n, (1, [i, i + 1])))
                + GroupChain.of(n, Cell("R", 2, "c", (i + 1, i + 2)), _gr(n, (1, [i + 1, i]))))
    raise ValueError(f"unknown cell {c}")


# ---------------------------------------------------------------------------
# cochains


class Cochain:
    """A Z[S_n]-linear map from the degree-``degree`` cells into a module."""

    def __init__(self, degree: int, target: PresentedModule, values: Dict[Cell, ModuleElement], complex_: str = "P"):
        self.degree = degree
        self.target = target
        self.complex = complex_
        n = target.n
        expected = cells(complex_, degree, n)
        vals = {}
        for c in expected:
            v = values.get(c)
            if v is None:
                raise ValueError(f"missing value on cell {c}")
            if v.module.key() != target.key():
                v = target.element(v.coords)
            vals[c] = v
        extra = set(values) - set(expected)
        if extra:
            raise ValueError(f"cells not of degree {degree}: {sorted(map(str, extra))}")
        self.values = vals

    @property
    def n(self) -> int:
        return self.target.n

    @classmethod
    def from_function(cls, degree: int, target: PresentedModule, fn, complex_: str = "P") -> "Cochain":
        return cls(degree, target, {c: fn(c) for c in cells(complex_, degree, target.n)}, complex_)

    @classmethod
    def zero(cls, degree: int, target: PresentedModule, complex_: str = "P") -> "Cochain":
        return cls.from_function(degree, target, lambda c: target.zero(), complex_)

    def __call__(self, x: Union[Cell, GroupChain]) -> ModuleElement:
        if isinstance(x, Cell):
            return self.values[x]
        M = self.target
        amb = M.ambient
        acc = [0] * M.dim
        for (g, c), coef in x.terms.items():
            vals = self.values[c].coords
            pc = amb.coord_perm(g)
            for k, val in enumerate(vals):
                if val:
                    acc[pc[k]] += coef * val
        return ModuleElement(M, M.canonical(acc))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree and self.complex == other.complex
                and self.target.key() == other.target.key() and self.values == other.values)

    def __add__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.degree, self.target, {c: self.values[c] + other.values[c] for c in self.values}, self.complex)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return Cochain(self.degree, self.target, {c: self.values[c] - other.values[c] for c in self.values}, self.complex)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, self.target, {c: -v for c, v in self.values.items()}, self.complex)

    def __rmul__(self, k: int) -> "Cochain":
        return Cochain(self.degree, self.target, {c: k * v for c, v in self.values.items()}, self.complex)

    def compose_psi(self) -> "Cochain":
        """Pull an R-cochain back to P along psi."""
        if self.complex != "R":
            raise ValueError("compose_psi needs a cochain on R")
        return Cochain.from_function(self.degree, self.target, lambda c: self(psi(c, self.n)), "P")

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "module": {"id": self.target.id, "n": self.n, "ring": self.target.ring.to_json()},
            "values": {str(c): v.to_json()["coords"] for c, v in self.values.items()},
        }

    def __repr__(self) -> str:
        body = ", ".join(f"{c}: {v!r}" for c, v in self.values.items())
        return f"Cochain(deg={self.degree}, {self.target.id}; {body})"


def zero_cochain(v: ModuleElement) -> Cochain:
    """An element viewed as a 0-cochain."""
    return Cochain(0, v.module, {STAR_P: v})


def coboundary(f: Cochain) -> Cochain:
    """``(delta f)(c) = f(boundary c)``."""
    if f.degree >= 2:
        raise ValueError("degree-3 cells are not modelled")
    n = f.n
    return Cochain.from_function(f.degree + 1, f.target, lambda c: f(boundary(c, n)), f.complex)


# ---------------------------------------------------------------------------
# named cocycle families

FAMILIES = ("kappa0", "kappa1", "kappa2", "hat_kappa2", "alpha0", "alpha1", "alpha2", "hat_alpha2",
            "beta0", "beta1", "beta2", "hat_beta2", "phi", "zeta")

_FAMILY_MODULE = {"0": "S0", "1": "M1", "2": "M2"}


def family_module(family: str, n: int, ring: Ring = ZZ) -> PresentedModule:
    if family in ("phi", "zeta"):
        return module("M2", n, ring)
    return module(_FAMILY_MODULE[family[-1]], n, ring)


def named_cocycle(family: str, r: int = 1, n: int = 4, target: Optional[PresentedModule] = None,
                  strict: bool = True) -> Cochain:
    """The explicit cochain families on P (``phi`` lives on R)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family}")
    M = target if target is not None else family_module(family, n)
    n = M.n
    ring = M.ring
    if strict and (family.startswith("kappa") or family.startswith("hat_kappa") or family.startswith("beta")
                   or family.startswith("hat_beta")):
        if not ring.in_two_torsion(r):
            raise TorsionViolation(f"{family} needs r in R[2]; got r={r} over {ring}")
    blocks = M.ambient.blocks

    def el(vec):
        return M.element([r * x for x in vec])

    def total():
        if blocks == ("S0",):
            return [1]
        if blocks == ("M1",):
            return [1] * n
        return u_vec(n)

    zero = M.zero()
    if family == "phi":
        return _phi(M)
    if family == "zeta":
        if n % 2:
            raise ValueError("zeta is defined only for even n")
        vals = {}
        for c in cells("P", 1, n):
            (i,) = c.indices
            vec = [comb(n - 1, 2) * a - (n - 1) * b + d for a, b, d in zip(v_vec(n, i, i + 1), w_vec(n, i), u_vec(n))]
            vals[c] = M.element([r * x for x in vec])
        return Cochain(1, M, vals)
    if family.startswith("kappa") or family == "hat_kappa2":
        vals = {}
        for c in cells("P", 1, n):
            (i,) = c.indices
            vals[c] = el(v_vec(n, i, i + 1)) if family == "hat_kappa2" else el(total())
        return Cochain(1, M, vals)

    def val2(c: Cell) -> ModuleElement:
        if family.startswith("alpha") or family == "hat_alpha2":
            if c.kind != "c":
                return zero
            (i,) = c.indices
            return el(v_vec(n, i, i + 1)) if family == "hat_alpha2" else el(total())
        if c.kind != "d":
            return zero
        if family == "hat_beta2":
            i, j = c.indices
            vec = [0] * len(u_vec(n))
            for a, b in ((i, i + 1), (j, j + 1), (i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)):
                vec = [x + y for x, y in zip(vec, v_vec(n, a, b))]
            return el(vec)
        return el(total())

    return Cochain.from_function(2, M, val2)


def _phi(M: PresentedModule) -> Cochain:
    n = M.n

    def val(c: Cell) -> ModuleElement:
        if c.kind == "c":
            return M.element(v_vec(n, *c.indices))
        if c.kind == "d":
            i, j, k, l = c.indices
            if i < k < j < l:
                terms = [((i, k), 1), ((i, l), -1), ((k, j), -1), ((j, l), 1)]
            elif k < i < l < j:
                terms = [((i, k), -1), ((k, j), 1), ((i, l), 1), ((l, j), -1)]
            else:
                return M.zero()
        else:
            i, k, j = c.indices
            if i < k < j or j < i < k or k < j < i:
                terms = [((i, j), 1), ((k, j), -1)]
            else:
                return M.zero()
        vec = [0] * M.dim
        for (a, b), s in terms:
            vec = [x + s * y for x, y in zip(vec, v_vec(n, a, b))]
        return M.element(vec)

    return Cochain.from_function(2, M, val, "R")


# ---------------------------------------------------------------------------
# Z-materialization and the kernel of d2


def _check_n(n: int):
    if n < 3:
        raise ValueError("n must be at least 3")
    if n > MAX_N:
        raise SizeLimit(f"n={n} exceeds the configured maximum {MAX_N}")


@lru_cache(maxsize=None)
def _mult_table(n: int) -> List[List[int]]:
    G = group_elements(n)
    idx = group_index(n)
    return [[idx[g * h] for h in G] for g in G]


def z_index(n: int, dim: int, g: Permutation, c: Cell) -> int:
    """Position of the basis element ``g * c`` of the free Z-module P_dim."""
    cl = cells("P", dim, n)
    return cl.index(c) * len(group_elements(n)) + group_index(n)[g]


def chain_to_vector(ch: GroupChain, dim: int) -> SparseVec:
    n = ch.n
    N = len(group_elements(n))
    cpos = {c: k for k, c in enumerate(cells("P", dim, n))}
    gidx = group_index(n)
    return {cpos[c] * N + gidx[g]: v for (g, c), v in ch.terms.items()}


def vector_to_chain(n: int, dim: int, vec: SparseVec) -> GroupChain:
    G = group_elements(n)
    N = len(G)
    cl = cells("P", dim, n)
    return GroupChain(n, {(G[k % N], cl[k // N]): v for k, v in vec.items()})


@lru_cache(maxsize=None)
def d2_matrix(n: int) -> IntMatrix:
    """Matrix of d2 : P_2 -> P_1 on the Z-bases."""
    G = group_elements(n)
    N = len(G)
    mult = _mult_table(n)
    c1 = {c: k for k, c in enumerate(cells("P", 1, n))}
    gidx = group_index(n)
    cols = []
    for c in cells("P", 2, n):
        bd = [(c1[c2] * N, gidx[h], v) for (h, c2), v in boundary(c, n).terms.items()]
        for gi in range(N):
            row = mult[gi]
            cols.append({base + row[hi]: v for base, hi, v in bd})
    return IntMatrix.from_columns(cols, len(c1) * N)


def d1_matrix(n: int) -> IntMatrix:
    G = group_elements(n)
    N = len(G)
    gidx = group_index(n)
    cols = []
    for c in cells("P", 1, n):
        for g in G:
            cols.append({gidx[g * h]: v for (h, _), v in boundary(c, n).terms.items()})
    return IntMatrix.from_columns(cols, N)


_lock = threading.Lock()
_cache_dir: Optional[Path] = None


def set_cache_dir(path: Optional[Union[str, Path]]) -> None:
    global _cache_dir
    _cache_dir = Path(path) if path is not None else None
    _kernel_generators.cache_clear()


def cache_dir() -> Path:
    if _cache_dir is not None:
        return _cache_dir
    return Path(os.environ.get("SPECHT_LAB_CACHE", ".specht-cache"))


def _cache_file(name: str) -> Path:
    return cache_dir() / name


def _load(name: str) -> Optional[dict]:
    p = _cache_file(name)
    if not p.exists():
        return None
    try:
        with gzip.open(p, "rt") as fh:
            return json.load(fh)
    except (OSError, ValueError):
        return None


def _store(name: str, doc: dict) -> None:
    p = _cache_file(name)
    try:
        p.parent.mkdir(parents=True, exist_ok=True)
        tmp = p.with_suffix(p.suffix + f".{os.getpid()}.tmp")
        with gzip.open(tmp, "wt") as fh:
            json.dump(doc, fh)
        os.replace(tmp, p)
    except OSError:
        pass


@lru_cache(maxsize=None)
def _unit_kernel_d2(n: int):
    uk = unit_kernel(d2_matrix(n))
    if uk is None:
        raise RuntimeError("d2 admits no unit-pivot reduction")
    return uk


def kernel_d2(n: int) -> Lattice:
    """Saturated integer kernel of d2 on the Z-basis of P_2."""
    _check_n(n)
    uk = _unit_kernel_d2(n)
    return Lattice(d2_matrix(n).ncols, uk.vectors(), independent=True)


def _search_generators(n: int) -> List[SparseVec]:
    """Chains whose Z[S_n]-translates span ker d2 over Z.

    The kernel projects isomorphically onto its free coordinates, so the
    translates span it iff their projections span Z^free.
    """
    uk = _unit_kernel_d2(n)
    N = len(group_elements(n))
    mult = _mult_table(n)
    fpos = {c: k for k, c in enumerate(uk.free_cols)}
    span = Echelon()
    gens: List[SparseVec] = []
    nfree = len(uk.free_cols)
    for j in uk.free_cols:
        if span.rank == nfree and all(r[min(r)] == 1 for r in span.rows.values()):
            break
        if span.contains({fpos[j]: 1}):
            continue
        k = uk.vector(j)
        gens.append(k)
        parts = [(col // N * N, col % N, v) for col, v in k.items()]
        for gi in range(N):
            row = mult[gi]
            proj = {}
            for base, hi, v in parts:
                col = base + row[hi]
                f = fpos.get(col)
                if f is not None:
                    proj[f] = v
            span.insert(proj)
    if span.rank != nfree or any(r[min(r)] != 1 for r in span.rows.values()):
        raise RuntimeError("translates of kernel vectors failed to span ker d2")
    return gens


@lru_cache(maxsize=None)
def _kernel_generators(n: int) -> Tuple[GroupChain, ...]:
    name = f"kernel_d2_generators_n{n}.json.gz"
    doc = _load(name)
    if doc is not None:
        M = IntMatrix.from_json(doc["generators"])
        vecs = M.columns()
    else:
        with _lock:
            vecs = _search_generators(n)
            ncols = d2_matrix(n).ncols
            _store(name, {"n": n, "generators": IntMatrix.from_columns(vecs, ncols).to_json()})
    return tuple(vector_to_chain(n, 2, v) for v in vecs)


def kernel_d2_generators(n: int) -> Tuple[GroupChain, ...]:
    """Z[S_n]-module generators of ker d2 (exact: their translates span it over Z)."""
    _check_n(n)
    return _kernel_generators(n)


def is_cocycle(f: Cochain) -> bool:
    """Degrees 0 and 1: ``delta f == 0``.  Degree 2: ``f`` kills ker d2."""
    if f.complex != "P":
        raise ValueError("cocycle test is implemented on P")
    if f.degree in (0, 1):
        return all(v.is_zero() for v in coboundary(f).values.values())
    if f.degree == 2:
        return all(f(k).is_zero() for k in kernel_d2_generators(f.n))
    raise ValueError("degree must be 0, 1 or 2")
