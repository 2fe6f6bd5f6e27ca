"""Exact integer linear algebra.

Hermite and Smith normal forms, saturated integer kernels, lattice
membership and index, and linear solving over Z and Z/m.  Everything runs on
Python integers; there is no floating point anywhere.

Sparse vectors are plain ``dict[int, int]`` objects mapping a coordinate to a
nonzero value.  Dense vectors are lists.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

SparseVec = Dict[int, int]

INFINITE = "infinite"


class ContainmentError(ValueError):
    """Raised when a lattice is not contained in another one."""


# ---------------------------------------------------------------------------
# small helpers


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _axpy(dst: SparseVec, a: int, src: SparseVec) -> None:
    """In place ``dst += a * src`` dropping zeros."""
    if not a:
        return
    for k, v in src.items():
        nv = dst.get(k, 0) + a * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _lincomb(a: int, x: SparseVec, b: int, y: SparseVec) -> SparseVec:
    out: SparseVec = {}
    if a:
        for k, v in x.items():
            out[k] = a * v
    _axpy(out, b, y)
    return {k: v for k, v in out.items() if v}


def to_sparse(vec: Sequence[int]) -> SparseVec:
    return {i: int(v) for i, v in enumerate(vec) if v}


def to_dense(vec: SparseVec, dim: int) -> List[int]:
    out = [0] * dim
    for k, v in vec.items():
        out[k] = v
    return out


# ---------------------------------------------------------------------------
# IntMatrix


class IntMatrix:
    """Immutable sparse integer matrix stored by rows."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, entries: Optional[Dict[Tuple[int, int], int]] = None):
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        rows: List[SparseVec] = [dict() for _ in range(self.nrows)]
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            v = int(v)
            if v:
                rows[r][c] = v
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, rows: List[SparseVec], ncols: int) -> "IntMatrix":
        m = cls.__new__(cls)
        m.nrows = len(rows)
        m.ncols = ncols
        m._rows = tuple({k: v for k, v in r.items() if v} for r in rows)
        return m

    @classmethod
    def from_rows(cls, rows: Iterable[Union[SparseVec, Sequence[int]]], ncols: int) -> "IntMatrix":
        out = []
        for r in rows:
            r = dict(r) if isinstance(r, dict) else to_sparse(r)
            if any(not 0 <= k < ncols for k in r):
                raise IndexError("row entry outside declared column count")
            out.append(r)
        return cls._from_rows(out, ncols)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls.from_rows(data, ncols)

    @classmethod
    def from_columns(cls, columns: Iterable[Union[SparseVec, Sequence[int]]], nrows: int) -> "IntMatrix":
        cols = [dict(c) if isinstance(c, dict) else to_sparse(c) for c in columns]
        return cls.from_rows(cols, nrows).transpose()

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls._from_rows([{i: 1} for i in range(n)], n)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> SparseVec:
        return dict(self._rows[i])

    def rows(self) -> List[SparseVec]:
        return [dict(r) for r in self._rows]

    def columns(self) -> List[SparseVec]:
        return self.transpose().rows()

    def __getitem__(self, rc: Tuple[int, int]) -> int:
        r, c = rc
        return self._rows[r].get(c, 0)

    def entries(self) -> Iterator[Tuple[int, int, int]]:
        for r, row in enumerate(self._rows):
            for c in sorted(row):
                yield r, c, row[c]

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def transpose(self) -> "IntMatrix":
        cols: List[SparseVec] = [dict() for _ in range(self.ncols)]
        for r, row in enumerate(self._rows):
            for c, v in row.items():
                cols[c][r] = v
        return IntMatrix._from_rows(cols, self.nrows)

    def to_dense(self) -> List[List[int]]:
        return [to_dense(r, self.ncols) for r in self._rows]

    def apply(self, vec: Union[SparseVec, Sequence[int]]) -> List[int]:
        """Dense product ``A @ vec``."""
        if not isinstance(vec, dict):
            if len(vec) != self.ncols:
                raise ValueError("dimension mismatch")
            vec = to_sparse(vec)
        return [sum(v * vec.get(c, 0) for c, v in row.items()) for row in self._rows]

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            out = []
            for row in self._rows:
                acc: SparseVec = {}
                for k, v in row.items():
                    _axpy(acc, v, other._rows[k])
                out.append(acc)
            return IntMatrix._from_rows(out, other.ncols)
        return self.apply(other)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        out = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            r.update({k + self.ncols: v for k, v in b.items()})
            out.append(r)
        return IntMatrix._from_rows(out, self.ncols + other.ncols)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return IntMatrix._from_rows(list(self._rows) + list(other._rows), self.ncols)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self) -> str:
        if self.ncols <= 12 and self.nrows <= 12:
            return f"IntMatrix({self.to_dense()})"
        return f"IntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[r, c, str(v)] for r, c, v in self.entries()],
        }

    @classmethod
    def from_json(cls, doc: Union[str, dict]) -> "IntMatrix":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(doc["rows"], doc["cols"], {(r, c): int(v) for r, c, v in doc["entries"]})


# ---------------------------------------------------------------------------
# incremental row echelon form over Z


class Echelon:
    """Row echelon basis of a lattice, built by unimodular row operations.

    Rows are keyed by their pivot (leading) column.  When ``track`` is set,
    every row carries a tag vector recording how it was combined from the
    inserted vectors; inserted vectors that reduce to zero leave their tag
    behind as an integer relation.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: Dict[int, SparseVec] = {}
        self.tags: Dict[int, SparseVec] = {}
        self.relations: List[SparseVec] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec, tag: Optional[SparseVec] = None) -> Tuple[SparseVec, Optional[SparseVec]]:
        """Reduce leading entries by stored rows; stop at a non-divisible pivot."""
        vec = dict(vec)
        tag = dict(tag) if tag is not None else None
        while vec:
            c = min(vec)
            row = self.rows.get(c)
            if row is None:
                return vec, tag
            q, r = divmod(vec[c], row[c])
            if r:
                return vec, tag
            _axpy(vec, -q, row)
            if tag is not None:
                _axpy(tag, -q, self.tags[c])
        return vec, tag

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)[0]

    def insert(self, vec: SparseVec, tag: Optional[SparseVec] = None) -> bool:
        """Insert a vector; return True if the lattice grew."""
        vec = {k: v for k, v in vec.items() if v}
        if self.track and tag is None:
            raise ValueError("tag required on a tracking echelon")
        tag = dict(tag) if tag is not None else None
        grew = False
        while vec:
            c = min(vec)
            row = self.rows.get(c)
            if row is None:
                if vec[c] < 0:
                    vec = {k: -v for k, v in vec.items()}
                    if tag is not None:
                        tag = {k: -v for k, v in tag.items()}
                self.rows[c] = vec
                if tag is not None:
                    self.tags[c] = tag
                return True
            p, a = row[c], vec[c]
            q, r = divmod(a, p)
            if not r:
                _axpy(vec, -q, row)
                if tag is not None:
                    _axpy(tag, -q, self.tags[c])
                continue
            g, x, y = xgcd(p, a)
            new_row = _lincomb(x, row, y, vec)
            other = _lincomb(a // g, row, -(p // g), vec)
            if tag is not None:
                rtag = self.tags[c]
                self.tags[c] = _lincomb(x, rtag, y, tag)
                tag = _lincomb(a // g, rtag, -(p // g), tag)
            self.rows[c] = new_row
            vec = other
            grew = True
        if tag is not None and tag:
            self.relations.append(tag)
        return grew

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def hnf_rows(self) -> List[SparseVec]:
        """Fully reduced Hermite form: positive pivots, entries above each
        pivot reduced into ``[0, pivot)``.  Canonical for the lattice."""
        piv = self.pivots()
        rows = {c: dict(self.rows[c]) for c in piv}
        for i in range(len(piv)):
            c = piv[i]
            pr = rows[c]
            p = pr[c]
            for c2 in piv[:i]:
                r2 = rows[c2]
                v = r2.get(c, 0)
                if v:
                    q = v // p
                    if q:
                        _axpy(r2, -q, pr)
        return [rows[c] for c in piv]

    def coordinates(self, vec: SparseVec) -> Optional[Dict[int, int]]:
        """Coefficients of ``vec`` on the stored rows (keyed by pivot column)."""
        vec = dict(vec)
        coords: Dict[int, int] = {}
        while vec:
            c = min(vec)
            row = self.rows.get(c)
            if row is None:
                return None
            q, r = divmod(vec[c], row[c])
            if r:
                return None
            coords[c] = q
            _axpy(vec, -q, row)
        return coords


# ---------------------------------------------------------------------------
# Smith normal form (dense, with transforms)


def _dense(A) -> List[List[int]]:
    if isinstance(A, IntMatrix):
        return A.to_dense()
    return [list(map(int, r)) for r in A]


def smith_form(A) -> Tuple[List[List[int]], List[List[int]], List[List[int]], List[List[int]]]:
    """Return ``(U, D, V, Uinv)`` with ``U @ A @ V == D`` diagonal and U, V unimodular.

    ``D`` has nonnegative diagonal entries forming a divisibility chain,
    zeros last.  ``Uinv`` is the inverse of ``U``.
    """
    D = _dense(A)
    m = len(D)
    n = len(D[0]) if m else (A.ncols if isinstance(A, IntMatrix) else 0)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def row_combine(i, j, a, b, c, d):
        # rows (i, j) <- (a*Ri + b*Rj, c*Ri + d*Rj), ad - bc = +-1
        for M in (D, U):
            ri, rj = M[i], M[j]
            M[i] = [a * x + b * y for x, y in zip(ri, rj)]
            M[j] = [c * x + d * y for x, y in zip(ri, rj)]
        det = a * d - b * c
        # inverse of [[a,b],[c,d]] is det*[[d,-b],[-c,a]]; columns of Ui mix accordingly
        for r in Ui:
            x, y = r[i], r[j]
            r[i] = det * (x * d - y * c)
            r[j] = det * (-x * b + y * a)

    def col_combine(i, j, a, b, c, d):
        # cols (i, j) <- (a*Ci + b*Cj, c*Ci + d*Cj)
        for M in (D, V):
            for r in M:
                x, y = r[i], r[j]
                r[i] = a * x + b * y
                r[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ri = D[i]
            for j in range(t, n):
                v = Ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        while True:
            changed = False
            for i in range(t + 1, m):
                a = D[i][t]
                if not a:
                    continue
                p = D[t][t]
                if a % p == 0:
                    q = a // p
                    row_combine(t, i, 1, 0, -q, 1)
                else:
                    g, x, y = xgcd(p, a)
                    row_combine(t, i, x, y, -(a // g), p // g)
                    changed = True
            for j in range(t + 1, n):
                a = D[t][j]
                if not a:
                    continue
                p = D[t][t]
                if a % p == 0:
                    q = a // p
                    col_combine(t, j, 1, 0, -q, 1)
                else:
                    g, x, y = xgcd(p, a)
                    col_combine(t, j, x, y, -(a // g), p // g)
                    changed = True
            if changed:
                continue
            p = D[t][t]
            bad = None
            for i in range(t + 1, m):
                Ri = D[i]
                for j in range(t + 1, n):
                    if Ri[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_combine(t, bad, 1, 1, 0, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
            for r in Ui:
                r[t] = -r[t]
        t += 1
    return U, D, V, Ui


def snf(A) -> List[int]:
    """Elementary divisors ``d1 | d2 | ...`` with zeros for the rank deficit.

    The list has length ``min(rows, cols)``.
    """
    if isinstance(A, IntMatrix):
        nr, nc = A.shape
        rows = A.rows()
    else:
        rows = [to_sparse(r) for r in A]
        nr = len(rows)
        nc = len(A[0]) if nr else 0
    k = min(nr, nc)
    # reduce to a square full-rank problem first: the row lattice's HNF
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    hrows = ech.hnf_rows()
    if not hrows:
        return [0] * k
    piv = [min(r) for r in hrows]
    # column compression: only columns touched matter; keep dense small block
    cols = sorted({c for r in hrows for c in r})
    idx = {c: i for i, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in hrows]
    for i, r in enumerate(hrows):
        for c, v in r.items():
            dense[i][idx[c]] = v
    if all(abs(r[p]) == 1 for r, p in zip(hrows, piv)):
        divs = [1] * len(hrows)
    else:
        # transpose-echelon to shrink to a square block before the dense SNF
        ech2 = Echelon()
        for j in range(len(cols)):
            ech2.insert({i: dense[i][j] for i in range(len(hrows)) if dense[i][j]})
        sq = ech2.hnf_rows()
        dd = [to_dense(r, len(hrows)) for r in sq]
        _, D, _, _ = smith_form(dd)
        divs = [abs(D[i][i]) for i in range(min(len(D), len(D[0]) if D else 0))]
        divs = [d for d in divs if d]
    divs.sort()
    return divs + [0] * (k - len(divs))


# ---------------------------------------------------------------------------
# kernels


def _unit_pivot_echelon(rows: List[SparseVec], ncols: int):
    """Row echelon with +-1 pivots only, or None if a non-unit pivot is forced.

    Returns ``(pivot_rows, pivot_cols)`` where ``pivot_rows[k]`` has leading
    entry +1 at ``pivot_cols[k]`` and zeros at every other pivot column.
    """
    rows = [dict(r) for r in rows if r]
    col_rows: Dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    active = set(range(len(rows)))
    done_rows: Dict[int, SparseVec] = {}
    for c in range(ncols):
        cand = [i for i in col_rows.get(c, ()) if i in active]
        if not cand:
            continue
        units = [i for i in cand if abs(rows[i][c]) == 1]
        if not units:
            return None
        i = min(units, key=lambda k: (len(rows[k]), k))
        piv = rows[i]
        if piv[c] < 0:
            for k in piv:
                piv[k] = -piv[k]
        active.discard(i)
        targets = [k for k in col_rows.get(c, ()) if k != i]
        for k in targets:
            rk = rows[k]
            q = rk.get(c, 0)
            if not q:
                continue
            for cc, v in piv.items():
                nv = rk.get(cc, 0) - q * v
                if nv:
                    if cc not in rk:
                        col_rows.setdefault(cc, set()).add(k)
                    rk[cc] = nv
                else:
                    if cc in rk:
                        del rk[cc]
                        col_rows[cc].discard(k)
        # pivot row may itself need clearing of earlier pivot columns: it cannot,
        # earlier pivot columns were eliminated from every other row already
        done_rows[c] = piv
        col_rows[c] = {i}
    pcols = sorted(done_rows)
    return [done_rows[c] for c in pcols], pcols


class UnitKernel:
    """Kernel of a matrix whose row reduction needs only unit pivots.

    The kernel is isomorphic to Z^free via restriction to the free columns;
    ``vector(j)`` is the basis vector with a 1 at free column ``j``.
    """

    def __init__(self, pivot_rows: List[SparseVec], pivot_cols: List[int], ncols: int):
        self.ncols = ncols
        self.pivot_cols = pivot_cols
        pset = set(pivot_cols)
        self.free_cols = [c for c in range(ncols) if c not in pset]
        # column view of the reduced rows restricted to free columns
        self._free_entries: Dict[int, List[Tuple[int, int]]] = {}
        for p, r in zip(pivot_cols, pivot_rows):
            for c, v in r.items():
                if c != p:
                    self._free_entries.setdefault(c, []).append((p, v))

    @property
    def rank(self) -> int:
        return len(self.free_cols)

    def vector(self, j: int) -> SparseVec:
        out = {j: 1}
        for p, v in self._free_entries.get(j, ()):
            out[p] = -v
        return out

    def vectors(self) -> List[SparseVec]:
        return [self.vector(j) for j in self.free_cols]


def _kernel_vectors(A: IntMatrix) -> List[SparseVec]:
    res = _unit_pivot_echelon(A.rows(), A.ncols)
    if res is not None:
        return UnitKernel(res[0], res[1], A.ncols).vectors()
    ech = Echelon(track=True)
    for j, col in enumerate(A.columns()):
        ech.insert(col, {j: 1})
    rel = Echelon()
    for t in ech.relations:
        rel.insert(t)
    return rel.hnf_rows()


def kernel_basis(A: IntMatrix) -> "Lattice":
    """Z-basis of ``{x in Z^cols : A x = 0}`` (automatically saturated)."""
    return Lattice(A.ncols, _kernel_vectors(A), independent=True)


def unit_kernel(A: IntMatrix) -> Optional[UnitKernel]:
    res = _unit_pivot_echelon(A.rows(), A.ncols)
    if res is None:
        return None
    return UnitKernel(res[0], res[1], A.ncols)


def rank(A: IntMatrix) -> int:
    ech = Echelon()
    for r in A.rows():
        ech.insert(r)
    return ech.rank


# ---------------------------------------------------------------------------
# lattices


class Lattice:
    """A sublattice of Z^ambient_rank given by linearly independent vectors."""

    __slots__ = ("ambient_rank", "_vectors", "_hnf", "_ech")

    def __init__(self, ambient_rank: int, vectors: Iterable[Union[SparseVec, Sequence[int]]] = (), independent: bool = False):
        self.ambient_rank = int(ambient_rank)
        vecs = []
        for v in vectors:
            v = {k: int(x) for k, x in (v.items() if isinstance(v, dict) else enumerate(v)) if x}
            if any(not 0 <= k < self.ambient_rank for k in v):
                raise IndexError("vector outside ambient rank")
            vecs.append(v)
        self._hnf = None
        self._ech = None
        if independent:
            self._vectors = tuple(v for v in vecs if v)
        else:
            ech = Echelon()
            for v in vecs:
                ech.insert(v)
            self._ech = ech
            self._hnf = tuple(ech.hnf_rows())
            self._vectors = self._hnf

    @classmethod
    def from_generators(cls, ambient_rank: int, gens: Iterable) -> "Lattice":
        return cls(ambient_rank, gens)

    @classmethod
    def full(cls, dim: int) -> "Lattice":
        return cls(dim, [{i: 1} for i in range(dim)], independent=True)

    @classmethod
    def zero(cls, dim: int) -> "Lattice":
        return cls(dim, [], independent=True)

    def _echelon(self) -> Echelon:
        if self._ech is None:
            ech = Echelon()
            for v in self._vectors:
                ech.insert(v)
            self._ech = ech
        return self._ech

    @property
    def rank(self) -> int:
        return len(self._vectors)

    @property
    def basis(self) -> IntMatrix:
        return IntMatrix.from_columns(self._vectors, self.ambient_rank)

    def vectors(self) -> List[SparseVec]:
        return [dict(v) for v in self._vectors]

    def dense_vectors(self) -> List[List[int]]:
        return [to_dense(v, self.ambient_rank) for v in self._vectors]

    def hnf(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        if self._hnf is None:
            self._hnf = tuple(self._echelon().hnf_rows())
        return tuple(tuple(sorted(r.items())) for r in self._hnf)

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.ambient_rank == other.ambient_rank and self.hnf() == other.hnf()

    def __hash__(self):
        return hash((self.ambient_rank, self.hnf()))

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, ambient={self.ambient_rank})"

    def contains(self, vec: Union[SparseVec, Sequence[int]]) -> bool:
        if not isinstance(vec, dict):
            vec = to_sparse(vec)
        return self._echelon().contains(vec)

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(v) for v in other._vectors)

    def coordinates(self, vec: Union[SparseVec, Sequence[int]]) -> Optional[List[int]]:
        """Integer coordinates on ``self.vectors()``, or None if not a member."""
        if not isinstance(vec, dict):
            vec = to_sparse(vec)
        ech = Echelon(track=True)
        for i, v in enumerate(self._vectors):
            ech.insert(v, {i: 1})
        rem, tag = ech.reduce(vec, {})
        if rem:
            return None
        return [-tag.get(i, 0) for i in range(self.rank)]

    def coordinate_matrix(self, vecs: Sequence[SparseVec]) -> List[List[int]]:
        """Coordinates of several members at once (columns), raising on failure."""
        ech = Echelon(track=True)
        for i, v in enumerate(self._vectors):
            ech.insert(v, {i: 1})
        out = []
        for v in vecs:
            rem, tag = ech.reduce(v, {})
            if rem:
                raise ContainmentError("vector not in lattice")
            out.append([-tag.get(i, 0) for i in range(self.rank)])
        return out

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.ambient_rank, list(self._vectors) + list(other._vectors))

    def scaled(self, k: int) -> "Lattice":
        return Lattice(self.ambient_rank, [{i: k * v for i, v in x.items()} for x in self._vectors], independent=k != 0)

    def intersect(self, other: "Lattice") -> "Lattice":
        """``self ∩ other`` via the kernel of ``[B_self | -B_other]``."""
        a = self.rank
        cols = list(self._vectors) + [{k: -v for k, v in x.items()} for x in other._vectors]
        M = IntMatrix.from_columns(cols, self.ambient_rank)
        ker = _kernel_vectors(M)
        out = []
        for kv in ker:
            acc: SparseVec = {}
            for i in range(a):
                c = kv.get(i, 0)
                if c:
                    _axpy(acc, c, self._vectors[i])
            out.append(acc)
        return Lattice(self.ambient_rank, out)

    def saturation(self) -> "Lattice":
        """Rational span intersected with the integer lattice."""
        # orthogonal complement over Z, then its kernel
        if self.rank == 0:
            return Lattice.zero(self.ambient_rank)
        Bt = IntMatrix.from_rows(self._vectors, self.ambient_rank)
        perp = _kernel_vectors(Bt)
        if not perp:
            return Lattice.full(self.ambient_rank)
        return Lattice(self.ambient_rank, _kernel_vectors(IntMatrix.from_rows(perp, self.ambient_rank)), independent=True)

    def to_json(self) -> dict:
        return {"ambient_rank": self.ambient_rank, "basis": self.basis.to_json()}

    @classmethod
    def from_json(cls, doc: dict) -> "Lattice":
        B = IntMatrix.from_json(doc["basis"])
        return cls(doc["ambient_rank"], B.columns(), independent=True)


def lattice_index(sub: Lattice, sup: Lattice) -> Union[int, str]:
    """Index ``[sup : sub]``; ``"infinite"`` on a rank deficit."""
    if sub.ambient_rank != sup.ambient_rank:
        raise ValueError("ambient rank mismatch")
    try:
        coords = sup.coordinate_matrix(sub.vectors())
    except ContainmentError:
        raise ContainmentError("sub is not contained in sup") from None
    if sub.rank != sup.rank:
        return INFINITE
    if sup.rank == 0:
        return 1
    divs = snf(coords)
    out = 1
    for d in divs:
        out *= d
    return out


# ---------------------------------------------------------------------------
# solving


def solve(A: IntMatrix, b: Sequence[int], modulus: Optional[int] = None) -> Optional[List[int]]:
    """Integer solution of ``A x = b`` (mod ``modulus`` if given), or None."""
    if len(b) != A.nrows:
        raise ValueError("dimension mismatch")
    cols = A.columns()
    nvar = len(cols)
    if modulus is not None:
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        cols = cols + [{i: modulus} for i in range(A.nrows)]
    ech = Echelon(track=True)
    for j, col in enumerate(cols):
        ech.insert(col, {j: 1})
    rem, tag = ech.reduce(to_sparse(b), {})
    if rem:
        return None
    x = [-tag.get(j, 0) for j in range(nvar)]
    if modulus is not None:
        x = [v % modulus for v in x]
    return x
