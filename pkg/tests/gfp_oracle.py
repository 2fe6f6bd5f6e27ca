"""Independent cohomology dimensions over GF(p).

Builds a free GF(p)[S_n]-resolution of the trivial module by brute force:
each kernel is computed by row reduction and covered greedily by translates
of kernel vectors.  Nothing from the package's cell complex is used.
"""

from functools import lru_cache
from itertools import permutations

from specht_lab.symmetric import Permutation


class Field:
    def __init__(self, p):
        self.p = p

    def echelon(self, rows, ncols):
        """Reduced rows and their pivot columns."""
        p = self.p
        out, pivots = [], []
        for r in rows:
            r = [x % p for x in r]
            for row, c in zip(out, pivots):
                a = r[c]
                if a:
                    r = [(x - a * y) % p for x, y in zip(r, row)]
            lead = next((c for c in range(ncols) if r[c]), None)
            if lead is None:
                continue
            inv = pow(r[lead], p - 2, p)
            r = [x * inv % p for x in r]
            for t, row in enumerate(out):
                a = row[lead]
                if a:
                    out[t] = [(x - a * y) % p for x, y in zip(row, r)]
            out.append(r)
            pivots.append(lead)
        return out, pivots

    def rank(self, rows, ncols):
        return len(self.echelon(rows, ncols)[0])

    def nullspace(self, cols, nrows):
        """Basis of {x : sum_j x_j cols[j] = 0}."""
        ncols = len(cols)
        rows = [[cols[j][i] for j in range(ncols)] for i in range(nrows)]
        R, piv = self.echelon(rows, ncols)
        pivset = set(piv)
        basis = []
        for f in range(ncols):
            if f in pivset:
                continue
            x = [0] * ncols
            x[f] = 1
            for row, c in zip(R, piv):
                x[c] = -row[f] % self.p
            basis.append(x)
        return basis


class RegularModule:
    """GF(p)[S_n]^r with the left regular action; coordinate (block, g) at block * N + index(g)."""

    def __init__(self, n):
        self.elements = [Permutation(tuple(q)) for q in permutations(range(1, n + 1))]
        self.index = {g: t for t, g in enumerate(self.elements)}
        self.N = len(self.elements)
        self.table = [[self.index[g * h] for h in self.elements] for g in self.elements]

    def translate(self, g_idx, vec):
        N = self.N
        out = [0] * len(vec)
        row = self.table[g_idx]
        for c, x in enumerate(vec):
            if x:
                out[(c // N) * N + row[c % N]] = x
        return out


def _module_generators(F, R, kernel, dim):
    """Kernel vectors whose translates span the kernel."""
    target = len(kernel)
    gens, span, piv = [], [], []
    for v in kernel:
        if F.rank(span + [v], dim) == len(span):
            continue
        gens.append(v)
        span, piv = F.echelon(span + [R.translate(g, v) for g in range(R.N)], dim)
        if len(span) == target:
            break
    return gens


@lru_cache(maxsize=None)
def free_resolution(n, p, top=3):
    """Generator images ``d[k-1][j]`` in GF(p)[G]^{r_{k-1}} of the generators of P_k, k = 1..top."""
    F, R = Field(p), RegularModule(n)
    N = R.N
    kernel = F.nullspace([[1] for _ in range(N)], 1)  # augmentation
    d, ranks = [], [1]
    for _ in range(top):
        gens = _module_generators(F, R, kernel, ranks[-1] * N)
        d.append(gens)
        ranks.append(len(gens))
        cols = [R.translate(g, v) for v in gens for g in range(N)]
        kernel = F.nullspace(cols, ranks[-2] * N)
    return R, d, ranks


def _actions(M, R, p):
    """Column-convention matrices of every group element on the image of L mod p."""
    F = Field(p)
    d = M.dim
    B, piv = F.echelon([[x % p for x in v] for v in M.lattice.dense_vectors()], d)
    k = len(B)
    mats = []
    for g in R.elements:
        perm = M.ambient.coord_perm(g)
        cols = []
        for b in B:
            moved = [0] * d
            for t, x in enumerate(b):
                moved[perm[t]] = x
            cols.append([moved[c] for c in piv])
        mats.append([[cols[j][i] for j in range(k)] for i in range(k)])
    return k, mats


def _coboundary(dk, r_prev, k, mats, N, p):
    """Matrix of Hom(P_{j-1}, M) -> Hom(P_j, M) on the stacked generator values."""
    rows = []
    for v in dk:
        block = [[0] * (r_prev * k) for _ in range(k)]
        for c, x in enumerate(v):
            if x:
                b, h = divmod(c, N)
                A = mats[h]
                for i in range(k):
                    for j in range(k):
                        if A[i][j]:
                            block[i][b * k + j] = (block[i][b * k + j] + x * A[i][j]) % p
        rows += block
    return rows


def cohomology_dims(M, p, top=2):
    """[dim H^0, ..., dim H^top] of S_n with coefficients in the image of L mod p."""
    R, d, ranks = free_resolution(M.n, p, top + 1)
    F = Field(p)
    k, mats = _actions(M, R, p)
    if k == 0:
        return [0] * (top + 1)
    out, prev = [], 0
    for deg in range(top + 1):
        delta = _coboundary(d[deg], ranks[deg], k, mats, R.N, p)
        ncols = ranks[deg] * k
        rk = F.rank(delta, ncols)
        out.append(ncols - rk - prev)
        prev = rk
    return out
