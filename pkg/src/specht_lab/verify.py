"""Replication suite: every invariant and table check, as one deterministic report."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterator, List, Optional

from . import expected
from .braids import (SUBGROUPS, BraidWord, generator_lattice, named_braid, rho, specht_lattice,
                     winding_vector)
from .cohomology import (MAP_IDS, ExtensionGroup, QuotientSpec, cohomology_group, splitting_check)
from .linalg import IntMatrix, Lattice, kernel_basis, lattice_index
from .modules import (ModuleElement, e_vec, image_lattice, k12_lattice, lattice_membership, m2_equiv_lattice,
                      membership, module, mu_matrix, pairs, project, s1_lattice, s2_dual_image_order,
                      s2_lattice, standard_pairs, u_vec)
from .resolution import (MAX_N, SizeLimit, boundary, cells, coboundary, family_module, is_cocycle,
                         named_cocycle, psi)
from .symmetric import ZZ, Ring

log = logging.getLogger(__name__)

SCOPES = ("paper-small", "paper-full")
COHOMOLOGY_MODULES = ("S0", "M1", "M2", "S1", "K12", "S2")
TABLE_RINGS = (ZZ, Ring(2), Ring(3), Ring(4), Ring(6))
SPLIT_RINGS = (ZZ, Ring(2), Ring(3), Ring(4), Ring(5), Ring(6))


@dataclass
class Check:
    id: str
    label: str
    n: Optional[int]
    expected: Any
    computed: Any
    status: str
    ring: Optional[str] = None

    def to_json(self) -> dict:
        doc = {"id": self.id, "label": self.label, "n": self.n, "expected": self.expected,
               "computed": self.computed, "status": self.status}
        if self.ring is not None:
            doc["ring"] = self.ring
        return doc


@dataclass
class Report:
    scope: str
    n_max: int
    checks: List[Check] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    @property
    def ok(self) -> bool:
        return self.count("FAIL") == 0

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "n_max": self.n_max,
            "passed": self.count("PASS"),
            "failed": self.count("FAIL"),
            "skipped": self.count("SKIPPED"),
            "checks": [c.to_json() for c in self.checks],
        }


def _check(id_: str, label: str, n, exp, got, ring: Optional[Ring] = None) -> Check:
    return Check(id_, label, n, exp, got, "PASS" if exp == got else "FAIL",
                 None if ring is None else ring.to_json())


def _random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def _random_pure(rng: random.Random, n: int) -> BraidWord:
    w = BraidWord(n)
    for _ in range(rng.randint(1, 4)):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        w = w * named_braid("a", (i, j), n) ** rng.choice((1, -1, 2))
    g = _random_word(rng, n, rng.randint(0, 6))
    return g * w * g.inverse()


# ---------------------------------------------------------------------------
# braid engine


def covariance_failures(n: int, samples: int, seed: int = 0) -> int:
    """Count pairs (g, w) where winding(g w g^-1) != rho(g) . winding(w)."""
    rng = random.Random(seed + n)
    M = module("M2", n)
    bad = 0
    for _ in range(samples):
        w = _random_pure(rng, n)
        g = _random_word(rng, n, rng.randint(0, 8))
        lhs = winding_vector(g * w * g.inverse())
        perm = M.ambient.coord_perm(rho(g))
        rhs = [0] * M.dim
        for k, x in enumerate(winding_vector(w).coords):
            rhs[perm[k]] += x
        bad += list(lhs.coords) != rhs
    return bad


def _braid_checks(n: int, samples: int, seed: int) -> Iterator[Check]:
    yield _check("braids.covariance", f"conjugation covariance on {samples} random pairs", n, 0,
                 covariance_failures(n, samples, seed))
    yield _check("braids.center", "winding of the full twist is u", n, u_vec(n),
                 list(winding_vector(named_braid("z", (), n)).coords))
    if n >= 4:
        bad = [f"{i}{j}" for i, j in standard_pairs(n)
               if list(winding_vector(named_braid("lift", (i, j), n)).coords) != e_vec(n, i, j)]
        yield _check("braids.lifts", "lifts of standard polytabloids wind to e_ij", n, [], bad)


def _subgroup_checks(n: int) -> Iterator[Check]:
    ids = SUBGROUPS if n >= 4 else ("N0", "N1")
    for ident in ids:
        gen = generator_lattice(ident, n)
        sol = specht_lattice(ident, n)
        yield _check(f"subgroups.generators.{ident}", "generator lattice equals winding-equation lattice",
                     n, 1, lattice_index(gen, sol) if sol.contains_lattice(gen) else "not contained")


# ---------------------------------------------------------------------------
# modules


def _project_rational(i: int, vec: List[Fraction], n: int) -> List[Fraction]:
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    return [x / den for x in project(i, [int(x * den) for x in vec], n)]


def _projector_check(n: int) -> Check:
    d = len(pairs(n))
    bad = []
    for k in range(d):
        v = [Fraction(int(t == k)) for t in range(d)]
        ps = [_project_rational(i, v, n) for i in range(3)]
        if [sum(x) for x in zip(*ps)] != v:
            bad.append(f"sum:{k}")
        for i in range(3):
            for j in range(3):
                want = ps[i] if i == j else [Fraction(0)] * d
                if _project_rational(i, ps[j], n) != want:
                    bad.append(f"{i}{j}:{k}")
    return _check("modules.projectors", "projectors are orthogonal idempotents summing to the identity",
                  n, [], bad)


def oracle_disagreements(target: str, n: int, ring: Ring, samples: int, seed: int = 0) -> int:
    """Congruence membership vs lattice membership on random vectors (half drawn near the lattice)."""
    rng = random.Random(f"{target}:{n}:{ring}:{seed}")
    if target == "IM_F1":
        amb, lat = module("M1", n, ring), image_lattice((1,), n)
    elif target == "IM_F2":
        amb, lat = module("M2", n, ring), image_lattice((2,), n)
    else:
        amb, lat = module("M2", n, ring), m2_equiv_lattice(n)
    basis = lat.dense_vectors()
    bad = 0
    for t in range(samples):
        if t % 2:
            vec = [0] * amb.dim
            for b in basis:
                c = rng.randint(-3, 3)
                vec = [x + c * y for x, y in zip(vec, b)]
            if rng.random() < 0.5:
                k = rng.randrange(amb.dim)
                vec[k] += rng.choice((1, -1, 2, 3))
        else:
            vec = [rng.randint(-6, 6) for _ in range(amb.dim)]
        v = ModuleElement(amb, amb.canonical(vec))
        bad += membership(v, target) != lattice_membership(v, target)
    return bad


def k12_kernel_matches(n: int) -> bool:
    """ker(mu restricted to K12) equals the standard-polytabloid lattice."""
    K = k12_lattice(n)
    B = K.dense_vectors()
    mu = mu_matrix(n)
    images = [mu.apply(b) for b in B]
    kern = kernel_basis(IntMatrix.from_columns(images, n))
    vecs = []
    for c in kern.dense_vectors():
        vec = [0] * len(B[0])
        for coef, b in zip(c, B):
            vec = [x + coef * y for x, y in zip(vec, b)]
        vecs.append(vec)
    return Lattice(len(B[0]), vecs) == s2_lattice(n)


def _module_checks(n: int, samples: int, seed: int, rings) -> Iterator[Check]:
    if n < 4:
        return
    yield _projector_check(n)
    yield _check("modules.index.f1", "index of f1(M2) in S1", n, expected.f1_index(n),
                 lattice_index(image_lattice((1,), n), s1_lattice(n)))
    got = lattice_index(image_lattice((2,), n), s2_lattice(n))
    if n >= 5:
        yield _check("modules.index.f2", "index of f2(M2) in S2", n, expected.f2_index(n), got)
    else:
        yield Check("modules.index.f2", "index of f2(M2) in S2 (SNF only; no closed form here)", n, None, got,
                    "PASS")
    for target in ("IM_F1", "IM_F2", "M2_EQUIV"):
        for ring in rings:
            yield _check(f"modules.oracle.{target}", f"congruence vs lattice membership, {samples} vectors",
                         n, 0, oracle_disagreements(target, n, ring, samples, seed), ring)
    yield _check("modules.k12_kernel", "kernel of mu on K12 is the polytabloid lattice", n, True,
                 k12_kernel_matches(n))
    if n in (5, 6):
        yield _check("modules.epsilon_order", "order of the image of S2 under epsilon bar", n,
                     expected.s2_dual_order(n), s2_dual_image_order(n))


# ---------------------------------------------------------------------------
# resolution


def _resolution_checks(n: int) -> Iterator[Check]:
    bad = [str(c) for cx in ("P", "R") for c in cells(cx, 2, n) if not boundary(boundary(c, n)).is_zero()]
    yield _check("resolution.dd", "boundary of boundary vanishes", n, [], bad)
    bad = [str(c) for d in (1, 2) for c in cells("P", d, n) if boundary(psi(c, n)) != psi(boundary(c, n))]
    yield _check("resolution.chain_map", "psi commutes with the boundary", n, [], bad)
    if n >= 4:
        phi = named_cocycle("phi", 1, n).compose_psi()
        ha = named_cocycle("hat_alpha2", 1, n)
        bad = [str(c) for c in ha.values if phi.values[c] != ha.values[c]]
        yield _check("resolution.structure_class", "phi after psi equals hat_alpha2(1) cell by cell", n, [], bad)
    if n in (4, 5):
        for ring in (ZZ, Ring(2), Ring(4)):
            bad = []
            for fam in ("kappa0", "kappa1", "kappa2", "hat_kappa2", "alpha0", "alpha1", "alpha2", "hat_alpha2",
                        "beta0", "beta1", "beta2", "hat_beta2"):
                rs = range(ring.modulus or 3) if fam.startswith(("alpha", "hat_alpha")) else ring.two_torsion()
                for r in rs:
                    if not is_cocycle(named_cocycle(fam, r, n, family_module(fam, n, ring))):
                        bad.append(f"{fam}({r})")
            yield _check("resolution.families", "named families are cocycles", n, [], bad, ring)
    if n % 2 == 0 and n >= 4:
        from .modules import f_map
        dz = coboundary(named_cocycle("zeta", 1, n))
        ha = named_cocycle("hat_alpha2", 1, n)
        bad = [str(c) for c in dz.values if list(dz.values[c].coords) != list(f_map(2, ha.values[c]).coords)]
        yield _check("resolution.zeta", "coboundary of zeta is f2 after hat_alpha2(1)", n, [], bad)


# ---------------------------------------------------------------------------
# cohomology and splitting


def named_representatives(module_id: str, degree: int, n: int, ring: Ring):
    """Named cochains whose classes should generate H^degree (S0, M1, M2 only)."""
    M = module(module_id, n, ring)
    s = {"S0": "0", "M1": "1", "M2": "2"}[module_id]
    r2 = ring.two_torsion()
    cc = lambda fam, r: named_cocycle(fam, r, n, M)
    if degree == 1:
        fams = ["kappa" + s] + (["hat_kappa2"] if module_id == "M2" else [])
        return [cc(f, r) for f in fams for r in r2]
    out = [cc("alpha" + s, 1)]
    if module_id == "M2":
        out.append(cc("hat_alpha2", 1))
        out += [cc("hat_beta2", r) for r in r2]
    if (module_id, n >= 4) == ("S0", True) or (module_id == "M1" and n >= 5) or (module_id == "M2" and n >= 6):
        out += [cc("beta" + s, r) for r in r2]
    return out


def _cohomology_checks(n: int, rings) -> Iterator[Check]:
    for mid in COHOMOLOGY_MODULES:
        if mid == "S2" and n < 4:
            continue
        for ring in rings:
            for k in (0, 1, 2):
                exp = expected.cohomology(mid, k, n, ring)
                H = cohomology_group(k, module(mid, n, ring))
                got = [H.free_rank, H.torsion]
                if exp is None:
                    yield Check(f"cohomology.H{k}.{mid}", "no closed form at this n", n, None, got, "SKIPPED",
                                ring.to_json())
                else:
                    yield _check(f"cohomology.H{k}.{mid}", f"H^{k}(S_n; {mid})", n, [exp[0], exp[1]], got, ring)
    if n in (4, 5):
        for mid in ("S0", "M1", "M2"):
            for ring in rings:
                for k in (1, 2):
                    H = cohomology_group(k, module(mid, n, ring))
                    yield _check(f"cohomology.generators.{mid}", f"named classes generate H^{k}", n, True,
                                 H.generated_by(named_representatives(mid, k, n, ring)), ring)


def _splitting_checks(n: int) -> Iterator[Check]:
    for mid in MAP_IDS:
        for ring in SPLIT_RINGS:
            if mid == "pi_m" and ring.is_integral:
                continue
            q = QuotientSpec(n, ring, mid)
            res = splitting_check(q)
            got = {"splits": res["splits"], "section_verified": res.get("verified")}
            exp = {"splits": expected.splits(n, ring, mid),
                   "section_verified": True if expected.splits(n, ring, mid) else None}
            yield _check(f"splitting.{mid}", "extension splits per the table", n, exp, got, ring)


def central_z_check(n: int = 4, m: int = 2) -> bool:
    """The image of the full twist commutes with every element of B_n/ker(pi_m)."""
    G = ExtensionGroup(QuotientSpec(n, Ring(m), "pi_m"))
    z = G.braid_image(named_braid("z", (), n))
    return all(G.multiply(z, x) == G.multiply(x, z) for x in G.elements())


# ---------------------------------------------------------------------------
# driver


def run_suite(scope: str = "paper-small", n_max: int = 5, seed: int = 0,
              progress: Optional[Callable[[str], None]] = None) -> Report:
    """Run every check with 3 <= n <= n_max; n beyond the size limit is SKIPPED."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    if scope == "paper-full" and n_max > MAX_N:
        raise SizeLimit(f"paper-full needs n_max <= {MAX_N}")
    full = scope == "paper-full"
    samples = 1000 if full else 200
    report = Report(scope, n_max)
    for n in range(3, n_max + 1):
        if n > MAX_N:
            report.checks.append(Check("suite.size_limit", f"n above {MAX_N} is out of range", n, None, None,
                                       "SKIPPED"))
            continue
        if progress:
            progress(f"n={n}")
        groups = [
            lambda: _braid_checks(n, samples, seed),
            lambda: _subgroup_checks(n),
            lambda: _module_checks(n, samples if full else 200, seed, (ZZ, Ring(2), Ring(3))),
            lambda: _resolution_checks(n),
        ]
        if n <= 5 or full:
            groups.append(lambda: _cohomology_checks(n, TABLE_RINGS))
        if n in (4, 5):
            groups.append(lambda: _splitting_checks(n))
        for build in groups:
            report.checks.extend(build())
        if n == 4:
            report.checks.append(_check("splitting.central_z", "full twist is central in B_4/ker(pi_2)", 4, True,
                                        central_z_check()))
    report.checks.sort(key=lambda c: (c.id, c.n or 0, c.ring or ""))
    return report
