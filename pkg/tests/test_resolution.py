import gzip
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from specht_lab import resolution
from specht_lab.linalg import IntMatrix, Lattice, kernel_basis
from specht_lab.modules import f_map, module
from specht_lab.resolution import (FAMILIES, Cochain, GroupChain, TorsionViolation, boundary, cells,
                                   chain_to_vector, coboundary, d1_matrix, d2_matrix, family_module,
                                   is_cocycle, kernel_d2, kernel_d2_generators, make_cell, named_cocycle, psi)
from specht_lab.symmetric import Permutation, Ring, ZZ

TORSION_FAMILIES = ("kappa0", "kappa1", "kappa2", "hat_kappa2", "beta0", "beta1", "beta2", "hat_beta2")
FREE_FAMILIES = ("alpha0", "alpha1", "alpha2", "hat_alpha2")


# -- cells and boundaries ------------------------------------------------------


def test_cell_counts():
    n = 5
    assert len(cells("P", 1, n)) == n - 1
    # b: n-2, c: n-1, d: pairs of non-adjacent generators
    assert len(cells("P", 2, n)) == (n - 2) + (n - 1) + (n - 2) * (n - 3) // 2
    assert [str(c) for c in cells("P", 2, 4)] == ["b_1", "b_2", "c_1", "c_2", "c_3", "d_13"]


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("cx", ["P", "R"])
def test_boundary_squares_to_zero(n, cx):
    for c in cells(cx, 2, n):
        assert boundary(boundary(c, n)).is_zero(), c


@pytest.mark.parametrize("n", [3, 4])
def test_p_is_exact_in_degree_one(n):
    # ker d1 = im d2 as Z-lattices
    D1, D2 = d1_matrix(n), d2_matrix(n)
    assert kernel_basis(D1) == Lattice(D2.nrows, D2.columns())


def test_d1_augmentation_is_exact():
    n = 4
    D1 = d1_matrix(n)
    ones = [1] * D1.nrows
    assert all(sum(col.values()) == 0 for col in D1.columns())
    assert Lattice(D1.nrows, D1.columns()) == kernel_basis(IntMatrix.from_rows([ones], D1.nrows))


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 5)), st.integers(0, 5), st.integers(-3, 3))
def test_boundary_is_equivariant(perm, k, coef):
    n = 4
    g = Permutation(tuple(perm))
    c = cells("P", 2, n)[k]
    ch = GroupChain.of(n, c, [(coef, g)])
    assert boundary(ch) == coef * (g * boundary(c, n))


# -- the chain map to R ----------------------------------------------------------


@pytest.mark.parametrize("n", [4, 5, 6])
def test_psi_is_a_chain_map(n):
    for d in (1, 2):
        for c in cells("P", d, n):
            assert boundary(psi(c, n)) == psi(boundary(c, n)), c


def test_psi_on_d_cell_uses_swapped_pair_order():
    n = 4
    image = psi(make_cell("P", "d", (1, 3), n), n)
    assert image == GroupChain.of(n, make_cell("R", "d", (3, 4, 1, 2), n))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_structure_class_identity(n):
    pulled = named_cocycle("phi", 1, n).compose_psi()
    assert pulled == named_cocycle("hat_alpha2", 1, n)


# -- cocycles ------------------------------------------------------------------


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("ring", [ZZ, Ring(2), Ring(4)], ids=str)
@pytest.mark.parametrize("family", TORSION_FAMILIES + FREE_FAMILIES)
def test_named_families_are_cocycles(n, ring, family):
    rs = range(ring.modulus or 3) if family in FREE_FAMILIES else ring.two_torsion()
    for r in rs:
        assert is_cocycle(named_cocycle(family, r, n, family_module(family, n, ring)))


def test_torsion_parameter_is_enforced():
    with pytest.raises(TorsionViolation):
        named_cocycle("kappa1", 1, 4, module("M1", 4, Ring(4)))
    named_cocycle("kappa1", 2, 4, module("M1", 4, Ring(4)))
    with pytest.raises(TorsionViolation):
        named_cocycle("beta2", 1, 4)


def test_unknown_family():
    with pytest.raises(ValueError):
        named_cocycle("gamma", 1, 4)
    assert "zeta" in FAMILIES


@pytest.mark.parametrize("n", [4, 6])
def test_zeta_bounds_f2_of_structure_class(n):
    dz = coboundary(named_cocycle("zeta", 1, n))
    ha = named_cocycle("hat_alpha2", 1, n)
    for c in cells("P", 2, n):
        assert dz.values[c].coords == f_map(2, ha.values[c]).coords, c


def test_zeta_needs_even_n():
    with pytest.raises(ValueError):
        named_cocycle("zeta", 1, 5)


def test_coboundaries_are_cocycles():
    M = module("M2", 4, Ring(3))
    rng = random.Random(0)
    f = Cochain.from_function(1, M, lambda c: M.element([rng.randint(0, 2) for _ in range(M.dim)]))
    assert is_cocycle(coboundary(f))


# -- kernel of d2 and its generators -------------------------------------------


def _kills_full_kernel(f):
    n = f.n
    for v in kernel_d2(n).vectors():
        if not f(resolution.vector_to_chain(n, 2, v)).is_zero():
            return False
    return True


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.booleans())
def test_generator_test_agrees_with_full_kernel(seed, perturb):
    n = 4
    M = module("M2", n, Ring(2))
    f = named_cocycle("hat_alpha2", 1, n, M)
    if perturb:
        rng = random.Random(seed)
        c = rng.choice(cells("P", 2, n))
        vals = dict(f.values)
        vals[c] = vals[c] + M.element([rng.randint(0, 1) for _ in range(M.dim)])
        f = Cochain(2, M, vals)
    assert is_cocycle(f) == _kills_full_kernel(f)


def test_kernel_generators_lie_in_kernel():
    n = 4
    D2 = d2_matrix(n)
    gens = kernel_d2_generators(n)
    assert gens
    for g in gens:
        v = chain_to_vector(g, 2)
        assert not any(D2.apply(v))


def test_kernel_rank_at_n4():
    # rank ker d2 = rank P2 - rank P1 + rank P0 - 1 by exactness
    n = 4
    assert kernel_d2(n).rank == 6 * 24 - 3 * 24 + 24 - 1


def test_kernel_cache_round_trip(tmp_path):
    resolution.set_cache_dir(tmp_path)
    try:
        first = kernel_d2_generators(4)
        files = list(tmp_path.iterdir())
        assert [p.name for p in files] == ["kernel_d2_generators_n4.json.gz"]
        with gzip.open(files[0], "rt") as fh:
            assert json.load(fh)["n"] == 4
        resolution.set_cache_dir(tmp_path)
        assert kernel_d2_generators(4) == first
    finally:
        resolution.set_cache_dir(None)


def test_size_limit():
    with pytest.raises(resolution.SizeLimit):
        kernel_d2(resolution.MAX_N + 1)


def test_cochain_json_labels():
    doc = named_cocycle("hat_alpha2", 1, 4).to_json()
    assert doc["degree"] == 2 and set(doc["values"]) == {"b_1", "b_2", "c_1", "c_2", "c_3", "d_13"}
