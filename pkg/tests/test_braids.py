import random

import pytest
from hypothesis import given, settings, strategies as st

from specht_lab.braids import (SUBGROUPS, BraidWord, NotPure, doubled_windings, generator_lattice, named_braid,
                               rho, specht_lattice, specht_membership, subgroup_generators, winding_equations,
                               winding_vector)
from specht_lab.linalg import lattice_index
from specht_lab.modules import UnsupportedAtN3, e_vec, pairs, standard_pairs, u_vec
from specht_lab.symmetric import Permutation
from specht_lab.verify import covariance_failures


def words(n, max_len=12):
    letters = st.integers(1, n - 1).flatmap(lambda k: st.sampled_from((k, -k)))
    return st.lists(letters, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))


def unit(n, i, j):
    out = [0] * len(pairs(n))
    out[pairs(n).index((min(i, j), max(i, j)))] = 1
    return out


# -- projection and windings -------------------------------------------------


def test_two_strand_full_twist():
    w = BraidWord.parse(3, "1 1")
    assert rho(w).is_identity()
    assert list(winding_vector(w).coords) == [1, 0, 0]


def test_rho_of_generator_is_transposition():
    assert rho(BraidWord(4, (2,))) == Permutation.s(4, 2)
    assert rho(BraidWord(4, (-2,))) == Permutation.s(4, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(words(n), words(n))))
def test_rho_is_a_homomorphism(ws):
    a, b = ws
    assert rho(a * b) == rho(a) * rho(b)
    assert rho(a.inverse()) == rho(a).inverse()


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 6).flatmap(words))
def test_doubled_windings_sum_to_exponent_sum(w):
    assert sum(doubled_windings(w)) == sum(1 if k > 0 else -1 for k in w.letters)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 6).flatmap(lambda n: st.tuples(words(n), st.integers(1, n - 2), st.integers(0, 12))))
def test_braid_relation_preserves_windings(data):
    w, k, cut = data
    n = w.n
    rel = BraidWord(n, (k, k + 1, k, -(k + 1), -k, -(k + 1)))
    cut = min(cut, len(w))
    spliced = BraidWord(n, w.letters[:cut] + rel.letters + w.letters[cut:])
    assert rho(spliced) == rho(w)
    assert doubled_windings(spliced) == doubled_windings(w)


def _random_generator_product(rng, n):
    # pure braid as a product of conjugated a_ij; its windings are determined by the pairs they land on
    w = BraidWord(n)
    want = [0] * len(pairs(n))
    for _ in range(rng.randint(0, 5)):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        e = rng.choice((1, -1))
        g = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))))
        w = w * g * named_braid("a", (i, j), n) ** e * g.inverse()
        p = rho(g)
        want = [x + e * y for x, y in zip(want, unit(n, p(i), p(j)))]
    return w, want


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_windings_match_generator_oracle(n):
    rng = random.Random(n)
    for _ in range(200):
        w, want = _random_generator_product(rng, n)
        assert list(winding_vector(w).coords) == want


def test_not_pure_raises():
    with pytest.raises(NotPure):
        winding_vector(BraidWord(4, (1,)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_conjugation_covariance(n):
    assert covariance_failures(n, 1000) == 0


@pytest.mark.full
def test_conjugation_covariance_n6():
    assert covariance_failures(6, 1000) == 0


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_full_twist_winds_once_per_pair(n):
    assert list(winding_vector(named_braid("z", (), n)).coords) == u_vec(n)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lifts_wind_to_polytabloids(n):
    for i, j in standard_pairs(n):
        assert list(winding_vector(named_braid("lift", (i, j), n)).coords) == e_vec(n, i, j)


def test_full_twist_is_central():
    n = 4
    z = named_braid("z", (), n)
    for k in range(1, n):
        s = BraidWord(n, (k,))
        assert rho(s * z * s.inverse()).is_identity()
        assert winding_vector(s * z * s.inverse()) == winding_vector(z)


# -- Specht subgroups ----------------------------------------------------------


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("ident", [s for s in SUBGROUPS if s != "N02"])
def test_generator_lattice_equals_solution_lattice(n, ident):
    assert generator_lattice(ident, n) == specht_lattice(ident, n)


@pytest.mark.parametrize("ident", ["N0", "N1"])
def test_n3_variants(ident):
    assert generator_lattice(ident, 3) == specht_lattice(ident, 3)


def test_n3_rejects_undefined_subgroups():
    with pytest.raises(UnsupportedAtN3):
        specht_lattice("N2", 3)


@pytest.mark.parametrize("n,index", [(4, 3), (5, 2)])
def test_n02_generators_fall_short_of_solution_lattice(n, index):
    gen, sol = generator_lattice("N02", n), specht_lattice("N02", n)
    assert sol.contains_lattice(gen)
    assert lattice_index(gen, sol) == index


def test_n02_witness_at_n4():
    w = named_braid("a", (1, 2), 4) * named_braid("a", (3, 4), 4)
    assert specht_membership(w, "N02")
    assert not generator_lattice("N02", 4).contains(list(winding_vector(w).coords))


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("ident", SUBGROUPS)
def test_generators_are_members(n, ident):
    for g in subgroup_generators(ident, n):
        assert specht_membership(g, ident)


def test_membership_examples():
    n = 4
    a = lambda i, j: named_braid("a", (i, j), n)
    assert not specht_membership(a(1, 2), "N12")
    assert specht_membership(a(1, 2) * a(1, 3).inverse(), "N12")
    assert specht_membership(named_braid("z", (), n), "N0")
    assert not specht_membership(named_braid("z", (), n), "N12")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SUBGROUPS), st.integers(0, 10 ** 6))
def test_membership_is_conjugation_invariant(ident, seed):
    n = 5
    rng = random.Random(seed)
    w, _ = _random_generator_product(rng, n)
    g = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(6)))
    assert specht_membership(w, ident) == specht_membership(g * w * g.inverse(), ident)


def test_winding_equations_cut_out_solution_lattice():
    n = 5
    for ident in SUBGROUPS:
        E = winding_equations(ident, n)
        for v in specht_lattice(ident, n).dense_vectors():
            assert E.apply(v) == [0] * E.nrows
