from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from specht_lab.linalg import (INFINITE, ContainmentError, IntMatrix, Lattice, kernel_basis, lattice_index,
                               smith_form, snf, solve)

sympy = pytest.importorskip("sympy")
from sympy.matrices.normalforms import smith_normal_form  # noqa: E402

small = st.integers(-9, 9)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def det(M):
    return int(sympy.Matrix(M).det())


def sympy_divisors(A):
    D = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_form_transforms(A):
    U, D, V, Uinv = smith_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    assert matmul(U, Uinv) == [[int(i == j) for j in range(len(U))] for i in range(len(U))]
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert diag[:len(nz)] == nz


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_matches_sympy(A):
    assert sorted(d for d in snf(A) if d) == sympy_divisors(A)


@settings(max_examples=100, deadline=None)
@given(matrices(4, 6))
def test_kernel_is_saturated_and_complete(A):
    M = IntMatrix.from_dense(A)
    K = kernel_basis(M)
    for v in K.dense_vectors():
        assert M.apply(v) == [0] * M.nrows
    assert K.rank == M.ncols - sympy.Matrix(A).rank()
    assert K.saturation() == K


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5), st.integers(1, 5))
def test_index_of_scaled_lattice(vecs, k):
    L = Lattice(4, vecs)
    assert lattice_index(L.scaled(k), L) == k ** L.rank


def test_index_diagonal():
    sup = Lattice.full(3)
    assert lattice_index(Lattice(3, [[2, 0, 0], [0, 3, 0], [0, 0, 5]]), sup) == 30
    assert lattice_index(Lattice(3, [[2, 0, 0], [0, 3, 0]]), sup) == INFINITE


def test_index_requires_containment():
    with pytest.raises(ContainmentError):
        lattice_index(Lattice.full(2), Lattice(2, [[2, 0], [0, 2]]))


def test_hnf_equality_ignores_generating_set():
    assert Lattice(2, [[1, 1], [0, 2]]) == Lattice(2, [[1, -1], [2, 0], [3, 1]])
    assert Lattice(2, [[2, 0]]) != Lattice(2, [[1, 0]])


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
def test_solve_finds_preimage(A, x):
    M = IntMatrix.from_dense(A)
    b = M.apply(x[:M.ncols] + [0] * (M.ncols - len(x)))
    y = solve(M, b)
    assert y is not None and M.apply(y) == b


def test_solve_detects_no_integer_solution():
    assert solve(IntMatrix.from_dense([[2, 4]]), [3]) is None
    y = solve(IntMatrix.from_dense([[2, 4]]), [3], modulus=5)
    assert y is not None and (2 * y[0] + 4 * y[1] - 3) % 5 == 0


def test_index_product_of_divisors():
    A = [[4, 6, 0], [2, 8, 2], [0, 0, 9]]
    L = Lattice(3, A)
    assert lattice_index(L, Lattice.full(3)) == abs(det(A)) == prod(snf(A))


def test_matrix_json_round_trip():
    M = IntMatrix.from_dense([[1, 0, -3], [0, 0, 7]])
    assert IntMatrix.from_json(M.to_json()).to_dense() == M.to_dense()
    L = Lattice(3, [[1, 2, 3], [0, 4, 4]])
    assert Lattice.from_json(L.to_json()) == L
