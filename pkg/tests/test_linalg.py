import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfcert.exactfield import Cyclotomic, Prime, QQ, SpecMismatch
from hopfcert.linalg import Mat, inverse, kernel, kron, rank, rref, solve_affine, span_basis

from strategies import SPECS, frac_mat, matrices


def test_rref_small():
    A = Mat.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, r, piv = rref(A)
    assert r == 2 and piv == [0, 1]
    assert R.to_strings() == [["1", "0", "1"], ["0", "1", "1"], ["0", "0", "0"]]


def test_rank_over_f2_differs_from_q():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank(Mat.from_rows(QQ, rows)) == 3
    assert rank(Mat.from_rows(Prime(2), rows)) == 2


def test_infeasible_certificate():
    A = Mat.from_rows(QQ, [[1, 1], [2, 2]])
    b = Mat.from_rows(QQ, [[1], [3]])
    f = solve_affine(A, b)
    assert not f.feasible and f.check(A, b)
    # normalised: y b = 1
    assert [str(QQ.scalar(t)) for t in f.y] == ["-2", "1"]


def test_feasible_with_kernel():
    A = Mat.from_rows(QQ, [[1, 1, 0], [0, 0, 1]])
    b = Mat.from_rows(QQ, [[2], [5]])
    f = solve_affine(A, b)
    assert f.feasible and f.check(A, b) and len(f.kernel) == 1


def test_spec_mismatch():
    with pytest.raises(SpecMismatch):
        solve_affine(Mat.identity(QQ, 2), Mat.identity(Prime(3), 2))


def test_inverse_of_singular():
    with pytest.raises(ZeroDivisionError):
        inverse(Mat.from_rows(QQ, [[1, 2], [2, 4]]))


@settings(max_examples=150)
@given(data=st.data())
def test_rank_vs_sympy(data):
    A = data.draw(matrices(QQ, max_dim=6))
    assert rank(A) == sympy.Matrix(frac_mat(A)).rank()


@pytest.mark.parametrize("spec", SPECS, ids=str)
@settings(max_examples=60)
@given(data=st.data())
def test_solve_affine_certifies(spec, data):
    A = data.draw(matrices(spec, max_dim=5))
    b = data.draw(matrices(spec, rows=A.rows, cols=data.draw(st.integers(1, 2))))
    f = solve_affine(A, b)
    assert f.check(A, b)
    if f.feasible:
        assert len(f.kernel) == A.cols - rank(A)


@pytest.mark.parametrize("spec", SPECS, ids=str)
@settings(max_examples=60)
@given(data=st.data())
def test_rank_product_bound(spec, data):
    A = data.draw(matrices(spec, max_dim=5))
    B = data.draw(matrices(spec, rows=A.cols, max_dim=5))
    assert rank(A @ B) <= min(rank(A), rank(B))


@pytest.mark.parametrize("spec", SPECS, ids=str)
@settings(max_examples=40)
@given(data=st.data())
def test_kron_mixed_product(spec, data):
    A = data.draw(matrices(spec, max_dim=3))
    C = data.draw(matrices(spec, rows=A.cols, max_dim=3))
    B = data.draw(matrices(spec, max_dim=3))
    D = data.draw(matrices(spec, rows=B.cols, max_dim=3))
    assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)
    assert rank(kron(A, B)) == rank(A) * rank(B)


@pytest.mark.parametrize("spec", SPECS, ids=str)
@settings(max_examples=60)
@given(data=st.data())
def test_kernel_is_kernel(spec, data):
    A = data.draw(matrices(spec, max_dim=6))
    K = kernel(A)
    assert len(K) + rank(A) == A.cols
    for v in K:
        assert all(spec.is_zero(t) for t in A.apply(v))


@pytest.mark.parametrize("spec", SPECS, ids=str)
@settings(max_examples=40)
@given(data=st.data())
def test_inverse_round_trip(spec, data):
    A = data.draw(matrices(spec, max_dim=4))
    if A.rows != A.cols or rank(A) < A.rows:
        return
    assert A @ inverse(A) == Mat.identity(spec, A.rows)


def test_span_basis_dimension():
    vs = [[1, 0, 1], [2, 0, 2], [0, 1, 0]]
    vs = [[QQ.coerce(x) for x in v] for v in vs]
    assert len(span_basis(QQ, vs)) == 2


def _random_system(spec, m, n, seed):
    rnd = random.Random(seed)
    z = [spec.zeta_power(k) for k in range(spec.n)] if spec.kind == "cyclotomic" else None
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rnd.random() < 0.7:
                row.append(spec.zero)
            else:
                c = spec.coerce(rnd.randint(-3, 3))
                row.append(spec.mul(c, rnd.choice(z)) if z else c)
        rows.append(row)
    return Mat(spec, m, n, rows)


def test_large_cyclotomic_system():
    K = Cyclotomic(3)
    A = _random_system(K, 50, 80, seed=7)
    x0 = _random_system(K, 80, 1, seed=8)
    b = A @ x0
    f = solve_affine(A, b)
    assert f.feasible and f.check(A, b)
    assert len(f.kernel) == 80 - rank(A)
    # an inconsistent right-hand side is caught with a certificate
    A2 = Mat(K, 51, 80, A.data + [A.data[0]])
    b2 = Mat(K, 51, 1, b.data + [[K.add(b.data[0][0], K.one)]])
    g = solve_affine(A2, b2)
    assert not g.feasible and g.check(A2, b2)


def test_deterministic():
    K = Cyclotomic(3)
    A = _random_system(K, 20, 30, seed=3)
    b = _random_system(K, 20, 2, seed=4)
    f1, f2 = solve_affine(A, b), solve_affine(A, b)
    assert f1.feasible == f2.feasible
    if f1.feasible:
        assert f1.x == f2.x and f1.kernel == f2.kernel
    else:
        assert f1.y == f2.y
