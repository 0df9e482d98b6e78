import pytest
from hypothesis import assume, given, strategies as st

from qlattice.arith import CycRat, context
from qlattice.linalg import RepMatrix, SingularMatrix

R = 5
CTX = context(R)

entries = st.lists(st.integers(-4, 4), min_size=R - 1, max_size=R - 1).map(lambda c: CycRat(CTX, c))


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(
        lambda rows: RepMatrix.from_rows(CTX, list(range(n)), rows))


def unitriangular(n):
    """Upper unitriangular matrices over Z[zeta]: always invertible with integral inverse."""
    def build(vals):
        rows = [[CTX.one() if i == j else (vals[i * n + j] if j > i else CTX.zero()) for j in range(n)]
                for i in range(n)]
        return RepMatrix.from_rows(CTX, list(range(n)), rows)
    return st.lists(entries, min_size=n * n, max_size=n * n).map(build)


def test_identity_and_diagonal():
    i3 = RepMatrix.identity(CTX, [0, 1, 2])
    assert i3.is_identity()
    d = RepMatrix.diagonal(CTX, [0, 1, 2], [1, CTX.zeta(1), 0])
    assert d.nnz() == 2
    assert d.entry(1, 1) == CTX.zeta_rat(1)


@given(a=square(3), b=square(3), c=square(3))
def test_product_is_associative_and_distributive(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c


@given(u=unitriangular(4))
def test_unitriangular_inverse_is_integral(u):
    inv = u.inverse()
    assert (u @ inv).is_identity() and (inv @ u).is_identity()
    assert inv.is_integral()
    assert u.det_is_unit()
    assert u.det() == CTX.one()


@given(a=square(3))
def test_inverse_or_singular(a):
    try:
        inv = a.inverse()
    except SingularMatrix:
        assert not a.det()
    else:
        assert (a @ inv).is_identity()
        assert a.det() * inv.det() == CTX.one()


@given(a=square(3), k=st.integers(0, 4), n=st.integers(1, 5))
def test_projective_comparison_on_random_rescalings(a, k, n):
    assume(a.nnz())
    c = CTX.zeta_rat(k) * n
    assert a.projectively_equal(a * c)
    assert a.proportional(a * c) * c == CTX.one()


def test_projective_comparison_rejects_non_multiples():
    a = RepMatrix.diagonal(CTX, [0, 1], [1, 1])
    b = RepMatrix.diagonal(CTX, [0, 1], [1, 2])
    assert not a.projectively_equal(b)
    assert a.proportional(b) is None


def test_kron_labels_and_values():
    a = RepMatrix.diagonal(CTX, [0, 1], [1, 2])
    b = RepMatrix.diagonal(CTX, [0, 1], [3, 5])
    k = a.kron(b)
    assert k.labels == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert [k.entry(i, i) for i in range(4)] == [CTX.rat(x) for x in (3, 5, 6, 10)]


def test_nonintegral_witness_and_triangularity():
    m = RepMatrix.from_rows(CTX, [0, 1], [[1, CTX.rat(1) / 5], [0, 1]])
    assert not m.is_integral()
    i, j, v = m.first_nonintegral()
    assert (i, j) == (0, 1) and v.den == 5
    assert m.triangular_violation(upper=True) is None
    assert m.triangular_violation(upper=False)[:2] == (0, 1)


def test_determinant_h_valuation():
    m = RepMatrix.diagonal(CTX, [0, 1], [CTX.h(), CTX.h() * CTX.h()])
    assert m.det_h_valuation() == 3
    assert not m.det_is_unit()


def test_singular_matrix_raises():
    m = RepMatrix.from_rows(CTX, [0, 1], [[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        m.inverse()
    assert not m.det()
