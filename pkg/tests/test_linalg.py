import sympy as sp
from hypothesis import given, strategies as st

from formalgeom import linalg as la
from formalgeom.scalar import Scalar

from conftest import scalars


def to_sympy(m):
    return sp.Matrix([[sp.Rational(x.re.numerator, x.re.denominator)
                       + sp.I * sp.Rational(x.im.numerator, x.im.denominator) for x in row] for row in m])


def matrices(rows, cols, sparse=True):
    entry = st.one_of(st.just(Scalar(0)), scalars) if sparse else scalars
    return st.lists(st.lists(entry, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, 4)))
def test_rank_and_kernel_against_sympy(m):
    r = la.rank(m)
    assert r == to_sympy(m).rank()
    ker = la.kernel(m)
    assert len(ker) == 4 - r
    for v in ker:
        assert not any(la.matvec(m, v))


@given(matrices(3, 3, sparse=False))
def test_charpoly_against_sympy(m):
    lam = sp.Symbol("lam")
    expected = to_sympy(m).charpoly(lam).all_coeffs()
    got = la.charpoly(m)
    assert len(got) == len(expected)
    assert all(sp.simplify(to_sympy([[g]])[0] - e) == 0 for g, e in zip(got, expected))


@given(matrices(3, 4))
def test_gram_of_vectors_is_psd(b):
    g = la.matmul(la.adjoint(b), b)
    assert la.hermitian_ldl(g).psd


@given(matrices(3, 3, sparse=False), st.integers(0, 2))
def test_indefinite_witness(b, k):
    g = la.matmul(la.adjoint(b), b)
    # push one diagonal entry far negative so the form is indefinite
    g[k][k] = g[k][k] - 1000
    res = la.hermitian_ldl(g)
    assert not res.psd
    assert res.witness_value.re < 0
    assert la.quadratic_form(g, res.witness) == res.witness_value


def test_zero_diagonal_witness():
    g = [[Scalar(0), Scalar(1, 1)], [Scalar(1, -1), Scalar(0)]]
    res = la.hermitian_ldl(g)
    assert not res.psd
    assert la.quadratic_form(g, res.witness) == res.witness_value
    assert res.witness_value.re < 0


def test_format_charpoly():
    assert la.format_charpoly([Scalar(1), Scalar(0), Scalar(1)]) == "λ^2 + 1"
    assert la.format_charpoly([Scalar(1), Scalar(0), Scalar(5), Scalar(0), Scalar(4)]) == "λ^4 + 5λ^2 + 4"
