from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given

from formalgeom import fixtures
from formalgeom import linalg as la
from formalgeom import multiindex as mi
from formalgeom.errors import AlgebraMismatch
from formalgeom.lie import heisenberg, so3
from formalgeom.pbw import (PbwElement, PbwTensor, coproduct, coproduct_at, involution, monomial_product,
                            normal_order, tensor_flip)
from formalgeom.scalar import I, Scalar

from conftest import elements, scalars

H, G = heisenberg(), so3()


def naive_straighten(alg, terms):
    """Bubble adjacent out-of-order letters, one swap at a time."""
    out = {}
    todo = dict(terms)
    while todo:
        word, c = todo.popitem()
        i = next((k for k in range(len(word) - 1) if word[k] > word[k + 1]), None)
        if i is None:
            alpha = tuple(word.count(j) for j in range(alg.dim))
            out[alpha] = out.get(alpha, 0) + c
            continue
        a, b = word[i], word[i + 1]
        swapped = word[:i] + (b, a) + word[i + 2:]
        todo[swapped] = todo.get(swapped, 0) + c
        for k, v in alg.bracket_basis(a, b).items():
            w = word[:i] + (k,) + word[i + 2:]
            todo[w] = todo.get(w, 0) + c * v
    return {a: c for a, c in out.items() if c}


def gen(alg, i):
    return PbwElement.generator(alg, i)


def test_heisenberg_commutator():
    X, Y, Z = (gen(H, i) for i in range(3))
    assert Y * X == X * Y - Z
    assert X * Y - Y * X == Z
    assert str(Y * X) == "-Z + X*Y"


def test_so3_reordering():
    X1, X2, X3 = (gen(G, i) for i in range(3))
    assert X3 * X1 == X1 * X3 + X2
    assert X2 * X1 == X1 * X2 - X3


def test_normal_order_word():
    assert normal_order(H, (1, 1, 0)) == PbwElement(H, {(1, 2, 0): 1, (0, 1, 1): -2})


@pytest.mark.parametrize("alg", [H, G])
def test_against_naive_rewriting(alg):
    for alpha in mi.up_to(3, 3):
        for beta in mi.up_to(3, 3):
            word = mi.word(alpha) + mi.word(beta)
            expected = naive_straighten(alg, {word: 1})
            got = {a: c for a, c in monomial_product(alg, alpha, beta).items() if c}
            assert got == expected


def _heisenberg_operator(element):
    # X = d/dt, Y = s*t, Z = s on C[s, t]: a faithful representation
    s, t = sp.symbols("s t")
    ops = [lambda f: sp.diff(f, t), lambda f: sp.expand(s * t * f), lambda f: sp.expand(s * f)]

    def apply(f):
        total = 0
        for alpha, c in element.terms.items():
            g = f
            for j in reversed(mi.word(alpha)):
                g = ops[j](g)
            total += (sp.Rational(c.re.numerator, c.re.denominator)
                      + sp.I * sp.Rational(c.im.numerator, c.im.denominator)) * g
        return sp.expand(total)

    return apply


@given(elements(H, 3), elements(H, 3))
def test_heisenberg_differential_oracle(a, b):
    s, t = sp.symbols("s t")
    f = t ** 6 + s * t ** 3 + 2 * t + 1
    lhs = _heisenberg_operator(a * b)(f)
    rhs = _heisenberg_operator(a)(_heisenberg_operator(b)(f))
    assert sp.expand(lhs - rhs) == 0


def _image(rep, e):
    out = la.zeros(rep.dim, rep.dim)
    for alpha, c in e.terms.items():
        out = la.add(out, la.scale(rep.monomial_matrix(alpha), c))
    return out


@pytest.mark.parametrize("rep", [fixtures.so3_defining(), fixtures.so3_spin_half(),
                                 fixtures.heisenberg_upper_triangular()])
@given(a=elements(G, 4), b=elements(G, 4))
def test_matrix_soundness(rep, a, b):
    # heisenberg and so(3) share dimension 3, so the same samples serve both
    a, b = PbwElement(rep.algebra, a.terms), PbwElement(rep.algebra, b.terms)
    assert _image(rep, a * b) == la.matmul(_image(rep, a), _image(rep, b))


@given(elements(G, 3), elements(G, 3), elements(G, 2))
def test_algebra_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * PbwElement.one(G) == a


@given(elements(H, 3), elements(H, 3), scalars)
def test_involution_laws(a, b, z):
    assert involution(a * b) == involution(b) * involution(a)
    assert involution(involution(a)) == a
    assert involution(a.scale(z)) == involution(a).scale(z)


def test_involution_on_words():
    X, Y, Z = (gen(H, i) for i in range(3))
    assert involution(X) == -X
    assert involution(X * Y) == Y * X
    assert involution(X * Y * Z) == -(Z * Y * X)


def test_conjugate():
    e = PbwElement(G, {(1, 0, 0): I, (0, 0, 0): Scalar(1, 2)})
    assert e.conjugate() == PbwElement(G, {(1, 0, 0): -I, (0, 0, 0): Scalar(1, -2)})


def test_coproduct_small():
    X = gen(H, 0)
    one = PbwElement.one(H)
    assert coproduct(X) == PbwTensor.pure(X, one) + PbwTensor.pure(one, X)
    expected = PbwTensor.pure(X * X, one) + PbwTensor.pure(X.scale(2), X) + PbwTensor.pure(one, X * X)
    assert coproduct(X * X) == expected


@pytest.mark.parametrize("alg", [H, G])
def test_coalgebra_laws(alg):
    for alpha in mi.up_to(3, 4):
        d = coproduct(PbwElement.monomial(alg, alpha))
        assert coproduct_at(d, 0) == coproduct_at(d, 1)
        assert tensor_flip(d) == d


@given(elements(G, 3), elements(G, 3))
def test_coproduct_is_morphism(a, b):
    assert coproduct(a * b) == coproduct(a) * coproduct(b)


def test_degree_and_truncation():
    e = PbwElement(H, {(2, 1, 0): 1, (0, 0, 0): Fraction(1, 2)})
    assert e.degree == 3
    assert PbwElement.zero(H).degree == float("-inf")
    assert e.truncate(2) == PbwElement.one(H, Fraction(1, 2))
    assert e.component(3) == PbwElement.monomial(H, (2, 1, 0))


def test_algebra_mismatch():
    with pytest.raises(AlgebraMismatch):
        gen(H, 0) * gen(G, 0)
