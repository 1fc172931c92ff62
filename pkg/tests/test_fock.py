from fractions import Fraction
from itertools import product as cartesian

import mpmath
import pytest
from hypothesis import given, strategies as st

from formalgeom.errors import DegreeMismatch, DimensionMismatch, NonpositiveRadius, SpaceMismatch
from formalgeom.fock import (FSpace, SymPolynomial, SymTensor, character_check, evaluate_poly, poly_multiply,
                             r_norm, squared_norms, sym_inner, symmetrize, tensor_inner, tensor_symmetrizer,
                             to_tensor)
from formalgeom.scalar import I, ONE, ZERO, Scalar

from conftest import real_scalars, scalars


def polys(space, max_degree=4, max_terms=4):
    key = st.integers(0, max_degree).flatmap(
        lambda n: st.lists(st.integers(0, space.dim - 1), min_size=n, max_size=n).map(lambda k: tuple(sorted(k))))
    return st.dictionaries(key, scalars, max_size=max_terms).map(lambda d: SymPolynomial.from_terms(space, d))


spaces = st.integers(1, 3).map(FSpace)


def with_pair(max_degree):
    return spaces.flatmap(lambda sp: st.tuples(st.just(sp), polys(sp, max_degree), polys(sp, max_degree),
                                               st.lists(scalars, min_size=sp.dim, max_size=sp.dim)))


space_and_pair = with_pair(4)
small_pair = with_pair(3)  # the permutation oracle is factorial in the product degree


def full_tensor(p):
    """Plain tensor (all degrees) of a polynomial."""
    out = {}
    for t in p.components.values():
        out.update(to_tensor(t))
    return out


def tensor_product(s, t):
    out = {}
    for k1, c1 in s.items():
        for k2, c2 in t.items():
            out[k1 + k2] = out.get(k1 + k2, ZERO) + c1 * c2
    return out


def omega_xi(xi, max_degree):
    """Coherent vector truncated: sum_n xi^(x)n over all index tuples."""
    out = {}
    for n in range(max_degree + 1):
        for key in cartesian(range(len(xi)), repeat=n):
            c = ONE
            for i in key:
                c = c * xi[i]
            out[key] = c
    return out


@given(small_pair)
def test_sym_inner_matches_tensor_oracle(data):
    space, p, q, _ = data
    for n in set(p.components) & set(q.components):
        assert sym_inner(p.components[n], q.components[n]) == tensor_inner(
            to_tensor(p.components[n]), to_tensor(q.components[n]))


@given(small_pair)
def test_product_is_symmetrized_tensor_product(data):
    space, p, q, _ = data
    expected = tensor_symmetrizer(tensor_product(full_tensor(p), full_tensor(q)))
    assert full_tensor(poly_multiply(p, q)) == expected


@given(small_pair)
def test_evaluation_is_inner_with_coherent_vector(data):
    space, p, q, xi = data
    assert evaluate_poly(p, xi) == tensor_inner(full_tensor(p), omega_xi(xi, max(p.degree, 0)))


@given(space_and_pair)
def test_evaluation_homomorphism(data):
    space, p, q, xi = data
    assert evaluate_poly(p * q, xi) == evaluate_poly(p, xi) * evaluate_poly(q, xi)
    assert evaluate_poly(p + q, xi) == evaluate_poly(p, xi) + evaluate_poly(q, xi)


@given(space_and_pair)
def test_degree_contraction(data):
    space, p, q, _ = data
    for n, t in p.components.items():
        for m, s in q.components.items():
            prod = poly_multiply(SymPolynomial(space, {n: t}), SymPolynomial(space, {m: s}))
            assert squared_norms(prod).get(n + m, 0) <= sym_inner(t, t).re * sym_inner(s, s).re


@given(space_and_pair, st.sampled_from([Fraction(1, 3), Fraction(1), Fraction(5, 2)]))
def test_r_norm_submultiplicative(data, r):
    space, p, q, _ = data
    with mpmath.workprec(256):
        slack = r_norm(p, r)[0] * r_norm(q, r)[0] - r_norm(p * q, r)[0]
        assert slack >= -mpmath.mpf(10) ** -20


@given(space_and_pair)
def test_r_norm_monotone(data):
    space, p, _, _ = data
    norms = [r_norm(p, r)[0] for r in (Fraction(1, 4), Fraction(1), Fraction(3))]
    assert norms[0] <= norms[1] <= norms[2]


def test_r_norm_values():
    space = FSpace(2)
    p = SymPolynomial.from_terms(space, {(): 1, (0, 1): 2})
    total, sq = r_norm(p, 2)
    assert sq == {0: 1, 2: 2}  # ||2 e0 e1||^2 = 4 * 1!1!/2! = 2
    with mpmath.workprec(256):
        assert abs(total - (1 + 4 * mpmath.sqrt(2))) < mpmath.mpf(10) ** -60
    with pytest.raises(NonpositiveRadius):
        r_norm(p, 0)


@given(st.dictionaries(st.lists(st.integers(0, 2), min_size=3, max_size=3).map(tuple), scalars, max_size=4))
def test_symmetrizer_is_orthogonal_projection(t):
    pt = tensor_symmetrizer(t)
    assert tensor_symmetrizer(pt) == pt
    s = {(0, 1, 2): ONE, (2, 2, 1): I}
    assert tensor_inner(pt, s) == tensor_inner(t, tensor_symmetrizer(s))


def test_symmetrize_collects_orderings():
    space = FSpace(2)
    t = symmetrize(space, {(0, 1): 1, (1, 0): 1}, 2)
    assert t.coeffs == {(0, 1): Scalar(2)}


def test_dagger_and_character():
    space = FSpace(2)
    p = SymPolynomial.from_terms(space, {(0,): I, (0, 1): 1})
    assert p.dagger() == SymPolynomial.from_terms(space, {(0,): -I, (0, 1): 1})
    gens = [p, SymPolynomial.linear(space, [1, 2])]
    assert character_check(gens, [Fraction(1, 2), -3]).passed
    # reality needs J xi = xi; a non-real point breaks it but keeps multiplicativity
    report = character_check(gens, [I, 1])
    assert {kind for kind, _, _ in report.failures} == {"real"}


@given(st.lists(real_scalars, min_size=2, max_size=2))
def test_character_real_points(xi):
    space = FSpace(2)
    gens = [SymPolynomial.from_terms(space, {(0,): Scalar(1, 1), (1, 1): 2}), SymPolynomial.constant(space, I)]
    assert character_check(gens, xi).passed


def test_character_negative_control():
    space = FSpace(1)
    gens = [SymPolynomial.linear(space, [1])]
    report = character_check(gens, [3], product=lambda a, b: a + b)
    assert not report.passed


def test_swap_J():
    space = FSpace(2, [[0, 1], [1, 0]])
    p = SymPolynomial.linear(space, [1, 0])
    assert p.dagger() == SymPolynomial.linear(space, [0, 1])
    assert character_check([p], [Scalar(1, 2), Scalar(1, -2)]).passed


def test_errors():
    a, b = FSpace(1), FSpace(2)
    with pytest.raises(SpaceMismatch):
        SymPolynomial.constant(a, 1) + SymPolynomial.constant(b, 1)
    with pytest.raises(DegreeMismatch):
        SymTensor(a, 2, {(0,): 1})
    with pytest.raises(DimensionMismatch):
        SymTensor(a, 1, {(1,): 1})
    with pytest.raises(DimensionMismatch):
        evaluate_poly(SymPolynomial.constant(b, 1), [1])
    with pytest.raises(DimensionMismatch):
        FSpace(2, [[1, 0], [0, 2]])


def test_serialize():
    space = FSpace(2)
    p = SymPolynomial.from_terms(space, {(1, 0): Fraction(1, 3), (): -1})
    assert p.serialize() == "deg=0 multiset= coeff=-1/1+0/1i\ndeg=2 multiset=1,2 coeff=1/3+0/1i\n"
