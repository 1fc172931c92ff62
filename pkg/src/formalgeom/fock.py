"""Polynomials C[H] over a finite-dimensional Hilbert space H = C^d.

A degree-n component is stored in the monomial basis of the symmetric power
H^n: the key ``(i1 <= ... <= in)`` stands for ``P+(e_i1 (x) ... (x) e_in)``.
With that identification the product is multiset union and

    <e^m, e^k> = [m == k] * prod(mult!) / n!.
"""

import math
from collections import Counter
from fractions import Fraction
from itertools import permutations

import mpmath

from . import linalg as la
from .dual import precision_bits
from .errors import DegreeMismatch, DimensionMismatch, NonpositiveRadius, SpaceMismatch
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "FSpace",
    "SymTensor",
    "SymPolynomial",
    "symmetrize",
    "sym_inner",
    "poly_multiply",
    "r_norm",
    "evaluate_poly",
    "character_check",
    "tensor_symmetrizer",
    "tensor_inner",
    "to_tensor",
]


class FSpace:
    """C^d with the standard form and J v = U conj(v)."""

    def __init__(self, dim, unitary=None):
        if dim <= 0:
            raise DimensionMismatch("space dimension must be positive")
        self.dim = dim
        self.unitary = la.identity(dim) if unitary is None else la.matrix(unitary)
        if la.matmul(la.adjoint(self.unitary), self.unitary) != la.identity(dim):
            raise DimensionMismatch("J-unitary is not unitary")

    def J(self, v):
        return la.matvec(self.unitary, [as_scalar(x).conjugate() for x in v])

    def __eq__(self, other):
        return isinstance(other, FSpace) and self.dim == other.dim and self.unitary == other.unitary

    def __hash__(self):
        return hash(self.dim)


def _mult_weight(key):
    """prod(mult!) / n! for a multiset key."""
    w = Fraction(1, math.factorial(len(key)))
    for c in Counter(key).values():
        w *= math.factorial(c)
    return w


class SymTensor:
    """Homogeneous element of H^n."""

    __slots__ = ("space", "degree", "coeffs")

    def __init__(self, space, degree, coeffs=None):
        self.space = space
        self.degree = degree
        clean = {}
        for key, c in (coeffs or {}).items():
            key = tuple(sorted(key))
            if len(key) != degree:
                raise DegreeMismatch(f"multiset {key} in a degree-{degree} tensor")
            if any(not 0 <= i < space.dim for i in key):
                raise DimensionMismatch(f"basis index in {key} outside 0..{space.dim - 1}")
            c = as_scalar(c)
            if c:
                clean[key] = clean.get(key, ZERO) + c
        self.coeffs = {k: c for k, c in clean.items() if c}

    def __eq__(self, other):
        return (isinstance(other, SymTensor) and self.degree == other.degree
                and self.space == other.space and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"SymTensor(deg={self.degree}, {self.coeffs})"


def symmetrize(space, tensor, degree):
    """P+ applied to a plain tensor ``{(i1, ..., in): c}``, in multiset coordinates."""
    out = {}
    for key, c in tensor.items():
        if len(key) != degree:
            raise DegreeMismatch(f"tensor index {key} in degree {degree}")
        k = tuple(sorted(key))
        out[k] = out.get(k, ZERO) + as_scalar(c)
    return SymTensor(space, degree, out)


def to_tensor(t):
    """Plain tensor of P+(e_m) for every multiset coordinate."""
    out = {}
    for key, c in t.coeffs.items():
        arrangements = set(permutations(key))
        w = Fraction(1, len(arrangements))
        for arr in arrangements:
            out[arr] = out.get(arr, ZERO) + c * w
    return {k: v for k, v in out.items() if v}


def tensor_inner(s, t):
    """<s, t> on H^(x)n for plain tensors in the standard basis."""
    total = ZERO
    for key, c in s.items():
        d = t.get(key)
        if d:
            total = total + c.conjugate() * d
    return total


def tensor_symmetrizer(tensor):
    """(1/n!) sum over S_n, acting on a plain tensor by permuting factors."""
    out = {}
    for key, c in tensor.items():
        n = len(key)
        perms = list(permutations(range(n)))
        w = Fraction(1, len(perms))
        for sigma in perms:
            new = tuple(key[sigma[k]] for k in range(n))
            out[new] = out.get(new, ZERO) + as_scalar(c) * w
    return {k: v for k, v in out.items() if v}


def sym_inner(phi, psi):
    if phi.degree != psi.degree:
        raise DegreeMismatch(f"degrees {phi.degree} and {psi.degree}")
    if phi.space != psi.space:
        raise SpaceMismatch("tensors live on different spaces")
    total = ZERO
    for key, c in phi.coeffs.items():
        d = psi.coeffs.get(key)
        if d:
            total = total + c.conjugate() * d * _mult_weight(key)
    return total


class SymPolynomial:
    """Finite sum of symmetric tensors of various degrees: an element of C[H]."""

    __slots__ = ("space", "components")

    def __init__(self, space, components=None):
        self.space = space
        comps = {}
        for n, t in (components or {}).items():
            if not isinstance(t, SymTensor):
                t = SymTensor(space, n, t)
            if t.degree != n:
                raise DegreeMismatch(f"component of degree {t.degree} stored under {n}")
            if t.space != space:
                raise SpaceMismatch("component lives on a different space")
            if t.coeffs:
                comps[n] = t
        self.components = dict(sorted(comps.items()))

    @classmethod
    def constant(cls, space, c):
        return cls(space, {0: {(): c}})

    @classmethod
    def linear(cls, space, vector):
        return cls(space, {1: {(i,): c for i, c in enumerate(vector)}})

    @classmethod
    def from_terms(cls, space, terms):
        """``terms``: mapping multiset tuple -> coefficient, any degrees."""
        comps = {}
        for key, c in terms.items():
            comps.setdefault(len(key), {})
            k = tuple(sorted(key))
            comps[len(key)][k] = comps[len(key)].get(k, ZERO) + as_scalar(c)
        return cls(space, comps)

    def terms(self):
        return {k: c for t in self.components.values() for k, c in t.coeffs.items()}

    @property
    def degree(self):
        return max(self.components, default=-1)

    def __add__(self, other):
        _same(self, other)
        out = self.terms()
        for k, c in other.terms().items():
            out[k] = out.get(k, ZERO) + c
        return SymPolynomial.from_terms(self.space, out)

    def __neg__(self):
        return SymPolynomial.from_terms(self.space, {k: -c for k, c in self.terms().items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return SymPolynomial.from_terms(self.space, {k: c * v for k, v in self.terms().items()})

    def __mul__(self, other):
        if isinstance(other, SymPolynomial):
            return poly_multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, SymPolynomial) and self.space == other.space and self.terms() == other.terms()

    def dagger(self):
        """Involution induced by J: apply J to every tensor factor."""
        out = SymPolynomial(self.space)
        images = [SymPolynomial.linear(self.space, self.space.J([ONE if k == i else ZERO for k in range(self.space.dim)]))
                  for i in range(self.space.dim)]
        for key, c in self.terms().items():
            term = SymPolynomial.constant(self.space, c.conjugate())
            for i in key:
                term = term * images[i]
            out = out + term
        return out

    def serialize(self):
        lines = []
        for n, t in self.components.items():
            for key in sorted(t.coeffs):
                ms = ",".join(str(i + 1) for i in key)
                lines.append(f"deg={n} multiset={ms} coeff={t.coeffs[key].exact_str(spaced=False)}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"SymPolynomial({self.terms()})"


def _same(a, b):
    if a.space != b.space:
        raise SpaceMismatch("polynomials live on different spaces")


def poly_multiply(a, b):
    """phi psi = P+(phi (x) psi), i.e. multiset union in the monomial basis."""
    _same(a, b)
    out = {}
    for k1, c1 in a.terms().items():
        for k2, c2 in b.terms().items():
            k = tuple(sorted(k1 + k2))
            out[k] = out.get(k, ZERO) + c1 * c2
    return SymPolynomial.from_terms(a.space, out)


def squared_norms(p):
    """{n: ||phi_n||^2} as exact rationals."""
    return {n: sym_inner(t, t).re for n, t in p.components.items()}


def r_norm(p, r):
    """sum_n ||phi_n|| r^n in high precision; exact squared norms alongside."""
    r = Fraction(r)
    if r <= 0:
        raise NonpositiveRadius(f"radius must be positive, got {r}")
    sq = squared_norms(p)
    with mpmath.workprec(precision_bits()):
        rr = mpmath.mpf(r.numerator) / r.denominator
        total = mpmath.mpf(0)
        for n, s in sq.items():
            total += mpmath.sqrt(mpmath.mpf(s.numerator) / s.denominator) * rr ** n
    return total, sq


def evaluate_poly(p, xi):
    """Phi(xi) = <Phi, Omega_xi> = sum_n <phi_n, xi^n>, conjugate-linear in Phi."""
    xi = [as_scalar(x) for x in xi]
    if len(xi) != p.space.dim:
        raise DimensionMismatch(f"point of length {len(xi)} in a {p.space.dim}-dimensional space")
    total = ZERO
    for key, c in p.terms().items():
        term = c.conjugate()
        for i in key:
            term = term * xi[i]
        total = total + term
    return total


class CharacterReport:
    def __init__(self, point, failures, checked):
        self.point = point
        self.failures = failures
        self.checked = checked

    @property
    def passed(self):
        return not self.failures

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return f"<CharacterReport passed={self.passed} checked={self.checked} failures={len(self.failures)}>"


def character_check(generators, xi, product=poly_multiply):
    """Test multiplicativity on every ordered pair and reality on every generator
    for chi = evaluate_poly(., xi).  ``product`` may be replaced to run a
    negative control.
    """
    failures = []
    checked = 0
    values = [evaluate_poly(g, xi) for g in generators]
    for i, g in enumerate(generators):
        for j, h in enumerate(generators):
            checked += 1
            if evaluate_poly(product(g, h), xi) != values[i] * values[j]:
                failures.append(("multiplicative", i, j))
        checked += 1
        if evaluate_poly(g.dagger(), xi) != values[i].conjugate():
            failures.append(("real", i, i))
    return CharacterReport(list(xi), failures, checked)
