"""The dual E^dagger as truncated formal power series.

A :class:`DualFunctional` is known through its values ``a(X^alpha)`` on the
PBW basis for ``|alpha| <= order``.  Representation-backed functionals have
``order == UNBOUNDED`` and compute coefficients lazily.  Every operation
returns the largest order it can certify: products take the minimum of the
orders, acting with ``E`` loses ``deg E``.
"""

import math
import os
import threading

import mpmath

from . import multiindex as mi
from .errors import AlgebraMismatch, DimensionMismatch, InsufficientOrder, OrderExceeded
from .pbw import PbwElement, involution, monomial_product
from .scalar import ONE, ZERO, as_scalar

__all__ = [
    "UNBOUNDED",
    "DualFunctional",
    "PowerSeries",
    "RadiusEstimate",
    "evaluate",
    "dual_product",
    "act",
    "dual_involution",
    "to_power_series",
    "derivation_check",
    "radius_estimate",
    "precision_bits",
]

UNBOUNDED = math.inf


def precision_bits():
    return int(os.environ.get("WORKBENCH_PRECISION_BITS", "256"))


class DualFunctional:
    """Linear functional on E(g), given by a coefficient oracle ``alpha -> a(X^alpha)``."""

    def __init__(self, algebra, order, oracle, label=None):
        if order != UNBOUNDED and (not isinstance(order, int) or order < 0):
            raise ValueError(f"order must be a natural number or UNBOUNDED, got {order!r}")
        self.algebra = algebra
        self.order = order
        self.label = label
        self._oracle = oracle
        self._memo = {}
        self._lock = threading.Lock()

    @classmethod
    def from_table(cls, algebra, table, order, label=None):
        """Finite table; multi-indices missing from ``table`` have coefficient zero."""
        frozen = {}
        for alpha, c in table.items():
            alpha = tuple(alpha)
            if len(alpha) != algebra.dim:
                raise DimensionMismatch(f"multi-index {alpha} in algebra of dimension {algebra.dim}")
            if sum(alpha) > order:
                raise OrderExceeded(sum(alpha), order)
            frozen[alpha] = as_scalar(c)
        return cls(algebra, order, lambda alpha: frozen.get(alpha, ZERO), label)

    @classmethod
    def character(cls, algebra):
        """chi_0: evaluation at 1, i.e. the coefficient of the unit."""
        unit = mi.zero(algebra.dim)
        return cls(algebra, UNBOUNDED, lambda alpha: ONE if alpha == unit else ZERO, "chi0")

    @classmethod
    def zero(cls, algebra, order=UNBOUNDED):
        return cls(algebra, order, lambda alpha: ZERO, "0")

    def coeff(self, alpha):
        alpha = tuple(alpha)
        d = sum(alpha)
        if d > self.order:
            raise OrderExceeded(d, self.order)
        hit = self._memo.get(alpha)
        if hit is not None:
            return hit
        value = as_scalar(self._oracle(alpha))
        with self._lock:
            return self._memo.setdefault(alpha, value)

    __getitem__ = coeff

    def __call__(self, element):
        return evaluate(self, element)

    def table(self, order=None):
        """Dict of all coefficients up to ``order`` (default: own order, if finite)."""
        order = self._resolve(order)
        return {alpha: self.coeff(alpha) for alpha in mi.up_to(self.algebra.dim, order)}

    def truncate(self, order):
        order = self._resolve(order)
        return DualFunctional.from_table(self.algebra, self.table(order), order, self.label)

    def _resolve(self, order):
        if order is None:
            if self.order == UNBOUNDED:
                raise ValueError("an explicit order is needed for an unbounded functional")
            return self.order
        if order > self.order:
            raise OrderExceeded(order, self.order)
        return order

    def equal_to(self, other, order=None):
        """Exact comparison of coefficients up to ``order`` (default: common order)."""
        if order is None:
            order = min(self.order, other.order)
        return self.table(order) == other.table(order)

    def is_zero(self, order=None):
        return all(not c for c in self.table(order).values())

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("functionals live on different enveloping algebras")

    def __add__(self, other):
        self._check(other)
        return DualFunctional(self.algebra, min(self.order, other.order),
                              lambda alpha: self.coeff(alpha) + other.coeff(alpha))

    def __sub__(self, other):
        self._check(other)
        return DualFunctional(self.algebra, min(self.order, other.order),
                              lambda alpha: self.coeff(alpha) - other.coeff(alpha))

    def __neg__(self):
        return DualFunctional(self.algebra, self.order, lambda alpha: -self.coeff(alpha))

    def scale(self, c):
        c = as_scalar(c)
        return DualFunctional(self.algebra, self.order, lambda alpha: c * self.coeff(alpha))

    def __mul__(self, other):
        if isinstance(other, DualFunctional):
            return dual_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<DualFunctional{name} dim={self.algebra.dim} order={self.order}>"


def evaluate(a, element):
    """a(E) = sum_alpha a(X^alpha) * [coefficient of X^alpha in E]."""
    if a.algebra != element.algebra:
        raise AlgebraMismatch("functional and element live on different algebras")
    if element.degree > a.order:
        raise OrderExceeded(element.degree, a.order)
    total = ZERO
    for alpha, c in element.terms.items():
        total = total + c * a.coeff(alpha)
    return total


def dual_product(a, b):
    """ab = (a (x) b) Delta, via the binomial coproduct of PBW monomials."""
    a._check(b)

    def oracle(alpha):
        total = ZERO
        for beta in mi.below(alpha):
            total = total + mi.binomial(alpha, beta) * (a.coeff(beta) * b.coeff(mi.sub(alpha, beta)))
        return total

    return DualFunctional(a.algebra, min(a.order, b.order), oracle)


def act(element, a):
    """Module action (E a)(F) = a(conj(E)^dagger F).

    With the antilinear adjoint, conj(E)^dagger is the linear involution of E,
    so the action is linear in E.
    """
    if element.algebra != a.algebra:
        raise AlgebraMismatch("element and functional live on different algebras")
    if element.degree > a.order:
        raise OrderExceeded(element.degree, a.order)
    alg = a.algebra
    op = involution(element)

    def oracle(alpha):
        total = ZERO
        for beta, c in op.terms.items():
            for gamma, v in monomial_product(alg, beta, alpha).items():
                total = total + c * v * a.coeff(gamma)
        return total

    order = a.order - element.degree if element else a.order
    return DualFunctional(alg, order, oracle)


def dual_involution(a):
    """a^dagger: conjugate every coefficient (PBW monomials are real)."""
    return DualFunctional(a.algebra, a.order, lambda alpha: a.coeff(alpha).conjugate(),
                          f"{a.label}^dagger" if a.label else None)


def derivation_check(x, a, b):
    """X(ab) - (Xa)b - a(Xb) for X in g; identically zero by the derivation law."""
    alg = a.algebra
    X = x if isinstance(x, PbwElement) else PbwElement.from_vector(alg, list(x))
    if X.degree > 1:
        raise ValueError("derivation_check expects an element of g")
    residual = act(X, dual_product(a, b)) - (dual_product(act(X, a), b) + dual_product(a, act(X, b)))
    order = min(a.order, b.order) - 1
    if order < 0:
        raise OrderExceeded(1, min(a.order, b.order))
    if order == UNBOUNDED:
        return residual
    return residual.truncate(order)


# power series ------------------------------------------------------------------

class PowerSeries:
    """Truncated series sum_alpha c_alpha x^alpha with every |alpha| <= order stored."""

    def __init__(self, nvars, order, coefficients=None):
        self.nvars = nvars
        self.order = order
        coefficients = coefficients or {}
        self.coefficients = {
            alpha: as_scalar(coefficients.get(alpha, ZERO)) for alpha in mi.up_to(nvars, order)
        }
        extra = set(map(tuple, coefficients)) - set(self.coefficients)
        if extra:
            raise OrderExceeded(max(sum(a) for a in extra), order)

    def __getitem__(self, alpha):
        return self.coefficients[tuple(alpha)]

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (self.nvars, self.order, self.coefficients) == (other.nvars, other.order, other.coefficients)

    def truncate(self, order):
        if order > self.order:
            raise OrderExceeded(order, self.order)
        return PowerSeries(self.nvars, order,
                           {a: c for a, c in self.coefficients.items() if sum(a) <= order})

    def __mul__(self, other):
        """Cauchy product truncated at the smaller order."""
        order = min(self.order, other.order)
        out = {}
        for a, c in self.coefficients.items():
            if not c:
                continue
            for b, d in other.coefficients.items():
                if d and sum(a) + sum(b) <= order:
                    k = mi.add(a, b)
                    out[k] = out.get(k, ZERO) + c * d
        return PowerSeries(self.nvars, order, out)

    def restrict(self, direction):
        """Scalar series c_k with x = t * direction."""
        direction = [as_scalar(v) for v in direction]
        if len(direction) != self.nvars:
            raise DimensionMismatch(f"direction of length {len(direction)} for {self.nvars} variables")
        out = [ZERO] * (self.order + 1)
        for alpha, c in self.coefficients.items():
            if c:
                term = c
                for v, e in zip(direction, alpha):
                    term = term * v ** e
                out[sum(alpha)] = out[sum(alpha)] + term
        return out

    def serialize(self):
        lines = []
        for alpha in mi.up_to(self.nvars, self.order):
            idx = ",".join(str(a) for a in alpha)
            lines.append(f"alpha= {idx} coeff= {self.coefficients[alpha].exact_str()}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"<PowerSeries nvars={self.nvars} order={self.order}>"


def to_power_series(a, order):
    """f_a(x) = sum_alpha x^alpha / alpha! * a(X^alpha), truncated at ``order``."""
    if order > a.order:
        raise OrderExceeded(order, a.order)
    n = a.algebra.dim
    return PowerSeries(n, order, {
        alpha: a.coeff(alpha) / mi.mfactorial(alpha) for alpha in mi.up_to(n, order)
    })


class RadiusEstimate:
    """Root-test diagnostic; ``value`` is an mpmath number (``inf`` allowed)."""

    def __init__(self, value, order, precision, ratios):
        self.value = value
        self.order = order
        self.precision = precision
        self.ratios = ratios

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return f"RadiusEstimate({mpmath.nstr(self.value, 15)}, order={self.order}, bits={self.precision})"


def radius_estimate(series, direction):
    """Root-test estimate of the convergence radius along ``direction``.

    The restricted coefficients c_k give ratios |c_k|^(-1/k); the estimate is
    the minimum over the nonzero ratios in the upper half of the available
    range, the finite stand-in for a liminf.  Diagnostic only.
    """
    coeffs = series.restrict(direction)
    nonzero = [k for k, c in enumerate(coeffs) if c]
    bits = precision_bits()
    if not nonzero:
        return RadiusEstimate(mpmath.inf, series.order, bits, {})
    if len(nonzero) < 4:
        raise InsufficientOrder(f"only {len(nonzero)} nonzero coefficients up to order {series.order}")
    ratios = {}
    with mpmath.workprec(bits):
        for k in nonzero:
            if k == 0:
                continue
            m2 = coeffs[k].abs2()
            modulus = mpmath.sqrt(mpmath.mpf(m2.numerator) / m2.denominator)
            ratios[k] = modulus ** (mpmath.mpf(-1) / k)
        tail = [k for k in ratios if k >= series.order / 2] or list(ratios)
        value = min(ratios[k] for k in tail)
    return RadiusEstimate(value, series.order, bits, ratios)
