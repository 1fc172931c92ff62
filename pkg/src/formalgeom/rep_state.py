"""Matrix representations, cyclic data, states and representative functionals."""

import threading

from . import linalg as la
from . import multiindex as mi
from .dual import UNBOUNDED, DualFunctional, act, dual_involution
from .errors import AlgebraMismatch, DimensionMismatch, PositivityFailure, RepresentationError
from .pbw import PbwElement
from .scalar import I, ZERO, as_scalar

__all__ = [
    "MatrixRep",
    "CyclicData",
    "MomentState",
    "apply",
    "state_from_rep",
    "representative_functional",
    "equivariance_residual",
    "moment_state",
    "orbit_algebra_generators",
]


class MatrixRep:
    """Matrices pi(X_i) over Gaussian rationals, checked to satisfy the brackets."""

    def __init__(self, algebra, matrices, unitary_flag=False):
        if len(matrices) != algebra.dim:
            raise DimensionMismatch(f"{len(matrices)} matrices for an algebra of dimension {algebra.dim}")
        mats = [la.matrix(m) for m in matrices]
        d = len(mats[0]) if mats else 0
        if d == 0:
            raise DimensionMismatch("representation space must be nonzero")
        for m in mats:
            if len(m) != d or any(len(r) != d for r in m):
                raise DimensionMismatch(f"all matrices must be {d}x{d}")
        self.algebra = algebra
        self.dim = d
        self.matrices = mats
        self.unitary_flag = unitary_flag
        for i in range(algebra.dim):
            for j in range(i + 1, algebra.dim):
                lhs = la.sub(la.matmul(mats[i], mats[j]), la.matmul(mats[j], mats[i]))
                rhs = la.zeros(d, d)
                for k, c in algebra.bracket_basis(i, j).items():
                    rhs = la.add(rhs, la.scale(mats[k], c))
                if lhs != rhs:
                    raise RepresentationError(
                        f"[pi(X{i + 1}), pi(X{j + 1})] does not match the bracket")
        if unitary_flag:
            for i, m in enumerate(mats):
                if la.adjoint(m) != la.scale(m, -1):
                    raise RepresentationError(f"pi(X{i + 1}) is not skew-Hermitian")
        self._vectors = {}
        self._lock = threading.Lock()

    def monomial_matrix(self, alpha):
        out = la.identity(self.dim)
        for j in mi.word(alpha):
            out = la.matmul(out, self.matrices[j])
        return out

    def monomial_vector(self, alpha, v):
        """pi(X1)^a1 ... pi(Xn)^an v, memoized for the cyclic vector."""
        v = tuple(v)
        key = (tuple(alpha), v)
        hit = self._vectors.get(key)
        if hit is not None:
            return hit
        first = next((i for i, a in enumerate(alpha) if a), None)
        if first is None:
            result = list(v)
        else:
            rest = mi.sub(alpha, mi.unit(self.algebra.dim, first))
            result = la.matvec(self.matrices[first], self.monomial_vector(rest, v))
        with self._lock:
            return self._vectors.setdefault(key, result)


def _vector(v, d):
    v = [as_scalar(x) for x in v]
    if len(v) != d:
        raise DimensionMismatch(f"vector of length {len(v)} in a {d}-dimensional space")
    return v


def apply(element, v, rep):
    """pi(E) v."""
    if element.algebra != rep.algebra:
        raise AlgebraMismatch("element and representation use different algebras")
    v = _vector(v, rep.dim)
    out = [ZERO] * rep.dim
    for alpha, c in element.terms.items():
        w = rep.monomial_vector(alpha, v)
        out = [x + c * y for x, y in zip(out, w)]
    return out


class CyclicData:
    """Representation with unit vector nu and anti-unitary J v = U conj(v).

    Validated: <nu, nu> = 1, U unitary, J nu = nu, J commutes with every pi(X_i).
    Cyclicity of nu is not assumed.
    """

    def __init__(self, rep, nu, unitary=None):
        self.rep = rep
        d = rep.dim
        self.nu = _vector(nu, d)
        self.unitary = la.identity(d) if unitary is None else la.matrix(unitary)
        u = self.unitary
        if len(u) != d or any(len(r) != d for r in u):
            raise DimensionMismatch(f"J-unitary must be {d}x{d}")
        if la.inner(self.nu, self.nu) != 1:
            raise RepresentationError("cyclic vector must satisfy <nu, nu> = 1")
        if la.matmul(la.adjoint(u), u) != la.identity(d):
            raise RepresentationError("J-unitary U is not unitary")
        if self.J(self.nu) != self.nu:
            raise RepresentationError("J nu != nu")
        for i, m in enumerate(rep.matrices):
            if la.matmul(u, la.conj(m)) != la.matmul(m, u):
                raise RepresentationError(f"J does not commute with pi(X{i + 1})")

    @property
    def algebra(self):
        return self.rep.algebra

    def J(self, v):
        return la.matvec(self.unitary, [x.conjugate() for x in v])


def state_from_rep(cd):
    """omega(X^alpha) = <nu, pi(X^alpha) nu>."""
    return representative_functional(cd, cd.nu, label="omega")


def representative_functional(cd, xi, label=None):
    """e_xi(X^alpha) = <J xi, pi(X^alpha) nu>."""
    xi = _vector(xi, cd.rep.dim)
    jxi = cd.J(xi)
    rep, nu = cd.rep, cd.nu

    def oracle(alpha):
        return la.inner(jxi, rep.monomial_vector(alpha, nu))

    return DualFunctional(cd.algebra, UNBOUNDED, oracle, label or "e_xi")


def equivariance_residual(cd, element, xi, order):
    """E e_xi - e_{E xi}, truncated at ``order``; identically zero."""
    lhs = act(element, representative_functional(cd, xi))
    rhs = representative_functional(cd, apply(element, xi, cd.rep))
    return (lhs - rhs).truncate(order)


class MomentState:
    """Moment candidates m_0..m_N on the one-dimensional algebra."""

    def __init__(self, algebra, moments):
        if algebra.dim != 1:
            raise DimensionMismatch("moment states live on a one-dimensional algebra")
        moments = [as_scalar(m) for m in moments]
        if not moments:
            raise DimensionMismatch("at least m_0 is required")
        if any(not m.is_real() for m in moments):
            raise RepresentationError("moments must be real rationals")
        if moments[0] != 1:
            raise RepresentationError("moment states need m_0 = 1")
        self.algebra = algebra
        self.moments = moments

    @property
    def order(self):
        return len(self.moments) - 1


def moment_state(ms, certify=True):
    """Finite-table functional with coefficient i^k m_k at X^k.

    With ``certify`` the twisted Hankel Gram is checked for positive
    semidefiniteness at the largest order it supports.
    """
    table = {(k,): (I ** k) * m for k, m in enumerate(ms.moments)}
    omega = DualFunctional.from_table(ms.algebra, table, ms.order, "omega")
    if certify:
        from .gns import check_positivity, gram_matrix

        cert = check_positivity(gram_matrix(omega, ms.order // 2))
        if not cert.psd:
            raise PositivityFailure(
                f"moment sequence is not positive: witness {cert.witness} gives {cert.witness_value}",
                cert.witness, cert.witness_value)
    return omega


def orbit_algebra_generators(cd, seeds, max_degree):
    """act(X^alpha, e_xi) for |alpha| <= max_degree and each seed, each followed by its involution."""
    alg = cd.algebra
    out = []
    for xi in seeds:
        e = representative_functional(cd, xi)
        for alpha in mi.up_to(alg.dim, max_degree):
            a = act(PbwElement.monomial(alg, alpha), e)
            out.append(a)
            out.append(dual_involution(a))
    return out
