"""Truncated GNS construction.

For a state omega the Gram matrix on PBW monomials of degree <= N is
``G[a][b] = omega((X^a)^dagger X^b)``.  Extended sesquilinearly,
``v* G v = omega(A* A)`` with ``A = sum v_a X^a`` and ``A* = conj(A)^dagger``.
Its kernel is the truncated null ideal, and the quotient carries the
action of the generators.
"""

from . import linalg as la
from . import multiindex as mi
from .errors import OrderExceeded, PositivityFailure, Unstabilized
from .pbw import PbwElement, involution, monomial_product
from .scalar import ONE, ZERO

__all__ = [
    "GramMatrix",
    "Certificate",
    "GnsModule",
    "gram_matrix",
    "check_positivity",
    "gns_quotient",
    "generator_matrices",
    "check_left_ideal",
    "is_skew_hermitian",
]


class GramMatrix:
    def __init__(self, algebra, order, basis, entries):
        self.algebra = algebra
        self.order = order
        self.basis = basis
        self.entries = entries

    @property
    def size(self):
        return len(self.basis)

    def leading(self, order):
        """Gram matrix of a lower order: a leading principal block in graded-lex order."""
        k = len(mi.up_to(self.algebra.dim, order))
        return GramMatrix(self.algebra, order, self.basis[:k], [r[:k] for r in self.entries[:k]])

    def is_hermitian(self):
        n = self.size
        return all(self.entries[j][i] == self.entries[i][j].conjugate() for i in range(n) for j in range(i, n))


def gram_matrix(omega, order):
    if 2 * order > omega.order:
        raise OrderExceeded(2 * order, omega.order)
    alg = omega.algebra
    basis = list(mi.up_to(alg.dim, order))
    daggers = [involution(PbwElement.monomial(alg, a)) for a in basis]
    entries = []
    for dag in daggers:
        row = []
        for b in basis:
            total = ZERO
            for g, c in dag.terms.items():
                for h, v in monomial_product(alg, g, b).items():
                    total = total + c * v * omega.coeff(h)
            row.append(total)
        entries.append(row)
    return GramMatrix(alg, order, basis, entries)


def _element(alg, basis, vector):
    return PbwElement(alg, {a: c for a, c in zip(basis, vector) if c})


class Certificate:
    """Result of :func:`check_positivity`.

    When ``psd`` is false, ``witness`` is a coefficient vector v over the
    Gram basis with ``v* G v = witness_value < 0`` and ``witness_element``
    the corresponding PBW element A with ``omega(A* A) < 0``.
    """

    def __init__(self, gram, psd, pivots, witness=None, witness_value=None, reason=""):
        self.gram = gram
        self.psd = psd
        self.pivots = pivots
        self.witness = witness
        self.witness_value = witness_value
        self.reason = reason

    @property
    def witness_element(self):
        if self.witness is None:
            return None
        return _element(self.gram.algebra, self.gram.basis, self.witness)

    def __bool__(self):
        return self.psd

    def __repr__(self):
        return f"<Certificate psd={self.psd} order={self.gram.order}>"


def check_positivity(gram):
    """Exact Hermitian LDL* with diagonal pivoting; a PSD certificate or a witness."""
    n = gram.size
    g = gram.entries
    for i in range(n):
        for j in range(i, n):
            if g[j][i] != g[i][j].conjugate():
                return Certificate(gram, False, [], reason=f"Gram matrix not Hermitian at {gram.basis[i]}, {gram.basis[j]}")
    res = la.hermitian_ldl(g)
    pivots = [(gram.basis[i], d) for i, d in res.pivots]
    if res.psd:
        return Certificate(gram, True, pivots)
    return Certificate(gram, False, pivots, res.witness, res.witness_value, "negative direction found")


class GnsModule:
    """Truncated GNS data at order N.

    ``coords`` maps a vector over the Gram basis to quotient coordinates;
    ``action[i]`` sends the quotient classes of degree <= N-1 representatives
    to quotient coordinates after multiplication by X_i.
    """

    def __init__(self, omega, gram, pivots, null_vectors, rank_profile, coords, action, stabilized):
        self.omega = omega
        self.gram = gram
        self.order = gram.order
        self.algebra = gram.algebra
        self.pivots = pivots
        self.quotient_basis = [gram.basis[p] for p in pivots]
        self.gram_reduced = [[gram.entries[i][j] for j in pivots] for i in pivots]
        self.null_vectors = null_vectors
        self.null_basis = [_element(self.algebra, gram.basis, v) for v in null_vectors]
        self.rank_profile = rank_profile
        self.coords = coords
        self.cyclic_class = [row[0] for row in coords]
        self.action = action
        self.stabilized = stabilized

    @property
    def rank(self):
        return len(self.pivots)

    def coordinates(self, element):
        """Quotient coordinates of a PBW element of degree <= N."""
        if element.degree > self.order:
            raise OrderExceeded(element.degree, self.order)
        index = {a: k for k, a in enumerate(self.gram.basis)}
        out = [ZERO] * self.rank
        for a, c in element.terms.items():
            col = index[a]
            out = [x + c * row[col] for x, row in zip(out, self.coords)]
        return out

    def inner(self, u, v):
        """<u, v> on the quotient through ``gram_reduced``."""
        return la.inner(u, la.matvec(self.gram_reduced, v))


def gns_quotient(omega, order):
    gram = gram_matrix(omega, order)
    cert = check_positivity(gram)
    if not cert.psd:
        raise PositivityFailure(
            f"state is not positive at order {order}: {cert.reason}", cert.witness, cert.witness_value)
    alg = omega.algebra
    g = gram.entries
    _, pivots = la.echelon(g)
    null_vectors = la.kernel(g)
    rank_profile = [la.rank(gram.leading(k).entries) for k in range(order + 1)]
    m = gram.size
    r = len(pivots)
    coords = [[ZERO] * m for _ in range(r)]
    for j, p in enumerate(pivots):
        coords[j][p] = ONE
    for v in null_vectors:
        f = next(k for k in range(m - 1, -1, -1) if v[k])
        for j, p in enumerate(pivots):
            coords[j][f] = -v[p]
    index = {a: k for k, a in enumerate(gram.basis)}
    lower = [j for j, p in enumerate(pivots) if sum(gram.basis[p]) <= order - 1]
    action = []
    for i in range(alg.dim):
        cols = []
        for j in lower:
            alpha = gram.basis[pivots[j]]
            product = monomial_product(alg, mi.unit(alg.dim, i), alpha)
            vec = [ZERO] * m
            for a, c in product.items():
                vec[index[a]] = vec[index[a]] + c
            cols.append(la.matvec(coords, vec))
        action.append([list(row) for row in zip(*cols)] if cols else [[] for _ in range(r)])
    stabilized = False
    if order >= 1 and rank_profile[order] == rank_profile[order - 1]:
        top = [j for j, p in enumerate(pivots) if sum(gram.basis[p]) == order]
        stabilized = not top and all(
            not mat[j][c] for mat in action for j in top for c in range(len(lower)))
    return GnsModule(omega, gram, pivots, null_vectors, rank_profile, coords, action, stabilized)


def generator_matrices(module):
    """Square matrices rho(X_i) on the stabilized quotient."""
    if not module.stabilized:
        raise Unstabilized(module.rank_profile, module.action)
    return [[list(row) for row in mat] for mat in module.action]


def check_left_ideal(omega, order):
    """Multiply each null vector of degree <= N-1 by every generator and test
    that the product is again null for G_N.  Returns the failing pairs."""
    gram = gram_matrix(omega, order)
    alg = omega.algebra
    index = {a: k for k, a in enumerate(gram.basis)}
    failures = []
    checked = 0
    for v in la.kernel(gram.entries):
        element = _element(alg, gram.basis, v)
        if element.degree > order - 1:
            continue
        for i in range(alg.dim):
            w = PbwElement.generator(alg, i) * element
            vec = [ZERO] * gram.size
            for a, c in w.terms.items():
                vec[index[a]] = c
            checked += 1
            if any(la.matvec(gram.entries, vec)):
                failures.append((element, i))
    return failures, checked


def is_skew_hermitian(mat, gram):
    """rho* G + G rho == 0, i.e. rho is skew-adjoint for the form G."""
    lhs = la.matmul(la.adjoint(mat), gram)
    rhs = la.matmul(gram, mat)
    return la.add(lhs, rhs) == la.zeros(len(gram), len(gram))
