"""Exact arithmetic in the universal enveloping algebra E(g).

Elements are stored in the PBW basis ``X^alpha = X1^a1 ... Xn^an`` with the
declared generator order.  Products are brought back to normal form by
straightening adjacent descents ``Xj Xi -> Xi Xj + [Xj, Xi]`` (j > i).
"""

from fractions import Fraction

from . import multiindex as mi
from .errors import AlgebraMismatch, IndexOutOfRange
from .scalar import Scalar, ZERO, as_scalar

__all__ = [
    "PbwElement",
    "PbwTensor",
    "normal_order",
    "multiply",
    "involution",
    "conjugate",
    "coproduct",
    "tensor_flip",
    "coproduct_at",
    "monomial_product",
]


# straightening ---------------------------------------------------------------

def _memo(alg, key, compute):
    cache = alg._pbw_cache
    hit = cache.get(key)
    if hit is not None:
        return hit
    value = compute()
    with alg._pbw_lock:
        return cache.setdefault(key, value)


def _times_generator(alg, alpha, j):
    """X^alpha * X_j in PBW form, as {beta: Fraction}. Real coefficients only."""
    key = ("g", alpha, j)
    hit = alg._pbw_cache.get(key)
    if hit is not None:
        return hit

    def compute():
        k = max((i for i, a in enumerate(alpha) if a), default=-1)
        if k <= j:
            return {mi.add(alpha, mi.unit(alg.dim, j)): Fraction(1)}
        # X^a X_j = X^(a-e_k) X_k X_j = (X^(a-e_k) X_j) X_k + X^(a-e_k) [X_k, X_j]
        head = mi.sub(alpha, mi.unit(alg.dim, k))
        out = {}
        for gamma, c in _times_generator(alg, head, j).items():
            for delta, d in _times_generator(alg, gamma, k).items():
                out[delta] = out.get(delta, 0) + c * d
        for m, c in alg.bracket_basis(k, j).items():
            for delta, d in _times_generator(alg, head, m).items():
                out[delta] = out.get(delta, 0) + c * d
        return {b: v for b, v in out.items() if v != 0}

    return _memo(alg, key, compute)


def monomial_product(alg, alpha, beta):
    """X^alpha * X^beta in PBW form, as {gamma: Fraction}."""
    key = ("m", alpha, beta)
    hit = alg._pbw_cache.get(key)
    if hit is not None:
        return hit

    def compute():
        cur = {alpha: Fraction(1)}
        for j in mi.word(beta):
            nxt = {}
            for gamma, c in cur.items():
                for delta, d in _times_generator(alg, gamma, j).items():
                    nxt[delta] = nxt.get(delta, 0) + c * d
            cur = {g: v for g, v in nxt.items() if v != 0}
        return cur

    return _memo(alg, key, compute)


def _word_form(alg, word):
    cur = {mi.zero(alg.dim): Fraction(1)}
    for j in word:
        if not 0 <= j < alg.dim:
            raise IndexOutOfRange(f"generator index {j + 1} outside 1..{alg.dim}")
        nxt = {}
        for gamma, c in cur.items():
            for delta, d in _times_generator(alg, gamma, j).items():
                nxt[delta] = nxt.get(delta, 0) + c * d
        cur = {g: v for g, v in nxt.items() if v != 0}
    return cur


def normal_order(alg, word, c=1):
    """PBW normal form of ``c * X_{w0} X_{w1} ...`` (0-based generator word)."""
    c = as_scalar(c)
    return PbwElement(alg, {g: c * v for g, v in _word_form(alg, tuple(word)).items()})


# elements --------------------------------------------------------------------

def _fmt_monomial(alg, alpha):
    parts = []
    for name, a in zip(alg.names, alpha):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts) or "1"


def _fmt_term(coeff, mono):
    if mono == "1":
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    s = str(coeff)
    if not coeff.is_real():
        s = f"({s})"
    return f"{s}*{mono}"


class PbwElement:
    """Finite linear combination of PBW monomials with Gaussian-rational coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != algebra.dim:
                raise IndexOutOfRange(f"multi-index {alpha} has wrong length for dimension {algebra.dim}")
            c = as_scalar(c)
            if c:
                clean[alpha] = clean.get(alpha, ZERO) + c
        self.terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def one(cls, alg, c=1):
        return cls(alg, {mi.zero(alg.dim): c})

    @classmethod
    def generator(cls, alg, i, c=1):
        if not 0 <= i < alg.dim:
            raise IndexOutOfRange(f"generator index {i + 1} outside 1..{alg.dim}")
        return cls(alg, {mi.unit(alg.dim, i): c})

    @classmethod
    def monomial(cls, alg, alpha, c=1):
        return cls(alg, {tuple(alpha): c})

    @classmethod
    def from_vector(cls, alg, coeffs):
        """Element of g (degree one) from a coefficient sequence."""
        if len(coeffs) != alg.dim:
            raise IndexOutOfRange(f"vector of length {len(coeffs)} in algebra of dimension {alg.dim}")
        return cls(alg, {mi.unit(alg.dim, i): c for i, c in enumerate(coeffs)})

    @property
    def degree(self):
        if not self.terms:
            return float("-inf")
        return max(sum(a) for a in self.terms)

    def coefficient(self, alpha):
        return self.terms.get(tuple(alpha), ZERO)

    def component(self, d):
        """Homogeneous part of PBW degree ``d``."""
        return PbwElement(self.algebra, {a: c for a, c in self.terms.items() if sum(a) == d})

    def truncate(self, d):
        return PbwElement(self.algebra, {a: c for a, c in self.terms.items() if sum(a) <= d})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: mi.grlex_key(t[0]))

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("elements belong to different Lie algebras")

    def __add__(self, other):
        if not isinstance(other, PbwElement):
            other = PbwElement.one(self.algebra, as_scalar(other))
        self._check(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, ZERO) + c
        return PbwElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.algebra, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_scalar(c)
        return PbwElement(self.algebra, {a: c * v for a, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        result = PbwElement.one(self.algebra)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, PbwElement):
            return self.algebra == other.algebra and self.terms == other.terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.terms == PbwElement.one(self.algebra, c).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"PbwElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = [_fmt_term(c, _fmt_monomial(self.algebra, a)) for a, c in self.sorted_terms()]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def involution(self):
        return involution(self)

    def conjugate(self):
        return conjugate(self)

    def coproduct(self):
        return coproduct(self)


def multiply(a, b):
    """Product in E(g): concatenate monomials and straighten."""
    if a.algebra != b.algebra:
        raise AlgebraMismatch("elements belong to different Lie algebras")
    alg = a.algebra
    out = {}
    for alpha, c in a.terms.items():
        for beta, d in b.terms.items():
            cd = c * d
            for gamma, v in monomial_product(alg, alpha, beta).items():
                out[gamma] = out.get(gamma, ZERO) + cd * v
    return PbwElement(alg, out)


def involution(a):
    """Linear extension of (X_1...X_k)^dagger = (-1)^k X_k...X_1, re-straightened."""
    alg = a.algebra
    out = {}
    for alpha, c in a.terms.items():
        w = mi.word(alpha)
        sign = -1 if len(w) % 2 else 1
        for gamma, v in _word_form(alg, w[::-1]).items():
            out[gamma] = out.get(gamma, ZERO) + c * (sign * v)
    return PbwElement(alg, out)


def conjugate(a):
    """Anti-linear conjugation fixing every PBW monomial."""
    return PbwElement(a.algebra, {alpha: c.conjugate() for alpha, c in a.terms.items()})


# tensors ---------------------------------------------------------------------

class PbwTensor:
    """Element of E^{(x)r}: map from r-tuples of multi-indices to scalars."""

    __slots__ = ("algebra", "rank", "terms")

    def __init__(self, algebra, rank, terms=None):
        self.algebra = algebra
        self.rank = rank
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(tuple(k) for k in key)
            if len(key) != rank:
                raise IndexOutOfRange(f"tensor key of length {len(key)} in rank-{rank} tensor")
            c = as_scalar(c)
            if c:
                clean[key] = clean.get(key, ZERO) + c
        self.terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def pure(cls, *factors):
        """Tensor product of PBW elements."""
        alg = factors[0].algebra
        cur = {(): Scalar(1)}
        for f in factors:
            if f.algebra != alg:
                raise AlgebraMismatch("tensor factors belong to different Lie algebras")
            cur = {k + (a,): c * d for k, c in cur.items() for a, d in f.terms.items()}
        return cls(alg, len(factors), cur)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return PbwTensor(self.algebra, self.rank, out)

    def __neg__(self):
        return PbwTensor(self.algebra, self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def _check(self, other):
        if self.algebra != other.algebra:
            raise AlgebraMismatch("tensors belong to different Lie algebras")
        if self.rank != other.rank:
            raise IndexOutOfRange(f"rank {self.rank} vs rank {other.rank}")

    def __mul__(self, other):
        """Factorwise product (a1 (x) ... )(b1 (x) ...) = a1 b1 (x) ..."""
        if not isinstance(other, PbwTensor):
            c = as_scalar(other)
            return PbwTensor(self.algebra, self.rank, {k: c * v for k, v in self.terms.items()})
        self._check(other)
        alg = self.algebra
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = {(): c1 * c2}
                for a, b in zip(k1, k2):
                    prod_ab = monomial_product(alg, a, b)
                    partial = {key + (g,): c * v for key, c in partial.items() for g, v in prod_ab.items()}
                for key, c in partial.items():
                    out[key] = out.get(key, ZERO) + c
        return PbwTensor(alg, self.rank, out)

    def __eq__(self, other):
        if not isinstance(other, PbwTensor):
            return NotImplemented
        return self.algebra == other.algebra and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        alg = self.algebra
        if not self.terms:
            return "PbwTensor(0)"
        parts = []
        for key, c in sorted(self.terms.items(), key=lambda t: [mi.grlex_key(a) for a in t[0]]):
            mono = " (x) ".join(_fmt_monomial(alg, a) for a in key)
            parts.append(f"{c}*[{mono}]")
        return "PbwTensor(" + " + ".join(parts) + ")"


def _coproduct_monomial(alpha):
    return [(beta, mi.sub(alpha, beta), mi.binomial(alpha, beta)) for beta in mi.below(alpha)]


def coproduct(a):
    """Delta X^alpha = sum_{beta <= alpha} binom(alpha, beta) X^beta (x) X^(alpha - beta)."""
    out = {}
    for alpha, c in a.terms.items():
        for beta, gamma, b in _coproduct_monomial(alpha):
            key = (beta, gamma)
            out[key] = out.get(key, ZERO) + c * b
    return PbwTensor(a.algebra, 2, out)


def coproduct_at(t, position):
    """Apply Delta to factor ``position`` of a tensor, raising its rank by one."""
    out = {}
    for key, c in t.terms.items():
        for beta, gamma, b in _coproduct_monomial(key[position]):
            new = key[:position] + (beta, gamma) + key[position + 1:]
            out[new] = out.get(new, ZERO) + c * b
    return PbwTensor(t.algebra, t.rank + 1, out)


def tensor_flip(t):
    """tau(E (x) F) = F (x) E."""
    if t.rank != 2:
        raise IndexOutOfRange(f"flip needs a rank-2 tensor, got rank {t.rank}")
    return PbwTensor(t.algebra, 2, {(b, a): c for (a, b), c in t.terms.items()})
