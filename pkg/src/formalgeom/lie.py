"""Real Lie algebras given by structure constants.

Generators are indexed from 0 internally; problem files and error messages
use 1-based indices.  The declaration order of the basis is the PBW order.
"""

import threading
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from types import MappingProxyType

from .errors import DimensionMismatch, IndexOutOfRange, JacobiViolation, ValidationError

__all__ = [
    "LieAlgebra",
    "validate_lie_algebra",
    "bracket",
    "abelian",
    "real_line",
    "heisenberg",
    "so3",
]


class LieAlgebra:
    """A validated real Lie algebra.

    ``structure`` maps ``(i, j)`` with ``i < j`` to a mapping ``k -> c^k_ij``.
    Instances are immutable; build them with :func:`validate_lie_algebra`.
    """

    def __init__(self, dim, names, structure):
        self.dim = dim
        self.names = tuple(names)
        frozen = {}
        for key in sorted(structure):
            row = {k: c for k, c in sorted(structure[key].items()) if c != 0}
            if row:
                frozen[key] = MappingProxyType(row)
        self.structure = MappingProxyType(frozen)
        self._key = (self.dim, self.names, tuple((k, tuple(v.items())) for k, v in frozen.items()))
        self._hash = hash(self._key)
        # PBW rewriting memo (see pbw.py); keyed per algebra instance
        self._pbw_cache = {}
        self._pbw_lock = threading.Lock()

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={self.names})"

    def bracket_basis(self, i, j):
        """[X_i, X_j] as a dict ``k -> coefficient`` (antisymmetric extension)."""
        if i == j:
            return {}
        if i < j:
            return dict(self.structure.get((i, j), {}))
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def is_abelian(self):
        return not self.structure


def _bracket_dicts(alg, x, y):
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            if i == j:
                continue
            for k, c in alg.bracket_basis(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v != 0}


def validate_lie_algebra(dim, names=None, structure=None):
    """Check ranges, reality and the Jacobi identity; return a :class:`LieAlgebra`.

    ``structure`` uses 0-based keys ``(i, j)`` with ``i < j``; values map
    ``k`` to a real rational coefficient.
    """
    if not isinstance(dim, int) or dim <= 0:
        raise DimensionMismatch(f"dimension must be a positive integer, got {dim!r}")
    if names is None:
        names = [f"X{i + 1}" for i in range(dim)]
    names = list(names)
    if len(names) != dim:
        raise DimensionMismatch(f"{len(names)} names given for dimension {dim}")
    if len(set(names)) != dim:
        raise ValidationError(f"generator names must be distinct: {names}")
    clean = {}
    for key, row in (structure or {}).items():
        i, j = key
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatch(f"bracket key ({i + 1}, {j + 1}) outside 1..{dim}")
        if i >= j:
            raise ValidationError(f"bracket keys must satisfy i < j, got ({i + 1}, {j + 1})")
        out = {}
        for k, c in row.items():
            if not 0 <= k < dim:
                raise DimensionMismatch(f"structure constant index {k + 1} outside 1..{dim}")
            if not isinstance(c, Rational):
                raise ValidationError(f"structure constants must be real rationals, got {c!r}")
            out[k] = out.get(k, 0) + Fraction(c)
        clean[(i, j)] = out
    alg = LieAlgebra(dim, names, clean)
    for i, j, k in combinations(range(dim), 3):
        residual = jacobi_residual(alg, i, j, k)
        if residual:
            raise JacobiViolation(i, j, k, {n + 1: c for n, c in residual.items()})
    return alg


def jacobi_residual(alg, i, j, k):
    """[[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] as a dict."""
    total = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for idx, v in _bracket_dicts(alg, alg.bracket_basis(a, b), {c: 1}).items():
            total[idx] = total.get(idx, 0) + v
    return {idx: v for idx, v in total.items() if v != 0}


def bracket(alg, x, y):
    """Bracket of two algebra vectors given as length-``dim`` coefficient sequences."""
    if len(x) != alg.dim or len(y) != alg.dim:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in algebra of dimension {alg.dim}")
    xd = {i: Fraction(c) for i, c in enumerate(x) if c}
    yd = {i: Fraction(c) for i, c in enumerate(y) if c}
    out = _bracket_dicts(alg, xd, yd)
    return tuple(out.get(k, Fraction(0)) for k in range(alg.dim))


def basis_vector(alg, i):
    if not 0 <= i < alg.dim:
        raise IndexOutOfRange(f"generator index {i + 1} outside 1..{alg.dim}")
    return tuple(Fraction(int(k == i)) for k in range(alg.dim))


# standard algebras ---------------------------------------------------------

def abelian(n, names=None):
    return validate_lie_algebra(n, names, {})


def real_line(name="X"):
    return validate_lie_algebra(1, [name], {})


def heisenberg():
    """X < Y < Z with [X, Y] = Z, Z central."""
    return validate_lie_algebra(3, ["X", "Y", "Z"], {(0, 1): {2: 1}})


def so3():
    """[X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2."""
    return validate_lie_algebra(
        3, ["X1", "X2", "X3"], {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}}
    )
