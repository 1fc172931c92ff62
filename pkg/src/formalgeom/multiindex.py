"""Multi-index helpers; all listings are in graded-lex order.

Graded-lex here means: total degree ascending, and within a degree the
exponent tuples in descending lexicographic order, so the degree-one block is
``X1, X2, ..., Xn`` and ``X1^2`` precedes ``X1*X2``.
"""

from functools import lru_cache
from math import comb, factorial, prod


@lru_cache(maxsize=None)
def of_degree(n, d):
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def up_to(n, max_degree):
    out = []
    for d in range(max_degree + 1):
        out.extend(of_degree(n, d))
    return tuple(out)


def grlex_key(alpha):
    return (sum(alpha), tuple(-a for a in alpha))


def degree(alpha):
    return sum(alpha)


def zero(n):
    return (0,) * n


def unit(n, i):
    return tuple(int(k == i) for k in range(n))


def add(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def sub(alpha, beta):
    return tuple(a - b for a, b in zip(alpha, beta))


def below(alpha):
    """All beta <= alpha componentwise."""
    out = [()]
    for a in alpha:
        out = [b + (k,) for b in out for k in range(a + 1)]
    return out


def binomial(alpha, beta):
    return prod(comb(a, b) for a, b in zip(alpha, beta))


def mfactorial(alpha):
    return prod(factorial(a) for a in alpha)


def word(alpha):
    """Generator word of X^alpha, e.g. (2, 0, 1) -> (0, 0, 2)."""
    return tuple(i for i, a in enumerate(alpha) for _ in range(a))
