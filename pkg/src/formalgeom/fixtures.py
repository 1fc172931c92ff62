"""Shipped algebras, representations and cyclic data used by tests and the CLI.

Faithfulness of the matrix oracles is a per-algebra fact; these are fixtures,
not derived automatically.
"""

from fractions import Fraction

from .lie import heisenberg, real_line, so3
from .rep_state import CyclicData, MatrixRep, MomentState
from .scalar import I, ONE, ZERO


def cos_example():
    """g = R X acting on C^2 by X = [[0, 1], [-1, 0]], nu = (1, 0), J = conjugation."""
    rep = MatrixRep(real_line(), [[[0, 1], [-1, 0]]], unitary_flag=True)
    return CyclicData(rep, [1, 0])


def so3_defining():
    """so(3) on C^3 by real antisymmetric matrices (L_k)_ij = -eps_kij."""
    l1 = [[0, 0, 0], [0, 0, -1], [0, 1, 0]]
    l2 = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
    l3 = [[0, -1, 0], [1, 0, 0], [0, 0, 0]]
    return MatrixRep(so3(), [l1, l2, l3], unitary_flag=True)


def so3_cyclic(nu=(ONE, ZERO, ZERO)):
    return CyclicData(so3_defining(), list(nu))


def so3_spin_half():
    """X_k = -(i/2) sigma_k, the complexified two-dimensional representation."""
    h = I / 2
    s1 = [[ZERO, -h], [-h, ZERO]]
    s2 = [[ZERO, -ONE / 2], [ONE / 2, ZERO]]
    s3 = [[-h, ZERO], [ZERO, h]]
    return MatrixRep(so3(), [s1, s2, s3], unitary_flag=True)


def heisenberg_upper_triangular():
    """X = E12, Y = E23, Z = E13 on C^3 (not skew-Hermitian)."""
    x = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    y = [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    z = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    return MatrixRep(heisenberg(), [x, y, z])


def heisenberg_four_point():
    """Unitary four-dimensional Heisenberg module with central Z acting as zero.

    X and Y act by commuting real rotation blocks with distinct frequencies,
    so nu = (3/5, 0, 4/5, 0) is cyclic.  A finite-dimensional unitary
    representation cannot move the centre, hence pi(Z) = 0.
    """
    x = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 2], [0, 0, -2, 0]]
    y = [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    z = [[0] * 4 for _ in range(4)]
    rep = MatrixRep(heisenberg(), [x, y, z], unitary_flag=True)
    return CyclicData(rep, [Fraction(3, 5), 0, Fraction(4, 5), 0])


def gaussian_moments(order):
    """m_2k = (2k-1)!!, odd moments zero."""
    out = []
    for k in range(order + 1):
        if k % 2:
            out.append(0)
        else:
            df = 1
            for j in range(k - 1, 0, -2):
                df *= j
            out.append(df)
    return MomentState(real_line(), out)


def factorial_moments(order):
    """m_k = k!, the moments of the unit exponential distribution."""
    out, f = [], 1
    for k in range(order + 1):
        out.append(f)
        f *= k + 1
    return MomentState(real_line(), out)
