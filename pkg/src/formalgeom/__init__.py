"""Exact computations in enveloping algebras, their duals and GNS quotients."""

from .dual import DualFunctional, PowerSeries, act, dual_involution, dual_product, radius_estimate, to_power_series
from .errors import *  # noqa: F401,F403
from .fock import FSpace, SymPolynomial, SymTensor, character_check, evaluate_poly, poly_multiply, r_norm
from .gns import check_left_ideal, check_positivity, generator_matrices, gns_quotient, gram_matrix
from .lie import LieAlgebra, abelian, heisenberg, real_line, so3, validate_lie_algebra
from .pbw import PbwElement, PbwTensor, coproduct, coproduct_at, involution, tensor_flip
from .rep_state import (CyclicData, MatrixRep, MomentState, apply, equivariance_residual, moment_state,
                        representative_functional, state_from_rep)
from .scalar import Scalar, parse_scalar

__version__ = "0.1.0"
