"""Root multiplicities of degree m*alpha1 + 2*alpha2 for rank-two Nichols algebras of diagonal type.

All arithmetic is exact: Laurent polynomials with integer coefficients for the
q-identities, and cyclotomic fields Q(zeta_n) for braidings.
"""
from .braidwords import Word, is_lyndon, lyndon_words_of_degree, shirshov
from .cyclofield import FieldScalar, FieldSpec, mult_order
from .errors import DomainError, ExactDivisionError, PreconditionError
from .fieldexpr import parse_field_expr, parse_scalar, render
from .freealg import (Braiding2, FreeElement, P, S, U_basis, ad_x1, ad_x1_power,
                      expand_U_basis, generator, skew_derivation, superletter, u_vec, uhat)
from .nichols import (NicholsQuotient, hilbert_table, is_zero_in_nichols, kernel_basis,
                      ker_intersect_Um, nichols_dim, quotient_for)
from .qlaurent import LaurentPoly, Q1, Q2, b_poly, qbinom, qfact, qint, verify_identity
from .roots import (GENERIC, GenericParameters, JSetResult, MultiplicityReport,
                    brute_force_is_root_vector, brute_force_multiplicity, candidates_m2,
                    cartan_c, default_suite, hilbert_multiplicities, is_root_vector_kl, jset,
                    multiplicity_extended, multiplicity_m2, nonroot_condition, p_k_zero,
                    reflect, rosso_vanishing, u_square_zero, verify_theorem_main)

__version__ = "0.1.0"
