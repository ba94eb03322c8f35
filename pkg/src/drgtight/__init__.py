"""Pseudo cosine sequences and tight pairs for intersection arrays."""
from .classify import (ClassificationReport, TightPairRecord, classify_tight_pairs,
                       verify_report)
from .errors import (ComputationError, DegenerateSpectrum, DrgError, InfeasibleSequence,
                     LengthError, MismatchedDiameter, NonRealizable, NotFeasible,
                     TrivialSequence, TrivialTheta, ValidationError, WrongCase,
                     ZeroDenominator)
from .graph_params import (CaseTag, IntersectionArray, IntersectionArrayWarning,
                           array_from_json, detect_case, from_string, k_subscript,
                           load_array, validate_array)
from .kernels import BACKEND
from .numeric import DEFAULT_TOL, Tolerance, format_scalar, parse_scalar, scalar_eq
from .recovery import (ConditionReport, RecoveredArray, RecoveryParams, check_conditions,
                       feasible_array_from_sequence, is_feasible, is_tight_sequence,
                       recover_intersection_numbers, recovery_params)
from .sequences import (PseudoCosineSeq, characterize, christoffel_darboux,
                        is_cosine_sequence, is_pseudo_cosine, pseudo_cosine_sequence)
from .spectra import (TridiagonalSpec, graph_eigenvalues, intersection_matrix,
                      reduced_matrix, reduced_matrix_eigenvalues, tridiag_eigenvalues)
from .tightness import (ANY_REAL, AnyReal, TightPairWitness, auxiliary_parameter,
                        check_eps_equation, eps_test, is_tight_pair,
                        partner_from_product_formula, product_sequence,
                        tight_partner_value)

__version__ = "0.1.0"
