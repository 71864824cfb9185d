"""Exact toolkit for cyclic McKay quivers, weighted gradings, and the
commutation quiver with relations attached to a weight vector, together
with machine checks of the identities relating them."""

from .grading import (GcdNotOne, HilbertTable, Monomial, NonPositiveWeight,
                      TooFewWeights, WeightError, WeightVector, dim_A,
                      dim_A_interior, dim_R, enumerate_monomials,
                      hilbert_table, validate_weights)
from .mckay import (TensorDecomposition, mckay_quiver, tensor_decomposition,
                    tensor_multiplicity, verify_mckay_consistency)
from .quiver import (Arrow, ParseError, Path, Quiver, QuiverWithRelations,
                     Relation, ValidationError, build_gamma, concatenate,
                     export_dot, from_json, parse_quiver_dsl, path_end,
                     serialize_dsl, to_json)
from .path_algebra import (CartanMatrix, CyclicQuiver, InvalidPath,
                           MissingRelationInstance, PathCapExceeded,
                           RewritingIncomplete, cartan_matrix,
                           cartan_matrix_oracle, check_confluence, hom_basis,
                           normal_form)
from .checks import (IsomorphismReport, MorphismAlgebra,
                     check_exceptional_matrix, check_gorenstein_reciprocity,
                     check_isomorphism, hom_dimension_matrix, k_theory_report,
                     path_image)
from .reports import Assertion, CheckReport
from .sweep import enumerate_weight_vectors

__version__ = "0.1.0"
