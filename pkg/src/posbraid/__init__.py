"""Positive braid knots: invariants from brick diagrams, forbidden surface
minors, and the topological 4-genus."""

from .algebra import LaurentPoly, is_unit, lp_equal_up_to_unit, poly_det, symmetric_signature
from .braid import (BraidWord, closure_permutation, component_count, contains_subword,
                    flip_indices, is_knot, parse_braid, push_right_normal_form,
                    reduce_index_lemma5, reverse, rotate)
from .census import canonical_word, enumerate_census, verify_paper
from .classify import ClassificationResult, classify_knot, is_max_torus
from .kernels import IMPLEMENTATION
from .minors import (DefectCertificate, MinorEmbedding, defect_certificate, is_alexander_trivial,
                     is_graph_minor, pattern_library, restrict_form, search_alexander_trivial,
                     verify_example)
from .pattern import (brick_diagram, induced_two_column_pattern, is_prime, is_tree,
                      linking_pattern, split_connected_sum, word_pattern)
from .seifert import (InvariantRecord, alexander_burau, boundary_components_homological,
                      invariants, seifert_matrix, seifert_matrix_tree)
from .trees import classify_tree_knot, parse_tree, tree_invariants

__version__ = "0.1.0"
