"""Partially commutative Lie algebras L(X;G).

The PCLS basis, exact normal forms and brackets modulo the commutation
relations of a graph, and centralizer descriptions with independent
brute-force checks.
"""
from .algebra import (LieElement, ReductionTable, bracket, build_reduction,
                      component_split, element, format_element, free_bracket,
                      homogeneous_parts, normal_form)
from .centralizer import (CentralizerDescription, ProportionalityWitness,
                          centralizer_in_commutant, centralizer_membership,
                          centralizer_of, commutes, homogeneous_commutes_criterion,
                          proportional)
from .errors import (DegreeBoundError, GraphError, InternalConsistencyError,
                     ParseError, PCLieError, UnknownGeneratorError, WordError)
from .expr import parse_expr
from .graph import (CommutationGraph, Generator, adjacent, adjacent_to_all,
                    complement, components, induced)
from .graphio import load_graph, parse_graph
from .oracle import (KernelBasis, brute_force_centralizer, clique_polynomial,
                     dimension_check, kernels_equal, structural_kernel)
from .words import (GeneratorOrder, Monomial, bracket_word, compare_multidegree,
                    compare_words, enumerate_pcls, is_ls, is_lsa, is_pcls, leaf,
                    multidegree, pair, support)

__version__ = "0.1.0"
