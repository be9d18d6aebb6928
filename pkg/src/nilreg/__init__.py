"""Closed neighborhood ideals of graphs: Betti tables, regularity, projective dimension."""

__version__ = "0.1.0"

from .graphs import (Graph, FamilySpec, GraphError, SizeGuardError, build_family, parse_family,
                     closed_neighborhood, matching_number, simplicial_vertices, minimal_dominating_sets,
                     clique_cover_number, structure_predicates, whisker_all, rooted_levels)
from .canon import enumerate_trees, enumerate_graphs, canonical_key
from .monomials import (Monomial, MonomialIdeal, DomainError, minimalize, closed_neighborhood_ideal,
                        edge_ideal, path_ideal, colon_by_monomial, add_ideals, intersect_ideals,
                        scale_by_monomial, split_at_variable)
from .simplicial import (SimplicialComplex, HomologyProfile, stanley_reisner_complex, stanley_reisner_ideal,
                         dominance_complex, reduced_homology_ranks, homological_dimension)
from .betti import (BettiTable, SplitReport, betti_table_hochster, betti_table_taylor_oracle, regularity,
                    projective_dimension, convolve_tables, shift_check_extra_variable, betti_splitting_report)
