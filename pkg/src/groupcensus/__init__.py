"""Cyclic-subgroup census of small finite groups.

Builds explicit finite groups of order up to 64 as multiplication tables,
computes the cyclic-subgroup census (the counts n_d, the difference delta =
|G| - #cyclic subgroups, and the signature sigma of subgroup orders > 2),
enumerates all candidate signatures for a given delta, applies exclusion
rules, and exhaustively verifies the resulting classification for delta <= 5
against a bundled catalog of all groups of order <= 24.
"""

from .candidates import (Candidate, CandidateRow, enumerate_candidates,
                         expand_part, integer_partitions)
from .catalog import (CatalogEntry, CatalogError, EXPECTED_GROUP_COUNTS,
                      MAX_CATALOG_ORDER, catalog_search, catalog_tables,
                      catalog_validate, load_catalog)
from .census import (CensusReport, Signature, census, count_solutions,
                     cyclic_subgroups, euler_phi, phi_inverse)
from .exclusion import (ExclusionRule, RECORDED_JUSTIFICATIONS, Verdict,
                        apply_rules, revised_table, rule_registry)
from .expressions import GroupExpressionError, parse_group
from .groups import (AutomorphismAction, GroupConstructionError, GroupTable,
                     InvalidActionError, MAX_ORDER, Permutation, SubgroupSet,
                     action_from_generator_images, direct_product,
                     element_order, from_permutations, generated_subgroup,
                     inversion_action, make_alternating, make_cyclic,
                     make_dicyclic, make_dihedral, make_quasidihedral,
                     make_symmetric, regular_representation,
                     semidirect_product, trivial_action)
from .isomorphism import (UnsupportedOrderError, center, conjugacy_classes,
                          derived_subgroup, extend_generator_map,
                          generating_set, is_isomorphic)
from .report import CheckResult, ClaimResult, VerificationReport
from .verify import (GroupRecipe, SurvivorReport, TheoremClaim, explore,
                     known_groups_for, property_suite, theorem_claims,
                     verify_all, verify_theorem)

__version__ = "0.1.0"

__all__ = [
    "AutomorphismAction", "Candidate", "CandidateRow", "CatalogEntry",
    "CatalogError", "CensusReport", "CheckResult", "ClaimResult",
    "EXPECTED_GROUP_COUNTS", "ExclusionRule", "GroupConstructionError",
    "GroupExpressionError", "GroupRecipe", "GroupTable",
    "InvalidActionError", "MAX_CATALOG_ORDER", "MAX_ORDER", "Permutation",
    "RECORDED_JUSTIFICATIONS", "Signature", "SubgroupSet", "SurvivorReport",
    "TheoremClaim", "UnsupportedOrderError", "VerificationReport", "Verdict",
    "action_from_generator_images", "apply_rules", "catalog_search",
    "catalog_tables", "catalog_validate", "census", "center",
    "conjugacy_classes", "count_solutions", "cyclic_subgroups",
    "derived_subgroup", "direct_product", "element_order",
    "enumerate_candidates", "euler_phi", "expand_part", "explore",
    "extend_generator_map", "from_permutations", "generated_subgroup",
    "generating_set", "integer_partitions", "inversion_action",
    "is_isomorphic", "known_groups_for", "load_catalog", "make_alternating",
    "make_cyclic", "make_dicyclic", "make_dihedral", "make_quasidihedral",
    "make_symmetric", "parse_group", "phi_inverse", "property_suite",
    "regular_representation", "revised_table", "rule_registry",
    "semidirect_product", "theorem_claims", "trivial_action", "verify_all",
    "verify_theorem",
]
