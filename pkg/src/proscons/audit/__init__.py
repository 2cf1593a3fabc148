"""Mechanical verification of the rules' properties on enumerated universes."""

from .axioms import (
    Axiom,
    AuditVerdict,
    Witness,
    check_axiom,
    register_replay,
    replay_witness,
)
from .matrices import (
    AuditContext,
    RelationSet,
    capacity_bilexi_weak_matrix,
    np_weak_matrix,
    weak_matrix,
)
from .reports import (
    BundleReport,
    COROLLARY_CHECKS,
    NoWitnessFoundError,
    SweepFinding,
    encoding_equivalence,
    find_biposs_indifference_intransitivity,
    find_strictness_witness,
    independence_corollaries,
    proposition_checks,
    refinement_check,
    relation_properties,
    sweep_axiom,
    sweep_bundle,
    theorem1_bundle,
    theorem2_bundle,
)
from .space import (
    PAIRWISE_BOUND,
    TUPLE_BOUND,
    ProfileSpace,
    UniverseTooLargeError,
    enumerate_profiles,
    iter_universes,
)

__all__ = [
    "Axiom",
    "AuditContext",
    "AuditVerdict",
    "BundleReport",
    "COROLLARY_CHECKS",
    "NoWitnessFoundError",
    "PAIRWISE_BOUND",
    "ProfileSpace",
    "RelationSet",
    "SweepFinding",
    "TUPLE_BOUND",
    "UniverseTooLargeError",
    "Witness",
    "capacity_bilexi_weak_matrix",
    "check_axiom",
    "encoding_equivalence",
    "enumerate_profiles",
    "find_biposs_indifference_intransitivity",
    "find_strictness_witness",
    "independence_corollaries",
    "iter_universes",
    "np_weak_matrix",
    "proposition_checks",
    "refinement_check",
    "register_replay",
    "relation_properties",
    "replay_witness",
    "sweep_axiom",
    "sweep_bundle",
    "theorem1_bundle",
    "theorem2_bundle",
    "weak_matrix",
]
