"""Qualitative bipolar decision rules over ordinal pros and cons.

Options are sets of arguments; arguments carry a polarity and an ordinal
importance level.  The package implements six pairwise comparison rules,
exact integer encodings of the two levelwise ones, a cue-scanning bridge,
and an audit harness that verifies the rules' order-theoretic properties
exhaustively on small universes.
"""

from .core import (
    Argument,
    ArgumentDecl,
    DecisionUniverse,
    DuplicateNameError,
    ImportanceScale,
    OptionProfile,
    Outcome,
    Polarity,
    ProblemError,
    TrivialUniverseError,
    UniverseMismatchError,
    UnknownArgumentError,
    UnknownLevelError,
    ValidationReport,
    ascii_name,
    duplicate_both_polarity,
    lambda_section,
    om,
    validate_universe,
)
from .encodings import (
    BigSteppedCapacity,
    MixedPolarityError,
    NonInjectiveImportanceError,
    TtbInstance,
    compare_bilexi_np,
    compare_np,
    complete_polar_opposites,
    net_predisposition,
    sigma,
    ttb_compare,
)
from .problem import (
    Problem,
    ProblemFormatError,
    fixture_path,
    load_fixture,
    load_problem,
    parse_problem,
    serialize_problem,
    validate_document,
)
from .rules import (
    GroundReport,
    Rule,
    compare,
    compare_bilexi,
    compare_biposs,
    compare_discri,
    compare_impl,
    compare_impl_cases,
    compare_lexi,
    compare_pareto,
    ground_relation,
)

__version__ = "0.1.0"

__all__ = [
    "Argument",
    "ArgumentDecl",
    "BigSteppedCapacity",
    "DecisionUniverse",
    "DuplicateNameError",
    "GroundReport",
    "ImportanceScale",
    "MixedPolarityError",
    "NonInjectiveImportanceError",
    "OptionProfile",
    "Outcome",
    "Polarity",
    "Problem",
    "ProblemError",
    "ProblemFormatError",
    "Rule",
    "TrivialUniverseError",
    "TtbInstance",
    "UniverseMismatchError",
    "UnknownArgumentError",
    "UnknownLevelError",
    "ValidationReport",
    "ascii_name",
    "compare",
    "compare_bilexi",
    "compare_bilexi_np",
    "compare_biposs",
    "compare_discri",
    "compare_impl",
    "compare_impl_cases",
    "compare_lexi",
    "compare_np",
    "compare_pareto",
    "complete_polar_opposites",
    "duplicate_both_polarity",
    "fixture_path",
    "ground_relation",
    "lambda_section",
    "load_fixture",
    "load_problem",
    "net_predisposition",
    "om",
    "parse_problem",
    "serialize_problem",
    "sigma",
    "ttb_compare",
    "validate_document",
    "validate_universe",
]
