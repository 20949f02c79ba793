"""Argument construction, classification and minimality for a fragment of ASPIC+."""

from .arguments import (
    Argument,
    ArgumentDescription,
    Leaf,
    Node,
    canonical_form,
    inspect,
    node_count,
    parse_argument,
    structurally_equal,
)
from .classification import ClassificationReport, classify, is_regular
from .closure import ClosureResult, closure, entails
from .construction import (
    RealizabilityResult,
    Verdict,
    enumerate_all,
    enumerate_bounded,
    enumerate_regular,
    is_acyclic,
    triple_realizable,
)
from .dsl import load_theory, parse_theory, unparse_theory
from .errors import (
    AspicError,
    CyclicTheory,
    DuplicateRule,
    EmptyPremises,
    OverlappingKB,
    ParseError,
    PropertyViolation,
    TheoryError,
    UnknownFormula,
)
from .export import export_dot, export_json
from .minimality import MinimalityVerdict, is_minimal, minimal_arguments_for
from .theory import (
    ArgumentationTheory,
    Formula,
    Rule,
    RuleKind,
    build_theory,
    validate_theory,
)

__version__ = "0.1.0"
