"""First-order term unification with most general unifiers.

Terms over a fixed-arity signature, a substitution algebra with the
generality pre-order, three difference-resolving unification algorithms
that return idempotent mgus or a clash/occurs diagnostic, and independent
oracles (an equation-set solver plus bounded enumerators) to check them
against.
"""

from .oracle import (
    EnumBound,
    EquationSet,
    enum_substitutions,
    enum_terms,
    enumerated_unifiers,
    solve_equations,
)
from .substitution import (
    Matched,
    MatchResult,
    NoMatch,
    Subst,
    compose,
    identity,
    match_terms,
    more_general,
    singleton,
    subst_equal,
)
from .terms import (
    App,
    ArityError,
    InvalidPositionError,
    Position,
    ROOT,
    Signature,
    Term,
    UnknownSymbolError,
    Var,
    concat,
    format_position,
    format_term,
    is_valid_position,
    occurrences,
    parse_position,
    positions_of,
    replace_at,
    subterm_at,
    term_size,
    vars_of,
)
from .unify import (
    Clash,
    Failed,
    FailureCause,
    NotUnifiableError,
    OccursCheck,
    TraceStep,
    Unified,
    UnifyOutcome,
    classic_unify,
    describe_failure,
    first_diff,
    format_trace_step,
    is_mgu,
    is_unifier,
    link_of_frst_diff,
    next_position,
    resolving_diff,
    robinson_unify,
    robinson_unify_efficient,
    sub_of_frst_diff,
    unifiable,
)

__version__ = "0.1.0"

__all__ = [
    "App",
    "ArityError",
    "Clash",
    "EnumBound",
    "EquationSet",
    "Failed",
    "FailureCause",
    "InvalidPositionError",
    "Matched",
    "MatchResult",
    "NoMatch",
    "NotUnifiableError",
    "OccursCheck",
    "Position",
    "ROOT",
    "Signature",
    "Subst",
    "Term",
    "TraceStep",
    "Unified",
    "UnifyOutcome",
    "UnknownSymbolError",
    "Var",
    "classic_unify",
    "compose",
    "concat",
    "describe_failure",
    "enum_substitutions",
    "enum_terms",
    "enumerated_unifiers",
    "first_diff",
    "format_position",
    "format_term",
    "format_trace_step",
    "identity",
    "is_mgu",
    "is_unifier",
    "is_valid_position",
    "link_of_frst_diff",
    "match_terms",
    "more_general",
    "next_position",
    "occurrences",
    "parse_position",
    "positions_of",
    "replace_at",
    "resolving_diff",
    "robinson_unify",
    "robinson_unify_efficient",
    "singleton",
    "solve_equations",
    "sub_of_frst_diff",
    "subst_equal",
    "subterm_at",
    "term_size",
    "unifiable",
    "vars_of",
]
