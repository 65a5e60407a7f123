"""kisp — a genealogical query language.

A validated family-tree model, a kinship-term algebra with set-valued
semantics, greedy reduction of kin terms to English words, point-based
temporal predicates, and a small LISP-dialect interpreter with a REPL.
"""

from .interp import Interpreter, KispError, format_value, parse_program
from .reduction import (
    ReducedTerm,
    ReductionDictionary,
    expand,
    optimal_shorten,
    remaining_concats,
    shorten,
)
from .semantics import eval_term
from .temporal import Timeline, format_date, parse_date
from .terms import (
    Atom,
    KinTerm,
    KinTermError,
    concat_count,
    parse_kin_term,
    push_dual,
    render,
)
from .tree import (
    ConstraintViolation,
    FamilyTree,
    InvalidTreeError,
    Person,
    Sex,
    StructuralError,
    UnknownPersonError,
    basic_kin,
    load_tree,
    validate_tree,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "ConstraintViolation",
    "FamilyTree",
    "Interpreter",
    "InvalidTreeError",
    "KinTerm",
    "KinTermError",
    "KispError",
    "Person",
    "ReducedTerm",
    "ReductionDictionary",
    "Sex",
    "StructuralError",
    "Timeline",
    "UnknownPersonError",
    "basic_kin",
    "concat_count",
    "eval_term",
    "expand",
    "format_date",
    "format_value",
    "load_tree",
    "optimal_shorten",
    "parse_date",
    "parse_kin_term",
    "parse_program",
    "push_dual",
    "remaining_concats",
    "render",
    "shorten",
    "validate_tree",
    "__version__",
]
