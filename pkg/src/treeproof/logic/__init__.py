"""Sorted first-order logic: AST, parsing, rendering, substitution calculus."""

from .parser import parse_formula
from .render import render_canonical, render_formula, render_isabelle, render_tptp
from .substitution import (
    FormulaBinding,
    PredicateBinding,
    RewriteBinding,
    Substitution,
    TermBinding,
    apply_substitution,
    apply_substitution_detailed,
    compose,
)
from .syntax import (
    And,
    Constant,
    ENTITY,
    EVENT,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Placeholder,
    PredApp,
    Signature,
    SkolemApp,
    Variable,
    atoms,
    base_signature,
    conj,
    constants,
    disj,
    ensure_closed,
    free_vars,
    infer_signature,
    is_closed,
    placeholders,
    predicate_symbols,
    quantify,
    sort_of_name,
    subformulas,
    well_sorted,
)

__all__ = [
    "And", "Constant", "ENTITY", "EVENT", "Exists", "Forall", "Formula",
    "FormulaBinding", "Iff", "Implies", "Not", "Or", "Placeholder", "PredApp",
    "PredicateBinding", "RewriteBinding", "Signature", "SkolemApp",
    "Substitution", "TermBinding", "Variable", "apply_substitution",
    "apply_substitution_detailed", "atoms", "base_signature", "compose",
    "conj", "constants", "disj", "ensure_closed", "free_vars",
    "infer_signature", "is_closed", "parse_formula", "placeholders",
    "predicate_symbols", "quantify", "render_canonical", "render_formula",
    "render_isabelle", "render_tptp", "sort_of_name", "subformulas",
    "well_sorted",
]
