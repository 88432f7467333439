"""Sorted first-order formula AST with entity/event sorts.

Two sorts exist: entities and events.  Variables are sorted by naming
convention (``e``, ``e1``, ... are events, everything else entities) unless
annotated explicitly.  Predicate signatures are inferred from use and checked
for consistency.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from ..errors import PlaceholderInClosedFormula, SortError

ENTITY = "entity"
EVENT = "event"
SORTS = (ENTITY, EVENT)

_EVENT_VAR = re.compile(r"^e\d*$")


def sort_of_name(name: str) -> str:
    """Default sort for a variable name: e, e1, e2... are events."""
    return EVENT if _EVENT_VAR.match(name) else ENTITY


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Variable:
    name: str
    sort: str = ""

    def __post_init__(self):
        if not self.sort:
            object.__setattr__(self, "sort", sort_of_name(self.name))


@dataclass(frozen=True)
class Constant:
    name: str
    sort: str = ENTITY


@dataclass(frozen=True)
class SkolemApp:
    """Application of a Skolem symbol; only ever created by clausification."""

    name: str
    args: tuple = ()
    sort: str = ENTITY


Term = Union[Variable, Constant, SkolemApp]


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class PredApp:
    symbol: str
    args: tuple = ()


@dataclass(frozen=True)
class Placeholder:
    name: str


@dataclass(frozen=True)
class Not:
    f: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: Variable
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: Variable
    body: "Formula"


Formula = Union[PredApp, Placeholder, Not, And, Or, Implies, Iff, Forall, Exists]

BINARY = (And, Or, Implies, Iff)
QUANT = (Forall, Exists)


# ---------------------------------------------------------------------------
# Construction helpers


def conj(parts) -> Formula:
    """Left-associated conjunction of one or more formulas."""
    parts = list(parts)
    if not parts:
        raise ValueError("conj of no formulas")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts) -> Formula:
    parts = list(parts)
    if not parts:
        raise ValueError("disj of no formulas")
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def quantify(kind, variables, body: Formula) -> Formula:
    """Wrap body in a prefix of quantifiers over variables (outermost first)."""
    out = body
    for v in reversed(list(variables)):
        out = kind(v, out)
    return out


# ---------------------------------------------------------------------------
# Traversal


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, Not):
        yield from subformulas(phi.f)
    elif isinstance(phi, BINARY):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)
    elif isinstance(phi, QUANT):
        yield from subformulas(phi.body)


def atoms(phi: Formula) -> Iterator[PredApp]:
    for sub in subformulas(phi):
        if isinstance(sub, PredApp):
            yield sub


def placeholders(phi: Formula) -> set:
    return {sub.name for sub in subformulas(phi) if isinstance(sub, Placeholder)}


def predicate_symbols(phi: Formula) -> set:
    return {a.symbol for a in atoms(phi)}


def term_vars(t: Term) -> Iterator[Variable]:
    if isinstance(t, Variable):
        yield t
    elif isinstance(t, SkolemApp):
        for sub in t.args:
            yield from term_vars(sub)


def free_vars(phi: Formula, bound=frozenset()) -> set:
    if isinstance(phi, PredApp):
        return {v for t in phi.args for v in term_vars(t) if v.name not in bound}
    if isinstance(phi, Placeholder):
        return set()
    if isinstance(phi, Not):
        return free_vars(phi.f, bound)
    if isinstance(phi, BINARY):
        return free_vars(phi.left, bound) | free_vars(phi.right, bound)
    if isinstance(phi, QUANT):
        return free_vars(phi.body, bound | {phi.var.name})
    raise TypeError(f"not a formula: {phi!r}")


def constants(phi: Formula) -> set:
    out = set()

    def walk_term(t):
        if isinstance(t, Constant):
            out.add(t)
        elif isinstance(t, SkolemApp):
            for sub in t.args:
                walk_term(sub)

    for a in atoms(phi):
        for t in a.args:
            walk_term(t)
    return out


def is_closed(phi: Formula) -> bool:
    return not free_vars(phi) and not placeholders(phi)


def ensure_closed(phi: Formula, context: str = "formula") -> None:
    ph = placeholders(phi)
    if ph:
        raise PlaceholderInClosedFormula(
            f"{context} contains placeholders: {sorted(ph)}"
        )
    fv = free_vars(phi)
    if fv:
        names = sorted(v.name for v in fv)
        raise PlaceholderInClosedFormula(f"{context} has free variables: {names}")


# ---------------------------------------------------------------------------
# Signatures and sort checking


@dataclass
class Signature:
    """Predicate symbol -> tuple of argument sorts; constants -> sort."""

    predicates: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)

    def copy(self) -> "Signature":
        return Signature(dict(self.predicates), dict(self.constants))

    def declare(self, symbol: str, arg_sorts) -> None:
        arg_sorts = tuple(arg_sorts)
        known = self.predicates.get(symbol)
        if known is not None and known != arg_sorts:
            raise SortError(symbol, known, arg_sorts)
        self.predicates[symbol] = arg_sorts


#: Role predicates of the event representation: first slot is the event.
DEFAULT_ROLE_PREDICATES = ("Agent", "Patient", "Source", "Destination", "In", "By")


def base_signature(role_predicates=DEFAULT_ROLE_PREDICATES) -> Signature:
    sig = Signature()
    for role in role_predicates:
        sig.declare(role, (EVENT, ENTITY))
    return sig


def term_sort(t: Term, sig: Signature) -> str:
    if isinstance(t, Variable):
        return t.sort
    if isinstance(t, Constant):
        return sig.constants.get(t.name, t.sort)
    if isinstance(t, SkolemApp):
        return t.sort
    raise TypeError(f"not a term: {t!r}")


def infer_signature(phi: Formula, sig: Signature | None = None) -> Signature:
    """Check sort consistency of phi, extending sig with inferred entries.

    Raises SortError when a symbol is used with conflicting argument sorts.
    """
    sig = sig.copy() if sig is not None else Signature()
    for a in atoms(phi):
        arg_sorts = tuple(term_sort(t, sig) for t in a.args)
        known = sig.predicates.get(a.symbol)
        if known is None:
            sig.predicates[a.symbol] = arg_sorts
        elif known != arg_sorts:
            raise SortError(a.symbol, known, arg_sorts)
        for t in a.args:
            if isinstance(t, Constant) and t.name not in sig.constants:
                sig.constants[t.name] = t.sort
    return sig


def well_sorted(phi: Formula, sig: Signature | None = None) -> bool:
    try:
        infer_signature(phi, sig)
        return True
    except SortError:
        return False
