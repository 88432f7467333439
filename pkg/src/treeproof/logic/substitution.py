"""Placeholder substitutions and their composition.

A substitution layer maps placeholder keys to replacements applied
simultaneously: replacement output is never re-matched within the same layer.
Replacements come in three kinds — a term (fills variable occurrences), a
predicate symbol (renames predicate applications), or a formula fragment
(fills sentence placeholders, or rewrites one predicate application when the
key is an application pattern).  Composition sequences layers left to right,
so ``apply(phi, a.compose(b)) == apply(apply(phi, a), b)`` holds structurally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import IllFormedReplacement
from .render import render_canonical
from .syntax import (
    And,
    BINARY,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Placeholder,
    PredApp,
    QUANT,
    Signature,
    SkolemApp,
    Term,
    Variable,
    infer_signature,
)


@dataclass(frozen=True)
class TermBinding:
    """name -> term: replaces variable occurrences named `name`."""

    name: str
    term: Term

    @property
    def key(self) -> str:
        return self.name


@dataclass(frozen=True)
class PredicateBinding:
    """name -> symbol: renames predicate applications (and bare placeholders)."""

    name: str
    symbol: str

    @property
    def key(self) -> str:
        return self.name


@dataclass(frozen=True)
class FormulaBinding:
    """name -> formula: fills sentence-level placeholders."""

    name: str
    fragment: Formula

    @property
    def key(self) -> str:
        return self.name


@dataclass(frozen=True)
class RewriteBinding:
    """pattern -> formula: rewrites one exact predicate application."""

    pattern: PredApp
    replacement: Formula

    @property
    def key(self) -> str:
        return render_canonical(self.pattern)


Binding = Union[TermBinding, PredicateBinding, FormulaBinding, RewriteBinding]


@dataclass(frozen=True)
class Substitution:
    """An ordered sequence of simultaneous binding layers."""

    layers: tuple = ()

    @classmethod
    def of(cls, bindings) -> "Substitution":
        bindings = tuple(bindings)
        keys = [b.key for b in bindings]
        if len(set(keys)) != len(keys):
            raise IllFormedReplacement(f"duplicate binding keys: {keys}")
        if not bindings:
            return cls(())
        return cls((bindings,))

    @classmethod
    def empty(cls) -> "Substitution":
        return cls(())

    @property
    def bindings(self) -> tuple:
        return tuple(b for layer in self.layers for b in layer)

    def keys(self) -> list:
        return [b.key for b in self.bindings]

    def is_empty(self) -> bool:
        return not self.layers

    def compose(self, other: "Substitution") -> "Substitution":
        return Substitution(self.layers + other.layers)


def compose(first: Substitution, second: Substitution) -> Substitution:
    """Sequential composition: `first` applies before `second`."""
    return first.compose(second)


@dataclass
class SubstitutionResult:
    formula: Formula
    unused: list = field(default_factory=list)
    warnings: list = field(default_factory=list)


def _apply_term_bindings(t: Term, by_name: dict, used: set) -> Term:
    if isinstance(t, Variable):
        b = by_name.get(t.name)
        if isinstance(b, TermBinding):
            used.add(b.key)
            return b.term
        return t
    if isinstance(t, SkolemApp):
        return SkolemApp(
            t.name,
            tuple(_apply_term_bindings(a, by_name, used) for a in t.args),
            t.sort,
        )
    return t


def _apply_layer(phi: Formula, layer, used: set) -> Formula:
    by_name: dict[str, Binding] = {}
    by_pattern: dict[PredApp, RewriteBinding] = {}
    for b in layer:
        if isinstance(b, RewriteBinding):
            by_pattern[b.pattern] = b
        else:
            by_name[b.name] = b

    def go(f: Formula) -> Formula:
        if isinstance(f, PredApp):
            rw = by_pattern.get(f)
            if rw is not None:
                used.add(rw.key)
                return rw.replacement
            b = by_name.get(f.symbol)
            if isinstance(b, PredicateBinding):
                used.add(b.key)
                f = PredApp(b.symbol, f.args)
            elif isinstance(b, (FormulaBinding, TermBinding)) and f.args:
                kind = "formula" if isinstance(b, FormulaBinding) else "term"
                raise IllFormedReplacement(
                    f"{kind} bound to {f.symbol!r}, which occurs in predicate position"
                )
            elif isinstance(b, FormulaBinding):
                # Nullary application in closed formulas acts as a placeholder.
                used.add(b.key)
                return b.fragment
            return PredApp(
                f.symbol, tuple(_apply_term_bindings(t, by_name, used) for t in f.args)
            )
        if isinstance(f, Placeholder):
            b = by_name.get(f.name)
            if isinstance(b, FormulaBinding):
                used.add(b.key)
                return b.fragment
            if isinstance(b, PredicateBinding):
                used.add(b.key)
                return PredApp(b.symbol, ())
            if isinstance(b, TermBinding):
                raise IllFormedReplacement(
                    f"term bound to {f.name!r}, which occurs in formula position"
                )
            return f
        if isinstance(f, Not):
            return Not(go(f.f))
        if isinstance(f, BINARY):
            return type(f)(go(f.left), go(f.right))
        if isinstance(f, QUANT):
            return type(f)(f.var, go(f.body))
        raise TypeError(f"not a formula: {f!r}")

    return go(phi)


def apply_substitution_detailed(
    phi: Formula, theta: Substitution, signature: Signature | None = None
) -> SubstitutionResult:
    """Apply theta layer by layer; collects unused-binding warnings.

    The result is sort-checked (SortError on inconsistent predicate use).
    """
    used: set[str] = set()
    out = phi
    for layer in theta.layers:
        out = _apply_layer(out, layer, used)
    unused = [k for k in theta.keys() if k not in used]
    result = SubstitutionResult(out, unused=unused)
    for k in unused:
        result.warnings.append(f"binding {k!r} matched nothing")
    infer_signature(out, signature)
    return result


def apply_substitution(
    phi: Formula, theta: Substitution, signature: Signature | None = None
) -> Formula:
    return apply_substitution_detailed(phi, theta, signature).formula
