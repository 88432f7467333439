"""Formula rendering: canonical ASCII, TPTP FOF, and Isabelle inner syntax.

Canonical output re-parses to a structurally equal formula.  Parentheses are
minimal under the grammar's precedences; quantified subformulas are always
parenthesized in child position.  TPTP output parenthesizes every mixed
binary child (the FOF grammar has no operator precedence); Isabelle output
additionally parenthesizes compound operands of the biconditional.
"""

from __future__ import annotations

from ..errors import DialectUnsupportedConstruct, NameCollision
from .syntax import (
    And,
    Constant,
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
    SkolemApp,
    Variable,
    placeholders,
    sort_of_name,
)

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
BINOPS = (And, Or, Implies, Iff)


def _minimal_parens(child, parent_cls, side: str) -> bool:
    if isinstance(child, QUANT):
        return True
    cp = _PREC.get(type(child))
    if cp is None:
        return False
    pp = _PREC[parent_cls]
    if cp < pp:
        return True
    if cp > pp:
        return False
    if parent_cls is Iff:
        return True
    if parent_cls is Implies:
        return side == "left"
    return side == "right"  # And/Or are left-associative


def _isabelle_parens(child, parent_cls, side: str) -> bool:
    if parent_cls is Iff and isinstance(child, BINOPS + QUANT):
        return True
    return _minimal_parens(child, parent_cls, side)


def _tptp_parens(child, parent_cls, side: str) -> bool:
    if isinstance(child, QUANT):
        return True
    if not isinstance(child, BINOPS):
        return False
    # FOF allows only same-operator &/| chains without parentheses.
    if type(child) is parent_cls and parent_cls in (And, Or) and side == "left":
        return False
    return True


class _Dialect:
    ops: dict
    neg: str
    parens = staticmethod(_minimal_parens)

    def atom(self, f) -> str:
        raise NotImplementedError

    def quant(self, kind, variables, body: str) -> str:
        raise NotImplementedError

    def render(self, phi: Formula) -> str:
        if isinstance(phi, (PredApp, Placeholder)):
            return self.atom(phi)
        if isinstance(phi, Not):
            inner = self.render(phi.f)
            if isinstance(phi.f, BINOPS + QUANT) or (
                isinstance(phi.f, PredApp) and phi.f.args and " " in inner
            ):
                return f"{self.neg}({inner})"
            return f"{self.neg}{inner}"
        if isinstance(phi, BINOPS):
            cls = type(phi)
            left = self.render(phi.left)
            right = self.render(phi.right)
            if self.parens(phi.left, cls, "left"):
                left = f"({left})"
            if self.parens(phi.right, cls, "right"):
                right = f"({right})"
            return f"{left}{self.ops[cls]}{right}"
        if isinstance(phi, QUANT):
            kind = type(phi)
            variables = []
            body = phi
            while isinstance(body, kind):
                variables.append(body.var)
                body = body.body
            return self.quant(kind, variables, self.render(body))
        raise TypeError(f"not a formula: {phi!r}")


def _term_canonical(t) -> str:
    if isinstance(t, SkolemApp) and t.args:
        return f"{t.name}({','.join(_term_canonical(a) for a in t.args)})"
    return t.name


class _Canonical(_Dialect):
    ops = {And: " & ", Or: " | ", Implies: " -> ", Iff: " <-> "}
    neg = "~"

    def atom(self, f) -> str:
        if isinstance(f, Placeholder):
            return f.name
        if not f.args:
            return f.symbol
        return f"{f.symbol}({','.join(_term_canonical(t) for t in f.args)})"

    def quant(self, kind, variables, body: str) -> str:
        word = "forall" if kind is Forall else "exists"
        decls = " ".join(
            f"{v.name}:{v.sort}" if v.sort != sort_of_name(v.name) else v.name
            for v in variables
        )
        return f"{word} {decls}. {body}"


class _Isabelle(_Dialect):
    ops = {And: " ∧ ", Or: " ∨ ", Implies: " ⟶ ", Iff: " ⟷ "}
    neg = "¬"
    parens = staticmethod(_isabelle_parens)

    def atom(self, f) -> str:
        if isinstance(f, Placeholder):
            raise DialectUnsupportedConstruct(
                f"placeholder {f.name!r} has no Isabelle form"
            )
        if not f.args:
            return f.symbol
        return f"{f.symbol} {' '.join(t.name for t in f.args)}"

    def quant(self, kind, variables, body: str) -> str:
        sym = "∀" if kind is Forall else "∃"
        return f"{sym} {' '.join(v.name for v in variables)}. {body}"


def tptp_symbol(name: str) -> str:
    out = name[0].lower() + name[1:]
    if not out[0].isalpha():
        out = "p_" + out
    return out


def tptp_variable(name: str) -> str:
    return name[0].upper() + name[1:]


def _tptp_term(t) -> str:
    if isinstance(t, Variable):
        return tptp_variable(t.name)
    if isinstance(t, Constant):
        return tptp_symbol(t.name)
    if isinstance(t, SkolemApp):
        if t.args:
            return f"{tptp_symbol(t.name)}({','.join(_tptp_term(a) for a in t.args)})"
        return tptp_symbol(t.name)
    raise TypeError(f"not a term: {t!r}")


class _Tptp(_Dialect):
    ops = {And: " & ", Or: " | ", Implies: " => ", Iff: " <=> "}
    neg = "~"
    parens = staticmethod(_tptp_parens)

    def atom(self, f) -> str:
        if isinstance(f, Placeholder):
            raise DialectUnsupportedConstruct(
                f"placeholder {f.name!r} has no TPTP form"
            )
        if not f.args:
            return tptp_symbol(f.symbol)
        return f"{tptp_symbol(f.symbol)}({','.join(_tptp_term(t) for t in f.args)})"

    def quant(self, kind, variables, body: str) -> str:
        # One guard per variable keeps the sorted-to-unsorted encoding invertible.
        out = body
        for v in reversed(variables):
            name = tptp_variable(v.name)
            if kind is Forall:
                out = f"![{name}]: ({v.sort}({name}) => ({out}))"
            else:
                out = f"?[{name}]: ({v.sort}({name}) & ({out}))"
        return out


_CANONICAL = _Canonical()
_ISABELLE = _Isabelle()
_TPTP = _Tptp()


def render_canonical(phi: Formula) -> str:
    return _CANONICAL.render(phi)


def render_isabelle(phi: Formula) -> str:
    return _ISABELLE.render(phi)


def render_tptp(phi: Formula) -> str:
    return _TPTP.render(phi)


def render_formula(phi: Formula, dialect: str = "canonical") -> str:
    """Render phi in the given dialect: canonical, tptp-fof, or isabelle-inner."""
    if dialect == "canonical":
        return render_canonical(phi)
    if dialect in ("tptp-fof", "isabelle-inner"):
        ph = placeholders(phi)
        if ph:
            raise DialectUnsupportedConstruct(
                f"placeholders {sorted(ph)} not renderable in {dialect}"
            )
        return render_tptp(phi) if dialect == "tptp-fof" else render_isabelle(phi)
    raise ValueError(f"unknown dialect {dialect!r}")


def check_tptp_names(symbols) -> None:
    """Raise NameCollision when distinct symbols mangle to the same TPTP name."""
    seen: dict[str, str] = {}
    for sym in symbols:
        mangled = tptp_symbol(sym)
        if mangled in seen and seen[mangled] != sym:
            raise NameCollision(f"{sym!r} and {seen[mangled]!r} both map to {mangled!r}")
        seen[mangled] = sym
