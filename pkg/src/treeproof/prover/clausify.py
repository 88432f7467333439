"""Clausification: NNF -> standardize apart -> prenex -> Skolemize -> CNF."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from ..errors import UnsupportedConstruct
from ..logic.syntax import (
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
    SkolemApp,
    Term,
    Variable,
)


@dataclass(frozen=True)
class Literal:
    positive: bool
    symbol: str
    args: tuple = ()

    def negated(self) -> "Literal":
        return Literal(not self.positive, self.symbol, self.args)

    def __str__(self) -> str:
        s = f"{self.symbol}({','.join(map(_term_str, self.args))})" if self.args else self.symbol
        return s if self.positive else f"~{s}"


def _term_str(t: Term) -> str:
    if isinstance(t, SkolemApp) and t.args:
        return f"{t.name}({','.join(map(_term_str, t.args))})"
    return t.name


class SymbolGen:
    """Fresh-name source for Skolem symbols and renamed variables.

    Skolem names live in a reserved ``sk<N>`` namespace the parser cannot
    produce (it never constructs SkolemApp terms); clashes with user constants
    are avoided by skipping taken names.
    """

    def __init__(self, taken=()):
        self.taken = set(taken)
        self._sk = count(1)
        self._var = count(1)

    def skolem(self) -> str:
        while True:
            name = f"sk{next(self._sk)}"
            if name not in self.taken:
                self.taken.add(name)
                return name

    def variable(self, sort: str) -> Variable:
        n = next(self._var)
        base = "ev" if sort == "event" else "v"
        return Variable(f"{base}{n}_", sort)


def _eliminate(phi: Formula) -> Formula:
    """Remove Iff and Implies."""
    if isinstance(phi, PredApp):
        return phi
    if isinstance(phi, Placeholder):
        raise UnsupportedConstruct(f"placeholder {phi.name!r} cannot be clausified")
    if isinstance(phi, Not):
        return Not(_eliminate(phi.f))
    if isinstance(phi, And):
        return And(_eliminate(phi.left), _eliminate(phi.right))
    if isinstance(phi, Or):
        return Or(_eliminate(phi.left), _eliminate(phi.right))
    if isinstance(phi, Implies):
        return Or(Not(_eliminate(phi.left)), _eliminate(phi.right))
    if isinstance(phi, Iff):
        left = _eliminate(phi.left)
        right = _eliminate(phi.right)
        return And(Or(Not(left), right), Or(Not(right), left))
    if isinstance(phi, (Forall, Exists)):
        return type(phi)(phi.var, _eliminate(phi.body))
    raise TypeError(f"not a formula: {phi!r}")


def _nnf(phi: Formula) -> Formula:
    if isinstance(phi, PredApp):
        return phi
    if isinstance(phi, (And, Or)):
        return type(phi)(_nnf(phi.left), _nnf(phi.right))
    if isinstance(phi, (Forall, Exists)):
        return type(phi)(phi.var, _nnf(phi.body))
    if isinstance(phi, Not):
        f = phi.f
        if isinstance(f, PredApp):
            return phi
        if isinstance(f, Not):
            return _nnf(f.f)
        if isinstance(f, And):
            return Or(_nnf(Not(f.left)), _nnf(Not(f.right)))
        if isinstance(f, Or):
            return And(_nnf(Not(f.left)), _nnf(Not(f.right)))
        if isinstance(f, Forall):
            return Exists(f.var, _nnf(Not(f.body)))
        if isinstance(f, Exists):
            return Forall(f.var, _nnf(Not(f.body)))
    raise TypeError(f"unexpected node in NNF input: {phi!r}")


def _subst_term(t: Term, env: dict) -> Term:
    if isinstance(t, Variable):
        return env.get(t.name, t)
    if isinstance(t, SkolemApp):
        return SkolemApp(t.name, tuple(_subst_term(a, env) for a in t.args), t.sort)
    return t


def _standardize(phi: Formula, env: dict, gen: SymbolGen) -> Formula:
    if isinstance(phi, PredApp):
        return PredApp(phi.symbol, tuple(_subst_term(t, env) for t in phi.args))
    if isinstance(phi, Not):
        return Not(_standardize(phi.f, env, gen))
    if isinstance(phi, (And, Or)):
        return type(phi)(_standardize(phi.left, env, gen), _standardize(phi.right, env, gen))
    if isinstance(phi, (Forall, Exists)):
        fresh = gen.variable(phi.var.sort)
        inner = dict(env)
        inner[phi.var.name] = fresh
        return type(phi)(fresh, _standardize(phi.body, inner, gen))
    raise TypeError(f"unexpected node: {phi!r}")


def _skolemize(phi: Formula, universals: tuple, gen: SymbolGen, env: dict) -> Formula:
    if isinstance(phi, PredApp):
        return PredApp(phi.symbol, tuple(_subst_term(t, env) for t in phi.args))
    if isinstance(phi, Not):
        return Not(_skolemize(phi.f, universals, gen, env))
    if isinstance(phi, (And, Or)):
        return type(phi)(
            _skolemize(phi.left, universals, gen, env),
            _skolemize(phi.right, universals, gen, env),
        )
    if isinstance(phi, Forall):
        return Forall(phi.var, _skolemize(phi.body, universals + (phi.var,), gen, env))
    if isinstance(phi, Exists):
        sk: Term
        if universals:
            sk = SkolemApp(gen.skolem(), universals, phi.var.sort)
        else:
            sk = SkolemApp(gen.skolem(), (), phi.var.sort)
        inner = dict(env)
        inner[phi.var.name] = sk
        return _skolemize(phi.body, universals, gen, inner)
    raise TypeError(f"unexpected node: {phi!r}")


def _drop_foralls(phi: Formula) -> Formula:
    while isinstance(phi, Forall):
        phi = phi.body
    if isinstance(phi, (And, Or)):
        return type(phi)(_drop_foralls(phi.left), _drop_foralls(phi.right))
    if isinstance(phi, Not):
        return Not(_drop_foralls(phi.f))
    return phi


def _cnf(phi: Formula) -> list:
    """Matrix (quantifier-free NNF) to a list of literal lists."""
    if isinstance(phi, And):
        return _cnf(phi.left) + _cnf(phi.right)
    if isinstance(phi, Or):
        left = _cnf(phi.left)
        right = _cnf(phi.right)
        return [lc + rc for lc in left for rc in right]
    if isinstance(phi, Not):
        assert isinstance(phi.f, PredApp)
        return [[Literal(False, phi.f.symbol, phi.f.args)]]
    if isinstance(phi, PredApp):
        return [[Literal(True, phi.symbol, phi.args)]]
    raise TypeError(f"unexpected node in CNF input: {phi!r}")


def clausify(phi: Formula, gen: SymbolGen | None = None) -> list:
    """Translate a closed, placeholder-free formula to an equisatisfiable
    list of clauses (each clause a tuple of Literals)."""
    gen = gen or SymbolGen()
    f = _nnf(_eliminate(phi))
    f = _standardize(f, {}, gen)
    f = _skolemize(f, (), gen, {})
    f = _drop_foralls(f)
    clauses = []
    for lits in _cnf(f):
        seen = dict.fromkeys(lits)  # dedupe, preserve order
        lits = tuple(seen)
        if any(l.negated() in seen for l in lits):
            continue  # tautology
        clauses.append(lits)
    return clauses
