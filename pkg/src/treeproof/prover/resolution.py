"""Binary resolution with factoring in a given-clause saturation loop.

The loop is deterministic: clauses are selected by (weight, insertion order),
so enlarging the budget only extends a run, never reorders it.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field

from ..errors import BudgetInvalid, NotProved
from ..logic.syntax import Constant, SkolemApp, Term, Variable
from .clausify import Literal, SymbolGen, clausify


@dataclass(frozen=True)
class ProverBudget:
    max_clauses: int = 50000
    max_seconds: float = 5.0
    max_model_domain: int = 4

    def validate(self) -> None:
        if self.max_clauses <= 0 or self.max_seconds <= 0 or self.max_model_domain <= 0:
            raise BudgetInvalid(f"budget fields must be positive: {self}")


@dataclass
class DerivationStep:
    id: int
    literals: tuple
    rule: str  # axiom | goal | resolve | factor
    parents: tuple = ()
    axiom: str | None = None

    def __str__(self) -> str:
        body = " | ".join(map(str, self.literals)) or "[]"
        src = self.axiom or (f"{self.rule} {self.parents}" if self.parents else self.rule)
        return f"{self.id}: {body}  ({src})"


@dataclass
class ProofOutcome:
    status: str  # proved | refuted | unknown
    used_axioms: set = field(default_factory=set)
    derivation: list = field(default_factory=list)
    depth: int = 0
    failed_goal: object = None
    countermodel: object = None
    resource_note: str = ""

    @property
    def proved(self) -> bool:
        return self.status == "proved"


def proof_depth(outcome: ProofOutcome) -> int:
    """Longest chain of dependent inference steps; 0 iff the goal was an axiom."""
    if outcome.status != "proved":
        raise NotProved(f"no proof: status is {outcome.status}")
    return outcome.depth


# ---------------------------------------------------------------------------
# Unification


def _walk(t: Term, subst: dict) -> Term:
    while isinstance(t, Variable) and t.name in subst:
        t = subst[t.name]
    return t


def _occurs(name: str, t: Term, subst: dict) -> bool:
    t = _walk(t, subst)
    if isinstance(t, Variable):
        return t.name == name
    if isinstance(t, SkolemApp):
        return any(_occurs(name, a, subst) for a in t.args)
    return False


def _term_sort(t: Term) -> str:
    return t.sort


def unify_terms(a: Term, b: Term, subst: dict) -> dict | None:
    a = _walk(a, subst)
    b = _walk(b, subst)
    if isinstance(a, Variable):
        if isinstance(b, Variable) and b.name == a.name:
            return subst
        if _term_sort(a) != _term_sort(b) or _occurs(a.name, b, subst):
            return None
        out = dict(subst)
        out[a.name] = b
        return out
    if isinstance(b, Variable):
        return unify_terms(b, a, subst)
    if isinstance(a, Constant) and isinstance(b, Constant):
        return subst if a.name == b.name else None
    if isinstance(a, SkolemApp) and isinstance(b, SkolemApp):
        if a.name != b.name or len(a.args) != len(b.args):
            return None
        for x, y in zip(a.args, b.args):
            subst = unify_terms(x, y, subst)
            if subst is None:
                return None
        return subst
    return None


def unify_literals(a: Literal, b: Literal, subst: dict | None = None) -> dict | None:
    if a.symbol != b.symbol or len(a.args) != len(b.args):
        return None
    s = dict(subst) if subst else {}
    for x, y in zip(a.args, b.args):
        s = unify_terms(x, y, s)
        if s is None:
            return None
    return s


def apply_subst_term(t: Term, subst: dict) -> Term:
    t = _walk(t, subst)
    if isinstance(t, SkolemApp):
        return SkolemApp(t.name, tuple(apply_subst_term(a, subst) for a in t.args), t.sort)
    return t


def apply_subst_literal(l: Literal, subst: dict) -> Literal:
    return Literal(l.positive, l.symbol, tuple(apply_subst_term(t, subst) for t in l.args))


# ---------------------------------------------------------------------------
# Clause utilities


def _rename_literals(lits: tuple, suffix: str) -> tuple:
    def ren(t: Term) -> Term:
        if isinstance(t, Variable):
            return Variable(t.name + suffix, t.sort)
        if isinstance(t, SkolemApp):
            return SkolemApp(t.name, tuple(ren(a) for a in t.args), t.sort)
        return t

    return tuple(Literal(l.positive, l.symbol, tuple(ren(t) for t in l.args)) for l in lits)


def _canon_clause(lits) -> tuple:
    """Deduplicate and order literals; variables normalized positionally."""
    seen = dict.fromkeys(lits)
    ordered = sorted(seen, key=lambda l: (l.symbol, not l.positive, str(l)))
    return tuple(ordered)


def _clause_key(lits: tuple) -> tuple:
    """Renaming-invariant key used for duplicate detection."""
    names: dict[str, str] = {}

    def term_key(t: Term):
        if isinstance(t, Variable):
            if t.name not in names:
                names[t.name] = f"_{len(names)}"
            return ("v", names[t.name], t.sort)
        if isinstance(t, Constant):
            return ("c", t.name)
        return ("f", t.name) + tuple(term_key(a) for a in t.args)

    return tuple((l.positive, l.symbol) + tuple(term_key(t) for t in l.args) for l in lits)


def _is_tautology(lits: tuple) -> bool:
    s = set(lits)
    return any(l.negated() in s for l in lits)


def _weight(lits: tuple) -> int:
    def tw(t: Term) -> int:
        if isinstance(t, SkolemApp):
            return 1 + sum(tw(a) for a in t.args)
        return 1

    return sum(1 + sum(tw(t) for t in l.args) for l in lits)


def _subsumes(small: tuple, big: tuple) -> bool:
    """True when some substitution maps every literal of small into big."""
    if len(small) > len(big):
        return False

    def match(i: int, subst: dict) -> bool:
        if i == len(small):
            return True
        lit = apply_subst_literal(small[i], subst)
        for cand in big:
            if cand.positive != lit.positive or cand.symbol != lit.symbol:
                continue
            s = unify_literals(lit, cand, subst)
            # One-way match only: bind variables of `small`, never of `big`.
            if s is None:
                continue
            if any(k not in subst and _binds_big_var(k, big) for k in s):
                continue
            if match(i + 1, s):
                return True
        return False

    big_vars = _clause_vars(big)

    def _binds_big_var(name: str, _big) -> bool:
        return name in big_vars

    return match(0, {})


def _clause_vars(lits: tuple) -> set:
    out: set[str] = set()

    def walk(t: Term):
        if isinstance(t, Variable):
            out.add(t.name)
        elif isinstance(t, SkolemApp):
            for a in t.args:
                walk(a)

    for l in lits:
        for t in l.args:
            walk(t)
    return out


# ---------------------------------------------------------------------------
# Saturation


@dataclass
class _Record:
    id: int
    literals: tuple
    rule: str
    parents: tuple
    axiom: str | None
    depth: int


class Saturation:
    """Given-clause loop over the clause forms of axioms and negated goal."""

    def __init__(self, budget: ProverBudget):
        self.budget = budget
        self.records: list[_Record] = []
        self.queue: list = []
        self.processed: list[int] = []
        self.keys: set = set()
        self._push_count = 0

    def add_input(self, lits: tuple, rule: str, axiom: str | None) -> None:
        self._add(_canon_clause(lits), rule, (), axiom, 0)

    def _add(self, lits: tuple, rule: str, parents: tuple, axiom, depth: int) -> int | None:
        if _is_tautology(lits):
            return None
        key = _clause_key(lits)
        if key in self.keys:
            return None
        self.keys.add(key)
        rec = _Record(len(self.records), lits, rule, parents, axiom, depth)
        self.records.append(rec)
        self._push_count += 1
        heapq.heappush(self.queue, (_weight(lits), self._push_count, rec.id))
        return rec.id

    def run(self) -> tuple[str, int | None]:
        """Returns ("proved", empty_clause_id) | ("saturated", None) | ("budget", None)."""
        deadline = time.monotonic() + self.budget.max_seconds
        for rec in self.records:
            if not rec.literals:
                return "proved", rec.id
        while self.queue:
            if len(self.records) > self.budget.max_clauses or time.monotonic() > deadline:
                return "budget", None
            _, _, given_id = heapq.heappop(self.queue)
            given = self.records[given_id]
            if any(
                _subsumes(self.records[pid].literals, given.literals)
                for pid in self.processed
            ):
                continue
            empty = self._infer(given)
            if empty is not None:
                return "proved", empty
            self.processed.append(given_id)
        return "saturated", None

    def _infer(self, given: _Record) -> int | None:
        for factored, parent in self._factors(given):
            new_id = self._derive(factored, "factor", (parent,))
            if new_id is not None and not self.records[new_id].literals:
                return new_id
        for other_id in self.processed:
            other = self.records[other_id]
            for resolvent in self._resolvents(given, other):
                new_id = self._derive(resolvent, "resolve", (given.id, other_id))
                if new_id is not None and not self.records[new_id].literals:
                    return new_id
        return None

    def _derive(self, lits: tuple, rule: str, parents: tuple) -> int | None:
        lits = _canon_clause(lits)
        if _is_tautology(lits):
            return None
        for pid in self.processed:
            if _subsumes(self.records[pid].literals, lits):
                return None
        depth = 1 + max((self.records[p].depth for p in parents), default=0)
        return self._add(lits, rule, parents, None, depth)

    def _factors(self, rec: _Record):
        lits = rec.literals
        for i in range(len(lits)):
            for j in range(i + 1, len(lits)):
                if lits[i].positive != lits[j].positive:
                    continue
                s = unify_literals(lits[i], lits[j])
                if s is None:
                    continue
                out = tuple(
                    apply_subst_literal(l, s) for k, l in enumerate(lits) if k != j
                )
                yield out, rec.id

    def _resolvents(self, a: _Record, b: _Record):
        b_lits = _rename_literals(b.literals, "'")
        for i, la in enumerate(a.literals):
            for j, lb in enumerate(b_lits):
                if la.positive == lb.positive:
                    continue
                s = unify_literals(la, lb)
                if s is None:
                    continue
                rest = [l for k, l in enumerate(a.literals) if k != i]
                rest += [l for k, l in enumerate(b_lits) if k != j]
                yield tuple(apply_subst_literal(l, s) for l in rest)

    # -- proof reconstruction

    def proof(self, empty_id: int) -> tuple[list, set, int]:
        """Derivation steps reachable from the empty clause, used axiom names,
        and the inference depth of the refutation."""
        needed: set[int] = set()
        stack = [empty_id]
        while stack:
            cid = stack.pop()
            if cid in needed:
                continue
            needed.add(cid)
            stack.extend(self.records[cid].parents)
        steps = []
        used = set()
        for cid in sorted(needed):
            rec = self.records[cid]
            steps.append(
                DerivationStep(rec.id, rec.literals, rec.rule, rec.parents, rec.axiom)
            )
            if rec.axiom is not None:
                used.add(rec.axiom)
        return steps, used, self.records[empty_id].depth


def saturate_formulas(named_formulas, goal, budget: ProverBudget, taken_symbols=()):
    """Clausify axioms plus the negated goal and run saturation.

    named_formulas: iterable of (name, Formula).  Returns (status, sat, empty_id)
    where sat is the Saturation object.
    """
    from ..logic.syntax import Not as FNot

    gen = SymbolGen(set(taken_symbols))
    sat = Saturation(budget)
    for name, phi in named_formulas:
        for lits in clausify(phi, gen):
            sat.add_input(lits, "axiom", name)
    for lits in clausify(FNot(goal), gen):
        sat.add_input(lits, "goal", None)
    status, empty_id = sat.run()
    return status, sat, empty_id
