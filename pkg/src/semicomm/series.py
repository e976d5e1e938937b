"""Commutator series and the degree predicates built on them.

Degrees follow one convention throughout: degree 1 means abelian
(``[1, 1] = 0``).  A semigroup is n-nilpotent when the n-th term of
``(1,1]^(1) = [1,1], (1,1]^(k+1) = [1, (1,1]^(k)]`` is 0, n-solvable when
the n-th term of ``[1]^(1) = [1,1], [1]^(k+1) = [[1]^(k), [1]^(k)]`` is 0,
and n-supernilpotent when the (n+1)-ary commutator ``[1, ..., 1]`` is 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .commutator import DEFAULT_CUBE_CAP, DEFAULT_MAX_DIMENSION, commutator
from .congruence import Congruence
from .errors import BudgetExceeded, InputError

DEFAULT_MAX_TERMS = 8
DEFAULT_MAX_ARITY = 3


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple
    stabilized: bool
    degree: int | None
    exhausted: bool = False
    # supernilpotency only: arity of terms[0]
    first_arity: int = 2

    def to_dict(self):
        out = {
            "kind": self.kind,
            "terms": [str(t) for t in self.terms],
            "stabilized": self.stabilized,
            "degree": self.degree,
            "budget_exhausted": self.exhausted,
        }
        if self.kind == "supernilpotent_arity":
            out["arities"] = list(range(self.first_arity, self.first_arity + len(self.terms)))
        return out


def _budget(budget):
    return {
        "cap": budget.get("cap", DEFAULT_CUBE_CAP),
        "max_dimension": budget.get("max_dimension", DEFAULT_MAX_DIMENSION),
    }


def _iterate(S, kind, step, max_terms, budget):
    if max_terms < 1:
        raise InputError("max_terms must be >= 1")
    one = Congruence.one(S.order)
    terms = [commutator(S, [one, one], **budget)]
    while True:
        last = terms[-1]
        if last.is_zero():
            return SeriesReport(kind, tuple(terms), False, len(terms))
        if len(terms) >= max_terms:
            return SeriesReport(kind, tuple(terms), False, None, exhausted=True)
        nxt = step(last)
        if nxt == last:
            return SeriesReport(kind, tuple(terms), True, None)
        terms.append(nxt)


def lower_central_series(S, max_terms=DEFAULT_MAX_TERMS, **budget):
    budget = _budget(budget)
    one = Congruence.one(S.order)
    return _iterate(S, "lower_central", lambda t: commutator(S, [one, t], **budget), max_terms, budget)


def derived_series(S, max_terms=DEFAULT_MAX_TERMS, **budget):
    budget = _budget(budget)
    return _iterate(S, "derived", lambda t: commutator(S, [t, t], **budget), max_terms, budget)


def supernilpotency_report(S, max_arity=DEFAULT_MAX_ARITY, **budget):
    """k-ary ``[1, ..., 1]`` for k = 2..max_arity, stopping at the first 0.

    Arities the budget cannot reach are not computed and mark the report
    exhausted.
    """
    budget = _budget(budget)
    if max_arity < 2:
        raise InputError("max_arity must be >= 2")
    one = Congruence.one(S.order)
    terms = []
    for k in range(2, max_arity + 1):
        try:
            val = commutator(S, [one] * k, **budget)
        except BudgetExceeded:
            return SeriesReport("supernilpotent_arity", tuple(terms), False, None, exhausted=True)
        terms.append(val)
        if val.is_zero():
            return SeriesReport("supernilpotent_arity", tuple(terms), False, k - 1)
    stabilized = len(terms) >= 2 and terms[-1] == terms[-2]
    return SeriesReport("supernilpotent_arity", tuple(terms), stabilized, None, exhausted=True)


def supernilpotency_degree(S, max_arity=DEFAULT_MAX_ARITY, **budget):
    return supernilpotency_report(S, max_arity, **budget).degree


def nilpotency_degree(S, max_terms=DEFAULT_MAX_TERMS, **budget):
    return lower_central_series(S, max_terms, **budget).degree


def solvability_degree(S, max_terms=DEFAULT_MAX_TERMS, **budget):
    return derived_series(S, max_terms, **budget).degree


def is_abelian(S, **budget):
    one = Congruence.one(S.order)
    return commutator(S, [one, one], **_budget(budget)).is_zero()


def is_nilpotent(S, n, **budget):
    d = nilpotency_degree(S, max_terms=n, **budget)
    return d is not None and d <= n


def is_solvable(S, n, **budget):
    d = solvability_degree(S, max_terms=n, **budget)
    return d is not None and d <= n


def is_supernilpotent(S, n, **budget):
    d = supernilpotency_degree(S, max_arity=n + 1, **budget)
    return d is not None and d <= n


def degrees(S, max_terms=DEFAULT_MAX_TERMS, max_arity=DEFAULT_MAX_ARITY, **budget):
    return {
        "nilpotent": lower_central_series(S, max_terms, **budget),
        "solvable": derived_series(S, max_terms, **budget),
        "supernilpotent": supernilpotency_report(S, max_arity, **budget),
    }
