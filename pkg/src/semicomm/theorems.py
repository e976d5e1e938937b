"""Executable checks of structural implications over a corpus of semigroups.

Each check looks at one algebra and returns one of four statuses:

``pass``     the hypothesis applies and the conclusion was verified
``fail``     the computed predicates contradict the implication
``vacuous``  the hypothesis does not apply to this algebra
``skipped``  a budget stopped the computation, or a degree needed for the
             comparison is undecided within the arity budget

A skipped check is never counted as a pass.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import cached_property
from itertools import product as iproduct

from . import core
from .commutator import DEFAULT_CUBE_CAP, commutator
from .congruence import (
    DEFAULT_LATTICE_CAP,
    Congruence,
    all_congruences,
    linked_triple,
    meet,
    product_congruence,
    verify_cong_product,
)
from .constructors import group_from_semigroup, rees_matrix
from .errors import BudgetExceeded, InvalidGroup
from .groups import derived_length, is_abelian_group, nilpotency_class
from .series import derived_series, lower_central_series, supernilpotency_report
from .structure import orthodox_cs_decomposition, rees_coordinatize

SCHEMA_VERSION = 1
STATUSES = ("pass", "fail", "vacuous", "skipped")


@dataclass(frozen=True)
class SuiteBudget:
    max_arity: int = 3
    max_terms: int = 8
    cube_cap: int = DEFAULT_CUBE_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    # per algebra; None means every triple of congruences
    max_triples: int | None = None
    # per algebra, for the product commutator rule
    max_product_pairs: int | None = 20_000


class _Skip(Exception):
    pass


class _Probe:
    """Lazily computed facts about one algebra, shared by all checks."""

    def __init__(self, S, budget):
        self.S = S
        self.budget = budget
        self.kw = {"cap": budget.cube_cap}

    @cached_property
    def lattice(self):
        return list(all_congruences(self.S, cap=self.budget.lattice_cap))

    def comm(self, alphas):
        return commutator(self.S, alphas, **self.kw)

    @cached_property
    def one(self):
        return Congruence.one(self.S.order)

    @cached_property
    def regular(self):
        return core.is_regular(self.S)

    @cached_property
    def orthodox(self):
        return core.is_orthodox(self.S)

    @cached_property
    def completely_simple(self):
        return core.is_completely_simple(self.S)

    @cached_property
    def nil(self):
        return lower_central_series(self.S, self.budget.max_terms, **self.kw)

    @cached_property
    def sol(self):
        return derived_series(self.S, self.budget.max_terms, **self.kw)

    @cached_property
    def sup(self):
        return supernilpotency_report(self.S, self.budget.max_arity, **self.kw)

    @cached_property
    def abelian(self):
        return self.comm([self.one, self.one]).is_zero()

    @cached_property
    def decomposition(self):
        if not (self.completely_simple and self.orthodox):
            return None
        return orthodox_cs_decomposition(self.S)

    @cached_property
    def group(self):
        """GroupSpec when the algebra is a group, else None."""
        try:
            return group_from_semigroup(self.S)
        except InvalidGroup:
            return None

    def degree(self, report):
        """Decided degree, None when decidedly absent; raises _Skip if unknown."""
        if report.degree is not None:
            return report.degree
        if report.kind == "supernilpotent_arity" or report.exhausted:
            raise _Skip(f"{report.kind} degree undecided within budget")
        return None

    def sup_reached(self):
        """Largest arity whose full commutator was actually computed."""
        return self.sup.first_arity + len(self.sup.terms) - 1


def _sup_vs(p, expected, what):
    """Compare the supernilpotency degree with an independently known degree."""
    if p.sup.degree is not None:
        if p.sup.degree != expected:
            return "fail", {"supernilpotent": p.sup.degree, what: expected}
        return "pass", {"degree": expected}
    if expected is not None and expected + 1 <= p.sup_reached():
        return "fail", {
            "supernilpotent": None,
            what: expected,
            f"arity_{expected + 1}_commutator": str(p.sup.terms[expected - 1]),
        }
    raise _Skip("supernilpotency degree undecided within arity budget")


# -- checks ---------------------------------------------------------------


def check_commutator_below_meet(p):
    for a in p.lattice:
        for b in p.lattice:
            c = p.comm([a, b])
            if not c.leq(meet(a, b)):
                return "fail", {"alpha": str(a), "beta": str(b), "commutator": str(c)}
    return "pass", {"pairs": len(p.lattice) ** 2}


def check_commutator_monotone(p):
    L = p.lattice
    table = {(a, b): p.comm([a, b]) for a in L for b in L}
    below = {a: [g for g in L if g.leq(a)] for a in L}
    for (a, b), big in table.items():
        for g in below[a]:
            for d in below[b]:
                small = table[(g, d)]
                if not small.leq(big):
                    return "fail", {"alpha": str(a), "beta": str(b), "gamma": str(g), "delta": str(d)}
    return "pass", {"pairs": len(table)}


def check_higher_below_binary(p):
    L = p.lattice
    total = len(L) ** 3
    if p.budget.max_triples is not None and total > p.budget.max_triples:
        raise _Skip(f"{total} triples exceed max_triples")
    for a1, a2, a3 in iproduct(L, repeat=3):
        hi = p.comm([a1, a2, a3])
        lo = p.comm([a2, a3])
        if not hi.leq(lo):
            return "fail", {"alphas": [str(a1), str(a2), str(a3)], "ternary": str(hi), "binary": str(lo)}
    return "pass", {"triples": total}


def check_idempotent_pair_in_commutator(p):
    S = p.S
    E = S.idempotent_list
    chains = [(e, f) for e in E for f in E if e != f and core.natural_leq(S, e, f)]
    if not chains:
        return "vacuous", {}
    checked = 0
    for e, f in chains:
        containing = [a for a in p.lattice if a.related(e, f)]
        for k in (2, 3):
            for alphas in iproduct(containing, repeat=k):
                c = p.comm(list(alphas))
                checked += 1
                if not c.related(e, f):
                    return "fail", {"e": e, "f": f, "alphas": [str(a) for a in alphas], "commutator": str(c)}
    return "pass", {"comparable_pairs": len(chains), "tuples": checked}


def check_antichain_of_idempotents(p):
    # nilpotent implies solvable, so a solvability or supernilpotency degree
    # is the weakest hypothesis that forces the antichain
    sol = p.degree(p.sol)
    hyp = sol is not None or p.sup.degree is not None
    if not hyp:
        return "vacuous", {}
    if not core.is_idempotent_antichain(p.S):
        return "fail", {"solvable": sol, "supernilpotent": p.sup.degree}
    return "pass", {}


def check_regular_degree_implies_completely_simple(p):
    if not p.regular:
        return "vacuous", {}
    sol = p.degree(p.sol)
    if sol is None:
        return "vacuous", {}
    if not p.completely_simple:
        return "fail", {"solvable": sol}
    return "pass", {"solvable": sol}


def check_regular_abelian_iff_decomposition(p):
    """Regular: abelian iff isomorphic to (abelian group) x left zero x right zero."""
    if not p.regular:
        return "vacuous", {}
    d = p.decomposition
    has_abelian_decomp = d is not None and is_abelian_group(d.group)
    if p.abelian != has_abelian_decomp:
        return "fail", {"abelian": p.abelian, "abelian_decomposition": has_abelian_decomp}
    if d is not None and not d.validate(p.S):
        return "fail", {"reason": "decomposition witness does not validate"}
    return "pass", {"abelian": p.abelian}


def check_zero_semigroups_abelian(p):
    if not (core.is_left_zero(p.S) or core.is_right_zero(p.S)):
        return "vacuous", {}
    return ("pass", {}) if p.abelian else ("fail", {"commutator": str(p.comm([p.one, p.one]))})


def check_group_nilpotent_degree_matches_class(p):
    G = p.group
    if G is None:
        return "vacuous", {}
    nil, cls = p.degree(p.nil), nilpotency_class(G)
    if nil != cls:
        return "fail", {"nilpotent": nil, "class": cls}
    sol, dl = p.degree(p.sol), derived_length(G)
    if sol != dl:
        return "fail", {"solvable": sol, "derived_length": dl}
    return "pass", {"class": cls, "derived_length": dl}


def check_group_supernilpotent_iff_nilpotent(p):
    G = p.group
    if G is None:
        return "vacuous", {}
    return _sup_vs(p, nilpotency_class(G), "class")


def check_completely_simple_group_inherits_degree(p):
    """The maximal subgroup is at most as nilpotent/solvable as S."""
    if not p.completely_simple:
        return "vacuous", {}
    spec, _ = rees_coordinatize(p.S)
    G = spec.group
    nil, sol = p.degree(p.nil), p.degree(p.sol)
    if nil is None and sol is None:
        return "vacuous", {}
    cls, dl = nilpotency_class(G), derived_length(G)
    if nil is not None and (cls is None or cls > nil):
        return "fail", {"nilpotent": nil, "group_class": cls}
    if sol is not None and (dl is None or dl > sol):
        return "fail", {"solvable": sol, "group_derived_length": dl}
    return "pass", {"nilpotent": nil, "solvable": sol}


def check_orthodox_nilpotent_iff_decomposition(p):
    if not p.orthodox:
        return "vacuous", {}
    nil = p.degree(p.nil)
    d = p.decomposition
    cls = nilpotency_class(d.group) if d is not None else None
    if nil != cls:
        return "fail", {"nilpotent": nil, "group_class": cls, "decomposed": d is not None}
    return "pass", {"degree": nil}


def check_orthodox_solvable_iff_decomposition(p):
    if not p.orthodox:
        return "vacuous", {}
    sol = p.degree(p.sol)
    d = p.decomposition
    dl = derived_length(d.group) if d is not None else None
    if sol != dl:
        return "fail", {"solvable": sol, "group_derived_length": dl, "decomposed": d is not None}
    return "pass", {"degree": sol}


def check_orthodox_supernilpotent_iff_nilpotent(p):
    if not p.orthodox:
        return "vacuous", {}
    return _sup_vs(p, p.degree(p.nil), "nilpotent")


def check_inverse_supernilpotent_iff_group(p):
    if not core.is_inverse_semigroup(p.S):
        return "vacuous", {}
    G = p.group
    if p.sup.degree is not None:
        if G is None:
            return "fail", {"supernilpotent": p.sup.degree, "group": False}
        if nilpotency_class(G) != p.sup.degree:
            return "fail", {"supernilpotent": p.sup.degree, "class": nilpotency_class(G)}
        return "pass", {"degree": p.sup.degree}
    if G is not None:
        return _sup_vs(p, nilpotency_class(G), "class")
    raise _Skip("not a group and supernilpotency undecided within arity budget")


def check_congruences_factor_through_triples(p):
    if not p.completely_simple:
        return "vacuous", {}
    spec, w = rees_coordinatize(p.S)
    R = rees_matrix(spec)
    seen = {}
    for theta in p.lattice:
        pulled = Congruence.from_labels([theta.class_of[w.mapping[x]] for x in range(R.order)])
        if not verify_cong_product(spec, pulled, R):
            return "fail", {"congruence": str(theta)}
        t = linked_triple(spec, pulled, R)
        if t in seen:
            return "fail", {"congruences": [seen[t], str(theta)], "reason": "same linked triple"}
        seen[t] = str(theta)
    return "pass", {"congruences": len(p.lattice)}


def check_skew_free_product_commutators(p):
    d = p.decomposition
    if d is None:
        return "vacuous", {}
    P = d.product()
    factors = P.factors
    lats = [list(all_congruences(f, cap=p.budget.lattice_cap)) for f in factors]
    combos = list(iproduct(*lats))
    n_pairs = len(combos) ** 2
    if p.budget.max_product_pairs is not None and n_pairs > p.budget.max_product_pairs:
        raise _Skip(f"{n_pairs} product pairs exceed max_product_pairs")
    if {product_congruence(c, P) for c in combos} != set(all_congruences(P, cap=p.budget.lattice_cap)):
        return "fail", {"reason": "product is not skew-free"}
    for a in combos:
        for b in combos:
            whole = commutator(P, [product_congruence(a, P), product_congruence(b, P)], **p.kw)
            parts = product_congruence(
                [commutator(f, [x, y], **p.kw) for f, x, y in zip(factors, a, b)], P
            )
            if whole != parts:
                return "fail", {"alpha": [str(x) for x in a], "beta": [str(y) for y in b],
                                "commutator": str(whole), "componentwise": str(parts)}
    return "pass", {"pairs": n_pairs}


CHECKS = {
    name[len("check_"):]: fn
    for name, fn in sorted(globals().items())
    if name.startswith("check_")
}


def run_checks(ident, S, budget=SuiteBudget(), theorems=None):
    """All (or the named) checks on one algebra, as sorted result dicts."""
    p = _Probe(S, budget)
    out = []
    for name in sorted(theorems or CHECKS):
        try:
            status, detail = CHECKS[name](p)
        except _Skip as exc:
            status, detail = "skipped", {"reason": str(exc)}
        except BudgetExceeded as exc:
            status, detail = "skipped", {"reason": f"{type(exc).__name__}: {exc}"}
        out.append({"algebra": ident, "theorem": name, "status": status, "detail": detail})
    return out


def _run_one(args):
    return run_checks(*args)


def verify_theorem_suite(corpus, budget=SuiteBudget(), workers=1, theorems=None):
    """Run the checks over ``corpus``, an iterable of ``(id, semigroup)`` pairs.

    The report is a plain dict; results are sorted by (algebra, theorem) and
    do not depend on ``workers``.
    """
    corpus = list(corpus)
    ids = [i for i, _ in corpus]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate algebra ids in corpus")
    if theorems is not None:
        unknown = sorted(set(theorems) - set(CHECKS))
        if unknown:
            raise ValueError(f"unknown theorems {unknown}")
    jobs = [(i, S, budget, theorems) for i, S in corpus]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        chunks = [_run_one(j) for j in jobs]
    results = sorted((r for c in chunks for r in c), key=lambda r: (r["algebra"], r["theorem"]))
    summary = {s: 0 for s in STATUSES}
    per_theorem = {}
    for r in results:
        summary[r["status"]] += 1
        per_theorem.setdefault(r["theorem"], {s: 0 for s in STATUSES})[r["status"]] += 1
    return {
        "schema_version": SCHEMA_VERSION,
        "budget": asdict(budget),
        "algebras": len(corpus),
        "summary": summary,
        "per_theorem": dict(sorted(per_theorem.items())),
        "counterexamples": [r for r in results if r["status"] == "fail"],
        "results": results,
    }
