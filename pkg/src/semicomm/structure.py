"""Isomorphisms, Rees coordinates and direct-product decompositions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import core
from .constructors import GroupSpec, ReesSpec, group_from_table, left_zero, rees_matrix, right_zero
from .errors import NotCompletelySimple, NotInverse, NotOrthodox, NotRegular
from .groups import is_abelian_group


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[x]`` is the image in the target of domain element ``x``."""

    mapping: tuple

    def validate(self, S, T):
        m = self.mapping
        if len(m) != S.order or S.order != T.order or sorted(m) != list(range(T.order)):
            return False
        rs, rt = S.rows, T.rows
        return all(m[rs[a][b]] == rt[m[a]][m[b]] for a in range(S.order) for b in range(S.order))

    def inverse(self):
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return IsoWitness(tuple(inv))


def _invariants(S):
    g = core.green_classes(S)
    r_sizes = Counter(g.r_class_of)
    l_sizes = Counter(g.l_class_of)
    rows = S.rows
    out = []
    for x in range(S.order):
        out.append((
            rows[x][x] == x,
            core.index_and_period(S, x),
            r_sizes[g.r_class_of[x]],
            l_sizes[g.l_class_of[x]],
            sum(1 for y in range(S.order) if rows[x][y] == x),
            sum(1 for y in range(S.order) if rows[y][x] == x),
            len(set(rows[x])),
            len({rows[y][x] for y in range(S.order)}),
        ))
    return out


def find_isomorphism(S, T):
    """An isomorphism ``S -> T`` as an :class:`IsoWitness`, or None."""
    if S.order != T.order:
        return None
    inv_s, inv_t = _invariants(S), _invariants(T)
    if Counter(inv_s) != Counter(inv_t):
        return None
    n = S.order
    cands = [[y for y in range(n) if inv_t[y] == inv_s[x]] for x in range(n)]
    rs, rt = S.rows, T.rows

    def assign(f, used, x, y):
        # set f[x] = y and propagate f(ab) = f(a)f(b); returns the list of
        # newly set elements, or None on contradiction
        added = []
        work = [(x, y)]
        while work:
            a, b = work.pop()
            if f[a] is not None:
                if f[a] != b:
                    return _undo(f, used, added)
                continue
            if b in used or inv_s[a] != inv_t[b]:
                return _undo(f, used, added)
            f[a] = b
            used.add(b)
            added.append(a)
            for c in range(n):
                fc = f[c]
                if fc is None:
                    continue
                work.append((rs[a][c], rt[b][fc]))
                work.append((rs[c][a], rt[fc][b]))
        return added

    def rec(f, used):
        free = [x for x in range(n) if f[x] is None]
        if not free:
            return True
        x = min(free, key=lambda z: (sum(1 for y in cands[z] if y not in used), z))
        for y in cands[x]:
            if y in used:
                continue
            added = assign(f, used, x, y)
            if added is None:
                continue
            if rec(f, used):
                return True
            _undo(f, used, added)
        return False

    f = [None] * n
    if not rec(f, set()):
        return None
    w = IsoWitness(tuple(f))
    assert w.validate(S, T)
    return w


def _undo(f, used, added):
    for a in added:
        used.discard(f[a])
        f[a] = None
    return None


def are_isomorphic(S, T):
    return find_isomorphism(S, T) is not None


# -- Rees coordinates ------------------------------------------------------


def _ordered_classes(labels, first_member):
    classes = {}
    for x, c in enumerate(labels):
        classes.setdefault(c, []).append(x)
    order = sorted(classes.values(), key=lambda cl: (first_member not in cl, cl[0]))
    return order


def rees_coordinatize(S):
    """Normalised :class:`ReesSpec` with ``rees_matrix(spec) ~= S``.

    Base point: the least idempotent ``e``.  Index 0 of I and of Lambda is
    the R-class and L-class of ``e``; other classes follow by least member.
    The group is the H-class of ``e`` with ``e`` relabelled 0 and the other
    elements in increasing id order.  Returns ``(spec, witness)`` where the
    witness maps ``rees_matrix(spec)`` onto ``S``.
    """
    if not core.is_completely_simple(S):
        raise NotCompletelySimple("semigroup is not completely simple")
    rows = S.rows
    e = S.idempotent_list[0]
    green = core.green_classes(S)
    r_classes = _ordered_classes(green.r_class_of, e)
    l_classes = _ordered_classes(green.l_class_of, e)
    H = sorted(set(r_classes[0]) & set(l_classes[0]))
    H.remove(e)
    H = [e] + H
    gid = {h: k for k, h in enumerate(H)}
    G = group_from_table([[gid[rows[a][b]] for b in H] for a in H], names=[S.name(h) for h in H])
    # idempotent representatives: r_i in R_i and L_e, q_lam in R_e and L_lam
    L_e, R_e = set(l_classes[0]), set(r_classes[0])
    r_rep = [next(x for x in cls if x in L_e and rows[x][x] == x) for cls in r_classes]
    q_rep = [next(x for x in cls if x in R_e and rows[x][x] == x) for cls in l_classes]
    sandwich = tuple(
        tuple(gid[rows[q][r]] for r in r_rep) for q in q_rep
    )
    spec = ReesSpec(G, len(r_classes), len(l_classes), sandwich)
    mapping = [0] * spec.order
    for i, r in enumerate(r_rep):
        for g, h in enumerate(H):
            for lam, q in enumerate(q_rep):
                mapping[spec.encode(i, g, lam)] = rows[rows[r][h]][q]
    w = IsoWitness(tuple(mapping))
    if not w.validate(rees_matrix(spec), S):
        raise AssertionError("Rees coordinatization failed to validate")
    return spec, w


# -- decompositions --------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """``S ~= G x left_zero(m) x right_zero(k)``; the witness maps the product onto S."""

    kind: str
    group: GroupSpec
    left_size: int
    right_size: int
    witness: IsoWitness
    degree: int | None = None

    def product(self):
        return core.direct_product([self.group.underlying, left_zero(self.left_size), right_zero(self.right_size)])

    def validate(self, S):
        return self.witness.validate(self.product(), S)

    def to_dict(self):
        return {
            "kind": self.kind,
            "group_order": self.group.order,
            "group_table": [list(r) for r in self.group.underlying.rows],
            "left_size": self.left_size,
            "right_size": self.right_size,
            "witness": list(self.witness.mapping),
            "degree": self.degree,
        }


def orthodox_cs_decomposition(S, kind="orthodox_cs"):
    if not core.is_completely_simple(S):
        raise NotCompletelySimple("semigroup is not completely simple")
    pair = core.non_closed_idempotent_pair(S)
    if pair is not None:
        raise NotOrthodox(
            f"idempotents {S.name(pair[0])}, {S.name(pair[1])} have a non-idempotent product",
            pair=pair,
        )
    spec, w = rees_coordinatize(S)
    e = spec.group.identity
    if any(v != e for row in spec.sandwich for v in row):
        raise AssertionError("orthodox completely simple semigroup with non-trivial normalised sandwich")
    m, k = spec.i_size, spec.lambda_size
    n_g = spec.group.order
    # product id (g, i, lam) -> Rees id (i, g, lam) -> S
    mapping = [0] * spec.order
    for g in range(n_g):
        for i in range(m):
            for lam in range(k):
                mapping[(g * m + i) * k + lam] = w.mapping[spec.encode(i, g, lam)]
    d = Decomposition(kind, spec.group, m, k, IsoWitness(tuple(mapping)))
    if not d.validate(S):
        raise AssertionError("decomposition witness failed to validate")
    return d


def warne_decomposition(S, **budget):
    """Decomposition with abelian group factor when S is abelian, else None."""
    from .series import is_abelian

    if not core.is_regular(S):
        raise NotRegular("semigroup is not regular")
    if not is_abelian(S, **budget):
        return None
    d = orthodox_cs_decomposition(S, kind="warne")
    if not is_abelian_group(d.group):
        raise AssertionError("abelian regular semigroup with non-abelian group factor")
    return d


def inverse_supernilpotent_decomposition(S, max_arity=3, **budget):
    """For an inverse semigroup: the group it is isomorphic to, if supernilpotent.

    Returns a Decomposition of kind ``inverse_group`` (band sizes 1) carrying
    the supernilpotency degree, or None when no degree is found within
    ``max_arity``.
    """
    from .series import supernilpotency_degree

    if not core.is_inverse_semigroup(S):
        raise NotInverse("semigroup is not an inverse semigroup")
    deg = supernilpotency_degree(S, max_arity=max_arity, **budget)
    if deg is None:
        return None
    d = orthodox_cs_decomposition(S, kind="inverse_group")
    return Decomposition("inverse_group", d.group, d.left_size, d.right_size, d.witness, deg)
