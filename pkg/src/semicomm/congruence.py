"""Congruences of finite semigroups.

A congruence is stored as a canonical label vector: ``class_of[x]`` is the
least element of the class of ``x``.  Two congruences on the same algebra are
equal iff their label vectors are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from .errors import (
    AlgebraMismatch,
    InputError,
    LatticeTooLarge,
    MalformedPartition,
    NotACongruence,
    NotLinked,
)

DEFAULT_LATTICE_CAP = 100_000


def canonical_labels(labels):
    """Relabel so each class is named by its least member."""
    first = {}
    out = []
    for x, c in enumerate(labels):
        if c not in first:
            first[c] = x
        out.append(first[c])
    return tuple(out)


@dataclass(frozen=True, order=True)
class Congruence:
    """Partition of ``{0..n-1}``; ordering is lexicographic on ``class_of``."""

    class_of: tuple
    algebra_order: int = field(compare=False, default=-1)

    def __post_init__(self):
        object.__setattr__(self, "algebra_order", len(self.class_of))

    @classmethod
    def from_labels(cls, labels):
        return cls(canonical_labels(labels))

    @classmethod
    def from_blocks(cls, n, blocks):
        labels = [None] * n
        for b, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n:
                    raise MalformedPartition(f"element {x} out of range for n={n}")
                if labels[x] is not None:
                    raise MalformedPartition(f"element {x} appears in two blocks")
                labels[x] = b
        missing = [x for x in range(n) if labels[x] is None]
        if missing:
            raise MalformedPartition(f"elements {missing} not covered")
        return cls.from_labels(labels)

    @classmethod
    def zero(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @property
    def n(self):
        return len(self.class_of)

    def related(self, a, b):
        return self.class_of[a] == self.class_of[b]

    def blocks(self):
        out = {}
        for x, c in enumerate(self.class_of):
            out.setdefault(c, []).append(x)
        return [out[c] for c in sorted(out)]

    @property
    def num_classes(self):
        return len(set(self.class_of))

    def is_zero(self):
        return self.class_of == tuple(range(self.n))

    def is_one(self):
        return all(c == 0 for c in self.class_of)

    def leq(self, other):
        """Containment as sets of pairs."""
        _same(self, other)
        # self <= other iff each self-class lies inside one other-class
        rep = {}
        for x, c in enumerate(self.class_of):
            d = other.class_of[x]
            if rep.setdefault(c, d) != d:
                return False
        return True

    def pairs(self):
        return [(a, b) for a in range(self.n) for b in range(self.n) if self.class_of[a] == self.class_of[b]]

    @cached_property
    def labels_array(self):
        arr = np.asarray(self.class_of, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def __str__(self):
        return format_partition(self)


def _same(a, b):
    if a.n != b.n:
        raise AlgebraMismatch(f"congruences on algebras of order {a.n} and {b.n}")


def format_partition(theta):
    return "{" + "|".join(",".join(str(x) for x in block) for block in theta.blocks()) + "}"


def parse_partition(text, n=None):
    """Parse ``{0,3|1,2}``; ``n`` defaults to one more than the largest element."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise MalformedPartition(f"partition must be written {{a,b|c,...}}: {text!r}")
    body = text[1:-1].strip()
    blocks = []
    if body:
        for chunk in body.split("|"):
            try:
                blocks.append([int(x) for x in chunk.split(",") if x.strip() != ""])
            except ValueError as exc:
                raise MalformedPartition(f"bad block {chunk!r}") from exc
            if not blocks[-1]:
                raise MalformedPartition("empty block")
    if n is None:
        n = 1 + max((x for b in blocks for x in b), default=-1)
    return Congruence.from_blocks(n, blocks)


# -- union-find ------------------------------------------------------------


class _UnionFind:
    def __init__(self, labels):
        self.parent = list(labels)

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            self.parent[rb] = ra
        else:
            self.parent[ra] = rb
        return True

    def labels(self):
        return [self.find(x) for x in range(len(self.parent))]


def congruence_closure(S, pairs, base=None):
    """Least congruence containing ``base`` (a congruence) and ``pairs``."""
    n = S.order
    uf = _UnionFind(base.class_of if base is not None else range(n))
    rows = S.rows
    cols = tuple(tuple(rows[s][x] for s in range(n)) for x in range(n))
    stack = list(pairs)
    while stack:
        x, y = stack.pop()
        if not uf.union(x, y):
            continue
        rx, ry = rows[x], rows[y]
        cx, cy = cols[x], cols[y]
        for s in range(n):
            if rx[s] != ry[s]:
                stack.append((rx[s], ry[s]))
            if cx[s] != cy[s]:
                stack.append((cx[s], cy[s]))
    return Congruence.from_labels(uf.labels())


def principal_congruence(S, a, b):
    return congruence_closure(S, [(a, b)])


def is_congruence(S, theta):
    """Translation compatibility of a partition (a Congruence or label list)."""
    if not isinstance(theta, Congruence):
        theta = Congruence.from_labels(theta)
    if theta.n != S.order:
        raise MalformedPartition(f"partition has {theta.n} points, algebra has {S.order}")
    lab = theta.labels_array
    t = S.table
    # each element must translate like its class representative lab[a]
    right_mul = lab[t]  # [a, s] -> class of a*s
    left_mul = lab[t.T]  # [a, s] -> class of s*a
    return bool((right_mul == right_mul[lab]).all() and (left_mul == left_mul[lab]).all())


def join(t1, t2):
    _same(t1, t2)
    uf = _UnionFind(t1.class_of)
    for x, c in enumerate(t2.class_of):
        uf.union(x, c)
    return Congruence.from_labels(uf.labels())


def meet(t1, t2):
    _same(t1, t2)
    return Congruence.from_labels(list(zip(t1.class_of, t2.class_of)))


# -- the lattice -----------------------------------------------------------


class CongruenceLattice:
    """All congruences of an algebra, sorted lexicographically by labels."""

    def __init__(self, members):
        self.members = tuple(sorted(set(members)))
        self._index = {m: k for k, m in enumerate(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, theta):
        return theta in self._index

    def index(self, theta):
        return self._index[theta]

    @property
    def n(self):
        return self.members[0].n

    @property
    def zero(self):
        return Congruence.zero(self.n)

    @property
    def one(self):
        return Congruence.one(self.n)

    @cached_property
    def leq(self):
        m = len(self.members)
        out = np.zeros((m, m), dtype=bool)
        for i, a in enumerate(self.members):
            for j, b in enumerate(self.members):
                out[i, j] = a.leq(b)
        out.setflags(write=False)
        return out

    def covers(self):
        """Covering pairs ``(lower, upper)`` as member indices."""
        L = self.leq
        m = len(self.members)
        out = []
        for i in range(m):
            for j in range(m):
                if i != j and L[i, j]:
                    if not any(k != i and k != j and L[i, k] and L[k, j] for k in range(m)):
                        out.append((i, j))
        return out

    def to_dot(self, name="congruences"):
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for k, m in enumerate(self.members):
            lines.append(f'  n{k} [label="{format_partition(m)}"];')
        for i, j in self.covers():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def all_congruences(S, cap=DEFAULT_LATTICE_CAP):
    """Join-closure of the principal congruences (plus 0)."""
    n = S.order
    zero = Congruence.zero(n)
    principals = []
    seen_p = set()
    for a in range(n):
        for b in range(a + 1, n):
            p = principal_congruence(S, a, b)
            if p not in seen_p:
                seen_p.add(p)
                principals.append(p)
    members = {zero, *principals}
    frontier = list(principals)
    while frontier:
        nxt = []
        for m in frontier:
            for p in principals:
                if p.leq(m):
                    continue
                j = join(m, p)
                if j not in members:
                    members.add(j)
                    nxt.append(j)
                    if len(members) > cap:
                        raise LatticeTooLarge(f"more than {cap} congruences")
        frontier = nxt
    return CongruenceLattice(members)


# -- products --------------------------------------------------------------


def product_congruence(thetas, product=None):
    """Componentwise congruence on the product of the factor algebras.

    Element ids follow :func:`semicomm.core.direct_product` (last factor
    varies fastest).  If ``product`` is given its factor orders are checked.
    """
    thetas = list(thetas)
    sizes = [t.n for t in thetas]
    if product is not None:
        if product.factors is None:
            raise InputError("product_congruence needs a direct_product algebra")
        if [f.order for f in product.factors] != sizes:
            raise AlgebraMismatch("factor orders do not match the congruences")
    grids = np.meshgrid(*[t.labels_array for t in thetas], indexing="ij")
    labels = np.ravel_multi_index(tuple(grids), sizes).ravel()
    return Congruence.from_labels(labels.tolist())


def is_skew_free(S, lattice=None):
    if S.factors is None:
        raise InputError("is_skew_free requires a semigroup built by direct_product")
    lattice = lattice if lattice is not None else all_congruences(S)
    factor_lattices = [all_congruences(f) for f in S.factors]
    products = {product_congruence(combo) for combo in iproduct(*factor_lattices)}
    return all(m in products for m in lattice)


# -- linked triples for Rees matrix semigroups ----------------------------


@dataclass(frozen=True)
class LinkedTriple:
    rho_I: Congruence
    N: tuple
    rho_Lambda: Congruence

    def leq(self, other):
        return (
            self.rho_I.leq(other.rho_I)
            and set(self.N) <= set(other.N)
            and self.rho_Lambda.leq(other.rho_Lambda)
        )


def is_normal_subgroup(G, N):
    N = set(N)
    r = G.underlying.rows
    if G.identity not in N:
        return False
    if any(r[a][b] not in N for a in N for b in N):
        return False
    if any(G.inverse[a] not in N for a in N):
        return False
    return all(r[r[g][a]][G.inverse[g]] in N for g in range(G.order) for a in N)


def _rees_semigroup(spec):
    from .constructors import rees_matrix

    return rees_matrix(spec)


def linked_triple(spec, rho, S=None):
    S = S if S is not None else _rees_semigroup(spec)
    if rho.n != S.order or not is_congruence(S, rho):
        raise NotACongruence("rho is not a congruence of the Rees matrix semigroup")
    e = spec.group.identity
    enc = spec.encode
    rho_I = Congruence.from_labels([rho.class_of[enc(i, e, 0)] for i in range(spec.i_size)])
    rho_L = Congruence.from_labels([rho.class_of[enc(0, e, lam)] for lam in range(spec.lambda_size)])
    base = rho.class_of[enc(0, e, 0)]
    N = tuple(g for g in range(spec.group.order) if rho.class_of[enc(0, g, 0)] == base)
    if not is_normal_subgroup(spec.group, N):
        raise NotACongruence(f"N = {N} is not a normal subgroup")
    return LinkedTriple(rho_I, N, rho_L)


def coset_congruence(G, N):
    """Group congruence ``g ~ h  iff  g^-1 h in N``."""
    N = set(N)
    r = G.underlying.rows
    return Congruence.from_labels(
        [min(r[g][k] for k in N) for g in range(G.order)]
    )


def congruence_from_triple(spec, triple, S=None):
    if not is_normal_subgroup(spec.group, triple.N):
        raise NotLinked(f"{triple.N} is not a normal subgroup")
    if triple.rho_I.n != spec.i_size or triple.rho_Lambda.n != spec.lambda_size:
        raise AlgebraMismatch("triple index partitions have the wrong sizes")
    rho_G = coset_congruence(spec.group, triple.N)
    S = S if S is not None else _rees_semigroup(spec)
    labels = []
    for x in range(spec.order):
        i, g, lam = spec.decode(x)
        labels.append((triple.rho_I.class_of[i], rho_G.class_of[g], triple.rho_Lambda.class_of[lam]))
    theta = Congruence.from_labels(labels)
    if not is_congruence(S, theta):
        raise NotLinked("triple does not determine a congruence")
    return theta


def verify_cong_product(spec, rho, S=None):
    S = S if S is not None else _rees_semigroup(spec)
    return congruence_from_triple(spec, linked_triple(spec, rho, S), S) == rho
