"""Finite semigroups given by Cayley tables, and their structural predicates.

Elements are the integers ``0..n-1``.  The table is stored twice: as a
read-only numpy array for vectorised work and as a tuple of tuples for the
scalar loops that dominate the small-order code paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from .errors import InputError, NotAssociative, NotIdempotent, OutOfRangeEntry


class FiniteSemigroup:
    """An associative binary operation on ``{0, ..., n-1}``.

    Construction validates the table exhaustively (O(n^3)); there is no way
    to skip the associativity check.  Instances are immutable.

    ``factors`` is set by :func:`direct_product` and records the factor
    algebras in coordinate order (last factor varies fastest in the id).
    """

    def __init__(self, table, names=None, factors=None):
        arr = np.asarray(table)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise InputError(f"table must be a non-empty square array, got shape {arr.shape}")
        if not np.issubdtype(arr.dtype, np.integer):
            raise InputError("table entries must be integers")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise OutOfRangeEntry(
                f"entry at ({bad[0]}, {bad[1]}) = {arr[bad[0], bad[1]]} not in [0, {n})"
            )
        arr = arr.astype(np.int64)
        _check_associative(arr)
        arr.setflags(write=False)
        self.order = n
        self.table = arr
        self.rows = tuple(tuple(int(v) for v in row) for row in arr)
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise InputError(f"expected {n} names, got {len(names)}")
        self.names = names
        self.factors = tuple(factors) if factors is not None else None

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __len__(self):
        return self.order

    def mul(self, a, b):
        return self.rows[a][b]

    def product(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = self.rows[acc][x]
        return acc

    def name(self, x):
        return self.names[x] if self.names else str(x)

    def coordinates(self, x):
        """Factor coordinates of ``x`` for a semigroup built by direct_product."""
        if self.factors is None:
            raise InputError("semigroup carries no factor metadata")
        return tuple(int(c) for c in np.unravel_index(x, [f.order for f in self.factors]))

    def from_coordinates(self, coords):
        if self.factors is None:
            raise InputError("semigroup carries no factor metadata")
        return int(np.ravel_multi_index(tuple(coords), [f.order for f in self.factors]))

    @cached_property
    def idempotent_list(self):
        return tuple(x for x in range(self.order) if self.rows[x][x] == x)


def _check_associative(arr):
    left = arr[arr]  # left[a, b, c] = (ab)c
    right = arr[:, arr]  # right[a, b, c] = a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise NotAssociative(a, b, c, int(left[a, b, c]), int(right[a, b, c]))


def new_semigroup(order, table, names=None):
    """Validate ``table`` as an ``order x order`` associative Cayley table."""
    S = FiniteSemigroup(table, names=names)
    if S.order != order:
        raise InputError(f"declared order {order} but table has {S.order} rows")
    return S


def relabel(S, perm):
    """Copy of ``S`` with element ``x`` renamed ``perm[x]``."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    t = perm[S.table[np.ix_(inv, inv)]]
    return FiniteSemigroup(t)


def opposite(S):
    """The anti-isomorphic copy ``x * y := y * x``."""
    return FiniteSemigroup(S.table.T.copy())


def direct_product(factors):
    """Componentwise product; id = mixed-radix coordinates, last factor fastest."""
    factors = list(factors)
    if not factors:
        raise InputError("direct_product needs at least one factor")
    sizes = [f.order for f in factors]
    n = prod(sizes)
    coords = np.unravel_index(np.arange(n), sizes)
    prod_coords = tuple(
        f.table[c[:, None], c[None, :]] for f, c in zip(factors, coords)
    )
    table = np.ravel_multi_index(prod_coords, sizes)
    names = None
    if all(f.names for f in factors):
        names = [
            "(" + ",".join(f.names[int(c[x])] for f, c in zip(factors, coords)) + ")"
            for x in range(n)
        ]
    return FiniteSemigroup(table, names=names, factors=factors)


# -- idempotents and the natural order -------------------------------------


def idempotents(S):
    return list(S.idempotent_list)


def natural_leq(S, e, f):
    r = S.rows
    if r[e][e] != e:
        raise NotIdempotent(f"{e} is not idempotent")
    if r[f][f] != f:
        raise NotIdempotent(f"{f} is not idempotent")
    return r[e][f] == e and r[f][e] == e


def is_idempotent_antichain(S):
    E = S.idempotent_list
    return not any(e != f and natural_leq(S, e, f) for e in E for f in E)


# -- regularity ------------------------------------------------------------


def is_regular(S):
    t = S.table
    # xyx for all x, y
    xyx = t[t, np.arange(S.order)[:, None]]  # xyx[x, y] = (x y) x
    return bool((xyx == np.arange(S.order)[:, None]).any(axis=1).all())


def inverses_of(S, x):
    r = S.rows
    return {y for y in range(S.order) if r[r[x][y]][x] == x and r[r[y][x]][y] == y}


def is_inverse_semigroup(S):
    return is_regular(S) and all(len(inverses_of(S, x)) == 1 for x in range(S.order))


def idempotents_commute(S):
    E = S.idempotent_list
    r = S.rows
    return all(r[e][f] == r[f][e] for e in E for f in E)


# -- bands -----------------------------------------------------------------


def is_band(S):
    return len(S.idempotent_list) == S.order


def is_left_zero(S):
    return bool((S.table == np.arange(S.order)[:, None]).all())


def is_right_zero(S):
    return bool((S.table == np.arange(S.order)[None, :]).all())


def is_rectangular_band(S):
    if not is_band(S):
        return False
    t = S.table
    xyx = t[t, np.arange(S.order)[:, None]]
    return bool((xyx == np.arange(S.order)[:, None]).all())


def is_commutative(S):
    return bool((S.table == S.table.T).all())


def is_orthodox(S):
    if not is_regular(S):
        return False
    return non_closed_idempotent_pair(S) is None


def non_closed_idempotent_pair(S):
    """First pair of idempotents whose product is not idempotent, or None."""
    E = S.idempotent_list
    r = S.rows
    for e in E:
        for f in E:
            p = r[e][f]
            if r[p][p] != p:
                return (e, f)
    return None


# -- ideals and Green's relations -----------------------------------------


def _right_ideal(S, a):
    return frozenset((a, *S.rows[a]))


def _left_ideal(S, a):
    return frozenset((a, *(S.rows[s][a] for s in range(S.order))))


def _two_sided_ideal(S, a):
    t = S.table
    col = t[:, a]
    sas = t[col]  # sas[s, u] = (s a) u
    return frozenset(
        {a} | set(t[a].tolist()) | set(col.tolist()) | set(sas.ravel().tolist())
    )


@dataclass(frozen=True)
class GreenClasses:
    """R- and L-class labels; class id = position of the class's least member."""

    r_class_of: tuple
    l_class_of: tuple

    @property
    def r_classes(self):
        return _classes_from_labels(self.r_class_of)

    @property
    def l_classes(self):
        return _classes_from_labels(self.l_class_of)


def _labels(keys):
    seen = {}
    out = []
    for k in keys:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


def _classes_from_labels(labels):
    classes = {}
    for x, c in enumerate(labels):
        classes.setdefault(c, []).append(x)
    return [classes[c] for c in sorted(classes)]


def green_classes(S):
    return GreenClasses(
        r_class_of=_labels(_right_ideal(S, a) for a in range(S.order)),
        l_class_of=_labels(_left_ideal(S, a) for a in range(S.order)),
    )


def is_simple(S):
    full = S.order
    return all(len(_two_sided_ideal(S, a)) == full for a in range(S.order))


def is_completely_simple(S):
    if not is_simple(S):
        return False
    E = S.idempotent_list
    return any(all(not natural_leq(S, f, e) or f == e for f in E) for e in E)


def index_and_period(S, x):
    """(index, period) of the monogenic subsemigroup generated by ``x``."""
    seen = {}
    p, k = x, 1
    while p not in seen:
        seen[p] = k
        p = S.rows[p][x]
        k += 1
    return seen[p], k - seen[p]


def classify(S):
    """Dictionary of the boolean structural predicates, keyed by name."""
    regular = is_regular(S)
    return {
        "order": S.order,
        "idempotents": len(S.idempotent_list),
        "regular": regular,
        "orthodox": regular and non_closed_idempotent_pair(S) is None,
        "inverse": is_inverse_semigroup(S),
        "simple": is_simple(S),
        "completely_simple": is_completely_simple(S),
        "band": is_band(S),
        "left_zero": is_left_zero(S),
        "right_zero": is_right_zero(S),
        "rectangular_band": is_rectangular_band(S),
        "commutative": is_commutative(S),
        "idempotent_antichain": is_idempotent_antichain(S),
    }
