"""Constructors for the algebras used throughout the package.

Rees matrix semigroups ``M[G; I, L; P]`` encode ``(i, g, lam)`` as the id
``(i * |G| + g) * |L| + lam`` (lambda varies fastest), matching the
mixed-radix convention of :func:`semicomm.core.direct_product` for
``I x G x L``.  Index 0 of ``I`` and of ``L`` is the distinguished index at
which the sandwich matrix is normalised.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .core import FiniteSemigroup
from .errors import InvalidGroup, NotNormalized, UnknownGroupName


@dataclass(frozen=True, eq=False)
class GroupSpec:
    underlying: FiniteSemigroup
    identity: int
    inverse: tuple

    @property
    def order(self):
        return self.underlying.order

    def mul(self, a, b):
        return self.underlying.rows[a][b]


def group_from_semigroup(S):
    """Validate ``S`` as a group and return its :class:`GroupSpec`."""
    r = S.rows
    n = S.order
    ids = [e for e in range(n) if all(r[e][x] == x == r[x][e] for x in range(n))]
    if not ids:
        raise InvalidGroup("no two-sided identity")
    e = ids[0]
    inverse = []
    for x in range(n):
        inv = [y for y in range(n) if r[x][y] == e == r[y][x]]
        if not inv:
            raise InvalidGroup(f"element {x} has no inverse")
        inverse.append(inv[0])
    return GroupSpec(S, e, tuple(inverse))


def group_from_table(table, names=None):
    return group_from_semigroup(FiniteSemigroup(table, names=names))


def cyclic_group(n):
    if n < 1:
        raise InvalidGroup("cyclic group order must be >= 1")
    t = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    names = ["e"] + (["g"] if n == 2 else [f"g{k}" for k in range(1, n)])
    return group_from_table(t, names=names[:n])


# Literal tables, identity at id 0.  S3 and D4 are permutation groups under
# composition (a*b)(x) = a(b(x)); Q8 elements are 1, i, j, -1, k, -k, -i, -j.
_BUILTIN_GROUPS = {
    "S3": (
        [
            [0, 1, 2, 3, 4, 5],
            [1, 3, 4, 0, 5, 2],
            [2, 5, 0, 4, 3, 1],
            [3, 0, 5, 1, 2, 4],
            [4, 2, 1, 5, 0, 3],
            [5, 4, 3, 2, 1, 0],
        ],
        ["012", "120", "102", "201", "210", "021"],
    ),
    "D4": (
        [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 3, 4, 6, 7, 2, 0, 5],
            [2, 5, 0, 7, 6, 1, 4, 3],
            [3, 6, 7, 0, 5, 4, 1, 2],
            [4, 2, 1, 5, 0, 3, 7, 6],
            [5, 7, 6, 4, 3, 0, 2, 1],
            [6, 0, 5, 1, 2, 7, 3, 4],
            [7, 4, 3, 2, 1, 6, 5, 0],
        ],
        ["0123", "1230", "0321", "2301", "1032", "3210", "3012", "2103"],
    ),
    "Q8": (
        [
            [0, 1, 2, 3, 4, 5, 6, 7],
            [1, 3, 4, 6, 7, 2, 0, 5],
            [2, 5, 3, 7, 1, 6, 4, 0],
            [3, 6, 7, 0, 5, 4, 1, 2],
            [4, 2, 6, 5, 3, 0, 7, 1],
            [5, 7, 1, 4, 0, 3, 2, 6],
            [6, 0, 5, 1, 2, 7, 3, 4],
            [7, 4, 0, 2, 6, 1, 5, 3],
        ],
        ["1", "i", "j", "-1", "k", "-k", "-i", "-j"],
    ),
    "C2xC2": (
        [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
        ["e", "a", "b", "ab"],
    ),
}

BUILTIN_GROUP_NAMES = tuple(_BUILTIN_GROUPS)


def builtin_group(name):
    if name not in _BUILTIN_GROUPS:
        m = re.fullmatch(r"C(\d+)", name)
        if m and int(m.group(1)) >= 1:
            return cyclic_group(int(m.group(1)))
        raise UnknownGroupName(f"unknown group {name!r}; known: {', '.join(BUILTIN_GROUP_NAMES)}, C<n>")
    table, names = _BUILTIN_GROUPS[name]
    return group_from_table(table, names=names)


# -- bands -----------------------------------------------------------------


def left_zero(n):
    return FiniteSemigroup(np.repeat(np.arange(n)[:, None], n, axis=1))


def right_zero(n):
    return FiniteSemigroup(np.repeat(np.arange(n)[None, :], n, axis=0))


def rectangular_band(m, k):
    """``{0..m-1} x {0..k-1}`` with ``(l1, r1)(l2, r2) = (l1, r2)``; id = l*k + r."""
    ids = np.arange(m * k)
    left, right = ids // k, ids % k
    return FiniteSemigroup(left[:, None] * k + right[None, :])


def trivial():
    return FiniteSemigroup([[0]])


def adjoin_zero(S):
    """``S`` plus a new absorbing element with id ``S.order``."""
    n = S.order
    t = np.full((n + 1, n + 1), n, dtype=np.int64)
    t[:n, :n] = S.table
    names = None
    if S.names:
        names = list(S.names) + ["0"]
    return FiniteSemigroup(t, names=names)


def null_semigroup(n):
    """Constant product ``xy = 0``."""
    return FiniteSemigroup(np.zeros((n, n), dtype=np.int64))


# -- Rees matrix semigroups -----------------------------------------------


@dataclass(frozen=True, eq=False)
class ReesSpec:
    """Data ``(G, |I|, |L|, P)`` of a Rees matrix semigroup.

    ``sandwich[lam][i]`` is the group element ``p_{lam,i}``.  Row 0 and
    column 0 must be the group identity.
    """

    group: GroupSpec
    i_size: int
    lambda_size: int
    sandwich: tuple

    def __post_init__(self):
        object.__setattr__(self, "sandwich", tuple(tuple(int(v) for v in row) for row in self.sandwich))
        validate_rees_spec(self)

    def encode(self, i, g, lam):
        return (i * self.group.order + g) * self.lambda_size + lam

    def decode(self, x):
        rest, lam = divmod(x, self.lambda_size)
        i, g = divmod(rest, self.group.order)
        return i, g, lam

    @property
    def order(self):
        return self.i_size * self.group.order * self.lambda_size

    def __eq__(self, other):
        if not isinstance(other, ReesSpec):
            return NotImplemented
        return (
            self.group.underlying == other.group.underlying
            and self.i_size == other.i_size
            and self.lambda_size == other.lambda_size
            and self.sandwich == other.sandwich
        )

    __hash__ = None


def validate_rees_spec(spec):
    G = spec.group
    if spec.i_size < 1 or spec.lambda_size < 1:
        raise InvalidGroup("index sets must be non-empty")
    if len(spec.sandwich) != spec.lambda_size or any(len(r) != spec.i_size for r in spec.sandwich):
        raise NotNormalized(
            f"sandwich must be {spec.lambda_size} x {spec.i_size} (rows indexed by lambda)"
        )
    for row in spec.sandwich:
        for v in row:
            if not 0 <= v < G.order:
                raise InvalidGroup(f"sandwich entry {v} is not a group element")
    e = G.identity
    for i in range(spec.i_size):
        if spec.sandwich[0][i] != e:
            raise NotNormalized(f"p[0][{i}] is not the identity", index=("i", i))
    for lam in range(spec.lambda_size):
        if spec.sandwich[lam][0] != e:
            raise NotNormalized(f"p[{lam}][0] is not the identity", index=("lambda", lam))


def rees_matrix(spec):
    G = spec.group
    gt = G.underlying.table
    n_i, n_g, n_l = spec.i_size, G.order, spec.lambda_size
    P = np.asarray(spec.sandwich, dtype=np.int64)
    ids = np.arange(n_i * n_g * n_l)
    i, g, lam = np.unravel_index(ids, (n_i, n_g, n_l))
    # (i,g,lam)(j,h,mu) = (i, g p[lam][j] h, mu)
    mid = gt[gt[g[:, None], P[lam[:, None], i[None, :]]], g[None, :]]
    table = np.ravel_multi_index(
        (np.broadcast_to(i[:, None], mid.shape), mid, np.broadcast_to(lam[None, :], mid.shape)),
        (n_i, n_g, n_l),
    )
    gname = G.underlying.name
    names = [f"({a + 1},{gname(b)},{c + 1})" for a, b, c in zip(i, g, lam)]
    return FiniteSemigroup(table, names=names)


def identity_sandwich(group, i_size, lambda_size):
    return tuple((group.identity,) * i_size for _ in range(lambda_size))


def paper_S2_spec():
    C2 = cyclic_group(2)
    g = 1
    return ReesSpec(C2, 2, 2, ((0, 0), (0, g)))


def paper_S2():
    """``M[C2; {1,2}, {1,2}; [[e, e], [e, g]]]``, order 8."""
    return rees_matrix(paper_S2_spec())


def random_rees_spec(rng, max_group=4, max_i=3, max_lambda=3, groups=None):
    """Random normalised spec; ``rng`` is a ``numpy.random.Generator``."""
    if groups is None:
        groups = [cyclic_group(n) for n in range(1, max_group + 1)]
        if max_group >= 4:
            groups.append(builtin_group("C2xC2"))
    G = groups[int(rng.integers(len(groups)))]
    n_i = int(rng.integers(1, max_i + 1))
    n_l = int(rng.integers(1, max_lambda + 1))
    P = rng.integers(0, G.order, size=(n_l, n_i))
    P[0, :] = G.identity
    P[:, 0] = G.identity
    return ReesSpec(G, n_i, n_l, tuple(map(tuple, P.tolist())))


# -- named algebras --------------------------------------------------------

_NAME_PATTERNS = [
    (r"paper_S2", lambda m: paper_S2()),
    (r"trivial", lambda m: trivial()),
    (r"LZ(\d+)", lambda m: left_zero(int(m.group(1)))),
    (r"RZ(\d+)", lambda m: right_zero(int(m.group(1)))),
    (r"RB(\d+)x(\d+)", lambda m: rectangular_band(int(m.group(1)), int(m.group(2)))),
    (r"N(\d+)", lambda m: null_semigroup(int(m.group(1)))),
    (r"(S3|D4|Q8|C2xC2|C\d+)", lambda m: builtin_group(m.group(1)).underlying),
    (r"(.+)\+0", lambda m: adjoin_zero(builtin_algebra(m.group(1)))),
]


def builtin_algebra(name):
    """Resolve a builtin algebra name.

    Grammar: ``paper_S2``, ``trivial``, ``LZ<n>``, ``RZ<n>``, ``RB<m>x<k>``,
    ``N<n>`` (null semigroup), group names ``S3 D4 Q8 C2xC2 C<n>``, a name
    followed by ``+0`` (adjoin a zero), and ``*``-separated names for direct
    products, e.g. ``C2*LZ2*RZ2``.
    """
    if "*" in name:
        from .core import direct_product

        return direct_product([builtin_algebra(part) for part in name.split("*")])
    for pattern, build in _NAME_PATTERNS:
        m = re.fullmatch(pattern, name)
        if m:
            return build(m)
    raise UnknownGroupName(f"unknown builtin algebra {name!r}")
