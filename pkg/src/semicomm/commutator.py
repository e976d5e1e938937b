"""Centralizing relation and higher commutators of a finite semigroup.

Cube layout: a cube of dimension ``k`` is a vector of ``2**k`` element ids.
Entry ``b`` (an integer read as a bit-vector) holds the value of a
polynomial when the argument block ``j`` is taken from the first component
of its pair if bit ``j`` of ``b`` is 0 and from the second if it is 1.
Position ``k - 1`` (the high bit) is the block ranging over the last
congruence, the one being centralized.  For a prefix ``p < 2**(k-1)`` the
pair ``(cube[p], cube[p + 2**(k-1)])`` is the row indexed by ``p``; the row
``p = 2**(k-1) - 1`` is the conclusion row, all others are premises.

The set of value cubes of all polynomials is generated as the subsemigroup
of ``S**(2**k)`` spanned by the constant cubes and the edge cubes of each
congruence.  Closure uses right multiplication by generators only, which
suffices for a subsemigroup.  Cubes are hashed as base-``n`` integers.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .congruence import Congruence, congruence_closure
from .errors import AlgebraMismatch, CubeSetTooLarge, InputError, OracleBudgetExceeded

log = logging.getLogger(__name__)

DEFAULT_CUBE_CAP = 50_000_000
DEFAULT_MAX_DIMENSION = 4
# rows of frontier x generators materialised at once
_CHUNK_ROWS = 1 << 21


@dataclass(frozen=True)
class CubeSet:
    dimension: int
    order: int
    codes: np.ndarray  # sorted, unique

    def __len__(self):
        return len(self.codes)

    @property
    def cubes(self):
        return decode_cubes(self.codes, self.order, self.dimension)

    def __contains__(self, cube):
        code = encode_cubes(np.asarray([cube]), self.order)[0]
        i = np.searchsorted(self.codes, code)
        return bool(i < len(self.codes) and self.codes[i] == code)


def _weights(n, width):
    return n ** np.arange(width, dtype=np.int64)


def encode_cubes(cubes, n):
    cubes = np.asarray(cubes, dtype=np.int64)
    return cubes @ _weights(n, cubes.shape[1])


def decode_cubes(codes, n, k):
    width = 1 << k
    out = np.empty((len(codes), width), dtype=np.int64)
    rest = np.asarray(codes, dtype=np.int64).copy()
    for b in range(width):
        rest, out[:, b] = np.divmod(rest, n)
    return out


def _check_alphas(S, alphas):
    alphas = list(alphas)
    if not alphas:
        raise InputError("need at least one congruence")
    for a in alphas:
        if a.n != S.order:
            raise AlgebraMismatch(f"congruence on {a.n} points, algebra has order {S.order}")
    return alphas


def generator_cubes(S, alphas):
    """Constant cubes followed by the edge cubes of each congruence."""
    n = S.order
    k = len(alphas)
    width = 1 << k
    bits = (np.arange(width)[:, None] >> np.arange(k)[None, :]) & 1  # bits[b, j]
    gens = [np.full((n, width), np.arange(n)[:, None])]
    for j, alpha in enumerate(alphas):
        pairs = [(a, b) for a, b in alpha.pairs() if a != b]
        if not pairs:
            continue
        p = np.asarray(pairs, dtype=np.int64)
        gens.append(np.where(bits[None, :, j] == 0, p[:, :1], p[:, 1:]))
    return np.concatenate(gens)


def _products(table, frontier, gens, n):
    # all frontier[i] * gens[g], coordinatewise, as sorted unique codes
    w = _weights(n, frontier.shape[1])
    prod = table[frontier[:, None, :], gens[None, :, :]]
    return np.unique(prod.reshape(-1, frontier.shape[1]) @ w)


def generate_cube_set(S, alphas, cap=DEFAULT_CUBE_CAP, max_dimension=DEFAULT_MAX_DIMENSION, workers=1):
    """Polynomial value cubes for the congruences ``alphas`` (see module doc).

    ``workers`` splits each frontier across threads; the result does not
    depend on it.
    """
    alphas = _check_alphas(S, alphas)
    k = len(alphas)
    if k > max_dimension:
        raise CubeSetTooLarge(f"cube dimension {k} exceeds cap {max_dimension}")
    n = S.order
    width = 1 << k
    if width * np.log2(max(n, 2)) >= 63:
        raise CubeSetTooLarge(f"{n}**{width} cube codes do not fit in 64 bits")
    table = S.table
    gens = generator_cubes(S, alphas)
    known = np.unique(encode_cubes(gens, n))
    frontier = decode_cubes(known, n, k)
    step = max(1, _CHUNK_ROWS // len(gens))
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        while len(frontier):
            chunks = [frontier[i:i + step] for i in range(0, len(frontier), step)]
            if pool is not None:
                parts = list(pool.map(lambda c: _products(table, c, gens, n), chunks))
            else:
                parts = [_products(table, c, gens, n) for c in chunks]
            cand = np.unique(np.concatenate(parts)) if len(parts) > 1 else parts[0]
            new = cand[~np.isin(cand, known, assume_unique=True)]
            if not len(new):
                break
            known = np.union1d(known, new)
            if len(known) > cap:
                raise CubeSetTooLarge(f"cube set exceeds {cap} members")
            frontier = decode_cubes(new, n, k)
    finally:
        if pool is not None:
            pool.shutdown()
    log.debug("cube set: order=%d dim=%d size=%d", n, k, len(known))
    return CubeSet(k, n, known)


def _violations(cubes, delta, k):
    lab = delta.labels_array[cubes]
    half = 1 << (k - 1)
    eq = lab[:, :half] == lab[:, half:]
    premises = eq[:, : half - 1].all(axis=1)
    return premises & ~eq[:, half - 1]


@dataclass(frozen=True)
class CentralityResult:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def centralizes(S, alphas, delta, cube_set=None, **budget):
    """Decide C(alphas[:-1], alphas[-1]; delta).

    Returns a truthy :class:`CentralityResult`; when false, ``witness`` is the
    first violating cube in code order.
    """
    alphas = _check_alphas(S, alphas)
    if delta.n != S.order:
        raise AlgebraMismatch("delta is on a different algebra")
    cs = cube_set if cube_set is not None else generate_cube_set(S, alphas, **budget)
    cubes = cs.cubes
    bad = np.flatnonzero(_violations(cubes, delta, len(alphas)))
    if len(bad):
        return CentralityResult(False, tuple(int(v) for v in cubes[bad[0]]))
    return CentralityResult(True)


def commutator_from_cubes(S, cubes, k):
    """Least congruence satisfying the cube implication, by fixpoint."""
    half = 1 << (k - 1)
    delta = Congruence.zero(S.order)
    while True:
        bad = _violations(cubes, delta, k)
        if not bad.any():
            return delta
        pairs = np.unique(cubes[bad][:, [half - 1, 2 * half - 1]], axis=0)
        delta = congruence_closure(S, [tuple(int(v) for v in p) for p in pairs], base=delta)


@lru_cache(maxsize=8192)
def _commutator_cached(S, alphas, cap, max_dimension):
    cs = generate_cube_set(S, alphas, cap=cap, max_dimension=max_dimension)
    return commutator_from_cubes(S, cs.cubes, len(alphas))


def commutator(S, alphas, cap=DEFAULT_CUBE_CAP, max_dimension=DEFAULT_MAX_DIMENSION, workers=1):
    """The k-ary commutator ``[alphas[0], ..., alphas[-1]]`` (k >= 2)."""
    alphas = tuple(_check_alphas(S, alphas))
    if len(alphas) < 2:
        raise InputError("commutator needs at least two congruences")
    if workers > 1:
        cs = generate_cube_set(S, alphas, cap=cap, max_dimension=max_dimension, workers=workers)
        return commutator_from_cubes(S, cs.cubes, len(alphas))
    return _commutator_cached(S, alphas, cap, max_dimension)


def full_commutator(S, arity, **budget):
    """``[1, ..., 1]`` with ``arity`` entries."""
    one = Congruence.one(S.order)
    return commutator(S, [one] * arity, **budget)


# -- word oracle -----------------------------------------------------------


def oracle_value_cubes(S, alphas, max_word_len=6, max_block_arity=2, max_order=6, budget=50_000_000):
    """Value cubes of all words of bounded length, by literal evaluation.

    Symbols are the constants of ``S`` and ``max_block_arity`` variables per
    block.  Block ``j`` variables range over the pairs of ``alphas[j]`` and
    every assignment of pairs to variables is tried.  Words are grown one
    symbol at a time; a word whose value table repeats an earlier one is not
    extended (its extensions repeat too).  Returns the distinct cubes.
    """
    alphas = _check_alphas(S, alphas)
    n = S.order
    if n > max_order:
        raise OracleBudgetExceeded(f"word oracle limited to order {max_order}")
    k = len(alphas)
    width = 1 << k
    pair_lists = [np.asarray(a.pairs(), dtype=np.int64) for a in alphas]
    var_blocks = [j for j in range(k) for _ in range(max_block_arity)]
    counts = [len(pair_lists[j]) for j in var_blocks]
    n_assign = int(np.prod(counts))
    if n_assign * width > budget:
        raise OracleBudgetExceeded(f"{n_assign} assignments exceed the oracle budget")
    # choice[v] is the pair index of variable v in each assignment
    choice = np.indices(counts).reshape(len(counts), -1)
    bits = (np.arange(width)[None, :] >> np.arange(k)[:, None]) & 1  # bits[j, b]
    symbols = [np.full((n_assign, width), c, dtype=np.int64) for c in range(n)]
    for v, j in enumerate(var_blocks):
        pairs = pair_lists[j][choice[v]]  # (n_assign, 2)
        symbols.append(pairs[:, bits[j]])
    table = S.table
    seen = {}
    level = []
    for sym in symbols:
        key = sym.tobytes()
        if key not in seen:
            seen[key] = sym
            level.append(sym)
    for _ in range(max_word_len - 1):
        nxt = []
        for val in level:
            for sym in symbols:
                p = table[val, sym]
                key = p.tobytes()
                if key not in seen:
                    seen[key] = p
                    nxt.append(p)
        if len(seen) * n_assign * width > budget:
            raise OracleBudgetExceeded("too many distinct word functions")
        level = nxt
        if not level:
            break
    rows = np.concatenate(list(seen.values()))
    return decode_cubes(np.unique(encode_cubes(rows, n)), n, k)


def oracle_centralizes_by_words(S, alphas, delta, max_word_len=6, max_block_arity=2, **budget):
    cubes = oracle_value_cubes(S, alphas, max_word_len, max_block_arity, **budget)
    return not _violations(cubes, delta, len(alphas)).any()


def evaluate_word(S, word, assignment):
    """Evaluate a word given as a sequence of symbols.

    A symbol is an ``int`` (a constant) or a ``str`` variable name looked up
    in ``assignment``.
    """
    vals = [assignment[s] if isinstance(s, str) else s for s in word]
    return S.product(*vals)
