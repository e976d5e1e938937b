"""Subgroup-chain computations for finite groups.

These use only the group operation and element inverses, never the
congruence or commutator machinery, so they serve as a reference for the
semigroup-level degree computations on groups.
"""

from __future__ import annotations


def generated_subgroup(G, gens):
    r = G.underlying.rows
    H = {G.identity}
    frontier = [G.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = r[h][g]
                if p not in H:
                    H.add(p)
                    nxt.append(p)
        frontier = nxt
    return frozenset(H)


def group_commutator(G, a, b):
    """``a^-1 b^-1 a b``."""
    r, inv = G.underlying.rows, G.inverse
    return r[r[r[inv[a]][inv[b]]][a]][b]


def commutator_subgroup(G, H, K):
    return generated_subgroup(G, {group_commutator(G, h, k) for h in H for k in K})


def lower_central_series(G, max_terms=64):
    """``G = g_1 >= g_2 = [G, G] >= g_3 = [g_2, G] ...`` until it repeats."""
    whole = frozenset(range(G.order))
    series = [whole]
    while len(series) < max_terms:
        nxt = commutator_subgroup(G, series[-1], whole)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def derived_series(G, max_terms=64):
    series = [frozenset(range(G.order))]
    while len(series) < max_terms:
        nxt = commutator_subgroup(G, series[-1], series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def nilpotency_class(G):
    """Least ``c >= 1`` with the (c+1)-th lower central term trivial, else None.

    The trivial group gets 1, matching the convention that degree 1 means
    abelian.
    """
    series = lower_central_series(G)
    if len(series[-1]) != 1:
        return None
    return max(1, len(series) - 1)


def derived_length(G):
    series = derived_series(G)
    if len(series[-1]) != 1:
        return None
    return max(1, len(series) - 1)


def is_abelian_group(G):
    r = G.underlying.rows
    return all(r[a][b] == r[b][a] for a in range(G.order) for b in range(G.order))
