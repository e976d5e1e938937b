"""Small-semigroup corpus: enumeration up to isomorphism and manifests.

Enumeration fills the Cayley table cell by cell in row-major order,
propagating values forced by associativity and cutting branches that some
relabeling already beats lexicographically.  Every complete table is kept
only if it is the lexicographically least table in its isomorphism class, so the output is one representative per
class, in lexicographic order of the representatives.  Anti-isomorphic
classes stay distinct.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from itertools import permutations
from pathlib import Path

import numpy as np

from . import core
from .constructors import builtin_algebra
from .errors import CapExceeded, FormatError, InputError
from .formats import load_algebra

MAX_ORDER = 5
MANIFEST_VERSION = 1

FILTERS = {
    "regular": core.is_regular,
    "orthodox": core.is_orthodox,
    "inverse": core.is_inverse_semigroup,
    "completely_simple": core.is_completely_simple,
    "band": core.is_band,
    "commutative": core.is_commutative,
}


def _permutation_arrays(n):
    perms = np.asarray(list(permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    return perms, inv


def is_canonical(flat, n, perms, inv):
    """True iff ``flat`` (row-major table) is lex-least among its relabelings."""
    t = np.asarray(flat, dtype=np.int64).reshape(n, n)
    # relabeled[k][a, b] = perms[k][ t[inv[k][a], inv[k][b]] ]
    inner = t[inv[:, :, None], inv[:, None, :]].reshape(len(perms), n * n)
    rel = np.take_along_axis(perms, inner, axis=1)
    diff = rel != t.ravel()
    has = diff.any(axis=1)
    first = diff.argmax(axis=1)
    smaller = rel[np.arange(len(perms)), first] < t.ravel()[first]
    return not (has & smaller).any()


def _partial_dominated(t, n, perms, inv):
    """True if some relabeling is already lex-smaller on the known cells.

    Cells are compared in row-major order up to the first one that is
    unknown on either side, so the verdict holds for every completion.
    """
    t = np.asarray(t, dtype=np.int64)
    inner = t.reshape(n, n)[inv[:, :, None], inv[:, None, :]].reshape(len(perms), n * n)
    rel = np.where(inner >= 0, np.take_along_axis(perms, np.maximum(inner, 0), axis=1), -1)
    unknown = (rel < 0) | (t < 0)
    stop = unknown | (rel != t)
    first = stop.argmax(axis=1)
    rows = np.arange(len(perms))
    hit = stop[rows, first] & ~unknown[rows, first] & (rel[rows, first] < t[first])
    return bool(hit.any())


def _search(n, perms=None, inv=None):
    """Yield associative tables (flat lists) in lex order.

    Cells are branched in row-major order.  Each assignment propagates:
    whenever three of the four cells of an associativity triple are known,
    the fourth is forced.  With ``perms``/``inv`` given, branches whose
    completions cannot be lex-least in their isomorphism class are cut.
    """
    size = n * n
    t = [-1] * size
    where = [[] for _ in range(n)]
    trail = []

    def setcell(c, v, queue):
        cur = t[c]
        if cur >= 0:
            return cur == v
        t[c] = v
        where[v].append(c)
        trail.append(c)
        queue.append(c)
        return True

    def propagate(queue):
        while queue:
            c = queue.pop()
            a, b = divmod(c, n)
            v = t[c]
            # c = x*y with x=a, y=b:  v*z = a*(b*z)
            for z in range(n):
                yz = t[b * n + z]
                if yz < 0:
                    continue
                lhs, rhs = t[v * n + z], t[a * n + yz]
                if lhs >= 0:
                    if not setcell(a * n + yz, lhs, queue):
                        return False
                elif rhs >= 0 and not setcell(v * n + z, rhs, queue):
                    return False
            # c = y*z with y=a, z=b:  (x*a)*b = x*v
            for x in range(n):
                xy = t[x * n + a]
                if xy < 0:
                    continue
                lhs, rhs = t[xy * n + b], t[x * n + v]
                if lhs >= 0:
                    if not setcell(x * n + v, lhs, queue):
                        return False
                elif rhs >= 0 and not setcell(xy * n + b, rhs, queue):
                    return False
            # c = (x*y)*z with x*y = a, z = b:  v = x*(y*b)
            for d in list(where[a]):
                x, y = divmod(d, n)
                yz = t[y * n + b]
                if yz >= 0 and not setcell(x * n + yz, v, queue):
                    return False
            # c = x*(y*z) with x = a, y*z = b:  (a*y)*z = v
            for d in list(where[b]):
                y, z = divmod(d, n)
                xy = t[a * n + y]
                if xy >= 0 and not setcell(xy * n + z, v, queue):
                    return False
        return True

    def undo(mark):
        while len(trail) > mark:
            c = trail.pop()
            where[t[c]].pop()
            t[c] = -1

    def rec(cell):
        while cell < size and t[cell] >= 0:
            cell += 1
        if cell == size:
            yield list(t)
            return
        for v in range(n):
            mark = len(trail)
            queue = []
            setcell(cell, v, queue)
            if propagate(queue) and not (perms is not None and _partial_dominated(t, n, perms, inv)):
                yield from rec(cell + 1)
            undo(mark)

    yield from rec(0)


def enumerate_semigroups(n, filters=()):
    """One semigroup per isomorphism class of order ``n`` (``n <= 5``).

    ``filters`` names predicates from :data:`FILTERS`; order 5 requires at
    least one.
    """
    if n < 1:
        raise InputError("order must be >= 1")
    if n > MAX_ORDER:
        raise CapExceeded(f"enumeration is capped at order {MAX_ORDER}")
    filters = tuple(filters)
    unknown = [f for f in filters if f not in FILTERS]
    if unknown:
        raise InputError(f"unknown filters {unknown}; known: {sorted(FILTERS)}")
    if n == MAX_ORDER and not filters:
        raise CapExceeded(f"order {MAX_ORDER} enumeration requires a filter")
    perms, inv = _permutation_arrays(n)
    for flat in _search(n, perms, inv):
        if not is_canonical(flat, n, perms, inv):
            continue
        S = core.FiniteSemigroup(np.asarray(flat).reshape(n, n))
        if all(FILTERS[f](S) for f in filters):
            yield S


def canonical_form(S):
    """Lex-least relabeled table, as a tuple of tuples (orders <= 8)."""
    n = S.order
    best = None
    for p in permutations(range(n)):
        p = np.asarray(p)
        inv = np.argsort(p)
        t = tuple(map(tuple, p[S.table[np.ix_(inv, inv)]].tolist()))
        if best is None or t < best:
            best = t
    return best


# -- manifests -------------------------------------------------------------


@dataclass
class ManifestEntry:
    id: str
    source: str
    properties: dict = field(default_factory=dict)
    table: list | None = None

    def algebra(self, base_dir=None):
        kind, _, ref = self.source.partition(":")
        if kind == "builtin":
            return builtin_algebra(ref)
        if kind == "generated":
            if self.table is None:
                raise FormatError(f"generated entry {self.id} has no table")
            return core.FiniteSemigroup(self.table)
        if kind == "file":
            path = Path(ref)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            return load_algebra(str(path))
        raise FormatError(f"unknown source kind {kind!r} in entry {self.id}")


@dataclass
class CorpusManifest:
    entries: list
    version: int = MANIFEST_VERSION
    base_dir: str | None = None

    def __len__(self):
        return len(self.entries)

    def algebras(self):
        return [(e.id, e.algebra(self.base_dir)) for e in self.entries]

    def to_json(self):
        doc = {
            "version": self.version,
            "entries": [
                {k: v for k, v in (("id", e.id), ("source", e.source),
                                   ("table", e.table), ("properties", e.properties)) if v is not None}
                for e in self.entries
            ],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _properties(S):
    return core.classify(S)


def build_manifest(specs):
    """Entries from ``(id, source)`` pairs or bare builtin names.

    Sources are ``builtin:NAME``, ``file:PATH`` or a :class:`FiniteSemigroup`
    (stored as ``generated`` with its table).
    """
    entries = []
    seen = set()
    for spec in specs:
        if isinstance(spec, str):
            spec = (spec, f"builtin:{spec}")
        ident, source = spec
        if ident in seen:
            raise InputError(f"duplicate manifest id {ident!r}")
        seen.add(ident)
        if isinstance(source, core.FiniteSemigroup):
            e = ManifestEntry(ident, f"generated:{ident}", table=[list(r) for r in source.rows])
        else:
            e = ManifestEntry(ident, source)
        e.properties = _properties(e.algebra())
        entries.append(e)
    return CorpusManifest(entries)


def generated_manifest(max_order, filters=()):
    specs = []
    for n in range(1, max_order + 1):
        for k, S in enumerate(enumerate_semigroups(n, filters)):
            specs.append((f"o{n}_{k:04d}", S))
    return build_manifest(specs)


def load_manifest(path):
    """Load a manifest; the whole file is validated before anything is returned."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read manifest {path}: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise FormatError("manifest must be an object with an 'entries' list")
    version = doc.get("version")
    entries = []
    ids = set()
    for raw in doc["entries"]:
        if isinstance(raw, str):
            # bare entry: a builtin name or a prefixed source
            source = raw if raw.split(":", 1)[0] in ("builtin", "file") else f"builtin:{raw}"
            raw = {"id": raw, "source": source}
        if not isinstance(raw, dict) or "id" not in raw or "source" not in raw:
            raise FormatError(f"malformed manifest entry {raw!r}")
        if raw["id"] in ids:
            raise FormatError(f"duplicate id {raw['id']!r}")
        ids.add(raw["id"])
        entries.append(ManifestEntry(raw["id"], raw["source"], raw.get("properties", {}), raw.get("table")))
    m = CorpusManifest(entries, MANIFEST_VERSION, str(path.parent))
    for e in entries:
        try:
            S = e.algebra(m.base_dir)
        except (InputError, ValueError, TypeError, OSError) as exc:
            raise FormatError(f"entry {e.id}: {exc}") from exc
        if version != MANIFEST_VERSION or not e.properties:
            e.properties = _properties(S)
    return m


def save_manifest(manifest, path):
    """Atomic write (temp file + rename)."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=".manifest-")
    with os.fdopen(fd, "w") as fh:
        fh.write(manifest.to_json())
    os.replace(tmp, path)
