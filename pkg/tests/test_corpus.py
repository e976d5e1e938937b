import json

import pytest

from semicomm import core
from semicomm.corpus import (
    CorpusManifest,
    ManifestEntry,
    build_manifest,
    canonical_form,
    enumerate_semigroups,
    generated_manifest,
    load_manifest,
    save_manifest,
)
from semicomm.errors import CapExceeded, FormatError, InputError
from semicomm.formats import cayley_text
from semicomm.constructors import paper_S2
from semicomm.structure import are_isomorphic

from oracles import semigroup_classes_brute

# order 4 count, recorded after the brute-force check of orders 1-3 agreed
ORDER4_CLASSES = 188


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_brute_force(n):
    assert sum(1 for _ in enumerate_semigroups(n)) == semigroup_classes_brute(n)


def test_order4_count(order4):
    assert len(order4) == ORDER4_CLASSES


def test_order4_pairwise_non_isomorphic(order4):
    forms = {canonical_form(S) for S in order4}
    assert len(forms) == len(order4)


def test_representatives_are_canonical(order4):
    for S in order4:
        assert canonical_form(S) == S.rows


def test_enumeration_is_deterministic():
    a = [S.rows for S in enumerate_semigroups(3)]
    b = [S.rows for S in enumerate_semigroups(3)]
    assert a == b and a == sorted(a)


def test_order5_needs_filter():
    with pytest.raises(CapExceeded):
        next(enumerate_semigroups(5))
    with pytest.raises(CapExceeded):
        next(enumerate_semigroups(6, ["regular"]))


def test_order5_inverse_filter():
    found = list(enumerate_semigroups(5, ["inverse"]))
    assert found and all(core.is_inverse_semigroup(S) for S in found)
    for i, S in enumerate(found):
        for T in found[i + 1:]:
            assert not are_isomorphic(S, T)


def test_unknown_filter():
    with pytest.raises(InputError):
        list(enumerate_semigroups(2, ["fancy"]))


def test_generated_manifest_size():
    assert len(generated_manifest(3)) == 30


def test_manifest_roundtrip(tmp_path):
    (tmp_path / "s2.txt").write_text(cayley_text(paper_S2()))
    m = build_manifest(["paper_S2", ("c", "builtin:C3")])
    m.entries.append(ManifestEntry("f", "file:s2.txt", {}))
    path = tmp_path / "m.json"
    save_manifest(m, path)
    loaded = load_manifest(path)
    assert [e.id for e in loaded.entries] == ["paper_S2", "c", "f"]
    algs = dict(loaded.algebras())
    assert algs["f"] == algs["paper_S2"]
    assert loaded.entries[2].properties["completely_simple"]


def test_bare_name_manifest(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"entries": ["S3", "builtin:Q8"]}))
    ids = [i for i, _ in load_manifest(path).algebras()]
    assert ids == ["S3", "builtin:Q8"]


@pytest.mark.parametrize("doc", [
    "not json",
    json.dumps({"entries": [{"id": "a"}]}),
    json.dumps({"entries": [{"id": "a", "source": "builtin:nope"}]}),
    json.dumps({"entries": [{"id": "a", "source": "generated:a", "table": [[0, 1], [0, 0]]}]}),
    json.dumps({"entries": ["S3", "S3"]}),
])
def test_corrupted_manifest(tmp_path, doc):
    path = tmp_path / "m.json"
    path.write_text(doc)
    with pytest.raises(FormatError):
        load_manifest(path)


def test_save_leaves_no_temp_files(tmp_path):
    save_manifest(build_manifest(["C2"]), tmp_path / "m.json")
    assert [p.name for p in tmp_path.iterdir()] == ["m.json"]
