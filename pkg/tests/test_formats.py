import pytest
from hypothesis import given

from semicomm.constructors import paper_S2, paper_S2_spec
from semicomm.errors import FormatError, InputError, NotNormalized
from semicomm.formats import cayley_text, load_algebra, parse_cayley, parse_rees_spec, rees_spec_to_json

from conftest import rees_from_seed, seeds, small_semigroups


@given(small_semigroups)
def test_cayley_roundtrip(S):
    text = cayley_text(S)
    assert cayley_text(parse_cayley(text)) == text
    assert parse_cayley(text) == S


def test_cayley_names_roundtrip():
    text = cayley_text(paper_S2())
    assert text.endswith("# names: (1,e,1) (1,e,2) (1,g,1) (1,g,2) (2,e,1) (2,e,2) (2,g,1) (2,g,2)\n")
    assert parse_cayley(text).names == paper_S2().names


@pytest.mark.parametrize("text", ["", "2\n0 0\n", "2\n0 x\n0 0\n"])
def test_bad_cayley(text):
    with pytest.raises(FormatError):
        parse_cayley(text)


@given(seeds)
def test_rees_spec_roundtrip(seed):
    spec, _ = rees_from_seed(seed)
    text = rees_spec_to_json(spec)
    assert rees_spec_to_json(parse_rees_spec(text)) == text
    assert parse_rees_spec(text) == spec


def test_rees_spec_must_be_normalized():
    bad = '{"group-table": [[0,1],[1,0]], "i-size": 2, "lambda-size": 2, "sandwich": [[1,0],[0,0]]}'
    with pytest.raises(NotNormalized):
        parse_rees_spec(bad)


def test_load_sources(tmp_path):
    p = tmp_path / "s2.txt"
    p.write_text(cayley_text(paper_S2()))
    assert load_algebra(str(p)) == paper_S2()
    q = tmp_path / "s2.json"
    q.write_text(rees_spec_to_json(paper_S2_spec()))
    assert load_algebra(str(q)) == paper_S2()
    assert load_algebra(f"rees:{q}") == paper_S2()
    assert load_algebra("builtin:paper_S2") == paper_S2()
    with pytest.raises(InputError):
        load_algebra(str(tmp_path / "missing.txt"))
