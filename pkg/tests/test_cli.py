import io
import json

import pytest

from semicomm.cli import render_human, run
from semicomm.constructors import paper_S2_spec
from semicomm.formats import rees_spec_to_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def as_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    return code, json.loads(out)


def test_props_S2():
    code, doc = as_json("props", "builtin:paper_S2")
    assert code == 0 and doc["schema_version"] == 1
    p = doc["properties"]
    assert p["regular"] and p["completely_simple"] and not p["orthodox"]
    assert doc["orthodox_witness"]["pair"] == ["(1,e,1)", "(2,g,2)"]


def test_degrees_S2():
    code, doc = as_json("degrees", "builtin:paper_S2")
    assert [doc[k]["degree"] for k in ("nilpotent", "solvable", "supernilpotent")] == [2, 2, 2]


def test_congruences_S2():
    code, doc = as_json("congruences", "builtin:paper_S2")
    assert doc["count"] == 5
    code, dot, _ = call("congruences", "builtin:paper_S2", "--format", "dot")
    assert code == 0 and dot.startswith("digraph") and dot.count("->") == 5


def test_commutator_and_centralize():
    code, doc = as_json("commutator", "builtin:paper_S2")
    assert doc["commutator"] == "{0,2|1,3|4,6|5,7}"
    code, doc = as_json("commutator", "builtin:paper_S2", "--alphas", "1", "{0,2|1,3|4,6|5,7}", "--assert")
    assert code == 0 and doc["is_zero"]
    code, doc = as_json("centralize", "builtin:paper_S2", "--alphas", "1", "1", "--delta", "0", "--assert")
    assert code == 1 and not doc["holds"] and len(doc["witness"]) == 4


def test_assert_exit_codes():
    assert call("props", "builtin:paper_S2", "--property", "regular", "--assert")[0] == 0
    assert call("props", "builtin:paper_S2", "--property", "orthodox", "--assert")[0] == 1
    assert call("props", "builtin:paper_S2", "--assert")[0] == 2
    assert call("degrees", "builtin:paper_S2", "--assert")[0] == 2


def test_decompose():
    code, doc = as_json("decompose", "builtin:C2*LZ2*RZ2", "--kind", "warne")
    assert code == 0 and doc["exists"] and doc["decomposition"]["group_order"] == 2
    code, doc = as_json("decompose", "builtin:paper_S2", "--kind", "orthodox")
    assert code == 2 and doc["error"]["type"] == "NotOrthodox" and doc["error"]["pair"] == [0, 7]


def test_input_and_budget_errors():
    assert call("props", "builtin:nope")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("commutator", "builtin:paper_S2", "--alphas", "{0,1|2,3,4,5,6,7}")[0] == 2
    code, doc = as_json("commutator", "builtin:paper_S2", "--cube-cap", "10")
    assert code == 3 and doc["error"]["kind"] == "budget_exceeded"
    assert call("enumerate", "--order", "5")[0] == 3


def test_rees_spec_file(tmp_path):
    p = tmp_path / "s2.json"
    p.write_text(rees_spec_to_json(paper_S2_spec()))
    code, doc = as_json("congruences", f"rees:{p}")
    assert doc["count"] == 5


def test_enumerate():
    code, doc = as_json("enumerate", "--order", "3")
    assert doc["count"] == 24
    code, doc = as_json("enumerate", "--order", "5", "--filter", "inverse")
    assert code == 0 and doc["count"] > 0


def test_verify_theorems(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"entries": ["paper_S2", "C2xC2", "LZ2"]}))
    code, doc = as_json("verify-theorems", "--corpus", str(m))
    assert code == 0 and doc["summary"]["fail"] == 0
    assert call("verify-theorems", "--corpus", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize("argv", [
    ("props", "builtin:paper_S2"),
    ("degrees", "builtin:S3"),
    ("commutator", "builtin:S3", "--arity", "3"),
    ("decompose", "builtin:Q8", "--kind", "inverse"),
])
def test_human_and_json_agree(argv):
    code_h, human, _ = call(*argv)
    code_j, out, _ = call(*argv, "--format", "json")
    doc = json.loads(out)
    del doc["schema_version"], doc["command"]
    assert code_h == code_j
    assert sorted(human.splitlines()) == sorted(render_human(doc))


def test_json_is_byte_stable():
    a = call("degrees", "builtin:paper_S2", "--format", "json")[1]
    b = call("degrees", "builtin:paper_S2", "--format", "json", "--workers", "2")[1]
    assert a == b
