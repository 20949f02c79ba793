import json
import re

import pytest

from aspicmin.arguments import Leaf, Node
from aspicmin.construction import enumerate_bounded
from aspicmin.export import argument_from_dict, export_dot, export_json, rule_ref
from aspicmin.fixtures import NAMES, load_fixture
from aspicmin.oracle import check_theory
from aspicmin.theory import Formula, defeasible


def test_json_for_first_argument(example1, arg):
    data = json.loads(export_json(arg("[[p,q => r] => s]", example1), example1))
    assert data["triple"] == {"grounds": ["p", "q"], "rules": ["r1", "r3"], "conclusion": "s"}
    assert data["flags"] == {"regular": True, "circular": False, "redundant": False, "minimal": True}
    assert data["nodes"] == 4
    assert data["rule"] == "r3" and data["subs"][0]["rule"] == "r1"
    assert data["subs"][0]["subs"][0] == {"conc": "p", "rule": None, "subs": []}


def test_json_flags_for_circular_argument(loop, arg):
    data = json.loads(export_json(arg("[[[a => c] => b] => a]", loop), loop))
    assert data["flags"] == {"regular": False, "circular": True, "redundant": False, "minimal": False}


def test_json_empty_list():
    assert export_json([]) == "[]"


def test_json_report(loop):
    data = json.loads(export_json(check_theory(loop, 5)))
    assert data["ok"] is True


def test_rule_ref_without_theory():
    assert rule_ref(defeasible("a => b")) == "a => b"
    assert rule_ref(defeasible("a => b").with_name("x")) == "x"


@pytest.mark.parametrize("name", NAMES)
def test_json_round_trip(name):
    theory = load_fixture(name)
    found = enumerate_bounded(theory, 8)
    back = [argument_from_dict(d, theory) for d in json.loads(export_json(found, theory))]
    assert back == found


def test_dot_for_first_argument(example1, arg):
    text = export_dot(arg("[[p,q => r] => s]", example1), example1)
    assert text.startswith("digraph argument {")
    assert len(re.findall(r"shape=ellipse", text)) == 4
    assert len(re.findall(r"shape=box", text)) == 2
    assert 'r0 [shape=box, label="r3 (defeasible)"];' in text
    assert "f2 -> r1;" in text and "r0 -> f0;" in text


def test_dot_is_deterministic(loop, arg):
    a = arg("[[[a => c] => b] => a]", loop)
    b = arg("[[[a => c] => b] => a]", loop)
    assert export_dot(a, loop) == export_dot(b, loop)


def test_dot_quotes_labels():
    leaf = Leaf(Formula.parse("-p"))
    assert 'label="-p"' in export_dot(leaf)
    node = Node(defeasible("-p => q"), (leaf,))
    assert 'label="-p => q (defeasible)"' in export_dot(node, name="g")
