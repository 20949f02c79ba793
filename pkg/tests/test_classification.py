import pytest

from aspicmin.arguments import Leaf
from aspicmin.classification import CIRCULAR, REDUNDANT, classify, is_regular
from aspicmin.construction import enumerate_all, enumerate_bounded
from aspicmin.fixtures import NAMES, load_fixture
from aspicmin.theory import Formula


def witnesses(report):
    return [(w.kind, w.first.canonical, w.second.canonical) for w in report.witnesses]


def test_circular_through_premise(arg):
    a = arg("[[[p,q => s] => q],r => t]", load_fixture("circular_premise"))
    report = classify(a)
    assert report.circular and not report.redundant and not report.regular
    assert witnesses(report) == [(CIRCULAR, "q", "[[p,q => s] => q]")]


def test_circular_through_rule_loop(arg):
    text = "[[[[p,q => r] => s] => t] => r]"
    report = classify(arg(text, load_fixture("circular_rules")))
    assert report.circular and not report.redundant
    assert witnesses(report) == [(CIRCULAR, "[p,q => r]", text)]


def test_redundant(arg):
    report = classify(arg("[[q => r],[[p => r] => s] => t]", load_fixture("redundant")))
    assert report.redundant and not report.circular
    assert witnesses(report) == [(REDUNDANT, "[p => r]", "[q => r]")]


@pytest.mark.parametrize("name, text", [
    ("circular_premise", "[q,r => t]"),
    ("circular_rules", "[p,q => r]"),
    ("redundant", "[[p => r],[[p => r] => s] => t]"),
])
def test_regular_neighbours(arg, name, text):
    report = classify(arg(text, load_fixture(name)))
    assert report.regular and report.witnesses == []


def test_leaf_is_regular():
    assert classify(Leaf(Formula.parse("p"))).regular


def test_example1_all_regular(example1):
    assert all(classify(a).regular for a in enumerate_all(example1))


def test_every_repeated_conclusion_pairs_up(arg, loop):
    # a occurs three times (3 pairs), b and c twice (1 pair each)
    report = classify(arg("[[[[[[a => c] => b] => a] => c] => b] => a]", loop))
    assert report.circular
    kinds = {w.kind for w in report.witnesses}
    assert kinds == {CIRCULAR}
    assert len(report.witnesses) == 5


@pytest.mark.parametrize("name", NAMES)
def test_regular_iff_distinct_conclusions(name):
    for a in enumerate_bounded(load_fixture(name), 9):
        report = classify(a)
        assert report.regular == is_regular(a)
        assert report.regular == (len(a.sub) == len({s.conc for s in a.sub}))
        assert report.regular == (not report.circular and not report.redundant)


@pytest.mark.parametrize("name", NAMES)
def test_regularity_is_hereditary(name):
    for a in enumerate_bounded(load_fixture(name), 9):
        if is_regular(a):
            assert all(is_regular(s) for s in a.sub)


@pytest.mark.parametrize("name", NAMES)
def test_witness_pairs_share_conclusion(name):
    for a in enumerate_bounded(load_fixture(name), 9):
        for w in classify(a).witnesses:
            assert w.first.conc == w.second.conc
            assert w.first != w.second
            assert w.first in a.sub and w.second in a.sub
            if w.kind == CIRCULAR:
                assert w.first in w.second.sub
