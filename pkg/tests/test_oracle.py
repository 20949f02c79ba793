import json

import pytest

from aspicmin.arguments import ArgumentDescription, Leaf, Node
from aspicmin.construction import enumerate_bounded, is_acyclic
from aspicmin.dsl import unparse_theory
from aspicmin.errors import TooLarge
from aspicmin.fixtures import NAMES, load_fixture
from aspicmin.minimality import MinimalityVerdict, is_minimal
from aspicmin.oracle import (
    EQUIVALENCE,
    RELEVANCE,
    UNIQUE,
    GeneratorConfig,
    check_argument,
    check_regular_minimal_equivalence,
    check_relevance,
    check_theory,
    check_unique_description,
    closure_probes,
    minimize_theory,
    naive_is_minimal,
    random_theory,
    run_property_campaign,
)
from aspicmin.theory import Formula, defeasible, validate_theory


def rules_only_ignored(desc):
    """A deliberately broken minimality test that never probes the rules."""
    G, R, p = desc.grounds, desc.rules, desc.conclusion
    from aspicmin.closure import entails
    for g in sorted(G):
        if entails(G - {g}, R, p):
            return MinimalityVerdict(False, G - {g}, None)
    return MinimalityVerdict(True)


def test_naive_is_minimal_examples():
    a = Formula.parse("a")
    loop = ArgumentDescription(
        frozenset({a}), frozenset(defeasible(t) for t in ("a => c", "c => b", "b => a")), a)
    verdict = naive_is_minimal(loop)
    assert not verdict.minimal and verdict.rule_witness == frozenset()
    assert naive_is_minimal(ArgumentDescription(frozenset({a}), frozenset(), a)).minimal


def test_naive_is_minimal_refuses_large_input():
    grounds = frozenset(Formula(f"x{i}") for i in range(21))
    with pytest.raises(TooLarge):
        naive_is_minimal(ArgumentDescription(grounds, frozenset(), Formula("x0")))


def test_check_argument_flags_bad_trees(example1):
    assert check_argument(Leaf(Formula.parse("s")), example1) == [
        "leaf s is not in the knowledge base"]
    foreign = Node(defeasible("p => s"), (Leaf(Formula.parse("p")),))
    assert check_argument(foreign, example1) == ["rule p => s is not in the theory"]


@pytest.mark.parametrize("name", NAMES)
def test_relevance_holds_on_fixtures(name):
    for a in enumerate_bounded(load_fixture(name), 8):
        report = check_relevance(a)
        assert report.ok and report.checked[RELEVANCE] == 1


@pytest.mark.parametrize("name", NAMES)
def test_equivalence_holds_on_fixtures(name):
    report = check_regular_minimal_equivalence(load_fixture(name), 10)
    assert report.ok
    assert report.checked[EQUIVALENCE] == len(enumerate_bounded(load_fixture(name), 10))


def test_unique_description_example1(example1):
    report = check_unique_description(example1, 16)
    assert report.ok
    assert report.checked[UNIQUE] == 9
    assert report.informational == []


def test_unique_description_loop_collision_is_a_note(loop):
    report = check_unique_description(loop, 7)
    assert report.ok
    notes = [n.detail for n in report.informational]
    assert "2 non-minimal arguments: [[[a => c] => b] => a], [[[[[[a => c] => b] => a] => c] => b] => a]" in notes


def test_broken_minimality_is_caught(loop):
    report = check_theory(loop, 7, rules_only_ignored)
    assert not report.ok
    props = {v.property for v in report.violations}
    assert EQUIVALENCE in props and UNIQUE in props
    equivalence = [v for v in report.violations if v.property == EQUIVALENCE]
    assert equivalence[0].subject == "[[[a => c] => b] => a]"
    assert equivalence[0].minimized is not None


def test_minimized_counterexample_is_smaller():
    from aspicmin.dsl import parse_theory
    theory = parse_theory("""
        @autoneg
        premise a . premise x .
        defeasible r1: a => c .
        defeasible r2: c => b .
        defeasible r3: b => a .
        defeasible r4: x => y .
    """)
    report = check_regular_minimal_equivalence(theory, 7, rules_only_ignored)
    small = report.violations[0].minimized
    assert "x => y" not in small and "premise x" not in small
    assert "b => a" in small


def test_minimize_theory_keeps_failing_core(loop):
    small = minimize_theory(loop, lambda t: not is_acyclic(t))
    assert len(small.rules) == 3


def test_check_theory_clean_on_fixtures():
    for name in NAMES:
        report = check_theory(load_fixture(name), 10)
        assert report.ok, report.violations


def test_report_serialises(loop):
    data = check_theory(loop, 7).to_dict()
    assert data["ok"] is True
    assert set(data["checked"]) >= {EQUIVALENCE, UNIQUE, RELEVANCE}
    json.dumps(data)


def test_random_theory_is_deterministic():
    config = GeneratorConfig(seed=42)
    assert unparse_theory(random_theory(config)) == unparse_theory(random_theory(config))
    assert unparse_theory(random_theory(config)) != unparse_theory(random_theory(GeneratorConfig(seed=43)))


def test_random_theories_are_acyclic_and_valid():
    for seed in range(1000):
        theory = random_theory(GeneratorConfig(seed=seed))
        assert is_acyclic(theory)
        assert validate_theory(theory, strict_mode=True).ok


def test_cyclic_generator_produces_cycles():
    cyclic = sum(not is_acyclic(random_theory(GeneratorConfig(seed=s, allow_cycles=True)))
                 for s in range(100))
    assert cyclic > 0


def test_generator_rejects_bad_config():
    with pytest.raises(ValueError):
        GeneratorConfig(num_atoms=0)


def test_empty_campaign():
    report = run_property_campaign(GeneratorConfig(seed=0), 0, 16)
    assert report.ok and not report.checked


def test_campaign_is_deterministic():
    a = run_property_campaign(GeneratorConfig(seed=5), 20, 16).to_dict()
    b = run_property_campaign(GeneratorConfig(seed=5), 20, 16).to_dict()
    assert a == b and a["ok"]


def test_campaign_catches_broken_minimality():
    report = run_property_campaign(GeneratorConfig(seed=0, allow_cycles=True, num_rules=4),
                                   100, 10, rules_only_ignored)
    assert not report.ok
    assert all(v.seed is not None and v.theory for v in report.violations)


def test_closure_probes_pass():
    report = closure_probes(0, 500)
    assert report.ok and sum(report.checked.values()) == 1000
