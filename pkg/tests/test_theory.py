import pytest

from aspicmin.errors import (
    DuplicateRule,
    DuplicateRuleName,
    EmptyPremises,
    OverlappingKB,
    UnknownFormula,
)
from aspicmin.theory import (
    Formula,
    Rule,
    RuleKind,
    build_theory,
    classical_pairs,
    defeasible,
    strict,
    validate_theory,
)

ATOMS = ["p", "q", "r", "s", "t", "u", "v"]
LANG = ATOMS + ["-" + a for a in ATOMS]


def example1(**overrides):
    kwargs = dict(
        language=LANG,
        contrariness=classical_pairs(ATOMS),
        defeasible=["p, q => r", "t, u => r", "r => s", "u => v"],
        premises=["p", "q", "t", "u"],
    )
    kwargs.update(overrides)
    return build_theory(**kwargs)


def test_formula_parse_and_str():
    assert Formula.parse("-p") == Formula("p", True)
    assert str(Formula("p", True)) == "-p"
    assert Formula.parse("p").negate() == Formula.parse("-p")


@pytest.mark.parametrize("token", ["", "1p", "p-q", "a b"])
def test_formula_rejects_bad_tokens(token):
    with pytest.raises(ValueError):
        Formula(token)


def test_example1_builds():
    t = example1()
    assert len(t.rules) == 4
    assert t.kb.premises == {Formula(x) for x in "pqtu"}
    assert not t.kb.axioms
    assert [r.name for r in t.defeasible_rules] == ["d1", "d2", "d3", "d4"]


def test_singleton_theory():
    t = build_theory(language=["p"], axioms=["p"])
    assert t.rules == ()
    assert t.kb.axioms == {Formula("p")}


def test_rule_in_both_sets_is_duplicate():
    with pytest.raises(DuplicateRule):
        build_theory(language=["a", "b"], strict=["a -> b"], defeasible=["a => b"])


def test_rule_listed_twice_is_duplicate():
    with pytest.raises(DuplicateRule):
        build_theory(language=["a", "b"], defeasible=["a => b", "a => b"])


def test_overlapping_kb():
    with pytest.raises(OverlappingKB):
        build_theory(language=["a"], axioms=["a"], premises=["a"])


@pytest.mark.parametrize("kwargs", [
    dict(premises=["x"]),
    dict(defeasible=["a => x"]),
    dict(contrariness=[("a", "x")]),
])
def test_unknown_formula(kwargs):
    with pytest.raises(UnknownFormula):
        build_theory(language=["a"], **kwargs)


def test_empty_premises():
    with pytest.raises(EmptyPremises):
        build_theory(language=["a"], strict=[Rule(RuleKind.STRICT, (), "a")])


def test_duplicate_names():
    with pytest.raises(DuplicateRuleName):
        build_theory(language=["a", "b", "c"],
                     defeasible=[defeasible("a => b", "n"), defeasible("b => c", "n")])


def test_auto_names_skip_taken_and_are_deterministic():
    kwargs = dict(language=["a", "b", "c"],
                  strict=["c -> a"],
                  defeasible=["a => b", defeasible("b => c", "d1")])
    t1, t2 = build_theory(**kwargs), build_theory(**kwargs)
    assert [r.name for r in t1.rules] == ["s1", "d2", "d1"]
    assert [r.name for r in t1.rules] == [r.name for r in t2.rules]


def test_rule_identity_is_order_sensitive_and_ignores_name():
    assert defeasible("a, b => c") != defeasible("b, a => c")
    assert defeasible("a, b => c", "x") == defeasible("a, b => c", "y")
    assert strict("a -> c") != defeasible("a => c")
    assert hash(defeasible("a => c", "x")) == hash(defeasible("a => c"))


def test_duplicate_premises_allowed():
    t = build_theory(language=["b", "c"], defeasible=["b, b => c"], premises=["b"])
    assert t.rules[0].premises == (Formula("b"), Formula("b"))


def test_contrariness_queries():
    t = build_theory(language=["a", "b", "c"], contrariness=[("a", "b"), ("b", "c"), ("c", "b")])
    c = t.contrariness
    a, b, cc = Formula("a"), Formula("b"), Formula("c")
    assert c.is_contrary(a, b) and not c.is_contradictory(a, b)
    assert c.is_contradictory(b, cc) and c.is_contradictory(cc, b)
    assert c.contradictories_of(b) == {cc}


def test_build_output_satisfies_invariants():
    t = example1()
    assert not (t.kb.axioms & t.kb.premises)
    assert t.kb.all <= t.language
    assert not ({r.body for r in t.strict_rules} & {r.body for r in t.defeasible_rules})
    names = [r.name for r in t.rules]
    assert None not in names and len(set(names)) == len(names)
    for r in t.rules:
        assert set(r.premises) | {r.conclusion} <= t.language


def test_validate_classical_negation_has_no_warnings():
    report = validate_theory(example1())
    assert report.ok and not report.warnings
    assert all(report.contradictory.values())
    assert report.kb_disjoint and report.rules_disjoint


def test_validate_empty_contrariness_warns_per_formula():
    t = example1(contrariness=[])
    report = validate_theory(t)
    assert report.ok
    assert len(report.warnings) == len(LANG)
    assert {w.code for w in report.warnings} == {"MissingContradictory"}


def test_validate_strict_mode_errors():
    report = validate_theory(example1(contrariness=[]), strict_mode=True)
    assert not report.ok
    assert {e.code for e in report.errors} == {"MissingContradictory"}
    assert len(report.errors) == len(LANG)


def test_self_contrary_is_warned_and_not_a_contradictory():
    t = build_theory(language=["a"], contrariness=[("a", "a")])
    report = validate_theory(t)
    codes = [w.code for w in report.warnings]
    assert "SelfContrary" in codes and "MissingContradictory" in codes
