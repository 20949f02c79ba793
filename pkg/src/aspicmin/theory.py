"""Formulas, rules, knowledge bases and argumentation theories.

Everything here is immutable once built. :func:`build_theory` is the only
supported way to obtain an :class:`ArgumentationTheory`; it checks every
invariant and assigns names to unnamed rules.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Union

from .errors import (
    DuplicateRule,
    DuplicateRuleName,
    EmptyPremises,
    OverlappingKB,
    UnknownFormula,
)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Formula:
    """An atom of the language, optionally negated (``-p``)."""

    token: str
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.token, str) or not IDENTIFIER.match(self.token):
            raise ValueError(f"invalid formula token: {self.token!r}")

    @classmethod
    def parse(cls, text: str) -> "Formula":
        text = text.strip()
        if text.startswith("-"):
            return cls(text[1:].strip(), True)
        return cls(text)

    def negate(self) -> "Formula":
        return Formula(self.token, not self.negated)

    def __str__(self):
        return ("-" if self.negated else "") + self.token


FormulaLike = Union[Formula, str]


def formula(value: FormulaLike) -> Formula:
    if isinstance(value, Formula):
        return value
    return Formula.parse(value)


class RuleKind(Enum):
    STRICT = "strict"
    DEFEASIBLE = "defeasible"

    @property
    def arrow(self) -> str:
        return "->" if self is RuleKind.STRICT else "=>"


@dataclass(frozen=True)
class Rule:
    """An inference rule. Identity ignores the name."""

    kind: RuleKind
    premises: tuple
    conclusion: Formula
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(formula(p) for p in self.premises))
        object.__setattr__(self, "conclusion", formula(self.conclusion))

    @classmethod
    def parse(cls, text: str, name: Optional[str] = None) -> "Rule":
        """Parse ``"p, q => r"`` (defeasible) or ``"p, q -> r"`` (strict)."""
        for kind in RuleKind:
            if kind.arrow in text:
                lhs, rhs = text.split(kind.arrow, 1)
                premises = [p for p in (s.strip() for s in lhs.split(",")) if p]
                return cls(kind, tuple(premises), rhs.strip(), name)
        raise ValueError(f"no rule arrow in {text!r}")

    @property
    def body(self) -> tuple:
        """The kind-free part of the identity: (premises, conclusion)."""
        return (self.premises, self.conclusion)

    def sort_key(self):
        return (str(self.conclusion), [str(p) for p in self.premises], self.kind.value)

    def with_name(self, name: str) -> "Rule":
        return Rule(self.kind, self.premises, self.conclusion, name)

    def __str__(self):
        prems = ", ".join(str(p) for p in self.premises)
        return f"{prems} {self.kind.arrow} {self.conclusion}"


def strict(text: str, name: Optional[str] = None) -> Rule:
    return Rule.parse(text.replace("=>", "->"), name)


def defeasible(text: str, name: Optional[str] = None) -> Rule:
    return Rule.parse(text.replace("->", "=>"), name)


@dataclass(frozen=True)
class ContrarinessMap:
    """Ordered pairs ``(phi, psi)`` meaning phi belongs to the contraries of psi."""

    pairs: frozenset = frozenset()

    def is_contrary(self, phi: Formula, psi: Formula) -> bool:
        return (phi, psi) in self.pairs and (psi, phi) not in self.pairs

    def is_contradictory(self, phi: Formula, psi: Formula) -> bool:
        return (phi, psi) in self.pairs and (psi, phi) in self.pairs

    def contradictories_of(self, psi: Formula) -> set:
        return {
            phi for phi, other in self.pairs
            if other == psi and phi != psi and (psi, phi) in self.pairs
        }

    def formulas(self) -> set:
        return {f for pair in self.pairs for f in pair}


@dataclass(frozen=True)
class KnowledgeBase:
    axioms: frozenset = frozenset()
    premises: frozenset = frozenset()

    @property
    def all(self) -> frozenset:
        return self.axioms | self.premises

    def __contains__(self, item):
        return item in self.axioms or item in self.premises


@dataclass(frozen=True)
class ArgumentationTheory:
    language: frozenset
    contrariness: ContrarinessMap
    strict_rules: tuple
    defeasible_rules: tuple
    kb: KnowledgeBase

    @property
    def rules(self) -> tuple:
        return self.strict_rules + self.defeasible_rules

    @cached_property
    def rules_by_conclusion(self) -> dict:
        index = {}
        for rule in sorted(self.rules, key=Rule.sort_key):
            index.setdefault(rule.conclusion, []).append(rule)
        return {k: tuple(v) for k, v in index.items()}

    def rules_concluding(self, conclusion: Formula) -> tuple:
        return self.rules_by_conclusion.get(conclusion, ())

    @cached_property
    def rule_by_name(self) -> dict:
        return {r.name: r for r in self.rules}

    @cached_property
    def rule_index(self) -> dict:
        """Maps any rule (named or not) to the theory's named copy."""
        return {r: r for r in self.rules}

    def name_of(self, rule: Rule) -> str:
        return self.rule_index[rule].name

    def has_rule(self, rule: Rule) -> bool:
        return rule in self.rule_index


def _coerce_rules(rules, kind):
    out = []
    for r in rules:
        if isinstance(r, str):
            r = Rule.parse(r)
        if r.kind is not kind:
            r = Rule(kind, r.premises, r.conclusion, r.name)
        out.append(r)
    return out


def _assign_names(rules, prefix, taken):
    counter = 0
    named = []
    for r in rules:
        if r.name is None:
            counter += 1
            while f"{prefix}{counter}" in taken:
                counter += 1
            r = r.with_name(f"{prefix}{counter}")
            taken.add(r.name)
        named.append(r)
    return named


def build_theory(
    language: Iterable[FormulaLike] = (),
    contrariness: Iterable = (),
    strict: Iterable = (),
    defeasible: Iterable = (),
    axioms: Iterable[FormulaLike] = (),
    premises: Iterable[FormulaLike] = (),
) -> ArgumentationTheory:
    """Check every theory invariant and return the frozen theory.

    Unnamed defeasible rules are named ``d1, d2, ...`` and unnamed strict
    rules ``s1, s2, ...`` in input order, skipping names already in use.
    """
    lang = frozenset(formula(f) for f in language)
    pairs = frozenset((formula(a), formula(b)) for a, b in contrariness)
    strict_rules = _coerce_rules(strict, RuleKind.STRICT)
    defeasible_rules = _coerce_rules(defeasible, RuleKind.DEFEASIBLE)
    kn = frozenset(formula(f) for f in axioms)
    kp = frozenset(formula(f) for f in premises)

    def need(f, where):
        if f not in lang:
            raise UnknownFormula(f"formula {f} in {where} is not in the language")

    for a, b in sorted(pairs):
        need(a, "contrariness")
        need(b, "contrariness")
    for f in sorted(kn | kp):
        need(f, "knowledge base")

    seen = {}
    explicit_names = set()
    for r in strict_rules + defeasible_rules:
        if not r.premises:
            raise EmptyPremises(f"rule {r} has no premises")
        for f in r.premises + (r.conclusion,):
            need(f, f"rule {r}")
        if r.body in seen:
            other = seen[r.body]
            if other.kind is not r.kind:
                raise DuplicateRule(f"rule {r} is both strict and defeasible")
            raise DuplicateRule(f"rule {r} is listed twice")
        seen[r.body] = r
        if r.name is not None:
            if r.name in explicit_names:
                raise DuplicateRuleName(f"rule name {r.name} is used twice")
            explicit_names.add(r.name)

    overlap = kn & kp
    if overlap:
        names = ", ".join(sorted(str(f) for f in overlap))
        raise OverlappingKB(f"formulas are both axioms and premises: {names}")

    taken = set(explicit_names)
    defeasible_rules = _assign_names(defeasible_rules, "d", taken)
    strict_rules = _assign_names(strict_rules, "s", taken)

    return ArgumentationTheory(
        language=lang,
        contrariness=ContrarinessMap(pairs),
        strict_rules=tuple(strict_rules),
        defeasible_rules=tuple(defeasible_rules),
        kb=KnowledgeBase(kn, kp),
    )


def classical_pairs(atoms: Iterable[FormulaLike]) -> list:
    """Mutual contradictory pairs ``(x, -x)`` and ``(-x, x)`` for each atom."""
    out = []
    for a in atoms:
        a = formula(a)
        pos = Formula(a.token)
        out.append((pos, pos.negate()))
        out.append((pos.negate(), pos))
    return out


@dataclass
class Issue:
    code: str
    message: str
    formula: Optional[Formula] = None


@dataclass
class ValidationReport:
    contradictory: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    kb_disjoint: bool = True
    rules_disjoint: bool = True

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_theory(theory: ArgumentationTheory, strict_mode: bool = False) -> ValidationReport:
    """Report, per formula, whether it has a contradictory."""
    report = ValidationReport()
    report.kb_disjoint = not (theory.kb.axioms & theory.kb.premises)
    strict_bodies = {r.body for r in theory.strict_rules}
    report.rules_disjoint = not any(r.body in strict_bodies for r in theory.defeasible_rules)

    for phi, psi in sorted(theory.contrariness.pairs):
        if phi == psi:
            report.warnings.append(
                Issue("SelfContrary", f"{phi} is listed as its own contrary", phi))

    for f in sorted(theory.language):
        has = bool(theory.contrariness.contradictories_of(f))
        report.contradictory[f] = has
        if not has:
            issue = Issue("MissingContradictory", f"{f} has no contradictory", f)
            (report.errors if strict_mode else report.warnings).append(issue)
    return report
