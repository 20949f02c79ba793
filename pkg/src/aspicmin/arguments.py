"""Argument trees and their accessors.

An argument is either a :class:`Leaf` holding a knowledge-base formula or a
:class:`Node` applying a rule to one child per rule premise, in premise
order. Equality and hashing are structural, so sets of arguments collapse
identical sub-trees no matter where they occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import ParseError
from .theory import ArgumentationTheory, Formula, Rule, RuleKind, IDENTIFIER


@dataclass(frozen=True)
class ArgumentDescription:
    """The (grounds, rules, conclusion) triple of an argument."""

    grounds: frozenset
    rules: frozenset
    conclusion: Formula

    def __str__(self):
        grounds = ", ".join(str(g) for g in sorted(self.grounds))
        rules = "; ".join(str(r) for r in sorted(self.rules, key=Rule.sort_key))
        return f"({{{grounds}}}, {{{rules}}}, {self.conclusion})"


class Argument:
    """Common behaviour of leaves and nodes."""

    children: tuple = ()

    @cached_property
    def canonical(self) -> str:
        raise NotImplementedError

    @property
    def sort_key(self):
        return (self.node_count, self.canonical)

    @cached_property
    def description(self) -> ArgumentDescription:
        return ArgumentDescription(self.prem, self.rules, self.conc)

    def __eq__(self, other):
        if not isinstance(other, Argument):
            return NotImplemented
        return self is other or self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return self.canonical

    def __repr__(self):
        return f"{type(self).__name__}({self.canonical!r})"


@dataclass(frozen=True, eq=False, repr=False)
class Leaf(Argument):
    formula: Formula

    @property
    def conc(self) -> Formula:
        return self.formula

    @property
    def top_rule(self) -> Optional[Rule]:
        return None

    @cached_property
    def prem(self) -> frozenset:
        return frozenset([self.formula])

    @cached_property
    def sub(self) -> frozenset:
        return frozenset([self])

    @property
    def rules(self) -> frozenset:
        return frozenset()

    @property
    def node_count(self) -> int:
        return 1

    @cached_property
    def canonical(self) -> str:
        return str(self.formula)


@dataclass(frozen=True, eq=False, repr=False)
class Node(Argument):
    rule: Rule
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != len(self.rule.premises):
            raise ValueError(
                f"rule {self.rule} needs {len(self.rule.premises)} children, "
                f"got {len(self.children)}")
        for premise, child in zip(self.rule.premises, self.children):
            if child.conc != premise:
                raise ValueError(
                    f"child {child} concludes {child.conc}, rule {self.rule} needs {premise}")

    @property
    def conc(self) -> Formula:
        return self.rule.conclusion

    @property
    def top_rule(self) -> Optional[Rule]:
        return self.rule

    @cached_property
    def prem(self) -> frozenset:
        return frozenset().union(*(c.prem for c in self.children))

    @cached_property
    def sub(self) -> frozenset:
        return frozenset([self]).union(*(c.sub for c in self.children))

    @cached_property
    def rules(self) -> frozenset:
        return frozenset([self.rule]).union(*(c.rules for c in self.children))

    @cached_property
    def node_count(self) -> int:
        return 1 + sum(c.node_count for c in self.children)

    @cached_property
    def canonical(self) -> str:
        kids = ",".join(c.canonical for c in self.children)
        return f"[{kids} {self.rule.kind.arrow} {self.rule.conclusion}]"


@dataclass(frozen=True)
class ArgumentInfo:
    prem: frozenset
    conc: Formula
    sub: frozenset
    top_rule: Optional[Rule]
    rules: frozenset
    description: ArgumentDescription


def inspect(arg: Argument) -> ArgumentInfo:
    return ArgumentInfo(arg.prem, arg.conc, arg.sub, arg.top_rule, arg.rules, arg.description)


def structurally_equal(a: Argument, b: Argument) -> bool:
    """Node-for-node comparison that does not go through ``canonical``."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if isinstance(x, Leaf) and isinstance(y, Leaf):
            if x.formula != y.formula:
                return False
        elif isinstance(x, Node) and isinstance(y, Node):
            if x.rule != y.rule or len(x.children) != len(y.children):
                return False
            stack.extend(zip(x.children, y.children))
        else:
            return False
    return True


def canonical_form(arg: Argument) -> str:
    return arg.canonical


def node_count(arg: Argument) -> int:
    return arg.node_count


def sorted_arguments(args) -> list:
    return sorted(args, key=lambda a: a.sort_key)


class _ArgumentReader:
    """Recursive-descent reader for the canonical argument syntax."""

    def __init__(self, text, theory):
        self.text = text
        self.pos = 0
        self.theory = theory

    def fail(self, message):
        line = self.text.count("\n", 0, self.pos) + 1
        start = self.text.rfind("\n", 0, self.pos) + 1
        end = self.text.find("\n", self.pos)
        snippet = self.text[start:] if end < 0 else self.text[start:end]
        raise ParseError(message, line, self.pos - start + 1, snippet)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def formula(self):
        self.skip()
        start = self.pos
        if self.text.startswith("-", self.pos):
            self.pos += 1
        ident_start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        token = self.text[ident_start:self.pos]
        if not IDENTIFIER.match(token):
            self.pos = start
            self.fail("expected a formula")
        return Formula(token, ident_start > start)

    def argument(self):
        self.skip()
        if not self.text.startswith("[", self.pos):
            f = self.formula()
            if self.theory is not None and f not in self.theory.kb:
                self.fail(f"{f} is not in the knowledge base")
            return Leaf(f)
        self.pos += 1
        children = [self.argument()]
        self.skip()
        while self.text.startswith(",", self.pos):
            self.pos += 1
            children.append(self.argument())
            self.skip()
        for kind in RuleKind:
            if self.text.startswith(kind.arrow, self.pos):
                self.pos += len(kind.arrow)
                break
        else:
            self.fail("expected '->' or '=>'")
        conclusion = self.formula()
        self.skip()
        if not self.text.startswith("]", self.pos):
            self.fail("expected ']'")
        self.pos += 1
        rule = Rule(kind, tuple(c.conc for c in children), conclusion)
        if self.theory is not None:
            named = self.theory.rule_index.get(rule)
            if named is None:
                self.fail(f"rule {rule} is not in the theory")
            rule = named
        return Node(rule, tuple(children))


def parse_argument(text: str, theory: Optional[ArgumentationTheory] = None) -> Argument:
    """Read an argument back from its canonical form.

    With a theory, leaves must be knowledge-base formulas and every rule must
    belong to the theory; the theory's named copy of each rule is used.
    """
    reader = _ArgumentReader(text, theory)
    arg = reader.argument()
    reader.skip()
    if reader.pos != len(text):
        reader.fail("unexpected trailing input")
    return arg
