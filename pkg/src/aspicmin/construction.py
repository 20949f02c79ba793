"""Building the arguments of a theory.

Three regimes are offered:

* :func:`enumerate_all` for acyclic theories, where the argument set is finite;
* :func:`enumerate_bounded`, every argument up to a node budget, which is the
  only complete option once rules form a cycle;
* :func:`enumerate_regular`, which always terminates because a regular
  argument never repeats a conclusion.

:func:`triple_realizable` decides whether some argument has a given
(grounds, rules, conclusion) description.
"""

from __future__ import annotations

import graphlib
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Optional

from .arguments import Argument, ArgumentDescription, Leaf, Node, sorted_arguments
from .closure import closure
from .errors import CyclicTheory, EnumerationLimit
from .theory import ArgumentationTheory, RuleKind, build_theory

DEFAULT_BUDGET = 64


def is_acyclic(theory: ArgumentationTheory) -> bool:
    graph = {}
    for rule in theory.rules:
        graph.setdefault(rule.conclusion, set()).update(rule.premises)
    try:
        graphlib.TopologicalSorter(graph).prepare()
    except graphlib.CycleError:
        return False
    return True


def _candidate_conclusions(theory):
    return sorted(set(theory.kb.all) | set(theory.rules_by_conclusion))


def enumerate_all(theory: ArgumentationTheory) -> list:
    """Every argument of an acyclic theory, sorted by (node count, canonical form)."""
    if not is_acyclic(theory):
        raise CyclicTheory("theory has a rule cycle; use enumerate_bounded")
    memo = {}

    def args_for(f):
        if f in memo:
            return memo[f]
        out = [Leaf(f)] if f in theory.kb else []
        for rule in theory.rules_concluding(f):
            pools = [args_for(p) for p in rule.premises]
            out.extend(Node(rule, kids) for kids in product(*pools))
        memo[f] = out
        return out

    result = []
    for f in _candidate_conclusions(theory):
        result.extend(args_for(f))
    return sorted_arguments(result)


def _compositions(total, parts):
    """Ordered ways to write ``total`` as ``parts`` positive integers."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_bounded(theory: ArgumentationTheory, budget: int, limit: Optional[int] = None) -> list:
    """Every argument with at most ``budget`` nodes.

    Built bottom-up by exact node count, so each tree is produced once.
    ``limit`` caps the total number of arguments; going over it raises
    :class:`EnumerationLimit` instead of exhausting memory.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    # table[f][n]: arguments concluding f with exactly n nodes
    table = {}
    total = 0

    def add(f, n, items):
        nonlocal total
        if not items:
            return
        table.setdefault(f, {}).setdefault(n, []).extend(items)
        total += len(items)
        if limit is not None and total > limit:
            raise EnumerationLimit(f"more than {limit} arguments within budget {budget}")

    for f in sorted(theory.kb.all):
        add(f, 1, [Leaf(f)])

    rules = [r for f in _candidate_conclusions(theory) for r in theory.rules_concluding(f)]
    for n in range(2, budget + 1):
        for rule in rules:
            k = len(rule.premises)
            if n - 1 < k or any(p not in table for p in rule.premises):
                continue
            found = []
            for sizes in _compositions(n - 1, k):
                pools = [table[p].get(s) for p, s in zip(rule.premises, sizes)]
                if all(pools):
                    found.extend(Node(rule, kids) for kids in product(*pools))
            add(rule.conclusion, n, found)

    return sorted_arguments(a for by_size in table.values() for items in by_size.values() for a in items)


def _reaches(choices, start, target):
    """Whether ``target`` is reachable from ``start`` along chosen rules."""
    stack, seen = [start], set()
    while stack:
        f = stack.pop()
        if f == target:
            return True
        if f in seen:
            continue
        seen.add(f)
        rule = choices.get(f)
        if rule is not None:
            stack.extend(rule.premises)
    return False


def _regular_for(theory, goal):
    # A regular argument is fixed by choosing, for each formula it mentions,
    # one way of obtaining it: the leaf (None) or a single rule. Choices must
    # not loop back on themselves.
    def search(choices, pending):
        pending = [f for f in pending if f not in choices]
        if not pending:
            yield choices
            return
        f, rest = pending[0], pending[1:]
        options = ([None] if f in theory.kb else []) + list(theory.rules_concluding(f))
        for rule in options:
            extended = dict(choices)
            extended[f] = rule
            if rule is not None and any(_reaches(extended, p, f) for p in rule.premises):
                continue
            yield from search(extended, rest + (list(rule.premises) if rule else []))

    for choices in search({}, [goal]):
        built = {}

        def build(f):
            if f not in built:
                rule = choices[f]
                built[f] = Leaf(f) if rule is None else Node(rule, tuple(build(p) for p in rule.premises))
            return built[f]

        yield build(goal)


def enumerate_regular(theory: ArgumentationTheory) -> list:
    """Every regular argument of the theory. Terminates for cyclic theories too."""
    out = []
    for f in _candidate_conclusions(theory):
        out.extend(_regular_for(theory, f))
    return sorted_arguments(out)


class Verdict(Enum):
    REALIZABLE = "realizable"
    NOT_REALIZABLE = "not-realizable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Refutation:
    condition: str
    detail: str


@dataclass
class RealizabilityResult:
    verdict: Verdict
    witnesses: list = field(default_factory=list)
    exact: bool = False
    refutation: Optional[Refutation] = None


def _refute(theory, triple):
    grounds, rules, p = triple.grounds, triple.rules, triple.conclusion

    for g in sorted(grounds):
        if g not in theory.kb:
            return Refutation("not-in-theory", f"ground {g} is not in the knowledge base")
    for r in sorted(rules, key=lambda r: r.sort_key()):
        if not theory.has_rule(r):
            return Refutation("not-in-theory", f"rule {r} is not in the theory")

    if not rules:
        if grounds == {p} and p in theory.kb:
            return None
        return Refutation("base-case", "a rule-free argument must be ({p}, {}, p) with p in the knowledge base")

    premises_used = {q for r in rules for q in r.premises}
    concluded = {r.conclusion for r in rules}
    for g in sorted(grounds):
        if g not in premises_used:
            return Refutation("unused-ground", f"ground {g} is not a premise of any listed rule")
    ordered = sorted(rules, key=lambda r: r.sort_key())
    for r in ordered:
        for q in r.premises:
            if q not in grounds and q not in concluded:
                return Refutation("unused-rule", f"premise {q} of rule {r} is neither a ground nor concluded by a listed rule")
    for r in ordered:
        if r.conclusion != p and r.conclusion not in premises_used:
            return Refutation("unused-rule", f"conclusion {r.conclusion} of rule {r} feeds no listed rule and is not the conclusion")
    if p not in concluded:
        return Refutation("not-concluded", f"{p} is not the conclusion of any listed rule")
    if p not in closure(grounds, rules).closed:
        return Refutation("not-derivable", f"{p} is not in the closure of the grounds under the rules")
    return None


def _restricted(theory, triple):
    named = [theory.rule_index[r] for r in triple.rules]
    return build_theory(
        language=theory.language,
        strict=[r for r in named if r.kind is RuleKind.STRICT],
        defeasible=[r for r in named if r.kind is RuleKind.DEFEASIBLE],
        axioms=triple.grounds & theory.kb.axioms,
        premises=triple.grounds & theory.kb.premises,
    )


def triple_realizable(
    theory: ArgumentationTheory,
    triple: ArgumentDescription,
    budget: int = DEFAULT_BUDGET,
) -> RealizabilityResult:
    """Decide whether some argument of ``theory`` is described by ``triple``.

    Cheap necessary conditions are tried first. Search then runs on the
    theory cut down to the triple's own rules and grounds; when that cut-down
    theory is acyclic the search is exhaustive, otherwise a miss within the
    budget is reported as unknown.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    refutation = _refute(theory, triple)
    if refutation is not None:
        return RealizabilityResult(Verdict.NOT_REALIZABLE, exact=True, refutation=refutation)

    sub = _restricted(theory, triple)
    exhaustive = is_acyclic(sub)
    pool = enumerate_all(sub) if exhaustive else enumerate_bounded(sub, budget)
    witnesses = [a for a in pool if a.description == triple]
    if witnesses:
        return RealizabilityResult(Verdict.REALIZABLE, witnesses, exact=exhaustive)
    if exhaustive:
        return RealizabilityResult(Verdict.NOT_REALIZABLE, exact=True)
    return RealizabilityResult(Verdict.UNKNOWN)
