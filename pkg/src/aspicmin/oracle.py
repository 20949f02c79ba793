"""Brute-force oracles and property campaigns.

The functions prefixed ``naive_`` re-derive results by the most literal route
available (subset enumeration, unmemoized recursion) and share no code with
the engine paths they are compared against. The ``check_*`` functions turn
the relevance, regular/minimal and unique-description properties into
:class:`PropertyReport` objects, and :func:`run_property_campaign` runs them
over seeded random theories.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import asdict, dataclass, field, replace
from itertools import chain, combinations
from typing import Callable, Optional

from .arguments import Argument, ArgumentDescription, Leaf, Node
from .classification import classify, is_regular
from .closure import closure
from .construction import enumerate_bounded, enumerate_regular
from .dsl import unparse_theory
from .errors import EnumerationLimit, TooLarge
from .minimality import MinimalityVerdict, is_minimal
from .theory import (
    ArgumentationTheory,
    Formula,
    Rule,
    RuleKind,
    build_theory,
    classical_pairs,
)

RELEVANCE = "relevance"
EQUIVALENCE = "regular-iff-minimal"
UNIQUE = "unique-description"
DIFFERENTIAL = "minimality-oracle"
WELL_FORMED = "well-formed"
REGULAR_ENUMERATION = "regular-enumeration"
CLOSURE_IDEMPOTENT = "closure-idempotent"
CLOSURE_MONOTONE = "closure-monotone"

NAIVE_LIMIT = 20
DIFFERENTIAL_LIMIT = 12
DEFAULT_ARGUMENT_LIMIT = 200_000


# ---------------------------------------------------------------------------
# reports

@dataclass
class Violation:
    property: str
    subject: str
    witness: str
    theory: str = ""
    seed: Optional[int] = None
    minimized: Optional[str] = None


@dataclass
class Note:
    property: str
    subject: str
    detail: str
    seed: Optional[int] = None


@dataclass
class PropertyReport:
    checked: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    informational: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        self.checked.update(other.checked)
        self.violations.extend(other.violations)
        self.informational.extend(other.informational)
        self.skipped.extend(other.skipped)
        return self

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": {k: self.checked[k] for k in sorted(self.checked)},
            "violations": [asdict(v) for v in self.violations],
            "informational": [asdict(n) for n in self.informational],
            "skipped": list(self.skipped),
        }


# ---------------------------------------------------------------------------
# independent oracles

def _derives(P, R, p) -> bool:
    known = set(P)
    changed = True
    while changed:
        changed = False
        for r in R:
            if r.conclusion not in known and all(q in known for q in r.premises):
                known.add(r.conclusion)
                changed = True
    return p in known


def _proper_subsets(items):
    items = sorted(items, key=str)
    return chain.from_iterable(combinations(items, k) for k in range(len(items)))


def naive_is_minimal(triple: ArgumentDescription) -> MinimalityVerdict:
    """Try every proper subset of the grounds and of the rules, smallest first."""
    G, R, p = triple.grounds, triple.rules, triple.conclusion
    if len(G) + len(R) > NAIVE_LIMIT:
        raise TooLarge(f"|G|+|R| = {len(G) + len(R)} exceeds {NAIVE_LIMIT}")
    ground_witness = next(
        (frozenset(s) for s in _proper_subsets(G) if _derives(s, R, p)), None)
    rule_witness = next(
        (frozenset(s) for s in _proper_subsets(R) if _derives(G, s, p)), None)
    return MinimalityVerdict(ground_witness is None and rule_witness is None, ground_witness, rule_witness)


def naive_closure(P, R) -> frozenset:
    """Intersection of every closed superset of ``P`` within the mentioned formulas."""
    P = frozenset(P)
    R = list(R)
    universe = sorted(P | {f for r in R for f in r.premises + (r.conclusion,)})
    if len(universe) > 16:
        raise TooLarge("naive closure is limited to 16 formulas")
    extra = [f for f in universe if f not in P]
    least = frozenset(universe)
    for k in range(len(extra) + 1):
        for chosen in combinations(extra, k):
            s = P | frozenset(chosen)
            if all(r.conclusion in s for r in R if all(q in s for q in r.premises)):
                least &= s
    return least


def _count(arg) -> int:
    return 1 + sum(_count(c) for c in getattr(arg, "children", ()))


def naive_enumerate(theory: ArgumentationTheory, budget: int) -> set:
    """All arguments with at most ``budget`` nodes by plain top-down recursion."""

    def for_conclusion(f, room):
        if room < 1:
            return
        if f in theory.kb:
            yield Leaf(f)
        for rule in theory.rules:
            if rule.conclusion == f:
                for kids in for_premises(rule.premises, room - 1):
                    yield Node(rule, kids)

    def for_premises(premises, room):
        if not premises:
            yield ()
            return
        # leave at least one node for each later premise
        for first in for_conclusion(premises[0], room - (len(premises) - 1)):
            for rest in for_premises(premises[1:], room - _count(first)):
                yield (first,) + rest

    goals = set(theory.kb.all) | {r.conclusion for r in theory.rules}
    return {a for f in goals for a in for_conclusion(f, budget)}


def check_argument(arg: Argument, theory: ArgumentationTheory) -> list:
    """Problems found walking the argument-formation clauses; empty if well-formed."""
    problems = []
    stack = [arg]
    while stack:
        a = stack.pop()
        if isinstance(a, Leaf):
            if a.formula not in theory.kb.axioms and a.formula not in theory.kb.premises:
                problems.append(f"leaf {a.formula} is not in the knowledge base")
            continue
        rule = a.rule
        in_theory = any(
            r.kind is rule.kind and r.premises == rule.premises and r.conclusion == rule.conclusion
            for r in theory.rules)
        if not in_theory:
            problems.append(f"rule {rule} is not in the theory")
        if len(a.children) != len(rule.premises):
            problems.append(f"rule {rule} applied to {len(a.children)} sub-arguments")
        for premise, child in zip(rule.premises, a.children):
            child_conc = child.formula if isinstance(child, Leaf) else child.rule.conclusion
            if child_conc != premise:
                problems.append(f"premise {premise} of {rule} supported by {child_conc}")
        stack.extend(a.children)
    return problems


# ---------------------------------------------------------------------------
# property checks

def _subtrees(arg) -> set:
    out, stack = set(), [arg]
    while stack:
        a = stack.pop()
        if a not in out:
            out.add(a)
            stack.extend(getattr(a, "children", ()))
    return out


def check_relevance(arg: Argument) -> PropertyReport:
    """Every ground and every rule of an argument takes part in its derivation."""
    report = PropertyReport()
    report.checked[RELEVANCE] += 1
    desc = arg.description
    G, R, p = desc.grounds, desc.rules, desc.conclusion

    def fail(witness):
        report.violations.append(Violation(RELEVANCE, arg.canonical, witness))

    if isinstance(arg, Leaf):
        if G != {p} or R:
            fail(f"leaf described as {desc}")
        return report

    subs = _subtrees(arg)
    for g in sorted(G):
        if Leaf(g) not in subs:
            fail(f"ground {g} has no leaf sub-argument")
        if not any(g in r.premises for r in R):
            fail(f"ground {g} is not a premise of any rule")
    for r in sorted(R, key=Rule.sort_key):
        if not any(isinstance(s, Node) and s.rule == r for s in subs):
            fail(f"rule {r} is not the top rule of any sub-argument")
    return report


def minimize_theory(theory: ArgumentationTheory, fails: Callable) -> ArgumentationTheory:
    """Greedily drop rules, then knowledge-base formulas, while ``fails`` holds."""
    current = theory

    def rebuilt(strict, defeasible, axioms, premises):
        return build_theory(theory.language, theory.contrariness.pairs, strict, defeasible, axioms, premises)

    for rule in list(theory.rules):
        strict = [r for r in current.strict_rules if r != rule]
        defeasible = [r for r in current.defeasible_rules if r != rule]
        trial = rebuilt(strict, defeasible, current.kb.axioms, current.kb.premises)
        if trial.rules != current.rules and fails(trial):
            current = trial
    for f in sorted(theory.kb.all):
        trial = rebuilt(current.strict_rules, current.defeasible_rules,
                        current.kb.axioms - {f}, current.kb.premises - {f})
        if trial.kb != current.kb and fails(trial):
            current = trial
    return current


def _arguments(theory, budget, arguments, limit):
    if arguments is not None:
        return arguments
    return enumerate_bounded(theory, budget, limit=limit)


def check_regular_minimal_equivalence(
    theory: ArgumentationTheory,
    budget: int,
    is_minimal: Callable = is_minimal,
    *,
    arguments=None,
    limit: Optional[int] = None,
    minimize: bool = True,
    seed: Optional[int] = None,
) -> PropertyReport:
    """Every argument within the budget is regular exactly when it is minimal."""
    report = PropertyReport()
    verdicts = {}
    for arg in _arguments(theory, budget, arguments, limit):
        report.checked[EQUIVALENCE] += 1
        cls = classify(arg)
        desc = arg.description
        if desc not in verdicts:
            verdicts[desc] = is_minimal(desc)
        verdict = verdicts[desc]
        if cls.regular != verdict.minimal:
            pairs = "; ".join(f"{w.kind} ({w.first}, {w.second})" for w in cls.witnesses)
            witness = (f"regular={cls.regular} minimal={verdict.minimal}"
                       f" ground_witness={_fmt_set(verdict.ground_witness)}"
                       f" rule_witness={_fmt_set(verdict.rule_witness)}"
                       f" pairs=[{pairs}]")
            report.violations.append(
                Violation(EQUIVALENCE, arg.canonical, witness, unparse_theory(theory), seed))
    if report.violations and minimize:
        def fails(t):
            try:
                return not check_regular_minimal_equivalence(
                    t, budget, is_minimal, limit=limit, minimize=False).ok
            except EnumerationLimit:
                return False
        small = unparse_theory(minimize_theory(theory, fails))
        for v in report.violations:
            v.minimized = small
    return report


def check_unique_description(
    theory: ArgumentationTheory,
    budget: int,
    is_minimal: Callable = is_minimal,
    *,
    arguments=None,
    limit: Optional[int] = None,
    minimize: bool = True,
    seed: Optional[int] = None,
) -> PropertyReport:
    """No two distinct arguments share a triple when one of them is minimal.

    Collisions between non-minimal arguments are recorded as notes.
    """
    report = PropertyReport()
    groups = {}
    for arg in _arguments(theory, budget, arguments, limit):
        groups.setdefault(arg.description, []).append(arg)
    for desc in sorted(groups, key=lambda d: (str(d.conclusion), str(d))):
        members = groups[desc]
        report.checked[UNIQUE] += 1
        if len(members) == 1:
            continue
        names = ", ".join(a.canonical for a in members)
        if is_minimal(desc).minimal:
            report.violations.append(
                Violation(UNIQUE, str(desc), names, unparse_theory(theory), seed))
        else:
            report.informational.append(
                Note(UNIQUE, str(desc), f"{len(members)} non-minimal arguments: {names}", seed))
    if report.violations and minimize:
        def fails(t):
            try:
                return not check_unique_description(
                    t, budget, is_minimal, limit=limit, minimize=False).ok
            except EnumerationLimit:
                return False
        small = unparse_theory(minimize_theory(theory, fails))
        for v in report.violations:
            v.minimized = small
    return report


def _fmt_set(items) -> str:
    if items is None:
        return "none"
    return "{" + "; ".join(sorted(str(x) for x in items)) + "}"


def check_theory(
    theory: ArgumentationTheory,
    budget: int,
    is_minimal: Callable = is_minimal,
    *,
    limit: Optional[int] = DEFAULT_ARGUMENT_LIMIT,
    seed: Optional[int] = None,
) -> PropertyReport:
    """Run every property check on one theory."""
    report = PropertyReport()
    try:
        arguments = enumerate_bounded(theory, budget, limit=limit)
    except EnumerationLimit as exc:
        report.skipped.append({"seed": seed, "reason": str(exc)})
        return report
    text = unparse_theory(theory)

    for arg in arguments:
        report.checked[WELL_FORMED] += 1
        for problem in check_argument(arg, theory):
            report.violations.append(Violation(WELL_FORMED, arg.canonical, problem, text, seed))
        rel = check_relevance(arg)
        for v in rel.violations:
            v.theory, v.seed = text, seed
        report.merge(rel)

    report.merge(check_regular_minimal_equivalence(
        theory, budget, is_minimal, arguments=arguments, seed=seed))
    report.merge(check_unique_description(
        theory, budget, is_minimal, arguments=arguments, seed=seed))

    regular_within = {a for a in enumerate_regular(theory) if a.node_count <= budget}
    filtered = {a for a in arguments if is_regular(a)}
    report.checked[REGULAR_ENUMERATION] += 1
    if regular_within != filtered:
        diff = sorted(a.canonical for a in regular_within ^ filtered)
        report.violations.append(Violation(REGULAR_ENUMERATION, "", ", ".join(diff), text, seed))

    for desc in sorted({a.description for a in arguments}, key=str):
        if len(desc.grounds) + len(desc.rules) > DIFFERENTIAL_LIMIT:
            continue
        report.checked[DIFFERENTIAL] += 1
        fast, slow = is_minimal(desc), naive_is_minimal(desc)
        if fast.minimal != slow.minimal:
            report.violations.append(Violation(
                DIFFERENTIAL, str(desc), f"fast={fast.minimal} naive={slow.minimal}", text, seed))
    return report


# ---------------------------------------------------------------------------
# random theories

@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    num_atoms: int = 8
    num_rules: int = 6
    max_premises: int = 3
    kb_size: int = 3
    allow_cycles: bool = False
    # repeat one premise inside a rule now and then (b, b => c)
    duplicate_premises: bool = False

    def __post_init__(self):
        if self.num_atoms < 1 or self.max_premises < 1 or self.num_rules < 0 or self.kb_size < 0:
            raise ValueError(f"invalid generator config: {self}")


def random_theory(config: GeneratorConfig) -> ArgumentationTheory:
    """A theory over atoms a1..aN that depends only on ``config``.

    Without cycles, a random ranking of the atoms is drawn first and every
    rule concludes an atom ranked above all of its premises.
    """
    rng = random.Random(config.seed)
    atoms = [Formula(f"a{i}") for i in range(1, config.num_atoms + 1)]
    ranking = atoms[:]
    rng.shuffle(ranking)

    bodies = set()
    strict, defeasible = [], []
    for _ in range(config.num_rules):
        for _attempt in range(20):
            if config.allow_cycles:
                conclusion, pool = rng.choice(atoms), atoms
            else:
                if len(ranking) < 2:
                    break
                rank = rng.randrange(1, len(ranking))
                conclusion, pool = ranking[rank], ranking[:rank]
            k = rng.randint(1, min(config.max_premises, len(pool)))
            premises = rng.sample(pool, k)
            if config.duplicate_premises and rng.random() < 0.25:
                premises.insert(rng.randrange(len(premises) + 1), rng.choice(premises))
            body = (tuple(premises), conclusion)
            if body not in bodies:
                bodies.add(body)
                kind = rng.choice((RuleKind.STRICT, RuleKind.DEFEASIBLE))
                target = strict if kind is RuleKind.STRICT else defeasible
                target.append(Rule(kind, body[0], conclusion))
                break

    kb = rng.sample(atoms, min(config.kb_size, len(atoms)))
    axioms = [f for f in kb if rng.random() < 0.3]
    premises = [f for f in kb if f not in axioms]
    language = atoms + [a.negate() for a in atoms]
    return build_theory(language, classical_pairs(atoms), strict, defeasible, axioms, premises)


def run_property_campaign(
    config: GeneratorConfig,
    count: int,
    budget: int,
    is_minimal: Callable = is_minimal,
    *,
    limit: Optional[int] = DEFAULT_ARGUMENT_LIMIT,
) -> PropertyReport:
    """Check ``count`` theories generated from seeds ``config.seed``, ``config.seed + 1``, ..."""
    report = PropertyReport()
    for i in range(count):
        seed = config.seed + i
        theory = random_theory(replace(config, seed=seed))
        report.merge(check_theory(theory, budget, is_minimal, limit=limit, seed=seed))
    return report


def closure_probes(seed: int, count: int, num_atoms: int = 8, num_rules: int = 8) -> PropertyReport:
    """Idempotence and monotonicity of closure on random (P, R) pairs."""
    rng = random.Random(seed)
    atoms = [Formula(f"a{i}") for i in range(1, num_atoms + 1)]
    report = PropertyReport()

    def random_rules(n):
        out = set()
        for _ in range(n):
            k = rng.randint(1, 3)
            out.add(Rule(RuleKind.DEFEASIBLE, tuple(rng.sample(atoms, k)), rng.choice(atoms)))
        return out

    for _ in range(count):
        P = frozenset(rng.sample(atoms, rng.randint(0, num_atoms)))
        R = random_rules(rng.randint(0, num_rules))
        P2 = P | frozenset(rng.sample(atoms, rng.randint(0, num_atoms)))
        R2 = R | random_rules(rng.randint(0, 3))
        base = closure(P, R).closed
        subject = f"P={_fmt_set(P)} R={_fmt_set(R)}"

        report.checked[CLOSURE_IDEMPOTENT] += 1
        if closure(base, R).closed != base:
            report.violations.append(Violation(CLOSURE_IDEMPOTENT, subject, _fmt_set(base)))
        report.checked[CLOSURE_MONOTONE] += 1
        if not base <= closure(P2, R).closed or not base <= closure(P, R2).closed:
            report.violations.append(
                Violation(CLOSURE_MONOTONE, subject, f"P'={_fmt_set(P2)} R'={_fmt_set(R2)}"))
    return report
