"""Minimal arguments: no proper subset of the grounds, and no proper subset
of the rules, still yields the conclusion.

Closure is monotone in both the formula set and the rule set, so a proper
subset that still entails the conclusion can always be grown to one that
misses a single element. Checking the |G| + |R| single removals therefore
decides minimality exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arguments import ArgumentDescription
from .closure import entails
from .construction import enumerate_regular
from .errors import PropertyViolation
from .theory import ArgumentationTheory, Rule, formula


@dataclass(frozen=True)
class MinimalityVerdict:
    minimal: bool
    ground_witness: Optional[frozenset] = None
    rule_witness: Optional[frozenset] = None


def _shrink(items, still_holds, key):
    """Drop elements one at a time, in sorted order, while ``still_holds``."""
    current = set(items)
    for item in sorted(items, key=key):
        trial = current - {item}
        if still_holds(trial):
            current = trial
    return frozenset(current)


def is_minimal(triple: ArgumentDescription) -> MinimalityVerdict:
    """Decide minimality with one probe per ground and per rule.

    Witnesses are shrunk greedily to subset-minimal sets that still entail
    the conclusion, so the cyclic case ``({a}, {a->c, c->b, b->a}, a)``
    reports the empty rule set.
    """
    G, R, p = triple.grounds, triple.rules, triple.conclusion
    rule_key = Rule.sort_key

    ground_witness = None
    for g in sorted(G):
        rest = G - {g}
        if entails(rest, R, p):
            ground_witness = _shrink(rest, lambda s: entails(s, R, p), key=None)
            break

    rule_witness = None
    for r in sorted(R, key=rule_key):
        rest = R - {r}
        if entails(G, rest, p):
            rule_witness = _shrink(rest, lambda s: entails(G, s, p), key=rule_key)
            break

    return MinimalityVerdict(ground_witness is None and rule_witness is None, ground_witness, rule_witness)


def minimal_arguments_for(theory: ArgumentationTheory, p) -> list:
    """Regular arguments concluding ``p``, each confirmed minimal.

    A regular argument that fails the minimality test would contradict the
    regular/minimal equivalence; it is raised, never dropped.
    """
    p = formula(p)
    out = []
    for arg in enumerate_regular(theory):
        if arg.conc != p:
            continue
        verdict = is_minimal(arg.description)
        if not verdict.minimal:
            raise PropertyViolation(
                f"regular argument {arg} is not minimal", argument=arg, verdict=verdict)
        out.append(arg)
    return out

