"""Circular, redundant and regular arguments.

Two distinct sub-arguments with the same conclusion make an argument
circular when one sits inside the other, and redundant when neither does.
An argument is regular when no such pair exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .arguments import Argument

CIRCULAR = "circular"
REDUNDANT = "redundant"


@dataclass(frozen=True)
class Witness:
    kind: str
    first: Argument
    second: Argument


@dataclass
class ClassificationReport:
    circular: bool
    redundant: bool
    regular: bool
    witnesses: list = field(default_factory=list)


def classify(arg: Argument) -> ClassificationReport:
    """Check every unordered pair of distinct sub-arguments.

    Circular witnesses are ordered (inner, outer); redundant witnesses are
    ordered by canonical form. The list is sorted by canonical forms.
    """
    by_conclusion = {}
    for s in arg.sub:
        by_conclusion.setdefault(s.conc, []).append(s)

    witnesses = []
    for group in by_conclusion.values():
        for a, b in combinations(sorted(group, key=lambda s: s.canonical), 2):
            if a in b.sub:
                witnesses.append(Witness(CIRCULAR, a, b))
            elif b in a.sub:
                witnesses.append(Witness(CIRCULAR, b, a))
            else:
                witnesses.append(Witness(REDUNDANT, a, b))
    witnesses.sort(key=lambda w: (w.first.canonical, w.second.canonical))

    circular = any(w.kind == CIRCULAR for w in witnesses)
    redundant = any(w.kind == REDUNDANT for w in witnesses)
    return ClassificationReport(circular, redundant, not witnesses, witnesses)


def is_regular(arg: Argument) -> bool:
    return len({s.conc for s in arg.sub}) == len(arg.sub)
