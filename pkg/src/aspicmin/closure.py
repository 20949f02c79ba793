"""Forward-chaining closure of a formula set under a rule set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .theory import Formula, Rule


@dataclass(frozen=True)
class ClosureResult:
    closed: frozenset
    # (rule, round) pairs; every rule in a round was enabled by the set as it
    # stood when that round began.
    trace: tuple


def closure(P: Iterable[Formula], R: Iterable[Rule]) -> ClosureResult:
    """Least superset of ``P`` closed under ``R``.

    Rules fire in rounds, in sorted order within a round, so the trace is
    reproducible. Each rule fires at most once.
    """
    closed = set(P)
    pending = sorted(set(R), key=Rule.sort_key)
    trace = []
    step = 0
    while True:
        step += 1
        fired = [r for r in pending if all(p in closed for p in r.premises)]
        if not fired:
            break
        for r in fired:
            trace.append((r, step))
        closed.update(r.conclusion for r in fired)
        pending = [r for r in pending if r not in fired]
    return ClosureResult(frozenset(closed), tuple(trace))


def entails(P: Iterable[Formula], R: Iterable[Rule], p: Formula) -> bool:
    P = frozenset(P)
    if p in P:
        return True
    return p in closure(P, R).closed
