"""JSON and Graphviz DOT output."""

from __future__ import annotations

import json
from typing import Optional

from .arguments import Argument, Leaf, Node
from .classification import classify
from .minimality import is_minimal
from .theory import ArgumentationTheory, Rule, formula


def rule_ref(rule: Rule, theory: Optional[ArgumentationTheory] = None) -> str:
    if theory is not None and theory.has_rule(rule):
        return theory.name_of(rule)
    return rule.name or str(rule)


def tree_to_dict(arg: Argument, theory: Optional[ArgumentationTheory] = None) -> dict:
    if isinstance(arg, Leaf):
        return {"conc": str(arg.conc), "rule": None, "subs": []}
    return {
        "conc": str(arg.conc),
        "rule": rule_ref(arg.rule, theory),
        "subs": [tree_to_dict(c, theory) for c in arg.children],
    }


def argument_to_dict(arg: Argument, theory: Optional[ArgumentationTheory] = None) -> dict:
    """Nested tree plus the flat triple, classification flags and size."""
    out = tree_to_dict(arg, theory)
    report = classify(arg)
    desc = arg.description
    out["triple"] = {
        "grounds": sorted(str(g) for g in desc.grounds),
        "rules": sorted(rule_ref(r, theory) for r in desc.rules),
        "conclusion": str(desc.conclusion),
    }
    out["flags"] = {
        "regular": report.regular,
        "circular": report.circular,
        "redundant": report.redundant,
        "minimal": is_minimal(desc).minimal,
    }
    out["nodes"] = arg.node_count
    return out


def argument_from_dict(data: dict, theory: ArgumentationTheory) -> Argument:
    """Rebuild a tree from its JSON form; rule references are theory names."""
    if data["rule"] is None:
        return Leaf(formula(data["conc"]))
    rule = theory.rule_by_name[data["rule"]]
    children = tuple(argument_from_dict(d, theory) for d in data["subs"])
    return Node(rule, children)


def _to_jsonable(item, theory):
    if isinstance(item, Argument):
        return argument_to_dict(item, theory)
    if hasattr(item, "to_dict"):
        return item.to_dict()
    return item


def export_json(items, theory: Optional[ArgumentationTheory] = None) -> str:
    """Serialize arguments, reports, or a list of either."""
    if isinstance(items, (list, tuple)):
        payload = [_to_jsonable(x, theory) for x in items]
    else:
        payload = _to_jsonable(items, theory)
    return json.dumps(payload, indent=2)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(arg: Argument, theory: Optional[ArgumentationTheory] = None, name: str = "argument") -> str:
    """One ellipse per tree node, one box per rule application, edges child to parent.

    Ids follow a pre-order walk, so equal trees give identical text.
    """
    lines = [f"digraph {name} {{", "  rankdir=BT;", f"  label={_quote(arg.canonical)};"]
    counters = {"f": 0, "r": 0}

    def visit(node):
        fid = f"f{counters['f']}"
        counters["f"] += 1
        lines.append(f"  {fid} [shape=ellipse, label={_quote(str(node.conc))}];")
        if isinstance(node, Node):
            rid = f"r{counters['r']}"
            counters["r"] += 1
            label = f"{rule_ref(node.rule, theory)} ({node.rule.kind.value})"
            lines.append(f"  {rid} [shape=box, label={_quote(label)}];")
            lines.append(f"  {rid} -> {fid};")
            for child in node.children:
                cid = visit(child)
                lines.append(f"  {cid} -> {rid};")
        return fid

    visit(arg)
    lines.append("}")
    return "\n".join(lines) + "\n"
