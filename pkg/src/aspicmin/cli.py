"""Command-line interface.

Exit status is 0 on success, 1 when a check finds violations or the input
breaks a theory invariant, and 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arguments import ArgumentDescription, sorted_arguments
from .classification import classify
from .closure import closure, entails
from .construction import (
    DEFAULT_BUDGET,
    enumerate_all,
    enumerate_bounded,
    enumerate_regular,
    is_acyclic,
    triple_realizable,
)
from .dsl import load_theory
from .errors import AspicError, ParseError, PropertyViolation
from .export import export_dot, export_json, rule_ref
from .minimality import minimal_arguments_for
from .oracle import GeneratorConfig, check_theory, run_property_campaign
from .theory import formula, validate_theory

OK, FAILED, BAD_INPUT = 0, 1, 2


def _formulas(text):
    return frozenset(formula(t) for t in text.split(",") if t.strip())


def _rules(theory, text):
    if text is None:
        return list(theory.rules)
    out = []
    for name in (t.strip() for t in text.split(",")):
        if not name:
            continue
        if name not in theory.rule_by_name:
            raise AspicError(f"no rule named {name}")
        out.append(theory.rule_by_name[name])
    return out


def _fmt_set(items):
    return "{" + ", ".join(sorted(str(x) for x in items)) + "}"


def _triple_text(desc, theory):
    rules = ", ".join(sorted(rule_ref(r, theory) for r in desc.rules))
    return f"({_fmt_set(desc.grounds)}, {{{rules}}}, {desc.conclusion})"


def _arguments(theory, budget):
    if budget is None:
        if is_acyclic(theory):
            return enumerate_all(theory)
        budget = DEFAULT_BUDGET
    return enumerate_bounded(theory, budget)


def cmd_validate(args, out):
    theory = load_theory(args.file)
    report = validate_theory(theory, strict_mode=args.strict)
    for f, has in report.contradictory.items():
        out.write(f"formula\t{f}\t{'contradictory' if has else 'no-contradictory'}\n")
    out.write(f"kb-disjoint\t{str(report.kb_disjoint).lower()}\n")
    out.write(f"rules-disjoint\t{str(report.rules_disjoint).lower()}\n")
    for issue in report.warnings:
        out.write(f"warning\t{issue.code}\t{issue.message}\n")
    for issue in report.errors:
        out.write(f"error\t{issue.code}\t{issue.message}\n")
    return OK if report.ok else FAILED


def cmd_enumerate(args, out):
    theory = load_theory(args.file)
    if args.regular_only:
        found = enumerate_regular(theory)
        if args.budget is not None:
            found = [a for a in found if a.node_count <= args.budget]
    else:
        found = _arguments(theory, args.budget)
    if args.format == "json":
        out.write(export_json(found, theory) + "\n")
    else:
        for a in found:
            out.write(f"{a.node_count}\t{a.canonical}\t{_triple_text(a.description, theory)}\n")
    if args.figure:
        from .plotting import plot_argument_sizes
        plot_argument_sizes(found, args.figure)
    return OK


def cmd_classify(args, out):
    theory = load_theory(args.file)
    found = _arguments(theory, args.budget)
    if args.format == "json":
        payload = []
        for a in found:
            report = classify(a)
            payload.append({
                "argument": a.canonical,
                "regular": report.regular,
                "circular": report.circular,
                "redundant": report.redundant,
                "witnesses": [[w.kind, w.first.canonical, w.second.canonical] for w in report.witnesses],
            })
        out.write(json.dumps(payload, indent=2) + "\n")
        return OK
    for a in found:
        report = classify(a)
        label = "regular" if report.regular else "+".join(
            k for k, flag in (("circular", report.circular), ("redundant", report.redundant)) if flag)
        pairs = "; ".join(f"{w.kind}({w.first.canonical}, {w.second.canonical})" for w in report.witnesses)
        out.write(f"{a.canonical}\t{label}\t{pairs}\n")
    return OK


def cmd_minimal(args, out):
    theory = load_theory(args.file)
    try:
        found = minimal_arguments_for(theory, args.conclusion)
    except PropertyViolation as exc:
        out.write(f"violation\t{exc}\n")
        return FAILED
    if args.budget is not None:
        found = [a for a in found if a.node_count <= args.budget]
    for a in found:
        out.write(f"{a.canonical}\t{_triple_text(a.description, theory)}\n")
    return OK


def cmd_closure(args, out):
    theory = load_theory(args.file)
    result = closure(_formulas(args.from_), _rules(theory, args.rules))
    out.write(f"closure\t{_fmt_set(result.closed)}\n")
    for rule, step in result.trace:
        out.write(f"fire\t{step}\t{rule_ref(rule, theory)}\t{rule}\n")
    return OK


def cmd_entails(args, out):
    theory = load_theory(args.file)
    holds = entails(_formulas(args.from_), _rules(theory, args.rules), formula(args.goal))
    out.write(f"{str(holds).lower()}\n")
    return OK


def cmd_realizable(args, out):
    theory = load_theory(args.file)
    triple = ArgumentDescription(
        _formulas(args.grounds), frozenset(_rules(theory, args.rules)), formula(args.conclusion))
    result = triple_realizable(theory, triple, args.budget)
    out.write(f"verdict\t{result.verdict.value}\n")
    out.write(f"exact\t{str(result.exact).lower()}\n")
    if result.refutation is not None:
        out.write(f"refuted\t{result.refutation.condition}\t{result.refutation.detail}\n")
    for w in result.witnesses:
        out.write(f"witness\t{w.canonical}\n")
    return OK


def _summarize(report, out):
    for name in sorted(report.checked):
        failed = sum(1 for v in report.violations if v.property == name)
        out.write(f"checked\t{name}\t{report.checked[name]}\t{failed}\n")
    out.write(f"informational\t{len(report.informational)}\n")
    out.write(f"skipped\t{len(report.skipped)}\n")
    for v in report.violations:
        out.write(f"violation\t{v.property}\t{v.subject}\t{v.witness}\n")
    out.write(f"result\t{'pass' if report.ok else 'fail'}\n")


def _write_report(report, args):
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    if args.figure:
        from .plotting import plot_property_report
        plot_property_report(report, args.figure)


def cmd_check_props(args, out):
    theory = load_theory(args.file)
    report = check_theory(theory, args.budget if args.budget is not None else DEFAULT_BUDGET)
    _summarize(report, out)
    _write_report(report, args)
    return OK if report.ok else FAILED


def cmd_fuzz(args, out):
    config = GeneratorConfig(
        seed=args.seed,
        num_atoms=args.atoms,
        num_rules=args.rules,
        max_premises=args.max_premises,
        kb_size=args.kb,
        allow_cycles=args.cycles,
        duplicate_premises=args.duplicate_premises,
    )
    report = run_property_campaign(config, args.count, args.budget)
    _summarize(report, out)
    _write_report(report, args)
    return OK if report.ok else FAILED


def cmd_export_dot(args, out):
    theory = load_theory(args.file)
    goal = formula(args.conclusion)
    found = [a for a in _arguments(theory, args.budget) if a.conc == goal]
    text = "".join(export_dot(a, theory, name=f"argument{i}") for i, a in enumerate(sorted_arguments(found)))
    Path(args.output).write_text(text, encoding="utf-8")
    out.write(f"wrote\t{len(found)}\t{args.output}\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aspicmin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="theory file")
        return p

    def budget(p, default=None):
        p.add_argument("--budget", type=int, default=default,
                       help="maximum argument size in nodes (default: exhaustive when acyclic, "
                            f"else {DEFAULT_BUDGET})")

    p = with_file("validate", "check contrariness and disjointness")
    p.add_argument("--strict", action="store_true", help="missing contradictories are errors")
    p.set_defaults(func=cmd_validate)

    p = with_file("enumerate", "list arguments")
    budget(p)
    p.add_argument("--regular-only", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--figure", help="also write a size histogram (png, svg or pdf)")
    p.set_defaults(func=cmd_enumerate)

    p = with_file("classify", "flag circular and redundant arguments")
    budget(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = with_file("minimal", "minimal arguments for a conclusion")
    p.add_argument("--conclusion", required=True)
    budget(p)
    p.set_defaults(func=cmd_minimal)

    p = with_file("closure", "closure of a formula set under rules")
    p.add_argument("--from", dest="from_", required=True, help="comma-separated formulas")
    p.add_argument("--rules", help="comma-separated rule names (default: all)")
    p.set_defaults(func=cmd_closure)

    p = with_file("entails", "whether a goal is in the closure")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--goal", required=True)
    p.add_argument("--rules")
    p.set_defaults(func=cmd_entails)

    p = with_file("realizable", "whether some argument has the given triple")
    p.add_argument("--grounds", required=True)
    p.add_argument("--rules", required=True)
    p.add_argument("--conclusion", required=True)
    budget(p, DEFAULT_BUDGET)
    p.set_defaults(func=cmd_realizable)

    p = with_file("check-props", "run every property check on one theory")
    budget(p)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--figure", help="write a summary figure here")
    p.set_defaults(func=cmd_check_props)

    p = sub.add_parser("fuzz", help="property campaign over random theories")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--atoms", type=int, default=8)
    p.add_argument("--rules", type=int, default=6)
    p.add_argument("--max-premises", type=int, default=3)
    p.add_argument("--kb", type=int, default=3)
    p.add_argument("--cycles", action="store_true")
    p.add_argument("--duplicate-premises", action="store_true")
    p.add_argument("--budget", type=int, default=32)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--figure", help="write a summary figure here")
    p.set_defaults(func=cmd_fuzz)

    p = with_file("export-dot", "write Graphviz trees for arguments with a conclusion")
    p.add_argument("--conclusion", required=True)
    budget(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"{args.file}:{exc}\n")
        return BAD_INPUT
    except (AspicError, ValueError, OSError) as exc:
        location = ""
        if getattr(exc, "line", None) is not None:
            location = f"{exc.line}:{exc.column}: "
        err.write(f"error: {location}{exc}\n")
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
