"""Reader and writer for the theory file format.

::

    @autoneg
    axiom a .
    premise p .
    strict s1: p, q -> r .
    defeasible d1: r => s .
    contrary x of y .
    contradictory x ~ -x .

Statements end with ``.`` and may share a line; ``#`` starts a comment.
The language is every formula mentioned, plus ``-x`` for every atom ``x``
when ``@autoneg`` is present.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    DuplicateRule,
    DuplicateRuleName,
    OverlappingKB,
    ParseError,
)
from .theory import ArgumentationTheory, Formula, Rule, RuleKind, build_theory, classical_pairs

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>\#[^\n]*)|(?P<nl>\n)"
    r"|(?P<pragma>@[A-Za-z_]+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrow>->|=>)|(?P<punct>[-,.:~])"
)

KEYWORDS = ("axiom", "premise", "strict", "defeasible", "contrary", "contradictory")


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.lines = text.split("\n")
        self.tokens = self._tokenize()
        self.i = 0

    def _snippet(self, line):
        return self.lines[line - 1] if 0 < line <= len(self.lines) else ""

    def error(self, message, line, column):
        raise ParseError(message, line, column, self._snippet(line))

    def _tokenize(self):
        tokens = []
        pos, line, line_start = 0, 1, 0
        while pos < len(self.text):
            m = _TOKEN.match(self.text, pos)
            if m is None:
                self.error(f"unexpected character {self.text[pos]!r}", line, pos - line_start + 1)
            kind = m.lastgroup
            if kind == "nl":
                line += 1
                line_start = m.end()
            elif kind not in ("ws", "comment"):
                tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
            pos = m.end()
        self.eof = Token("eof", "", line, pos - line_start + 1)
        return tokens

    def peek(self, offset=0):
        j = self.i + offset
        return self.tokens[j] if j < len(self.tokens) else self.eof

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind, text=None, what=None):
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            self.error(f"expected {what or repr(text or kind)}, found {found}", tok.line, tok.column)
        return self.next()

    def formula(self):
        tok = self.peek()
        negated = False
        if tok.kind == "punct" and tok.text == "-":
            self.next()
            negated = True
        ident = self.expect("ident", what="a formula")
        return Formula(ident.text, negated), tok

    def parse(self):
        autoneg = False
        mentioned = []
        contrariness = []
        rules = []  # (Rule, token)
        axioms, premises = {}, {}

        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "pragma":
                self.next()
                if tok.text != "@autoneg":
                    self.error(f"unknown pragma {tok.text}", tok.line, tok.column)
                autoneg = True
                if self.peek().kind == "punct" and self.peek().text == ".":
                    self.next()
                continue
            if tok.kind != "ident" or tok.text not in KEYWORDS:
                found = "end of input" if tok.kind == "eof" else repr(tok.text)
                self.error(f"expected a statement keyword, found {found}", tok.line, tok.column)
            self.next()
            if tok.text in ("axiom", "premise"):
                f, ftok = self.formula()
                mentioned.append(f)
                (axioms if tok.text == "axiom" else premises).setdefault(f, ftok)
            elif tok.text in ("strict", "defeasible"):
                rules.append(self.rule(tok, mentioned))
            elif tok.text == "contrary":
                a, _ = self.formula()
                self.expect("ident", "of")
                b, _ = self.formula()
                mentioned += [a, b]
                contrariness.append((a, b))
            else:
                a, _ = self.formula()
                self.expect("punct", "~")
                b, _ = self.formula()
                mentioned += [a, b]
                contrariness += [(a, b), (b, a)]
            self.expect("punct", ".", what="'.' ending the statement")

        self._check(rules, axioms, premises)

        language = set(mentioned)
        if autoneg:
            atoms = sorted({Formula(f.token) for f in mentioned})
            contrariness += classical_pairs(atoms)
            language.update(atoms)
            language.update(a.negate() for a in atoms)
        return build_theory(
            language=language,
            contrariness=contrariness,
            strict=[r for r, _ in rules if r.kind is RuleKind.STRICT],
            defeasible=[r for r, _ in rules if r.kind is RuleKind.DEFEASIBLE],
            axioms=axioms,
            premises=premises,
        )

    def rule(self, keyword, mentioned):
        kind = RuleKind.STRICT if keyword.text == "strict" else RuleKind.DEFEASIBLE
        name = None
        if self.peek().kind == "ident" and self.peek(1).kind == "punct" and self.peek(1).text == ":":
            name = self.next().text
            self.next()
        if self.peek().kind == "arrow":
            tok = self.peek()
            self.error("a rule needs at least one premise", tok.line, tok.column)
        body = [self.formula()[0]]
        while self.peek().kind == "punct" and self.peek().text == ",":
            self.next()
            body.append(self.formula()[0])
        self.expect("arrow", kind.arrow)
        conclusion, _ = self.formula()
        mentioned += body + [conclusion]
        return Rule(kind, tuple(body), conclusion, name), keyword

    def _check(self, rules, axioms, premises):
        # Same checks build_theory makes, but with source positions.
        seen, names = {}, set()
        for rule, tok in rules:
            if rule.body in seen:
                other = seen[rule.body]
                what = "listed twice" if other.kind is rule.kind else "both strict and defeasible"
                raise DuplicateRule(f"rule {rule} is {what}", line=tok.line, column=tok.column)
            seen[rule.body] = rule
            if rule.name is not None:
                if rule.name in names:
                    raise DuplicateRuleName(
                        f"rule name {rule.name} is used twice", line=tok.line, column=tok.column)
                names.add(rule.name)
        for f, tok in premises.items():
            if f in axioms:
                raise OverlappingKB(
                    f"{f} is both an axiom and a premise", line=tok.line, column=tok.column)


def parse_theory(text: str) -> ArgumentationTheory:
    return _Parser(text).parse()


def load_theory(path) -> ArgumentationTheory:
    with open(path, encoding="utf-8") as fh:
        return parse_theory(fh.read())


def unparse_theory(theory: ArgumentationTheory) -> str:
    """Write a theory back out. Every rule is emitted with its name.

    Contrariness is spelled out pair by pair, so a formula of the language
    survives the round trip as long as it occurs somewhere in the theory.
    """
    lines = []
    for f in sorted(theory.kb.axioms):
        lines.append(f"axiom {f} .")
    for f in sorted(theory.kb.premises):
        lines.append(f"premise {f} .")
    for r in theory.rules:
        lines.append(f"{r.kind.value} {r.name}: {r} .")
    pairs = theory.contrariness.pairs
    for a, b in sorted(pairs):
        if (b, a) in pairs:
            if (a, b) <= (b, a):
                lines.append(f"contradictory {a} ~ {b} .")
        else:
            lines.append(f"contrary {a} of {b} .")
    return "\n".join(lines) + ("\n" if lines else "")
