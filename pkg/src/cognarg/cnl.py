"""Controlled-natural-language front-end.

Grammar (one statement per line, case-insensitive, `#` comments):

    whenever <phrase> [and <phrase> ...] then <phrase>   sufficient conditional
    when <phrase> then <phrase>                          necessary conditional
    fact: [not] <phrase>
    aware: <phrase>
    ? [not] <phrase>

Phrases are canonicalized to underscore-joined atoms with articles stripped.
Negation is a standalone `not` inside the phrase.  A When statement expresses
the link between the negation of the condition and the negation of the
consequent, so `when not X then not Y` is stored as the positively oriented
conditional X => Y with necessary-only interpretation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Atom, Conditional, CoreError, Interpretation, Literal
from .engine import Classification, DialecticTree, QueryVerdict

ARTICLES = {"a", "an", "the"}


class ParseError(CoreError):

    def __init__(self, message: str, position: int = 0, hint: str = ""):
        super().__init__(message)
        self.position = position
        self.hint = hint

    def __str__(self):
        base = super().__str__()
        parts = [f"{base} (at position {self.position}"]
        if self.hint:
            parts.append(f"; expected {self.hint}")
        return "".join(parts) + ")"


class EmptyPhrase(ParseError):
    pass


@dataclass(frozen=True)
class WheneverRule:
    condition: tuple[Literal, ...]
    consequent: Literal


@dataclass(frozen=True)
class WhenRule:
    condition: Literal
    consequent: Literal


@dataclass(frozen=True)
class FactAssertion:
    literal: Literal


@dataclass(frozen=True)
class AwarenessDecl:
    atom: Atom


@dataclass(frozen=True)
class Query:
    literal: Literal


Statement = WheneverRule | WhenRule | FactAssertion | AwarenessDecl | Query


def canonicalize_phrase(text: str) -> Atom:
    words = [
        w for w in re.split(r"\s+", text.strip().lower())
        if w and w not in ARTICLES
    ]
    if not words:
        raise EmptyPhrase("empty phrase", hint="a phrase")
    return Atom("_".join(words))


def parse_phrase(text: str, position: int = 0) -> Literal:
    """Phrase with at most one standalone `not` marking negation."""
    words = [w for w in re.split(r"\s+", text.strip().lower()) if w]
    negative = "not" in words
    if words.count("not") > 1:
        raise ParseError("multiple negations in phrase", position,
                         "a single `not`")
    words = [w for w in words if w != "not"]
    atom = canonicalize_phrase(" ".join(words)) if words else None
    if atom is None:
        raise EmptyPhrase("empty phrase", position, "a phrase")
    return Literal(atom, not negative)


_WHENEVER = re.compile(r"^whenever\s+(.+?)\s+then\s+(.+)$", re.I)
_WHEN = re.compile(r"^when\s+(.+?)\s+then\s+(.+)$", re.I)
_FACT = re.compile(r"^fact\s*:\s*(.+)$", re.I)
_AWARE = re.compile(r"^aware\s*:\s*(.+)$", re.I)
_QUERY = re.compile(r"^\?\s*(.+)$")


def parse_statement(text: str, allow_conjunction: bool = True) -> Statement:
    line = text.strip()
    if not line:
        raise EmptyPhrase("empty statement", 0, "a statement")
    m = _WHENEVER.match(line)
    if m:
        cond_text, consq_text = m.group(1), m.group(2)
        if allow_conjunction:
            parts = re.split(r"\s+and\s+", cond_text, flags=re.I)
        else:
            parts = [cond_text]
        condition = tuple(
            parse_phrase(p, line.index(p)) for p in parts)
        consequent = parse_phrase(consq_text, line.rindex(consq_text))
        if consequent.atom in {c.atom for c in condition}:
            raise ParseError("consequent appears in the condition",
                             line.rindex(consq_text), "a distinct consequent")
        return WheneverRule(condition, consequent)
    m = _WHEN.match(line)
    if m:
        # normalize to positive orientation: the rule links the negated
        # condition to the negated consequent
        condition = parse_phrase(m.group(1), line.index(m.group(1)))
        consequent = parse_phrase(m.group(2), line.rindex(m.group(2)))
        if consequent.atom == condition.atom:
            raise ParseError("consequent appears in the condition",
                             line.rindex(m.group(2)), "a distinct consequent")
        return WhenRule(condition.complement(), consequent.complement())
    m = _FACT.match(line)
    if m:
        return FactAssertion(parse_phrase(m.group(1), line.index(":") + 1))
    m = _AWARE.match(line)
    if m:
        lit = parse_phrase(m.group(1), line.index(":") + 1)
        if not lit.positive:
            raise ParseError("awareness declares an atom, not a literal",
                             line.index(":") + 1, "a positive phrase")
        return AwarenessDecl(lit.atom)
    m = _QUERY.match(line)
    if m:
        return Query(parse_phrase(m.group(1), 1))
    raise ParseError(
        f"unrecognized statement: {line!r}", 0,
        "`whenever`, `when`, `fact:`, `aware:` or `?`")


def parse_statements(text: str,
                     allow_conjunction: bool = True) -> list[Statement]:
    """Statement-file format: one statement per line, `#` comments, UTF-8."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_statement(line, allow_conjunction))
        except ParseError as ex:
            raise ParseError(f"line {lineno}: {ex.args[0]}", ex.position,
                             ex.hint) from None
    return out


def statements_to_conditionals(statements) -> list[Conditional]:
    kb = []
    for st in statements:
        if isinstance(st, WheneverRule):
            kb.append(
                Conditional(f"r{len(kb) + 1}", st.condition, st.consequent,
                            Interpretation.SUFFICIENT))
        elif isinstance(st, WhenRule):
            kb.append(
                Conditional(f"r{len(kb) + 1}", (st.condition,), st.consequent,
                            Interpretation.NECESSARY))
    return kb


# --- explanation rendering ---------------------------------------------------

_ANSWERS = {
    Classification.SKEPTICAL_YES: "Yes",
    Classification.SKEPTICAL_NO: "No",
    Classification.CREDULOUS_BOTH: "Maybe",
    Classification.NO_SUPPORT: "Unknown",
}


def _arg_text(members) -> str:
    return "{" + ", ".join(sorted(members)) + "}"


def _tree_paragraph(tree: DialecticTree) -> str:
    claim = tree.claim.to_text()
    parts = [f"{claim} is supported because {_arg_text(tree.root)}"]
    for child in tree.children:
        if child.defense is None:
            continue
        defender = ("itself" if child.defense == tree.root else
                    _arg_text(child.defense))
        parts.append(f"the counterargument {_arg_text(child.attacker)} "
                     f"is defended by {defender}")
    return "; ".join(parts) + "."


def render_explanation(v: QueryVerdict) -> str:
    lines = [_ANSWERS[v.classification]]
    for tree in v.witnesses:
        lines.append(_tree_paragraph(tree))
    return "\n".join(lines)
