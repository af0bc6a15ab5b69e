"""Propositional language, cognitive states, schemes, frameworks, arguments.

Shared vocabulary for the compiler and the semantics engine.  All types are
immutable values; construct once, share freely.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

EXO_PREFIX = "exo::"

_NAME_RE = re.compile(r"^[a-z0-9_:+\-]+$")


class CoreError(Exception):
    pass


class InconsistentFacts(CoreError):
    pass


class NestedExo(CoreError):
    pass


class ExoFact(CoreError):
    """Exogenous propositions are never observed, so never facts."""


def normalize_name(name: str) -> str:
    return re.sub(r"\s+", " ", name.strip()).lower()


@dataclass(frozen=True, order=True)
class Atom:
    name: str

    def __post_init__(self):
        if not self.name:
            raise CoreError("empty atom name")
        object.__setattr__(self, "name", normalize_name(self.name))

    @property
    def is_exo(self) -> bool:
        return self.name.startswith(EXO_PREFIX)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Literal:
    atom: Atom
    positive: bool = True

    @staticmethod
    def pos(name: str) -> "Literal":
        return Literal(Atom(name), True)

    @staticmethod
    def neg(name: str) -> "Literal":
        return Literal(Atom(name), False)

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    @property
    def key(self) -> str:
        return self.atom.name + ("+" if self.positive else "-")

    def to_text(self) -> str:
        return self.atom.name if self.positive else "not " + self.atom.name

    @staticmethod
    def from_text(text: str) -> "Literal":
        text = normalize_name(text)
        if text.startswith("not "):
            return Literal(Atom(text[4:]), False)
        return Literal(Atom(text), True)

    def __str__(self) -> str:
        return self.to_text()


def complement(l: Literal) -> Literal:
    return l.complement()


def mint_exo_literal(l: Literal) -> Literal:
    """Mint the reserved exogenous-explanation literal for an observation."""
    if l.atom.is_exo:
        raise NestedExo(f"cannot mint exo atom for {l}")
    return Literal(Atom(EXO_PREFIX + l.key), True)


class Interpretation(str, enum.Enum):
    SUFFICIENT = "sufficient"
    NECESSARY = "necessary"
    SUFFICIENT_AND_NECESSARY = "sufficient_and_necessary"

    @property
    def is_sufficient(self) -> bool:
        return self in (Interpretation.SUFFICIENT,
                        Interpretation.SUFFICIENT_AND_NECESSARY)

    @property
    def is_necessary(self) -> bool:
        return self in (Interpretation.NECESSARY,
                        Interpretation.SUFFICIENT_AND_NECESSARY)


@dataclass(frozen=True)
class Conditional:
    id: str
    condition: tuple[Literal, ...]
    consequent: Literal
    interpretation: Interpretation

    def __post_init__(self):
        if not self.condition:
            raise CoreError(f"conditional {self.id}: empty condition")
        if self.consequent.atom in {c.atom for c in self.condition}:
            raise CoreError(
                f"conditional {self.id}: consequent atom in condition")

    def atoms(self) -> set[Atom]:
        return {c.atom for c in self.condition} | {self.consequent.atom}


@dataclass(frozen=True)
class CognitiveState:
    facts: frozenset[Literal]
    awareness: frozenset[Atom]


def make_state(facts, awareness=()) -> CognitiveState:
    """Build a cognitive state; awareness is auto-closed over fact atoms."""
    facts = frozenset(facts)
    for f in facts:
        if f.complement() in facts:
            raise InconsistentFacts(f"{f} and {f.complement()} both given")
        if f.atom.is_exo:
            raise ExoFact(f"fact on exogenous atom {f.atom}")
    awareness = frozenset(awareness) | {f.atom for f in facts}
    return CognitiveState(facts, awareness)


class SchemeKind(str, enum.Enum):
    FACT = "fact"
    HYP = "hyp"
    SUFF_P = "suff_p"
    NECC_P = "necc_p"
    SUFF_E = "suff_e"
    NECC_E = "necc_e"
    SEC_SUFF_P = "sec_suff_p"
    SEC_NECC_P = "sec_necc_p"
    SEC_SUFF_E = "sec_suff_e"
    EXO_E = "exo_e"


EXPLANATORY_KINDS = frozenset({
    SchemeKind.SUFF_E, SchemeKind.NECC_E, SchemeKind.SEC_SUFF_E,
    SchemeKind.EXO_E,
})


@dataclass(frozen=True)
class Scheme:
    id: str
    kind: SchemeKind
    premises: frozenset[Literal]
    position: Literal
    source: str  # conditional id | "state" | "exo"

    def __post_init__(self):
        if self.kind in (SchemeKind.FACT, SchemeKind.HYP) and self.premises:
            raise CoreError(f"{self.kind} scheme with premises")


@dataclass(frozen=True)
class Framework:
    schemes: dict[str, Scheme]
    scheme_conflicts: frozenset[frozenset[str]]  # unordered id pairs
    stronger: frozenset[tuple[str, str]]  # ordered id pairs

    def scheme_ids(self) -> list[str]:
        return sorted(self.schemes)

    def in_scheme_conflict(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.scheme_conflicts

    def conflicting(self, a: str, b: str) -> bool:
        """Schemes conflict on opposing positions or by explicit declaration."""
        sa, sb = self.schemes[a], self.schemes[b]
        return sa.position == sb.position.complement() or \
            self.in_scheme_conflict(a, b)

    def is_stronger(self, a: str, b: str) -> bool:
        return (a, b) in self.stronger


Argument = frozenset  # of scheme ids


def conflict_free(members, f: Framework) -> bool:
    """No two members take complementary positions or conflicting schemes.

    Every literal supported by an argument is some member's position, so the
    position check also rules out derived complementary support.
    """
    members = list(members)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if f.conflicting(a, b):
                return False
    return True
