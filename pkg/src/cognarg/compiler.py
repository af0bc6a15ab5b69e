"""Compile a conditional knowledge base + cognitive state into a Framework.

Scheme generation follows the canonical predictive/explanatory associations,
explanation-incompatibility conflicts, and the three strength rules:

  1. fact schemes are stronger than any other conflicting scheme;
  2. hypothesis schemes are weaker than any other conflicting scheme;
  3. necessary-condition (predictive) schemes are stronger than conflicting
     sufficient-condition (predictive) schemes.

Explanatory schemes are of equal strength among themselves.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field, replace

from .core import (
    Atom,
    CognitiveState,
    Conditional,
    CoreError,
    Framework,
    Interpretation,
    Literal,
    Scheme,
    SchemeKind,
    EXPLANATORY_KINDS,
    make_state,
    mint_exo_literal,
)


class CompileError(CoreError):
    pass


class UnknownAtom(CompileError):
    pass


class UnknownScheme(CompileError):
    pass


class Mode(str, enum.Enum):
    PREDICTIVE = "predictive"
    EXPLANATORY = "explanatory"


@dataclass(frozen=True)
class ReasonerProfile:
    mode: Mode = Mode.PREDICTIVE
    interpretation_overrides: tuple[tuple[str, Interpretation], ...] = ()
    allow_exogenous: bool = False
    auto_demote_necessity: bool = True

    def override_for(self, cid: str) -> Interpretation | None:
        for k, v in self.interpretation_overrides:
            if k == cid:
                return v
        return None


def demote_necessity(kb: list[Conditional]) -> list[Conditional]:
    """Sufficient-and-necessary conditionals lose necessity when an alternative
    sufficient condition heads the same consequent."""
    out = []
    for c in kb:
        if c.interpretation == Interpretation.SUFFICIENT_AND_NECESSARY:
            rivals = [
                d for d in kb
                if d.id != c.id and d.consequent == c.consequent
                and d.interpretation.is_sufficient
                and set(d.condition) != set(c.condition)
            ]
            if rivals:
                c = replace(c, interpretation=Interpretation.SUFFICIENT)
        out.append(c)
    return out


def _lkey(l: Literal) -> str:
    return l.to_text()


def compile_schemes(kb: list[Conditional], state: CognitiveState,
                    profile: ReasonerProfile) -> Framework:
    kb = [
        replace(c, interpretation=profile.override_for(c.id) or
                c.interpretation) for c in kb
    ]
    for c in kb:
        missing = c.atoms() - state.awareness
        if missing:
            raise UnknownAtom(
                f"conditional {c.id} mentions unaware atoms: "
                f"{', '.join(sorted(a.name for a in missing))}")
    if profile.auto_demote_necessity:
        kb = demote_necessity(kb)

    schemes: dict[str, Scheme] = {}

    def add(sid: str, kind: SchemeKind, premises, position: Literal,
            source: str):
        schemes[sid] = Scheme(sid, kind, frozenset(premises), position, source)

    for fct in sorted(state.facts):
        add(f"fact({_lkey(fct)})", SchemeKind.FACT, (), fct, "state")
    for atom in sorted(state.awareness):
        # a fact subsumes the same-signed hypothesis; only the open signs
        # remain hypothesizable
        for lit in (Literal(atom, True), Literal(atom, False)):
            if lit not in state.facts:
                add(f"hyp({_lkey(lit)})", SchemeKind.HYP, (), lit, "state")

    explanatory = profile.mode == Mode.EXPLANATORY
    for c in kb:
        q = c.consequent
        nq = q.complement()
        if not explanatory:
            if c.interpretation.is_sufficient:
                add(f"suff_p({c.id})", SchemeKind.SUFF_P, c.condition, q, c.id)
                for k in c.condition:
                    add(f"sec_suff_p({c.id}:{_lkey(k)})",
                        SchemeKind.SEC_SUFF_P, (nq,), k.complement(), c.id)
            if c.interpretation.is_necessary:
                for k in c.condition:
                    add(f"necc_p({c.id}:{_lkey(k)})", SchemeKind.NECC_P,
                        (k.complement(),), nq, c.id)
                    add(f"sec_necc_p({c.id}:{_lkey(k)})",
                        SchemeKind.SEC_NECC_P, (q,), k, c.id)
        else:
            if c.interpretation.is_sufficient:
                for k in c.condition:
                    add(f"suff_e({c.id}:{_lkey(k)})", SchemeKind.SUFF_E, (q,),
                        k, c.id)
                    add(f"sec_suff_e({c.id}:{_lkey(k)})",
                        SchemeKind.SEC_SUFF_E, (nq,), k.complement(), c.id)
            if c.interpretation.is_necessary:
                for k in c.condition:
                    add(f"necc_e({c.id}:{_lkey(k)})", SchemeKind.NECC_E,
                        (nq,), k.complement(), c.id)
    if explanatory and profile.allow_exogenous:
        for q in sorted({c.consequent for c in kb}):
            for obs in (q, q.complement()):
                add(f"exo_e({_lkey(obs)})", SchemeKind.EXO_E, (obs,),
                    mint_exo_literal(obs), "exo")

    conflicts = _explanation_conflicts(schemes)
    stronger = _strength(schemes, conflicts)
    return Framework(schemes, conflicts, stronger)


def _explanation_conflicts(
        schemes: dict[str, Scheme]) -> frozenset[frozenset[str]]:
    """Incompatibility of explanations sharing one observation (the premise)."""
    pairs = set()
    expl = [s for s in schemes.values() if s.kind in EXPLANATORY_KINDS]
    for a, b in itertools.combinations(expl, 2):
        if a.premises != b.premises:
            continue
        kinds = {a.kind, b.kind}
        if SchemeKind.EXO_E in kinds:
            pairs.add(frozenset((a.id, b.id)))
        elif kinds == {SchemeKind.SUFF_E}:
            pairs.add(frozenset((a.id, b.id)))
        elif kinds == {SchemeKind.NECC_E} or \
                kinds == {SchemeKind.NECC_E, SchemeKind.SEC_SUFF_E}:
            pairs.add(frozenset((a.id, b.id)))
        # sec_suff_e explanations are mutually compatible
    return frozenset(pairs)


def _strength(schemes: dict[str, Scheme],
              conflicts: frozenset[frozenset[str]]) -> frozenset[tuple[str,
                                                                       str]]:
    def conflicting(a: Scheme, b: Scheme) -> bool:
        return a.position == b.position.complement() or \
            frozenset((a.id, b.id)) in conflicts

    edges = set()
    for a, b in itertools.permutations(schemes.values(), 2):
        if not conflicting(a, b):
            continue
        if a.kind == SchemeKind.FACT and b.kind != SchemeKind.FACT:
            edges.add((a.id, b.id))
        elif b.kind == SchemeKind.HYP and a.kind != SchemeKind.HYP:
            edges.add((a.id, b.id))
        elif a.kind == SchemeKind.NECC_P and b.kind == SchemeKind.SUFF_P:
            edges.add((a.id, b.id))
    return frozenset(edges)


def stronger_than(f: Framework, a: str, b: str) -> bool:
    if a not in f.schemes or b not in f.schemes:
        raise UnknownScheme(f"{a if a not in f.schemes else b}")
    return (a, b) in f.stronger


# --- knowledge-base persistence -------------------------------------------

def kb_to_json(kb: list[Conditional], state: CognitiveState,
               profile: ReasonerProfile) -> dict:
    atoms = set()
    for c in kb:
        atoms |= c.atoms()
    atoms |= state.awareness
    return {
        "v": 1,
        "atoms": sorted(a.name for a in atoms),
        "conditionals": [{
            "id": c.id,
            "condition": [l.to_text() for l in c.condition],
            "consequent": c.consequent.to_text(),
            "interpretation": c.interpretation.value,
        } for c in kb],
        "state": {
            "facts": sorted(l.to_text() for l in state.facts),
            "awareness": sorted(a.name for a in state.awareness),
        },
        "profile": {
            "mode": profile.mode.value,
            "allow_exogenous": profile.allow_exogenous,
            "auto_demote_necessity": profile.auto_demote_necessity,
            "overrides": {
                k: v.value
                for k, v in profile.interpretation_overrides
            },
        },
    }


def kb_from_json(doc: dict) -> tuple[list[Conditional], CognitiveState,
                                     ReasonerProfile]:
    if doc.get("v") != 1:
        raise CompileError(f"unsupported kb format version {doc.get('v')!r}")
    kb = [
        Conditional(
            id=c["id"],
            condition=tuple(Literal.from_text(l) for l in c["condition"]),
            consequent=Literal.from_text(c["consequent"]),
            interpretation=Interpretation(c["interpretation"]),
        ) for c in doc["conditionals"]
    ]
    state = make_state(
        facts={Literal.from_text(l) for l in doc["state"]["facts"]},
        awareness={Atom(a) for a in doc["state"]["awareness"]},
    )
    p = doc["profile"]
    profile = ReasonerProfile(
        mode=Mode(p["mode"]),
        allow_exogenous=p["allow_exogenous"],
        auto_demote_necessity=p["auto_demote_necessity"],
        interpretation_overrides=tuple(
            sorted((k, Interpretation(v)) for k, v in p["overrides"].items())),
    )
    return kb, state, profile
