"""Suppression-task battery and cohort simulation.

The golden grid pins the expected verdicts: for each given fact,
group, reasoning mode, interpretation of the essay conditional, and (in
explanatory mode) exogenous-explanation flag, the expected classification of
the question literal.  Combinations that make no cognitive sense (suppressed
interpretations, explanatory mode without an observed consequent) are simply
not part of the grid.
Empirical percentages (Byrne 1989 / Dieussaert 2000) are carried for
reporting only; acceptance is classification-level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    Atom,
    Conditional,
    CognitiveState,
    CoreError,
    Interpretation,
    Literal,
    make_state,
)
from .compiler import Mode, ReasonerProfile, compile_schemes
from .engine import Classification, QueryVerdict, query

E = Literal.pos("e")
L = Literal.pos("l")
T = Literal.pos("t")
O = Literal.pos("o")

SN = Interpretation.SUFFICIENT_AND_NECESSARY
SU = Interpretation.SUFFICIENT


class IncompatibleProfile(CoreError):
    pass


def build_group(g: str,
                essay_interpretation: Interpretation = SU
                ) -> tuple[list[Conditional], frozenset[Atom]]:
    c1 = Conditional("c1", (E,), L, essay_interpretation)
    if g == "I":
        return [c1], frozenset({E.atom, L.atom})
    if g == "II":
        c2 = Conditional("c2", (T,), L, Interpretation.SUFFICIENT)
        return [c1, c2], frozenset({E.atom, L.atom, T.atom})
    if g == "III":
        c3 = Conditional("c3", (O,), L, Interpretation.NECESSARY)
        return [c1, c3], frozenset({E.atom, L.atom, O.atom})
    raise ValueError(f"unknown group {g!r}")


@dataclass(frozen=True)
class CaseSpec:
    group: str
    given: Literal
    question: Literal
    profile: ReasonerProfile
    essay_interpretation: Interpretation = SU


def run_case(c: CaseSpec) -> QueryVerdict:
    if c.profile.mode == Mode.EXPLANATORY and c.given.atom != L.atom:
        raise IncompatibleProfile(
            "explanatory mode only applies when the given fact is the "
            "consequent")
    kb, awareness = build_group(c.group, c.essay_interpretation)
    state = make_state({c.given}, awareness)
    f = compile_schemes(kb, state, c.profile)
    return query(c.question, f, state)


# (given, group, mode, essay interpretation, allow_exogenous) -> expected
# classification of the question literal (l for e-rows, e for l-rows).
# Several explanatory cells are skeptical without an exogenous explanation
# and credulous-both with one (marked below); every cell is cross-checked
# against the brute-force oracle.
P, X = Mode.PREDICTIVE, Mode.EXPLANATORY
YES = Classification.SKEPTICAL_YES
NO = Classification.SKEPTICAL_NO
BOTH = Classification.CREDULOUS_BOTH

GOLDEN_GRID: list[tuple[Literal, str, Mode, Interpretation, bool,
                        Classification]] = [
    # predictive, given e, question l
    (E, "I", P, SN, False, YES),
    (E, "I", P, SU, False, YES),
    (E, "II", P, SU, False, YES),
    (E, "III", P, SN, False, BOTH),
    (E, "III", P, SU, False, BOTH),
    # predictive, given not e, question l
    (E.complement(), "I", P, SN, False, NO),
    (E.complement(), "I", P, SU, False, BOTH),
    (E.complement(), "II", P, SU, False, BOTH),
    (E.complement(), "III", P, SN, False, NO),
    (E.complement(), "III", P, SU, False, BOTH),
    # predictive, given l, question e
    (L, "I", P, SN, False, YES),
    (L, "I", P, SU, False, BOTH),
    (L, "II", P, SU, False, BOTH),
    (L, "III", P, SN, False, YES),
    (L, "III", P, SU, False, BOTH),
    # predictive, given not l, question e
    (L.complement(), "I", P, SN, False, NO),
    (L.complement(), "I", P, SU, False, NO),
    (L.complement(), "II", P, SU, False, NO),
    (L.complement(), "III", P, SN, False, NO),
    (L.complement(), "III", P, SU, False, NO),
    # explanatory, given l, question e
    (L, "I", X, SN, False, YES),   # exo-sensitive
    (L, "I", X, SN, True, BOTH),
    (L, "I", X, SU, False, YES),
    (L, "I", X, SU, True, BOTH),
    (L, "II", X, SU, False, BOTH),  # alternative explanation t
    (L, "II", X, SU, True, BOTH),
    (L, "III", X, SN, False, YES),  # exo-sensitive
    (L, "III", X, SN, True, BOTH),
    (L, "III", X, SU, False, YES),
    (L, "III", X, SU, True, BOTH),
    # explanatory, given not l, question e
    (L.complement(), "I", X, SN, False, NO),   # exo-sensitive
    (L.complement(), "I", X, SN, True, BOTH),
    (L.complement(), "I", X, SU, False, NO),   # exo-sensitive
    (L.complement(), "I", X, SU, True, BOTH),
    (L.complement(), "II", X, SU, False, NO),  # exo-sensitive
    (L.complement(), "II", X, SU, True, BOTH),
    (L.complement(), "III", X, SN, False, BOTH),  # necessary o explains not l
    (L.complement(), "III", X, SN, True, BOTH),
    (L.complement(), "III", X, SU, False, BOTH),
    (L.complement(), "III", X, SU, True, BOTH),
]

# empirical majorities per (given, group): (answer, byrne %, dieussaert %)
EMPIRICAL = {
    ("e", "I"): ("l", 96, 88),
    ("e", "II"): ("l", 96, 93),
    ("e", "III"): ("l", 38, 60),
    ("not e", "I"): ("not l", 46, 49),
    ("not e", "II"): ("not l", 4, 22),
    ("not e", "III"): ("not l", 63, 49),
    ("l", "I"): ("e", 71, 53),
    ("l", "II"): ("e", 13, 16),
    ("l", "III"): ("e", 54, 55),
    ("not l", "I"): ("not e", 92, 69),
    ("not l", "II"): ("not e", 96, 69),
    ("not l", "III"): ("not e", 33, 44),
}


def _question_for(given: Literal) -> Literal:
    return L if given.atom == E.atom else E


def run_battery() -> list[dict]:
    rows = []
    for given, group, mode, interp, exo, expected in GOLDEN_GRID:
        profile = ReasonerProfile(mode=mode, allow_exogenous=exo)
        case = CaseSpec(group=group,
                        given=given,
                        question=_question_for(given),
                        profile=profile,
                        essay_interpretation=interp)
        verdict = run_case(case)
        emp = EMPIRICAL[(given.to_text(), group)]
        rows.append({
            "given": given.to_text(),
            "group": group,
            "mode": mode.value,
            "interpretation": interp.value,
            "allow_exogenous": exo,
            "question": case.question.to_text(),
            "expected": expected.value,
            "actual": verdict.classification.value,
            "pass": verdict.classification == expected,
            "empirical": {
                "answer": emp[0],
                "byrne_pct": emp[1],
                "dieussaert_pct": emp[2]
            },
        })
    return rows


@dataclass(frozen=True)
class CohortPriors:
    p_necessary_interpretation: float
    p_explanatory_mode_given_consequent_fact: float
    p_allow_exogenous: float
    sample_count: int

    def __post_init__(self):
        for p in (self.p_necessary_interpretation,
                  self.p_explanatory_mode_given_consequent_fact,
                  self.p_allow_exogenous):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"probability {p} out of range")
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")


ANSWER = {
    Classification.SKEPTICAL_YES: "Yes",
    Classification.SKEPTICAL_NO: "No",
    Classification.CREDULOUS_BOTH: "Maybe",
    Classification.NO_SUPPORT: "Maybe",
}


def simulate_cohort(priors: CohortPriors, group: str, given: Literal,
                    question: Literal, seed: int = 0) -> dict[str, float]:
    rng = random.Random(seed)
    counts = {"Yes": 0, "No": 0, "Maybe": 0}
    consequent_fact = given.atom == L.atom
    cache: dict[tuple, Classification] = {}
    for _ in range(priors.sample_count):
        interp = SN if rng.random() < priors.p_necessary_interpretation else SU
        explanatory = consequent_fact and rng.random() < \
            priors.p_explanatory_mode_given_consequent_fact
        exo = rng.random() < priors.p_allow_exogenous
        key = (interp, explanatory, exo)
        cls = cache.get(key)
        if cls is None:
            profile = ReasonerProfile(
                mode=Mode.EXPLANATORY if explanatory else Mode.PREDICTIVE,
                allow_exogenous=exo)
            cls = run_case(
                CaseSpec(group=group,
                         given=given,
                         question=question,
                         profile=profile,
                         essay_interpretation=interp)).classification
            cache[key] = cls
        counts[ANSWER[cls]] += 1
    return {k: v / priors.sample_count for k, v in counts.items()}
