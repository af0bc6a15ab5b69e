"""Shared builders for the test suite."""

from __future__ import annotations

import random

from cognarg.core import (
    Atom,
    Conditional,
    Interpretation,
    Literal,
    make_state,
)
from cognarg.compiler import Mode, ReasonerProfile, compile_schemes
from cognarg.harness import build_group

E = Literal.pos("e")
L = Literal.pos("l")
T = Literal.pos("t")
O = Literal.pos("o")

NEED = Literal.pos("need")
ASKS = Literal.pos("asks")
BUY = Literal.pos("buy")
MONEY = Literal.pos("money")

SN = Interpretation.SUFFICIENT_AND_NECESSARY
SU = Interpretation.SUFFICIENT
NE = Interpretation.NECESSARY


def group_case(group, interp, given, mode=Mode.PREDICTIVE, exo=False):
    kb, awareness = build_group(group, interp)
    state = make_state({given}, awareness)
    profile = ReasonerProfile(mode=mode, allow_exogenous=exo)
    return compile_schemes(kb, state, profile), state


MILK_KB = [
    Conditional("c_need", (NEED,), BUY, SN),
    Conditional("c_asks", (ASKS,), BUY, SU),
    Conditional("c_money", (MONEY,), BUY, NE),
]
MILK_AWARENESS = frozenset(
    {NEED.atom, ASKS.atom, BUY.atom, MONEY.atom})


def milk_case(facts):
    state = make_state(facts, MILK_AWARENESS)
    return compile_schemes(MILK_KB, state, ReasonerProfile()), state


def random_case(rng: random.Random, max_schemes: int = 12):
    """Random kb/state/profile with <= 5 atoms and <= 4 conditionals.

    Returns (framework, state, atoms) or None when the compiled framework
    exceeds max_schemes (caller regenerates).
    """
    n_atoms = rng.randint(1, 5)
    atoms = [Atom(f"a{i}") for i in range(n_atoms)]
    kb = []
    for i in range(rng.randint(0, 4)):
        consequent = Literal(rng.choice(atoms), rng.random() < 0.8)
        pool = [a for a in atoms if a != consequent.atom]
        if not pool:
            continue
        picked = rng.sample(pool, rng.randint(1, min(2, len(pool))))
        condition = tuple(Literal(a, rng.random() < 0.8) for a in picked)
        interp = rng.choice(list(Interpretation))
        kb.append(Conditional(f"c{i}", condition, consequent, interp))
    facts = set()
    for a in atoms:
        r = rng.random()
        if r < 0.25:
            facts.add(Literal(a, True))
        elif r < 0.4:
            facts.add(Literal(a, False))
    state = make_state(facts, set(atoms))
    profile = ReasonerProfile(
        mode=rng.choice([Mode.PREDICTIVE, Mode.EXPLANATORY]),
        allow_exogenous=rng.random() < 0.5,
        auto_demote_necessity=rng.random() < 0.8,
    )
    framework = compile_schemes(kb, state, profile)
    if not framework.schemes or len(framework.schemes) > max_schemes:
        return None
    return framework, state, atoms
