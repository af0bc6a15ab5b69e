import random

import pytest
from hypothesis import given, settings, strategies as st

from cognarg.core import Atom, Literal, conflict_free, make_state
from cognarg.compiler import Mode, ReasonerProfile, compile_schemes
from cognarg.engine import (
    Classification,
    TreeStatus,
    attacks,
    defends,
    is_admissible,
    minimal_attackers,
    minimal_supports,
    prove,
    query,
    supports,
)
from cognarg import oracle
from helpers import (ASKS, BUY, E, L, MILK_KB, MONEY, NEED, SN, SU,
                     group_case, milk_case, random_case)

NL = L.complement()
NE_ = E.complement()


def test_supports_examples():
    f, s = group_case("I", SN, E)
    assert supports({"fact(e)", "suff_p(c1)"}, L, f, s)
    assert not supports({"suff_p(c1)"}, L, f, s)  # premise ungrounded
    fm, sm = milk_case({NEED})
    assert supports({"fact(need)", "suff_p(c_need)", "suff_p(c_asks)"}, BUY,
                    fm, sm)


def test_minimal_supports_group_i():
    f, s = group_case("I", SN, E)
    assert minimal_supports(L, f, s) == {
        frozenset({"fact(e)", "suff_p(c1)"}),
        frozenset({"hyp(l)"}),
    }


def test_minimal_supports_group_iii_not_l():
    f, s = group_case("III", SN, E)
    assert frozenset({"hyp(not o)", "necc_p(c3:o)"}) in \
        minimal_supports(NL, f, s)


def test_minimal_supports_empty_framework():
    s = make_state(set(), {Atom("a")})
    f = compile_schemes([], s, ReasonerProfile())
    assert minimal_supports(Literal.pos("b"), f, s) == set()


def test_attacks_examples():
    f, s = group_case("III", SN, E)
    a = {"hyp(not e)", "necc_p(c1:e)"}
    b = {"fact(e)", "suff_p(c1)"}
    assert attacks(a, b, f, s) and attacks(b, a, f, s)
    assert not attacks({"hyp(o)"}, {"hyp(o)"}, f, s)
    fe, se = group_case("I", SU, L, mode=Mode.EXPLANATORY, exo=True)
    assert attacks({"fact(l)", "suff_e(c1:e)"}, {"fact(l)", "exo_e(l)"}, fe,
                   se)


def test_defends_examples():
    f, s = group_case("III", SN, E)
    d = {"hyp(not o)", "necc_p(c3:o)"}
    root = {"fact(e)", "suff_p(c1)"}
    assert defends(d, root, f, s)
    assert not defends(root, d, f, s)  # needs hyp(o) merged in first
    fm, sm = milk_case({NEED})
    assert defends({"hyp(money)"},
                   {"hyp(not money)", "necc_p(c_money:money)"}, fm, sm)
    fm2, sm2 = milk_case({MONEY.complement()})
    assert not defends({"hyp(money)"}, {"fact(not money)"}, fm2, sm2)


def test_minimal_attackers_example():
    f, s = group_case("III", SN, E)
    got = minimal_attackers({"fact(e)", "suff_p(c1)"}, f, s)
    for expected in (
        {"hyp(not o)", "necc_p(c3:o)"},
        {"hyp(not e)", "necc_p(c1:e)"},
        {"hyp(not l)"},
        {"hyp(not e)"},
    ):
        assert frozenset(expected) in got


def test_minimal_attackers_trivial():
    s = make_state(set(), {Atom("x")})
    f = compile_schemes([], s, ReasonerProfile())
    assert minimal_attackers({"hyp(x)"}, f, s) == {frozenset({"hyp(not x)"})}


def test_is_admissible_examples():
    f, s = group_case("III", SN, E)
    assert is_admissible({"hyp(not o)", "necc_p(c3:o)"}, f, s)
    assert is_admissible({"fact(e)"}, f, s)
    f1, s1 = group_case("I", SN, E)
    assert not is_admissible({"hyp(not e)", "necc_p(c1:e)"}, f1, s1)


def test_prove_group_i():
    f, s = group_case("I", SN, E)
    t = prove(L, f, s)
    assert t.status == TreeStatus.ACCEPTABLE
    assert t.root == frozenset({"fact(e)", "suff_p(c1)"})
    t2 = prove(NL, f, s)
    assert t2.status == TreeStatus.EXHAUSTED


def test_prove_milk_witness():
    f, s = milk_case({NEED})
    t = prove(BUY, f, s)
    assert t.status == TreeStatus.ACCEPTABLE
    assert t.root == frozenset({"fact(need)", "suff_p(c_need)", "hyp(money)"})


def test_query_examples():
    f, s = group_case("I", SU, E)
    assert query(L, f, s).classification == Classification.SKEPTICAL_YES
    f3, s3 = group_case("III", SU, E)
    assert query(L, f3, s3).classification == Classification.CREDULOUS_BOTH
    sx = make_state(set(), {Atom("x")})
    fx = compile_schemes([], sx, ReasonerProfile())
    assert query(Literal.pos("y"), fx,
                 sx).classification == Classification.NO_SUPPORT


def test_non_monotonicity_witness():
    f1, s1 = group_case("I", SU, E)
    f3, s3 = group_case("III", SU, E)
    assert query(L, f1, s1).classification == Classification.SKEPTICAL_YES
    assert query(L, f3, s3).classification == Classification.CREDULOUS_BOTH


def test_tree_serialization():
    f, s = group_case("III", SU, E)
    v = query(L, f, s)
    assert v.classification == Classification.CREDULOUS_BOTH
    doc = v.to_json(f)
    assert doc["classification"] == "credulous_both"
    for tree in doc["witnesses"]:
        assert tree["status"] == "acceptable"
        assert sorted(tree["root"]["members"]) == tree["root"]["members"]
        for child in tree["children"]:
            assert child["edge"] in ("attack", "defense", "strong")
            assert child["attacker"]["members"]


def test_fast_mode_is_opt_in_and_unsound_in_general():
    # the strictly-stronger shortcut must not change the textbook cases
    f, s = group_case("I", SN, E)
    assert prove(L, f, s, fast=True).status == TreeStatus.ACCEPTABLE


# --- generative properties ---------------------------------------------------

seeds = st.integers(0, 10**6)


def _case(seed):
    return random_case(random.Random(seed))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_fact_dominance(seed):
    case = _case(seed)
    if case is None:
        return
    f, s, _ = case
    for fact in s.facts:
        if f"fact({fact.to_text()})" in f.schemes:
            assert query(fact, f,
                         s).classification == Classification.SKEPTICAL_YES


def test_hypothesis_symmetry():
    s = make_state(set(), {Atom("a")})
    f = compile_schemes([], s, ReasonerProfile())
    v = query(Literal.pos("a"), f, s)
    assert v.classification == Classification.CREDULOUS_BOTH


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_skeptical_implies_credulous_and_never_both(seed):
    case = _case(seed)
    if case is None:
        return
    f, s, atoms = case
    for atom in atoms:
        v = query(Literal(atom, True), f, s)
        w = query(Literal(atom, False), f, s)
        assert v.credulous_pos == w.credulous_neg
        assert not (v.classification == Classification.SKEPTICAL_YES
                    and w.classification == Classification.SKEPTICAL_YES)
        if v.classification == Classification.SKEPTICAL_YES:
            assert v.credulous_pos


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_witnesses_conflict_free_and_grounded(seed):
    case = _case(seed)
    if case is None:
        return
    f, s, atoms = case
    for atom in atoms:
        v = query(Literal(atom, True), f, s)
        for tree in v.witnesses:
            args = [tree.root] + [
                c.attacker for c in tree.children
            ] + [c.defense for c in tree.children if c.defense]
            for a in args:
                assert conflict_free(a, f)
            for m in tree.root:
                sch = f.schemes[m]
                if sch.kind.value == "fact":
                    assert sch.position in s.facts
                if sch.kind.value == "hyp":
                    assert sch.position.atom in s.awareness


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_minimal_attacker_sufficiency(seed):
    """Defending every minimal attacker implies defending every attacker."""
    case = _case(seed)
    if case is None:
        return
    f, s, _ = case
    args = oracle.all_arguments(f, s, cap=12)
    rng = random.Random(seed)
    for a in rng.sample(args, min(8, len(args))):
        assert is_admissible(a, f, s) == oracle.oracle_admissible(a, f, s,
                                                                  cap=12)
