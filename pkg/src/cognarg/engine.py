"""Argumentation semantics: support, attack, defense, admissibility, queries.

Arguments are conflict-free sets of scheme ids grounded in a cognitive state.
`prove` runs the dialectic process: pick a root argument supporting the claim,
find counterarguments, defend (by the root itself or by merging a defense into
the root), and repeat until no attacker is left undefended, backtracking over
roots and defense choices.  `query` classifies a literal by proving it and its
complement.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .core import (
    Argument,
    CognitiveState,
    Framework,
    Literal,
    Scheme,
    SchemeKind,
    conflict_free,
)

# deterministic tie-breaking: relatively strong schemes first
KIND_PRIORITY = {
    SchemeKind.FACT: 0,
    SchemeKind.NECC_P: 1,
    SchemeKind.SUFF_P: 2,
    SchemeKind.SEC_NECC_P: 3,
    SchemeKind.SEC_SUFF_P: 4,
    SchemeKind.NECC_E: 5,
    SchemeKind.SUFF_E: 6,
    SchemeKind.SEC_SUFF_E: 7,
    SchemeKind.EXO_E: 8,
    SchemeKind.HYP: 9,
}


class TreeStatus(str, enum.Enum):
    ACCEPTABLE = "acceptable"
    DEFEATED = "defeated"
    EXHAUSTED = "exhausted"


class Classification(str, enum.Enum):
    SKEPTICAL_YES = "skeptical_yes"
    SKEPTICAL_NO = "skeptical_no"
    CREDULOUS_BOTH = "credulous_both"
    NO_SUPPORT = "no_support"


@dataclass(frozen=True)
class TreeChild:
    attacker: Argument
    defense: Argument | None  # None: no defense found (Exhausted trees)
    strong: bool  # attacker cannot defend back against the defense


@dataclass(frozen=True)
class DialecticTree:
    claim: Literal
    root: Argument
    children: tuple[TreeChild, ...]
    status: TreeStatus

    def to_json(self, f: Framework) -> dict:
        def arg(a):
            return {"members": sorted(a)} if a is not None else None

        return {
            "claim": self.claim.to_text(),
            "status": self.status.value,
            "root": arg(self.root),
            "children": [{
                "attacker": arg(c.attacker),
                "defense": arg(c.defense),
                "edge": ("strong" if c.strong else
                         "defense") if c.defense else "attack",
            } for c in self.children],
        }


@dataclass(frozen=True)
class QueryVerdict:
    literal: Literal
    credulous_pos: bool
    credulous_neg: bool
    classification: Classification
    witnesses: tuple[DialecticTree, ...]

    def to_json(self, f: Framework) -> dict:
        return {
            "literal": self.literal.to_text(),
            "credulous_pos": self.credulous_pos,
            "credulous_neg": self.credulous_neg,
            "classification": self.classification.value,
            "witnesses": [w.to_json(f) for w in self.witnesses],
        }


def _applicable(s: Scheme, state: CognitiveState) -> bool:
    if s.kind == SchemeKind.FACT:
        return s.position in state.facts
    if s.kind == SchemeKind.HYP:
        return s.position.atom in state.awareness
    return True


class _Ctx:
    """Per-(framework, state) caches for the semantics."""

    def __init__(self, f: Framework, s: CognitiveState):
        self.f = f
        self.s = s
        self.usable = {
            sid: sch
            for sid, sch in f.schemes.items() if _applicable(sch, s)
        }
        self._closure: dict[frozenset, frozenset] = {}
        self._minsup: dict[Literal, tuple] = {}
        self._attackers: dict[frozenset, tuple] = {}

    # -- support ------------------------------------------------------------

    def supported(self, members: frozenset) -> frozenset[Literal]:
        cached = self._closure.get(members)
        if cached is not None:
            return cached
        schemes = [self.usable[m] for m in members if m in self.usable]
        lits: set[Literal] = set()
        changed = True
        while changed:
            changed = False
            for sch in schemes:
                if sch.position not in lits and sch.premises <= lits:
                    lits.add(sch.position)
                    changed = True
        out = frozenset(lits)
        self._closure[members] = out
        return out

    def _proofs(self, goal: Literal, members, stack: frozenset) -> set:
        """All derivation unions for goal from the given schemes (loop-free)."""
        if goal in stack:
            return set()
        stack = stack | {goal}
        out: set[frozenset] = set()
        for sid in members:
            sch = self.usable.get(sid)
            if sch is None or sch.position != goal:
                continue
            if not sch.premises:
                out.add(frozenset((sid,)))
                continue
            parts = [self._proofs(p, members, stack) for p in sch.premises]
            if any(not p for p in parts):
                continue
            for combo in itertools.product(*parts):
                out.add(frozenset((sid,)).union(*combo))
        return out

    @staticmethod
    def _minimize(sets) -> list[frozenset]:
        sets = sorted(sets, key=len)
        kept: list[frozenset] = []
        for c in sets:
            if not any(k <= c for k in kept):
                kept.append(c)
        return kept

    def minimal_supports(self, l: Literal) -> tuple[frozenset, ...]:
        cached = self._minsup.get(l)
        if cached is None:
            proofs = self._proofs(l, self.usable, frozenset())
            cached = tuple(m for m in self._minimize(proofs)
                           if conflict_free(m, self.f))
            self._minsup[l] = cached
        return cached

    def min_supports_within(self, l: Literal,
                            members: frozenset) -> list[frozenset]:
        return self._minimize(self._proofs(l, members, frozenset()))

    # -- attack / defense -----------------------------------------------------

    def _active(self, sid: str, supported: frozenset) -> bool:
        """A member scheme participates only once its premises are derived."""
        sch = self.usable.get(sid)
        return sch is not None and sch.premises <= supported

    def attacks(self, a: frozenset, b: frozenset) -> bool:
        sa, sb = self.supported(a), self.supported(b)
        if any(l.complement() in sb for l in sa):
            return True
        for x in a:
            if not self._active(x, sa):
                continue
            for y in b:
                if self.f.in_scheme_conflict(x, y) and self._active(y, sb):
                    return True
        return False

    def _witness_pairs(self, a: frozenset, b: frozenset):
        sa, sb = self.supported(a), self.supported(b)
        for l in sa:
            if l.complement() not in sb:
                continue
            for am in self.min_supports_within(l, a):
                for bm in self.min_supports_within(l.complement(), b):
                    yield am, bm
        for x in a:
            for y in b:
                if not self.f.in_scheme_conflict(x, y):
                    continue
                px = self.f.schemes[x].position
                py = self.f.schemes[y].position
                for am in self.min_supports_within(px, a):
                    if x not in am:
                        continue
                    for bm in self.min_supports_within(py, b):
                        if y in bm:
                            yield am, bm

    def _weakest_link(self, am: frozenset, bm: frozenset) -> bool:
        if any(self.f.is_stronger(bp, ap) for bp in bm for ap in am):
            return any(self.f.is_stronger(ap, bp) for ap in am for bp in bm)
        return True

    def defends(self, a: frozenset, b: frozenset) -> bool:
        return any(self._weakest_link(am, bm)
                   for am, bm in self._witness_pairs(a, b))

    def defense_witness(self, a: frozenset, b: frozenset):
        for am, bm in self._witness_pairs(a, b):
            if self._weakest_link(am, bm):
                return am
        return None

    def minimal_attackers(self, a: frozenset) -> tuple[frozenset, ...]:
        cached = self._attackers.get(a)
        if cached is not None:
            return cached
        out: set[frozenset] = set()
        sa = self.supported(a)
        for l in sa:
            out.update(self.minimal_supports(l.complement()))
        for x in a:
            if not self._active(x, sa):
                continue  # scheme conflicts only bite once x is grounded
            for pair in self.f.scheme_conflicts:
                if x not in pair:
                    continue
                (y,) = pair - {x} or {x}
                for m in self.minimal_supports(self.f.schemes[y].position):
                    if y in m:
                        out.add(m)
        cached = tuple(sorted(out, key=self.arg_key))
        self._attackers[a] = cached
        return cached

    def arg_key(self, a: frozenset):
        return tuple(
            sorted((KIND_PRIORITY[self.f.schemes[m].kind], m) for m in a))

    # -- admissibility / dialectic search -------------------------------------

    def is_admissible(self, a: frozenset) -> bool:
        if not conflict_free(a, self.f):
            return False
        return all(self.defends(a, b) for b in self.minimal_attackers(a))

    def _defense_candidates(self, b: frozenset) -> list[frozenset]:
        cands: set[frozenset] = set()
        for m in self.supported(b):
            cands.update(self.minimal_supports(m.complement()))
        for y in b:
            for pair in self.f.scheme_conflicts:
                if y not in pair:
                    continue
                (x,) = pair - {y} or {y}
                for m in self.minimal_supports(self.f.schemes[x].position):
                    if x in m:
                        cands.add(m)
        # simplest defenses first (keeps witnesses close to the textbook ones)
        return sorted(cands, key=lambda d: (len(d), self.arg_key(d)))

    def search(self, current: frozenset, failed: set[frozenset],
               fast: bool = False) -> frozenset | None:
        """Extend `current` with defenses until admissible; None if impossible.

        `fast` applies the literal "only strictly stronger attacks" shortcut;
        it can skip incomparable attackers and is therefore unsound in
        general — kept only as an opt-in.
        """
        if current in failed:
            return None
        undefended = [
            b for b in self.minimal_attackers(current)
            if not self.defends(current, b)
        ]
        if fast:
            undefended = [
                b for b in undefended
                if any(self.f.is_stronger(bp, ap) for bp in b
                       for ap in current)
            ]
        if not undefended:
            return current
        b = undefended[0]
        for d in self._defense_candidates(b):
            if d <= current:
                continue
            merged = current | d
            if not conflict_free(merged, self.f):
                continue
            if not self.defends(merged, b):
                continue
            res = self.search(merged, failed, fast)
            if res is not None:
                return res
        failed.add(current)
        return None


# --- public operations ------------------------------------------------------

def supports(arg, l: Literal, f: Framework, s: CognitiveState) -> bool:
    return l in _Ctx(f, s).supported(frozenset(arg))


def minimal_supports(l: Literal, f: Framework, s: CognitiveState):
    return set(_Ctx(f, s).minimal_supports(l))


def attacks(a, b, f: Framework, s: CognitiveState) -> bool:
    return _Ctx(f, s).attacks(frozenset(a), frozenset(b))


def defends(a, b, f: Framework, s: CognitiveState) -> bool:
    return _Ctx(f, s).defends(frozenset(a), frozenset(b))


def minimal_attackers(a, f: Framework, s: CognitiveState):
    return set(_Ctx(f, s).minimal_attackers(frozenset(a)))


def is_admissible(a, f: Framework, s: CognitiveState) -> bool:
    return _Ctx(f, s).is_admissible(frozenset(a))


def _tree_for(ctx: _Ctx, claim: Literal, seed: frozenset,
              final: frozenset) -> DialecticTree:
    children = []
    for b in ctx.minimal_attackers(final):
        d = ctx.defense_witness(final, b)
        strong = d is not None and not ctx.defends(b, d)
        if d is not None and d <= seed:
            d = seed  # the initial root defends by itself
        children.append(TreeChild(attacker=b, defense=d, strong=strong))
    return DialecticTree(claim=claim,
                         root=final,
                         children=tuple(children),
                         status=TreeStatus.ACCEPTABLE)


def prove(l: Literal, f: Framework, s: CognitiveState,
          ctx: _Ctx | None = None, fast: bool = False) -> DialecticTree:
    ctx = ctx or _Ctx(f, s)
    roots = sorted(ctx.minimal_supports(l), key=ctx.arg_key)
    failed: set[frozenset] = set()
    for root in roots:
        final = ctx.search(root, failed, fast)
        if final is not None:
            return _tree_for(ctx, l, root, final)
    # no acceptable argument: report what defeats the preferred root, if any
    children = ()
    root = frozenset()
    if roots:
        root = roots[0]
        blockers = tuple(
            TreeChild(attacker=b, defense=None, strong=False)
            for b in ctx.minimal_attackers(root)
            if not ctx.defends(root, b))
        children = blockers
    return DialecticTree(claim=l,
                         root=root,
                         children=children,
                         status=TreeStatus.EXHAUSTED)


def query(l: Literal, f: Framework, s: CognitiveState) -> QueryVerdict:
    ctx = _Ctx(f, s)
    tree_pos = prove(l, f, s, ctx)
    tree_neg = prove(l.complement(), f, s, ctx)
    cp = tree_pos.status == TreeStatus.ACCEPTABLE
    cn = tree_neg.status == TreeStatus.ACCEPTABLE
    if cp and not cn:
        cls = Classification.SKEPTICAL_YES
    elif cn and not cp:
        cls = Classification.SKEPTICAL_NO
    elif cp and cn:
        cls = Classification.CREDULOUS_BOTH
    else:
        cls = Classification.NO_SUPPORT
    witnesses = tuple(t for t in (tree_pos, tree_neg)
                      if t.status == TreeStatus.ACCEPTABLE)
    return QueryVerdict(literal=l,
                        credulous_pos=cp,
                        credulous_neg=cn,
                        classification=cls,
                        witnesses=witnesses)
