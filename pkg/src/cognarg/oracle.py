"""Brute-force reference semantics.

Deliberately naive: enumerate every non-empty conflict-free subset of the
scheme set and apply the admissibility definition literally, quantifying
attackers over all arguments.  Used to cross-validate the engine's dialectic
search on small frameworks.
"""

from __future__ import annotations

import itertools

from .core import CognitiveState, CoreError, Framework, Literal, conflict_free
from .engine import Classification, QueryVerdict, _Ctx

DEFAULT_CAP = 14


class FrameworkTooLarge(CoreError):
    pass


def _check_cap(f: Framework, cap: int):
    if len(f.schemes) > cap:
        raise FrameworkTooLarge(f"{len(f.schemes)} schemes > cap {cap}")


def all_arguments(f: Framework, s: CognitiveState,
                  cap: int = DEFAULT_CAP) -> list[frozenset]:
    _check_cap(f, cap)
    ids = sorted(f.schemes)
    out = []
    for r in range(1, len(ids) + 1):
        for combo in itertools.combinations(ids, r):
            a = frozenset(combo)
            if conflict_free(a, f):
                out.append(a)
    return out


def oracle_admissible(a, f: Framework, s: CognitiveState,
                      cap: int = DEFAULT_CAP,
                      _ctx: "_Ctx | None" = None,
                      _args: list | None = None) -> bool:
    _check_cap(f, cap)
    a = frozenset(a)
    if not conflict_free(a, f):
        return False
    ctx = _ctx or _Ctx(f, s)
    args = _args if _args is not None else all_arguments(f, s, cap)
    for b in args:
        if ctx.attacks(b, a) and not ctx.defends(a, b):
            return False
    return True


def oracle_query(l: Literal, f: Framework, s: CognitiveState,
                 cap: int = DEFAULT_CAP) -> QueryVerdict:
    _check_cap(f, cap)
    ctx = _Ctx(f, s)
    args = all_arguments(f, s, cap)

    def credulous(lit: Literal) -> bool:
        for a in args:
            if lit not in ctx.supported(a):
                continue
            if oracle_admissible(a, f, s, cap, _ctx=ctx, _args=args):
                return True
        return False

    cp = credulous(l)
    cn = credulous(l.complement())
    if cp and not cn:
        cls = Classification.SKEPTICAL_YES
    elif cn and not cp:
        cls = Classification.SKEPTICAL_NO
    elif cp and cn:
        cls = Classification.CREDULOUS_BOTH
    else:
        cls = Classification.NO_SUPPORT
    return QueryVerdict(literal=l,
                        credulous_pos=cp,
                        credulous_neg=cn,
                        classification=cls,
                        witnesses=())
