"""Long-rule disjunctive sum, identity machinery and theorem templates.

Under the long rule the composite game ends only when the player to move
has no option in any component, so the sum recursion carries whole
components along: a move in G+H is a move in exactly one of them.
"""

from __future__ import annotations

from .core import (
    GameTerm,
    Score,
    game,
    identical,
    leaf,
    max_abs_score,
    negate,
)
from .score import Outcome, outcome_from_scores

__all__ = [
    "zero",
    "add",
    "is_numeric",
    "distinguishing_context",
    "outcome_template",
    "SumEvaluator",
    "final_scores_of_sum",
    "clear_sum_caches",
]


def zero() -> GameTerm:
    """The identity game {.|0|.}."""
    return leaf(0)


_add_cache: dict[tuple[GameTerm, GameTerm], GameTerm] = {}


def add(g: GameTerm, h: GameTerm) -> GameTerm:
    """The fully expanded long-rule disjunctive sum of g and h.

    Root scores add; each side's options are the moves in one component
    with the other carried along.  The result is a plain term, so every
    other operation applies to it uniformly.
    """
    key = (g, h)
    res = _add_cache.get(key)
    if res is None:
        res = game(
            [add(o, h) for o in g.left] + [add(g, o) for o in h.left],
            g.score + h.score,
            [add(o, h) for o in g.right] + [add(g, o) for o in h.right],
        )
        _add_cache[key] = res
        _add_cache[(h, g)] = res  # the expansion is symmetric
    return res


def is_numeric(g: GameTerm) -> bool:
    """True for {.|n|.}: the only invertible games under the long rule."""
    return not g.left and not g.right


def distinguishing_context(g: GameTerm) -> GameTerm:
    """A context X with outcome(g + X) != outcome(X), for any g not 0.

    Nonzero leaves are distinguished by the empty context.  If Left has a
    move, X = {.|1|b} works with b = -(M+1) for M the largest |score| in
    g: Left moving first on g+X must move in g, Right then cuts X to b,
    and from there every reachable score is negative, while X alone is a
    first-player win.  The Right-sided case is the mirror image.
    """
    if identical(g, zero()):
        raise ValueError("the zero game is indistinguishable from itself")
    if is_numeric(g):
        return zero()
    if g.left:
        bound = max_abs_score(g) + 1
        return game((), 1, (leaf(-bound),))
    return negate(distinguishing_context(negate(g)))


def outcome_template(
    a: Score, b: Score, c: Score, d: Score,
    e: Score, f: Score, g: Score, h: Score,
) -> tuple[GameTerm, GameTerm]:
    """The template pair realizing every (outcome, outcome, outcome) triple.

    Returns G = {{{d|c|e}|b|.}|a|.} and H = {.|f|{.|g|h}}.  Sweeping the
    eight scores over a small grid realizes all 125 combinations of
    outcome(G), outcome(H), outcome(G+H).
    """
    inner = game([leaf(d)], c, [leaf(e)])
    G = game([game([inner], b, [])], a, [])
    H = game([], f, [game([], g, [leaf(h)])])
    return G, H


class SumEvaluator:
    """Componentwise final scores of pairwise sums, without expansion.

    Evaluates SL/SR of g+h by recursing on component pairs, so bounded
    searches over many contexts never materialize sum terms.  The memo is
    keyed on term identity; results equal those of evaluating add(g, h).
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[GameTerm, GameTerm], tuple[Score, Score]] = {}

    def final_scores(self, g: GameTerm, h: GameTerm) -> tuple[Score, Score]:
        memo = self._memo
        key = (g, h)
        val = memo.get(key)
        if val is None:
            fs = self.final_scores
            if g.left or h.left:
                sl = max(
                    [fs(o, h)[1] for o in g.left]
                    + [fs(g, o)[1] for o in h.left]
                )
            else:
                sl = g.score + h.score
            if g.right or h.right:
                sr = min(
                    [fs(o, h)[0] for o in g.right]
                    + [fs(g, o)[0] for o in h.right]
                )
            else:
                sr = g.score + h.score
            val = (sl, sr)
            memo[key] = val
            memo[(h, g)] = val
        return val

    def outcome(self, g: GameTerm, h: GameTerm) -> Outcome:
        return outcome_from_scores(*self.final_scores(g, h))


def final_scores_of_sum(g: GameTerm, h: GameTerm) -> tuple[Score, Score]:
    """One-shot componentwise (SL, SR) of g+h with a throwaway memo."""
    return SumEvaluator().final_scores(g, h)


def clear_sum_caches() -> None:
    _add_cache.clear()
