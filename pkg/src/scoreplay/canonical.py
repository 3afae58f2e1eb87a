"""Domination and reversibility reductions, and canonical forms.

Both reductions are licensed by comparisons (>= / <=) that no bounded
tool can fully decide, so reduction runs in one of two modes:

* ``Mode.SOUND`` - only Proved comparisons trigger a reduction; every
  step then preserves equality outright.
* ``Mode.CONJECTURAL`` - comparisons the bounded search fails to refute
  also trigger; traces are flagged so results are never mistaken for
  proven ones.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional

from .core import GameTerm, NodePath, Side, game
from .order import (
    UniverseSpec,
    Unrefuted,
    Verdict,
    _sound_ge,
    _sound_le,
    greater_equal,
    less_equal,
)
from .sums import SumEvaluator

__all__ = [
    "Mode",
    "ReductionKind",
    "ReductionStep",
    "ReductionTrace",
    "dominated_options",
    "reversible_options",
    "reduce_step",
    "canonicalize",
    "is_canonical",
]


class Mode(Enum):
    SOUND = "sound"
    CONJECTURAL = "conjectural"


class ReductionKind(Enum):
    DOMINATION = "domination"
    REVERSIBILITY = "reversibility"


@dataclass(frozen=True)
class ReductionStep:
    """One reduction: what was removed or bypassed, and on whose authority.

    For a domination, ``removed`` is the dominated option and ``witness``
    the dominating sibling.  For a reversibility, ``removed`` is the
    reversible option and ``witness`` the opponent's response it reverses
    through (whose replacement options take its place).  ``path``
    addresses the vertex in the term as it stood when the step applied.
    """

    kind: ReductionKind
    side: Side
    removed: GameTerm
    witness: GameTerm
    justification: Verdict
    path: NodePath = ()

    @property
    def conjectural(self) -> bool:
        return isinstance(self.justification, Unrefuted)


@dataclass
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)

    @property
    def conjectural(self) -> bool:
        return any(s.conjectural for s in self.steps)


def _dom_verdict(
    better: GameTerm,
    worse: GameTerm,
    side: Side,
    spec: UniverseSpec,
    mode: Mode,
    ev: SumEvaluator,
) -> Optional[Verdict]:
    # Left keeps larger options, Right keeps smaller ones.
    if side is Side.LEFT:
        sound = _sound_ge(better, worse)
    else:
        sound = _sound_le(better, worse)
    if sound is not None:
        return sound
    if mode is Mode.SOUND:
        return None
    if side is Side.LEFT:
        v = greater_equal(better, worse, spec, ev)
    else:
        v = less_equal(better, worse, spec, ev)
    return v if isinstance(v, Unrefuted) else None


def dominated_options(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode = Mode.SOUND,
    evaluator: Optional[SumEvaluator] = None,
) -> list[tuple[Side, GameTerm, GameTerm, Verdict]]:
    """All (side, dominated, dominating, verdict) at the root of g.

    A Left option is dominated by a sibling >= it; a Right option by a
    sibling <= it.  Mutually equivalent siblings dominate each other, so
    both ordered pairs appear.
    """
    ev = evaluator or SumEvaluator()
    out: list[tuple[Side, GameTerm, GameTerm, Verdict]] = []
    for side, options in ((Side.LEFT, g.left), (Side.RIGHT, g.right)):
        for better in options:
            for worse in options:
                if better is worse:
                    continue
                v = _dom_verdict(better, worse, side, spec, mode, ev)
                if v is not None:
                    out.append((side, worse, better, v))
    return out


def reversible_options(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode = Mode.SOUND,
    evaluator: Optional[SumEvaluator] = None,
) -> list[tuple[Side, GameTerm, GameTerm, Verdict]]:
    """All (side, option, response witness, verdict) at the root of g.

    A Left option A is reversible when some Right option of A is <= g;
    the minimal qualifying response is reported.  Responses with no
    replacement options to offer are skipped: bypassing through them
    would delete A outright, which the reversibility theorem does not
    license.
    """
    ev = evaluator or SumEvaluator()
    out: list[tuple[Side, GameTerm, GameTerm, Verdict]] = []
    for a in g.left:
        for response in a.right:
            if not response.left:
                continue
            sound = _sound_le(response, g)
            v: Optional[Verdict] = sound
            if v is None and mode is Mode.CONJECTURAL:
                full = less_equal(response, g, spec, ev)
                v = full if isinstance(full, Unrefuted) else None
            if v is not None:
                out.append((Side.LEFT, a, response, v))
                break
    for d in g.right:
        for response in d.left:
            if not response.right:
                continue
            sound = _sound_ge(response, g)
            v = sound
            if v is None and mode is Mode.CONJECTURAL:
                full = greater_equal(response, g, spec, ev)
                v = full if isinstance(full, Unrefuted) else None
            if v is not None:
                out.append((Side.RIGHT, d, response, v))
                break
    return out


_SIDE_ORDER = {Side.LEFT: 0, Side.RIGHT: 1}


def _candidates(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode,
    ev: SumEvaluator,
) -> list[tuple[tuple, ReductionStep]]:
    cands: list[tuple[tuple, ReductionStep]] = []
    for side, worse, better, v in dominated_options(g, spec, mode, ev):
        step = ReductionStep(ReductionKind.DOMINATION, side, worse, better, v)
        cands.append(((0, _SIDE_ORDER[side], better.okey, worse.okey), step))
    for side, option, response, v in reversible_options(g, spec, mode, ev):
        step = ReductionStep(ReductionKind.REVERSIBILITY, side, option, response, v)
        cands.append(((1, _SIDE_ORDER[side], option.okey, response.okey), step))
    cands.sort(key=lambda c: c[0])
    return cands


def _apply(g: GameTerm, step: ReductionStep) -> GameTerm:
    if step.kind is ReductionKind.DOMINATION:
        if step.side is Side.LEFT:
            return game(
                (o for o in g.left if o is not step.removed), g.score, g.right
            )
        return game(
            g.left, g.score, (o for o in g.right if o is not step.removed)
        )
    if step.side is Side.LEFT:
        kept = tuple(o for o in g.left if o is not step.removed)
        return game(kept + step.witness.left, g.score, g.right)
    kept = tuple(o for o in g.right if o is not step.removed)
    return game(g.left, g.score, kept + step.witness.right)


def reduce_step(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode = Mode.SOUND,
    rng: Optional[random.Random] = None,
    evaluator: Optional[SumEvaluator] = None,
) -> Optional[tuple[GameTerm, ReductionStep]]:
    """Apply one root-level reduction, or None when g is reduced.

    The default choice is deterministic: dominations before
    reversibilities, Left before Right, then by term order of the kept
    option; an rng picks among all applicable reductions instead, for
    confluence experiments.
    """
    ev = evaluator or SumEvaluator()
    cands = _candidates(g, spec, mode, ev)
    if not cands:
        return None
    _, step = cands[rng.randrange(len(cands))] if rng else cands[0]
    return _apply(g, step), step


def canonicalize(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode = Mode.SOUND,
    order_seed: Optional[int] = None,
    evaluator: Optional[SumEvaluator] = None,
) -> tuple[GameTerm, ReductionTrace]:
    """Reduce g bottom-up to a form with no dominated or reversible options.

    Options are canonicalized first, then root reductions run to a fixed
    point; every step strictly shrinks the tree, so this terminates.
    ``order_seed`` randomizes the choice among applicable reductions
    (None keeps the deterministic default).  Step paths refer to option
    positions in the term each subterm had when its reductions ran.
    """
    ev = evaluator or SumEvaluator()
    rng = random.Random(order_seed) if order_seed is not None else None
    trace = ReductionTrace()

    def canon(t: GameTerm, path: NodePath) -> GameTerm:
        new_left = [
            canon(o, path + ((Side.LEFT, i),)) for i, o in enumerate(t.left)
        ]
        new_right = [
            canon(o, path + ((Side.RIGHT, i),)) for i, o in enumerate(t.right)
        ]
        node = game(new_left, t.score, new_right)
        while True:
            hit = reduce_step(node, spec, mode, rng, ev)
            if hit is None:
                return node
            node, step = hit
            trace.steps.append(replace(step, path=path))

    return canon(g, ()), trace


def is_canonical(
    g: GameTerm,
    spec: UniverseSpec,
    mode: Mode = Mode.SOUND,
    evaluator: Optional[SumEvaluator] = None,
) -> bool:
    """True iff no option anywhere in g is dominated or reversible."""
    ev = evaluator or SumEvaluator()
    if dominated_options(g, spec, mode, ev):
        return False
    if reversible_options(g, spec, mode, ev):
        return False
    return all(is_canonical(o, spec, mode, ev) for o in g.left + g.right)
