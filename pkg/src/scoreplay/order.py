"""Order and equality relations, decided soundly or refuted by search.

The relations =, >= and <= quantify over *all* context games X, which no
bounded tool can decide.  This module answers three-valued: Proved when a
sound rule applies, Refuted with a concrete (context, outcome set)
witness found in a finite enumerated universe, and otherwise Unrefuted
with the universe bounds that were searched.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Optional, Union

from .core import GameTerm, Score, as_score, equivalent, game, leaf, render, _score_key
from .score import OutcomeSet, set_holds
from .sums import SumEvaluator, is_numeric

__all__ = [
    "UniverseSpec",
    "DEFAULT_UNIVERSE",
    "UNIVERSE_SIZE_LIMIT",
    "universe_size",
    "enumerate_universe",
    "universe",
    "SoundRule",
    "Proved",
    "Refuted",
    "Unrefuted",
    "Verdict",
    "UP_SETS",
    "DOWN_SETS",
    "ge_refutation_at",
    "le_refutation_at",
    "find_ge_refutation",
    "find_le_refutation",
    "find_eq_refutation",
    "greater_equal",
    "less_equal",
    "equal",
    "duality_check",
]

#: Sets closed upward for Left: membership survives replacing H by a >= G.
UP_SETS = (OutcomeSet.L_GT, OutcomeSet.L_GE, OutcomeSet.R_GT, OutcomeSet.R_GE)
#: Their complements, used by <=.
DOWN_SETS = (OutcomeSet.L_LT, OutcomeSet.L_LE, OutcomeSet.R_LT, OutcomeSet.R_LE)

#: Enumerating a universe larger than this raises instead of thrashing.
UNIVERSE_SIZE_LIMIT = 2_000_000


@dataclass(frozen=True)
class UniverseSpec:
    """Bounds defining a finite context universe.

    Every game whose tree has depth <= max_depth, option sets of size
    <= max_width and all vertex scores drawn from ``scores``.
    """

    max_depth: int
    max_width: int
    scores: tuple[Score, ...]

    def __post_init__(self) -> None:
        if self.max_depth < 0 or self.max_width < 0:
            raise ValueError("universe bounds must be >= 0")
        if not self.scores:
            raise ValueError("universe score set must be non-empty")
        normalized = sorted(
            {as_score(s) for s in self.scores}, key=_score_key
        )
        object.__setattr__(self, "scores", tuple(normalized))

    def describe(self) -> str:
        scores = ",".join(str(s) for s in self.scores)
        return f"depth<={self.max_depth} width<={self.max_width} scores={{{scores}}}"


DEFAULT_UNIVERSE = UniverseSpec(1, 2, (-2, -1, 0, 1, 2))


def universe_size(spec: UniverseSpec) -> int:
    """Closed-form count of the universe, without enumerating it."""
    n = len(spec.scores)
    for _ in range(spec.max_depth):
        sets = sum(comb(n, k) for k in range(spec.max_width + 1))
        n = sets * sets * len(spec.scores)
    return n


_universe_cache: dict[UniverseSpec, tuple[GameTerm, ...]] = {}


def universe(spec: UniverseSpec) -> tuple[GameTerm, ...]:
    """The full universe as a tuple, sorted by term order (cached)."""
    cached = _universe_cache.get(spec)
    if cached is None:
        size = universe_size(spec)
        if size > UNIVERSE_SIZE_LIMIT:
            raise ValueError(
                f"universe {spec.describe()} has {size} games; "
                f"refusing to enumerate above {UNIVERSE_SIZE_LIMIT}"
            )
        pool: list[GameTerm] = [leaf(s) for s in spec.scores]
        for _ in range(spec.max_depth):
            option_sets: list[tuple[GameTerm, ...]] = [()]
            for k in range(1, spec.max_width + 1):
                option_sets.extend(combinations(pool, k))
            pool = [
                game(lt, s, rt)
                for lt in option_sets
                for s in spec.scores
                for rt in option_sets
            ]
        cached = tuple(sorted(pool, key=lambda t: t.okey))
        _universe_cache[spec] = cached
    return cached


def enumerate_universe(spec: UniverseSpec) -> Iterator[GameTerm]:
    """Stream the universe in deterministic term order, no duplicates."""
    yield from universe(spec)


class SoundRule(Enum):
    IDENTICAL = "Identical"
    EQUIVALENT = "Equivalent"
    NUMERIC_ORDER = "NumericOrder"


@dataclass(frozen=True)
class Proved:
    rule: SoundRule

    def __str__(self) -> str:
        return f"Proved({self.rule.value})"


@dataclass(frozen=True)
class Refuted:
    witness: GameTerm
    witness_set: Optional[OutcomeSet] = None

    def __str__(self) -> str:
        if self.witness_set is None:
            return f"Refuted(X={render(self.witness)})"
        return f"Refuted(X={render(self.witness)}, O={self.witness_set.value})"


@dataclass(frozen=True)
class Unrefuted:
    spec: UniverseSpec

    def __str__(self) -> str:
        return f"Unrefuted({self.spec.describe()})"


Verdict = Union[Proved, Refuted, Unrefuted]


def _sound_ge(g: GameTerm, h: GameTerm) -> Optional[Proved]:
    # The only comparison facts the theory supplies constructively:
    # identical trees, equivalence (same tree, equal termination scores,
    # which preserves final scores in every context), and translation
    # order between bare numbers.
    if g is h:
        return Proved(SoundRule.IDENTICAL)
    if equivalent(g, h):
        return Proved(SoundRule.EQUIVALENT)
    if is_numeric(g) and is_numeric(h) and g.score >= h.score:
        return Proved(SoundRule.NUMERIC_ORDER)
    return None


def _sound_le(g: GameTerm, h: GameTerm) -> Optional[Proved]:
    if g is h:
        return Proved(SoundRule.IDENTICAL)
    if equivalent(g, h):
        return Proved(SoundRule.EQUIVALENT)
    if is_numeric(g) and is_numeric(h) and g.score <= h.score:
        return Proved(SoundRule.NUMERIC_ORDER)
    return None


def ge_refutation_at(
    g: GameTerm, h: GameTerm, x: GameTerm, ev: SumEvaluator
) -> Optional[OutcomeSet]:
    """First up-set O with h+x in O but g+x not, if any."""
    slg, srg = ev.final_scores(g, x)
    slh, srh = ev.final_scores(h, x)
    for o in UP_SETS:
        if set_holds(o, slh, srh) and not set_holds(o, slg, srg):
            return o
    return None


def le_refutation_at(
    g: GameTerm, h: GameTerm, x: GameTerm, ev: SumEvaluator
) -> Optional[OutcomeSet]:
    """First down-set O with h+x in O but g+x not, if any."""
    slg, srg = ev.final_scores(g, x)
    slh, srh = ev.final_scores(h, x)
    for o in DOWN_SETS:
        if set_holds(o, slh, srh) and not set_holds(o, slg, srg):
            return o
    return None


def find_ge_refutation(
    g: GameTerm,
    h: GameTerm,
    contexts: Iterable[GameTerm],
    ev: Optional[SumEvaluator] = None,
) -> Optional[tuple[GameTerm, OutcomeSet]]:
    ev = ev or SumEvaluator()
    for x in contexts:
        o = ge_refutation_at(g, h, x, ev)
        if o is not None:
            return x, o
    return None


def find_le_refutation(
    g: GameTerm,
    h: GameTerm,
    contexts: Iterable[GameTerm],
    ev: Optional[SumEvaluator] = None,
) -> Optional[tuple[GameTerm, OutcomeSet]]:
    ev = ev or SumEvaluator()
    for x in contexts:
        o = le_refutation_at(g, h, x, ev)
        if o is not None:
            return x, o
    return None


def find_eq_refutation(
    g: GameTerm,
    h: GameTerm,
    contexts: Iterable[GameTerm],
    ev: Optional[SumEvaluator] = None,
) -> Optional[GameTerm]:
    ev = ev or SumEvaluator()
    for x in contexts:
        if ev.outcome(g, x) is not ev.outcome(h, x):
            return x
    return None


def greater_equal(
    g: GameTerm,
    h: GameTerm,
    spec: UniverseSpec = DEFAULT_UNIVERSE,
    evaluator: Optional[SumEvaluator] = None,
) -> Verdict:
    """Three-valued g >= h.

    Refuted means some enumerated context x and up-set O have h+x in O but
    g+x outside it; the witness is minimal in term order and the verdict
    carries both for auditing.
    """
    sound = _sound_ge(g, h)
    if sound is not None:
        return sound
    hit = find_ge_refutation(g, h, universe(spec), evaluator)
    if hit is not None:
        return Refuted(*hit)
    return Unrefuted(spec)


def less_equal(
    g: GameTerm,
    h: GameTerm,
    spec: UniverseSpec = DEFAULT_UNIVERSE,
    evaluator: Optional[SumEvaluator] = None,
) -> Verdict:
    """Three-valued g <= h, over the four down-sets."""
    sound = _sound_le(g, h)
    if sound is not None:
        return sound
    hit = find_le_refutation(g, h, universe(spec), evaluator)
    if hit is not None:
        return Refuted(*hit)
    return Unrefuted(spec)


def equal(
    g: GameTerm,
    h: GameTerm,
    spec: UniverseSpec = DEFAULT_UNIVERSE,
    evaluator: Optional[SumEvaluator] = None,
) -> Verdict:
    """Three-valued g = h: same outcome in every context."""
    if g is h:
        return Proved(SoundRule.IDENTICAL)
    if equivalent(g, h):
        return Proved(SoundRule.EQUIVALENT)
    x = find_eq_refutation(g, h, universe(spec), evaluator)
    if x is not None:
        return Refuted(x)
    return Unrefuted(spec)


def duality_check(
    g: GameTerm,
    h: GameTerm,
    spec: UniverseSpec = DEFAULT_UNIVERSE,
    evaluator: Optional[SumEvaluator] = None,
) -> bool:
    """Check that contexts refuting g >= h are exactly those refuting h <= g.

    Since every up-set is the complement of a down-set, the two searches
    must flag the same contexts; this executes that theorem on the
    enumerated universe.
    """
    ev = evaluator or SumEvaluator()
    for x in universe(spec):
        ge_hit = ge_refutation_at(g, h, x, ev) is not None
        le_hit = le_refutation_at(h, g, x, ev) is not None
        if ge_hit != le_hit:
            return False
    return True
