"""Exact engine for scoring-play combinatorial games.

Terms {left options | score | right options} with exact rational scores,
minimax final-score evaluation, five-way outcome classification, the
long-rule disjunctive sum, bounded-search order relations, and reduction
to canonical form by domination and reversibility.
"""

from .core import (
    GameTerm,
    NodePath,
    PathError,
    Score,
    Side,
    as_score,
    clear_caches,
    equivalent,
    game,
    identical,
    is_termination_vertex,
    leaf,
    max_abs_score,
    negate,
    render,
    shift,
    subterm_at,
    term_order_key,
    vertices,
)
from .score import (
    Outcome,
    OutcomeSet,
    base_sets,
    final_scores,
    left_final_score,
    membership,
    outcome,
    right_final_score,
)
from .sums import (
    SumEvaluator,
    add,
    distinguishing_context,
    final_scores_of_sum,
    is_numeric,
    outcome_template,
    zero,
)
from .order import (
    DEFAULT_UNIVERSE,
    Proved,
    Refuted,
    SoundRule,
    UniverseSpec,
    Unrefuted,
    Verdict,
    duality_check,
    enumerate_universe,
    equal,
    greater_equal,
    less_equal,
    universe,
    universe_size,
)
from .canonical import (
    Mode,
    ReductionKind,
    ReductionStep,
    ReductionTrace,
    canonicalize,
    dominated_options,
    is_canonical,
    reduce_step,
    reversible_options,
)
from .notation import (
    DuplicateOptionWarning,
    ParseError,
    RecordError,
    SourceSpan,
    from_structured,
    parse,
    parse_score,
    print_game,
    to_structured,
)
from .rulesets import TfError, TfPosition, tf_moves, tf_parse, tf_to_game

__version__ = "0.1.0"
