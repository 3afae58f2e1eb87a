"""Scoring Toads-and-Frogs compiled to game terms.

Toads (Left's pieces) move rightward, Frogs (Right's) leftward, on a
one-dimensional strip.  A piece slides onto an adjacent blank, or jumps a
single adjacent opposing piece onto the blank behind it; the jumped piece
stays put.  Each jump scores one point for the jumper, tallied into a
single running Left-minus-Right score.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GameTerm, Score, Side, game

__all__ = ["TfPosition", "TfError", "tf_parse", "tf_moves", "tf_to_game"]

_ALPHABET = frozenset("TFB")


class TfError(ValueError):
    """Not a Toads-and-Frogs position."""


@dataclass(frozen=True)
class TfPosition:
    cells: tuple[str, ...]
    score: Score = 0

    def text(self) -> str:
        return "".join(self.cells)


def tf_parse(text: str) -> TfPosition:
    """Parse a strip like 'TBF' (T toad, F frog, B blank); score starts 0."""
    if not text:
        raise TfError("empty position")
    for i, ch in enumerate(text):
        if ch not in _ALPHABET:
            raise TfError(f"illegal cell {ch!r} at index {i} (use T, F, B)")
    return TfPosition(tuple(text), 0)


def tf_moves(p: TfPosition, player: Side) -> list[tuple[TfPosition, Score]]:
    """All moves for one player as (new position, score delta) pairs.

    Left slides a toad right (delta 0) or jumps one adjacent frog (+1);
    Right mirrors leftward with delta -1.
    """
    cells = p.cells
    n = len(cells)
    out: list[tuple[TfPosition, Score]] = []
    if player is Side.LEFT:
        for i, c in enumerate(cells):
            if c != "T":
                continue
            if i + 1 < n and cells[i + 1] == "B":
                moved = cells[:i] + ("B", "T") + cells[i + 2:]
                out.append((TfPosition(moved, p.score), 0))
            if i + 2 < n and cells[i + 1] == "F" and cells[i + 2] == "B":
                moved = cells[:i] + ("B", "F", "T") + cells[i + 3:]
                out.append((TfPosition(moved, p.score + 1), 1))
    else:
        for i, c in enumerate(cells):
            if c != "F":
                continue
            if i - 1 >= 0 and cells[i - 1] == "B":
                moved = cells[:i - 1] + ("F", "B") + cells[i + 1:]
                out.append((TfPosition(moved, p.score), 0))
            if i - 2 >= 0 and cells[i - 1] == "T" and cells[i - 2] == "B":
                moved = cells[:i - 2] + ("F", "T", "B") + cells[i + 1:]
                out.append((TfPosition(moved, p.score - 1), -1))
    return out


_tf_cache: dict[tuple[tuple[str, ...], Score], GameTerm] = {}


def tf_to_game(p: TfPosition) -> GameTerm:
    """Expand a position into the full game term, scores accumulated."""
    key = (p.cells, p.score)
    term = _tf_cache.get(key)
    if term is None:
        term = game(
            (tf_to_game(q) for q, _ in tf_moves(p, Side.LEFT)),
            p.score,
            (tf_to_game(q) for q, _ in tf_moves(p, Side.RIGHT)),
        )
        _tf_cache[key] = term
    return term
