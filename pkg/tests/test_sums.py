import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from scoreplay import (
    SumEvaluator,
    add,
    distinguishing_context,
    final_scores,
    final_scores_of_sum,
    identical,
    is_numeric,
    leaf,
    negate,
    outcome,
    outcome_template,
    parse,
    render,
    vertices,
    zero,
)

import oracles
from conftest import terms


class TestAdd:
    def test_zero_is_the_identity(self, small_universe):
        for g in small_universe:
            assert add(zero(), g) is g
            assert add(g, zero()) is g

    def test_leaves_add_like_numbers(self):
        assert add(leaf(2), leaf(Fraction(1, 2))) is leaf(Fraction(5, 2))

    def test_expansion_example(self):
        s = add(parse("{1|0|.}"), parse("{.|0|-1}"))
        # one Left option (move in the first component), one Right option
        assert render(s) == "{{.|1|0}|0|{0|-1|.}}"
        assert final_scores(s) == (0, 0)

    @given(terms(max_depth=1), terms(max_depth=1))
    def test_commutative(self, g, h):
        assert add(g, h) is add(h, g)

    @given(terms(max_depth=1), terms(max_depth=1), terms(max_depth=1))
    @settings(max_examples=40)
    def test_associative(self, g, h, j):
        assert add(add(g, h), j) is add(g, add(h, j))

    @given(terms(max_depth=1), terms(max_depth=1))
    def test_negation_distributes(self, g, h):
        assert negate(add(g, h)) is add(negate(g), negate(h))

    @given(terms(max_depth=1), terms(max_depth=1))
    def test_root_scores_add_everywhere(self, g, h):
        # every vertex of g+h is a pair of component positions, so its
        # score is a sum of two component vertex scores
        comp_scores = {
            a.score + b.score
            for _, a in vertices(g)
            for _, b in vertices(h)
        }
        for _, v in vertices(add(g, h)):
            assert v.score in comp_scores
        assert add(g, h).score == g.score + h.score


class TestTwoOracles:
    @given(terms(max_depth=1), terms(max_depth=1))
    @settings(max_examples=60)
    def test_expansion_vs_componentwise_vs_simulator(self, g, h):
        s = add(g, h)
        expansion = final_scores(s)
        componentwise = final_scores_of_sum(g, h)
        memo = {}
        played = (
            oracles.play_left((oracles.raw(g), oracles.raw(h)), memo),
            oracles.play_right((oracles.raw(g), oracles.raw(h)), memo),
        )
        assert expansion == componentwise == played

    def test_three_components(self):
        rng = random.Random(7)
        pool = [
            parse(t)
            for t in ("{1|0|.}", "{.|0|-1}", "{1|0|-1}", "2", "{-1|1|0}")
        ]
        for _ in range(25):
            g, h, j = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            s = add(add(g, h), j)
            memo = {}
            comps = (oracles.raw(g), oracles.raw(h), oracles.raw(j))
            assert final_scores(s) == (
                oracles.play_left(comps, memo),
                oracles.play_right(comps, memo),
            )


class TestNumeric:
    def test_examples(self):
        assert is_numeric(leaf(7))
        assert not is_numeric(parse("{1|0|0}"))

    @given(terms())
    def test_numeric_games_invert(self, g):
        if is_numeric(g):
            assert add(g, negate(g)) is zero()

    def test_non_numeric_sum_with_negation_is_not_the_zero_term(
        self, small_universe
    ):
        for g in small_universe:
            if not is_numeric(g):
                assert not identical(add(g, negate(g)), zero())


class TestDistinguishingContext:
    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            distinguishing_context(zero())

    def test_nonzero_leaf_uses_empty_context(self):
        x = distinguishing_context(leaf(5))
        assert x is zero()
        assert outcome(add(leaf(5), x)) is not outcome(x)

    def test_left_sided_example(self):
        g = parse("{0|0|.}")
        x = distinguishing_context(g)
        assert render(x) == "{.|1|-1}"
        assert outcome(add(g, x)) is not outcome(x)

    def test_right_sided_mirror(self):
        g = parse("{.|0|0}")
        x = distinguishing_context(g)
        assert render(x) == "{1|-1|.}"
        assert outcome(add(g, x)) is not outcome(x)

    def test_works_universe_wide(self, small_universe):
        for g in small_universe:
            if g is zero():
                continue
            x = distinguishing_context(g)
            assert outcome(add(g, x)) is not outcome(x), render(g)


class TestOutcomeTemplate:
    def test_all_zero_parameters_tie(self):
        G, H = outcome_template(0, 0, 0, 0, 0, 0, 0, 0)
        assert outcome(G) is outcome(H) is outcome(add(G, H))
        assert outcome(G).value == "T"

    def test_shapes(self):
        G, H = outcome_template(1, 2, 3, 4, 5, 6, 7, 8)
        assert render(G) == "{{{4|3|5}|2|.}|1|.}"
        assert render(H) == "{.|6|{.|7|8}}"

    def test_sum_final_scores_follow_the_proof(self):
        rng = random.Random(3)
        for _ in range(200):
            a, b, c, d, e, f, g, h = (rng.randint(-3, 3) for _ in range(8))
            G, H = outcome_template(a, b, c, d, e, f, g, h)
            sl, sr = final_scores_of_sum(G, H)
            assert sr == e + h
            assert sl in (e + g, d + h)
            assert sl == min(e + g, d + h)


class TestSumEvaluator:
    def test_matches_expansion_on_universe_pairs(self, tiny_universe):
        ev = SumEvaluator()
        for g in tiny_universe[::5]:
            for h in tiny_universe[::5]:
                assert ev.final_scores(g, h) == final_scores(add(g, h))

    def test_outcome_shortcut(self):
        g, h = parse("{1|0|.}"), parse("{.|0|-1}")
        assert SumEvaluator().outcome(g, h) is outcome(add(g, h))
