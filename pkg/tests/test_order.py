import pytest

from scoreplay import (
    DEFAULT_UNIVERSE,
    Proved,
    Refuted,
    SoundRule,
    SumEvaluator,
    UniverseSpec,
    Unrefuted,
    OutcomeSet,
    add,
    duality_check,
    enumerate_universe,
    equal,
    greater_equal,
    leaf,
    less_equal,
    outcome,
    parse,
    render,
    term_order_key,
    universe,
    universe_size,
    zero,
)
from scoreplay.order import find_eq_refutation, find_ge_refutation

from conftest import SMALL, TINY


class TestUniverseSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            UniverseSpec(-1, 0, (0,))
        with pytest.raises(ValueError):
            UniverseSpec(1, 1, ())

    def test_scores_normalized(self):
        assert UniverseSpec(1, 1, (1, 0, 1, -1)).scores == (0, 1, -1)

    def test_refuses_astronomical_universes(self):
        with pytest.raises(ValueError):
            universe(UniverseSpec(2, 2, (-2, -1, 0, 1, 2)))


class TestEnumeration:
    def test_single_leaf(self):
        assert list(enumerate_universe(UniverseSpec(0, 0, (0,)))) == [zero()]

    def test_three_leaves(self):
        games = list(enumerate_universe(UniverseSpec(0, 0, (-1, 0, 1))))
        assert games == [leaf(0), leaf(1), leaf(-1)]

    def test_count_against_nested_loop_generator(self):
        # depth<=1, width<=1, scores {0,1}: independent construction
        from scoreplay import game

        leaves = [leaf(0), leaf(1)]
        option_sets = [(), (leaves[0],), (leaves[1],)]
        expected = {
            render(game(lt, s, rt))
            for lt in option_sets
            for s in (0, 1)
            for rt in option_sets
        }
        got = {render(g) for g in enumerate_universe(UniverseSpec(1, 1, (0, 1)))}
        assert got == expected
        assert len(got) == 18

    def test_sorted_and_duplicate_free(self, small_universe):
        keys = [term_order_key(g) for g in small_universe]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_sizes_match_closed_form(self):
        for spec in (TINY, SMALL, UniverseSpec(1, 1, (0, 1))):
            assert len(universe(spec)) == universe_size(spec)


class TestGreaterEqual:
    def test_equivalent_pair_proved(self):
        v = greater_equal(parse("{1|1|1}"), parse("{1|0|1}"))
        assert v == Proved(SoundRule.EQUIVALENT)

    def test_numeric_order_proved(self):
        assert greater_equal(leaf(3), leaf(2)) == Proved(SoundRule.NUMERIC_ORDER)

    def test_identical_proved(self):
        g = parse("{1|0|-1}")
        assert greater_equal(g, g) == Proved(SoundRule.IDENTICAL)

    def test_leaf_order_refuted_by_zero_context(self):
        v = greater_equal(leaf(0), leaf(1))
        assert v == Refuted(zero(), OutcomeSet.L_GT)

    def test_unrefuted_case(self):
        v = greater_equal(parse("{2|0|.}"), parse("{1|0|.}"))
        assert v == Unrefuted(DEFAULT_UNIVERSE)

    def test_refuted_witness_is_sound(self, default_universe):
        g, h = leaf(0), parse("{1|0|0}")
        v = greater_equal(g, h)
        assert isinstance(v, Refuted)
        from scoreplay.score import set_holds
        ev = SumEvaluator()
        assert set_holds(v.witness_set, *ev.final_scores(h, v.witness))
        assert not set_holds(v.witness_set, *ev.final_scores(g, v.witness))


class TestLessEqual:
    def test_numeric(self):
        assert less_equal(leaf(2), leaf(3)) == Proved(SoundRule.NUMERIC_ORDER)

    def test_equivalent(self):
        v = less_equal(parse("{1|0|1}"), parse("{1|1|1}"))
        assert v == Proved(SoundRule.EQUIVALENT)

    def test_refuted_by_zero_context(self):
        # leaf(0) lies in L<= but not L<; the zero context refutes through
        # the union set
        v = less_equal(leaf(1), leaf(0))
        assert v == Refuted(zero(), OutcomeSet.L_LE)


class TestEqual:
    def test_equal_but_not_identical_pair(self):
        assert equal(parse("{1|1|1}"), parse("{1|0|1}")) == Proved(
            SoundRule.EQUIVALENT
        )

    def test_left_unit_refuted(self):
        v = equal(parse("{1|0|0}"), zero())
        assert v == Refuted(zero())
        assert outcome(parse("{1|0|0}")) is not outcome(zero())

    def test_sum_with_zero_is_never_refuted(self, default_universe):
        for g in default_universe[::11]:
            v = equal(g, add(g, zero()))
            assert v == Proved(SoundRule.IDENTICAL)


class TestDuality:
    def test_shared_witness(self):
        assert duality_check(leaf(0), leaf(1))

    def test_reflexive_pairs(self):
        g = parse("{1|0|-1}")
        assert duality_check(g, g)

    def test_exhaustive_on_tiny_universe(self, tiny_universe):
        ev = SumEvaluator()
        for g in tiny_universe[::3]:
            for h in tiny_universe[::3]:
                assert duality_check(g, h, TINY, ev)


class TestWitnessDeterminism:
    def test_repeated_runs_agree(self):
        pairs = [
            (leaf(0), leaf(1)),
            (parse("{1|0|0}"), zero()),
            (zero(), parse("{.|0|1}")),
        ]
        for g, h in pairs:
            first = greater_equal(g, h)
            again = greater_equal(g, h, DEFAULT_UNIVERSE, SumEvaluator())
            assert first == again

    def test_witness_is_minimal_in_term_order(self, default_universe):
        g, h = leaf(0), leaf(1)
        v = greater_equal(g, h)
        ev = SumEvaluator()
        for x in default_universe:
            if x is v.witness:
                break
            assert find_ge_refutation(g, h, [x], ev) is None


class TestSoundnessOfProved:
    def test_proved_verdicts_survive_exhaustive_search(self, tiny_universe):
        from scoreplay.order import find_le_refutation

        ev = SumEvaluator()
        proved = 0
        for g in tiny_universe:
            for h in tiny_universe:
                v = greater_equal(g, h, TINY, ev)
                if not isinstance(v, Proved):
                    continue
                proved += 1
                assert find_ge_refutation(g, h, tiny_universe, ev) is None
                w = less_equal(h, g, TINY, ev)
                assert isinstance(w, Proved)
                assert find_le_refutation(h, g, tiny_universe, ev) is None
        assert proved > len(tiny_universe)  # diagonal plus real pairs


class TestPartialOrderProbes:
    def test_reflexivity_never_refuted(self, tiny_universe):
        ev = SumEvaluator()
        for g in tiny_universe:
            assert find_ge_refutation(g, g, tiny_universe, ev) is None

    def test_equivalence_implies_bounded_equality(self, default_universe):
        # every equivalent pair has equal outcomes in every context
        from scoreplay.core import _esig

        classes = {}
        for g in default_universe:
            classes.setdefault(_esig(g), []).append(g)
        ev = SumEvaluator()
        checked = 0
        for members in classes.values():
            if len(members) < 2:
                continue
            g, h = members[0], members[1]
            assert find_eq_refutation(g, h, default_universe, ev) is None
            checked += 1
            if checked >= 12:
                break
        assert checked > 0
