import os
import sys

import numpy as np
import pytest

# Add src/ to the path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.cellules import (
    BallBoxConfig,
    MergeRule,
    SetPartition,
    apply_merge_rule,
    ballbox_config_from_partition,
    ballbox_dimension,
    merge_to_indiscrete,
    random_rule_witness,
)
from src.cellules.ballbox import TWO_COLOR_RULES, check_merge_hypotheses
from src.errors import HypothesisError, ParameterError
from src.graph import ColoredVertexSet


def test_config_validation():
    with pytest.raises(ParameterError, match="at least one ball"):
        BallBoxConfig([[1, 0], [0, 0]])
    with pytest.raises(ParameterError, match="every colour"):
        BallBoxConfig([[1, 0], [1, 0]])
    with pytest.raises(ParameterError, match="nonnegative"):
        BallBoxConfig([[1, -1]])


def test_counts_are_read_only():
    config = BallBoxConfig([[1, 1]])
    with pytest.raises(ValueError):
        config.counts[0, 0] = 5


def test_dimension_of_small_configs():
    assert ballbox_dimension(BallBoxConfig([[1]]), 4) == 4
    assert ballbox_dimension(BallBoxConfig([[1, 1]]), 4) == 4 + 3
    assert ballbox_dimension(BallBoxConfig([[2, 1], [0, 1]]), 3) == 6 + 2 * 2


def test_config_from_partition():
    colors = ColoredVertexSet(color=(0, 0, 1), counts=(2, 1))
    config = ballbox_config_from_partition(colors, SetPartition((0, 1, 1)))
    assert config.to_json() == [[1, 0], [1, 1]]
    assert config.color_totals == (2, 1)


def test_merged_box_takes_smallest_index():
    config = BallBoxConfig([[1, 0], [0, 1], [1, 0]])
    assert config.merged([2, 1]).to_json() == [[1, 0], [1, 1]]


@pytest.mark.parametrize(
    "rule, rows, boxes, gain",
    [
        (MergeRule.I, [[2, 0], [0, 1]], [0, 1], lambda d: d - 2),
        (MergeRule.II, [[1, 1], [1, 1]], [0, 1], lambda d: d - 2),
        (MergeRule.V, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 1, 2], lambda d: d - 3),
        (MergeRule.VI, [[1, 1], [1, 0], [0, 1]], [0, 1, 2], lambda d: d - 3),
        (
            MergeRule.VII,
            [[1, 0], [1, 0], [1, 0], [0, 1], [0, 1]],
            [0, 1, 2, 3, 4],
            lambda d: 2 * d - 6,
        ),
    ],
)
def test_minimal_witnesses_gain_exactly_the_bound(rule, rows, boxes, gain):
    for d in range(3, 7):
        merged, delta = apply_merge_rule(BallBoxConfig(rows), rule, boxes, d)
        assert merged.box_count == len(rows) - len(boxes) + 1
        assert delta == gain(d)
        a, b = rule.guaranteed_gain
        assert delta == a * d + b


def test_rule_hypotheses_are_checked():
    config = BallBoxConfig([[2, 0], [0, 1]])
    with pytest.raises(HypothesisError, match=r"rule \(i\)"):
        apply_merge_rule(config, MergeRule.I, [1, 0], 3)
    with pytest.raises(ParameterError, match="distinct boxes"):
        apply_merge_rule(config, MergeRule.I, [0, 0], 3)
    with pytest.raises(ParameterError, match="out of range"):
        apply_merge_rule(config, MergeRule.I, [0, 4], 3)


def test_rule_parse():
    assert MergeRule.parse("vii") is MergeRule.VII
    assert MergeRule.parse("IV") is MergeRule.IV
    with pytest.raises(ParameterError, match="unknown merge rule"):
        MergeRule.parse("viii")


def test_random_witnesses_never_lose_dimension():
    for rule in MergeRule:
        rng = np.random.default_rng(17 + rule.arity)
        for _ in range(50):
            config, boxes = random_rule_witness(rule, rng)
            for d in (3, 4, 5):
                _, delta = apply_merge_rule(config, rule, boxes, d)
                a, b = rule.guaranteed_gain
                assert delta >= a * d + b >= 0


def test_random_witness_colour_minimum():
    with pytest.raises(ParameterError, match="at least 3 colours"):
        random_rule_witness(MergeRule.III, np.random.default_rng(0), colors=2)
    with pytest.raises(ParameterError, match="at least 2 colours"):
        random_rule_witness(MergeRule.I, np.random.default_rng(0), colors=1)


@pytest.mark.parametrize("rule", sorted(TWO_COLOR_RULES, key=lambda r: r.label))
def test_two_colour_witnesses_keep_their_bound(rule):
    rng = np.random.default_rng(23)
    for _ in range(50):
        config, boxes = random_rule_witness(rule, rng, colors=2)
        assert config.color_count == 2
        for d in (3, 4, 5):
            _, delta = apply_merge_rule(config, rule, boxes, d)
            a, b = rule.guaranteed_gain
            assert delta >= a * d + b


def test_default_draws_include_two_colours():
    rng = np.random.default_rng(5)
    drawn = {random_rule_witness(MergeRule.VII, rng)[0].color_count for _ in range(60)}
    assert 2 in drawn
    assert all(
        random_rule_witness(MergeRule.V, rng)[0].color_count >= 3 for _ in range(20)
    )



def test_merge_sequence_for_three_singletons():
    steps = merge_to_indiscrete(BallBoxConfig.discrete([1, 1, 1]), 3)
    assert [step.rule for step in steps] == [MergeRule.V]
    assert steps[-1].result == BallBoxConfig.indiscrete([1, 1, 1])
    assert steps[0].to_json()["rule"] == "v"


def test_merge_sequence_for_k42():
    steps = merge_to_indiscrete(BallBoxConfig.discrete([4, 2]), 4)
    assert [step.rule for step in steps] == [MergeRule.VII, MergeRule.I]
    assert [step.delta for step in steps] == [2, 2]
    assert steps[-1].result == BallBoxConfig.indiscrete([4, 2])


def test_merge_sequence_never_loses_dimension():
    config = BallBoxConfig([[1, 0, 0], [1, 1, 0], [0, 0, 1], [1, 0, 0], [0, 1, 1]])
    steps = merge_to_indiscrete(config, 3)
    assert steps[-1].result.box_count == 1
    assert all(step.delta >= 0 for step in steps)


def test_indiscrete_needs_no_steps():
    assert merge_to_indiscrete(BallBoxConfig.indiscrete([2, 2, 1]), 3) == []


@pytest.mark.parametrize(
    "totals, d, message",
    [
        ([2, 2], 3, r"K_\{2,2\}"),
        ([3, 1], 4, "acyclic"),
        ([5], 4, "acyclic"),
        ([2, 2, 1], 2, "d >= 3"),
    ],
)
def test_merge_hypotheses(totals, d, message):
    with pytest.raises(HypothesisError, match=message):
        check_merge_hypotheses(totals, d)
