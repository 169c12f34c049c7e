"""
Ball-box model of cellules of complete multipartite graphs.

For G = K_{q_1,...,q_n} the dimension of a cellule only depends on how many
vertices of each colour land in each block. A partition is therefore a way of
putting coloured balls into nonempty boxes, and

    dim = d * boxes + (d - 1) * heterochromatic pairs sharing a box.

This module implements that count, the seven merging rules that never lower
the dimension when d >= 3, and the case analysis that merges any
configuration into a single box one rule at a time.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.cellules.partitions import SetPartition
from src.errors import HypothesisError, InconsistencyError, ParameterError
from src.graph import ColoredVertexSet

log = logging.getLogger(__name__)


class BallBoxConfig:
    """
    Matrix of ball counts: entry (i, j) is the number of balls of colour j in
    box i. Every box and every colour is nonempty.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts):
        array = np.array(counts, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
            raise ParameterError("a ball-box configuration needs boxes and colours")
        if (array < 0).any():
            raise ParameterError("ball counts must be nonnegative")
        if (array.sum(axis=1) == 0).any():
            raise ParameterError("every box must contain at least one ball")
        if (array.sum(axis=0) == 0).any():
            raise ParameterError("every colour must have at least one ball")
        array.setflags(write=False)
        self._counts = array

    @property
    def counts(self) -> np.ndarray:
        return self._counts

    @property
    def box_count(self) -> int:
        return int(self._counts.shape[0])

    @property
    def color_count(self) -> int:
        return int(self._counts.shape[1])

    @property
    def color_totals(self) -> Tuple[int, ...]:
        return tuple(int(q) for q in self._counts.sum(axis=0))

    def box(self, index: int) -> Tuple[int, ...]:
        return tuple(int(b) for b in self._counts[index])

    def colors_in(self, index: int) -> List[int]:
        return [int(j) for j in np.flatnonzero(self._counts[index])]

    def heterochromatic_pairs(self) -> int:
        sizes = self._counts.sum(axis=1)
        same = (self._counts**2).sum(axis=1)
        return int(((sizes**2 - same) // 2).sum())

    @classmethod
    def from_partition(
        cls, colors: ColoredVertexSet, partition: SetPartition
    ) -> "BallBoxConfig":
        if partition.size != colors.vertex_count:
            raise ParameterError(
                f"partition covers {partition.size} vertices, colouring has "
                f"{colors.vertex_count}"
            )
        counts = np.zeros((partition.block_count, colors.color_count), dtype=np.int64)
        for vertex, block in enumerate(partition.rgs):
            counts[block, colors.color[vertex]] += 1
        return cls(counts)

    @classmethod
    def discrete(cls, color_counts: Sequence[int]) -> "BallBoxConfig":
        rows = []
        for color, q in enumerate(color_counts):
            for _ in range(int(q)):
                row = [0] * len(color_counts)
                row[color] = 1
                rows.append(row)
        return cls(rows)

    @classmethod
    def indiscrete(cls, color_counts: Sequence[int]) -> "BallBoxConfig":
        return cls([list(color_counts)])

    def merged(self, boxes: Sequence[int]) -> "BallBoxConfig":
        """Merge ``boxes`` into one box placed at the smallest of their indices."""
        target = min(boxes)
        rows = []
        for index in range(self.box_count):
            if index == target:
                rows.append(self._counts[list(boxes)].sum(axis=0))
            elif index not in boxes:
                rows.append(self._counts[index])
        return BallBoxConfig(rows)

    def to_json(self) -> List[List[int]]:
        return self._counts.tolist()

    def __eq__(self, other):
        return isinstance(other, BallBoxConfig) and np.array_equal(
            self._counts, other._counts
        )

    def __hash__(self):
        return hash((self._counts.shape, self._counts.tobytes()))

    def __repr__(self):
        return f"BallBoxConfig({self._counts.tolist()})"


def ballbox_config_from_partition(
    colors: ColoredVertexSet, partition: SetPartition
) -> BallBoxConfig:
    return BallBoxConfig.from_partition(colors, partition)


def ballbox_dimension(config: BallBoxConfig, d: int) -> int:
    """d * boxes + (d - 1) * heterochromatic pairs in a common box."""
    if d < 1:
        raise ParameterError(f"dimension d must be at least 1, got {d}")
    return d * config.box_count + (d - 1) * config.heterochromatic_pairs()


class MergeRule(Enum):
    """The seven dimension-preserving mergers, with the number of boxes each merges."""

    I = ("i", 2)  # noqa: E741
    II = ("ii", 2)
    III = ("iii", 2)
    IV = ("iv", 2)
    V = ("v", 3)
    VI = ("vi", 3)
    VII = ("vii", 5)

    def __init__(self, label: str, arity: int):
        self.label = label
        self.arity = arity

    @classmethod
    def parse(cls, label: str) -> "MergeRule":
        for rule in cls:
            if rule.label == str(label).lower():
                return rule
        raise ParameterError(f"unknown merge rule {label!r}; use i..vii")

    @property
    def guaranteed_gain(self) -> Tuple[int, int]:
        """``(a, b)`` such that the dimension change is at least ``a * d + b``."""
        if self in (MergeRule.V, MergeRule.VI):
            return (1, -3)
        if self is MergeRule.VII:
            return (2, -6)
        return (1, -2)


_REQUIREMENTS = {
    MergeRule.I: "a box with two balls of one colour and a box with a ball of another",
    MergeRule.II: "two boxes that each hold balls of the same two colours",
    MergeRule.III: "a box with two colours and a box with a third colour",
    MergeRule.IV: "a first box holding balls of at least three colours",
    MergeRule.V: "three boxes holding balls of three distinct colours",
    MergeRule.VI: "a two-colour box plus one box of each of those colours",
    MergeRule.VII: "three boxes sharing one colour and two sharing another",
}


def _rule_holds(config: BallBoxConfig, rule: MergeRule, boxes: Sequence[int]) -> bool:
    rows = [config.counts[index] for index in boxes]
    colours = range(config.color_count)
    if rule is MergeRule.I:
        return any(
            rows[0][c] >= 2 and rows[1][o] >= 1
            for c, o in permutations(colours, 2)
        )
    if rule is MergeRule.II:
        return any(
            min(rows[0][c], rows[0][o], rows[1][c], rows[1][o]) >= 1
            for c, o in permutations(colours, 2)
        )
    if rule is MergeRule.III:
        return any(
            min(rows[0][c], rows[0][o], rows[1][g]) >= 1
            for c, o, g in permutations(colours, 3)
        )
    if rule is MergeRule.IV:
        return int(np.count_nonzero(rows[0])) >= 3
    if rule is MergeRule.V:
        return any(
            min(rows[0][c], rows[1][o], rows[2][g]) >= 1
            for c, o, g in permutations(colours, 3)
        )
    if rule is MergeRule.VI:
        return any(
            min(rows[0][c], rows[0][o], rows[1][c], rows[2][o]) >= 1
            for c, o in permutations(colours, 2)
        )
    return any(
        min(rows[0][c], rows[1][c], rows[2][c], rows[3][o], rows[4][o]) >= 1
        for c, o in permutations(colours, 2)
    )


def apply_merge_rule(
    config: BallBoxConfig, rule: MergeRule, boxes: Sequence[int], d: int
) -> Tuple[BallBoxConfig, int]:
    """
    Merge the named boxes under one of the seven rules.

    Args:
        config (BallBoxConfig): Current configuration.
        rule (MergeRule): Rule to apply; the order of ``boxes`` matches the
            roles in the rule (e.g. for rule (i) the first box holds two balls
            of one colour).
        boxes (Sequence[int]): Distinct box indices, as many as the rule merges.
        d (int): Ambient dimension.

    Returns:
        tuple[BallBoxConfig, int]: The merged configuration (merged box at the
        smallest index) and the exact change in ``ballbox_dimension``.

    Raises:
        ParameterError: On bad box indices.
        HypothesisError: If the boxes do not satisfy the rule's hypotheses.
    """
    boxes = [int(b) for b in boxes]
    if len(boxes) != rule.arity or len(set(boxes)) != len(boxes):
        raise ParameterError(
            f"rule ({rule.label}) merges {rule.arity} distinct boxes, got {boxes}"
        )
    if any(not 0 <= b < config.box_count for b in boxes):
        raise ParameterError(f"box index out of range 0..{config.box_count - 1}")
    if not _rule_holds(config, rule, boxes):
        raise HypothesisError(
            f"rule ({rule.label}) needs {_REQUIREMENTS[rule]}; boxes {boxes} "
            f"hold {[config.box(b) for b in boxes]}"
        )
    merged = config.merged(boxes)
    return merged, ballbox_dimension(merged, d) - ballbox_dimension(config, d)


@dataclass(frozen=True)
class MergeStep:
    """
    One rule application in a merge sequence.

    Attributes:
        rule (MergeRule): The rule used.
        boxes (tuple[int]): Box indices in the configuration before the step.
        delta (int): Dimension change.
        result (BallBoxConfig): Configuration after the step.
    """

    rule: MergeRule
    boxes: Tuple[int, ...]
    delta: int
    result: BallBoxConfig

    def to_json(self) -> dict:
        return {
            "rule": self.rule.label,
            "boxes": list(self.boxes),
            "delta": self.delta,
            "result": self.result.to_json(),
        }


def check_merge_hypotheses(color_totals: Sequence[int], d: int) -> None:
    """
    Raise HypothesisError unless the multipartite graph with these colour
    totals is covered by the merging argument at dimension d.
    """
    totals = sorted((int(q) for q in color_totals), reverse=True)
    if d < 3:
        raise HypothesisError(f"the merging argument needs d >= 3, got {d}")
    if len(totals) == 1 or (len(totals) == 2 and totals[1] == 1):
        raise HypothesisError(f"K_{{{','.join(map(str, totals))}}} is acyclic")
    if totals == [2, 2]:
        raise HypothesisError("K_{2,2} is the 4-cycle and is not covered")


def _boxes_with(
    config: BallBoxConfig, color: int, skip: Sequence[int] = ()
) -> List[int]:
    return [
        index
        for index in range(config.box_count)
        if index not in skip and config.counts[index][color] >= 1
    ]


def _next_step_many_colors(config: BallBoxConfig) -> Tuple[MergeRule, List[int]]:
    counts = config.counts
    for a in range(config.box_count):
        if len(config.colors_in(a)) >= 3:
            other = next(b for b in range(config.box_count) if b != a)
            return MergeRule.IV, [a, other]
    for a in range(config.box_count):
        if counts[a].max() >= 2:
            absent = next(g for g in range(config.color_count) if counts[a][g] == 0)
            return MergeRule.I, [a, _boxes_with(config, absent, [a])[0]]
    for a in range(config.box_count):
        if len(config.colors_in(a)) == 2:
            absent = next(g for g in range(config.color_count) if counts[a][g] == 0)
            return MergeRule.III, [a, _boxes_with(config, absent, [a])[0]]
    chosen = [_boxes_with(config, color)[0] for color in range(3)]
    return MergeRule.V, chosen


def _next_step_two_colors(config: BallBoxConfig) -> Tuple[MergeRule, List[int]]:
    counts = config.counts
    for a in range(config.box_count):
        for color in range(2):
            if counts[a][color] >= 2:
                partners = _boxes_with(config, 1 - color, [a])
                if partners:
                    return MergeRule.I, [a, partners[0]]
    bicolored = [a for a in range(config.box_count) if len(config.colors_in(a)) == 2]
    if len(bicolored) >= 2:
        return MergeRule.II, bicolored[:2]
    if bicolored:
        a = bicolored[0]
        return MergeRule.VI, [
            a,
            _boxes_with(config, 0, [a])[0],
            _boxes_with(config, 1, [a])[0],
        ]
    many = 0 if config.color_totals[0] >= 3 else 1
    return MergeRule.VII, (
        _boxes_with(config, many)[:3] + _boxes_with(config, 1 - many)[:2]
    )


def merge_to_indiscrete(config: BallBoxConfig, d: int) -> List[MergeStep]:
    """
    Merge every box into one, never lowering the dimension.

    With three or more colours a box holding three colours absorbs the rest
    by rule (iv); it is built from a box with a repeated colour (rule (i)), a
    two-colour box (rule (iii)), or three singletons (rule (v)). With two
    colours a box with a repeated colour absorbs the rest by rule (i); it is
    built from two two-colour boxes (rule (ii)), a two-colour box and two
    singletons (rule (vi)), or five singletons (rule (vii)).

    Args:
        config (BallBoxConfig): Any configuration of a covered graph.
        d (int): Ambient dimension, at least 3.

    Returns:
        list[MergeStep]: The steps; empty if there is already one box.

    Raises:
        HypothesisError: If d < 3 or the graph is acyclic or K_{2,2}.
        InconsistencyError: If a step ever lowers the dimension.
    """
    check_merge_hypotheses(config.color_totals, d)
    chooser = (
        _next_step_two_colors if config.color_count == 2 else _next_step_many_colors
    )
    steps = []
    while config.box_count > 1:
        rule, boxes = chooser(config)
        merged, gain = apply_merge_rule(config, rule, boxes, d)
        if gain < 0:
            raise InconsistencyError(
                f"rule ({rule.label}) lowered the dimension by {-gain}",
                details={"config": config.to_json(), "boxes": boxes},
            )
        steps.append(MergeStep(rule, tuple(boxes), gain, merged))
        config = merged
    log.debug("Merged into one box in %d steps", len(steps))
    return steps


_WITNESS_ROWS = {
    MergeRule.I: lambda c, o, g: [{c: 2}, {o: 1}],
    MergeRule.II: lambda c, o, g: [{c: 1, o: 1}, {c: 1, o: 1}],
    MergeRule.III: lambda c, o, g: [{c: 1, o: 1}, {g: 1}],
    MergeRule.IV: lambda c, o, g: [{c: 1, o: 1, g: 1}, {c: 1}],
    MergeRule.V: lambda c, o, g: [{c: 1}, {o: 1}, {g: 1}],
    MergeRule.VI: lambda c, o, g: [{c: 1, o: 1}, {c: 1}, {o: 1}],
    MergeRule.VII: lambda c, o, g: [{c: 1}, {c: 1}, {c: 1}, {o: 1}, {o: 1}],
}

# rules whose pattern only uses the colours c and o
TWO_COLOR_RULES = frozenset({MergeRule.I, MergeRule.II, MergeRule.VI, MergeRule.VII})


def random_rule_witness(
    rule: MergeRule,
    rng: np.random.Generator,
    colors: Optional[int] = None,
    extra_balls: int = 3,
    extra_boxes: int = 2,
) -> Tuple[BallBoxConfig, List[int]]:
    """
    A random configuration in which ``boxes`` satisfy ``rule``.

    The rule's minimal pattern is placed on randomly chosen colours, then up
    to ``extra_balls`` random balls are added to its boxes and up to
    ``extra_boxes`` extra random boxes are added; box order is shuffled.
    Rules in ``TWO_COLOR_RULES`` are also drawn with only two colours; the
    others need at least three.

    Returns:
        tuple[BallBoxConfig, list[int]]: The configuration and the box indices,
        in rule order.
    """
    fewest = 2 if rule in TWO_COLOR_RULES else 3
    colors = colors if colors is not None else int(rng.integers(fewest, 6))
    if colors < fewest:
        raise ParameterError(
            f"random witnesses for rule ({rule.label}) use at least {fewest} colours"
        )
    chosen = [int(x) for x in rng.permutation(colors)]
    c, o, g = chosen[0], chosen[1], chosen[2 % colors]
    rows = []
    for pattern in _WITNESS_ROWS[rule](c, o, g):
        row = np.zeros(colors, dtype=np.int64)
        for color, amount in pattern.items():
            row[color] += amount
        rows.append(row)
    pattern_count = len(rows)
    for _ in range(int(rng.integers(0, extra_balls + 1))):
        rows[int(rng.integers(0, pattern_count))][int(rng.integers(0, colors))] += 1
    for _ in range(int(rng.integers(0, extra_boxes + 1))):
        row = np.zeros(colors, dtype=np.int64)
        row[int(rng.integers(0, colors))] += 1
        rows.append(row)
    for color in range(colors):
        if not any(row[color] for row in rows):
            rows[int(rng.integers(0, len(rows)))][color] += 1
    order = [int(i) for i in rng.permutation(len(rows))]
    position = {old: new for new, old in enumerate(order)}
    config = BallBoxConfig([rows[old] for old in order])
    return config, [position[i] for i in range(pattern_count)]
