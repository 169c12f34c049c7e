"""
Set partitions of a vertex set in restricted-growth form.

A partition of {0, ..., n-1} is stored as its restricted-growth string: entry
v is the block index of vertex v, blocks are numbered in order of their first
vertex, so rgs[0] == 0 and every new index is one more than the largest seen
so far. This makes the representation canonical and gives a natural
lexicographic order, which is the order every listing in the package uses.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, List, Sequence, Tuple

from src.config import check_vertex_limit
from src.errors import ParameterError

MAX_PARTITION_VERTICES = 13


@dataclass(frozen=True, order=True)
class SetPartition:
    """
    A set partition in restricted-growth form.

    Attributes:
        rgs (tuple[int]): Block index of each vertex.
    """

    rgs: Tuple[int, ...]

    def __post_init__(self):
        rgs = tuple(int(b) for b in self.rgs)
        object.__setattr__(self, "rgs", rgs)
        if not rgs:
            raise ParameterError("a set partition needs at least one vertex")
        highest = -1
        for block in rgs:
            if block < 0 or block > highest + 1:
                raise ParameterError(f"{list(rgs)} is not a restricted-growth string")
            highest = max(highest, block)

    @property
    def size(self) -> int:
        return len(self.rgs)

    @property
    def block_count(self) -> int:
        return max(self.rgs) + 1

    @property
    def blocks(self) -> List[Tuple[int, ...]]:
        """Blocks as sorted vertex tuples, ordered by smallest vertex."""
        grouped = [[] for _ in range(self.block_count)]
        for vertex, block in enumerate(self.rgs):
            grouped[block].append(vertex)
        return [tuple(block) for block in grouped]

    def block_masks(self) -> List[int]:
        masks = [0] * self.block_count
        for vertex, block in enumerate(self.rgs):
            masks[block] |= 1 << vertex
        return masks

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of ``self`` lies inside a block of ``other``."""
        if self.size != other.size:
            return False
        image = {}
        for mine, theirs in zip(self.rgs, other.rgs):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def is_discrete(self) -> bool:
        return self.block_count == self.size

    def is_indiscrete(self) -> bool:
        return self.block_count == 1

    @classmethod
    def from_blocks(
        cls, blocks: Iterable[Iterable[int]], n: int = None
    ) -> "SetPartition":
        """
        Build a partition from explicit blocks.

        Raises:
            ParameterError: If the blocks overlap, are empty, or miss a vertex.
        """
        blocks = [sorted(int(v) for v in block) for block in blocks]
        if any(not block for block in blocks):
            raise ParameterError("partition blocks must be nonempty")
        covered = sorted(v for block in blocks for v in block)
        size = len(covered) if n is None else n
        if covered != list(range(size)):
            raise ParameterError(
                f"blocks {blocks} do not partition the vertices 0..{size - 1}"
            )
        labels = [0] * size
        for index, block in enumerate(sorted(blocks)):
            for vertex in block:
                labels[vertex] = index
        return cls(tuple(labels))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Normalise any block labelling to restricted-growth form."""
        renumber = {}
        return cls(tuple(renumber.setdefault(label, len(renumber)) for label in labels))

    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        return cls(tuple(range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> "SetPartition":
        return cls((0,) * n)

    def to_json(self) -> List[int]:
        return list(self.rgs)

    def __str__(self):
        return "|".join(",".join(str(v) for v in block) for block in self.blocks)


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """
    Every partition of {0, ..., n-1}, once each, in lexicographic
    restricted-growth order.

    Args:
        n (int): Number of vertices, 1 <= n <= 13.

    Raises:
        ParameterError: If n < 1.
        SizeLimitError: If n > 13.
    """
    if n < 1:
        raise ParameterError(f"enumerate_partitions needs n >= 1, got {n}")
    check_vertex_limit(n, MAX_PARTITION_VERTICES, "enumerate_partitions")
    rgs = [0] * n
    # prefix maxima: ceiling[i] = max(rgs[:i]) + 1 is the largest value rgs[i] may take
    while True:
        yield SetPartition(tuple(rgs))
        position = n - 1
        while position > 0:
            ceiling = max(rgs[:position]) + 1
            if rgs[position] < ceiling:
                rgs[position] += 1
                for later in range(position + 1, n):
                    rgs[later] = 0
                break
            position -= 1
        else:
            return


def sub_partitions(vertices: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    """Every partition of an arbitrary vertex list, as lists of blocks."""
    vertices = list(vertices)
    if not vertices:
        yield []
        return
    for partition in enumerate_partitions(len(vertices)):
        yield [tuple(vertices[i] for i in block) for block in partition.blocks]


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """Number of set partitions of an n-element set."""
    if n < 0:
        raise ParameterError(f"bell_number needs n >= 0, got {n}")
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell_number(k) for k in range(n))
