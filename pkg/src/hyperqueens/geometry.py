"""Chess spaces of dimension d and side n, and the queen attack model.

A queen at q attacks every cell q + s*delta (s >= 1) that stays on the
board, for every direction delta in {-1, 0, 1}^d other than zero.  Cells
are indexed mixed-radix with coordinate 1 as the least significant digit;
every bitset in the package uses that index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidArgumentError, ResourceCapError

DEFAULT_MAX_CELLS = 2 ** 24

Position = tuple[int, ...]
AttackVector = tuple[int, ...]


@dataclass(frozen=True)
class BoardSpec:
    dimension: int
    size: int
    max_cells: int = field(default=DEFAULT_MAX_CELLS, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InvalidArgumentError(f"dimension must be >= 1, got {self.dimension}")
        if self.size < 1:
            raise InvalidArgumentError(f"size must be >= 1, got {self.size}")
        if self.cell_count > self.max_cells:
            raise ResourceCapError(
                f"board {self.size}^{self.dimension} has {self.cell_count} cells, "
                f"cap is {self.max_cells}"
            )

    @property
    def cell_count(self) -> int:
        return self.size ** self.dimension

    @property
    def full_mask(self) -> int:
        return (1 << self.cell_count) - 1

    def contains(self, p: Sequence[int]) -> bool:
        return len(p) == self.dimension and all(0 <= c < self.size for c in p)

    def check_position(self, p: Sequence[int]) -> Position:
        if len(p) != self.dimension:
            raise InvalidArgumentError(
                f"position {tuple(p)} has {len(p)} coordinates, board has {self.dimension}"
            )
        if not all(0 <= c < self.size for c in p):
            raise InvalidArgumentError(f"position {tuple(p)} is off a board of size {self.size}")
        return tuple(p)

    def positions(self) -> Iterator[Position]:
        """All cells in ascending index order."""
        for i in range(self.cell_count):
            yield decode(self, i)


def _check_dimension(d: int) -> None:
    if d < 1:
        raise InvalidArgumentError(f"dimension must be >= 1, got {d}")


def enumerate_attack_vectors(d: int) -> list[AttackVector]:
    """All 3^d - 1 nonzero directions, lexicographic with -1 < 0 < +1."""
    _check_dimension(d)
    return [v for v in itertools.product((-1, 0, 1), repeat=d) if any(v)]


def canonical_line(v: Sequence[int]) -> AttackVector:
    """Representative of the pair {v, -v}: first nonzero delta is +1."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-c for c in v)
    raise InvalidArgumentError("zero vector is not an attack direction")


def enumerate_attack_lines(d: int) -> list[AttackVector]:
    return [v for v in enumerate_attack_vectors(d) if canonical_line(v) == v]


def attack_line_count(d: int) -> int:
    _check_dimension(d)
    return (3 ** d - 1) // 2


def _check_direction(board: BoardSpec, direction: Sequence[int]) -> AttackVector:
    if len(direction) != board.dimension or any(x not in (-1, 0, 1) for x in direction):
        raise InvalidArgumentError(f"{tuple(direction)} is not an attack vector for d={board.dimension}")
    if not any(direction):
        raise InvalidArgumentError("zero vector is not an attack direction")
    return tuple(direction)


@dataclass(frozen=True)
class Ray:
    origin: Position
    direction: AttackVector
    length: int

    def cells(self) -> list[Position]:
        return [
            tuple(q + s * dq for q, dq in zip(self.origin, self.direction))
            for s in range(1, self.length + 1)
        ]


def ray(board: BoardSpec, origin: Sequence[int], direction: Sequence[int]) -> Ray:
    origin = board.check_position(origin)
    direction = _check_direction(board, direction)
    last = board.size - 1
    length = min(last - q if dq > 0 else q for q, dq in zip(origin, direction) if dq)
    return Ray(origin, direction, length)


def attacks(board: BoardSpec, p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff distinct cells p and q lie on a common attack line."""
    p = board.check_position(p)
    q = board.check_position(q)
    steps = {abs(a - b) for a, b in zip(p, q)}
    steps.discard(0)
    return len(steps) == 1


def attacked_set(board: BoardSpec, q: Sequence[int]) -> set[Position]:
    q = board.check_position(q)
    out: set[Position] = set()
    for v in enumerate_attack_vectors(board.dimension):
        out.update(ray(board, q, v).cells())
    return out


def encode(board: BoardSpec, p: Sequence[int]) -> int:
    p = board.check_position(p)
    index = 0
    for c in reversed(p):
        index = index * board.size + c
    return index


def decode(board: BoardSpec, i: int) -> Position:
    if not 0 <= i < board.cell_count:
        raise InvalidArgumentError(f"cell index {i} outside [0, {board.cell_count})")
    coords = []
    for _ in range(board.dimension):
        i, c = divmod(i, board.size)
        coords.append(c)
    return tuple(coords)


def parse_position(text: str) -> Position:
    """Parse "3,4,0" (coordinate 1 first); whitespace is ignored."""
    parts = "".join(text.split()).split(",")
    try:
        coords = tuple(int(x) for x in parts)
    except ValueError:
        raise InvalidArgumentError(f"bad position {text!r}") from None
    if any(c < 0 for c in coords):
        raise InvalidArgumentError(f"bad position {text!r}")
    return coords


def format_position(p: Sequence[int]) -> str:
    return ",".join(str(c) for c in p)


@lru_cache(maxsize=64)
def _cover_masks(dimension: int, size: int) -> tuple[int, ...]:
    board = BoardSpec(dimension, size, max_cells=size ** dimension)
    n = size
    # index step along each axis, so a ray walk is pure integer arithmetic
    strides = [n ** k for k in range(dimension)]
    vectors = enumerate_attack_vectors(dimension)
    steps = [sum(dq * st for dq, st in zip(v, strides)) for v in vectors]
    masks = []
    for i, p in enumerate(board.positions()):
        m = 1 << i
        for v, step in zip(vectors, steps):
            length = min(n - 1 - q if dq > 0 else q for q, dq in zip(p, v) if dq)
            j = i
            for _ in range(length):
                j += step
                m |= 1 << j
        masks.append(m)
    return tuple(masks)


def cover_masks(board: BoardSpec) -> tuple[int, ...]:
    """Per cell index, the bitset of cells it occupies or attacks.

    Because attack is symmetric, bit j of masks[i] also says that a queen
    on j covers i.
    """
    return _cover_masks(board.dimension, board.size)
