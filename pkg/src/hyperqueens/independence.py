"""Pairwise non-attacking queen placements: decide, find, count.

Queens are placed in strictly increasing cell order, so every set is
produced once and the first one found is the lexicographically least.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .domination import Placement
from .errors import InvalidArgumentError
from .geometry import BoardSpec, attacks, cover_masks, decode


def is_independent(board: BoardSpec, placement: Placement) -> bool:
    return not any(attacks(board, a, b) for a, b in combinations(placement.queens, 2))


def _check_m(board: BoardSpec, m: int) -> None:
    if not 0 <= m <= board.cell_count:
        raise InvalidArgumentError(f"queen count must be in [0, {board.cell_count}], got {m}")


class _Backtracker:
    def __init__(self, board: BoardSpec, m: int, first_only: bool):
        self.masks = cover_masks(board)
        self.m = m
        self.first_only = first_only
        self.count = 0
        self.stack: list[int] = []
        self.witness: Optional[list[int]] = None

    def run(self, allowed: int) -> None:
        self._place(allowed, self.m)

    def _place(self, allowed: int, need: int) -> bool:
        if need == 0:
            self.count += 1
            if self.witness is None:
                self.witness = list(self.stack)
            return self.first_only
        if allowed.bit_count() < need:
            return False
        if need == 1 and not self.first_only:
            self.count += allowed.bit_count()
            return False
        masks = self.masks
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            # later queens only go above i and off everything i attacks
            allowed ^= low
            self.stack.append(i)
            if self._place(allowed & ~masks[i], need - 1):
                return True
            self.stack.pop()
            if allowed.bit_count() < need:
                break
        return False


def exists_independent(board: BoardSpec, m: int) -> Optional[Placement]:
    _check_m(board, m)
    bt = _Backtracker(board, m, first_only=True)
    bt.run(board.full_mask)
    if bt.witness is None:
        return None
    return Placement(board, tuple(decode(board, i) for i in bt.witness))


def count_independent(board: BoardSpec, m: int) -> int:
    """Number of m-element cell sets with no two queens attacking."""
    _check_m(board, m)
    bt = _Backtracker(board, m, first_only=False)
    bt.run(board.full_mask)
    return bt.count
