"""Coverage, bounds and exact minimum domination by queens.

The exact solver deepens on the queen count starting from the counting
lower bound; at each depth it branches on the lowest uncovered cell over
every cell able to cover it.  The first depth that succeeds is optimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidArgumentError
from .geometry import BoardSpec, Position, cover_masks, decode, encode


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_nd(n: int, d: int) -> None:
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"need n >= 1 and d >= 1, got n={n}, d={d}")


@dataclass(frozen=True)
class Placement:
    board: BoardSpec
    queens: tuple[Position, ...]

    @classmethod
    def of(cls, board: BoardSpec, queens: Iterable[Sequence[int]]) -> "Placement":
        """Validate, deduplicate and sort queens by cell index."""
        cells = {encode(board, q) for q in queens}
        return cls(board, tuple(decode(board, i) for i in sorted(cells)))

    def indices(self) -> list[int]:
        return [encode(self.board, q) for q in self.queens]

    def __len__(self) -> int:
        return len(self.queens)


@dataclass(frozen=True)
class CoverageMask:
    board: BoardSpec
    covered: int

    def count(self) -> int:
        return self.covered.bit_count()

    def is_full(self) -> bool:
        return self.covered == self.board.full_mask

    def __contains__(self, i: int) -> bool:
        return bool(self.covered >> i & 1)


@dataclass(frozen=True)
class DominationResult:
    board: BoardSpec
    gamma: int
    witness: Placement
    status: str  # "optimal" | "bounds-only"
    lb: int
    ub: int
    nodes_explored: int

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    def to_json(self) -> dict:
        return {
            "n": self.board.size,
            "d": self.board.dimension,
            "gamma": self.gamma,
            "status": self.status,
            "lb": self.lb,
            "ub": self.ub,
            "witness": [list(q) for q in self.witness.queens],
            "nodes": self.nodes_explored,
        }


def lower_bound(n: int, d: int) -> int:
    """ceil(2 n^(d-1) / (3^d - 1)), and never below one queen."""
    _check_nd(n, d)
    return max(1, _ceil_div(2 * n ** (d - 1), 3 ** d - 1))


def reported_upper_bound(n: int, d: int) -> int:
    """ceil(n^(d-1) / d), the value claimed as a trivial upper bound.

    This is an asserted figure, not a proven one; ``audit`` tests it
    against exact solutions and it is never used to prune.
    """
    _check_nd(n, d)
    return _ceil_div(n ** (d - 1), d)


def insufficiency_check(n: int, d: int, k: int) -> bool:
    """True iff 2 n^(d-k-1) > 3^d - 1, i.e. n^k queens cannot cover the board."""
    _check_nd(n, d)
    if k < 0 or k >= d:
        raise InvalidArgumentError(f"exponent k must satisfy 0 <= k <= d-1, got k={k}, d={d}")
    return 2 * n ** (d - k - 1) > 3 ** d - 1


def min_insufficient_n(d: int, k: int) -> int:
    """Smallest n for which n^k queens provably cannot dominate."""
    if d < 1 or k < 0 or k > d - 2:
        raise InvalidArgumentError(f"need 0 <= k <= d-2, got k={k}, d={d}")
    e = d - k - 1
    target = 3 ** d - 1
    lo, hi = 1, 1
    while 2 * hi ** e <= target:
        lo, hi = hi, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if 2 * mid ** e > target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def coverage(board: BoardSpec, placement: Placement) -> CoverageMask:
    masks = cover_masks(board)
    covered = 0
    for i in placement.indices():
        covered |= masks[i]
    return CoverageMask(board, covered)


def is_dominating(board: BoardSpec, placement: Placement) -> bool:
    return coverage(board, placement).is_full()


def greedy_dominating(board: BoardSpec) -> Placement:
    """Add the cell covering the most uncovered cells until all are covered.

    Ties go to the lowest index.
    """
    masks = cover_masks(board)
    uncovered = board.full_mask
    chosen = []
    while uncovered:
        best, best_gain = -1, -1
        for i, m in enumerate(masks):
            gain = (m & uncovered).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        chosen.append(best)
        uncovered &= ~masks[best]
    return Placement(board, tuple(decode(board, i) for i in sorted(chosen)))


class _BudgetExhausted(Exception):
    pass


class DominationSearch:
    """Single-use exact search state for one board.

    ``prune=False`` disables the coverage-cap cut; it exists so tests can
    compare pruned and unpruned searches.
    """

    def __init__(self, board: BoardSpec, node_budget: Optional[int] = None, prune: bool = True):
        if node_budget is not None and node_budget < 1:
            raise InvalidArgumentError(f"node budget must be positive, got {node_budget}")
        self.board = board
        self.node_budget = node_budget
        self.prune = prune
        self.masks = cover_masks(board)
        # the cells covering cell i are exactly the bits of masks[i]
        self.coverers = [_bits(m) for m in self.masks]
        # largest single-queen reach on this board; never more than n(3^d-1)/2
        self.reach = max(m.bit_count() for m in self.masks)
        self.nodes = 0

    def solve_depth(self, m: int) -> Optional[list[int]]:
        """Cell indices of an m-queen dominating set, or None if none exists."""
        chosen: list[int] = []
        if self._dfs(0, m, chosen):
            return sorted(chosen)
        return None

    def _dfs(self, covered: int, remaining: int, chosen: list[int]) -> bool:
        uncovered = self.board.full_mask & ~covered
        if not uncovered:
            return True
        if remaining == 0:
            return False
        if self.prune and uncovered.bit_count() > remaining * self.reach:
            return False
        if self.node_budget is not None and self.nodes >= self.node_budget:
            raise _BudgetExhausted
        self.nodes += 1
        target = (uncovered & -uncovered).bit_length() - 1
        masks = self.masks
        if remaining == 1:
            for c in self.coverers[target]:
                if not uncovered & ~masks[c]:
                    chosen.append(c)
                    return True
            return False
        for c in self.coverers[target]:
            chosen.append(c)
            if self._dfs(covered | masks[c], remaining - 1, chosen):
                return True
            chosen.pop()
        return False


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def min_dominating(
    board: BoardSpec, node_budget: Optional[int] = None, prune: bool = True
) -> DominationResult:
    """Exact domination number with witness, or bounds if the budget runs out."""
    search = DominationSearch(board, node_budget, prune)
    greedy = greedy_dominating(board)
    lb, ub = lower_bound(board.size, board.dimension), len(greedy)
    for m in range(lb, ub):
        try:
            found = search.solve_depth(m)
        except _BudgetExhausted:
            return DominationResult(board, ub, greedy, "bounds-only", m, ub, search.nodes)
        if found is not None:
            witness = Placement(board, tuple(decode(board, i) for i in found))
            return DominationResult(board, m, witness, "optimal", lb, ub, search.nodes)
    return DominationResult(board, ub, greedy, "optimal", lb, ub, search.nodes)
