"""Queens in d-dimensional chess spaces: attack geometry, domination, independence."""

from .domination import (
    CoverageMask,
    DominationResult,
    Placement,
    coverage,
    greedy_dominating,
    insufficiency_check,
    is_dominating,
    lower_bound,
    min_dominating,
    min_insufficient_n,
    reported_upper_bound,
)
from .errors import InvalidArgumentError, ResourceCapError
from .geometry import (
    DEFAULT_MAX_CELLS,
    BoardSpec,
    Ray,
    attack_line_count,
    attacked_set,
    attacks,
    decode,
    encode,
    enumerate_attack_lines,
    enumerate_attack_vectors,
    ray,
)
from .independence import count_independent, exists_independent, is_independent

__all__ = [
    "BoardSpec", "CoverageMask", "DEFAULT_MAX_CELLS", "DominationResult",
    "InvalidArgumentError", "Placement", "Ray", "ResourceCapError",
    "attack_line_count", "attacked_set", "attacks", "count_independent",
    "coverage", "decode", "encode", "enumerate_attack_lines",
    "enumerate_attack_vectors", "exists_independent", "greedy_dominating",
    "insufficiency_check", "is_dominating", "is_independent", "lower_bound",
    "min_dominating", "min_insufficient_n", "ray", "reported_upper_bound",
]
