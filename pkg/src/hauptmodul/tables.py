"""Reference data for the 44 genus-zero levels: weights, integrality
thresholds, published elimination statistics and generator weight sets."""

from __future__ import annotations

from typing import NamedTuple


class Run(NamedTuple):
    M: int
    equations: int
    pole: int


class TableRow(NamedTuple):
    weight: int  # weight k_N of the Kronecker limit function
    kappa: int  # integrality threshold
    jst2: Run
    jst3: Run


def _row(k, kappa, j2, j3):
    return TableRow(k, kappa, Run(*j2), Run(*j3))


TABLE1: dict[int, TableRow] = {
    1: _row(12, 19, (1, 5, 1), (1, 4, 1)),
    2: _row(8, 47, (1, 3, 1), (1, 2, 1)),
    3: _row(12, 48, (1, 5, 2), (1, 4, 2)),
    5: _row(4, 19, (1, 2, 1), (3, 4, 3)),
    6: _row(4, 60, (1, 2, 1), (3, 4, 3)),
    7: _row(12, 19, (1, 5, 4), (2, 21, 8)),
    10: _row(8, 75, (2, 10, 6), (2, 7, 6)),
    11: _row(4, 19, (3, 8, 6), (9, 88, 18)),
    13: _row(12, 19, (2, 26, 14), (3, 88, 21)),
    14: _row(4, 47, (3, 8, 6), (6, 21, 12)),
    15: _row(4, 96, (3, 8, 6), (5, 12, 10)),
    17: _row(4, 19, (4, 15, 12), (9, 88, 27)),
    19: _row(12, 19, (3, 114, 30), (4, 320, 40)),
    21: _row(12, 53, (2, 26, 16), (2, 21, 16)),
    22: _row(4, 47, (4, 15, 12), (6, 21, 18)),
    23: _row(4, 19, (5, 27, 20), (15, 1039, 60)),
    26: _row(8, 47, (3, 31, 21), (4, 55, 28)),
    29: _row(4, 19, (6, 48, 30), (15, 1039, 75)),
    30: _row(4, 127, (4, 15, 12), (6, 21, 18)),
    31: _row(12, 19, (4, 434, 64), (5, 1039, 80)),
    33: _row(4, 48, (5, 27, 20), (8, 55, 32)),
    34: _row(8, 47, (3, 31, 27), (4, 55, 36)),
    35: _row(4, 19, (5, 27, 20), (7, 34, 28)),
    38: _row(4, 47, (5, 27, 25), (10, 137, 50)),
    39: _row(12, 48, (3, 114, 42), (3, 88, 42)),
    41: _row(4, 19, (7, 82, 49), (21, 8591, 147)),
    42: _row(4, 108, (5, 27, 20), (7, 34, 28)),
    46: _row(4, 47, (6, 48, 36), (14, 708, 84)),
    47: _row(4, 19, (8, 137, 64), (27, 56224, 216)),
    51: _row(4, 48, (6, 48, 36), (11, 210, 66)),
    55: _row(4, 19, (6, 48, 36), (8, 55, 48)),
    59: _row(4, 19, (9, 225, 90), (33, 310962, 330)),
    62: _row(4, 47, (7, 82, 56), (18, 3094, 144)),
    66: _row(4, 60, (6, 48, 36), (8, 55, 48)),
    69: _row(4, 48, (7, 82, 56), (14, 708, 112)),
    70: _row(4, 181, (6, 48, 36), (8, 55, 48)),
    71: _row(4, 19, (10, 362, 120), (39, 1512301, 468)),
    78: _row(4, 81, (6, 48, 42), (9, 88, 63)),
    87: _row(4, 48, (7, 82, 70), (17, 2167, 170)),
    94: _row(4, 47, (8, 137, 96), (26, 41646, 312)),
    95: _row(4, 19, (7, 82, 70), (11, 210, 110)),
    105: _row(4, 181, (7, 82, 56), (9, 88, 72)),
    110: _row(4, 89, (7, 82, 63), (9, 88, 81)),
    119: _row(4, 19, (8, 137, 96), (10, 137, 120)),
}

GENUS_ZERO_LEVELS: tuple[int, ...] = tuple(TABLE1)

# Eisenstein weights listed as generating sets for each level.
TABLE2_WEIGHTS: dict[int, tuple[int, ...]] = {
    1: (4, 6),
    2: (4, 6, 8),
    3: (4, 6, 12),
    5: (4, 6, 8, 12),
    6: (4, 6, 8, 12),
    7: (4, 6, 8, 10, 12),
    10: (4, 6, 8, 10, 12, 16),
    11: (4, 6, 8, 10, 12),
    13: (4, 6, 8, 10, 12),
    14: (4, 6, 8, 10, 12),
    15: (4, 6, 8, 10, 12, 14, 16),
    17: (4, 6, 8, 10, 12),
    19: (4, 6, 8, 10, 12),
    21: (4, 6, 8, 10, 12, 14, 16),
    22: (4, 6, 8, 10, 12, 14, 16, 18),
    23: (4, 6, 8, 10, 12),
    26: (4, 6, 8, 10, 12, 14),
    29: (4, 6, 8, 10, 12),
    30: (4, 6, 8, 10, 12, 14, 16, 18),
    31: (4, 6, 8, 10, 12),
    33: (4, 6, 8, 10, 12, 14),
    34: (4, 6, 8, 10, 12, 14, 16),
    35: (4, 6, 8, 10, 12, 14, 16, 18),
    38: (4, 6, 8, 10, 12, 14),
    39: (4, 6, 8, 10, 12, 14),
    41: (4, 6, 8, 10, 12),
    42: (4, 6, 8, 10, 12, 14, 16, 18),
    46: (4, 6, 8, 10, 12),
    47: (4, 6, 8, 10, 12),
    51: (4, 6, 8, 10, 12, 14),
    55: (4, 6, 8, 10, 12, 14, 16, 18, 20, 22),
    59: (4, 6, 8, 10, 12),
    62: (4, 6, 8, 10, 12),
    66: (4, 6, 8, 10, 12, 14, 16, 18, 20, 22),
    69: (4, 6, 8, 10, 12),
    70: (4, 6, 8, 10, 12, 14, 16, 18, 20, 22),
    71: (4, 6, 8, 10, 12),
    78: (4, 6, 8, 10, 12, 14, 16, 18),
    87: (4, 6, 8, 10, 12),
    94: (4, 6, 8, 10, 12),
    95: (4, 6, 8, 10, 12, 14, 16),
    105: (4, 6, 8, 10, 12, 14, 16, 18, 20),
    110: (4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26),
    119: (4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24),
}
