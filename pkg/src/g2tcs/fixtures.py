"""Reference datasets shipped with the catalog.

``TABLE4`` and ``TABLE5`` record the expected invariants of the two
published match listings; ``EXAMPLES`` records the worked configurations
(block pair, angle, pushout Gram) together with their expected invariants.
Linking classes are stored in the convention computed by this package
(see the project notes for the two entries whose printed sign conflicts
with the computation).
"""

from fractions import Fraction as F
from typing import Dict, Optional, Sequence, Tuple

__all__ = ["TABLE4", "TABLE5", "EXAMPLES", "Table4Row", "Table5Row",
           "ExampleCase", "table5_pushout"]

Linking = Optional[Tuple[Tuple[F, ...], ...]]

# (plus_id, minus_id, b3, d, torsion_factors, linking)
# sorted by (b3, plus_id, minus_id) to match the search output order.
Table4Row = Tuple[str, str, int, int, Tuple[int, ...], Linking]

TABLE4: Tuple[Table4Row, ...] = (
    ("3.22_4", "3.8_1_16", 60, 24, (4,), ((F(1, 4),),)),
    ("3.21", "3.8_1_18", 64, 24, (2,), ((F(1, 2),),)),
    ("3.22_3", "3.8_1_12", 68, 6, (3,), ((F(1, 3),),)),
    ("3.22_2", "3.8_1_18", 72, 12, (2,), ((F(1, 2),),)),
    ("3.22_4", "3.8_2_2", 74, 12, (4,), ((F(1, 4),),)),
    ("3.21", "3.8_1_8", 78, 4, (2,), ((F(1, 2),),)),
    ("3.21", "3.8_2_4", 78, 24, (2,), ((F(1, 2),),)),
    ("5.15_1", "3.8_1_16", 82, 4, (), None),
    ("3.22_2", "3.8_1_8", 86, 12, (2,), ((F(1, 2),),)),
    ("3.22_2", "3.8_2_4", 86, 8, (2,), ((F(1, 2),),)),
    ("3.21", "3.8_2_1", 92, 2, (2,), ((F(1, 2),),)),
    ("3.22_1", "3.8_1_16", 92, 4, (), None),
    ("5.15_1", "3.8_2_2", 96, 2, (), None),
    ("3.22_2", "3.8_2_1", 100, 6, (2,), ((F(1, 2),),)),
    ("3.22_4", "3.8_1_4", 102, 4, (4,), ((F(1, 4),),)),
    ("3.22_4", "3.8_4_1", 102, 2, (4,), ((F(1, 4),),)),
    ("3.22_1", "3.8_2_2", 106, 2, (), None),
    ("5.15_1", "3.8_1_4", 124, 2, (), None),
    ("5.15_1", "3.8_4_1", 124, 8, (), None),
    ("3.22_1", "3.8_1_4", 134, 6, (), None),
    ("3.22_1", "3.8_4_1", 134, 24, (), None),
    ("3.21", "3.8_1_2", 148, 12, (2,), ((F(1, 2),),)),
    ("3.21", "5.15_1", 148, 4, (2,), ((F(1, 2),),)),
    ("3.22_2", "3.8_1_2", 156, 8, (2,), ((F(1, 2),),)),
    ("3.22_2", "5.15_1", 156, 8, (2,), ((F(1, 2),),)),
)

# (example, theta, plus_id, minus_id, b3, d, torsion_factors, linking, nu_bar)
Table5Row = Tuple[str, str, str, str, int, int, Tuple[int, ...], Linking, int]

TABLE5: Tuple[Table5Row, ...] = (
    ("8.1", "1/4pi", "3.28", "3.9_3", 97, 2, (), None, -36),
    ("8.2", "1/4pi", "5.14", "3.9_10", 77, 2, (), None, -36),
    ("8.3", "1/4pi", "3.27_2", "3.9_10", 57, 2, (2, 2),
     ((F(1, 2), F(0)), (F(0), F(1, 2))), -36),
    ("8.4", "1/4pi", "3.27_4", "3.9_10", 57, 2, (2, 2),
     ((F(0), F(1, 2)), (F(1, 2), F(0))), -36),
    ("8.5", "1/4pi", "3.26_2", "3.13_2", 45, 2, (7,), ((F(6, 7),),), -36),
    ("8.6", "1/4pi", "5.15_3", "3.10", 98, 6, (), None, -33),
    ("8.7", "1/4pi", "3.22_1", "3.9_10", 91, 4, (), None, -36),
    ("8.8", "1/4pi", "5.15_2", "3.9_27", 92, 4, (), None, -33),
    ("8.9", "1/4pi", "3.27_3", "3.9_17", 60, 6, (), None, -33),
    ("8.10", "1/4pi", "3.25_4", "3.9_17", 60, 6, (), None, -39),
    ("8.11", "1/4pi", "3.22_3", "3.23_6", 71, 6, (3,), ((F(1, 3),),), -36),
    ("8.12", "-1/4pi", "3.23_6", "3.8_2_3", 71, 6, (3,), ((F(1, 3),),), 36),
    ("8.15", "1/6pi", "3.22_4", "3.22_3", 54, 6, (), None, -51),
    ("8.15", "1/6pi", "3.22_3", "3.22_4", 54, 2, (3,), ((F(1, 3),),), -51),
    ("8.15", "1/6pi", "5.15_1", "3.22_3", 76, 6, (), None, -51),
    ("8.15", "1/6pi", "3.22_3", "5.15_1", 76, 24, (3,), ((F(1, 3),),), -51),
    ("8.15", "1/6pi", "3.22_1", "3.22_3", 86, 6, (), None, -51),
    ("8.15", "1/6pi", "3.22_3", "3.22_1", 86, 4, (3,), ((F(1, 3),),), -51),
    ("8.16", "1/6pi", "3.28", "3.28", 109, 2, (), None, -48),
    ("8.17", "1/6pi", "3.28", "3.28", 109, 8, (), None, -48),
    ("8.18", "1/6pi", "3.28", "3.27_5", 77, 2, (), None, -48),
    ("8.19", "1/6pi", "3.28", "3.26_5", 77, 4, (), None, -48),
    ("8.20", "1/6pi", "3.26_2", "3.22_3", 45, 2, (7,), ((F(6, 7),),), -48),
)

# name -> (plus_id, minus_id, theta, pushout rows, expected values)
# expected: (b2, b3, torsion_order, d_free, d_full, nu_bar)
ExampleCase = Tuple[str, str, str, Tuple[Tuple[int, ...], ...],
                    Tuple[int, int, int, int, int, int]]

EXAMPLES: Dict[str, ExampleCase] = {
    "8.1": ("3.28", "3.9_3", "1/4pi",
            ((2, 2, 2, 1), (2, 0, 2, 0), (2, 2, 4, 2), (1, 0, 2, 0)),
            (0, 97, 1, 2, 2, -36)),
    "8.2": ("5.14", "3.9_10", "1/4pi",
            ((0, 2, 4, 0), (2, 0, 1, 1), (4, 1, 8, 4), (0, 1, 4, 0)),
            (0, 77, 1, 2, 2, -36)),
    "8.3": ("3.27_2", "3.9_10", "1/4pi",
            ((4, 4, 4, 2), (4, 0, 4, 0), (4, 4, 8, 4), (2, 0, 4, 0)),
            (0, 57, 4, 2, 2, -36)),
    "8.4": ("3.27_4", "3.9_10", "1/4pi",
            ((8, 4, 6, 4), (4, 0, 2, 0), (6, 2, 8, 4), (4, 0, 4, 0)),
            (0, 57, 4, 2, 2, -36)),
    "8.5": ("3.26_2", "3.13_2", "1/4pi",
            ((4, 6, 6, 2), (6, 2, 2, 3), (6, 2, 4, 6), (2, 3, 6, 2)),
            (0, 45, 7, 2, 2, -36)),
    "8.6": ("5.15_3", "3.10", "1/4pi",
            ((2, 2, 2, 1, 1, 2), (2, 0, 2, 1, 1, 0), (2, 2, 0, 0, 2, 2),
             (1, 1, 0, 0, 2, 2), (1, 1, 2, 2, 0, 2), (2, 0, 2, 2, 2, 0)),
            (0, 98, 1, 6, 6, -33)),
    "8.7": ("3.22_1", "3.9_10", "1/4pi",
            ((2, 3, 1), (3, 8, 4), (1, 4, 0)),
            (0, 91, 1, 4, 4, -36)),
    "8.8": ("5.15_2", "3.9_27", "1/4pi",
            ((2, 2, 2, 3), (2, 0, 1, 1), (2, 1, 2, 5), (3, 1, 5, 4)),
            (0, 92, 1, 4, 4, -33)),
    "8.9": ("3.27_3", "3.9_17", "1/4pi",
            ((6, 4, 4, 5), (4, 0, 2, 2), (4, 2, 4, 7), (5, 2, 7, 6)),
            (0, 60, 1, 6, 6, -33)),
    "8.10": ("3.25_4", "3.9_17", "1/4pi",
             ((8, 8, 4, 6), (8, 6, 5, 4), (4, 5, 4, 7), (6, 4, 7, 6)),
             (0, 60, 1, 6, 6, -39)),
    "8.11": ("3.22_3", "3.23_6", "1/4pi",
             ((6, 3, 3), (3, 2, 4), (3, 4, 2)),
             (0, 71, 3, 6, 6, -36)),
    "8.12": ("3.23_6", "3.8_2_3", "-1/4pi",
             ((2, 4, 3), (4, 2, 3), (3, 3, 6)),
             (0, 71, 3, 6, 6, 36)),
    "8.14": ("3.23_8", "3.11", "1/4pi",
             ((4, 4, 5, 3), (4, 2, 2, 4), (5, 2, 4, 9), (3, 4, 9, 8)),
             (1, 49, 1, 12, 12, -39)),
    "8.15a": ("3.22_1", "3.22_3", "1/6pi",
              ((2, 3), (3, 6)), (0, 86, 1, 6, 6, -51)),
    "8.15b": ("3.22_3", "3.22_1", "1/6pi",
              ((6, 3), (3, 2)), (0, 86, 3, 4, 4, -51)),
    "8.16": ("3.28", "3.28", "1/6pi",
             ((2, 2, 2, 1), (2, 0, 1, 2), (2, 1, 2, 2), (1, 2, 2, 0)),
             (0, 109, 1, 2, 2, -48)),
    "8.17": ("3.28", "3.28", "1/6pi",
             ((2, 2, 2, 1), (2, 0, 3, 0), (2, 3, 2, 2), (1, 0, 2, 0)),
             (0, 109, 1, 8, 8, -48)),
    "8.18": ("3.28", "3.27_5", "1/6pi",
             ((2, 2, 4, 2), (2, 0, 3, 0), (4, 3, 10, 4), (2, 0, 4, 0)),
             (0, 77, 1, 2, 2, -48)),
    "8.19": ("3.28", "3.26_5", "1/6pi",
             ((2, 2, 4, 2), (2, 0, 3, 3), (4, 3, 10, 6), (2, 3, 6, 2)),
             (0, 77, 1, 4, 4, -48)),
    "8.20": ("3.26_2", "3.22_3", "1/6pi",
             ((4, 6, 5), (6, 2, 4), (5, 4, 6)),
             (0, 45, 7, 2, 2, -48)),
}


def table5_pushout(row: Table5Row) -> Tuple[Tuple[int, ...], ...]:
    """Pushout Gram realising one TABLE5 row.

    Prefers the worked configuration with the row's label, then any worked
    configuration of the same block pair and angle, and finally the unique
    rank-1 pushout determined by the generator squares.
    """
    example, theta, plus_id, minus_id = row[0], row[1], row[2], row[3]
    case = EXAMPLES.get(example)
    if case is not None and case[:3] == (plus_id, minus_id, theta):
        return case[3]
    for case in EXAMPLES.values():
        if case[:3] == (plus_id, minus_id, theta):
            return case[3]
    from .configuration import rank1_pushout
    from .catalog import load_catalog
    cat = load_catalog()
    n_plus = cat.get(plus_id).N.gram[0][0]
    n_minus = cat.get(minus_id).N.gram[0][0]
    push = rank1_pushout(n_plus, n_minus, theta)
    if push is None:
        raise ValueError(f"no rank-1 pushout for row {example}")
    return push.gram
