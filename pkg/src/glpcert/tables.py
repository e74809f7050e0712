"""Bundled reference tables for the r <= 8 survey.

WITNESS_TABLE: the 24 (r, n) pairs in the box 4 <= n <= 48741, 0 <= r <= 8
that the carry and prime-interval criteria leave open, each with a prime ell
whose reduction is irreducible (None for the one pair whose square
discriminant rules out any such prime).

JORDAN_TABLE: the 47 (r, n) pairs with 8 <= n < 48 where no prime lies in
((n+r)/2, n-2), each with the Jordan prime q in (n/2, n-2) whose polygon
slope denominator certifies alternating-group containment.
"""

WITNESS_TABLE: tuple[tuple[int, int, int | None], ...] = (
    (3, 6, 13),
    (4, 4, 17),
    (4, 6, 29),
    (5, 4, None),
    (5, 6, 23),
    (5, 20, 149),
    (6, 4, 13),
    (6, 6, 31),
    (6, 10, 17),
    (6, 12, 29),
    (6, 20, 311),
    (7, 4, 13),
    (7, 6, 47),
    (7, 10, 47),
    (7, 12, 47),
    (7, 20, 271),
    (7, 42, 79),
    (8, 6, 17),
    (8, 8, 29),
    (8, 10, 137),
    (8, 12, 173),
    (8, 24, 191),
    (8, 42, 113),
    (8, 120, 613),
)

JORDAN_TABLE: tuple[tuple[int, int, int], ...] = (
    (1, 9, 5),
    (1, 13, 7),
    (2, 8, 5),
    (2, 9, 5),
    (2, 12, 7),
    (2, 13, 7),
    (3, 8, 5),
    (3, 9, 5),
    (3, 11, 7),
    (3, 12, 7),
    (3, 13, 7),
    (4, 8, 5),
    (4, 9, 5),
    (4, 10, 7),
    (4, 11, 7),
    (4, 12, 7),
    (4, 13, 7),
    (5, 8, 5),
    (5, 9, 5),
    (5, 10, 7),
    (5, 11, 7),
    (5, 12, 7),
    (5, 13, 7),
    (6, 8, 5),
    (6, 9, 5),
    (6, 10, 7),
    (6, 11, 7),
    (6, 12, 7),
    (6, 13, 7),
    (7, 8, 5),
    (7, 9, 5),
    (7, 10, 7),
    (7, 11, 7),
    (7, 12, 7),
    (7, 13, 7),
    (7, 15, 11),
    (7, 19, 11),
    (8, 8, 5),
    (8, 9, 5),
    (8, 10, 7),
    (8, 11, 7),
    (8, 12, 7),
    (8, 13, 7),
    (8, 14, 11),
    (8, 15, 11),
    (8, 18, 11),
    (8, 19, 11),
)

WITNESS_PAIRS = frozenset((r, n) for r, n, _ in WITNESS_TABLE)
JORDAN_PAIRS = frozenset((r, n) for r, n, _ in JORDAN_TABLE)
