"""Conway polynomials for small odd characteristics.

Coefficients are listed constant term first; the last entry is the leading 1.
Values taken from Frank Luebeck's published Conway polynomial tables.
"""

CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (3, 9): (1, 1, 2, 2, 0, 0, 0, 0, 0, 1),
    (3, 10): (2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1),
    (3, 11): (1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 12): (2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (5, 7): (3, 3, 0, 0, 0, 0, 0, 1),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0, 1),
    (5, 9): (3, 1, 0, 2, 0, 0, 0, 0, 0, 1),
    (5, 10): (2, 1, 4, 2, 3, 3, 0, 0, 0, 0, 1),
    (5, 11): (3, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (5, 12): (2, 2, 3, 4, 4, 0, 1, 1, 0, 0, 0, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
    (7, 6): (3, 6, 4, 5, 1, 0, 1),
    (7, 7): (4, 6, 0, 0, 0, 0, 0, 1),
    (7, 8): (3, 2, 6, 4, 0, 0, 0, 0, 1),
    (7, 9): (4, 6, 0, 1, 6, 0, 0, 0, 0, 1),
    (7, 10): (3, 3, 2, 1, 4, 1, 1, 0, 0, 0, 1),
    (7, 11): (4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (7, 12): (3, 0, 5, 0, 4, 2, 3, 5, 2, 0, 0, 0, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (11, 3): (9, 2, 0, 1),
    (11, 4): (2, 10, 8, 0, 1),
    (11, 5): (9, 0, 10, 0, 0, 1),
    (11, 6): (2, 7, 6, 4, 3, 0, 1),
    (11, 7): (9, 4, 0, 0, 0, 0, 0, 1),
    (11, 8): (2, 7, 1, 7, 7, 0, 0, 0, 1),
    (11, 9): (9, 8, 9, 0, 0, 0, 0, 0, 0, 1),
    (11, 10): (2, 6, 6, 10, 8, 7, 0, 0, 0, 0, 1),
    (11, 11): (9, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (11, 12): (2, 5, 6, 5, 5, 2, 4, 1, 1, 0, 0, 0, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (13, 3): (11, 2, 0, 1),
    (13, 4): (2, 12, 3, 0, 1),
    (13, 5): (11, 4, 0, 0, 0, 1),
    (13, 6): (2, 11, 11, 10, 0, 0, 1),
    (13, 7): (11, 3, 0, 0, 0, 0, 0, 1),
    (13, 8): (2, 3, 2, 12, 8, 0, 0, 0, 1),
    (13, 9): (11, 12, 12, 8, 12, 0, 0, 0, 0, 1),
    (13, 10): (2, 1, 1, 8, 5, 7, 0, 0, 0, 0, 1),
    (13, 11): (11, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (13, 12): (2, 4, 1, 1, 3, 11, 8, 5, 1, 0, 0, 0, 1),
    (17, 1): (14, 1),
    (17, 2): (3, 16, 1),
    (17, 3): (14, 1, 0, 1),
    (17, 4): (3, 10, 7, 0, 1),
    (17, 5): (14, 1, 0, 0, 0, 1),
    (17, 6): (3, 3, 10, 0, 2, 0, 1),
    (17, 7): (14, 12, 0, 0, 0, 0, 0, 1),
    (17, 8): (3, 6, 0, 12, 11, 0, 0, 0, 1),
    (17, 9): (14, 8, 7, 0, 0, 0, 0, 0, 0, 1),
    (17, 10): (3, 12, 9, 5, 6, 13, 0, 0, 0, 0, 1),
    (17, 11): (14, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (17, 12): (3, 9, 14, 6, 13, 14, 14, 4, 1, 0, 0, 0, 1),
    (19, 1): (17, 1),
    (19, 2): (2, 18, 1),
    (19, 3): (17, 4, 0, 1),
    (19, 4): (2, 11, 2, 0, 1),
    (19, 5): (17, 5, 0, 0, 0, 1),
    (19, 6): (2, 6, 17, 17, 0, 0, 1),
    (19, 7): (17, 6, 0, 0, 0, 0, 0, 1),
    (19, 8): (2, 3, 10, 12, 1, 0, 0, 0, 1),
    (19, 9): (17, 16, 14, 11, 0, 0, 0, 0, 0, 1),
    (19, 10): (2, 4, 3, 17, 13, 18, 0, 0, 0, 0, 1),
    (19, 11): (17, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (19, 12): (2, 7, 16, 9, 2, 18, 2, 3, 0, 0, 0, 0, 1),
    (23, 1): (18, 1),
    (23, 2): (5, 21, 1),
    (23, 3): (18, 2, 0, 1),
    (23, 4): (5, 19, 3, 0, 1),
    (23, 5): (18, 3, 0, 0, 0, 1),
    (23, 6): (5, 1, 9, 9, 1, 0, 1),
    (23, 7): (18, 21, 0, 0, 0, 0, 0, 1),
    (23, 8): (5, 3, 5, 20, 3, 0, 0, 0, 1),
    (23, 9): (18, 9, 8, 3, 0, 0, 0, 0, 0, 1),
    (23, 10): (5, 1, 6, 15, 5, 17, 0, 0, 0, 0, 1),
    (23, 11): (18, 7, 22, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (23, 12): (5, 12, 18, 12, 14, 15, 21, 21, 0, 0, 0, 0, 1),
}


def conway_polynomial(p: int, degree: int) -> tuple[int, ...] | None:
    return CONWAY.get((p, degree))
