"""Published enumeration counts (C, B, N, V, Z) keyed by order.

The Cayley column is omitted.
"""

ALL_CLASSES = {
    8: (3, 2, 1, 1, 1),
    10: (3, 2, 1, 1, 1),
    12: (12, 9, 3, 2, 2),
    14: (8, 6, 5, 2, 2),
    16: (17, 12, 6, 3, 3),
    18: (17, 13, 7, 2, 2),
    20: (35, 25, 17, 7, 4),
    22: (19, 15, 14, 4, 4),
    24: (69, 48, 18, 6, 4),
    26: (28, 21, 20, 5, 5),
    28: (64, 44, 36, 8, 6),
    30: (69, 52, 27, 6, 4),
    32: (71, 48, 30, 7, 7),
    34: (47, 36, 35, 7, 7),
    36: (133, 91, 53, 8, 6),
    38: (59, 45, 44, 8, 8),
    40: (159, 107, 63, 13, 8),
    42: (125, 94, 55, 8, 6),
    44: (151, 103, 93, 14, 10),
    46: (86, 66, 65, 10, 10),
    48: (266, 173, 76, 12, 8),
    50: (122, 93, 78, 9, 9),
}

CLASS_B2 = {
    8: (2, 1, 1, 1, 1),
    10: (2, 2, 1, 1, 1),
    12: (8, 7, 3, 2, 2),
    14: (6, 6, 5, 2, 2),
    16: (11, 8, 6, 3, 3),
    18: (13, 13, 7, 2, 2),
    20: (23, 20, 16, 6, 4),
    22: (15, 15, 14, 4, 4),
    24: (46, 37, 17, 5, 4),
    26: (21, 21, 20, 5, 5),
    28: (42, 37, 33, 6, 6),
    30: (52, 52, 27, 6, 4),
    32: (49, 39, 30, 7, 7),
    34: (36, 36, 35, 7, 7),
    36: (90, 79, 49, 6, 6),
    38: (45, 45, 44, 8, 8),
    40: (111, 91, 61, 11, 8),
    42: (94, 94, 55, 8, 6),
    44: (104, 91, 87, 10, 10),
    46: (66, 66, 65, 10, 10),
    48: (185, 150, 75, 11, 8),
    50: (93, 93, 78, 9, 9),
}

CLASS_B1 = {
    8: (1, 1, 0, 0, 0),
    12: (3, 2, 1, 1, 1),
    16: (3, 3, 0, 0, 0),
    20: (6, 4, 1, 1, 1),
    24: (7, 7, 0, 0, 0),
    28: (7, 5, 2, 1, 1),
    32: (6, 6, 0, 0, 0),
    36: (11, 8, 3, 1, 1),
    40: (10, 10, 0, 0, 0),
    44: (11, 8, 3, 1, 1),
    48: (14, 14, 0, 0, 0),
}

CLASS_B3 = {
    8: (1, 1, 0, 0, 0),
    12: (3, 2, 1, 1, 1),
    16: (3, 3, 0, 0, 0),
    20: (4, 3, 2, 2, 1),
    24: (5, 5, 1, 1, 0),
    28: (6, 4, 3, 3, 1),
    32: (5, 5, 0, 0, 0),
    36: (8, 6, 3, 3, 1),
    40: (7, 7, 2, 2, 0),
    44: (8, 6, 5, 5, 1),
    48: (11, 11, 1, 1, 0),
}

PER_CLASS = {"B1": CLASS_B1, "B2": CLASS_B2, "B3": CLASS_B3}
