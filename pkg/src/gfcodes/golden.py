"""Published reference values the reproduction targets are diffed against.

Every number here is transcribed from the source tables and worked examples,
never computed. ``None`` marks a cell printed as "-" (a weight below d_r,
hence zero).
"""

# [9,5,3]_2: A^r_j for j = 3..9
T1_WEIGHTS = tuple(range(3, 10))
T1_SSWD = {
    1: (4, 14, 8, 0, 4, 1, 0),
    2: (None, None, 6, 60, 36, 39, 14),
    3: (None, None, None, None, 36, 63, 56),
    4: (None, None, None, None, None, 9, 22),
    5: (None, None, None, None, None, None, 1),
}
# (r, j) -> every r-subcode of weight j is minimal (True) / none is (False)
T1_MINIMAL = {
    (1, 3): True, (1, 4): True, (1, 5): True, (1, 7): False, (1, 8): False,
    (2, 5): True, (2, 6): True, (2, 7): False, (2, 8): False,
    (3, 7): True, (3, 8): False,
    (4, 8): True,
}
T1_HIERARCHY = (3, 5, 7, 8, 9)

# [12,5,6]_5: A^r_j for j = 6..12
T2_WEIGHTS = tuple(range(6, 13))
T2_SSWD = {
    1: (5, 61, 115, 150, 221, 185, 44),
    2: (None, None, None, 220, 1386, 6240, 12460),
    3: (None, None, None, None, 66, 1740, 18500),
    4: (None, None, None, None, None, 12, 769),
    5: (None, None, None, None, None, None, 1),
}
T2_MINIMAL = {
    (1, 6): True, (1, 7): True, (1, 8): True, (1, 9): False, (1, 10): False, (1, 11): False,
    (2, 9): True, (2, 10): False, (2, 11): False,
    (3, 10): True, (3, 11): False,
    (4, 11): True,
}
T2_HIERARCHY = (6, 9, 10, 11, 12)
T2_DUAL = (12, 7, 5)

# extended ternary Golay code C and C_t = [G, S_{3,6} x t]:
# rows s = 1..5 of (d_{s+1}, D_s, s-minimal)
T3_BASE = ((8, 12, False), (9, 12, False), (10, 12, False), (11, 12, False), (12, 12, False))
# C_t: d_{s+1} = a + b t, D_s = c + e t, s-minimal
T3_PADDED = (
    ((8, 324), (12, 243), True),
    ((9, 351), (12, 324), True),
    ((10, 360), (12, 351), True),
    ((11, 363), (12, 360), True),
    ((12, 364), (12, 363), True),
)

# binary Solomon-Stiffler codes C1 = [28,5,14]_2 and C2 = [24,5,11]_2
T4 = {
    "ss28_5_2": {"params": (28, 5, 14),
                 "rows": ((21, 16, True), (25, 24, True), (27, 28, False), (28, 28, False))},
    "ss24_5_2": {"params": (24, 5, 11),
                 "rows": ((17, 16, True), (21, 23, False), (23, 24, False), (24, 24, False))},
}

# ternary Solomon-Stiffler codes [117,5,78]_3 and [116,5,77]_3
T5 = {
    "ss117_5_3": {"params": (117, 5, 78),
                  "rows": ((104, 81, True), (113, 108, True), (116, 117, False), (117, 117, False))},
    "ss116_5_3": {"params": (116, 5, 77),
                  "rows": ((103, 81, True), (112, 108, True), (115, 116, False), (116, 116, False))},
}

# two-weight cyclic code of length 85: all 2-cyclotomic cosets but that of 37 are zeros
EX4_8 = {"q": 2, "n": 85, "exclude": (37,), "params": (85, 8, 40), "weights": (40, 48),
         "minimal": {1: True, 2: True, 3: False}}

# gAB-violating extensions at s = 2
EX8_2 = {"source": "ss28_5_2", "s": 2, "n_extra": 9, "params": (37, 5, 14), "d2": 21, "D2": 33,
         "source_D1": 16, "source_d2": 21}
EX8_3 = {"source": "xie26_5_2", "s": 2, "n_extra": 7, "params": (33, 5, 12), "d2": 19, "D2": 30,
         "source_D1": 16, "source_d2": 19, "source_D2": 23}
