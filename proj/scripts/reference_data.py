"""Reference data used to cross-check generated fixtures and golden equations.

Coefficient prefixes of published q-expansion bases and full published plane-model
equations, transcribed once and used as checksums by the generators.
Equations are given as {(e0, e1, e2): coeff} maps; comparisons are made up to a
single global sign.
"""

# --- q-expansion prefixes: {(N, weight): {row_index: {n: coeff}}} ---

QEXP_PREFIXES = {
    (14, 4): {
        0: {1: 1, 2: 0, 3: 0, 4: 0, 5: -2, 6: -4, 7: -1, 8: 8, 9: -11, 10: -12,
            11: 12, 12: 8, 13: 38},
        1: {2: 1, 3: 0, 4: 0, 5: -2, 6: -2, 7: 1, 8: -6, 9: 0, 10: 12, 11: 4,
            12: 0, 13: 2, 14: -5, 15: 4},
        2: {3: 1, 4: 0, 5: -1, 6: -2, 7: -1, 8: -4, 9: 6, 10: 10, 11: -6,
            12: 4, 13: -3, 14: -2},
        3: {4: 1, 5: -2, 6: 0, 7: 1, 8: 1, 9: 0, 10: -4, 11: 4, 12: -2,
            13: 2, 14: 2, 15: 4, 16: -5},
    },
    (48, 2): {
        0: {1: 1, 2: 0, 3: 0, 4: 0, 5: -2, 9: 1, 13: -2, 17: 2, 25: -1,
            29: 6, 33: -4, 37: 6, 41: -6},
        1: {2: 1, 3: 0, 4: 0, 5: 0, 6: -1, 10: -2, 18: 1, 22: 4, 26: -2,
            30: 2, 34: 2, 38: -4, 46: -8},
        2: {3: 1, 4: 0, 5: 0, 11: -4, 15: -2, 19: 4, 23: 8, 27: 1, 31: -8,
            39: -2, 43: -4},
    },
    # last three rows of the genus-5 basis
    (63, 2): {
        2: {3: 1, 6: -1, 9: 1, 12: -1, 15: -2, 18: -1, 21: -1, 24: 3},
        3: {4: 1, 7: 1, 10: -4, 13: 2, 16: -2, 19: -4, 22: 5},
        4: {5: 2, 8: -1, 11: -3, 14: -1, 17: 2, 20: 0, 23: 1},
    },
    # last three rows of the genus-9 basis
    (93, 2): {
        6: {7: 1, 8: 1, 9: 2, 10: -4, 11: -1, 12: 2, 13: 3},
        7: {8: 2, 9: 2, 10: -6, 11: 0, 12: 3, 13: 5, 14: -4, 15: -6},
        8: {9: 4, 10: -4, 11: -3, 12: -1, 13: 1, 14: 0, 15: -3, 16: 2},
    },
    # last three rows of the genus-15 basis
    (110, 2): {
        12: {13: 1, 14: 1, 15: 0, 16: -3, 17: 0, 18: -5, 19: 0, 20: 5,
             21: -2, 22: -1},
        13: {14: 2, 15: 0, 16: -3, 17: -1, 18: -6, 19: 1, 20: 6, 21: -3},
        14: {15: 3, 16: 4, 17: -4, 18: 7, 19: 5, 20: -2, 21: -1},
    },
}

# --- full published equations, {(e0,e1,e2): coeff} ---


def _eq(terms):
    out = {}
    for e0, e1, e2, c in terms:
        assert (e0, e1, e2) not in out
        out[(e0, e1, e2)] = c
    return out


# degree-3 model for N=14, triple = rows (1,2,3) of the weight-4 basis
EQ_N14_CUBIC = _eq([
    (0, 3, 0, 1), (0, 0, 3, 3), (2, 0, 1, 1), (1, 2, 0, -1),
    (0, 1, 2, 1), (1, 1, 1, 1),
])

# degree-4 model for N=14, triple = rows (0,1,2)
EQ_N14_QUARTIC = _eq([
    (2, 2, 0, -3), (1, 3, 0, -6), (0, 4, 0, -4), (3, 0, 1, 3),
    (2, 1, 1, 6), (1, 2, 1, -3), (0, 3, 1, -2), (2, 0, 2, 10),
    (1, 1, 2, 2), (0, 2, 2, -21), (1, 0, 3, 23), (0, 1, 3, 16),
    (0, 0, 4, 11),
])

EQ_P34 = _eq([
    (2, 2, 0, -1), (1, 3, 0, 2), (0, 4, 0, -1), (3, 0, 1, 1),
    (1, 2, 1, 3), (0, 3, 1, 4), (2, 0, 2, -3), (1, 1, 2, -3),
    (0, 2, 2, -6), (1, 0, 3, 4), (0, 1, 3, 4), (0, 0, 4, -2),
])

EQ_P43 = _eq([
    (2, 2, 0, -2), (1, 3, 0, 1), (0, 4, 0, -9), (3, 0, 1, 1),
    (2, 1, 1, 2), (1, 2, 1, 3), (0, 3, 1, 24), (2, 0, 2, -2),
    (1, 1, 2, -5), (0, 2, 2, -28), (1, 0, 3, 3), (0, 1, 3, 16),
    (0, 0, 4, -4),
])

EQ_P45 = _eq([
    (2, 2, 0, -1), (3, 0, 1, 1), (0, 3, 1, -1), (1, 1, 2, 1),
    (0, 0, 4, -5),
])

EQ_N48_CONIC = _eq([(0, 2, 0, -1), (1, 0, 1, 1)])

EQ_N63_SEXTIC = _eq([
    (4, 2, 0, -2), (1, 5, 0, -1), (5, 0, 1, 1), (2, 3, 1, 2),
    (3, 1, 2, 1), (0, 4, 2, -1), (1, 2, 3, 3), (2, 0, 4, -3),
])

# leading/trailing published terms of the degree-10 model for N=93
EQ_N93_PARTIAL = _eq([
    (8, 2, 0, -30000), (7, 3, 0, 172400),
    (1, 0, 9, 14065), (0, 1, 9, 355), (0, 0, 10, -1825),
])

# leading/trailing published terms of the degree-15 model for N=110
EQ_N110_PARTIAL = _eq([
    (13, 2, 0, -198700267941), (12, 3, 0, 1714521491172),
    (2, 0, 13, 48120), (1, 1, 13, -91118), (0, 2, 13, 43558),
    (1, 0, 14, 173), (0, 1, 14, -138), (0, 0, 15, 1),
])

# all-ones trial combinations, weight 4
TABLE1 = {
    14: _eq([
        (2, 2, 0, -1), (1, 3, 0, -2), (0, 4, 0, -1), (3, 0, 1, 1),
        (2, 1, 1, 1), (1, 2, 1, -1), (0, 3, 1, -8), (2, 0, 2, 4),
        (1, 1, 2, 2), (0, 2, 2, 6), (1, 0, 3, 5), (0, 1, 3, -8),
        (0, 0, 4, 11),
    ]),
    15: _eq([
        (2, 2, 0, -13), (1, 3, 0, -28), (0, 4, 0, -40), (3, 0, 1, 13),
        (2, 1, 1, 15), (1, 2, 1, 68), (0, 3, 1, 120), (2, 0, 2, -30),
        (1, 1, 2, -48), (0, 2, 2, -145), (0, 1, 3, 72), (0, 0, 4, 16),
    ]),
    17: _eq([
        (2, 2, 0, -5), (1, 3, 0, -15), (0, 4, 0, -18), (3, 0, 1, 5),
        (2, 1, 1, 5), (1, 2, 1, 26), (0, 3, 1, 48), (2, 0, 2, -3),
        (1, 1, 2, -28), (0, 2, 2, -80), (1, 0, 3, 8), (0, 1, 3, 64),
        (0, 0, 4, -32),
    ]),
    18: _eq([
        (2, 2, 0, -4), (1, 3, 0, -2), (0, 4, 0, -1), (3, 0, 1, 4),
        (2, 1, 1, -2), (1, 2, 1, -1), (0, 3, 1, 4), (1, 1, 2, 7),
        (0, 2, 2, -6), (1, 0, 3, -3), (0, 1, 3, 4), (0, 0, 4, -1),
    ]),
    19: _eq([
        (2, 2, 0, -12), (1, 3, 0, -24), (0, 4, 0, -61), (3, 0, 1, 12),
        (2, 1, 1, 12), (1, 2, 1, 2), (0, 3, 1, -26), (2, 0, 2, 11),
        (1, 1, 2, 26), (0, 2, 2, -17), (1, 0, 3, 4), (0, 1, 3, -4),
        (0, 0, 4, -4),
    ]),
    20: _eq([
        (4, 2, 0, -3), (3, 3, 0, -9), (2, 4, 0, -21), (1, 5, 0, -18),
        (0, 6, 0, -30), (5, 0, 1, 3), (4, 1, 1, 6), (3, 2, 1, -4),
        (2, 3, 1, -48), (1, 4, 1, -30), (0, 5, 1, -70), (4, 0, 2, 16),
        (3, 1, 2, 29), (2, 2, 2, -25), (1, 3, 2, -31), (0, 4, 2, -35),
        (3, 0, 3, 34), (2, 1, 3, 16), (1, 2, 3, -12), (2, 0, 4, 24),
        (1, 1, 4, -3), (0, 2, 4, 10), (1, 0, 5, 9),
    ]),
    21: _eq([
        (4, 2, 0, -78), (3, 3, 0, -138), (2, 4, 0, -153), (1, 5, 0, -168),
        (0, 6, 0, -588), (5, 0, 1, 78), (4, 1, 1, 60), (3, 2, 1, 35),
        (2, 3, 1, 27), (1, 4, 1, 331), (0, 5, 1, 1194), (4, 0, 2, -20),
        (3, 1, 2, 8), (2, 2, 2, -28), (1, 3, 2, -359), (0, 4, 2, -1041),
        (3, 0, 3, -27), (2, 1, 3, 33), (1, 2, 3, 196), (0, 3, 3, 506),
        (2, 0, 4, -9), (1, 1, 4, -57), (0, 2, 4, -141), (1, 0, 5, 9),
        (0, 1, 5, 18),
    ]),
    23: _eq([
        (4, 2, 0, -2894), (3, 3, 0, 950), (2, 4, 0, -20350),
        (1, 5, 0, 21250), (0, 6, 0, -5500), (5, 0, 1, 2894),
        (4, 1, 1, -3844), (3, 2, 1, 4268), (2, 3, 1, 35045),
        (1, 4, 1, -46750), (0, 5, 1, 13575), (4, 0, 2, -332),
        (3, 1, 2, -6945), (2, 2, 2, -15194), (1, 3, 2, 21305),
        (0, 4, 2, -11210), (3, 0, 3, 4161), (2, 1, 3, 1051),
        (1, 2, 3, 4241), (0, 3, 3, 3061), (2, 0, 4, -1498),
        (1, 1, 4, -5641), (0, 2, 4, -2519), (1, 0, 5, 1517),
        (0, 1, 5, 2382), (0, 0, 6, -912),
    ]),
    25: _eq([
        (2, 2, 0, -9), (1, 3, 0, -17), (0, 4, 0, -23), (3, 0, 1, 9),
        (2, 1, 1, 8), (1, 2, 1, 12), (0, 3, 1, -8), (2, 0, 2, -6),
        (1, 1, 2, 9), (0, 2, 2, -8), (1, 0, 3, 3), (0, 1, 3, -8),
        (0, 0, 4, -2),
    ]),
    27: _eq([
        (4, 2, 0, -99), (3, 3, 0, -363), (2, 4, 0, -521), (1, 5, 0, -350),
        (0, 6, 0, -98), (5, 0, 1, 99), (4, 1, 1, 264), (3, 2, 1, -235),
        (2, 3, 1, -1394), (1, 4, 1, -1667), (0, 5, 1, -672),
        (4, 0, 2, 393), (3, 1, 2, 929), (2, 2, 2, -695), (1, 3, 2, -2784),
        (0, 4, 2, -1674), (3, 0, 3, 953), (2, 1, 3, 1310),
        (1, 2, 3, -1870), (0, 3, 3, -2096), (2, 0, 4, 954),
        (1, 1, 4, 536), (0, 2, 4, -1560), (1, 0, 5, -48), (0, 0, 6, -416),
    ]),
}
