"""
Facet lists of the built-in complexes, in compact digit form (``"0237"`` is
the face {0, 2, 3, 7}). Orders are significant where a list doubles as a
shelling.
"""

# Ziegler's nonshellable 3-ball on the vertices 0..9
ZIEGLER_Z = (
    "0123", "0125", "0237", "0256", "0267", "1234", "1249",
    "1256", "1269", "1347", "1457", "1458", "1489", "1569",
    "1589", "2348", "2367", "2368", "3478", "3678", "4578",
)

# Z restricted to {0,2,3,4,6,7,8}, listed in a shelling order
B = ("0237", "0267", "2367", "2368", "2348", "3678", "3478")

# combinatorial closure of Q = (Z, B), listed in a shelling order
QBAR = (
    "1249", "1269", "1569", "1589", "1489", "1458", "1457",
    "4578", "1256", "0125", "0256", "0123", "1234", "1347",
)

# QBAR restricted to {0,2,3,4,6,7,8}, listed in a shelling order
A = ("026", "023", "234", "347", "478")

# Z restricted to {1,4,5,7,8,9}, listed in a shelling order
XPRIME = ("1589", "1489", "1458", "1457", "4578")

# a non-induced 2-ball in the boundary of XPRIME, listed in a shelling order
APRIME = ("489", "589", "578", "157")

BJORNER = ("123", "124", "134", "234", "156")
BJORNER_PARTITIONING = (("", "156"), ("2", "123"), ("3", "134"), ("4", "124"), ("234", "234"))

TAU_CYCLES = ((0, 7), (2, 4), (6, 8))

TETRAHEDRON = ("0123",)
TETRAHEDRON_BOUNDARY = ("012", "013", "023", "123")
SQUARE = ("01", "12", "23", "03")
