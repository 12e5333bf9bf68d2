"""Worked examples that the library must reproduce exactly.

Tableaux are given as rows, top to bottom; None is an empty cell.  Words are
written left to right.  Graph data lives in data/graphs.json; edge
colors there are the middle position i of the moved window.
"""
import json
from importlib import resources

from .poset import INF, stair

STATS_EXAMPLE = {
    "lambda": (7, 5, 4, 3, 2, 2, 1),
    "n": 9,
    "word": (9, 5, 1, 8, 4, 7, 3, 6, 2),
    "des": {1, 2, 4, 6, 8},
    "ginv": {(9, 5), (9, 4), (9, 3), (9, 2), (9, 1), (8, 4), (8, 3), (8, 2), (7, 3), (7, 2), (6, 2), (5, 1)},
    "ght": 3,
    "finv": {(3, 2), (4, 3), (5, 3), (5, 4), (7, 6), (8, 6), (8, 7), (9, 8)},
    "tableau_rows": [[1, 4, 3, 2], [5, 8, 7, 6], [9]],
    "tableau_finv": 8,
}

# edges of the S_3 move graphs, colors are always 2
S3_EDGES = {
    (): set(),
    (1,): {((2, 3, 1), (3, 1, 2))},
    (2,): {((2, 3, 1), (3, 2, 1)), ((1, 3, 2), (3, 1, 2))},
    (1, 1): {((2, 1, 3), (2, 3, 1)), ((3, 1, 2), (3, 2, 1))},
    (2, 1): {((2, 1, 3), (2, 3, 1)), ((1, 3, 2), (3, 1, 2))},
}

# generating function of every class of the P_{(2,1),4} graph
FULL_GRAPH_GAMMA = {
    ("1234",): "s[4]",
    ("1243",): "t*s[4]",
    ("1324",): "t*s[4]",
    ("1342", "1423", "4123"): "t*s[3,1]",
    ("1432",): "t^2*s[4]",
    ("2134",): "t*s[4]",
    ("2143",): "t^2*s[4]",
    ("2314", "2341", "3124"): "t*s[3,1]",
    ("2413", "2431", "4213"): "t^2*s[3,1]",
    ("3142", "3412"): "t*s[2,2]",
    ("3214",): "t^2*s[4]",
    ("3241", "3421", "4132", "4231", "4312"): "t^2*(s[3,1] + s[2,2])",
    ("4321",): "t^3*s[4]",
}

CLASS_GRAPHS = ("221/5/32415", "211/5/31542", "321/5/35241", "311/5/31542", "3321/6/362415", "43211/6/254631")


def graph_data() -> dict:
    with resources.files("pknuth").joinpath("data/graphs.json").open() as fh:
        return json.load(fh)


# insertion examples: (lambda, n, X or None, alpha, c, d, beta, [(case, (h, q) or None), ...])
INSERTIONS = {
    "phi-one-step-2a": ((5, 3, 2, 1), 6, None, (4, 3, 2), (6, 5, 1), (6, 5, 1), (4, 3, 2),
            [("2a", (1, 2))]),
    "phi-one-step-2b": (stair(6), 7, None, (7, 5, 4, 2), (6, 3, 1), (7, 5, 2), (6, 4, 3, 1),
            [("2b", (2, 3))]),
    "phi-tie-break": ((2, 1, 1), 5, None, (5, 4, 2), (3, 1), (5, 1), (4, 3, 2),
            [("2a", (1, 0)), ("2b", (0, 0)), ("2b", (0, 0))]),
    "phi-full-word": (stair(8), 9, None, (9, 8, 7, 5, 6, 3, 2, 4, 1), (), (9, 5, 1),
            (8, 7, 6, 4, INF, 3, 2, INF, INF),
            [("1a", None), ("1a", None), ("2a", (1, 1)), ("1a", None), ("2b", (1, 3))]),
    "psi-inverse-of-full-word": (stair(8), 9, {5, 8, 9}, (INF, INF, 8, 7, INF, 6, 4, 3, 2), (9, 5, 1), (),
            (9, 6, 8, 7, 4, 5, 3, 2, 1),
            [("2b", (1, 3)), ("3b", None), ("2a", (1, 1)), ("3b", None), ("3b", None)]),
}

# P-RS examples: (lambda, n, word, PT rows, QT rows, pt_valid, qt_valid)
PRS = {
    "3241": ((2, 1), 4, (3, 2, 4, 1), [[1, 3, 2], [4]], [[1, 3, 4], [2]], True, True),
    "3421": ((2, 1), 4, (3, 4, 2, 1), [[2, 1], [4, 3]], [[1, 2], [3, 4]], True, True),
    "4231": ((2, 1), 4, (4, 2, 3, 1), [[2, 1], [4, 3]], [[1, 3], [2, 4]], True, True),
    "4312": ((2, 1), 4, (4, 3, 1, 2), [[1, 3, 2], [4]], [[1, 2, 4], [3]], True, True),
    "4132": ((2, 1), 4, (4, 1, 3, 2), [[1, 3, 2], [4]], [[1, 2, 3], [4]], True, True),
    "7654321/9/987563241": (stair(8), 9, (9, 8, 7, 5, 6, 3, 2, 4, 1),
              [[1, 4, 3, 2], [5, 8, 7, 6], [9]], [[1, 3, 4, 6], [2, 7, 8, 9], [5]], True, True),
    "986643221/10/8,4,6,7,10,1,2,5,3,9": ((9, 8, 6, 6, 4, 3, 2, 2, 1), 10, (8, 4, 6, 7, 10, 1, 2, 5, 3, 9),
              [[1, 2, 3, 9], [4, 6, 5, 10], [8, 7]], [[1, 2, 4, 5], [3, 7, 8, 9], [6, 10]], True, True),
    "311/5/34521": ((3, 1, 1), 5, (3, 4, 5, 2, 1), [[3, 1, 2], [5, 4]], [[1, 2, 5], [3, 4]], False, True),
    "4211/6/436521": ((4, 2, 1, 1), 6, (4, 3, 6, 5, 2, 1), [[4, 1, 3, 2], [6, 5]], [[1, 2, 5, 6], [3, 4]], False, True),
    "53211/7/3156742": ((5, 3, 2, 1, 1), 7, (3, 1, 5, 6, 7, 4, 2),
              [[1, 2, 6, 4], [3, 5], [None, 7]], [[1, 2, 5, 6], [3, 4], [None, 7]], False, False),
}

DES_TRANSPORT = {"7654321/9/987563241": {1, 4, 6}, "986643221/10/8,4,6,7,10,1,2,5,3,9": {2, 5, 9}}

# evacuation examples, as rows
EVACUATION = [([[1, 3], [2, 4]], [[1, 3], [2, 4]]), ([[1, 3, 4], [2]], [[1, 2, 3], [4]])]

# ght counterexamples on ladder-climbing orders: (lambda, n, w, ght w, w', ght w')
GHT_COUNTER = [
    ((3, 1, 1), 5, (5, 3, 2, 4, 1), 2, (5, 3, 4, 1, 2), 3),
    ((4, 2, 1, 1), 6, (5, 6, 3, 2, 4, 1), 3, (6, 3, 5, 2, 4, 1), 2),
]

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]
