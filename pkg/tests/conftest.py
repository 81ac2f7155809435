"""Shared reference data for the test suite.

D9 is the 9-box example diagram whose column words for S = {1, 3} read
★()), (★, ((), ()★), ()(.  FIG18 is the 18-box diagram filled by the
permutation 315624; FIG18_FILLING is the expected filling, transcribed
box by box.
"""
from schubitope import Diagram

D9 = Diagram(5, frozenset({
    (1, 1), (2, 4), (2, 5), (3, 2), (3, 4), (4, 1), (5, 1), (5, 3), (5, 4),
}))

FIG18 = Diagram(6, frozenset({
    (1, 5),
    (2, 1), (2, 2), (2, 3), (2, 5),
    (3, 1), (3, 6),
    (4, 1), (4, 2), (4, 3), (4, 4), (4, 6),
    (5, 2), (5, 6),
    (6, 1), (6, 2), (6, 4), (6, 5),
}))

FIG18_W = (3, 1, 5, 6, 2, 4)

FIG18_FILLING = {
    (1, 5): 1,
    (2, 1): 1, (2, 2): 1, (2, 3): 1, (2, 5): 2,
    (3, 1): 3, (3, 6): 3,
    (4, 1): 2, (4, 2): 3, (4, 3): 3, (4, 4): 3, (4, 6): 1,
    (5, 2): 5, (5, 6): 5,
    (6, 1): 5, (6, 2): 6, (6, 4): 1, (6, 5): 3,
}

# the four-box diagram whose polytope is a trapezoid with vertices
# (3,1,0), (3,0,1), (1,3,0), (1,0,3)
TRAPEZOID = Diagram(3, frozenset({(1, 1), (3, 1), (3, 2), (3, 3)}))

TRAPEZOID_FILLINGS = {
    (1, 2, 3): {(1, 1): 1, (3, 1): 2, (3, 2): 1, (3, 3): 1},
    (1, 3, 2): {(1, 1): 1, (3, 1): 3, (3, 2): 1, (3, 3): 1},
    (2, 1, 3): {(1, 1): 1, (3, 1): 2, (3, 2): 2, (3, 3): 2},
    (2, 3, 1): {(1, 1): 1, (3, 1): 2, (3, 2): 2, (3, 3): 2},
    (3, 1, 2): {(1, 1): 1, (3, 1): 3, (3, 2): 3, (3, 3): 3},
    (3, 2, 1): {(1, 1): 1, (3, 1): 3, (3, 2): 3, (3, 3): 3},
}

TRAPEZOID_VERTICES = {(3, 1, 0), (3, 0, 1), (1, 3, 0), (1, 0, 3)}
