"""Embedded constants of the 35-qubit pair.  GENERATED FILE.

Regenerate from the plain-text fixture with tools/regen_lulc_constants.py;
do not edit by hand.
"""

XI = (
    (1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)

QUAD_PAIRS = ((0, 16), (1, 31), (0, 21), (1, 8), (0, 24), (1, 9), (0, 26), (1, 20), (0, 22), (0, 15), (0, 17), (1, 22), (2, 24), (0, 12), (1, 10), (0, 25), (0, 20), (0, 19), (0, 23), (1, 21), (0, 11), (1, 12), (1, 19), (1, 32), (1, 33), (2, 9), (2, 10), (2, 16), (2, 18), (2, 23), (3, 15), (3, 20), (3, 27), (3, 30), (4, 13), (4, 29), (5, 28))

E = (3, 3, 7, 1, 1, 1, 3, 3, 3, 3, 3, 5, 7, 3, 1, 7, 7, 5, 5, 3, 5, 5, 7, 7, 5, 3, 5, 7, 3, 3, 3, 5, 5, 5, 1)

K1 = (4, 4, 0, 4, 0, 2, 0, 4, 2, 0, 2, 0, 2, 2, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0)

K2 = (4, 0, 0, 0, 2, 2, 2, 0, 0, 0, 2, 4, 0, 0, 2, 0, 0, 0, 2, 4, 0, 0, 2, 0, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2, 0)

SHA256 = "520d20cb287a0c73f71d7e375e903f0af415a02711537df93a0a5fa1ce2b0259"
