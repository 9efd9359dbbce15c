"""
Colorings and the counting invariant
====================================

Colorings assign birack elements to semiarcs so that every crossing
satisfies the birack relation. Their number depends on the framing.
"""

from birack_lab.birack import FiniteBirack
from birack_lab.diagram import add_kinks, parse_gauss_code
from birack_lab.homset import enumerate_colorings

X = FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])
T = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")

for c in enumerate_colorings(T, X):
    print(c)

# the kink map has order 3, so only framings divisible by 3 admit colorings
for k in range(-3, 4):
    D = add_kinks(T, 0, k)
    print("framing", 3 + k, "colorings", len(enumerate_colorings(D, X, jobs=2)))
