"""
Birack brackets
===============

A bracket assigns smoothing coefficients to each pair of colors. The state
sum of each coloring gives a multiset of ring values, written as a
polynomial in u.
"""

from birack_lab.birack import FiniteBirack
from birack_lab.bracket import BirackBracket, bracket_multiset, format_invariant_poly, kauffman_bracket
from birack_lab.diagram import add_kinks, parse_gauss_code
from birack_lab.rings import Gaussian, LaurentGaussian, Zn

X = FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])
M = [[1, 2, 1], [3, 1, 3], [3, 1, 3]]
beta = BirackBracket(X, M, M, Zn(5))
print("delta =", beta.delta, "w =", beta.w)

T = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
print("trefoil:", format_invariant_poly(bracket_multiset(T, X, beta)))

# a Gaussian bracket on another birack distinguishes colorings of the Hopf link
G = Gaussian()
Y = FiniteBirack([[2, 2, 1], [1, 1, 2], [3, 3, 3]], [[1, 1, 2], [2, 2, 1], [3, 3, 3]])
A = [[G.parse(t) for t in r] for r in (["1", "1", "-1"], ["-1", "-1", "-1"], ["i", "-i", "-1"])]
B = [[G.parse(t) for t in r] for r in (["-1", "-1", "1"], ["1", "1", "1"], ["-i", "i", "1"])]
gamma = BirackBracket(Y, A, B, G)
H = parse_gauss_code("O1+ U2+ / U1+ O2+")
H11 = add_kinks(add_kinks(H, 0, 1), 1, 1)
print("Hopf, framing (0,0):", format_invariant_poly(bracket_multiset(H, Y, gamma)))
print("Hopf, framing (1,1):", format_invariant_poly(bracket_multiset(H11, Y, gamma)))

# the Kauffman bracket is the case of a one-element birack
L = LaurentGaussian()
K1, kb = kauffman_bracket(L)
print("Kauffman state sum of the trefoil:", format_invariant_poly(bracket_multiset(T, K1, kb)))
