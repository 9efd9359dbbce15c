"""
Bracket quivers
===============

Endomorphisms of the birack act on colorings. The resulting quiver, with
vertices weighted by state sums, yields three polynomial invariants and can
be exported as DOT.
"""

from birack_lab.birack import FiniteBirack
from birack_lab.bracket import BirackBracket
from birack_lab.diagram import parse_gauss_code
from birack_lab.quiver import (
    build_quiver,
    export_dot,
    in_degree_polynomial,
    maximal_path_polynomial,
    two_variable_polynomial,
)
from birack_lab.rings import Zn

X = FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])
M = [[1, 2, 1], [3, 1, 3], [3, 1, 3]]
beta = BirackBracket(X, M, M, Zn(5))
T = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")

# the cyclic shift permutes the three colorings in a 3-cycle
Q = build_quiver(T, X, [[2, 3, 1]], beta)
print("in-degree:", in_degree_polynomial(Q))
print("two-variable:", two_variable_polynomial(Q))
print("maximal paths:", maximal_path_polynomial(Q))
print("maximal paths (vertex count):", maximal_path_polynomial(Q, "vertices"))
print(export_dot(Q))
