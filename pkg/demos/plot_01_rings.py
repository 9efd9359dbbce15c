"""
Coefficient rings
=================

Brackets take values in Z_n, the Gaussian integers, or Laurent
polynomials in q with Gaussian coefficients. All arithmetic is exact.
"""

from birack_lab.rings import parse_ring_spec

# rings are named by the same spec strings used in bracket files
Z5 = parse_ring_spec("Z5")
print(Z5, "units:", Z5.units(), "inverse of 2:", Z5.inv(2))

G = parse_ring_spec("GAUSS")
i = G.parse("i")
print("i * i =", G.format(G.mul(i, i)))

# Laurent elements print in descending degree, negative powers in braces
L = parse_ring_spec("LAURENT q")
delta = L.parse("q + q^-1")
print("delta =", L.format(delta))
print("delta^2 =", L.format(L.mul(delta, delta)))
print("inverse of -iq:", L.format(L.inv(L.parse("-iq"))))
