"""
Searching for brackets
======================

Backtracking over unit entries finds every bracket on a birack over Z_n.
Entries can be pinned to check a given matrix.
"""

from birack_lab.birack import FiniteBirack
from birack_lab.rings import Zn
from birack_lab.search import SearchConfig, search_brackets

X = FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])
found = list(search_brackets(X, SearchConfig(Zn(5))))
print(len(found), "brackets over Z5")
print("deltas:", sorted({b.delta for b in found}))

# only the first three with delta 3
for b in search_brackets(X, SearchConfig(Zn(5), limit=3, delta_filter=3)):
    print(b.A, b.B)

# pin a complete matrix: the search returns it only if it is a bracket
Y = FiniteBirack([[1, 3, 1], [2, 2, 2], [3, 1, 3]], [[3, 3, 3], [2, 2, 2], [1, 1, 1]])
A, B = [[1, 1, 3], [3, 2, 4], [1, 2, 3]], [[4, 4, 2], [2, 3, 1], [4, 3, 2]]
seed = {(nm, x, y): M[x][y] for nm, M in (("A", A), ("B", B)) for x in range(3) for y in range(3)}
print("pinned matrix accepted:", len(list(search_brackets(Y, SearchConfig(Zn(5), seed_entries=seed)))) == 1)
