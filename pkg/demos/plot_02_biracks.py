"""
Finite biracks
==============

A birack is given by two operation tables. Validation reports the first
witnesses of any failing axiom; valid biracks expose their kink map and rank.
"""

from birack_lab.birack import (
    ConstraintError,
    FiniteBirack,
    alexander_birack,
    enumerate_endomorphisms,
    validate_birack,
)

X = FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])
print("kink map:", X.kink, "rank:", X.rank)
print("endomorphisms:", enumerate_endomorphisms(X))

# a table with a repeated column entry breaks invertibility
report = validate_birack([[1, 1], [1, 1]], [[1, 2], [1, 2]])
print(report.summary())

# Alexander biracks on Z_m from (t, s, r)
Z4 = alexander_birack(4, 1, 2, 1)
print("Z4 under table:", Z4.under)
print("Z4 kink map:", Z4.kink, "rank:", Z4.rank)

try:
    alexander_birack(4, 1, 2, 2)
except ConstraintError as exc:
    print("rejected:", exc)
