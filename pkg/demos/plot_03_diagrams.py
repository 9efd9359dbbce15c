"""
Framed diagrams
===============

Diagrams are signed Gauss codes or PD codes. The framing is the blackboard
framing, so adding kinks changes the framed link.
"""

from birack_lab.diagram import (
    add_kinks,
    all_state_loop_counts,
    format_gauss_code,
    from_braid,
    parse_gauss_code,
    parse_pd_code,
    reidemeister_perturb,
    writhe,
)

T = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
print(T, "writhe", writhe(T), "semiarcs", T.n_semiarcs)

# one more positive kink: same knot, framing 4
T4 = add_kinks(T, 0, 1)
print(format_gauss_code(T4), "writhe", writhe(T4))

# PD codes in the Knot Atlas convention, and closed braids
hopf = parse_pd_code("X[4,1,3,2], X[2,3,1,4]")
print("PD Hopf link:", hopf, "writhe", writhe(hopf))
print("closed braid s1^3:", from_braid([1, 1, 1], 2))

# loop counts of all 2^3 Kauffman states of the trefoil
print("state loop counts:", all_state_loop_counts(T))

# random framed moves keep the writhe
for move in ("R2", "framed-R1-pair", "detour"):
    E = reidemeister_perturb(T, move, seed=1)
    print(f"{move:15s}", E, "writhe", writhe(E))
