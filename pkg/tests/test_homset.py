import itertools

import pytest

from birack_lab.birack import FiniteBirack, alexander_birack, trivial_birack, validate_birack
from birack_lab.diagram import add_kinks, from_braid, parse_gauss_code, writhe
from birack_lab.homset import counting_invariant, enumerate_colorings, is_coloring

from conftest import HOPF, HOPF_11, TREFOIL, pd, x_tref, x_four, x_laurent, x_hopf, x_three


def oracle_colorings(D, X):
    """Every assignment of colors to semiarcs, filtered by the crossing rule.

    At a positive crossing the incoming under and outgoing over semiarcs
    (x, y) give the outgoing pair (y ▷̄ x, x ⊳ y) on the incoming over and
    outgoing under semiarcs; a negative crossing reads the same relation
    with every strand reversed.
    """
    U, O = X.under, X.over
    out = []
    for col in itertools.product(range(1, X.n + 1), repeat=D.n_semiarcs):
        ok = True
        for c in D.crossing_ids:
            p = D.ports[c]
            if D.signs[c] > 0:
                x, y, r, s = col[p.ui], col[p.oo], col[p.oi], col[p.uo]
            else:
                x, y, r, s = col[p.uo], col[p.oi], col[p.oo], col[p.ui]
            if (O[y - 1][x - 1], U[x - 1][y - 1]) != (r, s):
                ok = False
                break
        if ok:
            out.append(col)
    return out


def small_biracks():
    out = []
    for U in itertools.product(*[itertools.product([1, 2], repeat=2)] * 2):
        for O in itertools.product(*[itertools.product([1, 2], repeat=2)] * 2):
            if validate_birack(U, O).valid:
                out.append(FiniteBirack(U, O))
    out += [x_tref(), x_hopf(), x_three(), x_laurent(), trivial_birack(3)]
    for t, s, r in itertools.product(range(3), repeat=3):
        try:
            out.append(alexander_birack(3, t, s, r))
        except ValueError:
            pass
    return out


def small_diagrams():
    T = parse_gauss_code(TREFOIL)
    return {
        "unknot": parse_gauss_code("0"),
        "kink+": add_kinks(parse_gauss_code("0"), 0, 1),
        "kink--": add_kinks(parse_gauss_code("0"), 0, -2),
        "trefoil": T,
        "trefoil-w4": add_kinks(T, 0, 1),
        "trefoil-w2": add_kinks(T, 0, -1),
        "hopf": parse_gauss_code(HOPF),
        "hopf11": parse_gauss_code(HOPF_11),
        "virtual": parse_gauss_code("O1+ O2+ / U1+ U2+"),
        "figure8": pd("4_1"),
        "L2a1": pd("L2a1"),
        "L4a1": pd("L4a1"),
        "braid": from_braid([1, -2, 1, -2], 3),
        "braid4": from_braid([1, 1, 1, 1], 2),
        "unknot+trefoil-lobe": parse_gauss_code("O1- U2+ U1- O2+"),
    }


def test_diagram_sizes():
    assert all(D.n_semiarcs <= 8 for D in small_diagrams().values())


@pytest.mark.parametrize("name", sorted(small_diagrams()))
def test_backtracker_matches_oracle(name):
    D = small_diagrams()[name]
    for X in small_biracks():
        got = enumerate_colorings(D, X)
        assert got == oracle_colorings(D, X), (name, X)
        assert all(is_coloring(D, X, c) for c in got)


def test_trefoil_colorings():
    D = parse_gauss_code(TREFOIL)
    cols = enumerate_colorings(D, x_tref())
    assert len(cols) == 3
    # x, y, z read along the over/under chain starting at crossing 1
    chain = []
    a = D.ports[1].ui
    for _ in range(3):
        chain.append(a)
        a = next(D.ports[c].oo for c in D.crossing_ids if D.ports[c].ui == a)
    assert {tuple(c[a] for a in chain) for c in cols} == {(2, 3, 1), (3, 1, 2), (1, 2, 3)}


def test_framing_sensitivity():
    D = add_kinks(parse_gauss_code(TREFOIL), 0, 1)
    assert writhe(D) == 4
    assert counting_invariant(D, x_tref()) == 0


def test_parallel_matches_sequential():
    D = pd("L4a1")
    X = x_four()
    assert enumerate_colorings(D, X, jobs=3) == enumerate_colorings(D, X, jobs=1)


def test_env_var_sets_workers(monkeypatch):
    monkeypatch.setenv("BIRACK_LAB_JOBS", "2")
    D = parse_gauss_code(TREFOIL)
    assert len(enumerate_colorings(D, x_tref())) == 3
