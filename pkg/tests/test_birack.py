import itertools

import numpy as np
import pytest

from birack_lab.birack import (
    BirackAxiomError,
    BirackFormatError,
    ConstraintError,
    FiniteBirack,
    alexander_birack,
    all_maps,
    check_homomorphism,
    enumerate_endomorphisms,
    format_birack_text,
    parse_birack_text,
    trivial_birack,
    validate_birack,
)

from conftest import x_tref, x_four, x_laurent, x_hopf, x_three


def axioms_by_loops(U, O):
    """Direct transcription of the axioms with plain loops, 1-indexed tables."""
    n = len(U)
    u = lambda a, b: U[a - 1][b - 1]  # noqa: E731
    o = lambda a, b: O[a - 1][b - 1]  # noqa: E731
    X = range(1, n + 1)
    for x in X:
        if sorted(o(y, x) for y in X) != list(X) or sorted(u(y, x) for y in X) != list(X):
            return False
    if len({(o(y, x), u(x, y)) for x in X for y in X}) != n * n:
        return False
    for x, y, z in itertools.product(X, repeat=3):
        if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)):
            return False
        if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)):
            return False
        if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)):
            return False
    return all(o(u(x, x), o(x, x)) == u(o(x, x), u(x, x)) for x in X)


def test_reference_biracks_are_valid():
    for X in (x_tref(), x_hopf(), x_three(), x_laurent(), x_four()):
        assert validate_birack(X.under, X.over).valid


def test_trefoil_birack_kink():
    X = x_tref()
    for x, p in enumerate(X.kink, 1):
        assert X.under[x - 1][p - 1] == X.over[p - 1][x - 1]
    assert X.kink == [3, 1, 2]
    assert X.rank == 3


def test_z4_alexander_birack():
    X = alexander_birack(4, 1, 2, 1)
    assert X.under == [[1, 3, 1, 3], [2, 4, 2, 4], [3, 1, 3, 1], [4, 2, 4, 2]]
    # element k stands for residue k - 1, so pi(x) = 3x
    assert X.kink == [1 + (3 * x) % 4 for x in range(4)]
    assert X.rank == 2


def test_alexander_constraint_message():
    with pytest.raises(ConstraintError, match=r"s\^2 = s\(r - t\) fails mod 4"):
        alexander_birack(4, 1, 2, 2)


def test_non_bijective_table_names_axiom_ii():
    rep = validate_birack([[1, 1], [1, 1]], [[1, 2], [1, 2]])
    assert not rep.valid
    assert rep.violations[0].axiom == "ii"
    with pytest.raises(BirackAxiomError):
        FiniteBirack([[1, 1], [1, 1]], [[1, 2], [1, 2]])


def test_format_errors():
    with pytest.raises(BirackFormatError):
        validate_birack([[1, 2]], [[1]])
    with pytest.raises(BirackFormatError):
        validate_birack([[1, 3], [1, 2]], [[1, 2], [1, 2]])


def test_validator_agrees_with_loop_oracle_on_all_size_two_tables():
    tables = [np.array(t).reshape(2, 2).tolist() for t in itertools.product([1, 2], repeat=4)]
    found = 0
    for U in tables:
        for O in tables:
            ok = axioms_by_loops(U, O)
            assert validate_birack(U, O).valid == ok
            found += ok
    assert found > 0


def test_endomorphisms_match_exhaustive_oracle():
    for X in (x_tref(), x_hopf(), x_three(), x_laurent(), x_four()):
        brute = sorted(list(f) for f in all_maps(X.n) if check_homomorphism(X, f))
        assert enumerate_endomorphisms(X) == brute


def test_reference_endomorphism_sets():
    assert [3, 3, 3] in enumerate_endomorphisms(x_hopf())
    assert [2, 1, 3] in enumerate_endomorphisms(x_hopf())
    assert enumerate_endomorphisms(x_laurent()) == [[1, 2, 3], [2, 1, 3], [3, 3, 3]]
    assert [2, 3, 1] in enumerate_endomorphisms(x_tref())


def test_text_round_trip():
    X = x_four()
    assert parse_birack_text(format_birack_text(X)) == X


def test_text_errors_name_line():
    with pytest.raises(BirackFormatError, match=r"f\.brk:3"):
        parse_birack_text("2\n1 2\n1 2 3\n\n1 2\n1 2\n", "f.brk")


def test_trivial_birack():
    X = trivial_birack(3)
    assert X.kink == [1, 2, 3]
    assert enumerate_endomorphisms(X) == sorted(list(f) for f in all_maps(3))
