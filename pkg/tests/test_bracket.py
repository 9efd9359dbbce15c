import itertools
from collections import Counter, defaultdict

import pytest

from birack_lab.bracket import (
    BirackBracket,
    BracketError,
    BracketFormatError,
    ResourceLimitError,
    bracket_multiset,
    coloring_values,
    format_bracket_text,
    format_invariant_poly,
    kauffman_bracket,
    parse_bracket_text,
    state_sum,
    validate_bracket,
)
from birack_lab.diagram import add_kinks, from_braid, parse_gauss_code, parse_pd_code
from birack_lab.rings import Gaussian, LaurentGaussian, Zn

from conftest import (
    HOPF,
    HOPF_11,
    TREFOIL,
    tref_bracket,
    laurent_bracket,
    hopf_bracket,
    pd,
    pd_codes,
    three_z5,
    x_tref,
    x_laurent,
    x_hopf,
    x_three,
)

L = LaurentGaussian()


# -- independent Kauffman bracket on PD codes ----------------------------------------


def _pmul(a, b):
    out = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] += x * y
    return {k: v for k, v in out.items() if v}


def _padd(a, b):
    out = defaultdict(int, a)
    for k, v in b.items():
        out[k] += v
    return {k: v for k, v in out.items() if v}


def pd_kauffman(code: str) -> dict:
    """Unnormalized bracket: A-smoothing of X[a,b,c,d] joins a-b and c-d."""
    import re

    Xs = [tuple(map(int, m.split(","))) for m in re.findall(r"X\[([\d,\s]+)\]", code)]
    if not Xs:
        return {0: 1}
    delta = {2: -1, -2: -1}
    total: dict = {}
    for state in itertools.product((0, 1), repeat=len(Xs)):
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                x = parent[x]
            return x

        for (a, b, c, d), s in zip(Xs, state):
            pairs = ((a, b), (c, d)) if s == 0 else ((a, d), (b, c))
            for u, v in pairs:
                parent[find(u)] = find(v)
        loops = len({find(e) for X in Xs for e in X})
        term = {state.count(0) - state.count(1): 1}
        for _ in range(loops - 1):
            term = _pmul(term, delta)
        total = _padd(total, term)
    return total


def _as_laurent(p: dict, flip: bool):
    return L.check(tuple(sorted((((-k if flip else k), (v, 0)) for k, v in p.items()), reverse=True)))


def test_kauffman_oracle_on_small_pd_codes():
    X, beta = kauffman_bracket(L)
    codes = {k: v for k, v in pd_codes().items() if v.count("X") <= 5}
    assert len(codes) >= 6
    matches = {True: 0, False: 0}
    for name, code in codes.items():
        D = parse_pd_code(code)
        (val,) = coloring_values(D, X, beta)
        got = val
        ref = pd_kauffman(code)
        # our state sum carries δ to the full loop count, one more than the oracle
        for flip in (False, True):
            if L.mul(L.parse("-q^2-q^-2"), _as_laurent(ref, flip)) == got:
                matches[flip] += 1
    # one fixed identification A <-> q^(±1) must explain every diagram
    assert max(matches.values()) == len(codes)


def test_kauffman_trefoil_value():
    X, beta = kauffman_bracket(L)
    (val,) = coloring_values(parse_gauss_code(TREFOIL), X, beta)
    delta = L.parse("-q^2-q^-2")
    assert val in (L.mul(delta, L.parse("-q^5-q^-3+q^-7")), L.mul(delta, L.parse("-q^-5-q^3+q^7")))


# -- validation -------------------------------------------------------------------


def test_e4_validates():
    rep = validate_bracket(x_tref(), [[1, 2, 1], [3, 1, 3], [3, 1, 3]], [[1, 2, 1], [3, 1, 3], [3, 1, 3]], Zn(5))
    assert rep.valid and rep.delta == 3


def test_hopf_matrix_with_original_entry_has_nonconstant_delta():
    G = Gaussian()
    with pytest.raises(BracketError, match="not constant"):
        hopf_bracket(a33="1")
    assert G.format(hopf_bracket().delta) == "2"


def test_laurent_bracket():
    beta = laurent_bracket()
    assert L.format(beta.delta) == "q+q^{-1}"
    assert [L.format(w) for w in beta.w] == ["-q^{-1}", "-iq^{-1}", "-q^{-1}"]
    with pytest.raises(BracketError):
        laurent_bracket(b13="iq")


def test_three_element_brackets_validate():
    assert three_z5().delta == 2
    G = Gaussian()
    P = lambda rows: [[G.parse(t) for t in r] for r in rows]  # noqa: E731
    A = P([["1", "-i", "-i"], ["-i", "1", "-1"], ["1", "1", "-i"]])
    B = P([["-1", "i", "i"], ["i", "-1", "1"], ["-1", "-1", "i"]])
    assert validate_bracket(x_three(), A, B, G).valid


def test_non_unit_entries_rejected():
    rep = validate_bracket(x_tref(), [[0, 1, 1]] * 3, [[1, 1, 1]] * 3, Zn(5))
    assert not rep.valid
    assert "unit" in rep.violations[0]


def test_zero_delta_rejected():
    # A = 1, B = 2 gives δ = -(3 + 2) = 0 in Z5
    rep = validate_bracket(x_tref(), [[1] * 3] * 3, [[2] * 3] * 3, Zn(5))
    assert not rep.valid
    assert any("zero" in v for v in rep.violations)


# -- invariants -------------------------------------------------------------------


def test_e4_trefoil():
    T = parse_gauss_code(TREFOIL)
    m = bracket_multiset(T, x_tref(), tref_bracket())
    assert m.to_json() == {"1": 3}
    assert format_invariant_poly(m) == "3u"
    assert format_invariant_poly(bracket_multiset(add_kinks(T, 0, 1), x_tref(), tref_bracket())) == "0"


def test_gaussian_hopf():
    H = parse_gauss_code(HOPF_11)
    assert format_invariant_poly(bracket_multiset(H, x_hopf(), hopf_bracket())) == "4u^{4i}+5u^4"


def test_state_sum_of_single_coloring():
    T = parse_gauss_code(TREFOIL)
    assert state_sum(T, x_tref(), tref_bracket(), [1, 2, 3, 1, 2, 3]) == 1
    with pytest.raises(BracketError):
        state_sum(T, x_tref(), tref_bracket(), [1, 1, 1, 1, 1, 1])


def test_unknot_value_is_delta_to_kink_weight():
    beta = laurent_bracket()
    X = x_laurent()
    vals = coloring_values(parse_gauss_code("0"), X, beta)
    assert vals == [beta.delta] * 3


def test_crossing_limit():
    D = from_braid([1] * 6, 2)
    with pytest.raises(ResourceLimitError):
        bracket_multiset(D, x_tref(), tref_bracket(), crossing_limit=5)


def test_parallel_values_match():
    H = parse_gauss_code(HOPF_11)
    assert coloring_values(H, x_hopf(), hopf_bracket(), jobs=3) == coloring_values(H, x_hopf(), hopf_bracket(), jobs=1)


# -- files ------------------------------------------------------------------------


def test_bracket_text_round_trip():
    for X, beta in ((x_tref(), tref_bracket()), (x_hopf(), hopf_bracket()), (x_laurent(), laurent_bracket())):
        again = parse_bracket_text(format_bracket_text(beta), X)
        assert again.A == beta.A and again.B == beta.B and again.ring == beta.ring


def test_bracket_file_errors_name_line():
    with pytest.raises(BracketFormatError, match=r"b\.bbr:3"):
        parse_bracket_text("Z5\n1 1 1 1 1 1\n1 1 1\n1 1 1 1 1 1\n", x_tref(), "b.bbr")
    with pytest.raises(BracketFormatError, match=r"b\.bbr:1"):
        parse_bracket_text("Q7\n", x_tref(), "b.bbr")
