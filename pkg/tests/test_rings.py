import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birack_lab.rings import (
    ElementSyntaxError,
    Gaussian,
    IncompatibleRingError,
    LaurentGaussian,
    NotAUnitError,
    RingError,
    Zn,
    arith,
    format_elem,
    invert,
    is_unit,
    parse_elem,
    parse_ring_spec,
)

G = Gaussian()
L = LaurentGaussian()

gauss = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
laurent = st.dictionaries(st.integers(-4, 4), gauss, max_size=4).map(
    lambda d: L.check(tuple(sorted(((k, v) for k, v in d.items() if v != (0, 0)), reverse=True))))
gauss_units = st.sampled_from([(1, 0), (-1, 0), (0, 1), (0, -1)])
laurent_units = st.tuples(gauss_units, st.integers(-5, 5)).map(lambda t: L.monomial(t[0], t[1]))


def test_zn_examples():
    Z5 = Zn(5)
    assert arith(Z5, "mul", 3, 4) == 2
    assert invert(Z5, 2) == 3
    assert Z5.units() == [1, 2, 3, 4]
    assert not is_unit(Zn(6), 3)
    with pytest.raises(NotAUnitError):
        invert(Zn(6), 3)


def test_ring_spec_parsing():
    assert parse_ring_spec("Z5") == Zn(5)
    assert parse_ring_spec("GAUSS") == G
    assert parse_ring_spec("LAURENT q") == L
    for bad in ("Z1", "Q", "Zx"):
        with pytest.raises(RingError):
            parse_ring_spec(bad)


def test_gaussian_units_and_format():
    i = G.parse("i")
    assert G.mul(i, i) == G.parse("-1")
    assert G.inv(i) == G.parse("-i")
    assert G.format(G.parse("2-3i")) == "2-3i"
    assert not G.is_unit(G.parse("1+i"))


def test_laurent_format_style():
    assert L.format(L.parse("q+q^-1")) == "q+q^{-1}"
    assert L.format(L.parse("-iq^{-1}")) == "-iq^{-1}"
    assert L.format(L.parse("(3-3i)q^8 + 6q^2 + 3 - 3i + 6q^{-2}")) == "(3-3i)q^8+6q^2+3-3i+6q^{-2}"
    assert L.format(L.zero()) == "0"


def test_laurent_units():
    assert L.inv(L.parse("iq^2")) == L.parse("-iq^-2")
    assert not L.is_unit(L.parse("q+1"))
    with pytest.raises(NotAUnitError):
        L.inv(L.parse("q+q^-1"))


def test_parse_error_reports_position():
    with pytest.raises(ElementSyntaxError) as e:
        parse_elem(L, "q^^2")
    assert e.value.pos >= 0
    with pytest.raises(ElementSyntaxError):
        parse_elem(Zn(5), "x")


def test_mixed_rings_rejected():
    with pytest.raises(IncompatibleRingError):
        arith(Zn(5), "add", 1, (0, 1))


@settings(max_examples=200)
@given(st.integers(2, 40), st.integers(), st.integers(), st.integers())
def test_zn_ring_laws(n, a, b, c):
    R = Zn(n)
    a, b, c = a % n, b % n, c % n
    assert R.add(a, b) == R.add(b, a)
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.add(a, R.neg(a)) == 0
    if R.is_unit(a):
        assert R.mul(a, R.inv(a)) == 1
    assert R.parse(R.format(a)) == a


@settings(max_examples=200)
@given(gauss, gauss, gauss)
def test_gaussian_ring_laws(a, b, c):
    assert G.mul(a, b) == G.mul(b, a)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.add(b, c)) == G.add(G.mul(a, b), G.mul(a, c))
    assert G.parse(G.format(a)) == a


@settings(max_examples=200)
@given(laurent, laurent, laurent)
def test_laurent_ring_laws(a, b, c):
    assert L.add(a, b) == L.add(b, a)
    assert L.mul(a, b) == L.mul(b, a)
    assert L.mul(L.mul(a, b), c) == L.mul(a, L.mul(b, c))
    assert L.mul(a, L.add(b, c)) == L.add(L.mul(a, b), L.mul(a, c))
    assert L.add(a, L.neg(a)) == L.zero()


@settings(max_examples=200)
@given(laurent)
def test_laurent_format_round_trip(a):
    assert L.parse(L.format(a)) == a
    assert format_elem(L, parse_elem(L, format_elem(L, a))) == format_elem(L, a)


@given(laurent_units)
def test_laurent_unit_inverse(u):
    assert L.is_unit(u)
    assert L.mul(u, L.inv(u)) == L.one()
