import json
from pathlib import Path

import pytest

from birack_lab.birack import FiniteBirack
from birack_lab.bracket import BirackBracket
from birack_lab.diagram import parse_gauss_code, parse_pd_code
from birack_lab.rings import Gaussian, LaurentGaussian, Zn

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
HOPF = "O1+ U2+ / U1+ O2+"
HOPF_11 = "O3+ U3+ O1+ U2+ / O4+ U4+ U1+ O2+"


def pd_codes() -> dict:
    return json.loads((DATA / "pd_codes.json").read_text())


def pd(name: str):
    return parse_pd_code(pd_codes()[name])


def x_tref() -> FiniteBirack:
    return FiniteBirack([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[3, 3, 3], [1, 1, 1], [2, 2, 2]])


def tref_bracket(X=None) -> BirackBracket:
    M = [[1, 2, 1], [3, 1, 3], [3, 1, 3]]
    return BirackBracket(X or x_tref(), M, M, Zn(5))


def x_hopf() -> FiniteBirack:
    return FiniteBirack([[2, 2, 1], [1, 1, 2], [3, 3, 3]], [[1, 1, 2], [2, 2, 1], [3, 3, 3]])


def hopf_bracket(X=None, a33="-1") -> BirackBracket:
    G = Gaussian()
    A = [["1", "1", "-1"], ["-1", "-1", "-1"], ["i", "-i", a33]]
    B = [["-1", "-1", "1"], ["1", "1", "1"], ["-i", "i", "1"]]
    return BirackBracket(X or x_hopf(), [[G.parse(t) for t in r] for r in A],
                         [[G.parse(t) for t in r] for r in B], G)


def x_three() -> FiniteBirack:
    return FiniteBirack([[1, 3, 1], [2, 2, 2], [3, 1, 3]], [[3, 3, 3], [2, 2, 2], [1, 1, 1]])


def three_z5(X=None) -> BirackBracket:
    return BirackBracket(X or x_three(), [[1, 1, 3], [3, 2, 4], [1, 2, 3]], [[4, 4, 2], [2, 3, 1], [4, 3, 2]], Zn(5))


def x_laurent() -> FiniteBirack:
    return FiniteBirack([[2, 2, 2], [1, 1, 1], [3, 3, 3]], [[1, 1, 2], [2, 2, 1], [3, 3, 3]])


def laurent_bracket(X=None, b13="-iq") -> BirackBracket:
    L = LaurentGaussian()
    A = [["1", "1", "i"], ["i", "i", "-1"], ["i", "1", "1"]]
    B = [["-q", "-q", b13], ["-iq", "-iq", "q"], ["-iq", "-q", "-q"]]
    return BirackBracket(X or x_laurent(), [[L.parse(t) for t in r] for r in A],
                         [[L.parse(t) for t in r] for r in B], L)


def x_four() -> FiniteBirack:
    return FiniteBirack([[2, 4, 2, 4], [1, 3, 1, 3], [4, 2, 4, 2], [3, 1, 3, 1]],
                        [[4, 2, 4, 2], [3, 1, 3, 1], [2, 4, 2, 4], [1, 3, 1, 3]])


FOUR_MATRIX = [[1, 1, 2, 1, 2, 2, 4, 2], [2, 2, 2, 1, 4, 4, 4, 2],
             [1, 1, 1, 3, 2, 2, 2, 1], [2, 2, 4, 2, 4, 4, 3, 4]]


@pytest.fixture
def trefoil():
    return parse_gauss_code(TREFOIL)


@pytest.fixture
def hopf11():
    return parse_gauss_code(HOPF_11)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
