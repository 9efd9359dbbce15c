"""Exact commutative rings used for bracket coefficients.

Three kinds are supported:

* ``Zn``: integers modulo ``n``; elements are ``int`` residues in ``[0, n)``.
* ``Gaussian``: the Gaussian integers; elements are ``(re, im)`` tuples.
* ``LaurentGaussian``: Laurent polynomials in one variable with Gaussian
  integer coefficients; elements are tuples of ``(exponent, (re, im))`` pairs
  sorted by decreasing exponent with no zero coefficients.

Elements are plain immutable Python values, so they hash and compare by
value. All arithmetic goes through a ring object::

    >>> R = Zn(5)
    >>> R.mul(3, 2)
    1
    >>> G = Gaussian()
    >>> G.format(G.mul(G.parse("i"), G.parse("i")))
    '-1'
"""

from __future__ import annotations

import math
import re
from typing import Any

__all__ = [
    "RingError",
    "IncompatibleRingError",
    "NotAUnitError",
    "ElementSyntaxError",
    "Ring",
    "Zn",
    "Gaussian",
    "LaurentGaussian",
    "parse_ring_spec",
    "arith",
    "invert",
    "is_unit",
    "parse_elem",
    "format_elem",
]


class RingError(ValueError):
    """Base class for ring errors."""


class IncompatibleRingError(RingError):
    """An element does not belong to the ring it was used with."""


class NotAUnitError(RingError):
    """Inversion of a non-unit."""


class ElementSyntaxError(RingError):
    """Malformed element text."""

    def __init__(self, text: str, pos: int, message: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


_MINUS = {"−": "-", "–": "-"}


def _normalize_text(text: str) -> str:
    for k, v in _MINUS.items():
        text = text.replace(k, v)
    return text.strip()


class Ring:
    """Common interface for the three ring kinds."""

    kind: str = ""

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def check(self, a: Any) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one()
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def from_int(self, k: int):
        return self.parse(str(k))

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def sort_key(self, a):
        """Key used for canonical ordering of elements (used descending)."""
        return self.format(a)

    def spec(self) -> str:
        """The ring spec string accepted by :func:`parse_ring_spec`."""
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return f"<ring {self.spec()}>"


class Zn(Ring):
    """Integers modulo ``n``."""

    kind = "Zn"

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise RingError(f"modulus must be an integer >= 2, got {n!r}")
        self.n = n

    def spec(self) -> str:
        return f"Z{self.n}"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def check(self, a):
        if type(a) is not int or not 0 <= a < self.n:
            raise IncompatibleRingError(f"{a!r} is not a residue of {self.spec()}")
        return a

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def is_unit(self, a) -> bool:
        return math.gcd(a, self.n) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnitError(f"{a} is not a unit of {self.spec()}")
        return pow(a, -1, self.n)

    def pow(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        return pow(a, k, self.n)

    def units(self) -> list[int]:
        return [a for a in range(self.n) if self.is_unit(a)]

    def parse(self, text: str):
        t = _normalize_text(text)
        if not re.fullmatch(r"[+-]?\d+", t):
            bad = next((i for i, ch in enumerate(t) if not (ch.isdigit() or (i == 0 and ch in "+-"))), 0)
            if "i" in t or "q" in t:
                raise ElementSyntaxError(text, bad, f"value not in {self.spec()}")
            raise ElementSyntaxError(text, bad, "expected an integer")
        return int(t) % self.n

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        return a


# Gaussian integers --------------------------------------------------------

_G_UNITS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def _g_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _g_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _g_inv(a):
    # only for units, whose inverse is the conjugate
    return (a[0], -a[1])


def _g_format(a) -> str:
    re_, im = a
    if im == 0:
        return str(re_)
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = f"{im}i"
    if re_ == 0:
        return ims
    return f"{re_}{ims}" if ims.startswith("-") else f"{re_}+{ims}"


def _g_has_sign(s: str) -> bool:
    return "+" in s or "-" in s[1:]


_G_TERM = re.compile(r"([+-]?)(\d*)(i?)")


def _g_parse(text: str, orig: str | None = None, offset: int = 0):
    """Parse a sum of signed real/imaginary Gaussian terms."""
    orig = text if orig is None else orig
    if not text:
        raise ElementSyntaxError(orig, offset, "empty element")
    pos = 0
    acc = (0, 0)
    while pos < len(text):
        m = _G_TERM.match(text, pos)
        sign, digits, imag = m.groups()
        if not digits and not imag:
            raise ElementSyntaxError(orig, offset + m.end(), "expected a number or 'i'")
        if pos > 0 and not sign:
            raise ElementSyntaxError(orig, offset + pos, "expected '+' or '-'")
        v = int(digits) if digits else 1
        if sign == "-":
            v = -v
        acc = _g_add(acc, (0, v) if imag else (v, 0))
        pos = m.end()
    return acc


class Gaussian(Ring):
    """The Gaussian integers Z[i], with exact integer components."""

    kind = "Gaussian"

    def spec(self) -> str:
        return "GAUSS"

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def check(self, a):
        if not (isinstance(a, tuple) and len(a) == 2 and all(type(c) is int for c in a)):
            raise IncompatibleRingError(f"{a!r} is not a Gaussian integer")
        return a

    def add(self, a, b):
        return _g_add(a, b)

    def neg(self, a):
        return (-a[0], -a[1])

    def mul(self, a, b):
        return _g_mul(a, b)

    def is_unit(self, a) -> bool:
        return a in _G_UNITS

    def inv(self, a):
        if a not in _G_UNITS:
            raise NotAUnitError(f"{_g_format(a)} is not a unit of Z[i]")
        return _g_inv(a)

    def units(self) -> list:
        return list(_G_UNITS)

    def from_int(self, k: int):
        return (k, 0)

    def parse(self, text: str):
        t = _normalize_text(text).replace(" ", "")
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        for i, ch in enumerate(t):
            if ch not in "0123456789+-i":
                raise ElementSyntaxError(text, i, f"unexpected character {ch!r}")
        return _g_parse(t, text)

    def format(self, a) -> str:
        return _g_format(a)

    def sort_key(self, a):
        return _g_format(a)


# Laurent polynomials over Z[i] ---------------------------------------------


def _l_from_dict(d: dict) -> tuple:
    return tuple(sorted(((k, c) for k, c in d.items() if c != (0, 0)), reverse=True))


class LaurentGaussian(Ring):
    """Laurent polynomials ``Z[i][q, q^-1]`` in a single named variable."""

    kind = "LaurentGaussian"

    def __init__(self, var: str = "q"):
        if not re.fullmatch(r"[a-hj-zA-Z]", var):
            raise RingError(f"variable must be a single letter other than 'i', got {var!r}")
        self.var = var

    def spec(self) -> str:
        return f"LAURENT {self.var}"

    def zero(self):
        return ()

    def one(self):
        return ((0, (1, 0)),)

    def monomial(self, coeff, k: int = 0):
        return _l_from_dict({k: coeff})

    def from_int(self, k: int):
        return _l_from_dict({0: (k, 0)})

    def check(self, a):
        ok = isinstance(a, tuple) and all(
            isinstance(t, tuple) and len(t) == 2 and type(t[0]) is int
            and isinstance(t[1], tuple) and len(t[1]) == 2 and t[1] != (0, 0)
            for t in a
        )
        if not ok or list(a) != sorted(a, reverse=True) or len({t[0] for t in a}) != len(a):
            raise IncompatibleRingError(f"{a!r} is not a canonical Laurent polynomial")
        return a

    def add(self, a, b):
        d = dict(a)
        for k, c in b:
            d[k] = _g_add(d.get(k, (0, 0)), c)
        return _l_from_dict(d)

    def neg(self, a):
        return tuple((k, (-c[0], -c[1])) for k, c in a)

    def mul(self, a, b):
        d: dict = {}
        for k1, c1 in a:
            for k2, c2 in b:
                k = k1 + k2
                d[k] = _g_add(d.get(k, (0, 0)), _g_mul(c1, c2))
        return _l_from_dict(d)

    def is_unit(self, a) -> bool:
        return len(a) == 1 and a[0][1] in _G_UNITS

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnitError(f"{self.format(a)} is not a unit of Z[i][{self.var}^{{+-1}}]")
        k, c = a[0]
        return ((-k, _g_inv(c)),)

    def format(self, a) -> str:
        if not a:
            return "0"
        v = self.var
        parts = []
        for k, c in a:
            cs = _g_format(c)
            if k == 0:
                body = cs
            else:
                mono = v if k == 1 else (f"{v}^{k}" if k > 0 else f"{v}^{{{k}}}")
                if cs == "1":
                    body = mono
                elif cs == "-1":
                    body = "-" + mono
                elif cs == "-i":
                    body = "-i" + mono
                elif _g_has_sign(cs):
                    body = f"({cs}){mono}"
                else:
                    body = cs + mono
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def parse(self, text: str):
        t = _normalize_text(text).replace(" ", "")
        if not t:
            raise ElementSyntaxError(text, 0, "empty element")
        v = re.escape(self.var)
        coef = r"(?:\((?P<paren>[0-9i+\-]+)\)|(?P<num>\d*i|\d+))?"
        expo = rf"(?:(?P<var>{v})(?:\^(?:\{{(?P<e1>[+-]?\d+)\}}|\((?P<e2>[+-]?\d+)\)|(?P<e3>[+-]?\d+)))?)?"
        term = re.compile(rf"(?P<sign>[+-]?){coef}\*?{expo}")
        pos = 0
        acc: dict = {}
        while pos < len(t):
            m = term.match(t, pos)
            if m is None or m.end() == pos or (not m.group("paren") and not m.group("num") and not m.group("var")):
                raise ElementSyntaxError(text, pos, "malformed term")
            if pos > 0 and not m.group("sign"):
                raise ElementSyntaxError(text, pos, "expected '+' or '-'")
            if m.group("paren") is not None:
                c = _g_parse(m.group("paren"), text, m.start("paren"))
            elif m.group("num"):
                c = _g_parse(m.group("num"), text, m.start("num"))
            else:
                c = (1, 0)
            if m.group("sign") == "-":
                c = (-c[0], -c[1])
            if m.group("var"):
                e = m.group("e1") or m.group("e2") or m.group("e3")
                k = int(e) if e is not None else 1
            else:
                k = 0
            acc[k] = _g_add(acc.get(k, (0, 0)), c)
            pos = m.end()
        return _l_from_dict(acc)

    def sort_key(self, a):
        return self.format(a)


def parse_ring_spec(text: str) -> Ring:
    """Parse ``Z5``, ``GAUSS`` or ``LAURENT q`` (case-insensitive keywords)."""
    t = text.strip()
    m = re.fullmatch(r"[Zz]\s*(\d+)", t)
    if m:
        return Zn(int(m.group(1)))
    u = t.upper()
    if u in ("GAUSS", "GAUSSIAN", "C"):
        return Gaussian()
    m = re.fullmatch(r"(?i:LAURENT)(?:\s+([A-Za-z]))?", t)
    if m:
        return LaurentGaussian(m.group(1) or "q")
    raise RingError(f"unknown ring spec {text!r}")


def arith(ring: Ring, op: str, a, b=None):
    """Apply ``add``, ``sub``, ``mul`` or ``neg`` after checking membership."""
    ring.check(a)
    if op == "neg":
        return ring.neg(a)
    ring.check(b)
    if op == "add":
        return ring.add(a, b)
    if op == "sub":
        return ring.sub(a, b)
    if op == "mul":
        return ring.mul(a, b)
    raise RingError(f"unknown operation {op!r}")


def invert(ring: Ring, a):
    return ring.inv(ring.check(a))


def is_unit(ring: Ring, a) -> bool:
    return ring.is_unit(ring.check(a))


def parse_elem(ring: Ring, text: str):
    return ring.parse(text)


def format_elem(ring: Ring, a) -> str:
    return ring.format(ring.check(a))
