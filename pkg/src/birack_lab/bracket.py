"""Birack brackets and their state-sum invariants.

A birack bracket on ``X`` with values in a ring ``R`` is a pair of ``n × n``
matrices ``A``, ``B`` of units. At a crossing whose ``S``-input colors are
``(x, y)`` (see :mod:`birack_lab.homset`) the oriented smoothing carries
``A[x][y]`` and the disoriented one ``B[x][y]``; at negative crossings the
inverses are used. Every loop of a state contributes the factor

    δ = -A[x][y] B[x][y]^{-1} - A[x][y]^{-1} B[x][y],

which must be the same nonzero element for every pair. The state sum of a
coloring ``f`` is

    β(f) = Σ_states Π_crossings coefficient · δ^(number of loops).

Matrices are entered 1-indexed in the docs but stored as 0-indexed lists.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .birack import FiniteBirack
from .diagram import FramedDiagram, all_state_loop_counts
from .homset import crossing_relations, enumerate_colorings, is_coloring
from .parallel import resolve_jobs
from .rings import Ring, parse_ring_spec

__all__ = [
    "BracketError",
    "BracketFormatError",
    "ResourceLimitError",
    "BracketReport",
    "BirackBracket",
    "validate_bracket",
    "bracket_equations",
    "state_sum",
    "InvariantMultiset",
    "bracket_multiset",
    "format_invariant_poly",
    "format_term",
    "parse_bracket_text",
    "format_bracket_text",
    "kauffman_bracket",
]

DEFAULT_CROSSING_LIMIT = 24


class BracketError(ValueError):
    """A bracket fails validation or is used inconsistently."""


class BracketFormatError(ValueError):
    """Malformed bracket file."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded a configured size limit."""


@dataclass
class BracketReport:
    valid: bool
    delta: object = None
    w: list = field(default_factory=list)
    homogeneous: bool = False
    violations: list = field(default_factory=list)
    ring: Ring | None = None

    def summary(self) -> str:
        if self.valid:
            return "valid"
        more = len(self.violations) - 1
        return self.violations[0] + (f" (+{more} more)" if more else "")

    def to_json(self) -> dict:
        fmt = self.ring.format if self.ring is not None else str
        return {
            "valid": self.valid,
            "delta": None if self.delta is None else fmt(self.delta),
            "w": [fmt(v) for v in self.w],
            "homogeneous": self.homogeneous,
            "violations": list(self.violations),
        }


def bracket_equations(X: FiniteBirack):
    """Yield ``(x, y, z, P, Q, T)`` index data for the axiom (iii) equations.

    ``P``, ``Q``, ``T`` are the color pairs at the three crossings on the
    far side of the Reidemeister III move.
    """
    U, O, n = X.U, X.O, X.n
    for x, y, z in itertools.product(range(n), repeat=3):
        yield x, y, z, (U[x][y], O[z][y]), (O[y][x], O[z][x]), (U[x][z], U[y][z])


# Entries read by each axiom (iii) equation: (matrix, pair name).
EQUATION_ENTRIES = (
    (("A", "xy"), ("A", "yz"), ("A", "P"), ("A", "xz"), ("A", "Q"), ("A", "T")),
    (("A", "xy"), ("B", "yz"), ("B", "P"), ("B", "xz"), ("B", "Q"), ("A", "T")),
    (("B", "xy"), ("A", "yz"), ("B", "P"), ("B", "xz"), ("A", "Q"), ("B", "T")),
    (("A", "xy"), ("A", "yz"), ("B", "P"), ("A", "xz"), ("A", "Q"), ("A", "T"),
     ("B", "Q"), ("B", "T"), ("B", "xz")),
    (("A", "xy"), ("A", "yz"), ("A", "P"), ("B", "xy"), ("B", "yz"), ("B", "P"),
     ("B", "xz"), ("A", "Q"), ("A", "T")),
)


def equation_pairs(x, y, z, P, Q, T) -> dict:
    return {"xy": (x, y), "yz": (y, z), "xz": (x, z), "P": P, "Q": Q, "T": T}


def axiom3_equation(k: int, R: Ring, A, B, delta, x, y, z, P, Q, T):
    """Both sides of axiom (iii) equation ``k`` (1..5) at the triple ``(x, y, z)``."""
    m, ad = R.mul, R.add
    axy, ayz, axz = A[x][y], A[y][z], A[x][z]
    bxy, byz, bxz = B[x][y], B[y][z], B[x][z]
    aP, aQ, aT = A[P[0]][P[1]], A[Q[0]][Q[1]], A[T[0]][T[1]]
    bP, bQ, bT = B[P[0]][P[1]], B[Q[0]][Q[1]], B[T[0]][T[1]]
    if k == 1:
        return m(m(axy, ayz), aP), m(m(axz, aQ), aT)
    if k == 2:
        return m(m(axy, byz), bP), m(m(bxz, bQ), aT)
    if k == 3:
        return m(m(bxy, ayz), bP), m(m(bxz, aQ), bT)
    if k == 4:
        rhs = ad(ad(m(m(axz, bQ), aT), m(m(axz, aQ), bT)),
                 ad(m(delta, m(m(axz, bQ), bT)), m(m(bxz, bQ), bT)))
        return m(m(axy, ayz), bP), rhs
    lhs = ad(ad(m(m(bxy, ayz), aP), m(m(axy, byz), aP)),
             ad(m(delta, m(m(bxy, byz), aP)), m(m(bxy, byz), bP)))
    return lhs, m(m(bxz, aQ), aT)


def _axiom3_residuals(R: Ring, A, B, delta, x, y, z, P, Q, T):
    return tuple(axiom3_equation(k, R, A, B, delta, x, y, z, P, Q, T) for k in range(1, 6))


def delta_of_pair(R: Ring, a, b):
    return R.sub(R.neg(R.mul(a, R.inv(b))), R.mul(R.inv(a), b))


def validate_bracket(X: FiniteBirack, A: Sequence[Sequence], B: Sequence[Sequence], ring: Ring,
                     max_violations: int = 200) -> BracketReport:
    """Check the bracket axioms and report δ, the writhe weights and homogeneity."""
    n = X.n
    for name, M in (("A", A), ("B", B)):
        if len(M) != n or any(len(r) != n for r in M):
            raise BracketFormatError(f"matrix {name} must be {n}x{n}")
        for r in M:
            for v in r:
                ring.check(v)
    viol: list[str] = []
    fmt = ring.format
    for name, M in (("A", A), ("B", B)):
        for x in range(n):
            for y in range(n):
                if not ring.is_unit(M[x][y]):
                    viol.append(f"entry {name}[{x + 1},{y + 1}] = {fmt(M[x][y])} is not a unit")
    if viol:
        return BracketReport(False, violations=viol, ring=ring)

    delta = None
    first = None
    for x in range(n):
        for y in range(n):
            d = delta_of_pair(ring, A[x][y], B[x][y])
            if delta is None:
                delta, first = d, (x, y)
            elif d != delta:
                viol.append(
                    f"delta is not constant: pair ({first[0] + 1},{first[1] + 1}) gives {fmt(delta)} "
                    f"but pair ({x + 1},{y + 1}) gives {fmt(d)}")
    if viol:
        return BracketReport(False, violations=viol, ring=ring)
    if ring.is_zero(delta):
        viol.append("axiom (ii): delta = -A B^-1 - A^-1 B is zero")

    w = [ring.mul(ring.mul(A[x][x], A[x][x]), ring.inv(B[x][x])) for x in range(n)]
    for x in range(n):
        xo, xu = X.O[x][x], X.U[x][x]
        wx2 = ring.mul(ring.mul(A[xo][xu], A[xo][xu]), ring.inv(B[xo][xu]))
        if w[x] != wx2:
            viol.append(f"axiom (i) fails at x={x + 1}: w_x = {fmt(w[x])} but "
                        f"A^2 B^-1 at ({xo + 1},{xu + 1}) = {fmt(wx2)}")
    for x, y, z, P, Q, T in bracket_equations(X):
        for k, (lhs, rhs) in enumerate(_axiom3_residuals(ring, A, B, delta, x, y, z, P, Q, T), 1):
            if lhs != rhs:
                if len(viol) < max_violations:
                    viol.append(f"axiom (iii) equation {k} fails at (x,y,z)=({x + 1},{y + 1},{z + 1}): "
                                f"{fmt(lhs)} != {fmt(rhs)}")
    homogeneous = all(v == w[0] for v in w)
    return BracketReport(not viol, delta, w, homogeneous, viol, ring)


class BirackBracket:
    """A validated birack bracket.

    Raises:
        BracketError: if the matrices fail :func:`validate_bracket`.
    """

    def __init__(self, X: FiniteBirack, A, B, ring: Ring, validate: bool = True):
        self.X = X
        self.ring = ring
        self.A = [list(r) for r in A]
        self.B = [list(r) for r in B]
        if validate:
            rep = validate_bracket(X, self.A, self.B, ring)
            if not rep.valid:
                raise BracketError(rep.summary())
            self.report = rep
        else:
            d = delta_of_pair(ring, self.A[0][0], self.B[0][0])
            w = [ring.mul(ring.mul(self.A[x][x], self.A[x][x]), ring.inv(self.B[x][x])) for x in range(X.n)]
            self.report = BracketReport(True, d, w, all(v == w[0] for v in w), [], ring)
        self.delta = self.report.delta
        self.w = self.report.w
        self.homogeneous = self.report.homogeneous
        self.Ainv = [[ring.inv(v) for v in r] for r in self.A]
        self.Binv = [[ring.inv(v) for v in r] for r in self.B]

    def matrix_text(self) -> list[list[str]]:
        f = self.ring.format
        return [[f(v) for v in ra] + [f(v) for v in rb] for ra, rb in zip(self.A, self.B)]


class _StateSumPlan:
    """Per-diagram data reused across colorings."""

    def __init__(self, D: FramedDiagram, beta: BirackBracket, limit: int):
        if D.n_crossings > limit:
            raise ResourceLimitError(f"diagram has {D.n_crossings} crossings; limit is {limit}")
        self.rels = crossing_relations(D)
        self.signs = [D.signs[c] for c in D.crossing_ids]
        loops = all_state_loop_counts(D)
        self.loops = loops
        R = beta.ring
        top = max(loops) if loops else 1
        self.delta_pow = [R.one()]
        for _ in range(top):
            self.delta_pow.append(R.mul(self.delta_pow[-1], beta.delta))

    def evaluate(self, beta: BirackBracket, col: Sequence[int]):
        R = beta.ring
        prods = [R.one()]
        for (p, q, _, _), sg in zip(self.rels, self.signs):
            x, y = col[p] - 1, col[q] - 1
            if sg > 0:
                co, cd = beta.A[x][y], beta.B[x][y]
            else:
                co, cd = beta.Ainv[x][y], beta.Binv[x][y]
            prods = [R.mul(v, co) for v in prods] + [R.mul(v, cd) for v in prods]
        by_loops: dict[int, object] = {}
        for s, v in enumerate(prods):
            k = self.loops[s]
            by_loops[k] = R.add(by_loops[k], v) if k in by_loops else v
        total = R.zero()
        for k, v in by_loops.items():
            total = R.add(total, R.mul(v, self.delta_pow[k]))
        return total


def state_sum(D: FramedDiagram, X: FiniteBirack, beta: BirackBracket, f: Sequence[int],
              crossing_limit: int = DEFAULT_CROSSING_LIMIT):
    """β(f) for a single 1-indexed coloring ``f``.

    Raises:
        BracketError: if ``f`` is not a coloring of ``D`` by ``X``.
        ResourceLimitError: if ``D`` has more than ``crossing_limit`` crossings.
    """
    if not is_coloring(D, X, f):
        raise BracketError("not a valid coloring of the diagram")
    return _StateSumPlan(D, beta, crossing_limit).evaluate(beta, f)


class InvariantMultiset:
    """Multiset of ring values, keyed by canonical element."""

    def __init__(self, ring: Ring, values=()):
        self.ring = ring
        self.counts: Counter = Counter(values)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def ordered(self) -> list[tuple[object, int]]:
        return sorted(self.counts.items(), key=lambda kv: self.ring.sort_key(kv[0]), reverse=True)

    def to_json(self) -> dict[str, int]:
        return {self.ring.format(v): c for v, c in self.ordered()}

    def __eq__(self, other):
        if isinstance(other, InvariantMultiset):
            return self.ring == other.ring and self.counts == other.counts
        return NotImplemented

    def __repr__(self):
        return f"InvariantMultiset({self.to_json()})"


def _worker_values(args):
    D, X, beta, cols, limit = args
    plan = _StateSumPlan(D, beta, limit)
    return [plan.evaluate(beta, c) for c in cols]


def coloring_values(D: FramedDiagram, X: FiniteBirack, beta: BirackBracket, colorings=None,
                    jobs: int | None = None, crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> list:
    """β values for each coloring (all colorings of ``D`` when not given)."""
    cols = enumerate_colorings(D, X, jobs) if colorings is None else list(colorings)
    workers = resolve_jobs(jobs)
    if workers > 1 and len(cols) > 1:
        chunks = [cols[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_worker_values, [(D, X, beta, ch, crossing_limit) for ch in chunks]))
        out = [None] * len(cols)
        for i, part in enumerate(parts):
            out[i::workers] = part
        return out
    plan = _StateSumPlan(D, beta, crossing_limit)
    return [plan.evaluate(beta, c) for c in cols]


def bracket_multiset(D: FramedDiagram, X: FiniteBirack, beta: BirackBracket, jobs: int | None = None,
                     crossing_limit: int = DEFAULT_CROSSING_LIMIT) -> InvariantMultiset:
    """The multiset ``{β(f) : f a coloring of D}``."""
    return InvariantMultiset(beta.ring, coloring_values(D, X, beta, None, jobs, crossing_limit))


def _exponent_text(ring: Ring, v) -> str | None:
    """Exponent suffix for a variable; ``None`` means the variable is omitted."""
    if isinstance(v, int):
        if v == 0:
            return None
        return "" if v == 1 else (f"^{v}" if v > 0 else f"^{{{v}}}")
    if ring.is_zero(v):
        return None
    if v == ring.one():
        return ""
    s = ring.format(v)
    return f"^{s}" if s.isdigit() else f"^{{{s}}}"


def format_term(mult: int, ring: Ring, pairs: Sequence[tuple[str, object]]) -> str:
    mono = ""
    for var, v in pairs:
        e = _exponent_text(ring, v)
        if e is not None:
            mono += var + e
    if not mono:
        return str(mult)
    return mono if mult == 1 else f"{mult}{mono}"


def format_invariant_poly(m: InvariantMultiset, var: str = "u") -> str:
    """``Σ mult · u^value`` in canonical order; the empty multiset gives ``"0"``."""
    terms = [format_term(c, m.ring, [(var, v)]) for v, c in m.ordered()]
    return "+".join(terms) if terms else "0"


def kauffman_bracket(ring: Ring, var_power: int = 1) -> tuple[FiniteBirack, BirackBracket]:
    """The Kauffman bracket as a bracket on the 1-element birack (``A = q``, ``B = q^-1``)."""
    from .birack import trivial_birack

    X = trivial_birack(1)
    q = ring.monomial((1, 0), var_power)
    return X, BirackBracket(X, [[q]], [[ring.inv(q)]], ring)


# Bracket files ------------------------------------------------------------------


def _split_row(line: str) -> list[str]:
    return [t for t in line.replace("|", " ").split() if t]


def read_bracket_entries(text: str, source: str = "<bracket>", allow_wild: bool = False):
    """Parse a bracket file into ``(ring, A, B)``; wildcard ``*`` entries become ``None``."""
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    body = [(i, ln) for i, ln in lines if ln]
    if not body:
        raise BracketFormatError(f"{source}: empty file")
    i0, spec = body[0]
    try:
        ring = parse_ring_spec(spec)
    except ValueError as exc:
        raise BracketFormatError(f"{source}:{i0}: {exc}") from None
    rows = body[1:]
    n = len(rows)
    A, B = [], []
    for i, ln in rows:
        toks = _split_row(ln)
        if len(toks) != 2 * n:
            raise BracketFormatError(f"{source}:{i}: expected {2 * n} entries for a {n}x{n} bracket, found {len(toks)}")
        vals = []
        for t in toks:
            if allow_wild and t in ("*", "?"):
                vals.append(None)
                continue
            try:
                vals.append(ring.parse(t))
            except ValueError as exc:
                raise BracketFormatError(f"{source}:{i}: {exc}") from None
        A.append(vals[:n])
        B.append(vals[n:])
    return ring, A, B


def parse_bracket_text(text: str, X: FiniteBirack, source: str = "<bracket>") -> BirackBracket:
    ring, A, B = read_bracket_entries(text, source)
    if len(A) != X.n:
        raise BracketFormatError(f"{source}: bracket is {len(A)}x{len(A)} but the birack has {X.n} elements")
    return BirackBracket(X, A, B, ring)


def format_bracket_text(beta: BirackBracket) -> str:
    rows = beta.matrix_text()
    n = beta.X.n
    lines = [beta.ring.spec()]
    for r in rows:
        lines.append(" ".join(r[:n]) + " | " + " ".join(r[n:]))
    return "\n".join(lines) + "\n"
