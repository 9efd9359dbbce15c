"""Finite framed biracks given by operation tables.

A framed birack is a finite set ``X = {1, ..., n}`` with two operations, the
*under* operation ``x ⊳ y`` and the *over* operation ``x ▷̄ y``. Tables are
entered 1-indexed (row ``x``, column ``y``) and stored 0-indexed as numpy
arrays. The axioms checked by :func:`validate_birack` are

* (ii) for every ``x`` the maps ``y ↦ y ▷̄ x`` and ``y ↦ y ⊳ x`` are
  bijections, and ``S(x, y) = (y ▷̄ x, x ⊳ y)`` is a bijection of ``X × X``;
* (iii) the three exchange laws;
* (i) ``(x ⊳ x) ▷̄ (x ▷̄ x) = (x ▷̄ x) ⊳ (x ⊳ x)``.

The kink map ``π`` is the unique bijection with ``x ⊳ π(x) = π(x) ▷̄ x``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "BirackFormatError",
    "BirackAxiomError",
    "ConstraintError",
    "Violation",
    "ValidationReport",
    "FiniteBirack",
    "validate_birack",
    "kink_map",
    "birack_rank",
    "alexander_birack",
    "enumerate_endomorphisms",
    "check_homomorphism",
    "parse_birack_text",
    "format_birack_text",
    "trivial_birack",
]


class BirackFormatError(ValueError):
    """Malformed operation tables (shape or entry range)."""


class BirackAxiomError(ValueError):
    """Tables are well formed but violate a birack axiom."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


class ConstraintError(ValueError):
    """Parameters of a parametrized family violate a required relation."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    message: str

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness), "message": self.message}


@dataclass
class ValidationReport:
    valid: bool
    violations: list[Violation] = field(default_factory=list)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        first = self.violations[0]
        more = len(self.violations) - 1
        tail = f" (+{more} more)" if more else ""
        return f"axiom ({first.axiom}) violated: {first.message}{tail}"

    def to_json(self) -> dict:
        return {"valid": self.valid, "violations": [v.to_json() for v in self.violations]}


def _as_table(table, name: str) -> np.ndarray:
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise BirackFormatError(f"{name} table is not a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise BirackFormatError(f"{name} table is empty")
    for i, r in enumerate(rows, 1):
        if len(r) != n:
            raise BirackFormatError(f"{name} table row {i} has {len(r)} entries, expected {n}")
        for j, v in enumerate(r, 1):
            if isinstance(v, bool) or int(v) != v or not 1 <= v <= n:
                raise BirackFormatError(f"{name} table entry ({i},{j}) = {v} is outside 1..{n}")
    return np.array(rows, dtype=np.int64) - 1


def _check_axioms(U: np.ndarray, O: np.ndarray, max_witnesses: int = 20) -> list[Violation]:
    n = U.shape[0]
    out: list[Violation] = []
    X = np.arange(n)

    # (ii) column maps and S
    for x in range(n):
        col = O[:, x]
        if len(set(col.tolist())) != n:
            y1, y2 = _collision(col)
            out.append(Violation("ii", (x + 1, y1 + 1, y2 + 1),
                                 f"y -> y ▷̄ {x + 1} is not injective: {y1 + 1} and {y2 + 1} both map to {col[y1] + 1}"))
        col = U[:, x]
        if len(set(col.tolist())) != n:
            y1, y2 = _collision(col)
            out.append(Violation("ii", (x + 1, y1 + 1, y2 + 1),
                                 f"y -> y ⊳ {x + 1} is not injective: {y1 + 1} and {y2 + 1} both map to {col[y1] + 1}"))
    xs, ys = np.meshgrid(X, X, indexing="ij")
    s_img = O[ys, xs] * n + U[xs, ys]
    if len(np.unique(s_img)) != n * n:
        flat = s_img.ravel().tolist()
        seen: dict[int, int] = {}
        for k, v in enumerate(flat):
            if v in seen:
                a, b = divmod(seen[v], n), divmod(k, n)
                out.append(Violation("ii", (a[0] + 1, a[1] + 1, b[0] + 1, b[1] + 1),
                                     f"S(x,y) = (y ▷̄ x, x ⊳ y) is not injective: S{(a[0] + 1, a[1] + 1)} = S{(b[0] + 1, b[1] + 1)}"))
                break
            seen[v] = k

    # (iii) exchange laws, vectorized over all triples
    x, y, z = np.meshgrid(X, X, X, indexing="ij")
    laws = [
        ("U[U[x][y]][U[z][y]] = U[U[x][z]][O[y][z]]",
         U[U[x, y], U[z, y]], U[U[x, z], O[y, z]]),
        ("O[U[x][y]][U[z][y]] = U[O[x][z]][O[y][z]]",
         O[U[x, y], U[z, y]], U[O[x, z], O[y, z]]),
        ("O[O[x][y]][O[z][y]] = O[O[x][z]][U[y][z]]",
         O[O[x, y], O[z, y]], O[O[x, z], U[y, z]]),
    ]
    for k, (text, lhs, rhs) in enumerate(laws, 1):
        bad = np.argwhere(lhs != rhs)
        for t in bad[:max_witnesses]:
            w = tuple(int(v) + 1 for v in t)
            out.append(Violation("iii", w, f"exchange law {k} fails at (x,y,z)={w}: {text}"))

    # (i)
    for x in range(n):
        a, b = U[x, x], O[x, x]
        if O[a, b] != U[b, a]:
            out.append(Violation("i", (x + 1,),
                                 f"(x ⊳ x) ▷̄ (x ▷̄ x) != (x ▷̄ x) ⊳ (x ⊳ x) at x={x + 1}"))
    return out


def _collision(col: np.ndarray) -> tuple[int, int]:
    seen: dict[int, int] = {}
    for i, v in enumerate(col.tolist()):
        if v in seen:
            return seen[v], i
        seen[v] = i
    raise AssertionError("no collision")


def validate_birack(under, over) -> ValidationReport:
    """Check the framed birack axioms for 1-indexed tables.

    Raises:
        BirackFormatError: if the tables are not square of equal size with
            entries in ``1..n``.
    """
    U = _as_table(under, "⊳")
    O = _as_table(over, "▷̄")
    if U.shape != O.shape:
        raise BirackFormatError(f"table sizes differ: {U.shape[0]} vs {O.shape[0]}")
    violations = _check_axioms(U, O)
    return ValidationReport(not violations, violations)


class FiniteBirack:
    """A validated finite framed birack.

    ``U[x][y]`` is ``x ⊳ y`` and ``O[x][y]`` is ``x ▷̄ y``, both 0-indexed
    tuples of tuples for fast lookup. Use :attr:`under` / :attr:`over` for the
    1-indexed tables.
    """

    def __init__(self, under, over, labels: Sequence | None = None, validate: bool = True):
        if validate:
            report = validate_birack(under, over)
            if not report.valid:
                raise BirackAxiomError(report)
        Ua = _as_table(under, "⊳")
        Oa = _as_table(over, "▷̄")
        self.n = Ua.shape[0]
        self.U = tuple(tuple(r) for r in Ua.tolist())
        self.O = tuple(tuple(r) for r in Oa.tolist())
        self.labels = list(labels) if labels is not None else None
        self._kink = None
        # S^{-1} as a lookup table: (r, s) -> (p, q) with S(p, q) = (r, s)
        sinv = {}
        for p in range(self.n):
            for q in range(self.n):
                sinv[(self.O[q][p], self.U[p][q])] = (p, q)
        self.S_inv = sinv

    @property
    def under(self) -> list[list[int]]:
        return [[v + 1 for v in r] for r in self.U]

    @property
    def over(self) -> list[list[int]]:
        return [[v + 1 for v in r] for r in self.O]

    def S(self, x: int, y: int) -> tuple[int, int]:
        """0-indexed ``S(x, y) = (y ▷̄ x, x ⊳ y)``."""
        return self.O[y][x], self.U[x][y]

    @property
    def kink(self) -> list[int]:
        """The kink map as a 1-indexed image list."""
        if self._kink is None:
            self._kink = _solve_kink(self.U, self.O)
        return [p + 1 for p in self._kink]

    @property
    def rank(self) -> int:
        return _perm_order([p - 1 for p in self.kink])

    def __eq__(self, other):
        return isinstance(other, FiniteBirack) and self.U == other.U and self.O == other.O

    def __hash__(self):
        return hash((self.U, self.O))

    def __repr__(self):
        return f"FiniteBirack(n={self.n}, under={self.under}, over={self.over})"


def trivial_birack(n: int = 1) -> FiniteBirack:
    """The birack with ``x ⊳ y = x ▷̄ y = x``."""
    t = [[x + 1] * n for x in range(n)]
    return FiniteBirack(t, t)


def _solve_kink(U, O) -> list[int]:
    n = len(U)
    pi = []
    for x in range(n):
        sols = [p for p in range(n) if U[x][p] == O[p][x]]
        if len(sols) != 1:
            raise ValueError(f"kink equation has {len(sols)} solutions at x={x + 1}; birack invalid")
        pi.append(sols[0])
    if len(set(pi)) != n:
        raise ValueError("kink map is not a bijection; birack invalid")
    return pi


def _perm_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    order = 1
    for s in range(len(p)):
        if seen[s]:
            continue
        k, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        order = order * k // math.gcd(order, k)
    return order


def kink_map(X: FiniteBirack) -> list[int]:
    """1-indexed kink map ``π`` of ``X``."""
    return X.kink


def birack_rank(X: FiniteBirack) -> int:
    """Smallest ``k >= 1`` with ``π^k = id``."""
    return X.rank


def alexander_birack(m: int, t: int, s: int, r: int) -> FiniteBirack:
    """The ``(t, s, r)``-birack on ``Z_m``: ``x ⊳ y = tx + sy``, ``x ▷̄ y = rx``.

    Residue ``k`` is relabeled as element ``k + 1``; ``labels`` records the
    residue of each element.

    Raises:
        ConstraintError: if ``t`` or ``r`` is not a unit, ``s² != s(r - t)``,
            or ``(r - s) t^{-1}`` is not a unit.
    """
    if m < 1:
        raise ConstraintError("modulus must be positive")
    t, s, r = t % m, s % m, r % m
    if (s * s - s * (r - t)) % m:
        raise ConstraintError(
            f"relation s^2 = s(r - t) fails mod {m}: s^2 = {s * s % m}, s(r - t) = {s * (r - t) % m}")
    if math.gcd(t, m) != 1:
        raise ConstraintError(f"t = {t} is not a unit mod {m}")
    if math.gcd(r, m) != 1:
        raise ConstraintError(f"r = {r} is not a unit mod {m}")
    tinv = pow(t, -1, m) if m > 1 else 0
    k = (r - s) * tinv % m
    if math.gcd(k, m) != 1:
        raise ConstraintError(f"kink map x -> (r - s)t^-1 x = {k}x is not a bijection mod {m}")
    under = [[(t * x + s * y) % m + 1 for y in range(m)] for x in range(m)]
    over = [[(r * x) % m + 1 for _ in range(m)] for x in range(m)]
    return FiniteBirack(under, over, labels=list(range(m)))


def check_homomorphism(X: FiniteBirack, f: Sequence[int]) -> bool:
    """Whether the 1-indexed image list ``f`` is an endomorphism of ``X``."""
    if len(f) != X.n:
        raise ValueError(f"map has {len(f)} images, expected {X.n}")
    if any(not 1 <= v <= X.n for v in f):
        raise ValueError(f"map images must lie in 1..{X.n}")
    g = np.asarray(f, dtype=np.int64) - 1
    U = np.asarray(X.U)
    O = np.asarray(X.O)
    return bool(np.array_equal(g[U], U[np.ix_(g, g)]) and np.array_equal(g[O], O[np.ix_(g, g)]))


def enumerate_endomorphisms(X: FiniteBirack) -> list[list[int]]:
    """All endomorphisms of ``X`` as 1-indexed image lists, sorted.

    Backtracking over ``f(0), f(1), ...`` rejecting as soon as any pair of
    assigned arguments whose products are also assigned breaks a table.
    """
    n, U, O = X.n, X.U, X.O
    f = [-1] * n
    out: list[list[int]] = []

    def consistent(k: int) -> bool:
        # check all pairs involving k among assigned 0..k
        for a in range(k + 1):
            for x, y in ((a, k), (k, a)):
                fx, fy = f[x], f[y]
                u, o = U[x][y], O[x][y]
                if f[u] >= 0 and f[u] != U[fx][fy]:
                    return False
                if f[o] >= 0 and f[o] != O[fx][fy]:
                    return False
        # newly assigned k may be the product of earlier pairs
        for x in range(k + 1):
            for y in range(k + 1):
                if U[x][y] == k and f[k] != U[f[x]][f[y]]:
                    return False
                if O[x][y] == k and f[k] != O[f[x]][f[y]]:
                    return False
        return True

    def rec(k: int):
        if k == n:
            out.append([v + 1 for v in f])
            return
        for v in range(n):
            f[k] = v
            if consistent(k):
                rec(k + 1)
        f[k] = -1

    rec(0)
    return sorted(out)


def parse_birack_text(text: str, source: str = "<birack>") -> FiniteBirack:
    """Parse the birack file format.

    Line 1 holds ``n``, then ``n`` rows of the ⊳ table, a blank line, and
    ``n`` rows of the ▷̄ table. Lines starting with ``#`` are ignored.

    Raises:
        BirackFormatError: with file and line information.
        BirackAxiomError: if the tables are not a birack.
    """
    under, over = _read_tables(text, source)
    return FiniteBirack(under, over)


def _read_tables(text: str, source: str):
    lines = [(i, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines(), 1)]
    body = [(i, ln) for i, ln in lines if ln]
    if not body:
        raise BirackFormatError(f"{source}: empty file")
    i0, first = body[0]
    try:
        n = int(first)
    except ValueError:
        raise BirackFormatError(f"{source}:{i0}: expected the element count n, got {first!r}") from None
    rows = body[1:]
    if len(rows) != 2 * n:
        raise BirackFormatError(f"{source}: expected {2 * n} table rows after n={n}, found {len(rows)}")
    tables = []
    for block in (rows[:n], rows[n:]):
        t = []
        for i, ln in block:
            try:
                vals = [int(v) for v in ln.replace(",", " ").split()]
            except ValueError:
                raise BirackFormatError(f"{source}:{i}: non-integer entry in {ln!r}") from None
            if len(vals) != n:
                raise BirackFormatError(f"{source}:{i}: expected {n} entries, found {len(vals)}")
            for v in vals:
                if not 1 <= v <= n:
                    raise BirackFormatError(f"{source}:{i}: entry {v} outside 1..{n}")
            t.append(vals)
        tables.append(t)
    return tables[0], tables[1]


def read_birack_tables(text: str, source: str = "<birack>"):
    """Parse a birack file into raw 1-indexed tables without validating."""
    return _read_tables(text, source)


def format_birack_text(X: FiniteBirack) -> str:
    lines = [str(X.n)]
    lines += [" ".join(map(str, r)) for r in X.under]
    lines.append("")
    lines += [" ".join(map(str, r)) for r in X.over]
    return "\n".join(lines) + "\n"


def compose(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """``f ∘ g`` for 1-indexed image lists."""
    return [f[v - 1] for v in g]


def all_maps(n: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(1, n + 1), repeat=n)
