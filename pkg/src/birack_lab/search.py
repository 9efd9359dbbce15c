"""Backtracking search for birack brackets over ``Z_n``.

Entries are assigned in a fixed order: all of ``A`` row by row, then all of
``B``, with the diagonal entry of each row placed first. After every
assignment the search checks

* δ-constancy, once both ``A[x][y]`` and ``B[x][y]`` are known;
* axiom (i), once the four entries of a writhe-weight equation are known;
* each axiom (iii) equation, once its entries are known.

Brackets are yielded in lexicographic order of the assignment sequence, with
the units of the ring tried in increasing order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .birack import FiniteBirack
from .bracket import (
    EQUATION_ENTRIES,
    BirackBracket,
    axiom3_equation,
    bracket_equations,
    delta_of_pair,
    equation_pairs,
)
from .parallel import resolve_jobs
from .rings import Ring, Zn

__all__ = ["SearchConfig", "search_brackets", "brute_force_brackets", "entry_order"]


@dataclass
class SearchConfig:
    """Search options.

    ``seed_entries`` maps ``("A" | "B", x, y)`` (0-indexed) to fixed values.
    """

    ring: Ring
    limit: int = 0
    delta_filter: object = None
    homogeneous_only: bool = False
    seed_entries: Mapping[tuple[str, int, int], object] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.ring, Zn):
            raise ValueError("bracket search needs a finite ring Zn")


def entry_order(n: int) -> list[tuple[str, int, int]]:
    order = []
    for name in ("A", "B"):
        for x in range(n):
            order.append((name, x, x))
            order += [(name, x, y) for y in range(n) if y != x]
    return order


class _Search:
    def __init__(self, X: FiniteBirack, cfg: SearchConfig):
        self.X, self.cfg, self.R = X, cfg, cfg.ring
        n = X.n
        self.n = n
        self.order = entry_order(n)
        self.pos = {e: i for i, e in enumerate(self.order)}
        R = self.R
        self.units = [u for u in range(R.n) if R.is_unit(u)]
        for key, v in cfg.seed_entries.items():
            if key not in self.pos:
                raise ValueError(f"bad seed entry {key!r}")
            if not R.is_unit(v):
                raise ValueError(f"seed entry {key!r} = {v} is not a unit")

        # checks[i] lists the constraints that become decidable once entry i is set
        checks: list[list] = [[] for _ in self.order]

        def attach(entries, item):
            checks[max(self.pos[e] for e in entries)].append(item)

        for x in range(n):
            for y in range(n):
                attach([("A", x, y), ("B", x, y)], ("delta", x, y))
        for x in range(n):
            xo, xu = X.O[x][x], X.U[x][x]
            attach([("A", x, x), ("B", x, x), ("A", xo, xu), ("B", xo, xu)], ("w", x, xo, xu))
        for x, y, z, P, Q, T in bracket_equations(X):
            pairs = equation_pairs(x, y, z, P, Q, T)
            for k, template in enumerate(EQUATION_ENTRIES, 1):
                ents = [(nm, *pairs[p]) for nm, p in template]
                attach(ents, ("iii", k, x, y, z, P, Q, T))
        self.checks = checks

    def _ok(self, i: int, A, B, state) -> bool:
        R = self.R
        for item in self.checks[i]:
            kind = item[0]
            if kind == "delta":
                _, x, y = item
                d = delta_of_pair(R, A[x][y], B[x][y])
                if state["delta"] is None:
                    if R.is_zero(d):
                        return False
                    if self.cfg.delta_filter is not None and d != self.cfg.delta_filter:
                        return False
                    state["delta"] = d
                elif d != state["delta"]:
                    return False
            elif kind == "w":
                _, x, xo, xu = item
                w1 = R.mul(R.mul(A[x][x], A[x][x]), R.inv(B[x][x]))
                w2 = R.mul(R.mul(A[xo][xu], A[xo][xu]), R.inv(B[xo][xu]))
                if w1 != w2:
                    return False
            else:
                _, k, x, y, z, P, Q, T = item
                lhs, rhs = axiom3_equation(k, R, A, B, state["delta"], x, y, z, P, Q, T)
                if lhs != rhs:
                    return False
        return True

    def run(self, first_values=None) -> Iterator[tuple]:
        n, order = self.n, self.order
        A = [[None] * n for _ in range(n)]
        B = [[None] * n for _ in range(n)]
        state = {"delta": None}
        seeds = self.cfg.seed_entries
        # δ is fixed by the first complete (A, B) pair; every equation that
        # uses δ also reads a B entry, so it is only checked after that.

        def rec(i: int):
            if i == len(order):
                yield ([r[:] for r in A], [r[:] for r in B], state["delta"])
                return
            name, x, y = order[i]
            M = A if name == "A" else B
            if (name, x, y) in seeds:
                values = [seeds[(name, x, y)]]
            elif i == 0 and first_values is not None:
                values = first_values
            else:
                values = self.units
            for v in values:
                M[x][y] = v
                saved = state["delta"]
                if self._ok(i, A, B, state):
                    yield from rec(i + 1)
                state["delta"] = saved
            M[x][y] = None

        yield from rec(0)


def _accept(X, cfg, A, B) -> BirackBracket | None:
    beta = BirackBracket(X, A, B, cfg.ring, validate=False)
    if cfg.homogeneous_only and not beta.homogeneous:
        return None
    return beta


def _branch(args):
    X, cfg, v = args
    out = []
    for A, B, _ in _Search(X, cfg).run([v]):
        beta = _accept(X, cfg, A, B)
        if beta is not None:
            out.append((A, B))
            if cfg.limit and len(out) >= cfg.limit:
                break
    return out


def search_brackets(X: FiniteBirack, cfg: SearchConfig, jobs: int | None = None) -> Iterator[BirackBracket]:
    """Yield every bracket on ``X`` over ``cfg.ring`` that passes the filters.

    With ``cfg.limit > 0`` at most that many are produced. With ``jobs > 1``
    the subtrees below the first assigned entry run in worker processes and
    their results are merged back in sequential order.
    """
    workers = resolve_jobs(jobs)
    emitted = 0
    first_key = entry_order(X.n)[0]
    if workers > 1 and first_key not in cfg.seed_entries:
        units = [u for u in range(cfg.ring.n) if cfg.ring.is_unit(u)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_branch, [(X, cfg, v) for v in units]):
                for A, B in part:
                    yield BirackBracket(X, A, B, cfg.ring, validate=False)
                    emitted += 1
                    if cfg.limit and emitted >= cfg.limit:
                        return
        return
    for A, B, _ in _Search(X, cfg).run():
        beta = _accept(X, cfg, A, B)
        if beta is None:
            continue
        yield beta
        emitted += 1
        if cfg.limit and emitted >= cfg.limit:
            return


def brute_force_brackets(X: FiniteBirack, ring: Zn) -> list[tuple]:
    """All valid ``(A, B)`` by exhaustive validation of every unit matrix pair.

    Only feasible for tiny ``n``; used as a test oracle.
    """
    import itertools

    from .bracket import validate_bracket

    n = X.n
    units = [u for u in range(ring.n) if ring.is_unit(u)]
    order = entry_order(n)
    out = []
    for vals in itertools.product(units, repeat=len(order)):
        A = [[0] * n for _ in range(n)]
        B = [[0] * n for _ in range(n)]
        for (nm, x, y), v in zip(order, vals):
            (A if nm == "A" else B)[x][y] = v
        if validate_bracket(X, A, B, ring).valid:
            out.append((A, B))
    return out
