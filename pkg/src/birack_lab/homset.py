"""Birack colorings of framed diagrams.

A coloring assigns an element of the birack to every semiarc. At each
crossing the four port colors satisfy ``S(p, q) = (r, s)`` where
``S(x, y) = (y ▷̄ x, x ⊳ y)`` and

* positive crossing: ``(p, q, r, s) = (ui, oo, oi, uo)``, i.e.
  ``uo = ui ⊳ oo`` and ``oi = oo ▷̄ ui``;
* negative crossing: ``(p, q, r, s) = (uo, oi, oo, ui)``, i.e.
  ``ui = uo ⊳ oi`` and ``oo = oi ▷̄ uo``.

Colorings are returned as tuples of 1-indexed colors, one per semiarc.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .birack import FiniteBirack
from .diagram import FramedDiagram
from .parallel import resolve_jobs

__all__ = [
    "crossing_relations",
    "enumerate_colorings",
    "counting_invariant",
    "brute_force_colorings",
    "is_coloring",
]

Coloring = tuple[int, ...]


def crossing_relations(D: FramedDiagram) -> list[tuple[int, int, int, int]]:
    """Semiarc quadruples ``(p, q, r, s)`` with ``S(col p, col q) = (col r, col s)``."""
    rels = []
    for c in D.crossing_ids:
        pt = D.ports[c]
        if pt.sign > 0:
            rels.append((pt.ui, pt.oo, pt.oi, pt.uo))
        else:
            rels.append((pt.uo, pt.oi, pt.oo, pt.ui))
    return rels


def is_coloring(D: FramedDiagram, X: FiniteBirack, coloring: Sequence[int]) -> bool:
    """Check every crossing relation for a 1-indexed coloring."""
    if len(coloring) != D.n_semiarcs or any(not 1 <= v <= X.n for v in coloring):
        return False
    col = [v - 1 for v in coloring]
    return all(
        X.O[col[q]][col[p]] == col[r] and X.U[col[p]][col[q]] == col[s]
        for p, q, r, s in crossing_relations(D)
    )


class _Solver:
    def __init__(self, D: FramedDiagram, X: FiniteBirack):
        self.N = D.n_semiarcs
        self.n = X.n
        self.U, self.O, self.Sinv = X.U, X.O, X.S_inv
        self.rels = crossing_relations(D)
        touching: list[list[int]] = [[] for _ in range(self.N)]
        for k, rel in enumerate(self.rels):
            for a in set(rel):
                touching[a].append(k)
        self.touching = touching

    def _propagate(self, col: list[int], start: int, trail: list[int]) -> bool:
        U, O, Sinv, rels = self.U, self.O, self.Sinv, self.rels
        queue = [start]
        while queue:
            a = queue.pop()
            for k in self.touching[a]:
                p, q, r, s = rels[k]
                cp, cq, cr, cs = col[p], col[q], col[r], col[s]
                if cp >= 0 and cq >= 0:
                    vr, vs = O[cq][cp], U[cp][cq]
                    for idx, cur, v in ((r, cr, vr), (s, cs, vs)):
                        if cur < 0:
                            col[idx] = v
                            trail.append(idx)
                            queue.append(idx)
                        elif cur != v:
                            return False
                    if r == s and col[r] != vr:
                        return False
                elif cr >= 0 and cs >= 0:
                    vp, vq = Sinv[(cr, cs)]
                    for idx, cur, v in ((p, cp, vp), (q, cq, vq)):
                        if cur < 0:
                            col[idx] = v
                            trail.append(idx)
                            queue.append(idx)
                        elif cur != v:
                            return False
                    if p == q and col[p] != vp:
                        return False
        return True

    def solve(self, first: int | None = None) -> list[Coloring]:
        col = [-1] * self.N
        out: list[Coloring] = []

        def rec(start_idx: int):
            i = start_idx
            while i < self.N and col[i] >= 0:
                i += 1
            if i == self.N:
                out.append(tuple(v + 1 for v in col))
                return
            values = range(self.n) if (first is None or i != 0) else [first]
            for v in values:
                trail = [i]
                col[i] = v
                if self._propagate(col, i, trail):
                    rec(i + 1)
                for t in trail:
                    col[t] = -1

        rec(0)
        return out


def _solve_branch(args):
    D, X, first = args
    return _Solver(D, X).solve(first)


def enumerate_colorings(D: FramedDiagram, X: FiniteBirack, jobs: int | None = None) -> list[Coloring]:
    """All colorings of ``D`` by ``X``, sorted lexicographically.

    Backtracking assigns the first uncolored semiarc in traversal order and
    propagates through every crossing where either input pair of ``S`` is
    known. With ``jobs > 1`` the color of semiarc 0 is split across worker
    processes.
    """
    if D.n_semiarcs == 0:
        return [()]
    workers = resolve_jobs(jobs)
    if workers > 1 and X.n > 1:
        with ProcessPoolExecutor(max_workers=min(workers, X.n)) as ex:
            parts = ex.map(_solve_branch, [(D, X, v) for v in range(X.n)])
            res = [c for part in parts for c in part]
    else:
        res = _Solver(D, X).solve()
    return sorted(res)


def counting_invariant(D: FramedDiagram, X: FiniteBirack, jobs: int | None = None) -> int:
    return len(enumerate_colorings(D, X, jobs))


def brute_force_colorings(D: FramedDiagram, X: FiniteBirack) -> list[Coloring]:
    """Reference enumeration over all ``n^N`` assignments."""
    return sorted(
        c for c in itertools.product(range(1, X.n + 1), repeat=D.n_semiarcs) if is_coloring(D, X, c)
    )
