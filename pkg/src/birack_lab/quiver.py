"""Birack coloring quivers and their decategorified polynomials.

Vertices of the quiver are the colorings of a diagram. Every endomorphism
``σ`` in the chosen set ``S`` contributes an edge ``v -> σ∘v`` from each
vertex, so every vertex has out-degree ``|S|``. With a bracket the vertices
carry their state-sum values ``β(v)``, and three polynomials are read off:

* in-degree: ``Σ_v u^β(v) v^deg(v)``;
* two-variable: ``Σ_e s^β(source) t^β(target)``;
* maximal path: ``Σ_p x^(Σ_{v in p} β(v)) y^|p|`` over maximal
  non-repeating paths ``p``.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .birack import FiniteBirack, check_homomorphism
from .bracket import BirackBracket, ResourceLimitError, coloring_values, format_term
from .diagram import FramedDiagram
from .homset import enumerate_colorings
from .rings import Ring

__all__ = [
    "QuiverError",
    "ColoringQuiver",
    "DecatPolynomial",
    "build_quiver",
    "in_degree_polynomial",
    "two_variable_polynomial",
    "maximal_paths",
    "maximal_path_polynomial",
    "export_dot",
    "quiver_signature",
]

DEFAULT_PATH_LIMIT = 10**6


class QuiverError(ValueError):
    pass


@dataclass
class ColoringQuiver:
    vertices: list[tuple[int, ...]]
    edges: list[tuple[int, int, int]]
    endos: list[list[int]]
    weights: list | None = None
    ring: Ring | None = None

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in self.vertices]
        for s, t, _ in self.edges:
            succ[s].append(t)
        return succ

    def predecessors(self) -> list[list[int]]:
        pred: list[list[int]] = [[] for _ in self.vertices]
        for s, t, _ in self.edges:
            pred[t].append(s)
        return pred

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, t, _ in self.edges:
            deg[t] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for s, _, _ in self.edges:
            deg[s] += 1
        return deg

    def to_json(self) -> dict:
        fmt = self.ring.format if self.ring is not None else str
        verts = []
        for i, v in enumerate(self.vertices):
            verts.append({"coloring": list(v), "weight": None if self.weights is None else fmt(self.weights[i])})
        return {"vertices": verts, "edges": [list(e) for e in self.edges], "endos": self.endos}


def build_quiver(D: FramedDiagram, X: FiniteBirack, S: Sequence[Sequence[int]],
                 beta: BirackBracket | None = None, jobs: int | None = None) -> ColoringQuiver:
    """Build the (weighted) coloring quiver of ``D`` for the endomorphisms ``S``.

    Raises:
        QuiverError: if some ``σ`` in ``S`` is not an endomorphism of ``X``.
    """
    S = [list(s) for s in S]
    for k, s in enumerate(S):
        try:
            ok = check_homomorphism(X, s)
        except ValueError as exc:
            raise QuiverError(f"endomorphism {k + 1} {s}: {exc}") from None
        if not ok:
            raise QuiverError(f"map {k + 1} {s} is not an endomorphism of the birack")
    cols = enumerate_colorings(D, X, jobs)
    index = {c: i for i, c in enumerate(cols)}
    edges = []
    for i, c in enumerate(cols):
        for k, s in enumerate(S):
            img = tuple(s[v - 1] for v in c)
            edges.append((i, index[img], k))
    weights = None
    ring = None
    if beta is not None:
        weights = coloring_values(D, X, beta, cols, jobs)
        ring = beta.ring
    return ColoringQuiver(cols, edges, S, weights, ring)


@dataclass
class DecatPolynomial:
    """A decategorified polynomial: exponent tuple -> multiplicity."""

    kind: str
    variables: tuple[str, ...]
    terms: Counter
    ring: Ring
    ring_slots: tuple[bool, ...] = ()  # which exponents are ring values (others are counts)

    @property
    def total(self) -> int:
        return sum(self.terms.values())

    def _key(self, exps):
        return tuple(e if isinstance(e, int) else self.ring.sort_key(e) for e in exps)

    def ordered(self):
        return sorted(self.terms.items(), key=lambda kv: self._key(kv[0]), reverse=True)

    def format(self, variables: Sequence[str] | None = None) -> str:
        names = tuple(variables) if variables else self.variables
        parts = [format_term(c, self.ring, list(zip(names, exps))) for exps, c in self.ordered()]
        return "+".join(parts) if parts else "0"

    def to_json(self) -> dict:
        slots = self.ring_slots or tuple(not isinstance(e, int) for e in next(iter(self.terms), ()))
        fmt = lambda e, r: self.ring.format(e) if r else e  # noqa: E731
        return {
            "kind": self.kind,
            "variables": list(self.variables),
            "terms": [{"exponents": [fmt(e, r) for e, r in zip(exps, slots)], "coefficient": c}
                      for exps, c in self.ordered()],
            "polynomial": self.format(),
        }

    def __str__(self):
        return self.format()


def _require_weights(Q: ColoringQuiver):
    if Q.weights is None:
        raise QuiverError("quiver has no bracket weights")


def in_degree_polynomial(Q: ColoringQuiver, degree: str = "in", variables=("u", "v")) -> DecatPolynomial:
    """``Σ_v u^β(v) v^deg(v)``; ``degree="out"`` uses out-degrees instead."""
    _require_weights(Q)
    if degree not in ("in", "out"):
        raise QuiverError("degree must be 'in' or 'out'")
    deg = Q.in_degrees() if degree == "in" else Q.out_degrees()
    terms = Counter((w, d) for w, d in zip(Q.weights, deg))
    kind = "in_degree" if degree == "in" else "out_degree"
    return DecatPolynomial(kind, tuple(variables), terms, Q.ring, (True, False))


def two_variable_polynomial(Q: ColoringQuiver, variables=("s", "t")) -> DecatPolynomial:
    """``Σ_e s^β(source) t^β(target)``, one term per edge."""
    _require_weights(Q)
    terms = Counter((Q.weights[s], Q.weights[t]) for s, t, _ in Q.edges)
    return DecatPolynomial("two_variable", tuple(variables), terms, Q.ring, (True, True))


def maximal_paths(Q: ColoringQuiver, limit: int = DEFAULT_PATH_LIMIT) -> list[tuple[int, ...]]:
    """All maximal non-repeating directed paths, as vertex tuples, sorted.

    A path is maximal when every successor of its last vertex and every
    predecessor of its first vertex already lies on the path.

    Raises:
        ResourceLimitError: if more than ``limit`` paths are found.
    """
    succ = [sorted(set(s)) for s in Q.successors()]
    pred = [sorted(set(p)) for p in Q.predecessors()]
    out: list[tuple[int, ...]] = []
    for v0 in range(len(Q.vertices)):
        path = [v0]
        on = {v0}
        stack = [iter(succ[v0])]
        while stack:
            nxt = None
            for w in stack[-1]:
                if w not in on:
                    nxt = w
                    break
            if nxt is None:
                stack.pop()
                tail = path[-1]
                if all(w in on for w in succ[tail]) and all(w in on for w in pred[v0]):
                    out.append(tuple(path))
                    if len(out) > limit:
                        raise ResourceLimitError(f"more than {limit} maximal paths")
                on.discard(path.pop())
                continue
            path.append(nxt)
            on.add(nxt)
            stack.append(iter(succ[nxt]))
    return sorted(set(out))


def maximal_path_polynomial(Q: ColoringQuiver, length: str = "edges", variables=("x", "y"),
                            limit: int = DEFAULT_PATH_LIMIT) -> DecatPolynomial:
    """``Σ_p x^(Σ β(v)) y^|p|``; ``|p|`` counts edges, or vertices with ``length="vertices"``."""
    _require_weights(Q)
    if length not in ("edges", "vertices"):
        raise QuiverError("length must be 'edges' or 'vertices'")
    R = Q.ring
    terms: Counter = Counter()
    for p in maximal_paths(Q, limit):
        total = R.zero()
        for v in p:
            total = R.add(total, Q.weights[v])
        terms[(total, len(p) - 1 if length == "edges" else len(p))] += 1
    return DecatPolynomial("maximal_path", tuple(variables), terms, R, (True, False))


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(Q: ColoringQuiver) -> str:
    """DOT digraph with one node per coloring and one labeled edge per (vertex, σ)."""
    if not Q.vertices:
        return "digraph { }\n"
    lines = ["digraph {"]
    fmt = Q.ring.format if Q.ring is not None else str
    for i, c in enumerate(Q.vertices):
        label = f"{i}: " + ",".join(map(str, c))
        if Q.weights is not None:
            label += f"\\nβ={_dot_escape(fmt(Q.weights[i]))}"
        lines.append(f'  v{i} [label="{label}"];')
    for s, t, k in Q.edges:
        lines.append(f'  v{s} -> v{t} [label="{k + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_signature(Q: ColoringQuiver, rounds: int = 4) -> tuple:
    """Isomorphism-invariant fingerprint of a weighted, edge-labeled quiver.

    Color refinement seeded by vertex weights; the result is the sorted
    multiset of refined labels plus the sorted multiset of labeled edges.
    """
    fmt = Q.ring.format if Q.ring is not None else (lambda _: "")
    labels = [fmt(w) for w in Q.weights] if Q.weights is not None else [""] * len(Q.vertices)
    out_e: list[list] = [[] for _ in Q.vertices]
    in_e: list[list] = [[] for _ in Q.vertices]
    for s, t, k in Q.edges:
        out_e[s].append((k, t))
        in_e[t].append((k, s))
    for _ in range(rounds):
        new = []
        for v in range(len(Q.vertices)):
            o = sorted((k, labels[t]) for k, t in out_e[v])
            i = sorted((k, labels[s]) for k, s in in_e[v])
            h = hashlib.sha256(repr((labels[v], o, i)).encode()).hexdigest()[:16]
            new.append(h)
        labels = new
    edges = sorted((labels[s], labels[t], k) for s, t, k in Q.edges)
    return tuple(sorted(labels)), tuple(edges)
