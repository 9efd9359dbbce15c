"""Framed oriented link diagrams as signed Gauss codes.

A diagram is a list of components, each a cyclic sequence of *passes*
``(crossing id, role)`` with role ``"O"`` (over) or ``"U"`` (under), together
with a sign for every crossing. Virtual crossings are not recorded. The
framing of each component is the blackboard framing, so the writhe is just
the sum of the signs.

Semiarcs are numbered component by component. For a component whose first
semiarc index is ``b`` and whose passes are ``p_0, ..., p_{m-1}``, semiarc
``b + j`` runs from pass ``j`` to pass ``j + 1`` (cyclically). A component
without crossings is a single closed semiarc.

Each crossing has four *ports*: the semiarcs entering and leaving it along
the under strand (``ui``, ``uo``) and along the over strand (``oi``, ``oo``).

Text formats::

    O1+ U2+ O3+ U1+ O2+ U3+          Gauss code, components split by "/"
    X[1,5,2,4], X[3,1,4,6], ...      PD code (Knot Atlas convention)
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "DiagramError",
    "FramedDiagram",
    "Ports",
    "ORIENTED",
    "DISORIENTED",
    "parse_gauss_code",
    "format_gauss_code",
    "parse_pd_code",
    "parse_diagram",
    "from_braid",
    "writhe",
    "add_kinks",
    "state_loop_count",
    "all_state_loop_counts",
    "seifert_circles",
    "reidemeister_perturb",
    "relabel",
    "disjoint_union",
    "MOVES",
]

ORIENTED = "oriented"
DISORIENTED = "disoriented"
MOVES = ("framed-R1-pair", "R2", "detour")


class DiagramError(ValueError):
    """Structurally invalid diagram input."""


@dataclass(frozen=True)
class Ports:
    sign: int
    ui: int
    uo: int
    oi: int
    oo: int


Pass = tuple[int, str]


class FramedDiagram:
    """An immutable signed Gauss diagram.

    Args:
        components: one list of ``(crossing id, "O" | "U")`` passes per
            component; an empty list is a crossing-free component.
        signs: crossing id to ``+1`` / ``-1``.
    """

    def __init__(self, components: Sequence[Sequence[Pass]], signs: Mapping[int, int]):
        comps = tuple(tuple((int(c), str(r)) for c, r in comp) for comp in components)
        if not comps:
            raise DiagramError("a diagram needs at least one component")
        seen: dict[int, list[str]] = {}
        for comp in comps:
            for c, r in comp:
                if r not in ("O", "U"):
                    raise DiagramError(f"crossing {c}: role must be O or U, got {r!r}")
                seen.setdefault(c, []).append(r)
        for c, roles in seen.items():
            if len(roles) != 2:
                raise DiagramError(f"crossing {c} is visited {len(roles)} times, expected 2")
            if roles[0] == roles[1]:
                raise DiagramError(f"crossing {c} is visited twice as {'over' if roles[0] == 'O' else 'under'}")
            if c not in signs:
                raise DiagramError(f"crossing {c} has no sign")
        for c, s in signs.items():
            if c not in seen:
                raise DiagramError(f"sign given for unknown crossing {c}")
            if s not in (1, -1):
                raise DiagramError(f"crossing {c}: sign must be +1 or -1, got {s!r}")
        self.components = comps
        self.signs = {c: int(signs[c]) for c in sorted(seen)}
        self._build()

    def _build(self):
        ports: dict[int, dict] = {c: {"sign": s} for c, s in self.signs.items()}
        ranges = []
        idx = 0
        for comp in self.components:
            m = len(comp)
            base = idx
            if m == 0:
                idx += 1
                ranges.append((base, 1))
                continue
            for j, (c, role) in enumerate(comp):
                into, out = base + (j - 1) % m, base + j
                if role == "O":
                    ports[c]["oi"], ports[c]["oo"] = into, out
                else:
                    ports[c]["ui"], ports[c]["uo"] = into, out
            idx += m
            ranges.append((base, m))
        self.n_semiarcs = idx
        self.component_ranges = tuple(ranges)
        self.ports = {c: Ports(**d) for c, d in ports.items()}
        self.crossing_ids = tuple(self.signs)
        self.n_free = sum(1 for comp in self.components if not comp)

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def semiarc_component(self, a: int) -> int:
        for k, (b, m) in enumerate(self.component_ranges):
            if b <= a < b + m:
                return k
        raise IndexError(a)

    def component_writhe(self, k: int) -> int:
        """Self-crossing writhe of component ``k`` (its blackboard framing)."""
        comp = self.components[k]
        counts: dict[int, int] = {}
        for c, _ in comp:
            counts[c] = counts.get(c, 0) + 1
        return sum(self.signs[c] for c, v in counts.items() if v == 2)

    def __eq__(self, other):
        return isinstance(other, FramedDiagram) and self.components == other.components and self.signs == other.signs

    def __hash__(self):
        return hash((self.components, tuple(self.signs.items())))

    def __repr__(self):
        return f"FramedDiagram({format_gauss_code(self)!r})"

    def __str__(self):
        return format_gauss_code(self)


# Gauss codes -----------------------------------------------------------------

_PASS = re.compile(r"([OU])(\d+)([+-])$")


def parse_gauss_code(text: str) -> FramedDiagram:
    """Parse a signed Gauss code.

    Components are separated by ``/``, passes by whitespace or commas. Each
    pass is ``O`` or ``U``, a crossing id and ``+`` or ``-``. A lone ``0``
    denotes a crossing-free component.

    Raises:
        DiagramError: on syntax errors or structural problems, naming the
            offending token or crossing.
    """
    text = text.replace("−", "-").strip()
    if not text:
        raise DiagramError("empty Gauss code")
    comps: list[list[Pass]] = []
    signs: dict[int, int] = {}
    for part in text.split("/"):
        toks = part.replace(",", " ").split()
        if not toks:
            raise DiagramError("empty component (use '0' for a crossing-free component)")
        comp: list[Pass] = []
        if toks == ["0"]:
            comps.append(comp)
            continue
        for t in toks:
            m = _PASS.match(t)
            if not m:
                raise DiagramError(f"bad pass token {t!r}")
            role, c, sg = m.group(1), int(m.group(2)), 1 if m.group(3) == "+" else -1
            if c < 1:
                raise DiagramError(f"crossing ids must be positive, got {t!r}")
            if signs.setdefault(c, sg) != sg:
                raise DiagramError(f"crossing {c} is given conflicting signs")
            comp.append((c, role))
        comps.append(comp)
    return FramedDiagram(comps, signs)


def format_gauss_code(D: FramedDiagram) -> str:
    parts = []
    for comp in D.components:
        if not comp:
            parts.append("0")
        else:
            parts.append(" ".join(f"{r}{c}{'+' if D.signs[c] > 0 else '-'}" for c, r in comp))
    return " / ".join(parts)


# PD codes -------------------------------------------------------------------

_PD_TUPLE = re.compile(r"(?:X)?\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd_code(text: str) -> FramedDiagram:
    """Parse a PD code ``X[a,b,c,d], ...``.

    ``a`` is the incoming under edge and ``b, c, d`` follow counterclockwise,
    so ``c`` is the outgoing under edge. The direction of the over strand is
    propagated from neighbouring crossings; a crossing is positive when the
    over strand runs from ``d`` to ``b``. An empty code is the 0-crossing
    unknot. Python-style ``[[a,b,c,d], ...]`` lists are accepted too.
    """
    body = text.strip()
    if body.startswith("PD"):
        body = body[2:]
    tuples = [tuple(int(v) for v in m.groups()) for m in _PD_TUPLE.finditer(body)]
    leftover = _PD_TUPLE.sub("", body)
    if re.search(r"\d", leftover):
        raise DiagramError(f"unparsable PD text near {leftover.strip()[:30]!r}")
    if not tuples:
        return FramedDiagram([[]], {})
    occ: dict[int, list[tuple[int, int]]] = {}
    for c, t in enumerate(tuples):
        for s, e in enumerate(t):
            occ.setdefault(e, []).append((c, s))
    for e, where in occ.items():
        if len(where) != 2:
            raise DiagramError(f"edge {e} appears {len(where)} times, expected 2")
    into: dict[int, tuple[int, int]] = {}
    outof: dict[int, tuple[int, int]] = {}

    def mark(table, e, where):
        if e in table and table[e] != where:
            raise DiagramError(f"orientation inconsistency on edge {e}")
        table[e] = where

    for c, t in enumerate(tuples):
        mark(into, t[0], (c, 0))
        mark(outof, t[2], (c, 2))

    def other(e, here):
        a, b = occ[e]
        return b if a == here else a

    overdir: dict[int, str] = {}

    def settle(c, d):
        j, l = tuples[c][1], tuples[c][3]
        overdir[c] = d
        if d == "jl":
            mark(into, j, (c, 1))
            mark(outof, l, (c, 3))
        else:
            mark(into, l, (c, 3))
            mark(outof, j, (c, 1))

    pending = set(range(len(tuples)))
    while pending:
        progress = False
        for c in sorted(pending):
            j, l = tuples[c][1], tuples[c][3]
            oj, ol = other(j, (c, 1)), other(l, (c, 3))
            d = None
            if outof.get(j) == oj or into.get(l) == ol:
                d = "jl"
            elif into.get(j) == oj or outof.get(l) == ol:
                d = "lj"
            if d:
                settle(c, d)
                pending.discard(c)
                progress = True
        if not progress:
            # a component made only of over passes: use the labeling order
            c = min(pending)
            j, l = tuples[c][1], tuples[c][3]
            settle(c, "jl" if l == j + 1 or (l < j and abs(l - j) > 1) else "lj")
            pending.discard(c)
    for e in occ:
        if e not in into or e not in outof:
            raise DiagramError(f"edge {e} has no consistent orientation")

    comps: list[list[Pass]] = []
    seen: set[int] = set()
    for e0 in sorted(occ):
        if e0 in seen:
            continue
        comp: list[Pass] = []
        e = e0
        while e not in seen:
            seen.add(e)
            c, s = into[e]
            t = tuples[c]
            if s == 0:
                comp.append((c + 1, "U"))
                e = t[2]
            else:
                comp.append((c + 1, "O"))
                e = t[3] if s == 1 else t[1]
        comps.append(comp)
    signs = {c + 1: (1 if overdir[c] == "lj" else -1) for c in range(len(tuples))}
    return FramedDiagram(comps, signs)


def parse_diagram(text: str) -> FramedDiagram:
    """Parse either a PD code or a Gauss code, detected by the presence of ``[``."""
    return parse_pd_code(text) if "[" in text else parse_gauss_code(text)


def from_braid(word: Sequence[int], strands: int | None = None) -> FramedDiagram:
    """Closure of a braid word.

    Generator ``i`` (``σ_i``) crosses the strand in position ``i`` over the
    one in position ``i + 1`` with sign ``+1``; ``-i`` crosses it under with
    sign ``-1``. Positions are 1-based.
    """
    k = strands if strands is not None else max((abs(g) for g in word), default=0) + 1
    if any(g == 0 or abs(g) >= k for g in word):
        raise DiagramError(f"braid generators must lie in ±1..±{k - 1}")
    pos = list(range(k))
    passes: dict[int, list[Pass]] = {j: [] for j in range(k)}
    signs: dict[int, int] = {}
    for c, g in enumerate(word, 1):
        i = abs(g) - 1
        a, b = pos[i], pos[i + 1]
        if g > 0:
            passes[a].append((c, "O"))
            passes[b].append((c, "U"))
        else:
            passes[a].append((c, "U"))
            passes[b].append((c, "O"))
        signs[c] = 1 if g > 0 else -1
        pos[i], pos[i + 1] = b, a
    end = {pos[p]: p for p in range(k)}
    seen: set[int] = set()
    comps = []
    for s in range(k):
        if s in seen:
            continue
        comp: list[Pass] = []
        t = s
        while t not in seen:
            seen.add(t)
            comp += passes[t]
            t = end[t]
        comps.append(comp)
    return FramedDiagram(comps, signs)


# Framing and kinks ------------------------------------------------------------


def writhe(D: FramedDiagram) -> int:
    return sum(D.signs.values())


def _next_id(D: FramedDiagram) -> int:
    return max(D.signs, default=0) + 1


def add_kinks(D: FramedDiagram, component: int, k: int, at: int = 0, kind: str = "OU") -> FramedDiagram:
    """Insert ``|k|`` kinks of sign ``sgn(k)`` on ``component`` before pass ``at``.

    Each kink is a new crossing visited twice in a row, first as ``kind[0]``
    then as ``kind[1]``.
    """
    if not 0 <= component < D.n_components:
        raise DiagramError(f"no component {component}")
    if k == 0:
        return D
    if kind not in ("OU", "UO"):
        raise DiagramError("kink kind must be 'OU' or 'UO'")
    comps = [list(c) for c in D.components]
    signs = dict(D.signs)
    nid = _next_id(D)
    sg = 1 if k > 0 else -1
    ins: list[Pass] = []
    for _ in range(abs(k)):
        ins += [(nid, kind[0]), (nid, kind[1])]
        signs[nid] = sg
        nid += 1
    comps[component][at:at] = ins
    return FramedDiagram(comps, signs)


# Kauffman states ----------------------------------------------------------------


def _loop_count(D: FramedDiagram, disoriented: Iterable[bool]) -> int:
    # nodes: 2a = start of semiarc a, 2a + 1 = end of semiarc a
    parent = list(range(2 * D.n_semiarcs))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a in range(D.n_semiarcs):
        union(2 * a, 2 * a + 1)
    for c, dis in zip(D.crossing_ids, disoriented):
        p = D.ports[c]
        ui, uo, oi, oo = 2 * p.ui + 1, 2 * p.uo, 2 * p.oi + 1, 2 * p.oo
        if dis:
            union(ui, oi)
            union(uo, oo)
        else:
            union(ui, oo)
            union(oi, uo)
    return len({find(2 * a) for a in range(D.n_semiarcs)})


def state_loop_count(D: FramedDiagram, state: Mapping[int, str]) -> int:
    """Number of closed loops of the Kauffman state ``state``.

    ``state`` maps every crossing id to ``"oriented"`` or ``"disoriented"``
    (``"o"`` / ``"d"`` also accepted). The oriented smoothing joins under-in
    with over-out and over-in with under-out; the disoriented one joins the
    two incoming ends and the two outgoing ends.
    """
    missing = [c for c in D.crossing_ids if c not in state]
    if missing:
        raise DiagramError(f"state does not cover crossings {missing}")
    flags = []
    for c in D.crossing_ids:
        v = state[c]
        if v in (ORIENTED, "o", "A"):
            flags.append(False)
        elif v in (DISORIENTED, "d", "B"):
            flags.append(True)
        else:
            raise DiagramError(f"crossing {c}: unknown smoothing {v!r}")
    return _loop_count(D, flags)


def all_state_loop_counts(D: FramedDiagram) -> list[int]:
    """Loop counts of all ``2^c`` states.

    Bit ``i`` of the state index is set when crossing ``D.crossing_ids[i]``
    is smoothed disorientedly.
    """
    c = D.n_crossings
    return [_loop_count(D, [(s >> i) & 1 == 1 for i in range(c)]) for s in range(1 << c)]


def seifert_circles(D: FramedDiagram) -> int:
    return _loop_count(D, [False] * D.n_crossings)


# Moves ------------------------------------------------------------------------------


def relabel(D: FramedDiagram, mapping: Mapping[int, int]) -> FramedDiagram:
    comps = [[(mapping[c], r) for c, r in comp] for comp in D.components]
    return FramedDiagram(comps, {mapping[c]: s for c, s in D.signs.items()})


def disjoint_union(D: FramedDiagram, E: FramedDiagram) -> FramedDiagram:
    off = max(D.signs, default=0)
    comps = list(D.components) + [[(c + off, r) for c, r in comp] for comp in E.components]
    signs = dict(D.signs)
    signs.update({c + off: s for c, s in E.signs.items()})
    return FramedDiagram(comps, signs)


def _gaps(D: FramedDiagram) -> list[tuple[int, int]]:
    # (component, insertion index); one gap per semiarc
    out = []
    for k, comp in enumerate(D.components):
        for j in range(max(1, len(comp))):
            out.append((k, j))
    return out


def reidemeister_perturb(D: FramedDiagram, move: str, seed: int) -> FramedDiagram:
    """Apply one random framed move that preserves the framed link type.

    * ``"R2"`` pushes one semiarc over another (or over itself), adding a
      ``+1`` and a ``-1`` crossing; the under strand meets them in either
      order.
    * ``"framed-R1-pair"`` inserts a positive and a negative kink next to
      each other, each of random kind.
    * ``"detour"`` relabels crossings and rotates the starting pass of each
      component. A virtual detour move leaves the signed Gauss code
      unchanged up to such relabelings.

    The writhe is preserved in all cases.
    """
    if move not in MOVES:
        raise DiagramError(f"unknown move {move!r}; expected one of {MOVES}")
    rng = random.Random(seed)
    comps = [list(c) for c in D.components]
    signs = dict(D.signs)
    nid = _next_id(D)
    if move == "framed-R1-pair":
        k, j = rng.choice(_gaps(D))
        first = rng.choice([1, -1])
        ins: list[Pass] = []
        for c, sg in ((nid, first), (nid + 1, -first)):
            kind = rng.choice(["OU", "UO"])
            ins += [(c, kind[0]), (c, kind[1])]
            signs[c] = sg
        comps[k][j:j] = ins
        return FramedDiagram(comps, signs)
    if move == "R2":
        gaps = _gaps(D)
        g1 = rng.choice(gaps)
        g2 = rng.choice(gaps)
        a, b = nid, nid + 1
        sg = rng.choice([1, -1])
        signs[a], signs[b] = sg, -sg
        over: list[Pass] = [(a, "O"), (b, "O")]
        under: list[Pass] = [(a, "U"), (b, "U")] if rng.random() < 0.5 else [(b, "U"), (a, "U")]
        if rng.random() < 0.5:
            over, under = [(c, "U") for c, _ in over], [(c, "O") for c, _ in under]
        if g1 == g2:
            k, j = g1
            comps[k][j:j] = over + under
        else:
            # insert at the later position first so indices stay valid
            for (k, j), seg in sorted(((g1, over), (g2, under)), key=lambda t: t[0], reverse=True):
                comps[k][j:j] = seg
        return FramedDiagram(comps, signs)
    # detour
    ids = list(D.signs)
    new = ids[:]
    rng.shuffle(new)
    mapping = dict(zip(ids, new))
    out = []
    for comp in comps:
        if comp:
            r = rng.randrange(len(comp))
            comp = comp[r:] + comp[:r]
        out.append([(mapping[c], role) for c, role in comp])
    return FramedDiagram(out, {mapping[c]: s for c, s in signs.items()})
