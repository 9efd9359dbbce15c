"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (axiom violation, parse
failure, invalid bracket), 2 on a usage error.

File formats
------------
birack   line 1 ``n``, ``n`` rows of the ⊳ table, a blank line, ``n`` rows of ▷̄.
bracket  line 1 ring spec (``Z5``, ``GAUSS``, ``LAURENT q``), then ``n`` rows
         of ``2n`` entries forming ``[A|B]`` (a ``|`` separator is optional).
diagram  a signed Gauss code (one component per line, or ``/``-separated) or
         a PD code ``X[a,b,c,d], ...``. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .birack import (
    BirackAxiomError,
    BirackFormatError,
    FiniteBirack,
    enumerate_endomorphisms,
    read_birack_tables,
    validate_birack,
)
from .bracket import (
    BirackBracket,
    BracketError,
    BracketFormatError,
    ResourceLimitError,
    bracket_multiset,
    format_bracket_text,
    format_invariant_poly,
    read_bracket_entries,
    validate_bracket,
)
from .diagram import MOVES, DiagramError, FramedDiagram, add_kinks, format_gauss_code, parse_diagram, reidemeister_perturb
from .homset import enumerate_colorings
from .parallel import ENV_VAR, resolve_jobs
from .quiver import (
    QuiverError,
    build_quiver,
    export_dot,
    in_degree_polynomial,
    maximal_path_polynomial,
    two_variable_polynomial,
)
from .rings import RingError, Zn, parse_ring_spec
from .search import SearchConfig, search_brackets

__all__ = ["main", "run_cli"]


MAX_SHOWN = 20


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"{path}: cannot read file ({exc.strerror})") from None


def load_birack(path: str) -> FiniteBirack:
    text = _read(path)
    try:
        under, over = read_birack_tables(text, path)
    except BirackFormatError as exc:
        raise DomainError(str(exc)) from None
    report = validate_birack(under, over)
    if not report.valid:
        raise DomainError(f"{path}: not a birack: {report.summary()}")
    return FiniteBirack(under, over, validate=False)


def load_bracket(path: str, X: FiniteBirack) -> BirackBracket:
    ring, A, B = _bracket_entries(path, X)
    try:
        return BirackBracket(X, A, B, ring)
    except BracketError as exc:
        raise DomainError(f"{path}: invalid bracket: {exc}") from None


def _bracket_entries(path: str, X: FiniteBirack, allow_wild: bool = False):
    try:
        ring, A, B = read_bracket_entries(_read(path), path, allow_wild)
    except BracketFormatError as exc:
        raise DomainError(str(exc)) from None
    if len(A) != X.n:
        raise DomainError(f"{path}: bracket is {len(A)}x{len(A)} but the birack has {X.n} elements")
    return ring, A, B


def load_diagram(path: str, kinks: Sequence[str] = ()) -> FramedDiagram:
    text = _read(path)
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise DomainError(f"{path}: empty diagram file")
    joined = ", ".join(lines) if any("[" in ln for ln in lines) else " / ".join(lines)
    try:
        D = parse_diagram(joined)
        for spec in kinks:
            comp, _, k = spec.partition(":")
            if not k:
                comp, k = "0", comp
            D = add_kinks(D, int(comp), int(k))
    except DiagramError as exc:
        raise DomainError(f"{path}: {exc}") from None
    except ValueError:
        raise DomainError(f"bad --kink value {kinks!r}; expected COMPONENT:K") from None
    return D


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)


# subcommands --------------------------------------------------------------------


def cmd_validate_birack(a) -> int:
    text = _read(a.file)
    try:
        under, over = read_birack_tables(text, a.file)
        report = validate_birack(under, over)
    except BirackFormatError as exc:
        raise DomainError(str(exc)) from None
    if a.format == "json":
        out = report.to_json()
        if report.valid:
            X = FiniteBirack(under, over, validate=False)
            out.update({"n": X.n, "kink": X.kink, "rank": X.rank})
        _emit(_json(out))
    else:
        if report.valid:
            X = FiniteBirack(under, over, validate=False)
            _emit(f"valid\nkink: {X.kink}\nrank: {X.rank}")
        else:
            lines = ["invalid"] + [f"axiom ({v.axiom}): {v.message}" for v in report.violations]
            _emit("\n".join(lines))
    return 0 if report.valid else 1


def _fmt_map(f) -> str:
    return "[" + ",".join(map(str, f)) + "]"


def cmd_endos(a) -> int:
    X = load_birack(a.birack)
    E = enumerate_endomorphisms(X)
    if a.format == "json":
        _emit(_json(E))
    else:
        _emit("\n".join(_fmt_map(f) for f in E))
    return 0


def cmd_color(a) -> int:
    D = load_diagram(a.diagram, a.kink)
    X = load_birack(a.birack)
    cols = enumerate_colorings(D, X, a.jobs)
    if a.count:
        _emit(str(len(cols)))
    elif a.format == "json":
        _emit(_json([list(c) for c in cols]))
    else:
        _emit("\n".join(" ".join(map(str, c)) for c in cols) if cols else "")
    return 0


def cmd_validate_bracket(a) -> int:
    X = load_birack(a.birack)
    ring, A, B = _bracket_entries(a.bracket, X)
    rep = validate_bracket(X, A, B, ring)
    if a.format == "json":
        _emit(_json(rep.to_json()))
    else:
        f = ring.format
        if rep.valid:
            _emit(f"valid\ndelta: {f(rep.delta)}\nw: [{', '.join(f(v) for v in rep.w)}]\n"
                  f"homogeneous: {'yes' if rep.homogeneous else 'no'}")
        else:
            shown = rep.violations[:MAX_SHOWN]
            extra = len(rep.violations) - len(shown)
            _emit("\n".join(["invalid"] + shown + ([f"... {extra} more"] if extra > 0 else [])))
    return 0 if rep.valid else 1


def cmd_bracket(a) -> int:
    D = load_diagram(a.diagram, a.kink)
    X = load_birack(a.birack)
    beta = load_bracket(a.bracket, X)
    m = bracket_multiset(D, X, beta, a.jobs, a.crossing_limit)
    poly = format_invariant_poly(m)
    if a.format == "json":
        f = beta.ring.format
        _emit(_json({
            "delta": f(beta.delta),
            "w": [f(v) for v in beta.w],
            "homogeneous": beta.homogeneous,
            "multiset": m.to_json(),
            "polynomial": poly,
        }))
    else:
        _emit(poly)
    return 0


def cmd_search(a) -> int:
    X = load_birack(a.birack)
    try:
        ring = parse_ring_spec(a.ring)
    except RingError as exc:
        raise DomainError(str(exc)) from None
    if not isinstance(ring, Zn):
        raise DomainError(f"search needs a finite ring Zn, got {a.ring}")
    seed = {}
    if a.seed:
        sring, A, B = _bracket_entries(a.seed, X, allow_wild=True)
        if sring != ring:
            raise DomainError(f"{a.seed}: seed ring {sring.spec()} differs from --ring {ring.spec()}")
        for name, M in (("A", A), ("B", B)):
            for x, row in enumerate(M):
                for y, v in enumerate(row):
                    if v is not None:
                        seed[(name, x, y)] = v
    delta = None
    if a.delta is not None:
        try:
            delta = ring.parse(a.delta)
        except RingError as exc:
            raise DomainError(f"--delta: {exc}") from None
    cfg = SearchConfig(ring, a.limit, delta, a.homogeneous, seed)
    try:
        for k, beta in enumerate(search_brackets(X, cfg, a.jobs), 1):
            if a.format == "json":
                f = ring.format
                _emit(_json({"index": k, "delta": f(beta.delta), "homogeneous": beta.homogeneous,
                             "A": [[f(v) for v in r] for r in beta.A],
                             "B": [[f(v) for v in r] for r in beta.B]}))
            else:
                _emit(f"# bracket {k} delta={ring.format(beta.delta)}\n" + format_bracket_text(beta))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return 0


def _parse_endos(spec: str, X: FiniteBirack) -> list[list[int]]:
    if spec == "all":
        return enumerate_endomorphisms(X)
    out = []
    for part in spec.split(";"):
        part = part.strip().strip("[]")
        if not part:
            continue
        try:
            out.append([int(v) for v in part.replace(",", " ").split()])
        except ValueError:
            raise DomainError(f"bad --endos entry {part!r}; expected e.g. '2,3,1;1,2,3' or 'all'") from None
    if not out:
        raise DomainError("--endos selects no maps")
    return out


def cmd_quiver(a) -> int:
    D = load_diagram(a.diagram, a.kink)
    X = load_birack(a.birack)
    beta = load_bracket(a.bracket, X) if a.bracket else None
    S = _parse_endos(a.endos, X)
    try:
        Q = build_quiver(D, X, S, beta, a.jobs)
    except QuiverError as exc:
        raise DomainError(str(exc)) from None
    if a.format == "dot":
        _emit(export_dot(Q).rstrip("\n"))
        return 0
    poly = None
    if a.poly:
        if beta is None:
            raise DomainError("--poly needs --bracket")
        names = tuple(a.vars.split(",")) if a.vars else None
        if a.poly == "deg":
            P = in_degree_polynomial(Q, a.degree, names or ("u", "v"))
        elif a.poly == "two":
            P = two_variable_polynomial(Q, names or ("s", "t"))
        else:
            P = maximal_path_polynomial(Q, a.path_length, names or ("x", "y"), a.path_limit)
        poly = P
    if a.format == "json":
        out = Q.to_json()
        if poly is not None:
            out["polynomial"] = poly.to_json()
        _emit(_json(out))
    elif poly is not None:
        _emit(poly.format())
    else:
        _emit(f"vertices: {len(Q.vertices)}\nedges: {len(Q.edges)}")
    return 0


def cmd_perturb(a) -> int:
    D = load_diagram(a.diagram, a.kink)
    for step in range(a.steps):
        D = reidemeister_perturb(D, a.move, a.seed + step)
    _emit(format_gauss_code(D))
    return 0


# parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help=f"worker processes (default: ${ENV_VAR} or 1)")

    p = argparse.ArgumentParser(prog="birack-lab", description=__doc__.split("\n")[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help, formats=("text", "json")):
        s = sub.add_parser(name, parents=[common], help=help)
        s.add_argument("--format", choices=formats, default="text")
        return s

    s = add("validate-birack", "check the birack axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate_birack)

    s = add("endos", "list birack endomorphisms")
    s.add_argument("--birack", required=True)
    s.set_defaults(func=cmd_endos)

    def diagram_args(s):
        s.add_argument("--diagram", required=True)
        s.add_argument("--kink", action="append", default=[], metavar="COMP:K",
                       help="add K kinks (signed) to component COMP before computing")

    s = add("color", "enumerate colorings")
    diagram_args(s)
    s.add_argument("--birack", required=True)
    s.add_argument("--count", action="store_true", help="print only the number of colorings")
    s.set_defaults(func=cmd_color)

    s = add("validate-bracket", "check the bracket axioms")
    s.add_argument("--birack", required=True)
    s.add_argument("--bracket", required=True)
    s.set_defaults(func=cmd_validate_bracket)

    s = add("bracket", "bracket multiset invariant")
    diagram_args(s)
    s.add_argument("--birack", required=True)
    s.add_argument("--bracket", required=True)
    s.add_argument("--crossing-limit", type=int, default=24)
    s.set_defaults(func=cmd_bracket)

    s = add("search-brackets", "search brackets over Zn")
    s.add_argument("--birack", required=True)
    s.add_argument("--ring", required=True)
    s.add_argument("--limit", type=int, default=0)
    s.add_argument("--delta")
    s.add_argument("--homogeneous", action="store_true")
    s.add_argument("--seed", help="bracket file with '*' for free entries")
    s.set_defaults(func=cmd_search)

    s = add("quiver", "bracket quiver and its polynomials", ("text", "json", "dot"))
    diagram_args(s)
    s.add_argument("--birack", required=True)
    s.add_argument("--bracket")
    s.add_argument("--endos", default="all", help="'all' or maps like '2,3,1;1,2,3'")
    s.add_argument("--poly", choices=("deg", "two", "mp"))
    s.add_argument("--degree", choices=("in", "out"), default="in")
    s.add_argument("--path-length", choices=("edges", "vertices"), default="edges")
    s.add_argument("--path-limit", type=int, default=10**6)
    s.add_argument("--vars", help="comma-separated variable names for the polynomial")
    s.set_defaults(func=cmd_quiver)

    s = add("perturb", "apply random framed moves")
    diagram_args(s)
    s.add_argument("--move", required=True, choices=MOVES)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--steps", type=int, default=1)
    s.set_defaults(func=cmd_perturb)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    a.jobs = getattr(a, "jobs", None)
    try:
        a.jobs = resolve_jobs(a.jobs)
    except ValueError as exc:
        print(f"birack-lab: error: {exc}", file=sys.stderr)
        return 2
    try:
        return a.func(a)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (BirackAxiomError, BirackFormatError, BracketError, BracketFormatError, DiagramError,
            QuiverError, RingError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
