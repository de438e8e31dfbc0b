"""Command-line front end.

Three subcommands: ``analyze`` (full per-graph report), ``spectrum``
(global and per-vertex spectra), and ``verify`` (stream a corpus through
the classification and invariant suite). All output is JSON on stdout,
one document per invocation and JSON lines in corpus mode; diagnostics go
to stderr. Reals render with 12 significant digits so identical
invocations produce byte-identical output.

Exit codes: 0 success, 1 corpus verification found violations, 2 parse or
input error, 3 disconnected input, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

import numpy as np

from .graph_core import (
    ConnectivityError,
    Graph,
    Graph6Error,
    NAMED_FAMILIES,
    UnsupportedSizeError,
    bfs,
    enumerate_connected,
    generate_named,
    parse_graph6,
    serialize_graph6,
)
from .spectral import (
    DEFAULT_TOL,
    NumericalError,
    ToleranceConfig,
    decompose,
    local_spectrum,
)
from .predistance import build_predistance
from .pdr import classify, is_pdr_around, verify_graph

_EPS_FLAGS = ("eps_group", "eps_mult", "eps_pdr", "eps_walk")
_ENV_PREFIX = "PDRKIT_EPS_"


# ---------------------------------------------------------------------------
# deterministic JSON rendering


def _fmt_float(x: float) -> str:
    if not np.isfinite(x):
        raise ValueError(f"non-finite value in report: {x}")
    if x == 0.0:
        return "0"
    return format(float(x), ".12g")


def _render_json(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_render_json(v) for v in obj) + "]"
    if isinstance(obj, dict):
        parts = []
        for k, v in obj.items():
            if not isinstance(k, str):
                raise TypeError(f"JSON keys must be strings, got {k!r}")
            parts.append(_render_json(k) + ":" + _render_json(v))
        return "{" + ",".join(parts) + "}"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _round_if_close(x: float, eps: float = 1e-6):
    """Integers when within eps of one; raw reals otherwise."""
    r = round(x)
    return int(r) if abs(x - r) <= eps else float(x)


# ---------------------------------------------------------------------------
# input handling


def _parse_named_spec(spec: str) -> Graph:
    name, _, tail = spec.partition(":")
    params = [int(p) for p in tail.split(",")] if tail else []
    return generate_named(name, *params)


def _load_graph(args) -> Graph:
    if args.named is not None:
        return _parse_named_spec(args.named)
    return parse_graph6(args.graph6)


def _tolerances(args) -> ToleranceConfig:
    values = {}
    for name in _EPS_FLAGS:
        env = os.environ.get(_ENV_PREFIX + name.removeprefix("eps_").upper())
        flag = getattr(args, name)
        if flag is not None:
            values[name] = float(flag)
        elif env is not None:
            values[name] = float(env)
    return ToleranceConfig(**values) if values else DEFAULT_TOL


def _read_corpus(path: str) -> list[str]:
    """graph6 strings from a one-graph-per-line file; '#' lines and blanks skipped."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            out.append((lineno, s))
    return out


# ---------------------------------------------------------------------------
# report builders


def _spectrum_block(dec) -> list[dict]:
    return [
        {"eigenvalue": float(ev), "multiplicity": int(m)}
        for ev, m in zip(dec.eigenvalues, dec.multiplicities)
    ]


def _witness_block(w) -> dict:
    return {
        "cell": w.cell,
        "target": w.target,
        "vertex_a": w.vertex_a,
        "vertex_b": w.vertex_b,
        "value_a": float(w.value_a),
        "value_b": float(w.value_b),
    }


def _triples_block(quotient) -> dict:
    triples = quotient.tridiagonal()
    return {
        "c": [_round_if_close(t[0]) for t in triples],
        "a": [_round_if_close(t[1]) for t in triples],
        "b": [_round_if_close(t[2]) for t in triples],
    }


def _classification_block(cls) -> dict:
    arrays = None
    if cls.intersection_arrays is not None:
        arrays = []
        for arr in cls.intersection_arrays:
            block = {"b": list(arr.b), "c": list(arr.c), "a": list(arr.a)}
            if arr.part is not None:
                block["part"] = arr.part
            arrays.append(block)
    return {
        "verdict": cls.verdict,
        "walk_regularity": cls.walk_regularity,
        "intersection_arrays": arrays,
        "alpha_levels": list(cls.alpha_levels) if cls.alpha_levels is not None else None,
        "witness": cls.witness,
    }


def _tolerance_block(tol: ToleranceConfig) -> dict:
    return {name: getattr(tol, name) for name in _EPS_FLAGS}


def analysis_report(g: Graph, tol: ToleranceConfig = DEFAULT_TOL) -> dict:
    """Full analysis of one graph as a plain JSON-ready dict."""
    dec = decompose(g, tol)
    reports = [is_pdr_around(g, dec, u, tol) for u in range(g.n)]
    cls = classify(g, tol, dec=dec, reports=reports)
    per_vertex = []
    for r in reports:
        ls = local_spectrum(dec, r.vertex, tol)
        entry = {
            "vertex": r.vertex,
            "local_degree": r.local_degree,
            "eccentricity": r.eccentricity,
            "local_mults": [float(m) for m in ls.local_mults],
            "is_pdr": r.is_pdr,
        }
        if r.is_pdr:
            entry["intersection_numbers"] = _triples_block(r.quotient)
        else:
            entry["witness"] = _witness_block(r.witness)
        per_vertex.append(entry)
    return {
        "input": serialize_graph6(g),
        "n": g.n,
        "edge_count": g.edge_count,
        "spectrum": _spectrum_block(dec),
        "perron": [float(a) for a in dec.perron],
        "per_vertex": per_vertex,
        "classification": _classification_block(cls),
        "tolerances": _tolerance_block(tol),
    }


def spectrum_report(g: Graph, vertex: int | None, tol: ToleranceConfig = DEFAULT_TOL) -> dict:
    """Global spectrum, plus the local spectrum and polynomials of one vertex."""
    dec = decompose(g, tol)
    out = {
        "input": serialize_graph6(g),
        "n": g.n,
        "spectrum": _spectrum_block(dec),
    }
    if vertex is not None:
        if not 0 <= vertex < g.n:
            raise ValueError(f"vertex {vertex} out of range for a graph on {g.n} vertices")
        ls = local_spectrum(dec, vertex, tol)
        system = build_predistance(ls, dec.spectral_radius, float(dec.perron[vertex]))
        out["vertex"] = vertex
        out["local_spectrum"] = {
            "values": [float(v) for v in ls.values],
            "local_mults": [float(m) for m in ls.local_mults],
            "local_degree": ls.local_degree,
            "eccentricity": bfs(g, vertex).eccentricity,
        }
        out["predistance"] = {
            "polynomials": [list(p.coeffs) for p in system.polys],
            "recurrence": [list(t) for t in system.recurrence],
            "values_at_radius": list(system.values_at_radius),
        }
    return out


# ---------------------------------------------------------------------------
# subcommands


def _cmd_analyze(args) -> int:
    g = _load_graph(args)
    print(_render_json(analysis_report(g, _tolerances(args))))
    return 0


def _cmd_spectrum(args) -> int:
    g = _load_graph(args)
    print(_render_json(spectrum_report(g, args.vertex, _tolerances(args))))
    return 0


def _verify_one(item: tuple[str, ToleranceConfig]) -> dict:
    g6, tol = item
    result = verify_graph(parse_graph6(g6), tol)
    return {
        "graph6": result.graph6,
        "verdict": result.verdict,
        "all_pdr": result.all_pdr,
        "violations": [f"{v.check}: {v.detail}" for v in result.violations],
    }


def _cmd_verify(args) -> int:
    tol = _tolerances(args)
    if args.enumerate is not None:
        if not 1 <= args.enumerate <= 7:
            print("--enumerate supports 1 <= n <= 7", file=sys.stderr)
            return 2
        sources = [serialize_graph6(g) for g in enumerate_connected(args.enumerate)]
    else:
        try:
            lines = _read_corpus(args.corpus)
        except OSError as exc:
            print(f"cannot read corpus: {exc}", file=sys.stderr)
            return 2
        sources = []
        for lineno, s in lines:
            try:
                parse_graph6(s)
            except Graph6Error as exc:
                print(f"{args.corpus}:{lineno}: {exc}", file=sys.stderr)
                return 2
            sources.append(s)

    counts = {
        "total": 0,
        "all_pdr": 0,
        "distance_regular": 0,
        "distance_biregular": 0,
        "not_pdr": 0,
        "violations": 0,
    }

    def consume(records: Iterable[dict]) -> None:
        for record in records:
            counts["total"] += 1
            if record["all_pdr"]:
                counts["all_pdr"] += 1
            if record["verdict"] in ("distance_regular", "distance_biregular", "not_pdr"):
                counts[record["verdict"]] += 1
            if record["violations"]:
                counts["violations"] += 1
                print(_render_json(record))
            elif args.per_graph:
                print(_render_json(record))

    items = [(s, tol) for s in sources]
    if args.jobs <= 1:
        consume(map(_verify_one, items))
    else:
        # Workers stream results back in input order, so output stays deterministic.
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            consume(pool.map(_verify_one, items, chunksize=max(1, len(items) // (8 * args.jobs))))
    print(_render_json(counts))
    return 1 if counts["violations"] else 0


# ---------------------------------------------------------------------------
# parser


def _add_tolerance_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_argument_group("tolerances (fall back to PDRKIT_EPS_* environment variables)")
    group.add_argument("--eps-group", type=float, default=None, help="eigenvalue grouping threshold")
    group.add_argument("--eps-mult", type=float, default=None, help="local multiplicity clamp")
    group.add_argument("--eps-pdr", type=float, default=None, help="pseudo-intersection spread threshold")
    group.add_argument("--eps-walk", type=float, default=None, help="walk-count residual threshold")


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph6", nargs="?", default=None, help="graph6 string")
    p.add_argument(
        "--named",
        default=None,
        metavar="SPEC",
        help=f"named graph, e.g. petersen or cycle:5 ({', '.join(NAMED_FAMILIES)})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pdrkit", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full spectral / classification report for one graph")
    _add_graph_input(p_an)
    _add_tolerance_flags(p_an)
    p_an.set_defaults(func=_cmd_analyze)

    p_sp = sub.add_parser("spectrum", help="global spectrum, optionally one vertex's local data")
    _add_graph_input(p_sp)
    p_sp.add_argument("--vertex", type=int, default=None, help="vertex for local spectrum output")
    _add_tolerance_flags(p_sp)
    p_sp.set_defaults(func=_cmd_spectrum)

    p_ve = sub.add_parser("verify", help="run the classification and invariant suite over a corpus")
    p_ve.add_argument("corpus", nargs="?", default=None, help="graph6-per-line file ('#' comments allowed)")
    p_ve.add_argument("--enumerate", type=int, default=None, metavar="N", help="all connected graphs on N vertices")
    p_ve.add_argument("--jobs", type=int, default=1, help="worker processes (output order is preserved)")
    p_ve.add_argument("--per-graph", action="store_true", help="emit one JSON line per graph, not just violations")
    _add_tolerance_flags(p_ve)
    p_ve.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "command", None) in ("analyze", "spectrum"):
        if (args.graph6 is None) == (args.named is None):
            print("provide exactly one of a graph6 string or --named", file=sys.stderr)
            return 2
    if args.command == "verify" and (args.corpus is None) == (args.enumerate is None):
        print("provide exactly one of a corpus file or --enumerate", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 parse error: {exc}", file=sys.stderr)
        return 2
    except ConnectivityError as exc:
        print(f"connectivity error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4
    except (UnsupportedSizeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
