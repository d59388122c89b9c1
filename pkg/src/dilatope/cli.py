"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 a budget ran out (partial results are
still printed when there are any).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .budget import limits
from .ehrhart import delta_vector
from .enumeration import lattice_points
from .errors import BudgetExceeded, DilatopeError
from .families import FAMILIES, minkowski_pair
from .graphs import exceptional_pairs, graph_profile
from .polytope import LatticePolytope
from .profile import is_idp, is_very_ample, mu_profile
from .semigroup import box_points, hilbert_basis_graded

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class InputError(Exception):
    pass


def _family(name: str, args) -> LatticePolytope:
    if name in ("minkowski_sum", "minkowski"):
        P, Q = minkowski_pair()
        return P.minkowski_sum(Q)
    if name not in FAMILIES:
        raise InputError(f"unknown family {name!r}; choose from {sorted(FAMILIES) + ['minkowski_sum']}")
    build, params = FAMILIES[name]
    values = []
    for p in params:
        v = getattr(args, p, None)
        if v is None:
            raise InputError(f"family {name} needs --{p}")
        values.append(v)
    return build(*values)


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _polytope(args) -> LatticePolytope:
    if (args.input is None) == (args.family is None):
        raise InputError("give exactly one of an input file ('-' for stdin) or --family")
    if args.family is not None:
        return _family(args.family, args)
    return io.polytope_from_json(_read_json(args.input))


def _flatten(prefix: str, value, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, (list, tuple)):
        out.append((prefix, json.dumps(io.encode(value), separators=(",", ":"))))
    else:
        out.append((prefix, "null" if value is None else str(value).lower()
                    if isinstance(value, bool) else str(value)))


def emit(payload: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "tsv":
        rows: list[tuple[str, str]] = []
        _flatten("", payload, rows)
        for k, v in rows:
            stream.write(f"{k}\t{v}\n")
    else:
        stream.write(io.dumps(payload) + "\n")


def _graded(points) -> list[dict]:
    return [{"point": list(p.x), "degree": p.n} for p in points]


def cmd_points(args):
    P = _polytope(args)
    ps = lattice_points(P, args.k)
    return {"k": args.k, "count": len(ps), "points": [list(p) for p in ps]}, EXIT_OK


def cmd_delta(args):
    P = _polytope(args)
    return {"d": P.dim, "delta": list(delta_vector(P))}, EXIT_OK


def cmd_hilbert(args):
    P = _polytope(args)
    hb = hilbert_basis_graded(P)
    return {"d": P.dim, "mu_hilb": hb.max_degree, "hilbert_basis": _graded(hb.points)}, EXIT_OK


def cmd_holes(args):
    P = _polytope(args)
    holes = box_points(P)
    return {"d": P.dim, "mu_hole": holes.max_degree,
            "holes": [{"point": list(h.point.x), "degree": h.point.n,
                       "witness": [list(v) for v in h.witness]} for h in holes]}, EXIT_OK


def cmd_idp(args):
    P = _polytope(args)
    res = is_idp(P, args.k)
    witness = None if res.holds else {"n": res.n, "x": list(res.witness)}
    return {"k": args.k, "idp": res.holds, "witness": witness}, EXIT_OK


def cmd_very_ample(args):
    P = _polytope(args)
    return {"k": args.k, "very_ample": is_very_ample(P, args.k)}, EXIT_OK


def cmd_profile(args):
    P = _polytope(args)
    prof = mu_profile(P)
    out = {"d": prof.d, "mu": prof.as_dict(), "witnesses": prof.witnesses}
    if not prof.complete:
        out["hole_bracket"] = list(prof.hole_bracket)
        return out, EXIT_BUDGET
    return out, EXIT_OK


def _graph(args):
    return io.graph_from_json(_read_json(args.graph))


def cmd_graph_profile(args):
    G = _graph(args)
    gp = graph_profile(G, mode=args.mode, cycles=args.cycles, seconds=args.generic_seconds)
    out = {"d": gp.dim, "mu": {"va": gp.va, "hilb": gp.hilb, "hole": gp.hole,
                               "midp": gp.midp, "idp": gp.idp},
           "brackets": {"midp": list(gp.midp_bracket), "idp": list(gp.idp_bracket)},
           "occ": gp.occ, "exceptional_pairs": gp.pairs, "notes": gp.notes}
    return out, EXIT_OK if gp.generic_exact else EXIT_BUDGET


def cmd_graph_occ(args):
    G = _graph(args)
    pairs = exceptional_pairs(G)
    return {"occ": not pairs,
            "exceptional_pairs": [{"cycles": [list(p.first.vertices), list(p.second.vertices)],
                                   "m": p.m} for p in pairs]}, EXIT_OK


def cmd_family(args):
    return io.polytope_to_json(_family(args.name, args)), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--max-points", type=int, default=None,
                        help="lattice-point cap per enumeration (default 10^7)")
    common.add_argument("--max-subsets", type=int, default=None,
                        help="candidate-simplex cap for hole search (default 10^7)")
    common.add_argument("--seconds", type=float, default=None, help="overall time cap")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--d", type=int)
    params.add_argument("--j", type=int)
    params.add_argument("--m", type=int)

    source = argparse.ArgumentParser(add_help=False, parents=[common, params])
    source.add_argument("input", nargs="?", help="polytope JSON file, or - for stdin")
    source.add_argument("--family", help="use a built-in family instead of a file")

    parser = argparse.ArgumentParser(prog="dilatope",
                                     description="Dilation invariants of lattice polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, needs_k, help_ in [
        ("points", cmd_points, True, "lattice points of kP (chart coordinates)"),
        ("delta", cmd_delta, False, "delta-vector"),
        ("hilbert", cmd_hilbert, False, "graded Hilbert basis of the cone over P"),
        ("holes", cmd_holes, False, "holes with empty-simplex witnesses"),
        ("idp", cmd_idp, True, "integer decomposition property of kP"),
        ("very-ample", cmd_very_ample, True, "very ampleness of kP"),
        ("profile", cmd_profile, False, "all six dilation thresholds"),
    ]:
        p = sub.add_parser(name, parents=[source], help=help_)
        if needs_k:
            p.add_argument("--k", type=int, default=1)
        p.set_defaults(func=fn)

    g = sub.add_parser("graph", help="edge polytopes of graphs")
    gsub = g.add_subparsers(dest="graph_command", required=True)
    gp = gsub.add_parser("profile", parents=[common], help="closed forms plus generic midp/idp")
    gp.add_argument("graph", help="graph JSON file, or - for stdin")
    gp.add_argument("--mode", choices=("matching", "disjoint"), default="matching",
                    help="whether packed exceptional pairs may share vertices (matching) or not")
    gp.add_argument("--cycles", choices=("minimal", "all"), default="minimal",
                    help="odd cycles used by the hole formula")
    gp.add_argument("--generic-seconds", type=float, default=60.0,
                    help="time allowed for the generic midp/idp search")
    gp.set_defaults(func=cmd_graph_profile)
    go = gsub.add_parser("occ", parents=[common], help="odd cycle condition and exceptional pairs")
    go.add_argument("graph", help="graph JSON file, or - for stdin")
    go.set_defaults(func=cmd_graph_occ)

    f = sub.add_parser("family", parents=[common, params], help="print a built-in polytope as JSON")
    f.add_argument("name")
    f.set_defaults(func=cmd_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        with limits(points=args.max_points, subsets=args.max_subsets, seconds=args.seconds):
            payload, code = args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, DilatopeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
