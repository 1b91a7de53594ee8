"""Command line front end.

Every subcommand is a thin adapter over the library: it parses words,
calls the corresponding functions and prints one report.  The default
report is a single-line JSON envelope

    {"schema": ..., "command": ..., "parameters": ..., "results": ...,
     "exact_values": ...}

where every rational inside results appears as {"num": ..., "den": ...}
and exact_values maps the same field paths to decimal strings (truncated
at 12 places; exact whenever the expansion terminates).  Tabular
subcommands (spheres, series) switch to plain CSV under --format csv.

Exit codes: 0 success, 1 validation error, 2 resource cap exceeded,
64 unknown subcommand.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import cayley, growth, metric, plmaps, subgraphs
from .gamma import (
    bar,
    catalan,
    closed_a,
    closed_b,
    closed_nu,
    column_partition,
    degree_histogram,
    density_bar,
    density_bar_closed,
    edge_label_counts,
    fullness_check,
    gamma as gamma_graph,
    gamma_nm_concrete,
    monomial_shape_ok,
    rank_counts,
)
from .diagrams import (
    NormalFormError,
    cell_count,
    from_word,
    normal_form_word,
    to_normal_form,
)
from .words import WordError, format_word, parse_word

SCHEMA = "thompson-f-toolkit/1"

SUBCOMMANDS = (
    "nf",
    "norm",
    "mul",
    "geodesic",
    "spheres",
    "dead-search",
    "series",
    "lword",
    "pl",
    "gamma",
    "subgraph",
)


class _CLIError(Exception):
    """Argument or input validation failure; rendered as exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 is taken by the
    # resource-cap contract, so route errors through _CLIError instead.
    def error(self, message):
        raise _CLIError(message)


def _decimal_string(x: Fraction, places: int = 12) -> str:
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    whole, rem = divmod(num, den)
    if rem == 0:
        return f"{sign}{whole}"
    digits = []
    while rem and len(digits) < places:
        rem *= 10
        digit, rem = divmod(rem, den)
        digits.append(str(digit))
    return f"{sign}{whole}." + "".join(digits)


def _rational(x: Fraction) -> Dict[str, int]:
    return {"num": x.numerator, "den": x.denominator}


def _emit(command: str, parameters: dict, results: dict, exact_values: dict) -> None:
    envelope = {
        "schema": SCHEMA,
        "command": command,
        "parameters": parameters,
        "results": results,
        "exact_values": exact_values,
    }
    print(json.dumps(envelope))


def _cmd_nf(args) -> int:
    w = parse_word(args.word)
    nf = to_normal_form(from_word(w))
    _emit(
        "nf",
        {"word": args.word},
        {
            "word": format_word(normal_form_word(nf)),
            "pos": list(nf.pos),
            "neg": list(nf.neg),
            "cells": len(nf.pos) + len(nf.neg),
        },
        {},
    )
    return 0


def _cmd_norm(args) -> int:
    d = from_word(parse_word(args.word))
    nf = to_normal_form(d)
    _emit(
        "norm",
        {"word": args.word},
        {
            "norm": metric.norm(d),
            "cells": cell_count(d),
            "special": sorted(metric.special_vertices(d)),
            "normal_form": format_word(normal_form_word(nf)),
        },
        {},
    )
    return 0


def _cmd_mul(args) -> int:
    product = from_word(parse_word(args.left) + parse_word(args.right))
    nf = to_normal_form(product)
    _emit(
        "mul",
        {"left": args.left, "right": args.right},
        {
            "word": format_word(normal_form_word(nf)),
            "cells": cell_count(product),
            "norm": metric.norm(product),
        },
        {},
    )
    return 0


def _cmd_geodesic(args) -> int:
    d = from_word(parse_word(args.word))
    w = metric.greedy_descent(d)
    _emit(
        "geodesic",
        {"word": args.word},
        {
            "word": format_word(w),
            "length": len(w),
            "method": "greedy descent",
            "note": "heuristic by construction; the unit-step property "
            "guarantees length = norm",
        },
        {},
    )
    return 0


def _cmd_spheres(args) -> int:
    table = cayley.enumerate_ball(args.radius, cap=args.cap)
    spheres = table.sphere_sizes
    balls = table.ball_sizes
    ratios: List[Optional[Fraction]] = [None]
    ratios += [Fraction(spheres[n], spheres[n - 1]) for n in range(1, len(spheres))]
    if args.format == "csv":
        print("n,s_n,b_n,ratio")
        for n, (s, b, q) in enumerate(zip(spheres, balls, ratios)):
            last = "" if q is None else _decimal_string(q)
            print(f"{n},{s},{b},{last}")
        return 0
    exact = {
        f"ratio[{n}]": _decimal_string(q) for n, q in enumerate(ratios) if q is not None
    }
    _emit(
        "spheres",
        {"radius": args.radius, "cap": args.cap, "threads": args.threads},
        {
            "radius": args.radius,
            "spheres": spheres,
            "balls": balls,
            "ratios": [
                {"n": n, **_rational(q)} for n, q in enumerate(ratios) if q is not None
            ],
        },
        exact,
    )
    return 0


def _cmd_dead_search(args) -> int:
    found = cayley.dead_search(args.max_norm, cap=args.cap)
    _emit(
        "dead-search",
        {"max_norm": args.max_norm, "cap": args.cap, "threads": args.threads},
        {"max_norm": args.max_norm, "count": len(found), "elements": found},
        {},
    )
    return 0


def _cmd_series(args) -> int:
    counts = growth.series(args.max_n)
    ratios: List[Optional[Fraction]] = [None]
    ratios += [Fraction(counts[n], counts[n - 1]) for n in range(1, len(counts))]
    if args.format == "csv":
        print("n,c_n,ratio")
        for n, (c, q) in enumerate(zip(counts, ratios)):
            last = "" if q is None else _decimal_string(q)
            print(f"{n},{c},{last}")
        return 0
    exact = {
        f"ratio[{n}]": _decimal_string(q) for n, q in enumerate(ratios) if q is not None
    }
    _emit(
        "series",
        {"max_n": args.max_n},
        {
            "max_n": args.max_n,
            "counts": counts,
            "ratios": [
                {"n": n, **_rational(q)} for n, q in enumerate(ratios) if q is not None
            ],
        },
        exact,
    )
    return 0


def _cmd_lword(args) -> int:
    w = parse_word(args.word)
    state = growth.run_automaton(w)
    _emit(
        "lword",
        {"word": args.word},
        {"word": args.word, "accepted": state is not None, "state": state},
        {},
    )
    return 0


def _cmd_pl(args) -> int:
    f = plmaps.from_word_pl(parse_word(args.word))
    exact = {}
    breakpoints = []
    for idx, (x, y) in enumerate(f.points):
        breakpoints.append({"x": str(x), "y": str(y)})
        exact[f"breakpoints[{idx}].x"] = _decimal_string(
            Fraction(x.num, 1 << x.exp)
        )
        exact[f"breakpoints[{idx}].y"] = _decimal_string(
            Fraction(y.num, 1 << y.exp)
        )
    _emit(
        "pl",
        {"word": args.word},
        {"breakpoints": breakpoints, "tail_offset": f.tail_offset},
        exact,
    )
    return 0


def _gamma_report(n: int, m: Optional[int]) -> tuple:
    g = gamma_graph(n)
    ranks = rank_counts(g)
    a_row = [ranks.get(k, 0) for k in range(1, n + 1)]
    labels = edge_label_counts(g)
    b_row = [labels.get(k, 0) for k in range(0, n + 1)]
    cat = catalan(n)
    density = density_bar(n)
    nu = degree_histogram(bar(g))
    checks = {
        "a_row": a_row == [closed_a(n, k) for k in range(1, n + 1)],
        "b_row": b_row == [closed_b(n, k) for k in range(0, n + 1)],
        "vertices_catalan": g.vertex_count == cat,
        "density": density == density_bar_closed(n),
        "nu": (
            sorted(nu) == [2, 3, 4]
            and all(nu[d] == closed_nu(n, d) for d in (2, 3, 4))
            if n >= 5
            else None
        ),
    }
    results = {
        "n": n,
        "catalan": cat,
        "a_row": a_row,
        "b_row": b_row,
        "density": _rational(density),
        "nu": {str(d): c for d, c in sorted(nu.items())},
        "checks": checks,
    }
    exact = {"density": _decimal_string(density)}
    if m is not None:
        concrete = gamma_nm_concrete(n, m)
        sub = concrete.subgraph()
        bar_density = subgraphs.density(sub)
        columns = column_partition(concrete)
        results["concrete"] = {
            "m": m,
            "vertices": concrete.size,
            "bar_edges": sub.edge_count,
            "bar_density": _rational(bar_density),
            "columns": [
                {"size": size, "rho": _rational(rho)} for size, rho in columns
            ],
            "fullness": fullness_check(concrete),
            "monomial_shape": monomial_shape_ok(concrete),
        }
        exact["concrete.bar_density"] = _decimal_string(bar_density)
        for k, (_, rho) in enumerate(columns):
            exact[f"concrete.rho[{k}]"] = _decimal_string(rho)
    return results, exact


def _cmd_gamma(args) -> int:
    if args.emit_words:
        if args.m is None:
            raise _CLIError("--emit-words needs --m to fix the concrete family")
        concrete = gamma_nm_concrete(args.n, args.m)
        for d in concrete.vertices.values():
            print(format_word(normal_form_word(to_normal_form(d))))
        return 0
    results, exact = _gamma_report(args.n, args.m)
    _emit("gamma", {"n": args.n, "m": args.m, "threads": args.threads}, results, exact)
    return 0


def _cmd_subgraph(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise _CLIError(f"cannot read {args.input}: {exc}") from exc
    # one word per line; a blank line is the empty word, i.e. the identity
    elems = [from_word(parse_word(line)) for line in lines]
    if not elems:
        raise _CLIError(f"no words in {args.input}")
    y = subgraphs.full_subgraph(elems)
    dens = subgraphs.density(y)
    doubling = subgraphs.doubling_check(y)
    matching = subgraphs.two_one_matching(y)
    lower, middle, upper = subgraphs.folner_inequalities(y)
    results = {
        "size": y.size,
        "edges": y.edge_count,
        "density": _rational(dens),
        "q": subgraphs.q_value(y),
        "boundary_size": len(subgraphs.boundary(y)),
        "doubling": doubling.holds,
        "b1_size": doubling.b1_size,
        "matching_found": matching.assignment is not None,
        "min_degree": subgraphs.min_degree(y),
        "folner": {
            "boundary_ratio": _rational(lower),
            "four_minus_density": _rational(middle),
            "four_times_ratio": _rational(upper),
        },
    }
    exact = {
        "density": _decimal_string(dens),
        "folner.boundary_ratio": _decimal_string(lower),
        "folner.four_minus_density": _decimal_string(middle),
        "folner.four_times_ratio": _decimal_string(upper),
    }
    _emit("subgraph", {"input": args.input}, results, exact)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="thompsonf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("norm", help="exact word length of an element")
    p.add_argument("word")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("mul", help="normal form and norm of a product")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("geodesic", help="minimal word by greedy norm descent")
    p.add_argument("word")
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("spheres", help="sphere and ball sizes of the Cayley graph")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--cap", type=int, default=cayley.DEFAULT_CAP)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--threads", type=int, default=1, help="reserved; single process")
    p.set_defaults(func=_cmd_spheres)

    p = sub.add_parser("dead-search", help="dead elements up to a norm bound")
    p.add_argument("--max-norm", type=int, required=True)
    p.add_argument("--cap", type=int, default=cayley.DEFAULT_CAP)
    p.add_argument("--threads", type=int, default=1, help="reserved; single process")
    p.set_defaults(func=_cmd_dead_search)

    p = sub.add_parser("series", help="growth series of the monotone language")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("lword", help="membership in the monotone language")
    p.add_argument("word")
    p.set_defaults(func=_cmd_lword)

    p = sub.add_parser("pl", help="piecewise linear map of a word")
    p.add_argument("word")
    p.set_defaults(func=_cmd_pl)

    p = sub.add_parser("gamma", help="density witness family reports")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--report", action="store_true", default=True,
                   help="emit the JSON report (default)")
    p.add_argument("--emit-words", action="store_true",
                   help="dump concrete vertex words, one per line")
    p.add_argument("--threads", type=int, default=1, help="reserved; single process")
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("subgraph", help="density diagnostics for a set of words")
    p.add_argument("--input", required=True, help="UTF-8 file, one word per line")
    p.add_argument("--report", action="store_true", default=True,
                   help="emit the JSON report (default)")
    p.set_defaults(func=_cmd_subgraph)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    known = ", ".join(SUBCOMMANDS)
    usage = f"usage: thompsonf <subcommand> ...\nsubcommands: {known}"
    if argv and argv[0] in ("-h", "--help"):
        print(usage)
        return 0
    if not argv or argv[0] not in SUBCOMMANDS:
        print(usage, file=sys.stderr)
        return 64
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help only; errors raise _CLIError
        code = exc.code
        return code if isinstance(code, int) else 0
    except _CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (WordError, NormalFormError, ValueError, _CLIError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (cayley.ResourceCapError, growth.ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
