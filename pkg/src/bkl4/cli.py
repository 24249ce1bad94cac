"""
cli: the `bkl4` command.

Subcommands
-----------
  nf WORD        left normal form `d^p . f1 . f2 ...` plus the invariants
                 (inf, sup, len, word_len, lambda, k1, k2, rigid, periodic)
  sc WORD        sliding circuit set: --size (default), --graph dot|json,
                 or --quotient dot|json
  conj X Y       conjugacy decision; on success prints a certificate z with
                 x = z^-1 . y . z (re-verified before printing)
  beta K         the beta_k benchmark-family word
  bench          CSV scaling table over the beta family, slope on stderr

Braid words use the grammar of `bkl4.words`: atom names a12..a34, weight-2
names c123..p14-23, `d` for the Garside element, `s1|s2|s3` for the Artin
generators, `^` for integer powers, factors separated by `.` or whitespace.

Exit codes: 0 success / conjugate, 1 not conjugate, 2 parse or usage error,
3 cap exceeded (the safety cap is `--cap` or the B4_SC_CAP variable).

All output is UTF-8 text; `--json` emits exactly one JSON document on
stdout.  Graph output is graphviz-compatible DOT: vertices are labeled with
compact normal forms, edges with the arrow names that induce them, and
quotient vertices carry their orbit member counts.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import time
from typing import Sequence

from bkl4.circuits import (
    CapExceededError,
    SCSet,
    compute_sc,
    minimal_arrows,
    quotient_graph,
)
from bkl4.engine import GarsideBraid, conjugate, invariants, random_braid
from bkl4.simples import SIMPLE_NAMES
from bkl4.sliding import is_rigid
from bkl4.solver import (
    CONJUGATE,
    INCONCLUSIVE,
    NOT_CONJUGATE,
    is_periodic,
    solve_conjugacy,
    verify_certificate,
)
from bkl4.words import ParseError, beta_braid, beta_word, format_braid, format_braid_compact, parse_braid

EXIT_OK = 0
EXIT_NOT_CONJUGATE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _CliError(Exception):
    """Internal: carries an exit code and a message for stderr."""

    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _parse(text: str) -> GarsideBraid:
    try:
        return parse_braid(text)
    except ParseError as exc:
        raise _CliError(
            EXIT_USAGE, f"parse error at position {exc.position}: {exc.message}"
        ) from exc


def _invariant_fields(x: GarsideBraid) -> dict:
    inv = invariants(x)
    return {
        "inf": inv.inf,
        "sup": inv.sup,
        "len": inv.canonical_length,
        "word_len": inv.word_length,
        "lambda": inv.weight,
        "k1": inv.k1,
        "k2": inv.k2,
        "rigid": is_rigid(x),
        "periodic": is_periodic(x),
    }


def _format_fields(fields: dict) -> str:
    parts = []
    for key, value in fields.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _compute_sc(x: GarsideBraid, cap: int | None) -> SCSet:
    try:
        return compute_sc(x, cap=cap)
    except CapExceededError as exc:
        raise _CliError(
            EXIT_CAP, f"cap exceeded: the sliding circuit set has more than {exc.cap} elements"
        ) from exc


def cmd_nf(args: argparse.Namespace) -> int:
    x = _parse(args.word)
    fields = _invariant_fields(x)
    if args.json:
        print(json.dumps({"nf": format_braid(x), **fields}))
    else:
        print(format_braid(x))
        print(_format_fields(fields))
    return EXIT_OK


def _dot_graph(sc: SCSet) -> str:
    index = {element: i for i, element in enumerate(sc.elements)}
    lines = ["digraph SCG {"]
    for element, i in index.items():
        lines.append(f'  n{i} [label="{format_braid_compact(element)}"];')
    for element, i in index.items():
        for arrow in minimal_arrows(element, known_rigid=sc.rigid):
            target = conjugate(element, GarsideBraid(0, (arrow,)))
            lines.append(
                f'  n{i} -> n{index[target]} [label="{SIMPLE_NAMES[arrow]}"];'
            )
    lines.append("}")
    return "\n".join(lines)


def _json_graph(sc: SCSet) -> dict:
    index = {element: i for i, element in enumerate(sc.elements)}
    edges = []
    for element, i in index.items():
        for arrow in minimal_arrows(element, known_rigid=sc.rigid):
            target = conjugate(element, GarsideBraid(0, (arrow,)))
            edges.append(
                {"source": i, "target": index[target], "label": SIMPLE_NAMES[arrow]}
            )
    return {
        "base": format_braid(sc.base),
        "representative": format_braid(sc.representative),
        "sc_size": sc.size,
        "rigid": sc.rigid,
        "vertices": [format_braid(element) for element in sc.elements],
        "edges": edges,
        "conjugators": {
            format_braid(element): format_braid(z)
            for element, z in sc.conjugators.items()
        },
    }


def _dot_quotient(sc: SCSet) -> str:
    graph = quotient_graph(sc)
    lines = ["digraph SCQ {"]
    for i, orbit in enumerate(graph.orbits):
        label = f"{format_braid_compact(orbit.representative)} ({orbit.size})"
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in graph.edges:
        names = ",".join(SIMPLE_NAMES[s] for s in graph.edge_labels[(i, j)])
        lines.append(f'  n{i} -> n{j} [label="{names}", dir=none];')
    lines.append("}")
    return "\n".join(lines)


def _json_quotient(sc: SCSet) -> dict:
    graph = quotient_graph(sc)
    return {
        "base": format_braid(sc.base),
        "vertex_count": graph.vertex_count,
        "is_path": graph.is_path(),
        "orbits": [
            {"representative": format_braid(orbit.representative), "size": orbit.size}
            for orbit in graph.orbits
        ],
        "edges": [
            {
                "source": i,
                "target": j,
                "labels": [SIMPLE_NAMES[s] for s in graph.edge_labels[(i, j)]],
            }
            for i, j in graph.edges
        ],
    }


def cmd_sc(args: argparse.Namespace) -> int:
    x = _parse(args.word)
    sc = _compute_sc(x, args.cap)
    if args.graph is not None:
        if args.graph == "dot":
            print(_dot_graph(sc))
        else:
            print(json.dumps(_json_graph(sc)))
    elif args.quotient is not None:
        if args.quotient == "dot":
            print(_dot_quotient(sc))
        else:
            print(json.dumps(_json_quotient(sc)))
    elif args.json:
        print(json.dumps({**_invariant_fields(x), "sc_size": sc.size}))
    else:
        print(sc.size)
    return EXIT_OK


def cmd_conj(args: argparse.Namespace) -> int:
    x = _parse(args.x)
    y = _parse(args.y)
    decision = solve_conjugacy(x, y, assume_pa=args.assume_pa, cap=args.cap)
    if decision.outcome == CONJUGATE:
        certificate = decision.certificate
        if not verify_certificate(certificate):
            raise AssertionError("internal error: unverified certificate")
        word = format_braid(certificate.z)
        if args.json:
            print(
                json.dumps(
                    {
                        **_invariant_fields(x),
                        "outcome": "conjugate",
                        "certificate": word,
                    }
                )
            )
        else:
            print("conjugate")
            print(f"z = {word}")
        return EXIT_OK
    if decision.outcome == NOT_CONJUGATE:
        if args.json:
            print(
                json.dumps(
                    {
                        **_invariant_fields(x),
                        "outcome": "not-conjugate",
                        "reason": decision.reason,
                    }
                )
            )
        else:
            print(f"not conjugate ({decision.reason})")
        return EXIT_NOT_CONJUGATE
    assert decision.outcome == INCONCLUSIVE
    print(f"inconclusive ({decision.reason})", file=sys.stderr)
    return EXIT_CAP


def cmd_beta(args: argparse.Namespace) -> int:
    print(beta_word(args.k))
    return EXIT_OK


def _loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> float:
    lx = [math.log(v) for v in xs]
    ly = [math.log(v) for v in ys]
    n = len(lx)
    mx = sum(lx) / n
    my = sum(ly) / n
    sxx = sum((v - mx) ** 2 for v in lx)
    sxy = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    return sxy / sxx


def cmd_bench(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    writer = csv.writer(sys.stdout)
    writer.writerow(["k", "ell", "sc_size", "t_sc", "t_solve"])
    lengths: list[int] = []
    sc_times: list[float] = []
    solve_times: list[float] = []
    for k in range(1, args.kmax + 1):
        x = beta_braid(k)
        ell = x.canonical_length
        start = time.perf_counter()
        sc = _compute_sc(x, None)
        t_sc = time.perf_counter() - start
        w = random_braid(rng, rng.randrange(3, 8), 0)
        y = conjugate(x, w)
        start = time.perf_counter()
        decision = solve_conjugacy(x, y)
        t_solve = time.perf_counter() - start
        assert decision.outcome == CONJUGATE
        writer.writerow([k, ell, sc.size, f"{t_sc:.6f}", f"{t_solve:.6f}"])
        lengths.append(ell)
        sc_times.append(max(t_sc, 1e-9))
        solve_times.append(max(t_solve, 1e-9))
    print(
        f"log-log slope t_sc vs ell: {_loglog_slope(lengths, sc_times):.2f}",
        file=sys.stderr,
    )
    print(
        f"log-log slope t_solve vs ell: {_loglog_slope(lengths, solve_times):.2f}"
        " (soft target <= 3.5)",
        file=sys.stderr,
    )
    return EXIT_OK


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _kmax(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be >= 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bkl4",
        description="Dual Garside machinery and conjugacy solving for the "
        "4-strand braid group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", help="left normal form and invariants")
    p_nf.add_argument("word", help="braid word")
    p_nf.add_argument("--json", action="store_true", help="JSON output")
    p_nf.set_defaults(func=cmd_nf)

    p_sc = sub.add_parser("sc", help="sliding circuit set")
    p_sc.add_argument("word", help="braid word")
    mode = p_sc.add_mutually_exclusive_group()
    mode.add_argument("--size", action="store_true", help="print |SC| (default)")
    mode.add_argument("--graph", choices=("dot", "json"), help="full SC graph")
    mode.add_argument("--quotient", choices=("dot", "json"), help="orbit quotient graph")
    p_sc.add_argument("--json", action="store_true", help="JSON output (with --size)")
    p_sc.add_argument("--cap", type=int, help="abort if |SC| exceeds this")
    p_sc.set_defaults(func=cmd_sc)

    p_conj = sub.add_parser("conj", help="decide conjugacy, print a certificate")
    p_conj.add_argument("x", help="braid word")
    p_conj.add_argument("y", help="braid word")
    p_conj.add_argument(
        "--assume-pa",
        action="store_true",
        dest="assume_pa",
        help="try the rigid-power fast path first (verified, falls back)",
    )
    p_conj.add_argument("--cap", type=int, help="abort if a search exceeds this")
    p_conj.add_argument("--json", action="store_true", help="JSON output")
    p_conj.set_defaults(func=cmd_conj)

    p_beta = sub.add_parser("beta", help="emit the beta_k family word")
    p_beta.add_argument("k", type=_nonnegative_int, help="family index (>= 0)")
    p_beta.set_defaults(func=cmd_beta)

    p_bench = sub.add_parser("bench", help="CSV scaling benchmark")
    p_bench.add_argument("--family", choices=("beta",), default="beta")
    p_bench.add_argument("--kmax", type=_kmax, default=5, help="largest k (>= 2)")
    p_bench.add_argument("--seed", type=int, default=0, help="RNG seed for the pairs")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _CliError as err:
        print(err.message, file=sys.stderr)
        return err.code


if __name__ == "__main__":
    sys.exit(main())
