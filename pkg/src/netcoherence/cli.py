"""Command-line interface.

Subcommands
-----------
generate    write a generated family graph as an edge list
coherence   exact-spectrum or stochastic coherence of one graph
exact       rational coherence tables for the triangle families
simulate    noisy consensus estimate vs the analytic value
stats       whole-network statistic rows for edge-list files
scaling     coherence vs size with fitted log-log slopes

Every run prints a reproducibility header (version plus arguments) to
stderr, keeping stdout clean for CSV/JSON payloads.  Errors exit
nonzero with an ``error:`` line on stderr.  Floats are printed with 12
significant digits; exact rationals as ``numerator/denominator``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction

from netcoherence import __version__
from netcoherence.exact import (
    coherence_recursion,
    psfw_theorem1,
    sierpinski_theorem2,
)
from netcoherence.generators import psfw_iterative, sierpinski
from netcoherence.graphs import Graph
from netcoherence.ingest import (
    CSV_HEADER,
    load_bundled,
    network_stats,
    parse_edge_list,
    serialize_edge_list,
    stats_csv_row,
    stats_to_dict,
)
from netcoherence.simulate import (
    SimConfig,
    estimate_lambda2,
    simulate_first_order,
    simulate_second_order,
)
from netcoherence.spectral import (
    DENSE_EIGEN_LIMIT,
    coherence_dense,
    coherence_estimate,
)

__all__ = ["main"]

_FAMILIES = ("psfw", "sierpinski")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _frac(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


@contextlib.contextmanager
def _open_output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _generate(family: str, n: int):
    if family == "psfw":
        return psfw_iterative(n)
    return sierpinski(n)


def _resolve_graph(args) -> tuple[Graph, str]:
    """Graph plus label from --input or --family/--n."""
    if getattr(args, "input", None):
        graph, report = parse_edge_list(args.input)
        _info(
            f"# parsed {report.name}: {graph.n_vertices} vertices, "
            f"{graph.n_edges} edges ({report.self_loops} self-loops, "
            f"{report.duplicates} duplicates dropped)"
        )
        return graph, report.name
    if getattr(args, "family", None) is None or getattr(args, "n", None) is None:
        raise ValueError("specify either --input FILE or --family and --n")
    gen = _generate(args.family, args.n)
    return gen.graph, f"{args.family}-{args.n}"


# ----------------------------------------------------------------- subcommands


def cmd_generate(args) -> int:
    gen = _generate(args.family, args.n)
    comments = (
        f"family={gen.family} generation={gen.generation} "
        f"hubs={gen.hubs[0] + 1},{gen.hubs[1] + 1},{gen.hubs[2] + 1}",
    )
    with _open_output(args.output) as fh:
        serialize_edge_list(gen.graph, fh, comments=comments)
    _info(
        f"# generated {gen.family} n={gen.generation}: "
        f"{gen.graph.n_vertices} vertices, {gen.graph.n_edges} edges"
    )
    return 0


def cmd_coherence(args) -> int:
    graph, label = _resolve_graph(args)
    method = args.method
    if method is None:
        method = "dense" if graph.n_vertices <= DENSE_EIGEN_LIMIT else "estimate"
    if method == "dense":
        rep = coherence_dense(graph)
    else:
        rep = coherence_estimate(graph, probes=args.probes, seed=args.seed)
    payload = {
        "name": label,
        "n_vertices": rep.n_vertices,
        "n_edges": rep.n_edges,
        "h_fo": rep.h_fo,
        "h_so": rep.h_so,
        "kirchhoff": rep.kirchhoff,
        "biharmonic": rep.biharmonic,
        "method": rep.method,
    }
    if rep.uncertainty is not None:
        payload["h_fo_stderr"] = rep.uncertainty.h_fo
        payload["h_so_stderr"] = rep.uncertainty.h_so
        payload["probes"] = args.probes
        payload["seed"] = args.seed
    with _open_output(args.output) as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return 0


def _exact_pair(family: str, method: str, n: int) -> tuple[Fraction, Fraction, str]:
    if family == "psfw":
        if method == "closed":
            return (*psfw_theorem1(n), "closed-form")
        ec = coherence_recursion(n)
        return ec.h_fo, ec.h_so, "exact-recursion"
    if method == "recursion":
        raise ValueError(
            "no recursion route for the sierpinski family; use --method closed"
        )
    return (*sierpinski_theorem2(n), "closed-form")


def cmd_exact(args) -> int:
    if args.n is not None:
        lo = hi = args.n
    elif args.n_from is not None and args.n_to is not None:
        lo, hi = args.n_from, args.n_to
    else:
        raise ValueError("specify --n or both --n-from and --n-to")
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= n-from <= n-to")
    if hi > 64:
        raise ValueError("generation too large for the exact table (n > 64)")
    method = args.method or ("recursion" if args.family == "psfw" else "closed")

    rows = []
    for n in range(lo, hi + 1):
        h_fo, h_so, tag = _exact_pair(args.family, method, n)
        rows.append(
            {
                "n": n,
                "n_vertices": (3 ** (n + 1) + 3) // 2,
                "h_fo": float(h_fo),
                "h_so": float(h_so),
                "h_fo_exact": _frac(h_fo),
                "h_so_exact": _frac(h_so),
                "method": tag,
            }
        )
    with _open_output(args.output) as fh:
        if args.format == "json":
            json.dump({"family": args.family, "rows": rows}, fh, indent=2)
            fh.write("\n")
        else:
            fh.write("n,n_vertices,h_fo,h_so,h_fo_exact,h_so_exact,method\n")
            for r in rows:
                fh.write(
                    f"{r['n']},{r['n_vertices']},{_fmt(r['h_fo'])},"
                    f"{_fmt(r['h_so'])},{r['h_fo_exact']},{r['h_so_exact']},"
                    f"{r['method']}\n"
                )
    return 0


def _analytic_reference(args, graph: Graph) -> float | None:
    if getattr(args, "family", None) is not None and args.n is not None:
        if args.family == "psfw":
            ec = coherence_recursion(args.n)
            return float(ec.h_fo if args.order == 1 else ec.h_so)
        if args.n >= 1:
            h_fo, h_so = sierpinski_theorem2(args.n)
            return float(h_fo if args.order == 1 else h_so)
    if graph.n_vertices <= DENSE_EIGEN_LIMIT:
        rep = coherence_dense(graph)
        return rep.h_fo if args.order == 1 else rep.h_so
    return None


def cmd_simulate(args) -> int:
    graph, label = _resolve_graph(args)
    cfg = SimConfig(
        dt=args.dt,
        t_total=args.t_total,
        burn_in=args.burn_in,
        trials=args.trials,
        seed=args.seed,
    )
    lam2 = estimate_lambda2(graph)
    if lam2 is not None and args.t_total * lam2 < 10.0:
        _info(
            f"warning: t_total * lambda_2 = {args.t_total * lam2:.3g} < 10; "
            f"the trajectory may not reach steady state"
        )
    run = simulate_first_order if args.order == 1 else simulate_second_order
    est = run(graph, cfg)
    analytic = _analytic_reference(args, graph)
    payload = {
        "name": label,
        "n_vertices": graph.n_vertices,
        "order": args.order,
        "estimate": est.value,
        "std_error": est.std_error,
        "analytic": analytic,
        "rel_error": None if analytic is None else est.value / analytic - 1.0,
        "dt": est.dt,
        "steps": est.steps,
        "trials": est.trials,
        "burn_in": args.burn_in,
        "seed": args.seed,
    }
    with _open_output(args.output) as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return 0


def cmd_stats(args) -> int:
    sources: list[tuple[str, str]] = [("bundled", b) for b in (args.bundled or [])]
    sources += [("path", p) for p in args.paths]
    if not sources:
        raise ValueError("no input networks; pass files or --bundled NAME")
    rows = []
    for kind, src in sources:
        if kind == "bundled":
            graph, report = load_bundled(src)
        else:
            graph, report = parse_edge_list(src)
        _info(
            f"# {report.name}: {report.self_loops} self-loops, "
            f"{report.duplicates} duplicates dropped"
        )
        rows.append(
            network_stats(graph, report.name, probes=args.probes, seed=args.seed)
        )
    with _open_output(args.output) as fh:
        if args.format == "json":
            json.dump([stats_to_dict(r) for r in rows], fh, indent=2)
            fh.write("\n")
        else:
            fh.write(CSV_HEADER + "\n")
            for r in rows:
                fh.write(stats_csv_row(r) + "\n")
    return 0


def _scaling_rows_family(family: str, lo: int, hi: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        method = "recursion" if family == "psfw" else "closed"
        h_fo, h_so, tag = _exact_pair(family, method, n)
        rows.append(
            {
                "label": f"{family}-{n}",
                "group": family,
                "n_vertices": (3 ** (n + 1) + 3) // 2,
                "h_fo": float(h_fo),
                "h_so": float(h_so),
                "method": tag,
            }
        )
    return rows


def _scaling_rows_files(paths: list[str], probes: int, seed: int) -> list[dict]:
    rows = []
    for p in paths:
        graph, report = parse_edge_list(p)
        st = network_stats(graph, report.name, probes=probes, seed=seed)
        rows.append(
            {
                "label": st.name,
                "group": "files",
                "n_vertices": st.n_lcc,
                "h_fo": st.h_fo,
                "h_so": st.h_so,
                "method": st.method,
            }
        )
    return rows


def _fit_slopes(rows: list[dict]) -> dict[str, dict[str, float]]:
    import numpy as np

    slopes: dict[str, dict[str, float]] = {}
    groups = sorted({r["group"] for r in rows})
    for group in groups:
        sub = [r for r in rows if r["group"] == group]
        if len(sub) < 3:
            continue
        log_n = np.log([r["n_vertices"] for r in sub])
        slopes[group] = {
            key: float(np.polyfit(log_n, np.log([r[key] for r in sub]), 1)[0])
            for key in ("h_fo", "h_so")
        }
    return slopes


def cmd_scaling(args) -> int:
    if args.input:
        rows = _scaling_rows_files(args.input, args.probes, args.seed)
    else:
        if args.n_from < 0 or args.n_to < args.n_from:
            raise ValueError("need 0 <= n-from <= n-to")
        if args.n_to > 64:
            raise ValueError("generation too large for the scaling table (n > 64)")
        families = _FAMILIES if args.family == "both" else (args.family,)
        if "sierpinski" in families and args.n_from < 1:
            raise ValueError(
                "sierpinski scaling needs n-from >= 1 "
                "(closed forms start at generation 1)"
            )
        rows = []
        for family in families:
            rows.extend(_scaling_rows_family(family, args.n_from, args.n_to))
    slopes = _fit_slopes(rows)
    with _open_output(args.output) as fh:
        if args.format == "json":
            json.dump({"rows": rows, "slopes": slopes}, fh, indent=2)
            fh.write("\n")
        else:
            fh.write("label,N,h_fo,h_so,method\n")
            for r in rows:
                fh.write(
                    f"{r['label']},{r['n_vertices']},{_fmt(r['h_fo'])},"
                    f"{_fmt(r['h_so'])},{r['method']}\n"
                )
            for group, vals in slopes.items():
                for key in ("h_fo", "h_so"):
                    fh.write(f"# slope,{group},{key},{_fmt(vals[key])}\n")
    return 0


# ---------------------------------------------------------------------- parser


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", help="edge-list file to analyze")
    sub.add_argument("--family", choices=_FAMILIES, help="generated family")
    sub.add_argument("--n", type=int, help="family generation")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netcoherence",
        description="First- and second-order network coherence toolkit.",
    )
    parser.add_argument(
        "--version", action="version", version=f"netcoherence {__version__}"
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("generate", help="write a generated graph as an edge list")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = subs.add_parser("coherence", help="coherence of one graph")
    _add_graph_source(p)
    p.add_argument("--method", choices=("dense", "estimate"),
                   help="route; default picks by graph size")
    p.add_argument("--probes", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_coherence)

    p = subs.add_parser("exact", help="rational coherence tables")
    p.add_argument("--family", choices=_FAMILIES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-from", type=int, dest="n_from")
    p.add_argument("--n-to", type=int, dest="n_to")
    p.add_argument("--method", choices=("recursion", "closed"))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_exact)

    p = subs.add_parser("simulate", help="noisy consensus simulation")
    _add_graph_source(p)
    p.add_argument("--order", type=int, choices=(1, 2), default=1)
    p.add_argument("--dt", type=float, default=None,
                   help="time step (default: half the stability bound)")
    p.add_argument("--t-total", type=float, default=200.0, dest="t_total")
    p.add_argument("--burn-in", type=float, default=0.5, dest="burn_in")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("stats", help="statistic rows for edge-list networks")
    p.add_argument("paths", nargs="*", help="edge-list files")
    p.add_argument("--bundled", action="append",
                   help="bundled network name (karate, lesmis); repeatable")
    p.add_argument("--probes", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_stats)

    p = subs.add_parser("scaling", help="coherence vs size with log-log slopes")
    p.add_argument("--family", choices=_FAMILIES + ("both",), default="both")
    p.add_argument("--n-from", type=int, default=1, dest="n_from")
    p.add_argument("--n-to", type=int, default=8, dest="n_to")
    p.add_argument("--input", nargs="+", help="edge-list files instead of families")
    p.add_argument("--probes", type=int, default=256)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_scaling)

    return parser


def main(argv: list[str] | None = None) -> int:
    args_list = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    args = parser.parse_args(args_list)
    _info(f"# netcoherence {__version__} | {' '.join(args_list)}")
    try:
        return args.func(args)
    except (ValueError, RuntimeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
