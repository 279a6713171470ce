"""Command-line entry point: ``stratnet <command> [options]``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bell, catalog, formats, heisenberg, schemes
from .errors import InfeasibleStratum, NotIsg, StratnetError
from .graph import (
    Graph,
    SzegoJacobi,
    is_antipodal,
    is_reflective,
    isg_check,
    stratify,
    szego_jacobi,
)
from .spectral import reflective_spectrum_check, spectral_data

USAGE_EXIT = 2


class UsageError(Exception):
    pass


@dataclass
class Source:
    label: str
    graph: Graph | None
    coeffs: SzegoJacobi | None
    sizes: list[int] | None
    origin: int


def _load(args, need_graph: bool = False, need_coeffs: bool = True) -> Source:
    given = [x for x in (args.catalog, args.edges, args.coeffs) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --catalog, --edges, --coeffs")
    origin = args.origin
    if args.coeffs is not None:
        c, sizes = formats.read_coefficients(args.coeffs)
        src = Source(str(args.coeffs), None, c, sizes, 0)
    elif args.edges is not None:
        src = Source(str(args.edges), formats.read_edge_list(args.edges), None, None, origin)
    else:
        obj = catalog.resolve(args.catalog)
        if isinstance(obj, SzegoJacobi):
            src = Source(args.catalog, None, obj, None, 0)
        else:
            src = Source(args.catalog, obj, None, None, origin)
    if src.graph is None and need_graph:
        raise UsageError(f"{args.command} needs a graph; {src.label} only provides coefficients")
    if src.graph is not None:
        if not 0 <= origin < src.graph.n:
            raise UsageError(f"--origin {origin} outside 0..{src.graph.n - 1}")
        src.sizes = list(stratify(src.graph, origin).sizes)
        if need_coeffs:
            src.coeffs = szego_jacobi(src.graph, origin)
    return src


def _windings(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--windings must be comma-separated integers, got {text!r}") from None


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _design(args, src: Source):
    sd = spectral_data(src.coeffs)
    stratum = args.stratum if args.stratum is not None else src.coeffs.d
    if not 1 <= stratum <= src.coeffs.d:
        raise UsageError(f"--stratum must lie in 1..{src.coeffs.d}")
    row = bell.check_row(sd.pmat, stratum, args.tol)
    if isinstance(row, str):
        raise InfeasibleStratum(f"stratum {stratum} cannot be localised: {row}")
    design = bell.design_couplings(sd, row, args.xi0, _windings(args.windings), args.tstar)
    return sd, design


def cmd_analyze(args) -> int:
    src = _load(args, need_coeffs=False)
    report: dict = {"input": src.label}
    if src.graph is not None:
        verdict = isg_check(src.graph, src.origin)
        report["origin"] = src.origin
        report["isg"] = {
            "is_isg": verdict.is_isg,
            "degrees": verdict.degrees,
            "witness": verdict.witness,
        }
        report["sizes"] = src.sizes
        if not verdict.is_isg:
            _emit(args, formats.dumps(report))
            raise NotIsg(f"{src.label} is not an invariant stratification graph from {src.origin}")
        src.coeffs = szego_jacobi(src.graph, src.origin)
    else:
        report["isg"] = None
        report["sizes"] = src.sizes
    c = src.coeffs
    sd = spectral_data(c)
    feasible = bell.scan_feasible_rows(sd.pmat, args.tol)
    report.update({
        "antipodal": src.sizes[-1] == 1 if src.sizes else None,
        "reflective": is_reflective(c),
        "reflective_spectrum": reflective_spectrum_check(sd),
        "coefficients": formats.coefficients_dict(c),
        **formats.spectral_report(sd),
        "feasible_strata": [r.stratum for r in feasible],
        "bounds": [bell.entanglement_bound(n) for n in src.sizes] if src.sizes else None,
    })
    _emit(args, formats.dumps(report))
    return 0


def cmd_design(args) -> int:
    src = _load(args)
    sd, design = _design(args, src)
    out = design.to_dict()
    rep = bell.verify_design(src.graph, src.coeffs, design, sd, src.sizes, src.origin)
    out["verify"] = rep.to_dict()
    _emit(args, formats.dumps(out))
    return 0


def cmd_evolve(args) -> int:
    src = _load(args)
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    tmax = args.tmax if args.tmax is not None else args.tstar
    if not tmax > 0:
        raise UsageError("--tmax must be positive")
    sd, design = _design(args, src)
    times = np.linspace(0.0, tmax, args.samples)
    gammas = bell.evolve_spectral(sd, design.tau, times / design.tstar)
    i = design.stratum
    if src.sizes is not None:
        conc = 2.0 * np.abs(gammas[:, 0]) * np.abs(gammas[:, i]) / np.sqrt(src.sizes[i])
    else:
        conc = np.full(len(times), np.nan)
    _emit(args, formats.trajectory_csv(times, gammas, conc))
    return 0


def cmd_verify_scheme(args) -> int:
    src = _load(args, need_graph=True, need_coeffs=False)
    g = src.graph
    verdict = schemes.verify_scheme(g)
    report = {"input": src.label, "is_scheme": verdict.is_scheme, "d": g.diameter}
    if verdict.is_scheme:
        p = verdict.table
        c = schemes.scheme_szego_jacobi(p)
        report.update({
            "intersection_numbers": p,
            "bose_mesner_residual": schemes.bose_mesner_residual(
                schemes.distance_matrices(g), p),
            "szego_jacobi": formats.coefficients_dict(c),
            "adjacency_polynomial_residual": schemes.adjacency_polynomial_check(g, c),
            "distance_polynomial_residual": schemes.distance_polynomial_residual(g, c),
        })
    else:
        report["witness"] = verdict.witness
    _emit(args, formats.dumps(report))
    return 0


def cmd_heisenberg_check(args) -> int:
    src = _load(args, need_graph=True)
    g = src.graph
    sd, design = _design(args, src)
    fits = heisenberg.sector_restriction_check(g)
    h_full = heisenberg.heisenberg_hamiltonian(g, [1.0] * len(fits))
    couplings = heisenberg.class_couplings(design.couplings, src.sizes)
    evo = heisenberg.full_vs_sector_evolution(g, couplings, design.tstar, design.tstar,
                                              src.origin, fits)
    target = stratify(g, src.origin).strata[design.stratum]
    report = {
        "n": g.n,
        "per_class": [f.to_dict() for f in fits],
        "magnetization_residual": heisenberg.magnetization_conservation_check(h_full),
        "evolution_deviation": evo.deviation,
        "concurrence": bell.concurrence_pair(evo.full_amplitudes, src.origin, target[0]),
    }
    _emit(args, formats.dumps(report))
    return 0


def _summary(entry: catalog.CatalogEntry) -> str:
    obj = catalog.resolve(entry.name)
    c = obj if isinstance(obj, SzegoJacobi) else szego_jacobi(obj, 0)
    omega = ",".join(formats.fmt(w) for w in c.omega)
    alpha = ",".join(formats.fmt(a) for a in c.alpha)
    line = f"{entry.name}\t{entry.kind}\td={c.d}\tomega=({omega})\talpha=({alpha})"
    if entry.warning:
        line += f"\twarning: {entry.warning}"
    return line


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = catalog.entries()
        with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
            lines = list(pool.map(_summary, entries))
        _emit(args, "\n".join(lines) + "\n")
        return 0
    if not args.name:
        raise UsageError("catalog emit needs an entry name")
    obj = catalog.resolve(args.name)
    if isinstance(obj, SzegoJacobi):
        _emit(args, formats.dumps(formats.coefficients_dict(obj)))
    else:
        _emit(args, formats.format_edge_list(obj))
    return 0


def _common(p: argparse.ArgumentParser):
    p.add_argument("--catalog", metavar="ADDR", help="catalog address, e.g. cycle:6")
    p.add_argument("--edges", metavar="FILE", help="edge-list file")
    p.add_argument("--coeffs", metavar="FILE", help="coefficient JSON file")
    p.add_argument("--origin", type=int, default=0)
    p.add_argument("--stratum", type=int, default=None, help="target stratum (default: d)")
    p.add_argument("--xi0", type=float, default=0.0)
    p.add_argument("--windings", default=None, metavar="CSV", help="integers n_l")
    p.add_argument("--tstar", type=float, default=1.0)
    p.add_argument("--tmax", type=float, default=None)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--tol", type=float, default=bell.ROW_RTOL, help="row clustering tolerance")
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratnet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func in [("analyze", cmd_analyze), ("design", cmd_design),
                       ("evolve", cmd_evolve), ("verify-scheme", cmd_verify_scheme),
                       ("heisenberg-check", cmd_heisenberg_check)]:
        p = sub.add_parser(name)
        _common(p)
        p.set_defaults(func=func)
    p = sub.add_parser("catalog")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "tstar", 1.0) <= 0:
        print("error: --tstar must be positive", file=sys.stderr)
        return USAGE_EXIT
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except StratnetError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
