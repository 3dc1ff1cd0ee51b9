"""Command-line interface: rates, spectra, sweeps, simulation, verification,
and regeneration of the reference tables/figure data as CSV or JSON.

Output is deterministic: the same command with the same seed produces
byte-identical files.  Floats are printed with 10 significant digits.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import matrices, oracle, pentadiag, rates, sim

REPORT_FIELDS = ("n", "w", "p", "analytic_rate", "numeric_rate",
                 "empirical_rate", "lambda2_modulus", "regime")

# Largest order for which sweep/rate commands attach the numeric
# cross-check column (full eigensolve per row).
NUMERIC_RATE_MAX_N = 512

# Reference values reproduced by the table2 target, keyed by n.  The rows
# marked inconsistent disagree with the closed form by roughly an order of
# magnitude (the closed form is independently confirmed by the numeric
# oracle up to n where the eigensolve is feasible), so they are flagged
# rather than matched.
TABLE2_REFERENCE = {100: 0.009, 200: 0.0022, 300: 0.001, 400: 0.0006,
                    500: 0.1, 600: 0.002, 700: 0.002, 800: 0.001,
                    900: 0.001, 1000: 0.0001}
TABLE2_INCONSISTENT = {500, 600, 700, 800, 900}


@dataclass(frozen=True)
class ReportRow:
    n: int
    w: float | None
    p: float | None
    analytic_rate: float | None
    numeric_rate: float | None
    empirical_rate: float | None
    lambda2_modulus: float | None
    regime: str | None

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in REPORT_FIELDS}


# --- formatting ----------------------------------------------------------


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".10g")
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(format(value, ".10g"))
    return value


def write_rows(rows: list[dict], fields: tuple[str, ...], out: str | None,
               fmt: str) -> None:
    if fmt == "csv":
        lines = [",".join(fields)]
        lines += [",".join(_fmt_cell(row[f]) for f in fields) for row in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        payload = [{f: _json_value(row[f]) for f in fields} for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


# --- argument parsing ----------------------------------------------------


def _parse_int_range(text: str) -> list[int]:
    """'A:B' -> [A, A+1, ..., B] (inclusive)."""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected A:B with integers, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _parse_grid(text: str) -> list[float]:
    """'A:B:STEP' -> [A, A+STEP, ..., <=B] (inclusive up to rounding)."""
    try:
        parts = [float(part) for part in text.split(":")]
        lo, hi, step = parts
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected A:B:STEP with numbers, got {text!r}") from None
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty grid {text!r}")
    values = []
    k = 0
    while True:
        v = lo + k * step
        if v > hi + 1e-9 * max(1.0, abs(hi)):
            break
        values.append(round(v, 12))
        k += 1
    return values


def _resolve_ns(args) -> list[int]:
    if getattr(args, "n_range", None):
        return args.n_range
    if getattr(args, "n", None) is not None:
        return [args.n]
    raise SystemExit("error: provide --n or --n-range")


def _resolve_weights(args, default: list[float] | None = None) -> list[float]:
    if getattr(args, "w_grid", None):
        grid = args.w_grid
    elif getattr(args, "w", None) is not None:
        grid = [args.w]
    elif default is not None:
        grid = default
    else:
        raise SystemExit("error: provide --w or --w-grid")
    for w in grid:
        if not 0.0 < w < 1.0:
            raise SystemExit(f"error: gossip weight {w} outside (0, 1)")
    return grid


def _resolve_probs(args, default: list[float] | None = None) -> list[float]:
    if getattr(args, "p_grid", None):
        grid = args.p_grid
    elif getattr(args, "p", None) is not None:
        grid = [args.p]
    elif default is not None:
        grid = default
    else:
        raise SystemExit("error: provide --p or --p-grid")
    for p in grid:
        if not 0.0 <= p <= 1.0:
            raise SystemExit(f"error: failure probability {p} outside [0, 1]")
    return grid


# --- row builders --------------------------------------------------------


def _numeric_rate_weighted(n: int, w: float) -> float | None:
    if n > NUMERIC_RATE_MAX_N:
        return None
    return oracle.spectral_gap_numeric(matrices.primitive_gossip_matrix(n, w))


def _numeric_rate_failure(n: int, p: float) -> float | None:
    if n > NUMERIC_RATE_MAX_N:
        return None
    return oracle.spectral_gap_numeric(matrices.expected_failure_matrix(n, p))


def _weighted_row(n: int, w: float, empirical: float | None = None) -> ReportRow:
    r = rates.rate_weighted(n, w)
    return ReportRow(n=n, w=w, p=None, analytic_rate=r.rate,
                     numeric_rate=_numeric_rate_weighted(n, w),
                     empirical_rate=empirical,
                     lambda2_modulus=r.lambda2_modulus, regime=r.regime)


def _failure_row(n: int, p: float, empirical: float | None = None) -> ReportRow:
    r = rates.rate_link_failure(n, p)
    return ReportRow(n=n, w=None, p=p, analytic_rate=r.rate,
                     numeric_rate=_numeric_rate_failure(n, p),
                     empirical_rate=empirical,
                     lambda2_modulus=r.lambda2_modulus, regime=r.regime)


def cmd_rate(args) -> int:
    ws = _resolve_weights(args, default=[0.5])
    rows = [_weighted_row(n, w).as_dict() for n in _resolve_ns(args) for w in ws]
    write_rows(rows, REPORT_FIELDS, args.out, args.format)
    return 0


def cmd_sweep_weight(args) -> int:
    if args.n is None:
        raise SystemExit("error: sweep-weight needs --n")
    ws = _resolve_weights(args, default=rates.default_weight_grid())
    rows = [_weighted_row(args.n, w).as_dict() for w in ws]
    write_rows(rows, REPORT_FIELDS, args.out, args.format)
    return 0


def cmd_sweep_n(args) -> int:
    if not getattr(args, "n_range", None):
        raise SystemExit("error: sweep-n needs --n-range")
    ws = _resolve_weights(args, default=[0.5])
    rows = [_weighted_row(n, w).as_dict() for n in args.n_range for w in ws]
    write_rows(rows, REPORT_FIELDS, args.out, args.format)
    return 0


def cmd_link_failure(args) -> int:
    ps = _resolve_probs(args, default=_parse_grid("0:1:0.1"))
    rows = [_failure_row(n, p).as_dict() for n in _resolve_ns(args) for p in ps]
    write_rows(rows, REPORT_FIELDS, args.out, args.format)
    return 0


def cmd_simulate(args) -> int:
    if args.n is None:
        raise SystemExit("error: simulate needs --n")
    config = sim.SimConfig(n=args.n, w=args.w if args.w is not None else 0.5,
                           p=args.p if args.p is not None else 0.0,
                           seed=args.seed, max_periods=args.max_periods,
                           tolerance=args.tolerance)
    try:
        mc = sim.monte_carlo_rate(config, args.trials)
    except RuntimeError as exc:
        raise SystemExit(f"error: {exc}") from None
    if config.p == 0.0:
        row = _weighted_row(config.n, config.w, empirical=mc.mean)
    elif config.w == 0.5:
        row = _failure_row(config.n, config.p, empirical=mc.mean)
    else:
        # No closed form covers weighted gossip with failures; report the
        # numeric gap of the simulated process's expected matrix is not
        # defined either, so only the empirical column is filled.
        row = ReportRow(n=config.n, w=config.w, p=config.p,
                        analytic_rate=None, numeric_rate=None,
                        empirical_rate=mc.mean, lambda2_modulus=None,
                        regime=None)
    write_rows([row.as_dict()], REPORT_FIELDS, args.out, args.format)
    return 0


SPECTRUM_FIELDS = ("n", "parameter_kind", "parameter", "index",
                   "analytic_re", "analytic_im", "numeric_re", "numeric_im",
                   "pair_distance")


def cmd_spectrum(args) -> int:
    if args.n is None:
        raise SystemExit("error: spectrum needs --n")
    n = args.n
    if args.p is not None:
        if not 0.0 <= args.p <= 1.0:
            raise SystemExit(f"error: failure probability {args.p} outside [0, 1]")
        kind, value = "p", args.p
        params = pentadiag.link_failure_params(n, args.p)
        matrix = matrices.expected_failure_matrix(n, args.p)
    else:
        w = args.w if args.w is not None else 0.5
        if not 0.0 < w < 1.0:
            raise SystemExit(f"error: gossip weight {w} outside (0, 1)")
        kind, value = "w", w
        params = pentadiag.weighted_gossip_params(n, w)
        matrix = matrices.primitive_gossip_matrix(n, w)
    analytic = pentadiag.analytic_eigenvalues(params).eigenvalues
    numeric = oracle.full_spectrum(matrix).eigenvalues.astype(complex)

    order = np.lexsort((analytic.imag, analytic.real, -np.abs(analytic)))
    analytic = analytic[order]
    dist = np.abs(analytic[:, None] - numeric[None, :])
    taken = np.zeros(n, dtype=bool)
    rows = []
    pair_of = np.full(n, -1)
    for flat in np.argsort(dist, axis=None):
        i, j = divmod(int(flat), n)
        if pair_of[i] >= 0 or taken[j]:
            continue
        pair_of[i] = j
        taken[j] = True
    for i in range(n):
        j = int(pair_of[i])
        rows.append({"n": n, "parameter_kind": kind, "parameter": value,
                     "index": i + 1,
                     "analytic_re": float(analytic[i].real),
                     "analytic_im": float(analytic[i].imag),
                     "numeric_re": float(numeric[j].real),
                     "numeric_im": float(numeric[j].imag),
                     "pair_distance": float(dist[i, j])})
    write_rows(rows, SPECTRUM_FIELDS, args.out, args.format)
    return 0


# --- verify suites -------------------------------------------------------


def _suite_spectra(n_max: int) -> float:
    worst = 0.0
    for n in range(3, n_max + 1):
        for w in _parse_grid("0.05:0.95:0.05"):
            ana = pentadiag.analytic_eigenvalues(
                pentadiag.weighted_gossip_params(n, w)).eigenvalues
            num = oracle.full_spectrum(
                matrices.primitive_gossip_matrix(n, w)).eigenvalues
            worst = max(worst, oracle.spectrum_match_distance(ana, num))
        for p in _parse_grid("0:0.9:0.1"):
            ana = pentadiag.analytic_eigenvalues(
                pentadiag.link_failure_params(n, p)).eigenvalues
            num = oracle.full_spectrum(
                matrices.expected_failure_matrix(n, p)).eigenvalues
            worst = max(worst, oracle.spectrum_match_distance(ana, num))
    return worst


def _suite_charpoly(n_max: int, seed: int) -> float:
    rng = np.random.default_rng(seed)
    orders = sorted({o for o in (5, 6, 13, 14, 27, 28, 50, 51)
                     if o <= max(n_max, 6)})
    worst = 0.0
    for n in orders:
        parity = "odd" if n % 2 == 1 else "even"
        for _ in range(3):
            e, b, c = rng.uniform(-1.5, 1.5, 3)
            d = b + c if n % 2 == 1 else rng.uniform(-1.5, 1.5)
            params = pentadiag.PentaParams(alpha=0.0, beta=0.0, e=e, b=b,
                                           c=c, d=d, n=n)
            lams = rng.uniform(-2, 2, 20) + 1j * rng.uniform(-2, 2, 20)
            for fam, corners in ((pentadiag.charpoly_bb, ("bb", "bb")),
                                 (pentadiag.charpoly_bb_bd, ("bb", "bd")),
                                 (pentadiag.charpoly_bd_bd, ("bd", "bd"))):
                a = pentadiag.penta_matrix(params, corners)
                for lam in lams:
                    det = oracle.determinant_shifted(a, lam)
                    val = fam(params, parity, lam)
                    worst = max(worst,
                                abs(val - det) / max(1.0, abs(det)))
    return worst


def _suite_failure_matrix(n_max: int) -> float:
    worst = 0.0
    for n in range(3, min(n_max, 10) + 1):
        for p in _parse_grid("0:1:0.1"):
            exact = oracle.enumerate_failure_expectation(n, p)
            built = matrices.expected_failure_matrix(n, p).entries
            worst = max(worst, float(np.abs(exact - built).max()))
    return worst


def _suite_simulator(n_max: int, seed: int) -> float:
    worst = 0.0
    for n in range(4, min(n_max, 16) + 1, 4):
        for w in (0.3, 0.5, 0.7):
            config = sim.SimConfig(n=n, w=w, p=0.0, seed=seed,
                                   max_periods=200, tolerance=1e-12)
            probe = np.zeros(n)
            probe[0] = 1.0
            result = sim.run_periodic_gossip(config, probe)
            target = rates.rate_weighted(n, w).rate
            if result.empirical_rate is not None:
                worst = max(worst, abs(result.empirical_rate - target))
    return worst


VERIFY_SUITES = {
    "spectra": (_suite_spectra, 1e-8, "max eigenvalue pairing distance"),
    "charpoly": (_suite_charpoly, 1e-8, "max determinant rel. error"),
    "failure-matrix": (_suite_failure_matrix, 1e-12, "max entry deviation"),
    "simulator": (_suite_simulator, 0.05, "max |empirical - analytic| rate"),
}


def cmd_verify(args) -> int:
    if args.n_max < 3:
        raise SystemExit(f"error: --n-max must be >= 3, got {args.n_max}")
    scopes = list(VERIFY_SUITES) if args.scope == "all" else [args.scope]
    failed = False
    for scope in scopes:
        suite, tol, label = VERIFY_SUITES[scope]
        if scope in ("charpoly", "simulator"):
            worst = suite(args.n_max, args.seed)
        else:
            worst = suite(args.n_max)
        ok = worst <= tol
        failed |= not ok
        print(f"{scope:<16} {label}: {worst:.3e} "
              f"(tolerance {tol:g})  {'PASS' if ok else 'FAIL'}")
    print(f"overall: {'FAIL' if failed else 'PASS'}")
    return 1 if failed else 0


# --- reproduce targets ---------------------------------------------------


def _rows_table1() -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "convergence_rate", "optimal_weight")
    rows = []
    for n in range(4, 21):
        w_star, result = rates.optimal_weight(n, rates.default_weight_grid())
        rows.append({"n": n, "convergence_rate": result.rate,
                     "optimal_weight": w_star})
    return fields, rows


def _rows_table2() -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "convergence_rate", "optimal_weight", "reference_rate",
              "reference_inconsistent")
    rows = []
    for n in sorted(TABLE2_REFERENCE):
        w_star, result = rates.optimal_weight(n, rates.default_weight_grid())
        rows.append({"n": n, "convergence_rate": result.rate,
                     "optimal_weight": w_star,
                     "reference_rate": TABLE2_REFERENCE[n],
                     "reference_inconsistent": n in TABLE2_INCONSISTENT})
    return fields, rows


def _rows_fig2() -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "w", "rate")
    rows = [{"n": n, "w": 0.5, "rate": rates.rate_weighted(n, 0.5).rate}
            for n in range(3, 101)]
    return fields, rows


def _rows_rate_vs_weight(ns: list[int]) -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "w", "rate")
    rows = [{"n": n, "w": w, "rate": rates.rate_weighted(n, w).rate}
            for n in ns for w in _parse_grid("0.05:0.95:0.05")]
    return fields, rows


def _rows_relative_error(ns: list[int]) -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "relative_error")
    rows = [{"n": n, "relative_error": rates.relative_error(n)} for n in ns]
    return fields, rows


def _rows_fig7() -> tuple[tuple[str, ...], list[dict]]:
    fields = ("n", "p", "rate")
    rows = [{"n": n, "p": p, "rate": rates.rate_link_failure(n, p).rate}
            for n in (5, 10, 15, 20) for p in _parse_grid("0:1:0.05")]
    return fields, rows


REPRODUCE_TARGETS = {
    "table1": _rows_table1,
    "table2": _rows_table2,
    "fig2": _rows_fig2,
    "fig3": lambda: _rows_rate_vs_weight([4, 8, 12, 16, 20]),
    "fig4": lambda: _rows_rate_vs_weight(list(range(100, 1001, 100))),
    "fig5": lambda: _rows_relative_error(list(range(4, 101))),
    "fig6": lambda: _rows_relative_error(list(range(100, 1001, 10))),
    "fig7": _rows_fig7,
}


def cmd_reproduce(args) -> int:
    target = REPRODUCE_TARGETS.get(args.target)
    if target is None:
        raise SystemExit(
            f"error: unknown target {args.target!r}; choose from "
            + ", ".join(sorted(REPRODUCE_TARGETS)))
    fields, rows = target()
    write_rows(rows, fields, args.out, args.format)
    return 0


# --- entry point ----------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, *, sim_flags: bool = False,
                p_flags: bool = False, w_flags: bool = True) -> None:
    parser.add_argument("--n", type=int, help="node count")
    parser.add_argument("--n-range", type=_parse_int_range, metavar="A:B",
                        help="inclusive node-count range")
    if w_flags:
        parser.add_argument("--w", type=float, help="gossip weight in (0,1)")
        parser.add_argument("--w-grid", type=_parse_grid, metavar="A:B:STEP",
                            help="inclusive gossip-weight grid")
    if p_flags:
        parser.add_argument("--p", type=float,
                            help="link failure probability in [0,1]")
        parser.add_argument("--p-grid", type=_parse_grid, metavar="A:B:STEP",
                            help="inclusive failure-probability grid")
    if sim_flags:
        parser.add_argument("--seed", type=int, default=0,
                            help="base RNG seed (default 0)")
        parser.add_argument("--trials", type=int, default=1,
                            help="Monte Carlo trials (default 1)")
        parser.add_argument("--max-periods", type=int, default=200,
                            help="period budget per run (default 200)")
        parser.add_argument("--tolerance", type=float, default=1e-12,
                            help="disagreement threshold (default 1e-12)")
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticegossip",
        description="Periodic gossip on path networks: closed-form rates, "
                    "spectra, link-failure analysis, and simulation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", help="convergence rate for given n (and w)")
    _add_common(p)
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("spectrum",
                       help="analytic vs numeric eigenvalues for one matrix")
    _add_common(p, p_flags=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep-weight", help="rate across a weight grid")
    _add_common(p)
    p.set_defaults(func=cmd_sweep_weight)

    p = sub.add_parser("sweep-n", help="rate across a node-count range")
    _add_common(p)
    p.set_defaults(func=cmd_sweep_n)

    p = sub.add_parser("link-failure",
                       help="rate under Bernoulli link failures")
    _add_common(p, p_flags=True, w_flags=False)
    p.set_defaults(func=cmd_link_failure)

    p = sub.add_parser("simulate", help="Monte Carlo empirical rate")
    _add_common(p, sim_flags=True, p_flags=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify",
                       help="run the analytic-vs-oracle invariant suites")
    p.add_argument("--scope", default="all",
                   choices=("spectra", "charpoly", "failure-matrix",
                            "simulator", "all"))
    p.add_argument("--n-max", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce",
                       help="regenerate reference table/figure data")
    p.add_argument("--target", required=True,
                   choices=tuple(sorted(REPRODUCE_TARGETS)))
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
