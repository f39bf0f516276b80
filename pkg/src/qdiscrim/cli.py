"""Command-line front end.

Subcommands:
  optimize  load a signal set, print its optimal projective measurement
  sweep     tabulate gains over an angle grid into CSV files
  povm      build the unambiguous-discrimination POVM for a signal set
  verify    run the numerical invariant suite

Exit codes: 0 success, 1 failed verification, 2 validation error,
3 degenerate-spectrum warning under --strict, 4 output I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import collective, infogain, signals, usd, vonneumann
from .errors import ValidationError

DS_TOL = 1e-10

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_VALIDATION = 2
EXIT_STRICT_DEGENERATE = 3
EXIT_IO = 4


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of an angle sweep.

    ``seed`` is accepted for interface stability; the sweep itself is
    fully deterministic, so identical configs yield byte-identical files.
    """

    theta_min: float
    theta_max: float
    points: int
    k_values: tuple
    strategies: tuple
    output_path: str
    seed: int = 0

    def __post_init__(self):
        if not (0.0 < self.theta_min <= self.theta_max <= math.pi / 2):
            raise ValidationError(
                f"need 0 < theta_min <= theta_max <= pi/2, got "
                f"[{self.theta_min!r}, {self.theta_max!r}]"
            )
        if self.points < 2:
            raise ValidationError(f"points must be >= 2, got {self.points}")
        if not self.k_values or any(k < 1 for k in self.k_values):
            raise ValidationError(f"k values must be >= 1, got {self.k_values}")
        bad = [s for s in self.strategies if s not in ("vn", "usd")]
        if bad or not self.strategies:
            raise ValidationError(
                f"strategies must be a non-empty subset of vn,usd; got {self.strategies}"
            )

    def grid(self) -> np.ndarray:
        return np.linspace(self.theta_min, self.theta_max, self.points)


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _print_matrix(title: str, m: np.ndarray) -> None:
    print(f"{title}:")
    body = np.array2string(
        np.asarray(m), precision=6, suppress_small=True, max_line_width=120
    )
    print(body)


def _print_report(report: infogain.GainReport) -> None:
    print(f"strategy: {report.strategy} (k={report.k})")
    print(f"initial entropy (bits): {_fmt(report.h_in)}")
    print(f"average final entropy (bits): {_fmt(report.h_fin)}")
    print(f"average information gain (bits): {_fmt(report.i_av)}")
    print(f"gain per signal (bits): {_fmt(report.i_av_per_signal)}")
    if report.p_inc is not None:
        print(f"inconclusive probability: {_fmt(report.p_inc)}")


def cmd_optimize(args) -> int:
    s = signals.load_json(args.input)
    basis = vonneumann.optimal_von_neumann(s)
    p = vonneumann.probability_matrix(basis, s)
    print(f"signal set: {s.label or args.input} (n={s.n})")
    _print_matrix("optimal measurement basis B", basis.b)
    _print_matrix("probability matrix P", p)
    ds = vonneumann.is_doubly_stochastic(p, DS_TOL)
    print(f"doubly stochastic (tol {DS_TOL:g}): {'yes' if ds else 'no'}")
    if not ds:
        res = vonneumann.sinkhorn_scale(p)
        print(
            f"sinkhorn scaling: converged={res.converged} "
            f"iterations={res.iterations}"
        )
        _print_matrix("doubly stochastic limit T", res.t)
    _print_report(infogain.info_gain_von_neumann(s, basis))
    if basis.degenerate:
        print("warning: repeated singular values; optimal basis is not certified unique")
        if args.strict:
            return EXIT_STRICT_DEGENERATE
    return EXIT_OK


def cmd_povm(args) -> int:
    s = signals.load_json(args.input)
    povm = usd.usd_povm(s)
    print(f"signal set: {s.label or args.input} (n={s.n})")
    _print_matrix("reciprocal states", povm.reciprocal)
    print(f"inconclusive probability: {_fmt(povm.p_inc)}")
    for i, element in enumerate(povm.elements, start=1):
        spectrum = np.linalg.eigvalsh((element + element.conj().T) / 2)
        print(f"element {i} spectrum: {np.array2string(spectrum, precision=6)}")
    spectrum = np.linalg.eigvalsh((povm.inconclusive + povm.inconclusive.conj().T) / 2)
    print(f"inconclusive element spectrum: {np.array2string(spectrum, precision=6)}")
    print(f"completeness residual: {_fmt(usd.completeness_residual(povm))}")
    _print_report(infogain.info_gain_usd(povm, n=s.n, k=s.k))
    return EXIT_OK


def _sweep_reports(theta: float, k: int, strategies) -> list:
    base = signals.two_signal_set(theta)
    lifted = signals.collective_lift(base, k)
    reports = []
    for strategy in strategies:
        if strategy == "vn":
            basis = vonneumann.optimal_von_neumann(lifted)
            reports.append(infogain.info_gain_von_neumann(lifted, basis))
        else:
            reports.append(infogain.info_gain_usd(usd.usd_povm(lifted), n=lifted.n, k=k))
    return reports


def run_sweep(config: SweepConfig) -> tuple[str, str | None]:
    """Compute the sweep tables; returns (csv_text, diff_csv_text_or_None)."""
    lines = ["theta_rad,k,strategy,i_av_bits,i_av_per_signal_bits,p_inc"]
    diff_lines = ["theta_rad,k,vn_minus_usd_per_signal_bits"]
    both = "vn" in config.strategies and "usd" in config.strategies
    for theta in config.grid():
        for k in config.k_values:
            reports = {
                r.strategy: r for r in _sweep_reports(float(theta), int(k), config.strategies)
            }
            for strategy in config.strategies:
                report = (
                    reports[infogain.STRATEGY_VN_OPTIMAL]
                    if strategy == "vn"
                    else reports[infogain.STRATEGY_USD]
                )
                p_inc = "" if report.p_inc is None else _fmt(report.p_inc)
                lines.append(
                    f"{_fmt(theta)},{k},{strategy},"
                    f"{_fmt(report.i_av)},{_fmt(report.i_av_per_signal)},{p_inc}"
                )
            if both:
                diff = (
                    reports[infogain.STRATEGY_VN_OPTIMAL].i_av_per_signal
                    - reports[infogain.STRATEGY_USD].i_av_per_signal
                )
                diff_lines.append(f"{_fmt(theta)},{k},{_fmt(diff)}")
    csv_text = "\n".join(lines) + "\n"
    diff_text = "\n".join(diff_lines) + "\n" if both else None
    return csv_text, diff_text


def diff_path_for(output_path: str) -> str:
    if output_path.endswith(".csv"):
        return output_path[: -len(".csv")] + "_diff.csv"
    return output_path + "_diff.csv"


def cmd_sweep(args) -> int:
    config = SweepConfig(
        theta_min=args.theta_min,
        theta_max=args.theta_max,
        points=args.points,
        k_values=tuple(args.k),
        strategies=tuple(args.strategies),
        output_path=args.out,
        seed=args.seed,
    )
    csv_text, diff_text = run_sweep(config)
    try:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(csv_text)
        if diff_text is not None:
            with open(diff_path_for(config.output_path), "w", encoding="utf-8", newline="\n") as fh:
                fh.write(diff_text)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    rows = len(csv_text.splitlines()) - 1
    print(f"wrote {rows} rows to {config.output_path}")
    if diff_text is not None:
        print(f"wrote difference table to {diff_path_for(config.output_path)}")
    return EXIT_OK


def _check(name: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


def cmd_verify(args) -> int:
    all_ok = True

    thetas = np.linspace(math.pi / 2 / args.grid_points, math.pi / 2, args.grid_points)
    worst = 0.0
    vn_gap = 0.0
    for theta in thetas:
        cmp = collective.compare_strategies(float(theta), k_max=2)
        worst = max(worst, cmp.p2_factorization_error)
        vn1, vn2 = cmp.rows[0], cmp.rows[1]
        vn_gap = max(vn_gap, abs(vn2.i_av_per_signal - vn1.i_av_per_signal))
    all_ok &= _check(
        "kronecker factorization",
        worst < 1e-10,
        f"max ||P2 - PxP||_F = {worst:.3e} over {args.grid_points} angles",
    )
    all_ok &= _check(
        "collective projective parity",
        vn_gap < 1e-10,
        f"max per-signal gain difference = {vn_gap:.3e}",
    )

    so2_ok = True
    so2_detail = []
    for j in range(1, 7):
        theta = j * math.pi / 12
        phi_star, gain_star = collective.so2_brute_force(theta, args.so2_points)
        s = signals.two_signal_set(theta)
        basis = vonneumann.optimal_von_neumann(s)
        best = infogain.info_gain_von_neumann(s, basis).i_av
        so2_ok &= gain_star <= best + 1e-9
        so2_ok &= abs(abs(math.tan(phi_star)) - 1.0) <= 1e-3
        so2_detail.append(f"{gain_star - best:+.2e}")
    all_ok &= _check(
        "planar-rotation brute force",
        so2_ok,
        f"gain excess per angle: {', '.join(so2_detail)}",
    )

    sup_ok = True
    excesses = []
    for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
        res = collective.superposition_bound_check(
            signals.two_signal_set(theta), samples=args.samples, seed=args.seed
        )
        sup_ok &= res.max_excess <= 1e-9
        excesses.append(f"{res.max_excess:+.2e}")
    all_ok &= _check(
        "superposition bound",
        sup_ok,
        f"max gain excess over product basis: {', '.join(excesses)}",
    )

    probe_ok = True
    details = []
    for n in (2, 3, 4):
        res = infogain.entropy_extrema_probe(n, trials=args.trials, seed=args.seed + n)
        probe_ok &= res.bound_violations == 0
        probe_ok &= abs(res.max_entropy - res.entropy_bound) <= 1e-9
        probe_ok &= res.argmax_distance_from_uniform <= 1e-9
        probe_ok &= res.vertex_entropy_max <= 1e-12
        details.append(f"n={n}: max H = {res.max_entropy:.6f}")
    all_ok &= _check("entropy extrema probe", probe_ok, "; ".join(details))

    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def _parse_k_list(text: str) -> list:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("k list is empty")
    return values


def _parse_strategies(text: str) -> list:
    values = []
    for part in text.split(","):
        part = part.strip()
        if part and part not in values:
            values.append(part)
    if not values or any(v not in ("vn", "usd") for v in values):
        raise argparse.ArgumentTypeError(f"strategies must be from vn,usd; got {text!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiscrim",
        description="Optimal measurements for non-orthogonal signal sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_opt = sub.add_parser("optimize", help="optimal projective measurement for a signal set")
    p_opt.add_argument("--input", required=True, help="signal-set JSON file")
    p_opt.add_argument(
        "--strict",
        action="store_true",
        help="exit with code 3 when the spectrum is degenerate",
    )
    p_opt.set_defaults(func=cmd_optimize)

    p_sweep = sub.add_parser("sweep", help="tabulate gains over an angle grid")
    p_sweep.add_argument("--theta-min", type=float, required=True)
    p_sweep.add_argument("--theta-max", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--k", type=_parse_k_list, default=[1, 2], help="comma-separated block sizes")
    p_sweep.add_argument(
        "--strategies", type=_parse_strategies, default=["vn", "usd"],
        help="comma-separated subset of vn,usd",
    )
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.set_defaults(func=cmd_sweep)

    p_povm = sub.add_parser("povm", help="unambiguous-discrimination POVM for a signal set")
    p_povm.add_argument("--input", required=True, help="signal-set JSON file")
    p_povm.set_defaults(func=cmd_povm)

    p_verify = sub.add_parser("verify", help="run the numerical invariant suite")
    p_verify.add_argument("--grid-points", type=int, default=100)
    p_verify.add_argument("--so2-points", type=int, default=10000)
    p_verify.add_argument("--samples", type=int, default=10000)
    p_verify.add_argument("--trials", type=int, default=100000)
    p_verify.add_argument("--seed", type=int, default=20260810)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"{exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
