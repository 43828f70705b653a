"""Command-line interface: couplings, trajectories, events and figure data.

Examples::

    dicke-revival params --r 0.05
    dicke-revival evolve --p 0.9 --r 0.05 --t-end 10 --dt 0.01 --out traj.csv --oracle
    dicke-revival events --p 0.9 --r ind
    dicke-revival figures --out figdata/

Exit codes: 0 success, 2 domain/configuration error, 3 I/O error.
All times are in units of 1/gamma.
"""
from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys

import numpy as np

from .collective_params import CollectiveCoupling, coupling_from_separation
from .dynamics import XState, analytic_trajectory, default_step, integrate
from .errors import ConfigurationError, DickeRevivalError
from .events import (
    approx_death_revival,
    death_time_independent,
    death_time_scan,
    find_zero_crossings,
    second_revival_estimate,
)

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 2, 3

FIG1_SEPARATIONS = ((1.0, "r1"), (1.0 / 3.0, "r1_3"), (1.0 / 6.0, "r1_6"), (1.0 / 20.0, "r1_20"))
FIG1_P_GRID = [k / 100 for k in range(1, 100)]
FIG_R = 0.05
FIG_P = 0.9

EVOLVE_COLUMNS = ["rho_ee", "rho_gg", "rho_ss", "rho_aa", "re_rho_eg", "im_rho_eg", "C", "C1", "C2"]


def fmt(x) -> str:
    if x is None:
        return ""
    # +0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".12g")


def _separation(text: str):
    if text.lower() in ("ind", "independent"):
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'ind', got {text!r}")


def _coupling(args) -> CollectiveCoupling:
    if args.r is None:
        return CollectiveCoupling.independent(args.gamma)
    return coupling_from_separation(args.r, args.gamma)


def _time_grid(t_end: float, dt: float):
    if not (t_end > 0.0 and dt > 0.0):
        raise ConfigurationError(f"t_end and dt must be positive (got {t_end}, {dt})")
    n = round(t_end / dt)
    if n < 1 or abs(n * dt - t_end) > 1e-9 * t_end:
        raise ConfigurationError(f"dt={dt} does not divide t_end={t_end}")
    return np.arange(n + 1) * dt


def _rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(fmt(v) for v in row) + "\n")
    return buf.getvalue()


def _state_columns(x: XState, weights):
    eg = np.asarray(x.rho_eg, dtype=complex)
    return [x.rho_ee, x.rho_gg, x.rho_ss, x.rho_aa, eg.real, eg.imag,
            weights.c, weights.c1, weights.c2]


def _emit(text: str, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)


def cmd_params(args) -> str:
    c = _coupling(args)
    r = "independent" if args.r is None else f"{args.r:.6g}"
    return (
        f"r/lambda = {r}\n"
        f"gamma12/gamma = {c.gamma12 / c.gamma:.6g}\n"
        f"omega12/gamma = {c.omega12 / c.gamma:.6g}\n"
    )


def evolve_csv(p, coupling, t_end, dt, oracle=False) -> str:
    times = _time_grid(t_end, dt)
    traj = analytic_trajectory(p, coupling, times)
    cols = [times] + _state_columns(traj.states, traj.weights)
    header = ["t_gamma"] + EVOLVE_COLUMNS
    if oracle:
        sub = math.ceil(dt / default_step(coupling) - 1e-9)
        x0 = traj.states[0]
        num = integrate(x0.product_matrix(), coupling, times[-1], dt / sub, save_every=sub)
        cols += _state_columns(num.states, num.weights)
        header += [name + "_num" for name in EVOLVE_COLUMNS]
    return _rows_to_csv(header, zip(*cols))


def cmd_evolve(args) -> str:
    return evolve_csv(args.p, _coupling(args), args.t_end, args.dt, args.oracle)


def events_record(p, coupling, t_end, dt) -> dict:
    traj = analytic_trajectory(p, coupling, _time_grid(t_end, dt))
    ev = find_zero_crossings(traj)
    rec = {"p": p, "gamma": coupling.gamma, "gamma12": coupling.gamma12,
           "omega12": coupling.omega12, "t_end": t_end}
    rec.update(ev.as_dict())
    rec["eq14"] = death_time_independent(p, coupling.gamma)
    roots = approx_death_revival(p, coupling.gamma) if 0.0 < p < 1.0 else None
    rec["eq15_roots"] = list(roots) if roots else None
    rec["eq16_estimate"] = (
        second_revival_estimate(p, coupling) if 0.0 < p and 0.0 < coupling.gamma12 else None
    )
    return rec


def cmd_events(args) -> str:
    rec = events_record(args.p, _coupling(args), args.t_end, args.dt)
    return json.dumps(rec) + "\n"


def fig1_csv(t_max=20.0, gamma=1.0) -> str:
    scans = [death_time_scan(r, FIG1_P_GRID, t_max=t_max, gamma=gamma)
             for r, _ in FIG1_SEPARATIONS]
    header = ["p"] + ["death_" + name for _, name in FIG1_SEPARATIONS]
    rows = [[p] + [scan[i][1] for scan in scans] for i, p in enumerate(FIG1_P_GRID)]
    return _rows_to_csv(header, rows)


def fig2_csv(p=FIG_P, t_end=10.0, dt=0.01, gamma=1.0) -> str:
    times = _time_grid(t_end, dt)
    coll = analytic_trajectory(p, coupling_from_separation(FIG_R, gamma), times)
    ind = analytic_trajectory(p, CollectiveCoupling.independent(gamma), times)
    return _rows_to_csv(["t_gamma", "C_collective", "C_independent"], zip(times, coll.c, ind.c))


def fig3_csv(p=FIG_P, t_end=10.0, dt=0.01, gamma=1.0) -> str:
    times = _time_grid(t_end, dt)
    traj = analytic_trajectory(p, coupling_from_separation(FIG_R, gamma), times)
    x = traj.states
    return _rows_to_csv(
        ["t_gamma", "two_abs_rho_eg", "rho_ss", "C"],
        zip(times, 2.0 * np.abs(x.rho_eg), x.rho_ss, traj.c),
    )


def cmd_figures(args, which=("fig1", "fig2", "fig3")) -> None:
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    makers = {
        "fig1": lambda: fig1_csv(args.t_end if args.t_end is not None else 20.0, args.gamma),
        "fig2": lambda: fig2_csv(args.p, args.t_end or 10.0, args.dt, args.gamma),
        "fig3": lambda: fig3_csv(args.p, args.t_end or 10.0, args.dt, args.gamma),
    }
    for name in which:
        _emit(makers[name](), os.path.join(outdir, name + ".csv"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=float, default=FIG_P, help="weight of |e> in the initial state")
    common.add_argument("--r", type=_separation, default=FIG_R,
                        help="separation r12/lambda, or 'ind' for independent atoms")
    common.add_argument("--gamma", type=float, default=1.0, help="single-atom decay rate")
    common.add_argument("--out", default=None, help="output file (directory for figures)")

    parser = argparse.ArgumentParser(
        prog="dicke-revival",
        description="Entanglement death and revival of two collectively damped qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("params", parents=[common], help="print gamma12/gamma and omega12/gamma")
    ev = sub.add_parser("evolve", parents=[common], help="closed-form trajectory as CSV")
    ev.add_argument("--t-end", type=float, default=10.0)
    ev.add_argument("--dt", type=float, default=0.01)
    ev.add_argument("--oracle", action="store_true", help="add RK4 master-equation columns (_num)")
    evt = sub.add_parser("events", parents=[common], help="death/revival times as JSON lines")
    evt.add_argument("--t-end", type=float, default=20.0)
    evt.add_argument("--dt", type=float, default=1e-3)
    for name in ("fig1", "fig2", "fig3", "figures"):
        fp = sub.add_parser(name, parents=[common], help=f"write {name} data CSV into --out")
        fp.add_argument("--t-end", type=float, default=None,
                        help="time span (default 20 for fig1, 10 otherwise)")
        fp.add_argument("--dt", type=float, default=0.01)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if not 0.0 <= args.p <= 1.0:
            raise ConfigurationError(f"p must lie in [0, 1], got {args.p}")
        if args.command == "params":
            _emit(cmd_params(args), args.out)
        elif args.command == "evolve":
            _emit(cmd_evolve(args), args.out)
        elif args.command == "events":
            _emit(cmd_events(args), args.out)
        elif args.command == "figures":
            cmd_figures(args)
        else:
            cmd_figures(args, which=(args.command,))
    except DickeRevivalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
