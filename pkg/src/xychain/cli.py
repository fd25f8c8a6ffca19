"""
Command-line interface.

    xychain figure fig1 --out fig1.csv --override t_max=20
    xychain check all
    xychain crossings --n 3 --tmax 4.18879
    xychain tc --gamma 0.6

Exit status: 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .checks import SUITES, run_checks
from .errors import BadFigureId, BadOverride, NoRoot, UnsupportedCombination, ZeroCoupling
from .figures import FIGURE_IDS, FigureJob, run_figure
from .thermal import critical_temperature_anisotropic
from .wstate import find_crossings
from .xy_chain import ChainSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def read_config(path: str | Path) -> dict[str, str]:
    """Parse a ``key=value`` file; blank lines and ``#`` comments are ignored."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BadOverride(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _parse_pairs(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise BadOverride(f"override must look like key=value, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _cmd_figure(args) -> int:
    overrides: dict[str, str] = {}
    if args.config:
        overrides.update(read_config(args.config))
    overrides.update(_parse_pairs(args.override or []))
    if args.grid is not None:
        overrides["grid"] = str(args.grid)
    result = run_figure(FigureJob(args.fig_id, overrides))
    text = result.to_csv()
    if args.out:
        Path(args.out).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)
    print(json.dumps(result.summary, sort_keys=True), file=sys.stderr)
    return EXIT_OK


def _cmd_check(args) -> int:
    results = run_checks(args.suite)
    for res in results:
        print(res.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _cmd_crossings(args) -> int:
    report = find_crossings(ChainSpec(args.n, args.j), args.tmax, tol=args.tol)
    print("t,fidelity,spread")
    for t, f, s in zip(report.times, report.fidelity_at_times, report.max_probability_spread_at_times):
        print(f"{t:.15g},{f:.15g},{s:.15g}")
    print(
        json.dumps({"count": len(report), "min_spread": report.min_spread,
                    "min_spread_time": report.min_spread_time}),
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_tc(args) -> int:
    try:
        tc = critical_temperature_anisotropic(args.j, args.gamma)
    except NoRoot as exc:
        print(f"no critical temperature: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"{tc.value:.15g}")
    print(json.dumps({"residual": tc.residual}), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xychain", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write the data behind a figure as CSV")
    fig.add_argument("fig_id", help=f"one of {', '.join(FIGURE_IDS)}")
    fig.add_argument("--out", help="output path (default: stdout)")
    fig.add_argument("--grid", type=int, help="number of samples along the x axis")
    fig.add_argument("--config", help="key=value file applied before --override")
    fig.add_argument("--override", action="extend", nargs="+", metavar="KEY=VALUE",
                     help="parameter override, repeatable; lists are comma separated")
    fig.set_defaults(func=_cmd_figure)

    chk = sub.add_parser("check", help="run a verification suite")
    chk.add_argument("suite", choices=SUITES)
    chk.set_defaults(func=_cmd_check)

    cr = sub.add_parser("crossings", help="times at which the chain holds a W state")
    cr.add_argument("--n", type=int, required=True)
    cr.add_argument("--tmax", type=float, required=True)
    cr.add_argument("--j", type=float, default=1.0)
    cr.add_argument("--tol", type=float, default=1e-7)
    cr.set_defaults(func=_cmd_crossings)

    tc = sub.add_parser("tc", help="critical temperature of the two-qubit anisotropic model")
    tc.add_argument("--gamma", type=float, required=True)
    tc.add_argument("--j", type=float, default=1.0)
    tc.set_defaults(func=_cmd_tc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadFigureId, BadOverride, UnsupportedCombination, ZeroCoupling, ValueError, OSError) as exc:
        print(f"xychain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
