"""Command-line front end.

Commands: scan, check-lhv, zeno, sector, sample. Exit codes: 0 success,
1 usage or input error, 2 enumeration budget exceeded / infeasible.

A ``--config`` file holds ``key=value`` lines (``#`` comments allowed); keys
are long option names without dashes, list values are comma separated.
Explicit flags override config values.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from chainbell.chain import ChainScenario, evaluate_chain, zeno_limit_trace
from chainbell.errors import BudgetExceededError, NoneFoundError
from chainbell.lhv import certify_classical_bound
from chainbell.quantum import EXTENDED, STANDARD
from chainbell.qubit_sector import (
    SectorScenario,
    large_n_limit,
    minimal_violating_half_chain,
    sector_chain_margin,
    small_angle_asymptote,
)
from chainbell.sampler import SampleConfig, config_dict, estimate_chain

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2

SCAN_HEADER = ["d", "N", "variant", "lhs", "rhs", "margin", "violated", "closed_form"]
SECTOR_HEADER = ["gamma", "n", "margin", "violated", "minimal_n", "asymptote", "limit"]
ZENO_HEADER = ["d", "n", "N", "lhs", "rhs", "margin", "violated"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


@dataclass(frozen=True)
class ScanGrid:
    dims: tuple[int, ...]
    Ns: tuple[int, ...]
    variants: tuple[str, ...] = (STANDARD,)

    def __post_init__(self):
        if not self.dims or not self.Ns or not self.variants:
            raise UsageError("scan grid lists must be nonempty")
        bad = [N for N in self.Ns if N < 2 or N % 2]
        if bad:
            raise UsageError(f"N values must be even and >= 2: {bad}")


def fmt(x: float) -> str:
    """12 significant digits, trailing zeros kept."""
    return f"{x:#.12g}"


def _bool(v: bool) -> str:
    return "true" if v else "false"


@contextlib.contextmanager
def _output(path):
    if path is None or str(path) == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def scan_rows(grid: ScanGrid) -> list[list[str]]:
    rows = []
    for d in sorted(grid.dims):
        for N in sorted(grid.Ns):
            for variant in grid.variants:
                try:
                    r = evaluate_chain(ChainScenario.from_settings(d, N, variant))
                except ValueError:
                    rows.append([str(d), str(N), variant, "", "", "", "NA", ""])
                    continue
                closed = "" if r.closed_form is None else fmt(r.closed_form)
                rows.append(
                    [str(d), str(N), variant, fmt(r.lhs), fmt(r.rhs),
                     fmt(r.margin), _bool(r.violated), closed]
                )
    return rows


def cmd_scan(grid: ScanGrid, out=None) -> int:
    rows = scan_rows(grid)
    with _output(out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SCAN_HEADER)
        w.writerows(rows)
    return EXIT_OK


def cmd_check_lhv(d: int, n: int, variant: str = STANDARD, out=None) -> int:
    scenario = ChainScenario(d, n, variant)
    try:
        cert = certify_classical_bound(scenario)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    w = cert.witness
    print(f"scenario: d={d} n={n} N={scenario.N} variant={variant}")
    print(f"strategies checked: {cert.strategies_checked}")
    print(f"max margin (rhs - lhs): {cert.max_margin}")
    print(f"witness: alice={list(w.alice_outcomes)} bob={list(w.bob_outcomes)}")
    print(f"classical bound {'holds' if cert.holds else 'VIOLATED'}")
    payload = json.dumps(cert.to_dict(), indent=2, sort_keys=True)
    if out is None:
        print(payload)
    else:
        Path(out).write_text(payload + "\n")
    return EXIT_OK if cert.holds else EXIT_BUDGET


def cmd_zeno(d: int, n_list, out=None) -> int:
    with _output(out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(ZENO_HEADER)
        for r in zeno_limit_trace(d, sorted(n_list)):
            s = r.scenario
            w.writerow([d, s.n, s.N, fmt(r.lhs), fmt(r.rhs), fmt(r.margin),
                        _bool(r.violated)])
    return EXIT_OK


def sector_rows(gammas, n_max: int) -> list[list[str]]:
    if n_max < 2:
        raise UsageError("sector scan needs n-max >= 2")
    rows = []
    for g in sorted(gammas):
        try:
            n_star = minimal_violating_half_chain(g, cap=n_max)
        except NoneFoundError:
            n_star = None
        for n in range(2, n_max + 1):
            m = sector_chain_margin(SectorScenario(n, g))
            rows.append([
                fmt(g), str(n), fmt(m), _bool(m > 1e-12),
                "" if n_star is None else str(n_star),
                fmt(small_angle_asymptote(g)), fmt(large_n_limit(g)),
            ])
    return rows


def cmd_sector(gammas, n_max: int, out=None) -> int:
    rows = sector_rows(gammas, n_max)
    with _output(out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(SECTOR_HEADER)
        w.writerows(rows)
    return EXIT_OK


def cmd_sample(d: int, N: int, shots: int, seed: int, out=None) -> int:
    if shots < 1:
        raise UsageError("shots must be >= 1")
    config = SampleConfig(seed, shots, ChainScenario.from_settings(d, N))
    report = estimate_chain(config)
    payload = {"config": config_dict(config), "report": report.to_dict()}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    with _output(out) as fh:
        fh.write(text)
    return EXIT_OK


def read_config(path) -> dict[str, str]:
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (p.strip() for p in line.split("=", 1))
        values[key] = value
    return values


def config_to_argv(values: dict[str, str]) -> list[str]:
    argv = []
    for key, value in values.items():
        argv.append("--" + key.replace("_", "-"))
        argv.extend(v.strip() for v in value.split(",") if v.strip())
    return argv


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--config", help="key=value file supplying defaults")
    common.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")

    p = _Parser(prog="chainbell", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("scan", parents=[common], help="tabulate chain values over (d, N)")
    s.add_argument("--dims", type=int, nargs="+", required=True)
    s.add_argument("--Ns", type=int, nargs="+", required=True)
    s.add_argument("--variant", choices=[STANDARD, EXTENDED, "both"], default=STANDARD)

    c = sub.add_parser("check-lhv", parents=[common], help="exhaustive LHV certification")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--variant", choices=[STANDARD, EXTENDED], default=STANDARD)

    z = sub.add_parser("zeno", parents=[common], help="extended-chain trace over n")
    z.add_argument("--d", type=int, required=True)
    z.add_argument("--ns", type=int, nargs="+", default=[2, 4, 8, 16, 32])

    q = sub.add_parser("sector", parents=[common], help="qubit-sector margins")
    q.add_argument("--gammas", type=float, nargs="+", default=[1, 2, 4, 8, 16])
    q.add_argument("--n-max", type=int, default=16)

    m = sub.add_parser("sample", parents=[common], help="finite-shot estimate of a chain")
    m.add_argument("--d", type=int, required=True)
    m.add_argument("--N", type=int, required=True)
    m.add_argument("--shots", type=int, default=10**6)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    try:
        if known.config and argv:
            extra = config_to_argv(read_config(known.config))
            argv = argv[:1] + extra + argv[1:]
        args = build_parser().parse_args(argv)
        if args.command == "scan":
            variants = (STANDARD, EXTENDED) if args.variant == "both" else (args.variant,)
            return cmd_scan(ScanGrid(tuple(args.dims), tuple(args.Ns), variants), args.out)
        if args.command == "check-lhv":
            return cmd_check_lhv(args.d, args.n, args.variant, args.out)
        if args.command == "zeno":
            return cmd_zeno(args.d, args.ns, args.out)
        if args.command == "sector":
            return cmd_sector(args.gammas, args.n_max, args.out)
        if args.command == "sample":
            return cmd_sample(args.d, args.N, args.shots, args.seed, args.out)
    except (UsageError, ValueError, OSError) as exc:
        print(f"chainbell: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE
