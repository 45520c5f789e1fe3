"""Command-line entry point: ``tdloco <subcommand>``.

Exit codes: 0 ok, 1 usage error, 2 data or constraint error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import capacity, enumeration, grid, oracle
from .errors import TDLocoError

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class UsageError(Exception):
    pass


def _m_value(text: str) -> int:
    m = int(text)
    if m < 2:
        raise argparse.ArgumentTypeError("m must be at least 2")
    return m


def _m_list(text: str) -> list[int]:
    return [_m_value(t) for t in text.split(",") if t.strip()]


def cmd_capacity(args) -> int:
    q8, q4 = capacity.capacities()
    print(f"Q8 constraint (GF(8)): lambda = {q8.lam:.4f}, C = {q8.capacity_bits:.4f}, "
          f"C_n = {q8.normalized:.4f}")
    print(f"Q4 constraint (GF(4)): lambda' = {q4.lam:.4f}, C' = {q4.capacity_bits:.4f}, "
          f"C_n_overall = {q4.normalized:.4f}")
    gap = capacity.normalized_gap(q8, q4)
    print(f"gap: {gap:.4f} ({100 * gap:.2f}% of capacity given up)")
    return EXIT_OK


def cmd_params(args) -> int:
    m = args.m
    print(f"m = {m}")
    print(f"N(m) = {enumeration.cardinality(m)}")
    print(f"N_c(m) = {enumeration.clocked_cardinality(m)}")
    print(f"s_c = {enumeration.message_length(m)}")
    print(f"k_eff = {enumeration.k_eff(m)}")
    print(f"R = {float(enumeration.rate(m)):.4f}")
    print(f"R_n = {float(enumeration.normalized_rate(m)):.4f}")
    return EXIT_OK


def cmd_tables(args) -> int:
    sep = "," if args.format == "csv" else ", "
    print(sep.join(["m", "s_c", "R", "R_n"]))
    for m in args.m:
        print(sep.join([
            str(m),
            str(enumeration.message_length(m)),
            f"{float(enumeration.rate(m)):.4f}",
            f"{float(enumeration.normalized_rate(m)):.4f}",
        ]))
    return EXIT_OK


def cmd_encode(args) -> int:
    params = enumeration.code_params(args.m)
    if args.tracks % 3:
        raise UsageError(f"--tracks must be a multiple of 3, got {args.tracks}")
    n_groups = args.tracks // 3
    bits = grid.bytes_to_bits(Path(args.input).read_bytes())
    frames, residual = grid.frames_from_bits(bits, params)
    if residual:
        print(f"warning: {residual} trailing input bits do not fill a "
              f"{params.frame_bits}-bit frame and were not encoded", file=sys.stderr)
    if len(frames) % n_groups:
        raise TDLocoError(f"{len(frames)} frames cannot be split evenly over {n_groups} track groups")
    per = len(frames) // n_groups
    groups = [frames[g * per:(g + 1) * per] for g in range(n_groups)]
    g = grid.write_grid(groups, params, args.tracks)
    grid.save_grid(args.output, g)
    print(f"wrote {len(frames)} frames, {g.tracks} x {g.width} grid")
    return EXIT_OK


def cmd_decode(args) -> int:
    params = enumeration.code_params(args.m)
    g = grid.load_grid(args.input)
    frames = [f for group in grid.read_grid(g, params) for f in group]
    bits = grid.frames_to_bits(frames)
    if len(bits) % 8:
        print(f"warning: dropping {len(bits) % 8} bits that do not fill a byte", file=sys.stderr)
    Path(args.output).write_bytes(grid.bits_to_bytes(bits))
    print(f"read {len(frames)} frames, {len(bits) // 8} bytes")
    return EXIT_OK


def cmd_scan(args) -> int:
    g = grid.load_grid(args.input)
    hits = grid.scan_sis(g)
    for group, col in hits:
        print(f"group {group} column {col}")
    print(f"{len(hits)} violations")
    return EXIT_OK if not hits else EXIT_DATA


def cmd_verify(args) -> int:
    try:
        report = oracle.verify(args.max_m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for name, passed in report.checks:
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tdloco", description="Square-isolation-free constrained codes for TDMR grids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("capacity", help="capacities of both constraints").set_defaults(func=cmd_capacity)

    sp = sub.add_parser("params", help="code parameters for one m")
    sp.add_argument("--m", type=_m_value, required=True)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("tables", help="message lengths and rates for several m")
    sp.add_argument("--m", type=_m_list, default=[24, 33, 39, 66, 88, 265])
    sp.add_argument("--format", choices=["text", "csv"], default="text")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("encode", help="write a file onto a grid")
    sp.add_argument("--m", type=_m_value, required=True)
    sp.add_argument("--tracks", type=int, default=3)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", dest="output", required=True)
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="read a grid back into a file")
    sp.add_argument("--m", type=_m_value, required=True)
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--out", dest="output", required=True)
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("scan", help="list square-isolation patterns in a grid")
    sp.add_argument("--in", dest="input", required=True)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="brute-force oracle checks")
    sp.add_argument("--max-m", type=int, default=8)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tdloco: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TDLocoError, ValueError, OSError) as exc:
        print(f"tdloco: error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
