"""Command-line front end.

Machine-readable output goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 2 usage, 3 validation failure, 4 I/O or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import params
from .codec import ByteCode, Outcome, StreamError, build_code, decode_stream, encode_stream
from .construct import (BudgetExceeded, CheckMatrix, CodeSpec, ConstructionError, build_sbec_dbed,
                        double_code, shorten, validate_sbec_dbed)
from .field import FieldError, field_new
from .memsim import MemoryConfig, SimError, load_config, run_campaign
from .rscodec import DecodeFailure, RsCode, RsError, min_distance_bruteforce, rs_decode, rs_encode

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_bytes(path: str) -> bytes:
    try:
        return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_IO) from exc


def _write_bytes(path: str, data: bytes) -> None:
    try:
        if path == "-":
            sys.stdout.buffer.write(data)
            sys.stdout.buffer.flush()
        else:
            Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--b", type=int, help="bits per byte (symbol)")
    p.add_argument("--r", type=int, help="check bytes r_sym")
    p.add_argument("--double", action="store_true", help="apply the doubling construction")
    p.add_argument("--k", type=int, help="shorten to this many information bits")
    p.add_argument("--matrix", help="matrix file instead of --b/--r")


def _matrix_from_args(args) -> tuple[CodeSpec, CheckMatrix]:
    if args.matrix:
        text = _read_bytes(args.matrix).decode("ascii", errors="replace")
        try:
            H = CheckMatrix.from_text(text)
        except (ConstructionError, FieldError) as exc:
            raise CliError(f"malformed matrix file: {exc}", EXIT_IO) from exc
        spec = CodeSpec.of(H)
    else:
        if args.b is None or args.r is None:
            raise CliError("give --b and --r, or --matrix", EXIT_USAGE)
        try:
            spec, H = build_sbec_dbed(field_new(args.b), args.r)
        except (ConstructionError, FieldError) as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
        if args.double:
            H = double_code(H)
            spec = CodeSpec.of(H)
    if args.k is not None:
        try:
            spec, H = shorten((spec, H), args.k)
        except ConstructionError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
    return spec, H


def _code_from_args(args) -> ByteCode:
    spec, H = _matrix_from_args(args)
    return ByteCode(H, spec)


# -- subcommands --------------------------------------------------------------

def cmd_tables(args) -> int:
    b_range = [args.b] if args.b is not None else params.B_RANGE
    if args.table == 6:
        print("b,k_bits,n_bits,r_bits,sources")
        for b, k, entry, sources in params.gen_table6(b_range):
            print(f"{b},{k},{entry.n_bits},{entry.r_bits},{';'.join(sources)}")
        return EXIT_OK
    gen = params.GENERATORS[args.table]
    sys.stdout.write(params.to_csv(gen(b_range)))
    return EXIT_OK


def cmd_diff(args) -> int:
    tables = tuple(args.table) if args.table else (1, 2, 3, 4, 5, 6)
    rows = params.diff_tables(tables)
    sys.stdout.write(params.diff_to_csv(rows))
    if not params.diff_ok(rows):
        _err("printed tables disagree with the generators outside the allowlist")
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_best(args) -> int:
    try:
        entry, sources = params.best_code(args.b, args.k)
    except params.ParamsError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    print("b,k_bits,n_bits,r_bits,code,sources")
    print(f"{args.b},{entry.k_bits},{entry.n_bits},{entry.r_bits},\"{entry.pair}\",{';'.join(sources)}")
    return EXIT_OK


def cmd_construct(args) -> int:
    spec, H = _matrix_from_args(args)
    text = H.to_text()
    if args.output:
        _write_bytes(args.output, text.encode("ascii"))
    else:
        sys.stdout.write(text)
    _err(f"b={spec.b} r_sym={spec.r_sym} n_sym={spec.n_sym} n_bits={spec.n_bits} "
         f"k_bits={spec.k_bits} r_bits={spec.r_bits}")
    return EXIT_OK


def cmd_validate(args) -> int:
    _, H = _matrix_from_args(args)
    try:
        report = validate_sbec_dbed(H)
    except BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    print(report.summary())
    if not report.passed:
        for j, e in report.zero_singles[:20]:
            print(f"zero-syndrome column={j} pattern={e:#x}")
        for (j1, e1), (j2, e2) in report.single_collisions[:20]:
            print(f"single-collision {j1}:{e1:#x} {j2}:{e2:#x}")
        for (j1, e1, j2, e2), kind in report.double_violations[:20]:
            print(f"double-{kind} {j1}:{e1:#x} {j2}:{e2:#x}")
        return EXIT_VALIDATION
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _code_from_args(args)
    payload = _read_bytes(args.input)
    corrupt = None
    if args.inject_seed is not None:
        rng = np.random.Generator(np.random.PCG64(args.inject_seed))

        def corrupt(word: int) -> int:
            j = int(rng.integers(0, code.n_sym))
            return word ^ (int(rng.integers(1, 1 << code.b)) << (j * code.b))

    _write_bytes(args.output, encode_stream(code, payload, corrupt))
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _code_from_args(args)
    blob = _read_bytes(args.input)
    try:
        payload, outcomes = decode_stream(code, blob)
    except StreamError as exc:
        raise CliError(str(exc), EXIT_IO) from exc
    _write_bytes(args.output, payload)
    counts = {k: sum(o.kind is k for o in outcomes) for k in Outcome}
    _err(" ".join(f"{k.value}={v}" for k, v in counts.items()))
    return EXIT_VALIDATION if counts[Outcome.DETECTED] else EXIT_OK


def cmd_simulate(args) -> int:
    text = _read_bytes(args.config).decode("utf-8", errors="replace")
    try:
        raw, models = load_config(text)
        if "matrix" in raw:
            H = CheckMatrix.from_text(_read_bytes(raw["matrix"]).decode("ascii", errors="replace"))
            spec = CodeSpec.of(H)
            if raw.get("k") is not None:
                spec, H = shorten((spec, H), int(raw["k"]))
            code = ByteCode(H, spec)
        else:
            code = build_code(int(raw["b"]), int(raw["r"]), bool(raw.get("double", False)), raw.get("k"))
        config = MemoryConfig(code, words=int(raw.get("words", 16)), seed=int(raw.get("seed", 0)),
                              fault_models=models)
        trials = int(args.trials if args.trials is not None else raw.get("trials", 1000))
    except (ValueError, KeyError, TypeError, SimError, ConstructionError) as exc:
        raise CliError(f"bad config: {exc}", EXIT_IO) from exc
    stats = run_campaign(config, trials)
    print(stats.to_json())
    _err(stats.summary())
    return EXIT_OK


def _symbols(text: str) -> list[int]:
    try:
        return [int(v, 0) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise CliError(f"bad symbol list {text!r}", EXIT_USAGE) from exc


def cmd_rs(args) -> int:
    try:
        code = RsCode(field_new(args.b), args.t, args.shorten)
    except (RsError, FieldError) as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    if args.encode is not None:
        try:
            print(",".join(str(v) for v in rs_encode(code, _symbols(args.encode))))
        except RsError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
    elif args.decode is not None:
        try:
            res = rs_decode(code, _symbols(args.decode))
        except DecodeFailure as exc:
            _err(f"decode failure: {exc}")
            return EXIT_VALIDATION
        except RsError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
        print(",".join(str(v) for v in res.codeword))
        _err(f"errors at {res.state.positions} values {res.state.values}")
    elif args.distance:
        try:
            print(min_distance_bruteforce(code))
        except RsError as exc:
            raise CliError(str(exc), EXIT_USAGE) from exc
    else:
        print(f"n,k,d_min\n{code.n},{code.k},{code.d_min}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbecdbed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="generate a parameter table as CSV")
    p.add_argument("--table", type=int, choices=range(1, 7), required=True)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("diff", help="audit printed tables against the generators")
    p.add_argument("--table", type=int, choices=range(1, 7), action="append")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("best", help="shortest code for a memory organisation")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_best)

    p = sub.add_parser("construct", help="emit a parity-check matrix")
    _add_code_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="enumerate single/double byte syndromes")
    _add_code_args(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("encode", help="encode a file into a codeword stream")
    _add_code_args(p)
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.add_argument("--inject-seed", type=int, help="corrupt one random byte per codeword")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a codeword stream")
    _add_code_args(p)
    p.add_argument("--input", default="-")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run a fault-injection campaign from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--trials", type=int)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("rs", help="Reed-Solomon encode/decode/distance")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--shorten", type=int, default=0)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--encode", metavar="SYMS")
    g.add_argument("--decode", metavar="SYMS")
    g.add_argument("--distance", action="store_true")
    p.set_defaults(func=cmd_rs)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        _err(f"error: {exc}")
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
