"""Command-line front end.

Exit codes: 0 success, 1 a check or round trip failed, 2 usage error.
Reals are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .capacity import aas_sandwich, capacity_report
from .channel import ChannelTiming, SkewMode, random_skew, transmit
from .coding import StreamRecord, build_codebook, encode
from .graph import build_component, oracle_component
from .verify import EXHAUSTIVE_MAX_W, SKEW_VARIANTS, roundtrip_exhaustive, roundtrip_random, run_checks, variant_label

CODEBOOK_EXPORT_MAX_W = 24
DEFAULT_TRIALS = 10_000
DEFAULT_SEED = 0


def fmt(x: float) -> str:
    return format(x, ".12g")


def _round12(x: float) -> float:
    return float(fmt(x))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _modes(arg: str | None) -> list[SkewMode]:
    if arg is None:
        return [SkewMode.BINARY, SkewMode.TERNARY]
    return [SkewMode(arg)]


def cmd_capacity(args, parser) -> int:
    if args.w_max < 1:
        parser.error("--w-max must be at least 1")
    reports = [capacity_report(w) for w in range(1, args.w_max + 1)]
    aas = aas_sandwich(args.w_max) if args.w_max >= 2 else None
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "F_w", "C_1w", "gap_to_log2phi"])
        for r in reports:
            writer.writerow([r.w, r.fib, fmt(r.capacity), fmt(r.limit_gap)])
        if aas:
            buf.write(f"# {aas.summary()}\n")
        text = buf.getvalue()
    elif args.format == "json":
        rows = [
            {
                "w": r.w,
                "fib": r.fib,
                "capacity": _round12(r.capacity),
                "limit_gap": _round12(r.limit_gap),
                "binet_check": _round12(r.binet_check),
            }
            for r in reports
        ]
        payload = {"rows": rows}
        if aas:
            payload["aas"] = {
                "lower": _round12(aas.lower),
                "upper": _round12(aas.upper),
                "resolved": _round12(aas.resolved),
                "w_max": aas.w_max,
                "argmin_w": aas.argmin_w,
                "summary": aas.summary(),
            }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"{'w':>5}  {'F_w':>20}  {'C_1w':>16}  {'gap_to_log2phi':>18}"]
        for r in reports:
            lines.append(f"{r.w:>5}  {r.fib:>20}  {fmt(r.capacity):>16}  {fmt(r.limit_gap):>18}")
        if aas:
            lines.append(aas.summary())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_codebook(args, parser) -> int:
    if not 1 <= args.w <= CODEBOOK_EXPORT_MAX_W:
        parser.error(f"--w must be in [1, {CODEBOOK_EXPORT_MAX_W}] for codebook export")
    cb = build_codebook(args.w)
    if args.format == "json":
        text = cb.to_json() + "\n"
    else:
        lines = []
        for m, word in enumerate(cb.codewords()):
            lines.append(f"{m} {word} h={word.weight}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_graph(args, parser) -> int:
    if args.w < 1:
        parser.error("--w must be at least 1")
    weights = range(args.w + 1) if args.h is None else [args.h]
    if args.h is not None and not 0 <= args.h <= args.w:
        parser.error("--h must be in [0, w]")
    try:
        if args.oracle:
            comps = [oracle_component(args.w, h, SkewMode(args.mode or "binary")) for h in weights]
        else:
            comps = [build_component(args.w, h) for h in weights]
    except ValueError as exc:
        parser.error(str(exc))
    _emit("".join(c.to_edgelist() for c in comps), args.out)
    return 0


def cmd_verify(args, parser) -> int:
    if not 1 <= args.w <= EXHAUSTIVE_MAX_W:
        parser.error(f"--w must be in [1, {EXHAUSTIVE_MAX_W}] for exhaustive verification")
    results = run_checks(args.w)
    ok = all(r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{'ALL PASS' if ok else 'FAILED'} ({sum(r.passed for r in results)}/{len(results)})")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def cmd_simulate(args, parser) -> int:
    if args.w < 1:
        parser.error("--w must be at least 1")
    if args.trials < 0:
        parser.error("--trials must be nonnegative")
    timing = None
    if args.T is not None:
        try:
            timing = ChannelTiming(args.T, args.tau)
        except ValueError as exc:
            parser.error(str(exc))
    mode = SkewMode(args.mode or "binary")
    rng = random.Random(args.seed)
    cb = build_codebook(args.w)
    lines = []
    for block in range(args.trials):
        m = rng.randrange(cb.size)
        word = encode(m, cb)
        rx = transmit(word, random_skew(args.w, mode, rng))
        rec = StreamRecord(block, m, str(word), rx.arrivals)
        if timing is None:
            lines.append(rec.to_json())
        else:
            d = json.loads(rec.to_json())
            d["timestamps"] = [_round12(t) for t in timing.timestamps(rx, block)]
            lines.append(json.dumps(d))
    _emit("".join(ln + "\n" for ln in lines), args.out)
    return 0


def cmd_roundtrip(args, parser) -> int:
    if args.w < 1:
        parser.error("--w must be at least 1")
    if args.exhaustive and args.trials is not None:
        parser.error("--exhaustive and --trials are mutually exclusive")
    exhaustive = args.exhaustive or (args.trials is None and args.w <= EXHAUSTIVE_MAX_W)
    if exhaustive and args.w > EXHAUSTIVE_MAX_W:
        parser.error(f"--exhaustive needs --w <= {EXHAUSTIVE_MAX_W}")
    lines = []
    total_failures = 0
    if exhaustive:
        variants = SKEW_VARIANTS if args.mode is None else [(SkewMode(args.mode), False)]
        for mode, forced in variants:
            trials, failures = roundtrip_exhaustive(args.w, mode, forced)
            total_failures += failures
            lines.append(
                f"roundtrip w={args.w} mode={variant_label(mode, forced)} exhaustive "
                f"trials={trials} failures={failures}"
            )
    else:
        n = DEFAULT_TRIALS if args.trials is None else args.trials
        if n < 0:
            parser.error("--trials must be nonnegative")
        for mode in _modes(args.mode):
            trials, failures = roundtrip_random(args.w, n, args.seed, mode)
            total_failures += failures
            lines.append(
                f"roundtrip w={args.w} mode={mode.value} seed={args.seed} "
                f"trials={trials} failures={failures}"
            )
    lines.append("PASS" if total_failures == 0 else f"FAIL ({total_failures} failures)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if total_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewcode", description="Zero-error coding for the (1,w) skew channel.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=None):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        if formats:
            p.add_argument("--format", choices=formats, default=formats[0])

    p = sub.add_parser("capacity", help="capacity table and AAS bounds")
    p.add_argument("--w-max", type=int, required=True)
    common(p, ["csv", "json", "text"])
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("codebook", help="export the optimal codebook")
    p.add_argument("--w", type=int, required=True)
    common(p, ["json", "text"])
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("graph", help="export confusability graph components as edge lists")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--h", type=int)
    p.add_argument("--oracle", action="store_true", help="compute edges by exhaustive channel simulation")
    p.add_argument("--mode", choices=["binary", "ternary"])
    common(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run all exhaustive checks for one block length")
    p.add_argument("--w", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="emit a random encoded block stream as NDJSON")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--trials", type=int, default=10, help="number of blocks")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--mode", choices=["binary", "ternary"])
    p.add_argument("--T", type=float, help="signaling interval in seconds; adds timestamps")
    p.add_argument("--tau", type=float, default=0.0, help="propagation delay in seconds")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("roundtrip", help="encode, transmit and decode; count failures")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--mode", choices=["binary", "ternary"])
    common(p)
    p.set_defaults(func=cmd_roundtrip)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seed", 0) < 0 or getattr(args, "seed", 0) >= 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
