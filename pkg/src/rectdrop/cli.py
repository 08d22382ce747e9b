"""Command-line front end: script replay, oracle cross-checks, the funnel
reduction demo, scaling benchmarks, and the game service."""

from __future__ import annotations

import argparse
import random
import sys

from .bench import DISTRIBUTIONS, rows_to_csv, run_bench
from .errors import BoardError, InstanceError, ScriptError
from .multiphase import apply_reduction, multiphase_direct, parse_instance
from .oracle import ColumnBoard
from .rdds import RDDS, new_rdds
from .wire import dumps_skyline, format_script, parse_script


def cmd_run(args) -> int:
    try:
        text = open(args.script).read()
        ops = parse_script(text)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ScriptError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    r = new_rdds(args.width)
    try:
        for op in ops:
            if op[0] == "U":
                print(r.update(*op[1:]))
            else:
                move = r.query(*op[1:])
                print(move.x_d, move.landing_y, move.resulting_max)
    except BoardError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(dumps_skyline(r.snapshot()))
    return 0


def _random_ops(rng: random.Random, n_ops: int, width: int):
    ops = []
    max_w = max(1, width // 3)
    for _ in range(n_ops):
        w = rng.randint(1, max_w)
        h = rng.randint(1, 9)
        if rng.random() < 0.5:
            ops.append(("Q", w, h))
        else:
            ops.append(("U", w, h, rng.randint(0, width - w)))
    return ops


def _first_mismatch(width: int, ops, corrupt: bool = False) -> int | None:
    """Index of the first op whose result disagrees with the oracle."""
    r = new_rdds(width)
    board = ColumnBoard(width)
    for i, op in enumerate(ops):
        if op[0] == "U":
            _, w, h, x = op
            got = r.update(w, h, x)
            board.drop(w, h, x)
            if got != int(board.heights.max()):
                return i
        else:
            _, w, h = op
            move = r.query(w, h)
            landing = move.landing_y + (1 if corrupt else 0)
            _, want = board.best(w)
            probe = board.copy()
            if landing != want or probe.drop(w, h, move.x_d) != want:
                return i
    if r.snapshot().heights() != board.heights.tolist():
        return len(ops) - 1
    return None


def _minimize(width: int, ops, corrupt: bool) -> list:
    """Greedy op removal keeping the stream failing."""
    bad = _first_mismatch(width, ops, corrupt)
    assert bad is not None
    ops = list(ops[: bad + 1])
    changed = True
    while changed:
        changed = False
        for i in range(len(ops) - 1, -1, -1):
            cand = ops[:i] + ops[i + 1 :]
            if cand and _first_mismatch(width, cand, corrupt) is not None:
                ops = cand
                changed = True
    return ops


def cmd_check(args) -> int:
    rng = random.Random(args.seed)
    ops = _random_ops(rng, args.ops, args.width)
    bad = _first_mismatch(args.width, ops, args.corrupt)
    if bad is None:
        print(f"ok: {args.ops} ops agree with the oracle "
              f"(seed={args.seed}, width={args.width})")
        return 0
    print(f"MISMATCH at op {bad} (seed={args.seed}, width={args.width})",
          file=sys.stderr)
    minimized = _minimize(args.width, ops, args.corrupt)
    print("# minimized counterexample script:", file=sys.stderr)
    sys.stderr.write(format_script(minimized))
    return 1


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = run_bench(sizes, dist=args.dist, seed=args.seed,
                     queries=args.queries, updates=args.updates)
    csv = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as f:
            f.write(csv)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(csv)
    return 0


def cmd_multiphase(args) -> int:
    try:
        inst = parse_instance(open(args.instance).read())
    except (OSError, InstanceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    decided, rdds = apply_reduction(inst)
    direct = multiphase_direct(inst)
    print(f"{str(decided).lower()} {str(direct).lower()}")
    print(dumps_skyline(rdds.snapshot()))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rectdrop",
        description="Greedy rectangle dropping: replay, check, bench, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="replay an op script and print results")
    p.add_argument("script")
    p.add_argument("--width", type=int, default=64)
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("check", help="random ops cross-checked against the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ops", type=int, default=1000)
    p.add_argument("--width", type=int, default=256)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("bench", help="scaling benchmark, CSV output")
    p.add_argument("--sizes", default="8192,16384,32768,65536,131072,262144")
    p.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--queries", type=int, default=96)
    p.add_argument("--updates", type=int, default=96)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("multiphase", help="decide a set-family instance on the board")
    p.add_argument("instance")
    p.set_defaults(fn=cmd_multiphase)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", default=None, help="static directory to serve at /")
    p.set_defaults(fn=cmd_serve)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
