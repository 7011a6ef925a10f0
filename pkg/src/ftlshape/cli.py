"""Command-line front door.

Subcommands: dist (distance of two gesture files), shape (pointwise
shape of a fixture), gen (write a uniform sample of a fixture),
converge (error sweeps against the quadrature oracles), recognize
(rank templates for an input gesture) and serve (HTTP API).

Exit codes: 0 success, 2 user/input error, 1 internal error.  All
numeric stdout is JSON with 17-significant-digit floats.
"""

from __future__ import annotations

import argparse
import os
import sys

from .convergence import (SamplingMode, emit_report, estimate_rate,
                          sweep_ftl, sweep_shape_sum)
from .errors import ShapeError
from .ftl import ftl, gesture_shape, wftl
from .gesture import fixtures, uniform_sample
from .jsonio import dumps, load_gesture, save_gesture
from .recognizer import recognize, resample_uniform, store_load


def _fixture(name: str):
    table = fixtures()
    if name not in table:
        known = ", ".join(sorted(table))
        raise ShapeError(f"unknown fixture {name!r} (known: {known})")
    return table[name]


def cmd_dist(args) -> int:
    f, _, _ = load_gesture(args.f)
    g, _, _ = load_gesture(args.g)
    f = resample_uniform(f, args.n)
    g = resample_uniform(g, args.n)
    report = ftl(f, g) if args.mode == "uniform" else wftl(f, g)
    print(dumps(report.to_json()))
    return 0


def cmd_shape(args) -> int:
    if not 0.0 <= args.t <= 1.0:
        raise ShapeError(f"--t must be in [0, 1], got {args.t}")
    value = gesture_shape(_fixture(args.fixture), args.t)
    print(dumps({"fixture": args.fixture, "t": args.t,
                 "re": value.real, "im": value.imag}))
    return 0


def cmd_gen(args) -> int:
    g = uniform_sample(_fixture(args.fixture), args.n)
    if args.out == "-":
        from .jsonio import gesture_to_obj
        print(dumps(gesture_to_obj(g, gid=args.fixture, label=args.fixture)))
    else:
        save_gesture(args.out, g, gid=args.fixture, label=args.fixture)
    return 0


def cmd_converge(args) -> int:
    ns = [int(s) for s in args.ns.split(",") if s]
    mode = (SamplingMode.uniform() if args.mode == "uniform"
            else SamplingMode.jitter(args.seed, args.strength))
    names = args.pair.split(":")
    if len(names) == 2:
        rows = sweep_ftl(_fixture(names[0]), _fixture(names[1]), ns, mode)
    elif len(names) == 1:
        rows = sweep_shape_sum(_fixture(names[0]), ns, mode)
    else:
        raise ShapeError(f"--pair must be 'f:g' or a single fixture name, "
                         f"got {args.pair!r}")
    payload = emit_report(rows, args.format)
    if args.out == "-":
        sys.stdout.buffer.write(payload)
    else:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    rate = estimate_rate(rows)
    if rate is not None:
        print(f"log-log error rate: {rate:.3f}", file=sys.stderr)
    return 0


def cmd_recognize(args) -> int:
    store = store_load(args.store)
    candidate, _, _ = load_gesture(args.input)
    result = recognize(candidate, store, n=args.n, mode=args.mode)
    print(dumps(result.to_json()))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(args.store, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ftlshape",
        description="Shape-quotient gesture distances, convergence sweeps, "
                    "recognition and serving.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="distance between two gesture files")
    d.add_argument("f", help="first gesture JSON file")
    d.add_argument("g", help="second gesture JSON file")
    d.add_argument("--n", type=int, default=32, help="resample grid size")
    d.add_argument("--mode", choices=("uniform", "weighted"),
                   default="uniform")
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("shape", help="pointwise shape of a fixture")
    s.add_argument("--fixture", required=True)
    s.add_argument("--t", type=float, default=0.0)
    s.set_defaults(func=cmd_shape)

    g = sub.add_parser("gen", help="write a uniform sample of a fixture")
    g.add_argument("--fixture", required=True)
    g.add_argument("--n", type=int, default=32)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("converge", help="convergence sweep report")
    c.add_argument("--pair", required=True,
                   help="'f:g' for a distance sweep, single name for the "
                        "shape-sum sweep")
    c.add_argument("--ns", default="100,1000,10000",
                   help="comma-separated ascending sample sizes")
    c.add_argument("--mode", choices=("uniform", "jitter"), default="uniform")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--strength", type=float, default=0.3)
    c.add_argument("--out", default="-")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.set_defaults(func=cmd_converge)

    r = sub.add_parser("recognize", help="rank templates for a gesture")
    r.add_argument("--store", required=True)
    r.add_argument("--input", required=True)
    r.add_argument("--n", type=int, default=32)
    r.add_argument("--mode", choices=("uniform", "weighted"),
                   default="uniform")
    r.set_defaults(func=cmd_recognize)

    v = sub.add_parser("serve", help="run the HTTP API")
    v.add_argument("--port", type=int,
                   default=int(os.environ.get("PORT", "8197")))
    v.add_argument("--host", default="127.0.0.1")
    v.add_argument("--store", default=os.environ.get("STORE_PATH",
                                                     "templates.json"))
    v.add_argument("--static", default=os.environ.get("STATIC_DIR"))
    v.set_defaults(func=cmd_serve)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ShapeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
