"""Command-line interface.

Exit codes: 0 success, 1 unsolvable configuration (solve), 2 usage or
input error, 3 internal verification failure.  Config strings are the
positional bitstrings defined in the engine; button lists are 1-based
comma-separated ids.  TRILIGHTS_ENUM_CAP overrides the default
enumeration cap when no --enumerate-cap flag is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import engine, matchings, propagation, render
from .engine import Configuration, PressSet
from .errors import TrilightsError, VerificationError


def _dump_json(obj) -> str:
    """Compact JSON, byte-identical to the HTTP service's encoding."""
    return json.dumps(
        obj, ensure_ascii=False, allow_nan=False, indent=None, separators=(",", ":")
    )


def _enum_cap(args) -> int:
    if getattr(args, "enumerate_cap", None) is not None:
        return args.enumerate_cap
    return engine.default_enum_cap()


def _cmd_solve(args) -> int:
    config = Configuration.from_string(args.n, args.config)
    report = engine.solve_config(config, _enum_cap(args))
    if args.json:
        print(_dump_json(report.to_json_dict()))
        return 0 if report.solvable else 1
    if not report.solvable:
        print("solvable: no")
        print(f"kernel dimension: {report.kernel_dimension}")
        return 1
    print("solvable: yes")
    print(f"kernel dimension: {report.kernel_dimension}")
    print(f"solutions: {report.solution_count}")
    print(f"canonical: {report.canonical.ids_text() or '(empty)'}")
    return 0


def _cmd_press(args) -> int:
    config = Configuration.from_string(args.n, args.config)
    presses = PressSet.from_ids(args.n, args.buttons)
    print(engine.press(config, presses).to_string())
    return 0


def _render_out(args, name: str, obj) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.render == "text":
        path = out / f"{name}.txt"
        path.write_text(render.to_text(obj) + "\n", encoding="utf-8")
    else:
        path = out / f"{name}.svg"
        path.write_text(render.to_svg(obj) + "\n", encoding="utf-8")
    return path


def _cmd_kernel(args) -> int:
    cap = _enum_cap(args)
    dim = engine.kernel_dimension(args.n)
    basis = engine.kernel_basis(args.n)
    print(f"dimension: {dim}")
    for vec in basis:
        print(f"basis: {vec.to_string()}")
    elements = None
    if args.enumerate:
        elements = engine.enumerate_kernel(args.n, cap)
        if elements is None:
            print(f"enumeration skipped: dimension {dim} exceeds cap {cap}")
        else:
            for t, vec in enumerate(elements):
                print(f"element {t}: {vec.to_string()}")
    if args.render:
        if not args.out:
            print("error: --render requires --out DIR", file=sys.stderr)
            return 2
        written = []
        for i, vec in enumerate(basis):
            written.append(_render_out(args, f"kernel_n{args.n}_b{i}", vec))
        for t, vec in enumerate(elements or []):
            written.append(_render_out(args, f"kernel_n{args.n}_e{t}", vec))
        print(f"wrote {len(written)} files to {args.out}")
    return 0


def _cmd_table(args) -> int:
    table = engine.dimension_table(args.from_n, args.to_n)
    if args.json:
        print(_dump_json([{"n": n, "dimension": d} for n, d in table]))
    else:
        print(" ".join(str(d) for _, d in table))
    return 0


def _cmd_matchings(args) -> int:
    parity = matchings.coverings_parity(args.n)
    if args.count:
        count = matchings.count_coverings(args.n)
        word = "odd" if count % 2 else "even"
        agree = count % 2 == parity
        print(f"{count} ({word}); det parity {parity}; {'agree' if agree else 'DISAGREE'}")
        return 0 if agree else 3
    print(f"det parity {parity} ({'odd' if parity else 'even'})")
    return 0


def _cmd_propagate(args) -> int:
    if args.pattern is not None:
        source = PressSet.from_string(args.n, args.pattern)
    elif args.element is not None:
        cap = _enum_cap(args)
        elements = engine.enumerate_kernel(args.n, cap)
        if elements is None:
            print(
                f"error: kernel of n={args.n} exceeds the enumeration cap; use --pattern",
                file=sys.stderr,
            )
            return 2
        if not 0 <= args.element < len(elements):
            print(
                f"error: --element must be in 0..{len(elements) - 1}", file=sys.stderr
            )
            return 2
        source = elements[args.element]
    else:
        print("error: provide --element I or --pattern S", file=sys.stderr)
        return 2
    result = propagation.propagate(source, args.j)
    layout = propagation.block_layout(args.n, args.j)
    if args.json:
        print(_dump_json({"m": result.n, "element": result.to_string(), "verified": True}))
    else:
        print(f"m: {result.n}")
        print(f"element: {result.to_string()}")
        print("verified: yes")
    if args.render:
        if not args.out:
            print("error: --render requires --out DIR", file=sys.stderr)
            return 2
        written = [_render_out(args, f"propagated_n{args.n}_j{args.j}", result)]
        if args.render == "svg":
            written.append(_render_out(args, f"layout_n{args.n}_j{args.j}", layout))
        dump_path = Path(args.out) / f"layout_n{args.n}_j{args.j}.txt"
        dump_path.write_text(propagation.layout_dump(layout) + "\n", encoding="utf-8")
        written.append(dump_path)
        print(f"wrote {len(written)} files to {args.out}")
    return 0


def _cmd_random(args) -> int:
    seed = args.seed
    if seed is None:
        import secrets

        seed = secrets.randbelow(2**32)
        print(f"seed: {seed}", file=sys.stderr)
    config = engine.random_solvable(args.n, seed)
    if args.json:
        print(_dump_json({"config": config.to_string(), "seed": seed, "rng": engine.RNG_NAME}))
    else:
        print(config.to_string())
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.static), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilights",
        description="Triangular lights-out: solve, explore kernels, grow patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_size(p):
        p.add_argument("--n", type=int, required=True, help="board size (rows)")

    p = sub.add_parser("solve", help="solve a configuration")
    add_size(p)
    p.add_argument("--config", required=True, help="bitstring, char i-1 = button i")
    p.add_argument("--enumerate-cap", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("press", help="apply a press set to a configuration")
    add_size(p)
    p.add_argument("--config", required=True)
    p.add_argument("--buttons", required=True, help="comma-separated 1-based ids, e.g. 3,4")
    p.set_defaults(func=_cmd_press)

    p = sub.add_parser("kernel", help="kernel dimension, basis, optional elements")
    add_size(p)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--enumerate-cap", type=int, default=None)
    p.add_argument("--render", choices=("text", "svg"))
    p.add_argument("--out", help="directory for rendered files")
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("table", help="kernel dimension table over a size range")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("matchings", help="covering count/parity vs det parity")
    add_size(p)
    p.add_argument("--count", action="store_true", help="exhaustive count (small n)")
    p.add_argument("--parity", action="store_true")
    p.set_defaults(func=_cmd_matchings)

    p = sub.add_parser("propagate", help="grow a kernel element to a larger board")
    add_size(p)
    p.add_argument("--element", type=int, default=None, help="index into the enumerated kernel")
    p.add_argument("--pattern", default=None, help="kernel element as a bitstring")
    p.add_argument("--j", type=int, required=True, help="number of growth steps")
    p.add_argument("--enumerate-cap", type=int, default=None)
    p.add_argument("--render", choices=("text", "svg"))
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_propagate)

    p = sub.add_parser("random", help="generate a solvable configuration")
    add_size(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("serve", help="start the JSON HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory of UI files to serve at /")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except TrilightsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
