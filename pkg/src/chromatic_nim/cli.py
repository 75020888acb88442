"""Command-line interface.

Schemes are given as inline JSON or as a path to a JSON file, e.g.:

    chromatic-nim color --scheme '{"kind":"evil"}' --upto 7
    chromatic-nim solve --scheme '{"kind":"beatty","p":3,"q":1,"d":5,"r":2}' --heaps 4,2

Exit codes: 0 success, 1 verification mismatch, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import solvers
from .colorings import ColoringScheme, Dominance, scheme_from_dict
from .engine import (
    DEFAULT_MAX_HEIGHT,
    GreenMove,
    Move,
    NimMove,
    apply_move,
    is_green_position,
    move_to_dict,
)
from .errors import ChromaticNimError, IllegalMove
from .oracle import pairs_to_csv
from .verify import STRATEGIES as VERIFY_STRATEGIES, fuzz_dominated, verify as run_verify


class UsageError(Exception):
    pass


def _load_scheme(text: str | None) -> ColoringScheme:
    if not text:
        raise UsageError("--scheme is required")
    candidate = text.strip()
    if not candidate.startswith("{"):
        path = Path(candidate)
        if not path.is_file():
            raise UsageError(f"scheme file not found: {candidate}")
        candidate = path.read_text()
    try:
        return scheme_from_dict(json.loads(candidate))
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"bad scheme: {exc}") from exc


def _parse_heaps(text: str | None) -> tuple[int, ...]:
    if not text:
        raise UsageError("--heaps is required, e.g. --heaps 4,2")
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad heap list {text!r}") from exc


def _describe_move(move: Move) -> str:
    if isinstance(move, NimMove):
        return f"heap {move.heap + 1} -> {move.to}"
    return "green -> (" + ", ".join(str(t) for t in move.to) + ")"


def cmd_color(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.scheme)
    if args.upto < 0:
        raise UsageError("--upto must be non-negative")
    letters = [scheme.color(level).value for level in range(1, args.upto + 1)]
    if args.format == "json":
        print(json.dumps({"scheme": scheme.to_dict(), "upto": args.upto, "colors": "".join(letters)}))
    elif letters:
        print(" ".join(letters))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.scheme)
    heaps = _parse_heaps(args.heaps)
    backend, status, moves = solvers.solve(
        scheme, heaps, force_oracle=args.oracle, max_height=args.max_height
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "status": status.value,
                    "backend": backend,
                    "winning_moves": [move_to_dict(m) for m in moves],
                }
            )
        )
        return 0
    print(f"status: {status.value}  (backend: {backend})")
    for move in moves:
        print(f"winning move: {_describe_move(move)}")
    return 0


def cmd_pp(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.scheme)
    if (args.count is None) == (args.height is None):
        raise UsageError("give exactly one of --count or --height")
    backend, pairs = solvers.p_pairs(
        scheme,
        count=args.count,
        limit=args.height,
        strategy=args.strategy,
        max_height=args.max_height,
    )
    if args.format == "csv":
        sys.stdout.write(pairs_to_csv(scheme, [p.as_tuple() for p in pairs]))
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "scheme": scheme.to_dict(),
                    "strategy": backend,
                    "pairs": [[p.a, p.b] for p in pairs],
                }
            )
        )
    else:
        for pair in pairs:
            print(f"({pair.a}, {pair.b})")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    scheme_needed = args.fuzz is None
    if scheme_needed:
        scheme = _load_scheme(args.scheme)
        if not args.strategy or args.strategy == "auto":
            raise UsageError("--strategy is required for a single verification")
        reports = [run_verify(scheme, args.strategy, args.height)]
    else:
        kinds = {
            "green": (Dominance.GREEN,),
            "red": (Dominance.RED,),
            "both": (Dominance.GREEN, Dominance.RED),
        }[args.kind]
        reports = fuzz_dominated(args.fuzz, args.height, args.seed, kinds)
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for report in reports:
            print(report.summary())
    return 0 if all(r.passed for r in reports) else 1


def cmd_play(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args.scheme)
    heaps = _parse_heaps(args.heaps)
    pos = tuple(heaps)
    engine_turn = args.engine_side == "first"
    last_mover: str | None = None
    print(f"scheme: {scheme.key}")
    while any(pos):
        _print_position(scheme, pos)
        if engine_turn:
            move = solvers.engine_reply(
                scheme,
                pos,
                force_oracle=args.oracle,
                max_height=args.max_height,
                fallback=solvers.fallback_tallest_minus_one,
            )
            print(f"engine plays: {_describe_move(move)}")
            pos = apply_move(scheme, pos, move)
            last_mover = "engine"
        else:
            move = _read_human_move(pos)
            if move is None:
                print("goodbye")
                return 0
            try:
                pos = apply_move(scheme, pos, move)
            except IllegalMove as exc:
                print(f"illegal move ({exc.code}): {exc.message}")
                continue
            last_mover = "you"
        engine_turn = not engine_turn
    if last_mover is None:
        # Game over before anyone moved: the side to move loses.
        last_mover = "engine" if not engine_turn else "you"
        print("no tokens to take")
    print(f"{last_mover} took the last token: {'engine wins' if last_mover == 'engine' else 'you win'}")
    return 0


def _print_position(scheme: ColoringScheme, pos: tuple[int, ...]) -> None:
    for i, height in enumerate(pos):
        if height == 0:
            print(f"  heap {i + 1}: empty")
        elif height <= 30:
            stack = " ".join(scheme.color(level).value for level in range(1, height + 1))
            print(f"  heap {i + 1}: {height}  [{stack}]")
        else:
            print(f"  heap {i + 1}: {height}  [top {scheme.color(height).value}]")
    if is_green_position(scheme, pos) and any(pos):
        print("  position is green: any dominated target is reachable")


def _read_human_move(pos: tuple[int, ...]) -> Move | None:
    while True:
        try:
            line = input("your move (HEAP TARGET, or g T1,T2,... , or q): ").strip()
        except EOFError:
            return None
        if not line:
            continue
        if line.lower() in ("q", "quit", "exit"):
            return None
        parts = line.split()
        if parts[0].lower() == "g" and len(parts) == 2:
            try:
                return GreenMove(tuple(int(t) for t in parts[1].split(",")))
            except ValueError:
                pass
        elif len(parts) == 2:
            try:
                return NimMove(int(parts[0]) - 1, int(parts[1]))
            except ValueError:
                pass
        print("could not parse that; examples: '1 3' lowers heap 1 to height 3, 'g 0,0' is a green move")


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(persist_path=args.persist, max_height=args.max_height, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromatic-nim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scheme", help="scheme JSON or a path to a JSON file")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--max-height", type=int, default=DEFAULT_MAX_HEIGHT)
    common.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("color", parents=[common], help="print level colors")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("solve", parents=[common], help="status and winning moves of a position")
    p.add_argument("--heaps", required=True, help="comma-separated heights, e.g. 4,2")
    p.add_argument("--oracle", action="store_true", help="force brute force")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pp", parents=[common], help="tabulate P positions")
    p.add_argument("--count", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--strategy", choices=solvers.STRATEGY_NAMES, default="auto")
    p.set_defaults(func=cmd_pp)

    p = sub.add_parser("verify", parents=[common], help="check a strategy against the oracle")
    p.add_argument("--strategy", choices=VERIFY_STRATEGIES)
    p.add_argument("--height", type=int, default=40)
    p.add_argument("--fuzz", type=int, help="verify this many random dominated schemes instead")
    p.add_argument("--kind", choices=("green", "red", "both"), default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", parents=[common], help="play against the engine")
    p.add_argument("--heaps", required=True)
    p.add_argument("--engine-side", choices=("first", "second"), default="first")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default=os.environ.get("CHROMATIC_NIM_HOST", "127.0.0.1"))
    p.add_argument("--port", type=int, default=int(os.environ.get("CHROMATIC_NIM_PORT", "8000")))
    p.add_argument("--persist", help="JSON file for session persistence")
    p.add_argument("--ui-dir", help="directory with a built web UI to mount at /ui")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ChromaticNimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
