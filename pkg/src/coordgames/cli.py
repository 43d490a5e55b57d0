from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence
from dataclasses import asdict
from pathlib import Path as FilePath

from coordgames.core.exceptions import BudgetExceededError, CoordGameError
from coordgames.core.game import Colouring, Game, payoffs
from coordgames.core.settings import get_settings
from coordgames.dynamics.paths import CONVERGED, Scheduler, format_step, run_path, trace_lines
from coordgames.formats.dimacs import parse_dimacs
from coordgames.formats.game_file import emit_colouring, emit_dot, emit_game, parse_colouring, parse_game
from coordgames.formats.polymatrix_file import emit_polymatrix
from coordgames.reductions.gadget import RoleMap, extract_assignment, sat_to_game
from coordgames.reductions.polymatrix import to_polymatrix
from coordgames.reductions.weights import expand_weights
from coordgames.services.checks import check_level, list_colourings
from coordgames.solvers.dispatch import METHODS, solve
from coordgames.solvers.structure import classify
from coordgames.utils.logging import log_json, setup_logging

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

Handler = Callable[[argparse.Namespace], int]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return FilePath(path).read_text(encoding="utf-8")


def _load_game(path: str) -> tuple[Game, str]:
    text = _read(path)
    return parse_game(text), text


def _load_colouring(game: Game, path: str) -> Colouring:
    return parse_colouring(game, _read(path))


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _line_of(game: Game, s: Colouring) -> str:
    cells = " ".join(f"{ext}:{tok}" for ext, tok in sorted(game.describe(s).items()))
    pay = payoffs(game, s)
    by_ext = [pay[i] for i in sorted(range(game.n), key=game.external)]
    return f"{cells} payoffs=[{','.join(map(str, by_ext))}] sw={sum(pay)}"


# ---------------------------
# Subcommands
# ---------------------------

def cmd_payoff(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    s = _load_colouring(game, args.colouring)
    pay = payoffs(game, s)
    for i in sorted(range(game.n), key=game.external):
        print(f"{game.external(i)} {pay[i]}")
    print(f"sw {sum(pay)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    s = _load_colouring(game, args.colouring)
    outcome = check_level(game, s, args.level)
    print(f"level {outcome.level}")
    print(f"holds {'yes' if outcome.holds else 'no'}")
    if outcome.witness is not None:
        print(f"witness {format_step(game, outcome.witness)}")
    return EXIT_OK if outcome.holds else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    found = list_colourings(game, args.kind)
    for s in found:
        print(_line_of(game, s))
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_solve(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    start = _load_colouring(game, args.start) if args.start else None
    result = solve(game, args.method, start=start)
    print(f"# method: {result.method}")
    if result.colouring is None:
        print("# no strong equilibrium")
        return EXIT_NEGATIVE
    if result.path is not None:
        print(f"# steps: {len(result.path)}")
    _emit(emit_colouring(game, result.colouring))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    report = classify(game)
    for name, value in asdict(report).items():
        shown = str(value).lower() if isinstance(value, bool) else value
        print(f"{name}: {shown}")
    return EXIT_OK


def cmd_dynamics(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    start = _load_colouring(game, args.start) if args.start else game.default_colouring()
    script = tuple(game.node(int(tok)) for tok in args.script.split(",")) if args.script else ()
    sched = Scheduler(
        mode=args.mode,
        policy=args.policy,
        seed=args.seed,
        max_coalition=args.max_coalition,
        script=script,
    )
    max_steps = args.max_steps if args.max_steps is not None else get_settings().max_steps
    path = run_path(game, start, sched, max_steps)
    if args.trace:
        for line in trace_lines(game, path):
            print(line)
    print(f"# status: {path.status}")
    print(f"# steps: {len(path)}")
    _emit(emit_colouring(game, path.end))
    return EXIT_OK if path.status == CONVERGED else EXIT_NEGATIVE


def cmd_reduce(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf))
    game, roles = sat_to_game(formula)
    if args.expand_weights:
        game, _projection = expand_weights(game)
    _emit(emit_game(game, roles))
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    game, text = _load_game(args.game)
    roles = RoleMap.parse(text)
    s = _load_colouring(game, args.colouring)
    for j, value in extract_assignment(game, roles, s).items():
        print(f"x{j} {'true' if value else 'false'}")
    return EXIT_OK


def cmd_to_polymatrix(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    _emit(emit_polymatrix(game, to_polymatrix(game)))
    return EXIT_OK


def cmd_dot(args: argparse.Namespace) -> int:
    game, _ = _load_game(args.game)
    s = _load_colouring(game, args.colouring) if args.colouring else None
    _emit(emit_dot(game, s))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("coordgames.web.app:app", host=args.host, port=args.port)
    return EXIT_OK


# ---------------------------
# Parser
# ---------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coordgames", description="Coordination games on directed graphs")
    parser.add_argument("--log-level", default=None, help="overrides COORDGAMES_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("payoff", cmd_payoff, "payoff of every node and social welfare")
    p.add_argument("game")
    p.add_argument("colouring")

    p = add("check", cmd_check, "check an equilibrium notion at a colouring")
    p.add_argument("game")
    p.add_argument("colouring")
    p.add_argument("--level", default="nash", help="nash, strong or k=<int>")

    p = add("enumerate", cmd_enumerate, "list equilibria by exhaustive search")
    p.add_argument("game")
    p.add_argument("--kind", default="nash", help="nash, strong, k=<int> or all")

    p = add("solve", cmd_solve, "compute a strong equilibrium")
    p.add_argument("game")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--start", default=None, help="start colouring file")

    p = add("classify", cmd_classify, "structural report")
    p.add_argument("game")

    p = add("dynamics", cmd_dynamics, "run an improvement path")
    p.add_argument("game")
    p.add_argument("--start", default=None, help="start colouring file (default: lowest colour everywhere)")
    p.add_argument("--mode", choices=("unilateral", "coalition"), default="unilateral")
    p.add_argument("--policy", choices=("first", "random", "scripted"), default="first")
    p.add_argument("--max-coalition", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--script", default=None, help="comma-separated node ids for the scripted policy")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--trace", action="store_true")

    p = add("reduce", cmd_reduce, "3-CNF (DIMACS) to a coordination game")
    p.add_argument("cnf")
    p.add_argument("--expand-weights", action="store_true")

    p = add("extract", cmd_extract, "truth assignment from an equilibrium of a reduced game")
    p.add_argument("game")
    p.add_argument("colouring")

    p = add("to-polymatrix", cmd_to_polymatrix, "0/1 polymatrix form of an unweighted game")
    p.add_argument("game")

    p = add("dot", cmd_dot, "Graphviz dump of the game graph")
    p.add_argument("game")
    p.add_argument("--colouring", default=None)

    p = add("serve", cmd_serve, "HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging((args.log_level or get_settings().log_level).upper())
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        log_json("cli_failed", command=args.command, error=str(exc), exit_code=EXIT_BUDGET)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CoordGameError, OSError, ValueError) as exc:
        log_json("cli_failed", command=args.command, error=str(exc), exit_code=EXIT_INPUT)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
