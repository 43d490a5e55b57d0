from __future__ import annotations

from collections.abc import Callable
from typing import TypeVar

from coordgames.core.exceptions import GameFormatError, GameInputError
from coordgames.core.game import Colouring, Game, GameBuilder
from coordgames.reductions.gadget import RoleMap

T = TypeVar("T")


def _strip(raw: str) -> list[str]:
    return raw.split("#", 1)[0].split()


def _int(tok: str, line_no: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GameFormatError(f"{what} must be an integer, got {tok!r}", line_no) from None


def _at(line_no: int, fn: Callable[[], T]) -> T:
    try:
        return fn()
    except GameFormatError:
        raise
    except GameInputError as exc:
        raise GameFormatError(str(exc), line_no) from None


# ---------------------------
# Game files
# ---------------------------

def parse_game(text: str) -> Game:
    """
    Line format::

        colours a b c          optional, fixes colour-id order
        node <id>
        set <id> <c1> <c2> ...
        bonus <id> <colour> <nat>
        edge <src> <dst> [<weight>]

    ``#`` starts a comment. ``colours`` and ``node`` lines are read first, so
    the remaining directives may refer to any declared node.
    """
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, toks) for no, toks in lines if toks]
    builder = GameBuilder()
    seen_palette = False
    node_line: dict[int, int] = {}

    for no, toks in lines:
        head, args = toks[0], toks[1:]
        if head == "colours":
            if seen_palette:
                raise GameFormatError("second 'colours' line", no)
            if not args:
                raise GameFormatError("'colours' needs at least one colour", no)
            _at(no, lambda args=args: builder.declare_palette(args))
            seen_palette = True
        elif head == "node":
            if len(args) != 1:
                raise GameFormatError("expected 'node <id>'", no)
            ext = _int(args[0], no, "node id")
            if builder.has_node(ext):
                raise GameFormatError(f"node {ext} declared twice", no)
            _at(no, lambda ext=ext: builder.add_node(ext))
            node_line[ext] = no

    sets: dict[int, list[str]] = {}
    for no, toks in lines:
        head, args = toks[0], toks[1:]
        if head in ("colours", "node"):
            continue
        if head == "set":
            if len(args) < 2:
                raise GameFormatError("expected 'set <id> <colour> ...'", no)
            ext = _declared(builder, args[0], no)
            if ext in sets:
                raise GameFormatError(f"second 'set' line for node {ext}", no)
            sets[ext] = args[1:]
            _at(no, lambda ext=ext, args=args: builder.set_colours(ext, args[1:]))
        elif head == "bonus":
            if len(args) != 3:
                raise GameFormatError("expected 'bonus <id> <colour> <nat>'", no)
            ext = _declared(builder, args[0], no)
            value = _int(args[2], no, "bonus")
            _at(no, lambda ext=ext, args=args, value=value: builder.set_bonus(ext, args[1], value))
        elif head == "edge":
            if len(args) not in (2, 3):
                raise GameFormatError("expected 'edge <src> <dst> [<weight>]'", no)
            src = _declared(builder, args[0], no)
            dst = _declared(builder, args[1], no)
            w = _int(args[2], no, "weight") if len(args) == 3 else 1
            _at(no, lambda src=src, dst=dst, w=w: builder.add_edge(src, dst, w))
        else:
            raise GameFormatError(f"unknown directive {head!r}", no)

    for no, toks in lines:
        if toks[0] == "bonus":
            ext, tok = int(toks[1]), toks[2]
            if ext not in sets:
                raise GameFormatError(f"bonus for node {ext} without a 'set' line", no)
            if tok not in sets[ext]:
                raise GameFormatError(f"node {ext}: bonus colour {tok!r} not in its colour set", no)
    for ext, no in node_line.items():
        if ext not in sets:
            raise GameFormatError(f"node {ext} has no colour set", no)

    try:
        return builder.build()
    except GameInputError as exc:
        raise GameFormatError(str(exc)) from None


def _declared(builder: GameBuilder, tok: str, line_no: int) -> int:
    ext = _int(tok, line_no, "node id")
    if not builder.has_node(ext):
        raise GameFormatError(f"node {ext} is not declared", line_no)
    return ext


def emit_game(game: Game, roles: RoleMap | None = None) -> str:
    """Canonical text: nodes, sets, bonuses and edges sorted by external id."""
    order = sorted(range(game.n), key=game.external)
    out: list[str] = []
    if roles:
        out.extend(roles.lines())
    out.append("colours " + " ".join(game.colours))
    out.extend(f"node {game.external(i)}" for i in order)
    for i in order:
        out.append(f"set {game.external(i)} " + " ".join(game.token(c) for c in game.colour_sets[i]))
    for i in order:
        for c in sorted(game.bonuses[i]):
            out.append(f"bonus {game.external(i)} {game.token(c)} {game.bonuses[i][c]}")
    edges = sorted((game.external(s), game.external(d), w) for s, d, w in game.edges())
    for s, d, w in edges:
        out.append(f"edge {s} {d}" if w == 1 else f"edge {s} {d} {w}")
    return "\n".join(out) + "\n"


# ---------------------------
# Colouring files
# ---------------------------

def parse_colouring(game: Game, text: str) -> Colouring:
    """``<node-id> <colour>`` per line, exactly one line per node."""
    assignment: dict[int, str] = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = _strip(raw)
        if not toks:
            continue
        if len(toks) != 2:
            raise GameFormatError("expected '<node-id> <colour>'", no)
        ext = _int(toks[0], no, "node id")
        if ext in assignment:
            raise GameFormatError(f"node {ext} coloured twice", no)
        if ext not in game.node_index:
            raise GameFormatError(f"unknown node {ext}", no)
        c = _at(no, lambda tok=toks[1]: game.colour(tok))
        if c not in game.colour_lookup[game.node(ext)]:
            raise GameFormatError(f"node {ext}: colour {toks[1]!r} not in its colour set", no)
        assignment[ext] = toks[1]
    try:
        return game.colouring(assignment)
    except GameInputError as exc:
        raise GameFormatError(str(exc)) from None


def emit_colouring(game: Game, s: Colouring) -> str:
    game.validate(s)
    order = sorted(range(game.n), key=game.external)
    return "".join(f"{game.external(i)} {game.token(s[i])}\n" for i in order)


# ---------------------------
# DOT
# ---------------------------

def emit_dot(game: Game, s: Colouring | None = None) -> str:
    """Graphviz digraph; node labels list the colour set (and the colour if given)."""
    if s is not None:
        game.validate(s)
    out = ["digraph game {"]
    for i in sorted(range(game.n), key=game.external):
        tokens = ",".join(game.token(c) for c in game.colour_sets[i])
        label = f"{game.external(i)} {{{tokens}}}"
        if s is not None:
            label += f" = {game.token(s[i])}"
        out.append(f'  "{game.external(i)}" [label="{label}"];')
    for src, dst, w in sorted((game.external(a), game.external(b), w) for a, b, w in game.edges()):
        attr = "" if w == 1 else f' [label="{w}"]'
        out.append(f'  "{src}" -> "{dst}"{attr};')
    out.append("}")
    return "\n".join(out) + "\n"
