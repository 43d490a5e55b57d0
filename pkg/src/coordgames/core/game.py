from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from coordgames.core.exceptions import GameInputError

# Colour tokens: letters, digits and underscore.
TOKEN_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class Game:
    """
    Coordination game on a weighted directed graph.

    Nodes are dense ids 0..n-1 (``node_ids`` maps back to the external ids),
    colours are dense ids in first-declaration order (``colours`` maps back to
    the tokens). ``colour_sets[i]`` is sorted by colour id, ``bonuses[i]`` only
    holds the non-zero entries, and each edge appears once in ``in_edges`` of
    its target and once in ``out_edges`` of its source as ``(other, weight)``.
    """

    colours: tuple[str, ...]
    node_ids: tuple[int, ...]
    colour_sets: tuple[tuple[int, ...], ...]
    bonuses: tuple[Mapping[int, int], ...]
    in_edges: tuple[tuple[tuple[int, int], ...], ...]
    out_edges: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.node_ids)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(out) for out in self.out_edges)

    @cached_property
    def node_index(self) -> dict[int, int]:
        return {ext: i for i, ext in enumerate(self.node_ids)}

    @cached_property
    def colour_index(self) -> dict[str, int]:
        return {tok: c for c, tok in enumerate(self.colours)}

    @cached_property
    def colour_lookup(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(cs) for cs in self.colour_sets)

    @cached_property
    def used_colours(self) -> tuple[int, ...]:
        return tuple(sorted({c for cs in self.colour_sets for c in cs}))

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for src, out in enumerate(self.out_edges):
            for dst, w in out:
                yield src, dst, w

    def bonus(self, i: int, c: int) -> int:
        return self.bonuses[i].get(c, 0)

    def is_unit_weight(self) -> bool:
        return all(w == 1 for out in self.out_edges for _, w in out)

    def has_bonuses(self) -> bool:
        return any(self.bonuses)

    # ---------------- id translation ----------------

    def node(self, external_id: int) -> int:
        try:
            return self.node_index[external_id]
        except KeyError:
            raise GameInputError(f"unknown node {external_id}") from None

    def colour(self, token: str) -> int:
        try:
            return self.colour_index[token]
        except KeyError:
            raise GameInputError(f"unknown colour {token!r}") from None

    def external(self, i: int) -> int:
        return self.node_ids[i]

    def token(self, c: int) -> str:
        return self.colours[c]

    def check_node(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise GameInputError(f"node index {i} out of range 0..{self.n - 1}")
        return i

    # ---------------- colourings ----------------

    def validate(self, s: Colouring) -> Colouring:
        if len(s.colours) != self.n:
            raise GameInputError(f"colouring has {len(s.colours)} entries, game has {self.n} nodes")
        for i, c in enumerate(s.colours):
            if c not in self.colour_lookup[i]:
                raise GameInputError(
                    f"node {self.node_ids[i]}: colour {self._token_or_id(c)} not in its colour set"
                )
        return s

    def _token_or_id(self, c: int) -> str:
        return repr(self.colours[c]) if 0 <= c < len(self.colours) else f"#{c}"

    def colouring(self, assignment: Mapping[int, str]) -> Colouring:
        """Build a colouring from ``{external node id: colour token}``; every node required."""
        missing = [ext for ext in self.node_ids if ext not in assignment]
        if missing:
            raise GameInputError(f"colouring misses nodes {missing}")
        extra = [ext for ext in assignment if ext not in self.node_index]
        if extra:
            raise GameInputError(f"colouring names unknown nodes {sorted(extra)}")
        s = Colouring(tuple(self.colour(assignment[ext]) for ext in self.node_ids))
        return self.validate(s)

    def colouring_of(self, tokens: Sequence[str]) -> Colouring:
        """Positional form: ``tokens[i]`` is the colour of internal node ``i``."""
        return self.validate(Colouring(tuple(self.colour(t) for t in tokens)))

    def default_colouring(self) -> Colouring:
        return Colouring(tuple(cs[0] for cs in self.colour_sets))

    def describe(self, s: Colouring) -> dict[int, str]:
        return {self.node_ids[i]: self.colours[c] for i, c in enumerate(s.colours)}

    # ---------------- graph views ----------------

    @cached_property
    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_weighted_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class Colouring:
    """One colour id per internal node id."""

    colours: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.colours)

    def __getitem__(self, i: int) -> int:
        return self.colours[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colours)

    def replace(self, changes: Mapping[int, int]) -> Colouring:
        out = list(self.colours)
        for i, c in changes.items():
            out[i] = c
        return Colouring(tuple(out))

    def diff(self, other: Colouring) -> tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(zip(self.colours, other.colours, strict=True)) if a != b)

    def key(self) -> tuple[int, ...]:
        # canonical encoding for visited-state sets
        return self.colours


@dataclass(frozen=True)
class DeviationStep:
    """
    A deviation of ``coalition`` from one colouring to another, stored as the
    diff: ``old[k]``/``new[k]`` are the colours of ``coalition[k]`` before and
    after, ``deltas[k]`` its payoff change. ``old[k] != new[k]`` always holds.
    """

    coalition: tuple[int, ...]
    old: tuple[int, ...]
    new: tuple[int, ...]
    deltas: tuple[int, ...]

    @property
    def profitable(self) -> bool:
        return bool(self.coalition) and all(d > 0 for d in self.deltas)

    def apply(self, before: Colouring) -> Colouring:
        return before.replace(dict(zip(self.coalition, self.new, strict=True)))

    def revert(self, after: Colouring) -> Colouring:
        return after.replace(dict(zip(self.coalition, self.old, strict=True)))

    @classmethod
    def between(cls, game: Game, before: Colouring, after: Colouring) -> DeviationStep:
        coalition = before.diff(after)
        deltas = tuple(
            node_payoff(game, after.colours, i, after[i]) - node_payoff(game, before.colours, i, before[i])
            for i in coalition
        )
        return cls(
            coalition=coalition,
            old=tuple(before[i] for i in coalition),
            new=tuple(after[i] for i in coalition),
            deltas=deltas,
        )


class GameBuilder:
    """
    Mutable staging area for a ``Game``. External node ids and colour tokens
    go in; ``build()`` interns them and validates the game invariants.
    Parallel edges are merged by summing weights.
    """

    def __init__(self, colours: Iterable[str] = ()) -> None:
        self._colours: dict[str, int] = {}
        self._declared_colours = False
        self._nodes: dict[int, None] = {}
        self._sets: dict[int, list[str]] = {}
        self._bonuses: dict[tuple[int, str], int] = {}
        self._edges: dict[tuple[int, int], int] = {}
        if colours:
            self.declare_palette(colours)

    @property
    def declared_colours(self) -> bool:
        return self._declared_colours

    def declare_palette(self, tokens: Iterable[str]) -> None:
        """Fix the colour-id order up front; later sets may only use these colours."""
        if self._colours:
            raise GameInputError("colour palette must be declared before any colour is used")
        for tok in tokens:
            if tok in self._colours:
                raise GameInputError(f"colour {tok!r} declared twice")
            self.declare_colour(tok)
        self._declared_colours = True

    def declare_colour(self, token: str) -> int:
        if not TOKEN_RE.match(token):
            raise GameInputError(f"invalid colour token {token!r}")
        return self._colours.setdefault(token, len(self._colours))

    def add_node(self, ext: int) -> None:
        if ext <= 0:
            raise GameInputError(f"node ids must be positive integers, got {ext}")
        self._nodes.setdefault(ext, None)

    def has_node(self, ext: int) -> bool:
        return ext in self._nodes

    def set_colours(self, ext: int, tokens: Sequence[str]) -> None:
        if not tokens:
            raise GameInputError(f"node {ext}: empty colour set")
        if len(set(tokens)) != len(tokens):
            raise GameInputError(f"node {ext}: repeated colour in set")
        for tok in tokens:
            if self._declared_colours and tok not in self._colours:
                raise GameInputError(f"node {ext}: colour {tok!r} not declared")
            self.declare_colour(tok)
        self.add_node(ext)
        self._sets[ext] = list(tokens)

    def set_bonus(self, ext: int, token: str, value: int) -> None:
        if value < 0:
            raise GameInputError(f"node {ext}: negative bonus {value}")
        self._bonuses[(ext, token)] = value

    def add_edge(self, src: int, dst: int, weight: int = 1) -> None:
        if src == dst:
            raise GameInputError(f"self loop on node {src}")
        if weight < 0:
            raise GameInputError(f"edge {src}->{dst}: negative weight {weight}")
        self._edges[(src, dst)] = self._edges.get((src, dst), 0) + weight

    def build(self) -> Game:
        if not self._nodes:
            raise GameInputError("game has no nodes")
        node_ids = tuple(self._nodes)
        index = {ext: i for i, ext in enumerate(node_ids)}

        colour_sets: list[tuple[int, ...]] = []
        for ext in node_ids:
            tokens = self._sets.get(ext)
            if tokens is None:
                raise GameInputError(f"node {ext} has no colour set")
            colour_sets.append(tuple(sorted(self._colours[t] for t in tokens)))

        bonuses: list[dict[int, int]] = [{} for _ in node_ids]
        for (ext, tok), value in self._bonuses.items():
            if ext not in index:
                raise GameInputError(f"bonus for undeclared node {ext}")
            c = self._colours.get(tok)
            if c is None or c not in colour_sets[index[ext]]:
                raise GameInputError(f"node {ext}: bonus colour {tok!r} not in its colour set")
            if value:
                bonuses[index[ext]][c] = value

        ins: list[list[tuple[int, int]]] = [[] for _ in node_ids]
        outs: list[list[tuple[int, int]]] = [[] for _ in node_ids]
        for src, dst in self._edges:
            for ext in (src, dst):
                if ext not in index:
                    raise GameInputError(f"edge {src}->{dst} references undeclared node {ext}")
        for i, j, w in sorted((index[s], index[d], w) for (s, d), w in self._edges.items()):
            outs[i].append((j, w))
            ins[j].append((i, w))

        colours = tuple(sorted(self._colours, key=self._colours.__getitem__))
        return Game(
            colours=colours,
            node_ids=node_ids,
            colour_sets=tuple(colour_sets),
            bonuses=tuple(bonuses),
            in_edges=tuple(tuple(x) for x in ins),
            out_edges=tuple(tuple(x) for x in outs),
        )


# ---------------------------
# Payoffs
# ---------------------------

def node_payoff(game: Game, colours: Sequence[int], i: int, c: int) -> int:
    """Payoff of node ``i`` playing ``c`` against ``colours`` (no validation)."""
    total = game.bonuses[i].get(c, 0)
    for src, w in game.in_edges[i]:
        if colours[src] == c:
            total += w
    return total


def colour_scores(game: Game, colours: Sequence[int], i: int) -> dict[int, int]:
    """Payoff of every colour available to ``i`` against ``colours``."""
    bonus = game.bonuses[i]
    scores = {c: bonus.get(c, 0) for c in game.colour_sets[i]}
    for src, w in game.in_edges[i]:
        sc = colours[src]
        if sc in scores:
            scores[sc] += w
    return scores


def payoff(game: Game, s: Colouring, i: int) -> int:
    game.check_node(i)
    game.validate(s)
    return node_payoff(game, s.colours, i, s.colours[i])


def payoffs(game: Game, s: Colouring) -> tuple[int, ...]:
    game.validate(s)
    cs = s.colours
    return tuple(node_payoff(game, cs, i, cs[i]) for i in range(game.n))


def social_welfare(game: Game, s: Colouring) -> int:
    return sum(payoffs(game, s))
