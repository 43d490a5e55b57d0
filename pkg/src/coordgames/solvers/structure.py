from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import networkx as nx

from coordgames.core.game import Game

ComponentKind = Literal["singleton", "simple-cycle", "other"]


@dataclass(frozen=True)
class SccDecomposition:
    """
    Strongly connected components in topological-label order:
    ``components[k]`` carries label ``k + 1`` and every edge between distinct
    components goes from a lower to a higher label.
    """

    components: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    kinds: tuple[ComponentKind, ...]

    @property
    def m(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class StructureReport:
    n: int
    edges: int
    colours_used: int
    unit_weights: bool
    is_dag: bool
    is_single_simple_cycle: bool
    all_sccs_simple_cycles: bool
    uses_at_most_two_colours: bool
    is_colour_complete: bool


def _strong_components(game: Game) -> tuple[list[list[int]], list[int]]:
    """
    Path-based SCC search over the adjacency tuples, iterative. Components
    come out sinks first; ``comp_of[i]`` is the position of ``i``'s component
    in that list.
    """
    n = game.n
    succ = game.out_edges
    index = [-1] * n
    comp_of = [-1] * n
    stack: list[int] = []
    boundaries: list[int] = []
    comps: list[list[int]] = []

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = 0
        stack.append(root)
        boundaries.append(0)
        work = [(root, iter(succ[root]))]
        while work:
            v, edges = work[-1]
            for w, _ in edges:
                iw = index[w]
                if iw == -1:
                    iw = index[w] = len(stack)
                    stack.append(w)
                    boundaries.append(iw)
                    work.append((w, iter(succ[w])))
                    break
                if comp_of[w] == -1:
                    while iw < boundaries[-1]:
                        boundaries.pop()
            else:
                work.pop()
                iv = index[v]
                if boundaries[-1] == iv:
                    boundaries.pop()
                    members = stack[iv:]
                    del stack[iv:]
                    cid = len(comps)
                    for u in members:
                        comp_of[u] = cid
                    comps.append(members)
    return comps, comp_of


def _kind(game: Game, members: list[int], cid: int, comp_of: list[int]) -> ComponentKind:
    # strongly connected on m nodes with exactly m internal edges: a simple cycle
    m = len(members)
    if m == 1:
        return "singleton"
    inside = 0
    for i in members:
        for j, _ in game.out_edges[i]:
            if comp_of[j] == cid:
                inside += 1
        if inside > m:
            return "other"
    return "simple-cycle" if inside == m else "other"


def decompose(game: Game) -> SccDecomposition:
    comps, comp_of = _strong_components(game)
    kinds = [_kind(game, members, cid, comp_of) for cid, members in enumerate(comps)]
    comps.reverse()
    kinds.reverse()
    labels = [0] * game.n
    ordered: list[tuple[int, ...]] = []
    for k, members in enumerate(comps, start=1):
        members.sort()
        ordered.append(tuple(members))
        for i in members:
            labels[i] = k
    return SccDecomposition(
        components=tuple(ordered),
        labels=tuple(labels),
        kinds=tuple(kinds),
    )


def cycle_order(game: Game) -> tuple[int, ...] | None:
    """
    The nodes in cycle order starting at node 0 when the whole graph is one
    simple cycle, else None. Linear time.
    """
    n = game.n
    if n < 2:
        return None
    out = game.out_edges
    seen = bytearray(n)
    order: list[int] = []
    v = 0
    # out-degree 1 on all n nodes leaves no edge for anything but the cycle
    while not seen[v]:
        if len(out[v]) != 1:
            return None
        seen[v] = 1
        order.append(v)
        v = out[v][0][0]
    return tuple(order) if v == 0 and len(order) == n else None


def is_colour_complete(game: Game) -> bool:
    """
    For every colour x, each weakly connected component of the subgraph induced
    by the nodes offering x has both directed edges between every pair.
    """
    g = game.digraph
    for x in game.used_colours:
        offering = [i for i in range(game.n) if x in game.colour_lookup[i]]
        sub = g.subgraph(offering)
        for comp in nx.weakly_connected_components(sub):
            k = len(comp)
            if sub.subgraph(comp).number_of_edges() != k * (k - 1):
                return False
    return True


def classify(game: Game) -> StructureReport:
    dec = decompose(game)
    return StructureReport(
        n=game.n,
        edges=game.edge_count,
        colours_used=len(game.used_colours),
        unit_weights=game.is_unit_weight(),
        is_dag=all(kind == "singleton" for kind in dec.kinds),
        is_single_simple_cycle=cycle_order(game) is not None,
        all_sccs_simple_cycles=all(kind != "other" for kind in dec.kinds),
        uses_at_most_two_colours=len(game.used_colours) <= 2,
        is_colour_complete=is_colour_complete(game),
    )
