from __future__ import annotations

from itertools import product

import pytest

from coordgames.core.equilibria import can_improve
from coordgames.core.exceptions import BudgetExceededError, GameInputError
from coordgames.core.game import GameBuilder
from coordgames.oracle.enumerate import (
    count_colourings,
    enumerate_colourings,
    exists,
    find_all,
    find_first,
    parse_kind,
)
from coordgames.oracle.gadgets import SECURE_PAYOFF, can_secure, core_security, verify_no_ne_gadget
from coordgames.reductions.gadget import _GADGET_EDGES, CORE, PALETTE, ROLES, _gadget_sets

# Colours of nodes 1, 2, 3 and the node among them that is not best-responding.
# Nodes 4, 5, 6 copy 1, 2, 3 and the sources play their only colour.
NO_NASH_UNSTABLE = [
    (("a", "a", "b"), 1),
    (("a", "a", "c"), 3),
    (("a", "c", "b"), 3),
    (("a", "c", "c"), 2),
    (("b", "a", "b"), 2),
    (("b", "a", "c"), 1),
    (("b", "c", "b"), 3),
    (("b", "c", "c"), 1),
]


def test_enumeration_order_swap_cycle(swap_cycle):
    seen = [swap_cycle.describe(s) for s in enumerate_colourings(swap_cycle)]
    assert seen == [
        {1: "a", 2: "b"},
        {1: "a", 2: "c"},
        {1: "c", 2: "b"},
        {1: "c", 2: "c"},
    ]


def test_enumeration_count_no_nash(no_nash):
    assert count_colourings(no_nash) == 64
    assert sum(1 for _ in enumerate_colourings(no_nash)) == 64


def test_no_nash_game_has_no_equilibrium(no_nash):
    assert find_all(no_nash, "nash") == []
    assert find_first(no_nash, "strong") is None
    assert not exists(no_nash)


@pytest.mark.parametrize(("core", "unstable"), NO_NASH_UNSTABLE)
def test_no_nash_every_candidate_has_an_unstable_node(no_nash, core, unstable):
    s = no_nash.colouring(
        {1: core[0], 2: core[1], 3: core[2], 4: core[0], 5: core[1], 6: core[2], 7: "a", 8: "c", 9: "b"}
    )
    assert can_improve(no_nash, s.colours, no_nash.node(unstable))


def test_swap_cycle_equilibria(swap_cycle):
    nash = [swap_cycle.describe(s) for s in find_all(swap_cycle, "nash")]
    assert nash == [{1: "a", 2: "b"}, {1: "c", 2: "c"}]
    strong = [swap_cycle.describe(s) for s in find_all(swap_cycle, "strong")]
    assert strong == [{1: "c", 2: "c"}]
    assert [swap_cycle.describe(s) for s in find_all(swap_cycle, "k", 1)] == nash
    # k larger than n is clamped to n
    assert [swap_cycle.describe(s) for s in find_all(swap_cycle, "k", 5)] == strong


def test_parse_kind():
    assert parse_kind("nash") == ("nash", None)
    assert parse_kind("strong") == ("strong", None)
    assert parse_kind("k=3") == ("k", 3)
    for bad in ("k=0", "k=x", "weak", ""):
        with pytest.raises(GameInputError):
            parse_kind(bad)


def test_kind_k_needs_a_size(swap_cycle):
    with pytest.raises(GameInputError):
        find_all(swap_cycle, "k")


def test_budget_exceeded(no_nash, small_budget):
    with pytest.raises(BudgetExceededError) as err:
        find_all(no_nash, "nash")
    assert err.value.required == 64
    assert err.value.budget == small_budget


def test_explicit_budget_overrides_settings(swap_cycle):
    with pytest.raises(BudgetExceededError):
        list(enumerate_colourings(swap_cycle, budget=3))
    assert len(list(enumerate_colourings(swap_cycle, budget=4))) == 4


# ---------------------------
# Gadget
# ---------------------------

@pytest.mark.parametrize(("x", "y", "z"), list(product((False, True), repeat=3)))
def test_gadget_has_no_nash_equilibrium(x, y, z):
    assert verify_no_ne_gadget(x, y, z)


def _gadget_without_leaf_edges():
    builder = GameBuilder(PALETTE)
    ids = {role: r + 1 for r, role in enumerate(ROLES)}
    for role, tokens in _gadget_sets(True, True, True).items():
        builder.set_colours(ids[role], tokens)
    for src, dst, w in _GADGET_EDGES:
        if not src.startswith("L"):
            builder.add_edge(ids[src], ids[dst], w)
    return builder.build(), ids


def test_leaf_edges_are_what_secures_the_core():
    game, ids = _gadget_without_leaf_edges()
    core = [game.node(ids[role]) for role in CORE]
    assert not core_security(game, core)

    s = game.colouring({ids["A"]: "T", ids["B"]: "T", ids["C"]: "T", ids["RG"]: "R", ids["RB"]: "R",
                        ids["GB"]: "B", ids["LR"]: "R", ids["LB"]: "B", ids["LG"]: "G"})
    assert not can_secure(game, s, game.node(ids["A"]), SECURE_PAYOFF)


def test_heavy_literal_neighbour_creates_an_equilibrium():
    builder = GameBuilder(PALETTE)
    builder.set_colours(1, ("T", "F"))
    ids = {role: r + 2 for r, role in enumerate(ROLES)}
    for role, tokens in _gadget_sets(True, False, False).items():
        builder.set_colours(ids[role], tokens)
    for src, dst, w in _GADGET_EDGES:
        builder.add_edge(ids[src], ids[dst], w)
    builder.add_edge(1, ids["A"], 4)
    game = builder.build()

    found = find_first(game, "nash")
    assert found is not None
    assert game.describe(found)[1] == "T"
    assert game.describe(found)[ids["A"]] == "T"


# ---------------------------
# Structural facts the solvers rely on
# ---------------------------

def test_dag_nash_equilibria_are_strong(games):
    for _ in range(25):
        game = games.dag(games.rng.randint(1, 6), weighted=True)
        assert find_all(game, "nash") == find_all(game, "strong")


def test_cycle_nash_equilibria_are_n_minus_1_equilibria(games):
    for _ in range(25):
        game = games.cycle(games.rng.randint(2, 6))
        assert find_all(game, "nash") == find_all(game, "k", game.n - 1)
