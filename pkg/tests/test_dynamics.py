from __future__ import annotations

import pytest

from coordgames.core.equilibria import is_nash, is_strong, profitable_deviations
from coordgames.core.exceptions import GameInputError
from coordgames.core.game import social_welfare
from coordgames.dynamics.paths import CONVERGED, EXHAUSTED, REVISITED, Scheduler, run_path, trace_lines
from coordgames.dynamics.potential import check_rank_order, lex_potential, topological_order
from coordgames.oracle.fixtures import rotation_cycle_game, rotation_script, rotation_start
from coordgames.solvers.structure import classify


def _assert_chained(game, path):
    s = path.start
    for step in path.steps:
        assert step.profitable
        assert tuple(s[i] for i in step.coalition) == step.old
        s = step.apply(s)
    assert s == path.end


# ---------------------------
# Paths
# ---------------------------

def test_rotation_path_revisits_its_start():
    for n in (3, 4, 6):
        game = rotation_cycle_game(n)
        sched = Scheduler(policy="scripted", script=rotation_script(game))
        path = run_path(game, rotation_start(game), sched, max_steps=10 * n)
        assert path.status == REVISITED
        assert len(path) == 2 * n
        assert path.end == path.start
        _assert_chained(game, path)


def test_coalition_mode_from_strong_equilibrium_is_empty(swap_cycle):
    cc = swap_cycle.colouring({1: "c", 2: "c"})
    path = run_path(swap_cycle, cc, Scheduler(mode="coalition", max_coalition=2), max_steps=5)
    assert path.status == CONVERGED
    assert len(path) == 0


def test_coalition_mode_swap_cycle_moves_to_cc(swap_cycle):
    ab = swap_cycle.colouring({1: "a", 2: "b"})
    path = run_path(swap_cycle, ab, Scheduler(mode="coalition", max_coalition=2), max_steps=5)
    assert path.status == CONVERGED
    assert len(path) == 1
    assert path.steps[0].coalition == (0, 1)
    assert swap_cycle.describe(path.end) == {1: "c", 2: "c"}


def test_unilateral_first_policy_stops_at_nash(swap_cycle):
    ab = swap_cycle.colouring({1: "a", 2: "b"})
    path = run_path(swap_cycle, ab, Scheduler(), max_steps=5)
    assert path.status == CONVERGED
    assert len(path) == 0
    assert is_nash(swap_cycle, path.end)


def test_step_budget(no_nash):
    path = run_path(no_nash, no_nash.default_colouring(), Scheduler(), max_steps=1)
    assert path.status == EXHAUSTED
    assert len(path) == 1


def test_no_nash_unilateral_path_never_converges(no_nash):
    path = run_path(no_nash, no_nash.default_colouring(), Scheduler(), max_steps=200)
    assert path.status == REVISITED
    _assert_chained(no_nash, path)


def test_random_policy_is_deterministic_per_seed(games):
    game = games.general(6)
    start = games.colouring(game)
    for mode, size in (("unilateral", 1), ("coalition", 2)):
        runs = [
            run_path(game, start, Scheduler(mode=mode, policy="random", seed=7, max_coalition=size), 50)
            for _ in range(2)
        ]
        assert runs[0].steps == runs[1].steps
        assert runs[0].status == runs[1].status


@pytest.mark.parametrize(
    "kwargs",
    [
        {"mode": "sideways"},
        {"policy": "greedy"},
        {"max_coalition": 0},
        {"policy": "scripted"},
        {"policy": "scripted", "mode": "coalition", "script": (0,)},
    ],
)
def test_scheduler_validation(kwargs):
    with pytest.raises(GameInputError):
        Scheduler(**kwargs)


def test_run_path_rejects_zero_budget(swap_cycle):
    with pytest.raises(GameInputError):
        run_path(swap_cycle, swap_cycle.default_colouring(), Scheduler(), max_steps=0)


def test_trace_lines(swap_cycle):
    ab = swap_cycle.colouring({1: "a", 2: "b"})
    path = run_path(swap_cycle, ab, Scheduler(mode="coalition", max_coalition=2), max_steps=5)
    assert list(trace_lines(swap_cycle, path)) == ["step 1 coalition={1,2} 1:a->c 2:b->c deltas=[+1,+1] sw 0->2"]


def test_colour_complete_coalition_paths_converge(games):
    for seed in range(40):
        game = games.complete(games.rng.randint(2, 5))
        start = games.colouring(game)
        assert classify(game).is_colour_complete
        sched = Scheduler(mode="coalition", policy="random", seed=seed, max_coalition=game.n)
        path = run_path(game, start, sched, max_steps=500)
        assert path.status == CONVERGED
        assert is_strong(game, path.end)


def test_colour_complete_clique_blocks_converge(games):
    for seed in range(40):
        game = games.clique_blocks(games.rng.randint(2, 7))
        assert classify(game).is_colour_complete
        start = games.colouring(game)
        sched = Scheduler(mode="coalition", policy="random", seed=seed, max_coalition=game.n)
        path = run_path(game, start, sched, max_steps=500)
        assert path.status == CONVERGED
        _assert_chained(game, path)
        assert is_strong(game, path.end)


def test_one_way_edge_breaks_colour_completeness(make):
    game = make({1: ["a"], 2: ["a"], 3: ["b"]}, [(1, 2), (2, 3), (3, 1)])
    assert not classify(game).is_colour_complete
    split = make({1: ["a"], 2: ["a"], 3: ["b"]}, [(1, 2), (2, 1), (2, 3), (3, 1)])
    assert classify(split).is_colour_complete


def test_cycle_social_welfare_escalates(games):
    for _ in range(30):
        game = games.cycle(games.rng.randint(2, 5))
        s = games.colouring(game)
        sw = social_welfare(game, s)
        for step in profitable_deviations(game, s, game.n):
            after = step.apply(s)
            if len(step.coalition) == game.n:
                assert social_welfare(game, after) > sw
            else:
                assert social_welfare(game, after) >= sw


# ---------------------------
# Topological order and potential
# ---------------------------

def test_topological_order_examples(make, no_nash):
    chain = make({1: ["a"], 2: ["a"], 3: ["a"]}, [(1, 2), (2, 3)])
    assert topological_order(chain).order == (0, 1, 2)
    single = make({1: ["a"]})
    assert topological_order(single).order == (0,)

    witness = topological_order(no_nash)
    assert not witness.is_dag
    cycle = witness.cycle
    assert cycle is not None and len(cycle) >= 2
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert any(dst == b for dst, _ in no_nash.out_edges[a])
    assert set(no_nash.external(i) for i in cycle) <= {1, 2, 3, 4, 5, 6}


def test_topological_order_is_a_valid_rank(games):
    for _ in range(20):
        game = games.dag(games.rng.randint(1, 8))
        order = topological_order(game).order
        assert order is not None
        check_rank_order(game, order)


def test_rank_order_rejects_backward_edges(make):
    game = make({1: ["a"], 2: ["a"]}, [(1, 2)])
    with pytest.raises(GameInputError):
        lex_potential(game, (1, 0), game.default_colouring())
    with pytest.raises(GameInputError):
        lex_potential(game, (0, 0), game.default_colouring())


def test_lex_potential_two_node_chain(make):
    game = make({1: ["a", "b"], 2: ["a", "b"]}, [(1, 2)])
    before = lex_potential(game, (0, 1), game.colouring({1: "a", 2: "b"}))
    after = lex_potential(game, (0, 1), game.colouring({1: "a", 2: "a"}))
    assert before == (0, 0)
    assert after == (0, 1)
    assert after > before


def test_lex_potential_increases_along_coalition_deviations(games):
    checked = 0
    while checked < 1000:
        game = games.dag(games.rng.randint(2, 6), weighted=True)
        order = topological_order(game).order
        s = games.colouring(game)
        base = lex_potential(game, order, s)
        for step in profitable_deviations(game, s, game.n):
            assert lex_potential(game, order, step.apply(s)) > base
            checked += 1


def test_dag_paths_always_converge(games):
    for seed in range(30):
        game = games.dag(games.rng.randint(2, 7), weighted=True)
        sched = Scheduler(mode="coalition", policy="random", seed=seed, max_coalition=min(3, game.n))
        path = run_path(game, games.colouring(game), sched, max_steps=1000)
        assert path.status == CONVERGED
        _assert_chained(game, path)
        assert is_nash(game, path.end)
