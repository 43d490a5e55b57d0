from __future__ import annotations

import inspect

import pytest
from fastapi.testclient import TestClient

from coordgames.core.settings import Settings
from coordgames.oracle.fixtures import NO_NASH_TEXT, SWAP_CYCLE_TEXT
from coordgames.web.app import create_app
from coordgames.web.deps import get_settings
from coordgames.web.routers.games import router as games_router


@pytest.fixture
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    assert client.get("/health").json() == {"ok": True}
    assert client.get("/ready").json() == {"ready": True}


def test_classify(client):
    r = client.post("/games/classify", json={"game": SWAP_CYCLE_TEXT})
    assert r.status_code == 200
    body = r.json()
    assert body["n"] == 2
    assert body["is_single_simple_cycle"] is True
    assert body["is_dag"] is False


def test_payoff(client):
    r = client.post("/games/payoff", json={"game": SWAP_CYCLE_TEXT, "colouring": "1 c\n2 c\n"})
    assert r.status_code == 200
    assert r.json() == {"payoffs": {"1": 1, "2": 1}, "social_welfare": 2}


def test_check(client):
    r = client.post("/games/check", json={"game": SWAP_CYCLE_TEXT, "colouring": "1 a\n2 b\n", "level": "strong"})
    assert r.status_code == 200
    body = r.json()
    assert body["holds"] is False
    assert body["witness"] == {"coalition": [1, 2], "old": ["a", "b"], "new": ["c", "c"], "deltas": [1, 1]}

    r = client.post("/games/check", json={"game": SWAP_CYCLE_TEXT, "colouring": "1 a\n2 b\n"})
    assert r.json() == {"level": "nash", "holds": True, "witness": None}


def test_solve(client):
    r = client.post("/games/solve", json={"game": SWAP_CYCLE_TEXT})
    assert r.status_code == 200
    assert r.json() == {"method": "cycle", "found": True, "colouring": {"1": "c", "2": "c"}, "steps": None}

    r = client.post("/games/solve", json={"game": NO_NASH_TEXT})
    assert r.json()["found"] is False
    assert r.json()["method"] == "brute"


def test_enumerate(client):
    r = client.post("/games/enumerate", json={"game": SWAP_CYCLE_TEXT, "kind": "nash"})
    assert r.status_code == 200
    body = r.json()
    assert body["count"] == 2
    assert body["colourings"] == [{"1": "a", "2": "b"}, {"1": "c", "2": "c"}]


def test_bad_input_is_422(client):
    r = client.post("/games/classify", json={"game": "node x\n"})
    assert r.status_code == 422
    assert r.json()["detail"].startswith("line 1:")

    r = client.post("/games/solve", json={"game": NO_NASH_TEXT, "method": "cycle"})
    assert r.status_code == 422

    r = client.post("/games/enumerate", json={"game": SWAP_CYCLE_TEXT, "kind": "weak"})
    assert r.status_code == 422


def test_budget_is_413():
    app = create_app()
    app.dependency_overrides[get_settings] = lambda: Settings(state_budget=10)
    with TestClient(app) as c:
        r = c.post("/games/enumerate", json={"game": NO_NASH_TEXT})
    assert r.status_code == 413
    assert "exceeds state budget 10" in r.json()["detail"]


def test_game_routes_are_sync_handlers():
    for route in games_router.routes:
        assert not inspect.iscoroutinefunction(route.endpoint), route.path
