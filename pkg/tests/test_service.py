import threading

import pytest
from fastapi.testclient import TestClient

from sdg_interactions.config import AppConfig
from sdg_interactions.service import create_app
from sdg_interactions.store import Store

ADMIN = {"email": "admin@example.org", "password": "admin-pw"}


def make_app(tmp_path, **overrides):
    settings = dict(
        store_path=str(tmp_path / "store.sqlite"),
        batch_size=20,
        goal_min=2,
        rng_seed=42,
        admin_name="Chief Curator",
        admin_email=ADMIN["email"],
        admin_password=ADMIN["password"],
    )
    settings.update(overrides)
    return create_app(AppConfig(**settings))


@pytest.fixture
def client(tmp_path):
    with TestClient(make_app(tmp_path)) as c:
        yield c


def login(client, email, password):
    r = client.post("/api/login", json={"email": email, "password": password})
    assert r.status_code == 200, r.text
    return {"Authorization": f"Bearer {r.json()['token']}"}


def signup_payload(**overrides):
    payload = {
        "name": "Juan dela Cruz",
        "email": "juan@example.org",
        "password": "pw-12345",
        "primary_affiliation": "UP Diliman",
        "secondary_affiliation": "",
        "education": "master",
        "experience": ">10",
        "acknowledge": True,
        "curator": ADMIN["email"],
    }
    payload.update(overrides)
    return payload


def approved_respondent(client, email="juan@example.org"):
    r = client.post("/api/signup", json=signup_payload(email=email))
    assert r.status_code == 201, r.text
    user_id = r.json()["user"]["id"]
    admin = login(client, **ADMIN)
    assert client.post(f"/api/users/{user_id}/approve", headers=admin).status_code == 200
    return login(client, email, "pw-12345")


def test_signup_creates_pending_user(client):
    r = client.post("/api/signup", json=signup_payload())
    assert r.status_code == 201
    assert r.json()["user"]["status"] == "pending"
    # pending users cannot log in yet
    r = client.post("/api/login", json={"email": "juan@example.org", "password": "pw-12345"})
    assert r.status_code == 403


def test_signup_validation_error_shape(client):
    r = client.post("/api/signup", json=signup_payload(experience=""))
    assert r.status_code == 422
    body = r.json()
    assert body["code"] == "missing_field"
    assert "message" in body and "detail" in body


def test_pending_queue_and_approval(client):
    r = client.post("/api/signup", json=signup_payload())
    user_id = r.json()["user"]["id"]
    admin = login(client, **ADMIN)
    pending = client.get("/api/users/pending", headers=admin).json()["users"]
    assert [u["id"] for u in pending] == [user_id]
    notes = client.get("/api/notifications", headers=admin).json()["notifications"]
    assert notes and notes[0]["kind"] == "pending_approval"
    assert client.post(f"/api/users/{user_id}/approve", headers=admin).status_code == 200
    assert client.get("/api/users/pending", headers=admin).json()["users"] == []
    # approval needs the admin role
    user = login(client, "juan@example.org", "pw-12345")
    r = client.post(f"/api/users/{user_id}/approve", headers=user)
    assert r.status_code in (403, 409)


def test_unauthorized_mutations_rejected(client):
    assert client.post("/api/goals/select", json={"goals": [3, 6]}).status_code == 401
    assert client.get("/api/users/pending").status_code == 401
    bad = {"Authorization": "Bearer bogus"}
    assert client.post("/api/batch", headers=bad).status_code == 401


def test_survey_flow_end_to_end(client):
    user = approved_respondent(client)
    r = client.post("/api/goals/select", json={"goals": [3, 6]}, headers=user)
    assert r.status_code == 200 and r.json()["goals"] == [3, 6]

    r = client.post("/api/batch", json={}, headers=user)
    assert r.status_code == 200
    batch = r.json()
    assert len(batch["assignments"]) == 20 and not batch["exhausted"]
    pairs = [(a["a"], a["b"]) for a in batch["assignments"]]

    # negative without explanation is a 422 problem detail
    a, b = pairs[0]
    r = client.post("/api/answers", json={"a": a, "b": b, "score": -1}, headers=user)
    assert r.status_code == 422
    assert r.json()["code"] == "explanation_required"

    r = client.post(
        "/api/answers",
        json={"a": a, "b": b, "score": -2, "explanation": "conflicting funding"},
        headers=user,
    )
    assert r.status_code == 200
    assert r.json()["assignment"]["state"] == "answered"

    # skip the second pair, then answer it
    a2, b2 = pairs[1]
    r = client.post("/api/answers/skip", json={"a": a2, "b": b2}, headers=user)
    assert r.json()["assignment"]["state"] == "skipped"
    r = client.post("/api/answers", json={"a": a2, "b": b2, "score": 3}, headers=user)
    assert r.status_code == 200

    # finalize blocked while pairs remain unanswered
    r = client.post("/api/answers/finalize", headers=user)
    assert r.status_code == 409
    assert r.json()["code"] == "unanswered_remaining"

    for a, b in pairs[2:]:
        r = client.post("/api/answers", json={"a": a, "b": b, "score": 1}, headers=user)
        assert r.status_code == 200

    progress = client.get("/api/assignments", headers=user).json()["progress"]
    assert progress["total"] == 20 and progress["answered"] == 20

    r = client.post("/api/answers/finalize", headers=user)
    assert r.json()["finalized"] == 20

    # finalized answers are immediately visible in public results
    stats = client.get("/api/stats", params={"method": "expert"}).json()
    assert stats["evaluated"] == 20
    r = client.post("/api/answers", json={"a": a, "b": b, "score": 2}, headers=user)
    assert r.status_code == 409 and r.json()["code"] == "already_finalized"


def test_graph_is_public_and_styled(client):
    r = client.get("/api/graph", params={"method": "expert", "a": 3, "b": 6})
    assert r.status_code == 200
    doc = r.json()
    assert len(doc["nodes"]) == 13 + 8
    assert len(doc["edges"]) == 13 * 8
    assert all(e["hue"] == "gray" and e["status"] == "unevaluated" for e in doc["edges"])
    colors = {n["color"] for n in doc["nodes"]}
    assert len(colors) == 2


def test_graph_rejects_unknown_method_and_goal(client):
    assert client.get("/api/graph", params={"method": "psychic", "a": 1, "b": 2}).status_code == 400
    assert client.get("/api/graph", params={"method": "expert", "a": 1, "b": 99}).status_code == 404


def test_config_endpoint(client):
    doc = client.get("/api/config").json()
    assert doc["goal_min"] == 2
    assert doc["batch_size"] == 20
    assert doc["scale_labels"]["-3"] == "cancelling"
    assert doc["scale_labels"]["3"] == "indivisible"


def test_import_indicator_results(client, fixtures_dir):
    body = (fixtures_dir / "indicator_classes.csv").read_text()
    r = client.post("/api/import/indicator", content=body)
    assert r.status_code == 401  # needs an admin session
    admin = login(client, **ADMIN)
    r = client.post("/api/import/indicator", content=body, headers=admin)
    assert r.status_code == 200
    assert r.json()["loaded"] == 528
    version = r.json()["version"]

    stats = client.get("/api/stats", params={"method": "indicator"}).json()
    assert stats["synergy"] == 292 and stats["trade_off"] == 236

    # idempotent re-import: same content, same version stamp
    r = client.post("/api/import/indicator", content=body, headers=admin)
    assert r.json() == {"loaded": 528, "version": version}


def test_import_rejects_malformed_and_rolls_back(client, fixtures_dir):
    admin = login(client, **ADMIN)
    good = (fixtures_dir / "indicator_classes.csv").read_text()
    assert client.post("/api/import/indicator", content=good, headers=admin).status_code == 200
    bad = good + "18.1,18.2,synergy,1,0,0\n"
    r = client.post("/api/import/indicator", content=bad, headers=admin)
    assert r.status_code == 400
    # prior import is untouched
    stats = client.get("/api/stats", params={"method": "indicator"}).json()
    assert stats["synergy"] == 292
    r = client.post("/api/import/indicator", content="x,y\n1,2\n", headers=admin)
    assert r.status_code == 400 and r.json()["code"] == "format_error"


def test_import_raw_timeseries_runs_pipeline(client, fixtures_dir):
    admin = login(client, **ADMIN)
    body = (fixtures_dir / "indicators_sample.csv").read_text()
    r = client.post("/api/import/indicator", content=body, headers=admin)
    assert r.status_code == 200
    assert r.json()["loaded"] == 1
    doc = client.get("/api/results/positive", params={"method": "indicator"}).json()
    assert doc["pairs"] == [{"a": "3.1", "b": "3.2", "value": "synergy"}]


def test_durability_across_restart(tmp_path, fixtures_dir):
    with TestClient(make_app(tmp_path)) as client:
        user = approved_respondent(client)
        client.post("/api/goals/select", json={"goals": [3, 6]}, headers=user)
        pairs = [
            (a["a"], a["b"])
            for a in client.post("/api/batch", json={}, headers=user).json()["assignments"]
        ]
        for a, b in pairs:
            client.post("/api/answers", json={"a": a, "b": b, "score": 2}, headers=user)
        client.post("/api/answers/finalize", headers=user)
        admin = login(client, **ADMIN)
        body = (fixtures_dir / "indicator_classes.csv").read_text()
        client.post("/api/import/indicator", content=body, headers=admin)
        before_stats = client.get("/api/stats", params={"method": "expert"}).text
        before_synth = client.get("/api/results/synthesis").text

    with TestClient(make_app(tmp_path)) as client:  # same sqlite file, fresh process state
        assert client.get("/api/stats", params={"method": "expert"}).text == before_stats
        assert client.get("/api/results/synthesis").text == before_synth
        stats = client.get("/api/stats", params={"method": "indicator"}).json()
        assert stats["synergy"] == 292


def test_concurrent_batches_are_disjoint(tmp_path):
    app = make_app(tmp_path, batch_size=10)
    with TestClient(app) as client:
        admin = login(client, **ADMIN)
        headers = []
        for i in range(8):
            email = f"worker{i}@example.org"
            r = client.post("/api/signup", json=signup_payload(email=email))
            user_id = r.json()["user"]["id"]
            client.post(f"/api/users/{user_id}/approve", headers=admin)
            h = login(client, email, "pw-12345")
            client.post("/api/goals/select", json={"goals": [3, 6]}, headers=h)
            headers.append(h)

        results = [None] * 8
        errors = []

        def run(i):
            try:
                r = client.post("/api/batch", json={}, headers=headers[i])
                assert r.status_code == 200, r.text
                results[i] = [(a["a"], a["b"]) for a in r.json()["assignments"]]
            except Exception as exc:  # pragma: no cover - diagnostic
                errors.append(exc)

        threads = [threading.Thread(target=run, args=(i,)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        seen = set()
        for batch in results:
            assert batch is not None and len(batch) == 10
            for pair in batch:
                assert pair not in seen
                seen.add(pair)


def test_results_targets_document(client):
    doc = client.get("/api/results/targets", params={"method": "expert"}).json()
    assert doc["counts"] == {"beautiful": 0, "ugly": 0, "unevaluated": 169}
    assert len(doc["targets"]) == 169
    assert all(t["color"] == "black" for t in doc["targets"])
