"""HTTP service: the same pipeline behind request/response models."""

import pytest
from fastapi.testclient import TestClient

from surfclass.service import app

from conftest import KLEIN_TAPE


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    body = client.get("/").json()
    assert body["service"] == "surfclass"


def test_check_valid(client):
    response = client.post("/check", json={"tape": KLEIN_TAPE})
    assert response.status_code == 200
    assert response.json() == {"ok": True, "violations": []}


def test_check_invalid(client):
    response = client.post("/check", json={"tape": "# 10 (12) - - # - - -"})
    body = response.json()
    assert response.status_code == 200
    assert body["ok"] is False
    kinds = {v["kind"] for v in body["violations"]}
    assert {"AsymmetricGluing", "BoundaryReferenced"} <= kinds


def test_classify_baseline(client):
    response = client.post("/classify", json={"tape": KLEIN_TAPE})
    assert response.status_code == 200
    body = response.json()
    assert body["components"] == [{
        "o": 1, "chi": -1, "b": 1,
        "name": "Klein bottle with 1 boundary component"}]
    assert body["space"] is None


def test_classify_metered_reports_space(client):
    response = client.post("/classify", json={"tape": KLEIN_TAPE,
                                              "engine": "metered"})
    assert response.status_code == 200
    space = response.json()["space"]
    assert space["input_symbols"] == 25
    assert 0 < space["peak_bits"] <= space["budget_bits"]


def test_classify_invalid_surface_422(client):
    response = client.post("/classify", json={"tape": "# 10 (12) - - # - - -"})
    assert response.status_code == 422
    assert response.json()["detail"]["violations"]


def test_classify_bad_tape_400(client):
    response = client.post("/classify", json={"tape": "# zz"})
    assert response.status_code == 400


def test_metered_unionfind_rejected(client):
    response = client.post("/classify", json={
        "tape": KLEIN_TAPE, "engine": "metered", "oracle": "unionfind"})
    assert response.status_code == 400


def test_homeomorphic(client):
    response = client.post("/homeomorphic", json={
        "tape1": KLEIN_TAPE, "tape2": KLEIN_TAPE})
    assert response.status_code == 200
    assert response.json()["homeomorphic"] is True

    torus = client.post("/generate", json={
        "family": "orientable", "genus": 1}).json()["tape"]
    response = client.post("/homeomorphic", json={
        "tape1": KLEIN_TAPE, "tape2": torus})
    body = response.json()
    assert body["homeomorphic"] is False
    assert body["second"] == [{"o": 0, "chi": 0, "b": 0, "name": "torus"}]


def test_generate_union_with_expected(client):
    response = client.post("/generate", json={
        "family": "union",
        "components": [{"family": "orientable", "genus": 1},
                       {"family": "moebius"}],
        "relabel_seed": 3})
    assert response.status_code == 200
    body = response.json()
    assert [c["name"] for c in body["expected"]] == ["torus", "Möbius band"]
    verdict = client.post("/classify", json={"tape": body["tape"]}).json()
    assert verdict["components"] == body["expected"]


def test_generate_rejects_bad_spec(client):
    response = client.post("/generate", json={
        "family": "nonorientable", "genus": 0})
    assert response.status_code == 400


def test_graph_endpoint(client):
    response = client.post("/graph", json={"tape": KLEIN_TAPE, "kind": "K"})
    body = response.json()
    assert body["vertex_count"] == 9
    assert sorted(map(tuple, body["edges"])) == [
        (1, 4), (1, 8), (2, 6), (2, 7), (3, 8), (3, 9), (4, 7), (5, 9)]


def test_double_cover_endpoint(client):
    response = client.post("/double-cover", json={"tape": KLEIN_TAPE})
    tape = response.json()["tape"]
    assert tape.startswith("# 10 (13) 110 (12) 11 (32)")
    # the cover of the cover of a non-orientable surface parses fine
    again = client.post("/double-cover", json={"tape": tape})
    assert again.status_code == 200


def test_invariants_endpoint(client):
    response = client.post("/invariants", json={"tape": KLEIN_TAPE})
    assert response.status_code == 200
    assert response.json()["components"][0]["chi"] == -1
