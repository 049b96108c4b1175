import math

import pytest
from fastapi.testclient import TestClient

from circumcone.service import app

client = TestClient(app)

BASE = {"n": 2, "vectors": [[1, 0], [0, 1]]}


def test_health():
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_circum_endpoint():
    r = client.post("/circum", json={"base": BASE})
    assert r.status_code == 200
    body = r.json()
    assert body["d"] == [-0.5, -0.5]
    assert body["norm_sq"] == 0.5
    assert body["spectral_lo"] <= body["norm_sq"] <= body["spectral_hi"]


def test_depth_endpoint_infinite_encoding():
    r = client.post("/depth", json={"base": BASE, "direction": [-1, -1]})
    assert r.status_code == 200
    assert r.json()["rho"] == {"value": None, "infinite": True}


def test_depth_requires_exactly_one_geometry():
    r = client.post("/depth", json={"direction": [1, 0]})
    assert r.status_code == 422
    r = client.post("/depth", json={
        "base": BASE, "cone": {"variant": "soc", "n": 3},
        "direction": [1, 0]})
    assert r.status_code == 422


def test_step_endpoint():
    problem = {"type": "linf", "A": [[1, 0], [0, 1]], "b": [2, 2],
               "C": [[1, 0], [0, 1]], "d": [0, 0], "tau": 1.0}
    r = client.post("/step", json={"problem": problem, "point": [1, 1]})
    assert r.status_code == 200
    assert r.json()["norm_sq"] == 0.5


def test_zoo_endpoint():
    r = client.post("/zoo", json={"cone": {"variant": "psd", "n": 3}})
    assert r.status_code == 200
    body = r.json()
    assert body["norm_sq"] == pytest.approx(1 / 3)
    assert body["jordan"] == pytest.approx(1 / 3)


def test_bregman_endpoint():
    r = client.post("/bregman", json={
        "h": {"family": "pnorm", "p": 4.0}, "base": BASE})
    assert r.status_code == 200
    assert r.json()["kappa"] == pytest.approx(0.25)


def test_fcpg_endpoint_returns_csv():
    problem = {"type": "linf", "A": [[1, 0], [0, 1]], "b": [2, 2],
               "C": [[1, 0], [0, 1]], "d": [0, 0], "tau": 1.0}
    r = client.post("/fcpg", json={"problem": problem, "x0": [0, 0],
                                   "max_iter": 5})
    assert r.status_code == 200
    assert r.json()["csv"].startswith("iter,objective")


def test_verify_endpoint():
    r = client.post("/verify", json={"suite": "weyl", "seed": 0})
    assert r.status_code == 200
    assert r.json()["ok"] is True


def test_figure_endpoint():
    r = client.post("/figure", json={"name": "soc"})
    assert r.status_code == 200
    assert r.json()["csv"].startswith("series,x,y,z")


def test_domain_error_maps_to_400():
    dup = {"n": 2, "vectors": [[1, 0], [2, 0]]}
    r = client.post("/circum", json={"base": dup})
    assert r.status_code == 400
    assert r.json()["detail"]["error"] == "DuplicateGenerator"


def test_malformed_payload_maps_to_422():
    r = client.post("/circum", json={"base": {"n": 2}})
    assert r.status_code == 422
