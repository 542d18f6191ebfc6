import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from frobmean.service import app

client = TestClient(app)


def test_health():
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"status": "ok"}


def test_frob_three_generators():
    r = client.post("/frob", json={"gens": [3, 5, 7]})
    assert r.status_code == 200
    body = r.json()
    assert (body["g"], body["f"], body["method"]) == (4, 19, "rodseth")


def test_frob_other_arities():
    assert client.post("/frob", json={"gens": [2, 3]}).json()["f"] == 6
    assert client.post("/frob", json={"gens": [2, 3, 5, 7]}).json()["g"] == 1


def test_frob_rejects_common_factor():
    r = client.post("/frob", json={"gens": [2, 4, 6]})
    assert r.status_code == 422


def test_frob_rejects_empty():
    assert client.post("/frob", json={"gens": []}).status_code == 422


def test_mean_scan_small():
    r = client.post("/mean-scan", json={"n_values": [2, 1]})
    assert r.status_code == 200
    body = r.json()
    # rows come back sorted by N
    assert [row["N"] for row in body["rows"]] == [1, 2]
    assert body["rows"][0]["F"] == 2 and body["rows"][1]["F"] == 23
    assert body["slope"] is None  # fewer than 3 points


def test_mean_scan_rejects_float_ratio():
    r = client.post("/mean-scan", json={"n_values": [2], "x": ["0.5", "1", "1"]})
    assert r.status_code == 422


def test_fixed_a_scan_small():
    r = client.post("/fixed-a-scan", json={"a_values": [2, 3]})
    assert r.status_code == 200
    rows = r.json()["rows"]
    assert [row["a"] for row in rows] == [2, 3]
    assert rows[0]["F"] == 11 and rows[0]["pair_count"] == 3


def test_partition_check():
    r = client.post("/partition-check", json={"R": 20, "alpha": "3/5"})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] and body["scanned"] > body["base_size"] > 0


def test_partition_rejects_nonpositive_alpha():
    assert client.post("/partition-check", json={"R": 20, "alpha": "-1/2"}).status_code == 422


def test_identities_subset():
    r = client.post("/identities", json={"only": [3]})
    assert r.status_code == 200
    body = r.json()
    assert body["all_passed"] and body["results"][0]["num"] == 3
    assert client.post("/identities", json={"only": [9]}).status_code == 422


def test_lambda_asym_small():
    req = {"r_values": [40], "deltas": [2], "alphas": ["1/2"], "sigma_r": 500,
           "sigma_deltas": [1]}
    r = client.post("/lambda-asym", json=req)
    assert r.status_code == 200
    body = r.json()
    assert len(body["lambda_rows"]) == 1 and len(body["sigma_rows"]) == 1
    row = body["lambda_rows"][0]
    assert row["R"] == 40 and "/" in row["lhs"] or row["lhs"].isdigit()


def test_asym_consts_small():
    r = client.post("/asym-consts", json={"r_grid": [1000], "s1_grid": [50]})
    assert r.status_code == 200
    body = r.json()
    assert len(body["items"]) == 22
    assert abs(body["const_value"] - body["const_target"]) < 1e-12
