"""JSON API behaviour, pinned payloads included."""
import pytest
from fastapi.testclient import TestClient

from cycdelta.service import app

client = TestClient(app)

MINI = """\
!complete 1-8
1 1 C1 : (1)
2 1 C2 : (1,2)
3 1 C3 : (1,2,3)
4 1 C4 : (1,2,3,4)
4 2 C2xC2 : (1,2) ; (3,4)
5 1 C5 : (1,2,3,4,5)
6 1 S3 : (1,2,3) ; (1,2)
6 2 C6 : (1,2,3)(4,5)
7 1 C7 : (1,2,3,4,5,6,7)
8 1 C8 : (1,2,3,4,5,6,7,8)
8 2 C4xC2 : (1,2,3,4) ; (5,6)
8 3 D8 : (1,2,3,4) ; (1,3)
8 4 Q8 : (1,2,3,4)(5,8,7,6) ; (1,5,3,7)(2,6,4,8)
8 5 C2xC2xC2 : (1,2) ; (3,4) ; (5,6)
"""


def test_delta_d8():
    resp = client.post("/delta", json={"group": "D8"})
    assert resp.status_code == 200
    assert resp.json() == {
        "name": "D8",
        "order": 8,
        "cyclic_count": 7,
        "delta": 1,
        "i2": 6,
        "bound_ok": True,
        "equality_case": True,
    }


def test_delta_product_expression():
    resp = client.post("/delta", json={"group": "C3xC4"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["order"] == 12
    assert body["delta"] == 12 - 6  # C12 has six cyclic subgroups


def test_delta_semidirect_expression():
    resp = client.post("/delta", json={"group": "C5:C4@2"})
    assert resp.status_code == 200
    assert resp.json()["delta"] == 8


def test_delta_parse_error():
    resp = client.post("/delta", json={"group": "NOPE"})
    assert resp.status_code == 400
    assert resp.json()["detail"] == "expected a group atom at position 0 in 'NOPE'"


def test_census_text_default_catalog():
    resp = client.post("/census", json={"delta_max": 1})
    assert resp.status_code == 200
    report = resp.json()["report"]
    assert report.startswith("Four groups with difference 1\n")
    assert "D8 = [ 8, 3 ]" in report


def test_census_inline_catalog_partial():
    resp = client.post(
        "/census", json={"catalog_text": MINI, "delta_max": 2, "format": "text"}
    )
    assert resp.status_code == 200
    assert "difference 2 (partial)" in resp.json()["report"]


def test_census_structured_format():
    resp = client.post(
        "/census",
        json={"catalog_text": MINI, "delta_max": 1, "format": "structured"},
    )
    assert resp.status_code == 200
    import json

    data = json.loads(resp.json()["report"])
    assert data["buckets"][0]["count"] == 4


def test_census_rejects_bad_catalog():
    resp = client.post(
        "/census", json={"catalog_text": "4 1 C4 (1,2,3,4)\n", "delta_max": 1}
    )
    assert resp.status_code == 400
    assert "missing ' : '" in resp.json()["detail"]


def test_census_delta_max_range():
    assert client.post("/census", json={"delta_max": 0}).status_code == 422
    assert client.post("/census", json={"delta_max": 129}).status_code == 422


def test_verify_mini_catalog_clean():
    resp = client.post("/verify", json={"catalog_text": MINI})
    assert resp.status_code == 200
    body = resp.json()
    assert body == {"bound": [], "miller": [], "star": [], "clean": True}


def test_validate_flags_bad_entry():
    resp = client.post(
        "/catalog/validate", json={"catalog_text": "8 1 C4 : (1,2,3,4)\n"}
    )
    assert resp.status_code == 200
    (diag,) = resp.json()["diagnostics"]
    assert "closure has 4 elements, declared 8" in diag


def test_validate_bundled_catalog_is_clean():
    resp = client.post("/catalog/validate", json={})
    assert resp.status_code == 200
    assert resp.json()["diagnostics"] == []


def test_oracle_order_eight():
    resp = client.get("/oracle/8")
    assert resp.status_code == 200
    body = resp.json()
    assert body["order"] == 8
    assert body["count"] == 5
    assert sorted(c["delta"] for c in body["classes"]) == [0, 1, 2, 3, 4]
    censuses = [c["census"] for c in body["classes"]]
    assert {"1": 1, "2": 5, "4": 2} in censuses  # D8


def test_oracle_order_out_of_range():
    resp = client.get("/oracle/11")
    assert resp.status_code == 400
    assert "capped at order 10" in resp.json()["detail"]
