def test_health(client) -> None:
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_index(client) -> None:
    body = client.get("/api").json()
    assert body["endpoints"]["matrix"] == "/cob/matrix"


def test_matrix(client) -> None:
    response = client.post("/cob/matrix", json={"source": "monomial", "target": "laguerre", "n": 3, "m": 1})
    assert response.status_code == 200
    body = response.json()
    assert body["dim"] == 3
    assert body["domain"] == "monomial[1..3]"
    assert body["range"] == "laguerre:desc[1..3]"
    assert body["entries"] == [["-1", "-4", "-18"], ["0", "2", "18"], ["0", "0", "-6"]]
    assert body["decimal"] is None


def test_matrix_with_decimal(client) -> None:
    response = client.post("/cob/matrix", json={"source": "zernike", "target": "x", "n": 4, "decimal": 3})
    body = response.json()
    assert body["range"] == "monomial[0..4 step 2]"
    # R_4^0 = 6x^4 - 6x^2 + 1
    assert [row[2] for row in body["entries"]] == ["1", "-6", "6"]
    assert body["decimal"][1][2] == "-6.000"


def test_matrix_rejects_bad_input(client) -> None:
    bad_descriptor = client.post("/cob/matrix", json={"source": "b:wide", "target": "l", "n": 3})
    assert bad_descriptor.status_code == 400
    assert "flag" in bad_descriptor.json()["detail"]
    assert client.post("/cob/matrix", json={"source": "b", "target": "l", "n": -1}).status_code == 422
    assert client.post("/cob/matrix", json={"source": "b", "target": "l", "n": 3, "route": "x"}).status_code == 400


def test_matrix_window_from_descriptor(client) -> None:
    response = client.post("/cob/matrix", json={"source": "chebyshev_t@5,3", "target": "x"})
    assert response.status_code == 200
    assert response.json()["entries"] == [["4", "-20"], ["0", "16"]]
    assert client.post("/cob/matrix", json={"source": "b", "target": "l"}).status_code == 400


def test_convert(client) -> None:
    response = client.post("/cob/convert", json={"polynomial": "16x^7-12x^5+5x^4+3x^2", "target": "b:asc"})
    assert response.status_code == 200
    (part,) = response.json()["parts"]
    assert part["coords"] == ["1/7", "3/7", "1", "11/7", "6/7", "12"]


def test_convert_splits_parity(client) -> None:
    response = client.post(
        "/cob/convert",
        json={"polynomial": "16x^7-12x^5+5x^4+3x^2", "target": "zernike:asc", "decimal": 1},
    )
    parts = response.json()["parts"]
    assert [p["coords"] for p in parts] == [["-1", "9"], ["2", "2"]]
    assert parts[0]["decimal"] == ["-1.0", "9.0"]


def test_convert_rejects_zero(client) -> None:
    response = client.post("/cob/convert", json={"polynomial": "0", "target": "b"})
    assert response.status_code == 400


def test_verify(client) -> None:
    body = client.post("/cob/verify", json={"suite": "fixtures"}).json()
    assert body["passed"] is True and body["failed"] == 0
    assert client.post("/cob/verify", json={"suite": "everything"}).status_code == 400


def test_families(client) -> None:
    body = client.get("/cob/families").json()
    names = {family["name"]: family for family in body["families"]}
    assert names["zernike"]["definite_parity"] is True
    assert names["zernike"]["step"] == 2
    assert names["shifted_legendre"]["aliases"] == ["p*"]
    assert "case-studies" in body["suites"]
