from app.core import metrics


def test_metrics_endpoint(client):
    # Realiza una petición para generar métricas
    r1 = client.get("/health")
    assert r1.status_code == 200
    # Verifica header X-Request-Id
    assert r1.headers.get("X-Request-Id")
    r2 = client.get("/metrics")
    assert r2.status_code == 200
    data = r2.json()
    assert data["total_requests"] >= 2  # /health + /metrics cuentan
    assert "/health" in data["path_counts"]
    assert "/metrics" in data["path_counts"]
    assert "avg_latency_ms" in data
    assert "200" in data["status_counts"]
    # motores zeta vivos (el lifespan precalienta λ = 2)
    assert any(e["lambda"] == 2.0 for e in data["zeta_engines"])


def test_request_id_is_propagated(client):
    r = client.get("/health", headers={"X-Request-Id": "abc123"})
    assert r.headers["X-Request-Id"] == "abc123"


def test_compute_counters(clean_metrics):
    metrics.record_compute("perimeter")
    metrics.record_compute("perimeter", count=3, ms=2.5)
    snap = metrics.snapshot()
    assert snap["compute_counts"]["perimeter"] == 4
    assert snap["compute_ms"]["perimeter"] == 2.5


def test_latency_aggregation(clean_metrics):
    metrics.record_latency("/x", 10.0)
    metrics.record_latency("/x", 20.0)
    snap = metrics.snapshot()
    assert snap["avg_latency_ms"]["/x"] == 15.0
    assert snap["max_latency_ms"]["/x"] == 20.0
