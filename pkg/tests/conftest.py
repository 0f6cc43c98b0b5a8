import pytest
from fastapi.testclient import TestClient
from app.main import app
from app.core import metrics
from app.special.zeta import get_engine


@pytest.fixture(scope="session")
def client():
    # Usar context manager para asegurar ejecución de eventos startup/lifespan
    with TestClient(app) as c:
        yield c


@pytest.fixture
def engine2():
    return get_engine(2.0)


@pytest.fixture
def engine_at():
    """Fábrica de motores compartidos por λ."""
    return lambda lam: get_engine(lam)


@pytest.fixture
def clean_metrics():
    metrics.reset()
    yield
    metrics.reset()
