from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
import os
from contextlib import asynccontextmanager
from fastapi.middleware.cors import CORSMiddleware
from .api.routers.perimeter import router as perimeter_router
from .api.routers.minimizers import router as minimizers_router
from .api.routers.landscape import router as landscape_router
from .api.routers.metrics import router as metrics_router
from .core.errors import PolyominoError, VerificationError
from .core.logging import configure_logging, get_logger, request_id_var
from .core import metrics
from .core.metrics import LatencyTimer
from .core.settings import settings
from .special.zeta import get_engine

configure_logging(json_mode=settings.LOG_JSON, level=settings.LOG_LEVEL)
logger = get_logger("app")


@asynccontextmanager
async def lifespan(app: FastAPI):
    # Startup: precalienta el motor de λ = 2
    get_engine(2.0).zeta(1)
    logger.info("Startup complete")
    yield


app = FastAPI(title="Polyomino Nonlocal Perimeter API", version="1.0", lifespan=lifespan)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.middleware("http")
async def instrumentation_middleware(request: Request, call_next):
    request_id = request.headers.get("x-request-id") or os.urandom(6).hex()
    request_id_var.set(request_id)
    # Normaliza la ruta para métricas (quita barra final excepto en raíz)
    raw_path = request.url.path
    path = raw_path if raw_path == "/" else raw_path.rstrip("/")
    metrics.record_request(path)
    timer = LatencyTimer()
    logger.info(f"Request {request.method} {path}")
    status = 500
    try:
        response = await call_next(request)
        status = response.status_code
        response.headers["X-Request-Id"] = request_id
        return response
    finally:
        ms = timer.elapsed_ms()
        metrics.record_latency(path, ms)
        metrics.record_status(int(status))
        logger.info(f"Completed {request.method} {path} {status} {ms:.2f}ms")
        request_id_var.set(None)


@app.exception_handler(VerificationError)
async def verification_error_handler(request: Request, exc: VerificationError):
    logger.error(f"[API] violación verificada: {exc}")
    return JSONResponse({"detail": str(exc), "error": type(exc).__name__}, status_code=409)


@app.exception_handler(PolyominoError)
async def polyomino_error_handler(request: Request, exc: PolyominoError):
    return JSONResponse({"detail": str(exc), "error": type(exc).__name__}, status_code=422)


@app.get("/health")
async def health():
    return {"status": "ok"}

app.include_router(perimeter_router)
app.include_router(minimizers_router)
app.include_router(landscape_router)
app.include_router(metrics_router)
