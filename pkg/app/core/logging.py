import logging
import json
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, Optional
import contextvars

# Context variable para request_id por petición HTTP o por ejecución de la CLI
request_id_var = contextvars.ContextVar("request_id", default=None)

# Contexto de cómputo activo: operación, λ, área...
compute_context_var: contextvars.ContextVar[Optional[Dict[str, Any]]] = contextvars.ContextVar(
    "compute_context", default=None
)


@contextmanager
def compute_context(**fields: Any) -> Iterator[Dict[str, Any]]:
    """
    Añade campos de dominio (operation, lambda, n, ...) a todos los logs emitidos
    dentro del bloque. Los bloques anidados heredan y amplían el contexto exterior.
    """
    merged = {**(compute_context_var.get() or {}), **{k: v for k, v in fields.items() if v is not None}}
    token = compute_context_var.set(merged)
    try:
        yield merged
    finally:
        compute_context_var.reset(token)


class JsonFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        data: Dict[str, Any] = {
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
            "time": self.formatTime(record, "%Y-%m-%dT%H:%M:%S"),
        }
        req_id = getattr(record, "request_id", None) or request_id_var.get()
        if req_id:
            data["request_id"] = req_id
        # Contexto activo + logger.info(..., extra={"context": {...}})
        context = {**(getattr(record, "compute", None) or {}), **(getattr(record, "context", None) or {})}
        if context:
            data["context"] = context
        if record.exc_info:
            data["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(data, ensure_ascii=False, default=str)


class ContextFilter(logging.Filter):
    """Copia request_id y el contexto de cómputo al registro."""

    def filter(self, record: logging.LogRecord) -> bool:
        req_id = request_id_var.get()
        if req_id:
            record.request_id = req_id
        compute = compute_context_var.get()
        if compute:
            record.compute = dict(compute)
        return True


class TextFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        compute = getattr(record, "compute", None)
        if compute:
            text += " " + " ".join(f"{k}={v}" for k, v in compute.items())
        return text


def configure_logging(json_mode: bool = True, level: str = "INFO"):
    """Configura el logger raíz.

    Los logs van a stderr: stdout queda libre para la salida CSV/JSON de la CLI.
    """
    root = logging.getLogger()
    for h in list(root.handlers):
        root.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    if json_mode:
        handler.setFormatter(JsonFormatter())
    else:
        handler.setFormatter(TextFormatter("%(asctime)s [%(levelname)s] %(name)s: %(message)s"))
    handler.addFilter(ContextFilter())
    root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.INFO))


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
