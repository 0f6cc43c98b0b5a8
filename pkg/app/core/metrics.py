"""
Métricas en memoria: tráfico HTTP (middleware) y unidades de cómputo.
"""
import time
from typing import Dict
from threading import Lock

_lock = Lock()
_total_requests = 0
_path_counts: Dict[str, int] = {}
_latency_acc_ms: Dict[str, float] = {}
_latency_max_ms: Dict[str, float] = {}
_latency_samples: Dict[str, int] = {}
_status_counts: Dict[int, int] = {}
_compute_counts: Dict[str, int] = {}
_compute_ms: Dict[str, float] = {}


def record_request(path: str):
    global _total_requests
    with _lock:
        _total_requests += 1
        _path_counts[path] = _path_counts.get(path, 0) + 1


def record_latency(path: str, ms: float):
    with _lock:
        _latency_acc_ms[path] = _latency_acc_ms.get(path, 0.0) + ms
        _latency_samples[path] = _latency_samples.get(path, 0) + 1
        _latency_max_ms[path] = max(_latency_max_ms.get(path, 0.0), ms)


def record_status(status_code: int):
    with _lock:
        _status_counts[status_code] = _status_counts.get(status_code, 0) + 1


def record_compute(name: str, count: int = 1, ms: float = 0.0):
    """Cuenta unidades de cómputo (perímetros evaluados, reducciones, poliominós enumerados)."""
    with _lock:
        _compute_counts[name] = _compute_counts.get(name, 0) + count
        _compute_ms[name] = _compute_ms.get(name, 0.0) + ms


def reset():
    global _total_requests
    with _lock:
        _total_requests = 0
        for d in (_path_counts, _latency_acc_ms, _latency_max_ms, _latency_samples,
                  _status_counts, _compute_counts, _compute_ms):
            d.clear()


def snapshot():
    with _lock:
        avg_latencies = {
            p: total / _latency_samples[p] for p, total in _latency_acc_ms.items() if _latency_samples.get(p)
        }
        return {
            "total_requests": _total_requests,
            "path_counts": dict(_path_counts),
            "avg_latency_ms": avg_latencies,
            "max_latency_ms": dict(_latency_max_ms),
            "status_counts": dict(_status_counts),
            "compute_counts": dict(_compute_counts),
            "compute_ms": dict(_compute_ms),
        }


class LatencyTimer:
    def __init__(self):
        self.start = time.perf_counter()

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.start) * 1000.0
