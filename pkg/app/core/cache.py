"""
Cache de valores numéricos para los motores zeta.
Cachea por clave entera (desplazamiento i de ζ(λ, i)); nunca expulsa entradas.
"""

from typing import Callable, Dict, Hashable, Optional
from threading import Lock
import logging

logger = logging.getLogger(__name__)


class ValueCache:
    """Cache thread-safe clave -> float, creciente durante la vida del motor."""

    def __init__(self, name: str = "zeta"):
        """
        Args:
            name: Etiqueta usada en los logs (por ejemplo "zeta(2.4)")
        """
        self.name = name
        self._cache: Dict[Hashable, float] = {}
        self._hits = 0
        self._misses = 0
        self._lock = Lock()

    def get(self, key: Hashable) -> Optional[float]:
        """
        Obtiene un valor del cache si existe.

        Returns:
            Valor cacheado o None si no existe
        """
        with self._lock:
            value = self._cache.get(key)
            if value is None:
                self._misses += 1
                logger.debug(f"[Cache] MISS: {self.name}[{key}]")
                return None
            self._hits += 1
            logger.debug(f"[Cache] HIT: {self.name}[{key}]")
            return value

    def set(self, key: Hashable, value: float):
        """
        Almacena un valor. Si la clave ya existe se conserva el primero publicado,
        de modo que dos lecturas de la misma clave devuelven el mismo valor.
        """
        with self._lock:
            if key in self._cache:
                return
            self._cache[key] = value
            logger.debug(f"[Cache] SET: {self.name}[{key}] (total: {len(self._cache)})")

    def get_or_compute(self, key: Hashable, compute: Callable[[], float]) -> float:
        """Devuelve el valor cacheado o lo calcula fuera del lock y lo publica."""
        value = self.get(key)
        if value is not None:
            return value
        self.set(key, compute())
        with self._lock:
            return self._cache[key]

    def clear(self):
        """Limpia todo el cache."""
        with self._lock:
            self._cache.clear()
            self._hits = 0
            self._misses = 0
            logger.info(f"[Cache] Cleared {self.name}")

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)

    def stats(self) -> Dict[str, int]:
        """Retorna estadísticas del cache."""
        with self._lock:
            return {
                "size": len(self._cache),
                "hits": self._hits,
                "misses": self._misses,
            }
