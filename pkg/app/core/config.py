"""
Recetas por defecto de las figuras (config/config.json) con respaldo en variables de entorno.
"""
from pathlib import Path
import json
import logging
import os
from typing import Any, Dict, List
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

BASE_DIR = Path(__file__).resolve().parent.parent.parent
CONFIG_PATH = BASE_DIR / "config" / "config.json"
ENV_PATH = BASE_DIR / ".env"

load_dotenv(dotenv_path=ENV_PATH if ENV_PATH.exists() else None)


class AppConfig:
    def __init__(self, path: Path = CONFIG_PATH):
        self.path = path
        self._data: Dict[str, Any] = {}
        self.load()

    def load(self):
        if self.path.exists():
            try:
                with open(self.path, "r", encoding="utf-8") as f:
                    self._data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning(f"[Config] {self.path} ilegible, se usan valores por defecto: {e}")
                self._data = {}
        else:
            self._data = {}

    def _section(self, name: str) -> Dict[str, Any]:
        value = self._data.get(name, {})
        return value if isinstance(value, dict) else {}

    @property
    def default_lambda(self) -> float:
        return float(self._data.get("default_lambda", os.getenv("DEFAULT_LAMBDA", 2.0)))

    @property
    def default_h(self) -> float:
        return float(self._data.get("default_h", os.getenv("DEFAULT_H", 0.41)))

    @property
    def minimizers_n_max(self) -> int:
        return int(self._section("minimizers").get("n_max", 30))

    @property
    def landscape_n_max(self) -> int:
        return int(self._section("landscape").get("n_max", 250))

    @property
    def critlen_lambdas(self) -> List[float]:
        sec = self._section("critlen")
        return [float(sec.get("lambda_min", 2.1)), float(sec.get("lambda_max", 4.0))]

    @property
    def critlen_steps(self) -> int:
        return int(self._section("critlen").get("steps", 20))

    @property
    def critlen_l_max(self) -> int:
        return int(self._section("critlen").get("l_max", 200))

    @property
    def d2_lambdas(self) -> List[float]:
        return [float(x) for x in self._section("d2").get("lambdas", [2.2, 2.5, 3.0, 4.0])]

    @property
    def d2_l_max(self) -> int:
        return int(self._section("d2").get("l_max", 50))


config = AppConfig()
