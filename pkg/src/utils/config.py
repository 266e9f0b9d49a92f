"""
Runtime settings read from the environment
"""

import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

DEFAULT_RECURSION_LIMIT = 20000

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    color: bool = True
    log_dir: Optional[Path] = None
    log_level: int = logging.WARNING
    recursion_limit: int = DEFAULT_RECURSION_LIMIT

    @classmethod
    def from_env(cls, environ=None) -> "Settings":
        """Build settings from ETABENCH_* environment variables"""
        env = os.environ if environ is None else environ

        color = env.get("ETABENCH_COLOR", "1").strip() != "0"

        log_dir = env.get("ETABENCH_LOG_DIR")
        log_dir = Path(log_dir) if log_dir else None

        level_name = env.get("ETABENCH_LOG_LEVEL", "WARNING").strip().upper()
        level = logging.getLevelName(level_name)
        if not isinstance(level, int):
            level = logging.WARNING

        try:
            limit = int(env.get("ETABENCH_RECURSION", DEFAULT_RECURSION_LIMIT))
        except ValueError:
            limit = DEFAULT_RECURSION_LIMIT

        return cls(color=color, log_dir=log_dir, log_level=level, recursion_limit=limit)

    def apply_recursion_limit(self) -> int:
        """Raise the interpreter recursion limit; never lowers it"""
        current = sys.getrecursionlimit()
        if self.recursion_limit > current:
            sys.setrecursionlimit(self.recursion_limit)
            logger.debug(f"Recursion limit raised from {current} to {self.recursion_limit}")
        return sys.getrecursionlimit()


def ensure_recursion_limit(limit: int = DEFAULT_RECURSION_LIMIT) -> int:
    return Settings(recursion_limit=limit).apply_recursion_limit()
