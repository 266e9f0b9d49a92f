"""
Logging configuration for etabench
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[1;31m",
}
RESET = "\033[0m"

# Module loggers are named src.<package>.<module> and propagate here
PACKAGE_LOGGER = "src"


class ColorFormatter(logging.Formatter):
    """Formatter that colours the level name"""

    def __init__(self, fmt: str, color: bool = True):
        super().__init__(fmt)
        self.color = color

    def format(self, record: logging.LogRecord) -> str:
        if not self.color:
            return super().format(record)
        original = record.levelname
        record.levelname = f"{LEVEL_COLORS.get(record.levelno, '')}{original}{RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def setup_logger(name=PACKAGE_LOGGER, level=logging.WARNING, log_dir: Optional[Path] = None,
                 color: bool = True, stream=None):
    """Setup console logging and, when log_dir is given, a detailed log file"""

    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG if log_dir is not None else level)

    # Clear existing handlers
    logger.handlers.clear()

    detailed_formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
    )

    stream = sys.stderr if stream is None else stream
    use_color = color and hasattr(stream, "isatty") and stream.isatty()
    simple_formatter = ColorFormatter('%(levelname)s: %(message)s', color=use_color)

    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        file_handler = logging.FileHandler(
            log_dir / f"etabench_{timestamp}.log",
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        logger.addHandler(file_handler)

    # Console goes to stderr; stdout carries CSV and summaries
    console_handler = logging.StreamHandler(stream)
    console_handler.setLevel(level)
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    logger.info("Logger initialized")
    return logger
