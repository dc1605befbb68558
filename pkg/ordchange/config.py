"""Configuration for ordchange"""

import logging
import os
from typing import Any, Dict

from dotenv import load_dotenv

load_dotenv()

# Defaults from environment
DEFAULT_THREADS = max(1, int(os.getenv("ORDCHANGE_THREADS", "1")))
LOG_LEVEL = os.getenv("ORDCHANGE_LOG_LEVEL", "WARNING").upper()
SLOW_TESTS = os.getenv("ORDCHANGE_SLOW_TESTS", "false").lower() in ("1", "true", "yes")

# Detection configuration
DETECTION_CONFIG = {
    "order": int(os.getenv("ORDCHANGE_DEFAULT_ORDER", "3")),
    "alpha": float(os.getenv("ORDCHANGE_DEFAULT_ALPHA", "0.05")),
}

# Benchmark configuration
BENCH_CONFIG = {
    "window": int(os.getenv("ORDCHANGE_WINDOW", "256")),
    "single_trials": int(os.getenv("ORDCHANGE_SINGLE_TRIALS", "1000")),
    "multi_trials": int(os.getenv("ORDCHANGE_MULTI_TRIALS", "500")),
    "full_scale_trials": 10000,
    "output_dir": os.getenv("ORDCHANGE_OUTPUT_DIR", "./data/runs"),
}

# Service configuration
SERVICE_CONFIG = {
    "host": os.getenv("ORDCHANGE_HOST", "127.0.0.1"),
    "port": int(os.getenv("ORDCHANGE_PORT", "8000")),
}


def get_detection_config() -> Dict[str, Any]:
    """Get default detection settings"""
    return {**DETECTION_CONFIG, "threads": DEFAULT_THREADS}


def get_bench_config() -> Dict[str, Any]:
    """Get default benchmark settings"""
    return {**BENCH_CONFIG, "threads": DEFAULT_THREADS}


def configure_logging(verbose: bool = False) -> None:
    """Attach a stream handler to the package logger"""
    logger = logging.getLogger("ordchange")
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL, logging.WARNING)
    logger.setLevel(level)
    if not any(isinstance(h, logging.StreamHandler) and not isinstance(h, logging.NullHandler)
               for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)


def print_config():
    """Print current configuration"""
    print("=== ordchange Configuration ===")
    print(f"Threads: {DEFAULT_THREADS}")
    print(f"Log level: {LOG_LEVEL}")
    print(f"Default order: {DETECTION_CONFIG['order']}")
    print(f"Default alpha: {DETECTION_CONFIG['alpha']}")
    print(f"Window W: {BENCH_CONFIG['window']}")
    print(f"Output directory: {BENCH_CONFIG['output_dir']}")
    print("===============================")
