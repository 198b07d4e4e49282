"""
Configuration
Environment-driven settings for the PolyBasis CLI and API
"""

import logging
import os

from dotenv import load_dotenv

# Load .env once for every entry point
load_dotenv()

logger = logging.getLogger(__name__)


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring malformed {name}={raw!r}, using {default}")
        return default


LOG_LEVEL = os.getenv("POLYBASIS_LOG_LEVEL", "WARNING").upper()
API_HOST = os.getenv("POLYBASIS_API_HOST", "0.0.0.0")
API_PORT = _int_setting("POLYBASIS_API_PORT", 8000)
MAX_DEGREE = _int_setting("POLYBASIS_MAX_DEGREE", 64)
ORACLE_MAX_N = _int_setting("POLYBASIS_ORACLE_MAX_N", 12)
CATEGORY_SAMPLE = _int_setting("POLYBASIS_CATEGORY_SAMPLE", 64)


def configure_logging(level: str = "") -> None:
    """Apply the configured root log level"""
    chosen = (level or LOG_LEVEL).upper()
    numeric = getattr(logging, chosen, None)
    if not isinstance(numeric, int):
        logger.warning(f"Unknown log level {chosen!r}, falling back to WARNING")
        numeric = logging.WARNING
    logging.basicConfig(
        level=numeric,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
