#!/usr/bin/env python3
"""
Workbench configuration
Reads tolerances, precision and desk-scale caps from the environment (.env supported)
"""

import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


def _env_number(name, default, cast):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        logger.warning(f"⚠️ {name}={raw!r} is not a valid number, using {default}")
        return default


LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO").upper()

# Numeric constructions (ℓ₂ certificates, quartic preimage solve)
NUMERIC_TOLERANCE = _env_number("APOLAR_TOLERANCE", 1e-9, float)
WORKING_DIGITS = _env_number("APOLAR_WORKING_DIGITS", 30, int)

# Random-point batteries
DEFAULT_SEED = _env_number("APOLAR_SEED", 20240601, int)

# Desk-scale caps
MAX_BETTI_VARIABLES = _env_number("APOLAR_MAX_BETTI_N", 5, int)
MAX_VARIABLES = _env_number("APOLAR_MAX_N", 16, int)

# Deterministic SVG ids
SVG_HASHSALT = os.environ.get("APOLAR_SVG_SALT", "symmetric-cubic-atlas")
