import os

DEFAULT_CELL_LIMIT = 10**8

# Largest base allowed for coordinates. Keeps flat grid keys and coordinate
# differences comfortably inside int64 for dim <= 3.
MAX_BASE = 2**20


def cell_limit(override: int | None = None) -> int:
    """Cell budget: explicit override, else $FRACSQ_CELL_LIMIT, else 10**8."""
    if override is not None:
        return int(override)
    raw = os.environ.get("FRACSQ_CELL_LIMIT")
    if raw:
        return int(float(raw))
    return DEFAULT_CELL_LIMIT
