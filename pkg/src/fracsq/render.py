"""Plain PGM (P2) rendering of Q_n."""

from __future__ import annotations

import numpy as np

from .errors import DigitSetError
from .model import DigitSet
from .oracle import iterate


def render_pgm(D: DigitSet, n: int, limit: int | None = None) -> str:
    """Q_n at one pixel per cell: 0 inside, 255 outside, top row first."""
    if D.dim != 2:
        raise DigitSetError("render supports dim 2 only")
    g = iterate(D, n, limit)
    side = g.side
    image = np.full((side, side), 255, dtype=np.uint8)
    xy = g.coords()
    image[side - 1 - xy[:, 1], xy[:, 0]] = 0
    rows = [" ".join(map(str, row)) for row in image.tolist()]
    return "P2\n{0} {0}\n255\n".format(side) + "\n".join(rows) + "\n"
