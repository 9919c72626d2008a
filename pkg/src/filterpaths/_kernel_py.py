"""Pure-Python transfer-step kernel; fallback for the compiled extension.

``advance_row`` is the hot loop of the counting oracle: one row of the
weighted transfer recurrence.  Cells are Python ints, so arithmetic stays
exact at any magnitude.
"""

from __future__ import annotations

BACKEND = "python"


def advance_row(row: list, wr: bytes, wl: bytes) -> list:
    """One transfer step: out[i+1] += wr[i]*row[i], out[i-1] += wl[i]*row[i].

    wr[i] / wl[i] are the rightward / leftward step weights out of cell i
    (0, 1 or 2; 0 means the step is forbidden).  Boundary cells may only
    scatter inward.
    """
    n = len(row)
    out = [0] * n
    for i in range(n):
        v = row[i]
        if not v:
            continue
        w = wr[i]
        if w and i + 1 < n:
            out[i + 1] += v if w == 1 else v + v
        w = wl[i]
        if w and i > 0:
            out[i - 1] += v if w == 1 else v + v
    return out
