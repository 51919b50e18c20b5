"""CSV writers for the data behind the four figures.

Headers:

    1: p,theta,betaE_A,betaE_B,negativity,thermal_order,entangled
    2: p,theta,beta1E,beta2E,gap      then a footer line "# sup_gap,<value>"
    3: p,q_threshold,q_equals_p,q_min_mixed
    4: d,betaE_bound
"""

from __future__ import annotations

import csv
import io

from .bounds import figure3_rows, figure4_rows
from .entangler import FIGURE1_HEADER, figure1_grid
from .protocol import FRONTIER_HEADER, temperature_gap_frontier

FIGURE3_HEADER = ("p", "q_threshold", "q_equals_p", "q_min_mixed")
FIGURE4_HEADER = ("d", "betaE_bound")

DEFAULT_GRID = {1: 101, 2: 200, 3: 101, 4: 50}


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _to_csv(header, rows, footer: list[tuple] = ()) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(row[k]) for k in header])
    for line in footer:
        w.writerow([_fmt(v) for v in line])
    return buf.getvalue()


def figure_csv(n: int, grid: int | None = None) -> str:
    """CSV text for figure ``n``; ``grid`` is steps per axis (figs 1-3) or ``d_max`` (fig 4)."""
    if n not in DEFAULT_GRID:
        raise ValueError("figure number must be 1, 2, 3 or 4")
    g = DEFAULT_GRID[n] if grid is None else grid
    if n == 1:
        return _to_csv(FIGURE1_HEADER, figure1_grid(g, g))
    if n == 2:
        rows, sup = temperature_gap_frontier(g, g)
        return _to_csv(FRONTIER_HEADER, rows, [("# sup_gap", sup)])
    if n == 3:
        return _to_csv(FIGURE3_HEADER, figure3_rows(g))
    if g < 3:
        raise ValueError("figure 4 needs d_max >= 3")
    return _to_csv(FIGURE4_HEADER, figure4_rows(g))
