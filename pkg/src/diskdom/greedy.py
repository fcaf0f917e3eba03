"""Cost-effectiveness greedy for dominating sets (weighted set-cover style)."""

from __future__ import annotations

from typing import Sequence

from .graph import IntersectionGraph


def greedy_dominating(
    g: IntersectionGraph, weights: Sequence[float] | None = None
) -> list[int]:
    """Repeatedly pick the disk minimizing weight / newly-dominated count.

    Ties break toward the lowest id.  Returns a sorted dominating set.
    """
    n = g.n
    if weights is None:
        weights = [1.0] * n
    masks = g.closed_masks
    full = g.full_mask
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best_d = -1
        best_ratio = float("inf")
        for d in range(n):
            gain = (masks[d] & ~covered).bit_count()
            if gain == 0:
                continue
            ratio = weights[d] / gain
            if ratio < best_ratio:
                best_ratio = ratio
                best_d = d
        chosen.append(best_d)
        covered |= masks[best_d]
    return sorted(chosen)
