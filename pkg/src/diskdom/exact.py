"""Exact minimum-weight dominating set by branch and bound.

Ground-truth oracle for small instances.  Branches on including/excluding
each disk in id order; prunes with a lower bound built from undominated
vertices whose candidate dominator sets are pairwise disjoint.  Ties between
optimal solutions break toward the lexicographically smallest sorted id
tuple, so results are reproducible.
"""

from __future__ import annotations

from typing import Sequence

from .graph import IntersectionGraph

DEFAULT_MAX_VERTICES = 24

_COST_EPS = 1e-12


class InstanceTooLargeError(ValueError):
    """Instance exceeds the configured exact-solver cap."""


def exact_min_dominating(
    g: IntersectionGraph,
    weights: Sequence[float] | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[list[int], float]:
    """Return (ids, cost) of a minimum total-weight dominating set.

    Runtime is exponential in the worst case; instances larger than
    ``max_vertices`` are refused.
    """
    n = g.n
    if n > max_vertices:
        raise InstanceTooLargeError(
            f"exact solver capped at {max_vertices} vertices, got {n}"
        )
    if weights is None:
        weights = [1.0] * n
    w = [float(x) for x in weights]

    masks = g.closed_masks
    full = g.full_mask

    # future_cover[i] = union of closed neighborhoods of disks i..n-1
    future_cover = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        future_cover[i] = future_cover[i + 1] | masks[i]

    best_cost = sum(w) + 1.0
    best_ids: list[int] | None = None

    def lower_bound(undominated: int, start: int) -> float:
        # For undominated vertices with pairwise-disjoint candidate dominator
        # sets, any completion pays at least the cheapest candidate of each.
        bound = 0.0
        used = 0
        rest_mask = future_cover[start]
        v = 0
        rem = undominated
        while rem:
            if rem & 1:
                cands = masks[v] & rest_mask
                if cands and not (cands & used):
                    cheapest = min(
                        w[d] for d in range(start, n) if masks[d] >> v & 1
                    )
                    bound += cheapest
                    used |= cands
            rem >>= 1
            v += 1
        return bound

    def visit(i: int, chosen: list[int], dominated: int, cost: float) -> None:
        nonlocal best_cost, best_ids
        if dominated == full:
            if cost < best_cost - _COST_EPS or (
                abs(cost - best_cost) <= _COST_EPS
                and (best_ids is None or chosen < best_ids)
            ):
                best_cost = cost
                best_ids = list(chosen)
            return
        if i == n:
            return
        undominated = full & ~dominated
        if undominated & ~future_cover[i]:
            return  # some vertex can never be dominated from here
        if cost + lower_bound(undominated, i) > best_cost + _COST_EPS:
            return
        # Include disk i first so lexicographically smaller sets surface early.
        chosen.append(i)
        visit(i + 1, chosen, dominated | masks[i], cost + w[i])
        chosen.pop()
        visit(i + 1, chosen, dominated, cost)

    visit(0, [], 0, 0.0)
    assert best_ids is not None, "every instance is dominated by all its disks"
    return best_ids, sum(w[d] for d in best_ids)


def enumerate_min_dominating(
    g: IntersectionGraph, weights: Sequence[float] | None = None
) -> tuple[list[int], float]:
    """Plain 2^n sweep over all subsets; the independent reference for tests."""
    n = g.n
    if weights is None:
        weights = [1.0] * n
    w = [float(x) for x in weights]
    masks = g.closed_masks
    full = g.full_mask
    best_cost = float("inf")
    best_ids: list[int] | None = None
    for subset in range(1 << n):
        covered = 0
        s = subset
        while s:
            low = s & -s
            covered |= masks[low.bit_length() - 1]
            s ^= low
        if covered != full:
            continue
        ids = [d for d in range(n) if subset >> d & 1]
        cost = sum(w[d] for d in ids)
        if cost < best_cost - _COST_EPS or (
            abs(cost - best_cost) <= _COST_EPS and (best_ids is None or ids < best_ids)
        ):
            best_cost = cost
            best_ids = ids
    assert best_ids is not None
    return best_ids, best_cost
