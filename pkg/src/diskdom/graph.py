"""Intersection graphs over disk instances, multiset coverage depth, and
neighborhood equivalence classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .geometry import DiskInstance, intersects


class IntersectionGraph:
    """Undirected intersection graph over disk ids 0..n-1.

    Adjacency is stored symmetric and without self-loops; closed
    neighborhoods (which include the vertex itself) are precomputed both as
    sorted tuples and as integer bitmasks for fast domination checks.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._closed = tuple(
            tuple(sorted(set(self._adj[v]) | {v})) for v in range(n)
        )
        masks = []
        for v in range(n):
            m = 1 << v
            for u in self._adj[v]:
                m |= 1 << u
            masks.append(m)
        self.closed_masks = tuple(masks)
        self.full_mask = (1 << n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return self._closed[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2


def build_graph(inst: DiskInstance) -> IntersectionGraph:
    """Edge {u, v} iff the closed disks u and v meet.  Naive O(n^2) pairs."""
    disks = inst.disks
    n = len(disks)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if intersects(disks[i], disks[j])
    ]
    return IntersectionGraph(n, edges)


def is_dominating(g: IntersectionGraph, ids: Iterable[int]) -> bool:
    """True iff every vertex is in ``ids`` or adjacent to a member."""
    mask = 0
    for v in ids:
        mask |= g.closed_masks[v]
    return mask == g.full_mask


class DiskMultiset:
    """Disk ids with multiplicities; the copy sets produced by LP rounding."""

    def __init__(self, counts: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        counts = dict(counts)
        for d, m in counts.items():
            if m < 1:
                raise ValueError(f"multiplicity for disk {d} must be >= 1, got {m}")
        self._counts = counts

    @property
    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def multiplicity(self, disk_id: int) -> int:
        return self._counts.get(disk_id, 0)

    def distinct_ids(self) -> list[int]:
        return sorted(self._counts)

    @property
    def size(self) -> int:
        """Total number of copies."""
        return sum(self._counts.values())

    def total_weight(self, weights: Sequence[float]) -> float:
        return sum(m * weights[d] for d, m in self._counts.items())

    def entries(self) -> list[tuple[int, int]]:
        """Copy-granular entries as (disk id, copy index), id-major order."""
        return [(d, k) for d in sorted(self._counts) for k in range(self._counts[d])]

    def __len__(self) -> int:
        return len(self._counts)

    def __contains__(self, disk_id: int) -> bool:
        return disk_id in self._counts

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._counts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiskMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}:{m}" for d, m in sorted(self._counts.items()))
        return f"DiskMultiset({{{inner}}})"

    @staticmethod
    def from_ids(ids: Iterable[int]) -> "DiskMultiset":
        counts: dict[int, int] = {}
        for d in ids:
            counts[d] = counts.get(d, 0) + 1
        return DiskMultiset(counts)


def depth(v: int, multiset: DiskMultiset, g: IntersectionGraph) -> int:
    """Coverage depth of vertex v: total multiplicity over N[v] in the multiset."""
    return sum(multiset.multiplicity(u) for u in g.closed_neighborhood(v))


def all_depths(multiset: DiskMultiset, g: IntersectionGraph) -> list[int]:
    return [depth(v, multiset, g) for v in range(g.n)]


@dataclass(frozen=True)
class NeighborhoodClass:
    """Disks sharing the same distinct-id neighborhood within a reference multiset."""

    key: tuple[int, ...]
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class NeighborhoodClasses:
    classes: tuple[NeighborhoodClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[NeighborhoodClass]:
        return iter(self.classes)


def neighborhood_classes(
    inst: DiskInstance,
    multiset: DiskMultiset,
    g: IntersectionGraph,
    max_size: int,
) -> NeighborhoodClasses:
    """Partition the disks whose coverage depth is <= ``max_size`` into classes
    keyed by the set of distinct multiset ids in their closed neighborhood.

    Copies of a disk are geometric duplicates, so the key uses distinct ids;
    the depth cutoff, by contrast, counts multiplicity.  The representative is
    the lowest member id.  Disks the multiset does not touch at all (depth 0)
    carry no neighborhood to key on and are left out of the partition.
    """
    if max_size < 0:
        raise ValueError(f"max_size must be >= 0, got {max_size}")
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        if depth(v, multiset, g) > max_size:
            continue
        key = tuple(u for u in g.closed_neighborhood(v) if u in multiset)
        if not key:
            continue
        groups.setdefault(key, []).append(v)
    classes = tuple(
        NeighborhoodClass(key=key, representative=min(members), members=tuple(sorted(members)))
        for key, members in sorted(groups.items())
    )
    return NeighborhoodClasses(classes)


@dataclass(frozen=True)
class ClassCountReport:
    """Diagnostic comparison of a distinct-neighborhood class count against
    the c_check * |D| * L^2 envelope.  Never gates any pipeline.
    """

    observed: int
    bound: float
    level: int
    multiset_size: int
    passed: bool = field(default=False)


def class_count_sanity(
    inst: DiskInstance,
    multiset: DiskMultiset,
    g: IntersectionGraph,
    level: int,
    c_check: float,
) -> ClassCountReport:
    """Count distinct neighborhood classes at depth <= level and compare with
    c_check * |D| * level^2 where |D| counts copies.
    """
    observed = len(neighborhood_classes(inst, multiset, g, max_size=level))
    bound = c_check * multiset.size * level * level
    return ClassCountReport(
        observed=observed,
        bound=bound,
        level=level,
        multiset_size=multiset.size,
        passed=observed <= bound,
    )
