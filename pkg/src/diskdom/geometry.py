"""Disk primitives, the additively-weighted point-to-disk distance, and
containment/intersection predicates.

All predicates work in floating point with a single global comparison
tolerance ``TOLERANCE``.  Closed-disk semantics: tangent disks intersect,
and a disk lying exactly on another's boundary is contained.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

TOLERANCE = 1e-9

Point = tuple[float, float]


class PerturbationError(ValueError):
    """Raised when a perturbation magnitude could drive a radius negative."""


@dataclass(frozen=True)
class Disk:
    """A closed disk with an instance-unique id and a positive weight."""

    id: int
    x: float
    y: float
    r: float
    w: float = 1.0

    def __post_init__(self) -> None:
        if self.id < 0:
            raise ValueError(f"disk id must be >= 0, got {self.id}")
        if self.r < 0:
            raise ValueError(f"disk radius must be >= 0, got {self.r}")
        if self.w <= 0:
            raise ValueError(f"disk weight must be > 0, got {self.w}")

    @property
    def center(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class DiskInstance:
    """An ordered, immutable collection of disks with ids exactly 0..n-1."""

    disks: tuple[Disk, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "disks", tuple(self.disks))
        if not self.disks:
            raise ValueError("an instance must contain at least one disk")
        for i, d in enumerate(self.disks):
            if d.id != i:
                raise ValueError(f"disk ids must be 0..n-1 in order; position {i} has id {d.id}")

    @property
    def n(self) -> int:
        return len(self.disks)

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        """Axis-aligned (xmin, ymin, xmax, ymax) enclosing every disk entirely."""
        xmin = min(d.x - d.r for d in self.disks)
        ymin = min(d.y - d.r for d in self.disks)
        xmax = max(d.x + d.r for d in self.disks)
        ymax = max(d.y + d.r for d in self.disks)
        return (xmin, ymin, xmax, ymax)

    @cached_property
    def weights(self) -> tuple[float, ...]:
        return tuple(d.w for d in self.disks)

    def __len__(self) -> int:
        return len(self.disks)

    def __iter__(self) -> Iterator[Disk]:
        return iter(self.disks)

    def __getitem__(self, i: int) -> Disk:
        return self.disks[i]


def pow_distance(point: Point, disk: Disk) -> float:
    """Distance from ``point`` to the boundary of ``disk``: d(point, center) - r.

    Negative iff the point is strictly inside the disk, zero on the boundary.
    """
    return math.hypot(point[0] - disk.x, point[1] - disk.y) - disk.r


def intersects(u: Disk, v: Disk) -> bool:
    """True iff the closed disks meet; tangency counts."""
    return math.hypot(u.x - v.x, u.y - v.y) <= u.r + v.r + TOLERANCE


def properly_contains(outer: Disk, inner: Disk) -> bool:
    """True iff ``inner`` lies entirely within ``outer`` and they are not identical.

    Identity is judged on (x, y, r) exactly; the containment inequality uses
    the global tolerance.
    """
    if (inner.x, inner.y, inner.r) == (outer.x, outer.y, outer.r):
        return False
    d = math.hypot(outer.x - inner.x, outer.y - inner.y)
    return d + inner.r <= outer.r + TOLERANCE


def orientation(p: Point, q: Point, r: Point) -> float:
    """Signed doubled area of triangle pqr; zero iff the points are collinear."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


class SplitMix64:
    """SplitMix64 PRNG (Steele, Lea & Flood 2014): 64-bit state, gamma
    0x9E3779B97F4A7C15, finalizer mixing with shifts 30/27/31.  Chosen for
    perturbation jitter because the stream is trivially platform-independent.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_uint64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float, hi: float) -> float:
        u = self.next_uint64() >> 11  # 53 significant bits
        return lo + (hi - lo) * (u * (1.0 / (1 << 53)))


def perturb(inst: DiskInstance, magnitude: float, seed: int) -> DiskInstance:
    """Jitter every center coordinate and radius by an independent uniform
    offset in [-magnitude, +magnitude], deterministically from ``seed``.

    Ids and weights are unchanged.  Raises :class:`PerturbationError` if the
    magnitude could push any radius below zero.
    """
    if magnitude <= 0:
        raise ValueError(f"perturbation magnitude must be > 0, got {magnitude}")
    smallest = min(d.r for d in inst)
    if magnitude > smallest:
        raise PerturbationError(
            f"magnitude {magnitude} exceeds the smallest radius {smallest}; "
            "a jitter could make that radius negative"
        )
    rng = SplitMix64(seed)
    jittered = []
    for d in inst:
        x = d.x + rng.uniform(-magnitude, magnitude)
        y = d.y + rng.uniform(-magnitude, magnitude)
        r = d.r + rng.uniform(-magnitude, magnitude)
        jittered.append(Disk(id=d.id, x=x, y=y, r=r, w=d.w))
    return DiskInstance(tuple(jittered))


def instance_to_dict(inst: DiskInstance) -> dict:
    return {
        "disks": [
            {"id": d.id, "x": d.x, "y": d.y, "r": d.r, "w": d.w} for d in inst
        ]
    }


def instance_from_dict(data: dict) -> DiskInstance:
    disks = tuple(
        Disk(
            id=int(entry["id"]),
            x=float(entry["x"]),
            y=float(entry["y"]),
            r=float(entry["r"]),
            w=float(entry.get("w", 1.0)),
        )
        for entry in data["disks"]
    )
    return DiskInstance(disks)


def instance_to_json(inst: DiskInstance) -> str:
    return json.dumps(instance_to_dict(inst), indent=2) + "\n"


def instance_from_json(text: str) -> DiskInstance:
    return instance_from_dict(json.loads(text))


def save_instance(inst: DiskInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(instance_to_json(inst))


def load_instance(path: str) -> DiskInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json(fh.read())
