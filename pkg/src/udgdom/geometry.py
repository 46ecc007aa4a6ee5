"""Planar point sets, unit disk graph construction, and fixed-radius coverage queries.

Disks are closed: a point at distance exactly 1 is adjacent, and a point at
distance exactly r belongs to the radius-r coverage set.  All comparisons use
squared distances against squared radii (0.25, 1.0, 2.25 are exact binary
floats), so no square roots enter any decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graphs import Graph

COVERAGE_RADII = (0.5, 1.0, 1.5)
_RADIUS_SQ = {0.5: 0.25, 1.0: 1.0, 1.5: 2.25}


@dataclass(frozen=True)
class Point2D:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")


class PointSet:
    """Ordered planar points; index in the list is the point's stable identity."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point2D | tuple[float, float]]) -> None:
        self.points: tuple[Point2D, ...] = tuple(
            p if isinstance(p, Point2D) else Point2D(*p) for p in points
        )

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point2D:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points)"

    def sq_dist(self, i: int, j: int) -> float:
        a, b = self.points[i], self.points[j]
        dx = a.x - b.x
        dy = a.y - b.y
        return dx * dx + dy * dy


@dataclass(frozen=True)
class CoverageSet:
    """Points of a set within a fixed radius of a center point (center included)."""

    center: int
    radius: float
    members: frozenset[int]


def coverage(ps: PointSet, center: int, radius: float) -> CoverageSet:
    """All point indices within `radius` of point `center` (closed disk)."""
    if not 0 <= center < len(ps):
        raise IndexError(f"point index {center} out of range")
    if radius not in _RADIUS_SQ:
        raise ValueError(f"radius must be one of {COVERAGE_RADII}, got {radius}")
    r2 = _RADIUS_SQ[radius]
    members = frozenset(q for q in range(len(ps)) if ps.sq_dist(center, q) <= r2)
    return CoverageSet(center, radius, members)


def build_udg(ps: PointSet) -> Graph:
    """Unit disk graph: vertices are point indices, edges join pairs at distance <= 1."""
    n = len(ps)
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if ps.sq_dist(i, j) <= 1.0
    ]
    return Graph(n, edges)


def sort_by_x(ps: PointSet) -> list[int]:
    """Indices sorted by (x, y, index); the tie-break keeps runs reproducible."""
    return sorted(range(len(ps)), key=lambda i: (ps[i].x, ps[i].y, i))


def save_points(ps: PointSet, path: str | Path) -> None:
    lines = [f"{p.x!r} {p.y!r}" for p in ps]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")


def load_points(path: str | Path) -> PointSet:
    """One point per line as two decimal literals; '#' starts a comment line."""
    pts = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'x y', got {raw!r}")
        pts.append(Point2D(float(fields[0]), float(fields[1])))
    return PointSet(pts)
