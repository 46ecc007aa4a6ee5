"""Domination predicates as executable verifiers.

A dominating set needs every vertex to see one chosen vertex in its closed
neighborhood; a k-tuple dominating set needs k; a liar's dominating set needs
two per vertex plus three across the closed-neighborhood union of every pair
of distinct vertices.  Checks report the first violation in a fixed order
(per-vertex condition before pair condition, vertices and pairs ascending)
so failures are stable across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .graphs import Graph

UNDERDOMINATED = "UNDERDOMINATED"
PAIR = "PAIR"
INFEASIBLE_VERTEX = "INFEASIBLE_VERTEX"
INFEASIBLE_PAIR = "INFEASIBLE_PAIR"

SOLUTION_KINDS = ("DS", "KDS", "LDS")


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]
    observed: int
    required: int

    def __str__(self) -> str:
        where = ",".join(str(v) for v in self.vertices)
        return f"{self.kind}({where}): has {self.observed}, needs {self.required}"


@dataclass
class Solution:
    """A vertex subset tagged with the problem it answers."""

    kind: str
    vertices: tuple[int, ...]
    k: int | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in SOLUTION_KINDS:
            raise ValueError(f"unknown solution kind {self.kind!r}")
        if (self.kind == "KDS") != (self.k is not None):
            raise ValueError("k is required for KDS solutions and only for them")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be a positive integer")
        self.vertices = tuple(sorted(set(self.vertices)))

    @property
    def size(self) -> int:
        return len(self.vertices)


class InfeasibleInstanceError(ValueError):
    """An instance admits no solution; carries the witnessing Violation."""

    def __init__(self, violation: Violation, message: str | None = None) -> None:
        super().__init__(message or f"infeasible instance: {violation}")
        self.violation = violation


def _as_mask(g: Graph, chosen: Iterable[int]) -> int:
    mask = 0
    for v in chosen:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """N[v]: the vertex together with its neighbors."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return set(g.adj[v]) | {v}


def check_kds(g: Graph, d: Iterable[int], k: int) -> Violation | None:
    """None iff every vertex has at least k chosen vertices in its closed neighborhood."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    dmask = _as_mask(g, d)
    masks = g.closed_masks
    for v in range(g.n):
        have = (masks[v] & dmask).bit_count()
        if have < k:
            return Violation(UNDERDOMINATED, (v,), have, k)
    return None


def check_lds(g: Graph, l: Iterable[int]) -> Violation | None:
    """None iff `l` satisfies both liar's-domination conditions.

    The pair scan skips pairs where one side already has three chosen closed
    neighbors, since the union count is bounded below by either side's count;
    that keeps the quadratic sweep fast enough for n in the low thousands.
    """
    lmask = _as_mask(g, l)
    masks = g.closed_masks
    n = g.n
    counts = [(masks[v] & lmask).bit_count() for v in range(n)]
    for v in range(n):
        if counts[v] < 2:
            return Violation(UNDERDOMINATED, (v,), counts[v], 2)
    for u in range(n):
        cu = counts[u]
        mu = masks[u]
        for v in range(u + 1, n):
            if cu >= 3 or counts[v] >= 3:
                continue
            union = ((mu | masks[v]) & lmask).bit_count()
            if union < 3:
                return Violation(PAIR, (u, v), union, 3)
    return None


def lds_feasible(g: Graph) -> Violation | None:
    """Feasibility of liar's domination: choosing every vertex must work.

    Necessary and sufficient: |N[v]| >= 2 for all v and |N[u] u N[v]| >= 3 for
    all pairs, which is exactly check_lds with the full vertex set.
    """
    masks = g.closed_masks
    n = g.n
    for v in range(n):
        size = masks[v].bit_count()
        if size < 2:
            return Violation(INFEASIBLE_VERTEX, (v,), size, 2)
    for u in range(n):
        mu = masks[u]
        cu = mu.bit_count()
        for v in range(u + 1, n):
            if cu >= 3 or masks[v].bit_count() >= 3:
                continue
            union = (mu | masks[v]).bit_count()
            if union < 3:
                return Violation(INFEASIBLE_PAIR, (u, v), union, 3)
    return None


def kds_feasible(g: Graph, k: int) -> Violation | None:
    """Feasibility of k-tuple domination: every closed neighborhood must hold k vertices."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    masks = g.closed_masks
    for v in range(g.n):
        size = masks[v].bit_count()
        if size < k:
            return Violation(INFEASIBLE_VERTEX, (v,), size, k)
    return None


def check_solution(g: Graph, sol: Solution) -> Violation | None:
    """Route a Solution through the check matching its kind."""
    if sol.kind == "DS":
        return check_kds(g, sol.vertices, 1)
    if sol.kind == "KDS":
        return check_kds(g, sol.vertices, sol.k)
    return check_lds(g, sol.vertices)


def save_solution(sol: Solution, path: str | Path) -> None:
    payload: dict = {
        "kind": sol.kind,
        "vertices": list(sol.vertices),
        "size": sol.size,
    }
    if sol.kind == "KDS":
        payload["k"] = sol.k
    Path(path).write_text(
        json.dumps(payload, sort_keys=True, separators=(",", ": ")) + "\n",
        encoding="utf-8",
    )


def load_solution(path: str | Path) -> Solution:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    kind = payload["kind"]
    vertices = tuple(payload["vertices"])
    if sorted(set(vertices)) != list(vertices):
        raise ValueError(f"{path}: vertices must be sorted and duplicate-free")
    if payload.get("size") != len(vertices):
        raise ValueError(f"{path}: size field disagrees with the vertex list")
    return Solution(kind=kind, vertices=vertices, k=payload.get("k"))
