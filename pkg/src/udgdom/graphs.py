"""Undirected graphs on dense integer vertices, plus the on-disk edge-list format."""

from __future__ import annotations

from collections import deque
from pathlib import Path
from typing import Iterable, Iterator


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency lists are sorted and duplicate-free.  Construction rejects
    self-loops, duplicate edges, and out-of-range endpoints, so every
    instance satisfies the representation invariants by the time it exists.
    """

    __slots__ = ("n", "adj", "_closed_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen: set[tuple[int, int]] = set()
        neigh: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            neigh[u].append(v)
            neigh[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in neigh)
        self._closed_masks: tuple[int, ...] | None = None

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitmask of N[v] for each vertex, computed once per graph."""
        if self._closed_masks is None:
            masks = []
            for v in range(self.n):
                m = 1 << v
                for u in self.adj[v]:
                    m |= 1 << u
                masks.append(m)
            self._closed_masks = tuple(masks)
        return self._closed_masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on `vertices`; returns it with the old-label list.

    Position i of the returned list is the original label of new vertex i.
    """
    verts = sorted(set(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u in verts
        for v in g.adj[u]
        if u < v and v in index
    ]
    return Graph(len(verts), edges), verts


def save_graph(g: Graph, path: str | Path) -> None:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_graph(path: str | Path) -> Graph:
    """Parse the "n m" + edge-list format; rejects malformed lines."""
    raw = Path(path).read_text(encoding="utf-8")
    rows: Iterator[str] = iter(
        line for line in (ln.strip() for ln in raw.splitlines()) if line
    )
    try:
        header = next(rows)
    except StopIteration:
        raise ValueError(f"{path}: empty graph file") from None
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"{path}: header must be 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    edges = []
    for line in rows:
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"{path}: bad edge line {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= v:
            raise ValueError(f"{path}: edge lines require u < v, got {line!r}")
        edges.append((u, v))
    if len(edges) != m:
        raise ValueError(f"{path}: header promises {m} edges, found {len(edges)}")
    return Graph(n, edges)
