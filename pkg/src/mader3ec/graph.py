"""Multigraph storage, the edge-list file format and depth-first search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, TextIO, Union

from .certificate import Certificate


class GraphFormatError(ValueError):
    """Raised for malformed graph files or invalid edge lists."""


class MultiGraph:
    """Undirected multigraph on vertices ``0..n-1`` with indexed edges.

    Parallel edges are allowed, self-loops are not.  Adjacency is stored in
    compressed form: the neighbours of ``v`` are ``nbrs[offsets[v]:offsets[v+1]]``
    with matching edge ids in ``eids``, sorted by ``(neighbour, edge id)``.
    Instances are not meant to be mutated after construction.
    """

    __slots__ = ("n", "edges", "offsets", "nbrs", "eids")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphFormatError(f"negative vertex count {n}")
        self.n = n
        self.edges: list[tuple[int, int]] = []
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge {i} ({u}, {v}) has a vertex id outside 0..{n - 1}")
            if u == v:
                raise GraphFormatError(f"edge {i} is a self-loop at vertex {u}")
            self.edges.append((u, v))

        m = len(self.edges)
        buckets: list[list[int]] = [[] for _ in range(n)]
        # encode (neighbour, edge id) as one int so a plain sort gives the scan order
        for e, (u, v) in enumerate(self.edges):
            buckets[u].append(v * m + e)
            buckets[v].append(u * m + e)
        offsets = [0] * (n + 1)
        flat: list[int] = []
        for v in range(n):
            b = buckets[v]
            b.sort()
            flat.extend(b)
            offsets[v + 1] = len(flat)
        self.offsets = offsets
        self.nbrs = [k // m for k in flat] if m else []
        self.eids = [k % m for k in flat] if m else []

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """``(neighbour, edge id)`` pairs of ``v`` in scan order."""
        lo, hi = self.offsets[v], self.offsets[v + 1]
        return list(zip(self.nbrs[lo:hi], self.eids[lo:hi]))

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges


def parse_graph(text: Union[str, bytes]) -> MultiGraph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` pairs."""
    if isinstance(text, bytes):
        text = text.decode()
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1]), lineno))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    n, m, _ = rows[0]
    body = rows[1:]
    if m < 0 or n < 0:
        raise GraphFormatError("header values must be non-negative")
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    for u, v, lineno in body:
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
    return MultiGraph(n, [(u, v) for u, v, _ in body])


def load_graph(source: Union[str, bytes, TextIO]) -> MultiGraph:
    """Read a graph from a text/bytes payload or an open file object."""
    if hasattr(source, "read"):
        source = source.read()
    return parse_graph(source)


def read_graph_file(path) -> MultiGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def dumps_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def min_degree_screen(g: MultiGraph) -> Optional[Certificate]:
    """Return a small cut if some vertex has degree below three.

    Preference: an isolated vertex, then a degree-two vertex, then a
    degree-one vertex, each the first such vertex by id.
    """
    if g.n == 0:
        return Certificate.disconnected(0)
    first = {}
    for v in range(g.n):
        d = g.degree(v)
        if d < 3 and d not in first:
            first[d] = v
    if 0 in first:
        return Certificate.disconnected(first[0])
    if 2 in first:
        lo = g.offsets[first[2]]
        return Certificate.two_cut(g.eids[lo], g.eids[lo + 1])
    if 1 in first:
        return Certificate.bridge(g.eids[g.offsets[first[1]]])
    return None


@dataclass
class DfsForest:
    """DFS tree from ``root``; tree edges point to the parent.

    ``parent``/``parent_edge``/``disc``/``last`` are per-vertex lists using -1
    for "undefined".  ``last[v]`` is the largest discovery index inside the
    subtree of ``v`` so ancestor tests are O(1).  ``back_edges`` holds
    ``(edge, x, y)`` triples with ``x`` the ancestor end, grouped by ``x`` in
    discovery order and by scan order within one ``x``.
    """

    root: int
    parent: list[int]
    parent_edge: list[int]
    disc: list[int]
    last: list[int]
    order: list[int]
    back_edges: list[tuple[int, int, int]]

    @property
    def tree_edges(self) -> set[int]:
        return {e for e in self.parent_edge if e >= 0}

    def reached(self, v: int) -> bool:
        return self.disc[v] >= 0

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff ``u`` lies on the tree path from ``v`` to the root."""
        d = self.disc[v]
        return self.disc[u] <= d <= self.last[u] and d >= 0


def dfs(g: MultiGraph, root: int = 0) -> DfsForest:
    """Iterative DFS scanning adjacency in stored order."""
    n = g.n
    if not 0 <= root < n:
        raise ValueError(f"root {root} outside 0..{n - 1}")
    offsets, nbrs, eids = g.offsets, g.nbrs, g.eids
    disc = [-1] * n
    parent = [-1] * n
    parent_edge = [-1] * n
    last = [-1] * n
    ptr = offsets[:-1]
    order = [root]
    disc[root] = 0
    stack = [root]
    while stack:
        v = stack[-1]
        i = ptr[v]
        end = offsets[v + 1]
        while i < end and disc[nbrs[i]] >= 0:
            i += 1
        if i < end:
            w = nbrs[i]
            ptr[v] = i + 1
            disc[w] = len(order)
            order.append(w)
            parent[w] = v
            parent_edge[w] = eids[i]
            stack.append(w)
        else:
            ptr[v] = end
            last[v] = len(order) - 1
            stack.pop()

    back: list[tuple[int, int, int]] = []
    for v in order:
        dv = disc[v]
        for i in range(offsets[v], offsets[v + 1]):
            w = nbrs[i]
            if disc[w] > dv and parent_edge[w] != eids[i]:
                back.append((eids[i], v, w))
    return DfsForest(root, parent, parent_edge, disc, last, order, back)
