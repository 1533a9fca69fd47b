"""Brute-force references and random graph generators used by tests and benchmarks."""

from __future__ import annotations

import itertools
import random
from collections import deque
from typing import Optional

from .graph import MultiGraph


def connected_without(g: MultiGraph, removed: set[int]) -> bool:
    if g.n == 0:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for i in range(g.offsets[v], g.offsets[v + 1]):
            w = g.nbrs[i]
            if not seen[w] and g.eids[i] not in removed:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def brute_bridges(g: MultiGraph) -> list[int]:
    return [e for e in range(g.m) if not connected_without(g, {e})]


def brute_two_cuts(g: MultiGraph) -> list[tuple[int, int]]:
    """All pairs ``e1 < e2`` whose removal disconnects ``g`` (bridges included in pairs)."""
    return [(a, b) for a, b in itertools.combinations(range(g.m), 2) if not connected_without(g, {a, b})]


def local_connectivity(g: MultiGraph, s: int, t: int, cap: Optional[int] = None) -> int:
    """Number of edge-disjoint s-t paths (unit-capacity augmenting paths), stopping at ``cap``."""
    # flow[e] in {-1, 0, 1}: direction relative to g.edges[e]
    flow = [0] * g.m
    total = 0
    while cap is None or total < cap:
        prev = [-2] * g.n
        prev[s] = -1
        queue = deque([s])
        while queue and prev[t] == -2:
            v = queue.popleft()
            for i in range(g.offsets[v], g.offsets[v + 1]):
                w, e = g.nbrs[i], g.eids[i]
                if prev[w] != -2:
                    continue
                forward = g.edges[e][0] == v
                f = flow[e] if forward else -flow[e]
                if f < 1:
                    prev[w] = e
                    queue.append(w)
        if prev[t] == -2:
            break
        v = t
        while v != s:
            e = prev[v]
            u = g.other(e, v)
            flow[e] += 1 if g.edges[e][0] == u else -1
            v = u
        total += 1
    return total


def edge_connectivity(g: MultiGraph) -> int:
    if g.n < 2:
        return 0
    return min(local_connectivity(g, 0, t) for t in range(1, g.n))


def is_3ec(g: MultiGraph) -> bool:
    return g.n >= 2 and all(local_connectivity(g, 0, t, 3) >= 3 for t in range(1, g.n))


def brute_three_components(g: MultiGraph) -> list[list[int]]:
    """Classes of the relation "at least three edge-disjoint paths", sorted."""
    comp = [-1] * g.n
    classes: list[list[int]] = []
    for v in range(g.n):
        if comp[v] >= 0:
            continue
        comp[v] = len(classes)
        cls = [v]
        for w in range(v + 1, g.n):
            if comp[w] < 0 and local_connectivity(g, v, w, 3) >= 3:
                comp[w] = comp[v]
                cls.append(w)
        classes.append(cls)
    for cls in classes:
        for a, b in itertools.combinations(cls, 2):
            assert local_connectivity(g, a, b, 3) >= 3, "3-edge-connectivity is not transitive?"
    return sorted(classes)


def random_3ec(
    n_target: int, seed: int, rng: Optional[random.Random] = None, m_target: Optional[int] = None
) -> MultiGraph:
    """Random 3-edge-connected multigraph grown from K_2^3 by the three Mader operations.

    The operations are: add an edge between existing vertices, subdivide an
    edge and join the new vertex to an existing vertex, and subdivide two
    edges and join the two new vertices.  Growth stops at ``n_target``
    vertices, or at ``m_target`` edges when that is given.  Vertex ids are
    shuffled at the end.
    """
    rng = rng or random.Random(seed)
    n_target = max(2, n_target)
    n = 2
    edges: list[list[int]] = [[0, 1], [0, 1], [0, 1]]
    while (n < n_target) if m_target is None else (len(edges) < m_target):
        op = rng.random()
        if op < 0.2:
            u, v = rng.sample(range(n), 2)
            edges.append([u, v])
        elif op < 0.6 or (m_target is None and n + 2 > n_target):
            e = rng.randrange(len(edges))
            u, v = edges[e]
            x = n
            n += 1
            edges[e] = [u, x]
            edges.append([x, v])
            w = rng.choice([y for y in (rng.randrange(n - 1), u, v) if y != x])
            edges.append([x, w])
        else:
            e, f = rng.sample(range(len(edges)), 2)
            x, y = n, n + 1
            n += 2
            u, v = edges[e]
            edges[e] = [u, x]
            edges.append([x, v])
            a, b = edges[f]
            edges[f] = [a, y]
            edges.append([y, b])
            edges.append([x, y])
    perm = list(range(n))
    rng.shuffle(perm)
    rng.shuffle(edges)
    return MultiGraph(n, [(perm[u], perm[v]) for u, v in edges])


def random_multigraph(n: int, m: int, rng: random.Random) -> MultiGraph:
    edges = []
    for _ in range(m):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v))
    return MultiGraph(n, edges)


def weld(a: MultiGraph, b: MultiGraph, k: int, rng: random.Random) -> MultiGraph:
    """Disjoint union of ``a`` and ``b`` joined by ``k`` random edges."""
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    for _ in range(k):
        edges.append((rng.randrange(a.n), a.n + rng.randrange(b.n)))
    rng.shuffle(edges)
    return MultiGraph(a.n + b.n, edges)


def drop_edges(g: MultiGraph, k: int, rng: random.Random) -> MultiGraph:
    """Delete up to ``k`` random edges while every degree stays at least three."""
    deg = [g.degree(v) for v in range(g.n)]
    keep = [True] * g.m
    for e in rng.sample(range(g.m), g.m):
        if k == 0:
            break
        u, v = g.edges[e]
        if deg[u] > 3 and deg[v] > 3:
            keep[e] = False
            deg[u] -= 1
            deg[v] -= 1
            k -= 1
    return MultiGraph(g.n, [uv for uv, kp in zip(g.edges, keep) if kp])
