"""Chain decomposition of a DFS tree, the 2-edge-connectivity test, the
chain parent tree and the interlacing/nested classification.

Chains are numbered from 1.  Per-chain data lives in flat lists indexed by
chain id (index 0 is a placeholder) so large graphs stay cheap; ``chain(i)``
materialises a :class:`Chain` record for inspection and serialisation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .certificate import Certificate
from .graph import DfsForest, MultiGraph, dfs


class Kind(str, enum.Enum):
    CYCLE = "cycle"
    INTERLACING = "interlacing"
    NESTED = "nested"
    UNCLASSIFIED = "unclassified"


@dataclass
class Chain:
    id: int
    src: int
    dst: int
    back_edge: int
    tree_edges: list[int]
    parent: Optional[int]
    kind: Kind

    @property
    def edges(self) -> list[int]:
        return [self.back_edge, *self.tree_edges]


@dataclass
class ChainDecomposition:
    """Chains of ``g`` with respect to ``forest``.

    ``inner[inner_start[i]:inner_start[i+1]]`` are the inner vertices of chain
    ``i`` in traversal order (from the back edge's lower end up towards the
    target).  ``sbelongs[v]`` is the chain holding the edge from ``v`` to its
    parent (chain 1 for the root, 0 when no chain covers it) and
    ``edge_chain[e]`` is 0 for edges outside every chain.
    """

    graph: MultiGraph
    forest: DfsForest
    src: list[int]
    dst: list[int]
    back: list[int]
    inner: list[int]
    inner_start: list[int]
    sbelongs: list[int]
    edge_chain: list[int]
    parent: list[int] = field(default_factory=list)
    kinds: list[Kind] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.src) - 1

    def inner_vertices(self, i: int) -> list[int]:
        return self.inner[self.inner_start[i]:self.inner_start[i + 1]]

    def chain_edges(self, i: int) -> list[int]:
        """Edges of chain ``i`` from its source to its target."""
        pe = self.forest.parent_edge
        return [self.back[i]] + [pe[u] for u in self.inner_vertices(i)]

    def chain_vertices(self, i: int) -> list[int]:
        return [self.src[i], *self.inner_vertices(i), self.dst[i]]

    def chain(self, i: int) -> Chain:
        parent = self.parent[i] if self.parent and self.parent[i] > 0 else None
        kind = self.kinds[i] if self.kinds else Kind.UNCLASSIFIED
        return Chain(i, self.src[i], self.dst[i], self.back[i], self.chain_edges(i)[1:], parent, kind)

    def chains(self) -> list[Chain]:
        return [self.chain(i) for i in range(1, self.count + 1)]

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.count + 1)]
        for c in range(2, self.count + 1):
            kids[self.parent[c]].append(c)
        return kids


def decompose(g: MultiGraph, forest: DfsForest) -> ChainDecomposition:
    n = g.n
    parent, parent_edge = forest.parent, forest.parent_edge
    visited = [False] * n
    sbelongs = [0] * n
    edge_chain = [0] * g.m
    src, dst, back, inner, inner_start = [0], [0], [-1], [], [0, 0]
    bi, backs = 0, forest.back_edges
    nb = len(backs)
    for v in forest.order:
        visited[v] = True
        while bi < nb and backs[bi][1] == v:
            e, _, u = backs[bi]
            bi += 1
            k = len(src)
            edge_chain[e] = k
            while not visited[u]:
                visited[u] = True
                inner.append(u)
                sbelongs[u] = k
                edge_chain[parent_edge[u]] = k
                u = parent[u]
            src.append(v)
            dst.append(u)
            back.append(e)
            inner_start.append(len(inner))
    if len(src) > 1:
        sbelongs[forest.root] = 1
    return ChainDecomposition(g, forest, src, dst, back, inner, inner_start, sbelongs, edge_chain)


def check_2ec(cd: ChainDecomposition) -> Optional[Certificate]:
    """None iff the graph is 2-edge-connected, else a witness.

    The bridge reported is the tree edge above the earliest-discovered vertex
    whose tree edge lies in no chain.
    """
    g, forest = cd.graph, cd.forest
    if g.n < 2:
        return Certificate.disconnected(0)
    for v in range(g.n):
        if forest.disc[v] < 0:
            return Certificate.disconnected(v)
    for v in forest.order[1:]:
        if cd.sbelongs[v] == 0:
            return Certificate.bridge(forest.parent_edge[v])
    return None


def classify(cd: ChainDecomposition, c: int) -> Kind:
    """Interlacing iff the source of ``c`` is an ancestor of its parent's target."""
    p = cd.parent[c]
    disc = cd.forest.disc
    if disc[cd.src[c]] <= disc[cd.dst[p]]:
        return Kind.INTERLACING
    return Kind.NESTED


def build_parents(cd: ChainDecomposition) -> ChainDecomposition:
    """Fill in parent chains and classifications (requires a 2EC graph)."""
    k = cd.count
    parent = [0] * (k + 1)
    for c in range(2, k + 1):
        parent[c] = cd.sbelongs[cd.dst[c]]
    cd.parent = parent
    kinds = [Kind.UNCLASSIFIED] * (k + 1)
    if k >= 1:
        kinds[1] = Kind.CYCLE
    for c in range(3, k + 1):
        kinds[c] = classify(cd, c)
    cd.kinds = kinds
    return cd


def chain_decomposition(g: MultiGraph, root: int = 0) -> tuple[ChainDecomposition, Optional[Certificate]]:
    """DFS + decomposition + 2EC check; parents are filled in when 2EC."""
    cd = decompose(g, dfs(g, root))
    cert = check_2ec(cd)
    if cert is None:
        build_parents(cd)
    return cd, cert


def format_chains(cd: ChainDecomposition) -> str:
    lines = []
    for ch in cd.chains():
        parent = "-" if ch.parent is None else str(ch.parent)
        edges = " ".join(map(str, ch.edges))
        lines.append(f"{ch.id} {ch.src} {ch.dst} {ch.kind.value} {parent}: {edges}")
    return "\n".join(lines) + ("\n" if lines else "")
