"""Cactus representation of all 2-edge-cuts and the 3-edge-connected components.

The phase algorithm is run without stopping at cuts.  For every chain the
spans of the overlap-graph components that cannot reach R form a laminar
family of position intervals; intervals that touch end to end ("contact")
form blocks, and the cut edges of one block pairwise form 2-edge-cuts.  Each
block becomes one cactus cycle, each of its intervals a new blob.

Vertices of degree two are given a pendant vertex joined by three parallel
edges before the run, so every vertex has degree at least three without
changing any 2-edge-cut; the pendant vertices are dropped afterwards.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .certificate import Certificate
from .chains import chain_decomposition
from .graph import MultiGraph
from .linear import ChainCoords, PhaseAlgorithm, run as run_linear
from .verify import OK, Verdict, verify_mader


class NotTwoEdgeConnected(ValueError):
    """The input has a bridge or is disconnected; ``certificate`` says where."""

    def __init__(self, certificate: Certificate):
        super().__init__(f"graph is not 2-edge-connected: {certificate.to_text().strip()}")
        self.certificate = certificate


class CactusFormatError(ValueError):
    pass


@dataclass
class CutBlock:
    chain: int
    edges: list[int]


@dataclass
class Cactus:
    """Blobs are sorted vertex lists ordered by their smallest vertex.

    ``cedges`` holds ``(blob_a, blob_b, edge, cycle)`` with ``blob_a <= blob_b``,
    sorted by edge id.
    """

    blobs: list[list[int]]
    cedges: list[tuple[int, int, int, int]] = field(default_factory=list)
    cycles: int = 0

    def blob_of(self, n: int) -> list[int]:
        out = [-1] * n
        for b, vs in enumerate(self.blobs):
            for v in vs:
                if 0 <= v < n:
                    out[v] = b
        return out

    def cycle_edges(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.cycles)]
        for _, _, e, c in self.cedges:
            out[c].append(e)
        return out

    def cut_pairs(self) -> set[tuple[int, int]]:
        """Every pair of edges on one cactus cycle: exactly the 2-edge-cuts."""
        pairs = set()
        for edges in self.cycle_edges():
            edges = sorted(edges)
            for i, a in enumerate(edges):
                for b in edges[i + 1:]:
                    pairs.add((a, b))
        return pairs

    def to_text(self) -> str:
        lines = [f"blob {b}: " + " ".join(map(str, vs)) for b, vs in enumerate(self.blobs)]
        lines += [f"cedge {a} {b} {e} {c}" for a, b, e, c in self.cedges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Cactus":
        blobs: list[list[int]] = []
        cedges = []
        try:
            for raw in text.splitlines():
                line = raw.strip()
                if not line:
                    continue
                if line.startswith("blob"):
                    head, _, rest = line.partition(":")
                    words = head.split()
                    if len(words) != 2 or int(words[1]) != len(blobs):
                        raise CactusFormatError(f"blob lines must be numbered 0, 1, ...: {raw!r}")
                    blobs.append([int(x) for x in rest.split()])
                elif line.startswith("cedge"):
                    words = line.split()
                    if len(words) != 5:
                        raise CactusFormatError(f"bad cedge line {raw!r}")
                    a, b, e, c = map(int, words[1:])
                    cedges.append((a, b, e, c))
                else:
                    raise CactusFormatError(f"unrecognised line {raw!r}")
        except ValueError as exc:
            if isinstance(exc, CactusFormatError):
                raise
            raise CactusFormatError(str(exc)) from None
        cycles = 1 + max((c for *_, c in cedges), default=-1)
        return cls(blobs, cedges, cycles)


def contact_blocks(spans: Sequence[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Group a laminar family of intervals into maximal runs ``[x1, y1], [y1 + 1, y2], ...``."""
    ivs = sorted(spans, key=lambda p: (p[0], -p[1]))
    ending_at: dict[int, int] = {}
    block_of: list[int] = []
    blocks: list[list[tuple[int, int]]] = []
    for idx, (x, y) in enumerate(ivs):
        prev = ending_at.get(x - 1)
        if prev is None:
            block_of.append(len(blocks))
            blocks.append([(x, y)])
        else:
            block_of.append(block_of[prev])
            blocks[block_of[prev]].append((x, y))
        ending_at[y] = idx
    return blocks


def cut_blocks(coords: ChainCoords, spans: Sequence[tuple[int, int]]) -> list[CutBlock]:
    """Cut edges of every contact block on one chain, in position order."""
    out = []
    for block in contact_blocks(spans):
        edges = [coords.edge_at(block[0][0] - 1)] + [coords.edge_at(y) for _, y in block]
        out.append(CutBlock(coords.chain, edges))
    return out


def with_degree_gadgets(g: MultiGraph) -> MultiGraph:
    """Hang a pendant vertex with three parallel edges on every degree-2 vertex."""
    edges = list(g.edges)
    n = g.n
    for v in range(g.n):
        if g.degree(v) == 2:
            edges += [(v, n)] * 3
            n += 1
    return g if n == g.n else MultiGraph(n, edges)


def build_cactus(g: MultiGraph, root: int = 0) -> Cactus:
    """Cactus of the 2-edge-cuts of a 2-edge-connected graph."""
    if g.n < 2:
        raise NotTwoEdgeConnected(Certificate.disconnected(0))
    cd0, cert = chain_decomposition(g, root)
    if cert is not None:
        raise NotTwoEdgeConnected(cert)
    h = with_degree_gadgets(g)
    cd = cd0 if h is g else chain_decomposition(h, root)[0]
    algo = PhaseAlgorithm(cd, stop_on_cut=False)
    algo.run()

    blob_of = [-1] * h.n
    blob_of[cd.forest.root] = 0
    nblobs = 1
    cycle_of: dict[int, int] = {}
    ncycles = 0
    for c in range(1, cd.count + 1):
        s, t = cd.src[c], cd.dst[c]
        base = blob_of[s]
        assert base >= 0 and base == blob_of[t], f"chain {c} ends in different blobs"
        inner = cd.inner_vertices(c)
        spans = algo.cut_spans.get(c)
        if not spans:
            for u in inner:
                blob_of[u] = base
            continue
        coords = ChainCoords(cd, c)
        # each interval of a block is a new blob; sweep positions innermost-last
        starts: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for block in contact_blocks(spans):
            edges = [coords.edge_at(block[0][0] - 1)] + [coords.edge_at(y) for _, y in block]
            for e in edges:
                cycle_of[e] = ncycles
            ncycles += 1
            for x, y in block:
                starts[x].append((y, nblobs))
                nblobs += 1
        stack: list[tuple[int, int]] = []
        for q in range(2, coords.L):
            while stack and stack[-1][0] < q:
                stack.pop()
            for item in sorted(starts.get(q, ()), reverse=True):
                stack.append(item)
            blob_of[coords.vertex_at(q)] = stack[-1][1] if stack else base

    # drop gadget vertices, relabel blobs by smallest vertex
    members: dict[int, list[int]] = defaultdict(list)
    for v in range(g.n):
        members[blob_of[v]].append(v)
    ordered = sorted(members.values(), key=lambda vs: vs[0])
    label = [0] * g.n
    for b, vs in enumerate(ordered):
        for v in vs:
            label[v] = b
    cedges = []
    for e in sorted(cycle_of):
        u, v = g.edges[e]
        a, b = sorted((label[u], label[v]))
        cedges.append((a, b, e, cycle_of[e]))
    return Cactus(ordered, cedges, ncycles)


def three_edge_components(cx: Cactus) -> list[list[int]]:
    return [list(vs) for vs in cx.blobs]


def blob_graph(g: MultiGraph, cx: Cactus, b: int) -> tuple[MultiGraph, list[int]]:
    """Graph of blob ``b``: its internal edges plus one virtual edge per cycle through it.

    Returns the graph on local ids and the local-to-global vertex list.
    Internal edges come first in edge-id order, then the virtual edges by
    cycle id; a virtual edge whose ends coincide is dropped.  Raises
    ``ValueError`` if the outgoing edges of some cycle do not pair up.
    """
    verts = sorted(cx.blobs[b])
    local = {v: i for i, v in enumerate(verts)}
    edges = []
    for e, (u, v) in enumerate(g.edges):
        if u in local and v in local:
            edges.append((local[u], local[v]))
    ends: dict[int, list[int]] = defaultdict(list)
    for a, bb, e, c in cx.cedges:
        if a != b and bb != b:
            continue
        u, v = g.edges[e]
        ends[c].append(local[u] if u in local else local[v])
    for c in sorted(ends):
        pair = ends[c]
        if len(pair) != 2:
            raise ValueError(f"blob {b}: cycle {c} leaves it through {len(pair)} edges")
        if pair[0] != pair[1]:
            edges.append((pair[0], pair[1]))
    return MultiGraph(len(verts), edges), verts


def blob_certificates(g: MultiGraph, cx: Cactus) -> dict[int, Certificate]:
    """A Mader sequence for the graph of every blob with at least two vertices."""
    out = {}
    for b, vs in enumerate(cx.blobs):
        if len(vs) >= 2:
            out[b] = run_linear(blob_graph(g, cx, b)[0])
    return out


def _cycle_check(cx: Cactus, nblobs: int) -> Verdict:
    """Every cactus edge lies on exactly one cycle and cycles match the stated ids."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nblobs)]
    for k, (a, b, _, _) in enumerate(cx.cedges):
        if not (0 <= a < nblobs and 0 <= b < nblobs) or a == b:
            return Verdict(False, "a", f"cactus edge {k} has bad blob ids {a}, {b}")
        adj[a].append((b, k))
        adj[b].append((a, k))
    depth = [-1] * nblobs
    up_edge = [-1] * nblobs
    parent = [-1] * nblobs
    mark = [-1] * len(cx.cedges)
    found = 0
    for s in range(nblobs):
        if depth[s] >= 0:
            continue
        if s > 0:
            return Verdict(False, "a", f"cactus is disconnected at blob {s}")
        depth[s] = 0
        stack = [(s, iter(adj[s]))]
        while stack:
            v, it = stack[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                continue
            w, k = step
            if k == up_edge[v]:
                continue
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                up_edge[w] = k
                stack.append((w, iter(adj[w])))
            elif depth[w] < depth[v]:
                # back edge to an ancestor closes one cycle
                for e in [k] + _tree_path(v, w, up_edge, parent):
                    if mark[e] >= 0:
                        return Verdict(False, "a", f"cactus edge {e} lies on two cycles")
                    mark[e] = found
                found += 1
    for k, m in enumerate(mark):
        if m < 0:
            return Verdict(False, "a", f"cactus edge {k} lies on no cycle")
    stated: dict[int, int] = {}
    seen: dict[int, int] = {}
    for k, (_, _, _, c) in enumerate(cx.cedges):
        if stated.setdefault(mark[k], c) != c or seen.setdefault(c, mark[k]) != mark[k]:
            return Verdict(False, "a", f"cycle id {c} does not match the cactus cycles")
    if len(seen) != cx.cycles:
        return Verdict(False, "a", f"cactus declares {cx.cycles} cycles but has {len(seen)}")
    return OK


def _tree_path(v: int, w: int, up_edge: list[int], parent: list[int]) -> list[int]:
    out = []
    while v != w:
        out.append(up_edge[v])
        v = parent[v]
    return out


def verify_cactus(g: MultiGraph, cx: Cactus, blob_certs: Mapping[int, Certificate]) -> Verdict:
    nblobs = len(cx.blobs)
    # (b) blobs partition V
    blob_of = [-1] * g.n
    for b, vs in enumerate(cx.blobs):
        if not vs:
            return Verdict(False, "b", f"blob {b} is empty")
        for v in vs:
            if not 0 <= v < g.n:
                return Verdict(False, "b", f"blob {b} names vertex {v} outside the graph")
            if blob_of[v] >= 0:
                return Verdict(False, "b", f"vertex {v} is in blobs {blob_of[v]} and {b}")
            blob_of[v] = b
    if g.n and min(blob_of) < 0:
        return Verdict(False, "b", f"vertex {blob_of.index(-1)} is in no blob")

    # (a) cactus structure
    verdict = _cycle_check(cx, nblobs)
    if not verdict:
        return verdict

    # (c) cross-blob edges of g are exactly the cactus edges
    crossing = sorted(
        (min(blob_of[u], blob_of[v]), max(blob_of[u], blob_of[v]), e)
        for e, (u, v) in enumerate(g.edges)
        if blob_of[u] != blob_of[v]
    )
    stated = sorted((a, b, e) for a, b, e, _ in cx.cedges)
    if crossing != stated:
        diff = sorted(set(crossing) ^ set(stated)) or [None]
        return Verdict(False, "c", f"cross-blob edges differ from cactus edges near {diff[0]}")

    # (d) every blob is 3-edge-connected
    for b, vs in enumerate(cx.blobs):
        if len(vs) < 2:
            continue
        cert = blob_certs.get(b)
        if cert is None or not cert.is_mader:
            return Verdict(False, "d", f"no Mader sequence for blob {b}")
        try:
            gb = blob_graph(g, cx, b)[0]
        except ValueError as exc:
            return Verdict(False, "d", str(exc))
        v = verify_mader(gb, cert)
        if not v:
            return Verdict(False, "d", f"blob {b}: {v}")
    return OK


def write_blob_certificates(certs: Mapping[int, Certificate], directory) -> None:
    os.makedirs(directory, exist_ok=True)
    for b, cert in certs.items():
        with open(os.path.join(directory, f"blob{b}.cert"), "w") as fh:
            fh.write(cert.to_text())


def read_blob_certificates(directory, cx: Cactus) -> dict[int, Certificate]:
    out = {}
    for b in range(len(cx.blobs)):
        path = os.path.join(directory, f"blob{b}.cert")
        if os.path.exists(path):
            with open(path) as fh:
                out[b] = Certificate.from_text(fh.read())
    return out
