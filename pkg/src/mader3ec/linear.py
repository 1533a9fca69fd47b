"""Linear-time certifying 3-edge-connectivity test.

Chains are added to a growing current graph ``G_c`` phase by phase.  Phase
``i`` handles every chain whose source s-belongs to chain ``i``: paths of
not-yet-added chains whose minimal chain is interlacing are added at once,
the remaining ones are grouped into segments rooted at a nested child of
chain ``i``.  Those segments are ordered through the overlap graph of their
attachment intervals; a component of that graph that cannot be reached from
the branch vertices yields a 2-edge-cut.

Positions on chain ``i`` run from 1 at its target to ``|C_i|`` at its source,
so on the tree part of the chain a smaller position means an ancestor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .certificate import Certificate
from .chains import ChainDecomposition, Kind, chain_decomposition, classify
from .graph import MultiGraph, min_degree_screen
from .intervals import Interval, overlap_forest

INACTIVE, NONBRANCH, BRANCH = 0, 1, 2
R_TAG = -1


class CurrentGraph:
    """The union of the chains added so far.

    ``state`` holds INACTIVE / NONBRANCH / BRANCH per vertex.  Links are not
    kept explicitly by the phase algorithm; :meth:`links` rebuilds them on
    demand from the added chains.
    """

    def __init__(self, cd: ChainDecomposition):
        self.cd = cd
        self.in_gc = bytearray(cd.count + 1)
        self.state = bytearray(cd.graph.n)
        self.marker = [0] * (cd.count + 1)
        self.stamp = [0] * cd.graph.n
        self.tick = 0
        self.order: list[int] = []

    def add_chain(self, c: int) -> None:
        cd = self.cd
        s, t = cd.src[c], cd.dst[c]
        assert not self.in_gc[c], f"chain {c} added twice"
        assert not self.order or (self.state[s] and self.state[t]), f"chain {c} is not attached to G_c"
        self.in_gc[c] = 1
        self.order.append(c)
        state = self.state
        state[s] = BRANCH
        state[t] = BRANCH
        for u in cd.inner_vertices(c):
            state[u] = NONBRANCH

    def branch_vertices(self) -> set[int]:
        return {v for v, st in enumerate(self.state) if st == BRANCH}

    def links(self) -> list[list[int]]:
        """Maximal paths through non-branch vertices, each listed with its two branch ends."""
        cd = self.cd
        g = cd.graph
        adj: dict[int, list[tuple[int, int]]] = {}
        for c in self.order:
            for e in cd.chain_edges(c):
                u, v = g.edges[e]
                adj.setdefault(u, []).append((v, e))
                adj.setdefault(v, []).append((u, e))
        seen_edges: set[int] = set()
        out = []
        for b in sorted(adj):
            if self.state[b] != BRANCH:
                continue
            for w, e in adj[b]:
                if e in seen_edges:
                    continue
                seen_edges.add(e)
                path = [b, w]
                prev_e = e
                while self.state[path[-1]] != BRANCH:
                    x = path[-1]
                    nxt = [(y, f) for y, f in adj[x] if f != prev_e]
                    assert len(nxt) == 1, "non-branch vertex must have degree two in G_c"
                    y, prev_e = nxt[0]
                    seen_edges.add(prev_e)
                    path.append(y)
                out.append(path)
        return out

    def link_of(self) -> dict[int, int]:
        """Map non-branch vertex -> index into :meth:`links`."""
        res = {}
        for k, path in enumerate(self.links()):
            for v in path[1:-1]:
                res[v] = k
        return res


@dataclass
class Segment:
    root: int
    members: list[int]
    kind: Kind
    attachments: list[int] = field(default_factory=list)
    positions: list[int] = field(default_factory=list)


class ChainCoords:
    """Vertex positions and edges of one chain.

    ``vertices`` runs source, back-edge head, ..., target; position ``q`` is
    ``vertices[L - q]`` and ``edge_at(q)`` joins positions ``q`` and ``q + 1``.
    """

    def __init__(self, cd: ChainDecomposition, i: int):
        self.chain = i
        self.vertices = cd.chain_vertices(i)
        self.edges = cd.chain_edges(i)
        self.L = len(self.vertices)
        L = self.L
        self.pos = {v: L - j for j, v in enumerate(self.vertices[1:-1], 1)}

    def vertex_at(self, q: int) -> int:
        return self.vertices[self.L - q]

    def edge_at(self, q: int) -> int:
        return self.edges[self.L - q - 1]


def prepare(g: MultiGraph, root: int = 0) -> tuple[Optional[ChainDecomposition], Optional[Certificate]]:
    """Degree screen, DFS, chain decomposition and the 2EC check."""
    cert = min_degree_screen(g)
    if cert is not None:
        return None, cert
    cd, cert = chain_decomposition(g, root)
    if cert is not None:
        return None, cert
    return cd, None


def second_chain(cd: ChainDecomposition) -> Union[int, Certificate]:
    """Chain that closes a K_2^3 subdivision with chain 1, or a 2-edge-cut.

    Normally chain 2.  When chain 2 leaves the subtree containing chain 1 the
    next chain from the root into that subtree is used instead; without one
    that subtree hangs on one tree edge and one back edge.
    """
    forest = cd.forest
    r = forest.root
    top = cd.inner_vertices(1)[-1]
    for j in range(2, cd.count + 1):
        if cd.src[j] != r:
            break
        if forest.is_ancestor(top, cd.dst[j]):
            return j
    return Certificate.two_cut(forest.parent_edge[top], cd.back[1])


def initial_k23(cd: ChainDecomposition) -> Union[CurrentGraph, Certificate]:
    second = second_chain(cd)
    if isinstance(second, Certificate):
        return second
    gc = CurrentGraph(cd)
    gc.add_chain(1)
    gc.add_chain(second)
    return gc


def source_groups(cd: ChainDecomposition) -> list[list[int]]:
    """For every chain j, the chains whose source s-belongs to j, ascending."""
    groups: list[list[int]] = [[] for _ in range(cd.count + 1)]
    sb, src = cd.sbelongs, cd.src
    for c in range(2, cd.count + 1):
        groups[sb[src[c]]].append(c)
    return groups


def collect_segments(
    gc: CurrentGraph, cd: ChainDecomposition, i: int, members: Optional[Sequence[int]] = None
) -> tuple[list[Segment], list[int]]:
    """Part I of phase ``i``.

    Adds every all-interlacing path at once (those are returned as
    interlacing segments and in ``added``) and groups the rest by their
    nested minimal chain.  Members of every segment are parent-first.
    """
    if members is None:
        members = [c for c in range(2, cd.count + 1) if cd.sbelongs[cd.src[c]] == i]
    in_gc, marker, parent = gc.in_gc, gc.marker, cd.parent
    segments: list[Segment] = []
    by_root: dict[int, Segment] = {}
    added: list[int] = []
    for c in members:
        if in_gc[c] or marker[c]:
            continue
        path = []
        d = c
        while not in_gc[d] and not marker[d]:
            path.append(d)
            d = parent[d]
        path.reverse()
        if in_gc[d]:
            root = path[0]
            if classify(cd, root) is Kind.NESTED:
                seg = Segment(root, path, Kind.NESTED)
                by_root[root] = seg
                segments.append(seg)
                for x in path:
                    marker[x] = root
            else:
                for x in path:
                    gc.add_chain(x)
                added.extend(path)
                segments.append(Segment(root, path, Kind.INTERLACING))
        else:
            root = marker[d]
            by_root[root].members.extend(path)
            for x in path:
                marker[x] = root
    return segments, added


def compute_attachments(gc: CurrentGraph, coords: ChainCoords, segments: Sequence[Segment]) -> None:
    """Fill ``attachments``/``positions`` of nested segments, sorted by position (bucket sort)."""
    cd = gc.cd
    state, src, dst = gc.state, cd.src, cd.dst
    pos = coords.pos
    stamp = gc.stamp
    buckets: list[list[int]] = [[] for _ in range(coords.L + 1)]
    for idx, seg in enumerate(segments):
        gc.tick += 1
        tick = gc.tick
        for d in seg.members:
            for v in (src[d], dst[d]):
                if stamp[v] == tick or not state[v]:
                    continue
                stamp[v] = tick
                q = pos.get(v)
                assert q is not None, f"attachment {v} is not an inner vertex of chain {coords.chain}"
                buckets[q].append(idx)
    for q, bucket in enumerate(buckets):
        if bucket:
            v = coords.vertex_at(q)
            for idx in bucket:
                segments[idx].positions.append(q)
                segments[idx].attachments.append(v)


def interval_lists(segments: Sequence[Segment], branch: Sequence[int]) -> tuple[list[int], list[int], list[int]]:
    """Endpoints and owner of every interval; owner ``len(segments)`` stands for R.

    A segment with a single attachment point gets the degenerate interval
    ``[a, a]``.
    """
    lo: list[int] = []
    hi: list[int] = []
    owner: list[int] = []
    for idx, seg in enumerate(segments):
        a = seg.positions
        k = len(a) - 1
        first, last = a[0], a[k]
        if k == 0:
            lo.append(first)
            hi.append(first)
            owner.append(idx)
            continue
        lo.extend([first] * k)
        hi.extend(a[1:])
        lo.extend(a[1:k])
        hi.extend([last] * (k - 1))
        owner.extend([idx] * (2 * k - 1))
    rnode = len(segments)
    lo.extend([0] * len(branch))
    hi.extend(branch)
    owner.extend([rnode] * len(branch))
    return lo, hi, owner


def attachment_intervals(segments: Sequence[Segment], branch: Sequence[int]) -> list[Interval]:
    """Intervals for the overlap graph; tags are segment indices, ``R_TAG`` for branch vertices."""
    lo, hi, owner = interval_lists(segments, branch)
    rnode = len(segments)
    return [Interval(a, b, R_TAG if o == rnode else o, i) for i, (a, b, o) in enumerate(zip(lo, hi, owner))]


def order_segments(intervals: Sequence[Interval], segments: Sequence[Segment]) -> tuple[list[int], list[list[int]]]:
    """Preorder of the segments reachable from R, plus the unreachable components.

    Returns ``(order, cut_components)`` with segment indices; ``order`` lists
    the R-component in DFS preorder from R.
    """
    nseg = len(segments)
    owner = [nseg if iv.tag == R_TAG else iv.tag for iv in intervals]
    return _order(overlap_forest([iv.lo for iv in intervals], [iv.hi for iv in intervals]), owner, nseg)


def _order(forest: list[tuple[int, int]], owner: list[int], nseg: int) -> tuple[list[int], list[list[int]]]:
    rnode = nseg
    adj: list[list[int]] = [[] for _ in range(nseg + 1)]
    for a, b in forest:
        x, y = owner[a], owner[b]
        if x != y:
            adj[x].append(y)
            adj[y].append(x)
    seen = [False] * (nseg + 1)
    order: list[int] = []
    stack = [rnode]
    while stack:
        x = stack.pop()
        if seen[x]:
            continue
        seen[x] = True
        if x != rnode:
            order.append(x)
        stack.extend(reversed(adj[x]))
    cuts: list[list[int]] = []
    for s in range(nseg):
        if seen[s]:
            continue
        comp = []
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        cuts.append(sorted(comp))
    return order, cuts


def component_span(segments: Sequence[Segment], comp: Sequence[int]) -> tuple[int, int]:
    return min(segments[s].positions[0] for s in comp), max(segments[s].positions[-1] for s in comp)


def extract_cut(coords: ChainCoords, segments: Sequence[Segment], comp: Sequence[int]) -> Certificate:
    """Tree edge above the highest attachment plus the chain edge below the lowest one."""
    x, y = component_span(segments, comp)
    return Certificate.two_cut(coords.edge_at(x - 1), coords.edge_at(y))


class PhaseAlgorithm:
    """Runs the phases on a 2-edge-connected graph of minimum degree three.

    With ``stop_on_cut`` the first unreachable component ends the run with a
    2-edge-cut.  Otherwise every phase records the spans ``(x, y)`` of its
    unreachable components in ``cut_spans[i]`` and adds their segments anyway,
    which is what the cactus construction needs.
    """

    def __init__(self, cd: ChainDecomposition, stop_on_cut: bool = True):
        self.cd = cd
        self.stop_on_cut = stop_on_cut
        self.cut_spans: dict[int, list[tuple[int, int]]] = {}
        self.gc: Optional[CurrentGraph] = None

    def _start(self) -> Union[CurrentGraph, Certificate]:
        if self.stop_on_cut:
            return initial_k23(self.cd)
        gc = CurrentGraph(self.cd)
        gc.add_chain(1)
        return gc

    def run(self) -> Certificate:
        cd = self.cd
        gc = self._start()
        if isinstance(gc, Certificate):
            return gc
        self.gc = gc
        groups = source_groups(cd)
        state = gc.state
        for i in range(1, cd.count + 1):
            assert gc.in_gc[i], f"chain {i} missing from G_c at the start of its phase"
            segments, _ = collect_segments(gc, cd, i, groups[i])
            nested = [s for s in segments if s.kind is Kind.NESTED]
            if not nested:
                continue
            coords = ChainCoords(cd, i)
            compute_attachments(gc, coords, nested)
            L = coords.L
            branch = [L - j for j, v in enumerate(coords.vertices) if state[v] == BRANCH]
            lo, hi, owner = interval_lists(nested, branch)
            order, cuts = _order(overlap_forest(lo, hi), owner, len(nested))
            if cuts:
                if self.stop_on_cut:
                    return extract_cut(coords, nested, cuts[0])
                self.cut_spans[i] = [component_span(nested, comp) for comp in cuts]
                order = order + [s for comp in cuts for s in comp]
            for s in order:
                for c in nested[s].members:
                    gc.add_chain(c)
        assert len(gc.order) == cd.count, "some chains were never added"
        return Certificate.mader((c, cd.chain_edges(c)) for c in gc.order)


def run(g: MultiGraph, root: int = 0) -> Certificate:
    """Certify 3-edge-connectivity of ``g``: a Mader sequence or a small cut."""
    cd, cert = prepare(g, root)
    if cert is not None:
        return cert
    return PhaseAlgorithm(cd).run()
