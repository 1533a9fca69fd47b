"""Independent checkers for certificates.

Cut certificates are checked by a search on the graph with the cut edges
removed.  A Mader sequence is checked by taking it apart from the last path
to the first: each removed path must be a whole edge of the current graph
once degree-two vertices are suppressed, and its removal must be the inverse
of a Mader operation.  What is left at the end must be a subdivided K_2^3.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Optional, Sequence

from .certificate import BRIDGE, CUT2, DISCONNECTED, MADER, Certificate
from .graph import MultiGraph


class Verdict(NamedTuple):
    ok: bool
    check: str = ""
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else f"invalid ({self.check}): {self.message}"


OK = Verdict(True)


def _fail(check: str, message: str) -> Verdict:
    return Verdict(False, check, message)


def _component_count(g: MultiGraph, removed: set[int]) -> int:
    seen = bytearray(g.n)
    comps = 0
    for s in range(g.n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for i in range(g.offsets[v], g.offsets[v + 1]):
                w = g.nbrs[i]
                if not seen[w] and g.eids[i] not in removed:
                    seen[w] = 1
                    queue.append(w)
    return comps


def verify_cut(g: MultiGraph, edges: Sequence[int]) -> Verdict:
    if len(set(edges)) != len(edges):
        return _fail("cut", "repeated edge in cut")
    for e in edges:
        if not 0 <= e < g.m:
            return _fail("cut", f"edge id {e} out of range")
    if _component_count(g, set(edges)) < 2:
        return _fail("cut", f"removing {list(edges)} leaves the graph connected")
    return OK


def verify_disconnected(g: MultiGraph, v: int) -> Verdict:
    if g.n >= 1 and not 0 <= v < g.n:
        return _fail("disconnected", f"vertex {v} out of range")
    if g.n < 2 or _component_count(g, set()) > 1:
        return OK
    return _fail("disconnected", "graph is connected")


def _walk_ends(g: MultiGraph, path: Sequence[int]) -> Optional[tuple[int, int]]:
    """Start and end vertex if ``path`` is a walk, else None."""
    if not path:
        return None
    u0, v0 = g.edges[path[0]]
    for start, cur in ((u0, v0), (v0, u0)):
        ok = True
        for e in path[1:]:
            a, b = g.edges[e]
            if a == cur:
                cur = b
            elif b == cur:
                cur = a
            else:
                ok = False
                break
        if ok:
            return start, cur
    return None


class _Suppressed:
    """The current graph with degree-two vertices suppressed.

    Super-edges are union-find classes of original edges; ``ends`` and
    ``length`` are stored at the class representative and ``inc[v]`` holds
    the representatives incident to ``v``.  Loops and parallel super-edges
    are allowed.
    """

    def __init__(self, g: MultiGraph):
        self.uf = list(range(g.m))
        self.ends = [list(uv) for uv in g.edges]
        self.length = [1] * g.m
        self.inc: list[set[int]] = [set() for _ in range(g.n)]
        for e, (u, v) in enumerate(g.edges):
            self.inc[u].add(e)
            self.inc[v].add(e)

    def find(self, e: int) -> int:
        uf = self.uf
        while uf[e] != e:
            uf[e] = uf[uf[e]]
            e = uf[e]
        return e

    def degree(self, v: int) -> int:
        ends = self.ends
        return sum(2 if ends[s][0] == ends[s][1] else 1 for s in self.inc[v])

    def adjacent(self, x: int, y: int) -> bool:
        ends = self.ends
        return any(y in ends[s] for s in self.inc[x])

    def remove(self, rep: int) -> None:
        x, y = self.ends[rep]
        self.inc[x].discard(rep)
        self.inc[y].discard(rep)

    def suppress(self, w: int) -> None:
        """Merge the two super-edges at degree-two vertex ``w`` (a lone loop is left alone)."""
        if len(self.inc[w]) != 2:
            return
        s1, s2 = self.inc[w]
        a = self.ends[s1][0] if self.ends[s1][1] == w else self.ends[s1][1]
        b = self.ends[s2][0] if self.ends[s2][1] == w else self.ends[s2][1]
        self.inc[w].clear()
        self.inc[a].discard(s1)
        self.inc[b].discard(s2)
        self.uf[s2] = s1
        self.ends[s1] = [a, b]
        self.length[s1] += self.length[s2]
        self.inc[a].add(s1)
        self.inc[b].add(s1)


def verify_mader(g: MultiGraph, cert: Certificate) -> Verdict:
    paths = [list(p) for _, p in cert.paths]
    n, m = g.n, g.m

    # (a) minimum degree
    if n < 2:
        return _fail("degree", "fewer than two vertices")
    for v in range(n):
        if g.degree(v) < 3:
            return _fail("degree", f"vertex {v} has degree {g.degree(v)}")

    # (b) edge partition and walks
    if len(paths) < 2:
        return _fail("partition", "sequence needs at least two paths")
    owner = [-1] * m
    for k, p in enumerate(paths):
        for e in p:
            if not 0 <= e < m:
                return _fail("partition", f"path {k}: edge id {e} out of range")
            if owner[e] >= 0:
                return _fail("partition", f"edge {e} appears in paths {owner[e]} and {k}")
            owner[e] = k
    missing = [e for e in range(m) if owner[e] < 0]
    if missing:
        return _fail("partition", f"edge {missing[0]} is in no path")
    for k, p in enumerate(paths):
        if _walk_ends(g, p) is None:
            return _fail("walk", f"path {k} is not a walk")

    # (c)/(d) take the sequence apart from the back
    sg = _Suppressed(g)
    for k in range(len(paths) - 1, 1, -1):
        p = paths[k]
        rep = sg.find(p[0])
        if any(sg.find(e) != rep for e in p) or sg.length[rep] != len(p):
            return _fail("ear", f"path {k} is not a single edge of the suppressed graph")
        x, y = sg.ends[rep]
        sg.remove(rep)
        dx, dy = sg.degree(x), sg.degree(y)
        if dx < 2 or dy < 2:
            return _fail("ear", f"path {k} ends at a vertex left with degree below two")
        if dx == 2 and dy == 2 and (x == y or sg.adjacent(x, y)):
            return _fail("ear", f"path {k} subdivides one link twice")
        if dx == 2:
            sg.suppress(x)
        if dy == 2 and y != x:
            sg.suppress(y)

    # (e) what remains must be K_2^3
    branch = [v for v in range(n) if sg.inc[v]]
    reps = {sg.find(e) for e in paths[0] + paths[1]}
    if (
        len(branch) != 2
        or len(reps) != 3
        or any(sg.ends[s][0] == sg.ends[s][1] for s in reps)
        or any(len(sg.inc[v]) != 3 for v in branch)
    ):
        return _fail("base", "first two paths do not form a subdivided K_2^3")
    return OK


def verify_certificate(g: MultiGraph, cert: Certificate) -> Verdict:
    if cert.kind == MADER:
        return verify_mader(g, cert)
    if cert.kind == CUT2:
        return verify_cut(g, cert.edges)
    if cert.kind == BRIDGE:
        return verify_cut(g, cert.edges)
    if cert.kind == DISCONNECTED:
        return verify_disconnected(g, cert.vertex)
    return _fail("kind", f"unknown certificate kind {cert.kind!r}")
