"""Greedy chain addition in O((n + m) log(n + m)).

A reference implementation kept separate from the phase algorithm for
differential testing.  Chains are added in FIFO order as soon as they are
Mader paths for the current graph.  Chains whose two endpoints are inner
vertices of one link wait in per-vertex lists until that link is split.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from .certificate import Certificate
from .chains import ChainDecomposition
from .graph import MultiGraph
from .linear import BRANCH, INACTIVE, NONBRANCH, prepare, second_chain

_NIL = -1


class GreedyChainAddition:
    """State of one run; ``steps`` counts lockstep moves and chain inspections."""

    def __init__(self, cd: ChainDecomposition):
        self.cd = cd
        n = cd.graph.n
        self.state = bytearray(n)
        self.nxt = [_NIL] * n
        self.prv = [_NIL] * n
        self.link_of = [_NIL] * n
        self.link_first: list[int] = []
        self.link_last: list[int] = []
        self.pending: list[dict[int, None]] = [{} for _ in range(n)]
        self.below = [_NIL] * n
        for c in range(1, cd.count + 1):
            edges = cd.chain_edges(c)
            for j, u in enumerate(cd.inner_vertices(c)):
                self.below[u] = edges[j]
        self.queue: deque[int] = deque()
        self.children = cd.children()
        self.order: list[int] = []
        self.steps = 0

    # links -----------------------------------------------------------------

    def _new_link(self, first: int, last: int) -> int:
        k = len(self.link_first)
        self.link_first.append(first)
        self.link_last.append(last)
        v = first
        while v != _NIL:
            self.link_of[v] = k
            v = self.nxt[v]
        return k

    def _walk(self, start: int, step: list[int], u: int) -> Iterator[None]:
        """Walk from ``start`` towards ``u``; one yield per vertex move or chain inspection."""
        disc = self.cd.forest.disc
        du = disc[u]
        pending, queue = self.pending, self.queue
        v = start
        while v != u:
            deep = disc[v] > du
            for c in list(pending[v]):
                if c not in pending[v]:
                    continue
                w = self._other_end(c, v)
                if w == u or (disc[w] > du) != deep:
                    self._release(c)
                    queue.append(c)
                self.steps += 1
                yield
            v = step[v]
            self.steps += 1
            yield

    def _other_end(self, c: int, v: int) -> int:
        s, t = self.cd.src[c], self.cd.dst[c]
        return t if s == v else s

    def _release(self, c: int) -> None:
        self.pending[self.cd.src[c]].pop(c, None)
        self.pending[self.cd.dst[c]].pop(c, None)

    def make_branch(self, u: int) -> None:
        """Turn non-branch ``u`` into a branch vertex, splitting its link."""
        k = self.link_of[u]
        first, last = self.link_first[k], self.link_last[k]
        disc = self.cd.forest.disc
        sides = [(first, self.nxt), (last, self.prv)]
        # on a tie the side walked first finishes first and loses the identity;
        # walk the deeper end first so the part with the smaller-disc end keeps it
        if disc[first] < disc[last]:
            sides.reverse()
        walkers = [self._walk(start, step, u) for start, step in sides]
        done = None
        while done is None:
            for idx, walker in enumerate(walkers):
                try:
                    next(walker)
                except StopIteration:
                    done = idx
                    break
        for c in list(self.pending[u]):
            self._release(c)
            self.queue.append(c)
            self.steps += 1

        p, q = self.prv[u], self.nxt[u]
        if p != _NIL:
            self.nxt[p] = _NIL
        if q != _NIL:
            self.prv[q] = _NIL
        self.prv[u] = self.nxt[u] = _NIL
        self.link_of[u] = _NIL
        self.state[u] = BRANCH
        # part from ``first`` ends at p, part from ``last`` starts at q
        parts = {first: (first, p), last: (q, last)}
        finished_start = sides[done][0]
        kept_start = sides[1 - done][0]
        kept = parts[kept_start] if kept_start != u else (_NIL, _NIL)
        fin = parts[finished_start] if finished_start != u else (_NIL, _NIL)
        self.link_first[k], self.link_last[k] = kept
        if fin[0] != _NIL and fin[1] != _NIL and fin[0] != u:
            self._new_link(*fin)

    # chains ----------------------------------------------------------------

    def _offer(self, d: int) -> None:
        s, t = self.cd.src[d], self.cd.dst[d]
        st = self.state
        assert st[s] != INACTIVE and st[t] != INACTIVE, f"child chain {d} is not an ear"
        if st[s] == NONBRANCH and st[t] == NONBRANCH and self.link_of[s] == self.link_of[t]:
            self.pending[s][d] = None
            self.pending[t][d] = None
        else:
            self.queue.append(d)

    def add_chain(self, c: int, process_children: bool = True) -> None:
        cd = self.cd
        for v in (cd.src[c], cd.dst[c]):
            if self.state[v] == NONBRANCH:
                self.make_branch(v)
            self.state[v] = BRANCH
        inner = cd.inner_vertices(c)
        for a, b in zip(inner, inner[1:]):
            self.nxt[a] = b
            self.prv[b] = a
        for u in inner:
            self.state[u] = NONBRANCH
        if inner:
            self._new_link(inner[0], inner[-1])
        self.order.append(c)
        if process_children:
            for d in self.children[c]:
                self._offer(d)

    def run(self) -> Certificate:
        cd = self.cd
        second = second_chain(cd)
        if isinstance(second, Certificate):
            return second
        self.state[cd.forest.root] = BRANCH
        self.add_chain(1, process_children=False)
        self.add_chain(second, process_children=False)
        for c in (1, second):
            for d in self.children[c]:
                if d != second:
                    self._offer(d)
        while self.queue:
            self.add_chain(self.queue.popleft())
        if len(self.order) == cd.count:
            return Certificate.mader((c, cd.chain_edges(c)) for c in self.order)
        return self.link_cut()

    def link_cut(self) -> Certificate:
        """Extremal edges of the link through the smallest non-branch vertex."""
        v = next(v for v, st in enumerate(self.state) if st == NONBRANCH)
        k = self.link_of[v]
        a, b = self.link_first[k], self.link_last[k]
        disc = self.cd.forest.disc
        top, deep = (a, b) if disc[a] < disc[b] else (b, a)
        return Certificate.two_cut(self.below[deep], self.cd.forest.parent_edge[top])


def run_greedy(g: MultiGraph, root: int = 0, stats: Optional[dict] = None) -> Certificate:
    cd, cert = prepare(g, root)
    if cert is not None:
        return cert
    algo = GreedyChainAddition(cd)
    cert = algo.run()
    if stats is not None:
        stats["steps"] = algo.steps
    return cert
