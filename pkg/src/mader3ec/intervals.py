"""Spanning forest of an interval overlap graph in (near) linear time.

Two intervals ``[a, a']`` and ``[b, b']`` overlap when ``a <= b <= a' <= b'``
(or the symmetric case); containment is not overlap.  Shared endpoints are
resolved by perturbing every endpoint into a lexicographic key, after which
all endpoints are distinct and two stack sweeps find each interval's
immediate left and right neighbour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int
    tag: Hashable = None
    seq: int = 0

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")


def perturb_key(iv: Interval, end: str) -> tuple[int, int, int, int]:
    """Key of one endpoint under the perturbation rules.

    Left ends precede right ends at the same coordinate; among equal left
    ends the shorter interval comes first, among equal right ends the shorter
    one comes last; identical intervals are ordered by ``seq``.
    """
    length = iv.hi - iv.lo
    if end == LEFT:
        return (iv.lo, -1, length, iv.seq)
    if end == RIGHT:
        return (iv.hi, 1, -length, iv.seq)
    raise ValueError(f"unknown end {end!r}")


def spanning_forest(ivs: Sequence[Interval]) -> list[tuple[int, int]]:
    """Edges (pairs of indices into ``ivs``) of a spanning forest of the overlap graph.

    ``seq`` of the intervals is ignored; the index in ``ivs`` breaks ties.
    """
    return overlap_forest([iv.lo for iv in ivs], [iv.hi for iv in ivs])


def overlap_forest(lo: Sequence[int], hi: Sequence[int]) -> list[tuple[int, int]]:
    """:func:`spanning_forest` on parallel endpoint lists.

    The perturbed endpoint keys are packed into single integers so both
    sweeps sort plain ints; the packing preserves the lexicographic order of
    :func:`perturb_key` with the list index as the last component.
    """
    k = len(lo)
    if k < 2:
        return []
    base = min(lo)
    w = max(hi) - base + 1
    lkey = [0] * k
    rkey = [0] * k
    for i in range(k):
        a = lo[i] - base
        b = hi[i] - base
        length = b - a
        lkey[i] = ((2 * a) * w + length) * k + i
        rkey[i] = ((2 * b + 1) * w + (w - 1 - length)) * k + i
    edges: list[tuple[int, int]] = []

    # immediate right neighbours: sweep by decreasing left end
    stack: list[int] = []
    for key in sorted(lkey, reverse=True):
        i = key % k
        r = rkey[i]
        while stack and r > rkey[stack[-1]]:
            stack.pop()
        if stack and r > lkey[stack[-1]]:
            edges.append((i, stack[-1]))
        stack.append(i)

    # immediate left neighbours: sweep by increasing right end
    stack = []
    for key in sorted(rkey):
        i = key % k
        l = lkey[i]
        while stack and l < lkey[stack[-1]]:
            stack.pop()
        if stack and l < rkey[stack[-1]]:
            edges.append((i, stack[-1]))
        stack.append(i)
    return edges


def overlaps(a: Interval, b: Interval) -> bool:
    """Raw (unperturbed) overlap test."""
    return a.lo <= b.lo <= a.hi <= b.hi or b.lo <= a.lo <= b.hi <= a.hi


def components(ivs: Sequence[Interval]) -> list[int]:
    """Component id per interval, dense from 0 in order of first appearance."""
    parent = list(range(len(ivs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in spanning_forest(ivs):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    label: dict[int, int] = {}
    return [label.setdefault(find(i), len(label)) for i in range(len(ivs))]
