"""Random corruptions of certificates and of the graphs they describe."""

import random

from mader3ec.cactus import Cactus
from mader3ec.certificate import Certificate
from mader3ec.graph import MultiGraph


def _paths(cert):
    return [list(p) for _, p in cert.paths]


def _cert(paths):
    return Certificate.mader((k + 1, p) for k, p in enumerate(paths))


def _delete_edge(g, paths, e):
    edges = [uv for i, uv in enumerate(g.edges) if i != e]
    shift = [[x - (x > e) for x in p if x != e] for p in paths]
    return MultiGraph(g.n, edges), [p for p in shift if p]


def mutate_mader(g: MultiGraph, cert: Certificate, rng: random.Random):
    """One random corruption; returns ``(graph, certificate)``."""
    paths = _paths(cert)
    op = rng.randrange(11)
    k = len(paths)
    if op == 0 and k >= 2:  # swap two paths
        i, j = rng.sample(range(k), 2)
        paths[i], paths[j] = paths[j], paths[i]
    elif op == 1 and k >= 2:  # move an edge between paths
        i, j = rng.sample(range(k), 2)
        if len(paths[i]) > 1:
            paths[j].insert(rng.randrange(len(paths[j]) + 1), paths[i].pop(rng.randrange(len(paths[i]))))
    elif op == 2:  # replace an edge id
        p = rng.choice(paths)
        p[rng.randrange(len(p))] = rng.randrange(g.m + 1)
    elif op == 3:  # drop an edge from the sequence only
        p = rng.choice(paths)
        p.pop(rng.randrange(len(p)))
        paths = [p for p in paths if p]
    elif op == 4:  # delete an edge from the graph and the sequence
        g, paths = _delete_edge(g, paths, rng.randrange(g.m))
    elif op == 5:  # add a graph edge the sequence does not mention
        u, v = rng.sample(range(g.n), 2) if g.n >= 2 else (0, 0)
        g = MultiGraph(g.n, list(g.edges) + [(u, v)])
    elif op == 6:  # add a graph edge and append it as a new path
        u, v = rng.sample(range(g.n), 2)
        g = MultiGraph(g.n, list(g.edges) + [(u, v)])
        paths.append([g.m - 1])
    elif op == 7:  # rewire one endpoint of an edge
        e = rng.randrange(g.m)
        u, v = g.edges[e]
        w = rng.randrange(g.n)
        if w != u:
            edges = list(g.edges)
            edges[e] = (u, w)
            g = MultiGraph(g.n, edges)
    elif op == 8 and k >= 2:  # merge two consecutive paths
        i = rng.randrange(k - 1)
        paths[i : i + 2] = [paths[i] + paths[i + 1]]
    elif op == 9:  # split a path
        p = rng.choice(paths)
        if len(p) > 1:
            i = paths.index(p)
            c = rng.randrange(1, len(p))
            paths[i : i + 1] = [p[:c], p[c:]]
    else:  # shuffle the edges inside a path
        p = rng.choice(paths)
        rng.shuffle(p)
    return g, _cert(paths)


def mutate_cactus(cx: Cactus, rng: random.Random) -> Cactus:
    """One structural corruption that must make the cactus wrong."""
    blobs = [list(b) for b in cx.blobs]
    cedges = [list(c) for c in cx.cedges]
    ops = []
    if len(blobs) >= 2:
        ops += ["move_vertex", "merge_blobs"]
    if cedges:
        ops += ["drop_cedge", "retarget_cedge", "recycle_cedge"]
    if any(len(b) >= 2 for b in blobs):
        ops.append("split_blob")
    ops.append("add_cedge")
    op = rng.choice(ops)
    if op == "move_vertex":
        src = rng.choice([i for i, b in enumerate(blobs) if b])
        dst = rng.choice([i for i in range(len(blobs)) if i != src])
        blobs[dst].append(blobs[src].pop(rng.randrange(len(blobs[src]))))
    elif op == "merge_blobs":
        a, b = rng.sample(range(len(blobs)), 2)
        blobs[a] += blobs[b]
        blobs[b] = []
    elif op == "split_blob":
        i = rng.choice([i for i, b in enumerate(blobs) if len(b) >= 2])
        b = blobs[i]
        blobs[i] = b[:1]
        blobs.append(b[1:])
    elif op == "drop_cedge":
        cedges.pop(rng.randrange(len(cedges)))
    elif op == "retarget_cedge":
        c = rng.choice(cedges)
        choices = [x for x in range(len(blobs)) if x != c[1]]
        if choices:
            c[1] = rng.choice(choices)
        else:
            c[3] += 1
    elif op == "recycle_cedge":
        c = rng.choice(cedges)
        c[3] = max(x[3] for x in cedges) + 1
    else:
        e = rng.randrange(max(1, max((c[2] for c in cedges), default=0) + 2))
        cedges.append([0, min(1, len(blobs) - 1), e, cx.cycles])
    return Cactus.from_text(_text(blobs, cedges))


def _text(blobs, cedges):
    lines = [f"blob {i}: " + " ".join(map(str, sorted(b))) for i, b in enumerate(blobs)]
    lines += [f"cedge {a} {b} {e} {c}" for a, b, e, c in cedges]
    return "\n".join(lines) + "\n"
