"""Independent oracles and generators shared by the test modules.

The oracles deliberately avoid the package's search code: homomorphisms are
found by filtering the full assignment product, adjacency is recomputed from
definitions, and components come from a plain BFS over explicit edge lists.
"""

from __future__ import annotations

import itertools
import random

from circmix.graphs import Graph, canonical_key
from circmix.homs import Hom, enumerate_homs


def directed_edges(g: Graph) -> list[tuple[int, int]]:
    out = []
    for u in range(g.n):
        for v in range(g.n):
            if g.has_edge(u, v):
                out.append((u, v))
    return out


def naive_homs(g: Graph, h: Graph) -> list[tuple[int, ...]]:
    """Every map V(g) -> V(h) preserving all edges, by brute product filter."""
    arcs = directed_edges(g)
    found = []
    for image in itertools.product(range(h.n), repeat=g.n):
        if all(h.has_edge(image[u], image[v]) for u, v in arcs):
            found.append(image)
    return found


def colour_adjacent_naive(a, b) -> bool:
    return sum(x != y for x, y in zip(a, b)) == 1


def hom_adjacent_naive(a, b, g: Graph, h: Graph) -> bool:
    return all(h.has_edge(a[u], b[v]) for u, v in directed_edges(g))


def components_naive(images, adjacent) -> list[list[tuple[int, ...]]]:
    """BFS components of the given adjacency over the image list."""
    images = sorted(images)
    unseen = set(range(len(images)))
    classes = []
    while unseen:
        start = min(unseen)
        unseen.discard(start)
        queue, members = [start], [start]
        while queue:
            i = queue.pop()
            near = [j for j in unseen if adjacent(images[i], images[j])]
            unseen.difference_update(near)
            members.extend(near)
            queue.extend(near)
        classes.append(sorted(images[i] for i in members))
    return sorted(classes)


def hom_graph(g: Graph, h: Graph) -> tuple[Graph, list[tuple[int, ...]]]:
    """The homomorphism graph as an explicit Graph, plus its vertex order.

    Every homomorphism is self-adjacent, so the result is reflexive.
    """
    images = list(enumerate_homs(g, h).images)
    edges = [(i, i) for i in range(len(images))]
    for i, a in enumerate(images):
        for j in range(i + 1, len(images)):
            if hom_adjacent_naive(a, images[j], g, h):
                edges.append((i, j))
    return Graph(len(images), edges), images


def all_graphs(n: int, loops: bool = False):
    """Every graph on n labelled vertices, optionally with loops."""
    slots = [(u, v) for u in range(n) for v in range(u if loops else u + 1, n)]
    for bits in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        yield Graph(n, edges)


def iso_reps(max_n: int, loops: bool = False, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class, up to max_n vertices."""
    reps = {}
    for n in range(min_n, max_n + 1):
        for g in all_graphs(n, loops=loops):
            reps.setdefault(canonical_key(g), g)
    return list(reps.values())


def random_graph(rng: random.Random, n: int, p: float = 0.5,
                 loops: bool = False) -> Graph:
    edges = []
    for u in range(n):
        for v in range(u if loops else u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


def idempotent_endos(g: Graph) -> list[Hom]:
    """Endomorphisms f with f(f(v)) = f(v); each one witnesses a retract."""
    out = []
    for f in enumerate_homs(g, g).homs():
        if all(f.image[f.image[v]] == f.image[v] for v in range(g.n)):
            out.append(f)
    return out


def retract_from_endo(g: Graph, endo: Hom) -> tuple[Graph, Hom]:
    """The retract induced by an idempotent endo, with the retraction map."""
    fixed = sorted(set(endo.image))
    rank = {v: i for i, v in enumerate(fixed)}
    small = g.induced(fixed)
    retraction = Hom(g.n, small.n, tuple(rank[endo.image[v]] for v in range(g.n)))
    return small, retraction
