"""Connectivity analysis of HOM(G, H) under two adjacency notions.

Colour adjacency links homomorphisms that differ at exactly one vertex;
the colour graph being connected is what "H-mixing" means.  Homomorphism
adjacency is the cross condition f(u)g(v) in E(H) over every edge uv of G
in both orientations; it is reflexive on homomorphisms and its walks define
homotopy between them.  For loop-free G both notions give the same
connectivity classes, but not for sources with loops: two reflexive
isolated vertices mapped to themselves form a connected colour graph whose
homomorphism graph has no edges at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoColouringsError
from .graphs import Graph
from .homs import Hom, HomSpace, enumerate_homs, format_image, is_hom


@dataclass(frozen=True)
class ClassSummary:
    """One connectivity class: lexicographically least member, size, flags."""

    rep: Hom
    size: int
    contains_non_surjective: bool
    contains_frozen: bool


@dataclass(frozen=True)
class ComponentReport:
    """Connectivity classes of HOM(G, H) under the requested adjacency."""

    kind: str  # "colour" or "homomorphism"
    total: int
    classes: tuple[ClassSummary, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def mixing(self) -> bool | None:
        """Connectedness; None when there are no homomorphisms at all."""
        if self.total == 0:
            return None
        return len(self.classes) == 1

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "total": self.total,
            "classes": [
                {
                    "size": c.size,
                    "rep": format_image(c.rep.image),
                    "non_surjective": c.contains_non_surjective,
                    "frozen": c.contains_frozen,
                }
                for c in self.classes
            ],
            "mixing": self.mixing,
        }


@dataclass(frozen=True)
class MixingVerdict:
    status: str  # "mixing" | "not_mixing" | "no_colourings"
    hom_count: int
    class_count: int
    witness: tuple[Hom, Hom] | None

    @property
    def is_mixing(self) -> bool:
        return self.status == "mixing"


def colour_adjacent(f: Hom, g: Hom) -> bool:
    """Exactly one coordinate differs.  Callers supply members of HOM(G, H)."""
    if f.source_n != g.source_n or f.target_n != g.target_n:
        raise ValueError("homomorphisms live in different spaces")
    return sum(a != b for a, b in zip(f.image, g.image)) == 1


def hom_adjacent(f: Hom, g: Hom, source: Graph, target: Graph) -> bool:
    """Cross condition over all source edges, both orientations.

    Reflexive: every homomorphism is adjacent to itself.
    """
    if f.source_n != g.source_n or f.target_n != g.target_n:
        raise ValueError("homomorphisms live in different spaces")
    if f.source_n != source.n or f.target_n != target.n:
        raise ValueError("graphs do not match the homomorphisms")
    fi, gi = f.image, g.image
    for u, v in source.edges():
        if not target.has_edge(fi[u], gi[v]):
            return False
        if not target.has_edge(fi[v], gi[u]):
            return False
    return True


def _recolour_mask(image, v: int, source: Graph, target: Graph) -> int:
    """Bitmask of colours c != image[v] such that changing v to c stays a hom.

    A loop at v forces the new colour to carry a loop in the target and drops
    the constraint against the old colour at v; edges to other neighbours
    constrain as usual.  Isolated vertices may take any colour.
    """
    if source.has_loop(v):
        m = target.reflexive_mask()
    else:
        m = (1 << target.n) - 1
    for u in source.neighbours(v):
        if u != v:
            m &= target.rows[image[u]]
    return m & ~(1 << image[v])


def recolour_neighbours(f: Hom, source: Graph, target: Graph):
    """Yield every homomorphism at colour distance one from f.

    Order: increasing vertex, then increasing new colour.
    """
    if not is_hom(source, target, f.image):
        raise ValueError("not a homomorphism")
    image = f.image
    for v in range(source.n):
        m = _recolour_mask(image, v, source, target)
        while m:
            b = m & -m
            m ^= b
            c = b.bit_length() - 1
            yield Hom(f.source_n, f.target_n, image[:v] + (c,) + image[v + 1:])


def _avail_masks(image, source: Graph, target: Graph) -> list[int]:
    """Per-vertex masks A[v] with: g hom-adjacent to f  iff  g[v] in A[v] for all v.

    A[v] intersects the target neighbourhoods of f over all source
    neighbours of v, the vertex itself included when it carries a loop.
    """
    full = (1 << target.n) - 1
    out = []
    for v in range(source.n):
        m = full
        for u in source.neighbours(v):
            m &= target.rows[image[u]]
        out.append(m)
    return out


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _colour_partition(images: list[tuple[int, ...]], n: int) -> tuple[list[int], bytearray]:
    """Union-find over the implicit colour adjacency.

    Two members are colour-adjacent exactly when they agree everywhere but
    one coordinate, so grouping by each dropped coordinate finds every edge.
    Returns (root per index, flag per index: has at least one neighbour).
    """
    m = len(images)
    uf = _UnionFind(m)
    moved = bytearray(m)
    for v in range(n):
        first: dict[tuple[int, ...], int] = {}
        for i, im in enumerate(images):
            key = im[:v] + im[v + 1:]
            j = first.setdefault(key, i)
            if j != i:
                moved[i] = 1
                moved[j] = 1
                uf.union(j, i)
    return [uf.find(i) for i in range(m)], moved


def _hom_partition(space: HomSpace, source: Graph, target: Graph) -> tuple[list[int], bytearray]:
    """Quadratic union-find over homomorphism adjacency."""
    images = space.images
    m = len(images)
    avail = [_avail_masks(im, source, target) for im in images]
    uf = _UnionFind(m)
    linked = bytearray(m)
    n = source.n
    for i in range(m):
        ai = avail[i]
        for j in range(i + 1, m):
            gj = images[j]
            ok = True
            for v in range(n):
                if not ai[v] >> gj[v] & 1:
                    ok = False
                    break
            if ok:
                uf.union(i, j)
                linked[i] = 1
                linked[j] = 1
    return [uf.find(i) for i in range(m)], linked


def _frozen_flags(space: HomSpace, source: Graph, target: Graph,
                  colour_moved: bytearray | None) -> bytearray:
    """Per-member flag: isolated reflexive vertex of the homomorphism graph.

    For loop-free sources this coincides with having no colour neighbour;
    otherwise each member is tested against the whole space.
    """
    m = space.count
    out = bytearray(m)
    if source.is_loop_free and colour_moved is not None:
        for i in range(m):
            out[i] = 0 if colour_moved[i] else 1
        return out
    images = space.images
    for i in range(m):
        ai = _avail_masks(images[i], source, target)
        isolated = True
        for j in range(m):
            if j == i:
                continue
            if all(ai[v] >> images[j][v] & 1 for v in range(source.n)):
                isolated = False
                break
        out[i] = 1 if isolated else 0
    return out


def components(source: Graph, target: Graph, kind: str = "colour",
               cap: int | None = None, force_pairwise: bool = False) -> ComponentReport:
    """Connectivity classes of HOM(source, target).

    kind="colour" uses single-vertex recolouring steps; kind="homomorphism"
    uses the cross condition.  For loop-free sources the partitions agree,
    and the homomorphism kind reuses the colour partition unless
    ``force_pairwise`` asks for the quadratic computation.
    """
    if kind not in ("colour", "homomorphism"):
        raise ValueError(f"unknown kind {kind!r}")
    space = enumerate_homs(source, target, cap)
    m = space.count
    if m == 0:
        return ComponentReport(kind=kind, total=0, classes=())
    images = space.images

    colour_moved: bytearray | None = None
    if kind == "colour":
        roots, colour_moved = _colour_partition(images, source.n)
    elif source.is_loop_free and not force_pairwise:
        roots, colour_moved = _colour_partition(images, source.n)
    else:
        roots, _ = _hom_partition(space, source, target)

    frozen = _frozen_flags(space, source, target, colour_moved)

    grouped: dict[int, list[int]] = {}
    for i, r in enumerate(roots):
        grouped.setdefault(r, []).append(i)
    classes = []
    for r in sorted(grouped, key=lambda r: images[min(grouped[r])]):
        members = grouped[r]
        rep = space.hom(min(members))
        non_surj = any(len(set(images[i])) < target.n for i in members)
        has_frozen = any(frozen[i] for i in members)
        classes.append(ClassSummary(rep, len(members), non_surj, has_frozen))
    return ComponentReport(kind=kind, total=m, classes=tuple(classes))


def is_mixing(source: Graph, target: Graph, cap: int | None = None) -> MixingVerdict:
    """Is the colour graph of HOM(source, target) connected?

    NotMixing verdicts carry two homomorphisms from different classes.
    """
    report = components(source, target, kind="colour", cap=cap)
    if report.total == 0:
        return MixingVerdict("no_colourings", 0, 0, None)
    if len(report.classes) == 1:
        return MixingVerdict("mixing", report.total, 1, None)
    witness = (report.classes[0].rep, report.classes[1].rep)
    return MixingVerdict("not_mixing", report.total, len(report.classes), witness)


def is_frozen(f: Hom, source: Graph, target: Graph) -> bool:
    """No single-vertex recolouring applies to f.  Loop-free sources only.

    For sources with loops the colour test misreads isolation; ask
    components(kind="homomorphism") for singleton classes instead.
    """
    if not source.is_loop_free:
        raise ValueError(
            "frozen test requires a loop-free source; use homomorphism components")
    if not is_hom(source, target, f.image):
        raise ValueError("not a homomorphism")
    return next(recolour_neighbours(f, source, target), None) is None


def homotopy_path(f: Hom, g: Hom, source: Graph, target: Graph,
                  cap: int | None = None) -> list[Hom] | None:
    """Shortest walk from f to g in the homomorphism graph, both ends included.

    BFS expands homomorphisms in enumeration order, so the returned path is
    deterministic.  None if g is unreachable from f.
    """
    for x in (f, g):
        if not is_hom(source, target, x.image):
            raise ValueError("not a homomorphism")
    if f.image == g.image:
        return [f]
    space = enumerate_homs(source, target, cap)
    images = space.images
    start = space.index(f.image)
    goal = space.index(g.image)
    n = source.n
    parent = {start: None}
    frontier = [start]
    unseen = set(range(len(images))) - {start}
    while frontier:
        nxt = []
        for i in frontier:
            ai = _avail_masks(images[i], source, target)
            reached = sorted(j for j in unseen
                             if all(ai[v] >> images[j][v] & 1 for v in range(n)))
            for j in reached:
                parent[j] = i
            if goal in parent:
                chain = [goal]
                while parent[chain[-1]] is not None:
                    chain.append(parent[chain[-1]])
                return [space.hom(idx) for idx in reversed(chain)]
            unseen.difference_update(reached)
            nxt.extend(reached)
        frontier = nxt
    return None


def homotopy_distance(f: Hom, g: Hom, source: Graph, target: Graph,
                      cap: int | None = None) -> int | None:
    """BFS distance from f to g in the homomorphism graph; None if unreachable."""
    path = homotopy_path(f, g, source, target, cap)
    return None if path is None else len(path) - 1


def radius_centre(source: Graph, target: Graph, cap: int | None = None) -> tuple[int, Hom]:
    """Radius of the homomorphism graph and a lexicographically least centre.

    Raises NoColouringsError on an empty space and DisconnectedError when
    some pair is unreachable.
    """
    from .errors import DisconnectedError

    space = enumerate_homs(source, target, cap)
    m = space.count
    if m == 0:
        raise NoColouringsError("no homomorphisms to measure")
    images = space.images
    n = source.n
    avail = [_avail_masks(im, source, target) for im in images]

    def ecc(start: int) -> int:
        dist = [-1] * m
        dist[start] = 0
        frontier = [start]
        unseen = set(range(m)) - {start}
        worst = 0
        while frontier:
            nxt = []
            for i in frontier:
                ai = avail[i]
                reached = [j for j in unseen
                           if all(ai[v] >> images[j][v] & 1 for v in range(n))]
                for j in reached:
                    dist[j] = dist[i] + 1
                    worst = max(worst, dist[j])
                unseen.difference_update(reached)
                nxt.extend(reached)
            frontier = nxt
        if unseen:
            raise DisconnectedError("homomorphism graph is disconnected")
        return worst

    best = None
    centre = 0
    for i in range(m):
        e = ecc(i)
        if best is None or e < best:
            best = e
            centre = i
    return (best, space.hom(centre))
