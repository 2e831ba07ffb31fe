"""Homomorphisms between graphs: validation, composition, enumeration.

A homomorphism f: G -> H maps every edge of G (loops included) to an edge
of H.  Images are tuples indexed by source vertex; the text form used by
the CLI is the comma-separated colour list "c0,c1,...".
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import hom_cap, node_cap
from .errors import CapExceededError
from .graphs import Graph


@dataclass(frozen=True)
class Hom:
    """A vertex map between graphs of the recorded sizes.

    Plain data: validity against particular graphs is checked by is_hom.
    """

    source_n: int
    target_n: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source_n:
            raise ValueError("image length does not match source size")
        if any(not 0 <= c < self.target_n for c in self.image):
            raise ValueError("image colour out of range")

    def __call__(self, v: int) -> int:
        return self.image[v]


def is_hom(g: Graph, h: Graph, image) -> bool:
    """Does the map send every edge of g (loops included) to an edge of h?"""
    image = tuple(image)
    if len(image) != g.n:
        raise ValueError(f"image has {len(image)} entries for {g.n} vertices")
    if any(not 0 <= c < h.n for c in image):
        raise ValueError("image colour out of range for the target")
    for u, v in g.edges():
        if not h.has_edge(image[u], image[v]):
            return False
    return True


def as_hom(g: Graph, h: Graph, image) -> Hom:
    """Wrap an image as a Hom after checking it really is one."""
    if not is_hom(g, h, image):
        raise ValueError("not a homomorphism")
    return Hom(g.n, h.n, tuple(image))


def identity_hom(g: Graph) -> Hom:
    return Hom(g.n, g.n, tuple(range(g.n)))


def compose(f: Hom, g: Hom) -> Hom:
    """f then g: the composite v -> g(f(v))."""
    if f.target_n != g.source_n:
        raise ValueError("composition shapes do not match")
    return Hom(f.source_n, g.target_n, tuple(g.image[c] for c in f.image))


def is_surjective(f: Hom) -> bool:
    return len(set(f.image)) == f.target_n


def format_image(image) -> str:
    return ",".join(str(c) for c in image)


def parse_image(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad colour list {text!r}") from None


@dataclass
class HomSpace:
    """All homomorphisms from a source to a target, lexicographically sorted."""

    source_n: int
    target_n: int
    images: list[tuple[int, ...]]

    @property
    def count(self) -> int:
        return len(self.images)

    def hom(self, i: int) -> Hom:
        return Hom(self.source_n, self.target_n, self.images[i])

    def homs(self):
        for im in self.images:
            yield Hom(self.source_n, self.target_n, im)

    def index(self, image) -> int:
        try:
            return self._index[tuple(image)]
        except AttributeError:
            self._index = {im: i for i, im in enumerate(self.images)}
            return self._index[tuple(image)]


def _search_order(g: Graph) -> list[int]:
    """BFS order rooted at a maximum-degree vertex of each component."""
    order = []
    seen = [False] * g.n
    for comp in g.components():
        root = max(comp, key=lambda v: (g.degree(v), -v))
        queue = [root]
        seen[root] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in g.neighbours(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def enumerate_homs(g: Graph, h: Graph, cap: int | None = None) -> HomSpace:
    """Every homomorphism g -> h, sorted by image tuple.

    Raises CapExceededError if more than ``cap`` homomorphisms exist; an
    empty result is an answer, not an error.
    """
    cap = hom_cap(cap)
    n = g.n
    if n == 0:
        return HomSpace(0, h.n, [()])
    full = (1 << h.n) - 1
    refl = h.reflexive_mask()
    order = _search_order(g)
    earlier: list[list[int]] = []
    placed: set[int] = set()
    base: list[int] = []
    for w in order:
        earlier.append([u for u in g.neighbours(w) if u in placed and u != w])
        base.append(refl if g.has_loop(w) else full)
        placed.add(w)

    rows = h.rows
    out: list[tuple[int, ...]] = []
    img = [0] * n

    def walk(i: int) -> None:
        if i == n:
            out.append(tuple(img))
            if len(out) > cap:
                raise CapExceededError(cap, f"homomorphism count for n={n}")
            return
        w = order[i]
        m = base[i]
        for u in earlier[i]:
            m &= rows[img[u]]
        while m:
            b = m & -m
            m ^= b
            img[w] = b.bit_length() - 1
            walk(i + 1)

    walk(0)
    out.sort()
    return HomSpace(n, h.n, out)


def iter_homs(g: Graph, h: Graph, budget: int | None = None):
    """Yield image tuples in search order, visiting at most ``budget`` nodes.

    For early-exit questions (is there a second endomorphism?); the order is
    the backtracking order, not lexicographic.
    """
    budget = node_cap(budget)
    n = g.n
    if n == 0:
        yield ()
        return
    full = (1 << h.n) - 1
    refl = h.reflexive_mask()
    order = _search_order(g)
    earlier = []
    placed: set[int] = set()
    base = []
    for w in order:
        earlier.append([u for u in g.neighbours(w) if u in placed and u != w])
        base.append(refl if g.has_loop(w) else full)
        placed.add(w)

    rows = h.rows
    img = [0] * n
    visited = 0

    def walk(i: int):
        nonlocal visited
        if i == n:
            yield tuple(img)
            return
        w = order[i]
        m = base[i]
        for u in earlier[i]:
            m &= rows[img[u]]
        while m:
            b = m & -m
            m ^= b
            visited += 1
            if visited > budget:
                raise CapExceededError(budget, "partial assignments")
            img[w] = b.bit_length() - 1
            yield from walk(i + 1)

    yield from walk(0)


def first_hom(g: Graph, h: Graph, pins: dict[int, int] | None = None,
              budget: int | None = None) -> Hom | None:
    """Lexicographically least homomorphism extending ``pins``, or None.

    Pins are fixed vertex -> colour assignments; they are checked for
    internal consistency first.  None certifies that the search space was
    exhausted.  Raises CapExceededError if the node budget runs out.
    """
    budget = node_cap(budget)
    pins = dict(pins or {})
    for v, c in pins.items():
        if not (0 <= v < g.n and 0 <= c < h.n):
            raise ValueError(f"pin {v}={c} out of range")
    for v, c in pins.items():
        if g.has_loop(v) and not h.has_edge(c, c):
            raise ValueError(f"pin {v}={c} breaks the loop at {v}")
        for u in g.neighbours(v):
            if u != v and u in pins and not h.has_edge(c, pins[u]):
                raise ValueError(f"pins {v}={c} and {u}={pins[u]} break an edge")

    n = g.n
    if n == 0:
        return Hom(0, h.n, ())
    full = (1 << h.n) - 1
    refl = h.reflexive_mask()
    rows = h.rows
    img = [-1] * n
    for v, c in pins.items():
        img[v] = c
    visited = 0

    def walk(v: int) -> bool:
        nonlocal visited
        if v == n:
            return True
        if img[v] >= 0:
            return walk(v + 1)
        m = refl if g.has_loop(v) else full
        for u in g.neighbours(v):
            if u != v and img[u] >= 0:
                m &= rows[img[u]]
        while m:
            b = m & -m
            m ^= b
            visited += 1
            if visited > budget:
                raise CapExceededError(budget, "partial assignments")
            img[v] = b.bit_length() - 1
            if walk(v + 1):
                return True
        img[v] = -1
        return False

    if walk(0):
        return Hom(n, h.n, tuple(img))
    return None


def hom_exists(g: Graph, h: Graph, budget: int | None = None) -> bool:
    return first_hom(g, h, budget=budget) is not None
