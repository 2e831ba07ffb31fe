"""Folds, stiffness, dismantlability, rigidity, retractions and cores.

A fold removes a vertex v whose closed neighbourhood fits inside another
vertex's, N(v) a subset of N(u), loops included in both sets; the map fixing
everything else and sending v to u is then a retraction.  A graph with no
fold available is stiff.  Repeated folding reaches a terminal graph that is
unique up to isomorphism, and the original graph is dismantlable exactly
when that terminal is rigid (admits no endomorphism besides the identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .errors import CapExceededError
from .graphs import Graph
from .homs import Hom, compose, identity_hom, is_hom, iter_homs


@dataclass(frozen=True)
class FoldStep:
    """One fold in the labels current at the time of the fold.

    ``relabel[old]`` is the label after removal, -1 for the removed vertex.
    """

    removed: int
    absorber: int
    relabel: tuple[int, ...]


@dataclass(frozen=True)
class StiffReduction:
    steps: tuple[FoldStep, ...]
    terminal: Graph
    terminal_is_rigid: bool | None


@dataclass(frozen=True)
class DismantleResult:
    dismantlable: bool
    reduction: StiffReduction
    witness_endo: Hom | None  # a non-identity endomorphism of the terminal


@dataclass(frozen=True)
class CoreResult:
    """A retract with no proper retracts, plus the maps certifying it.

    ``vertices`` lists the core in the original labels; ``retraction`` maps
    the original graph onto the relabelled core and ``section`` embeds it
    back, composing to the identity.
    """

    core: Graph
    vertices: tuple[int, ...]
    retraction: Hom
    section: Hom


@dataclass(frozen=True)
class SelfMixingResult:
    mixing: bool
    method: str


def _fold_relabel(n: int, removed: int) -> tuple[int, ...]:
    return tuple(-1 if v == removed else v - (v > removed) for v in range(n))


def _fold_pairs(g: Graph):
    for v in range(g.n):
        rv = g.rows[v]
        for u in range(g.n):
            if u != v and rv | g.rows[u] == g.rows[u]:
                yield (v, u)


def find_fold(g: Graph) -> FoldStep | None:
    """Lexicographically least (removed, absorber) pair, or None if stiff."""
    for v, u in _fold_pairs(g):
        return FoldStep(v, u, _fold_relabel(g.n, v))
    return None


def make_fold(g: Graph, removed: int, absorber: int) -> FoldStep:
    """Build a FoldStep for the pair, verifying the containment first."""
    if not (0 <= removed < g.n and 0 <= absorber < g.n) or removed == absorber:
        raise ValueError("fold endpoints out of range")
    if g.rows[removed] | g.rows[absorber] != g.rows[absorber]:
        raise ValueError(
            f"({removed}, {absorber}) is not a fold: N({removed}) not within N({absorber})")
    return FoldStep(removed, absorber, _fold_relabel(g.n, removed))


def apply_fold(g: Graph, step: FoldStep) -> Graph:
    """Remove the folded vertex after re-checking the neighbourhood containment."""
    make_fold(g, step.removed, step.absorber)
    return g.delete_vertex(step.removed)


def stiff_reduction(g: Graph, rng=None) -> StiffReduction:
    """Fold until no fold remains.

    By default each step takes the least pair; passing a random generator
    picks uniformly among the available folds instead, which changes the
    step sequence but not the terminal up to isomorphism.
    """
    steps = []
    cur = g
    while True:
        if rng is None:
            step = find_fold(cur)
        else:
            options = list(_fold_pairs(cur))
            step = None
            if options:
                v, u = rng.choice(options)
                step = FoldStep(v, u, _fold_relabel(cur.n, v))
        if step is None:
            break
        steps.append(step)
        cur = apply_fold(cur, step)
    return StiffReduction(tuple(steps), cur, None)


def is_rigid(g: Graph, cap: int | None = None) -> bool:
    """Only endomorphism is the identity, decided by exhaustive search.

    The budget counts partial assignments; running out raises rather than
    guessing.
    """
    found = list(islice(iter_homs(g, g, cap), 2))
    return len(found) == 1


def is_dismantlable(g: Graph, cap: int | None = None) -> DismantleResult:
    """Fold to the stiff terminal, then decide its rigidity.

    The certificate is the fold list plus either rigidity by exhaustion or a
    non-identity endomorphism of the terminal.
    """
    red = stiff_reduction(g)
    t = red.terminal
    endos = list(islice(iter_homs(t, t, cap), 2))
    rigid = len(endos) == 1
    witness = None
    if not rigid:
        ident = tuple(range(t.n))
        other = endos[0] if endos[0] != ident else endos[1]
        witness = Hom(t.n, t.n, other)
    red = StiffReduction(red.steps, t, rigid)
    return DismantleResult(rigid, red, witness)


def is_retraction(r: Hom, section: Hom, big: Graph, small: Graph) -> bool:
    """Is r: big -> small a homomorphism splitting the given embedding?

    The section must embed small into big; the three checks are that both
    maps are homomorphisms and that section followed by r is the identity.
    """
    if r.source_n != big.n or r.target_n != small.n:
        raise ValueError("retraction shape does not match the graphs")
    if section.source_n != small.n or section.target_n != big.n:
        raise ValueError("section shape does not match the graphs")
    if not is_hom(big, small, r.image):
        return False
    if not is_hom(small, big, section.image):
        return False
    return compose(section, r) == identity_hom(small)


def _idempotent_power(image: tuple[int, ...]) -> tuple[int, ...]:
    """Some power of the map equal to its own square."""
    seen = {}
    powers = []
    cur = image
    t = 1
    while cur not in seen:
        seen[cur] = t
        powers.append(cur)
        cur = tuple(cur[c] for c in image)
        t += 1
    a = seen[cur]
    p = t - a
    m = a if a % p == 0 else ((a + p - 1) // p) * p
    out = powers[m - 1]
    assert tuple(out[c] for c in out) == out
    return out


def core_of(g: Graph, cap: int | None = None) -> CoreResult:
    """Smallest retract, reached by iterating non-injective endomorphisms.

    Each round enumerates the endomorphisms of the current graph in full
    (budgeted), takes one with the smallest image, and retracts onto the
    fixed vertices of an idempotent power.  Terminates when every
    endomorphism is injective.
    """
    cur = g
    keep = list(range(g.n))  # original labels of current vertices
    retr = list(range(g.n))  # original vertex -> position in keep
    while True:
        best: tuple[int, ...] | None = None
        best_size = cur.n + 1
        for im in iter_homs(cur, cur, cap):
            size = len(set(im))
            if size < best_size:
                best, best_size = im, size
        if best is None:
            raise AssertionError("a graph always has the identity endomorphism")
        if best_size == cur.n:
            break
        rho = _idempotent_power(best)
        fixed = sorted(set(rho))
        pos = {v: i for i, v in enumerate(fixed)}
        cur = cur.induced(fixed)
        keep = [keep[v] for v in fixed]
        retr = [pos[rho[c]] for c in retr]
    core = cur
    retraction = Hom(g.n, core.n, tuple(retr))
    section = Hom(core.n, g.n, tuple(keep))
    if not is_retraction(retraction, section, g, core):
        raise AssertionError("core construction lost the retraction")
    return CoreResult(core, tuple(keep), retraction, section)


def self_mixing(g: Graph, cap: int | None = None) -> SelfMixingResult:
    """Is every endomorphism reachable from every other?

    A graph is self-mixing exactly when it is dismantlable.  For loop-free
    graphs reachability means single-vertex recolouring steps; with loops
    present those steps are not faithful and homotopy classes are used
    instead.  The dismantlability answer is cross-checked against a direct
    component count whenever the endomorphism space fits the budget.
    """
    from .homgraph import components

    verdict = is_dismantlable(g, cap)
    kind = "colour" if g.is_loop_free else "homomorphism"
    try:
        rep = components(g, g, kind=kind, cap=cap)
    except CapExceededError:
        return SelfMixingResult(verdict.dismantlable, "dismantlability")
    if rep.mixing != verdict.dismantlable:
        raise AssertionError("dismantlability disagrees with the component count")
    return SelfMixingResult(verdict.dismantlable, "dismantlability+components")
