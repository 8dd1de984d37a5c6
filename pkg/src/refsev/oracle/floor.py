"""Floor-diagram enumeration and marking counts (absolute and relative).

A marking is identified with its *type word*: the left-to-right sequence of
vertex kinds (white floor j, source attached to j, sink leaving j, midpoint of
an edge (i, j, w), beta-vertex of weight w leaving j).  Vertices of equal kind
are interchangeable under edge permutations, and distinct words give
inequivalent marked graphs, so counting markings up to equivalence is counting
admissible words.

Besides the floors' own sources, a marking may contain *free* black vertices:
isolated vertices that are at once a source and a sink.  They stand for
vertical fibre components that avoid every floor, exist only when the top edge
is non-empty, and may sit anywhere in the order.  Each one lowers the vertex
count by one relative to a source attached to a floor.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

from ..combinatorics import EMPTY, Partition, orderings
from ..errors import DomainError, GuardExceeded
from ..polygon import HTransversePolygon
from ..ring import LaurentY, quantum_integer, quantum_product

__all__ = [
    "FloorDiagram",
    "enumerate_floor_diagrams",
    "count_markings",
    "count_markings_bruteforce",
    "floor_severi",
    "floor_relative",
    "relative_markings",
    "RelativeMarkingClass",
]


@dataclass(frozen=True)
class FloorDiagram:
    R: tuple[int, ...]
    L: tuple[int, ...]
    s: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # sorted (source, target, weight), 1-based
    free: int = 0

    @property
    def height(self) -> int:
        return len(self.R)

    def div(self, j: int) -> int:
        out = sum(w for i, _, w in self.edges if i == j)
        inc = sum(w for _, k, w in self.edges if k == j)
        return out - inc

    def sinks(self, j: int) -> int:
        """Number of Step-2 vertices leaving floor j."""
        return self.R[j - 1] - self.L[j - 1] + self.s[j - 1] - self.div(j)

    def multiplicity(self) -> LaurentY:
        """prod over edges of [w]_y^2 (each edge is subdivided into two)."""
        out = LaurentY.const(1)
        for _, _, w in self.edges:
            out = out * quantum_integer(w) ** 2
        return out

    def vertex_count(self) -> int:
        return (self.height + sum(self.s) + sum(self.sinks(j) for j in range(1, self.height + 1))
                + len(self.edges) + self.free)


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def _edge_multisets(j: int, h: int, max_weight: int, max_edges: int) -> Iterator[tuple]:
    """Multisets of out-edges (j, target, w), total weight <= max_weight."""
    slots = [(t, w) for t in range(j + 1, h + 1) for w in range(1, max_weight + 1)]

    def rec(idx, weight_left, edges_left):
        if idx == len(slots):
            yield ()
            return
        t, w = slots[idx]
        for cnt in range(0, min(weight_left // w, edges_left) + 1):
            for tail in rec(idx + 1, weight_left - cnt * w, edges_left - cnt):
                yield ((j, t, w),) * cnt + tail

    yield from rec(0, max_weight, max_edges)


def _edge_count(p: HTransversePolygon, delta: int, free: int) -> int:
    return p.dim - p.height - p.d_top - p.d_bottom - delta + free


def enumerate_floor_diagrams(p: HTransversePolygon, delta: int) -> list[FloorDiagram]:
    """All floor diagrams whose markings have cogenus ``delta``.

    The vertex count of any marking is ``h + dt + db + #edges - #free``, so the
    cogenus fixes the number of edges once the number of free vertices is
    chosen.  Each choice of orderings R, L (as data) and source sequence s is a
    separate diagram.
    """
    if delta < 0:
        raise DomainError(f"delta must be non-negative (got {delta})")
    h = p.height
    out = []
    for free in range(p.d_top + 1):
        n_edges = _edge_count(p, delta, free)
        if n_edges < 0:
            continue
        for R in orderings(p.right):
            for L in orderings(p.left):
                for s in _compositions(p.d_top - free, h):
                    base = [R[j] - L[j] + s[j] for j in range(h)]
                    out.extend(_diagrams_for(R, L, s, base, n_edges, free))
    return out


def _diagrams_for(R, L, s, base, n_edges, free):
    h = len(R)

    def rec(j, inflow, edges, left):
        # inflow[j] = total weight entering floor j from earlier floors
        if j == h:
            if left == 0 and -inflow[h - 1] <= base[h - 1]:
                yield FloorDiagram(R, L, s, tuple(sorted(edges)), free)
            return
        budget = base[j - 1] + inflow[j - 1]
        if budget < 0:
            return
        for out in _edge_multisets(j, h, budget, left):
            nin = list(inflow)
            for _, t, w in out:
                nin[t - 1] += w
            yield from rec(j + 1, nin, edges + list(out), left - len(out))

    if h <= 1:
        if n_edges == 0 and all(b >= 0 for b in base):
            yield FloorDiagram(R, L, s, (), free)
        return
    yield from rec(1, [0] * h, [], n_edges)


def _marking_types(D: FloorDiagram, beta_split=None, free_beta=None):
    """Non-white vertex kinds with counts and their allowed gap ranges.

    Gap g (0..h) is the stretch between floor g and floor g+1.
    """
    h = D.height
    kinds = []
    n_free = D.free if free_beta is None else free_beta
    if n_free:
        kinds.append((("free",), n_free, 0, h))
    for j in range(1, h + 1):
        if D.s[j - 1]:
            kinds.append((("src", j), D.s[j - 1], 0, j - 1))
    if beta_split is None:
        for j in range(1, h + 1):
            k = D.sinks(j)
            if k:
                kinds.append((("sink", j), k, j, h))
    else:
        for j in range(1, h + 1):
            for w, k in enumerate(beta_split[j - 1], start=1):
                if k:
                    kinds.append((("beta", j, w), k, j, h))
    for (i, j, w), k in sorted(Counter(D.edges).items()):
        kinds.append((("mid", i, j, w), k, i, j - 1))
    return kinds


def _count_words(h: int, kinds) -> int:
    """Number of admissible type words for floors 1..h and the given kinds."""
    lo = tuple(k[2] for k in kinds)
    hi = tuple(k[3] for k in kinds)
    n = len(kinds)

    @lru_cache(maxsize=None)
    def rec(g, counts):
        if g == h and not any(counts):
            return 1
        total = 0
        # next white floor: every kind that must precede it is exhausted
        if g < h and all(counts[t] == 0 for t in range(n) if hi[t] == g):
            total += rec(g + 1, counts)
        for t in range(n):
            if counts[t] and lo[t] <= g <= hi[t]:
                c = list(counts)
                c[t] -= 1
                total += rec(g, tuple(c))
        return total

    return rec(0, tuple(k[1] for k in kinds))


def count_markings(D: FloorDiagram) -> int:
    """Markings of ``D`` up to equivalence."""
    if any(D.sinks(j) < 0 for j in range(1, D.height + 1)):
        return 0
    return _count_words(D.height, _marking_types(D))


def count_markings_bruteforce(D: FloorDiagram, limit: int = 9) -> int:
    """Enumerate orders of all labelled vertices and dedupe by type word."""
    if any(D.sinks(j) < 0 for j in range(1, D.height + 1)):
        return 0
    kinds = _marking_types(D)
    labelled = [("white", j) for j in range(1, D.height + 1)]
    labelled += [kind for kind, k, _, _ in kinds for _ in range(k)]
    if len(labelled) > limit:
        raise GuardExceeded(f"{len(labelled)} vertices exceeds brute-force limit {limit}")
    words = set()
    for perm in itertools.permutations(labelled):
        if _valid_word(perm, D.height):
            words.add(perm)
    return len(words)


def _valid_word(word, h) -> bool:
    g = 0
    for item in word:
        if item[0] == "white":
            if item[1] != g + 1:
                return False
            g += 1
        elif item[0] == "src" and not g < item[1]:
            return False
        elif item[0] in ("sink", "beta") and not g >= item[1]:
            return False
        elif item[0] == "mid" and not item[1] <= g < item[2]:
            return False
    return g == h


def floor_severi(p: HTransversePolygon, delta: int) -> LaurentY:
    """sum over marked floor diagrams of cogenus delta of prod_e [w(e)]_y."""
    if delta < 0:
        raise DomainError(f"delta must be non-negative (got {delta})")
    total = LaurentY()
    for D in enumerate_floor_diagrams(p, delta):
        k = count_markings(D)
        if k:
            total = total + D.multiplicity() * k
    return total


def _split(total: Partition, h: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ways to write ``total`` as an ordered sum of h sequences."""
    per_weight = [list(_compositions(m, h)) for m in total]
    for choice in itertools.product(*per_weight):
        yield tuple(tuple(choice[w][j] for w in range(len(total))) for j in range(h))


@dataclass(frozen=True)
class RelativeMarkingClass:
    diagram: FloorDiagram
    alpha_split: tuple
    beta_split: tuple
    count: int
    free_alpha: int = 0

    def multiplicity(self) -> LaurentY:
        """Refined multiplicity excluding alpha-adjacent edges."""
        out = self.diagram.multiplicity()
        for split in self.beta_split:
            for w, k in enumerate(split, start=1):
                if k:
                    out = out * quantum_integer(w) ** k
        return out


def relative_markings(p: HTransversePolygon, delta: int, alpha: Partition,
                      beta: Partition) -> list[RelativeMarkingClass]:
    """(alpha, beta)-marked diagrams grouped by diagram and compatible collection."""
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha.size + beta.size != p.d_bottom:
        raise DomainError(f"tangency balance violated: ||alpha||+||beta|| = "
                          f"{alpha.size + beta.size} != d_bottom = {p.d_bottom}")
    if delta < 0:
        raise DomainError(f"delta must be non-negative (got {delta})")
    h = p.height
    out = []
    for D in enumerate_floor_diagrams(p, delta):
        need = [D.sinks(j) for j in range(1, h + 1)]
        if need and min(need) < 0:
            continue
        # free vertices have weight 1 and end either on the line (alpha) or not (beta)
        for fa in range(min(D.free, alpha.mult(1)) + 1):
            fb = D.free - fa
            if fb > beta.mult(1):
                continue
            a_rest = alpha.bump(1, -fa) if fa else alpha
            b_rest = beta.bump(1, -fb) if fb else beta
            for a_split in _split(a_rest, h):
                a_deg = [sum(w * k for w, k in enumerate(a, start=1)) for a in a_split]
                if any(a > n for a, n in zip(a_deg, need)):
                    continue
                for b_split in _split(b_rest, h):
                    if any(a + sum(w * k for w, k in enumerate(b, start=1)) != n
                           for a, b, n in zip(a_deg, b_split, need)):
                        continue
                    words = _count_words(h, _marking_types(D, b_split, fb))
                    # alpha-vertices come last, sorted by weight; parents of equal
                    # weight can still be interleaved freely
                    tail = 1
                    for w, total in enumerate(alpha, start=1):
                        denom = prod(factorial(a[w - 1]) for a in a_split if w <= len(a))
                        if w == 1:
                            denom *= factorial(fa)
                        tail *= factorial(total) // denom
                    if words * tail:
                        out.append(RelativeMarkingClass(D, a_split, b_split, words * tail, fa))
    return out


def floor_relative(p: HTransversePolygon, delta: int, alpha: Partition,
                   beta: Partition) -> LaurentY:
    """(1 / I_y^{alpha+beta}) * sum over extended (alpha,beta)-marked diagrams."""
    alpha, beta = Partition(alpha), Partition(beta)
    weight = quantum_product(alpha.add(beta))
    extended = LaurentY()
    for cls in relative_markings(p, delta, alpha, beta):
        # extension: alpha-edges and the new edges into the top-right white vertex
        # carry their weights, so mult(extended) = mult * I_y^{alpha+beta}
        extended = extended + cls.multiplicity() * weight * cls.count
    return extended.divexact(weight)
