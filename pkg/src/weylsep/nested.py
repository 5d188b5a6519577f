"""Nested sets on Dynkin graphs and the separable-element bijection.

The Dynkin graph keeps only the simple undirected adjacency (edge
multiplicities and orientations are irrelevant to nestedness, so they are
deliberately dropped here; the Cartan data stays on the root system).  A
family of vertex subsets is nested when every member induces a connected
subgraph, members are pairwise nested or disjoint, and no union of two or
more pairwise-disjoint members induces a connected subgraph.  Since members
are connected, the union condition reduces to checking that disjoint pairs
are never adjacent, which is how it is implemented.

Each nested set maps to the product of the parabolic longest elements of its
members, taken in any order that lists supersets first; the inverse builds
the family back from pivots.  The rank generating function of the lower weak
interval under the resulting element is an exact quotient of parabolic
Poincare polynomials split by member depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .errors import DomainError
from . import order, separable, weyl
from .qpoly import ONE, QPolynomial, q_int
from .rootsys import RootSystem, classify_cartan, irreducible_degrees

NestedFamily = FrozenSet[FrozenSet[int]]


@dataclass(frozen=True)
class DynkinGraph:
    """A simple undirected graph on integer vertices."""

    vertices: Tuple[int, ...]
    edges: FrozenSet[FrozenSet[int]]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(u for e in self.edges if v in e for u in e if u != v))

    def adjacent(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges


def dynkin_graph(sys: RootSystem) -> DynkinGraph:
    """The diagram of a root system with multiplicities dropped."""
    return DynkinGraph(
        tuple(range(sys.rank)),
        frozenset(frozenset(e) for e in sys.diagram_edges()),
    )


def graph_from_edges(pairs: Iterable[Tuple[int, int]], n_vertices: int) -> DynkinGraph:
    edges = set()
    for (u, v) in pairs:
        if u == v or not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise DomainError(f"bad edge ({u}, {v})")
        edges.add(frozenset((u, v)))
    return DynkinGraph(tuple(range(n_vertices)), frozenset(edges))


def _is_connected(graph: DynkinGraph, subset: FrozenSet[int]) -> bool:
    if not subset:
        return False
    start = min(subset)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in subset:
            if u not in seen and graph.adjacent(u, v):
                seen.add(u)
                stack.append(u)
    return seen == set(subset)


def connected_components(graph: DynkinGraph, subset: Iterable[int]) -> List[FrozenSet[int]]:
    todo = set(subset)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in todo:
                if u not in comp and graph.adjacent(u, v):
                    comp.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
        todo -= comp
    comps.sort(key=min)
    return comps


def _adjacent_sets(graph: DynkinGraph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    return any(graph.adjacent(u, v) for u in a for v in b)


def _compatible(graph: DynkinGraph, a: FrozenSet[int], b: FrozenSet[int]) -> bool:
    if a <= b or b <= a:
        return True
    if a & b:
        return False
    return not _adjacent_sets(graph, a, b)


def is_nested(graph: DynkinGraph, family: Iterable[Iterable[int]]) -> bool:
    """Check the three nested-set conditions for a family of vertex subsets."""
    fam = sorted({frozenset(m) for m in family}, key=lambda m: (len(m), sorted(m)))
    vset = set(graph.vertices)
    for m in fam:
        if not m or not set(m) <= vset:
            raise DomainError("members must be nonempty subsets of the vertex set")
    if not all(_is_connected(graph, m) for m in fam):
        return False
    # pairwise nesting plus non-adjacency of disjoint pairs; the latter is
    # equivalent to the union condition for arbitrarily many members because
    # a connected union of connected pieces forces two adjacent pieces
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            if not _compatible(graph, fam[i], fam[j]):
                return False
    return True


def connected_subsets(graph: DynkinGraph) -> Tuple[FrozenSet[int], ...]:
    out = []
    n = len(graph.vertices)
    for mask in range(1, 1 << n):
        subset = frozenset(graph.vertices[i] for i in range(n) if mask >> i & 1)
        if _is_connected(graph, subset):
            out.append(subset)
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(out)


def enumerate_nested(graph: DynkinGraph) -> Tuple[NestedFamily, ...]:
    """All nested sets on the graph, the empty family included."""
    subsets = connected_subsets(graph)
    compat = [
        [ _compatible(graph, a, b) for b in subsets ]
        for a in subsets
    ]
    out: List[NestedFamily] = []

    def backtrack(start: int, chosen: List[int]) -> None:
        out.append(frozenset(subsets[i] for i in chosen))
        for nxt in range(start, len(subsets)):
            if all(compat[i][nxt] for i in chosen):
                chosen.append(nxt)
                backtrack(nxt + 1, chosen)
                chosen.pop()

    backtrack(0, [])
    out.sort(key=lambda fam: (len(fam), sorted(sorted(m) for m in fam)))
    return tuple(out)


def count_faces(graph: DynkinGraph) -> int:
    """Number of nested sets containing every connected component."""
    comps = set(connected_components(graph, graph.vertices))
    return sum(1 for fam in enumerate_nested(graph) if comps <= fam)


def monotonic_order(family: Iterable[FrozenSet[int]]) -> Tuple[FrozenSet[int], ...]:
    """Members sorted supersets-first (size descending, then lexicographic);
    any such order gives the same product element."""
    return tuple(sorted(family, key=lambda m: (-len(m), sorted(m))))


def element_of(family: Iterable[Iterable[int]], sys: RootSystem) -> weyl.GroupElement:
    """Product of parabolic longest elements over the family, supersets first."""
    graph = dynkin_graph(sys)
    fam = [frozenset(m) for m in family]
    if not is_nested(graph, fam):
        raise DomainError("family is not a nested set on the Dynkin graph")
    out = weyl.identity(sys)
    for member in monotonic_order(fam):
        out = weyl.multiply(out, weyl.longest_parabolic(sys, member))
    return out


def nested_of(w: weyl.GroupElement) -> NestedFamily:
    """The nested set corresponding to a separable element.

    Rank-one supports contribute themselves when inverted; reducible supports
    split; an empty pivot recurses into the remaining components, and a full
    pivot contributes the whole support and recurses on the complemented
    inversion set (which has the same pivot, now empty).
    """
    sys = w.system
    if not separable.is_separable(w):
        raise DomainError("nested_of needs a separable element")
    npos = len(sys.positives)

    def split_at(inv: FrozenSet[int], J: FrozenSet[int], i: int) -> Set[FrozenSet[int]]:
        # empty-pivot step: drop the pivot vertex and recurse componentwise
        out: Set[FrozenSet[int]] = set()
        for comp in separable._diagram_components(sys, J - {i}):
            out |= recurse(separable._restrict_inv(sys, inv, comp), comp)
        return out

    def recurse(inv: FrozenSet[int], J: FrozenSet[int]) -> Set[FrozenSet[int]]:
        if not J:
            return set()
        comps = separable._diagram_components(sys, J)
        if len(comps) > 1:
            out: Set[FrozenSet[int]] = set()
            for comp in comps:
                out |= recurse(separable._restrict_inv(sys, inv, comp), comp)
            return out
        if len(J) == 1:
            return {J} if inv else set()
        for i in sorted(J):
            upper = separable._upper_in(sys, i, J)
            if upper <= inv:
                # full pivot: complement within the support, after which the
                # same pivot is empty
                support_roots = frozenset(
                    b for b in range(npos) if sys.supports[b] <= J
                )
                return {J} | split_at(support_roots - inv, J, i)
            if not (upper & inv):
                return split_at(inv, J, i)
        raise AssertionError("separable element lost its pivot")

    return frozenset(recurse(weyl.inversion_set(w), frozenset(range(sys.rank))))


def depth(member: FrozenSet[int], family: Iterable[FrozenSet[int]]) -> int:
    """Number of proper supersets of the member inside the family (they form
    a chain by the nesting condition)."""
    member = frozenset(member)
    return sum(1 for m in family if member < frozenset(m))


def parabolic_poincare(sys: RootSystem, J: Iterable[int]) -> QPolynomial:
    """Poincare polynomial of the parabolic on J, from the degree catalog."""
    J = sorted(set(J))
    sub = tuple(tuple(sys.cartan[i][j] for j in J) for i in J)
    out = ONE
    for fam, rk in classify_cartan(sub):
        for d in irreducible_degrees(fam, rk):
            out = out * q_int(d)
    return out


def rank_gf_formula(family: Iterable[Iterable[int]], sys: RootSystem) -> QPolynomial:
    """Product formula for the rank generating function of the lower weak
    interval under element_of(family): even-depth parabolic Poincare
    polynomials over odd-depth ones, an exact quotient."""
    graph = dynkin_graph(sys)
    fam = [frozenset(m) for m in family]
    if not is_nested(graph, fam):
        raise DomainError("family is not a nested set on the Dynkin graph")
    num = ONE
    den = ONE
    for m in fam:
        f = parabolic_poincare(sys, m)
        if depth(m, fam) % 2 == 0:
            num = num * f
        else:
            den = den * f
    try:
        return num.div_exact(den)
    except Exception as exc:  # exactness is part of the theorem being verified
        raise AssertionError(f"product formula quotient is not polynomial: {exc}")
