"""Left weak, right weak, and strong Bruhat orders on a Weyl group.

Weak-order comparisons reduce to containment of inversion sets.  The Bruhat
order is materialized once per enumerated group as the reflexive-transitive
closure of its length-graded cover relation over all reflections.  For
irreducible type A a direct rank-matrix (dominance) criterion is provided as
an independent oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .errors import DomainError, MixedSystemsError
from .qpoly import QPolynomial
from .weyl import (
    Group,
    GroupElement,
    group,
    inverse,
    inversion_set,
    length,
    multiply,
    reflections,
    simple_reflection,
)


class OrderKind(enum.Enum):
    LEFT_WEAK = "left"
    RIGHT_WEAK = "right"
    BRUHAT = "bruhat"

    @staticmethod
    def parse(name: str) -> "OrderKind":
        for kind in OrderKind:
            if kind.value == name.lower():
                return kind
        raise DomainError(f"unknown order kind {name!r}")


LEFT_WEAK = OrderKind.LEFT_WEAK
RIGHT_WEAK = OrderKind.RIGHT_WEAK
BRUHAT = OrderKind.BRUHAT


@dataclass(frozen=True)
class GradedSubset:
    """A set of group elements with its length histogram.

    Ranks are normalized so the minimum length present is rank 0; for a
    principal upper ideal this realizes the rank ell(u) - ell(w).
    """

    elements: Tuple[GroupElement, ...]
    by_rank: Tuple[int, ...]

    @staticmethod
    def from_elements(elements: Iterable[GroupElement]) -> "GradedSubset":
        els = sorted(elements, key=lambda el: (length(el), sorted(inversion_set(el))))
        if not els:
            raise DomainError("graded subset must be nonempty")
        base = length(els[0])
        hist = [0] * (length(els[-1]) - base + 1)
        for el in els:
            hist[length(el) - base] += 1
        return GradedSubset(tuple(els), tuple(hist))

    def __len__(self) -> int:
        return len(self.elements)


class _BruhatData:
    def __init__(self, gr: Group):
        sys = gr.system
        n = len(gr)
        covers_up: List[List[int]] = [[] for _ in range(n)]
        for i, el in enumerate(gr.elements):
            li = gr.lengths[i]
            for t in reflections(sys):
                wt = multiply(el, t)
                j = gr.index_of(wt)
                if gr.lengths[j] == li + 1:
                    covers_up[i].append(j)
        below: List[FrozenSet[int]] = [frozenset()] * n
        order = sorted(range(n), key=lambda i: gr.lengths[i])
        for i in order:
            acc = {i}
            for j in range(n):
                if i in covers_up[j]:
                    acc |= below[j]
            below[i] = frozenset(acc)
        self.covers_up = [tuple(sorted(c)) for c in covers_up]
        self.below = below


def _bruhat(sys) -> _BruhatData:
    cached = sys._cache.get("bruhat")
    if cached is None:
        cached = _BruhatData(group(sys))
        sys._cache["bruhat"] = cached
    return cached


def leq(kind: OrderKind, u: GroupElement, w: GroupElement) -> bool:
    if u.system is not w.system:
        raise MixedSystemsError("cannot compare elements of different systems")
    if kind is OrderKind.LEFT_WEAK:
        return inversion_set(u) <= inversion_set(w)
    if kind is OrderKind.RIGHT_WEAK:
        return inversion_set(inverse(u)) <= inversion_set(inverse(w))
    gr = group(u.system)
    data = _bruhat(u.system)
    return gr.index_of(u) in data.below[gr.index_of(w)]


def bruhat_leq_dominance(u_word: Sequence[int], w_word: Sequence[int]) -> bool:
    """Rank-matrix criterion on one-line words:
    u <= w iff #{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j} for all i, j."""
    n = len(u_word)
    if len(w_word) != n:
        raise DomainError("words must have equal length")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cu = sum(1 for k in range(i) if u_word[k] >= j)
            cw = sum(1 for k in range(i) if w_word[k] >= j)
            if cu > cw:
                return False
    return True


def lower_interval(kind: OrderKind, w: GroupElement) -> GradedSubset:
    """The principal lower ideal {u : u <= w}."""
    gr = group(w.system)
    if kind is OrderKind.LEFT_WEAK:
        top = inversion_set(w)
        els = [u for u in gr.elements if inversion_set(u) <= top]
    elif kind is OrderKind.RIGHT_WEAK:
        top = inversion_set(inverse(w))
        els = [u for u in gr.elements if inversion_set(inverse(u)) <= top]
    else:
        data = _bruhat(w.system)
        els = [gr.elements[i] for i in data.below[gr.index_of(w)]]
    return GradedSubset.from_elements(els)


def upper_interval(kind: OrderKind, w: GroupElement) -> GradedSubset:
    """The principal upper ideal {u : w <= u}, ranked from ell(w)."""
    gr = group(w.system)
    els = [u for u in gr.elements if leq(kind, w, u)]
    return GradedSubset.from_elements(els)


def rank_gf(s: GradedSubset) -> QPolynomial:
    return QPolynomial(s.by_rank)


def is_rank_symmetric(s: GradedSubset) -> bool:
    return s.by_rank == tuple(reversed(s.by_rank))


def is_rank_unimodal(s: GradedSubset) -> bool:
    h = s.by_rank
    peak = h.index(max(h))
    rising = all(h[i] <= h[i + 1] for i in range(peak))
    falling = all(h[i] >= h[i + 1] for i in range(peak, len(h) - 1))
    return rising and falling


def _check_weak(kind: OrderKind) -> None:
    if kind is OrderKind.BRUHAT:
        raise DomainError("join and meet exist only in the weak orders")


def join(kind: OrderKind, S: Iterable[GroupElement]) -> GroupElement:
    """Least upper bound in a weak order, by scanning the enumerated group.

    The scan asserts there is exactly one minimal-length upper bound, turning
    the lattice property into a runtime check.
    """
    _check_weak(kind)
    S = list(S)
    if not S:
        raise DomainError("join of the empty set")
    gr = group(S[0].system)
    best: List[GroupElement] = []
    best_len = None
    for w in gr.elements:
        if best_len is not None and length(w) > best_len:
            break
        if all(leq(kind, s, w) for s in S):
            best.append(w)
            best_len = length(w)
    if len(best) != 1:
        raise AssertionError(f"expected a unique minimal upper bound, found {len(best)}")
    return best[0]


def meet(kind: OrderKind, S: Iterable[GroupElement]) -> GroupElement:
    _check_weak(kind)
    S = list(S)
    if not S:
        raise DomainError("meet of the empty set")
    gr = group(S[0].system)
    best: List[GroupElement] = []
    best_len = None
    for w in reversed(gr.elements):
        if best_len is not None and length(w) < best_len:
            break
        if all(leq(kind, w, s) for s in S):
            best.append(w)
            best_len = length(w)
    if len(best) != 1:
        raise AssertionError(f"expected a unique maximal lower bound, found {len(best)}")
    return best[0]


def covers(kind: OrderKind, w: GroupElement) -> Tuple[GroupElement, ...]:
    """Elements covering w in the chosen order."""
    sys = w.system
    if kind is OrderKind.BRUHAT:
        gr = group(sys)
        data = _bruhat(sys)
        return tuple(gr.elements[j] for j in data.covers_up[gr.index_of(w)])
    out = []
    for i in range(sys.rank):
        s = simple_reflection(sys, i)
        v = multiply(s, w) if kind is OrderKind.LEFT_WEAK else multiply(w, s)
        if length(v) == length(w) + 1:
            out.append(v)
    out.sort(key=lambda el: sorted(inversion_set(el)))
    return tuple(out)


def hasse_edges(kind: OrderKind, sys) -> Tuple[Tuple[int, int], ...]:
    """Cover pairs (lower index, upper index) over the whole group."""
    gr = group(sys)
    out = []
    for i, el in enumerate(gr.elements):
        for c in covers(kind, el):
            out.append((i, gr.index_of(c)))
    return tuple(sorted(out))
