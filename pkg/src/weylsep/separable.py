"""Separability of Weyl group elements via the recursive pivot definition.

An element is separable when its ambient system is of type A1, or splits as
a direct sum with separable restrictions, or (irreducible case) has a simple
root alpha whose root-poset upper set lies entirely inside the inversion set
(a full pivot) or entirely outside it (an empty pivot), with the restriction
to the complementary parabolic again separable.  The recursion runs on
(inversion set, support) pairs inside the ambient coordinates, so no abstract
subsystems need to be built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple, Union

from .errors import DomainError
from . import order
from .qpoly import symmetry_break_index
from .rootsys import RootSystem
from .weyl import GroupElement, group, inversion_set, length, one_line

Trace = Union["LeafStep", "SplitStep", "PivotStep"]


@dataclass(frozen=True)
class LeafStep:
    """Base of the recursion: an empty or rank-one support."""

    support: Tuple[int, ...]
    inverted: bool  # for rank one, whether the simple root is an inversion


@dataclass(frozen=True)
class SplitStep:
    """A reducible support handled componentwise."""

    parts: Tuple[Trace, ...]


@dataclass(frozen=True)
class PivotStep:
    pivot: int
    kind: str  # "full" or "empty"
    child: Trace


def _diagram_components(sys: RootSystem, J: FrozenSet[int]) -> List[FrozenSet[int]]:
    comps = []
    todo = set(J)
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in J:
                if u not in comp and sys.cartan[v][u] != 0:
                    comp.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
        todo -= comp
    comps.sort(key=min)
    return comps


def _restrict_inv(sys: RootSystem, inv: FrozenSet[int], J: FrozenSet[int]) -> FrozenSet[int]:
    return frozenset(b for b in inv if sys.supports[b] <= J)


def _upper_in(sys: RootSystem, i: int, J: FrozenSet[int]) -> FrozenSet[int]:
    # positive roots supported on J that dominate alpha_i; comparisons inside
    # the parabolic agree with the ambient coordinatewise test
    return frozenset(
        b for b in range(len(sys.positives))
        if sys.supports[b] <= J and sys.positives[b][i] >= 1
    )


def _separable(sys: RootSystem, inv: FrozenSet[int],
               J: FrozenSet[int]) -> Optional[Trace]:
    """Trace of a successful separability derivation, or None."""
    if len(J) == 0:
        return LeafStep((), False)
    comps = _diagram_components(sys, J)
    if len(comps) > 1:
        parts = []
        for comp in comps:
            tr = _separable(sys, _restrict_inv(sys, inv, comp), comp)
            if tr is None:
                return None
            parts.append(tr)
        return SplitStep(tuple(parts))
    if len(J) == 1:
        i = next(iter(J))
        return LeafStep((i,), sys.simple_index(i) in inv)
    for i in sorted(J):
        upper = _upper_in(sys, i, J)
        if upper <= inv:
            kind = "full"
        elif not (upper & inv):
            kind = "empty"
        else:
            continue
        J2 = J - {i}
        child = _separable(sys, _restrict_inv(sys, inv, J2), J2)
        if child is not None:
            return PivotStep(i, kind, child)
    return None


def separability_trace(w: GroupElement) -> Optional[Trace]:
    """Derivation tree witnessing separability, or None for non-separable w.

    Pivots are tried smallest simple index first, so traces are deterministic.
    """
    sys = w.system
    return _separable(sys, inversion_set(w), frozenset(range(sys.rank)))


def is_separable(w: GroupElement) -> bool:
    return separability_trace(w) is not None


def render_trace(trace: Trace, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(trace, LeafStep):
        if not trace.support:
            return f"{pad}empty"
        i = trace.support[0]
        state = "inverted" if trace.inverted else "identity"
        return f"{pad}A1 leaf at alpha{i + 1} ({state})"
    if isinstance(trace, SplitStep):
        lines = [f"{pad}split into components"]
        lines.extend(render_trace(p, indent + 1) for p in trace.parts)
        return "\n".join(lines)
    lines = [f"{pad}{trace.kind} pivot alpha{trace.pivot + 1}"]
    lines.append(render_trace(trace.child, indent + 1))
    return "\n".join(lines)


def enumerate_separable(sys: RootSystem) -> Tuple[GroupElement, ...]:
    """All separable elements, in the group's deterministic order."""
    return tuple(w for w in group(sys).elements if is_separable(w))


def is_minimal_non_separable(w: GroupElement) -> bool:
    """Non-separable, with every proper parabolic restriction separable.

    Checking the corank-one parabolics suffices: separability is inherited by
    restriction, so deeper parabolics stay separable automatically.  The
    equivalence with the all-proper-subsets definition is exercised in tests.
    """
    sys = w.system
    inv = inversion_set(w)
    full = frozenset(range(sys.rank))
    if _separable(sys, inv, full) is not None:
        return False
    for i in range(sys.rank):
        J = full - {i}
        if _separable(sys, _restrict_inv(sys, inv, J), J) is None:
            return False
    return True


def enumerate_minimal_non_separable(sys: RootSystem) -> Tuple[GroupElement, ...]:
    return tuple(w for w in group(sys).elements if is_minimal_non_separable(w))


def _require_minimal_type_a(w: GroupElement) -> Tuple[int, ...]:
    word = one_line(w)  # raises DomainError off type A
    if not is_minimal_non_separable(w):
        raise DomainError("structure checks apply to minimal non-separable elements")
    return word


def check_band_structure(w: GroupElement) -> bool:
    """Three-band shape of a minimal non-separable one-line word.

    With p = w(1) and q = w(n): if p < q the entries after position 1 fall as
    a block above q, then a block strictly between p and q, then a block below
    p; mirrored if p > q.
    """
    word = _require_minimal_type_a(w)
    n = len(word)
    p, q = word[0], word[-1]
    if p < q:
        for i in range(2, n):  # positions 2..n-1, 1-based
            v = word[i - 1]
            if 2 <= i <= n + 1 - q:
                if not v > q:
                    return False
            elif n + 2 - q <= i <= n - p:
                if not (p < v < q):
                    return False
            elif n - p + 1 <= i <= n - 1:
                if not v < p:
                    return False
    else:
        for i in range(2, n):
            v = word[i - 1]
            if 2 <= i <= q:
                if not v < q:
                    return False
            elif q + 1 <= i <= p - 1:
                if not (q < v < p):
                    return False
            elif p <= i <= n - 1:
                if not v > p:
                    return False
    return True


def check_symmetry_break(w: GroupElement) -> bool:
    """The lower weak-order interval of a minimal non-separable element is
    palindromic through index |w(1) - w(n)| - 1 and breaks exactly after."""
    word = _require_minimal_type_a(w)
    k = abs(word[0] - word[-1]) - 1
    f = order.rank_gf(order.lower_interval(order.LEFT_WEAK, w))
    return symmetry_break_index(f) == k + 1
