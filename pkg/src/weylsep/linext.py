"""Two-dimensional posets from permutations, their linear extensions, and
Sidorenko's inequality with its q-analog.

The poset of a permutation pi puts p_i below p_j when i <= j and
pi(i) <= pi(j); its linear extensions, read as words, are exactly the
permutations whose position-inversion set is contained in that of pi, which
is the lower weak-order ideal under the group element of pi.  The complement
poset reverses the second coordinate, realized by the longest element acting
on values.  Both the interval route and a direct backtracking enumeration
are computed and compared, so the correspondence is re-verified on every
call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

from .errors import DomainError
from . import order, rootsys, separable, weyl
from .qpoly import QPolynomial, q_factorial

_systems: Dict[int, rootsys.RootSystem] = {}


def _system(n: int) -> rootsys.RootSystem:
    if n < 2:
        raise DomainError("permutations need n >= 2")
    if n not in _systems:
        _systems[n] = rootsys.build("A", n - 1)
    return _systems[n]


def _check_perm(pi: Sequence[int]) -> Tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise DomainError(f"{pi} is not a permutation of 1..{len(pi)}")
    return pi


@dataclass(frozen=True)
class TwoDimPoset:
    """The intersection of the identity order with the order of pi."""

    n: int
    pi: Tuple[int, ...]
    relation: Tuple[Tuple[bool, ...], ...]  # relation[i][j]: p_(i+1) <= p_(j+1)

    def leq(self, i: int, j: int) -> bool:
        """1-based comparison of poset elements."""
        return self.relation[i - 1][j - 1]


def poset_of(pi: Sequence[int]) -> TwoDimPoset:
    pi = _check_perm(pi)
    n = len(pi)
    rel = tuple(
        tuple(i <= j and pi[i] <= pi[j] for j in range(n)) for i in range(n)
    )
    return TwoDimPoset(n, pi, rel)


def complement(pi: Sequence[int]) -> Tuple[int, ...]:
    """Word of (longest element) * pi: the value-complemented permutation,
    whose poset reverses the second defining order."""
    pi = _check_perm(pi)
    sys = _system(len(pi))
    el = weyl.multiply(weyl.longest_element(sys), weyl.from_one_line(sys, pi))
    return weyl.one_line(el)


def _backtrack_extensions(P: TwoDimPoset) -> Set[Tuple[int, ...]]:
    """All order-preserving bijections onto 1..n, as assignment words."""
    n = P.n
    below_count = [sum(1 for i in range(n) if i != j and P.relation[i][j]) for j in range(n)]
    word = [0] * n
    out: Set[Tuple[int, ...]] = set()
    remaining = below_count[:]
    used = [False] * n

    def place(value: int) -> None:
        if value > n:
            out.add(tuple(word))
            return
        for j in range(n):
            if not used[j] and remaining[j] == 0:
                used[j] = True
                word[j] = value
                touched = []
                for k in range(n):
                    if not used[k] and P.relation[j][k]:
                        remaining[k] -= 1
                        touched.append(k)
                place(value + 1)
                for k in touched:
                    remaining[k] += 1
                used[j] = False
        return

    place(1)
    return out


def linear_extensions(pi: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Linear extensions of the poset of pi, as words, sorted.

    Computed both as the lower weak-order ideal of the element of pi and by
    direct backtracking; a mismatch would mean the ideal description of
    linear extensions broke, so it raises.
    """
    pi = _check_perm(pi)
    sys = _system(len(pi))
    el = weyl.from_one_line(sys, pi)
    ideal = order.lower_interval(order.LEFT_WEAK, el)
    from_interval = {weyl.one_line(u) for u in ideal.elements}
    from_poset = _backtrack_extensions(poset_of(pi))
    if from_interval != from_poset:
        raise AssertionError(
            "weak-order ideal and poset backtracking disagree on linear extensions"
        )
    return tuple(sorted(from_interval))


def e_poly(pi: Sequence[int]) -> QPolynomial:
    """Generating function of linear extensions graded by inversions."""
    pi = _check_perm(pi)
    sys = _system(len(pi))
    el = weyl.from_one_line(sys, pi)
    gf = order.rank_gf(order.lower_interval(order.LEFT_WEAK, el))
    if gf(1) != len(linear_extensions(pi)):
        raise AssertionError("graded count disagrees with the extension count")
    return gf


def count_e(pi: Sequence[int]) -> int:
    return len(linear_extensions(pi))


@dataclass(frozen=True)
class SidorenkoRecord:
    pi: Tuple[int, ...]
    count: int
    complement_count: int
    product: int
    factorial: int
    equality: bool
    separable: bool


def sidorenko_check(pi: Sequence[int]) -> SidorenkoRecord:
    """e(P) * e(P-complement) against n!, with the equality flag compared to
    separability of pi.  A product below n! would falsify the inequality and
    raises immediately."""
    pi = _check_perm(pi)
    n = len(pi)
    a = count_e(pi)
    b = count_e(complement(pi))
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    product = a * b
    if product < fact:
        raise AssertionError(f"product {product} below {n}! for {pi}")
    sep = separable.is_separable(weyl.from_one_line(_system(n), pi))
    return SidorenkoRecord(pi, a, b, product, fact, product == fact, sep)


def q_sidorenko_check(pi: Sequence[int]) -> bool:
    """Coefficientwise comparison of e(P;q) e(P-complement;q) against [n]!_q."""
    pi = _check_perm(pi)
    n = len(pi)
    lhs = e_poly(pi) * e_poly(complement(pi))
    rhs = q_factorial(n)
    top = max(lhs.degree, rhs.degree)
    return all(lhs.coeff(d) >= rhs.coeff(d) for d in range(top + 1))


def is_series_parallel(P: TwoDimPoset) -> bool:
    """Whether the poset decomposes into singletons by disjoint unions and
    ordinal sums.  Independent of the separability machinery."""
    return _sp(frozenset(range(P.n)), P)


def _sp(support, P: TwoDimPoset) -> bool:
    if len(support) == 1:
        return True
    comparable = lambda i, j: P.relation[i][j] or P.relation[j][i]
    # disjoint-union split: components of the comparability graph
    comps = _graph_components(support, comparable)
    if len(comps) > 1:
        return all(_sp(c, P) for c in comps)
    # ordinal-sum split: components of the incomparability graph; distinct
    # blocks are then totally ordered against each other
    incomparable = lambda i, j: not comparable(i, j)
    blocks = _graph_components(support, incomparable)
    if len(blocks) > 1:
        return all(_sp(b, P) for b in blocks)
    return False


def _graph_components(support, adj) -> List[frozenset]:
    todo = set(support)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in todo:
                if u not in comp and adj(u, v):
                    comp.add(u)
                    stack.append(u)
        comps.append(frozenset(comp))
        todo -= comp
    return comps
