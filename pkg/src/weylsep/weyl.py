"""Weyl group elements as exact integer-matrix actions on the root lattice.

An element stores its matrix over the simple-root basis together with the
matrix of its inverse, so inversion is free and right-weak-order queries
stay cheap.  Inversion sets (as sets of positive-root indices) are memoized
per element.  A full-group enumeration with deterministic ordering backs the
order-theoretic and sweep machinery.
"""

from __future__ import annotations

import os
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BudgetExceededError,
    DomainError,
    MixedSystemsError,
    NotBiconvexError,
)
from .qpoly import QPolynomial, q_int
from .rootsys import Coords, RootSystem, irreducible_degrees

Matrix = Tuple[Tuple[int, ...], ...]

DEFAULT_GROUP_BUDGET = 10**6


def _mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_vec(a: Matrix, v: Coords) -> Coords:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


class GroupElement:
    """An element of W(Phi), acting on root coordinates by its matrix."""

    __slots__ = ("system", "matrix", "inv_matrix", "_inversions")

    def __init__(self, system: RootSystem, matrix: Matrix, inv_matrix: Matrix):
        self.system = system
        self.matrix = matrix
        self.inv_matrix = inv_matrix
        self._inversions: Optional[FrozenSet[int]] = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((id(self.system), self.matrix))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __repr__(self) -> str:
        word = canonical_word(self)
        if not word:
            return "GroupElement(e)"
        return "GroupElement(" + "*".join(f"s{i + 1}" for i in word) + ")"


def identity(sys: RootSystem) -> GroupElement:
    cached = sys._cache.get("identity")
    if cached is None:
        m = _mat_identity(sys.rank)
        cached = GroupElement(sys, m, m)
        cached._inversions = frozenset()
        sys._cache["identity"] = cached
    return cached


def simple_reflection(sys: RootSystem, i: int) -> GroupElement:
    """s_i, acting by s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i."""
    if not 0 <= i < sys.rank:
        raise DomainError(f"simple index {i} out of range")
    cached = sys._cache.get("simples")
    if cached is None:
        cached = []
        for k in range(sys.rank):
            m = [[1 if r == c else 0 for c in range(sys.rank)] for r in range(sys.rank)]
            for j in range(sys.rank):
                m[k][j] -= sys.cartan[k][j]
            mt = tuple(tuple(row) for row in m)
            el = GroupElement(sys, mt, mt)
            el._inversions = frozenset({sys.simple_index(k)})
            cached.append(el)
        sys._cache["simples"] = cached
    return cached[i]


def from_word(sys: RootSystem, letters: Iterable[int]) -> GroupElement:
    out = identity(sys)
    for i in letters:
        out = multiply(out, simple_reflection(sys, i))
    return out


def multiply(v: GroupElement, w: GroupElement) -> GroupElement:
    """The composite acting as v after w: (v*w)(beta) = v(w(beta))."""
    if v.system is not w.system:
        raise MixedSystemsError("cannot multiply elements of different systems")
    return GroupElement(
        v.system, _mat_mul(v.matrix, w.matrix), _mat_mul(w.inv_matrix, v.inv_matrix)
    )


def inverse(w: GroupElement) -> GroupElement:
    return GroupElement(w.system, w.inv_matrix, w.matrix)


def act(w: GroupElement, beta: Coords) -> Coords:
    return _mat_vec(w.matrix, tuple(beta))


def inversion_set(w: GroupElement) -> FrozenSet[int]:
    """Indices of the positive roots sent to negative roots by w."""
    if w._inversions is None:
        sys = w.system
        inv = []
        for idx, beta in enumerate(sys.positives):
            image = _mat_vec(w.matrix, beta)
            if all(c <= 0 for c in image):
                inv.append(idx)
        w._inversions = frozenset(inv)
    return w._inversions


def length(w: GroupElement) -> int:
    return len(inversion_set(w))


def _step_inversions(sys: RootSystem, inv: FrozenSet[int], i: int) -> FrozenSet[int]:
    """Inversion set of w * s_i given the inversion set of w."""
    table = sys._simple_action[i]
    ai = sys.simple_index(i)
    out = {table[b] for b in inv if b != ai}
    if ai not in inv:
        out.add(ai)
    return frozenset(out)


def descents(w: GroupElement, side: str = "right") -> FrozenSet[int]:
    """Simple indices i with length(w s_i) < length(w) (or s_i w for left)."""
    if side == "left":
        return descents(inverse(w), "right")
    if side != "right":
        raise DomainError("side must be 'left' or 'right'")
    sys = w.system
    inv = inversion_set(w)
    return frozenset(i for i in range(sys.rank) if sys.simple_index(i) in inv)


def is_biconvex(sys: RootSystem, S: Iterable[int]) -> bool:
    """Both closure conditions characterizing inversion sets.

    Closed: the sum of two members that is a root lies in S.  Co-closed:
    every decomposition of a member into two positive roots meets S.
    """
    S = frozenset(S)
    for pair, k in sys._sum_index.items():
        if pair[0] < pair[1] and pair[0] in S and pair[1] in S and k not in S:
            return False
    for k in S:
        for (i, j) in sys._decompositions[k]:
            if i not in S and j not in S:
                return False
    return True


def element_from_inversions(sys: RootSystem, S: Iterable[int]) -> GroupElement:
    """The unique element whose inversion set is S.

    Works by repeatedly stripping the smallest simple root found in S; raises
    NotBiconvexError if S is not an inversion set.
    """
    S = frozenset(S)
    if not S <= set(range(len(sys.positives))):
        raise DomainError("inversion indices out of range")
    if not is_biconvex(sys, S):
        raise NotBiconvexError(f"{sorted(S)} is not biconvex")
    simple_at = {sys.simple_index(i): i for i in range(sys.rank)}
    remaining = S
    out = identity(sys)
    while remaining:
        i = min((simple_at[b] for b in remaining if b in simple_at), default=None)
        if i is None:
            raise NotBiconvexError(f"{sorted(S)} contains no simple root")
        out = multiply(simple_reflection(sys, i), out)
        ai = sys.simple_index(i)
        table = sys._simple_action[i]
        remaining = frozenset(table[b] for b in remaining if b != ai)
    if inversion_set(out) != S:
        raise AssertionError("descent stripping failed to reproduce the input set")
    return out


def longest_element(sys: RootSystem) -> GroupElement:
    cached = sys._cache.get("w0")
    if cached is None:
        cached = longest_parabolic(sys, range(sys.rank))
        sys._cache["w0"] = cached
    return cached


def longest_parabolic(sys: RootSystem, J: Iterable[int]) -> GroupElement:
    """Longest element of the parabolic subgroup generated by J, embedded."""
    J = frozenset(J)
    if not J <= set(range(sys.rank)):
        raise DomainError("J must be a set of simple indices")
    key = ("w0J", J)
    cached = sys._cache.get(key)
    if cached is not None:
        return cached
    w = identity(sys)
    inv = frozenset()
    while True:
        i = next((i for i in sorted(J) if sys.simple_index(i) not in inv), None)
        if i is None:
            break
        w = multiply(w, simple_reflection(sys, i))
        inv = _step_inversions(sys, inv, i)
    w._inversions = inv
    sys._cache[key] = w
    return w


def parabolic_decompose(w: GroupElement, J: Iterable[int]) -> Tuple[GroupElement, GroupElement]:
    """Unique length-additive w = (coset part) * (W_J part).

    The coset part has no right descents in J; lengths add by construction
    (each stripped descent lowers the length by exactly one).
    """
    sys = w.system
    J = frozenset(J)
    cur = w
    z = identity(sys)
    while True:
        ds = descents(cur, "right") & J
        if not ds:
            break
        i = min(ds)
        cur = multiply(cur, simple_reflection(sys, i))
        z = multiply(simple_reflection(sys, i), z)
    if length(cur) + length(z) != length(w):
        raise AssertionError("parabolic decomposition is not length-additive")
    return cur, z


def canonical_word(w: GroupElement) -> Tuple[int, ...]:
    """A reduced word for w (greedy smallest right descent, read left to right)."""
    letters: List[int] = []
    cur = w
    while True:
        ds = descents(cur, "right")
        if not ds:
            break
        i = min(ds)
        cur = multiply(cur, simple_reflection(cur.system, i))
        letters.append(i)
    letters.reverse()
    return tuple(letters)


# -- type A one-line identification ------------------------------------------


def _require_type_a(sys: RootSystem) -> int:
    if sys.type_label != (("A", sys.rank),):
        raise DomainError("one-line notation needs an irreducible type A system")
    return sys.rank + 1


def _evec_to_alpha(n: int, a: int, b: int) -> Coords:
    """e_a - e_b (1-based) in simple-root coordinates of A_(n-1)."""
    coords = [0] * (n - 1)
    lo, hi, sign = (a, b, 1) if a < b else (b, a, -1)
    for k in range(lo, hi):
        coords[k - 1] = sign
    return tuple(coords)


def from_one_line(sys: RootSystem, word: Sequence[int]) -> GroupElement:
    """Element of the type A system permuting coordinates by the given word.

    The identification sends the word w to the map e_i -> e_(w(i)), so the
    group product composes words as functions.
    """
    n = _require_type_a(sys)
    word = tuple(word)
    if sorted(word) != list(range(1, n + 1)):
        raise DomainError(f"{word} is not a permutation of 1..{n}")
    cols = [_evec_to_alpha(n, word[j], word[j + 1]) for j in range(n - 1)]
    matrix = tuple(tuple(cols[j][i] for j in range(n - 1)) for i in range(n - 1))
    inv_word = [0] * n
    for i, v in enumerate(word):
        inv_word[v - 1] = i + 1
    icols = [_evec_to_alpha(n, inv_word[j], inv_word[j + 1]) for j in range(n - 1)]
    inv_matrix = tuple(tuple(icols[j][i] for j in range(n - 1)) for i in range(n - 1))
    return GroupElement(sys, matrix, inv_matrix)


def one_line(w: GroupElement) -> Tuple[int, ...]:
    """One-line word of a type A element (inverse of from_one_line)."""
    sys = w.system
    n = _require_type_a(sys)
    pairs = []
    for j in range(n - 1):
        c = _mat_vec(w.matrix, sys.simple_root(j))
        evec = [0] * n
        evec[0] = c[0]
        for i in range(1, n - 1):
            evec[i] = c[i] - c[i - 1]
        evec[n - 1] = -c[n - 2]
        a = evec.index(1) + 1
        b = evec.index(-1) + 1
        pairs.append((a, b))
    word = [pairs[0][0]]
    for (a, b) in pairs:
        if a != word[-1]:
            raise AssertionError("matrix does not permute coordinates")
        word.append(b)
    return tuple(word)


# -- group enumeration --------------------------------------------------------


def degrees(sys: RootSystem) -> Tuple[int, ...]:
    """Concatenated degree lists of the irreducible components."""
    out: List[int] = []
    for fam, rk in sys.type_label:
        out.extend(irreducible_degrees(fam, rk))
    return tuple(out)


def group_order(sys: RootSystem) -> int:
    n = 1
    for d in degrees(sys):
        n *= d
    return n


def _budget() -> int:
    return int(os.environ.get("WEYLSEP_MAX_GROUP", DEFAULT_GROUP_BUDGET))


class Group:
    """A fully enumerated Weyl group with deterministic element order.

    Elements are sorted by (length, sorted inversion tuple).  Products and
    inverses are available as index arithmetic once the corresponding lazy
    tables have been built.
    """

    def __init__(self, sys: RootSystem):
        order = group_order(sys)
        if order > _budget():
            raise BudgetExceededError(
                f"group of order {order} exceeds budget {_budget()}"
            )
        self.system = sys
        layer = [identity(sys)]
        elements: List[GroupElement] = []
        seen = {frozenset()}
        while layer:
            layer.sort(key=lambda el: sorted(inversion_set(el)))
            elements.extend(layer)
            nxt: List[GroupElement] = []
            for el in layer:
                inv = inversion_set(el)
                for i in range(sys.rank):
                    if sys.simple_index(i) in inv:
                        continue
                    new_inv = _step_inversions(sys, inv, i)
                    if new_inv not in seen:
                        seen.add(new_inv)
                        nel = multiply(el, simple_reflection(sys, i))
                        nel._inversions = new_inv
                        nxt.append(nel)
            layer = nxt
        if len(elements) != order:
            raise AssertionError("enumeration did not reach the full group")
        self.elements: Tuple[GroupElement, ...] = tuple(elements)
        self.index_by_inversions: Dict[FrozenSet[int], int] = {
            inversion_set(el): i for i, el in enumerate(elements)
        }
        self.lengths: Tuple[int, ...] = tuple(length(el) for el in elements)
        self._inverse_index: Optional[Tuple[int, ...]] = None
        self._product_table: Optional[List[Tuple[int, ...]]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, w: GroupElement) -> int:
        if w.system is not self.system:
            raise MixedSystemsError("element is not from this group's system")
        return self.index_by_inversions[inversion_set(w)]

    def inverse_index(self, i: int) -> int:
        if self._inverse_index is None:
            sys = self.system
            out = []
            for el in self.elements:
                inv = frozenset(
                    sys.root_index[tuple(-c for c in _mat_vec(el.matrix, sys.positives[b]))]
                    for b in inversion_set(el)
                )
                out.append(self.index_by_inversions[inv])
            self._inverse_index = tuple(out)
        return self._inverse_index[i]

    def product_table(self) -> List[Tuple[int, ...]]:
        if self._product_table is None:
            els = self.elements
            table = []
            for a in els:
                row = tuple(self.index_of(multiply(a, b)) for b in els)
                table.append(row)
            self._product_table = table
        return self._product_table


def group(sys: RootSystem) -> Group:
    cached = sys._cache.get("group")
    if cached is None:
        cached = Group(sys)
        sys._cache["group"] = cached
    return cached


def enumerate_group(sys: RootSystem) -> Tuple[GroupElement, ...]:
    return group(sys).elements


def poincare(sys: RootSystem) -> QPolynomial:
    """Length generating function, checked against the degree catalog."""
    cached = sys._cache.get("poincare")
    if cached is None:
        hist = [0] * (len(sys.positives) + 1)
        for ln in group(sys).lengths:
            hist[ln] += 1
        cached = QPolynomial(hist)
        expected = QPolynomial((1,))
        for d in degrees(sys):
            expected = expected * q_int(d)
        if cached != expected:
            raise AssertionError(
                "Poincare polynomial disagrees with the degree catalog"
            )
        sys._cache["poincare"] = cached
    return cached


def reflections(sys: RootSystem) -> Tuple[GroupElement, ...]:
    """All reflections, one per positive root."""
    cached = sys._cache.get("reflections")
    if cached is None:
        out = []
        for beta in sys.positives:
            cols = []
            for j in range(sys.rank):
                aj = sys.simple_root(j)
                c = sys.coroot_pairing(aj, beta)
                cols.append(tuple(aj[k] - c * beta[k] for k in range(sys.rank)))
            m = tuple(tuple(cols[j][i] for j in range(sys.rank)) for i in range(sys.rank))
            out.append(GroupElement(sys, m, m))
        cached = tuple(out)
        sys._cache["reflections"] = cached
    return cached
