"""Generalized quotients, splittings, and the constructive decomposition.

W/U collects the elements whose products with everything in U are
length-additive.  For U the right-weak ideal under a single element u this
is computed two ways on every call: by the definitional length filter and as
the left-weak interval below w0 u^-1; disagreement would falsify the ideal
description and raises.  A splitting is a pair (X, Y) whose multiplication
map onto the group is length-additive and bijective; verification reports a
concrete witness on failure.

The type A decomposition of any w against any u walks a chain in the strong
Bruhat order: starting from the identity, a certified promotion step replaces
z by a strictly larger element still below w on the left and below u on the
right, until the triple (w z^-1)(z)(z^-1 u) is reduced.  The promotion step
rewires a doubly-crossing pair of wires; it works on one-line words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import DomainError
from . import order, separable, weyl
from .weyl import GroupElement, Group, group, inversion_set, inverse, length, multiply

Word = Tuple[int, ...]


# -- one-line word helpers (function composition) -----------------------------


def _compose(a: Word, b: Word) -> Word:
    return tuple(a[b[i] - 1] for i in range(len(a)))


def _winv(a: Word) -> Word:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v - 1] = i + 1
    return tuple(out)


def _inv_pairs(a: Word) -> FrozenSet[Tuple[int, int]]:
    n = len(a)
    return frozenset(
        (i, j) for i in range(n) for j in range(i + 1, n) if a[i] > a[j]
    )


def _wlen(a: Word) -> int:
    return len(_inv_pairs(a))


def _identity_word(n: int) -> Word:
    return tuple(range(1, n + 1))


def _swap(a: Word, i: int) -> Word:
    # right multiplication by the adjacent transposition at positions i, i+1
    out = list(a)
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def _right_descents(a: Word) -> List[int]:
    return [i for i in range(len(a) - 1) if a[i] > a[i + 1]]


# -- generalized quotients ----------------------------------------------------


def right_ideal(u: GroupElement) -> Tuple[GroupElement, ...]:
    """The right weak-order ideal below u, in group order."""
    gr = group(u.system)
    top = inversion_set(inverse(u))
    return tuple(
        w for w in gr.elements if inversion_set(inverse(w)) <= top
    )


def _quotient_of_element(u: GroupElement) -> Tuple[GroupElement, ...]:
    """W/[e,u]_R, computed by the definitional filter and the interval.

    Length-additivity against the single generator already enforces it
    against the whole ideal: if ell(wu) = ell(w) + ell(u) and u = u' v is
    reduced, then ell(wu) <= ell(wu') + ell(v) <= ell(w) + ell(u') + ell(v)
    collapses to equalities.  Both routes are compared on every call.
    """
    sys = u.system
    gr = group(sys)
    lu = length(u)
    by_filter = tuple(
        w for w in gr.elements if length(multiply(w, u)) == length(w) + lu
    )
    top = multiply(weyl.longest_element(sys), inverse(u))
    top_inv = inversion_set(top)
    by_interval = tuple(w for w in gr.elements if inversion_set(w) <= top_inv)
    if by_filter != by_interval:
        raise AssertionError("generalized quotient filter and interval disagree")
    return by_filter


def generalized_quotient(U: Iterable[GroupElement]) -> Tuple[GroupElement, ...]:
    """W/U for an arbitrary nonempty subset U, double-computed.

    The definitional filter runs over all of U; the interval route uses the
    right-weak join of U.  The two must agree.
    """
    U = list(U)
    if not U:
        raise DomainError("generalized quotient of the empty set")
    sys = U[0].system
    gr = group(sys)
    lengths = [length(u) for u in U]
    by_filter = tuple(
        w
        for w in gr.elements
        if all(length(multiply(w, u)) == length(w) + lu for u, lu in zip(U, lengths))
    )
    u0 = order.join(order.RIGHT_WEAK, U)
    top = multiply(weyl.longest_element(sys), inverse(u0))
    top_inv = inversion_set(top)
    by_interval = tuple(w for w in gr.elements if inversion_set(w) <= top_inv)
    if by_filter != by_interval:
        raise AssertionError("generalized quotient filter and interval disagree")
    return by_filter


# -- splittings ---------------------------------------------------------------


@dataclass(frozen=True)
class SplittingWitness:
    kind: str  # "not_length_additive" | "collision" | "missing"
    detail: Tuple


@dataclass(frozen=True)
class Splitting:
    X: Tuple[GroupElement, ...]
    Y: Tuple[GroupElement, ...]


def is_splitting(
    X: Iterable[GroupElement],
    Y: Iterable[GroupElement],
    of: Optional[Iterable[GroupElement]] = None,
) -> Tuple[bool, Optional[SplittingWitness]]:
    """Whether multiplication X x Y -> target is length-additive and bijective.

    The target defaults to the whole group.  On failure the first witness in
    the deterministic scan order is returned.
    """
    X = list(X)
    Y = list(Y)
    if not X or not Y:
        raise DomainError("splitting factors must be nonempty")
    sys = X[0].system
    gr = group(sys)
    table = gr.product_table()
    xi = [gr.index_of(x) for x in X]
    yi = [gr.index_of(y) for y in Y]
    target = gr.elements if of is None else list(of)
    target_idx = {gr.index_of(t) for t in target}
    hit: Dict[int, Tuple[int, int]] = {}
    for a in xi:
        row = table[a]
        la = gr.lengths[a]
        for b in yi:
            p = row[b]
            if gr.lengths[p] != la + gr.lengths[b]:
                return False, SplittingWitness(
                    "not_length_additive", (gr.elements[a], gr.elements[b])
                )
            if p in hit:
                a0, b0 = hit[p]
                return False, SplittingWitness(
                    "collision",
                    (gr.elements[a0], gr.elements[b0], gr.elements[a], gr.elements[b], gr.elements[p]),
                )
            if p not in target_idx:
                return False, SplittingWitness(
                    "outside_target", (gr.elements[a], gr.elements[b], gr.elements[p])
                )
            hit[p] = (a, b)
    for t in sorted(target_idx):
        if t not in hit:
            return False, SplittingWitness("missing", (gr.elements[t],))
    return True, None


def separable_splitting(u: GroupElement) -> Splitting:
    """The verified splitting (W/[e,u]_R, [e,u]_R) for separable u."""
    if not separable.is_separable(u):
        raise DomainError("separable_splitting needs a separable element")
    X = _quotient_of_element(u)
    Y = right_ideal(u)
    ok, witness = is_splitting(X, Y)
    if not ok:
        raise AssertionError(f"separable element failed to split: {witness}")
    return Splitting(X, Y)


@dataclass(frozen=True)
class SweepRow:
    u: GroupElement
    separable: bool
    splits: bool
    witness: Optional[SplittingWitness]


@dataclass(frozen=True)
class SweepReport:
    rows: Tuple[SweepRow, ...]

    @property
    def counterexamples(self) -> Tuple[SweepRow, ...]:
        return tuple(r for r in self.rows if r.separable != r.splits)

    @property
    def split_count(self) -> int:
        return sum(1 for r in self.rows if r.splits)


def sweep_only_if(sys) -> SweepReport:
    """For every u: does (W/[e,u]_R, [e,u]_R) split, and is u separable?

    The counterexample list of the report must come back empty for the
    symmetric group.
    """
    rows = []
    for u in group(sys).elements:
        X = _quotient_of_element(u)
        Y = right_ideal(u)
        ok, witness = is_splitting(X, Y)
        rows.append(SweepRow(u, separable.is_separable(u), ok, witness))
    return SweepReport(tuple(rows))


def surjectivity_check(u: GroupElement) -> bool:
    """Whether W/[e,u]_R times [e,u]_R covers the whole group."""
    gr = group(u.system)
    table = gr.product_table()
    xi = [gr.index_of(x) for x in _quotient_of_element(u)]
    yi = [gr.index_of(y) for y in right_ideal(u)]
    seen = bytearray(len(gr))
    for a in xi:
        row = table[a]
        for b in yi:
            seen[row[b]] = 1
    return all(seen)


# -- promotion and decomposition (type A) --------------------------------------


def _one_line_words(*els: GroupElement) -> Tuple[Word, ...]:
    return tuple(weyl.one_line(el) for el in els)


def _reduced3(a: Word, b: Word, c: Word) -> bool:
    return _wlen(_compose(_compose(a, b), c)) == _wlen(a) + _wlen(b) + _wlen(c)


def _promote_words(w: Word, pi: Word, u: Word) -> Word:
    """One promotion step on words; see promote for the contract."""
    wp = _compose(w, _winv(u))
    pip = _compose(_winv(u), pi)
    # peel removable descents off both sides until single descents remain
    for a in _right_descents(pip):
        cand = _swap(pip, a)
        if not _reduced3(wp, u, cand):
            return _promote_words(w, _compose(u, cand), u)
    wpi = _winv(wp)
    for b in _right_descents(wpi):  # left descents of wp
        cand = _winv(_swap(wpi, b))  # s_b composed with wp
        if not _reduced3(cand, u, pip):
            return _promote_words(_compose(cand, u), pi, u)
    rds = _right_descents(pip)
    lds = _right_descents(wpi)
    if len(rds) != 1 or len(lds) != 1:
        raise AssertionError("descent peeling did not reach single descents")
    a = rds[0]
    b = lds[0]
    total = _compose(_compose(wp, u), pip)
    if total[a] != b + 1 or total[a + 1] != b + 2:
        raise AssertionError("double crossing is not aligned as expected")
    upip = _compose(u, pip)
    # wires entering from the top right that leave from the bottom left
    I = [a]
    while True:
        t = I[-1]
        nxt = None
        for i2 in range(t - 1, -1, -1):
            if pip[i2] > pip[a + 1] and upip[i2] < upip[t]:
                nxt = i2
                break
        if nxt is None:
            break
        I.append(nxt)
    J = [a + 1]
    while True:
        t = J[-1]
        nxt = None
        for j2 in range(t + 1, len(pip)):
            if pip[j2] < pip[a] and upip[j2] > upip[t]:
                nxt = j2
                break
        if nxt is None:
            break
        J.append(nxt)
    pipp = list(pip)
    for t in range(len(I) - 1):
        pipp[I[t]] = pip[I[t + 1]]
    pipp[I[-1]] = pip[a + 1]
    for t in range(len(J) - 1):
        pipp[J[t]] = pip[J[t + 1]]
    pipp[J[-1]] = pip[a]
    return _compose(_compose(u, pip), _winv(tuple(pipp)))


def promote(w: GroupElement, pi: GroupElement, u: GroupElement) -> GroupElement:
    """Strictly Bruhat-larger u' with u' below w on the left and below pi on
    the right, given that (w u^-1)(u)(u^-1 pi) is not reduced.

    Type A only.  Postconditions are asserted before returning.
    """
    sys = w.system
    W, P, U = _one_line_words(w, pi, u)
    if not _inv_pairs(U) <= _inv_pairs(W):
        raise DomainError("promote needs u below w in left weak order")
    if not _inv_pairs(_winv(U)) <= _inv_pairs(_winv(P)):
        raise DomainError("promote needs u below pi in right weak order")
    if _reduced3(_compose(W, _winv(U)), U, _compose(_winv(U), P)):
        raise DomainError("promote needs a non-reduced triple")
    out = _promote_words(W, P, U)
    if not (
        order.bruhat_leq_dominance(U, out)
        and out != U
        and _inv_pairs(out) <= _inv_pairs(W)
        and _inv_pairs(_winv(out)) <= _inv_pairs(_winv(P))
    ):
        raise AssertionError("promotion produced an invalid element")
    return weyl.from_one_line(sys, out)


def decompose(w: GroupElement, u: GroupElement) -> Optional[Tuple[GroupElement, GroupElement]]:
    """A pair (x, z) with x in W/[e,u]_R, z in [e,u]_R, and x z = w.

    In type A this always succeeds, by promoting z from the identity until
    the triple (w z^-1)(z)(z^-1 u) is reduced.  Other types fall back to a
    scan of the ideal and may return None.
    """
    sys = w.system
    if sys.type_label == (("A", sys.rank),):
        W, U = _one_line_words(w, u)
        z = _identity_word(len(W))
        while not _reduced3(_compose(W, _winv(z)), z, _compose(_winv(z), U)):
            z = weyl.one_line(promote(w, u, weyl.from_one_line(sys, z)))
        zel = weyl.from_one_line(sys, z)
        x = multiply(w, inverse(zel))
        if length(multiply(x, u)) != length(x) + length(u):
            raise AssertionError("decomposition left factor is not in the quotient")
        return x, zel
    quotient_set = set(_quotient_of_element(u))
    for z in sorted(right_ideal(u), key=length, reverse=True):
        x = multiply(w, inverse(z))
        if x in quotient_set:
            return x, z
    return None


# -- splitting transport --------------------------------------------------------


def _unique_maximal(elements: Sequence[GroupElement], kind) -> GroupElement:
    top = max(elements, key=lambda el: (length(el), sorted(inversion_set(el))))
    for el in elements:
        if not order.leq(kind, el, top):
            raise AssertionError("splitting factor has no unique maximal element")
    return top


def restrict_splitting(S: Splitting, J: Iterable[int]) -> Splitting:
    """Intersect both factors with the parabolic on J; re-verified."""
    if not S.X:
        raise DomainError("empty splitting")
    sys = S.X[0].system
    J = frozenset(J)
    members = frozenset(
        i for i in range(len(sys.positives)) if sys.supports[i] <= J
    )
    X = tuple(x for x in S.X if inversion_set(x) <= members)
    Y = tuple(y for y in S.Y if inversion_set(y) <= members)
    parabolic = tuple(
        w for w in group(sys).elements if inversion_set(w) <= members
    )
    ok, witness = is_splitting(X, Y, of=parabolic)
    if not ok:
        raise AssertionError(f"restricted pair is not a splitting: {witness}")
    return Splitting(X, Y)


def transport_splitting(S: Splitting) -> Splitting:
    """Map (X, Y) to (X x0^-1, x0 Y w0), another splitting with left- and
    right-maximal elements x0^-1 and x0 w0."""
    sys = S.X[0].system
    x0 = _unique_maximal(S.X, order.LEFT_WEAK)
    _unique_maximal(S.Y, order.RIGHT_WEAK)
    w0 = weyl.longest_element(sys)
    x0i = inverse(x0)
    X = tuple(multiply(x, x0i) for x in S.X)
    Y = tuple(multiply(multiply(x0, y), w0) for y in S.Y)
    ok, witness = is_splitting(X, Y)
    if not ok:
        raise AssertionError(f"transported pair is not a splitting: {witness}")
    if _unique_maximal(X, order.LEFT_WEAK) != x0i:
        raise AssertionError("transported left factor has the wrong maximum")
    return Splitting(X, Y)


# -- conjecture experiments -----------------------------------------------------


@dataclass(frozen=True)
class ConjectureRow:
    u: GroupElement
    separable: bool
    splits: bool
    surjective: bool


@dataclass(frozen=True)
class ConjectureReport:
    system_label: str
    rows: Tuple[ConjectureRow, ...]

    @property
    def all_surjective(self) -> bool:
        return all(r.surjective for r in self.rows)

    @property
    def split_iff_separable(self) -> bool:
        return all(r.separable == r.splits for r in self.rows)


def conjecture_experiments(sys) -> ConjectureReport:
    """Report-only sweep: surjectivity for every u, and the splitting vs
    separability comparison.  Nothing is asserted."""
    from .rootsys import type_string

    rows = []
    for u in group(sys).elements:
        X = _quotient_of_element(u)
        Y = right_ideal(u)
        ok, _ = is_splitting(X, Y)
        rows.append(
            ConjectureRow(u, separable.is_separable(u), ok, surjectivity_check(u))
        )
    return ConjectureReport(type_string(sys), tuple(rows))
