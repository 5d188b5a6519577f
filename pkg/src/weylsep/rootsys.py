"""Finite crystallographic root systems of types A-G and their direct sums.

Roots are integer coordinate tuples over the simple-root basis, so all
arithmetic (including for the E types) is integer-exact.  The Cartan matrix
convention is cartan[i][j] = <alpha_j, alpha_i-check>, which makes the simple
reflection act by s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i.  Bourbaki
numbering is used throughout; in particular the last simple root of B_n is
the short one.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import lcm
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import DomainError

Coords = Tuple[int, ...]
Cartan = Tuple[Tuple[int, ...], ...]
TypeLabel = Tuple[Tuple[str, int], ...]

FAMILIES = "ABCDEFG"

# Degrees of the irreducible Weyl groups, by family.  These are validated
# against brute-force Poincare polynomials in weyl.poincare, never trusted
# blind.
_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


def irreducible_degrees(family: str, rank: int) -> Tuple[int, ...]:
    if family == "A":
        return tuple(range(2, rank + 2))
    if family in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if family == "D":
        return tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    return _EXCEPTIONAL_DEGREES[(family, rank)]


def _validate_type(family: str, rank: int) -> None:
    ok = (
        (family == "A" and rank >= 1)
        or (family in ("B", "C") and rank >= 1)
        or (family == "D" and rank >= 2)
        or (family == "E" and rank in (6, 7, 8))
        or (family == "F" and rank == 4)
        or (family == "G" and rank == 2)
    )
    if not ok:
        raise DomainError(f"no finite root system of type {family}{rank}")


def cartan_matrix(family: str, rank: int) -> Cartan:
    """Standard Cartan matrix for a valid irreducible (family, rank)."""
    _validate_type(family, rank)
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j, cij=-1, cji=-1):
        a[i][j] = cij
        a[j][i] = cji

    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if rank >= 2 and family == "B":
            # short simple root last: its row carries the -2
            a[rank - 1][rank - 2] = -2
        if rank >= 2 and family == "C":
            a[rank - 2][rank - 1] = -2
    elif family == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        if rank >= 3:
            edge(rank - 3, rank - 1)
    elif family == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            edge(i, j)
        if rank >= 7:
            edge(5, 6)
        if rank == 8:
            edge(6, 7)
    elif family == "F":
        edge(0, 1)
        edge(1, 2, cij=-1, cji=-2)  # row of the short root carries the -2
        edge(2, 3)
    elif family == "G":
        edge(0, 1, cij=-3, cji=-1)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def _components_of_cartan(cartan: Cartan) -> Tuple[Tuple[int, ...], ...]:
    n = len(cartan)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in range(n):
                if not seen[u] and cartan[v][u] != 0:
                    seen[u] = True
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def _classify_component(cartan: Cartan, comp: Sequence[int]) -> Tuple[str, int]:
    """Cartan-Killing type of one connected block of a valid Cartan matrix."""
    rank = len(comp)
    if rank == 1:
        return ("A", 1)
    adj = {v: [u for u in comp if u != v and cartan[v][u] != 0] for v in comp}
    mults = {}
    for v in comp:
        for u in adj[v]:
            if u > v:
                mults[(v, u)] = cartan[v][u] * cartan[u][v]
    if any(m == 3 for m in mults.values()):
        if rank != 2:
            raise DomainError("triple edge only occurs in G2")
        return ("G", 2)
    doubles = [e for e, m in mults.items() if m == 2]
    degrees = {v: len(adj[v]) for v in comp}
    if doubles:
        if len(doubles) > 1 or max(degrees.values()) > 2:
            raise DomainError("not a finite Cartan type")
        if rank == 2:
            return ("B", 2)  # B2 and C2 coincide; B2 is the canonical label
        (i, j) = doubles[0]
        ends = [v for v in (i, j) if degrees[v] == 1]
        if not ends:
            if rank == 4:
                return ("F", 4)
            raise DomainError("interior double edge only occurs in F4")
        t = ends[0]
        other = j if t == i else i
        # our convention: the short root's row holds the -2
        if cartan[t][other] == -2:
            return ("B", rank)
        return ("C", rank)
    # simply laced: a path is A, one branch vertex gives D or E
    branch = [v for v in comp if degrees[v] >= 3]
    if not branch:
        return ("A", rank)
    if len(branch) > 1 or degrees[branch[0]] > 3:
        raise DomainError("not a finite Cartan type")
    b = branch[0]
    legs = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", rank)
    if legs == [1, 2, 2]:
        return ("E", 6)
    if legs == [1, 2, 3]:
        return ("E", 7)
    if legs == [1, 2, 4]:
        return ("E", 8)
    raise DomainError("not a finite Cartan type")


def classify_cartan(cartan: Cartan) -> TypeLabel:
    """Cartan-Killing decomposition of a valid Cartan matrix, one pair per
    connected block, blocks ordered by smallest index."""
    return tuple(_classify_component(cartan, comp) for comp in _components_of_cartan(cartan))


def label_string(label: TypeLabel) -> str:
    if not label:
        return "0"
    return "+".join(f"{fam}{rk}" for fam, rk in label)


class RootSystem:
    """A finite crystallographic root system given by its Cartan matrix.

    Positive roots are generated to a fixpoint by simple reflections and
    ordered by (height, lexicographic coordinates), which fixes the index
    space used for inversion sets everywhere else in the library.
    """

    def __init__(self, cartan: Sequence[Sequence[int]]):
        self.cartan: Cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        self.rank = len(self.cartan)
        for row in self.cartan:
            if len(row) != self.rank:
                raise DomainError("Cartan matrix must be square")
        self.components = _components_of_cartan(self.cartan)
        self.type_label = classify_cartan(self.cartan)
        self._build_form()
        self._generate_roots()
        self.supports: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(i for i, c in enumerate(beta) if c) for beta in self.positives
        )
        self._sum_index: Dict[Tuple[int, int], int] = {}
        self._decompositions: List[List[Tuple[int, int]]] = [[] for _ in self.positives]
        for (i, j) in itertools.combinations(range(len(self.positives)), 2):
            s = tuple(a + b for a, b in zip(self.positives[i], self.positives[j]))
            k = self.root_index.get(s)
            if k is not None:
                self._sum_index[(i, j)] = k
                self._sum_index[(j, i)] = k
                self._decompositions[k].append((i, j))
        self._simple_action = tuple(self._simple_action_row(i) for i in range(self.rank))
        self._upper_sets: Dict[int, FrozenSet[int]] = {}
        # caches populated lazily by other modules
        self._cache: Dict[str, object] = {}

    # -- construction internals -------------------------------------------

    def _build_form(self) -> None:
        # symmetrize the Cartan matrix: d[i] * cartan[i][j] = d[j] * cartan[j][i]
        d = [Fraction(0)] * self.rank
        for comp in self.components:
            d[comp[0]] = Fraction(1)
            todo = [comp[0]]
            while todo:
                i = todo.pop()
                for j in comp:
                    if j != i and self.cartan[i][j] != 0 and d[j] == 0:
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        todo.append(j)
        scale = lcm(*(f.denominator for f in d)) if d else 1
        dd = [int(f * scale) for f in d]
        self._form = tuple(
            tuple(dd[i] * self.cartan[i][j] for j in range(self.rank)) for i in range(self.rank)
        )

    def _generate_roots(self) -> None:
        simples = [tuple(1 if k == i else 0 for k in range(self.rank)) for i in range(self.rank)]
        roots = set(simples)
        frontier = list(simples)
        while frontier:
            new = []
            for beta in frontier:
                for i in range(self.rank):
                    gamma = self.reflect_simple(i, beta)
                    if gamma not in roots:
                        roots.add(gamma)
                        new.append(gamma)
            frontier = new
        positives = []
        for beta in roots:
            pos = all(c >= 0 for c in beta)
            neg = all(c <= 0 for c in beta)
            if not (pos or neg):
                raise AssertionError("generated root is not sign-definite")
            if pos:
                positives.append(beta)
        positives.sort(key=lambda b: (sum(b), b))
        self.positives: Tuple[Coords, ...] = tuple(positives)
        self.root_index: Dict[Coords, int] = {b: i for i, b in enumerate(positives)}
        expected = sum(d - 1 for fam, rk in self.type_label for d in irreducible_degrees(fam, rk))
        if len(positives) != expected:
            raise AssertionError(
                f"{label_string(self.type_label)}: got {len(positives)} positive roots, expected {expected}"
            )

    def _simple_action_row(self, i: int) -> Tuple[int, ...]:
        # image index of each positive root under s_i; alpha_i maps to itself
        # by convention (callers special-case it, since s_i negates it)
        row = []
        ai = self.simple_root(i)
        for idx, beta in enumerate(self.positives):
            if beta == ai:
                row.append(idx)
            else:
                row.append(self.root_index[self.reflect_simple(i, beta)])
        return tuple(row)

    # -- basic queries ------------------------------------------------------

    def simple_root(self, i: int) -> Coords:
        if not 0 <= i < self.rank:
            raise DomainError(f"simple index {i} out of range")
        return self.positives[self.root_index[tuple(1 if k == i else 0 for k in range(self.rank))]]

    def simple_index(self, i: int) -> int:
        """Positive-root index of the i-th simple root."""
        return self.root_index[tuple(1 if k == i else 0 for k in range(self.rank))]

    def reflect_simple(self, i: int, beta: Coords) -> Coords:
        c = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def pairing(self, u: Coords, v: Coords) -> int:
        form = self._form
        return sum(u[i] * form[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def coroot_pairing(self, gamma: Coords, beta: Coords) -> int:
        """<gamma, beta-check> = 2 (gamma, beta) / (beta, beta)."""
        num = 2 * self.pairing(gamma, beta)
        den = self.pairing(beta, beta)
        if num % den != 0:
            raise AssertionError("coroot pairing is not an integer")
        return num // den

    def is_positive_root(self, coords: Coords) -> bool:
        return tuple(coords) in self.root_index

    def is_root(self, coords: Coords) -> bool:
        c = tuple(coords)
        return c in self.root_index or tuple(-x for x in c) in self.root_index

    def diagram_edges(self) -> Tuple[Tuple[int, int], ...]:
        """Unordered pairs of non-commuting simple reflections."""
        return tuple(
            (i, j)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if self.cartan[i][j] != 0
        )

    def __repr__(self) -> str:
        return f"RootSystem({label_string(self.type_label)})"


def build(family: str, rank: int) -> RootSystem:
    """Construct the irreducible root system of the given type."""
    return RootSystem(cartan_matrix(family.upper(), rank))


def direct_sum(a: RootSystem, b: RootSystem) -> RootSystem:
    """Orthogonal direct sum, with block-diagonal Cartan matrix."""
    n = a.rank + b.rank
    cart = [[0] * n for _ in range(n)]
    for i in range(a.rank):
        for j in range(a.rank):
            cart[i][j] = a.cartan[i][j]
    for i in range(b.rank):
        for j in range(b.rank):
            cart[a.rank + i][a.rank + j] = b.cartan[i][j]
    return RootSystem(cart)


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_type(spec: str) -> RootSystem:
    """Parse a type string like "B4" or "A2+A1" into a root system."""
    parts = spec.strip().split("+")
    systems = []
    for part in parts:
        m = _TYPE_RE.match(part.strip())
        if not m:
            raise DomainError(f"cannot parse type {part!r}")
        systems.append(build(m.group(1).upper(), int(m.group(2))))
    out = systems[0]
    for s in systems[1:]:
        out = direct_sum(out, s)
    return out


def type_string(sys: RootSystem) -> str:
    return label_string(sys.type_label)


# -- root poset -------------------------------------------------------------


def root_poset_leq(sys: RootSystem, beta: Coords, beta2: Coords) -> bool:
    """beta <= beta2 iff beta2 - beta is a nonnegative sum of simple roots."""
    beta, beta2 = tuple(beta), tuple(beta2)
    if not sys.is_positive_root(beta) or not sys.is_positive_root(beta2):
        raise DomainError("root_poset_leq needs positive roots of the system")
    return all(b2 - b >= 0 for b, b2 in zip(beta, beta2))


def upper_set(sys: RootSystem, i: int) -> FrozenSet[int]:
    """Indices of all positive roots >= alpha_i in the root poset."""
    if not 0 <= i < sys.rank:
        raise DomainError(f"simple index {i} out of range")
    cached = sys._upper_sets.get(i)
    if cached is None:
        cached = frozenset(idx for idx, beta in enumerate(sys.positives) if beta[i] >= 1)
        sys._upper_sets[i] = cached
    return cached


# -- subsystems ---------------------------------------------------------------


class Subsystem:
    """The intersection of the ambient root set with a linear span.

    Stored as the set of ambient positive-root indices; the simple system is
    recomputed as the indecomposable members, and the Cartan matrix of the
    subsystem is read off the ambient bilinear form.
    """

    def __init__(self, ambient: RootSystem, pos_indices: Sequence[int]):
        self.ambient = ambient
        self.pos_indices: Tuple[int, ...] = tuple(sorted(pos_indices))
        self.member_set: FrozenSet[int] = frozenset(self.pos_indices)
        members = set(self.pos_indices)
        simples = []
        for idx in self.pos_indices:
            decomposable = any(
                i in members and j in members for (i, j) in ambient._decompositions[idx]
            )
            if not decomposable:
                simples.append(ambient.positives[idx])
        self.simples: Tuple[Coords, ...] = tuple(simples)
        self.rank = len(simples)
        cart = []
        for si in simples:
            row = []
            for sj in simples:
                num = 2 * ambient.pairing(sj, si)
                den = ambient.pairing(si, si)
                if num % den != 0:
                    raise AssertionError("subsystem Cartan entry is not an integer")
                row.append(num // den)
            cart.append(tuple(row))
        self.cartan: Cartan = tuple(cart)
        self.type_label = classify_cartan(self.cartan)
        self._sub_coords: Dict[int, Coords] = {}
        for idx in self.pos_indices:
            self._sub_coords[idx] = self._express(ambient.positives[idx])
        self._abstract: Optional[RootSystem] = None
        self._abstract_index: Optional[Dict[int, int]] = None

    def _express(self, root: Coords) -> Coords:
        """Coordinates of an ambient member root over the subsystem simples."""
        sol = _solve_integer(self.simples, root)
        if sol is None or any(c < 0 for c in sol):
            raise AssertionError("member root is not a nonnegative span of subsystem simples")
        return sol

    def sub_coords(self, pos_index: int) -> Coords:
        return self._sub_coords[pos_index]

    def abstract(self) -> RootSystem:
        """A standalone root system isomorphic to this subsystem."""
        if self._abstract is None:
            self._abstract = RootSystem(self.cartan)
            index = {}
            for idx in self.pos_indices:
                index[idx] = self._abstract.root_index[self._sub_coords[idx]]
            if len(set(index.values())) != len(self._abstract.positives):
                raise AssertionError("subsystem does not match its abstract copy")
            self._abstract_index = index
        return self._abstract

    def abstract_index(self, pos_index: int) -> int:
        self.abstract()
        return self._abstract_index[pos_index]

    def __repr__(self) -> str:
        return f"Subsystem({label_string(self.type_label)} in {type_string(self.ambient)})"


def _solve_integer(basis: Sequence[Coords], target: Coords) -> Optional[Coords]:
    """Solve sum c_t basis[t] = target over the rationals; return integer
    coordinates or None if inconsistent / non-integral."""
    if not basis:
        return () if not any(target) else None
    n = len(target)
    k = len(basis)
    rows = [[Fraction(basis[t][r]) for t in range(k)] + [Fraction(target[r])] for r in range(n)]
    piv_cols = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    sol = [Fraction(0)] * k
    for row_i, c in enumerate(piv_cols):
        sol[c] = rows[row_i][k]
    for i in range(r, n):
        if rows[i][k] != 0:
            return None
    # verify (also covers free columns, which must not be needed)
    for idx in range(n):
        if sum(sol[t] * basis[t][idx] for t in range(k)) != target[idx]:
            return None
    if any(f.denominator != 1 for f in sol):
        return None
    return tuple(int(f) for f in sol)


class _SpanTester:
    """Membership tests against the span of a few roots, by row reduction."""

    def __init__(self, vectors: Sequence[Coords]):
        rows = [list(map(Fraction, v)) for v in vectors]
        self.rref: List[List[Fraction]] = []
        self.pivots: List[int] = []
        for row in rows:
            self._reduce(row)
            piv = next((i for i, x in enumerate(row) if x != 0), None)
            if piv is not None:
                row = [x / row[piv] for x in row]
                self.rref.append(row)
                self.pivots.append(piv)

    def _reduce(self, row: List[Fraction]) -> None:
        for r, piv in zip(self.rref, self.pivots):
            if row[piv] != 0:
                f = row[piv]
                for i in range(len(row)):
                    row[i] -= f * r[i]

    def contains(self, v: Coords) -> bool:
        row = list(map(Fraction, v))
        self._reduce(row)
        return not any(row)


def parabolic_subsystem(sys: RootSystem, J: Sequence[int]) -> Subsystem:
    """Subsystem of the roots supported on the simple indices J."""
    J = frozenset(J)
    if not J <= set(range(sys.rank)):
        raise DomainError("J must be a set of simple indices")
    members = [i for i in range(len(sys.positives)) if sys.supports[i] <= J]
    return Subsystem(sys, members)


def enumerate_subsystems(sys: RootSystem, max_rank: int) -> List[Subsystem]:
    """All distinct intersections of the root set with spans of at most
    max_rank positive roots, deduplicated by member set."""
    if max_rank not in (1, 2, 3):
        raise DomainError("max_rank must be 1, 2, or 3")
    key = f"subsystems:{max_rank}"
    cached = sys._cache.get(key)
    if cached is not None:
        return cached
    npos = len(sys.positives)
    seen = {}
    for size in range(1, max_rank + 1):
        for combo in itertools.combinations(range(npos), size):
            tester = _SpanTester([sys.positives[i] for i in combo])
            members = frozenset(
                i for i in range(npos) if tester.contains(sys.positives[i])
            )
            if members not in seen:
                seen[members] = Subsystem(sys, members)
    out = sorted(seen.values(), key=lambda s: (len(s.pos_indices), s.pos_indices))
    sys._cache[key] = out
    return out
