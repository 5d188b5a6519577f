"""Root-system pattern containment and the forbidden-pattern catalog.

An element w contains a pattern (w', Phi') if some subsystem of its ambient
system is isomorphic to Phi' and the restriction of the inversion set of w
to that subsystem matches the inversion set of w' under the isomorphism.
The catalog holds the patterns whose avoidance characterizes separability:
two in type A3 (the permutations 3142 and 2413), the two length-2 elements
of type B2, and the six elements of lengths 2, 3, 4 in type G2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import DomainError
from . import rootsys
from .rootsys import RootSystem, Subsystem, enumerate_subsystems
from . import weyl
from .weyl import GroupElement, element_from_inversions, inversion_set, is_biconvex


@dataclass(frozen=True)
class PatternInstance:
    """A pattern element, stored as an inversion set in its abstract system."""

    name: str
    system: RootSystem
    inversions: FrozenSet[int]

    def element(self) -> GroupElement:
        return element_from_inversions(self.system, self.inversions)


@dataclass(frozen=True)
class PatternMatch:
    pattern: PatternInstance
    member_indices: Tuple[int, ...]  # ambient positive-root indices of the subsystem


_catalog_cache: Optional[Tuple[PatternInstance, ...]] = None


def catalog() -> Tuple[PatternInstance, ...]:
    """The forbidden patterns characterizing separable elements."""
    global _catalog_cache
    if _catalog_cache is None:
        out: List[PatternInstance] = []
        a3 = rootsys.build("A", 3)
        for word in ((3, 1, 4, 2), (2, 4, 1, 3)):
            el = weyl.from_one_line(a3, word)
            out.append(
                PatternInstance("A3:" + "".join(map(str, word)), a3, inversion_set(el))
            )
        b2 = rootsys.build("B", 2)
        for el in weyl.enumerate_group(b2):
            if weyl.length(el) == 2:
                word = weyl.canonical_word(el)
                name = "B2:" + "*".join(f"s{i + 1}" for i in word)
                out.append(PatternInstance(name, b2, inversion_set(el)))
        g2 = rootsys.build("G", 2)
        for el in weyl.enumerate_group(g2):
            if weyl.length(el) in (2, 3, 4):
                word = weyl.canonical_word(el)
                name = "G2:" + "*".join(f"s{i + 1}" for i in word)
                out.append(PatternInstance(name, g2, inversion_set(el)))
        _catalog_cache = tuple(out)
    return _catalog_cache


def restrict(w: GroupElement, sub: Subsystem) -> GroupElement:
    """The element of the abstract copy of sub whose inversion set is
    I(w) intersected with the subsystem."""
    if sub.ambient is not w.system:
        raise DomainError("subsystem does not belong to the element's system")
    abstract = sub.abstract()
    inter = inversion_set(w) & sub.member_set
    sub_inv = frozenset(sub.abstract_index(i) for i in inter)
    if not is_biconvex(abstract, sub_inv):
        raise AssertionError("restricted inversion set is not biconvex")
    return element_from_inversions(abstract, sub_inv)


def _isomorphisms(pattern_sys: RootSystem, sub: Subsystem) -> List[Tuple[int, ...]]:
    """Bijections of simple systems preserving the Cartan matrix (and hence
    root lengths)."""
    rank = pattern_sys.rank
    if sub.rank != rank:
        return []
    out = []
    for perm in itertools.permutations(range(rank)):
        if all(
            sub.cartan[perm[i]][perm[j]] == pattern_sys.cartan[i][j]
            for i in range(rank)
            for j in range(rank)
        ):
            out.append(perm)
    return out


def _transport(sys: RootSystem, sub: Subsystem, pattern_sys: RootSystem,
               perm: Tuple[int, ...]) -> Tuple[int, ...]:
    """Ambient positive index of each pattern positive root under the
    simple-system bijection perm."""
    out = []
    for beta in pattern_sys.positives:
        coords = [0] * sys.rank
        for t, c in enumerate(beta):
            if c:
                simple = sub.simples[perm[t]]
                for k in range(sys.rank):
                    coords[k] += c * simple[k]
        idx = sys.root_index.get(tuple(coords))
        if idx is None:
            raise AssertionError("simple-system isomorphism does not map roots to roots")
        out.append(idx)
    return tuple(out)


def contains_pattern(w: GroupElement, p: PatternInstance) -> Optional[PatternMatch]:
    """A witness subsystem where w restricts to the pattern, or None.

    Scans every subsystem of matching type and every Cartan-preserving
    identification of simple systems.
    """
    sys = w.system
    inv = inversion_set(w)
    for sub in enumerate_subsystems(sys, max(1, p.system.rank)):
        if sub.type_label != p.system.type_label:
            continue
        restricted = inv & sub.member_set
        for perm in _isomorphisms(p.system, sub):
            transported = _transport(sys, sub, p.system, perm)
            if frozenset(transported[i] for i in p.inversions) == restricted:
                return PatternMatch(p, sub.pos_indices)
    return None


def _catalog_images(sys: RootSystem) -> List[Tuple[FrozenSet[int], Dict[FrozenSet[int], str]]]:
    """Per relevant subsystem: its member set and the transported inversion
    sets of every catalog pattern, keyed back to the pattern name."""
    cached = sys._cache.get("catalog_images")
    if cached is not None:
        return cached
    by_system: Dict[int, List[PatternInstance]] = {}
    for p in catalog():
        by_system.setdefault(id(p.system), []).append(p)
    out = []
    for sub in enumerate_subsystems(sys, 3):
        images: Dict[FrozenSet[int], str] = {}
        for patterns in by_system.values():
            psys = patterns[0].system
            if sub.type_label != psys.type_label:
                continue
            for perm in _isomorphisms(psys, sub):
                transported = _transport(sys, sub, psys, perm)
                for p in patterns:
                    image = frozenset(transported[i] for i in p.inversions)
                    images.setdefault(image, p.name)
        if images:
            out.append((sub.member_set, images))
    sys._cache["catalog_images"] = out
    return out


def catalog_witness(w: GroupElement) -> Optional[PatternMatch]:
    """First catalog pattern contained in w, with its subsystem, or None."""
    sys = w.system
    inv = inversion_set(w)
    by_name = {p.name: p for p in catalog()}
    for members, images in _catalog_images(sys):
        got = images.get(inv & members)
        if got is not None:
            return PatternMatch(by_name[got], tuple(sorted(members)))
    return None


def avoids_catalog(w: GroupElement) -> bool:
    return catalog_witness(w) is None
