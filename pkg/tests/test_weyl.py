import itertools

import pytest

from weylsep import qpoly, rootsys, weyl
from weylsep.errors import BudgetExceededError, DomainError, MixedSystemsError, NotBiconvexError


def test_simple_reflection_involution(system):
    for spec in ["A2", "B2", "G2"]:
        sys = system(spec)
        for i in range(sys.rank):
            s = weyl.simple_reflection(sys, i)
            assert weyl.multiply(s, s) == weyl.identity(sys)


def test_simple_reflection_action(system):
    a2 = system("A2")
    assert weyl.act(weyl.simple_reflection(a2, 0), (0, 1)) == (1, 1)
    b2 = system("B2")
    assert weyl.act(weyl.simple_reflection(b2, 1), (1, 0)) == (1, 2)


def test_mixed_systems_rejected():
    a = rootsys.build("A", 2)
    b = rootsys.build("A", 2)
    with pytest.raises(MixedSystemsError):
        weyl.multiply(weyl.identity(a), weyl.identity(b))


def test_inversion_sets(system):
    a2 = system("A2")
    assert weyl.inversion_set(weyl.identity(a2)) == frozenset()
    w0 = weyl.longest_element(a2)
    assert weyl.inversion_set(w0) == frozenset(range(3))
    assert weyl.length(w0) == 3


def test_biconvexity(system):
    a2 = system("A2")
    alpha1 = a2.simple_index(0)
    alpha2 = a2.simple_index(1)
    both = a2.root_index[(1, 1)]
    assert not weyl.is_biconvex(a2, {alpha1, alpha2})
    assert weyl.is_biconvex(a2, {alpha1, alpha2, both})
    assert weyl.is_biconvex(a2, set())
    with pytest.raises(NotBiconvexError):
        weyl.element_from_inversions(a2, {alpha1, alpha2})
    assert weyl.element_from_inversions(a2, range(3)) == weyl.longest_element(a2)


def test_inversion_roundtrip_b3(system):
    b3 = system("B3")
    for w in weyl.enumerate_group(b3):
        S = weyl.inversion_set(w)
        assert weyl.is_biconvex(b3, S)
        assert weyl.element_from_inversions(b3, S) == w


def test_longest_elements(system):
    a1 = rootsys.build("A", 1)
    assert weyl.length(weyl.longest_element(a1)) == 1
    b4 = system("B4")
    assert weyl.length(weyl.longest_element(b4)) == 16
    a3 = system("A3")
    for r in range(4):
        for J in itertools.combinations(range(3), r):
            w0J = weyl.longest_parabolic(a3, J)
            assert weyl.multiply(w0J, w0J) == weyl.identity(a3)


def test_descents(system):
    a3 = system("A3")
    assert weyl.descents(weyl.identity(a3)) == frozenset()
    w0 = weyl.longest_element(a3)
    assert weyl.descents(w0, "right") == frozenset(range(3))
    assert weyl.descents(w0, "left") == frozenset(range(3))
    el = weyl.from_one_line(a3, (3, 1, 4, 2))
    assert weyl.descents(el, "right") == {0, 2}


def test_parabolic_decompose(system):
    b3 = system("B3")
    for w in weyl.enumerate_group(b3):
        for r in range(4):
            for J in itertools.combinations(range(3), r):
                coset, wj = weyl.parabolic_decompose(w, J)
                assert weyl.multiply(coset, wj) == w
                assert weyl.length(coset) + weyl.length(wj) == weyl.length(w)
                assert not (weyl.descents(coset, "right") & set(J))
    w0 = weyl.longest_element(b3)
    for J in [(0,), (0, 1), (0, 1, 2)]:
        coset, wj = weyl.parabolic_decompose(w0, J)
        assert wj == weyl.longest_parabolic(b3, J)
        assert weyl.length(coset) + weyl.length(wj) == 9


def test_enumeration_counts(system):
    assert len(weyl.enumerate_group(system("A2"))) == 6
    assert len(weyl.enumerate_group(system("B4"))) == 384
    assert len(weyl.enumerate_group(system("A3"))) == 24
    assert weyl.group_order(system("F4")) == 1152


def test_poincare(system):
    a2 = system("A2")
    assert weyl.poincare(a2) == qpoly.q_int(2) * qpoly.q_int(3)
    assert weyl.poincare(system("B4"))(1) == 384
    assert weyl.degrees(system("B4")) == (2, 4, 6, 8)
    assert weyl.degrees(system("A3")) == (2, 3, 4)


def test_budget(monkeypatch):
    monkeypatch.setenv("WEYLSEP_MAX_GROUP", "100")
    sys = rootsys.build("A", 4)
    with pytest.raises(BudgetExceededError):
        weyl.group(sys)


def test_one_line_identification(system):
    a2 = system("A2")
    assert weyl.one_line(weyl.identity(a2)) == (1, 2, 3)
    assert weyl.one_line(weyl.simple_reflection(a2, 0)) == (2, 1, 3)
    a3 = system("A3")
    el = weyl.from_one_line(a3, (3, 1, 4, 2))
    assert weyl.length(el) == 3
    for word in itertools.permutations(range(1, 5)):
        assert weyl.one_line(weyl.from_one_line(a3, word)) == word
    with pytest.raises(DomainError):
        weyl.one_line(weyl.identity(system("B2")))


def test_one_line_composes_as_functions(system):
    a3 = system("A3")
    for u in itertools.permutations(range(1, 5)):
        for v in itertools.islice(itertools.permutations(range(1, 5)), 6):
            eu = weyl.from_one_line(a3, u)
            ev = weyl.from_one_line(a3, v)
            composed = tuple(u[v[i] - 1] for i in range(4))
            assert weyl.one_line(weyl.multiply(eu, ev)) == composed


def test_length_subadditive_and_inverse(system):
    b3 = system("B3")
    els = weyl.enumerate_group(b3)
    import random

    rng = random.Random(7)
    for _ in range(200):
        v = els[rng.randrange(len(els))]
        w = els[rng.randrange(len(els))]
        assert weyl.length(weyl.multiply(v, w)) <= weyl.length(v) + weyl.length(w)
        assert weyl.length(weyl.inverse(v)) == weyl.length(v)


def test_canonical_word_reduced(system):
    b3 = system("B3")
    for w in weyl.enumerate_group(b3):
        word = weyl.canonical_word(w)
        assert len(word) == weyl.length(w)
        assert weyl.from_word(b3, word) == w


def test_deterministic_element_order(system):
    g1 = weyl.group(rootsys.build("B", 3))
    g2 = weyl.group(rootsys.build("B", 3))
    key = lambda gr: [sorted(weyl.inversion_set(w)) for w in gr.elements]
    assert key(g1) == key(g2)


def test_reflections(system):
    b2 = system("B2")
    refl = weyl.reflections(b2)
    assert len(refl) == 4
    for t in refl:
        assert weyl.multiply(t, t) == weyl.identity(b2)
        assert weyl.length(t) % 2 == 1
