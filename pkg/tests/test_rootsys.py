import pytest

from weylsep import rootsys, weyl
from weylsep.errors import DomainError


def test_build_counts(system):
    assert len(system("A2").positives) == 3
    assert len(system("B4").positives) == 16
    assert len(system("G2").positives) == 6
    assert len(system("F4").positives) == 24
    assert len(rootsys.build("D", 4).positives) == 12
    assert len(rootsys.build("E", 8).positives) == 120


def test_build_rejects_invalid():
    for fam, rk in [("E", 5), ("E", 9), ("F", 3), ("G", 3), ("D", 1), ("H", 3)]:
        with pytest.raises(DomainError):
            rootsys.build(fam, rk)


def test_direct_sum(system):
    s = rootsys.direct_sum(rootsys.build("A", 1), rootsys.build("A", 1))
    assert len(s.positives) == 2
    assert len(s.components) == 2
    s2 = rootsys.direct_sum(rootsys.build("A", 2), rootsys.build("A", 1))
    assert len(s2.positives) == 4
    bb = rootsys.direct_sum(rootsys.build("B", 2), rootsys.build("B", 2))
    assert bb.type_label == (("B", 2), ("B", 2))


def test_parse_and_label():
    assert rootsys.type_string(rootsys.parse_type("A2+A1")) == "A2+A1"
    assert rootsys.type_string(rootsys.parse_type("B4")) == "B4"
    # C2 and B2 coincide, D3 is A3; labels are canonical
    assert rootsys.type_string(rootsys.build("C", 2)) == "B2"
    assert rootsys.type_string(rootsys.build("D", 3)) == "A3"
    assert rootsys.type_string(rootsys.build("D", 2)) == "A1+A1"
    assert rootsys.type_string(rootsys.build("C", 3)) == "C3"


def test_root_poset(system):
    a2 = system("A2")
    assert rootsys.root_poset_leq(a2, (1, 0), (1, 1))
    assert not rootsys.root_poset_leq(a2, (1, 0), (0, 1))
    with pytest.raises(DomainError):
        rootsys.root_poset_leq(a2, (2, 0), (1, 1))


def test_upper_sets(system):
    a2 = system("A2")
    assert rootsys.upper_set(a2, 0) == {a2.root_index[(1, 0)], a2.root_index[(1, 1)]}
    a1 = rootsys.build("A", 1)
    assert rootsys.upper_set(a1, 0) == {0}
    b2 = system("B2")
    # the short simple root sits under three of the four positive roots
    short = 1
    assert len(rootsys.upper_set(b2, short)) == 3
    # coordinatewise count in the B4 poset above alpha_3
    b4 = system("B4")
    assert len(rootsys.upper_set(b4, 2)) == 12


def test_parabolic_subsystem(system):
    b4 = system("B4")
    sub = rootsys.parabolic_subsystem(b4, [0, 1, 3])
    assert sub.type_label == (("A", 2), ("A", 1))
    assert rootsys.label_string(sub.type_label) == "A2+A1"
    empty = rootsys.parabolic_subsystem(b4, [])
    assert empty.rank == 0 and not empty.pos_indices
    a3 = system("A3")
    sub2 = rootsys.parabolic_subsystem(a3, [0, 2])
    assert sub2.type_label == (("A", 1), ("A", 1))
    full = rootsys.parabolic_subsystem(b4, range(4))
    assert set(full.pos_indices) == set(range(16))


def test_enumerate_subsystems_a2(system):
    subs = rootsys.enumerate_subsystems(system("A2"), 2)
    labels = sorted(rootsys.label_string(s.type_label) for s in subs)
    assert labels == ["A1", "A1", "A1", "A2"]


def test_enumerate_subsystems_b2(system):
    subs = rootsys.enumerate_subsystems(system("B2"), 2)
    labels = [rootsys.label_string(s.type_label) for s in subs]
    assert labels.count("B2") == 1
    assert labels.count("A1+A1") == 2
    assert labels.count("A1") == 4


def test_enumerate_subsystems_g2(system):
    subs = rootsys.enumerate_subsystems(system("G2"), 2)
    labels = {rootsys.label_string(s.type_label) for s in subs}
    assert {"G2", "A2", "A1+A1"} <= labels


def test_simply_laced_rank2_subsystems():
    for spec in ["A3", "A4", "D4"]:
        sys = rootsys.parse_type(spec)
        for sub in rootsys.enumerate_subsystems(sys, 2):
            assert rootsys.label_string(sub.type_label) in ("A1", "A2", "A1+A1")


def test_reflection_closure(system):
    for spec in ["A3", "B3", "G2", "F4"]:
        sys = system(spec)
        for beta in sys.positives:
            for i in range(sys.rank):
                assert sys.is_root(sys.reflect_simple(i, beta))


def test_positive_count_matches_longest_length(system):
    for spec in ["A4", "B4", "C4", "D4", "G2", "F4"]:
        sys = rootsys.parse_type(spec)
        assert len(sys.positives) == weyl.length(weyl.longest_element(sys))


def test_subsystem_abstract_roundtrip(system):
    b4 = system("B4")
    for sub in rootsys.enumerate_subsystems(b4, 2)[:10]:
        abstract = sub.abstract()
        assert len(abstract.positives) == len(sub.pos_indices)


def test_root_json_is_coords(system):
    a2 = system("A2")
    assert list(a2.positives[0]) == [0, 1]
