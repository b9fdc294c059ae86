import itertools
import random
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from klein336.group import (
    R1,
    R2,
    R3,
    UnrecognizedSubgroupError,
    positive_roots,
    reflection_matrix,
    roots,
)
from klein336.linalg import IDENTITY3, Mat3, kernel_K
from klein336.qfield import ONE, QNum, hermitian, vec3


def naive_mat_power(rows, k):
    """Hand-rolled 3x3 power over the field, independent of Mat3.__mul__."""
    acc = [[QNum(int(i == j)) for j in range(3)] for i in range(3)]
    for _ in range(k):
        acc = [
            [
                sum((acc[i][t] * rows[t][j] for t in range(3)), QNum(0))
                for j in range(3)
            ]
            for i in range(3)
        ]
    return acc


def test_group_sizes(group):
    assert group.size == 336
    assert len(group.h_indices) == 168
    assert len(group.reflections) == 21
    assert len(group.antireflections) == 21


def test_roots():
    rts = roots()
    assert len(rts) == 42
    for e in rts:
        assert hermitian(e, e) == QNum(2)
    pos = positive_roots()
    assert len(pos) == 21
    neg_keys = {tuple((q.x, q.y) for q in e) for e in rts} - {
        tuple((q.x, q.y) for q in e) for e in pos
    }
    assert len(neg_keys) == 21


def test_reflection_formula_recovers_generators():
    assert reflection_matrix(vec3(0, 0, 2)) == R2
    assert reflection_matrix(vec3(1, 1, QNum(1, -1))) == R3
    # the coordinate swap fixes {x2 = x3}, i.e. reflects the root (0, w, -w)
    assert reflection_matrix(vec3(0, QNum(0, 1), QNum(0, -1))) == R1
    # the reflection in (0, w, w) is a different group element
    other = reflection_matrix(vec3(0, QNum(0, 1), QNum(0, 1)))
    assert other.is_unitary() and other * other == IDENTITY3 and other != R1


def test_presentation(group):
    assert group.verify_presentation()


def test_r1r2_has_order_four():
    prod = naive_mat_power([list(r) for r in (R1 * R2).rows], 1)
    sq = naive_mat_power(prod, 2)
    ident = [[QNum(int(i == j)) for j in range(3)] for i in range(3)]
    assert sq != ident
    assert naive_mat_power(prod, 4) == ident


def test_order_spectrum(group):
    assert sorted(set(e.order for e in group.elements)) == [1, 2, 3, 4, 6, 7, 14]


def test_coxeter_like_element(group):
    n = group.named
    prod = group.product([n["r1"], n["r2"], n["r3"]])
    assert group.elements[prod].order == 14
    assert group.power(prod, 7) == group.minus_one


def test_named_registry(group):
    n = group.named
    orders = {
        "r1": 2, "r2": 2, "r3": 2, "rho1": 2, "rho2": 2, "rho3": 2,
        "m1": 2, "g7": 7, "h3": 3, "h4": 4, "h4p": 4, "c": 6, "c3": 3,
    }
    for name, k in orders.items():
        assert group.elements[n[name]].order == k
    assert group.multiply(n["m1"], n["h4"]) == n["h4p"]
    assert group.multiply(n["m1"], n["c"]) == n["c3"]


def test_columns_are_half_roots(group):
    root_keys = {tuple((q.x, q.y) for q in e) for e in roots()}
    for el in group.elements:
        for j in range(3):
            col = tuple(el.mat.rows[i][j] * 2 for i in range(3))
            assert tuple((q.x, q.y) for q in col) in root_keys


def test_every_element_unitary_and_unimodular_on_lattice(group):
    from klein336.linalg import int_det

    for el in group.elements:
        assert el.mat.is_unitary()
        assert int_det(el.int6) == 1


def test_reflections_and_antireflections(group):
    for i in group.reflections:
        el = group.elements[i]
        assert el.det == -1 and el.order == 2
        assert len(kernel_K(el.mat - IDENTITY3)) == 2
    for i in group.antireflections:
        el = group.elements[i]
        assert el.det == 1 and el.order == 2
        assert len(kernel_K(el.mat + IDENTITY3)) == 2
        # each antireflection is minus a reflection
        assert group.multiply(group.minus_one, i) in group.reflection_set


def test_h_conjugacy_classes(group):
    classes = group.conjugacy_classes("H")
    data = sorted((c.element_order, len(c.members)) for c in classes)
    assert data == [(1, 1), (2, 21), (3, 56), (4, 42), (7, 24), (7, 24)]
    # the order-4 class size is forced: H contains 42 order-4 elements of det 1
    count4 = sum(
        1 for i in group.h_indices if group.elements[i].order == 4
    )
    assert count4 == 42
    for c in classes:
        assert len(c.members) * group.centralizer_size(
            c.representative, group.h_indices
        ) == 168


def test_g_conjugacy_classes_pair_up(group):
    classes = group.conjugacy_classes("G")
    assert len(classes) == 12
    by_members = {c.members: c for c in classes}
    m1 = group.minus_one
    for c in classes:
        negated = tuple(sorted(group.multiply(m1, x) for x in c.members))
        assert negated in by_members
        assert len(by_members[negated].members) == len(c.members)
    for c in classes:
        assert len(c.members) * group.centralizer_size(
            c.representative, range(group.size)
        ) == 336


EXPECTED_TABLE = {
    # structure: (order, length, maximal profile, minimal-over profile);
    # profiles are multisets of ((structure, order, length), multiplicity)
    ("L2(7)", 168, 1): (
        {("2^2:S3", 24, 7): 14, ("7:3", 21, 8): 8},
        {},
    ),
    ("2^2:S3", 24, 7): (
        {("A4", 12, 7): 1, ("D8", 8, 21): 3, ("S3", 6, 28): 4},
        {("L2(7)", 168, 1): 1},
    ),
    ("7:3", 21, 8): (
        {("7", 7, 8): 1, ("3", 3, 28): 7},
        {("L2(7)", 168, 1): 1},
    ),
    ("A4", 12, 7): (
        {("2^2", 4, 7): 1, ("3", 3, 28): 4},
        {("2^2:S3", 24, 7): 1},
    ),
    ("D8", 8, 21): (
        {("2^2", 4, 7): 2, ("4", 4, 21): 1},
        {("2^2:S3", 24, 7): 2},
    ),
    ("7", 7, 8): ({("1", 1, 1): 1}, {("7:3", 21, 8): 1}),
    ("S3", 6, 28): (
        {("3", 3, 28): 1, ("2", 2, 21): 3},
        {("2^2:S3", 24, 7): 2},
    ),
    ("2^2", 4, 7): (
        {("2", 2, 21): 3},
        {("A4", 12, 7): 1, ("D8", 8, 21): 3},
    ),
    ("4", 4, 21): ({("2", 2, 21): 1}, {("D8", 8, 21): 1}),
    ("3", 3, 28): (
        {("1", 1, 1): 1},
        {("7:3", 21, 8): 2, ("A4", 12, 7): 2, ("S3", 6, 28): 1},
    ),
    ("2", 2, 21): (
        {("1", 1, 1): 1},
        {("S3", 6, 28): 4, ("2^2", 4, 7): 2, ("4", 4, 21): 1},
    ),
    ("1", 1, 1): (
        {},
        {("7", 7, 8): 8, ("3", 3, 28): 28, ("2", 2, 21): 21},
    ),
}


def test_subgroup_lattice_of_h(group):
    classes = group.all_subgroups_of_h()
    assert len(classes) == 15
    assert sum(c.length for c in classes) == 179
    pairs = sorted(((c.order, c.length) for c in classes), reverse=True)
    assert pairs == [
        (168, 1), (24, 7), (24, 7), (21, 8), (12, 7), (12, 7), (8, 21),
        (7, 8), (6, 28), (4, 21), (4, 7), (4, 7), (3, 28), (2, 21), (1, 1),
    ]
    by_number = {c.number: c for c in classes}

    def key(c):
        return (c.structure, c.order, c.length)

    # aggregate inclusion profiles over the symmetric duplicated classes
    seen_max: Counter = Counter()
    seen_min: Counter = Counter()
    expect_max: Counter = Counter()
    expect_min: Counter = Counter()
    for c in classes:
        for nr, count in c.maximal:
            seen_max[(key(c), key(by_number[nr]))] += count
        for nr, count in c.minimal_over:
            seen_min[(key(c), key(by_number[nr]))] += count
    for k, (maxp, minp) in EXPECTED_TABLE.items():
        dup = 2 if k[0] in ("2^2:S3", "A4", "2^2") else 1
        for sub_k, count in maxp.items():
            expect_max[(k, sub_k)] += count * dup
        for over_k, count in minp.items():
            expect_min[(k, over_k)] += count * dup
    assert seen_max == expect_max
    assert seen_min == expect_min


def test_subgroup_members_are_conjugate(group):
    classes = group.all_subgroups_of_h()
    rng = random.Random(5)
    for c in classes:
        s = c.members[rng.randrange(len(c.members))]
        g = group.h_indices[rng.randrange(168)]
        assert group.conjugate_subgroup(g, s) in set(c.members)


def test_normalizers(group):
    n = group.named
    g7sub = group.subgroup_closure([n["g7"]])
    nh = group.normalizer(g7sub, "H")
    assert len(nh) == 21
    assert group.recognize(nh) == "7:3"
    whole = frozenset(range(group.size))
    assert group.normalizer(whole, "G") == whole
    rho1sub = group.subgroup_closure([n["rho1"]])
    nrho = group.normalizer(rho1sub, "H")
    assert len(nrho) == 8
    assert group.recognize(nrho) == "D8"


def test_recognition_examples(group):
    n = group.named
    assert group.recognize(group.subgroup_closure([n["g7"]])) == "C7"
    assert group.recognize(group.subgroup_closure([n["r1"]])) == "C2-refl"
    assert group.recognize(group.subgroup_closure([n["rho1"]])) == "C2-antirefl"
    assert group.recognize(group.subgroup_closure([n["m1"]])) == "±1"
    assert group.recognize(group.subgroup_closure([n["c"]])) == "C6"
    assert group.recognize(group.subgroup_closure([n["h4"]])) == "C4"
    assert group.recognize(group.subgroup_closure([n["h4p"]])) == "C4"
    assert group.recognize(group.subgroup_closure([n["h3"]])) == "C3"
    assert group.recognize(group.subgroup_closure([n["g7"], n["m1"]])) == "C14"
    assert group.recognize(frozenset(range(group.size))) == "G336"
    assert group.recognize(frozenset(group.h_indices)) == "H168"
    assert group.recognize(group.subgroup_closure([n["r1"], n["m1"]])) == "C2xC2'"
    mono = _monomial_det1_subgroup(group)
    assert len(mono) == 24
    assert group.recognize(mono) == "S4"
    assert group.recognize(group.subgroup_closure(sorted(mono) + [n["m1"]])) == "±S4"
    with pytest.raises(UnrecognizedSubgroupError):
        group.recognize(frozenset())


def _monomial_det1_subgroup(group):
    members = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            rows = [[0] * 3 for _ in range(3)]
            for i in range(3):
                rows[i][perm[i]] = signs[i]
            m = Mat3(rows)
            if m.det() == ONE:
                members.append(group.index_of_mat(m))
    return frozenset(members)


def test_int6_is_multiplicative_on_all_pairs(group):
    stack = group.int6_stack
    for i in range(group.size):
        prods = stack[i] @ stack
        assert np.array_equal(prods, stack[group.mul[i, :]])


def test_det6_matches_field_norm_for_elliptic_elements(group):
    from klein336.linalg import int_det

    checked = 0
    for el in group.elements:
        shifted = el.mat - IDENTITY3
        det3 = shifted.det()
        if not det3:
            continue
        a = [[el.int6[i][j] - int(i == j) for j in range(6)] for i in range(6)]
        assert int_det(a) == det3.norm()
        checked += 1
    assert checked == 1 + 42 + 56 + 24 + 24 + 24 + 24  # -1, order 4 det -1, 6, 7, 14


def test_bfs_words_are_witnesses(group):
    rng = random.Random(6)
    for _ in range(50):
        el = group.elements[rng.randrange(group.size)]
        prod = group.product(group.named[f"r{i}"] for i in el.word)
        assert prod == el.index


def test_export_schema(group):
    table = group.export_elements()
    assert len(table) == 336
    first = table[0]
    assert list(first.keys()) == ["id", "word", "order", "det", "mat", "int6"]
    assert first["id"] == 0 and first["order"] == 1
    assert len(first["mat"]) == 9 and len(first["int6"]) == 36
