import random
from collections import Counter
from fractions import Fraction as F

import pytest

from klein336.orbits import (
    ConsistencyError,
    beta_table_summary,
    classify_locus,
    curve_setwise_stabilizer,
    curve_strata,
    doubling_check,
    generic_curve_stabilizer,
    locus_points,
    orbit_points,
    point_on_off_mirror_curve,
    reflection_generated,
    singularity_report,
    singularity_weights,
    stabilizer_indices,
)
from klein336.torus import (
    TorusPoint,
    ZERO_POINT,
    apply_element,
    beta_point,
    eta_point,
    fixed_locus_structure,
    kappa_translates,
    omega_point,
    registry_point,
    xi_point,
)


def test_stabilizer_examples(group):
    assert len(stabilizer_indices(group, ZERO_POINT, "G")) == 336
    assert len(stabilizer_indices(group, ZERO_POINT, "H")) == 168
    s_eta = stabilizer_indices(group, eta_point(1), "H")
    assert len(s_eta) == 7 and group.recognize(s_eta) == "C7"
    s_beta = stabilizer_indices(group, beta_point("1000"), "G")
    assert len(s_beta) == 16 and group.recognize(s_beta) == "±D8"


def test_stabilizer_matches_exact_application(group):
    rng = random.Random(30)
    pts = [eta_point(2), beta_point("0110"), xi_point(13), omega_point(1, 1)]
    for p in pts:
        stab = stabilizer_indices(group, p, "G")
        for _ in range(30):
            i = rng.randrange(group.size)
            fixes = apply_element(group.elements[i].int6, p) == p
            assert fixes == (i in stab)


def test_orbit_sizes(group):
    assert len(orbit_points(group, omega_point(0, 1), "G")) == 7
    assert len(orbit_points(group, omega_point(1, 1), "G")) == 7
    assert len(orbit_points(group, omega_point(1, 0), "G")) == 28
    assert len(orbit_points(group, eta_point(1), "G")) == 48
    assert len(orbit_points(group, eta_point(1), "H")) == 24


def test_orbit_stabilizer_identity_on_registry(group):
    points = (
        [xi_point(k) for k in range(64)]
        + [beta_point(i) for i in range(16)]
        + [eta_point(i) for i in range(7)]
        + [omega_point(i, j) for i in (0, 1) for j in (0, 1)]
        + list(kappa_translates(group))
    )
    for quotient, order in (("G", 336), ("H", 168)):
        for p in points:
            stab = stabilizer_indices(group, p, quotient)
            orb = orbit_points(group, p, quotient)
            assert len(stab) * len(orb) == order


def test_stabilizer_conjugation_covariance(group):
    rng = random.Random(31)
    points = [eta_point(1), beta_point("0011"), omega_point(1, 0), xi_point(9)]
    for _ in range(100):
        p = points[rng.randrange(len(points))]
        gidx = rng.randrange(group.size)
        moved = apply_element(group.elements[gidx].int6, p)
        stab = stabilizer_indices(group, p, "G")
        expected = frozenset(group.conjugate(gidx, s) for s in stab)
        assert stabilizer_indices(group, moved, "G") == expected


def test_reflection_generated_examples(group):
    n = group.named
    assert reflection_generated(group, group.subgroup_closure([n["r1"]]))
    assert not reflection_generated(
        group, stabilizer_indices(group, beta_point("0011"), "G")
    )
    assert reflection_generated(group, stabilizer_indices(group, omega_point(0, 1), "G"))
    # trivial stabilizer counts as reflection generated (free orbit, smooth image)
    assert reflection_generated(group, frozenset([group.identity]))


def test_singularity_weights(group):
    s_eta = stabilizer_indices(group, eta_point(1), "G")
    w = singularity_weights(group, s_eta)
    assert (w.order, w.weights) == (7, (1, 2, 4))
    s_q = stabilizer_indices(group, beta_point("0011"), "G")
    w = singularity_weights(group, s_q)
    assert (w.order, w.weights) == (4, (1, 2, 3))
    rho1 = group.named["rho1"]
    w = singularity_weights(group, group.subgroup_closure([rho1]))
    assert (w.order, w.weights) == (2, (0, 1, 1))
    # weight normalization: eigenvalue product equals the exact determinant
    gen = next(iter(i for i in s_q if group.elements[i].order == 4))
    assert group.elements[gen].det == -1  # product of i, -i, -1


def test_staged_weights_for_non_reflection_generated_stabilizers(group):
    # the 28-point half-period orbit: +-S3, reduces through its S3' part
    s = stabilizer_indices(group, omega_point(1, 0), "G")
    assert group.recognize(s) == "±S3"
    assert not reflection_generated(group, s)
    w = singularity_weights(group, s)
    assert (w.status, w.order, w.weights) == ("cyclic", 2, (0, 1, 1))
    # the beta D8' stabilizer: two commuting reflections, residual involution
    s = stabilizer_indices(group, beta_point("1010"), "G")
    assert group.recognize(s) == "D8'"
    assert not reflection_generated(group, s)
    w = singularity_weights(group, s)
    assert (w.status, w.order, w.weights) == ("cyclic", 2, (0, 1, 1))


def test_t2_classification(group):
    records = classify_locus(group, "T2", "G")
    data = sorted((r.orbit_size, r.label, r.image_status) for r in records)
    assert data == [
        (7, "±S4", "smooth"),
        (7, "±S4", "smooth"),
        (21, "±D8", "smooth"),
        (28, "±S3", "1/2(0,1,1)"),
    ]
    assert sum(r.orbit_size for r in records) == 63


def test_t2_brute_force_oracle(group):
    # independent recomputation: partition all 63 nonzero half-periods by
    # exhaustively applying all 336 elements
    points = [xi_point(k) for k in range(1, 64)]
    seen = set()
    sizes = []
    for p in points:
        if p in seen:
            continue
        orbit = {apply_element(el.int6, p) for el in group.elements}
        assert orbit <= set(points)
        seen |= orbit
        sizes.append(len(orbit))
    assert sorted(sizes) == [7, 7, 21, 28]
    records = classify_locus(group, "T2", "G")
    assert sorted(r.orbit_size for r in records) == sorted(sizes)


def test_t6_classification(group):
    records = classify_locus(group, "T6", "G")
    assert sorted((r.orbit_size, r.label) for r in records) == [
        (7, "±S4"),
        (7, "±S4"),
        (28, "±S3"),
    ]
    assert len(locus_points(group, "T6")) == 42


def test_t7_classification(group):
    assert len(locus_points(group, "T7")) == 48
    rec_g = classify_locus(group, "T7", "G")
    assert len(rec_g) == 1 and rec_g[0].orbit_size == 48
    assert rec_g[0].label == "C7" and rec_g[0].image_status == "1/7(1,2,4)"
    rec_h = classify_locus(group, "T7", "H")
    assert [r.orbit_size for r in rec_h] == [24, 24]
    assert all(r.image_status == "1/7(1,2,4)" for r in rec_h)


def test_t4p_locus(group):
    pts = locus_points(group, "T4p")
    assert len(pts) == 231
    records = classify_locus(group, "T4p", "G")
    assert sorted(r.orbit_size for r in records) == [7, 7, 14, 14, 21, 42, 42, 84]


def test_beta_table(group):
    summary = beta_table_summary(group)
    assert set(summary) == {"±S4", "S4'", "±D8", "D8'", "C4"}
    assert sorted(summary["±S4"]["points"]) == ["beta_0100", "beta_1100"]
    assert sorted(summary["S4'"]["points"]) == [
        "beta_0001",
        "beta_0010",
        "beta_0110",
        "beta_1101",
    ]
    assert summary["±D8"]["points"] == ["beta_1000"]
    assert sorted(summary["D8'"]["points"]) == [
        "beta_0101",
        "beta_1001",
        "beta_1010",
        "beta_1110",
    ]
    assert sorted(summary["C4"]["points"]) == [
        "beta_0011",
        "beta_0111",
        "beta_1011",
        "beta_1111",
    ]
    assert {k: v["image_count"] for k, v in summary.items()} == {
        "±S4": 2,
        "S4'": 2,
        "±D8": 1,
        "D8'": 2,
        "C4": 1,
    }
    assert summary["C4"]["image_status"] == "1/4(1,2,3)"
    assert summary["±S4"]["image_status"] == "smooth"
    assert summary["S4'"]["image_status"] == "smooth"
    assert summary["±D8"]["image_status"] == "smooth"


def test_h_stabilizers_of_beta_points(group):
    expected = {
        "beta_0100": "S4",
        "beta_0001": "A4",
        "beta_1000": "D8",
        "beta_1010": "2^2",
        "beta_0011": "C2-antirefl",
    }
    for name, label in expected.items():
        p = registry_point(group, name)
        assert group.recognize(stabilizer_indices(group, p, "H")) == label


def test_doubling(group):
    res = doubling_check(group)
    assert res["ok"]
    assert res["h3_doubles_eta1"]
    assert res["eta_orbit_partition"]
    assert res["minus_one_swaps_orbits"]
    # eta_2 = 2*eta_1 and eta_4 = 4*eta_1 as torus points
    assert eta_point(2) == 2 * eta_point(1)
    assert eta_point(4) == 4 * eta_point(1)


def test_normalizer_of_order7_subgroup(group):
    g7 = group.named["g7"]
    nh = group.normalizer(group.subgroup_closure([g7]), "H")
    assert len(nh) == 21 and group.recognize(nh) == "7:3"


def test_generic_curve_stabilizers_seed0(group):
    rho1 = group.named["rho1"]
    axis = fixed_locus_structure(group, rho1)
    ks = kappa_translates(group)
    stabs = [
        generic_curve_stabilizer(group, ks[i], axis.lambda1_rows, "G", seed=0)
        for i in (1, 2, 3)
    ]
    assert [group.recognize(s) for s in stabs] == ["2^2", "2^2", "C2-antirefl"]
    # the kappa_1 and kappa_2 groups are generated by two reflections each
    for s in stabs[:2]:
        refl = s & group.reflection_set
        assert len(refl) == 2
        assert group.subgroup_closure(sorted(refl)) == s
    # kappa_3 stabilizer is their intersection
    assert stabs[2] == stabs[0] & stabs[1]
    assert stabs[2] == group.subgroup_closure([rho1])


def test_generic_axis_stabilizers(group):
    c3 = group.named["c3"]
    locus = fixed_locus_structure(group, c3)
    s = generic_curve_stabilizer(group, ZERO_POINT, locus.lambda1_rows, "G", seed=0)
    assert group.recognize(s) == "S3'"
    h4 = group.named["h4"]
    locus4 = fixed_locus_structure(group, h4)
    s4 = generic_curve_stabilizer(group, ZERO_POINT, locus4.lambda1_rows, "G", seed=0)
    assert group.recognize(s4) == "D8'"
    assert reflection_generated(group, s) and reflection_generated(group, s4)


def test_generic_sampling_is_seed_stable(group):
    rho1 = group.named["rho1"]
    axis = fixed_locus_structure(group, rho1)
    k3 = kappa_translates(group)[3]
    a = generic_curve_stabilizer(group, k3, axis.lambda1_rows, "G", seed=0)
    b = generic_curve_stabilizer(group, k3, axis.lambda1_rows, "G", seed=0)
    c = generic_curve_stabilizer(group, k3, axis.lambda1_rows, "G", seed=7)
    assert a == b == c  # the generic stabilizer does not depend on the sample


def test_curve_invariance_groups(group):
    rho1 = group.named["rho1"]
    locus = fixed_locus_structure(group, rho1)
    ks = kappa_translates(group)
    for t in ks[1:]:
        inv = curve_setwise_stabilizer(group, locus.v1_basis, t, "H")
        assert len(inv) == 8 and group.recognize(inv) == "D8"


def test_singular_points_lie_on_off_mirror_curves(group):
    for p in (omega_point(1, 0), beta_point("1010"), beta_point("0101"),
              beta_point("0011")):
        assert point_on_off_mirror_curve(group, p)
    # a smooth special point does not
    assert not point_on_off_mirror_curve(group, omega_point(0, 1))


def test_singularity_report_g(group):
    rep = singularity_report(group, "G")
    assert rep.quotient == "G"
    assert len(rep.isolated) == 1
    iso = rep.isolated[0]
    assert iso["image_status"] == "1/7(1,2,4)" and iso["orbit_size"] == 48
    by_name = {c["name"]: c for c in rep.curves}
    assert by_name["kappa_3"]["image_status"] == "1/2(0,1,1)"
    assert by_name["kappa_3"]["label"] == "C2-antirefl"
    assert [c["name"] for c in rep.curves if c["image_status"] != "smooth"] == ["kappa_3"]
    diss = by_name["kappa_3"]["dissident_points"]
    assert len(diss) == 1 and diss[0]["image_status"] == "1/4(1,2,3)"
    ordinary = by_name["kappa_3"]["ordinary_singular_points"]
    assert sorted(r["orbit_size"] for r in ordinary) == [28, 42, 42]
    assert all(r["image_status"] == "1/2(0,1,1)" for r in ordinary)
    assert by_name["mirror"]["image_status"] == "smooth"
    assert by_name["c3_axis"]["label"] == "S3'"
    assert by_name["h4_axis"]["label"] == "D8'"
    for name in ("kappa_1", "kappa_2", "kappa_3"):
        assert by_name[name]["invariance_label_h"] == "D8"


def test_singularity_report_h(group):
    rep = singularity_report(group, "H")
    assert rep.quotient == "H"
    assert len(rep.isolated) == 2
    assert all(r["image_status"] == "1/7(1,2,4)" for r in rep.isolated)
    assert all(r["orbit_size"] == 24 for r in rep.isolated)
    by_name = {c["name"]: c for c in rep.curves}
    assert by_name["kappa_3"]["image_status"] == "1/2(0,1,1)"
    assert by_name["c3_axis"]["image_status"] == "1/3(0,1,2)"
    assert by_name["h4_axis"]["image_status"] == "1/4(0,1,3)"
    assert by_name["mirror"]["image_status"] == "smooth"


def test_locus_cross_relations(group):
    # the big-stabilizer beta orbits coincide with the big-stabilizer omega orbits
    ob = set(orbit_points(group, beta_point("0100"), "G")) | set(
        orbit_points(group, beta_point("1100"), "G")
    )
    ow = set(orbit_points(group, omega_point(0, 1), "G")) | set(
        orbit_points(group, omega_point(1, 1), "G")
    )
    assert ob == ow
    t2 = set(locus_points(group, "T2"))
    t6 = set(locus_points(group, "T6"))
    assert t6 <= t2
    o21 = set(orbit_points(group, beta_point("1000"), "G"))
    o28 = set(orbit_points(group, omega_point(1, 0), "G"))
    assert t2 == ow | o21 | o28


def test_non_reflection_generated_stabilizers_have_cyclic_germs(group):
    # every special orbit of the full group whose stabilizer is not generated
    # by reflections has a germ of cyclic quotient type: directly for cyclic
    # stabilizers, after reducing by the reflection part for ±S3 and D8'
    points = (
        [xi_point(k) for k in range(1, 64)]
        + [beta_point(i) for i in range(1, 16)]
        + [eta_point(i) for i in range(1, 7)]
        + [omega_point(i, j) for i, j in ((0, 1), (1, 0), (1, 1))]
    )
    seen_noncyclic_shapes = set()
    for p in points:
        s = stabilizer_indices(group, p, "G")
        if reflection_generated(group, s):
            continue
        info = singularity_weights(group, s)
        assert info.status == "cyclic"
        if not any(group.elements[i].order == len(s) for i in s):
            seen_noncyclic_shapes.add(group.recognize(s))
    # the two staged (non-cyclic stabilizer, cyclic germ) shapes really occur
    assert {"±S3", "D8'"} <= seen_noncyclic_shapes


def test_zero_point_statuses(group):
    s_g = stabilizer_indices(group, ZERO_POINT, "G")
    assert reflection_generated(group, s_g)
    assert singularity_weights(group, s_g).status == "smooth"
    s_h = stabilizer_indices(group, ZERO_POINT, "H")
    assert not reflection_generated(group, s_h)
    assert singularity_weights(group, s_h).status == "non-cyclic"
