"""Stabilizers, orbits, and the singularity classification of the quotients.

A point's image in the quotient is smooth exactly when its stabilizer is
generated by the reflections it contains; otherwise the germ is the linear
quotient by the stabilizer, and for cyclic stabilizers the type is read off
the generator's eigenvalues, snapped from floats to roots of unity and
cross-checked against the exact trace and determinant.

Generic points of the special curves are sampled with torsion denominators
that are primes larger than the group order; three independent samples are
intersected, so an unlucky sample can only enlarge one input, never shrink
the intersection below the true generic stabilizer.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .group import GroupTable
from .linalg import IDENTITY3, qnum_nullspace, qnum_solve
from .qfield import ONE as FIELD_ONE, QNum
from .torus import (
    TorusPoint,
    ZERO_POINT,
    _AxisProjector,
    apply_element,
    beta_point,
    enumerate_fixed_points,
    eta_point,
    fixed_locus_structure,
    half_periods,
    kappa_translates,
    omega_point,
)

GENERIC_PRIMES = (349, 353, 359, 367, 373)


class SnappingError(RuntimeError):
    """Float eigenvalues failed to land on roots of unity; signals an arithmetic bug."""


class ConsistencyError(RuntimeError):
    """The computed strata contradict the expected shape of the singular locus."""


# --- stabilizers and orbits ---------------------------------------------------


def stabilizer_indices(table: GroupTable, p: TorusPoint, quotient: str = "G") -> frozenset[int]:
    nums, den = p.as_int_vec()
    n = np.array(nums, dtype=np.int64)
    moved = table.int6_stack @ n
    mask = np.all((moved - n) % den == 0, axis=1)
    if quotient == "H":
        mask &= table.h_mask
    elif quotient != "G":
        raise ValueError(f"unknown group selector {quotient!r}")
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def stabilizer(table: GroupTable, p: TorusPoint, quotient: str = "G"):
    """The stabilizer as a Subgroup (elements, order, label, flags)."""
    from .group import Subgroup

    return Subgroup(table, stabilizer_indices(table, p, quotient))


def orbit_points(table: GroupTable, p: TorusPoint, quotient: str = "G") -> list[TorusPoint]:
    nums, den = p.as_int_vec()
    n = np.array(nums, dtype=np.int64)
    stack = table.int6_stack
    if quotient == "H":
        stack = stack[table.h_mask]
    elif quotient != "G":
        raise ValueError(f"unknown group selector {quotient!r}")
    moved = (stack @ n) % den
    uniq = np.unique(moved, axis=0)
    return sorted(
        TorusPoint([Fraction(int(x), den) for x in row]) for row in uniq
    )


def reflection_generated(table: GroupTable, s: frozenset[int]) -> bool:
    """Is the subgroup equal to the closure of the reflections it contains?"""
    return table.reflection_subgroup_closure(s) == s


# --- cyclic quotient weights ---------------------------------------------------


@dataclass(frozen=True)
class WeightInfo:
    status: str  # "smooth" | "cyclic" | "non-cyclic"
    order: int | None = None
    weights: tuple[int, int, int] | None = None

    def image_status(self) -> str:
        if self.status == "smooth":
            return "smooth"
        if self.status == "cyclic":
            a, b, c = self.weights  # type: ignore[misc]
            return f"1/{self.order}({a},{b},{c})"
        return "non-cyclic-singular"


def _snap_weights(table: GroupTable, gen: int, d: int) -> tuple[int, int, int]:
    mat = np.array(table.elements[gen].mat.to_complex(), dtype=complex)
    eigs = np.linalg.eigvals(mat)
    weights = []
    for ev in eigs:
        nu = round(cmath.phase(ev) / (2 * math.pi) * d) % d
        target = cmath.exp(2j * math.pi * nu / d)
        if abs(ev - target) > 1e-6:
            raise SnappingError(
                f"eigenvalue {ev} of element {gen} is not a {d}-th root of unity"
            )
        weights.append(int(nu))
    snapped_sum = sum(cmath.exp(2j * math.pi * nu / d) for nu in weights)
    exact_trace = table.elements[gen].mat.trace().to_complex()
    if abs(snapped_sum - exact_trace) > 1e-9:
        raise SnappingError(f"snapped eigenvalues of element {gen} contradict the trace")
    snapped_prod = cmath.exp(2j * math.pi * sum(weights) / d)
    exact_det = complex(table.elements[gen].det)
    if abs(snapped_prod - exact_det) > 1e-9:
        raise SnappingError(f"snapped eigenvalues of element {gen} contradict the determinant")
    return tuple(sorted(weights))  # type: ignore[return-value]


def _reflection_degrees(order: int, nrefl: int) -> tuple[int, int, int]:
    """Degrees of basic invariants of a rank-3 reflection group.

    Determined by prod(d_i) = |W| and sum(d_i - 1) = #reflections; the
    solution must be unique for the groups this action produces.
    """
    hits = []
    for d1 in range(1, order + 1):
        if order % d1:
            continue
        for d2 in range(d1, order // d1 + 1):
            if (order // d1) % d2:
                continue
            d3 = order // (d1 * d2)
            if d3 < d2:
                continue
            if d1 + d2 + d3 - 3 == nrefl:
                hits.append((d1, d2, d3))
    if len(hits) != 1:
        raise ConsistencyError(
            f"invariant degrees for |W|={order}, {nrefl} reflections not unique: {hits}"
        )
    return hits[0]


def singularity_weights(table: GroupTable, s: frozenset[int]) -> WeightInfo:
    """Quotient-germ type of a stabilizer: smooth, cyclic 1/d(...), or worse.

    For cyclic stabilizers the canonical form is the lexicographically
    smallest sorted weight tuple over all generators.  A stabilizer of the
    shape W x {+-1} with W its reflection part reduces in stages: the first
    quotient is affine space on W's basic invariants, on which -1 acts by
    degree parity, so the germ is again a cyclic type 1/2(...).
    """
    if reflection_generated(table, s):
        return WeightInfo("smooth")
    d = len(s)
    generators = [i for i in s if table.elements[i].order == d]
    if generators:
        best: tuple[int, int, int] | None = None
        for gen in sorted(generators):
            w = _snap_weights(table, gen, d)
            if best is None or w < best:
                best = w
        return WeightInfo("cyclic", d, best)
    w_part = table.reflection_subgroup_closure(s)
    if (
        table.minus_one in s
        and len(w_part) * 2 == d
        and table.subgroup_closure(sorted(w_part) + [table.minus_one]) == s
    ):
        degrees = _reflection_degrees(len(w_part), len(w_part & table.reflection_set))
        parities = tuple(sorted(deg % 2 for deg in degrees))
        return WeightInfo("cyclic", 2, parities)  # type: ignore[arg-type]
    if len(w_part) * 2 == d:
        weights = _residual_involution_weights(table, s, w_part)
        if weights is not None:
            return WeightInfo("cyclic", 2, weights)
    return WeightInfo("non-cyclic")


_SYM2_BASIS = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


def _sym2_matrix(m) -> list[list]:
    """Substitution action on quadratic forms: columns indexed by z_a z_b."""
    cols = []
    for a, b in _SYM2_BASIS:
        col = {key: QNum(0) for key in _SYM2_BASIS}
        for c in range(3):
            for e in range(3):
                coeff = m.rows[a][c] * m.rows[b][e]
                key = (c, e) if c <= e else (e, c)
                col[key] = col[key] + coeff
        cols.append([col[key] for key in _SYM2_BASIS])
    return [[cols[j][i] for j in range(6)] for i in range(6)]


def _residual_involution_weights(
    table: GroupTable, s: frozenset[int], w_part: frozenset[int]
) -> tuple[int, int, int] | None:
    """Germ weights when the reflection part W has index 2 and degrees (1, 2, 2).

    The quotient by W is affine space on one linear and two quadratic basic
    invariants; the residual involution acts exactly on the W-fixed line and
    on the W-invariant quadratics, all computed in exact field arithmetic.
    """
    degrees = _reflection_degrees(len(w_part), len(w_part & table.reflection_set))
    if degrees != (1, 2, 2):
        return None
    # the W-fixed line carries the degree-1 invariant
    stacked = []
    for w in sorted(w_part):
        shifted = table.elements[w].mat - IDENTITY3
        stacked.extend(list(r) for r in shifted.rows)
    fixed_line = qnum_nullspace(stacked, 3)
    if len(fixed_line) != 1:
        return None
    sigma = min(i for i in s if i not in w_part)
    b = fixed_line[0]
    image = table.elements[sigma].mat.apply((b[0], b[1], b[2]))
    j = next(k for k in range(3) if b[k])
    lam = image[j] * b[j].inv()
    if any(image[k] != lam * b[k] for k in range(3)) or lam * lam != FIELD_ONE:
        raise ConsistencyError("residual involution does not act by a sign on the fixed line")
    nu_linear = 0 if lam == FIELD_ONE else 1
    # W-invariant quadratic forms and the residual action on them
    quad_rows = []
    ident6 = [[QNum(int(i == k)) for k in range(6)] for i in range(6)]
    for w in sorted(w_part):
        mw = _sym2_matrix(table.elements[w].mat)
        quad_rows.extend(
            [mw[i][k] - ident6[i][k] for k in range(6)] for i in range(6)
        )
    invariants = qnum_nullspace(quad_rows, 6)
    if len(invariants) != 3:
        return None
    msig = _sym2_matrix(table.elements[sigma].mat)
    cols = [list(v) for v in invariants]
    action = []
    for v in invariants:
        img = [
            sum((msig[i][k] * v[k] for k in range(6)), QNum(0)) for i in range(6)
        ]
        action.append(qnum_solve(cols, img))
    trace = action[0][0] + action[1][1] + action[2][2]
    if trace.y != 0 or trace.x.denominator != 1:
        raise ConsistencyError("residual action on invariant quadratics has non-integral trace")
    t = int(trace.x)
    # eigenvalues are +-1 (sigma^2 lies in W); one +1 belongs to the square
    # of the linear invariant and is not a basic degree-2 eigenvalue
    m_plus = (3 + t) // 2
    m_minus = 3 - m_plus
    if (3 + t) % 2 or m_plus < 1:
        raise ConsistencyError("inconsistent eigenvalue multiplicities on quadratics")
    weights = [nu_linear] + [0] * (m_plus - 1) + [1] * m_minus
    if sum(1 for w in weights if w) < 2:
        raise ConsistencyError(
            "residual weights describe a reflection, contradicting the closure test"
        )
    return tuple(sorted(weights))  # type: ignore[return-value]


# --- generic points of special curves ------------------------------------------


def generic_curve_stabilizer(
    table: GroupTable,
    translate: TorusPoint,
    direction_rows: Sequence[Sequence[int]],
    quotient: str = "G",
    seed: int = 0,
    samples: int = 3,
) -> frozenset[int]:
    """Stabilizer of a generic point of translate + span(directions).

    Three torsion samples with distinct prime denominators > group order are
    intersected; degeneracy can only enlarge a sample stabilizer, so the
    intersection never drops below the generic one.
    """
    rng = random.Random(seed)
    result: frozenset[int] | None = None
    for p in GENERIC_PRIMES[:samples]:
        coords = list(translate.coords)
        for row in direction_rows:
            c = Fraction(rng.randrange(1, p), p)
            coords = [x + c * r for x, r in zip(coords, row)]
        stab = stabilizer_indices(table, TorusPoint(coords), quotient)
        result = stab if result is None else (result & stab)
    assert result is not None
    return result


def curve_setwise_stabilizer(
    table: GroupTable,
    v1_basis,
    translate: TorusPoint,
    quotient: str = "H",
) -> frozenset[int]:
    """Elements mapping the curve translate + V1 onto itself (mod the lattice)."""
    projector = _AxisProjector(v1_basis)
    members = []
    for g in table.subset_indices(quotient):
        el = table.elements[g]
        stable = True
        for b in v1_basis:
            image = el.mat.apply(b)
            if any(projector.project_eps(image)):
                stable = False
                break
        if not stable:
            continue
        moved = apply_element(el.int6, translate)
        if projector.in_v1_plus_lattice((moved - translate).coords):
            members.append(g)
    return frozenset(members)


# --- locus classification -------------------------------------------------------


@dataclass
class OrbitRecord:
    locus: str
    quotient: str
    representative: TorusPoint
    rep_name: str | None
    orbit_size: int
    stabilizer_order: int
    label: str
    label_g: str
    label_h: str
    reflection_generated: bool
    image_status: str
    orbit_min: TorusPoint

    def to_dict(self) -> dict:
        return {
            "locus": self.locus,
            "quotient": self.quotient,
            "representative": str(self.representative),
            "rep_name": self.rep_name,
            "orbit_size": self.orbit_size,
            "stabilizer_order": self.stabilizer_order,
            "label": self.label,
            "label_g": self.label_g,
            "label_h": self.label_h,
            "reflection_generated": self.reflection_generated,
            "image_status": self.image_status,
            "orbit_key": str(self.orbit_min),
        }


def _record_for_point(
    table: GroupTable, locus: str, quotient: str, p: TorusPoint, rep_name: str | None = None
) -> OrbitRecord:
    stab = stabilizer_indices(table, p, quotient)
    stab_g = stabilizer_indices(table, p, "G")
    stab_h = stab_g & frozenset(table.h_indices)
    orb = orbit_points(table, p, quotient)
    group_order = len(table.subset_indices(quotient))
    if len(orb) * len(stab) != group_order:
        raise ConsistencyError(
            f"orbit-stabilizer mismatch at {p}: {len(orb)} * {len(stab)} != {group_order}"
        )
    winfo = singularity_weights(table, stab)
    return OrbitRecord(
        locus=locus,
        quotient=quotient,
        representative=p,
        rep_name=rep_name,
        orbit_size=len(orb),
        stabilizer_order=len(stab),
        label=table.recognize(stab),
        label_g=table.recognize(stab_g),
        label_h=table.recognize(stab_h),
        reflection_generated=reflection_generated(table, stab),
        image_status=winfo.image_status(),
        orbit_min=orb[0],
    )


def locus_points(table: GroupTable, name: str) -> list[TorusPoint]:
    """The nonzero points of a named special locus."""
    key = _normalize_locus(name)
    if key == "T2":
        return sorted(p for p in half_periods() if not p.is_zero())
    order_of = {"T6": 6, "T7": 7}
    if key in order_of:
        want = order_of[key]
        pts: set[TorusPoint] = set()
        for el in table.elements:
            if el.order == want:
                pts.update(enumerate_fixed_points(table, el.index))
        return sorted(p for p in pts if not p.is_zero())
    if key == "T4p":
        pts = set()
        for el in table.elements:
            if el.order == 4 and el.det == -1:
                pts.update(enumerate_fixed_points(table, el.index))
        return sorted(p for p in pts if not p.is_zero())
    if key == "beta":
        return [beta_point(i) for i in range(1, 16)]
    if key == "omega":
        return [omega_point(i, j) for i, j in ((0, 1), (1, 0), (1, 1))]
    raise ValueError(f"unknown locus {name!r}")


def _normalize_locus(name: str) -> str:
    aliases = {
        "t2": "T2",
        "t6": "T6",
        "t7": "T7",
        "t4p": "T4p",
        "t4prime": "T4p",
        "beta": "beta",
        "omega": "omega",
    }
    key = aliases.get(name.lower())
    if key is None:
        raise ValueError(f"unknown locus {name!r}")
    return key


def classify_locus(table: GroupTable, name: str, quotient: str = "G") -> list[OrbitRecord]:
    """Orbit decomposition of a locus (per-point records for beta/omega)."""
    key = _normalize_locus(name)
    if key == "beta":
        return [
            _record_for_point(table, key, quotient, beta_point(i), f"beta_{i:04b}")
            for i in range(1, 16)
        ]
    if key == "omega":
        return [
            _record_for_point(table, key, quotient, omega_point(i, j), f"omega_{i}{j}")
            for i, j in ((0, 1), (1, 0), (1, 1))
        ]
    points = locus_points(table, key)
    seen: set[TorusPoint] = set()
    records = []
    for p in points:
        if p in seen:
            continue
        orb = orbit_points(table, p, quotient)
        seen.update(orb)
        records.append(_record_for_point(table, key, quotient, orb[0]))
    records.sort(key=lambda r: (r.orbit_size, r.representative.coords))
    return records


def beta_table_summary(table: GroupTable) -> dict[str, dict]:
    """The stabilizer-label columns of the 15 nonzero beta points, with image counts."""
    records = classify_locus(table, "beta", "G")
    columns: dict[str, dict] = {}
    for rec in records:
        col = columns.setdefault(
            rec.label, {"points": [], "orbits": set(), "image_status": rec.image_status}
        )
        col["points"].append(rec.rep_name)
        col["orbits"].add(rec.orbit_min)
    return {
        label: {
            "points": col["points"],
            "image_count": len(col["orbits"]),
            "image_status": col["image_status"],
        }
        for label, col in columns.items()
    }


def doubling_check(table: GroupTable) -> dict:
    """Order-3 normalizer action doubling the seventh-torsion fixed points."""
    h3 = table.named["h3"]
    e1 = eta_point(1)
    doubled = apply_element(table.elements[h3].int6, e1) == 2 * e1
    orbit1 = set(orbit_points(table, e1, "H"))
    orbit3 = set(orbit_points(table, eta_point(3), "H"))
    partition = (
        {eta_point(1), eta_point(2), eta_point(4)} <= orbit1
        and {eta_point(3), eta_point(5), eta_point(6)} <= orbit3
        and orbit1.isdisjoint(orbit3)
    )
    minus_swaps = apply_element(
        table.elements[table.minus_one].int6, e1
    ) in orbit3
    return {
        "h3_doubles_eta1": doubled,
        "eta_orbit_partition": partition,
        "minus_one_swaps_orbits": minus_swaps,
        "ok": doubled and partition and minus_swaps,
    }


# --- curve strata and the singularity report ------------------------------------


@dataclass
class CurveStratum:
    name: str
    quotient: str
    carrier: str  # name of the parabolic element whose fixed locus carries the curve
    translate: TorusPoint
    generic_stabilizer_order: int
    label: str
    reflection_generated: bool
    image_status: str
    invariance_label_h: str
    invariance_order_h: int
    dissident_points: list[dict] = field(default_factory=list)
    ordinary_singular_points: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "quotient": self.quotient,
            "carrier": self.carrier,
            "translate": str(self.translate),
            "generic_stabilizer_order": self.generic_stabilizer_order,
            "label": self.label,
            "reflection_generated": self.reflection_generated,
            "image_status": self.image_status,
            "invariance_label_h": self.invariance_label_h,
            "invariance_order_h": self.invariance_order_h,
            "dissident_points": self.dissident_points,
            "ordinary_singular_points": self.ordinary_singular_points,
        }


@dataclass
class SingularityReport:
    quotient: str
    isolated: list[dict]
    curves: list[dict]
    smooth_special_orbits: int
    notes: list[str]

    def to_dict(self) -> dict:
        return {
            "quotient": self.quotient,
            "isolated": self.isolated,
            "curves": self.curves,
            "smooth_special_orbits": self.smooth_special_orbits,
            "notes": self.notes,
        }


def curve_strata(table: GroupTable, quotient: str = "G", seed: int = 0) -> list[CurveStratum]:
    """Generic-stabilizer records for every special-curve class through the action."""
    named = table.named
    out: list[CurveStratum] = []

    def add(name: str, carrier: str, translate: TorusPoint, direction_rows, v1_basis):
        stab = generic_curve_stabilizer(table, translate, direction_rows, quotient, seed)
        winfo = singularity_weights(table, stab)
        inv = curve_setwise_stabilizer(table, v1_basis, translate, "H")
        out.append(
            CurveStratum(
                name=name,
                quotient=quotient,
                carrier=carrier,
                translate=translate,
                generic_stabilizer_order=len(stab),
                label=table.recognize(stab) if stab else "1",
                reflection_generated=reflection_generated(table, stab),
                image_status=winfo.image_status(),
                invariance_label_h=table.recognize(inv),
                invariance_order_h=len(inv),
            )
        )

    mirror = fixed_locus_structure(table, named["r2"])
    add("mirror", "r2", ZERO_POINT, mirror.lambda1_rows, mirror.v1_basis)

    rho1 = named["rho1"]
    axis = fixed_locus_structure(table, rho1)
    for i, t in enumerate(kappa_translates(table, rho1)):
        if i == 0:
            continue
        add(f"kappa_{i}", "rho1", t, axis.lambda1_rows, axis.v1_basis)

    c3_axis = fixed_locus_structure(table, named["c3"])
    add("c3_axis", "c3", ZERO_POINT, c3_axis.lambda1_rows, c3_axis.v1_basis)

    h4_axis = fixed_locus_structure(table, named["h4"])
    add("h4_axis", "h4", ZERO_POINT, h4_axis.lambda1_rows, h4_axis.v1_basis)
    return out


def point_on_off_mirror_curve(table: GroupTable, p: TorusPoint) -> bool:
    """Does p lie on the off-mirror translate curve of a stabilizing antireflection?"""
    stab = stabilizer_indices(table, p, "G")
    for rho in sorted(stab & set(table.antireflections)):
        ks = kappa_translates(table, rho)
        locus = fixed_locus_structure(table, rho)
        projector = _AxisProjector(locus.v1_basis)
        if projector.in_v1_plus_lattice((p - ks[3]).coords):
            return True
    return False


def _beta_0011_on_kappa3_curve(table: GroupTable) -> bool:
    """The dissident point lies on the off-mirror curve of its square antireflection."""
    q_point = beta_point("0011")
    h4p = table.named["h4p"]
    if apply_element(table.elements[h4p].int6, q_point) != q_point:
        raise ConsistencyError("the marked dissident point is not fixed by the order-4 element")
    rho = table.power(h4p, 2)
    if rho not in set(table.antireflections):
        raise ConsistencyError("the square of the order-4 element is not an antireflection")
    ks = kappa_translates(table, rho)
    locus = fixed_locus_structure(table, rho)
    projector = _AxisProjector(locus.v1_basis)
    if not projector.in_v1_plus_lattice((q_point - ks[3]).coords):
        return False
    # the off-mirror curve of rho is in the same orbit as the reference curve:
    # conjugating rho1 to rho maps translate classes to translate classes
    rho1 = table.named["rho1"]
    carrier = next(
        g
        for g in range(table.size)
        if table.conjugate(g, rho1) == rho
    )
    ref = kappa_translates(table, rho1)[3]
    moved = apply_element(table.elements[carrier].int6, ref)
    for i, t in enumerate(ks):
        if projector.in_v1_plus_lattice((moved - t).coords):
            return i == 3
    raise ConsistencyError("conjugated reference translate matches no translate class")


def singularity_report(table: GroupTable, quotient: str = "G", seed: int = 0) -> SingularityReport:
    """Full stratification of the quotient's singular locus.

    Sweeps every elliptic special orbit and every special-curve class; for
    the full group the result must consist of exactly one isolated point,
    one singular curve, and one dissident point on it.
    """
    point_records: dict[TorusPoint, OrbitRecord] = {}
    for locus in ("T2", "T6", "T4p", "T7"):
        for rec in classify_locus(table, locus, quotient):
            point_records.setdefault(rec.orbit_min, rec)
    curves = curve_strata(table, quotient, seed)

    singular_points = [r for r in point_records.values() if r.image_status != "smooth"]
    singular_curves = [c for c in curves if c.image_status != "smooth"]
    smooth_count = sum(1 for r in point_records.values() if r.image_status == "smooth")

    notes = [
        "canonical weight tuple 1/2(0,1,1) covers the orderings 1/2(1,1,0) and 1/2(1,0,1)",
    ]

    for c in curves:
        if c.name.startswith("kappa") and c.invariance_label_h != "D8":
            notes.append(
                f"curve {c.name}: computed invariance group {c.invariance_label_h} "
                f"(order {c.invariance_order_h}) differs from the classical D8 claim"
            )

    if quotient == "G":
        if [c.name for c in singular_curves] != ["kappa_3"]:
            raise ConsistencyError(
                f"unexpected singular curves {[c.name for c in singular_curves]}"
            )
        ell = singular_curves[0]
        if ell.image_status != "1/2(0,1,1)":
            raise ConsistencyError("the singular curve has unexpected generic weights")
        isolated = [r for r in singular_points if r.image_status == "1/7(1,2,4)"]
        dissident = [r for r in singular_points if r.image_status == "1/4(1,2,3)"]
        ordinary = [
            r for r in singular_points if r.image_status == ell.image_status
        ]
        stray = [
            r
            for r in singular_points
            if r not in isolated and r not in dissident and r not in ordinary
        ]
        if stray or len(isolated) != 1 or len(dissident) != 1:
            raise ConsistencyError(
                "the singular point strata do not match the expected inventory: "
                f"isolated={len(isolated)} dissident={len(dissident)} stray={len(stray)}"
            )
        if not _beta_0011_on_kappa3_curve(table):
            raise ConsistencyError("the dissident orbit does not lie on the singular curve")
        for rec in dissident + ordinary:
            if not point_on_off_mirror_curve(table, rec.representative):
                raise ConsistencyError(
                    f"singular orbit at {rec.representative} does not lie on the singular curve"
                )
        ell.dissident_points = [dissident[0].to_dict()]
        ell.ordinary_singular_points = [r.to_dict() for r in ordinary]
        notes.append(
            "the singular curve is rational and the quotient is strongly simply connected (source claims, not computed)"
        )
        notes.append(
            "point orbits on the singular curve with the generic transversal type are listed as ordinary, not dissident"
        )
        return SingularityReport(
            quotient="G",
            isolated=[isolated[0].to_dict()],
            curves=[c.to_dict() for c in curves],
            smooth_special_orbits=smooth_count,
            notes=notes,
        )

    # quotient H: the unimodular subgroup has no reflections, so every special
    # orbit is singular; the isolated singular points are the two seventh-torsion orbits
    isolated = [r for r in singular_points if r.image_status == "1/7(1,2,4)"]
    if len(isolated) != 2:
        raise ConsistencyError(f"expected two isolated seventh-order points, got {len(isolated)}")
    notes.append(
        "all other special orbits lie on singular curve strata of the quotient by the unimodular subgroup"
    )
    return SingularityReport(
        quotient="H",
        isolated=[r.to_dict() for r in isolated],
        curves=[c.to_dict() for c in curves],
        smooth_special_orbits=smooth_count,
        notes=notes,
    )
