"""Conjugation by L-points, normalizers, normal closures, and classification.

The predicates follow the conjugate-based development: a conjugate is taken
by an L-point a_z of the parent, the normalizer is the union of all points
whose conjugation keeps the subject inside itself, and the normal closure
is the generated hull of the conjugate closure.  Where a quantity has two
independent formulations (normality three ways, conjugate closure as a
supremum and as a union of conjugates), both are computed and compared.
"""

import os
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BudgetExceeded,
    InternalInconsistency,
    NotAnLSubgroup,
    NotProper,
    PointNotInParent,
)
from .lsub import LSubset, _same_carriers, generated_vals, is_lsubgroup, satisfies_axioms

DEFAULT_BUDGET = 5_000_000

BUDGET_EXCEEDED = "budget-exceeded"

# Test hook: set LGROUP_MUTATION=wu-flip to corrupt the Wu check on purpose
# (the verify harness sanity test expects the theorem suite to catch it).
_MUTATION = os.environ.get("LGROUP_MUTATION", "")


def _require_pair(eta, mu):
    _same_carriers(eta, mu)
    if not satisfies_axioms(mu):
        raise NotAnLSubgroup("the parent is not an L-subgroup of its group")
    if not is_lsubgroup(eta, mu):
        raise NotAnLSubgroup("the subject is not an L-subgroup of the parent")


def lpoints(mu, skip_bottom=True):
    """(a_id, x_id) pairs with a <= mu(x), in (x, a) order."""
    lat = mu.lattice
    bot = lat.bottom.id
    m = len(lat.elements)
    for x in range(mu.group.order):
        ub = mu.vals[x]
        for a in range(m):
            if a == bot and skip_bottom:
                continue
            if lat.le_ids(a, ub):
                yield a, x


def _conj_vals(G, lat, vals, a_id, z_id):
    return G._kern.conjugate_values(
        G.order, len(lat.elements), vals, a_id, z_id, G.conj_flat, lat.meet_flat
    )


def _contained(lat, lo_vals, hi_vals):
    return all(lat.le_ids(a, b) for a, b in zip(lo_vals, hi_vals))


def conjugate(eta, point, mu, check=True):
    """The conjugate of eta by the point a_z: x -> a ^ eta(z x z^-1)."""
    a, z = point.a, point.x
    if check:
        _require_pair(eta, mu)
        eta.lattice.check_member(a)
        if not eta.lattice.le_ids(a.id, mu.vals[z.id]):
            raise PointNotInParent(f"{point!r} is not a point of the parent")
    vals = _conj_vals(eta.group, eta.lattice, eta.vals, a.id, z.id)
    return LSubset(eta.group, eta.lattice, vals)


def _wu_route(eta, mu, flipped=False):
    G = eta.group
    lat = eta.lattice
    n = G.order
    m = len(lat.elements)
    if not flipped:
        return G._kern.wu_normal(
            n, m, eta.vals, mu.vals, G.conj_flat, lat.leq_flat, lat.meet_flat
        )
    cf = G.conj_flat
    for y in range(n):
        for x in range(n):
            need = lat.meet_ids(eta.vals[x], mu.vals[y])
            if not lat.le_ids(eta.vals[cf[y * n + x]], need):
                return False
    return True


def _conjugates_route(eta, mu):
    G = eta.group
    lat = eta.lattice
    for a, z in lpoints(mu):
        cv = _conj_vals(G, lat, eta.vals, a, z)
        if not _contained(lat, cv, eta.vals):
            return False
    return True


def _levels_route(eta, mu):
    G = eta.group
    n = G.order
    cf = G.conj_flat
    for t in range(len(eta.lattice.elements)):
        em = eta.level_mask(t)
        if not em:
            continue
        mm = mu.level_mask(t)
        for y in range(n):
            if not mm >> y & 1:
                continue
            base = y * n
            img = 0
            for x in range(n):
                if em >> x & 1:
                    img |= 1 << cf[base + x]
            if img != em:
                return False
    return True


def is_normal(eta, mu, check=True):
    """Wu normality: eta(y x y^-1) >= eta(x) ^ mu(y) for all pairs.

    Cross-checked against containment of every conjugate and against level
    normality; the three must agree.
    """
    if check:
        _require_pair(eta, mu)
    if _MUTATION == "wu-flip":
        return _wu_route(eta, mu, flipped=True)
    wu = _wu_route(eta, mu)
    conj = _conjugates_route(eta, mu)
    lvl = _levels_route(eta, mu)
    if not (wu == conj == lvl):
        raise InternalInconsistency(
            f"normality routes disagree: wu={wu} conjugates={conj} levels={lvl}"
        )
    return wu


def normalizer(eta, mu, check=True):
    """N(eta): x -> sup{a <= mu(x) : conjugate of eta by a_x stays inside eta}."""
    if check:
        _require_pair(eta, mu)
    G = eta.group
    lat = eta.lattice
    m = len(lat.elements)
    bot = lat.bottom.id
    out = []
    for x in range(G.order):
        ub = mu.vals[x]
        acc = bot
        for a in range(m):
            if a == bot or not lat.le_ids(a, ub):
                continue
            cv = _conj_vals(G, lat, eta.vals, a, x)
            if _contained(lat, cv, eta.vals):
                acc = lat.join_ids(acc, a)
        out.append(acc)
    return LSubset(G, lat, out)


def conjugate_closure(eta, mu, check=True):
    """x -> sup over conjugations z of eta(z^-1 x z) ^ mu(z).

    Must coincide with the pointwise union of all conjugates of eta by
    points of mu; both are computed and compared.  (The union over points
    a_z collapses to the points with a = mu(z), since the conjugate grows
    with a.)
    """
    if check:
        _require_pair(eta, mu)
    G = eta.group
    lat = eta.lattice
    n = G.order
    m = len(lat.elements)
    direct = G._kern.conjugate_closure_values(
        n, m, eta.vals, mu.vals, G.conj_flat, G.inv,
        lat.meet_flat, lat.join_flat, lat.bottom.id,
    )
    by_union = [lat.bottom.id] * n
    for z in range(n):
        cv = _conj_vals(G, lat, eta.vals, mu.vals[z], z)
        by_union = [lat.join_ids(a, b) for a, b in zip(by_union, cv)]
    if list(direct) != by_union:
        raise InternalInconsistency(
            "conjugate closure differs from the union of all conjugates"
        )
    return LSubset(G, lat, direct)


def normal_closure(eta, mu, check=True):
    """Generated hull of the conjugate closure: the smallest normal
    L-subgroup of mu containing eta (tip preserved)."""
    if check:
        _require_pair(eta, mu)
    cc = conjugate_closure(eta, mu, check=False)
    vals = generated_vals(eta.group, eta.lattice, cc.vals)
    return LSubset(eta.group, eta.lattice, vals)


@dataclass
class NormalClosureSeries:
    """Stages mu = eta_0, eta_i = closure of eta in eta_{i-1}, to the first repeat."""

    stages: list
    stabilized: bool


def normal_closure_series(eta, mu, check=True):
    if check:
        _require_pair(eta, mu)
    cap = len(eta.lattice.elements) * eta.group.order + 2
    stages = [mu]
    cur = mu
    for _ in range(cap):
        nxt = normal_closure(eta, cur, check=False)
        if nxt == cur:
            return NormalClosureSeries(stages, True)
        stages.append(nxt)
        cur = nxt
    raise InternalInconsistency("normal closure series failed to stabilize")


def subnormal_defect(eta, mu, check=True):
    """Length of the normal closure series down to eta; None when the series
    stabilizes strictly above eta."""
    series = normal_closure_series(eta, mu, check=check)
    for i, stage in enumerate(series.stages):
        if stage == eta:
            return i
    return None


def is_abnormal(eta, mu, check=True):
    """Every point a_x of mu lies in the hull generated by eta and its
    conjugate by a_x."""
    if check:
        _require_pair(eta, mu)
    return _abnormal_witness(eta, mu) is None


def _abnormal_witness(eta, mu):
    """First failing point (a_id, x_id), or None when eta is abnormal."""
    G = eta.group
    lat = eta.lattice
    n = G.order
    cf = G.conj_flat
    for a, x in lpoints(mu):
        base = x * n
        uni = tuple(
            lat.join_ids(eta.vals[y], lat.meet_ids(a, eta.vals[cf[base + y]]))
            for y in range(n)
        )
        if not lat.le_ids(a, generated_vals(G, lat, uni)[x]):
            return (a, x)
    return None


def is_contranormal(eta, mu, check=True):
    """The normal closure of eta in mu is the whole of mu."""
    if check:
        _require_pair(eta, mu)
    return normal_closure(eta, mu, check=False) == mu


def is_self_normalizing(eta, mu, check=True):
    if check:
        _require_pair(eta, mu)
    return normalizer(eta, mu, check=False) == eta


def is_proper(eta, mu):
    """Non-constant and different from the parent."""
    return not eta.is_constant() and eta != mu


def _interval_search(eta, mu, budget, max_solutions):
    G = eta.group
    lat = eta.lattice
    return G._kern.enum_interval(
        G.order, len(lat.elements), G.mul_flat, G.inv,
        list(eta.vals), list(mu.vals),
        lat.leq_flat, lat.join_flat, lat.meet_flat,
        budget, max_solutions,
    )


def strict_intermediate(eta, mu, budget=DEFAULT_BUDGET, check=True):
    """An L-subgroup strictly between eta and mu, or None; raises
    BudgetExceeded when the search cannot finish within the budget."""
    if check:
        _require_pair(eta, mu)
    sols, _, status = _interval_search(eta, mu, budget, 3)
    for vals in sols:
        if vals != eta.vals and vals != mu.vals:
            return LSubset(eta.group, eta.lattice, vals)
    if status == "budget":
        raise BudgetExceeded("interval search ran out of nodes")
    return None


def is_maximal(eta, mu, budget=DEFAULT_BUDGET, check=True):
    """True / False / "budget-exceeded": no L-subgroup strictly between
    eta and mu, searched depth-first with closure propagation."""
    if check:
        _require_pair(eta, mu)
    if not is_proper(eta, mu):
        raise NotProper("maximality is defined for proper L-subgroups")
    try:
        witness = strict_intermediate(eta, mu, budget, check=False)
    except BudgetExceeded:
        return BUDGET_EXCEEDED
    return witness is None


def enumerate_lsubgroups(mu, budget=DEFAULT_BUDGET):
    """All L-subgroups of mu, in deterministic search order."""
    if not satisfies_axioms(mu):
        raise NotAnLSubgroup("enumeration parent must be an L-subgroup")
    bottom = LSubset.constant(mu.group, mu.lattice, mu.lattice.bottom)
    sols, _, status = _interval_search(bottom, mu, budget, 1 << 62)
    if status == "budget":
        raise BudgetExceeded("L-subgroup enumeration ran out of nodes")
    return [LSubset(mu.group, mu.lattice, vals) for vals in sols]


@dataclass
class ClassificationReport:
    """Per-(eta, mu) classification record."""

    subject: str
    parent: str
    is_lsubgroup: bool
    tip: str
    tail: str
    proper: bool
    normal: bool
    abnormal: bool
    contranormal: bool
    self_normalizing: bool
    subnormal_defect: Optional[int]
    maximal: object  # True | False | "budget-exceeded"
    normalizer: LSubset = field(repr=False)
    normal_closure: LSubset = field(repr=False)


def classify(eta, mu, budget=DEFAULT_BUDGET, subject="eta", parent="mu"):
    """Full classification of eta inside mu; raises on invalid input and
    asserts the report-level theorem invariants."""
    _require_pair(eta, mu)
    proper = is_proper(eta, mu)
    normal = is_normal(eta, mu, check=False)
    abnormal = is_abnormal(eta, mu, check=False)
    contranormal = is_contranormal(eta, mu, check=False)
    self_norm = is_self_normalizing(eta, mu, check=False)
    defect = subnormal_defect(eta, mu, check=False)
    if proper:
        maximal = is_maximal(eta, mu, budget=budget, check=False)
    else:
        maximal = False
    report = ClassificationReport(
        subject=subject,
        parent=parent,
        is_lsubgroup=True,
        tip=eta.tip.name,
        tail=eta.tail.name,
        proper=proper,
        normal=normal,
        abnormal=abnormal,
        contranormal=contranormal,
        self_normalizing=self_norm,
        subnormal_defect=defect,
        maximal=maximal,
        normalizer=normalizer(eta, mu, check=False),
        normal_closure=normal_closure(eta, mu, check=False),
    )
    if report.normal and report.abnormal and eta != mu:
        raise InternalInconsistency("normal + abnormal proper subject")
    if report.abnormal and not (report.self_normalizing and report.contranormal):
        raise InternalInconsistency("abnormal subject not self-normalizing/contranormal")
    if report.contranormal and report.proper and report.subnormal_defect is not None:
        raise InternalInconsistency("proper contranormal subject with a subnormal defect")
    return report
