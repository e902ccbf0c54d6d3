"""Conjugation, normalizers, closures, classification, enumeration."""

import pytest

from lgroup import instances
from lgroup.errors import BudgetExceeded, NotAnLSubgroup, NotProper, PointNotInParent
from lgroup.group import (
    all_subgroups,
    classical_is_abnormal,
    classical_is_contranormal,
    classical_normal_closure,
    classical_normalizer,
    subgroup_generated,
)
from lgroup.lsub import LPoint, LSubset, characteristic, level_set, satisfies_axioms, union
from lgroup import theory
from lgroup.theory import (
    BUDGET_EXCEEDED,
    classify,
    conjugate,
    conjugate_closure,
    enumerate_lsubgroups,
    is_abnormal,
    is_contranormal,
    is_maximal,
    is_normal,
    is_self_normalizing,
    normal_closure,
    normal_closure_series,
    normalizer,
    strict_intermediate,
    subnormal_defect,
)


def crisp(G, mask):
    return characteristic(G, instances.chain2(), mask)


def s4_masks():
    G = instances.s4()
    return {
        "h12": subgroup_generated(G, ["(1 2)"]),
        "dbl": subgroup_generated(G, ["(1 2)(3 4)"]),
        "v4": subgroup_generated(G, ["(1 2)(3 4)", "(1 3)(2 4)"]),
        "H1": subgroup_generated(G, ["(1 2)", "(1 3)"]),
        "a4": subgroup_generated(G, ["(1 2 3)", "(2 3 4)"]),
        "full": G.full_mask(),
    }


class TestConjugate:
    def test_tip(self):
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        conj = conjugate(eta, LPoint(M.element("d"), G.element("(3 4)")), mu)
        assert conj.tip is M.element("d")  # a ^ tip(eta)

    def test_identity_point_with_large_a(self):
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        assert conjugate(eta, LPoint(M.element("u"), G.identity), mu) == eta

    def test_point_not_in_parent(self):
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        with pytest.raises(PointNotInParent):
            conjugate(eta, LPoint(M.element("u"), G.element("(3 4)")), mu)

    def test_conjugate_is_lsubgroup(self):
        from lgroup.lsub import is_lsubgroup
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        for a in M.elements:
            for z in G.elements[::5]:
                if not M.le(a, mu.value_of(z)):
                    continue
                assert is_lsubgroup(conjugate(eta, LPoint(a, z), mu), mu)

    def test_level_identity(self):
        # levels of the conjugate are conjugated levels, below the new tip
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        from lgroup.group import conjugate_subgroup
        for z in G.elements[::3]:
            a = mu.value_of(z)
            conj = conjugate(eta, LPoint(a, z), mu)
            for t in M.elements:
                if not M.le(t, conj.tip):
                    continue
                expected = conjugate_subgroup(G, level_set(eta, t), G.inv_of(z))
                assert level_set(conj, t) == expected


class TestNormal:
    def test_example3_not_normal(self):
        mu3, eta3 = instances.example3()
        assert not is_normal(eta3, mu3)

    def test_crisp_v4(self):
        G = instances.s4()
        masks = s4_masks()
        assert is_normal(crisp(G, masks["v4"]), crisp(G, masks["full"]))
        assert not is_normal(crisp(G, masks["H1"]), crisp(G, masks["full"]))

    def test_normal_parent_is_normalizer(self):
        # for a normal subject over a chain, the normalizer is the parent
        G = instances.s4()
        masks = s4_masks()
        v4 = crisp(G, masks["v4"])
        full = crisp(G, masks["full"])
        assert normalizer(v4, full) == full

    def test_mutation_hook_flips(self, monkeypatch):
        mu3, eta3 = instances.example3()
        monkeypatch.setattr(theory, "_MUTATION", "wu-flip")
        flipped = is_normal(eta3, mu3)
        monkeypatch.setattr(theory, "_MUTATION", "")
        assert is_normal(eta3, mu3) != flipped or flipped is False


class TestNormalizer:
    def test_crisp_matches_oracle(self):
        G = instances.s4()
        masks = s4_masks()
        nz = normalizer(crisp(G, masks["h12"]), crisp(G, masks["full"]))
        expected = classical_normalizer(G, masks["full"], masks["h12"])
        assert level_set(nz, instances.chain2().top) == expected

    def test_crisp_oracle_all_pairs(self):
        for G in (instances.s3(), instances.d4()):
            full = G.full_mask()
            for h in all_subgroups(G):
                nz = normalizer(crisp(G, h), crisp(G, full))
                assert level_set(nz, instances.chain2().top) == classical_normalizer(G, full, h)

    def test_upper_bound_property(self):
        # every L-subgroup of the parent that the subject is normal in
        # sits below the normalizer, on any lattice
        G, lat = instances.s3(), instances.lattice_m()
        top = LSubset.constant(G, lat, lat.top)
        subs = enumerate_lsubgroups(top)
        for eta in subs[::17]:
            nz = normalizer(eta, top, check=False)
            for theta in subs:
                if theta.contains(eta) and is_normal(eta, theta, check=False):
                    assert nz.contains(theta)

    def test_self_normalizing_examples(self):
        mu1, eta1 = instances.example1()
        assert is_self_normalizing(mu1, mu1)
        G = instances.s4()
        masks = s4_masks()
        assert not is_self_normalizing(crisp(G, masks["h12"]), crisp(G, masks["full"]))


class TestClosures:
    def test_closure_of_normal_subject(self):
        G = instances.s4()
        masks = s4_masks()
        v4 = crisp(G, masks["v4"])
        full = crisp(G, masks["full"])
        assert conjugate_closure(v4, full) == v4
        assert normal_closure(v4, full) == v4

    def test_crisp_transposition_class(self):
        G = instances.s4()
        two = instances.chain2()
        masks = s4_masks()
        cc = conjugate_closure(crisp(G, masks["h12"]), crisp(G, masks["full"]))
        transpositions = 0
        for x in G.elements:
            if sorted(x.perm) == list(range(4)) and sum(x.perm[i] != i for i in range(4)) == 2:
                transpositions |= 1 << x.id
        assert level_set(cc, two.top) == transpositions | 1

    def test_example1_conjugate_contribution(self):
        # the closure at (1 2 3) dominates the conjugate value b
        G, M = instances.s4(), instances.lattice_m()
        mu, eta = instances.example1()
        cc = conjugate_closure(eta, mu)
        assert M.le(M.element("b"), cc.value_of(G.element("(1 2 3)")))

    def test_normal_closure_examples(self):
        G = instances.s4()
        masks = s4_masks()
        full = crisp(G, masks["full"])
        assert normal_closure(crisp(G, masks["h12"]), full) == full
        nc = normal_closure(crisp(G, masks["dbl"]), full)
        assert level_set(nc, instances.chain2().top) == masks["v4"]

    def test_tip_preserved(self):
        mu1, eta1 = instances.example1()
        assert normal_closure(eta1, mu1).tip is eta1.tip
        mu3, eta3 = instances.example3()
        assert normal_closure(eta3, mu3).tip is eta3.tip

    def test_crisp_closure_oracle_all_pairs(self):
        two = instances.chain2()
        for G in (instances.s3(), instances.a4()):
            full = G.full_mask()
            for h in all_subgroups(G):
                nc = normal_closure(crisp(G, h), crisp(G, full))
                assert level_set(nc, two.top) == classical_normal_closure(G, full, h)


class TestSeries:
    def test_defect_zero(self):
        mu1, _ = instances.example1()
        assert subnormal_defect(mu1, mu1) == 0

    def test_defect_one(self):
        G = instances.s4()
        masks = s4_masks()
        assert subnormal_defect(crisp(G, masks["v4"]), crisp(G, masks["full"])) == 1
        assert subnormal_defect(crisp(G, masks["a4"]), crisp(G, masks["full"])) == 1

    def test_defect_two(self):
        G = instances.s4()
        masks = s4_masks()
        assert subnormal_defect(crisp(G, masks["dbl"]), crisp(G, masks["full"])) == 2

    def test_absent_for_proper_contranormal(self):
        G = instances.s4()
        masks = s4_masks()
        assert subnormal_defect(crisp(G, masks["h12"]), crisp(G, masks["full"])) is None

    def test_series_shape(self):
        G = instances.s4()
        masks = s4_masks()
        series = normal_closure_series(crisp(G, masks["dbl"]), crisp(G, masks["full"]))
        assert series.stabilized
        assert len(series.stages) == 3  # full, V4-lift, subject
        for earlier, later in zip(series.stages, series.stages[1:]):
            assert earlier.contains(later)


class TestAbnormalContranormal:
    def test_parent_in_itself(self):
        mu1, _ = instances.example1()
        assert is_abnormal(mu1, mu1)
        assert is_contranormal(mu1, mu1)

    def test_crisp_v4_not_abnormal(self):
        G = instances.s4()
        masks = s4_masks()
        assert not is_abnormal(crisp(G, masks["v4"]), crisp(G, masks["full"]))

    def test_crisp_h1_abnormal(self):
        G = instances.s4()
        masks = s4_masks()
        assert is_abnormal(crisp(G, masks["H1"]), crisp(G, masks["full"]))

    def test_crisp_contranormal(self):
        G = instances.s4()
        masks = s4_masks()
        full = crisp(G, masks["full"])
        assert is_contranormal(crisp(G, masks["h12"]), full)
        assert not is_contranormal(crisp(G, masks["dbl"]), full)

    def test_contranormal_crosscheck_distributive(self):
        # closure definition == no-proper-container definition over chains
        for G, lat in ((instances.s3(), instances.chain3()),
                       (instances.d4(), instances.chain2())):
            top = LSubset.constant(G, lat, lat.top)
            subs = enumerate_lsubgroups(top)
            for j, mu in enumerate(subs):
                for eta in subs:
                    if not mu.contains(eta):
                        continue
                    by_nc = normal_closure(eta, mu, check=False) == mu
                    cc = conjugate_closure(eta, mu, check=False)
                    sols, _, status = theory._interval_search(cc, mu, 10**6, 1 << 62)
                    assert status == "done"
                    by_container = all(s == tuple(mu.vals) for s in sols)
                    assert by_nc == by_container


class TestMaximal:
    def test_not_proper(self):
        mu1, _ = instances.example1()
        with pytest.raises(NotProper):
            is_maximal(mu1, mu1)

    def test_trivial_not_maximal(self):
        G = instances.s4()
        masks = s4_masks()
        full = crisp(G, masks["full"])
        triv = crisp(G, 1)
        assert is_maximal(triv, full) is False
        wit = strict_intermediate(triv, full)
        assert wit is not None and full.contains(wit) and wit.contains(triv)
        assert wit not in (triv, full)

    def test_crisp_a4_maximal(self):
        G = instances.s4()
        masks = s4_masks()
        assert is_maximal(crisp(G, masks["a4"]), crisp(G, masks["full"])) is True

    def test_budget_exceeded(self):
        mu3, eta3 = instances.example3()
        assert is_maximal(eta3, mu3, budget=5) == BUDGET_EXCEEDED


class TestEnumerate:
    def test_z2_over_two(self):
        G = instances.z6()
        two = instances.chain2()
        z2 = subgroup_generated(G, [G.elements[3]])  # the order-2 element of Z6
        assert bin(z2).count("1") == 2
        subs = enumerate_lsubgroups(characteristic(G, two, z2))
        assert len(subs) == 3

    def test_constant_bottom(self):
        G = instances.s4()
        lat = instances.lattice_m()
        bottom = LSubset.constant(G, lat, lat.bottom)
        assert enumerate_lsubgroups(bottom) == [bottom]

    def test_s3_census(self):
        G = instances.s3()
        two = instances.chain2()
        full = crisp(G, G.full_mask())
        subs = enumerate_lsubgroups(full)
        assert len(subs) == 7  # constant bottom plus the six subgroup lifts
        reports = [classify(s, full) for s in subs]
        assert sum(r.normal for r in reports) == 4
        assert sum(r.abnormal for r in reports) == 4

    def test_budget(self):
        G = instances.s4()
        lat = instances.lattice_m()
        top = LSubset.constant(G, lat, lat.top)
        with pytest.raises(BudgetExceeded):
            enumerate_lsubgroups(top, budget=50)

    def test_requires_lsubgroup(self):
        G, M = instances.s4(), instances.lattice_m()
        vals = [M.bottom.id] * G.order
        vals[G.element("(1 2)").id] = M.top.id
        with pytest.raises(NotAnLSubgroup):
            enumerate_lsubgroups(LSubset(G, M, vals))


class TestClassify:
    def test_parent_in_itself(self):
        mu1, _ = instances.example1()
        rep = classify(mu1, mu1)
        assert rep.normal and rep.abnormal and rep.subnormal_defect == 0
        assert not rep.proper and rep.maximal is False

    def test_a4_in_s4(self):
        G = instances.s4()
        masks = s4_masks()
        rep = classify(crisp(G, masks["a4"]), crisp(G, masks["full"]))
        assert rep.normal and rep.maximal is True and not rep.abnormal
        assert rep.subnormal_defect == 1 and not rep.contranormal

    def test_example1_report(self):
        mu1, eta1 = instances.example1()
        rep = classify(eta1, mu1)
        assert rep.is_lsubgroup and rep.proper
        assert rep.tip == "u" and rep.tail == "l"
        assert not rep.normal
        assert rep.contranormal
        assert rep.subnormal_defect is None
        assert rep.normal_closure == mu1
