"""Lattice construction, order computations, and structural predicates."""

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from lgroup import instances
from lgroup.errors import (
    DanglingCover,
    DuplicateName,
    EmptySubset,
    ForeignElement,
    NoBounds,
    NotALattice,
)
from lgroup.lattice import (
    build_lattice,
    distributivity_witness,
    is_chain,
    is_distributive,
    is_supstar,
    is_upper_well_ordered,
    product,
    sup_of,
)


def two_chain():
    return build_lattice(["0", "1"], [("0", "1")], name="2")


def named(lat, *names):
    return [lat.element(n) for n in names]


def all_lattices():
    return [
        two_chain(),
        instances.chain3(),
        instances.lattice_m(),
        instances.m_times_2(),
    ]


class TestBuild:
    def test_two_chain_forced(self):
        lat = two_chain()
        z, o = named(lat, "0", "1")
        assert lat.bottom is z and lat.top is o
        assert lat.join(z, o) is o and lat.meet(z, o) is z

    def test_m_joins_and_meets(self):
        lat = instances.lattice_m()
        a, b, c, d, f, l, u = named(lat, "a", "b", "c", "d", "f", "l", "u")
        assert lat.join(a, b) is d
        assert lat.join(a, c) is d and lat.join(b, c) is d
        assert lat.meet(a, b) is l and lat.meet(a, c) is l
        assert lat.join(f, a) is d and lat.meet(f, a) is l
        assert lat.bottom is l and lat.top is u

    def test_no_bounds(self):
        with pytest.raises(NoBounds):
            build_lattice(["x", "y"], [])

    def test_duplicate_name(self):
        with pytest.raises(DuplicateName):
            build_lattice(["x", "x"], [])

    def test_dangling_cover(self):
        with pytest.raises(DanglingCover):
            build_lattice(["x", "y"], [("x", "z")])

    def test_cycle_rejected(self):
        with pytest.raises(NotALattice):
            build_lattice(["x", "y"], [("x", "y"), ("y", "x")])

    def test_missing_bound_pair(self):
        # two maximal elements: no unique top
        with pytest.raises(NoBounds):
            build_lattice(["0", "x", "y"], [("0", "x"), ("0", "y")])

    def test_non_lattice_pair(self):
        # N5-like double diamond where {x, y} has two minimal upper bounds
        with pytest.raises(NotALattice):
            build_lattice(
                ["0", "x", "y", "p", "q", "1"],
                [("0", "x"), ("0", "y"), ("x", "p"), ("y", "p"),
                 ("x", "q"), ("y", "q"), ("p", "1"), ("q", "1")],
            )

    def test_spec_cover_shape_builds(self):
        # the alternative Hasse reading also forms a lattice with a v b = d
        lat = build_lattice(
            list("lfabcdu"),
            [("l", "f"), ("f", "a"), ("f", "b"), ("f", "c"),
             ("a", "d"), ("b", "d"), ("c", "d"), ("d", "u")],
        )
        assert lat.join(lat.element("a"), lat.element("b")) is lat.element("d")


class TestSup:
    def test_empty_set_gives_bottom(self):
        lat = instances.lattice_m()
        assert sup_of(lat, []) is lat.bottom

    def test_pair(self):
        lat = instances.lattice_m()
        a, b, d = named(lat, "a", "b", "d")
        assert sup_of(lat, [a, b]) is d

    def test_singleton(self):
        lat = instances.lattice_m()
        assert sup_of(lat, [lat.element("u")]) is lat.element("u")

    def test_foreign_element(self):
        with pytest.raises(ForeignElement):
            sup_of(two_chain(), [instances.lattice_m().element("a")])

    @given(st.randoms(use_true_random=False))
    def test_order_independent(self, rng):
        lat = instances.lattice_m()
        elems = list(lat.elements)
        subset = rng.sample(elems, rng.randint(1, len(elems)))
        shuffled = list(subset)
        rng.shuffle(shuffled)
        assert sup_of(lat, subset) is sup_of(lat, shuffled)


class TestProduct:
    def test_m_times_two(self):
        lat = instances.m_times_2()
        assert len(lat.elements) == 14
        for name in ["(u,1)", "(d,0)", "(f,0)", "(l,0)"]:
            lat.element(name)
        assert lat.bottom is lat.element("(l,0)")
        assert lat.top is lat.element("(u,1)")

    def test_componentwise_join(self):
        two = two_chain()
        sq = product(two, two)
        assert len(sq.elements) == 4
        assert sq.join(sq.element("(0,1)"), sq.element("(1,0)")) is sq.element("(1,1)")

    def test_identity_factor(self):
        one = build_lattice(["*"], [], name="1")
        lat = product(instances.lattice_m(), one)
        M = instances.lattice_m()
        assert len(lat.elements) == len(M.elements)
        for x in M.elements:
            for y in M.elements:
                j = lat.join(lat.element(f"({x.name},*)"), lat.element(f"({y.name},*)"))
                assert j.name == f"({M.join(x, y).name},*)"

    def test_projections_are_homomorphisms(self):
        m = instances.lattice_m()
        two = two_chain()
        lat = product(m, two)
        # project by name parsing; joins/meets must commute with projections
        def split(e):
            left, right = e.name[1:-1].rsplit(",", 1)
            return m.element(left), two.element(right)
        for x in lat.elements:
            for y in lat.elements:
                x1, x2 = split(x)
                y1, y2 = split(y)
                j1, j2 = split(lat.join(x, y))
                assert j1 is m.join(x1, y1) and j2 is two.join(x2, y2)
                g1, g2 = split(lat.meet(x, y))
                assert g1 is m.meet(x1, y1) and g2 is two.meet(x2, y2)


class TestPredicates:
    def test_chains(self):
        assert is_chain(two_chain())
        assert is_chain(instances.chain3())
        assert not is_chain(instances.lattice_m())
        assert not is_chain(instances.m_times_2())

    def test_upper_well_ordered_matches_chain(self):
        for lat in all_lattices():
            assert is_upper_well_ordered(lat) == is_chain(lat)

    def test_upper_well_ordered_brute_force(self):
        # every non-empty subset must contain its supremum
        for lat in all_lattices():
            if len(lat.elements) > 10:
                continue
            elems = lat.elements
            brute = True
            for r in range(1, len(elems) + 1):
                for sub in itertools.combinations(elems, r):
                    s = sup_of(lat, sub)
                    if all(s is not x for x in sub):
                        brute = False
                        break
                if not brute:
                    break
            assert is_upper_well_ordered(lat) == brute

    def test_upper_well_ordered_witness(self):
        lat = instances.lattice_m()
        a, b, d = named(lat, "a", "b", "d")
        assert sup_of(lat, [a, b]) is d  # the witness subset {a, b}

    def test_supstar(self):
        lat = instances.lattice_m()
        u, d, a, b = named(lat, "u", "d", "a", "b")
        assert is_supstar(lat, [u, d])
        assert not is_supstar(lat, [a, b])
        for x in lat.elements:
            assert is_supstar(lat, [x])

    def test_supstar_empty(self):
        with pytest.raises(EmptySubset):
            is_supstar(instances.lattice_m(), [])

    def test_distributive(self):
        assert is_distributive(two_chain())
        assert is_distributive(instances.chain3())
        assert not is_distributive(instances.lattice_m())
        assert not is_distributive(instances.m_times_2())

    def test_m_witness(self):
        lat = instances.lattice_m()
        w = distributivity_witness(lat)
        assert w is not None
        x, y, z = w
        lhs = lat.meet(x, lat.join(y, z))
        rhs = lat.join(lat.meet(x, y), lat.meet(x, z))
        assert lhs is not rhs
        # the middle atoms witness: a ^ (b v c) = a, (a ^ b) v (a ^ c) = l
        a, b, c = named(lat, "a", "b", "c")
        assert lat.meet(a, lat.join(b, c)) is a
        assert lat.join(lat.meet(a, b), lat.meet(a, c)) is lat.bottom


class TestAxioms:
    def test_commutative_and_absorption(self):
        for lat in all_lattices():
            for x in lat.elements:
                for y in lat.elements:
                    assert lat.join(x, y) is lat.join(y, x)
                    assert lat.meet(x, y) is lat.meet(y, x)
                    assert lat.meet(x, lat.join(x, y)) is x

    def test_order_join_meet_consistency(self):
        for lat in all_lattices():
            for x in lat.elements:
                for y in lat.elements:
                    le = lat.le(x, y)
                    assert le == (lat.join(x, y) is y)
                    assert le == (lat.meet(x, y) is x)

    def test_bounds(self):
        for lat in all_lattices():
            for x in lat.elements:
                assert lat.le(lat.bottom, x) and lat.le(x, lat.top)

    def test_sup_of_chain_is_max(self):
        lat = instances.lattice_m()
        chain = named(lat, "l", "f", "d", "u")
        assert sup_of(lat, chain) is lat.element("u")
