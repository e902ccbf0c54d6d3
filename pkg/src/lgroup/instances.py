"""Builders for the bundled groups, lattices, and worked valuations.

Builders are memoized so every caller in a process shares one instance
per structure (carrier checks compare by identity, and shared instances
share their closure caches).
"""

from functools import lru_cache
from importlib import resources

from .formats import parse_group, parse_lattice, parse_lsubset
from .group import group_from_generators
from .lattice import product


def asset_text(fname):
    return resources.files("lgroup").joinpath("assets", fname).read_text(encoding="utf-8")


def asset_path(fname):
    return str(resources.files("lgroup").joinpath("assets", fname))


@lru_cache(maxsize=None)
def chain2():
    return parse_lattice(asset_text("two.lat"), source="two.lat")


@lru_cache(maxsize=None)
def chain3():
    return parse_lattice(asset_text("three.lat"), source="three.lat")


@lru_cache(maxsize=None)
def lattice_m():
    return parse_lattice(asset_text("figure1-M.lat"), source="figure1-M.lat")


@lru_cache(maxsize=None)
def m_times_2():
    return product(lattice_m(), chain2())


@lru_cache(maxsize=None)
def s3():
    return parse_group(asset_text("s3.grp"), source="s3.grp")


@lru_cache(maxsize=None)
def s4():
    return parse_group(asset_text("s4.grp"), source="s4.grp")


@lru_cache(maxsize=None)
def d4():
    return parse_group(asset_text("d4.grp"), source="d4.grp")


@lru_cache(maxsize=None)
def a4():
    return parse_group(asset_text("a4.grp"), source="a4.grp")


@lru_cache(maxsize=None)
def z6():
    return group_from_generators(6, ["(1 2 3 4 5 6)"], name="Z6")


@lru_cache(maxsize=None)
def example1():
    """(mu, eta) of the first worked example: S4 valued in M."""
    G, lat = s4(), lattice_m()
    _, mu = parse_lsubset(asset_text("example1.mu"), G, lat, source="example1.mu")
    _, eta = parse_lsubset(asset_text("example1.eta"), G, lat, source="example1.eta")
    return mu, eta


@lru_cache(maxsize=None)
def example3():
    """(mu, eta) of the dihedral example: S4 valued in the product lattice."""
    G, lat = s4(), m_times_2()
    _, mu = parse_lsubset(asset_text("example3.mu"), G, lat, source="example3.mu")
    _, eta = parse_lsubset(asset_text("example3.eta"), G, lat, source="example3.eta")
    return mu, eta
