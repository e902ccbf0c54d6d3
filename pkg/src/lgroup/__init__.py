"""Lattice-valued subgroup algebra over finite groups.

Valuations of a finite group in a finite bounded lattice, conjugation by
lattice-valued points, generated hulls, normalizers and normal closures,
and the normal / abnormal / contranormal / self-normalizing / subnormal /
maximal classification, verified against independent classical oracles.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .errors import LGroupError
from .group import (
    FiniteGroup,
    GroupElement,
    Homomorphism,
    all_subgroups,
    classical_is_abnormal,
    classical_is_contranormal,
    classical_normal_closure,
    classical_normalizer,
    conjugate_subgroup,
    group_from_generators,
    hom_from_images,
    identity_hom,
    subgroup_generated,
)
from .lattice import (
    FiniteLattice,
    LatticeElement,
    build_lattice,
    is_chain,
    is_distributive,
    is_supstar,
    is_upper_well_ordered,
    product,
    sup_of,
)
from .lsub import (
    LPoint,
    LSubset,
    characteristic,
    generated,
    has_sup_property,
    image,
    intersection,
    is_lsubgroup,
    jointly_supstar,
    level_set,
    preimage,
    set_product,
    trivial_lsubgroup,
    union,
)
from .theory import (
    BUDGET_EXCEEDED,
    ClassificationReport,
    NormalClosureSeries,
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

__version__ = "0.1.0"
