"""Cyclic-subgroup census and classification checks for small finite groups."""

from .numtheory import totient, divisors, is_prime
from .group import (
    CayleyGroup,
    Subgroup,
    CyclicSubgroup,
    OrderCapExceeded,
    make_cyclic,
    make_dihedral,
    make_modular_2group,
    make_elementary_abelian,
    direct_product,
    from_generators,
    generated_subgroup,
)
from .presentations import (
    Presentation,
    CosetTable,
    CosetLimitExceeded,
    PresentationSyntaxError,
    parse_presentation,
    todd_coxeter,
    realize,
)
from .census import CensusReport, cyclic_subgroups, census, count_of_order
from .structure import (
    SylowReport,
    IsoResult,
    sylow,
    normal_core,
    is_normal,
    quotient_order_divides,
    isomorphic,
    has_cyclic_of_order,
)
from .dsl import parse_spec, build, render, build_from_text

__version__ = "0.1.0"
