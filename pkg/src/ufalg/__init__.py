"""Exact kernel for universal factorization algebras over Q."""

from .algebra import PresentedAlgebra, algebra_dimension, is_zero_ring
from .arith import Rational, binomial, nu_p, valuation_drop_holds
from .errors import (
    BasisNotCertified,
    DegreeBoundExceeded,
    DomainError,
    ParseError,
    PreconditionError,
    SearchLimitExceeded,
    StructuralError,
    UfaError,
)
from .groebner import INFINITE, GroebnerBasis, buchberger, normal_form, standard_monomials
from .multipoly import Block, MonomialOrder, MultiPoly, PolyRing, Var, VarTable
from .parse import parse_multipoly, parse_poly, parse_unipoly
from .polydiv import UniPoly, generic_monic, long_divide
from .ufa import (
    FactorizationRecord,
    build_root_adjunction,
    build_S1_S2,
    build_universal_factor_algebra,
    third_relation_shortcut,
)

__version__ = "0.1.0"
