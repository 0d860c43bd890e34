"""Exact computations in adjoint Chevalley groups of type B_l over local rings with 1/2."""

from __future__ import annotations

from .automorphisms import (NotNormalizing, RingAutomorphism, StandardAutomorphism, apply, central_aut,
                            check_lift, composite, inner_aut, is_central, lift_torus, ring_aut)
from .fixtures import check_all as check_fixtures
from .group import (GroupElement, TorusCharacter, commutator, conj, h_char, h_elem, inv, mul, w_elem,
                    x_elem)
from .lie import BasisIndex, ad_matrix, divided_square, structure_constants
from .matrices import Matrix
from .matrix_units import CertificationError, UnitTable, generate_all, h_block_combination
from .radical import (NotRadicalCongruent, RadicalCoefficients, UnsupportedRing, compose,
                      designated_positions, reconstruct)
from .relations import (check_commutator, check_con_suite, check_involution_commuting,
                        check_torus_conjugation, check_weyl_conjugation, commutator_constants,
                        weyl_sign)
from .rings import (DualNumbers, IntegersModPrimePower, LocalizedIntegers, NonUnit, PrimeField,
                    QuadraticExtension, RingContext, RingError, RingValue, adjoin_sqrt,
                    ring_from_descriptor)
from .roots import Root, RootSystem

__version__ = "0.1.0"

__all__ = [
    "BasisIndex", "CertificationError", "DualNumbers", "GroupElement", "IntegersModPrimePower",
    "LocalizedIntegers", "Matrix", "NonUnit", "NotNormalizing", "NotRadicalCongruent", "PrimeField",
    "QuadraticExtension", "RadicalCoefficients", "RingAutomorphism", "RingContext", "RingError",
    "RingValue", "Root", "RootSystem", "StandardAutomorphism", "TorusCharacter", "UnitTable",
    "UnsupportedRing", "ad_matrix", "adjoin_sqrt", "apply", "central_aut", "check_commutator",
    "check_con_suite", "check_fixtures", "check_involution_commuting", "check_lift",
    "check_torus_conjugation", "check_weyl_conjugation", "commutator", "commutator_constants",
    "compose", "composite", "conj", "designated_positions", "divided_square", "generate_all",
    "h_block_combination", "h_char", "h_elem", "inner_aut", "inv", "is_central", "lift_torus", "mul",
    "reconstruct", "ring_aut", "ring_from_descriptor", "structure_constants", "w_elem", "weyl_sign",
    "x_elem",
]
