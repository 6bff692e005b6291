"""Exact symbolic computation in multiparameter quantized Weyl algebras at
roots of unity: cyclotomic arithmetic, PBW normal forms, centers, trace
pairings and discriminants, specialization Poisson brackets, and the
classification of diagonal/swap (iso)morphisms.
"""

from .cyclotomic import CycElem, euler_phi, cyclotomic_polynomial
from .polyring import (MPoly, VarTable, PolyMatrix, bareiss_determinant,
                       cofactor_determinant, is_associate, AssociateWitness,
                       RingMismatchError, NotDivisibleError)
from .params import WeylParams, ParamError, validate, load
from .weyl import WeylAlgebra, WeylElem, ModeMismatchError
from .center import (CenterPoly, center_ring, is_central,
                     center_spanning_monomials, spanning_element,
                     Z_center_poly, to_center_poly, verify_specz,
                     central_combinations)
from .discriminant import (CBasis, discriminant, internal_trace,
                           trace_matrix, regular_representation,
                           theorem_b_rhs, theorem_b_eta, theorem_71_rhs,
                           verify_discriminant, RecognitionError)
from .poisson import (q_deform, undeform, specialize, canonical_lift,
                      lift_monomials, poisson_bracket,
                      hamiltonian_derivation, prop33_table, verify_prop33,
                      CentralLift, LiftError)
from .autos import (AutSpec, AutError, build_automorphism, twisted_params,
                    generic_spec, verify_homomorphism, invert, isomorphic,
                    aut_group_shape)
from .exprs import parse_element, parse_scalar, ParseError
from .acceptance import run_all

__version__ = "1.0.0"
