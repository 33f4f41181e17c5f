"""Exact certificates for separability and exactness of algebras in H-mod."""
from .exactfield import QQ, Cyclotomic, FieldSpec, Prime, Rational, Scalar, primitive_root, scalar_arith
from .linalg import Mat, kron, rref, solve_affine
from .algebra import AlgebraSC, AlgMap, subalgebra_span, trace_radical, verify_algebra, verify_alg_map
from .hopf import (HopfData, ModuleAlgebra, TensorElt, braided_opposite, braided_tensor, cocycle_check,
                   dual_hopf, phi_of, r_matrix_check, twist_r, twisted_coalgebra, twisted_dual_algebra,
                   verify_hopf)
from .equimod import EquivariantModule, SplitCertificate, greedy_generators, hom_space, projectivity, restrict
from .decide import (PredicateReport, algebra_calculus, fully_exact, op_fully_exact, perfect,
                     relatively_projective, relproj_tensor_witness, separable, vect_predicates)
from .catalog import CatalogEntry, drinfeld_double_group, group_family, sweedler, uq_sl2

__version__ = "0.1.0"
