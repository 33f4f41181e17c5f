"""
Sweedler's four-dimensional Hopf algebra
========================================

Build S = <g, x | g^2 = 1, x^2 = 0, gx = -xg>, look at its R-matrices and
decide the module-category predicates for the algebras 1, I and B*.
"""
from fractions import Fraction

from hopfcert.catalog import sweedler, sweedler_rt
from hopfcert.decide import fully_exact, op_fully_exact, relatively_projective, separable, vect_predicates
from hopfcert.hopf import phi_of, r_matrix_check

e = sweedler()
h, R0 = e.hopf, e.rmatrices["R0"]
print(h, "labels", h.alg.labels)

# R_0 is triangular: R_21 R = 1 (x) 1
rep = r_matrix_check(h, R0)
print("R_0 is an R-matrix:", bool(rep), " symmetric:", rep.info["symmetric"])

# phi_R : S* -> S has the coefficient matrix of R; its rank jumps off t = 0
for t in (0, 1, -1, Fraction(1, 2)):
    print(f"rank phi(R_{t}) =", phi_of(h, sweedler_rt(h, t)).matrix.rank())

# predicates for the three internal algebras
for name, a in e.module_algebras.items():
    row = {"separable": separable(a).verdict,
           "rel. projective": relatively_projective(a).verdict,
           "fully exact": fully_exact(a, R0).verdict,
           "op-fully exact": op_fully_exact(a, R0).verdict}
    print(f"{name:>3}", row)

# the section found for I is s(y) = (y(x)1 + 1(x)y)/2
print("section for I:", separable(e.module_algebras["I"]).certificate.section.to_strings())

# vect over S: not fully exact, until we twist by a cocycle R_lambda
print("vect, J = 1:", vect_predicates(h, R0).details)
for lam in (1, -1, 5):
    print(f"vect, J = R_{lam}:", vect_predicates(h, R0, sweedler_rt(h, lam)).details)
