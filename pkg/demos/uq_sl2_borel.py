"""
The small quantum group at a cube root of unity
===============================================

u_q(sl2) has dimension 27 for p = 3.  phi_R lands in the Borel part
span{E, K}, which is too small for Res(u_q) to be projective over u_q*.
"""
import time

from hopfcert.catalog import uq_dual_checks, uq_index, uq_sl2
from hopfcert.decide import vect_predicates

p = 3
t0 = time.time()
e = uq_sl2(p)
h, R = e.hopf, e.rmatrices["R"]
print(h, "built in %.1fs" % (time.time() - t0))
print("R-matrix normalisation:", e.meta)

checks = uq_dual_checks(e, p)
for name, ok in checks.items():
    print(f"  {name}: {ok}")

E = h.alg.labels[uq_index(p, 0, 1, 0)]
K = h.alg.labels[uq_index(p, 0, 0, 1)]
print("generators of the Borel part:", E, K)

t0 = time.time()
rep = vect_predicates(h, R, subject="vect over u_q(sl2)")
cert = rep.certificate["fullyExact"]
print("fully exact:", rep.details["fullyExact"], " phi rank:", rep.details["phiRank"])
print("certificate:", cert.verdict, cert.digest, "(%.1fs)" % (time.time() - t0))
