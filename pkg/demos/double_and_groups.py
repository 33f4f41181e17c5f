"""
Drinfeld double of C_2 and functions on C_2
===========================================

Over F_2 the double D(kC_2) gives a module category vect that is fully exact
but not op-fully exact.  For k^{C_2} the answer depends on the characteristic.
"""
import json

from hopfcert.catalog import drinfeld_double_group, group_family
from hopfcert.decide import vect_predicates

e = drinfeld_double_group(2, 2)
rep = vect_predicates(e.hopf, e.rmatrices["R"], subject="vect over D(kC2)")
print(rep.details)
for key, cert in rep.certificate.items():
    print(key, "->", cert.verdict)
    print(json.dumps(cert.to_json(), indent=1)[:400], "...")

for charP in (2, 3, None):
    f = group_family(2, charP)["k^G"]
    d = vect_predicates(f.hopf, f.rmatrices["1"]).details
    print(f"k^C2 over {f.hopf.spec}: fullyExact = {d['fullyExact']}")
