import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfcert.catalog import drinfeld_double_group, group_family, sweedler, sweedler_rt, uq_sl2
from hopfcert.decide import (InputNotRelProj, InvalidTwist, algebra_calculus, fully_exact, op_fully_exact, perfect,
                             relatively_projective, relproj_tensor_witness, separable, vect_predicates)
from hopfcert.equimod import reverify
from hopfcert.exactfield import QQ
from hopfcert.hopf import twist_r, twisted_hopf, verify_module_algebra
from hopfcert.linalg import Mat


@pytest.fixture(scope="module")
def S():
    return sweedler()


def _verdicts(a, R):
    return (separable(a).verdict, relatively_projective(a).verdict, fully_exact(a, R).verdict,
            op_fully_exact(a, R).verdict, perfect(a, R).verdict)


def test_trivial_algebra(S):
    assert _verdicts(S.module_algebras["1"], S.rmatrices["R0"]) == (True,) * 5


def test_sweedler_I(S):
    assert _verdicts(S.module_algebras["I"], S.rmatrices["R0"]) == (True,) * 5


def test_sweedler_Bstar(S):
    assert _verdicts(S.module_algebras["B*"], S.rmatrices["R0"]) == (False,) * 5


def test_separable_section_contains_explicit_one(S):
    a = S.module_algebras["I"]
    rep = separable(a)
    s = rep.certificate.section
    assert s.to_strings() == [["1/2", "0"], ["0", "1/2"], ["0", "1/2"], ["1/2", "0"]]
    # s(y) = (y(x)1 + 1(x)y)/2 and s(1) = (1(x)1 + y(x)y)/2, a bimodule section of m
    assert a.mult_matrix() @ s == Mat.identity(QQ, 2)


def test_fully_exact_routes_agree(S):
    for a in S.module_algebras.values():
        rep = fully_exact(a, S.rmatrices["R0"])
        assert rep.cross_checks[0][1] == rep.cross_checks[1][1] == rep.verdict
        for c in rep.certificate.values():
            assert c.verdict in ("Split", "NotProjective")


def test_symmetric_r_cross_check(S):
    rep = op_fully_exact(S.module_algebras["I"], S.rmatrices["R0"])
    assert ("symmetric R: fully_exact", True) in rep.cross_checks


def test_report_json(S):
    rep = separable(S.module_algebras["B*"])
    d = json.loads(json.dumps(rep.to_json()))
    assert {"predicate", "subject", "verdict", "certificate", "crossChecks", "dims", "field"} <= set(d)
    assert d["certificate"]["verdict"] == "NotProjective" and d["field"] == "Q"
    assert d["exact"] == "unknown"
    assert separable(S.module_algebras["I"]).to_json()["exact"] == "implied-true"


def test_vect_sweedler(S):
    h, R = S.hopf, S.rmatrices["R0"]
    rep = vect_predicates(h, R)
    assert rep.details == {"fullyExact": False, "opFullyExact": False, "invertible": False,
                           "phiRank": 2, "phiImageDim": 2}
    for lam in (1, -1, 5):
        d = vect_predicates(h, R, sweedler_rt(h, lam)).details
        assert d["invertible"] and d["phiRank"] == 4 and d["fullyExact"] and d["opFullyExact"]


@settings(max_examples=10)
@given(lam=st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda x: x != 0))
def test_twist_consistency(lam):
    # vect^J over H agrees with plain vect over H^J with R^J
    S = sweedler()
    h, R = S.hopf, S.rmatrices["R0"]
    J = sweedler_rt(h, lam)
    hj = twisted_hopf(h, J)
    direct = vect_predicates(h, R, J).details
    reduced = vect_predicates(hj, twist_r(R, J)).details
    assert direct["fullyExact"] == reduced["fullyExact"]
    assert direct["phiRank"] == reduced["phiRank"] == 4


def test_invalid_inputs(S):
    h = S.hopf
    with pytest.raises(InvalidTwist):
        vect_predicates(h, sweedler_rt(h, 1))
    with pytest.raises(InvalidTwist):
        vect_predicates(h, S.rmatrices["R0"], h.one2().scale(QQ.coerce(2)))


def test_double_group_vect():
    e = drinfeld_double_group(2, 2)
    rep = vect_predicates(e.hopf, e.rmatrices["R"])
    assert rep.details["fullyExact"] and not rep.details["opFullyExact"]
    assert rep.details["phiRank"] == 2


@pytest.mark.parametrize("charP,want", [(2, False), (None, True), (3, True)])
def test_functions_on_c2(charP, want):
    e = group_family(2, charP)["k^G"]
    assert vect_predicates(e.hopf, e.rmatrices["1"]).details["fullyExact"] == want


def test_uq_vect_not_fully_exact():
    e = uq_sl2(3)
    rep = vect_predicates(e.hopf, e.rmatrices["R"])
    assert not rep.details["fullyExact"] and rep.details["phiRank"] == 9


def test_algebra_calculus(S):
    R = S.rmatrices["R0"]
    one, I = S.module_algebras["1"], S.module_algebras["I"]
    assert algebra_calculus("relDeligne", one, I, R).alg.structure_equal(I.alg)
    left = algebra_calculus("leftDualAlg", I, None, R)
    assert not left.alg.structure_equal(I.alg)
    for kind in ("relDeligne", "leftDualAlg", "rightDualAlg", "functorAlg"):
        assert verify_module_algebra(algebra_calculus(kind, I, I, R))
    with pytest.raises(ValueError):
        algebra_calculus("nonsense", I, I, R)


def test_relproj_witness(S):
    R = S.rmatrices["R0"]
    one, I, B = (S.module_algebras[k] for k in ("1", "I", "B*"))
    w = relproj_tensor_witness(one, one, R)
    assert w.ok and w.iota == Mat.identity(QQ, 1) and w.pi == Mat.identity(QQ, 1)
    w = relproj_tensor_witness(I, I, R)
    assert w.ok and w.algebra.dim == 4
    assert relatively_projective(w.algebra).verdict
    with pytest.raises(InputNotRelProj):
        relproj_tensor_witness(I, B, R)


def test_all_certificates_reverify(S):
    from hopfcert.equimod import bimodule_of, tensor_power_bimodule
    for a in S.module_algebras.values():
        rep = separable(a)
        assert reverify(rep.certificate, bimodule_of(a), tensor_power_bimodule(a, 2))
