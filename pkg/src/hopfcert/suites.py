"""Reproduction suites: compute verdicts, compare with the expected tables, collect reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog as cat
from .decide import (SCHEMA_VERSION, fully_exact, op_fully_exact, perfect, relatively_projective,
                     relproj_tensor_witness, separable, vect_predicates)
from .hopf import braid_alg_map, braided_opposite, phi_of, reverse_r, verify_alg_map


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)  # (name, expected, actual)
    reports: list = field(default_factory=list)

    def check(self, name, expected, actual):
        self.checks.append((name, expected, actual))

    @property
    def mismatches(self):
        return [c for c in self.checks if c[1] != c[2]]

    @property
    def ok(self):
        return not self.mismatches

    def to_json(self):
        return {"schemaVersion": SCHEMA_VERSION, "suite": self.suite, "ok": self.ok,
                "checks": [{"name": n, "expected": e, "actual": a, "ok": e == a} for n, e, a in self.checks],
                "reports": [r.to_json() for r in self.reports]}

    def text(self):
        lines = [f"suite {self.suite}: {'ok' if self.ok else 'MISMATCH'}"]
        for n, e, a in self.checks:
            lines.append(f"  [{'ok' if e == a else 'FAIL'}] {n}: expected {e}, got {a}")
        return "\n".join(lines) + "\n"


PREDICATES = {
    "separable": lambda a, r: separable(a),
    "relatively_projective": lambda a, r: relatively_projective(a),
    "fully_exact": fully_exact,
    "op_fully_exact": op_fully_exact,
    "perfect": perfect,
}


def _algebra_predicates(res: SuiteResult, entry, r):
    for key, (want, _) in sorted(entry.expected.items()):
        pred, _, subject = key.partition(":")
        if pred not in PREDICATES:
            continue
        rep = PREDICATES[pred](entry.module_algebras[subject], r)
        res.reports.append(rep)
        res.check(f"{pred}({subject})", want, rep.verdict)


def run_sweedler(ts=(0, 1), lambdas=(1, -1, 5)) -> SuiteResult:
    ts = [Fraction(t) for t in ts]
    lambdas = [Fraction(l) for l in lambdas]
    res = SuiteResult("sweedler")
    e = cat.sweedler(ts + lambdas)
    h, R0 = e.hopf, e.rmatrices["R0"]
    for t in ts:
        f = phi_of(h, cat.sweedler_rt(h, t))
        res.check(f"rank phi_(R_{t})", 2 if t == 0 else 4, f.matrix.rank())
    _algebra_predicates(res, e, R0)
    rep = vect_predicates(h, R0, None, "vect, J = 1")
    res.reports.append(rep)
    res.check("vect(J=1).fullyExact", e.expected["vect:J=1:fullyExact"][0], rep.details["fullyExact"])
    res.check("vect(J=1).invertible", e.expected["vect:J=1:invertible"][0], rep.details["invertible"])
    for lam in lambdas:
        rep = vect_predicates(h, R0, cat.sweedler_rt(h, lam), f"vect, J = R_{lam}")
        res.reports.append(rep)
        # phi_{R_0^{R_lam}} = phi_{R_{2 lam}} is bijective for every finite lambda
        res.check(f"vect(J=R_{lam}).fullyExact", True, rep.details["fullyExact"])
        res.check(f"vect(J=R_{lam}).invertible", True, rep.details["invertible"])
    return res


def run_uqsl2(p=3) -> SuiteResult:
    res = SuiteResult(f"uqsl2(p={p})")
    e = cat.uq_sl2(p)
    checks = cat.uq_dual_checks(e, p)
    for name, val in checks.items():
        if isinstance(val, bool):
            res.check(name, True, val)
    res.check("dim H* e_xi", [p * p] * p, checks["dims H* e_xi"])
    res.check("dim image phi_R", p * p, checks["phi_R image dim"])
    rep = vect_predicates(e.hopf, e.rmatrices["R"], None, f"vect over u_q(sl2), p={p}")
    res.reports.append(rep)
    res.check("vect.fullyExact", e.expected["vect:J=1:fullyExact"][0], rep.details["fullyExact"])
    return res


def run_double_group(n=2, charP=2) -> SuiteResult:
    res = SuiteResult(f"double-group(n={n}, char={charP})")
    e = cat.drinfeld_double_group(n, charP)
    R = e.rmatrices["R"]
    res.check("R symmetric", False, R.flip() * R == e.hopf.one2())
    rep = vect_predicates(e.hopf, R, None, f"vect over D(kC{n})")
    res.reports.append(rep)
    for key, name in (("vect:J=1:fullyExact", "fullyExact"), ("vect:J=1:opFullyExact", "opFullyExact")):
        if key in e.expected:
            res.check(f"vect.{name}", e.expected[key][0], rep.details[name])
    return res


def run_vect_g(n=2, charP=2) -> SuiteResult:
    res = SuiteResult(f"vect-g(n={n}, char={charP or 0})")
    e = cat.group_family(n, charP or None)["k^G"]
    rep = vect_predicates(e.hopf, e.rmatrices["1"], None, f"vect over k^C{n}")
    res.reports.append(rep)
    res.check("vect.fullyExact", e.expected["vect:J=1:fullyExact"][0], rep.details["fullyExact"])
    return res


def property_entries():
    """(entry, R name) pairs with internal algebras to sweep."""
    out = [(cat.sweedler(), "R0"), (cat.drinfeld_double_group(2, 2), "R")]
    for charP in (2, None):
        for key, e in cat.group_family(2, charP).items():
            out.append((e, "1"))
    return out


def run_properties() -> SuiteResult:
    """Invariant sweep: route agreement, implication chain, symmetry, double opposite, psi isomorphism."""
    res = SuiteResult("properties")
    for e, rname in property_entries():
        h, R = e.hopf, e.rmatrices[rname]
        sym = R.flip() * R == h.one2()
        Rrev = reverse_r(h, R)
        for name, a in e.module_algebras.items():
            tag = f"{e.name}/{name}"
            sep = separable(a).verdict
            rp = relatively_projective(a).verdict
            fe = fully_exact(a, R)  # raises if the two routes disagree
            res.check(f"{tag}: route-m = route-p", True, fe.cross_checks[0][1] == fe.cross_checks[1][1])
            res.check(f"{tag}: separable => relatively projective", True, (not sep) or rp)
            res.check(f"{tag}: relatively projective => fully exact", True, (not rp) or fe.verdict)
            if sym:
                res.check(f"{tag}: op_fully_exact = fully_exact (symmetric R)", fe.verdict,
                          op_fully_exact(a, R).verdict)
            back = braided_opposite(braided_opposite(a, R), Rrev)
            res.check(f"{tag}: (A^psi)^(psi^-1) = A", True, back.alg.structure_equal(a.alg))
            for name2, b in e.module_algebras.items():
                f = braid_alg_map(a, b, R, Rrev)
                res.check(f"{tag}: psi^-1 iso A(x)B -> B(x)A with B={name2}", True,
                          bool(verify_alg_map(f)) and f.matrix.rank() == a.dim * b.dim)
        vp = vect_predicates(h, R, None, f"vect over {e.name}")
        d = vp.details
        res.check(f"{e.name}: invertible => perfect", True,
                  (not d["invertible"]) or (d["fullyExact"] and d["opFullyExact"]))
    e = cat.sweedler()
    I = e.module_algebras["I"]
    w = relproj_tensor_witness(I, I, e.rmatrices["R0"])
    res.check("witness I(x)I: pi o iota = id and bimodule maps", True, w.ok)
    res.check("relatively_projective(I(x)I)", True, relatively_projective(w.algebra).verdict)
    return res


SUITES = {"sweedler": run_sweedler, "uqsl2": run_uqsl2, "double-group": run_double_group,
          "vect-g": run_vect_g, "properties": run_properties}
