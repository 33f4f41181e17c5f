"""Decision procedures for module-category predicates, each returning a certificate."""
from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .algebra import AlgMap, verify_alg_map
from .equimod import (EquivariantModule, Action, SplitCertificate, bimodule_of, internal_action_on_tensor,
                      is_hom, projectivity, regular_module, restrict, split_morphism,
                      tensor_power_bimodule)
from .hopf import (HopfData, ModuleAlgebra, TensorElt, braid_matrix, braided_opposite, braided_tensor,
                   cocycle_check, phi_of, r_inverse, r_matrix_check, regular_rep, reverse_r, tensor_rep,
                   twist_r, twisted_dual_algebra)
from .linalg import Mat, kron

SCHEMA_VERSION = 1


class RouteDisagreement(AssertionError):
    pass


class InvalidTwist(ValueError):
    pass


class InputNotRelProj(ValueError):
    pass


@dataclass
class PredicateReport:
    predicate: str
    subject: str
    verdict: bool
    certificate: object = None
    cross_checks: list = dfield(default_factory=list)
    dims: dict = dfield(default_factory=dict)
    field: str = ""
    exact: str | None = None
    details: dict = dfield(default_factory=dict)

    def to_json(self):
        cert = self.certificate
        if isinstance(cert, SplitCertificate):
            cert = cert.to_json()
        elif isinstance(cert, dict):
            cert = {k: (v.to_json() if isinstance(v, SplitCertificate) else v) for k, v in cert.items()}
        d = {"predicate": self.predicate, "subject": self.subject, "verdict": self.verdict,
             "certificate": cert, "crossChecks": [list(c) for c in self.cross_checks],
             "dims": dict(self.dims), "field": self.field}
        if self.exact is not None:
            d["exact"] = self.exact
        if self.details:
            d["details"] = dict(self.details)
        return d


def _exact_flag(verdict):
    return "implied-true" if verdict else "unknown"


def _mult3(a: ModuleAlgebra) -> Mat:
    m = a.mult_matrix()
    return m @ kron(m, Mat.identity(a.spec, a.dim))


def separable(a: ModuleAlgebra) -> PredicateReport:
    """Does m : A (x) A -> A have a section as a map of A-bimodules in H-mod?"""
    V = bimodule_of(a)
    F = tensor_power_bimodule(a, 2)
    cert = split_morphism(V, F, a.mult_matrix())
    return PredicateReport("separable", a.name, cert.split, cert, dims={"A": a.dim, "system": cert.digest},
                           field=str(a.spec), exact=_exact_flag(cert.split))


def relatively_projective(a: ModuleAlgebra) -> PredicateReport:
    """Does A (x) A (x) A -> A split as a map of A-bimodules in H-mod?"""
    V = bimodule_of(a)
    F = tensor_power_bimodule(a, 3)
    cert = split_morphism(V, F, _mult3(a))
    return PredicateReport("relatively_projective", a.name, cert.split, cert,
                           dims={"A": a.dim, "system": cert.digest}, field=str(a.spec),
                           exact=_exact_flag(cert.split))


def _fully_exact_routes(a: ModuleAlgebra, r: TensorElt):
    h = a.hopf
    rho = regular_rep(h)
    rinv = r_inverse(h, r)
    V = internal_action_on_tensor(rho, bimodule_of(a), a, r, rinv)
    F = internal_action_on_tensor(rho, tensor_power_bimodule(a, 2), a, r, rinv)
    pi = kron(Mat.identity(h.spec, h.dim), a.mult_matrix())
    cm = split_morphism(V, F, pi)
    cp = projectivity(V, "bimodule", a)
    return V, cm, cp


def fully_exact(a: ModuleAlgebra, r: TensorElt, name="fully_exact") -> PredicateReport:
    """H |> A projective as an A-bimodule in H-mod; decided by two independent routes."""
    _, cm, cp = _fully_exact_routes(a, r)
    if cm.split != cp.split:
        raise RouteDisagreement(f"{name}({a.name}): route-m {cm.verdict}, route-p {cp.verdict}")
    return PredicateReport(name, a.name, cm.split, {"route-m": cm, "route-p": cp},
                           cross_checks=[("route-m", cm.split), ("route-p", cp.split)],
                           dims={"H|>A": a.hopf.dim * a.dim, "route-m": cm.digest, "route-p": cp.digest},
                           field=str(a.spec), exact=_exact_flag(cm.split))


def op_fully_exact(a: ModuleAlgebra, r: TensorElt) -> PredicateReport:
    """Full exactness for the reversed braiding R^{-1}_21."""
    h = a.hopf
    rep = fully_exact(a, reverse_r(h, r), name="op_fully_exact")
    if r.flip() * r == h.one2():
        fe = fully_exact(a, r)
        rep.cross_checks.append(("symmetric R: fully_exact", fe.verdict))
        if fe.verdict != rep.verdict:
            raise RouteDisagreement("op_fully_exact differs from fully_exact under a symmetric R")
    return rep


def perfect(a: ModuleAlgebra, r: TensorElt) -> PredicateReport:
    fe = fully_exact(a, r)
    op = op_fully_exact(a, r)
    v = fe.verdict and op.verdict
    return PredicateReport("perfect", a.name, v, {"fully_exact": fe.to_json(), "op_fully_exact": op.to_json()},
                           cross_checks=[("fully_exact", fe.verdict), ("op_fully_exact", op.verdict)],
                           field=str(a.spec), exact=_exact_flag(v))


# ---------------------------------------------------------------- vect^J

def twisted_phi(h: HopfData, r: TensorElt, j: TensorElt | None = None):
    """phi_{R^J} as an algebra map from the twisted dual algebra ^J H^{J*} into H."""
    if j is None:
        j = h.one2()
    rj = twist_r(r, j) if j != h.one2() else r
    D = twisted_dual_algebra(h, j, j)
    f = phi_of(h, rj)
    f = AlgMap(D, h.alg, f.matrix)
    rep = verify_alg_map(f)
    if not rep:
        raise InvalidTwist("phi_{R^J} is not an algebra map: " + "; ".join(rep.failures))
    return f


def vect_predicates(h: HopfData, r: TensorElt, j: TensorElt | None = None, subject="vect") -> PredicateReport:
    """fullyExact / opFullyExact / invertible for the module category vect^J."""
    rr = r_matrix_check(h, r)
    if not rr:
        raise InvalidTwist("R fails the R-matrix axioms: " + "; ".join(rr.failures))
    if j is not None and not cocycle_check(h, j):
        raise InvalidTwist("J is not a 2-cocycle")
    f = twisted_phi(h, r, j)
    fo = twisted_phi(h, reverse_r(h, r), j)
    reg = regular_module(h.alg)
    c_fe = projectivity(restrict(reg, f))
    c_op = projectivity(restrict(reg, fo))
    rank = f.matrix.rank()
    inv = rank == h.dim
    details = {"fullyExact": c_fe.split, "opFullyExact": c_op.split, "invertible": inv,
               "phiRank": rank, "phiImageDim": rank}
    if inv and not (c_fe.split and c_op.split):
        raise RouteDisagreement("invertible vect^J that is not perfect")
    return PredicateReport("vect", subject, c_fe.split, {"fullyExact": c_fe, "opFullyExact": c_op},
                           cross_checks=[("invertible => fullyExact", (not inv) or c_fe.split),
                                         ("invertible => opFullyExact", (not inv) or c_op.split)],
                           dims={"H": h.dim, "fullyExact": c_fe.digest, "opFullyExact": c_op.digest},
                           field=str(h.spec), details=details)


# ---------------------------------------------------------------- algebra level

def algebra_calculus(kind: str, a: ModuleAlgebra, b: ModuleAlgebra | None, r: TensorElt) -> ModuleAlgebra:
    """relDeligne: A (x)^psi B;  leftDualAlg: A^psi;  rightDualAlg: A^{psi^-1};  functorAlg: A^psi (x)^psi B."""
    h = a.hopf
    if kind == "relDeligne":
        return braided_tensor(a, b, r)
    if kind == "leftDualAlg":
        return braided_opposite(a, r)
    if kind == "rightDualAlg":
        return braided_opposite(a, reverse_r(h, r))
    if kind == "functorAlg":
        return braided_tensor(braided_opposite(a, r), b, r)
    raise ValueError(f"unknown construction {kind}")


@dataclass
class TensorWitness:
    iota: Mat
    pi: Mat
    algebra: ModuleAlgebra
    identity_ok: bool
    iota_bimodule: bool
    pi_bimodule: bool

    @property
    def ok(self):
        return self.identity_ok and self.iota_bimodule and self.pi_bimodule


def free_bimodule(c: ModuleAlgebra, rho_z) -> EquivariantModule:
    """C (x) Z (x) C with outer multiplications and the diagonal H-action."""
    h, C = c.hopf, c.alg
    spec = h.spec
    dz = rho_z[0].rows
    I_zc = Mat.identity(spec, dz * C.dim)
    L = [kron(C.lmat(C.basis_vector(i)), I_zc) for i in range(C.dim)]
    R = [kron(I_zc, C.rmat(C.basis_vector(i))) for i in range(C.dim)]
    H = tensor_rep(h, tensor_rep(h, c.action, rho_z), c.action)
    return EquivariantModule(h, C.dim * dz * C.dim, H,
                             [Action(C, "left", L, "left"), Action(C, "right", R, "right")], "I^b(Z)")


def relproj_tensor_witness(a: ModuleAlgebra, b: ModuleAlgebra, r: TensorElt) -> TensorWitness:
    """Splitting of I^b(X (x) Y) -> A (x)^psi B from splittings of I^b(X) -> A and I^b(Y) -> B."""
    h = a.hopf
    spec = h.spec
    ra, rb = relatively_projective(a), relatively_projective(b)
    if not (ra.verdict and rb.verdict):
        raise InputNotRelProj("both algebras must be relatively projective")
    iA, iB = ra.certificate.section, rb.certificate.section
    pA, pB = _mult3(a), _mult3(b)
    rinv21 = reverse_r(h, r)
    rA, rB = a.action, b.action  # X = A and Y = B as H-modules
    dA, dB = a.dim, b.dim
    I = lambda n: Mat.identity(spec, n)

    def kr(*ms):
        out = ms[0]
        for m in ms[1:]:
            out = kron(out, m)
        return out

    # iota: A B -> (A X A)(B Y B) -> A X B A Y B -> A B X Y A B
    s1 = kron(iA, iB)
    s2 = kr(I(dA * dA), braid_matrix(rinv21, rA, rB), I(dB * dB))
    s3 = kr(I(dA), braid_matrix(rinv21, rA, rB), braid_matrix(rinv21, rA, rB), I(dB))
    iota = s3 @ s2 @ s1
    # pi: A B X Y A B -> A X B A Y B -> A X A B Y B -> A B
    t1 = kr(I(dA), braid_matrix(r, rB, rA), braid_matrix(r, rB, rA), I(dB))
    t2 = kr(I(dA * dA), braid_matrix(r, rB, rA), I(dB * dB))
    pi = kron(pA, pB) @ t2 @ t1
    C = braided_tensor(a, b, r)
    V = bimodule_of(C)
    T = free_bimodule(C, tensor_rep(h, rA, rB))
    return TensorWitness(iota, pi, C, pi @ iota == I(dA * dB), is_hom(iota, V, T), is_hom(pi, T, V))
