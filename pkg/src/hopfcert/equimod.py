"""Equivariant modules and projectivity by explicit splitting.

A module is a vector space with an optional H-action and a list of algebra
actions (left or right).  Morphisms must commute with all of them.  Hom
spaces are computed by spinning: a morphism is determined by the images of
a generating set, and the relations among orbit vectors cut out the
admissible images.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraSC, AlgMap, Report, algebra_generators
from .hopf import HopfData, ModuleAlgebra, TensorElt, check_rep, r_inverse, regular_rep, tensor_rep
from .linalg import Echelon, Mat, _sparse, block_diag, hstack, inverse, kernel_of_rows, kron, solve_affine, vstack


class IncompatibleHopf(ValueError):
    pass


class SignatureMismatch(ValueError):
    pass


@dataclass
class Action:
    alg: AlgebraSC
    side: str  # "left" or "right"
    mats: list  # one Mat per basis element of alg
    name: str = ""


class EquivariantModule:
    """Vector space with an H-action (optional) and algebra actions."""

    def __init__(self, hopf: HopfData | None, dim: int, h_action=None, actions=(), name=""):
        self.hopf = hopf
        self.dim = dim
        self.h_action = list(h_action) if h_action is not None else None
        self.actions = list(actions)
        self.name = name
        self._ops = None

    @property
    def spec(self):
        if self.hopf is not None:
            return self.hopf.spec
        return self.actions[0].alg.spec

    def signature(self):
        return (id(self.hopf) if self.h_action is not None else None,
                tuple((id(a.alg), a.side) for a in self.actions))

    def operators(self):
        """Matrices whose commutant is the endomorphism algebra: generators of every action."""
        if self._ops is None:
            ops = []
            if self.h_action is not None:
                ops += [("H", i) for i in self.hopf.generators()]
            for n, act in enumerate(self.actions):
                ops += [(n, i) for i in algebra_generators(act.alg)]
            self._ops = ops
        return self._ops

    def op_matrix(self, key) -> Mat:
        fam, i = key
        return self.h_action[i] if fam == "H" else self.actions[fam].mats[i]

    def all_matrices(self):
        """(key, matrix) for every basis element of every action."""
        out = []
        if self.h_action is not None:
            out += [(("H", i), m) for i, m in enumerate(self.h_action)]
        for n, act in enumerate(self.actions):
            out += [((n, i), m) for i, m in enumerate(act.mats)]
        return out

    def __repr__(self):
        return f"EquivariantModule({self.name or '?'}, dim={self.dim}, actions={len(self.actions)})"


def verify_module(v: EquivariantModule) -> Report:
    """Each action is a representation; right actions commute with left ones and are H-compatible."""
    rep = Report(f"module {v.name}")
    if v.h_action is not None:
        rep.merge(check_rep(v.hopf.alg, v.h_action, "left"), "H: ")
    for act in v.actions:
        rep.merge(check_rep(act.alg, act.mats, act.side), f"{act.name or act.side}: ")
    if not rep:
        return rep
    lefts = [a for a in v.actions if a.side == "left"]
    rights = [a for a in v.actions if a.side == "right"]
    for l in lefts:
        for r in rights:
            for X in l.mats:
                for Y in r.mats:
                    if X @ Y != Y @ X:
                        rep.fail("left and right actions do not commute")
                        return rep
    return rep


def check_compatibility(v: EquivariantModule, act: Action, rho_alg) -> Report:
    """h.(a.v) = (h_1 a).(h_2 v) for left actions, h.(v.a) = (h_1 v).(h_2 a) for right ones.

    ``rho_alg`` is the H-action on the algebra; only meaningful for actions
    whose structure map is plain (not braided).
    """
    rep = Report("compatibility")
    h = v.hopf
    spec = v.spec
    A = act.alg
    for i in range(h.dim):
        for j in range(A.dim):
            lhs = v.h_action[i] @ act.mats[j]
            rhs = Mat.zeros(spec, v.dim, v.dim)
            for (p, q), c in h.comult[i].items():
                if act.side == "left":
                    img, other = rho_alg[p].column(j), v.h_action[q]
                    am = _combo(spec, act.mats, img, v.dim)
                    rhs = rhs + (am @ other).scale(c)
                else:
                    img, other = rho_alg[q].column(j), v.h_action[p]
                    am = _combo(spec, act.mats, img, v.dim)
                    rhs = rhs + (am @ other).scale(c)
            if lhs != rhs:
                rep.fail(f"compatibility fails at (e{i}, a{j})")
                return rep
    return rep


def _combo(spec, mats, coeffs, n):
    acc = Mat.zeros(spec, n, n)
    for k, c in enumerate(coeffs):
        if not spec.is_zero(c):
            acc = acc + mats[k].scale(c)
    return acc


# ---------------------------------------------------------------- constructors

def regular_module(alg: AlgebraSC, name="") -> EquivariantModule:
    L = [alg.lmat(alg.basis_vector(i)) for i in range(alg.dim)]
    return EquivariantModule(None, alg.dim, None, [Action(alg, "left", L, "regular")], name or "regular")


def plain_module(alg: AlgebraSC, mats, name="") -> EquivariantModule:
    return EquivariantModule(None, mats[0].rows, None, [Action(alg, "left", list(mats), name)], name)


def restrict(m: EquivariantModule, f: AlgMap, which: int = 0) -> EquivariantModule:
    """Res_f: the action of f.target (action ``which``) pulled back along f."""
    act = m.actions[which]
    if act.alg is not f.target:
        raise SignatureMismatch("map target is not the acting algebra")
    spec = m.spec
    mats = [_combo(spec, act.mats, f.matrix.column(i), m.dim) for i in range(f.source.dim)]
    acts = list(m.actions)
    acts[which] = Action(f.source, act.side, mats, f"Res({act.name})")
    return EquivariantModule(m.hopf, m.dim, m.h_action, acts, f"Res({m.name})")


def direct_sum(v: EquivariantModule, w: EquivariantModule) -> EquivariantModule:
    if v.signature() != w.signature():
        raise SignatureMismatch("direct sum of modules with different signatures")
    h_act = None
    if v.h_action is not None:
        h_act = [block_diag([a, b]) for a, b in zip(v.h_action, w.h_action)]
    acts = [Action(a.alg, a.side, [block_diag([x, y]) for x, y in zip(a.mats, b.mats)], a.name)
            for a, b in zip(v.actions, w.actions)]
    return EquivariantModule(v.hopf, v.dim + w.dim, h_act, acts, f"{v.name}+{w.name}")


def conjugate(v: EquivariantModule, P: Mat) -> EquivariantModule:
    """Same module transported along the invertible change of basis P."""
    Pinv = inverse(P)
    h_act = [P @ m @ Pinv for m in v.h_action] if v.h_action is not None else None
    acts = [Action(a.alg, a.side, [P @ m @ Pinv for m in a.mats], a.name) for a in v.actions]
    return EquivariantModule(v.hopf, v.dim, h_act, acts, f"{v.name}^P")


def bimodule_of(a: ModuleAlgebra) -> EquivariantModule:
    """A as an A-bimodule in H-mod."""
    A = a.alg
    L = [A.lmat(A.basis_vector(i)) for i in range(A.dim)]
    R = [A.rmat(A.basis_vector(i)) for i in range(A.dim)]
    return EquivariantModule(a.hopf, A.dim, a.action,
                             [Action(A, "left", L, "left"), Action(A, "right", R, "right")], a.name)


def right_module_of(a: ModuleAlgebra) -> EquivariantModule:
    """A as a right A-module in H-mod."""
    A = a.alg
    R = [A.rmat(A.basis_vector(i)) for i in range(A.dim)]
    return EquivariantModule(a.hopf, A.dim, a.action, [Action(A, "right", R, "right")], a.name)


def tensor_power_bimodule(a: ModuleAlgebra, n: int) -> EquivariantModule:
    """A^{(x)n} with left multiplication on the first and right on the last factor."""
    h, A = a.hopf, a.alg
    spec = h.spec
    rho = a.action
    for _ in range(n - 1):
        rho = tensor_rep(h, rho, a.action)
    rest = A.dim ** (n - 1)
    I_rest = Mat.identity(spec, rest)
    L = [kron(A.lmat(A.basis_vector(i)), I_rest) for i in range(A.dim)]
    R = [kron(I_rest, A.rmat(A.basis_vector(i))) for i in range(A.dim)]
    return EquivariantModule(h, A.dim ** n, rho,
                             [Action(A, "left", L, "left"), Action(A, "right", R, "right")],
                             f"{a.name}^{n}")


def internal_action_on_tensor(rho_x, v: EquivariantModule, a: ModuleAlgebra, r: TensorElt,
                              rinv: TensorElt | None = None) -> EquivariantModule:
    """X |> V for an A-bimodule V in H-mod.

    H acts diagonally, A acts on the right through V, and on the left through
    psi^{-1}_{A,X} (x) id_V, where psi^{-1}_{A,X} = (psi_{X,A})^{-1} sends
    a (x) x to R^{-(1)} x (x) R^{-(2)} a.
    """
    h = v.hopf
    if h is not a.hopf:
        raise IncompatibleHopf("module and algebra over different Hopf algebras")
    if len(rho_x) != h.dim:
        raise IncompatibleHopf("X is not an H-module")
    spec = h.spec
    A = a.alg
    dx = rho_x[0].rows
    lam = next(act for act in v.actions if act.side == "left" and act.alg is A)
    rgt = next(act for act in v.actions if act.side == "right" and act.alg is A)
    rinv = rinv if rinv is not None else r_inverse(h, r)
    I_x = Mat.identity(spec, dx)
    L = []
    for i in range(A.dim):
        acc = Mat.zeros(spec, dx * v.dim, dx * v.dim)
        for (p, q), c in rinv.c.items():
            img = a.action[q].column(i)
            acc = acc + kron(rho_x[p], _combo(spec, lam.mats, img, v.dim)).scale(c)
        L.append(acc)
    R = [kron(I_x, m) for m in rgt.mats]
    H = tensor_rep(h, rho_x, v.h_action)
    return EquivariantModule(h, dx * v.dim, H, [Action(A, "left", L, "left"), Action(A, "right", R, "right")],
                             f"X|>{v.name}")


# ---------------------------------------------------------------- spinning

@dataclass
class Spin:
    gens: list  # raw generator vectors
    basis: list  # raw vectors, orbit basis
    origin: list  # per basis vector: ("gen", j) or ("op", key, parent index)
    binv: Mat  # inverse of the matrix with columns ``basis``


def spin(v: EquivariantModule) -> Spin:
    """Greedy generators (standard basis scan order) and an orbit basis with recorded words."""
    spec = v.spec
    n = v.dim
    ops = v.operators()
    mats = {k: v.op_matrix(k) for k in ops}
    E = Echelon(spec)
    basis, origin, gens = [], [], []

    def close(start):
        queue = [start]
        while queue:
            b = queue.pop(0)
            for k in ops:
                w = mats[k].apply(basis[b])
                if E.add(_sparse(spec, w)):
                    basis.append(w)
                    origin.append(("op", k, b))
                    queue.append(len(basis) - 1)

    for i in range(n):
        if len(basis) == n:
            break
        e = [spec.zero] * n
        e[i] = spec.one
        if E.add({i: spec.one}):
            gens.append(e)
            basis.append(e)
            origin.append(("gen", len(gens) - 1))
            close(len(basis) - 1)
    binv = inverse(Mat.from_columns(spec, basis, n)) if n else Mat.zeros(spec, 0, 0)
    return Spin(gens, basis, origin, binv)


def greedy_generators(v: EquivariantModule):
    return spin(v).gens


def _rows_times(spec, M: Mat, F):
    """M (dense) times F (list of sparse dict rows)."""
    add, mul, iz = spec.add, spec.mul, spec.is_zero
    out = []
    for row in M.data:
        acc = {}
        for s, x in enumerate(row):
            if iz(x):
                continue
            for col, y in F[s].items():
                t = add(acc.get(col, spec.zero), mul(x, y))
                if iz(t):
                    acc.pop(col, None)
                else:
                    acc[col] = t
        out.append(acc)
    return out


def hom_space(m: EquivariantModule, n: EquivariantModule, sp: Spin | None = None):
    """Basis of the maps m -> n commuting with every action (as n.dim x m.dim matrices)."""
    if m.signature() != n.signature():
        raise SignatureMismatch("modules carry different actions")
    spec = m.spec
    if m.dim == 0 or n.dim == 0:
        return []
    sp = sp or spin(m)
    k, dn = len(sp.gens), n.dim
    U = k * dn
    ops = m.operators()
    nm = {key: n.op_matrix(key) for key in ops}
    mm = {key: m.op_matrix(key) for key in ops}
    # images f(b) as linear functions of the unknown generator images
    F = []
    for o in sp.origin:
        if o[0] == "gen":
            j = o[1]
            F.append([{j * dn + r: spec.one} for r in range(dn)])
        else:
            _, key, parent = o
            F.append(_rows_times(spec, nm[key], F[parent]))
    tree = {(o[1], o[2]) for o in sp.origin if o[0] == "op"}

    def constraints():
        add, mul, sub, iz = spec.add, spec.mul, spec.sub, spec.is_zero
        for b in range(len(sp.basis)):
            for key in ops:
                if (key, b) in tree:
                    continue
                w = mm[key].apply(sp.basis[b])
                coords = sp.binv.apply(w)
                lhs = _rows_times(spec, nm[key], F[b])
                for r in range(dn):
                    row = dict(lhs[r])
                    for i, c in enumerate(coords):
                        if iz(c):
                            continue
                        for col, y in F[i][r].items():
                            t = sub(row.get(col, spec.zero), mul(c, y))
                            if iz(t):
                                row.pop(col, None)
                            else:
                                row[col] = t
                    if row:
                        yield row

    ker = kernel_of_rows(spec, constraints(), U)
    out = []
    for u in ker:
        cols = []
        for Fb in F:
            col = []
            for r in range(dn):
                acc = spec.zero
                for c, y in Fb[r].items():
                    acc = spec.add(acc, spec.mul(y, u[c]))
                col.append(acc)
            cols.append(col)
        f = Mat.from_columns(spec, cols, dn) @ sp.binv
        out.append(f)
    for f in out:
        for key in ops:
            if f @ mm[key] != nm[key] @ f:
                raise AssertionError("spun intertwiner fails to commute")
    return out


def is_hom(f: Mat, m: EquivariantModule, n: EquivariantModule) -> bool:
    """f commutes with every basis action matrix."""
    return all(f @ a == b @ f for (_, a), (_, b) in zip(m.all_matrices(), n.all_matrices()))


# ---------------------------------------------------------------- covers

@dataclass
class Cover:
    """Generator object G and maps pi_c : G -> V, one per generator of V."""

    obj: EquivariantModule
    pis: list
    recipe: str


def free_cover(v: EquivariantModule, gens) -> Cover:
    """Plain left module over B: G = B, pi_c(b) = b . g_c."""
    if v.h_action is not None or len(v.actions) != 1 or v.actions[0].side != "left":
        raise SignatureMismatch("free cover needs a plain left module")
    act = v.actions[0]
    B = act.alg
    G = regular_module(B)
    G.actions[0] = Action(B, "left", G.actions[0].mats, act.name)
    pis = [Mat.from_columns(v.spec, [act.mats[i].apply(g) for i in range(B.dim)], v.dim) for g in gens]
    return Cover(G, pis, "free")


def internal_cover(v: EquivariantModule, gens, a: ModuleAlgebra) -> Cover:
    """Right A-module in H-mod: G = H (x) A, pi_c(h (x) a) = (h . g_c) . a."""
    h = v.hopf
    spec = h.spec
    A = a.alg
    rgt = v.actions[0]
    rho_h = regular_rep(h)
    H = tensor_rep(h, rho_h, a.action)
    R = [kron(Mat.identity(spec, h.dim), A.rmat(A.basis_vector(i))) for i in range(A.dim)]
    G = EquivariantModule(h, h.dim * A.dim, H, [Action(A, "right", R, rgt.name)], "H(x)A")
    pis = []
    for g in gens:
        cols = []
        for p in range(h.dim):
            hg = v.h_action[p].apply(g)
            for i in range(A.dim):
                cols.append(rgt.mats[i].apply(hg))
        pis.append(Mat.from_columns(spec, cols, v.dim))
    return Cover(G, pis, "internal H(x)A")


def bimodule_cover(v: EquivariantModule, gens, a: ModuleAlgebra) -> Cover:
    """A-bimodule in H-mod: G = A (x) H (x) A, pi_c(a (x) h (x) a') = a . (h . g_c) . a'."""
    h = v.hopf
    spec = h.spec
    A = a.alg
    rho_h = regular_rep(h)
    lam = next(act for act in v.actions if act.side == "left")
    rgt = next(act for act in v.actions if act.side == "right")
    H = tensor_rep(h, tensor_rep(h, a.action, rho_h), a.action)
    I_ha = Mat.identity(spec, h.dim * A.dim)
    L = [kron(A.lmat(A.basis_vector(i)), I_ha) for i in range(A.dim)]
    R = [kron(I_ha, A.rmat(A.basis_vector(i))) for i in range(A.dim)]
    G = EquivariantModule(h, A.dim * h.dim * A.dim, H,
                          [Action(A, "left", L, lam.name), Action(A, "right", R, rgt.name)], "I^b(H)")
    pis = []
    for g in gens:
        cols = []
        for i in range(A.dim):
            for p in range(h.dim):
                hg = v.h_action[p].apply(g)
                for j in range(A.dim):
                    cols.append(lam.mats[i].apply(rgt.mats[j].apply(hg)))
        pis.append(Mat.from_columns(spec, cols, v.dim))
    return Cover(G, pis, "bimodule A(x)H(x)A")


# ---------------------------------------------------------------- certificates

@dataclass
class SplitCertificate:
    verdict: str  # "Split" or "NotProjective"
    section: Mat | None = None
    pi: Mat | None = None
    functional: Mat | None = None  # Y on End(V): <Y, M> = sum Y[r][c] M[r][c]
    digest: dict = field(default_factory=dict)
    image: list = field(default_factory=list)  # pi o h for a spanning set of hom(V, F)

    @property
    def split(self) -> bool:
        return self.verdict == "Split"

    def to_json(self):
        d = {"verdict": self.verdict, "digest": dict(self.digest)}
        if self.section is not None:
            d["section"] = self.section.to_strings()
        if self.functional is not None:
            d["functional"] = self.functional.to_strings()
        return d


def pair(Y: Mat, M: Mat):
    spec = Y.spec
    acc = spec.zero
    for yr, mr in zip(Y.data, M.data):
        for a, b in zip(yr, mr):
            if not spec.is_zero(a) and not spec.is_zero(b):
                acc = spec.add(acc, spec.mul(a, b))
    return acc


def reverify(cert: SplitCertificate, v: EquivariantModule, cover_obj: EquivariantModule | None = None) -> bool:
    """Independent check by multiplication."""
    spec = v.spec
    if cert.verdict == "Split":
        if v.dim == 0:
            return True
        if cert.pi @ cert.section != Mat.identity(spec, v.dim):
            return False
        if cover_obj is None:
            return True
        return all(cert.section @ a == b @ cert.section
                   for (_, a), (_, b) in zip(v.all_matrices(), cover_obj.all_matrices()))
    Y = cert.functional
    if pair(Y, Mat.identity(spec, v.dim)) != spec.one:
        return False
    return all(spec.is_zero(pair(Y, P)) for P in cert.image)


def _power_object(G: EquivariantModule, k: int) -> EquivariantModule:
    out = G
    for _ in range(k - 1):
        out = direct_sum(out, G)
    return out


def split_through(v: EquivariantModule, gens, blocks) -> SplitCertificate:
    """Find s with sum_c pi_c s_c = id, s_c in hom(V, G_c).

    ``blocks`` is a list of (pi_c, homs_c) with homs_c a basis of hom(V, G_c).
    Only the generator columns of pi o s are constrained: an endomorphism of
    V commuting with all actions is fixed by its values on generators.
    """
    spec = v.spec
    n = v.dim
    cands = []
    for c, (pi, homs) in enumerate(blocks):
        for a, hmat in enumerate(homs):
            cands.append((c, a, pi @ hmat))
    rows = len(gens) * n
    A = Mat.zeros(spec, rows, len(cands))
    for col, (_, _, P) in enumerate(cands):
        for j, g in enumerate(gens):
            w = P.apply(g)
            for r in range(n):
                A.data[j * n + r][col] = w[r]
    b = Mat.from_columns(spec, [[x for g in gens for x in g]], rows)
    digest = {"unknowns": len(cands), "equations": rows, "generators": len(gens),
              "hom_dims": [len(hs) for _, hs in blocks]}
    f = solve_affine(A, b, want_kernel=False)
    pi_full = hstack([pi for pi, _ in blocks]) if blocks else Mat.zeros(spec, n, 0)
    if f.feasible:
        parts = []
        for c, (pi, homs) in enumerate(blocks):
            acc = Mat.zeros(spec, pi.cols, n)
            for col, (cc, a, _) in enumerate(cands):
                if cc == c and not spec.is_zero(f.x.data[col][0]):
                    acc = acc + homs[a].scale(f.x.data[col][0])
            parts.append(acc)
        s = vstack(parts)
        return SplitCertificate("Split", section=s, pi=pi_full, digest=digest)
    y = f.y
    Y = Mat.zeros(spec, n, n)
    for j, g in enumerate(gens):
        for r in range(n):
            yr = y[j * n + r]
            if spec.is_zero(yr):
                continue
            for c in range(n):
                if not spec.is_zero(g[c]):
                    Y.data[r][c] = spec.add(Y.data[r][c], spec.mul(yr, g[c]))
    return SplitCertificate("NotProjective", pi=pi_full, functional=Y, digest=digest,
                            image=[P for _, _, P in cands])


def projectivity(v: EquivariantModule, recipe: str = "free", algebra: ModuleAlgebra | None = None,
                 check=True) -> SplitCertificate:
    """Split the cover G^k -> V, or certify that no equivariant section exists.

    recipe: "free" (plain module, G = B), "internal" (right A-module in H-mod,
    G = H (x) A) or "bimodule" (G = A (x) H (x) A).
    """
    if v.dim == 0:
        return SplitCertificate("Split", section=Mat.zeros(v.spec, 0, 0), pi=Mat.zeros(v.spec, 0, 0),
                                digest={"generators": 0})
    sp = spin(v)
    gens = sp.gens
    if recipe == "free":
        cov = free_cover(v, gens)
    elif recipe == "internal":
        cov = internal_cover(v, gens, algebra)
    elif recipe == "bimodule":
        cov = bimodule_cover(v, gens, algebra)
    else:
        raise ValueError(f"unknown cover recipe {recipe}")
    homs = hom_space(v, cov.obj, sp)  # hom(V, G^k) = hom(V, G)^k
    cert = split_through(v, gens, [(pi, homs) for pi in cov.pis])
    cert.digest["recipe"] = cov.recipe
    cert.digest["cover_dim"] = cov.obj.dim * len(gens)
    if check:
        F = _power_object(cov.obj, len(gens))
        if not reverify(cert, v, F):
            raise AssertionError("splitting certificate failed re-verification")
    return cert


def split_morphism(v: EquivariantModule, f_obj: EquivariantModule, pi: Mat, check=True) -> SplitCertificate:
    """Section of a given equivariant epimorphism pi : F -> V, or a separating functional."""
    sp = spin(v)
    homs = hom_space(v, f_obj, sp)
    cert = split_through(v, sp.gens, [(pi, homs)])
    cert.digest["recipe"] = "given"
    if check and not reverify(cert, v, f_obj):
        raise AssertionError("splitting certificate failed re-verification")
    return cert
