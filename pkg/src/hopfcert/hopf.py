"""Hopf algebras, R-matrices, cocycle twists and braided algebra constructions.

Conventions used throughout:

* dual product is reversed, (f g)(h) = f(h_(2)) g(h_(1));
* phi_R(f) = R^(1) f(R^(2));
* braiding psi_{V,W}(v (x) w) = R^(2) w (x) R^(1) v, its reverse uses R^{-1}_{21};
* twisted R-matrix R^J = J_21^{-1} R J, twisted coproduct L^{-1} Delta(h) J.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .algebra import (AlgebraSC, AlgMap, Report, algebra_generators, verify_algebra,
                      verify_alg_map)
from .linalg import Mat, inverse, kron, solve_affine


class NotInvertible(Exception):
    pass


class RMatrixInvalid(Exception):
    pass


class CocycleInvalid(Exception):
    pass


class ModuleAlgebraInvalid(Exception):
    pass


# ---------------------------------------------------------------- tensors

class TensorElt:
    """Element of A_1 (x) ... (x) A_n stored as {index tuple: raw coefficient}."""

    __slots__ = ("algs", "c")

    def __init__(self, algs, coords):
        self.algs = tuple(algs)
        spec = self.algs[0].spec
        iz = spec.is_zero
        self.c = {k: v for k, v in coords.items() if not iz(v)}

    @property
    def spec(self):
        return self.algs[0].spec

    @property
    def legs(self):
        return len(self.algs)

    @classmethod
    def zero(cls, algs):
        return cls(algs, {})

    @classmethod
    def one(cls, algs):
        return cls.pure(algs, [a.unit for a in algs])

    @classmethod
    def pure(cls, algs, vecs):
        """v_1 (x) ... (x) v_n for raw dense vectors."""
        spec = algs[0].spec
        iz, mul = spec.is_zero, spec.mul
        terms = [((), spec.one)]
        for v in vecs:
            nz = [(i, x) for i, x in enumerate(v) if not iz(x)]
            terms = [(k + (i,), mul(c, x)) for k, c in terms for i, x in nz]
        out = {}
        for k, c in terms:
            out[k] = spec.add(out.get(k, spec.zero), c)
        return cls(algs, out)

    @classmethod
    def from_terms(cls, algs, terms):
        """Sum of coef * e_{i1} (x) ... from (coef, (i1, ...)) pairs."""
        spec = algs[0].spec
        out = {}
        for coef, key in terms:
            out[key] = spec.add(out.get(key, spec.zero), spec.coerce(coef))
        return cls(algs, out)

    def __getitem__(self, key):
        from .exactfield import Scalar
        return Scalar(self.spec, self.c.get(key, self.spec.zero))

    def _same(self, other):
        if not isinstance(other, TensorElt) or other.algs != self.algs:
            raise ValueError("tensor factors differ")

    def __add__(self, other):
        self._same(other)
        spec = self.spec
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = spec.add(out.get(k, spec.zero), v)
        return TensorElt(self.algs, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        spec = self.spec
        s = spec.coerce(s)
        return TensorElt(self.algs, {k: spec.mul(s, v) for k, v in self.c.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElt):
            return self.scale(other)
        self._same(other)
        spec = self.spec
        add, mul = spec.add, spec.mul
        tabs = [a.table for a in self.algs]
        n = len(tabs)
        out = {}
        for ka, ca in self.c.items():
            for kb, cb in other.c.items():
                partial = [((), mul(ca, cb))]
                for l in range(n):
                    lst = tabs[l][ka[l]][kb[l]]
                    if not lst:
                        partial = []
                        break
                    partial = [(key + (k,), mul(v, cc)) for key, v in partial for k, cc in lst]
                for key, v in partial:
                    out[key] = add(out.get(key, spec.zero), v)
        return TensorElt(self.algs, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self.algs == other.algs and self.c == other.c

    __hash__ = None

    def is_zero(self):
        return not self.c

    def permute(self, perm):
        """New element whose leg i is old leg perm[i]."""
        algs = tuple(self.algs[p] for p in perm)
        return TensorElt(algs, {tuple(k[p] for p in perm): v for k, v in self.c.items()})

    def flip(self):
        return self.permute((1, 0))

    def insert_unit(self, pos, alg=None):
        alg = alg or self.algs[0]
        spec = self.spec
        algs = self.algs[:pos] + (alg,) + self.algs[pos:]
        out = {}
        for k, v in self.c.items():
            for i, u in enumerate(alg.unit):
                if not spec.is_zero(u):
                    nk = k[:pos] + (i,) + k[pos:]
                    out[nk] = spec.add(out.get(nk, spec.zero), spec.mul(v, u))
        return TensorElt(algs, out)

    def apply_leg(self, leg, fn, new_algs):
        """Replace leg ``leg`` via fn(i) -> {tuple: coef}; ``new_algs`` is the full factor list."""
        spec = self.spec
        out = {}
        cache = {}
        for k, v in self.c.items():
            i = k[leg]
            img = cache.get(i)
            if img is None:
                img = cache[i] = fn(i)
            for sub, c in img.items():
                nk = k[:leg] + sub + k[leg + 1:]
                out[nk] = spec.add(out.get(nk, spec.zero), spec.mul(v, c))
        return TensorElt(new_algs, out)

    def map_legs(self, mats):
        """Apply a linear map (Mat or None for identity) to each leg."""
        t = self
        for leg, M in enumerate(mats):
            if M is None:
                continue
            cols = M.columns()
            iz = self.spec.is_zero

            def fn(i, cols=cols):
                return {(r,): x for r, x in enumerate(cols[i]) if not iz(x)}

            algs = t.algs
            t = t.apply_leg(leg, fn, algs)
        return t

    def dense(self):
        """Row-major flattening."""
        dims = [a.dim for a in self.algs]
        N = 1
        for d in dims:
            N *= d
        v = [self.spec.zero] * N
        for k, c in self.c.items():
            v[_flat(k, dims)] = c
        return v

    def __repr__(self):
        return f"TensorElt({len(self.c)} terms over {len(self.algs)} legs)"


def _flat(key, dims):
    idx = 0
    for k, d in zip(key, dims):
        idx = idx * d + k
    return idx


def _unflat(idx, dims):
    out = []
    for d in reversed(dims):
        out.append(idx % d)
        idx //= d
    return tuple(reversed(out))


def tensor_inverse(x: TensorElt, hint: TensorElt | None = None) -> TensorElt:
    """Two-sided inverse; a hint is accepted only after multiplication checks it."""
    one = TensorElt.one(x.algs)
    if hint is not None and x * hint == one and hint * x == one:
        return hint
    spec = x.spec
    dims = [a.dim for a in x.algs]
    N = 1
    for d in dims:
        N *= d
    cols = []
    for idx in range(N):
        e = TensorElt(x.algs, {_unflat(idx, dims): spec.one})
        cols.append((x * e).dense())
    M = Mat.from_columns(spec, cols, N)
    rhs = Mat.from_columns(spec, [one.dense()], N)
    f = solve_affine(M, rhs, want_kernel=False)
    if not f.feasible:
        raise NotInvertible("element is not invertible")
    y = TensorElt(x.algs, {_unflat(i, dims): f.x.data[i][0] for i in range(N)})
    if y * x != one:
        raise NotInvertible("right inverse is not a left inverse")
    return y


# ---------------------------------------------------------------- Hopf data

class HopfData:
    """Hopf algebra: ``comult[i]`` is {(j, k): raw} for Delta(e_i)."""

    def __init__(self, alg: AlgebraSC, comult, counit, antipode: Mat, name=""):
        self.alg = alg
        self.comult = comult
        self.counit = list(counit)
        self.antipode = antipode
        self.name = name
        self._gens = None

    @property
    def spec(self):
        return self.alg.spec

    @property
    def dim(self):
        return self.alg.dim

    @property
    def algs2(self):
        return (self.alg, self.alg)

    def generators(self):
        if self._gens is None:
            self._gens = algebra_generators(self.alg)
        return self._gens

    def delta(self, v) -> TensorElt:
        spec = self.spec
        out = {}
        for i, x in enumerate(v):
            if spec.is_zero(x):
                continue
            for k, c in self.comult[i].items():
                out[k] = spec.add(out.get(k, spec.zero), spec.mul(x, c))
        return TensorElt(self.algs2, out)

    def delta_basis(self, i) -> TensorElt:
        return TensorElt(self.algs2, self.comult[i])

    def eps(self, v):
        spec = self.spec
        acc = spec.zero
        for x, e in zip(v, self.counit):
            acc = spec.add(acc, spec.mul(x, e))
        return acc

    def one2(self) -> TensorElt:
        return TensorElt.one(self.algs2)

    def tensor(self, terms) -> TensorElt:
        """Element of H (x) H from (coef, (i, j)) pairs."""
        return TensorElt.from_terms(self.algs2, terms)

    def pure(self, *vecs) -> TensorElt:
        return TensorElt.pure(tuple(self.alg for _ in vecs), list(vecs))

    # leg maps on tensor powers of H
    def delta_leg(self, x: TensorElt, leg: int) -> TensorElt:
        algs = x.algs[:leg] + (self.alg, self.alg) + x.algs[leg + 1:]
        return x.apply_leg(leg, lambda i: self.comult[i], algs)

    def eps_leg(self, x: TensorElt, leg: int) -> TensorElt:
        algs = x.algs[:leg] + x.algs[leg + 1:]
        iz = self.spec.is_zero
        return x.apply_leg(leg, lambda i: {} if iz(self.counit[i]) else {(): self.counit[i]}, algs)

    def antipode_leg(self, x: TensorElt, leg: int) -> TensorElt:
        mats = [None] * x.legs
        mats[leg] = self.antipode
        return x.map_legs(mats)

    def __repr__(self):
        return f"HopfData({self.name or '?'}, {self.spec}, dim={self.dim})"


def _mult_tensor(alg: AlgebraSC, t: TensorElt):
    """m(t) for t in A (x) A."""
    spec = alg.spec
    out = [spec.zero] * alg.dim
    for (i, j), c in t.c.items():
        for k, cc in alg.table[i][j]:
            out[k] = spec.add(out[k], spec.mul(c, cc))
    return out


def verify_hopf(h: HopfData) -> Report:
    rep = Report("hopf")
    a = h.alg
    alg_rep = verify_algebra(a)
    if not alg_rep:
        return rep.merge(alg_rep, "algebra: ")
    spec, n = h.spec, h.dim
    for i in range(n):
        d = h.delta_basis(i)
        if h.delta_leg(d, 0) != h.delta_leg(d, 1):
            rep.fail(f"coassociativity fails at e{i}")
            return rep
        e = TensorElt((a,), {(i,): spec.one})
        if h.eps_leg(d, 0) != e or h.eps_leg(d, 1) != e:
            rep.fail(f"counit law fails at e{i}")
            return rep
    if h.delta(a.unit) != h.one2():
        rep.fail("Delta(1) != 1 (x) 1")
        return rep
    if h.eps(a.unit) != spec.one:
        rep.fail("eps(1) != 1")
        return rep
    gens = h.generators()
    for i in range(n):
        di = h.delta_basis(i)
        for g in gens:
            prod = a.basis_product(i, g)
            if h.delta(prod) != di * h.delta_basis(g):
                rep.fail(f"Delta not multiplicative at (e{i}, e{g})")
                return rep
            if h.eps(prod) != spec.mul(h.counit[i], h.counit[g]):
                rep.fail(f"eps not multiplicative at (e{i}, e{g})")
                return rep
    for i in range(n):
        d = h.delta_basis(i)
        target = [spec.mul(h.counit[i], u) for u in a.unit]
        if _mult_tensor(a, h.antipode_leg(d, 0)) != target:
            rep.fail(f"m(S (x) id)Delta != eps at e{i}")
            return rep
        if _mult_tensor(a, h.antipode_leg(d, 1)) != target:
            rep.fail(f"m(id (x) S)Delta != eps at e{i}")
            return rep
    return rep


def dual_hopf(h: HopfData) -> HopfData:
    """H* on the dual basis, with the reversed product (f g)(h) = f(h_2) g(h_1)."""
    spec, n = h.spec, h.dim
    triples = []
    for c in range(n):
        for (j, k), coef in h.comult[c].items():
            # coefficient of e^c in e^a e^b is Delta(e_c)[(b, a)]
            triples.append((k, j, c, coef))
    labels = [f"{l}*" for l in h.alg.labels]
    alg = AlgebraSC.from_triples(spec, n, triples, list(h.counit), labels)
    comult = [dict() for _ in range(n)]
    for a_, b_, c, coef in h.alg.triples():
        comult[c][(a_, b_)] = spec.add(comult[c].get((a_, b_), spec.zero), coef)
    S_inv = inverse(h.antipode)
    return HopfData(alg, comult, list(h.alg.unit), S_inv.T, name=f"{h.name}*")


def op_cop(h: HopfData) -> HopfData:
    """H with opposite product and coproduct; antipode unchanged."""
    from .algebra import opposite
    comult = [{(k, j): c for (j, k), c in d.items()} for d in h.comult]
    return HopfData(opposite(h.alg), comult, h.counit, h.antipode, name=f"{h.name}^opcop")


@dataclass
class Coalgebra:
    spec: object
    dim: int
    comult: list
    counit: list


def verify_coalgebra(c: Coalgebra, alg: AlgebraSC) -> Report:
    """Coassociativity and counit laws; ``alg`` only supplies index bookkeeping."""
    rep = Report("coalgebra")
    spec = c.spec
    algs2 = (alg, alg)
    for i in range(c.dim):
        d = TensorElt(algs2, c.comult[i])
        l = d.apply_leg(0, lambda k: c.comult[k], (alg, alg, alg))
        r = d.apply_leg(1, lambda k: c.comult[k], (alg, alg, alg))
        if l != r:
            rep.fail(f"coassociativity fails at e{i}")
            return rep
        e = TensorElt((alg,), {(i,): spec.one})
        iz = spec.is_zero
        epsf = lambda k: {} if iz(c.counit[k]) else {(): c.counit[k]}
        if d.apply_leg(0, epsf, (alg,)) != e or d.apply_leg(1, epsf, (alg,)) != e:
            rep.fail(f"counit law fails at e{i}")
            return rep
    return rep


# ---------------------------------------------------------------- R-matrices

def r_inverse(h: HopfData, r: TensorElt) -> TensorElt:
    """R^{-1}, using (S (x) id)R as a hint that is checked, else a linear solve."""
    hint = h.antipode_leg(r, 0)
    return tensor_inverse(r, hint)


def reverse_r(h: HopfData, r: TensorElt) -> TensorElt:
    """R^{-1}_{21}, the R-matrix of the reversed braiding."""
    return r_inverse(h, r).flip()


def r_matrix_check(h: HopfData, r: TensorElt) -> Report:
    rep = Report("R-matrix")
    try:
        rinv = r_inverse(h, r)
    except NotInvertible:
        rep.fail("R is not invertible")
        return rep
    rep.info["inverse"] = rinv
    R13 = r.insert_unit(1, h.alg)
    R23 = r.insert_unit(0, h.alg)
    R12 = r.insert_unit(2, h.alg)
    if h.delta_leg(r, 0) != R13 * R23:
        rep.fail("(Delta (x) id)R != R13 R23")
    if h.delta_leg(r, 1) != R13 * R12:
        rep.fail("(id (x) Delta)R != R13 R12")
    idx = range(h.dim) if h.dim <= 16 else h.generators()
    for i in idx:
        d = h.delta_basis(i)
        if r * d != d.flip() * r:
            rep.fail(f"R Delta(e{i}) != Delta^op(e{i}) R")
            break
    rep.info["symmetric"] = r.flip() * r == h.one2()
    return rep


def cocycle_check(h: HopfData, j: TensorElt) -> Report:
    """Normalization plus (id (x) Delta)J . J_23 = (Delta (x) id)J . J_12."""
    rep = Report("2-cocycle")
    try:
        tensor_inverse(j)
    except NotInvertible as e:
        raise NotInvertible("cocycle is not invertible") from e
    one1 = TensorElt((h.alg,), {(i,): u for i, u in enumerate(h.alg.unit)})
    if h.eps_leg(j, 0) != one1 or h.eps_leg(j, 1) != one1:
        rep.fail("normalization (eps (x) id)J = 1 = (id (x) eps)J fails")
        return rep
    J23 = j.insert_unit(0, h.alg)
    J12 = j.insert_unit(2, h.alg)
    if h.delta_leg(j, 1) * J23 != h.delta_leg(j, 0) * J12:
        rep.fail("cocycle identity fails")
    return rep


def phi_of(h: HopfData, r: TensorElt, hdual: HopfData | None = None) -> AlgMap:
    """phi_R : H* -> H, f -> R^(1) f(R^(2)); its matrix is R's coefficient matrix."""
    hdual = hdual or dual_hopf(h)
    M = Mat.zeros(h.spec, h.dim, h.dim)
    for (a, c), v in r.c.items():
        M.data[a][c] = v
    return AlgMap(hdual.alg, h.alg, M)


def twist_r(r: TensorElt, j: TensorElt) -> TensorElt:
    """R^J = J_21^{-1} R J."""
    return tensor_inverse(j).flip() * r * j


def twisted_coalgebra(h: HopfData, l: TensorElt, j: TensorElt) -> Coalgebra:
    """Coproduct h -> L^{-1} Delta(h) J."""
    for name, t in (("L", l), ("J", j)):
        if not cocycle_check(h, t):
            raise CocycleInvalid(f"{name} is not a 2-cocycle")
    linv = tensor_inverse(l)
    comult = [dict((linv * h.delta_basis(i) * j).c) for i in range(h.dim)]
    c = Coalgebra(h.spec, h.dim, comult, list(h.counit))
    return c


def twisted_dual_algebra(h: HopfData, l: TensorElt, j: TensorElt) -> AlgebraSC:
    """Dual of the twisted coalgebra with the reversed product convention."""
    c = twisted_coalgebra(h, l, j)
    triples = [(k, jj, i, coef) for i in range(h.dim) for (jj, k), coef in c.comult[i].items()]
    labels = [f"{x}*" for x in h.alg.labels]
    return AlgebraSC.from_triples(h.spec, h.dim, triples, list(h.counit), labels)


def twisted_hopf(h: HopfData, j: TensorElt) -> HopfData:
    """H^J: coproduct J^{-1} Delta J, antipode U S(-) U^{-1} with U = m(id (x) S)(J^{-1})."""
    if not cocycle_check(h, j):
        raise CocycleInvalid("J is not a 2-cocycle")
    jinv = tensor_inverse(j)
    comult = [dict((jinv * h.delta_basis(i) * j).c) for i in range(h.dim)]
    A = h.alg
    U = _mult_tensor(A, h.antipode_leg(jinv, 1))
    Uinv = _mult_tensor(A, h.antipode_leg(j, 1))
    cols = [A.mul(A.mul(U, h.antipode.apply(A.basis_vector(i))), Uinv) for i in range(h.dim)]
    S = Mat.from_columns(h.spec, cols, h.dim)
    return HopfData(A, comult, h.counit, S, name=f"{h.name}^J")


# ---------------------------------------------------------------- modules

def regular_rep(h: HopfData):
    return [h.alg.lmat(h.alg.basis_vector(i)) for i in range(h.dim)]


def trivial_rep(h: HopfData):
    return [Mat(h.spec, 1, 1, [[e]]) for e in h.counit]


def tensor_rep(h: HopfData, rv, rw, coprod=None):
    """Action on V (x) W through Delta (or a supplied coproduct table)."""
    coprod = coprod or h.comult
    spec = h.spec
    out = []
    cache = {}
    for i in range(h.dim):
        acc = None
        for (a, b), c in coprod[i].items():
            kk = cache.get((a, b))
            if kk is None:
                kk = cache[(a, b)] = kron(rv[a], rw[b])
            term = kk.scale(c)
            acc = term if acc is None else acc + term
        if acc is None:
            acc = Mat.zeros(spec, rv[0].rows * rw[0].rows, rv[0].cols * rw[0].cols)
        out.append(acc)
    return out


def swap_matrix(spec, dv, dw) -> Mat:
    """v (x) w -> w (x) v."""
    M = Mat.zeros(spec, dv * dw, dv * dw)
    for i in range(dv):
        for j in range(dw):
            M.data[j * dv + i][i * dw + j] = spec.one
    return M


def act_tensor(r: TensorElt, rv, rw) -> Mat:
    """Matrix of R acting on V (x) W: sum R[a,b] rho_V(a) (x) rho_W(b)."""
    spec = r.spec
    acc = Mat.zeros(spec, rv[0].rows * rw[0].rows, rv[0].cols * rw[0].cols)
    for (a, b), c in r.c.items():
        acc = acc + kron(rv[a], rw[b]).scale(c)
    return acc


def braid_matrix(r: TensorElt, rv, rw) -> Mat:
    """psi_{V,W}: V (x) W -> W (x) V, v (x) w -> R^(2) w (x) R^(1) v."""
    dv, dw = rv[0].rows, rw[0].rows
    return swap_matrix(r.spec, dv, dw) @ act_tensor(r, rv, rw)


def check_rep(alg: AlgebraSC, mats, side="left") -> Report:
    """mats[i] should represent e_i (anti-multiplicatively for right actions)."""
    rep = Report(f"{side} representation")
    spec = alg.spec
    n = mats[0].rows if mats else 0
    unit = Mat.zeros(spec, n, n)
    for i, u in enumerate(alg.unit):
        if not spec.is_zero(u):
            unit = unit + mats[i].scale(u)
    if unit != Mat.identity(spec, n):
        rep.fail("unit does not act as identity")
        return rep
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = mats[i] @ mats[j] if side == "left" else mats[j] @ mats[i]
            acc = Mat.zeros(spec, n, n)
            for k, c in alg.table[i][j]:
                acc = acc + mats[k].scale(c)
            if prod != acc:
                rep.fail(f"representation property fails at ({i},{j})")
                return rep
    return rep


class ModuleAlgebra:
    """An algebra in H-mod: ``action[i]`` is the matrix of e_i in H on A."""

    def __init__(self, hopf: HopfData, alg: AlgebraSC, action, name=""):
        self.hopf = hopf
        self.alg = alg
        self.action = list(action)
        self.name = name

    @property
    def dim(self):
        return self.alg.dim

    @property
    def spec(self):
        return self.alg.spec

    def mult_matrix(self) -> Mat:
        """m: A (x) A -> A."""
        A = self.alg
        M = Mat.zeros(A.spec, A.dim, A.dim * A.dim)
        for i, j, k, c in A.triples():
            M.data[k][i * A.dim + j] = c
        return M

    def __repr__(self):
        return f"ModuleAlgebra({self.name or '?'}, dim={self.dim})"


def verify_module_algebra(ma: ModuleAlgebra) -> Report:
    rep = Report("module algebra")
    h, A = ma.hopf, ma.alg
    spec = A.spec
    r = verify_algebra(A)
    if not r:
        return rep.merge(r, "algebra: ")
    r = check_rep(h.alg, ma.action, "left")
    if not r:
        return rep.merge(r, "H-action: ")
    # unit invariance
    for i in range(h.dim):
        want = [spec.mul(h.counit[i], u) for u in A.unit]
        if ma.action[i].apply(A.unit) != want:
            rep.fail(f"unit not invariant under e{i}")
            return rep
    m = ma.mult_matrix()
    rho2 = tensor_rep(h, ma.action, ma.action)
    for i in range(h.dim):
        if ma.action[i] @ m != m @ rho2[i]:
            rep.fail(f"multiplication not equivariant under e{i}")
            return rep
    return rep


def trivial_algebra(h: HopfData) -> ModuleAlgebra:
    A = AlgebraSC.from_triples(h.spec, 1, [(0, 0, 0, 1)], [1], ["1"])
    return ModuleAlgebra(h, A, trivial_rep(h), name="1")


def _algebra_from_matrix(spec, dim, M: Mat, unit, labels=None) -> AlgebraSC:
    """Algebra whose product matrix (dim x dim^2) is M."""
    triples = [(c // dim, c % dim, k, v) for k, c, v in M.nonzeros()]
    return AlgebraSC.from_triples(spec, dim, triples, unit, labels)


def braided_opposite(a: ModuleAlgebra, r: TensorElt) -> ModuleAlgebra:
    """A^psi with product m o psi_{A,A}."""
    psi = braid_matrix(r, a.action, a.action)
    M = a.mult_matrix() @ psi
    alg = _algebra_from_matrix(a.spec, a.dim, M, a.alg.unit, a.alg.labels)
    return ModuleAlgebra(a.hopf, alg, a.action, name=f"{a.name}^psi")


def braided_tensor(a: ModuleAlgebra, b: ModuleAlgebra, r: TensorElt) -> ModuleAlgebra:
    """A (x)^psi B with product (m_A (x) m_B)(id (x) psi_{B,A} (x) id)."""
    if a.hopf is not b.hopf:
        raise ValueError("module algebras over different Hopf algebras")
    h, spec = a.hopf, a.spec
    dA, dB = a.dim, b.dim
    psiBA = braid_matrix(r, b.action, a.action)  # B (x) A -> A (x) B
    mA, mB = a.mult_matrix(), b.mult_matrix()
    I_A, I_B = Mat.identity(spec, dA), Mat.identity(spec, dB)
    # (A B)(A B) -> A (A B) B -> (A A)(B B) -> A B
    mid = kron(kron(I_A, psiBA), I_B)
    M = kron(mA, mB) @ mid
    unit = kron(Mat.from_columns(spec, [a.alg.unit]), Mat.from_columns(spec, [b.alg.unit])).column(0)
    labels = [f"{x}|{y}" for x in a.alg.labels for y in b.alg.labels]
    alg = _algebra_from_matrix(spec, dA * dB, M, unit, labels)
    return ModuleAlgebra(h, alg, tensor_rep(h, a.action, b.action), name=f"{a.name}(x){b.name}")


def braid_alg_map(a: ModuleAlgebra, b: ModuleAlgebra, r: TensorElt, rinv21: TensorElt) -> AlgMap:
    """psi^{-1}_{A,B}: A (x)^psi B -> B (x)^{psi^{-1}} A (inverse of psi_{B,A})."""
    src = braided_tensor(a, b, r)
    tgt = braided_tensor(b, a, rinv21)
    M = braid_matrix(rinv21, a.action, b.action)
    return AlgMap(src.alg, tgt.alg, M)


def phi_report(h: HopfData, r: TensorElt, hdual=None) -> Report:
    f = phi_of(h, r, hdual)
    rep = verify_alg_map(f)
    rep.info["rank"] = f.matrix.rank()
    return rep
