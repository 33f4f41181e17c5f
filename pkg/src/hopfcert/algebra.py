"""Finite-dimensional unital algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactfield import FieldSpec
from .linalg import Echelon, Mat, _sparse, kernel, span_basis


class CharPUnsupported(Exception):
    pass


@dataclass
class Report:
    """Outcome of a verifier: ``ok`` plus the first few failures."""

    name: str
    ok: bool = True
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def fail(self, msg: str):
        self.ok = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def __bool__(self):
        return self.ok

    def merge(self, other: "Report", prefix=""):
        for f in other.failures:
            self.fail(prefix + f)
        self.ok = self.ok and other.ok
        return self


class AlgebraSC:
    """Algebra with e_i e_j = sum_k c[i][j][k] e_k, stored sparsely.

    ``table[i][j]`` is a tuple of ``(k, c)`` pairs with raw nonzero ``c``.
    """

    def __init__(self, spec: FieldSpec, dim: int, table, unit, labels=None):
        self.spec = spec
        self.dim = dim
        self.table = table
        self.unit = list(unit)
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]

    # -- constructors
    @classmethod
    def from_triples(cls, spec, dim, triples, unit, labels=None):
        acc = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in triples:
            c = spec.coerce(c)
            d = acc[i][j]
            d[k] = spec.add(d.get(k, spec.zero), c)
        return cls(spec, dim, _freeze(spec, acc), [spec.coerce(u) for u in unit], labels)

    @classmethod
    def from_products(cls, spec, dim, prod, unit, labels=None):
        """``prod(i, j)`` returns the raw dense coordinate vector of e_i e_j."""
        acc = [[_sparse(spec, prod(i, j)) for j in range(dim)] for i in range(dim)]
        return cls(spec, dim, _freeze(spec, acc), unit, labels)

    # -- arithmetic on raw dense vectors
    def basis_product(self, i, j):
        v = [self.spec.zero] * self.dim
        for k, c in self.table[i][j]:
            v[k] = c
        return v

    def mul(self, u, v):
        spec = self.spec
        add, mul, iz = spec.add, spec.mul, spec.is_zero
        out = [spec.zero] * self.dim
        nv = [(j, y) for j, y in enumerate(v) if not iz(y)]
        for i, x in enumerate(u):
            if iz(x):
                continue
            row = self.table[i]
            for j, y in nv:
                xy = mul(x, y)
                for k, c in row[j]:
                    out[k] = add(out[k], mul(xy, c))
        return out

    def basis_vector(self, i):
        v = [self.spec.zero] * self.dim
        v[i] = self.spec.one
        return v

    def power(self, v, e: int):
        r = list(self.unit)
        for _ in range(e):
            r = self.mul(r, v)
        return r

    def triples(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.table[i][j]:
                    yield i, j, k, c

    def lmat(self, v) -> Mat:
        """Matrix of x -> v x."""
        cols = [self.mul(v, self.basis_vector(j)) for j in range(self.dim)]
        return Mat.from_columns(self.spec, cols, self.dim)

    def rmat(self, v) -> Mat:
        """Matrix of x -> x v."""
        cols = [self.mul(self.basis_vector(j), v) for j in range(self.dim)]
        return Mat.from_columns(self.spec, cols, self.dim)

    def structure_equal(self, other: "AlgebraSC") -> bool:
        return (self.spec == other.spec and self.dim == other.dim
                and self.unit == other.unit and self.table == other.table)

    def __repr__(self):
        return f"AlgebraSC({self.spec}, dim={self.dim})"


def _freeze(spec, acc):
    iz = spec.is_zero
    return [[tuple(sorted((k, c) for k, c in d.items() if not iz(c))) for d in row] for row in acc]


def verify_algebra(a: AlgebraSC) -> Report:
    rep = Report("algebra")
    spec, n = a.spec, a.dim
    for i in range(n):
        e = a.basis_vector(i)
        if a.mul(a.unit, e) != e:
            rep.fail(f"unit law fails on the left at e{i}")
            return rep
        if a.mul(e, a.unit) != e:
            rep.fail(f"unit law fails on the right at e{i}")
            return rep
    for i in range(n):
        ei = a.basis_vector(i)
        for j in range(n):
            eij = a.basis_product(i, j)
            for k in range(n):
                ek = a.basis_vector(k)
                left = a.mul(eij, ek)
                right = a.mul(ei, a.basis_product(j, k))
                if left != right:
                    rep.fail(f"associativity fails at ({i},{j},{k})")
                    return rep
    return rep


def regular_reps(a: AlgebraSC):
    """Left and right regular action matrices: L_i v = e_i v, R_i v = v e_i."""
    L = [a.lmat(a.basis_vector(i)) for i in range(a.dim)]
    R = [a.rmat(a.basis_vector(i)) for i in range(a.dim)]
    return L, R


def opposite(a: AlgebraSC) -> AlgebraSC:
    tab = [[a.table[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return AlgebraSC(a.spec, a.dim, tab, a.unit, a.labels)


def algebra_generators(a: AlgebraSC):
    """Basis indices generating ``a`` as a unital algebra, greedy in scan order."""
    spec = a.spec
    gens = []
    E = Echelon(spec)
    E.add(_sparse(spec, a.unit))
    for i in range(a.dim):
        if len(E) == a.dim:
            break
        if E.contains({i: spec.one}):
            continue
        gens.append(i)
        E = Echelon(spec)
        for v in subalgebra_span(a, [a.basis_vector(g) for g in gens]):
            E.add(_sparse(spec, v))
    return gens


@dataclass
class AlgMap:
    source: AlgebraSC
    target: AlgebraSC
    matrix: Mat  # target.dim x source.dim

    def __call__(self, v):
        return self.matrix.apply(v)


def verify_alg_map(f: AlgMap) -> Report:
    rep = Report("algebra map")
    A, B, M = f.source, f.target, f.matrix
    if M.shape != (B.dim, A.dim):
        rep.fail("matrix shape does not match source/target")
        return rep
    if f(A.unit) != B.unit:
        rep.fail("unit not preserved")
        return rep
    imgs = [f(A.basis_vector(i)) for i in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if f(A.basis_product(i, j)) != B.mul(imgs[i], imgs[j]):
                rep.fail(f"multiplicativity fails at ({i},{j})")
                return rep
    return rep


def trace_form(a: AlgebraSC) -> Mat:
    spec = a.spec
    tr = [spec.zero] * a.dim
    for k in range(a.dim):
        for m in range(a.dim):
            for kk, c in a.table[k][m]:
                if kk == m:
                    tr[k] = spec.add(tr[k], c)
    G = Mat.zeros(spec, a.dim, a.dim)
    for i, j, k, c in a.triples():
        G.data[i][j] = spec.add(G.data[i][j], spec.mul(c, tr[k]))
    return G


def trace_radical(a: AlgebraSC):
    """Basis of {x : Tr(L_x L_y) = 0 for all y}; the Jacobson radical in characteristic 0."""
    if a.spec.characteristic != 0:
        raise CharPUnsupported("trace-form radical needs characteristic zero")
    G = trace_form(a)
    return kernel(G.T)


def is_semisimple(a: AlgebraSC) -> bool:
    return not trace_radical(a)


def subalgebra_span(a: AlgebraSC, gens):
    """Echelon basis of the unital subalgebra generated by ``gens``."""
    spec = a.spec
    E = Echelon(spec)
    queue = [list(a.unit)]
    gens = [list(g) for g in gens]
    queue += gens
    vecs = []
    while queue:
        v = queue.pop(0)
        if E.add(_sparse(spec, v)):
            vecs.append(v)
            for g in gens:
                queue.append(a.mul(v, g))
    return span_basis(spec, vecs)
