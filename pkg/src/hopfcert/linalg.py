"""Exact dense matrices and sparse incremental row reduction.

Matrices keep raw field values (see :mod:`exactfield`).  Elimination runs on
sparse ``{col: value}`` rows kept in reduced echelon form, so each new row is
reduced in one pass over the pivots it touches.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactfield import FieldSpec, Scalar, SpecMismatch


class Mat:
    """Immutable dense matrix over ``spec``; ``data`` is a list of raw rows."""

    __slots__ = ("spec", "rows", "cols", "data")

    def __init__(self, spec: FieldSpec, rows: int, cols: int, data):
        self.spec = spec
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors
    @classmethod
    def zeros(cls, spec, rows, cols):
        z = spec.zero
        return cls(spec, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, spec, n):
        m = cls.zeros(spec, n, n)
        for i in range(n):
            m.data[i][i] = spec.one
        return m

    @classmethod
    def from_rows(cls, spec, rows):
        rows = [[spec.coerce(x) for x in r] for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(spec, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, spec, cols, nrows=None):
        """Matrix whose columns are the given raw vectors."""
        if not cols:
            return cls.zeros(spec, nrows or 0, 0)
        n = len(cols[0])
        return cls(spec, n, len(cols), [[c[i] for c in cols] for i in range(n)])

    @classmethod
    def from_sparse(cls, spec, rows, cols, entries):
        m = cls.zeros(spec, rows, cols)
        for i, j, v in entries:
            m.data[i][j] = spec.add(m.data[i][j], spec.coerce(v))
        return m

    # -- access
    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return Scalar(self.spec, self.data[i][j])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def column(self, j):
        return [r[j] for r in self.data]

    def columns(self):
        return [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)]

    def nonzeros(self):
        iz = self.spec.is_zero
        for i, r in enumerate(self.data):
            for j, v in enumerate(r):
                if not iz(v):
                    yield i, j, v

    def __repr__(self):
        return f"Mat({self.spec}, {self.rows}x{self.cols})"

    def to_strings(self):
        f = self.spec.format
        return [[f(v) for v in r] for r in self.data]

    # -- arithmetic
    def _check(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.spec == other.spec and self.shape == other.shape and self.data == other.data

    __hash__ = None

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.spec.add
        return Mat(self.spec, self.rows, self.cols,
                   [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        sub = self.spec.sub
        return Mat(self.spec, self.rows, self.cols,
                   [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self):
        neg = self.spec.neg
        return Mat(self.spec, self.rows, self.cols, [[neg(a) for a in r] for r in self.data])

    def scale(self, c):
        c = self.spec.coerce(c)
        mul = self.spec.mul
        return Mat(self.spec, self.rows, self.cols, [[mul(c, a) for a in r] for r in self.data])

    def __matmul__(self, other):
        if isinstance(other, Mat):
            self._check(other)
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            return Mat(self.spec, self.rows, other.cols, _matmul(self.spec, self.data, other.data, other.cols))
        return NotImplemented

    @property
    def T(self):
        return Mat(self.spec, self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    def apply(self, v):
        """Raw matrix-vector product."""
        return matvec(self.spec, self.data, v)

    def is_zero(self):
        iz = self.spec.is_zero
        return all(iz(v) for r in self.data for v in r)

    def rank(self) -> int:
        return rref(self)[1]


def _matmul(spec, A, B, ncols):
    add, mul, iz = spec.add, spec.mul, spec.is_zero
    z = spec.zero
    out = []
    for row in A:
        acc = [z] * ncols
        for k, a in enumerate(row):
            if iz(a):
                continue
            brow = B[k]
            for j in range(ncols):
                b = brow[j]
                if not iz(b):
                    acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


def matvec(spec, A, v):
    add, mul, iz = spec.add, spec.mul, spec.is_zero
    out = []
    nz = [(k, x) for k, x in enumerate(v) if not iz(x)]
    for row in A:
        acc = spec.zero
        for k, x in nz:
            a = row[k]
            if not iz(a):
                acc = add(acc, mul(a, x))
        out.append(acc)
    return out


def vecmat(spec, y, A):
    """Raw row vector times matrix data."""
    add, mul, iz = spec.add, spec.mul, spec.is_zero
    ncols = len(A[0]) if A else 0
    acc = [spec.zero] * ncols
    for k, a in enumerate(y):
        if iz(a):
            continue
        for j, b in enumerate(A[k]):
            if not iz(b):
                acc[j] = add(acc[j], mul(a, b))
    return acc


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; row (i, k) sits at index i*b.rows + k."""
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    spec = a.spec
    mul, iz = spec.mul, spec.is_zero
    z = spec.zero
    data = []
    for ra in a.data:
        for rb in b.data:
            row = []
            for x in ra:
                if iz(x):
                    row.extend([z] * b.cols)
                else:
                    row.extend(z if iz(y) else mul(x, y) for y in rb)
            data.append(row)
    return Mat(spec, a.rows * b.rows, a.cols * b.cols, data)


def block_diag(mats) -> Mat:
    spec = mats[0].spec
    R = sum(m.rows for m in mats)
    C = sum(m.cols for m in mats)
    out = Mat.zeros(spec, R, C)
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.data):
            out.data[r0 + i][c0:c0 + m.cols] = row
        r0 += m.rows
        c0 += m.cols
    return out


def hstack(mats) -> Mat:
    spec = mats[0].spec
    rows = mats[0].rows
    data = [sum((m.data[i] for m in mats), []) for i in range(rows)]
    return Mat(spec, rows, sum(m.cols for m in mats), data)


def vstack(mats) -> Mat:
    spec = mats[0].spec
    return Mat(spec, sum(m.rows for m in mats), mats[0].cols, [list(r) for m in mats for r in m.data])


# ---------------------------------------------------------------- elimination

class Echelon:
    """Sparse rows in reduced echelon form, grown one row at a time.

    Only columns below ``pivot_limit`` may carry pivots; columns beyond it
    ride along (right-hand sides, row-operation tracking).
    """

    def __init__(self, spec: FieldSpec, pivot_limit=None):
        self.spec = spec
        self.limit = pivot_limit
        self.piv = {}  # pivot col -> row dict, pivot entry 1

    def __len__(self):
        return len(self.piv)

    def reduce(self, row: dict) -> dict:
        spec = self.spec
        sub, mul, iz = spec.sub, spec.mul, spec.is_zero
        piv = self.piv
        row = dict(row)
        for c in [c for c in row if c in piv]:
            f = row.get(c)
            if f is None:
                continue
            for k, v in piv[c].items():
                nv = sub(row.get(k, spec.zero), mul(f, v))
                if iz(nv):
                    row.pop(k, None)
                else:
                    row[k] = nv
        return row

    def lead(self, row: dict):
        lim = self.limit
        cands = [c for c in row if lim is None or c < lim]
        return min(cands) if cands else None

    def insert(self, row: dict, c: int):
        """Insert an already reduced row with pivot column ``c``."""
        spec = self.spec
        sub, mul, iz = spec.sub, spec.mul, spec.is_zero
        inv = spec.inv(row[c])
        row = {k: mul(inv, v) for k, v in row.items()}
        for prow in self.piv.values():
            f = prow.get(c)
            if f is None:
                continue
            for k, v in row.items():
                nv = sub(prow.get(k, spec.zero), mul(f, v))
                if iz(nv):
                    prow.pop(k, None)
                else:
                    prow[k] = nv
        self.piv[c] = row

    def add(self, row: dict) -> bool:
        """Reduce and insert; returns True when the row was independent."""
        row = self.reduce(row)
        c = self.lead(row)
        if c is None:
            return False
        self.insert(row, c)
        return True

    def contains(self, row: dict) -> bool:
        r = self.reduce(row)
        return self.lead(r) is None

    def pivots(self):
        return sorted(self.piv)


def _sparse(spec, v, offset=0):
    iz = spec.is_zero
    return {offset + k: x for k, x in enumerate(v) if not iz(x)}


def rref(m: Mat):
    """(reduced row echelon form, rank, pivot columns)."""
    E = Echelon(m.spec)
    for r in m.data:
        E.add(_sparse(m.spec, r))
    pivs = E.pivots()
    out = Mat.zeros(m.spec, m.rows, m.cols)
    for i, c in enumerate(pivs):
        for k, v in E.piv[c].items():
            out.data[i][k] = v
    return out, len(pivs), pivs


def rank(m: Mat) -> int:
    return rref(m)[1]


def _kernel_from(E: Echelon, ncols, spec):
    pivs = set(E.piv)
    basis = []
    for f in range(ncols):
        if f in pivs:
            continue
        v = [spec.zero] * ncols
        v[f] = spec.one
        for c, row in E.piv.items():
            x = row.get(f)
            if x is not None:
                v[c] = spec.neg(x)
        basis.append(v)
    return basis


def kernel(m: Mat):
    """Basis of {x : m x = 0} as raw column vectors."""
    E = Echelon(m.spec)
    for r in m.data:
        E.add(_sparse(m.spec, r))
    return _kernel_from(E, m.cols, m.spec)


def kernel_of_rows(spec, rows, ncols):
    """Kernel basis for a system given as an iterable of sparse dict rows."""
    E = Echelon(spec)
    for r in rows:
        E.add(r)
        if len(E) == ncols:
            break
    return _kernel_from(E, ncols, spec)


@dataclass
class Feasibility:
    """Result of ``solve_affine``.

    Feasible: ``x`` (cols x nrhs) and a ``kernel`` basis.  Infeasible: ``y``
    with yA = 0 and yb != 0.
    """

    feasible: bool
    x: Mat | None = None
    kernel: list = field(default_factory=list)
    y: list | None = None

    def check(self, A: Mat, b: Mat) -> bool:
        spec = A.spec
        if self.feasible:
            if A @ self.x != b:
                return False
            return all(all(spec.is_zero(t) for t in A.apply(k)) for k in self.kernel)
        yA = vecmat(spec, self.y, A.data)
        yb = vecmat(spec, self.y, b.data)
        return all(spec.is_zero(t) for t in yA) and not all(spec.is_zero(t) for t in yb)


def solve_affine(A: Mat, b: Mat, want_kernel=True) -> Feasibility:
    """Solve A x = b exactly, or return a row vector separating b from im A."""
    if A.spec != b.spec:
        raise SpecMismatch(f"{A.spec} vs {b.spec}")
    if A.rows != b.rows:
        raise ValueError("row count mismatch")
    spec = A.spec
    n, nb, m = A.cols, b.cols, A.rows
    E = Echelon(spec, pivot_limit=n)
    for i in range(m):
        row = _sparse(spec, A.data[i])
        row.update(_sparse(spec, b.data[i], n))
        row[n + nb + i] = spec.one
        row = E.reduce(row)
        c = E.lead(row)
        if c is None:
            if any(n <= k < n + nb for k in row):
                y = [spec.zero] * m
                for k, v in row.items():
                    if k >= n + nb:
                        y[k - n - nb] = v
                # normalise so the first nonzero entry of y b is 1
                yb = vecmat(spec, y, b.data)
                lead = next(t for t in yb if not spec.is_zero(t))
                inv = spec.inv(lead)
                y = [spec.mul(inv, t) for t in y]
                return Feasibility(False, y=y)
            continue
        E.insert(row, c)
    x = Mat.zeros(spec, n, nb)
    for c, row in E.piv.items():
        for k, v in row.items():
            if n <= k < n + nb:
                x.data[c][k - n] = v
    ker = []
    if want_kernel:
        pivs = set(E.piv)
        for f in range(n):
            if f in pivs:
                continue
            v = [spec.zero] * n
            v[f] = spec.one
            for c, row in E.piv.items():
                t = row.get(f)
                if t is not None:
                    v[c] = spec.neg(t)
            ker.append(v)
    return Feasibility(True, x=x, kernel=ker)


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("not square")
    f = solve_affine(m, Mat.identity(m.spec, m.rows), want_kernel=False)
    if not f.feasible:
        raise ZeroDivisionError("singular matrix")
    return f.x


def span_basis(spec, vectors):
    """Echelon basis rows (raw dense) of the span of the given raw vectors."""
    E = Echelon(spec)
    for v in vectors:
        E.add(_sparse(spec, v))
    n = len(vectors[0]) if vectors else 0
    out = []
    for c in E.pivots():
        r = [spec.zero] * n
        for k, v in E.piv[c].items():
            r[k] = v
        out.append(r)
    return out
