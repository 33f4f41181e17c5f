"""Exact scalars over Q, Q(zeta_n) and F_p.

Every field is described by a :class:`FieldSpec`.  Inner loops work with raw
values (``mpq`` for Q, tuples of ``mpq`` for cyclotomic fields, ``int`` for
prime fields) through the spec's arithmetic methods; :class:`Scalar` is the
immutable user-facing wrapper.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq


class FieldError(Exception):
    pass


class SpecMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NoSuchRoot(FieldError):
    pass


class ScalarParseError(FieldError, ValueError):
    pass


# ---------------------------------------------------------------- polynomials

def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_divexact(num, den):
    # integer polys low -> high, den monic
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q[k - dn] = c
            for i, b in enumerate(den):
                num[k - dn + i] -= c * b
    assert not any(num), "division was not exact"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (low to high) of Phi_n, by dividing x^n - 1 by Phi_d, d | n, d < n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    p = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        p = _poly_divexact(p, cyclotomic_poly(d))
    return tuple(p)


@lru_cache(maxsize=None)
def _reduction_table(n):
    """x^k mod Phi_n for k < 2*deg - 1, as dense integer rows."""
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    rows = []
    for k in range(max(2 * d - 1, 1)):
        if k < d:
            r = [0] * d
            r[k] = 1
        else:
            prev = rows[k - 1]
            # x * prev, then reduce x^d = -sum phi_i x^i
            top = prev[d - 1]
            r = [0] + prev[:-1]
            if top:
                r = [r[i] - top * phi[i] for i in range(d)]
        rows.append(r)
    return rows


# ---------------------------------------------------------------- field specs

_Q_ZERO = mpq(0)
_Q_ONE = mpq(1)


@dataclass(frozen=True)
class FieldSpec:
    """One of Q (kind 'Q'), Q(zeta_n) (kind 'cyclotomic'), F_p (kind 'prime')."""

    kind: str
    n: int = 1

    def __post_init__(self):
        if self.kind == "cyclotomic" and self.n < 1:
            raise ValueError("cyclotomic order must be >= 1")
        if self.kind == "prime" and not _is_prime(self.n):
            raise ValueError(f"{self.n} is not prime")
        if self.kind not in ("Q", "cyclotomic", "prime"):
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- descriptive
    @property
    def characteristic(self) -> int:
        return self.n if self.kind == "prime" else 0

    @property
    def degree(self) -> int:
        if self.kind == "cyclotomic":
            return len(cyclotomic_poly(self.n)) - 1
        return 1

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.n})"
        return f"F_{self.n}"

    def __repr__(self):
        return f"FieldSpec({str(self)})"

    # -- raw constants
    @property
    def zero(self):
        if self.kind == "Q":
            return _Q_ZERO
        if self.kind == "prime":
            return 0
        return (_Q_ZERO,) * self.degree

    @property
    def one(self):
        if self.kind == "Q":
            return _Q_ONE
        if self.kind == "prime":
            return 1
        return (_Q_ONE,) + (_Q_ZERO,) * (self.degree - 1)

    # -- raw arithmetic
    def coerce(self, x):
        """Raw value from int, Fraction, mpq, str or Scalar."""
        if isinstance(x, Scalar):
            if x.spec != self:
                raise SpecMismatch(f"{x.spec} vs {self}")
            return x.v
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, tuple) and self.kind == "cyclotomic":
            if len(x) != self.degree:
                raise ValueError("wrong coefficient length")
            return tuple(mpq(c) for c in x)
        if isinstance(x, (int, Fraction)) or type(x).__name__ == "mpq" or type(x).__name__ == "mpz":
            q = mpq(x)
            if self.kind == "Q":
                return q
            if self.kind == "prime":
                p = self.n
                den = int(q.denominator) % p
                if den == 0:
                    raise DivisionByZero(f"denominator divisible by {p}")
                return int(q.numerator) * pow(den, -1, p) % p
            return (q,) + (_Q_ZERO,) * (self.degree - 1)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def add(self, a, b):
        k = self.kind
        if k == "Q":
            return a + b
        if k == "prime":
            return (a + b) % self.n
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        k = self.kind
        if k == "Q":
            return a - b
        if k == "prime":
            return (a - b) % self.n
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        k = self.kind
        if k == "Q":
            return -a
        if k == "prime":
            return (-a) % self.n
        return tuple(-x for x in a)

    def mul(self, a, b):
        k = self.kind
        if k == "Q":
            return a * b
        if k == "prime":
            return a * b % self.n
        d = len(a)
        if d == 1:
            return (a[0] * b[0],)
        if d == 2:
            # Phi_n = x^2 + c1 x + c0 covers n = 3, 4, 6
            phi = cyclotomic_poly(self.n)
            a0, a1 = a
            b0, b1 = b
            t = a1 * b1
            return (a0 * b0 - t * phi[0], a0 * b1 + a1 * b0 - t * phi[1])
        prod = [_Q_ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        red = _reduction_table(self.n)
        out = prod[:d]
        for kk in range(d, 2 * d - 1):
            c = prod[kk]
            if c:
                row = red[kk]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def is_zero(self, a) -> bool:
        if self.kind == "cyclotomic":
            return not any(a)
        return not a

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero("inverse of zero")
        k = self.kind
        if k == "Q":
            return 1 / a
        if k == "prime":
            return pow(a, -1, self.n)
        d = len(a)
        if d == 1:
            return (1 / a[0],)
        # solve (mult-by-a) x = 1 over Q
        red = _reduction_table(self.n)
        cols = []
        for j in range(d):
            col = [_Q_ZERO] * d
            for i, x in enumerate(a):
                if x:
                    row = red[i + j]
                    for t in range(d):
                        if row[t]:
                            col[t] += x * row[t]
            cols.append(col)
        m = [[cols[j][i] for j in range(d)] + [_Q_ONE if i == 0 else _Q_ZERO] for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if m[r][c])
            m[c], m[piv] = m[piv], m[c]
            pv = m[c][c]
            m[c] = [v / pv for v in m[c]]
            for r in range(d):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [v - f * w for v, w in zip(m[r], m[c])]
        return tuple(m[i][d] for i in range(d))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def eq(self, a, b) -> bool:
        return a == b

    # -- text syntax
    def format(self, a) -> str:
        if self.kind == "Q":
            return _fmt_q(a)
        if self.kind == "prime":
            return str(a)
        terms = []
        for k, c in enumerate(a):
            if not c:
                continue
            if k == 0:
                body = _fmt_q(abs(c))
            else:
                zk = "z" if k == 1 else f"z^{k}"
                body = zk if abs(c) == 1 else f"{_fmt_q(abs(c))}*{zk}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def parse(self, s: str):
        s0 = s
        s = s.replace(" ", "")
        if not s:
            raise ScalarParseError("empty scalar")
        if self.kind == "prime":
            m = _RAT.fullmatch(s.lstrip("+-"))
            if not m:
                raise ScalarParseError(f"bad residue {s0!r}")
            v = self.coerce(Fraction(s))
            return v
        if self.kind == "Q":
            if not _RAT.fullmatch(s.lstrip("+-")):
                raise ScalarParseError(f"bad rational {s0!r}")
            return mpq(Fraction(s))
        acc = self.zero
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos:
                raise ScalarParseError(f"bad cyclotomic scalar {s0!r}")
            pos = m.end()
            sign, body = m.group(1), m.group(2)
            tm = _ZTERM.fullmatch(body)
            if tm:
                coef = Fraction(tm.group(1)) if tm.group(1) else Fraction(1)
                k = int(tm.group(2)) if tm.group(2) else 1
            elif _RAT.fullmatch(body):
                coef, k = Fraction(body), 0
            else:
                raise ScalarParseError(f"bad term {body!r} in {s0!r}")
            if sign == "-":
                coef = -coef
            term = self.mul(self.coerce(coef), self.zeta_power(k))
            acc = self.add(acc, term)
        if pos != len(s):
            raise ScalarParseError(f"bad cyclotomic scalar {s0!r}")
        return acc

    def zeta_power(self, k: int):
        """Raw zeta_n^k (cyclotomic fields only)."""
        if self.kind != "cyclotomic":
            raise FieldError("zeta only exists in cyclotomic fields")
        k %= self.n
        red = _reduction_table(self.n)
        d = self.degree
        if k < len(red):
            return tuple(mpq(c) for c in red[k])
        z = (_Q_ZERO, _Q_ONE) + (_Q_ZERO,) * (d - 2) if d > 1 else (mpq(-1) if self.n == 2 else _Q_ONE,)
        return self.pow(z, k)

    def scalar(self, x) -> "Scalar":
        return Scalar(self, self.coerce(x))


_RAT = re.compile(r"\d+(/\d+)?")
_TERM = re.compile(r"([+-]?)([^+-]+)")
_ZTERM = re.compile(r"(?:(\d+(?:/\d+)?)\*?)?z(?:\^(\d+))?")


def _fmt_q(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def Rational() -> FieldSpec:
    return FieldSpec("Q", 1)


def Cyclotomic(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", n)


def Prime(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


QQ = Rational()


def parse_field(s: str) -> FieldSpec:
    """Inverse of ``str(spec)``: 'Q', 'Q(zeta_n)', 'F_p'."""
    s = s.strip()
    if s == "Q":
        return QQ
    m = re.fullmatch(r"Q\(zeta_(\d+)\)", s)
    if m:
        return Cyclotomic(int(m.group(1)))
    m = re.fullmatch(r"F_(\d+)", s)
    if m:
        return Prime(int(m.group(1)))
    raise ScalarParseError(f"unknown field {s!r}")


# ---------------------------------------------------------------- scalars

class Scalar:
    """Immutable field element; equality is equality of canonical forms."""

    __slots__ = ("spec", "v")

    def __init__(self, spec: FieldSpec, v):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "v", v)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _other(self, b):
        if isinstance(b, Scalar):
            if b.spec != self.spec:
                raise SpecMismatch(f"{self.spec} vs {b.spec}")
            return b.v
        return self.spec.coerce(b)

    def __add__(self, b):
        return Scalar(self.spec, self.spec.add(self.v, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return Scalar(self.spec, self.spec.sub(self.v, self._other(b)))

    def __rsub__(self, b):
        return Scalar(self.spec, self.spec.sub(self._other(b), self.v))

    def __mul__(self, b):
        return Scalar(self.spec, self.spec.mul(self.v, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return Scalar(self.spec, self.spec.div(self.v, self._other(b)))

    def __rtruediv__(self, b):
        return Scalar(self.spec, self.spec.div(self._other(b), self.v))

    def __neg__(self):
        return Scalar(self.spec, self.spec.neg(self.v))

    def __pow__(self, e: int):
        return Scalar(self.spec, self.spec.pow(self.v, e))

    def __eq__(self, b):
        if isinstance(b, Scalar):
            return self.spec == b.spec and self.v == b.v
        try:
            return self.v == self.spec.coerce(b)
        except (TypeError, FieldError):
            return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.v))

    def __bool__(self):
        return not self.spec.is_zero(self.v)

    def inverse(self) -> "Scalar":
        return Scalar(self.spec, self.spec.inv(self.v))

    def __str__(self):
        return self.spec.format(self.v)

    def __repr__(self):
        return f"Scalar({self.spec}, {self})"

    @classmethod
    def parse(cls, spec: FieldSpec, s: str) -> "Scalar":
        return cls(spec, spec.parse(s))


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _fp_generator(p):
    fac = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    return 1


def primitive_root(spec: FieldSpec, order: int) -> Scalar:
    """A primitive ``order``-th root of unity in ``spec``."""
    if order < 1:
        raise NoSuchRoot("order must be positive")
    if order == 1:
        return spec.scalar(1)
    if order == 2 and spec.characteristic != 2:
        return spec.scalar(-1)
    if spec.kind == "cyclotomic" and spec.n % order == 0:
        q = Scalar(spec, spec.zeta_power(spec.n // order))
    elif spec.kind == "prime" and (spec.n - 1) % order == 0:
        g = _fp_generator(spec.n)
        q = Scalar(spec, pow(g, (spec.n - 1) // order, spec.n))
    else:
        raise NoSuchRoot(f"no primitive {order}-th root of unity in {spec}")
    one = spec.scalar(1)
    assert q ** order == one and all(q ** k != one for k in range(1, order))
    return q
