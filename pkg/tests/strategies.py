"""Hypothesis strategies for exact scalars and small matrices."""
from fractions import Fraction

from hypothesis import strategies as st

from hopfcert.exactfield import Cyclotomic, Prime, QQ
from hopfcert.linalg import Mat

SPECS = [QQ, Cyclotomic(3), Cyclotomic(5), Cyclotomic(12), Prime(2), Prime(7)]

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def raw(spec):
    """Raw field values of ``spec``."""
    if spec.kind == "Q":
        return small_fracs.map(spec.coerce)
    if spec.kind == "prime":
        return st.integers(0, spec.n - 1)
    return st.lists(small_fracs, min_size=spec.degree, max_size=spec.degree).map(
        lambda cs: spec.coerce(tuple(cs)))


def scalars(spec):
    return raw(spec).map(spec.scalar)


@st.composite
def matrices(draw, spec, rows=None, cols=None, max_dim=5):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    # sparse-ish entries keep ranks interesting
    entry = st.one_of(st.just(spec.zero), raw(spec))
    data = [[draw(entry) for _ in range(c)] for _ in range(r)]
    return Mat(spec, r, c, data)


def frac_mat(m: Mat):
    """Rational matrix as nested Fractions (for sympy oracles)."""
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in m.data]
