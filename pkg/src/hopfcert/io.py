"""Versioned JSON documents for algebras, Hopf algebras and module algebras."""
from __future__ import annotations

import json

from .algebra import AlgebraSC, verify_algebra
from .exactfield import FieldSpec, ScalarParseError, parse_field
from .hopf import HopfData, ModuleAlgebra, TensorElt, verify_hopf, verify_module_algebra
from .linalg import Mat

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Malformed document; the message names the offending record."""


class ValidationError(ValueError):
    """Well-formed document whose data violates an axiom."""


def field_name(spec: FieldSpec) -> str:
    if spec.kind == "Q":
        return "Q"
    if spec.kind == "cyclotomic":
        return f"Q(zeta_{spec.n})"
    return f"F_{spec.n}"


def _scalar(spec, x, where):
    try:
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise ScalarParseError(f"unsupported scalar {x!r}")
        return spec.coerce(x)
    except (ScalarParseError, ValueError, TypeError, ZeroDivisionError) as e:
        raise ParseError(f"{where}: {e}") from None


def _int(x, bound, where):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < bound:
        raise ParseError(f"{where}: index {x!r} out of range [0, {bound})")
    return x


def _need(doc, key, where="document"):
    if key not in doc:
        raise ParseError(f"{where}: missing field '{key}'")
    return doc[key]


# ---------------------------------------------------------------- algebras

def algebra_to_dict(a: AlgebraSC) -> dict:
    f = a.spec.format
    return {"schemaVersion": SCHEMA_VERSION, "field": field_name(a.spec), "dim": a.dim,
            "labels": list(a.labels), "mult": [[i, j, k, f(c)] for i, j, k, c in a.triples()],
            "unit": [f(u) for u in a.unit]}


def _parse_spec(doc):
    try:
        return parse_field(_need(doc, "field"))
    except ParseError:
        raise
    except Exception as e:
        raise ParseError(f"field: {e}") from None


def algebra_from_dict(doc: dict, spec: FieldSpec | None = None, validate=True) -> AlgebraSC:
    if not isinstance(doc, dict):
        raise ParseError("document: expected a JSON object")
    ver = doc.get("schemaVersion", SCHEMA_VERSION)
    if ver != SCHEMA_VERSION:
        raise ParseError(f"schemaVersion: unsupported version {ver!r}")
    spec = spec or _parse_spec(doc)
    dim = _need(doc, "dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim: expected a positive integer, got {dim!r}")
    triples = []
    for n, rec in enumerate(_need(doc, "mult")):
        where = f"mult[{n}]"
        if not isinstance(rec, list) or len(rec) != 4:
            raise ParseError(f"{where}: expected [i, j, k, scalar], got {rec!r}")
        i, j, k = (_int(x, dim, where) for x in rec[:3])
        triples.append((i, j, k, _scalar(spec, rec[3], where)))
    unit = _need(doc, "unit")
    if not isinstance(unit, list) or len(unit) != dim:
        raise ParseError(f"unit: expected {dim} scalars")
    unit = [_scalar(spec, u, f"unit[{n}]") for n, u in enumerate(unit)]
    labels = doc.get("labels")
    a = AlgebraSC.from_triples(spec, dim, triples, unit, labels)
    if validate:
        rep = verify_algebra(a)
        if not rep:
            raise ValidationError("algebra: " + "; ".join(rep.failures))
    return a


# ---------------------------------------------------------------- Hopf algebras

def tensor_to_list(t: TensorElt):
    f = t.spec.format
    return [[i, j, f(c)] for (i, j), c in sorted(t.c.items())]


def tensor_from_list(h: HopfData, recs, where) -> TensorElt:
    out = {}
    spec = h.spec
    if not isinstance(recs, list):
        raise ParseError(f"{where}: expected a list of [i, j, scalar]")
    for n, rec in enumerate(recs):
        w = f"{where}[{n}]"
        if not isinstance(rec, list) or len(rec) != 3:
            raise ParseError(f"{w}: expected [i, j, scalar], got {rec!r}")
        i, j = _int(rec[0], h.dim, w), _int(rec[1], h.dim, w)
        out[(i, j)] = spec.add(out.get((i, j), spec.zero), _scalar(spec, rec[2], w))
    return TensorElt(h.algs2, out)


def hopf_to_dict(h: HopfData, rmatrices=None, cocycles=None, name=None) -> dict:
    d = algebra_to_dict(h.alg)
    f = h.spec.format
    d["name"] = name or h.name
    d["comult"] = [[i, j, k, f(c)] for i in range(h.dim) for (j, k), c in sorted(h.comult[i].items())]
    d["counit"] = [f(e) for e in h.counit]
    d["antipode"] = h.antipode.to_strings()
    d["rmatrices"] = {k: tensor_to_list(v) for k, v in (rmatrices or {}).items()}
    d["cocycles"] = {k: tensor_to_list(v) for k, v in (cocycles or {}).items()}
    return d


def hopf_from_dict(doc: dict, validate=True):
    """(HopfData, rmatrices, cocycles)."""
    A = algebra_from_dict(doc, validate=validate)
    spec, n = A.spec, A.dim
    comult = [dict() for _ in range(n)]
    for m, rec in enumerate(_need(doc, "comult")):
        where = f"comult[{m}]"
        if not isinstance(rec, list) or len(rec) != 4:
            raise ParseError(f"{where}: expected [i, j, k, scalar], got {rec!r}")
        i, j, k = (_int(x, n, where) for x in rec[:3])
        c = _scalar(spec, rec[3], where)
        comult[i][(j, k)] = spec.add(comult[i].get((j, k), spec.zero), c)
    comult = [{k: v for k, v in d.items() if not spec.is_zero(v)} for d in comult]
    counit = _need(doc, "counit")
    if not isinstance(counit, list) or len(counit) != n:
        raise ParseError(f"counit: expected {n} scalars")
    counit = [_scalar(spec, x, f"counit[{m}]") for m, x in enumerate(counit)]
    S = _need(doc, "antipode")
    if not isinstance(S, list) or len(S) != n or any(not isinstance(r, list) or len(r) != n for r in S):
        raise ParseError(f"antipode: expected a {n}x{n} matrix")
    S = Mat(spec, n, n, [[_scalar(spec, x, f"antipode[{i}][{j}]") for j, x in enumerate(r)]
                         for i, r in enumerate(S)])
    h = HopfData(A, comult, counit, S, name=doc.get("name", ""))
    if validate:
        rep = verify_hopf(h)
        if not rep:
            raise ValidationError("hopf: " + "; ".join(rep.failures))
    rms = {k: tensor_from_list(h, v, f"rmatrices.{k}") for k, v in doc.get("rmatrices", {}).items()}
    ccs = {k: tensor_from_list(h, v, f"cocycles.{k}") for k, v in doc.get("cocycles", {}).items()}
    return h, rms, ccs


# ---------------------------------------------------------------- module algebras

def module_algebra_to_dict(a: ModuleAlgebra) -> dict:
    d = algebra_to_dict(a.alg)
    f = a.spec.format
    d["name"] = a.name
    d["action"] = [[hh, i, j, f(c)] for hh, M in enumerate(a.action) for i, j, c in M.nonzeros()]
    return d


def module_algebra_from_dict(doc: dict, h: HopfData, validate=True) -> ModuleAlgebra:
    A = algebra_from_dict(doc, spec=None, validate=validate)
    if A.spec != h.spec:
        raise ValidationError(f"field: algebra over {A.spec}, Hopf algebra over {h.spec}")
    mats = [Mat.zeros(h.spec, A.dim, A.dim) for _ in range(h.dim)]
    for m, rec in enumerate(_need(doc, "action")):
        where = f"action[{m}]"
        if not isinstance(rec, list) or len(rec) != 4:
            raise ParseError(f"{where}: expected [h, i, j, scalar], got {rec!r}")
        hh = _int(rec[0], h.dim, where)
        i, j = _int(rec[1], A.dim, where), _int(rec[2], A.dim, where)
        mats[hh].data[i][j] = h.spec.add(mats[hh].data[i][j], _scalar(h.spec, rec[3], where))
    ma = ModuleAlgebra(h, A, mats, name=doc.get("name", ""))
    if validate:
        rep = verify_module_algebra(ma)
        if not rep:
            raise ValidationError("module algebra: " + "; ".join(rep.failures))
    return ma


def dumps(doc) -> str:
    """Canonical text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}") from None
