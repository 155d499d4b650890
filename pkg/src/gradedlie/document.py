"""Reading and writing pentad description documents.

A document is JSON with every scalar written as an exact literal string:
"p/q" over the rationals, "r mod p" over GF(p).  Plain integers are also
accepted on input.  Layout:

    {
      "field": "rational" | "prime:p",
      "algebra": {"dim": n, "labels": [...], "brackets": [[i, j, k, "c"], ...]},
      "representation": {"dim": d, "operators": [matrix, ...]},
      "dual_module": {"operators": [matrix, ...], "pairing": matrix},   # optional
      "b0": matrix,
      "module": {"pi": [matrix, ...], "varpi": [matrix, ...],
                 "pairing0": matrix},                                   # optional
      "options": {"depth": N, "seed": s, "samples": k}                  # optional
    }

The structure constants are sparse quadruples: [i, j, k, c] contributes
c * e_k to [e_i, e_j].  Omitted pairs bracket to zero.
"""

from __future__ import annotations

import json

from .liealg import BilinearForm, LieAlgebra, Representation
from .linalg import Matrix
from .pentad import Pentad
from .scalars import field_by_name, format_scalar, parse_scalar


class DocumentError(ValueError):
    """A pentad document that cannot be parsed or is internally inconsistent."""


def _scalar(x, field, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise DocumentError("%s: scalar must be an int or literal string, got %r"
                            % (where, x))
    try:
        return parse_scalar(x, field)
    except (ValueError, TypeError) as exc:
        raise DocumentError("%s: bad scalar %r (%s)" % (where, x, exc))


def _matrix(obj, rows, cols, field, where):
    if not isinstance(obj, list) or len(obj) != rows:
        raise DocumentError("%s: expected %d rows" % (where, rows))
    data = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError("%s: row %d must have %d entries" % (where, i, cols))
        data.append([_scalar(x, field, "%s[%d]" % (where, i)) for x in row])
    return Matrix(data, field=field, cols=cols)


def _operators(obj, count, dim, field, where):
    if not isinstance(obj, list) or len(obj) != count:
        raise DocumentError("%s: expected %d operator matrices" % (where, count))
    return [_matrix(m, dim, dim, field, "%s[%d]" % (where, i))
            for i, m in enumerate(obj)]


def parse_document(text):
    """Parse a document (JSON text or an already-decoded dict).

    Returns a dict with keys: field, pentad, module (a (pi, varpi, pairing0)
    triple or None), options.
    """
    if isinstance(text, (str, bytes)):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError("JSON parse error at line %d column %d: %s"
                                % (exc.lineno, exc.colno, exc.msg))
    else:
        obj = text
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    try:
        field = field_by_name(obj.get("field", "rational"))
    except ValueError as exc:
        raise DocumentError(str(exc))

    alg = obj.get("algebra")
    if not isinstance(alg, dict) or "dim" not in alg:
        raise DocumentError("missing algebra block with dim")
    n = alg["dim"]
    if not isinstance(n, int) or n < 0:
        raise DocumentError("algebra dim must be a non-negative integer")
    brackets = [[[field.zero()] * n for _ in range(n)] for _ in range(n)]
    for q, quad in enumerate(alg.get("brackets", [])):
        if not isinstance(quad, list) or len(quad) != 4:
            raise DocumentError("algebra.brackets[%d]: expected [i, j, k, c]" % q)
        i, j, k, c = quad
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise DocumentError("algebra.brackets[%d]: index %r out of range"
                                    % (q, idx))
        brackets[i][j][k] = brackets[i][j][k] + _scalar(
            c, field, "algebra.brackets[%d]" % q)
    labels = alg.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n):
        raise DocumentError("algebra.labels must list %d names" % n)
    g = LieAlgebra(n, [[tuple(v) for v in row] for row in brackets],
                   labels=labels, field=field)

    rep = obj.get("representation")
    if not isinstance(rep, dict) or "dim" not in rep:
        raise DocumentError("missing representation block with dim")
    dv = rep["dim"]
    if not isinstance(dv, int) or dv < 0:
        raise DocumentError("representation dim must be a non-negative integer")
    rho = Representation(g, dv, _operators(
        rep.get("operators", []), n, dv, field, "representation.operators"))

    dual = None
    pairing = None
    dblock = obj.get("dual_module")
    if dblock is not None:
        if not isinstance(dblock, dict):
            raise DocumentError("dual_module must be an object")
        dd = dblock.get("dim", dv)
        dual = Representation(g, dd, _operators(
            dblock.get("operators", []), n, dd, field, "dual_module.operators"))
        if "pairing" in dblock:
            pairing = _matrix(dblock["pairing"], dv, dd, field, "dual_module.pairing")
        elif dd == dv:
            pairing = Matrix.identity(dv, field=field)
        else:
            raise DocumentError("dual_module of different dim needs a pairing")

    if "b0" not in obj:
        raise DocumentError("missing b0 Gram matrix")
    b0 = BilinearForm(_matrix(obj["b0"], n, n, field, "b0"))
    pentad = Pentad.build(g, rho, b0, dual=dual, pairing=pairing)

    module = None
    mblock = obj.get("module")
    if mblock is not None:
        if not isinstance(mblock, dict):
            raise DocumentError("module must be an object")
        du = mblock.get("dim")
        if du is None:
            ops = mblock.get("pi", [])
            if not ops or not isinstance(ops[0], list):
                raise DocumentError("module block needs dim or pi operators")
            du = len(ops[0])
        pi = Representation(g, du, _operators(
            mblock.get("pi", []), n, du, field, "module.pi"))
        dw = mblock.get("dual_dim", du)
        varpi = Representation(g, dw, _operators(
            mblock.get("varpi", []), n, dw, field, "module.varpi"))
        if "pairing0" in mblock:
            pairing0 = _matrix(mblock["pairing0"], du, dw, field, "module.pairing0")
        elif du == dw:
            pairing0 = Matrix.identity(du, field=field)
        else:
            raise DocumentError("module with different dual dim needs pairing0")
        module = (pi, varpi, pairing0)

    options = obj.get("options") or {}
    if not isinstance(options, dict):
        raise DocumentError("options must be an object")
    for key in ("depth", "seed", "samples"):
        if key in options and (not isinstance(options[key], int)
                               or isinstance(options[key], bool)):
            raise DocumentError("options.%s must be an integer" % key)
    return {"field": field, "pentad": pentad, "module": module, "options": options}


def _matrix_out(m):
    return [[format_scalar(x) for x in row] for row in m.data]


def pentad_to_document(pentad, module=None, options=None):
    """Serialize a pentad (and optional module blocks) back to plain JSON data."""
    g = pentad.g
    quads = []
    for i in range(g.dim):
        for j in range(g.dim):
            for k, c in enumerate(g.brackets[i][j]):
                if c != 0:
                    quads.append([i, j, k, format_scalar(c)])
    doc = {
        "field": pentad.field.name,
        "algebra": {"dim": g.dim, "labels": list(g.labels), "brackets": quads},
        "representation": {
            "dim": pentad.rho.space_dim,
            "operators": [_matrix_out(op) for op in pentad.rho.operators],
        },
        "dual_module": {
            "dim": pentad.dual.space_dim,
            "operators": [_matrix_out(op) for op in pentad.dual.operators],
            "pairing": _matrix_out(pentad.pairing),
        },
        "b0": _matrix_out(pentad.b0.gram),
    }
    if module is not None:
        pi, varpi, pairing0 = module
        doc["module"] = {
            "dim": pi.space_dim,
            "pi": [_matrix_out(op) for op in pi.operators],
            "dual_dim": varpi.space_dim,
            "varpi": [_matrix_out(op) for op in varpi.operators],
            "pairing0": _matrix_out(pairing0),
        }
    if options:
        doc["options"] = dict(options)
    return doc


def dumps(doc):
    """Deterministic JSON text for a document."""
    return json.dumps(doc, indent=2, sort_keys=True)
