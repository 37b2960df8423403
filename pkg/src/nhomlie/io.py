"""Algebra file format, canonical serialization, and report documents.

Algebra files are JSON with keys ``arity``, ``dim``, ``parity``, ``alpha``
and ``brackets``; rationals travel as strings like ``"-2/3"`` (plain
integers are also accepted on input).  Serialization is canonical: sorted
keys, compact separators, lowest-term rationals, one trailing newline, so
a parsed-and-reserialized file is byte-identical and reports are
reproducible run to run.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from . import __version__
from .algebra import NHomAlgebra
from .linalg import Mat, SubspaceBasis
from .propositions import PropReport
from .solver import EndoSubspace, Kind


class SchemaError(ValueError):
    """Malformed algebra document; ``field`` locates the offending entry."""

    def __init__(self, message: str, fld: str = ""):
        super().__init__(f"{fld}: {message}" if fld else message)
        self.field = fld


class PrecheckError(ValueError):
    """Structurally valid document that violates the grading law."""

    def __init__(self, message: str, witness=()):
        super().__init__(message)
        self.witness = witness


def rational_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(value, fld: str) -> Fraction:
    if isinstance(value, bool):
        raise SchemaError("expected a rational, got a boolean", fld)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"malformed rational {value!r} ({exc})", fld) from None
    raise SchemaError(f"expected a rational string or integer, got {type(value).__name__}", fld)


def _expect_int(value, fld: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"expected an integer, got {type(value).__name__}", fld)
    return value


def algebra_from_doc(doc, name: str = "") -> NHomAlgebra:
    """Validate a parsed JSON document and build the algebra."""
    if not isinstance(doc, dict):
        raise SchemaError("top level must be a JSON object")
    for key in ("arity", "dim", "parity", "alpha", "brackets"):
        if key not in doc:
            raise SchemaError("missing required key", key)
    arity = _expect_int(doc["arity"], "arity")
    if arity < 2:
        raise SchemaError("arity must be at least 2", "arity")
    dim = _expect_int(doc["dim"], "dim")
    if dim < 0:
        raise SchemaError("dim must be nonnegative", "dim")
    parity = doc["parity"]
    if not isinstance(parity, list) or len(parity) != dim:
        raise SchemaError(f"parity must be a list of length {dim}", "parity")
    parity = tuple(_expect_int(p, f"parity[{i}]") for i, p in enumerate(parity))
    if any(p not in (0, 1) for p in parity):
        raise SchemaError("parity entries must be 0 or 1", "parity")

    alpha_doc = doc["alpha"]
    if not isinstance(alpha_doc, list) or len(alpha_doc) != dim:
        raise SchemaError(f"alpha must be a {dim}x{dim} array", "alpha")
    rows = []
    for i, row in enumerate(alpha_doc):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"alpha row must have length {dim}", f"alpha[{i}]")
        rows.append([parse_rational(x, f"alpha[{i}][{j}]") for j, x in enumerate(row)])
    alpha = Mat.from_rows(rows, cols=dim)

    brackets = doc["brackets"]
    if not isinstance(brackets, list):
        raise SchemaError("brackets must be an array", "brackets")
    table = {}
    for b, entry in enumerate(brackets):
        fld = f"brackets[{b}]"
        if not isinstance(entry, dict) or set(entry) != {"args", "value"}:
            raise SchemaError("each bracket needs exactly 'args' and 'value'", fld)
        args = entry["args"]
        if not isinstance(args, list) or len(args) != arity:
            raise SchemaError(f"args must be a list of {arity} indices", f"{fld}.args")
        args = tuple(_expect_int(a, f"{fld}.args[{i}]") for i, a in enumerate(args))
        if any(not 0 <= a < dim for a in args):
            raise SchemaError("args index out of range", f"{fld}.args")
        if any(args[i] > args[i + 1] for i in range(arity - 1)):
            raise SchemaError("args must be weakly increasing", f"{fld}.args")
        if args in table:
            raise SchemaError("duplicate bracket key", f"{fld}.args")
        value = entry["value"]
        if not isinstance(value, list):
            raise SchemaError("value must be an array of terms", f"{fld}.value")
        vec = [Fraction(0)] * dim
        for t, term in enumerate(value):
            tfld = f"{fld}.value[{t}]"
            if not isinstance(term, dict) or set(term) != {"index", "coeff"}:
                raise SchemaError("each term needs exactly 'index' and 'coeff'", tfld)
            idx = _expect_int(term["index"], f"{tfld}.index")
            if not 0 <= idx < dim:
                raise SchemaError("term index out of range", f"{tfld}.index")
            vec[idx] += parse_rational(term["coeff"], f"{tfld}.coeff")
        table[args] = tuple(vec)

    # grading precheck: the value of a bracket must carry the degree of its args
    for args, vec in table.items():
        want = 0
        for a in args:
            want ^= parity[a]
        for j, x in enumerate(vec):
            if x and parity[j] != want:
                raise PrecheckError(
                    f"bracket {list(args)} has a component of wrong degree at index {j}",
                    witness=(args, j, rational_str(x)))
    return NHomAlgebra(arity, dim, parity, table, alpha, name=name)


def parse_algebra(path) -> NHomAlgebra:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    import os
    return algebra_from_doc(doc, name=os.path.splitext(os.path.basename(str(path)))[0])


def algebra_to_doc(alg: NHomAlgebra) -> dict:
    brackets = []
    for args in sorted(alg.table):
        vec = alg.table[args]
        terms = [{"index": j, "coeff": rational_str(x)}
                 for j, x in enumerate(vec) if x]
        brackets.append({"args": list(args), "value": terms})
    return {
        "arity": alg.arity,
        "dim": alg.dim,
        "parity": list(alg.parity),
        "alpha": [[rational_str(x) for x in row] for row in alg.alpha.entries],
        "brackets": brackets,
    }


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def serialize_algebra(alg: NHomAlgebra) -> str:
    return canonical_json(algebra_to_doc(alg))


def digest_bytes(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def digest_file(path) -> str:
    with open(path, "rb") as fh:
        return digest_bytes(fh.read())


# ---------------------------------------------------------------------------
# report documents
# ---------------------------------------------------------------------------

def mat_doc(m: Mat) -> list:
    return [[rational_str(x) for x in row] for row in m.entries]


def subspace_doc(s: SubspaceBasis) -> list:
    return [[rational_str(x) for x in v] for v in s.vectors]


def dims_doc(dims) -> dict:
    return {f"{kind}/{k}/{xi}": dim for kind, k, xi, dim in dims}


def endospace_doc(space: EndoSubspace) -> dict:
    doc = {
        "kind": space.kind.value,
        "k": space.k,
        "xi": space.xi,
        "dim": space.dim,
        "basis": [mat_doc(g.mat) for g in space.basis],
    }
    if space.witnesses is not None:
        if space.kind is Kind.QDER:
            doc["witnesses"] = [mat_doc(w) for w in space.witnesses]
        else:
            doc["witnesses"] = [[mat_doc(w) for w in ws] for ws in space.witnesses]
    return doc


def _json_safe(value):
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    return value


def prop_report_doc(report: PropReport) -> dict:
    return {
        "prop": report.prop,
        "passed": report.passed,
        "claims": [
            {
                "id": c.claim_id,
                "status": c.status,
                "detail": c.detail,
                "witness": _json_safe(c.witness),
            }
            for c in report.claims
        ],
        "dims": dims_doc(report.dims),
    }


def report_envelope(command: str, input_path, input_digest: str, body: dict,
                    passed: bool) -> dict:
    doc = {
        "tool": {"name": "nhomlie", "version": __version__},
        "command": command,
        "input": {"path": str(input_path), "digest": input_digest},
        "passed": passed,
    }
    doc.update(body)
    return doc
