"""Structured-text documents: parsing and emission of every value the CLI
reads or writes.

Documents are JSON objects {"kind", "version", "payload"}.  Scalars are
strings "p/q" (or "p" for integers), matrices nested arrays, subspaces
{"ambient_dim", "basis"}.  Parsing canonicalizes subspace bases to RREF, so
emit(parse(x)) is the identity on canonical input.  Malformed input raises
DocumentError with a field path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .correspondence import A1_TAGS, LagrangianData
from .gm import GMData
from .linalg import Matrix, Subspace
from .polynomials import Poly
from .quadrics import QuadricOnSubspace

FORMAT_VERSION = "1"

KINDS = ("gm_data", "lagrangian_data", "quadric", "certificate", "report")


class DocumentError(ValueError):
    """Malformed document, with a best-effort field path in the message."""


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Any
    version: str = FORMAT_VERSION


def format_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(s, where: str = "scalar") -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise DocumentError(f"{where}: expected a rational string, got {s!r}")
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: malformed rational {s!r} ({exc})") from None
    return f


def format_vector(v) -> list[str]:
    return [format_rat(x) for x in v]


def parse_vector(obj, where: str = "vector") -> list[Fraction]:
    if not isinstance(obj, list):
        raise DocumentError(f"{where}: expected a list")
    return [parse_rat(x, f"{where}[{i}]") for i, x in enumerate(obj)]


def format_matrix(m: Matrix) -> list[list[str]]:
    return [[format_rat(x) for x in row] for row in m.data]


def parse_matrix(obj, where: str = "matrix", rows: int | None = None, cols: int | None = None) -> Matrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise DocumentError(f"{where}: expected a nested array")
    data = [[parse_rat(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(obj)]
    try:
        m = Matrix(data, cols=cols or 0)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None
    if rows is not None and m.rows != rows:
        raise DocumentError(f"{where}: expected {rows} rows, found {m.rows}")
    if cols is not None and m.cols != cols and m.rows > 0:
        raise DocumentError(f"{where}: expected {cols} columns, found {m.cols}")
    return m


def format_subspace(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": format_matrix(s.basis)}


def parse_subspace(obj, where: str = "subspace") -> Subspace:
    if not isinstance(obj, dict) or "ambient_dim" not in obj or "basis" not in obj:
        raise DocumentError(f"{where}: expected ambient_dim and basis fields")
    n = obj["ambient_dim"]
    if not isinstance(n, int) or n < 0:
        raise DocumentError(f"{where}.ambient_dim: expected a non-negative integer")
    m = parse_matrix(obj["basis"], f"{where}.basis")
    if m.rows > 0 and m.cols != n:
        raise DocumentError(f"{where}.basis: rows of length {m.cols} in ambient {n}")
    # non-RREF bases are accepted and canonicalized here
    return Subspace.from_rows(n, m.copy_data())


def format_gm_data(d: GMData) -> dict:
    from .gm import classify

    return {
        "n": d.n,
        "mu": format_matrix(d.mu),
        "q": [format_matrix(m) for m in d.q],
        "epsilon": format_rat(d.epsilon),
        "type_hint": classify(d),
    }


def parse_gm_data(obj, where: str = "gm_data") -> GMData:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    for field in ("n", "mu", "q"):
        if field not in obj:
            raise DocumentError(f"{where}: missing field {field!r}")
    n = obj["n"]
    if not isinstance(n, int):
        raise DocumentError(f"{where}.n: expected an integer")
    mu = parse_matrix(obj["mu"], f"{where}.mu", rows=10, cols=n + 5)
    qlist = obj["q"]
    if not isinstance(qlist, list) or len(qlist) != 6:
        raise DocumentError(f"{where}.q: expected six matrices")
    q = tuple(
        parse_matrix(qm, f"{where}.q[{i}]", rows=n + 5, cols=n + 5) for i, qm in enumerate(qlist)
    )
    eps = parse_rat(obj.get("epsilon", "1"), f"{where}.epsilon")
    if eps == 0:
        raise DocumentError(f"{where}.epsilon: must be non-zero")
    try:
        return GMData(n=n, mu=mu, q=q, epsilon=eps)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def format_lagrangian_data(ld: LagrangianData, frame: Matrix | None = None) -> dict:
    out = {"A": format_subspace(ld.a), "A1": ld.a1}
    if frame is not None:
        out["frame"] = format_matrix(frame)
    return out


def parse_lagrangian_data(obj, where: str = "lagrangian_data") -> LagrangianData:
    if not isinstance(obj, dict) or "A" not in obj:
        raise DocumentError(f"{where}: missing field 'A'")
    a = parse_subspace(obj["A"], f"{where}.A")
    tag = obj.get("A1", "0")
    if tag not in A1_TAGS:
        raise DocumentError(f"{where}.A1: expected one of {A1_TAGS}")
    if "frame" in obj:
        from .correspondence import apply_frame

        frame = parse_matrix(obj["frame"], f"{where}.frame", rows=6, cols=6)
        a = apply_frame(a, frame)
    try:
        return LagrangianData(a=a, a1=tag)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def format_quadric(q: QuadricOnSubspace) -> dict:
    return {
        "ambient_dim": q.ambient_dim,
        "span": format_subspace(q.span),
        "gram": format_matrix(q.gram),
    }


def parse_quadric(obj, where: str = "quadric") -> QuadricOnSubspace:
    if not isinstance(obj, dict):
        raise DocumentError(f"{where}: expected an object")
    for field in ("ambient_dim", "span", "gram"):
        if field not in obj:
            raise DocumentError(f"{where}: missing field {field!r}")
    span = parse_subspace(obj["span"], f"{where}.span")
    gram = parse_matrix(obj["gram"], f"{where}.gram")
    try:
        return QuadricOnSubspace(obj["ambient_dim"], span, gram)
    except ValueError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def format_poly(p: Poly) -> list[str]:
    return [format_rat(c) for c in p.coeffs]


def parse_poly(obj, where: str = "poly") -> Poly:
    return Poly(parse_vector(obj, where))


def parse(text: str) -> Document:
    """Parse a document from its JSON text."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise DocumentError("top level: expected an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"top level: unknown kind {kind!r}")
    version = obj.get("version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"top level: unsupported version {version!r}")
    payload = obj.get("payload")
    if kind == "gm_data":
        return Document(kind, parse_gm_data(payload))
    if kind == "lagrangian_data":
        return Document(kind, parse_lagrangian_data(payload))
    if kind == "quadric":
        return Document(kind, parse_quadric(payload))
    # certificates and reports stay as plain dictionaries
    if not isinstance(payload, dict):
        raise DocumentError(f"{kind}: expected an object payload")
    return Document(kind, payload)


def emit(doc: Document) -> str:
    """Emit a document as canonical JSON text (sorted keys, newline-terminated)."""
    if doc.kind == "gm_data":
        payload = format_gm_data(doc.payload)
    elif doc.kind == "lagrangian_data":
        payload = format_lagrangian_data(doc.payload)
    elif doc.kind == "quadric":
        payload = format_quadric(doc.payload)
    elif doc.kind in KINDS:
        payload = doc.payload
    else:
        raise DocumentError(f"unknown kind {doc.kind!r}")
    obj = {"kind": doc.kind, "version": doc.version, "payload": payload}
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
