"""Bit-exact JSON serialization of the domain objects.

One document holds an algebra (dims, labels, sparse product triples) plus
optional blocks: a representation, a bimodule, a linear map, a 2-tensor,
and a bilinear form.  Output is canonical: fixed key order, product triples
sorted lexicographically, scalars in reduced "p/q" form; parsing followed
by serializing is the identity on canonical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping

from .graded import GradedLinearMap, ParityViolation, SuperSpace, Tensor2
from .algebras import Superalgebra
from .operators import BilinearForm
from .reps import Bimodule, Representation

FORMAT = "superalg/1"


class ParseError(ValueError):
    """Malformed document; the message names the offending field."""


@dataclass(frozen=True)
class AlgebraDocument:
    algebra: Superalgebra
    representation: Representation | None = None
    bimodule: Bimodule | None = None
    linear_map: GradedLinearMap | None = None
    linear_map_domain: str | None = None  # "module" or "algebra"
    tensor2: Tensor2 | None = None
    bilinear_form: BilinearForm | None = None


def _scalar_to_str(c: Fraction) -> str:
    return str(c)


def _parse_scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a scalar string, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: bad scalar {value!r} ({exc})") from None
    raise ParseError(f"{where}: expected a scalar string, got {type(value).__name__}")


def _matrix_to_json(matrix) -> list[list[str]]:
    return [[_scalar_to_str(c) for c in row] for row in matrix]


def _parse_matrix(value: Any, nrows: int, ncols: int, where: str):
    if not isinstance(value, list) or len(value) != nrows:
        raise ParseError(f"{where}: expected {nrows} rows")
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != ncols:
            raise ParseError(f"{where}[{i}]: expected {ncols} entries")
        out.append(tuple(_parse_scalar(c, f"{where}[{i}][{j}]") for j, c in enumerate(row)))
    return tuple(out)


def _space_to_json(space: SuperSpace) -> dict:
    return {
        "even_dim": space.even_dim,
        "odd_dim": space.odd_dim,
        "basis_labels": list(space.labels),
    }


def _parse_space(obj: Mapping, where: str) -> SuperSpace:
    for key in ("even_dim", "odd_dim"):
        if key not in obj or not isinstance(obj[key], int) or obj[key] < 0:
            raise ParseError(f"{where}.{key}: expected a nonnegative integer")
    labels = obj.get("basis_labels", [])
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError(f"{where}.basis_labels: expected a list of strings")
    try:
        return SuperSpace(obj["even_dim"], obj["odd_dim"], tuple(labels))
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _products_to_json(algebra: Superalgebra) -> dict:
    out = {}
    for name in sorted(algebra.products):
        table = algebra.products[name]
        n = algebra.space.dim
        triples = [
            [i, j, k, _scalar_to_str(table[i][j][k])]
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if table[i][j][k] != 0
        ]
        out[name] = triples
    return out


def _parse_products(obj: Any, space: SuperSpace) -> Superalgebra:
    if not isinstance(obj, Mapping) or not obj:
        raise ParseError("products: expected a nonempty object")
    names = set(obj)
    if names != {"mul"} and names != {"prec", "succ"}:
        raise ParseError(
            "products: expected either {'mul'} or {'prec', 'succ'}, got "
            + repr(sorted(names))
        )
    n = space.dim
    entries: dict[str, dict[tuple[int, int, int], Fraction]] = {}
    for name in sorted(names):
        triples = obj[name]
        if not isinstance(triples, list):
            raise ParseError(f"products.{name}: expected a list of triples")
        sparse: dict[tuple[int, int, int], Fraction] = {}
        for idx, item in enumerate(triples):
            where = f"products.{name}[{idx}]"
            if not isinstance(item, list) or len(item) != 4:
                raise ParseError(f"{where}: expected [i, j, k, scalar]")
            i, j, k = item[0], item[1], item[2]
            for pos, v in (("i", i), ("j", j), ("k", k)):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise ParseError(f"{where}.{pos}: index out of range 0..{n - 1}")
            c = _parse_scalar(item[3], f"{where}.scalar")
            if (i, j, k) in sparse:
                raise ParseError(f"{where}: duplicate entry ({i}, {j}, {k})")
            target = (space.parity(i) + space.parity(j)) % 2
            if c != 0 and space.parity(k) != target:
                raise ParseError(
                    f"{where}: parity violation: entry ({i}, {j}, {k}) maps "
                    f"parities ({space.parity(i)}, {space.parity(j)}) to "
                    f"parity {space.parity(k)}"
                )
            if c != 0:
                sparse[(i, j, k)] = c
        entries[name] = sparse
    return Superalgebra.from_entries(space, entries)


def _maps_to_json(maps) -> list:
    return [_matrix_to_json(m.matrix) for m in maps]


def _parse_action(value: Any, algebra: Superalgebra, space: SuperSpace,
                  where: str) -> tuple[GradedLinearMap, ...]:
    if not isinstance(value, list) or len(value) != algebra.space.dim:
        raise ParseError(
            f"{where}: expected one matrix per algebra basis element "
            f"({algebra.space.dim})"
        )
    maps = []
    for i, mat in enumerate(value):
        matrix = _parse_matrix(mat, space.dim, space.dim, f"{where}[{i}]")
        try:
            maps.append(
                GradedLinearMap(space, space, matrix, algebra.space.parity(i))
            )
        except ParityViolation as exc:
            raise ParseError(f"{where}[{i}]: {exc}") from None
    return tuple(maps)


def serialize(doc: AlgebraDocument) -> str:
    algebra = doc.algebra
    payload: dict[str, Any] = {"format": FORMAT}
    payload.update(_space_to_json(algebra.space))
    payload["products"] = _products_to_json(algebra)
    if doc.representation is not None:
        payload["representation"] = {
            **_space_to_json(doc.representation.space),
            "matrices": _maps_to_json(doc.representation.action),
        }
    if doc.bimodule is not None:
        payload["bimodule"] = {
            **_space_to_json(doc.bimodule.space),
            "left": _maps_to_json(doc.bimodule.left),
            "right": _maps_to_json(doc.bimodule.right),
        }
    if doc.linear_map is not None:
        payload["linear_map"] = {
            "domain": doc.linear_map_domain or "algebra",
            "parity": doc.linear_map.parity,
            "matrix": _matrix_to_json(doc.linear_map.matrix),
        }
    if doc.tensor2 is not None:
        payload["tensor2"] = {
            "parity": doc.tensor2.parity,
            "coeffs": _matrix_to_json(doc.tensor2.coeffs),
        }
    if doc.bilinear_form is not None:
        payload["bilinear_form"] = {
            "matrix": _matrix_to_json(doc.bilinear_form.matrix),
        }
    return _dumps_canonical(payload) + "\n"


def _dumps_canonical(value, indent: int = 0) -> str:
    """json.dumps with 2-space indent, except that lists of scalars stay on
    one line; key order is insertion order."""
    pad = " " * indent
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [
            f'{pad}  {json.dumps(str(k))}: {_dumps_canonical(v, indent + 2)}'
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(x, (dict, list)) for x in value):
            return json.dumps(value)
        items = [f"{pad}  {_dumps_canonical(v, indent + 2)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(value)


def parse(text: str | bytes) -> AlgebraDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"syntax error: {exc}") from None
    if not isinstance(obj, Mapping):
        raise ParseError("top level: expected an object")
    if obj.get("format") != FORMAT:
        raise ParseError(f"format: expected {FORMAT!r}, got {obj.get('format')!r}")
    space = _parse_space(obj, "top level")
    if "products" not in obj:
        raise ParseError("products: missing")
    algebra = _parse_products(obj["products"], space)

    representation = None
    if "representation" in obj:
        block = obj["representation"]
        if not isinstance(block, Mapping):
            raise ParseError("representation: expected an object")
        vspace = _parse_space(block, "representation")
        if "mul" not in algebra.products:
            raise ParseError("representation: requires a 'mul' product")
        action = _parse_action(block.get("matrices"), algebra, vspace,
                               "representation.matrices")
        representation = Representation(algebra, vspace, action)

    bimodule = None
    if "bimodule" in obj:
        block = obj["bimodule"]
        if not isinstance(block, Mapping):
            raise ParseError("bimodule: expected an object")
        vspace = _parse_space(block, "bimodule")
        left = _parse_action(block.get("left"), algebra, vspace, "bimodule.left")
        right = _parse_action(block.get("right"), algebra, vspace, "bimodule.right")
        bimodule = Bimodule(algebra, vspace, left, right)

    linear_map = None
    linear_map_domain = None
    if "linear_map" in obj:
        block = obj["linear_map"]
        if not isinstance(block, Mapping):
            raise ParseError("linear_map: expected an object")
        linear_map_domain = block.get("domain", "algebra")
        if linear_map_domain not in ("module", "algebra"):
            raise ParseError(
                "linear_map.domain: expected 'module' or 'algebra', got "
                + repr(linear_map_domain)
            )
        parity = block.get("parity", 0)
        if parity not in (0, 1):
            raise ParseError("linear_map.parity: expected 0 or 1")
        if linear_map_domain == "module":
            source = representation.space if representation is not None else (
                bimodule.space if bimodule is not None else None
            )
            if source is None:
                raise ParseError(
                    "linear_map: domain 'module' requires a representation or "
                    "bimodule block"
                )
        else:
            source = algebra.space
        matrix = _parse_matrix(block.get("matrix"), algebra.space.dim,
                               source.dim, "linear_map.matrix")
        try:
            linear_map = GradedLinearMap(source, algebra.space, matrix, parity)
        except ParityViolation as exc:
            raise ParseError(f"linear_map.matrix: {exc}") from None

    tensor2 = None
    if "tensor2" in obj:
        block = obj["tensor2"]
        if not isinstance(block, Mapping):
            raise ParseError("tensor2: expected an object")
        parity = block.get("parity", 0)
        if parity not in (0, 1):
            raise ParseError("tensor2.parity: expected 0 or 1")
        coeffs = _parse_matrix(block.get("coeffs"), space.dim, space.dim,
                               "tensor2.coeffs")
        try:
            tensor2 = Tensor2(space, coeffs, parity)
        except ParityViolation as exc:
            raise ParseError(f"tensor2.coeffs: {exc}") from None

    bilinear_form = None
    if "bilinear_form" in obj:
        block = obj["bilinear_form"]
        if not isinstance(block, Mapping):
            raise ParseError("bilinear_form: expected an object")
        matrix = _parse_matrix(block.get("matrix"), space.dim, space.dim,
                               "bilinear_form.matrix")
        bilinear_form = BilinearForm(space, matrix)

    return AlgebraDocument(
        algebra=algebra,
        representation=representation,
        bimodule=bimodule,
        linear_map=linear_map,
        linear_map_domain=linear_map_domain,
        tensor2=tensor2,
        bilinear_form=bilinear_form,
    )
