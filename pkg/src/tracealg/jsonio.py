"""JSON input formats for algebras, groups and pseudocharacter tables.

Rationals travel as "p/q" strings (plain integers also accepted).  Errors
carry the offending field so CLI diagnostics can point at the input.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .findim import TraceAlgebra, make_algebra
from .pseudochar import FiniteGroup, PseudoCharTable, make_group


class InputFormatError(ValueError):
    pass


def parse_rational(value, where: str) -> Fraction:
    try:
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, int):
            return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"{where}: bad rational {value!r} ({exc})") from None
    raise InputFormatError(f"{where}: expected integer or 'p/q' string, got {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value)


def _load(path_or_text, kind: str):
    try:
        if hasattr(path_or_text, "read"):
            return json.load(path_or_text)
        return json.loads(path_or_text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"malformed JSON in {kind}: line {exc.lineno} column {exc.colno}: {exc.msg}")


def load_algebra(text) -> TraceAlgebra:
    """Schema: {dim, basis: [labels], mul: [[[ [k, c], ... ] ...]],
    unit: [...], trace: [...], blocks?: [[m, [idx...]], ...]}."""
    data = _load(text, "algebra")
    for key in ("dim", "mul", "unit", "trace"):
        if key not in data:
            raise InputFormatError(f"algebra: missing field {key!r}")
    d = data["dim"]
    mul = data["mul"]
    if len(mul) != d or any(len(row) != d for row in mul):
        raise InputFormatError(f"algebra.mul: expected {d}x{d} table")
    sparse = []
    for i, row in enumerate(mul):
        srow = []
        for j, cell in enumerate(row):
            entries = []
            for pair in cell:
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise InputFormatError(
                        f"algebra.mul[{i}][{j}]: expected [k, coeff] pairs")
                k, c = pair
                if not isinstance(k, int) or not 0 <= k < d:
                    raise InputFormatError(
                        f"algebra.mul[{i}][{j}]: basis index {k!r} out of range")
                entries.append((k, parse_rational(c, f"algebra.mul[{i}][{j}]")))
            srow.append(entries)
        sparse.append(srow)
    unit = [parse_rational(c, "algebra.unit") for c in data["unit"]]
    trace = [parse_rational(c, "algebra.trace") for c in data["trace"]]
    if len(unit) != d or len(trace) != d:
        raise InputFormatError("algebra: unit and trace must have length dim")
    labels = data.get("basis")
    blocks = None
    if "blocks" in data:
        blocks = [(int(m), tuple(int(i) for i in idxs)) for m, idxs in data["blocks"]]
    return make_algebra(sparse, unit, trace, labels=labels, blocks=blocks)


def dump_algebra(a: TraceAlgebra) -> str:
    data = {
        "dim": a.dim,
        "basis": list(a.labels),
        "mul": [[[[k, format_rational(c)] for k, c in cell] for cell in row]
                for row in a.mul],
        "unit": [format_rational(c) for c in a.unit],
        "trace": [format_rational(c) for c in a.trace_vector],
    }
    if a.blocks:
        data["blocks"] = [[m, list(idxs)] for m, idxs in a.blocks]
    return json.dumps(data, indent=2)


def load_group(text) -> FiniteGroup:
    """Schema: {order, table: [[...]], identity}."""
    data = _load(text, "group")
    for key in ("order", "table"):
        if key not in data:
            raise InputFormatError(f"group: missing field {key!r}")
    order = data["order"]
    table = data["table"]
    if len(table) != order or any(len(row) != order for row in table):
        raise InputFormatError(f"group.table: expected {order}x{order} table")
    return make_group(table, identity=data.get("identity"))


def dump_group(g: FiniteGroup) -> str:
    return json.dumps({
        "order": g.order,
        "table": [list(row) for row in g.table],
        "identity": g.identity,
    }, indent=2)


def load_pseudochar(text, group: FiniteGroup) -> PseudoCharTable:
    """Schema: {n, values: ["p/q", ...]} with one value per group element."""
    data = _load(text, "pseudocharacter")
    for key in ("n", "values"):
        if key not in data:
            raise InputFormatError(f"pseudocharacter: missing field {key!r}")
    values = [parse_rational(v, f"pseudocharacter.values[{i}]")
              for i, v in enumerate(data["values"])]
    if len(values) != group.order:
        raise InputFormatError(
            f"pseudocharacter.values: expected {group.order} entries, got {len(values)}")
    return PseudoCharTable(group=group, degree=int(data["n"]), values=tuple(values))
