"""Deterministic JSON and CSV output.

Floats are written with ``%.15e``; complex numbers become ``[re, im]`` in
JSON and a pair of ``re,im`` columns in CSV.  Dictionary order is kept as
built, so identical inputs give byte-identical documents.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Any, Iterable, Sequence

import numpy as np

from .polyc import PolyC

__all__ = ["to_jsonable", "dumps", "fmt_float", "csv_table"]


def fmt_float(x: float) -> str:
    """``%.15e`` for finite values, ``NaN``/``Infinity``/``-Infinity`` otherwise."""
    x = float(x) + 0.0  # folds −0.0 into 0.0
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return "%.15e" % x


class _Raw(str):
    """A preformatted JSON number."""


def to_jsonable(obj: Any) -> Any:
    """Convert numbers, polynomials and arrays to plain JSON structures."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _Raw(fmt_float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        c = complex(obj)
        return [_Raw(fmt_float(c.real)), _Raw(fmt_float(c.imag))]
    if isinstance(obj, PolyC):
        return [to_jsonable(c) for c in obj.to_list()]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "__dataclass_fields__"):
        return {k: to_jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    return str(obj)


def _emit(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, _Raw):
        return str(obj)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        import json

        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{_emit(str(k), indent, 0)}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(isinstance(v, (_Raw, int, str)) or v is None for v in obj):
            return "[" + ", ".join(_emit(v, indent, 0) for v in obj) + "]"
        items = [pad + _emit(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    """Serialise ``obj`` to JSON with fixed float formatting."""
    return _emit(to_jsonable(obj), indent, 0) + "\n"


def csv_table(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text; complex cells expand into two columns (``name_re``, ``name_im``)."""
    rows = [list(r) for r in rows]
    is_complex = [any(isinstance(r[i], complex) for r in rows) for i in range(len(header))]
    head: list[str] = []
    for name, cx in zip(header, is_complex):
        head += [f"{name}_re", f"{name}_im"] if cx else [name]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(head)
    for r in rows:
        line: list[str] = []
        for v, cx in zip(r, is_complex):
            if cx:
                c = complex(v)
                line += [fmt_float(c.real), fmt_float(c.imag)]
            elif isinstance(v, float):
                line.append(fmt_float(v))
            else:
                line.append(str(v))
        w.writerow(line)
    return buf.getvalue()
