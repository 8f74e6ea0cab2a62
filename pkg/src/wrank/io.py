"""JSON formats for matroid files and set-function vectors.

Matroid file::

    {"type": "binary",  "columns": ["100", "010", "110"], "weights": [1, "3/2", 2]}
    {"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
    {"type": "uniform", "rank": 2, "size": 4}

Binary columns are bit strings with the leftmost character in row 0. Graph
vertices are numbered from 0. ``weights`` is optional (default all 1) and
takes integers or ``"p/q"`` strings. An optional ``"name"`` is carried
through.

Set-function vectors map hex bitmask keys (bit ``i - 1`` = element ``i``),
zero-padded so lexical order is numeric order, to values: exact rationals
as strings, floats as JSON numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .matroid import BinaryMatroid, GraphicMatroid, Matroid, UniformMatroid, as_weights
from .setfunc import SetFunctionVector


class ParseError(ValueError):
    pass


@dataclass
class MatroidFile:
    matroid: Matroid
    weights: tuple[Fraction, ...]
    name: str | None = None


def _field(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise ParseError(f"{where}: field {key!r} has wrong type {type(val).__name__}")
    return val


def _parse_weight(x, i: int, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"{where}: weights[{i}] must be an integer or a 'p/q' string")
    try:
        f = Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: weights[{i}] = {x!r} is not a rational") from exc
    if f < 0:
        raise ParseError(f"{where}: weights[{i}] is negative")
    return f


def matroid_from_dict(obj, where: str = "<input>") -> MatroidFile:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: top level must be an object")
    kind = _field(obj, "type", str, where)
    try:
        if kind == "binary":
            cols = _field(obj, "columns", list, where)
            if not cols or not all(isinstance(c, str) for c in cols):
                raise ParseError(f"{where}: 'columns' must be a nonempty list of bit strings")
            m: Matroid = BinaryMatroid.from_column_strings(cols)
        elif kind == "graphic":
            nv = _field(obj, "vertices", int, where)
            edges = _field(obj, "edges", list, where)
            pairs = []
            for i, e in enumerate(edges):
                if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                    raise ParseError(f"{where}: edges[{i}] must be a pair of vertex ids")
                pairs.append((e[0], e[1]))
            m = GraphicMatroid(nv, pairs)
        elif kind == "uniform":
            m = UniformMatroid(_field(obj, "rank", int, where), _field(obj, "size", int, where))
        else:
            raise ParseError(f"{where}: unknown type {kind!r}")
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc
    if "weights" in obj:
        raw = obj["weights"]
        if not isinstance(raw, list):
            raise ParseError(f"{where}: 'weights' must be a list")
        if len(raw) != m.n:
            raise ParseError(f"{where}: 'weights' has {len(raw)} entries, ground set has {m.n}")
        weights = tuple(_parse_weight(x, i, where) for i, x in enumerate(raw))
    else:
        weights = (Fraction(1),) * m.n
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"{where}: 'name' must be a string")
    return MatroidFile(m, weights, name)


def load_matroid(path: str | Path) -> MatroidFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return loads_matroid(text, str(path))


def loads_matroid(text: str, where: str = "<input>") -> MatroidFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return matroid_from_dict(obj, where)


def _weight_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matroid_to_dict(mf: MatroidFile) -> dict:
    m = mf.matroid
    if isinstance(m, BinaryMatroid):
        cols = ["".join(str((c >> r) & 1) for r in range(m.rows)) for c in m.columns]
        out: dict = {"type": "binary", "columns": cols}
    elif isinstance(m, GraphicMatroid):
        out = {"type": "graphic", "vertices": m.vertices, "edges": [list(e) for e in m.edges]}
    elif isinstance(m, UniformMatroid):
        out = {"type": "uniform", "rank": m.r, "size": m.n}
    else:
        raise TypeError(f"cannot serialize {type(m).__name__}")
    out["weights"] = [_weight_json(x) for x in as_weights(mf.weights, m.n)]
    if mf.name is not None:
        out["name"] = mf.name
    return out


def dumps_matroid(mf: MatroidFile) -> str:
    return json.dumps(matroid_to_dict(mf), sort_keys=True) + "\n"


def mask_key(s: int, n: int) -> str:
    return f"0x{s:0{max(1, (n + 3) // 4)}x}"


def vector_to_dict(v: SetFunctionVector) -> dict[str, object]:
    return {mask_key(s, v.n): x if isinstance(x, float) else str(x) for s, x in v.items()}


def vector_from_dict(n: int, obj: dict[str, object]) -> SetFunctionVector:
    vals = {}
    for key, x in obj.items():
        try:
            s = int(key, 16)
        except ValueError as exc:
            raise ParseError(f"bad subset key {key!r}") from exc
        if isinstance(x, str):
            try:
                vals[s] = Fraction(x)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational {x!r} at {key}") from exc
        elif isinstance(x, (int, float)) and not isinstance(x, bool):
            vals[s] = x
        else:
            raise ParseError(f"bad value {x!r} at {key}")
    try:
        return SetFunctionVector.from_mapping(n, vals)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def dumps_vector(v: SetFunctionVector) -> str:
    return json.dumps(vector_to_dict(v), sort_keys=True) + "\n"


def parse_subset(text: str, n: int) -> int:
    """``"0x5"`` (hex mask) or ``"1,3"`` (element labels) to a bitmask."""
    text = text.strip()
    try:
        if text.lower().startswith("0x"):
            s = int(text, 16)
        elif text == "":
            s = 0
        else:
            s = 0
            for part in text.split(","):
                e = int(part)
                if e < 1:
                    raise ValueError
                s |= 1 << (e - 1)
    except ValueError as exc:
        raise ParseError(f"bad subset {text!r}; use a hex mask like 0x5 or labels like 1,3") from exc
    if s >> n:
        raise ParseError(f"subset {text!r} is outside the ground set of size {n}")
    return s


def format_labels(s: int) -> str:
    return "{" + ",".join(str(i + 1) for i in range(s.bit_length()) if s >> i & 1) + "}"
