"""Text file format for structures and modules.

A structure file is a JSON object::

    {"kind": "whq", "field": "Q" | {"Fp": p}, "dim": n,
     "unit": [..n..], "mul": c, "counit": [..n..], "comul": d,
     "antipode": a, "braiding": {"c": ..., "c_inv": ...}}

with ``e_i e_j = sum_k c[i][j][k] e_k``, ``delta(e_i) = sum d[i][j][k] e_j (x) e_k``
and ``lambda(e_j) = sum_i a[i][j] e_i`` (matrices are row-major, rows index
the target).  ``braiding`` is optional and defaults to the flip.  Scalars are
strings: canonical ``"a/b"`` rationals or residues mod p.

Module files use ``"kind": "hopf_module"`` with ``action`` a[m][h][k] and
``coaction`` r[m][k][h], or ``"kind": "hl_module"`` with ``action``
a[m][x][k], x running over the computed basis of H_L.  The underlying
structure is given separately.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exactlin import DimensionError, Mor, field_from_descriptor
from .hopfmod import HopfModule
from .modcat import RightHLModule
from .structures import Comonoid, UnitalMagma
from .whq import WeakHopfQuasigroup


class FormatError(ValueError):
    """The file is not a well-formed structure or module file."""


# --------------------------------------------------------------------------
# encoding


def _s(field, x) -> str:
    return field.format(x)


def _vector(field, mor: Mor, row: bool) -> list:
    """A 1-row or 1-column morphism as a flat list."""
    if row:
        return [_s(field, mor[0, j]) for j in range(mor.src)]
    return [_s(field, mor[i, 0]) for i in range(mor.dst)]


def _matrix(field, mor: Mor) -> list:
    return [[_s(field, v) for v in r] for r in mor.to_rows()]


def _cube_from_binary(field, mor: Mor, n: int, m: int) -> list:
    """``f: A (x) B -> C`` as ``t[a][b][k]``."""
    cols = [mor.column(j) for j in range(mor.src)]
    return [[[_s(field, cols[a * m + b].get(k, 0)) for k in range(mor.dst)]
             for b in range(m)] for a in range(n)]


def _cube_from_cobinary(field, mor: Mor, n: int, m: int) -> list:
    """``f: C -> A (x) B`` as ``t[c][a][b]``."""
    cols = [mor.column(j) for j in range(mor.src)]
    return [[[_s(field, cols[c].get(a * m + b, 0)) for b in range(m)]
             for a in range(n)] for c in range(mor.src)]


def structure_to_dict(H: WeakHopfQuasigroup) -> dict:
    F, n = H.field, H.dim
    d = {
        "kind": "whq",
        "field": F.descriptor(),
        "dim": n,
        "unit": _vector(F, H.unit, row=False),
        "mul": _cube_from_binary(F, H.mul, n, n),
        "counit": _vector(F, H.counit, row=True),
        "comul": _cube_from_cobinary(F, H.comul, n, n),
        "antipode": _matrix(F, H.antipode),
    }
    if not H.braiding_is_flip:
        d["braiding"] = {"c": _matrix(F, H.c), "c_inv": _matrix(F, H.c_inv)}
    return d


def hopf_module_to_dict(M: HopfModule) -> dict:
    F, n = M.field, M.over.dim
    return {
        "kind": "hopf_module",
        "field": F.descriptor(),
        "dim": M.dim,
        "action": _cube_from_binary(F, M.action, M.dim, n),
        "coaction": _cube_from_cobinary(F, M.coaction, M.dim, n),
    }


def hl_module_to_dict(N: RightHLModule) -> dict:
    F = N.over.field
    return {
        "kind": "hl_module",
        "field": F.descriptor(),
        "dim": N.dim,
        "action": _cube_from_binary(F, N.action, N.dim, N.base.dim),
    }


def _render(obj, depth=0) -> str:
    # one top-level key per line, one innermost row per line
    if isinstance(obj, dict):
        pad = " " * (depth + 1)
        items = [f"{pad}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * depth + "}"
    if isinstance(obj, list) and obj and isinstance(obj[0], list):
        pad = " " * (depth + 1)
        return "[\n" + ",\n".join(pad + _render(x, depth + 1) for x in obj) + "\n" + " " * depth + "]"
    return json.dumps(obj, separators=(", ", ": "))


def dumps(obj) -> str:
    if isinstance(obj, WeakHopfQuasigroup):
        d = structure_to_dict(obj)
    elif isinstance(obj, HopfModule):
        d = hopf_module_to_dict(obj)
    elif isinstance(obj, RightHLModule):
        d = hl_module_to_dict(obj)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return _render(d) + "\n"


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


# --------------------------------------------------------------------------
# decoding


def _scalar(field, s):
    if not isinstance(s, str):
        raise FormatError(f"scalar {s!r} must be a string")
    try:
        return field(s)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"bad scalar {s!r}: {e}") from None


def _shape(obj, shape, what):
    if len(shape) == 0:
        return
    if not isinstance(obj, list) or len(obj) != shape[0]:
        raise FormatError(f"{what}: expected a list of length {shape[0]}")
    for x in obj:
        _shape(x, shape[1:], what)


def _vec_mor(field, v, n, row: bool) -> Mor:
    _shape(v, (n,), "vector")
    vals = [_scalar(field, x) for x in v]
    if row:
        return Mor(1, n, {j: {0: vals[j]} for j in range(n)}, field)
    return Mor(n, 1, {0: dict(enumerate(vals))}, field)


def _mat_mor(field, rows, dst, src, what) -> Mor:
    _shape(rows, (dst, src), what)
    return Mor.from_rows([[_scalar(field, x) for x in r] for r in rows], field, src=src)


def _binary_mor(field, t, n, m, k, what) -> Mor:
    _shape(t, (n, m, k), what)
    cols = {a * m + b: {c: _scalar(field, t[a][b][c]) for c in range(k)}
            for a in range(n) for b in range(m)}
    return Mor(k, n * m, cols, field)


def _cobinary_mor(field, t, c, n, m, what) -> Mor:
    _shape(t, (c, n, m), what)
    cols = {x: {a * m + b: _scalar(field, t[x][a][b]) for a in range(n) for b in range(m)}
            for x in range(c)}
    return Mor(n * m, c, cols, field)


def _header(d, kind):
    if not isinstance(d, dict):
        raise FormatError("top level must be an object")
    if d.get("kind", kind) != kind:
        raise FormatError(f"expected kind {kind!r}, got {d.get('kind')!r}")
    try:
        field = field_from_descriptor(d.get("field", "Q"))
    except (ValueError, TypeError) as e:
        raise FormatError(str(e)) from None
    n = d.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("dim must be a non-negative integer")
    return field, n


def _require(d, *keys):
    for k in keys:
        if k not in d:
            raise FormatError(f"missing key {k!r}")


def structure_from_dict(d: dict, check: bool = False) -> WeakHopfQuasigroup:
    """Decode a structure.  Laws are not checked unless ``check=True``."""
    F, n = _header(d, "whq")
    _require(d, "unit", "mul", "counit", "comul", "antipode")
    try:
        magma = UnitalMagma(n, _vec_mor(F, d["unit"], n, row=False),
                            _binary_mor(F, d["mul"], n, n, n, "mul"), check=False)
        comonoid = Comonoid(n, _vec_mor(F, d["counit"], n, row=True),
                            _cobinary_mor(F, d["comul"], n, n, n, "comul"), check=False)
        lam = _mat_mor(F, d["antipode"], n, n, "antipode")
        c = c_inv = None
        if "braiding" in d:
            b = d["braiding"]
            if not isinstance(b, dict):
                raise FormatError("braiding must be an object")
            _require(b, "c", "c_inv")
            c = _mat_mor(F, b["c"], n * n, n * n, "braiding")
            c_inv = _mat_mor(F, b["c_inv"], n * n, n * n, "braiding inverse")
    except DimensionError as e:
        raise FormatError(str(e)) from None
    try:
        return WeakHopfQuasigroup(magma, comonoid, lam, c, c_inv, check=check)
    except (DimensionError, ValueError) as e:
        raise FormatError(str(e)) from None


def hopf_module_from_dict(d: dict, H: WeakHopfQuasigroup, check: bool = False) -> HopfModule:
    F, m = _header(d, "hopf_module")
    if F != H.field:
        raise FormatError(f"module over {F!r}, structure over {H.field!r}")
    _require(d, "action", "coaction")
    n = H.dim
    phi = _binary_mor(F, d["action"], m, n, m, "action")
    rho = _cobinary_mor(F, d["coaction"], m, m, n, "coaction")
    return HopfModule(H, m, phi, rho, check=check)


def hl_module_from_dict(d: dict, H: WeakHopfQuasigroup, check: bool = False) -> RightHLModule:
    F, m = _header(d, "hl_module")
    if F != H.field:
        raise FormatError(f"module over {F!r}, structure over {H.field!r}")
    _require(d, "action")
    psi = _binary_mor(F, d["action"], m, H.left.dim, m, "action")
    return RightHLModule(H, m, psi, check=check)


def _parse(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None


def loads(text: str, check: bool = False) -> WeakHopfQuasigroup:
    return structure_from_dict(_parse(text), check)


def load(path, check: bool = False) -> WeakHopfQuasigroup:
    return loads(_read(path), check)


def load_module(path, H: WeakHopfQuasigroup, check: bool = False):
    """A Hopf module or a right H_L-module, according to the file's ``kind``."""
    d = _parse(_read(path))
    kind = d.get("kind") if isinstance(d, dict) else None
    if kind == "hopf_module":
        return hopf_module_from_dict(d, H, check)
    if kind == "hl_module":
        return hl_module_from_dict(d, H, check)
    raise FormatError(f"unknown module kind {kind!r}")


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise FormatError(f"cannot read {path}: {e}") from None
