"""JSON round-trips for every object the command line reads or writes.

All scalars travel as exact strings ("3", "-1/2"); every loader validates
shape and content and raises InputError with a usable message, never a
bare KeyError or ValueError.  Dumps are canonical: sorted keys, two-space
indent, trailing newline, so identical objects serialize byte-identically.
"""

import json
from fractions import Fraction

import numpy as np

from .comodules import Comodule
from .errors import InputError
from .exactlin import rational_array, scalar_from_str, scalar_to_str
from .hopf import HopfData
from .lie_deform import (
    GaugeSeries,
    LiePresentation,
    RepAssignment,
    TensorPoly,
    TwistSeries,
)

__all__ = [
    "canonical_dumps",
    "load_json",
    "detect_kind",
    "scalar_from_json",
    "array_to_json",
    "array_from_json",
    "hopf_to_json",
    "hopf_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "group_table_from_json",
    "comodule_to_json",
    "comodule_from_json",
    "lie_to_json",
    "lie_from_json",
    "rep_to_json",
    "rep_from_json",
    "series_to_json",
    "series_from_json",
    "gauge_to_json",
    "gauge_from_json",
    "jf_tables_to_json",
    "jf_tables_from_json",
]


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def scalar_from_json(value, where):
    if isinstance(value, bool):
        raise InputError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return scalar_from_str(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: bad scalar {value!r}: {exc}") from exc
    raise InputError(f"{where}: expected an exact scalar, got {type(value).__name__}")


def array_to_json(arr):
    # iterating an object array yields bare scalars at the last axis
    if getattr(arr, "ndim", 0) == 0:
        return scalar_to_str(arr[()] if hasattr(arr, "ndim") else arr)
    return [array_to_json(sub) for sub in arr]


def array_from_json(data, shape, where):
    def parse(node, dims, path):
        if not dims:
            return scalar_from_json(node, f"{where}{path}")
        if not isinstance(node, list):
            raise InputError(f"{where}{path}: expected a list")
        if dims[0] is not None and len(node) != dims[0]:
            raise InputError(
                f"{where}{path}: expected length {dims[0]}, got {len(node)}"
            )
        return [parse(sub, dims[1:], f"{path}[{i}]") for i, sub in enumerate(node)]

    nested = parse(data, list(shape), "")
    arr = rational_array(nested)
    if any(d is not None for d in shape) and arr.ndim != len(shape):
        raise InputError(f"{where}: ragged array")
    return arr


def _require(data, key, where, kind=None):
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected an object")
    if key not in data:
        raise InputError(f"{where}: missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"{where}.{key}: expected {kind.__name__}")
    return value


def hopf_to_json(h):
    return {
        "kind": "hopf",
        "dim": h.dim,
        "mult": array_to_json(h.mult),
        "unit": array_to_json(h.unit),
        "comult": array_to_json(h.comult),
        "counit": array_to_json(h.counit),
        "antipode": array_to_json(h.antipode),
    }


def hopf_from_json(data, where="hopf"):
    dim = _require(data, "dim", where, int)
    if dim <= 0:
        raise InputError(f"{where}.dim: must be positive")
    return HopfData(
        dim=dim,
        mult=array_from_json(_require(data, "mult", where), (dim, dim, dim), f"{where}.mult"),
        unit=array_from_json(_require(data, "unit", where), (dim,), f"{where}.unit"),
        comult=array_from_json(
            _require(data, "comult", where), (dim, dim, dim), f"{where}.comult"
        ),
        counit=array_from_json(_require(data, "counit", where), (dim,), f"{where}.counit"),
        antipode=array_from_json(
            _require(data, "antipode", where), (dim, dim), f"{where}.antipode"
        ),
    )


def matrix_to_json(m):
    return {"kind": "matrix", "rows": array_to_json(m)}


def matrix_from_json(data, where="matrix"):
    rows = _require(data, "rows", where, list)
    if not rows or not isinstance(rows[0], list) or not rows[0]:
        raise InputError(f"{where}.rows: expected a nonempty matrix")
    return array_from_json(rows, (len(rows), len(rows[0])), f"{where}.rows")


def vector_to_json(v):
    return {"kind": "vector", "entries": array_to_json(v)}


def vector_from_json(data, where="vector"):
    entries = _require(data, "entries", where, list)
    if not entries:
        raise InputError(f"{where}.entries: expected a nonempty vector")
    return array_from_json(entries, (len(entries),), f"{where}.entries")


def group_table_from_json(data, where="group-table"):
    table = _require(data, "table", where, list)
    n = len(table)
    out = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{where}.table[{i}]: expected a row of length {n}")
        for j, entry in enumerate(row):
            if not isinstance(entry, int) or isinstance(entry, bool) or not 0 <= entry < n:
                raise InputError(f"{where}.table[{i}][{j}]: expected an index in 0..{n-1}")
        out.append(list(row))
    return out


def comodule_to_json(v):
    return {"kind": "comodule", "dim": v.dim, "coaction": array_to_json(v.coaction)}


def comodule_from_json(data, hopf_dim, where="comodule"):
    dim = _require(data, "dim", where, int)
    if dim <= 0:
        raise InputError(f"{where}.dim: must be positive")
    coaction = array_from_json(
        _require(data, "coaction", where), (dim, dim, hopf_dim), f"{where}.coaction"
    )
    return Comodule(dim=dim, coaction=coaction)


def lie_to_json(lie):
    return {
        "kind": "lie",
        "dim": lie.dim,
        "bracket": array_to_json(lie.bracket),
        "names": list(lie.names),
        "nilradical": sorted(lie.nilradical),
    }


def lie_from_json(data, where="lie"):
    dim = _require(data, "dim", where, int)
    if dim <= 0:
        raise InputError(f"{where}.dim: must be positive")
    names = _require(data, "names", where, list)
    if len(names) != dim or not all(isinstance(n, str) and n for n in names):
        raise InputError(f"{where}.names: expected {dim} nonempty strings")
    if len(set(names)) != dim:
        raise InputError(f"{where}.names: duplicate generator names")
    flagged = _require(data, "nilradical", where, list)
    for idx in flagged:
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < dim:
            raise InputError(f"{where}.nilradical: bad index {idx!r}")
    bracket = array_from_json(
        _require(data, "bracket", where), (dim, dim, dim), f"{where}.bracket"
    )
    return LiePresentation(
        dim=dim, bracket=bracket, names=tuple(names), nilradical=frozenset(flagged)
    )


def rep_to_json(rep):
    return {
        "kind": "rep",
        "matrices": {
            name: array_to_json(mat) for name, mat in zip(rep.lie.names, rep.mats)
        },
    }


def rep_from_json(data, lie, where="rep"):
    matrices = _require(data, "matrices", where, dict)
    parsed = {}
    for name, rows in matrices.items():
        if not isinstance(rows, list) or not rows:
            raise InputError(f"{where}.matrices.{name}: expected a matrix")
        d = len(rows)
        parsed[name] = array_from_json(rows, (d, d), f"{where}.matrices.{name}")
    return RepAssignment(lie, parsed)


def _word_to_names(lie, word):
    return [lie.names[letter] for letter in word]


def _word_from_names(lie, names, where):
    word = []
    for name in names:
        if not isinstance(name, str) or name not in lie.names:
            raise InputError(f"{where}: unknown generator {name!r}")
        word.append(lie.name_index(name))
    return tuple(word)


def _poly_entries_to_json(lie, pairs):
    return [
        [scalar_to_str(coeff), _word_to_names(lie, word)]
        for word, coeff in sorted(pairs.items())
    ]


def _poly_entries_from_json(lie, entries, where):
    if not isinstance(entries, list):
        raise InputError(f"{where}: expected a list of [coeff, word] pairs")
    out = []
    for t, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2 or not isinstance(pair[1], list):
            raise InputError(f"{where}[{t}]: expected [coeff, [names...]]")
        coeff = scalar_from_json(pair[0], f"{where}[{t}]")
        word = _word_from_names(lie, pair[1], f"{where}[{t}]")
        out.append((word, coeff))
    return out


def series_to_json(series):
    lie = series.lie
    terms = []
    for d in sorted(series.coeffs):
        if d == 0:
            continue
        by_left = {}
        for (left, right), coeff in series.coeffs[d].terms.items():
            by_left.setdefault(left, {})[right] = coeff
        for left in sorted(by_left):
            terms.append(
                {
                    "deg": d,
                    "left": [[scalar_to_str(Fraction(1)), _word_to_names(lie, left)]],
                    "right": _poly_entries_to_json(lie, by_left[left]),
                }
            )
    return {
        "kind": "series",
        "lie": lie_to_json(lie),
        "order": series.order,
        "jf_form": series.jf_form,
        "terms": terms,
    }


def series_from_json(data, where="series", lie=None):
    if lie is None:
        lie = lie_from_json(_require(data, "lie", where), f"{where}.lie")
    order = _require(data, "order", where, int)
    terms = _require(data, "terms", where, list)
    by_degree = {}
    for t, entry in enumerate(terms):
        here = f"{where}.terms[{t}]"
        deg = _require(entry, "deg", here, int)
        lefts = _poly_entries_from_json(lie, _require(entry, "left", here), f"{here}.left")
        rights = _poly_entries_from_json(
            lie, _require(entry, "right", here), f"{here}.right"
        )
        items = [
            ((lw, rw), lc * rc) for lw, lc in lefts for rw, rc in rights
        ]
        poly = TensorPoly.from_terms(lie, 2, items)
        if deg in by_degree:
            poly = by_degree[deg] + poly
        by_degree[deg] = poly
    by_degree[0] = by_degree.get(0, TensorPoly.zero(lie, 2)) + TensorPoly.one(lie, 2)
    jf_form = data.get("jf_form", False)
    if not isinstance(jf_form, bool):
        raise InputError(f"{where}.jf_form: expected a boolean")
    return TwistSeries(lie, order, by_degree, jf_form=jf_form)


def gauge_to_json(gauge):
    lie = gauge.lie
    terms = []
    for d in sorted(gauge.coeffs):
        if d == 0:
            continue
        pairs = {word[0]: coeff for word, coeff in gauge.coeffs[d].terms.items()}
        terms.append({"deg": d, "entries": _poly_entries_to_json(lie, pairs)})
    return {
        "kind": "gauge",
        "lie": lie_to_json(lie),
        "order": gauge.order,
        "terms": terms,
    }


def gauge_from_json(data, where="gauge", lie=None):
    if lie is None:
        lie = lie_from_json(_require(data, "lie", where), f"{where}.lie")
    order = _require(data, "order", where, int)
    terms = _require(data, "terms", where, list)
    by_degree = {0: TensorPoly.one(lie, 1)}
    for t, entry in enumerate(terms):
        here = f"{where}.terms[{t}]"
        deg = _require(entry, "deg", here, int)
        pairs = _poly_entries_from_json(lie, _require(entry, "entries", here), f"{here}.entries")
        poly = TensorPoly.from_terms(lie, 1, [((word,), coeff) for word, coeff in pairs])
        if deg in by_degree:
            poly = by_degree[deg] + poly
        by_degree[deg] = poly
    return GaugeSeries(lie, order, by_degree)


def jf_tables_to_json(tables):
    out = {}
    for n in sorted(tables):
        out[str(n)] = [
            {"perm": list(perm), "split": split, "coeff": scalar_to_str(coeff)}
            for perm, split, coeff in tables[n]
        ]
    return {"kind": "jf-tables", "tables": out}


def jf_tables_from_json(data, where="jf-tables"):
    raw = _require(data, "tables", where, dict)
    tables = {}
    for key, entries in raw.items():
        try:
            n = int(key)
        except ValueError:
            raise InputError(f"{where}.tables: bad degree key {key!r}") from None
        if n < 2 or not isinstance(entries, list):
            raise InputError(f"{where}.tables[{key}]: expected a list for degree >= 2")
        parsed = []
        for t, entry in enumerate(entries):
            here = f"{where}.tables[{key}][{t}]"
            perm = _require(entry, "perm", here, list)
            split = _require(entry, "split", here, int)
            coeff = scalar_from_json(_require(entry, "coeff", here), f"{here}.coeff")
            if not all(isinstance(p, int) and not isinstance(p, bool) for p in perm):
                raise InputError(f"{here}.perm: expected integers")
            parsed.append((list(perm), split, coeff))
        tables[n] = parsed
    return tables


_KIND_KEYS = [
    ("hopf", {"mult", "comult", "unit", "counit", "antipode"}),
    ("lie", {"bracket", "names", "nilradical"}),
    ("rep", {"matrices"}),
    ("series", {"order", "terms"}),
    ("jf-tables", {"tables"}),
    ("comodule", {"coaction"}),
    ("group-table", {"table"}),
    ("matrix", {"rows"}),
    ("vector", {"entries"}),
    ("manifest", {"files"}),
]

_KINDS = {name for name, _ in _KIND_KEYS} | {"gauge"}


def detect_kind(data):
    """Kind of a loaded JSON object, from its tag or its key shape."""
    if not isinstance(data, dict):
        raise InputError("expected a JSON object at top level")
    kind = data.get("kind")
    if kind is not None:
        if kind not in _KINDS:
            raise InputError(f"unknown kind {kind!r}")
        return kind
    for name, keys in _KIND_KEYS:
        if keys <= set(data):
            if name == "series" and any(
                isinstance(t, dict) and "entries" in t for t in data.get("terms", [])
            ):
                return "gauge"
            return name
    raise InputError("cannot tell what this file describes; add a 'kind' tag")
