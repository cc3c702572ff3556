"""Command-line driver: one subcommand per library operation.

Every invocation prints exactly one JSON report object to stdout and a short
human summary to stderr.  Reports are deterministic: identical inputs give
byte-identical stdout.  Exit status is 0 when every check passed, 1 when a
mathematical check failed (domain errors raised mid-computation become failed
checks carrying the error message), and 2 when an input could not be loaded,
parsed, or understood.

File arguments resolve against the working directory first, then against the
directory named by $COTWIST_FIXTURES.
"""

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import serialize as sz
from .comodules import (
    braiding,
    categorical_dimension,
    central_grouplike_from_splits,
    coefficient_coalgebra,
    sign_split,
    u_action,
    verify_comodule,
)
from .errors import CotwistError, InputError
from .exactlin import matrix_rank, scalar_to_str
from .hopf import (
    algebra_carrier,
    build_group_algebra,
    cocycle_transport,
    convolution_inverse,
    convolve,
    drinfeld_element,
    dualize,
    is_hopf_2cocycle,
    pseudoinvolutivity_check,
    rc_from_central_grouplike,
    rform_rank,
    square_carrier,
    twist,
    twist_rform,
    verify_cotriangular,
    verify_hopf,
    verify_s2_conjugation,
)
from .lie_deform import (
    TwistSeries,
    component_span,
    cybe_residual,
    drinfeld_series,
    evaluate_on_pair,
    exp_twist,
    gauge_transform,
    is_abelian,
    jf_twist,
    jordanian_twist,
    leading_r,
    pbw_normalize,
    r_from_twist,
    radical_index,
    twist_equation_residual,
    unipotency_check,
    verify_lie,
)

__all__ = ["OPERATIONS", "main"]

# Which library operations each command drives.  The coverage test asserts
# that every verification operation is reachable from exactly one command.
OPERATIONS = {
    "verify-hopf": ("verify_hopf",),
    "verify-cotriangular": ("verify_cotriangular",),
    "cocycle-check": ("is_hopf_2cocycle",),
    "twist": ("twist",),
    "twist-rform": ("twist_rform",),
    "drinfeld": ("drinfeld_element", "drinfeld_series", "drinfeld_u_series"),
    "s2-check": ("verify_s2_conjugation",),
    "rc-build": ("rc_from_central_grouplike",),
    "pseudoinvolutivity": ("pseudoinvolutivity_check",),
    "rform-rank": ("rform_rank",),
    "comodule-check": ("verify_comodule",),
    "catdim": ("categorical_dimension",),
    "sign-split": ("sign_split",),
    "central-grouplike": ("central_grouplike_from_splits",),
    "lie-check": ("verify_lie",),
    "pbw": ("pbw_normalize",),
    "cybe": ("cybe_residual",),
    "twist-residual": ("twist_equation_residual",),
    "exp-twist": ("exp_twist",),
    "jordanian": ("jordanian_twist",),
    "jf-twist": ("jf_twist",),
    "eval-pair": ("evaluate_on_pair", "evaluate_tensor", "radical_index"),
    "r-from-twist": ("r_from_twist", "leading_r"),
    "unipotency": ("unipotency_check",),
    "gauge": ("gauge_transform",),
    "span-abelian": ("component_span", "is_abelian"),
    "validate": (),
    "convolve": ("convolve",),
    "conv-inverse": ("convolution_inverse",),
    "group-algebra": ("build_group_algebra",),
    "dualize": ("dualize",),
    "cocycle-transport": ("cocycle_transport", "twist_element_check"),
    "coeff-coalgebra": ("coefficient_coalgebra",),
    "u-action": ("u_action",),
    "braiding": ("braiding",),
}


def _resolve(path):
    if os.path.exists(path):
        return path
    root = os.environ.get("COTWIST_FIXTURES")
    if root and not os.path.isabs(path):
        candidate = os.path.join(root, path)
        if os.path.exists(candidate):
            return candidate
    raise InputError(f"no such file: {path}")


def _scalar(text, flag):
    return sz.scalar_from_json(text, flag)


def _kebab(name):
    out = []
    for ch in name:
        if ch.isupper() and out:
            out.append("-")
        out.append(ch.lower())
    return "".join(out)


class _Run:
    """Input digests and check results collected over one invocation."""

    def __init__(self):
        self.inputs = {}
        self.checks = []

    def data(self, label, path):
        resolved = _resolve(path)
        with open(resolved, "rb") as fh:
            blob = fh.read()
        self.inputs[label] = {
            "path": path,
            "sha256": hashlib.sha256(blob).hexdigest(),
        }
        try:
            return json.loads(blob.decode("utf-8"))
        except json.JSONDecodeError as e:
            raise InputError(
                f"{path}: line {e.lineno} column {e.colno}: {e.msg}"
            ) from None

    def hopf(self, path, label="hopf"):
        return sz.hopf_from_json(self.data(label, path), where=label)

    def matrix(self, path, label):
        return sz.matrix_from_json(self.data(label, path), where=label)

    def vector(self, path, label):
        return sz.vector_from_json(self.data(label, path), where=label)

    def comodule(self, path, hopf_dim, label):
        return sz.comodule_from_json(self.data(label, path), hopf_dim, where=label)

    def lie(self, path, label="lie"):
        return sz.lie_from_json(self.data(label, path), where=label)

    def rep(self, path, lie, label):
        return sz.rep_from_json(self.data(label, path), lie, where=label)

    def series(self, path, label="series"):
        return sz.series_from_json(self.data(label, path), where=label)

    def gauge(self, path, lie, label="gauge"):
        return sz.gauge_from_json(self.data(label, path), where=label, lie=lie)

    def tables(self, path, label="tables"):
        return sz.jf_tables_from_json(self.data(label, path), where=label)

    def group_table(self, path, label="table"):
        return sz.group_table_from_json(self.data(label, path), where=label)

    def check(self, name, passed, witness=None):
        self.checks.append({"name": name, "passed": bool(passed), "witness": witness})

    def extend(self, report, prefix=""):
        for c in report.checks:
            entry = c.to_jsonable()
            if prefix:
                entry["name"] = f"{prefix}:{entry['name']}"
            self.checks.append(entry)


def _matrix_json(m):
    return sz.matrix_to_json(np.asarray(m, dtype=object))


def _poly_json(poly):
    """Tensor polynomial as a sorted [coeff, [word, word, ...]] list."""
    names = poly.lie.names
    out = []
    for key in sorted(poly.terms):
        words = [[names[letter] for letter in word] for word in key]
        out.append([scalar_to_str(poly.terms[key]), words])
    return out


def _matrix_poly_json(mp):
    return {
        "kind": "matrix-poly",
        "coeffs": [sz.array_to_json(c) for c in mp.coeffs],
    }


def _truncate(series, order):
    if order < 0:
        raise InputError("--order: must be nonnegative")
    if order > series.order:
        raise InputError(
            f"--order {order}: series only carries terms through order {series.order}"
        )
    if order == series.order:
        return series
    kept = {d: c for d, c in series.coeffs.items() if d <= order}
    return TwistSeries(series.lie, order, kept, jf_form=series.jf_form)


def _word_from_flag(lie, text):
    word = []
    for name in text.split():
        word.append(lie.name_index(name))
    return tuple(word)


def _subsets_from_flag(text, dim):
    subsets = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            raise InputError("--subsets: empty group")
        indices = []
        for piece in part.split(","):
            piece = piece.strip()
            if not piece.lstrip("-").isdigit():
                raise InputError(f"--subsets: bad index {piece!r}")
            i = int(piece)
            if not 0 <= i < dim:
                raise InputError(f"--subsets: index {i} out of range 0..{dim - 1}")
            indices.append(i)
        subsets.append(tuple(indices))
    return subsets


def _split_from_flag(text):
    path, sep, sign = text.rpartition(":")
    if not sep or sign not in ("+1", "-1"):
        raise InputError(f"--split: expected FILE:+1 or FILE:-1, got {text!r}")
    return path, 1 if sign == "+1" else -1


def _square(m, dim, label):
    if m.shape != (dim, dim):
        raise InputError(f"{label}: expected a {dim}x{dim} matrix, got {m.shape}")
    return m


def _functional(v, dim, label):
    if v.shape != (dim,):
        raise InputError(f"{label}: expected {dim} entries, got {v.shape[0]}")
    return v


# ---------------------------------------------------------------- handlers


def cmd_verify_hopf(run, args):
    run.extend(verify_hopf(run.hopf(args.hopf)))
    return None


def cmd_verify_cotriangular(run, args):
    h = run.hopf(args.hopf)
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    run.extend(verify_cotriangular(h, r))
    return None


def cmd_cocycle_check(run, args):
    h = run.hopf(args.hopf)
    j = _square(run.matrix(args.cocycle, "cocycle"), h.dim, "cocycle")
    run.extend(is_hopf_2cocycle(j, h))
    return None


def cmd_twist(run, args):
    h = run.hopf(args.hopf)
    j = _square(run.matrix(args.cocycle, "cocycle"), h.dim, "cocycle")
    if not args.no_check:
        run.extend(is_hopf_2cocycle(j, h), prefix="cocycle")
    out = twist(h, j, check=False)
    run.extend(verify_hopf(out), prefix="twisted")
    return sz.hopf_to_json(out)


def cmd_twist_rform(run, args):
    h = run.hopf(args.hopf)
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    j = _square(run.matrix(args.cocycle, "cocycle"), h.dim, "cocycle")
    out_r = twist_rform(h, r, j, check=False)
    if not args.no_check:
        twisted = twist(h, j, check=False)
        run.extend(verify_cotriangular(twisted, out_r), prefix="twisted")
    return _matrix_json(out_r)


def cmd_drinfeld(run, args):
    if args.series:
        if args.hopf or args.rform:
            raise InputError(
                "drinfeld: use either HOPF --rform or --series --rep, not both"
            )
        if not args.rep:
            raise InputError("drinfeld: --series needs --rep")
        series = run.series(args.series)
        if args.order is not None:
            series = _truncate(series, args.order)
        rep = run.rep(args.rep, series.lie, "rep")
        h0 = _scalar(args.h, "--h") if args.h is not None else None
        out = drinfeld_series(series, rep, h=h0)
        if h0 is None:
            return _matrix_poly_json(out)
        return _matrix_json(out)
    if not args.hopf or not args.rform:
        raise InputError("drinfeld: needs HOPF --rform, or --series --rep")
    h = run.hopf(args.hopf)
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    return sz.vector_to_json(drinfeld_element(h, r))


def cmd_s2_check(run, args):
    h = run.hopf(args.hopf)
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    run.extend(verify_s2_conjugation(h, r))
    return None


def cmd_rc_build(run, args):
    h = run.hopf(args.hopf)
    c = _functional(run.vector(args.character, "character"), h.dim, "character")
    base = (
        _square(run.matrix(args.base_r, "base-r"), h.dim, "base-r")
        if args.base_r
        else None
    )
    rc = rc_from_central_grouplike(h, c, base_r=base)
    run.extend(verify_cotriangular(h, rc), prefix="cotriangular")
    return _matrix_json(rc)


def cmd_pseudoinvolutivity(run, args):
    h = run.hopf(args.hopf)
    subsets = _subsets_from_flag(args.subsets, h.dim) if args.subsets else None
    run.extend(pseudoinvolutivity_check(h, subsets=subsets))
    return None


def cmd_rform_rank(run, args):
    r = run.matrix(args.rform, "rform")
    if r.ndim != 2 or r.shape[0] != r.shape[1]:
        raise InputError(f"rform: expected a square matrix, got {r.shape}")
    out = rform_rank(r)
    return {"rank": out.rank, "minimal": out.minimal}


def cmd_comodule_check(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    run.extend(verify_comodule(v, h))
    return None


def cmd_catdim(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    value = categorical_dimension(v, h, r)
    run.check("routes-agree", True)
    return {"dimension": scalar_to_str(value)}


def cmd_sign_split(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    split = sign_split(v, drinfeld_element(h, r))
    return {
        "plus": sz.array_to_json(split.projector_plus),
        "minus": sz.array_to_json(split.projector_minus),
        "plus-rank": matrix_rank(split.projector_plus),
        "minus-rank": matrix_rank(split.projector_minus),
    }


def cmd_central_grouplike(run, args):
    h = run.hopf(args.hopf)
    signed = []
    for i, entry in enumerate(args.split):
        path, sign = _split_from_flag(entry)
        v = run.comodule(path, h.dim, f"split-{i}")
        signed.append((v, sign))
    c = central_grouplike_from_splits(h, signed)
    return sz.vector_to_json(c)


def cmd_lie_check(run, args):
    run.extend(verify_lie(run.lie(args.lie)))
    return None


def cmd_pbw(run, args):
    lie = run.lie(args.lie)
    word = _word_from_flag(lie, args.word)
    normalized = pbw_normalize(lie, [(word, 1)])
    entries = [
        [scalar_to_str(coeff), [lie.names[i] for i in w]]
        for w, coeff in sorted(normalized.items())
    ]
    return {"entries": entries}


def cmd_cybe(run, args):
    lie = run.lie(args.lie)
    r = _square(run.matrix(args.r, "r"), lie.dim, "--r")
    residual = cybe_residual(lie, r)
    witness = None
    if residual.terms:
        key = min(residual.terms)
        witness = {
            "term": [[lie.names[i] for i in word] for word in key],
            "coeff": scalar_to_str(residual.terms[key]),
        }
    run.check("cybe-residual-zero", not residual.terms, witness)
    return {"residual": _poly_json(residual)}


def cmd_twist_residual(run, args):
    series = run.series(args.series)
    run.extend(twist_equation_residual(series).report)
    return None


def cmd_exp_twist(run, args):
    lie = run.lie(args.lie)
    r = _square(run.matrix(args.r, "r"), lie.dim, "--r")
    series = exp_twist(lie, r, args.order)
    run.extend(twist_equation_residual(series).report)
    return sz.series_to_json(series)


def cmd_jordanian(run, args):
    lie = run.lie(args.lie) if args.lie else None
    series = jordanian_twist(args.order, lie)
    run.extend(twist_equation_residual(series).report)
    return sz.series_to_json(series)


def cmd_jf_twist(run, args):
    lie = run.lie(args.lie)
    r = _square(run.matrix(args.r, "r"), lie.dim, "--r")
    tables = run.tables(args.tables)
    series = jf_twist(lie, r, tables, args.order)
    run.extend(twist_equation_residual(series).report)
    return sz.series_to_json(series)


def cmd_eval_pair(run, args):
    series = run.series(args.series)
    rep_v = run.rep(args.rep, series.lie, "rep")
    rep_w = run.rep(args.rep2, series.lie, "rep2") if args.rep2 else rep_v
    h0 = _scalar(args.h, "--h") if args.h is not None else None
    out = evaluate_on_pair(series, rep_v, rep_w, h=h0)
    if h0 is not None:
        return _matrix_json(out)
    bound = 2 * max(radical_index(rep_v), radical_index(rep_w)) - 2
    run.check(
        "degree-bound",
        out.degree <= bound,
        None if out.degree <= bound else {"degree": out.degree, "bound": bound},
    )
    result = _matrix_poly_json(out)
    result["degree"] = out.degree
    result["bound"] = bound
    return result


def cmd_r_from_twist(run, args):
    series = run.series(args.series)
    out = r_from_twist(series)
    return {
        "series": sz.series_to_json(out),
        "leading": sz.array_to_json(leading_r(series)),
    }


def cmd_unipotency(run, args):
    series = run.series(args.series)
    rep = run.rep(args.rep, series.lie, "rep")
    out = unipotency_check(series, rep, _scalar(args.h, "--h"))
    run.extend(out.report)
    return {
        "u-index": out.u_index,
        "conjugation-index": out.conjugation_index,
    }


def cmd_gauge(run, args):
    series = run.series(args.series)
    g = run.gauge(args.gauge, series.lie)
    out = gauge_transform(series, g)
    run.extend(twist_equation_residual(out).report)
    return sz.series_to_json(out)


def cmd_span_abelian(run, args):
    lie = run.lie(args.lie)
    r = _square(run.matrix(args.r, "r"), lie.dim, "--r")
    span = component_span(lie, r)
    return {
        "dim": len(span),
        "span": sz.array_to_json(span),
        "abelian": is_abelian(lie, span),
    }


def cmd_convolve(run, args):
    h = run.hopf(args.hopf)
    carrier = square_carrier(h) if args.square else algebra_carrier(h)
    f = run.vector(args.f, "f")
    g = run.vector(args.g, "g")
    for label, vec in (("f", f), ("g", g)):
        if vec.shape[0] != carrier.dim:
            raise InputError(
                f"--{label}: length {vec.shape[0]} does not match "
                f"carrier dimension {carrier.dim}"
            )
    return sz.vector_to_json(convolve(f, g, carrier))


def cmd_conv_inverse(run, args):
    h = run.hopf(args.hopf)
    carrier = square_carrier(h) if args.square else algebra_carrier(h)
    f = run.vector(args.f, "f")
    if f.shape[0] != carrier.dim:
        raise InputError(
            f"--f: length {f.shape[0]} does not match carrier dimension {carrier.dim}"
        )
    return sz.vector_to_json(convolution_inverse(f, carrier))


def cmd_group_algebra(run, args):
    table = run.group_table(args.table)
    return sz.hopf_to_json(build_group_algebra(table))


def cmd_dualize(run, args):
    return sz.hopf_to_json(dualize(run.hopf(args.hopf)))


def cmd_cocycle_transport(run, args):
    h = run.hopf(args.hopf)
    t = _square(run.matrix(args.element, "element"), h.dim, "element")
    out = cocycle_transport(t, h)
    run.extend(out.cocycle_report, prefix="cocycle")
    run.extend(out.twist_report, prefix="twist")
    run.check("readings-agree", out.agree)
    return _matrix_json(out.pair_form)


def cmd_coeff_coalgebra(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    out = coefficient_coalgebra(v, h)
    run.extend(out.report)
    return {"dim": out.dim, "basis": sz.array_to_json(out.basis)}


def cmd_u_action(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    mat = u_action(v, drinfeld_element(h, r))
    return {
        "matrix": sz.array_to_json(mat),
        "trace": scalar_to_str(np.trace(mat)),
    }


def cmd_braiding(run, args):
    h = run.hopf(args.hopf)
    v = run.comodule(args.comodule, h.dim, "comodule")
    w = run.comodule(args.comodule2, h.dim, "comodule2")
    r = _square(run.matrix(args.rform, "rform"), h.dim, "rform")
    c_vw = braiding(v, w, h, r)
    c_wv = braiding(w, v, h, r)
    product = c_wv @ c_vw
    identity = np.asarray(np.eye(product.shape[0], dtype=int), dtype=object)
    mismatch = None
    if not np.array_equal(product, identity):
        bad = next(
            idx for idx in np.ndindex(*product.shape) if product[idx] != identity[idx]
        )
        mismatch = {
            "indices": list(bad),
            "lhs": scalar_to_str(product[bad]),
            "rhs": scalar_to_str(identity[bad]),
        }
    run.check("symmetric-inverse", mismatch is None, mismatch)
    return _matrix_json(c_vw)


def cmd_validate(run, args):
    data = run.data("file", args.file)
    kind = sz.detect_kind(data)
    run.check("parses", True)
    result = {"detected-kind": kind}
    if kind == "hopf":
        run.extend(verify_hopf(sz.hopf_from_json(data)))
    elif kind == "lie":
        run.extend(verify_lie(sz.lie_from_json(data)))
    elif kind == "group-table":
        build_group_algebra(sz.group_table_from_json(data))
        run.check("group-axioms", True)
    elif kind == "comodule":
        if args.hopf:
            h = run.hopf(args.hopf)
            v = sz.comodule_from_json(data, h.dim)
            run.extend(verify_comodule(v, h))
        else:
            coaction = data.get("coaction")
            try:
                hopf_dim = len(coaction[0][0])
            except (TypeError, IndexError):
                raise InputError("comodule.coaction: expected a 3-axis array") from None
            sz.comodule_from_json(data, hopf_dim)
            run.check("schema", True)
    elif kind == "rep":
        if args.lie:
            sz.rep_from_json(data, run.lie(args.lie))
        else:
            for name, rows in data.get("matrices", {}).items():
                sz.matrix_from_json({"rows": rows}, where=f"rep.matrices.{name}")
        run.check("schema", True)
    elif kind == "series":
        sz.series_from_json(data)
        run.check("schema", True)
    elif kind == "gauge":
        sz.gauge_from_json(data)
        run.check("schema", True)
    elif kind == "jf-tables":
        sz.jf_tables_from_json(data)
        run.check("schema", True)
    elif kind == "matrix":
        sz.matrix_from_json(data)
        run.check("schema", True)
    elif kind == "vector":
        sz.vector_from_json(data)
        run.check("schema", True)
    elif kind == "manifest":
        files = data.get("files")
        if not isinstance(files, dict):
            raise InputError("manifest.files: expected an object")
        base = os.path.dirname(_resolve(args.file))
        for name in sorted(files):
            target = os.path.join(base, name)
            if not os.path.exists(target):
                run.check(f"digest:{name}", False, {"error": "file missing"})
                continue
            with open(target, "rb") as fh:
                actual = hashlib.sha256(fh.read()).hexdigest()
            ok = actual == files[name]
            witness = None if ok else {"expected": files[name], "actual": actual}
            run.check(f"digest:{name}", ok, witness)
    return result


_HANDLERS = {
    "verify-hopf": cmd_verify_hopf,
    "verify-cotriangular": cmd_verify_cotriangular,
    "cocycle-check": cmd_cocycle_check,
    "twist": cmd_twist,
    "twist-rform": cmd_twist_rform,
    "drinfeld": cmd_drinfeld,
    "s2-check": cmd_s2_check,
    "rc-build": cmd_rc_build,
    "pseudoinvolutivity": cmd_pseudoinvolutivity,
    "rform-rank": cmd_rform_rank,
    "comodule-check": cmd_comodule_check,
    "catdim": cmd_catdim,
    "sign-split": cmd_sign_split,
    "central-grouplike": cmd_central_grouplike,
    "lie-check": cmd_lie_check,
    "pbw": cmd_pbw,
    "cybe": cmd_cybe,
    "twist-residual": cmd_twist_residual,
    "exp-twist": cmd_exp_twist,
    "jordanian": cmd_jordanian,
    "jf-twist": cmd_jf_twist,
    "eval-pair": cmd_eval_pair,
    "r-from-twist": cmd_r_from_twist,
    "unipotency": cmd_unipotency,
    "gauge": cmd_gauge,
    "span-abelian": cmd_span_abelian,
    "validate": cmd_validate,
    "convolve": cmd_convolve,
    "conv-inverse": cmd_conv_inverse,
    "group-algebra": cmd_group_algebra,
    "dualize": cmd_dualize,
    "cocycle-transport": cmd_cocycle_transport,
    "coeff-coalgebra": cmd_coeff_coalgebra,
    "u-action": cmd_u_action,
    "braiding": cmd_braiding,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cotwist",
        description="Exact verification of Hopf algebra twists, cotriangular "
        "structures, and truncated deformation series.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, text):
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("--out", metavar="FILE", help="also write the result payload to FILE")
        return p

    p = cmd("verify-hopf", "check every Hopf axiom of a structure-constant algebra")
    p.add_argument("hopf", help="Hopf algebra JSON file")

    p = cmd("verify-cotriangular", "check the cotriangularity axioms of a bilinear form")
    p.add_argument("hopf")
    p.add_argument("--rform", required=True, metavar="FILE")

    p = cmd("cocycle-check", "brute-force the 2-cocycle identity of a bilinear form")
    p.add_argument("hopf")
    p.add_argument("--cocycle", required=True, metavar="FILE")

    p = cmd("twist", "twist the multiplication and antipode by a 2-cocycle")
    p.add_argument("hopf")
    p.add_argument("--cocycle", required=True, metavar="FILE")
    p.add_argument("--no-check", action="store_true", help="skip the cocycle precheck")

    p = cmd("twist-rform", "transport a cotriangular form along a 2-cocycle twist")
    p.add_argument("hopf")
    p.add_argument("--rform", required=True, metavar="FILE")
    p.add_argument("--cocycle", required=True, metavar="FILE")
    p.add_argument("--no-check", action="store_true", help="skip cotriangularity of the output")

    p = cmd("drinfeld", "Drinfeld element: functional route (HOPF --rform) or series route (--series --rep)")
    p.add_argument("hopf", nargs="?")
    p.add_argument("--rform", metavar="FILE")
    p.add_argument("--series", metavar="FILE")
    p.add_argument("--rep", metavar="FILE")
    p.add_argument("--order", type=int, metavar="N", help="truncate the series first")
    p.add_argument("--h", metavar="P/Q", help="substitute a rational value for h")

    p = cmd("s2-check", "check that the square of the antipode is conjugation by the Drinfeld element")
    p.add_argument("hopf")
    p.add_argument("--rform", required=True, metavar="FILE")

    p = cmd("rc-build", "build the sign-twisted cotriangular form of a central grouplike character")
    p.add_argument("hopf")
    p.add_argument("--character", required=True, metavar="FILE")
    p.add_argument("--base-r", metavar="FILE", help="convolve onto this form instead of the canonical one")

    p = cmd("pseudoinvolutivity", "trace condition tr(S^2) = dim on subcoalgebras")
    p.add_argument("hopf")
    p.add_argument("--subsets", metavar="SPEC", help="basis index groups, e.g. '0,1;2,3'")

    p = cmd("rform-rank", "rank of a bilinear form and minimality among its convolution class")
    p.add_argument("rform", help="matrix JSON file")

    p = cmd("comodule-check", "check the coaction axioms of a comodule")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")

    p = cmd("catdim", "categorical dimension of a comodule, both routes compared")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")
    p.add_argument("--rform", required=True, metavar="FILE")

    p = cmd("sign-split", "split a comodule into the +1 and -1 eigenspaces of the Drinfeld action")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")
    p.add_argument("--rform", required=True, metavar="FILE")

    p = cmd("central-grouplike", "solve for a central grouplike character from signed comodules")
    p.add_argument("hopf")
    p.add_argument(
        "--split",
        action="append",
        required=True,
        metavar="FILE:SIGN",
        help="comodule file with its demanded sign, e.g. sgn.json:-1 (repeatable)",
    )

    p = cmd("lie-check", "check antisymmetry, Jacobi, and the flagged nilpotent ideal")
    p.add_argument("lie")

    p = cmd("pbw", "normal-order a word in the enveloping algebra")
    p.add_argument("lie")
    p.add_argument("--word", required=True, metavar="NAMES", help="generator names separated by spaces")

    p = cmd("cybe", "classical Yang-Baxter residual of an r-matrix")
    p.add_argument("lie")
    p.add_argument("--r", required=True, metavar="FILE")

    p = cmd("twist-residual", "per-degree residual of the twist equation")
    p.add_argument("--series", required=True, metavar="FILE")

    p = cmd("exp-twist", "exponential twist of an antisymmetric r-matrix with abelian span")
    p.add_argument("lie")
    p.add_argument("--r", required=True, metavar="FILE")
    p.add_argument("--order", required=True, type=int, metavar="N")

    p = cmd("jordanian", "the Jordanian twist over the nonabelian two-dimensional Lie algebra")
    p.add_argument("--order", required=True, type=int, metavar="N")
    p.add_argument("--lie", metavar="FILE", help="override the built-in presentation")

    p = cmd("jf-twist", "twist series from explicit per-degree coefficient tables")
    p.add_argument("lie")
    p.add_argument("--r", required=True, metavar="FILE")
    p.add_argument("--tables", required=True, metavar="FILE")
    p.add_argument("--order", required=True, type=int, metavar="N")

    p = cmd("eval-pair", "evaluate a twist series on a pair of representations")
    p.add_argument("--series", required=True, metavar="FILE")
    p.add_argument("--rep", required=True, metavar="FILE")
    p.add_argument("--rep2", metavar="FILE", help="second representation (defaults to --rep)")
    p.add_argument("--h", metavar="P/Q")

    p = cmd("r-from-twist", "triangular R-series of a twist, with its leading r-matrix")
    p.add_argument("--series", required=True, metavar="FILE")

    p = cmd("unipotency", "check unipotency of the Drinfeld action and its conjugation at a rational h")
    p.add_argument("--series", required=True, metavar="FILE")
    p.add_argument("--rep", required=True, metavar="FILE")
    p.add_argument("--h", required=True, metavar="P/Q")

    p = cmd("gauge", "gauge-transform a twist series")
    p.add_argument("--series", required=True, metavar="FILE")
    p.add_argument("--gauge", required=True, metavar="FILE")

    p = cmd("span-abelian", "span of the tensor components of an r-matrix and its abelianness")
    p.add_argument("lie")
    p.add_argument("--r", required=True, metavar="FILE")

    p = cmd("validate", "parse a JSON file and run the invariants of its detected kind")
    p.add_argument("file")
    p.add_argument("--hopf", metavar="FILE", help="ambient Hopf algebra for comodule files")
    p.add_argument("--lie", metavar="FILE", help="ambient Lie algebra for rep files")

    p = cmd("convolve", "convolution product of two functionals")
    p.add_argument("hopf")
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("--g", required=True, metavar="FILE")
    p.add_argument("--square", action="store_true", help="functionals on the tensor square")

    p = cmd("conv-inverse", "convolution inverse of a functional")
    p.add_argument("hopf")
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("--square", action="store_true")

    p = cmd("group-algebra", "group algebra of a multiplication table")
    p.add_argument("table", help="group table JSON file")

    p = cmd("dualize", "dual Hopf algebra")
    p.add_argument("hopf")

    p = cmd("cocycle-transport", "read one matrix both ways: cocycle on the dual, twist element upstairs")
    p.add_argument("hopf")
    p.add_argument("--element", required=True, metavar="FILE", help="element of the tensor square, as a matrix")

    p = cmd("coeff-coalgebra", "coefficient coalgebra spanned by a comodule")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")

    p = cmd("u-action", "action of the Drinfeld element on a comodule")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")
    p.add_argument("--rform", required=True, metavar="FILE")

    p = cmd("braiding", "braiding matrix of two comodules, checked against its reverse")
    p.add_argument("hopf")
    p.add_argument("--comodule", required=True, metavar="FILE")
    p.add_argument("--comodule2", required=True, metavar="FILE")
    p.add_argument("--rform", required=True, metavar="FILE")

    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    run = _Run()
    started = time.perf_counter()
    result = None
    try:
        result = _HANDLERS[args.command](run, args)
    except InputError as e:
        print(f"cotwist {args.command}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"cotwist {args.command}: error: {e}", file=sys.stderr)
        return 2
    except CotwistError as e:
        run.check(_kebab(type(e).__name__), False, {"error": str(e)})
    passed = all(c["passed"] for c in run.checks)
    report = {
        "kind": "run-report",
        "command": args.command,
        "inputs": run.inputs,
        "checks": run.checks,
        "passed": passed,
    }
    if result is not None:
        report["result"] = result
    sys.stdout.write(sz.canonical_dumps(report) + "\n")
    elapsed = time.perf_counter() - started
    n_fail = sum(not c["passed"] for c in run.checks)
    if passed:
        summary = f"{len(run.checks)} checks passed" if run.checks else "done"
    else:
        summary = f"{n_fail} of {len(run.checks)} checks FAILED"
    print(f"cotwist {args.command}: {summary} [{elapsed:.3f}s]", file=sys.stderr)
    for c in run.checks:
        if not c["passed"]:
            print(f"  FAIL {c['name']}", file=sys.stderr)
    if args.out:
        if result is None:
            print(f"  --out skipped: {args.command} has no result payload", file=sys.stderr)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(sz.canonical_dumps(result) + "\n")
    return 0 if passed else 1
