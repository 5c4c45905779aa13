"""Command-line front end.

Verbs:

    rep build          spin-module matrices
    elliptic K         complete integrals at a modulus
    elliptic eval      sn, cn, dn at a complex argument
    elliptic periods   primitive period table
    deform build       deformed triplet matrices
    deform verify      defining relations, Casimir forms, inverse roundtrip
    hopf delta         one of the coproducts on a tensor product
    hopf verify        coproduct residual report
    auto shift         one discrete symmetry, with its residual report
    rewrite nf         normal-order an expression exactly
    verify-all         the composite residual bundle
    sweep              grid of residual reports (optionally in parallel)

Exit codes: 0 all residuals within tolerance, 1 a residual check failed,
2 usage error, 3 domain error (reported as structured JSON on stderr).

Output is deterministic: floats are emitted with repr-faithful precision,
row order in sweeps follows the cartesian product of the parameter lists,
and sampled checks are seeded.  A config file (key=value lines, # comments)
can provide defaults; explicit flags always win.  The environment variable
ELLIPTIC_SL2_FORMAT picks the default output format only.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import autos, hopf
from .deform import (
    DeformParams,
    build_elliptic_triplet,
    build_jordanian_triplet,
    casimir,
    invert_map,
    relation_residuals,
)
from .elliptic import complete_K, complete_Kprime, jacobi_numeric, periods
from .errors import DomainError
from .liealg import build_spin, frobenius, matrix_to_json
from .rewrite import nf_word, parse_expression
from .version import __version__

DEFAULT_TOL = 1e-9
_FMT = ".17g"


# -- deterministic emitters ----------------------------------------------------


def _fmt_float(x):
    if x != x:
        return "NaN"
    return format(float(x), _FMT)


def _fmt_complex_csv(z):
    z = complex(z)
    return f"{format(z.real, _FMT)}{'+' if z.imag >= 0 else '-'}{format(abs(z.imag), _FMT)}i"


def _emit_json(obj, out, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.write("{}")
            return
        out.write("{\n")
        items = list(obj.items())
        for i, (key, val) in enumerate(items):
            out.write(f'{pad}  "{key}": ')
            _emit_json(val, out, indent + 1)
            out.write(",\n" if i + 1 < len(items) else "\n")
        out.write(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.write("[]")
            return
        flat = all(not isinstance(v, (dict, list, tuple)) for v in obj)
        if flat:
            out.write("[" + ", ".join(_json_scalar(v) for v in obj) + "]")
        else:
            out.write("[\n")
            for i, val in enumerate(obj):
                out.write(pad + "  ")
                _emit_json(val, out, indent + 1)
                out.write(",\n" if i + 1 < len(obj) else "\n")
            out.write(pad + "]")
    else:
        out.write(_json_scalar(obj))


def _json_scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, complex):
        return f"[{_fmt_float(v.real)}, {_fmt_float(v.imag)}]"
    if isinstance(v, float):
        return _fmt_float(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, np.floating):
        return _fmt_float(float(v))
    text = str(v)
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _flatten(prefix, obj, rows):
    if isinstance(obj, dict):
        for key, val in obj.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), val, rows)
    elif isinstance(obj, (list, tuple)):
        for i, val in enumerate(obj):
            _flatten(f"{prefix}[{i}]", val, rows)
    else:
        rows.append((prefix, obj))


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, complex):
        return _fmt_complex_csv(v)
    if isinstance(v, (float, np.floating)):
        return _fmt_float(v)
    return str(v)


def _emit_csv(payload, out):
    writer = csv.writer(out, lineterminator="\n")
    rows = payload.get("rows") if isinstance(payload, dict) else None
    if isinstance(rows, list) and rows and all(isinstance(r, dict) for r in rows):
        header = []
        for row in rows:
            for key in row:
                if key not in header:
                    header.append(key)
        writer.writerow(header)
        for row in rows:
            writer.writerow(_csv_cell(row.get(k)) for k in header)
        return
    flat = []
    _flatten("", payload, flat)
    writer.writerow(["key", "value"])
    for key, val in flat:
        writer.writerow([key, _csv_cell(val)])


def _write_payload(payload, fmt, out_path):
    buf = io.StringIO()
    if fmt == "csv":
        _emit_csv(payload, buf)
    else:
        _emit_json(payload, buf)
        buf.write("\n")
    text = buf.getvalue()
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- argument plumbing ---------------------------------------------------------


def _parse_complex(text):
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError as exc:
        raise DomainError(f"cannot parse complex number {text!r}") from exc


def _parse_float_list(text):
    try:
        return [float(v) for v in text.split(",") if v != ""]
    except ValueError as exc:
        raise DomainError(f"cannot parse number list {text!r}") from exc


def _load_config(path):
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise DomainError(f"{path}:{lineno}: expected key=value")
                key, val = line.split("=", 1)
                values[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise DomainError(f"cannot read config file {path}: {exc}") from exc
    return values


def _apply_config(args, config):
    for key, raw in config.items():
        if not hasattr(args, key):
            continue
        if getattr(args, key) is not None:
            continue  # explicit flag wins
        setattr(args, key, raw)


def _resolve_format(args):
    fmt = getattr(args, "format", None) or os.environ.get("ELLIPTIC_SL2_FORMAT") or "json"
    fmt = str(fmt).lower()
    if fmt not in ("json", "csv"):
        raise DomainError(f"unknown output format {fmt!r}")
    return fmt


def _need(args, name):
    val = getattr(args, name, None)
    if val is None:
        raise DomainError(f"missing required value --{name.replace('_', '-')}")
    return float(val)


_NOT_RESIDUALS = frozenset({
    "cocommutativity_gap",  # informational: the interesting coproducts are non-cocommutative
    "epsilon",              # branch label, not a residual
})


def _residual_values(report):
    for key, val in report.items():
        if key in _NOT_RESIDUALS:
            continue
        if isinstance(val, (int, float)) and not isinstance(val, bool):
            yield key, float(val)


# -- verbs ---------------------------------------------------------------------


def _cmd_rep_build(args):
    rep = build_spin(_need(args, "j"))
    return 0, {
        "j": rep.j,
        "dim": rep.dim,
        "Jp": matrix_to_json(rep.Jp),
        "Jm": matrix_to_json(rep.Jm),
        "J0": matrix_to_json(rep.J0),
    }


def _cmd_elliptic_K(args):
    k = _need(args, "k")
    payload = {"k": k, "K": complete_K(k) if k < 1 else None}
    payload["Kprime"] = complete_Kprime(k) if 0 < k <= 1 else None
    return 0, payload


def _cmd_elliptic_eval(args):
    k = _need(args, "k")
    u = _parse_complex(args.u if args.u is not None else _err_missing("u"))
    sn, cn, dn = jacobi_numeric(u, k)
    return 0, {"u": u, "k": k, "sn": sn, "cn": cn, "dn": dn}


def _err_missing(name):
    raise DomainError(f"missing required value --{name}")


def _cmd_elliptic_periods(args):
    k = _need(args, "k")
    table = periods(k)
    return 0, {"k": k, "periods": {name: list(pair) for name, pair in table.items()}}


def _build_triplet(args):
    j = _need(args, "j")
    h = _need(args, "h")
    rep = build_spin(j)
    if getattr(args, "jordanian", False):
        return build_jordanian_triplet(rep, h)
    k = _need(args, "k")
    return build_elliptic_triplet(rep, DeformParams(h=h, k=k))


def _cmd_deform_build(args):
    t = _build_triplet(args)
    return 0, {
        "j": t.rep.j,
        "h": t.params.h,
        "k": t.params.k,
        "provenance": t.provenance,
        "Xhat": matrix_to_json(t.Xhat),
        "Yhat": matrix_to_json(t.Yhat),
        "J0": matrix_to_json(t.J0),
    }


def _casimir_gaps(t):
    j = t.rep.j
    target = j * (j + 1) * np.eye(t.rep.dim, dtype=complex)
    gaps = {}
    for form in ("classical", "jordanian", "elliptic"):
        c = casimir(t, form)
        gaps[form] = frobenius(c - target) / max(1.0, frobenius(c))
    return gaps


def _cmd_deform_verify(args):
    t = _build_triplet(args)
    tol = float(args.tol if args.tol is not None else DEFAULT_TOL)
    residuals = relation_residuals(t)
    gaps = _casimir_gaps(t)
    jp, jm = invert_map(t)
    roundtrip = max(
        frobenius(jp - t.rep.Jp) / max(1.0, frobenius(t.rep.Jp)),
        frobenius(jm - t.rep.Jm) / max(1.0, frobenius(t.rep.Jm)),
    )
    checks = dict(residuals)
    checks.update({f"casimir_{k}": v for k, v in gaps.items()})
    checks["roundtrip"] = roundtrip
    worst = max(v for _, v in _residual_values(checks))
    ok = worst <= tol
    payload = {
        "j": t.rep.j, "h": t.params.h, "k": t.params.k,
        "provenance": t.provenance, "tol": tol,
        "residuals": residuals,
        "casimir": gaps,
        "roundtrip": roundtrip,
        "worst": worst,
        "pass": ok,
    }
    return (0 if ok else 1), payload


def _hopf_build(args):
    which = args.which
    j1 = _need(args, "j1")
    j2 = _need(args, "j2")
    h = _need(args, "h")
    r1, r2 = build_spin(j1), build_spin(j2)
    if which == "uh":
        return hopf.delta_uh(h, r1, r2)
    k = _need(args, "k")
    params = DeformParams(h=h, k=k)
    if which == "1":
        return hopf.delta1(params, r1, r2)
    if which == "2":
        return hopf.delta2(params, r1, r2)
    raise DomainError(f"unknown coproduct {which!r} (expected 1, uh or 2)")


def _cmd_hopf_delta(args):
    ct = _hopf_build(args)
    return 0, {
        "which": args.which,
        "j1": ct.r1.j, "j2": ct.r2.j,
        "h": ct.params.h, "k": ct.params.k,
        "DX": matrix_to_json(ct.DX),
        "DY": matrix_to_json(ct.DY),
        "DJ0": matrix_to_json(ct.DJ0),
    }


def _cmd_hopf_verify(args):
    ct = _hopf_build(args)
    tol = float(args.tol if args.tol is not None else DEFAULT_TOL)
    report = hopf.verify_coproduct(ct)
    worst = max(v for _, v in _residual_values(report))
    ok = worst <= tol
    payload = {
        "which": args.which,
        "j1": ct.r1.j, "j2": ct.r2.j,
        "h": ct.params.h, "k": ct.params.k,
        "tol": tol,
        "report": report,
        "worst": worst,
        "pass": ok,
    }
    return (0 if ok else 1), payload


def _cmd_auto_shift(args):
    which = args.which
    tol = float(args.tol if args.tol is not None else DEFAULT_TOL)
    j = _need(args, "j")
    h = _need(args, "h")
    rep = build_spin(j)
    if which == "sign":
        t = build_elliptic_triplet(rep, DeformParams(h=h, k=_need(args, "k")))
        image = autos.sign_involution(t)
        report = relation_residuals(image)
        payload = {"which": which, "j": j, "h": h, "k": t.params.k, "report": report}
    elif which == "uh-half":
        t = build_jordanian_triplet(rep, h)
        image = autos.half_period_shift_uh(t)
        report = relation_residuals(image)
        report["highest_weight_gap"] = autos.highest_weight_shift_error(image)
        payload = {"which": which, "j": j, "h": h, "report": report}
    elif which in ("ell-iKp", "ell-2KiKp"):
        k = _need(args, "k")
        t = build_elliptic_triplet(rep, DeformParams(h=h, k=k))
        spec = autos.ELL_IKP if which == "ell-iKp" else autos.ELL_2K_IKP
        image, report = autos.period_shift_elliptic(t, spec)
        symbolic = autos.inversion_symbolic_report(h, k, spec.epsilon)
        report["induced_map_exact"] = symbolic["all_zero"]
        payload = {"which": which, "j": j, "h": h, "k": k,
                   "epsilon": spec.epsilon, "report": report}
        if not symbolic["all_zero"]:
            payload["pass"] = False
            return 1, payload
    else:
        raise DomainError(f"unknown shift {which!r}")
    worst = max(v for _, v in _residual_values(payload["report"]))
    ok = worst <= tol
    payload["worst"] = worst
    payload["pass"] = ok
    return (0 if ok else 1), payload


def _cmd_rewrite_nf(args):
    if args.expr is None:
        raise DomainError("missing required value --expr")
    strategy = args.strategy or "leftmost"
    poly = parse_expression(args.expr)
    if strategy != "leftmost":
        # re-normalize every monomial under the requested scan order
        from .rewrite import NCPoly, _monomial_word
        acc = NCPoly.zero()
        for key, coeff in poly.terms.items():
            acc = acc + nf_word(_monomial_word(key), strategy).scale(coeff)
        poly = acc
    return 0, {"expr": args.expr, "strategy": strategy, "terms": poly.to_terms()}


def _cmd_verify_all(args):
    tol = float(args.tol if args.tol is not None else DEFAULT_TOL)
    h = float(args.h) if args.h is not None else 0.7
    k = float(args.k) if args.k is not None else 0.6
    sections = {}
    worst = 0.0

    for j in (0.5, 1.0, 1.5):
        rep = build_spin(j)
        t = build_elliptic_triplet(rep, DeformParams(h=h, k=k))
        checks = dict(relation_residuals(t))
        checks.update({f"casimir_{kk}": v for kk, v in _casimir_gaps(t).items()})
        sections[f"deform_j{j}"] = checks
    tj = build_jordanian_triplet(build_spin(1.0), h)
    sections["jordanian_j1.0"] = relation_residuals(tj)

    r_half = build_spin(0.5)
    params = DeformParams(h=h, k=k)
    sections["hopf_delta1"] = hopf.verify_coproduct(hopf.delta1(params, r_half, r_half))
    sections["hopf_delta2"] = hopf.verify_coproduct(hopf.delta2(params, r_half, r_half))
    sections["hopf_coassoc_uh"] = hopf.coassociativity_uh(h, r_half, r_half, r_half)

    t1 = build_elliptic_triplet(build_spin(1.0), params)
    _, rep_i = autos.period_shift_elliptic(t1, autos.ELL_IKP)
    _, rep_ii = autos.period_shift_elliptic(t1, autos.ELL_2K_IKP)
    sections["auto_ell_iKp"] = rep_i
    sections["auto_ell_2KiKp"] = rep_ii
    symbolic_ok = True
    for eps in (+1, -1):
        symbolic_ok = symbolic_ok and autos.inversion_symbolic_report(h, k, eps)["all_zero"]

    for name, report in sections.items():
        for _, v in _residual_values(report):
            worst = max(worst, v)
    ok = worst <= tol and symbolic_ok
    payload = {
        "h": h, "k": k, "tol": tol,
        "sections": sections,
        "induced_maps_exact": symbolic_ok,
        "worst": worst,
        "pass": ok,
    }
    return (0 if ok else 1), payload


# -- sweep ---------------------------------------------------------------------


def _sweep_row(task):
    family, j, h, k, tol = task
    row = {"family": family, "j": j, "h": h, "k": k, "status": "ok"}
    try:
        if family == "deform":
            rep = build_spin(j)
            if k == 1.0:
                t = build_jordanian_triplet(rep, h)
            else:
                t = build_elliptic_triplet(rep, DeformParams(h=h, k=k))
            checks = dict(relation_residuals(t))
            checks.update({f"casimir_{kk}": v for kk, v in _casimir_gaps(t).items()})
        elif family == "elliptic":
            scalars = autos.scalar_shift_identities(k, n_samples=25)
            checks = dict(scalars["max_gaps"])
        else:
            raise DomainError(f"unknown sweep family {family!r}")
        worst = max(v for _, v in _residual_values(checks))
        row.update({key: val for key, val in checks.items()
                    if isinstance(val, (int, float)) and not isinstance(val, bool)})
        row["worst"] = worst
        row["pass"] = worst <= tol
    except DomainError as exc:
        row["status"] = "error"
        row["error"] = str(exc)
        row["pass"] = False
    return row


def _cmd_sweep(args):
    tol = float(args.tol if args.tol is not None else DEFAULT_TOL)
    families = [f.strip() for f in (args.families or "deform").split(",") if f.strip()]
    for fam in families:
        if fam not in ("deform", "elliptic"):
            raise DomainError(f"unknown sweep family {fam!r}")
    js = _parse_float_list(args.j) if args.j is not None else [0.5, 1.0]
    hs = _parse_float_list(args.h) if args.h is not None else [0.7]
    ks = _parse_float_list(args.k) if args.k is not None else [0.4, 0.8]
    workers = int(args.workers) if args.workers is not None else 1
    tasks = [(fam, j, h, k, tol)
             for fam, j, h, k in itertools.product(families, js, hs, ks)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, tasks))
    else:
        rows = [_sweep_row(t) for t in tasks]
    ok = all(r.get("pass") for r in rows)
    payload = {"tol": tol, "families": families, "rows": rows, "pass": ok}
    return (0 if ok else 1), payload


# -- wiring --------------------------------------------------------------------


def _add_common(sub, *names):
    if "j" in names:
        sub.add_argument("--j", help="spin label (non-negative half-integer)")
    if "h" in names:
        sub.add_argument("--h", help="deformation scale")
    if "k" in names:
        sub.add_argument("--k", help="elliptic modulus")
    sub.add_argument("--tol", help=f"residual tolerance (default {DEFAULT_TOL})")
    sub.add_argument("--format", choices=("json", "csv"), help="output format")
    sub.add_argument("--out", help="write output to a file instead of stdout")
    sub.add_argument("--config", help="key=value defaults file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="elliptic-sl2",
        description="Elliptic two-parameter deformation of sl(2): build, verify, sweep.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="verb", required=True)

    rep = top.add_parser("rep", help="spin modules").add_subparsers(dest="sub", required=True)
    p = rep.add_parser("build", help="matrices of one spin module")
    _add_common(p, "j")
    p.set_defaults(fn=_cmd_rep_build)

    ell = top.add_parser("elliptic", help="elliptic numerics").add_subparsers(dest="sub", required=True)
    p = ell.add_parser("K", help="complete integrals")
    _add_common(p, "k")
    p.set_defaults(fn=_cmd_elliptic_K)
    p = ell.add_parser("eval", help="sn, cn, dn at a complex point")
    _add_common(p, "k")
    p.add_argument("--u", help="complex argument, e.g. 0.3+0.2i")
    p.set_defaults(fn=_cmd_elliptic_eval)
    p = ell.add_parser("periods", help="primitive period table")
    _add_common(p, "k")
    p.set_defaults(fn=_cmd_elliptic_periods)

    deform = top.add_parser("deform", help="deformed triplets").add_subparsers(dest="sub", required=True)
    p = deform.add_parser("build", help="deformed generator matrices")
    _add_common(p, "j", "h", "k")
    p.add_argument("--jordanian", action="store_true", help="use the k**2 = 1 reduction")
    p.set_defaults(fn=_cmd_deform_build)
    p = deform.add_parser("verify", help="relations, Casimir forms, roundtrip")
    _add_common(p, "j", "h", "k")
    p.add_argument("--jordanian", action="store_true", help="use the k**2 = 1 reduction")
    p.set_defaults(fn=_cmd_deform_verify)

    hp = top.add_parser("hopf", help="coproducts").add_subparsers(dest="sub", required=True)
    for name, fn in (("delta", _cmd_hopf_delta), ("verify", _cmd_hopf_verify)):
        p = hp.add_parser(name, help=f"{name} on a tensor product")
        p.add_argument("--which", required=True, choices=("1", "uh", "2"),
                       help="coproduct family")
        p.add_argument("--j1", help="first spin label")
        p.add_argument("--j2", help="second spin label")
        _add_common(p, "h", "k")
        p.set_defaults(fn=fn)

    auto = top.add_parser("auto", help="discrete symmetries").add_subparsers(dest="sub", required=True)
    p = auto.add_parser("shift", help="apply one symmetry and verify")
    p.add_argument("--which", required=True,
                   choices=("sign", "uh-half", "ell-iKp", "ell-2KiKp"))
    _add_common(p, "j", "h", "k")
    p.set_defaults(fn=_cmd_auto_shift)

    rw = top.add_parser("rewrite", help="exact normal ordering").add_subparsers(dest="sub", required=True)
    p = rw.add_parser("nf", help="normal form of an expression")
    p.add_argument("--expr", help="expression over Jp, Jm, J0, Jpinv")
    p.add_argument("--strategy", choices=("leftmost", "rightmost"))
    _add_common(p)
    p.set_defaults(fn=_cmd_rewrite_nf)

    p = top.add_parser("verify-all", help="composite residual bundle")
    _add_common(p, "h", "k")
    p.set_defaults(fn=_cmd_verify_all)

    p = top.add_parser("sweep", help="grid of residual reports")
    p.add_argument("--families", help="comma list: deform,elliptic")
    p.add_argument("--workers", help="parallel worker processes")
    _add_common(p, "j", "h", "k")
    p.set_defaults(fn=_cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "config", None):
            _apply_config(args, _load_config(args.config))
        fmt = _resolve_format(args)
        code, payload = args.fn(args)
        _write_payload(payload, fmt, getattr(args, "out", None))
        return code
    except DomainError as exc:
        err = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        buf = io.StringIO()
        _emit_json(err, buf)
        buf.write("\n")
        sys.stderr.write(buf.getvalue())
        return 3


if __name__ == "__main__":
    sys.exit(main())
