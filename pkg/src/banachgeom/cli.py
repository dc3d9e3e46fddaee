"""Command-line front end: JSON in, JSON/CSV out, batch sweeps.

Exit codes: 0 success, 2 input error, 3 theorem-suite failure (a witness was
found).  All output is deterministic for a fixed (argv, seed); the default
seed can be overridden with the BANACH_GEOM_SEED environment variable.

Operator wire format (schema "v1"):

    {"p": 3 | 2.5 | "inf" | {"int": 3}, "matrix": [[a, b], [c, d]]}

Matrix entries are JSON numbers or "num/den" strings; strings and integers
stay on the exact rational path, floats do not.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional

from . import __version__
from .errors import DomainError, IsometryMultipleError
from .exact_enum import mt_bound, mt_exact
from .operators import Operator2, daugavet_residual, mt_numeric, operator_norm_numeric
from .orthogonality import bj_orthogonal
from .space_core import INF, Exponent, Vec
from .theorem_verify import SUITE_IDS, random_operator, run_suite, verify_all
from .operators import is_isometry_multiple

SCHEMA = "v1"


class InputError(Exception):
    pass


def _parse_scalar(text: str, field: str):
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        if "." in text or "e" in text.lower():
            return float(text)
        return int(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"field {field!r}: cannot parse scalar {text!r} ({exc})")


def _parse_vector(text: str, field: str) -> Vec:
    parts = [t for t in text.split(",") if t.strip()]
    if not parts:
        raise InputError(f"field {field!r}: empty vector")
    return Vec(tuple(_parse_scalar(t, field) for t in parts))


def _parse_p(raw, field: str = "p") -> Exponent:
    try:
        if isinstance(raw, str):
            if raw.strip().lower() in ("inf", "infinity", "oo"):
                return INF
            if "." in raw:
                return Exponent.real(float(raw))
            return Exponent.integer(int(raw))
        if isinstance(raw, dict):
            if set(raw) != {"int"}:
                raise InputError(f"field {field!r}: expected {{\"int\": q}}")
            return Exponent.integer(int(raw["int"]))
        if isinstance(raw, bool):
            raise InputError(f"field {field!r}: boolean is not an exponent")
        if isinstance(raw, int):
            return Exponent.integer(raw)
        if isinstance(raw, float):
            return INF if math.isinf(raw) else Exponent.real(raw)
    except DomainError as exc:
        raise InputError(f"field {field!r}: {exc}")
    raise InputError(f"field {field!r}: cannot interpret {raw!r}")


def _json_entry(raw, field: str):
    if isinstance(raw, str):
        return _parse_scalar(raw, field)
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise InputError(f"field {field!r}: matrix entries are numbers or 'num/den' strings")
    return raw


def _load_operator_spec(args) -> tuple:
    """(Exponent, Operator2) from --spec (path, inline JSON or '-') or from
    the --p/--matrix flags."""
    if getattr(args, "spec", None):
        raw = args.spec
        if raw == "-":
            text = sys.stdin.read()
        elif raw.lstrip().startswith("{"):
            text = raw
        else:
            try:
                with open(raw, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read spec file: {exc}")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON in operator spec: {exc}")
        if "p" not in doc:
            raise InputError("field 'p': missing")
        if "matrix" not in doc:
            raise InputError("field 'matrix': missing")
        mat = doc["matrix"]
        if (not isinstance(mat, list) or len(mat) != 2
                or any(not isinstance(r, list) or len(r) != 2 for r in mat)):
            raise InputError("field 'matrix': expected a 2x2 array")
        p = _parse_p(doc["p"])
        entries = [_json_entry(mat[i][j], f"matrix[{i}][{j}]") for i in range(2) for j in range(2)]
        return p, Operator2(*entries)
    if getattr(args, "p", None) and getattr(args, "matrix", None):
        p = _parse_p(args.p)
        rows = args.matrix.split(";")
        if len(rows) != 2:
            raise InputError("field 'matrix': expected 'a,b;c,d'")
        r0 = _parse_vector(rows[0], "matrix")
        r1 = _parse_vector(rows[1], "matrix")
        if len(r0) != 2 or len(r1) != 2:
            raise InputError("field 'matrix': expected 'a,b;c,d'")
        return p, Operator2(r0[0], r0[1], r1[0], r1[1])
    raise InputError("provide --spec or both --p and --matrix")


def _p_out(p: Exponent):
    if p.is_inf:
        return "inf"
    if p.is_int:
        return {"int": p.value}
    return p.value


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _points_out(points) -> list:
    return [[float(c) for c in v.coords] for v in points]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_bj_check(args) -> int:
    p = _parse_p(args.p)
    x = _parse_vector(args.x, "x")
    y = _parse_vector(args.y, "y")
    v = bj_orthogonal(x, y, p, tol=args.tol)
    _emit({
        "schema": SCHEMA,
        "p": _p_out(p),
        "orthogonal": v.orthogonal,
        "d_minus": v.deriv.d_minus,
        "d_plus": v.deriv.d_plus,
        "method": v.method,
    }, args)
    return 0


def cmd_op_norm(args) -> int:
    p, T = _load_operator_spec(args)
    norm, pts = operator_norm_numeric(T, p, grid=args.grid, refine_iters=args.refine_iters)
    _emit({
        "schema": SCHEMA,
        "p": _p_out(p),
        "norm": norm,
        "argmax": _points_out(pts),
    }, args)
    return 0


def _attainment_doc(p: Exponent, aset) -> dict:
    doc = {
        "schema": SCHEMA,
        "p": _p_out(p),
        "norm": aset.norm_value,
        "whole_sphere": aset.whole_sphere,
        "points": _points_out(aset.points),
        "certificate": aset.certificate,
    }
    if aset.norm_pow_bounds is not None:
        lo, hi = aset.norm_pow_bounds
        doc["norm_pow_bounds"] = [f"{lo.numerator}/{lo.denominator}",
                                  f"{hi.numerator}/{hi.denominator}"]
    return doc


def cmd_mt_enum(args) -> int:
    p, T = _load_operator_spec(args)
    try:
        aset = mt_exact(T, p)
    except IsometryMultipleError:
        s = is_isometry_multiple(T, p)
        _emit({
            "schema": SCHEMA, "p": _p_out(p), "norm": float(s),
            "whole_sphere": True, "points": [], "certificate": "exact",
        }, args)
        return 0
    doc = _attainment_doc(p, aset)
    doc["bound"] = mt_bound(p)
    _emit(doc, args)
    return 0


def cmd_mt_numeric(args) -> int:
    p, T = _load_operator_spec(args)
    aset = mt_numeric(T, p, tol=args.tol, grid=args.grid, refine_iters=args.refine_iters)
    _emit(_attainment_doc(p, aset), args)
    return 0


def cmd_daugavet(args) -> int:
    p, T = _load_operator_spec(args)
    res = daugavet_residual(T, p)
    _emit({
        "schema": SCHEMA,
        "p": _p_out(p),
        "residual": res,
        "holds": res <= args.tol,
    }, args)
    return 0


def cmd_verify(args) -> int:
    if args.theorem == "all":
        reports = verify_all(trials=args.trials, seed=args.seed)
    else:
        p = _parse_p(args.p) if args.p else None
        reports = run_suite(args.theorem, p, trials=args.trials, seed=args.seed, n=args.n)
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"[{status}] {r.theorem_id}  trials={r.trials}  "
              f"failures={len(r.failures)}  ({r.elapsed:.2f}s)", file=sys.stderr)
    doc = {
        "schema": SCHEMA,
        "seed": args.seed,
        "trials": args.trials,
        "reports": [r.to_dict() for r in reports],
        "passed": all(r.passed for r in reports),
    }
    _emit(doc, args)
    return 0 if doc["passed"] else 3


def cmd_sphere_image(args) -> int:
    p, T = _load_operator_spec(args)
    pf = p.as_float()
    n = args.grid
    rows = []

    def w_of(t: float) -> float:
        if p.is_inf:
            return 1.0
        r = 1.0 - abs(t) ** pf
        return r ** (1.0 / pf) if r > 0 else 0.0

    def add(t: float, z1: float, z2: float) -> None:
        tz = T.apply(Vec((z1, z2)))
        tz1, tz2 = float(tz[0]), float(tz[1])
        if p.is_inf:
            nrm = max(abs(tz1), abs(tz2))
        else:
            nrm = (abs(tz1) ** pf + abs(tz2) ** pf) ** (1.0 / pf)
        rows.append((t, z1, z2, tz1, tz2, nrm))

    ts = [(-1.0 + 2.0 * i / (n - 1)) for i in range(n)]
    for t in ts:                      # right part, bottom to top
        add(t, w_of(t), t)
    for t in reversed(ts):            # top part, right to left
        add(t, t, w_of(t))
    for t in reversed(ts):            # left part, top to bottom
        add(t, -w_of(t), t)
    for t in ts:                      # bottom part, left to right
        add(t, t, -w_of(t))

    lines = ["t,z1,z2,Tz1,Tz2,norm"]
    lines += [",".join(repr(v) for v in row) for row in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_mt_scan(args) -> int:
    try:
        ps = [int(t) for t in args.p_list.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"field 'p-list': {exc}")
    if any(p < 2 for p in ps):
        raise InputError("field 'p-list': exact enumeration needs integer p >= 2")
    from random import Random

    per_p = {}
    csv_rows = ["p,mt_size,count"]
    for p in ps:
        rng = Random(args.seed)
        hist = {}
        for _ in range(args.count):
            T = random_operator(rng, denominator=args.denominator)
            if is_isometry_multiple(T, p) is not None:
                continue
            size = len(mt_exact(T, p).points)
            hist[size] = hist.get(size, 0) + 1
        max_seen = max(hist) if hist else 0
        per_p[str(p)] = {
            "histogram": {str(k): hist[k] for k in sorted(hist)},
            "max_seen": max_seen,
            "bound": mt_bound(p),
            "bound_ok": max_seen <= mt_bound(p),
        }
        for k in sorted(hist):
            csv_rows.append(f"{p},{k},{hist[k]}")
    doc = {
        "schema": SCHEMA,
        "seed": args.seed,
        "count": args.count,
        "denominator": args.denominator,
        "per_p": per_p,
        "all_within_bound": all(v["bound_ok"] for v in per_p.values()),
    }
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(csv_rows) + "\n")
    _emit(doc, args)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get("BANACH_GEOM_SEED", "")
    try:
        return int(raw) if raw else 0
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="banachgeom",
        description="Birkhoff-James orthogonality and operator norm attainment on l_p spaces",
    )
    ap.add_argument("--version", action="version", version=f"banachgeom {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_spec(sp):
        sp.add_argument("--spec", help="operator spec: JSON file path, inline JSON, or '-' for stdin")
        sp.add_argument("--p", help="exponent (used with --matrix)")
        sp.add_argument("--matrix", help="matrix entries 'a,b;c,d' (rationals as num/den)")
        sp.add_argument("--out", help="write JSON here instead of stdout")

    sp = sub.add_parser("bj-check", help="decide x ⊥_B y on l_p^n")
    sp.add_argument("--p", required=True)
    sp.add_argument("--x", required=True, help="comma-separated coordinates")
    sp.add_argument("--y", required=True)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_bj_check)

    sp = sub.add_parser("op-norm", help="numeric operator norm on l_p^2")
    add_spec(sp)
    sp.add_argument("--grid", type=int, default=4096)
    sp.add_argument("--refine-iters", type=int, default=60)
    sp.set_defaults(func=cmd_op_norm)

    sp = sub.add_parser("mt-enum", help="exact M_T enumeration (integer p >= 2, rational entries)")
    add_spec(sp)
    sp.set_defaults(func=cmd_mt_enum)

    sp = sub.add_parser("mt-numeric", help="numeric M_T extraction")
    add_spec(sp)
    sp.add_argument("--tol", type=float, default=1e-8)
    sp.add_argument("--grid", type=int, default=4096)
    sp.add_argument("--refine-iters", type=int, default=60)
    sp.set_defaults(func=cmd_mt_numeric)

    sp = sub.add_parser("daugavet", help="Daugavet residual (1 + ||T||) - ||I + T||")
    add_spec(sp)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.set_defaults(func=cmd_daugavet)

    sp = sub.add_parser("verify", help="run theorem verification suites")
    sp.add_argument("theorem", choices=list(SUITE_IDS) + ["all"])
    sp.add_argument("--p", help="restrict to one exponent")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sphere-image", help="CSV trace of the unit sphere and its image under T")
    add_spec(sp)
    sp.add_argument("--grid", type=int, default=256)
    sp.set_defaults(func=cmd_sphere_image)

    sp = sub.add_parser("mt-scan", help="sweep seeds x p: histogram of |M_T| vs the 2(8p-5) bound")
    sp.add_argument("--p-list", default="2,3,4,5")
    sp.add_argument("--count", type=int, default=200)
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--denominator", type=int, default=32)
    sp.add_argument("--csv", help="also write per-p histogram rows to this CSV file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_mt_scan)

    return ap


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
