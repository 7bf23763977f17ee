"""Command-line surface: evaluation tables, verification suites, plot data.

Complex flags use a+bi without spaces; CSV splits complex values into
_re/_im columns.  Exit codes: 0 success, 1 verify failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional

import numpy as np

from .analysis import decay_slope, extract_limit, zero_probe
from .characters import (DirichletCharacter, builtin_characters,
                         character_from_dict, eval_Pq, eval_Tq,
                         exceptional_set, gauss_sum)
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import EfetZetaError
from .interp import (InterpParams, F_ksv, delta, f_ksv, g_series,
                     g_via_identity, node_value, recurrence_F)
from .lfunc import Fstar, L_value, LInterpParams, node_value_sq, phi_sq
from .numerics import complex_gamma
from .special import PhiArgs, dirichlet_beta, lerch_phi, riemann_zeta


def parse_complex(text: str) -> complex:
    """a+bi / a-bi, no spaces; plain reals also accepted."""
    cleaned = text.strip().replace("I", "i")
    if " " in cleaned:
        raise ValueError(f"no spaces allowed in complex literal {text!r}")
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError as exc:
        raise ValueError(f"cannot parse complex literal {text!r}") from exc


def parse_v(text: str) -> float:
    """Rational a/b or decimal."""
    if "/" in text:
        frac = Fraction(text)
        return frac.numerator / frac.denominator
    return float(text)


def _load_character(path: str) -> DirichletCharacter:
    with open(path) as fh:
        return character_from_dict(json.load(fh))


def _builtin_chi(q: int) -> DirichletCharacter:
    table = builtin_characters()
    for key in (f"chi_{q}", f"chi_{q}_1"):
        if key in table:
            return table[key]
    raise KeyError(f"no built-in character of modulus {q}")


def _emit(rows: list[dict], fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        payload = json.dumps([_jsonable(r) for r in rows], indent=2)
    else:
        buf = io.StringIO()
        cols = []
        for key, val in rows[0].items():
            if isinstance(val, complex):
                cols += [key + "_re", key + "_im"]
            else:
                cols.append(key)
        writer = csv.DictWriter(buf, fieldnames=cols)
        writer.writeheader()
        for r in rows:
            flat = {}
            for key, val in r.items():
                if isinstance(val, complex):
                    flat[key + "_re"] = repr(float(val.real))
                    flat[key + "_im"] = repr(float(val.imag))
                elif isinstance(val, (float, np.floating)):
                    flat[key] = repr(float(val))
                else:
                    flat[key] = val
            writer.writerow(flat)
        payload = buf.getvalue()
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    return obj


def _grid(args) -> list[float]:
    if args.y is not None:
        return [args.y]
    if args.count < 1:
        raise ValueError("grid count must be >= 1")
    if args.count == 1:
        return [args.ymin]
    return [float(x) for x in np.linspace(args.ymin, args.ymax, args.count)]


# ---------------------------------------------------------------- commands


def cmd_eval(args, config: EvalConfig) -> int:
    target = args.target
    if target in ("phi", "zeta", "beta", "lfunc"):
        s = parse_complex(args.s)
        if target == "phi":
            pa = PhiArgs(-1 if args.k == 1 else 1, s, parse_v(args.v))
            rows = [{"s": s, "value": lerch_phi(pa, config)}]
        elif target == "zeta":
            rows = [{"s": s, "value": riemann_zeta(s, config)}]
        elif target == "beta":
            rows = [{"s": s, "value": dirichlet_beta(s, config)}]
        else:
            chi = _load_character(args.char) if args.char \
                else _builtin_chi(args.q)
            rows = [{"s": s, "value": L_value(s, chi, config)}]
        _emit(rows, args.format, args.out)
        return 0

    s = parse_complex(args.s)
    params = InterpParams(args.k, s, parse_v(args.v))
    rows = []
    for y in _grid(args):
        row = {"y": y, "f": f_ksv(params, y)}
        if target in ("g", "delta"):
            row["g_identity"] = g_via_identity(params, y, config)
        if target == "delta":
            row["delta"] = delta(params, y, config)
            div = math.sin(y + math.pi * args.k / 2.0)
            row["D"] = row["delta"] / div if abs(div) > 1e-12 else float("nan")
        rows.append(row)
    _emit(rows, args.format, args.out)
    return 0


def cmd_limit(args, config: EvalConfig) -> int:
    params = _interp_or_l(args)
    est, err = extract_limit(params, y_max=args.ymax, config=config)
    report = {"estimate": _jsonable(est), "error_estimate": err,
              "y_max": args.ymax}
    if isinstance(params, InterpParams):
        gamma = complex_gamma(params.s, config)
        report["normalized"] = _jsonable(est / gamma)
    else:
        norm = params.q ** complex(params.s) * complex_gamma(params.s, config)
        report["normalized"] = _jsonable(est / norm)
    _write_json(report, args.out)
    return 0


def cmd_zero_probe(args, config: EvalConfig) -> int:
    params = _interp_or_l(args)
    rep = zero_probe(params, p=args.p, y_max=args.ymax, config=config)
    _write_json(rep.to_dict(), args.out)
    return 0


def cmd_plotdata(args, config: EvalConfig) -> int:
    params = _interp_or_l(args)
    if args.count < 1:
        raise ValueError("grid count must be >= 1")
    if isinstance(params, InterpParams):
        pa = PhiArgs(-1 if params.k == 1 else 1, params.s, params.v)
        target = complex_gamma(params.s, config) * lerch_phi(pa, config)
        k = params.k
    else:
        target = params.q ** complex(params.s) \
            * complex_gamma(params.s, config) \
            * L_value(params.s, params.chi, config)
        k = 0
    rows = []
    for y in np.linspace(args.ymin, args.ymax, args.count):
        div = math.sin(y + math.pi * k / 2.0)
        if abs(div) < 0.5:
            continue
        d = F_ksv(params, y, config) if isinstance(params, InterpParams) \
            else Fstar(params, y, config)
        rows.append({"y": float(y), "D_re": d.real, "D_im": d.imag,
                     "abs_err": abs(d - target)})
    if not rows:
        raise ValueError("empty masked grid; widen the y range")
    _emit(rows, args.format, args.out)
    return 0


def cmd_char(args, config: EvalConfig) -> int:
    chi = _load_character(args.char) if args.char \
        else _builtin_chi(args.q)
    if args.action == "gauss":
        tau = gauss_sum(chi)
        _write_json({"q": chi.q, "gauss_sum": _jsonable(tau),
                     "magnitude": abs(tau), "sqrt_q": math.sqrt(chi.q)},
                    args.out)
    elif args.action == "eset":
        es = exceptional_set(chi, args.nmax)
        _write_json({"q": chi.q, "n_max": args.nmax,
                     "members": es.sorted()}, args.out)
    else:  # pq
        rows = [{"y": float(y), "P": eval_Pq(chi, float(y)),
                 "T": eval_Tq(chi, float(y))}
                for y in np.linspace(args.ymin, args.ymax, args.count)]
        _emit(rows, args.format, args.out)
    return 0


def _interp_or_l(args):
    s = parse_complex(args.s)
    if args.q is not None or args.char is not None:
        chi = _load_character(args.char) if args.char \
            else _builtin_chi(args.q)
        return LInterpParams(s, chi)
    return InterpParams(args.k, s, parse_v(args.v))


def _write_json(obj, out: Optional[str]) -> None:
    payload = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


# ---------------------------------------------------------------- verify


def verify_nodes(config: EvalConfig = DEFAULT_CONFIG,
                 chars: Optional[dict] = None) -> dict:
    failures, cases = [], 0
    grid = [(0, 1.5, 1.0), (0, 2.5, 0.5), (1, 1.5, 0.5), (1, 0.5 + 3j, 1.0)]
    for k, s, v in grid:
        params = InterpParams(k, s, v)
        for n in range(-4, 5):
            cases += 1
            nv = node_value(params, n)
            fv = f_ksv(params, params.node(n))
            if abs(nv - fv) > 1e-9 * (1.0 + abs(fv)):
                failures.append({"case": [k, str(s), v, n],
                                 "residual": abs(nv - fv)})
    chars = chars or builtin_characters()
    for name in ("chi_3", "chi_4"):
        p = LInterpParams(1.5, chars[name])
        for n in range(-4, 5):
            if n == 0:
                continue
            cases += 1
            nv = node_value_sq(p, n)
            fv = phi_sq(p, math.pi * n)
            if abs(nv - fv) > 1e-9 * (1.0 + abs(fv)):
                failures.append({"case": [name, n], "residual": abs(nv - fv)})
    return {"suite": "nodes", "cases": cases, "failures": failures}


def verify_recurrence(config: EvalConfig = DEFAULT_CONFIG) -> dict:
    failures, cases = [], 0
    for k, s, m in [(1, 4.5, 2), (0, 3.5, 1)]:
        params = InterpParams(k, s, 1.0)
        for y in (3.3, 7.9, 15.1):
            cases += 1
            direct = F_ksv(params, y, config)
            rebuilt = recurrence_F(params, y, m, config)
            rel = abs(direct - rebuilt) / abs(direct)
            if rel > 1e-8:
                failures.append({"case": [k, s, m, y], "rel": rel})
    return {"suite": "recurrence", "cases": cases, "failures": failures}


def verify_identities(config: EvalConfig = DEFAULT_CONFIG,
                      chars: Optional[dict] = None) -> dict:
    failures, cases = [], 0
    rng = np.random.default_rng(7)
    for _ in range(10):
        s = complex(1.6 + 2.0 * rng.random(), 4.0 * rng.random() - 2.0)
        cases += 1
        lhs = riemann_zeta(s, config)
        rhs = lerch_phi(PhiArgs(1, s, 0.5), config) / (2.0 ** s - 1.0)
        if abs(lhs - rhs) / abs(lhs) > 1e-10:
            failures.append({"identity": "half-shift", "s": str(s)})
        cases += 1
        rhs = lerch_phi(PhiArgs(-1, s, 1.0), config) \
            / (1.0 - 2.0 ** (1.0 - s))
        if abs(lhs - rhs) / abs(lhs) > 1e-10:
            failures.append({"identity": "alternating", "s": str(s)})
        cases += 1
        lhs_b = dirichlet_beta(s, config)
        rhs_b = 2.0 ** (-s) * lerch_phi(PhiArgs(-1, s, 0.5), config)
        if abs(lhs_b - rhs_b) / abs(lhs_b) > 1e-10:
            failures.append({"identity": "beta", "s": str(s)})
    chars = chars or builtin_characters()
    for name, chi in chars.items():
        if chi.q == 1:
            continue
        for y in (0.7, 1.9, 3.1):
            cases += 1
            lhs = eval_Pq(chi, y) * eval_Tq(chi, y)
            rhs = (2.0 / 1j) * math.sin(chi.q * y / 2.0)
            if abs(lhs - rhs) > 1e-10 * (1.0 + abs(rhs)):
                failures.append({"identity": "T*P", "char": name, "y": y})
    return {"suite": "identities", "cases": cases, "failures": failures}


def verify_gauss(config: EvalConfig = DEFAULT_CONFIG,
                 chars: Optional[dict] = None) -> dict:
    failures, cases = [], 0
    chars = chars or builtin_characters()
    for name, chi in chars.items():
        if chi.q == 1 or chi.is_principal:
            continue
        cases += 1
        mag = abs(gauss_sum(chi))
        if abs(mag - math.sqrt(chi.q)) > 1e-11:
            failures.append({"char": name, "magnitude": mag})
    return {"suite": "gauss", "cases": cases, "failures": failures}


def verify_limits(config: EvalConfig = DEFAULT_CONFIG) -> dict:
    failures, cases = [], 0
    targets = [
        (InterpParams(1, 1.5, 1.0),
         complex_gamma(1.5) * (1.0 - 2.0 ** -0.5) * riemann_zeta(1.5)),
        (InterpParams(1, 1.5, 0.5),
         complex_gamma(1.5) * 2.0 ** 1.5 * dirichlet_beta(1.5)),
        (LInterpParams(0.7, builtin_characters()["chi_3"]),
         3.0 ** 0.7 * complex_gamma(0.7)
         * L_value(0.7, builtin_characters()["chi_3"])),
    ]
    for params, tgt in targets:
        cases += 1
        est, _ = extract_limit(params, config=config)
        rel = abs(est - tgt) / abs(tgt)
        if rel > 1e-6:
            failures.append({"params": repr(params), "rel": rel})
    return {"suite": "limits", "cases": cases, "failures": failures}


def verify_slopes(config: EvalConfig = DEFAULT_CONFIG) -> dict:
    failures, cases = [], 0
    for k, s, v in [(1, 1.5, 1.0), (1, 0.5 + 3j, 0.5)]:
        cases += 1
        slope = decay_slope(InterpParams(k, s, v), config=config)
        if not -2.3 <= slope <= -1.7:
            failures.append({"case": [k, str(s), v], "slope": slope})
    return {"suite": "slopes", "cases": cases, "failures": failures}


_SUITES = {
    "nodes": verify_nodes,
    "recurrence": verify_recurrence,
    "identities": verify_identities,
    "gauss": verify_gauss,
    "limits": verify_limits,
    "slopes": verify_slopes,
}


def cmd_verify(args, config: EvalConfig) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    reports = []
    ok = True
    for name in names:
        fn = _SUITES[name]
        rep = fn(config) if name in ("recurrence", "limits", "slopes") \
            else fn(config, None)
        reports.append(rep)
        ok = ok and not rep["failures"]
    _write_json(reports if len(reports) > 1 else reports[0], args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="efetzeta",
        description="interpolation differences and zeta/L limits")
    ap.add_argument("--config", help="JSON config file")
    ap.add_argument("--show-config", action="store_true",
                    help="print the effective config and exit")
    sub = ap.add_subparsers(dest="command")

    def common(p, grid=False):
        p.add_argument("--k", type=int, choices=(0, 1), default=0)
        p.add_argument("--s", default="1.5")
        p.add_argument("--v", default="1")
        p.add_argument("--q", type=int)
        p.add_argument("--char", help="character JSON file")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out")
        if grid:
            p.add_argument("--y", type=float)
            p.add_argument("--ymin", type=float, default=1.0)
            p.add_argument("--ymax", type=float, default=20.0)
            p.add_argument("--count", type=int, default=1)

    pe = sub.add_parser("eval", help="evaluate a function")
    pe.add_argument("target",
                    choices=("phi", "zeta", "beta", "lfunc", "f", "g",
                             "delta"))
    common(pe, grid=True)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=tuple(_SUITES) + ("all",))
    pv.add_argument("--out")

    pl = sub.add_parser("limit", help="masked-limit extraction")
    common(pl)
    pl.add_argument("--ymax", type=float, default=320.0)

    pz = sub.add_parser("zero-probe", help="L_p zero-consistency probe")
    common(pz)
    pz.add_argument("--p", type=float, default=1.0)
    pz.add_argument("--ymax", type=float, default=512.0)

    pp = sub.add_parser("plotdata", help="CSV of D(y) vs target")
    common(pp)
    pp.add_argument("--ymin", type=float, default=20.0)
    pp.add_argument("--ymax", type=float, default=160.0)
    pp.add_argument("--count", type=int, default=64)

    pc = sub.add_parser("char", help="character utilities")
    pc.add_argument("action", choices=("gauss", "eset", "pq"))
    pc.add_argument("--q", type=int, default=3)
    pc.add_argument("--char")
    pc.add_argument("--nmax", type=int, default=12)
    pc.add_argument("--ymin", type=float, default=0.0)
    pc.add_argument("--ymax", type=float, default=6.283185307179586)
    pc.add_argument("--count", type=int, default=8)
    pc.add_argument("--format", choices=("csv", "json"), default="csv")
    pc.add_argument("--out")
    return ap


_DISPATCH = {
    "eval": cmd_eval,
    "verify": cmd_verify,
    "limit": cmd_limit,
    "zero-probe": cmd_zero_probe,
    "plotdata": cmd_plotdata,
    "char": cmd_char,
}


def main(argv: Optional[list] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    config = EvalConfig.from_json_file(args.config) if args.config \
        else DEFAULT_CONFIG
    if args.show_config:
        sys.stdout.write(json.dumps(config.to_dict(), indent=2) + "\n")
        return 0
    if not args.command:
        ap.print_usage(sys.stderr)
        return 2
    try:
        return _DISPATCH[args.command](args, config)
    except (EfetZetaError, ValueError, KeyError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
