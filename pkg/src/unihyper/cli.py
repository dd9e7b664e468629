"""Command-line interface: ``unihyper <subcommand> [flags]``.

Subcommands
-----------
eval        series value of a classical function or of raw ``(σ, κ, ω)``
classify    normal form of ``σ∂² + τ∂ + ξ/σ`` (or ``σ∂² + τ∂ + η``)
verify      run verification suites; exit 0 iff every suite passes
poly        table of a classical polynomial family
ladder      ``κₙ, ωₙ`` over a range of ``n``
plot-data   CSV of ``z`` versus the function value on a real grid

Conventions
-----------
* Polynomial flags are comma-separated coefficients, lowest degree first:
  ``--sigma 0,1,-1`` means ``z − z²``.  In ``classify`` a coefficient may be
  a name bound with ``--param NAME=VALUE`` (``--tau c,-3 --param c=1.5``);
  unbound names get a fixed generic value, reported under ``free_symbols``.
* Complex values are written ``re`` or ``re+imj`` (``0.5``, ``1-2j``).
* JSON floats use ``%.15e``; complex numbers are ``[re, im]``.
* Exit codes: 0 success, 1 verification failure, 2 usage error or
  parameters outside the domain of the requested operation.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .core import EquationParams, classify_riemann, ladder_params
from .errors import UnihyperError
from .gammafn import gamma
from .polyc import PolyC
from .serialize import csv_table, dumps

__all__ = ["main", "build_parser", "parse_complex", "parse_poly"]

#: ``--type`` values and the matching series tags.
TYPE_TAGS = {
    "2F1": "Gauss2F1",
    "1F1": "Kummer1F1",
    "0F1": "ZeroF1",
    "2F0": "TwoF0",
    "Hermite": "HermiteS",
}

_TYPE_PARAMS = {
    "2F1": ("a", "b", "c"),
    "1F1": ("a", "c"),
    "0F1": ("c",),
    "2F0": ("a", "b"),
    "Hermite": ("a",),
}

_NAME = re.compile(r"^[A-Za-z_]\w*$")


class UsageError(Exception):
    """Invalid command line; reported with exit code 2."""


def parse_complex(text: str) -> complex:
    """Parse ``re`` or ``re+imj``.

    >>> parse_complex("1.5"), parse_complex("1-2j")
    ((1.5+0j), (1-2j))
    """
    t = text.strip().replace(" ", "")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex value {text!r} (use re or re+imj)") from None


def parse_poly(text: str, names: Optional[dict] = None) -> PolyC:
    """Comma-separated coefficients, lowest degree first; names from ``names``.

    >>> parse_poly("0,1,-1").to_list()
    [0j, (1+0j), (-1+0j)]
    """
    coeffs = []
    for tok in text.split(","):
        tok = tok.strip()
        if _NAME.match(tok) and tok not in ("j", "inf", "nan"):
            if names is None or tok not in names:
                raise UsageError(f"coefficient {tok!r} is a name; bind it with --param {tok}=VALUE")
            coeffs.append(names[tok])
        else:
            coeffs.append(parse_complex(tok))
    return PolyC(coeffs)


def _bindings(items: Optional[Sequence[str]]) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        if not _NAME.match(k.strip()):
            raise UsageError(f"invalid parameter name {k!r}")
        out[k.strip()] = parse_complex(v)
    return out


# ---------------------------------------------------------------------------
# parser


def _add_raw(p: argparse.ArgumentParser, omega: bool = True) -> None:
    p.add_argument("--sigma", help="σ coefficients, lowest degree first (e.g. 0,1,-1)")
    p.add_argument("--kappa", help="κ coefficients, lowest degree first")
    if omega:
        p.add_argument("--omega", default="0", help="ω (complex, default 0)")


def _add_named(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", choices=sorted(TYPE_TAGS), help="classical type")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", help=f"parameter {name} (complex)")
    p.add_argument("--olver", action="store_true", help="Olver normalisation (divide by Γ(c))")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unihyper",
        description="Hypergeometric class equations: evaluation, classification and verification.",
        epilog="Polynomials: comma lists, lowest degree first (--sigma 0,1,-1 is z−z²). "
        "Complex values: re or re+imj.",
    )
    parser.add_argument("--version", action="version", version=f"unihyper {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a series")
    _add_named(p)
    _add_raw(p)
    p.add_argument("--z", required=True, help="argument (complex)")
    p.add_argument("--cross-check", choices=["integral"], help="append the integral representation value")

    p = sub.add_parser("classify", help="reduce σ∂²+τ∂+ξ/σ to a normal form")
    p.add_argument("--sigma", required=True, help="σ coefficients")
    p.add_argument("--tau", required=True, help="τ coefficients")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--eta", help="constant η (operator σ∂²+τ∂+η)")
    g.add_argument("--xi", help="ξ coefficients (operator σ∂²+τ∂+ξ/σ)")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="bind a name used in a coefficient list")

    from .suites import SUITES

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    _add_raw(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("poly", help="classical polynomial table")
    p.add_argument("--family", required=True, choices=["jacobi", "laguerre", "bessel", "hermite"])
    p.add_argument("--alpha", default="0")
    p.add_argument("--beta", default="0")
    p.add_argument("--theta", default="0")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("ladder", help="κₙ and ωₙ over a range of n")
    _add_raw(p)
    p.add_argument("--n-min", type=int, default=-3)
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("plot-data", help="CSV of z versus value on a real grid")
    _add_named(p)
    _add_raw(p)
    p.add_argument("--z-min", type=float, default=-0.9)
    p.add_argument("--z-max", type=float, default=0.9)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--imag", type=float, default=0.0, help="constant imaginary part of the grid")
    return parser


# ---------------------------------------------------------------------------
# helpers


def _raw_params(args, required: bool = True) -> Optional[EquationParams]:
    if args.sigma is None and args.kappa is None:
        if required:
            raise UsageError("--sigma and --kappa are required")
        return None
    if args.sigma is None or args.kappa is None:
        raise UsageError("--sigma and --kappa must be given together")
    omega = parse_complex(getattr(args, "omega", "0") or "0")
    return EquationParams(parse_poly(args.sigma), parse_poly(args.kappa), omega)


def _named(args) -> tuple[Optional[str], dict]:
    """``(type, params)`` for the named style, enforcing exclusivity."""
    raw_given = args.sigma is not None or args.kappa is not None or (args.omega not in (None, "0"))
    if args.type is None:
        if any(getattr(args, k) is not None for k in ("a", "b", "c")):
            raise UsageError("--a/--b/--c need --type")
        return None, {}
    if raw_given:
        raise UsageError("--type and raw --sigma/--kappa/--omega are mutually exclusive")
    names = _TYPE_PARAMS[args.type]
    params = {}
    for k in ("a", "b", "c"):
        v = getattr(args, k)
        if k in names:
            if v is None:
                raise UsageError(f"--type {args.type} needs --{k}")
            params[k] = parse_complex(v)
        elif v is not None:
            raise UsageError(f"--type {args.type} takes no --{k}")
    return args.type, params


def _evaluate(kind: Optional[str], params: dict, raw: Optional[EquationParams], z: complex, olver: bool):
    from .series import eval_classical, olver_F, unified_F

    if kind is None:
        return (olver_F(raw, z) if olver else unified_F(raw, z)).value
    tag = TYPE_TAGS[kind]
    if olver and kind in ("2F1", "1F1", "0F1"):
        tag += "Olver"
    return eval_classical(tag, params, z).value


def _cross_check(kind: str, params: dict, z: complex, olver: bool) -> dict:
    from .quad import named_representation

    if kind == "2F1":
        name = "Repr2F1Euler"
    elif kind == "1F1":
        name = "Repr1F1Hankel"
    elif kind == "0F1":
        name = "Repr0F1Loop"
    elif kind == "2F0":
        name = "Repr2F0"
    else:
        name = "ReprHermiteLaplace" if params["a"].real > 0 else "ReprHermiteEuler"
    value = named_representation(name, params, z).value
    if kind in ("2F1", "1F1", "0F1") and not olver:
        value *= gamma(params["c"])
    return {"representation": name, "value": value}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args) -> tuple[int, str]:
    kind, params = _named(args)
    raw = _raw_params(args, required=kind is None) if kind is None else None
    z = parse_complex(args.z)
    value = _evaluate(kind, params, raw, z, args.olver)
    doc: dict = {}
    if kind is not None:
        doc["type"] = kind
        doc["params"] = params
    else:
        doc["type"] = "unified"
        doc["params"] = {"sigma": raw.sigma, "kappa": raw.kappa, "omega": raw.omega}
    doc["olver"] = bool(args.olver)
    doc["z"] = z
    doc["value"] = value
    if args.cross_check:
        if kind is None:
            raise UsageError("--cross-check needs --type")
        cc = _cross_check(kind, params, z, args.olver)
        cc["discrepancy"] = abs(cc["value"] - value) / max(abs(value), 1e-300)
        doc["cross_check"] = cc
    return 0, dumps(doc)


#: Value substituted for names left unbound in ``classify`` (a generic point,
#: so the reported type is the generic one; the substitution is reported).
GENERIC_VALUE = complex(0.5772156649015329, 0.3183098861837907)


def _free_names(texts: Sequence[Optional[str]], bound: dict) -> list:
    found = []
    for text in texts:
        for tok in (text or "").split(","):
            tok = tok.strip()
            if _NAME.match(tok) and tok not in ("j", "inf", "nan") and tok not in bound and tok not in found:
                found.append(tok)
    return found


def _cmd_classify(args) -> tuple[int, str]:
    names = _bindings(args.param)
    free = _free_names([args.sigma, args.tau, args.xi, args.eta], names)
    names.update({k: GENERIC_VALUE for k in free})
    sigma = parse_poly(args.sigma, names)
    tau = parse_poly(args.tau, names)
    xi = parse_poly(args.xi, names) if args.xi is not None else sigma * parse_complex_or_name(args.eta, names)
    rep = classify_riemann(sigma, tau, xi)
    doc = {
        "type_tag": rep.type_tag,
        "hypergeometric_class": rep.hypergeometric_class,
        "affine_map": {"a": rep.affine_map[0], "b": rep.affine_map[1], "meaning": "x = a*z + b"},
        "scalar_divisor": rep.scalar_divisor,
        "normal_params": rep.normal_params,
        "gauge": str(rep.gauge),
    }
    if free:
        doc["free_symbols"] = {k: GENERIC_VALUE for k in free}
        doc["note"] = "unbound names were set to a generic value; bind them with --param NAME=VALUE"
    return 0, dumps(doc)


def parse_complex_or_name(text: str, names: dict) -> complex:
    t = text.strip()
    if _NAME.match(t) and t not in ("j", "inf", "nan"):
        if t not in names:
            raise UsageError(f"value {t!r} is a name; bind it with --param {t}=VALUE")
        return names[t]
    return parse_complex(t)


def _cmd_verify(args) -> tuple[int, str]:
    from .suites import SUITES, run_suite

    params = _raw_params(args, required=False)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, args.seed, params) for n in names]
    ok = all(r.passed for r in results)
    if args.format == "text":
        lines = [r.summary() for r in results]
        for r in results:
            lines += [f"    FAIL {c.label}: {c.value:.3e} (tol {c.tol:.0e})" for c in r.failures()]
        lines.append("ALL PASS" if ok else "FAILURES")
        text = "\n".join(lines) + "\n"
    else:
        text = dumps({"passed": ok, "suites": [r.to_dict() for r in results]})
    return (0 if ok else 1), text


def _cmd_poly(args) -> tuple[int, str]:
    from .poly import FamilySpec, poly_table, table_to_csv, table_to_json

    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    fam = args.family
    if fam == "jacobi":
        spec = FamilySpec.jacobi(parse_complex(args.alpha), parse_complex(args.beta))
    elif fam == "laguerre":
        spec = FamilySpec.laguerre(parse_complex(args.alpha))
    elif fam == "bessel":
        spec = FamilySpec.bessel(parse_complex(args.theta))
    else:
        spec = FamilySpec.hermite()
    rows = poly_table(spec, args.n_max)
    return 0, table_to_csv(rows) if args.format == "csv" else table_to_json(rows, spec)


def _cmd_ladder(args) -> tuple[int, str]:
    base = _raw_params(args)
    if args.n_max < args.n_min:
        raise UsageError("--n-max must be at least --n-min")
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        p = ladder_params(base, n)
        rows.append((n, p.kappa.coeff(0), p.kappa.coeff(1), p.omega))
    if args.format == "csv":
        return 0, csv_table(["n", "kappa0", "kappa1", "omega"], [(n, complex(a), complex(b), complex(w)) for n, a, b, w in rows])
    doc = {
        "sigma": base.sigma,
        "rows": [{"n": n, "kappa": [a, b], "omega": w} for n, a, b, w in rows],
    }
    return 0, dumps(doc)


def _cmd_plot(args) -> tuple[int, str]:
    kind, params = _named(args)
    raw = _raw_params(args) if kind is None else None
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    rows = []
    for x in np.linspace(args.z_min, args.z_max, args.points):
        z = complex(float(x), args.imag)
        try:
            v = complex(_evaluate(kind, params, raw, z, args.olver))
        except UnihyperError:
            v = complex(float("nan"), float("nan"))
        rows.append((z, v))
    return 0, csv_table(["z", "value"], rows)


_COMMANDS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "poly": _cmd_poly,
    "ladder": _cmd_ladder,
    "plot-data": _cmd_plot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help/--version, 2 otherwise
        return int(exc.code or 0)
    try:
        code, text = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"unihyper {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except UnihyperError as exc:
        print(f"unihyper {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
