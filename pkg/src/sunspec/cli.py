"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 resource cap hit, 4 verification
mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable

from . import __version__
from .errors import (
    DegreeCapExceeded,
    InvalidParams,
    SizeCapExceeded,
    SunspecError,
    VerificationError,
    XiNotAdmissible,
    ZeroSum,
)
from .factored import DEFAULT_DEGREE_CAP, FactoredCharPoly, expand_factored, factored_power_sum
from .hypergraph import SunflowerParams, eigen_residual, make_sunflower
from .spectra import (
    EigvecRecipe,
    char_poly_factored,
    eigvec_construct,
    numeric_eigenvalues,
    spectral_moment_closed,
    spectral_radius,
)
from .trace import DEFAULT_SIZE_CAP, count_sequences, spectral_moment_oracle
from .verify import run_checks

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_MISMATCH = 0, 2, 3, 4


class CliExit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def to_jsonable(obj: Any) -> Any:
    """Integers become decimal strings, complex numbers {re, im}."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, complex):
        return {"im": obj.imag, "re": obj.real}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError("cannot serialize %r" % type(obj))


def render_envelope(command: str, params: dict, result: Any) -> str:
    env = {
        "command": command,
        "params": to_jsonable(params),
        "result": to_jsonable(result),
        "version": "sunspec/%s" % __version__,
    }
    return json.dumps(env, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def fmt_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if abs(re_) < 5e-13:
        re_ = 0.0
    if abs(im) < 5e-13:
        im = 0.0
    if im == 0:
        return "%.12g" % re_
    return "%.12g%+.12gi" % (re_, im)


def _params(args) -> SunflowerParams:
    return SunflowerParams(args.k, args.s, args.p)


def _poly_json(f: FactoredCharPoly) -> dict:
    return {
        "degree": f.degree,
        "factors": [
            {"constant": list(c.coeffs), "exponent": e, "order": c.order}
            for c, e in f.sorted_factors()
        ],
        "k": f.k,
        "text": f.render(),
        "zero_exponent": f.zero_exponent,
    }


def cmd_charpoly(args) -> tuple[dict, str]:
    f = char_poly_factored(_params(args))
    result = _poly_json(f)
    lines = [f.render()]
    if args.expand:
        cap = DEFAULT_DEGREE_CAP if args.cap is None else args.cap
        poly = expand_factored(f, cap)
        result["expanded"] = {
            "coefficients": [[e, poly.coeff(e)] for e in sorted(poly.terms, reverse=True)],
            "text": str(poly),
        }
        lines.append(str(poly))
    return result, "\n".join(lines)


def cmd_moment(args) -> tuple[dict, str]:
    params = _params(args)
    cap = DEFAULT_SIZE_CAP if args.cap is None else args.cap
    methods = ["closed", "factored", "oracle"] if args.method == "all" else [args.method]
    values = {}
    for method in methods:
        if method == "closed":
            values[method] = spectral_moment_closed(params, args.d)
        elif method == "factored":
            q = factored_power_sum(char_poly_factored(params), args.d)
            values[method] = q.numerator if q.denominator == 1 else q
        else:
            values[method] = spectral_moment_oracle(make_sunflower(params), args.d, cap)
    distinct = set(values.values())
    result = {"methods": values, "value": values[methods[0]]}
    if len(distinct) != 1:
        text = "\n".join("%s: %s" % kv for kv in values.items())
        raise CliExit(EXIT_MISMATCH, "moment mismatch:\n" + text)
    if len(methods) == 1:
        return result, str(values[methods[0]])
    return result, "\n".join("%s: %s" % kv for kv in values.items())


def _parse_xi(spec: str, s: int, p: int) -> tuple[int | None, ...]:
    tokens = [tok.strip() for tok in spec.split(",")]
    if len(tokens) != p:
        raise InvalidParams("--xi needs %d comma-separated tokens, got %d" % (p, len(tokens)))
    out: list[int | None] = []
    for tok in tokens:
        if tok == "z":
            out.append(None)
            continue
        try:
            j = int(tok)
        except ValueError:
            raise InvalidParams("--xi token %r is neither 'z' nor an integer" % tok)
        if not 0 <= j < s:
            raise InvalidParams("--xi root index %d outside [0, %d)" % (j, s))
        out.append(j)
    return tuple(out)


def cmd_eigen(args) -> tuple[dict, str]:
    params = _params(args)
    if args.xi is None:
        pairs = numeric_eigenvalues(char_poly_factored(params))
        result = {"eigenvalues": [{"multiplicity": m, "value": z} for z, m in pairs]}
        text = "\n".join("%s  multiplicity %d" % (fmt_complex(z), m) for z, m in pairs)
        return result, text
    xi = _parse_xi(args.xi, params.s, params.p)
    lam, x = eigvec_construct(params, EigvecRecipe(xi, lambda_branch=args.branch))
    res = eigen_residual(make_sunflower(params), lam, x)
    result = {"lambda": lam, "residual": res, "vector": x, "xi": [("z" if j is None else j) for j in xi]}
    text = "\n".join(
        ["lambda = %s" % fmt_complex(lam)]
        + ["x[%d] = %s" % (i + 1, fmt_complex(v)) for i, v in enumerate(x)]
        + ["residual = %.3e" % res]
    )
    return result, text


def cmd_radius(args) -> tuple[dict, str]:
    params = _params(args)
    rho, mult = spectral_radius(params)
    found = char_poly_factored(params).exponent_of(params.p**params.s)
    result = {"factored_exponent": found, "multiplicity": mult, "rho": rho}
    text = "\n".join(
        [
            "rho = %.12g  (p^(s/k) = %d^(%d/%d))" % (rho, params.p, params.s, params.k),
            "multiplicity = %d  (k^(p(k-s)+s-1-p))" % mult,
            "factored exponent of (x^%d - %d) = %d" % (params.k, params.p**params.s, found),
        ]
    )
    return result, text


def cmd_verify(args) -> tuple[dict, str]:
    params = _params(args)
    cap = DEFAULT_SIZE_CAP if args.cap is None else args.cap
    max_d = 2 * params.k if args.max_d is None else args.max_d
    if max_d < 1:
        raise InvalidParams("--max-d must be positive")
    checks = run_checks(params, max_d, cap)
    result = {"checks": [{"detail": c.detail, "name": c.name, "ok": c.ok} for c in checks]}
    result["ok"] = all(c.ok for c in checks)
    text = "\n".join(("PASS %s" % c.name) if c.ok else ("FAIL %s: %s" % (c.name, c.detail)) for c in checks)
    if not result["ok"]:
        failed = ", ".join(c.name for c in checks if not c.ok)
        raise CliExit(EXIT_MISMATCH, text + "\nfailing invariant(s): " + failed)
    return result, text + "\nall checks passed"


def cmd_oracle(args) -> tuple[dict, str]:
    params = _params(args)
    cap = DEFAULT_SIZE_CAP if args.cap is None else args.cap
    h = make_sunflower(params)
    value = spectral_moment_oracle(h, args.d, cap)
    n_seq = count_sequences(h, args.d)
    return {"sequences": n_seq, "value": value}, "%d  (%d root-sorted sequences)" % (value, n_seq)


COMMANDS: dict[str, Callable] = {
    "charpoly": cmd_charpoly,
    "moment": cmd_moment,
    "eigen": cmd_eigen,
    "radius": cmd_radius,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sunspec", description="Exact spectra of sunflower hypergraphs S(k,s,p).")
    parser.add_argument("--version", action="version", version="sunspec %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_d: bool = False) -> None:
        p.add_argument("-k", type=int, required=True, help="uniformity")
        p.add_argument("-s", type=int, required=True, help="number of seeds")
        p.add_argument("-p", type=int, required=True, help="number of petals")
        if with_d:
            p.add_argument("-d", type=int, required=True, help="moment order")
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        p.add_argument("--cap", type=int, default=None, help="resource cap (degree or sequence count)")

    p = sub.add_parser("charpoly", help="factored characteristic polynomial")
    common(p)
    p.add_argument("--expand", action="store_true", help="also print integer coefficients")

    p = sub.add_parser("moment", help="d-th spectral moment")
    common(p, with_d=True)
    p.add_argument("--method", choices=["closed", "factored", "oracle", "all"], default="closed")

    p = sub.add_parser("eigen", help="eigenvalues, or an explicit eigenpair with --xi")
    common(p)
    p.add_argument("--xi", default=None, help="comma list of p tokens: 'z' or root index j")
    p.add_argument("--branch", type=int, default=0, help="k-th root branch for lambda")

    p = sub.add_parser("radius", help="spectral radius and its multiplicity")
    common(p)

    p = sub.add_parser("verify", help="run every cross-check")
    common(p)
    p.add_argument("--max-d", dest="max_d", type=int, default=None, help="largest moment order checked")

    p = sub.add_parser("oracle", help="spectral moment by brute-force enumeration")
    common(p, with_d=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params_echo = {key: getattr(args, key) for key in ("k", "s", "p", "d") if hasattr(args, key)}
    try:
        result, text = COMMANDS[args.command](args)
    except CliExit as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except (InvalidParams, ZeroSum, XiNotAdmissible) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except (DegreeCapExceeded, SizeCapExceeded) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except (VerificationError, SunspecError) as exc:
        print("verification failed: %s" % exc, file=sys.stderr)
        return EXIT_MISMATCH
    if args.json:
        sys.stdout.write(render_envelope(args.command, params_echo, result))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
