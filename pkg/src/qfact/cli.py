"""Command-line front end.

    qfact check (--poly FILE | --poly-str STRING | --polytope FILE)
                [--seed N] [--samples K] [--coeff-bound B]
                [--use-input-coeffs] [--format json|text] [--out FILE]

Exit codes: 0 certified, 2 inconclusive, 3 unsupported, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .certify import (
    VERDICT_CERTIFIED,
    VERDICT_INCONCLUSIVE,
    VERDICT_UNSUPPORTED,
    CertificationReport,
    CertificationRequest,
    certify,
    emit_report,
)
from .errors import QfactError
from .laurent import LaurentPolynomial, parse_laurent

_EXIT_CODES = {
    VERDICT_CERTIFIED: 0,
    VERDICT_INCONCLUSIVE: 2,
    VERDICT_UNSUPPORTED: 3,
}


class InputFormatError(QfactError):
    pass


def _parse_coefficient(raw) -> Fraction:
    if isinstance(raw, bool):
        raise InputFormatError(f"coefficient {raw!r} is not a rational")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"bad coefficient {raw!r}: {exc}") from None
    raise InputFormatError(
        f"coefficient {raw!r} must be an integer or a 'p/q' string"
    )


def _polynomial_from_json(data) -> LaurentPolynomial:
    if not isinstance(data, dict) or "terms" not in data:
        raise InputFormatError("polynomial JSON needs a 'terms' list")
    pairs = []
    for term in data["terms"]:
        expo = term.get("exponents")
        if (
            not isinstance(expo, list)
            or len(expo) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in expo)
        ):
            raise InputFormatError(f"bad exponents {expo!r}: need 3 integers")
        pairs.append((tuple(expo), _parse_coefficient(term.get("coefficient"))))
    return LaurentPolynomial.from_terms(pairs)


def _load_polynomial(path: str) -> LaurentPolynomial:
    """A polynomial file holds either the JSON format or plain Laurent text."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _polynomial_from_json(json.loads(text))
    return parse_laurent(text.strip())


def _load_vertices(path: str) -> tuple[tuple[int, ...], ...]:
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise InputFormatError("polytope JSON needs a 'vertices' list")
    verts = []
    for v in data["vertices"]:
        if not isinstance(v, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in v
        ):
            raise InputFormatError(f"bad vertex {v!r}: need a list of integers")
        verts.append(tuple(v))
    if not verts:
        raise InputFormatError("polytope JSON has no vertices")
    return tuple(verts)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfact",
        description=(
            "Certify Q-factoriality of the ring cut out by a 3-variable "
            "Laurent polynomial, for very general coefficients on its "
            "Newton polytope."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", help="run the certification pipeline")
    src = check.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", metavar="FILE", help="polynomial file (text or JSON)")
    src.add_argument("--poly-str", metavar="STRING", help="polynomial as a string")
    src.add_argument("--polytope", metavar="FILE", help="polytope JSON file")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--samples", type=int, default=5)
    check.add_argument("--coeff-bound", type=int, default=10)
    check.add_argument(
        "--use-input-coeffs",
        action="store_true",
        help="test the supplied coefficients instead of sampling",
    )
    check.add_argument("--format", choices=("json", "text"), default="text")
    check.add_argument("--out", metavar="FILE", help="write the report here")
    return parser


def _error_report(message: str) -> CertificationReport:
    return CertificationReport(
        verdict="ERROR",
        reason=message,
        toric=None,
        degrees=None,
        dimensions=None,
        sample=None,
        citations=(),
    )


def run(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.poly is not None:
            request = CertificationRequest(
                source_polynomial=_load_polynomial(args.poly),
                seed=args.seed,
                samples=args.samples,
                coeff_bound=args.coeff_bound,
                use_input_coeffs=args.use_input_coeffs,
            )
        elif args.poly_str is not None:
            request = CertificationRequest(
                source_polynomial=parse_laurent(args.poly_str),
                seed=args.seed,
                samples=args.samples,
                coeff_bound=args.coeff_bound,
                use_input_coeffs=args.use_input_coeffs,
            )
        else:
            request = CertificationRequest(
                source_vertices=_load_vertices(args.polytope),
                seed=args.seed,
                samples=args.samples,
                coeff_bound=args.coeff_bound,
            )
        report = certify(request)
    except (QfactError, OSError, ValueError, json.JSONDecodeError) as exc:
        report = _error_report(f"{type(exc).__name__}: {exc}")

    text = emit_report(report, format=args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return _EXIT_CODES.get(report.verdict, 1)


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
