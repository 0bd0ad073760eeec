"""Certification pipeline: from a Laurent polynomial or a polytope to a
verdict about Q-factoriality of the associated hypersurface ring.

The certificate rests on one sufficient criterion: surjectivity of the
multiplication map between quotient-ring graded pieces at degrees derived
from the polytope and the anticanonical class. Surjectivity is an open
condition on coefficients, so a single exact witness with the full lattice
support certifies the statement for very general members of the family.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .errors import DegenerateHull, NotSimplicial, QfactError
from .jacobian import hilbert_profile, multiplication_surjective
from .lattice import LatticePolytope, convex_hull, lattice_points, normal_fan
from .laurent import LaurentPolynomial, homogenize, newton_polytope
from .toric import (
    GradedDegree,
    ToricData,
    anticanonical_degree,
    build_toric_data,
    picard_number,
    polytope_degree,
)

VERDICT_CERTIFIED = "CERTIFIED_Q_FACTORIAL"
VERDICT_INCONCLUSIVE = "INCONCLUSIVE"
VERDICT_UNSUPPORTED = "UNSUPPORTED"
VERDICT_ERROR = "ERROR"

_CRITERION_CITATION = (
    "Criterion: for a 3-variable Laurent hypersurface with full-dimensional "
    "Newton polytope and simplicial normal fan, surjectivity of the "
    "multiplication map R_beta x R_(beta-beta0) -> R_(2beta-beta0) of "
    "Jacobian-ring graded pieces implies the hypersurface ring is "
    "Q-factorial for very general coefficients."
)
_SUFFICIENCY_CITATION = (
    "The criterion is sufficient only; its failure proves nothing about "
    "the ring."
)
_DOLGACHEV_CITATION = "factorial by Dolgachev for generic F"

# Attempt k reseeds the coefficient sampler with seed * _SEED_STRIDE + k,
# keeping distinct attempts decorrelated but fully reproducible.
_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class CertificationRequest:
    """What to certify and how to sample.

    Exactly one of source_polynomial and source_vertices must be given.
    Vertices are raw integer tuples so that inputs of the wrong dimension
    can be recognized and reported rather than rejected at construction.
    """

    source_polynomial: LaurentPolynomial | None = None
    source_vertices: tuple[tuple[int, ...], ...] | None = None
    seed: int = 0
    samples: int = 5
    coeff_bound: int = 10
    use_input_coeffs: bool = False

    def __post_init__(self):
        if (self.source_polynomial is None) == (self.source_vertices is None):
            raise ValueError("exactly one input source is required")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be at least 1")


@dataclass(frozen=True)
class CertificationReport:
    verdict: str
    reason: str
    toric: dict | None
    degrees: dict | None
    dimensions: dict | None
    sample: dict | None
    citations: tuple[str, ...]


def sample_coefficients(P: LatticePolytope, seed: int, bound: int) -> LaurentPolynomial:
    """Random member of the family: full lattice support, nonzero integer
    coefficients drawn uniformly from [-bound, bound] minus zero.

    Deterministic in (P, seed, bound).
    """
    rng = Random(seed)
    pairs = []
    for m in lattice_points(P):
        k = rng.randrange(2 * bound)
        pairs.append((m, k - bound if k < bound else k - bound + 1))
    return LaurentPolynomial.from_terms(pairs)


def _fraction_str(c: Fraction) -> str:
    return str(c)


def _json_int(x: int):
    # JSON numbers are only faithful up to 2**53; beyond that, strings.
    return x if -(2**53) < x < 2**53 else str(x)


def _degree_dict(d: GradedDegree) -> dict:
    return {
        "free": [_json_int(x) for x in d.free_part],
        "torsion": [_json_int(x) for x in d.torsion_part],
    }


def _toric_dict(T: ToricData) -> dict:
    return {
        "rays": [[_json_int(x) for x in v] for v in T.rays],
        "class_rank": T.class_rank,
        "torsion_invariants": list(T.torsion),
        "picard_number": picard_number(T),
        "variable_degrees": [_degree_dict(d) for d in T.variable_degrees],
    }


def _sample_dict(
    F: LaurentPolynomial, seed: int, attempt: int, from_input: bool
) -> dict:
    return {
        "seed": seed,
        "attempt": attempt,
        "source": "input" if from_input else "sampled",
        "coefficients": [
            {"exponents": [_json_int(x) for x in e], "coefficient": _fraction_str(c)}
            for e, c in F.terms
        ],
    }


def _empty_report(verdict: str, reason: str, citations: tuple[str, ...]):
    return CertificationReport(
        verdict=verdict,
        reason=reason,
        toric=None,
        degrees=None,
        dimensions=None,
        sample=None,
        citations=citations,
    )


def _resolve_polytope(req: CertificationRequest):
    """Polytope and optional explicit polynomial, or an early report."""
    if req.source_vertices is not None:
        arities = {len(v) for v in req.source_vertices}
        if len(arities) != 1:
            return None, None, _empty_report(
                VERDICT_ERROR,
                "vertices must be integer tuples of one common dimension",
                (),
            )
        (arity,) = arities
        if arity >= 4:
            return None, None, _empty_report(
                VERDICT_UNSUPPORTED,
                f"vertices live in dimension {arity}; for dimension >= 4 the "
                "hypersurface ring of a very general member is already "
                "factorial, and this tool performs no computation there",
                (_DOLGACHEV_CITATION,),
            )
        if arity <= 2:
            return None, None, _empty_report(
                VERDICT_UNSUPPORTED,
                f"vertices live in dimension {arity}; dimensions <= 2 are "
                "outside the certified scope",
                (),
            )
        try:
            P = convex_hull(req.source_vertices)
        except DegenerateHull as exc:
            return None, None, _empty_report(
                VERDICT_UNSUPPORTED,
                f"polytope is not full-dimensional ({exc}); dimensions <= 2 "
                "are outside the certified scope",
                (),
            )
        return P, None, None

    F = req.source_polynomial
    try:
        P = newton_polytope(F)
    except DegenerateHull as exc:
        return None, None, _empty_report(
            VERDICT_UNSUPPORTED,
            f"Newton polytope is not full-dimensional ({exc}); dimensions "
            "<= 2 are outside the certified scope",
            (),
        )
    return P, F, None


def certify(req: CertificationRequest) -> CertificationReport:
    """Run the pipeline and always return a report, never raise.

    Hull and fan first; a non-simplicial fan or a polytope of the wrong
    dimension is UNSUPPORTED. Then per attempt: sample coefficients on the
    full lattice support (or take the input ones), homogenize, and test
    surjectivity. The first surjective witness certifies; if every attempt
    fails the verdict is INCONCLUSIVE since the criterion is one-sided.
    """
    try:
        return _certify_checked(req)
    except QfactError as exc:
        return _empty_report(
            VERDICT_ERROR, f"{type(exc).__name__}: {exc}", ()
        )


def _certify_checked(req: CertificationRequest) -> CertificationReport:
    P, F_input, early = _resolve_polytope(req)
    if early is not None:
        return early

    try:
        T = build_toric_data(normal_fan(P))
    except NotSimplicial as exc:
        return _empty_report(
            VERDICT_UNSUPPORTED,
            f"normal fan is not simplicial ({exc}); the criterion needs a "
            "simplicial fan and this tool does not refine fans",
            (),
        )

    beta = polytope_degree(T, P)
    beta0 = anticanonical_degree(T)
    degrees = {
        "beta": _degree_dict(beta),
        "beta0": _degree_dict(beta0),
        "beta_minus_beta0": _degree_dict(beta - beta0),
        "two_beta_minus_beta0": _degree_dict(beta + beta - beta0),
    }

    keep_input = F_input is not None and req.use_input_coeffs
    attempts = 1 if keep_input else req.samples
    last = None
    for attempt in range(attempts):
        if keep_input:
            F = F_input
        else:
            F = sample_coefficients(
                P, req.seed * _SEED_STRIDE + attempt, req.coeff_bound
            )
        f = homogenize(F, P, T)
        verdict = multiplication_surjective(f, T, beta, beta0)
        last = (attempt, F, f, verdict)
        if verdict.surjective:
            break

    attempt, F, f, v = last
    profile = hilbert_profile(
        f, T, [beta, beta - beta0, beta + beta - beta0]
    )
    labels = ["beta", "beta_minus_beta0", "two_beta_minus_beta0"]
    top_rank_j = profile[2][2]
    dimensions = {
        "profile": [
            {"degree": lbl, "dim_s": s, "rank_j": j, "dim_r": r}
            for lbl, (_, s, j, r) in zip(labels, profile)
        ],
        "image_rank": v.image_rank,
        "target_needed": v.target_needed,
        "quotient_image_rank": max(v.image_rank - top_rank_j, 0),
        "quotient_target": v.dims[2],
        "surjective": v.surjective,
    }
    sample = _sample_dict(F, req.seed, attempt, keep_input)
    toric = _toric_dict(T)

    if v.surjective:
        reason = (
            f"multiplication map is surjective (witness at attempt {attempt}): "
            "for very general members of the family with this Newton polytope, "
            "the hypersurface ring is Q-factorial"
        )
        if keep_input:
            reason += (
                "; the verdict transfers to the supplied coefficients only "
                "under a very-generality assumption this tool cannot check"
            )
        elif F_input is not None:
            reason += (
                "; certified for the family of the input's Newton polytope, "
                "not for the specific input coefficients"
            )
        return CertificationReport(
            verdict=VERDICT_CERTIFIED,
            reason=reason,
            toric=toric,
            degrees=degrees,
            dimensions=dimensions,
            sample=sample,
            citations=(_CRITERION_CITATION,),
        )

    reason = (
        f"multiplication map failed to be surjective in {attempts} attempt(s); "
        "the criterion is sufficient only, so this proves nothing about the "
        "ring either way"
    )
    return CertificationReport(
        verdict=VERDICT_INCONCLUSIVE,
        reason=reason,
        toric=toric,
        degrees=degrees,
        dimensions=dimensions,
        sample=sample,
        citations=(_CRITERION_CITATION, _SUFFICIENCY_CITATION),
    )


def emit_report(report: CertificationReport, format: str = "json") -> str:
    """Serialize a report deterministically, as JSON or readable text."""
    if format == "json":
        payload = {
            "verdict": report.verdict,
            "reason": report.reason,
            "toric": report.toric,
            "degrees": report.degrees,
            "dimensions": report.dimensions,
            "sample": report.sample,
            "citations": list(report.citations),
        }
        return json.dumps(payload, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")

    lines = [f"verdict: {report.verdict}", f"reason: {report.reason}"]
    if report.toric is not None:
        t = report.toric
        lines.append(f"rays: {t['rays']}")
        lines.append(
            f"class group: rank {t['class_rank']}, torsion {t['torsion_invariants']}"
        )
        lines.append(f"picard number: {t['picard_number']}")
    if report.degrees is not None:
        for key, val in report.degrees.items():
            lines.append(f"degree {key}: free {val['free']}, torsion {val['torsion']}")
    if report.dimensions is not None:
        for row in report.dimensions["profile"]:
            lines.append(
                f"dims at {row['degree']}: dim S = {row['dim_s']}, "
                f"rank J = {row['rank_j']}, dim R = {row['dim_r']}"
            )
        lines.append(
            f"image rank {report.dimensions['image_rank']} of "
            f"{report.dimensions['target_needed']} needed"
        )
    if report.sample is not None:
        s = report.sample
        lines.append(
            f"sample: seed {s['seed']}, attempt {s['attempt']}, source {s['source']}, "
            f"{len(s['coefficients'])} terms"
        )
    for c in report.citations:
        lines.append(f"citation: {c}")
    return "\n".join(lines) + "\n"
