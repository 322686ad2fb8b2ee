"""Command-line front end: JSON in, JSON out, reproducible by seed.

Exit codes: 0 on success, 1 when an internal certificate or verification
assertion fails, 2 on malformed input.  Every command with randomness
requires an explicit --seed; identical invocations produce byte-identical
reports.  APOLAR_KIT_THREADS caps trial parallelism (0 or unset = serial).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction

from . import jsonio
from .apolarity import (SocleDimensionError, apolar_ideal_piece,
                        hilbert_function, macaulay_inverse)
from .curvegen import (CurveGenerationError, IdealDimensionError,
                       PointCertificateError, SamplingError, ideal_pieces,
                       sample_points, tetragonal_curve, trigonal_curve)
from .numerics import DEFAULT_PRECISION_BITS, DEFAULT_TOLERANCE
from .pipeline import (AlphaCertificateError, CertificateError,
                       GammaExtractionError, VerificationError, alpha_for_curve,
                       verify_tetragonal_bound, verify_trigonal_fermat)
from .planemodel import (higher_gonality_degree, nakai_certificate,
                         tetragonal_numerology)
from .scroll import (Scroll, canonical_class, chow_product, divisor_degree,
                     project_type, section_count, section_templates)
from .waring import fermat_detect_detail

FAILURE_ERRORS = (VerificationError, CertificateError, AlphaCertificateError,
                  GammaExtractionError, SocleDimensionError, SamplingError,
                  CurveGenerationError, IdealDimensionError,
                  PointCertificateError)


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(report: dict, out_path) -> None:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_int_list(raw: str) -> tuple[int, ...]:
    return tuple(int(part) for part in raw.split(",") if part != "")


def _cmd_apolar(args) -> dict:
    poly = jsonio.polynomial_from_json(_read_json(args.in_path))
    profile = hilbert_function(poly)
    report = {
        "claim": "graded structure of the annihilator of the form",
        "hilbert": list(profile.hilbert),
        "socle_dim": profile.socle_dim,
    }
    if args.k is not None:
        piece = apolar_ideal_piece(poly, args.k)
        report["piece"] = jsonio.piece_to_json(piece)
    return report


def _cmd_inverse(args) -> dict:
    data = _read_json(args.in_path)
    pieces = [jsonio.piece_from_json(p) for p in data["pieces"]]
    form = macaulay_inverse(pieces, int(data["d"]))
    return {
        "claim": "unique form annihilated by the given graded pieces",
        "form": jsonio.polynomial_to_json(form),
    }


def _cmd_fermat(args) -> dict:
    poly = jsonio.polynomial_from_json(_read_json(args.in_path))
    decomposition, reason = fermat_detect_detail(
        poly, seed=args.seed, precision_bits=args.precision_bits,
        tolerance=args.tolerance)
    report = {
        "claim": "the form is a sum of cubes of independent linear forms",
        "fermat": decomposition is not None,
        "reason": reason,
    }
    if decomposition is not None:
        report["decomposition"] = jsonio.decomposition_to_json(
            decomposition, args.precision_bits)
    return report


def _cmd_scroll(args) -> dict:
    scroll = Scroll(_parse_int_list(args.type))
    report = {
        "claim": "divisor arithmetic on a rational normal scroll",
        "scroll": jsonio.scroll_to_json(scroll),
        "N": scroll.N,
        "scroll_degree": scroll.degree,
        "op": args.op,
    }
    if args.op in ("degree", "sections") and args.cls is None:
        raise ValueError(f"--class is required for op {args.op!r}")
    if args.op == "chow" and args.classes is None:
        raise ValueError("--classes is required for op 'chow'")
    if args.op == "degree":
        cls = scroll.cls(*_parse_int_list(args.cls))
        report["class"] = jsonio.divisor_to_json(cls)
        report["result"] = divisor_degree(scroll, cls)
    elif args.op == "canonical":
        report["result"] = jsonio.divisor_to_json(canonical_class(scroll))
    elif args.op == "chow":
        classes = [scroll.cls(*_parse_int_list(part))
                   for part in args.classes.split(";")]
        report["classes"] = [jsonio.divisor_to_json(c) for c in classes]
        report["result"] = chow_product(classes)
    elif args.op == "sections":
        cls = scroll.cls(*_parse_int_list(args.cls))
        report["class"] = jsonio.divisor_to_json(cls)
        report["templates"] = [{"fiber_exp": list(exp), "base_degree": d}
                               for exp, d in section_templates(scroll, cls)]
        report["result"] = section_count(scroll, cls)
    elif args.op == "project":
        report["result"] = jsonio.scroll_to_json(project_type(scroll, args.index))
    else:
        raise ValueError(f"unknown scroll op {args.op!r}")
    return report


def _make_curve(args):
    if args.g is None or args.gonality is None:
        raise ValueError("--g and --gonality are required when no curve file is given")
    if args.gonality == 3:
        return trigonal_curve(args.g, args.seed)
    if args.split:
        b1, b2 = _parse_int_list(args.split)
    else:
        b1 = (args.g - 5) // 2
        b2 = args.g - 5 - b1
    return tetragonal_curve(args.g, b1, b2, args.seed)


def _cmd_curve_gen(args) -> dict:
    curve = _make_curve(args)
    count = args.points if args.points is not None else curve.guaranteed_point_count
    points = sample_points(curve, count, args.seed)
    recon = ideal_pieces(curve, points)
    return {
        "claim": "canonical curve on a scroll with exact ideal reconstruction",
        "curve": jsonio.curve_to_json(curve),
        "points": [list(p) for p in points],
        "ideal": {
            "degree2_dim": recon.degree2.dim,
            "degree3_dim": recon.degree3.dim,
            "point_count": recon.point_count,
            "rank_saturated": recon.rank_saturated,
            "dims_expected": recon.dims_expected,
        },
    }


def _cmd_alpha(args) -> dict:
    if args.in_path:
        curve = jsonio.curve_from_json(_read_json(args.in_path))
    else:
        curve = _make_curve(args)
    alpha = alpha_for_curve(curve, args.seed)
    return {
        "claim": "quotient by two general hyperplanes is Artinian Gorenstein "
                 "with Hilbert vector (1, g-2, g-2, 1)",
        "g": curve.genus,
        "hilbert": list(alpha.hilbert),
        "eta1": jsonio.polynomial_to_json(alpha.eta1),
        "eta2": jsonio.polynomial_to_json(alpha.eta2),
        "kept_indices": list(alpha.kept_indices),
        "cubic": jsonio.polynomial_to_json(alpha.cubic),
    }


def _cmd_verify_a(args) -> dict:
    return verify_trigonal_fermat(args.g, args.trials, args.seed,
                                  precision_bits=args.precision_bits,
                                  tolerance=args.tolerance)


def _cmd_verify_b(args) -> dict:
    split = _parse_int_list(args.split) if args.split else None
    return verify_tetragonal_bound(args.g, split, args.trials, args.seed,
                                   precision_bits=args.precision_bits,
                                   tolerance=args.tolerance)


def _cmd_numerology(args) -> dict:
    report = tetragonal_numerology(args.g)
    return {
        "claim": "forced plane-model multiplicities and surface degree for a "
                 "tetragonal canonical curve",
        "g": report.genus,
        "k": report.k,
        "plane_degree": report.plane_degree,
        "pencil_constraint": report.pencil_constraint,
        "multiplicities": list(report.multiplicities),
        "degS": report.deg_surface,
        "bound": report.bound,
        "branches": [dataclasses.asdict(b) | {"multiplicities": list(b.multiplicities)}
                     for b in report.branches],
    }


def _cmd_nakai(args) -> dict:
    report = nakai_certificate(args.k, a_max=args.a_max)
    return {
        "claim": "positivity certificates for the adjoint and curve classes "
                 "on the four-point blow-up",
        "k": args.k,
        "ample_self_intersection": report.ample.self_intersection,
        "curve_self_intersection": report.curve.self_intersection,
        "a_max": args.a_max,
        "ample_violations": [list(v) for v in report.ample.violations],
        "curve_violations": [list(v) for v in report.curve.violations],
        "tail_bound": report.tail_linear_bound,
        "holds": report.holds,
    }


def _cmd_gonality_n(args) -> dict:
    report = higher_gonality_degree(args.n, args.k, args.excess)
    return {
        "claim": "surface degree produced by the plane-model method for an "
                 "n-gonal curve",
        **dataclasses.asdict(report),
    }


def _add_common(parser, seed=False, precision=False):
    parser.add_argument("--out", dest="out_path", default=None,
                        help="write the JSON report here instead of stdout")
    if seed:
        parser.add_argument("--seed", type=int, required=True,
                            help="seed for all randomness (mandatory)")
    if precision:
        parser.add_argument("--precision-bits", type=int,
                            default=DEFAULT_PRECISION_BITS)
        parser.add_argument("--tolerance", type=Fraction,
                            default=DEFAULT_TOLERANCE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apolar-kit",
        description="exact apolarity, inverse systems and power-sum "
                    "decompositions for canonical-curve cubics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apolar", help="Hilbert vector and graded annihilator pieces")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--k", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_apolar)

    p = sub.add_parser("inverse", help="recover a form from graded ideal pieces")
    p.add_argument("--in", dest="in_path", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_inverse)

    p = sub.add_parser("fermat", help="detect and decompose a sum-of-cubes form")
    p.add_argument("--in", dest="in_path", required=True)
    _add_common(p, seed=True, precision=True)
    p.set_defaults(handler=_cmd_fermat)

    p = sub.add_parser("scroll", help="scroll divisor arithmetic")
    p.add_argument("--type", required=True, help="comma-separated type, e.g. 1,1,2")
    p.add_argument("--class", dest="cls", default=None, help="h,f")
    p.add_argument("--classes", default=None, help="semicolon-separated h,f list")
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--op", required=True,
                   choices=["degree", "canonical", "chow", "sections", "project"])
    _add_common(p)
    p.set_defaults(handler=_cmd_scroll)

    p = sub.add_parser("curve-gen", help="generate a curve and reconstruct its ideal")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--gonality", type=int, choices=[3, 4], required=True)
    p.add_argument("--split", default=None, help="b1,b2 for gonality 4")
    p.add_argument("--points", type=int, default=None)
    _add_common(p, seed=True)
    p.set_defaults(handler=_cmd_curve_gen)

    p = sub.add_parser("alpha", help="quotient construction down to the cubic")
    p.add_argument("--in", dest="in_path", default=None,
                   help="curve JSON from curve-gen (otherwise generate)")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--gonality", type=int, choices=[3, 4], default=None)
    p.add_argument("--split", default=None)
    _add_common(p, seed=True, precision=True)
    p.set_defaults(handler=_cmd_alpha)

    p = sub.add_parser("verify-a", help="trigonal power-sum verification")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    _add_common(p, seed=True, precision=True)
    p.set_defaults(handler=_cmd_verify_a)

    p = sub.add_parser("verify-b", help="tetragonal bound verification")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--split", default=None, help="b1,b2 with b1+b2 = g-5")
    p.add_argument("--trials", type=int, default=3)
    _add_common(p, seed=True, precision=True)
    p.set_defaults(handler=_cmd_verify_b)

    p = sub.add_parser("numerology", help="tetragonal plane-model numerology")
    p.add_argument("--g", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_numerology)

    p = sub.add_parser("nakai", help="blow-up positivity certificates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a-max", type=int, default=50)
    _add_common(p)
    p.set_defaults(handler=_cmd_nakai)

    p = sub.add_parser("gonality-n", help="higher-gonality surface degrees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--excess", type=int, default=0)
    _add_common(p)
    p.set_defaults(handler=_cmd_gonality_n)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except FAILURE_ERRORS as err:
        payload = getattr(err, "report", None) or {"error": str(err)}
        payload = dict(payload)
        payload.setdefault("error", str(err))
        payload["passed"] = False
        _emit(payload, args.out_path)
        return 1
    except (json.JSONDecodeError, FileNotFoundError, KeyError, TypeError,
            ValueError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    _emit(report, args.out_path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
