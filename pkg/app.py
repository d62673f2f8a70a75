#!/usr/bin/env python3
"""
Symmetric apolarity workbench
Command-line front end: parses a command and a form, runs the checks in
execution/ and prints a report on stdout (JSON unless --format says otherwise).

Exit codes: 0 verified, 1 an identity check failed, 2 usage error or unwritable
--out, 3 internal error.
"""

import argparse
import json
import logging
import os
import random
import sys
from fractions import Fraction

from dotenv import load_dotenv

# Load .env file
load_dotenv()

# Add execution folder to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "execution"))

import settings
from apolarity import generator_degrees, hilbert_function
from betti import koszul_betti, verify_betti_formula, euler_characteristic_check
from cubic_atlas import (
    DEFAULT_VIEWPORT,
    PlanePoint,
    atlas_grid,
    cactus_certificate,
    classify,
    plot_atlas_svg,
    rs_lower_bound,
    waring_certificate,
)
from generic_rank import (
    ORBIT_BLOCKS,
    brute_force_coordinates,
    generic_rank_report,
    jacobian_det_check,
    orbit_map_coordinates,
    solve_h4_preimage,
    symmetric_dimension,
)
from lefschetz import lefschetz_report, mq_det_check, sl_candidates, sl_candidates_report
from poly_core import (
    ApolarityError,
    DualPolynomial,
    complete_symmetric,
    monomial_count,
    symmetric_cubic,
)
from reports import FORMATS, Report, emit_report, error_envelope
from symstruct import ann_structure_check, decompose_h, pairing_gram, quartic_identity_13

# Configure logging (stderr; stdout carries the report)
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL, logging.INFO),
    format="%(levelname)s %(name)s: %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("workbench")

EXIT_VERIFIED = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Malformed command line"""


class WorkbenchParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Form mini-language
# ---------------------------------------------------------------------------

def parse_form(spec, n):
    """h:<d> | p:<c0,c1,c2> | raw:@file.json"""
    kind, _, body = (spec or "").partition(":")
    if kind == "h":
        try:
            degree = int(body)
        except ValueError:
            raise UsageError(f"Malformed form {spec!r}: expected h:<degree>")
        if degree < 0:
            raise UsageError("Degree must be nonnegative")
        return complete_symmetric(n, degree)
    if kind == "p":
        parts = body.split(",")
        if len(parts) != 3:
            raise UsageError(f"Malformed form {spec!r}: expected p:<c0,c1,c2>")
        return symmetric_cubic(n, *parts)
    if kind == "raw":
        if not body.startswith("@"):
            raise UsageError(f"Malformed form {spec!r}: expected raw:@file.json")
        try:
            with open(body[1:], encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"Cannot read {body[1:]}: {e}")
        terms = data["terms"] if isinstance(data, dict) else data
        if isinstance(data, dict) and data.get("n", n) != n:
            raise UsageError(f"{body[1:]} declares n={data['n']} but --n is {n}")
        try:
            return DualPolynomial.from_json(n, terms)
        except (KeyError, TypeError) as e:
            raise UsageError(f"Malformed polynomial in {body[1:]}: {e}")
    raise UsageError(f"Unknown form {spec!r}; use h:<d>, p:<c0,c1,c2> or raw:@file.json")


def _check_n(n, minimum=1):
    if not minimum <= n <= settings.MAX_VARIABLES:
        raise UsageError(f"n must lie in {minimum}..{settings.MAX_VARIABLES}, got {n}")
    return n


def _point(text):
    try:
        return PlanePoint.parse(text)
    except ApolarityError as e:
        raise UsageError(str(e))


def _random_rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def _random_nonzero(rng):
    value = _random_rational(rng)
    return value if value else Fraction(1)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_hilbert(args):
    n = _check_n(args.n)
    F = parse_form(args.form, n)
    hf = hilbert_function(F)
    payload = {"n": n, "form": args.form, "hf": hf.to_json()}
    verified = True
    if args.form.startswith("h:"):
        e = hf.socle_degree
        compressed = [min(monomial_count(n, i), monomial_count(n, e - i)) for i in range(e + 1)]
        payload["compressed"] = list(hf) == compressed
        verified = payload["compressed"]
    return Report("hilbert", payload, verified, text=" ".join(str(h) for h in hf))


def cmd_slp(args):
    n = _check_n(args.n)
    F = parse_form(args.form, n)
    if args.form.startswith("p:"):
        candidates = sl_candidates_report(n, args.form[2:].split(","))
        payload = {"n": n, "form": args.form, "candidates": candidates}
        return Report("slp", payload, any(c["slp"] for c in candidates))
    names = dict(sl_candidates(n))
    report = lefschetz_report(F, names[args.witness])
    verified = report.slp if args.form.startswith("h:") else True
    return Report("slp", {"form": args.form, **report.to_json()}, verified)


def cmd_ann_structure(args):
    report = ann_structure_check(_check_n(args.n, 2), args.degree)
    return Report("ann-structure", report.to_json(), report.verified)


def cmd_pairing(args):
    n = _check_n(args.n, 2)
    d = args.degree
    cells = []
    for i in range(d + 1):
        for j in range(d + 1):
            gram = pairing_gram(n, d, i, j)
            ok = gram.is_nonsingular() if i == j else gram.is_zero()
            cells.append({"i": i, "j": j, "rank": gram.rank, "ok": ok})
    return Report("pairing", {"n": n, "d": d, "cells": cells}, all(c["ok"] for c in cells), rows=cells)


def cmd_verify_decomposition(args):
    certificate = decompose_h(_check_n(args.n), args.degree)
    payload = certificate.to_json()
    if not args.terms:
        payload.pop("terms")
    return Report("verify-decomposition", payload, certificate.exact)


def cmd_quartic13(args):
    certificate = quartic_identity_13()
    if args.drop is not None:
        if not 0 <= args.drop < certificate.term_count:
            raise UsageError(f"--drop must lie in 0..{certificate.term_count - 1}")
        certificate = certificate.without_term(args.drop)
    payload = certificate.to_json()
    if not args.terms:
        payload.pop("terms")
    return Report("quartic13", payload, certificate.exact and certificate.term_count == 92)


def _sweep_row(n, point):
    report = classify(n, point)
    certificate = waring_certificate(n, tuple(point))
    rs = rs_lower_bound(point.form(n))
    row = report.csv_row()
    row.update(
        {
            "certificate_terms": certificate.term_count,
            "certificate_exact": certificate.exact,
            "rs_bound": rs,
            "discrepancy": bool(report.discrepancy_flags),
        }
    )
    row["verified"] = (
        report.verified
        and certificate.exact
        and certificate.term_count == report.waring_rank
        and rs <= report.cactus_rank
    )
    return row


def cmd_classify_cubic(args):
    n = _check_n(args.n, 3)
    if args.grid:
        rows = [_sweep_row(n, point) for point in atlas_grid(args.bound)]
        verified = all(row["verified"] for row in rows)
        payload = {"n": n, "points": len(rows), "falsified": [r for r in rows if not r["verified"]]}
        logger.info(f"📊 Swept {len(rows)} points for n={n}")
        return Report("classify-cubic", payload, verified, rows=rows)
    if not args.point:
        raise UsageError("classify-cubic needs --point a0,a1,a2 or --grid")
    report = classify(n, _point(args.point))
    return Report("classify-cubic", report.to_json(), report.verified, rows=[report.csv_row()])


def cmd_waring_cert(args):
    n = _check_n(args.n, 3)
    point = _point(args.point)
    certificate = waring_certificate(n, tuple(point))
    expected = classify(n, point).waring_rank
    payload = {"expected_rank": expected, **certificate.to_json()}
    return Report("waring-cert", payload, certificate.exact and certificate.term_count == expected)


def cmd_cactus_cert(args):
    n = _check_n(args.n, 3)
    certificate = cactus_certificate(n, tuple(_point(args.point)))
    return Report("cactus-cert", certificate.to_json(), certificate.verified)


def cmd_betti(args):
    n = _check_n(args.n)
    F = parse_form(args.form, n)
    table = koszul_betti(F)
    hf = tuple(hilbert_function(F))
    payload = {
        "n": n,
        "form": args.form,
        "betti": table.to_json(),
        "euler_ok": euler_characteristic_check(table, hf, n),
        "gorenstein_ok": table.is_gorenstein_symmetric(len(hf) - 1),
    }
    rows = table.to_json()
    verified = payload["euler_ok"] and payload["gorenstein_ok"]
    return Report("betti", payload, verified, rows=rows, text=table.diagram())


def cmd_verify_betti(args):
    result = verify_betti_formula(_check_n(args.n, 3), _point(args.point))
    text = f"case ({result.case})\ncomputed:\n{result.computed.diagram()}\npredicted:\n{result.predicted.diagram()}"
    return Report("verify-betti", result.to_json(), result.verified, rows=result.mismatches or None, text=text)


def cmd_generic_rank(args):
    n = _check_n(args.n)
    d = args.degree
    payload = generic_rank_report(d, n)
    verified = True
    if d in ORBIT_BLOCKS:
        rng = random.Random(args.seed)
        count = len(ORBIT_BLOCKS[d]) * 2 + 1
        checks = []
        for _ in range(args.points):
            params = [_random_nonzero(rng) for _ in range(count)]
            check = jacobian_det_check(d, n, params)
            cross = None
            if n >= d:
                cross = orbit_map_coordinates(d, n, params) == brute_force_coordinates(d, n, params)
            checks.append({**check.to_json(), "coordinates_match": cross})
            verified = verified and check.equal and cross is not False
        payload["checks"] = checks
    return Report("generic-rank", payload, verified, rows=payload.get("checks"))


def cmd_solve_h4(args):
    report = solve_h4_preimage(_check_n(args.n, 3), tol=args.tol)
    return Report("solve-h4", report.to_json(), report.verified)


def cmd_mq_det(args):
    n = _check_n(args.n, 2)
    if args.point:
        results = [mq_det_check(n, tuple(_point(args.point)))]
    else:
        rng = random.Random(args.seed)
        results = [
            mq_det_check(n, [_random_rational(rng) for _ in range(3)]) for _ in range(args.points)
        ]
    rows = [r.to_json() for r in results]
    return Report("mq-det", {"n": n, "checks": rows}, all(r.equal for r in results), rows=rows)


def _viewport(text):
    if text is None:
        return DEFAULT_VIEWPORT
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"Malformed viewport {text!r}")
    if len(values) != 4:
        raise UsageError("Viewport is xmin,xmax,ymin,ymax")
    return values


def cmd_atlas_plot(args):
    n = _check_n(args.n, 3)
    viewport = _viewport(args.viewport)
    svg = plot_atlas_svg(n, viewport)
    payload = {"n": n, "viewport": list(viewport), "bytes": len(svg.encode("utf-8"))}
    return Report("atlas-plot", payload, svg=svg)


def cmd_dims(args):
    affine, projective = symmetric_dimension(args.degree)
    payload = {"degree": args.degree, "affine": affine, "projective": projective}
    return Report("dims", payload, text=f"{affine} {projective}")


def cmd_generators(args):
    n = _check_n(args.n)
    F = parse_form(args.form, n)
    counts = generator_degrees(F)
    payload = {"n": n, "form": args.form, "generators": [{"degree": d, "count": c} for d, c in counts]}
    return Report("generators", payload, rows=payload["generators"])


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser():
    common = WorkbenchParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="Output format")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="Seed for random batteries")
    common.add_argument("--tol", type=float, default=None, help="Numeric residual tolerance")
    common.add_argument("--out", default=None, help="Write the report to this path")

    parser = WorkbenchParser(prog="app.py", description="Symmetric apolarity workbench")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, handler, help_text):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = command("hilbert", cmd_hilbert, "Hilbert function of S/ann(F)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--form", required=True)

    sub = command("slp", cmd_slp, "Lefschetz ranks and SLP/WLP verdicts")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--form", required=True)
    sub.add_argument("--witness", choices=("sum", "x1", "n*x1-sum"), default="sum")

    sub = command("generators", cmd_generators, "Minimal generator degrees of ann(F)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--form", required=True)

    sub = command("ann-structure", cmd_ann_structure, "Structure of ann(h_{n,e})")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)

    sub = command("pairing", cmd_pairing, "Pairing Gram matrices on l^i·M_{d-i}")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)

    sub = command("verify-decomposition", cmd_verify_decomposition, "Power-sum decomposition of h_{n,e}")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--terms", action="store_true", help="Include the term list")

    sub = command("quartic13", cmd_quartic13, "The 92-term identity for h_{13,4}")
    sub.add_argument("--drop", type=int, default=None, help="Drop one term before checking")
    sub.add_argument("--terms", action="store_true", help="Include the term list")

    sub = command("classify-cubic", cmd_classify_cubic, "Classify a symmetric cubic")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--point", default=None)
    sub.add_argument("--grid", action="store_true", help="Sweep the atlas grid")
    sub.add_argument("--bound", type=int, default=4, help="Grid coordinate bound")

    sub = command("waring-cert", cmd_waring_cert, "Waring decomposition certificate")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--point", required=True)

    sub = command("cactus-cert", cmd_cactus_cert, "Apolar scheme certificate on l2")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--point", required=True)

    sub = command("betti", cmd_betti, "Graded Betti numbers of S/ann(F)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--form", required=True)

    sub = command("verify-betti", cmd_verify_betti, "Koszul Betti table against the predicted case")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--point", required=True)

    sub = command("generic-rank", cmd_generic_rank, "Orbit maps, Jacobians and rank counts")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--degree", type=int, required=True)
    sub.add_argument("--points", type=int, default=5, help="Random Jacobian checks")

    sub = command("mq-det", cmd_mq_det, "det M_q against its closed form")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--point", default=None)
    sub.add_argument("--points", type=int, default=20, help="Random points when --point is absent")

    sub = command("solve-h4", cmd_solve_h4, "Numeric preimage of h_{n,4}")
    sub.add_argument("--n", type=int, required=True)

    sub = command("atlas-plot", cmd_atlas_plot, "SVG of the cubic curve and the lines")
    sub.add_argument("--n", type=int, default=3)
    sub.add_argument("--viewport", default=None, help="xmin,xmax,ymin,ymax")

    sub = command("dims", cmd_dims, "Dimension of symmetric forms of a degree")
    sub.add_argument("--degree", type=int, required=True)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.handler(args)
        fmt = args.format or ("svg" if args.command == "atlas-plot" else "json")
        document = emit_report(report, fmt)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(document)
            logger.info(f"✅ Report written to {args.out}")
        else:
            sys.stdout.write(document)
    except (UsageError, ApolarityError) as e:
        logger.error(f"❌ {e}")
        sys.stdout.write(error_envelope(str(e)))
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"❌ Cannot write report: {e}")
        sys.stdout.write(error_envelope(f"cannot write report: {e}"))
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"💥 Internal error: {e}")
        sys.stdout.write(error_envelope(f"internal error: {e}"))
        return EXIT_INTERNAL

    if report.verified:
        logger.info(f"✅ {args.command}: verified")
        return EXIT_VERIFIED
    logger.warning(f"❌ {args.command}: check failed")
    return EXIT_FALSIFIED


if __name__ == "__main__":
    raise SystemExit(main())
