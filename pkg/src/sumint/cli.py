"""Command-line surface: one JSON document per invocation, exact rationals.

Every subcommand prints a single JSON object on stdout (scan subcommands can
emit a CSV table instead) and communicates its verdict through the exit
code: 0 for success/holds/VALID, 1 for violations, INCONCLUSIVE outcomes or
conjecture-busting witnesses, 2 for usage errors.  Rationals are printed as
exact ``num/den`` strings; decimal values appear only in the clearly-marked
``approx`` field, and only on request.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from . import bounds, certificates, families, fourier
from .intervals import format_rational, parse_rational
from .slices import intset, joint_inclusion_prob, level_distribution


def _parse_int_list(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from exc


def _parse_family(spec: str, n: int) -> families.SetFamily:
    if spec == "all":
        return families.SetFamily.all_subsets(n)
    if spec.startswith("superset:"):
        return families.canonical_family(n, _parse_int_list(spec[len("superset:"):]))
    if spec.startswith("list:"):
        body = spec[len("list:"):]
        sets = [_parse_int_list(part) for part in body.split(";")] if body else [()]
        return families.SetFamily.from_sets(n, sets)
    raise ValueError(
        f"unknown family spec {spec!r} (use superset:<elems>, list:<set>;<set>..., or all)"
    )


def _emit_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _emit_scan(report: bounds.ScanReport, fmt: str) -> int:
    if fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["kind", "set", "value"])
        value = "" if report.extremum is None else format_rational(report.extremum)
        for w in report.witnesses:
            writer.writerow(["witness", " ".join(map(str, w)), value])
        for v in report.violations:
            writer.writerow(["violation", " ".join(map(str, v)), ""])
    else:
        _emit_json(report.as_json())
    return 0 if report.holds else 1


def _add_scan_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker cap for the scan (output is identical for any value)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumint",
        description="exact slice distributions, certificate verification and extremal search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="exact slice-size distribution of a set")
    p.add_argument("--set", required=True, help="comma-separated positive integers")
    p.add_argument("--approx", action="store_true", help="add float approximations")

    p = sub.add_parser("joint", help="probability the slice keeps every listed element")
    p.add_argument("--set", required=True)

    p = sub.add_parser("two-point-check", help="pair formula vs interval sweep, all pairs <= max")
    p.add_argument("--max", type=int, required=True)
    _add_scan_flags(p)

    p = sub.add_parser("obs-check", help="pair error bounds and attained values, pairs <= max")
    p.add_argument("--max", type=int, required=True)
    _add_scan_flags(p)

    p = sub.add_parser("triple-scan", help="maximize the pair-error sum over primitive triples")
    p.add_argument("--max", type=int, required=True)
    _add_scan_flags(p)

    p = sub.add_parser("pzero-scan", help="maximize the empty-slice probability at fixed size")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--size", type=int, default=2)
    _add_scan_flags(p)

    p = sub.add_parser("bohr-scan", help="empty-slice probability vs its size-k floor")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--size", type=int, required=True, help="largest set size scanned")
    _add_scan_flags(p)

    p = sub.add_parser("mu", help="signed certificate functional of one set")
    p.add_argument("--set", required=True)
    p.add_argument("--cert", required=True, help="comma-separated rationals, e.g. 17/8,-5/4")

    p = sub.add_parser("verify-cert", help="check mu >= -1 on a finite primitive pool")
    p.add_argument("--cert", required=True)
    p.add_argument("--pool-max", type=int, required=True)
    p.add_argument("--pool-size", type=int, required=True)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("tail-verify", help="casework certification for all set sizes")
    p.add_argument("--cert", required=True)

    p = sub.add_parser("lp-search", help="maximize c_0 over a pool by exact simplex")
    p.add_argument("--pool-max", type=int, required=True)
    p.add_argument("--pool-size", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="highest coefficient index")

    p = sub.add_parser("build-nu", help="certificate measure and its transform")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cert", required=True)

    p = sub.add_parser("fourier-check", help="vanishing identity and density bound for a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True, help="superset:<elems>, list:<set>;..., or all")
    p.add_argument("--cert", required=True)

    p = sub.add_parser("pointmass-check", help="no two members may differ exactly by the target")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True, help="target set, comma-separated (may be empty)")
    p.add_argument("--family", required=True)

    p = sub.add_parser("extremal", help="exact maximum family size by clique search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pred", default="sum", help="sum, distinct-sum, or <k>-sum")

    return parser


def _cmd_dist(args) -> int:
    dist = level_distribution(intset(_parse_int_list(args.set)))
    doc = dist.as_json()
    if args.approx:
        doc["approx"] = [float(p) for p in dist.probs]
    _emit_json(doc)
    return 0


def _cmd_joint(args) -> int:
    S = intset(_parse_int_list(args.set))
    _emit_json({"set": list(S), "prob": format_rational(joint_inclusion_prob(S))})
    return 0


def _cmd_mu(args) -> int:
    cert = certificates.Certificate.parse(args.cert)
    S = intset(_parse_int_list(args.set))
    _emit_json({
        "set": list(S),
        "coeffs": cert.as_strings(),
        "mu": format_rational(certificates.mu(S, cert)),
    })
    return 0


def _cmd_verify_cert(args) -> int:
    cert = certificates.Certificate.parse(args.cert)
    pool = certificates.build_pool(args.pool_max, args.pool_size)
    verdict = certificates.verify_certificate_finite(cert, pool, jobs=args.threads)
    doc = verdict.as_json()
    doc["coeffs"] = cert.as_strings()
    doc["violations"] = doc["witnesses"] if verdict.status == certificates.VIOLATED else []
    doc["pool"] = {"max_element": pool.max_element, "max_size": pool.max_size, "sets": len(pool)}
    _emit_json(doc)
    return 0 if verdict.status == certificates.VALID else 1


def _cmd_tail_verify(args) -> int:
    cert = certificates.Certificate.parse(args.cert)
    verdict = certificates.tail_verify(cert)
    doc = verdict.as_json()
    doc["coeffs"] = cert.as_strings()
    stages = verdict.details.get("stages")
    if stages is not None:
        doc["stages"] = {name: bool(ok) for name, ok in stages.items()}
    _emit_json(doc)
    return 0 if verdict.status == certificates.VALID else 1


def _cmd_lp_search(args) -> int:
    pool = certificates.build_pool(args.pool_max, args.pool_size)
    try:
        cert = certificates.lp_search(pool, args.m)
    except certificates.LPUnbounded as exc:
        _emit_json({"status": "unbounded", "detail": str(exc)})
        return 1
    _emit_json({
        "status": "optimal",
        "coeffs": cert.as_strings(),
        "bound": format_rational(certificates.bound_from_certificate(cert)),
        "verified": True,
        "caveat": certificates.FINITE_POOL_CAVEAT,
        "pool": {"max_element": pool.max_element, "max_size": pool.max_size, "sets": len(pool)},
    })
    return 0


def _cmd_build_nu(args) -> int:
    cert = certificates.Certificate.parse(args.cert)
    hat = fourier.nu_transform(args.n, cert)
    nu = fourier.inverse_wht(hat)
    _emit_json({
        "n": args.n,
        "coeffs": cert.as_strings(),
        "nu_hat": [format_rational(v) for v in hat.values],
        "nu": [format_rational(v) for v in nu.values],
    })
    return 0


def _cmd_fourier_check(args) -> int:
    cert = certificates.Certificate.parse(args.cert)
    family = _parse_family(args.family, args.n)
    report = fourier.fourier_bound_check(family, cert)
    doc = report.as_json()
    doc["coeffs"] = cert.as_strings()
    _emit_json(doc)
    return 0 if report.holds else 1


def _cmd_pointmass_check(args) -> int:
    family = _parse_family(args.family, args.n)
    report = fourier.pointmass_check(args.n, _parse_int_list(args.t), family)
    _emit_json(report.as_json())
    return 0 if report.holds else 1


def _cmd_extremal(args) -> int:
    pred = families.IntersectionPredicate.parse(args.pred)
    result = families.max_family(args.n, pred)
    _emit_json(result.as_json())
    ceiling = result.conjectured * (1 << args.n)
    return 0 if result.max_size <= ceiling else 1


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "dist":
            return _cmd_dist(args)
        if args.command == "joint":
            return _cmd_joint(args)
        if args.command == "two-point-check":
            return _emit_scan(
                bounds.verify_two_point_formula(args.max, jobs=args.threads), args.format
            )
        if args.command == "obs-check":
            return _emit_scan(
                bounds.observation_checks(args.max, jobs=args.threads), args.format
            )
        if args.command == "triple-scan":
            return _emit_scan(
                bounds.scan_triple_bound(args.max, jobs=args.threads), args.format
            )
        if args.command == "pzero-scan":
            return _emit_scan(
                bounds.scan_pzero_bounds(args.max, args.size, jobs=args.threads), args.format
            )
        if args.command == "bohr-scan":
            return _emit_scan(
                bounds.scan_bohr(args.max, args.size, jobs=args.threads), args.format
            )
        if args.command == "mu":
            return _cmd_mu(args)
        if args.command == "verify-cert":
            return _cmd_verify_cert(args)
        if args.command == "tail-verify":
            return _cmd_tail_verify(args)
        if args.command == "lp-search":
            return _cmd_lp_search(args)
        if args.command == "build-nu":
            return _cmd_build_nu(args)
        if args.command == "fourier-check":
            return _cmd_fourier_check(args)
        if args.command == "pointmass-check":
            return _cmd_pointmass_check(args)
        if args.command == "extremal":
            return _cmd_extremal(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint() -> None:
    sys.exit(run())
