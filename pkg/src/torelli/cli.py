"""Command-line front end.

Every command prints a single JSON report::

    {"command", "inputs", "outputs", "checks", "seed", "elapsed_ms"}

Exit status is 0 when every check passes, 1 when a check fails, 2 on usage
errors (bad arguments or malformed JSON) and 3 when a library call raises.
``elapsed_ms`` is null unless ``--timing`` is given, so that identical
arguments always produce identical output.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import casson, checks, euclid, linalg, mod2, quadratic, splittings, torus
from .errors import TorelliError
from .quadratic import SpQuadraticForm

log = logging.getLogger(__name__)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _check(name, expected, actual):
    return {"name": name, "expected": expected, "actual": actual, "pass": expected == actual}


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc


def _parse_json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON for {what}: {exc}") from exc


def _form_from_args(args) -> SpQuadraticForm:
    if args.json:
        return SpQuadraticForm.from_json(_load_json(args.json))
    if args.values:
        try:
            return SpQuadraticForm(tuple(int(t) for t in args.values.split(",")))
        except ValueError as exc:
            raise UsageError(f"bad --values: {exc}") from exc
    return quadratic.reference_form()


def _splitting_list(obj, key):
    items = obj[key] if isinstance(obj, dict) and key in obj else obj
    if isinstance(items, dict):
        items = [items]
    return [splittings.OrthogonalSplitting.from_json(s) for s in items]


# ---------------------------------------------------------------- forms

def cmd_forms_enumerate(args):
    forms = quadratic.enumerate_forms(args.g, args.arf)
    outputs = {"count": len(forms), "forms": [list(f.basis_values) for f in forms]}
    checks_ = []
    if args.arf is not None:
        checks_.append(_check("census-formula", quadratic.census_formula(args.g, args.arf), len(forms)))
    return {"g": args.g, "arf": args.arf}, outputs, checks_


def cmd_forms_arf(args):
    form = _form_from_args(args)
    return form.to_json(), {"arf": quadratic.arf(form)}, []


def cmd_forms_bc(args):
    form = _form_from_args(args)
    value = quadratic.birman_craggs_involution_value(form)
    return form.to_json(), {"value": value}, [
        _check("three-term-agrees", value, quadratic.birman_craggs_three_term(form))]


# ---------------------------------------------------------------- euclid

def cmd_euclid_reduce(args):
    x = linalg.as_matrix(_parse_json_arg(args.matrix, "--matrix"))
    red = euclid.reduce_refined_trace(x) if args.refined else euclid.reduce_full_trace(x)
    verified = linalg.matmul(red.word.matrix(), linalg.transpose(x)) == euclid.IDENTITY2
    outputs = {"word": red.word.to_json(), "verified": verified, "iterations": red.iterations}
    checks_ = [_check("verified", True, verified)]
    if args.refined:
        checks_.append(_check("even-R1-exponents", True, red.word.in_refined_subgroup()))
    return {"matrix": [list(r) for r in x], "refined": args.refined}, outputs, checks_


# ---------------------------------------------------------------- splittings

def cmd_splitting_check(args):
    s = splittings.OrthogonalSplitting.from_json(_load_json(args.json))
    orth = splittings.is_orthogonal_splitting(*s.summands)
    outputs = {"orthogonal": orth}
    if orth:
        outputs["arf_pattern"] = list(splittings.arf_pattern(s))
        outputs["symmetric"] = splittings.is_symmetric_splitting(s)
    return s.to_json(), outputs, []


def cmd_splitting_canonical(args):
    s = splittings.OrthogonalSplitting.from_json(_load_json(args.json))
    canon, sign = splittings.canonical_form(s)
    return s.to_json(), {"canonical": canon.to_json(), "sign": sign}, []


def cmd_splitting_generic_class(args):
    family = _splitting_list(_load_json(args.json), "family")
    gc = splittings.choose_generic_class(family, seed=args.seed, coordinate_bound=args.bound)
    return {"family": [s.to_json() for s in family], "bound": args.bound}, gc.to_json(), []


def cmd_splitting_sample(args):
    family = splittings.random_symmetric_family(args.n, args.seed, word_length=args.word_length)
    return {"n": args.n, "word_length": args.word_length}, {"family": [s.to_json() for s in family]}, []


# ---------------------------------------------------------------- torus

def cmd_torus_realize(args):
    try:
        w = tuple(int(t) for t in args.cls.split(","))
    except ValueError as exc:
        raise UsageError(f"bad --class {args.cls!r}") from exc
    if len(w) != 2:
        raise UsageError("--class takes two integers m,n")
    checks_ = []
    if args.mode == "t1":
        lines = [torus.realize_symmetric(w)]
        checks_ += [_check("involution-invariant", True, lines[0].is_involution_invariant()),
                    _check("avoids-p", True, lines[0].avoids([torus.P]))]
    elif args.mode == "t21":
        lines = [torus.realize_nu1(w)]
        checks_ += [_check("involution-invariant", True, lines[0].is_involution_invariant()),
                    _check("avoids-p-q", True, lines[0].avoids())]
    else:
        lines = list(torus.realize_nu0_pair(w))
        z1, z2 = lines
        checks_ += [_check("disjoint", True, torus.disjoint(z1, z2)),
                    _check("avoids-p-q", True, z1.avoids() and z2.avoids()),
                    _check("swapped-by-involution", True, z1.image_under_involution().same_set(z2)),
                    _check("one-point-per-annulus", [1, 1], list(torus.annulus_occupancy(z1, z2)))]
    if args.svg:
        Path(args.svg).write_text(torus.fundamental_domain_svg(lines))
    return {"class": list(w), "mode": args.mode}, {"lines": [ln.to_json() for ln in lines]}, checks_


# ---------------------------------------------------------------- certificates

def cmd_cert_find(args):
    obj = _load_json(args.cycles)
    cycles = [casson.CycleDescriptor(s) for s in _splitting_list(obj, "cycles")]
    hints = [(casson.PSI1, casson.PSI3)] if args.hints == "psi" else []
    cert = casson.find_independence_certificate(cycles, seed=args.seed, budget=args.budget, hints=hints)
    doc = cert.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n")
    return {"cycles": [c.to_json() for c in cycles], "budget": args.budget, "hints": args.hints}, doc, [
        _check("full-rank", len(cycles), cert.rank)]


def cmd_cert_verify(args):
    obj = _load_json(args.file)
    try:
        cert = casson.IndependenceCertificate.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed certificate: {exc}") from exc
    result = casson.verify_certificate(cert)
    return {"file": str(args.file)}, result, [_check("valid", True, result["valid"])]


# ---------------------------------------------------------------- census

def cmd_census_sp_order(args):
    return {"g": args.g}, {"order": mod2.sp_order_mod2(args.g)}, []


def cmd_census_orbit_count(args):
    return {"g": args.g}, {"orbits": mod2.hyperelliptic_orbit_count(args.g)}, []


def cmd_census_orbits(args):
    group = mod2.enumerate_sp_mod2(args.g) if args.brute_force else None
    census = mod2.form_orbit_census(args.g, group)
    outputs = {"census": {str(k): v for k, v in census.items()}}
    expected = {str(v): quadratic.census_formula(args.g, v) for v in (0, 1)}
    return {"g": args.g, "brute_force": args.brute_force}, outputs, [
        _check("single-orbit-per-arf-class", expected, outputs["census"])]


def cmd_census_enumerate(args):
    codes = mod2.enumerate_sp_mod2(args.g)
    return {"g": args.g}, {"count": int(codes.size)}, [
        _check("matches-order-formula", mod2.sp_order_mod2(args.g), int(codes.size))]


def cmd_self_check(args):
    results = checks.run_battery(seed=args.seed, timing=args.timing)
    return {}, {"passed": sum(r["pass"] for r in results), "total": len(results)}, results


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="fill in elapsed_ms")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="torelli", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func):
        p = sub.add_parser(name, parents=[common])
        p.set_defaults(func=func, command=f"{sub.group_name} {name}")
        return p

    def group(name):
        sub = groups.add_parser(name).add_subparsers(dest="action", required=True,
                                                     parser_class=_Parser)
        sub.group_name = name
        return sub

    forms = group("forms")
    p = leaf(forms, "enumerate", cmd_forms_enumerate)
    p.add_argument("--g", type=int, default=3)
    p.add_argument("--arf", type=int, choices=(0, 1))
    for name, func in (("arf", cmd_forms_arf), ("bc", cmd_forms_bc)):
        p = leaf(forms, name, func)
        p.add_argument("--json", help="form as {genus, basis_values}")
        p.add_argument("--values", help="comma-separated basis values (default: reference form)")

    eu = group("euclid")
    p = leaf(eu, "reduce", cmd_euclid_reduce)
    p.add_argument("--matrix", required=True, help="2x2 JSON matrix [[x1, x2], [y1, y2]]")
    p.add_argument("--refined", action="store_true")

    sp = group("splitting")
    for name, func in (("check", cmd_splitting_check), ("canonical", cmd_splitting_canonical)):
        leaf(sp, name, func).add_argument("--json", required=True)
    p = leaf(sp, "generic-class", cmd_splitting_generic_class)
    p.add_argument("--json", required=True, help="list of splittings or {family: [...]}")
    p.add_argument("--bound", type=int, default=splittings.DEFAULT_BOUND)
    p = leaf(sp, "sample", cmd_splitting_sample)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--word-length", type=int, default=3)

    to = group("torus")
    p = leaf(to, "realize", cmd_torus_realize)
    p.add_argument("--class", dest="cls", required=True, help="m,n")
    p.add_argument("--mode", choices=("t1", "t21", "t22"), required=True)
    p.add_argument("--svg")

    ce = group("cert")
    p = leaf(ce, "find", cmd_cert_find)
    p.add_argument("--cycles", required=True)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--hints", choices=("psi", "none"), default="psi")
    p.add_argument("--out")
    p = leaf(ce, "verify", cmd_cert_verify)
    p.add_argument("file")

    cs = group("census")
    for name, func in (("sp-order", cmd_census_sp_order), ("orbit-count", cmd_census_orbit_count),
                       ("enumerate", cmd_census_enumerate)):
        leaf(cs, name, func).add_argument("--g", type=int, default=3)
    p = leaf(cs, "orbits", cmd_census_orbits)
    p.add_argument("--g", type=int, default=3)
    p.add_argument("--brute-force", action="store_true", help="act with every group element")

    p = groups.add_parser("paper-check", parents=[common])
    p.set_defaults(func=cmd_self_check, command="paper-check")
    return parser


def execute(argv) -> tuple[dict, int]:
    """Run one command; returns (report, exit code)."""
    t0 = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return {"error": "usage", "detail": str(exc)}, EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        inputs, outputs, checks_ = args.func(args)
    except UsageError as exc:
        return {"command": args.command, "error": "usage", "detail": str(exc)}, EXIT_USAGE
    except (TorelliError, ArithmeticError) as exc:
        kind = getattr(exc, "kind", "arithmetic")
        return {"command": args.command, "error": kind, "detail": str(exc)}, EXIT_ERROR
    report = {
        "command": args.command,
        "inputs": inputs,
        "outputs": outputs,
        "checks": checks_,
        "seed": args.seed,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000) if args.timing else None,
    }
    return report, EXIT_OK if all(c["pass"] for c in checks_) else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    report, code = execute(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
