"""End-to-end battery reproducing every desk-scale number.

Each check returns a dict ``{name, expected, actual, pass}``; ``run_battery``
collects them in a fixed order.  The ``paper-check`` CLI command is a thin
wrapper around it.
"""
from __future__ import annotations

import time
from pathlib import Path

import numpy as np

from . import casson, euclid, linalg, mod2, quadratic, splittings, symplectic, torus
from .quadratic import SpQuadraticForm


def _check(name, expected, actual, ok=None, **extra):
    out = {"name": name, "expected": expected, "actual": actual,
           "pass": bool(expected == actual if ok is None else ok)}
    out.update(extra)
    return out


def check_form_census():
    forms = quadratic.enumerate_forms(3)
    counts = [sum(1 for f in forms if quadratic.arf(f) == v) for v in (0, 1)]
    return [_check("form-census", [36, 28], counts)]


def check_orbit_count(cache_directory=None):
    codes = mod2.enumerate_sp_mod2(3, cache_directory)
    return [
        _check("sp-order", 1451520, mod2.sp_order_mod2(3)),
        _check("orbit-count", 36, mod2.hyperelliptic_orbit_count(3)),
        _check("sp-enumeration", 1451520, int(codes.size)),
    ]


def check_bc_uniqueness(reference: SpQuadraticForm):
    arf0 = quadratic.enumerate_forms(3, 0)
    ones = [f for f in arf0 if quadratic.birman_craggs_involution_value(f) == 1]
    agree = all(quadratic.birman_craggs_involution_value(f) == quadratic.birman_craggs_three_term(f)
                for f in arf0)
    unique = [list(f.basis_values) for f in ones]
    return [
        _check("bc-uniqueness", [list(reference.basis_values)], unique),
        _check("bc-three-term", True, agree),
    ]


def check_morita():
    base = casson.standard_linking_form()
    cycle = casson.CycleDescriptor(splittings.standard_splitting())
    l1 = casson.pushforward(base, casson.PSI1)
    l3 = casson.pushforward(base, casson.PSI3)
    lam = [[casson.morita_twist_value(l, side) for side in (cycle.gamma_side, cycle.delta_side)]
           for l in (l1, l3)]
    return [
        _check("morita-lambda", [[1, 0], [0, 1]], lam),
        _check("morita-pairing", -1, casson.cycle_pairing(l1, l3, cycle)),
    ]


def check_euclid(seed=0, n=1000):
    rng = np.random.default_rng(seed)
    full_fail = refined_fail = 0
    for _ in range(n):
        x = euclid.random_sl2(rng, int(rng.integers(0, 12)))
        w = euclid.reduce_full(x)
        if linalg.matmul(w.matrix(), linalg.transpose(x)) != euclid.IDENTITY2:
            full_fail += 1
    for _ in range(n):
        x = euclid.random_sl2(rng, int(rng.integers(0, 12)), refined=True)
        red = euclid.reduce_refined_trace(x)
        ok = (linalg.matmul(red.word.matrix(), linalg.transpose(x)) == euclid.IDENTITY2
              and red.word.in_refined_subgroup()
              and red.iterations <= euclid.descent_bound(x))
        refined_fail += not ok
    return [_check("euclid-full", 0, full_fail), _check("euclid-refined", 0, refined_fail)]


def check_invariants(reference: SpQuadraticForm, seed=0):
    rng = np.random.default_rng(seed)
    arf_fail = 0
    std = symplectic.standard_basis()
    for _ in range(200):
        m = symplectic.random_sp_from_rng(rng, int(rng.integers(1, 16)))
        basis = [symplectic.apply(m, v) for v in std]
        arf_fail += quadratic.arf(reference, basis) != quadratic.arf(reference)
    base = casson.standard_linking_form()
    seifert_fail = 0
    for _ in range(100):
        m = symplectic.random_sp_from_rng(rng, int(rng.integers(1, 16)))
        seifert_fail += not casson.satisfies_seifert_relation(casson.pushforward(base, m).matrix)
    morita_fail = 0
    for _ in range(100):
        form = casson.pushforward(base, symplectic.random_sp_from_rng(rng, 8))
        pair = (symplectic.a(1), symplectic.b(1))
        x = euclid.random_sl2(rng, 6)
        (p, q), (r, s) = x
        u, v = pair
        new = (linalg.vadd(linalg.vscale(p, u), linalg.vscale(q, v)),
               linalg.vadd(linalg.vscale(r, u), linalg.vscale(s, v)))
        morita_fail += casson.morita_twist_value(form, pair) != casson.morita_twist_value(form, new)
    return [_check("arf-invariance", 0, arf_fail), _check("seifert-preserved", 0, seifert_fail),
            _check("morita-invariance", 0, morita_fail)]


def check_splitting_criterion(seed=0):
    from itertools import permutations
    std = splittings.standard_splitting()
    good = [list(p) for p in permutations(range(3))
            if splittings.is_symmetric_splitting(std.permuted(p))]
    rng = np.random.default_rng(seed)
    fail = 0
    for _ in range(100):
        s = splittings.random_symmetric_splitting(rng, 3)
        c, sign = splittings.canonical_form(s)
        c2, sign2 = splittings.canonical_form(c)
        r, rsign = splittings.canonical_form(s.reversed())
        fail += not (c2 == c and sign2 == 1 and r == c and rsign == -sign)
    return [_check("splitting-orderings", [[0, 1, 2], [2, 1, 0]], good),
            _check("canonical-idempotent", 0, fail)]


def family(seed=0):
    return splittings.random_symmetric_family(3, seed, word_length=3)


def check_certificate(seed=0):
    cycles = [casson.CycleDescriptor(s) for s in family(seed)]
    cert = casson.find_independence_certificate(cycles, seed=seed, budget=100_000)
    replay = casson.verify_certificate(casson.IndependenceCertificate.from_json(cert.to_json()))
    return [_check("certificate-rank3", 3, cert.rank),
            _check("certificate-replay", True, replay["valid"])]


def check_generic_class(seed=0):
    fam = family(seed)
    gc = splittings.choose_generic_class(fam, seed=seed, coordinate_bound=5)
    ok = splittings.generic_class_for(gc.x, fam) is not None
    for s, comp in zip(fam, gc.components):
        ok = ok and splittings.project(gc.x, s) == comp
    return [_check("generic-class", True, ok, x=list(gc.x))]


def torus_failures(bound=20) -> int:
    fail = 0
    for w1 in range(-bound, bound + 1):
        for w2 in range(-bound, bound + 1):
            if np.gcd(w1, w2) != 1:
                continue
            w = (w1, w2)
            line = torus.realize_symmetric(w)
            fail += not (line.is_involution_invariant() and line.avoids([torus.P])
                         and line.homology_class == w)
            if torus.nu(w):
                line = torus.realize_nu1(w)
                fail += not (line.is_involution_invariant() and line.avoids())
            else:
                z1, z2 = torus.realize_nu0_pair(w)
                fail += not (torus.disjoint(z1, z2) and z1.avoids() and z2.avoids()
                             and z1.image_under_involution().same_set(z2)
                             and torus.annulus_occupancy(z1, z2) == (1, 1))
    return fail


def check_torus():
    return [_check("torus-realizations", 0, torus_failures())]


def run_battery(seed: int = 0, reference: SpQuadraticForm | None = None,
                cache_directory: Path | None = None, timing: bool = False) -> list[dict]:
    reference = reference or quadratic.reference_form()
    steps = [
        check_form_census,
        lambda: check_orbit_count(cache_directory),
        lambda: check_bc_uniqueness(reference),
        check_morita,
        lambda: check_euclid(seed),
        lambda: check_invariants(reference, seed),
        lambda: check_splitting_criterion(seed),
        lambda: check_certificate(seed),
        lambda: check_generic_class(seed),
        check_torus,
    ]
    out = []
    for step in steps:
        t0 = time.perf_counter()
        results = step()
        if timing:
            for r in results:
                r["seconds"] = round(time.perf_counter() - t0, 3)
        out.extend(results)
    return out
