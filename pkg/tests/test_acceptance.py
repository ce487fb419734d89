"""Acceptance criteria, one test each, with wall-clock limits.

Every test prints a single ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` for just the summary.
"""
import itertools
import json
import sys
import tempfile
import time
from math import gcd
from pathlib import Path

import numpy as np
import pytest

from torelli import casson, checks, cli, euclid, linalg, mod2, quadratic, splittings, symplectic, torus


def c1_form_census():
    forms = quadratic.enumerate_forms(3)
    counts = (sum(quadratic.arf(f) == 0 for f in forms), sum(quadratic.arf(f) == 1 for f in forms))
    return len(forms) == 64 and counts == (36, 28), f"arf counts {counts}"


def c2_orbit_count():
    order = mod2.sp_order_mod2(3)
    orbits = mod2.hyperelliptic_orbit_count(3)
    size = int(mod2.enumerate_sp_mod2_uncached(3).size)
    return (order, orbits, size) == (1451520, 36, 1451520), f"order {order}, orbits {orbits}, enumerated {size}"


def c3_birman_craggs():
    arf0 = quadratic.enumerate_forms(3, 0)
    ones = [f for f in arf0 if quadratic.birman_craggs_involution_value(f) == 1]
    agree = all(quadratic.birman_craggs_involution_value(f) == quadratic.birman_craggs_three_term(f)
                for f in arf0)
    ok = len(arf0) == 36 and ones == [quadratic.reference_form()] and agree
    return ok, f"{len(ones)} form(s) with value 1, three-term agrees: {agree}"


def c4_morita():
    base = casson.standard_linking_form()
    l1, l3 = casson.pushforward(base, casson.PSI1), casson.pushforward(base, casson.PSI3)
    cycle = casson.CycleDescriptor(splittings.standard_splitting())
    lam = [[casson.morita_twist_value(l, s) for s in (cycle.gamma_side, cycle.delta_side)] for l in (l1, l3)]
    pairing = casson.cycle_pairing(l1, l3, cycle)
    return lam == [[1, 0], [0, 1]] and pairing == -1, f"lambda {lam}, pairing {pairing}"


def c5_euclid():
    rng = np.random.default_rng(0)
    bad = 0
    for refined in (False, True):
        for _ in range(1000):
            x = euclid.random_sl2(rng, int(rng.integers(0, 12)), refined=refined)
            red = euclid.reduce_refined_trace(x) if refined else euclid.reduce_full_trace(x)
            ok = linalg.matmul(red.word.matrix(), linalg.transpose(x)) == euclid.IDENTITY2
            if refined:
                ok = ok and red.word.in_refined_subgroup() and red.iterations <= euclid.descent_bound(x)
            bad += not ok
    return bad == 0, f"{bad} failures in 2000 reductions"


def c6_invariants():
    results = {r["name"]: r["actual"] for r in checks.check_invariants(quadratic.reference_form(), seed=0)}
    return all(v == 0 for v in results.values()) and len(results) == 3, f"failures {results}"


def c7_splitting_criterion():
    std = splittings.standard_splitting()
    good = [p for p in itertools.permutations(range(3)) if splittings.is_symmetric_splitting(std.permuted(p))]
    rng = np.random.default_rng(0)
    bad = 0
    for _ in range(100):
        s = splittings.random_symmetric_splitting(rng, 4)
        c, sign = splittings.canonical_form(s)
        r, rsign = splittings.canonical_form(s.reversed())
        bad += not (splittings.canonical_form(c) == (c, 1) and r == c and rsign == -sign)
    return good == [(0, 1, 2), (2, 1, 0)] and bad == 0, f"orderings {good}, canonical failures {bad}"


def c8_certificate():
    cycles = [casson.CycleDescriptor(s) for s in checks.family(0)]
    cert = casson.find_independence_certificate(cycles, seed=0, budget=100_000)
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "cert.json"
        path.write_text(json.dumps(cert.to_json()))
        replay, code = cli.execute(["cert", "verify", str(path)])
    ok = cert.rank == 3 and code == 0 and replay["outputs"]["valid"]
    return ok, f"rank {cert.rank} after {cert.meta['candidates_tried']} candidates, replay exit {code}"


def c9_generic_class():
    family = checks.family(0)
    gc = splittings.choose_generic_class(family, seed=0, coordinate_bound=5)
    comps = [splittings.project(gc.x, s) for s in family]
    nonzero = all(any(v) for c in comps for v in c)
    sums_ok = all(tuple(map(sum, zip(*c))) == gc.x for c in comps)
    parts = [frozenset(symplectic.primitive_part(v)[1] for v in c) for c in comps]
    distinct = len(set(parts)) == len(parts) and len(set(map(frozenset, comps))) == len(comps)
    ok = (symplectic.is_primitive(gc.x) and max(map(abs, gc.x)) <= 5 and nonzero and sums_ok and distinct)
    return ok, f"x = {list(gc.x)}"


def c10_torus():
    count = sum(1 for m in range(-20, 21) for n in range(-20, 21) if gcd(m, n) == 1)
    failures = checks.torus_failures(20)
    return failures == 0, f"{failures} failures over {count} classes"


CRITERIA = [
    (1, "form census 36/28", c1_form_census, 1),
    (2, "Sp(6,2) order, orbit count and enumeration", c2_orbit_count, 60),
    (3, "Birman-Craggs uniqueness", c3_birman_craggs, 1),
    (4, "Morita desk reproduction", c4_morita, 1),
    (5, "Euclid suites", c5_euclid, 10),
    (6, "algebraic invariants", c6_invariants, None),
    (7, "splitting criterion", c7_splitting_criterion, None),
    (8, "independence certificate", c8_certificate, 120),
    (9, "generic class", c9_generic_class, 10),
    (10, "torus realizations", c10_torus, 10),
]


def evaluate(func, limit):
    t0 = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - t0
    in_time = limit is None or elapsed < limit
    return ok and in_time, elapsed, detail


def line(number, title, passed, elapsed, limit, detail):
    bound = f"< {limit} s" if limit else "no limit"
    return f"{'PASS' if passed else 'FAIL'}  [{number:2d}] {title}: {detail} ({elapsed:.2f} s, {bound})"


@pytest.mark.parametrize("number,title,func,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, func, limit, capsys):
    passed, elapsed, detail = evaluate(func, limit)
    with capsys.disabled():
        print("\n" + line(number, title, passed, elapsed, limit, detail))
    assert passed, detail


if __name__ == "__main__":
    results = [evaluate(f, lim) + (n, t, lim) for n, t, f, lim in CRITERIA]
    for passed, elapsed, detail, n, t, lim in results:
        print(line(n, t, passed, elapsed, lim, detail))
    sys.exit(0 if all(r[0] for r in results) else 1)
