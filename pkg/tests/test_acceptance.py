"""Acceptance gate: one test per published criterion, each printing a single
pass/fail line (run with -s to see them) and enforcing its own tolerance and
time budget."""

import math
import random
import time
from fractions import Fraction

from ncsolenoid.bimodule import SamplePlan, identity_suite
from ncsolenoid.exactnum import QuadReal, frac1
from ncsolenoid.morita import (
    ProjectionData,
    SearchBounds,
    certificate_search,
    condition_check,
    displayed_mobius,
    heisenberg_partner_spec,
    projection_partner,
    relate_check,
    trace_line,
)
from ncsolenoid.multiplier import (
    GammaElem,
    cocycle_defect,
    eta_bar,
    iota_embed,
    lambda_embed,
    psi_alpha,
    psi_from_window,
    rho,
)
from ncsolenoid.padic import PAdic, from_rational, rational_frac_part, truncate_sum
from ncsolenoid.solenoid import (
    SolenoidSpec,
    coherence_check,
    equal_in_Xi,
    from_even_entries,
)
from ncsolenoid.morita import heisenberg_partner

THETA = QuadReal.sqrt_of(2) - 1


def report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num:02d}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num:02d}: {detail}"


def coprime_to(rng: random.Random, p: int, lo: int, hi: int) -> int:
    n = rng.randint(lo, hi)
    while n % p == 0 or n == 0:
        n += 1
    return n


def random_unit_spec(rng: random.Random, p: int) -> SolenoidSpec:
    D = rng.choice([2, 3, 5, 7])
    theta = frac1((QuadReal.sqrt_of(D) * rng.randint(1, 3) + rng.randint(-5, 5)) / rng.randint(2, 9))
    if not theta:
        theta = frac1(QuadReal.sqrt_of(D))
    x0 = rng.randint(1, p - 1)
    pre = tuple(rng.randint(0, p - 1) for _ in range(rng.randint(0, 3)))
    per = tuple(rng.randint(0, p - 1) for _ in range(rng.randint(1, 3)))
    if all(d == 0 for d in pre + per):
        per = (1,)
    return SolenoidSpec(p, theta, PAdic(p, 0, (x0,) + pre, per))


def rand_gamma(rng: random.Random, p: int, kmax: int = 4, jmax: int = 40) -> GammaElem:
    from ncsolenoid.exactnum import PFrac

    return GammaElem(
        PFrac(p, rng.randint(-jmax, jmax), rng.randint(0, kmax)),
        PFrac(p, rng.randint(-jmax, jmax), rng.randint(0, kmax)),
    )


def condition_instances(seed: int, want: int, passing: bool):
    rng = random.Random(seed)
    out = []
    while len(out) < want:
        p = rng.choice([2, 3, 5])
        spec = random_unit_spec(rng, p)
        c0 = rng.randint(1, 6)
        d0 = rng.randint(0, 6)
        proj = ProjectionData(c0 + d0 + 1, c0, d0)
        if condition_check(p, proj, spec.x(0)) == passing:
            out.append((spec, proj))
    return out


def test_criterion_01_fractional_part_window_formula():
    # multiplying a rational by j1/p^k1 * j2/p^k2 only exposes digits below
    # index k1+k2; the windowed digit sum reproduces the fractional part mod Z
    rng = random.Random(101)
    t0 = time.monotonic()
    failures = 0
    for _ in range(1000):
        p = rng.choice([2, 3, 5, 7])
        q = Fraction(coprime_to(rng, p, -60, 60), coprime_to(rng, p, 1, 40))
        q *= Fraction(p) ** rng.randint(-6, 6)
        x = from_rational(p, q)
        k1, k2 = rng.randint(0, 6), rng.randint(0, 6)
        s1 = Fraction(rng.randint(-40, 40), p**k1)
        s2 = Fraction(rng.randint(-40, 40), p**k2)
        lhs = rational_frac_part(p, q * s1 * s2).as_fraction()
        window = truncate_sum(x, x.ord, k1 + k2 - 1).as_fraction()
        if (lhs - window * s1 * s2).denominator != 1:
            failures += 1
    dt = time.monotonic() - t0
    report(1, failures == 0 and dt < 5.0, f"1000 cases, {failures} failures, {dt:.2f}s")


def test_criterion_02_truncated_inverse_window_product():
    # Hensel inverse of a truncated unit: digit windows multiply to 1 mod p^(k+1)
    rng = random.Random(202)
    t0 = time.monotonic()
    failures = 0
    for _ in range(500):
        p = rng.choice([2, 3, 5, 7])
        q = Fraction(coprime_to(rng, p, 1, 60), coprime_to(rng, p, 1, 60))
        k = rng.randint(0, 30)
        t = from_rational(p, q).truncate(k + 1)
        w = t.invert()
        xa = sum(t.digit(i) * p**i for i in range(k + 1))
        ya = sum(w.digit(i) * p**i for i in range(k + 1))
        if (xa * ya) % p ** (k + 1) != 1:
            failures += 1
    dt = time.monotonic() - t0
    report(2, failures == 0 and dt < 5.0, f"500 cases, {failures} failures, {dt:.2f}s")


def test_criterion_03_multiplier_cocycle_and_normalization():
    rng = random.Random(303)
    failures = 0
    trials = 0
    for p in (2, 2, 3, 3, 5, 7):
        spec = random_unit_spec(rng, p)
        sigma = lambda g, h: psi_alpha(spec, g, h)
        e = GammaElem.identity(p)
        for _ in range(1000):
            trials += 1
            r, s, t = (rand_gamma(rng, p) for _ in range(3))
            if not cocycle_defect(sigma, r, s, t).is_zero:
                failures += 1
            if not (psi_alpha(spec, r, e).is_zero and psi_alpha(spec, e, r).is_zero):
                failures += 1
    report(3, failures == 0, f"{trials} triples over 6 specs, {failures} failures")


def test_criterion_04_annihilator_and_conjugate_pairing():
    rng = random.Random(404)
    t0 = time.monotonic()
    failures = 0
    tuples = 0
    for p in (2, 3, 5):
        spec = random_unit_spec(rng, p)
        x = spec.digits
        window = heisenberg_partner(spec, 12)
        for _ in range(200):
            tuples += 1
            g, s = rand_gamma(rng, p), rand_gamma(rng, p)
            if not rho(iota_embed(x, spec.theta, g), lambda_embed(x, spec.theta, s)).is_zero:
                failures += 1
            t = rand_gamma(rng, p)
            lhs = eta_bar(lambda_embed(x, spec.theta, s), lambda_embed(x, spec.theta, t))
            if lhs != psi_from_window(window, s, t):
                failures += 1
    dt = time.monotonic() - t0
    report(4, failures == 0 and dt < 10.0, f"{tuples} tuples, {failures} failures, {dt:.2f}s")


def test_criterion_05_partner_window_coherence():
    failures = 0
    for spec, proj in condition_instances(505, 20, passing=True):
        win = projection_partner(spec, proj, 20)
        try:
            defects = coherence_check(win, spec.p, 2)
        except (ValueError, ArithmeticError):
            failures += 1
            continue
        if not all(isinstance(d, int) and 0 <= d < spec.p**2 for d in defects):
            failures += 1
    report(5, failures == 0, f"20 instances to depth 20, {failures} failures")


def test_criterion_06_trace_line_coprimality():
    failures = 0
    for spec, proj in condition_instances(505, 20, passing=True):
        for n in range(51):
            line = trace_line(spec, proj, n)
            if math.gcd(line.c, line.d) != 1:
                failures += 1
                break
    witnessed = 0
    for spec, proj in condition_instances(606, 20, passing=False):
        hit = any(
            math.gcd(trace_line(spec, proj, n).c, trace_line(spec, proj, n).d) > 1
            for n in range(26)
        )
        if hit or math.gcd(proj.c0, proj.d0) > 1:
            witnessed += 1
    ok = failures == 0 and witnessed == 20
    report(6, ok, f"20 coprime to n=50, {failures} failures; {witnessed}/20 violations witnessed")


def test_criterion_07_projection_vs_heisenberg_agreement():
    rng = random.Random(707)
    failures = 0
    dets = set()
    for _ in range(10):
        spec = random_unit_spec(rng, rng.choice([2, 3, 5, 7]))
        if not relate_check(spec, 8):
            failures += 1
            continue
        dets.add(displayed_mobius(spec, 0).det)
        win = projection_partner(spec, ProjectionData(1, 1, 0), 8)
        heis = heisenberg_partner_spec(spec)
        flipped = SolenoidSpec(spec.p, -heis.theta, heis.digits.negate())
        if not equal_in_Xi(from_even_entries(spec.p, win), flipped, 16):
            failures += 1
    print(f"criterion 07: note: closed-form transform has det {sorted(dets)}; "
          "the det +1 normalization used for the window is its mod-1 negative")
    report(7, failures == 0, f"10 instances, exact to n=8 and mod-1 at N=16, {failures} failures")


def test_criterion_08_partner_involution():
    rng = random.Random(808)
    failures = 0
    for _ in range(10):
        spec = random_unit_spec(rng, rng.choice([2, 3, 5]))
        back = heisenberg_partner_spec(heisenberg_partner_spec(spec))
        if back != spec or not equal_in_Xi(back, spec, 10):
            failures += 1
    report(8, failures == 0, f"10 instances, entries 0..10 exact, {failures} failures")


def test_criterion_09_bimodule_identity_suite():
    t0 = time.monotonic()
    plan = SamplePlan(seed=909, hats=20, r_points=200, t_points=200)
    proj = ProjectionData(1, 1, 0)
    worst = 0.0
    failures = []
    for p, levels in ((2, (0, 1, 2)), (3, (0, 1))):
        spec = SolenoidSpec(p, THETA, PAdic.from_int(p, 1))
        for n in levels:
            errs = identity_suite(spec, proj, n, plan)
            worst = max(worst, max(errs.values()))
            for key, val in errs.items():
                if val > 1e-9:
                    failures.append((p, n, key, val))
    spec2 = SolenoidSpec(2, THETA, PAdic.from_int(2, 1))
    small = SamplePlan(seed=909, hats=4, r_points=80, t_points=80)
    corrupted = identity_suite(spec2, proj, 0, small, corrupt_gamma=0.01)
    if corrupted["iota_left_action"] <= 1e-3:
        failures.append(("corrupt", 0, "iota_left_action", corrupted["iota_left_action"]))
    dt = time.monotonic() - t0
    ok = not failures and dt < 60.0
    report(9, ok, f"5 levels, worst deviation {worst:.2e}, corrupt-gamma detected, {dt:.2f}s")


def test_criterion_10_obstruction_and_certificate():
    a = SolenoidSpec(2, THETA, PAdic.from_int(2, 1))
    c = SolenoidSpec(3, THETA, PAdic.from_int(3, 1))
    certificate_search(a, c)  # warm-up
    best = min(
        (lambda t0: (certificate_search(a, c), time.monotonic() - t0)[1])(time.monotonic())
        for _ in range(5)
    )
    assert certificate_search(a, c).status == "impossible"

    rng = random.Random(707)
    bounds = SearchBounds(max_c0=4, max_d0=4, max_k=4, entries=8)
    found = 0
    for _ in range(10):
        spec = random_unit_spec(rng, rng.choice([2, 3, 5, 7]))
        res = certificate_search(spec, heisenberg_partner_spec(spec), bounds)
        if res.status == "found":
            found += 1
    ok = best < 1e-3 and found == 10
    report(10, ok, f"impossible in {best * 1e6:.0f}us, {found}/10 round-trip certificates found")
