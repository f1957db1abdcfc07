import random
from fractions import Fraction

import pytest

from ncsolenoid.exactnum import PFrac, QuadReal, frac1
from ncsolenoid.padic import PAdic, PrecisionError
from ncsolenoid.multiplier import (
    GammaElem,
    MPoint,
    PhaseArg,
    cocycle_defect,
    eta,
    eta_bar,
    iota_embed,
    lambda_embed,
    psi_alpha,
    psi_from_window,
    rho,
)
from ncsolenoid.solenoid import SolenoidSpec, alpha_at

SQRT2 = QuadReal.sqrt_of(2)


def make_spec(p, theta, x):
    return SolenoidSpec(p, theta, PAdic.from_rational(p, x))


def rand_gamma(rng, p, kmax=5, jmax=40):
    return GammaElem(
        PFrac(p, rng.randint(-jmax, jmax), rng.randint(0, kmax)),
        PFrac(p, rng.randint(-jmax, jmax), rng.randint(0, kmax)),
    )


def rand_spec(rng, p):
    theta = frac1(
        QuadReal(Fraction(rng.randint(0, 20), 21), Fraction(rng.randint(1, 6), 7), rng.choice([2, 3, 5]))
    )
    num = rng.randint(1, 60)
    if num % p == 0:
        num += 1
    den = rng.choice([n for n in range(1, 30) if n % p])
    return make_spec(p, theta, Fraction(num, den))


def test_psi_frozen_cases():
    spec = make_spec(2, SQRT2 - 1, 1)
    g = GammaElem.of(2, 1, 0)
    h = GammaElem.of(2, 0, 1)
    assert psi_alpha(spec, g, h).value == SQRT2 - 1  # alpha_0
    g2 = GammaElem.of(2, Fraction(1, 2), 0)
    h2 = GammaElem.of(2, 0, Fraction(1, 2))
    assert psi_alpha(spec, g2, h2).value == SQRT2 / 4  # alpha_2


def test_psi_identity_normalization():
    spec = make_spec(3, QuadReal(Fraction(1, 2)), 2)
    e = GammaElem.identity(3)
    rng = random.Random(61)
    for _ in range(50):
        g = rand_gamma(rng, 3)
        assert psi_alpha(spec, g, e).is_zero
        assert psi_alpha(spec, e, g).is_zero


def test_cocycle_defect_vanishes():
    rng = random.Random(67)
    for p in (2, 3, 5):
        spec = rand_spec(rng, p)
        sigma = lambda g, h: psi_alpha(spec, g, h)
        for _ in range(100):
            r, s, t = (rand_gamma(rng, p) for _ in range(3))
            assert cocycle_defect(sigma, r, s, t).is_zero


def test_cocycle_defect_detects_corruption():
    spec = make_spec(2, SQRT2 - 1, 1)

    def broken(g, h):
        # wrong exponent: drops the second reduced denominator exponent
        k = g.first.k
        return PhaseArg.of(alpha_at(spec, k) * (g.first.j * h.second.j))

    rng = random.Random(71)
    hits = 0
    for _ in range(100):
        r, s, t = (rand_gamma(rng, 2) for _ in range(3))
        if not cocycle_defect(broken, r, s, t).is_zero:
            hits += 1
    assert hits > 0


def test_iota_embed_frozen():
    x = PAdic.from_rational(2, 3)
    theta = SQRT2 - 1
    g = GammaElem.of(2, Fraction(1, 2), 1)
    pt = iota_embed(x, theta, g)
    assert pt[0].q == PAdic.from_rational(2, Fraction(3, 2))
    assert pt[0].r == theta / 2
    assert pt[1].q == PAdic.from_rational(2, 1)
    assert pt[1].r == QuadReal(1)


def test_lambda_embed_frozen():
    x = PAdic.from_rational(5, 2)
    theta = QuadReal(0, 1, 5)
    s = GammaElem.of(5, 0, 1)
    pt = lambda_embed(x, theta, s)
    assert pt[0].q.is_zero and pt[0].r == QuadReal(0)
    assert pt[1].q == PAdic.from_rational(5, Fraction(-1, 2))
    assert pt[1].r == 1 / theta


def test_embed_rejects_degenerate_parameters():
    g = GammaElem.of(2, 1, 1)
    with pytest.raises(ValueError):
        iota_embed(PAdic.zero(2), SQRT2, g)
    with pytest.raises(ValueError):
        lambda_embed(PAdic.from_rational(2, 1), QuadReal(0), g)


def test_eta_pullback_is_psi():
    # pairing pulled back along iota must reproduce the multiplier exactly
    rng = random.Random(73)
    for p in (2, 3, 5):
        spec = rand_spec(rng, p)
        x = spec.digits
        for _ in range(60):
            g, h = rand_gamma(rng, p, 4), rand_gamma(rng, p, 4)
            lhs = eta(iota_embed(x, spec.theta, g), iota_embed(x, spec.theta, h))
            assert lhs == psi_alpha(spec, g, h)


def test_rho_annihilator_vanishes():
    rng = random.Random(79)
    for p in (2, 3, 5):
        spec = rand_spec(rng, p)
        x = spec.digits
        for _ in range(60):
            g, s = rand_gamma(rng, p, 4), rand_gamma(rng, p, 4)
            assert rho(iota_embed(x, spec.theta, g), lambda_embed(x, spec.theta, s)).is_zero


def test_rho_generic_points_do_not_annihilate():
    spec = make_spec(2, SQRT2 - 1, 1)
    x = spec.digits
    g = GammaElem.of(2, 1, 0)
    h = GammaElem.of(2, 0, 1)
    val = rho(iota_embed(x, spec.theta, g), iota_embed(x, spec.theta, h))
    assert not val.is_zero  # equals alpha_0 - (-alpha_0) != 0 here


def test_eta_bar_on_lambda_matches_beta_multiplier():
    # the conjugate pairing on the annihilator reproduces the partner multiplier
    from ncsolenoid.morita import heisenberg_partner

    rng = random.Random(83)
    for p in (2, 3, 5):
        spec = rand_spec(rng, p)
        x = spec.digits
        window = heisenberg_partner(spec, 12)
        for _ in range(40):
            s, t = rand_gamma(rng, p, 4), rand_gamma(rng, p, 4)
            lhs = eta_bar(lambda_embed(x, spec.theta, s), lambda_embed(x, spec.theta, t))
            assert lhs == psi_from_window(window, s, t)


def test_eta_truncated_precision():
    # enough digits: frac part determined; too few: PrecisionError
    x = PAdic.from_rational(2, Fraction(3, 4))
    good = MPoint(x.truncate(5), QuadReal(0))
    other = MPoint(PAdic.from_rational(2, 1), QuadReal(0))
    P1 = (good, good)
    P2 = (other, other)
    exact = eta((MPoint(x, QuadReal(0)),) * 2, P2)
    assert eta(P1, P2) == exact
    starved = MPoint(x.truncate(-1), QuadReal(0))
    with pytest.raises(PrecisionError):
        eta((starved, starved), P2)


def test_phase_arg_reduction():
    assert PhaseArg.of(QuadReal(Fraction(7, 3))).value == QuadReal(Fraction(1, 3))
    assert PhaseArg.of(QuadReal(-1, 1, 2)).value == SQRT2 - 1
    with pytest.raises(ValueError):
        PhaseArg(QuadReal(Fraction(3, 2)))
