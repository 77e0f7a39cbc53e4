"""Mode eigenvalues: coefficient limits, the static closed form, regime
agreement across the crossover, and decay properties."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casphere import debye, _kernels
from casphere.dispersion import ConstantIndex, Drude, IdealMetal, MetalOption, Plasma
from casphere.eigen import (gamma_delta, lambda_te, lambda_tm, lambda_tm_m0,
                            mode_eigenvalues, static_eigenvalues)
from casphere.thermal import Config, SummationPolicy


def cfg(d_over_a=0.2, t=1.0, model=None):
    return Config.from_width(d_over_a, t, model or ConstantIndex(1.1))


# --- gamma/delta coefficients ---

def test_gamma_delta_vacuum():
    gd = gamma_delta(0.7, 1.3, 2.5, 1.0)
    assert gd.gamma_c == 1.0 and gd.delta_c == 1.0


def test_gamma_delta_metal_limit():
    gd = gamma_delta(0.7, 1.3, 2.5, 1e9)
    assert gd.gamma_c < 1e-8 and gd.delta_c < 1e-8


def test_gamma_delta_static_drude_limit():
    # n*x -> 0 drives both coefficients back to 1
    gd = gamma_delta(1e-9, 2e-9, 2.5, 1.5)
    assert gd.gamma_c == pytest.approx(1.0, abs=1e-12)
    assert gd.delta_c == pytest.approx(1.0, abs=1e-12)


def test_gamma_delta_domain():
    with pytest.raises(ValueError):
        gamma_delta(0.1, 0.2, 1.5, 0.5)


@given(x=st.floats(min_value=0.0, max_value=100.0),
       n=st.floats(min_value=1.0, max_value=1e4))
@settings(max_examples=80, deadline=None)
def test_gamma_delta_range(x, n):
    gd = gamma_delta(x, 2.0 * x, 4.5, n)
    assert 0.0 < gd.gamma_c <= 1.0
    assert 0.0 < gd.delta_c <= 1.0


# --- static (m = 0) eigenvalues ---

def test_static_tm_vanishes_at_vacuum():
    assert lambda_tm_m0(3, 0.5, 1.0) == 0.0


@pytest.mark.parametrize("l", [1, 2, 5, 12, 20])
@pytest.mark.parametrize("n", [1.1, 2.0, 10.0])
def test_static_tm_matches_small_argument_numerics(l, n):
    alpha = 0.8
    closed = lambda_tm_m0(l, alpha, n)
    tiny = Config(alpha=alpha, t=1e-6, model=ConstantIndex(n))
    numeric = lambda_tm(l, 1, tiny)  # x = 1e-6
    assert numeric == pytest.approx(closed, rel=1e-6)


@pytest.mark.parametrize("l", [1, 4, 9])
def test_static_tm_metal_end(l):
    alpha = 0.6
    assert lambda_tm_m0(l, alpha, 1e6) == pytest.approx(alpha ** (2 * l + 1), rel=1e-3)


def test_static_te_zero_for_dielectric():
    c = cfg()
    for l in (1, 2, 7):
        assert lambda_te(l, 0, c) == 0.0


def test_static_te_metal_options():
    alpha = 0.55
    a_cfg = Config(alpha=alpha, t=1.0, model=IdealMetal(option=MetalOption.A))
    b_cfg = Config(alpha=alpha, t=1.0, model=IdealMetal(option=MetalOption.B))
    for l in (1, 3):
        assert lambda_te(l, 0, a_cfg) == pytest.approx(alpha ** (2 * l + 1), rel=1e-14)
        assert lambda_te(l, 0, b_cfg) == 0.0
        assert lambda_tm(l, 0, a_cfg) == lambda_tm(l, 0, b_cfg)


def test_static_te_plasma_interpolates_between_options():
    alpha = 0.7
    l = 2
    # x_p >> nu: conducting (option A) behaviour
    big = Config(alpha=alpha, t=1.0, model=Plasma(x_p=1e6))
    assert lambda_te(l, 0, big) == pytest.approx(alpha ** (2 * l + 1), rel=1e-3)
    # x_p -> 0: the TE mode drops out (option B behaviour)
    small = Config(alpha=alpha, t=1.0, model=Plasma(x_p=1e-4))
    assert lambda_te(l, 0, small) < 1e-8


def test_static_drude_te_vanishes():
    c = Config(alpha=0.7, t=1.0, model=Drude(x_p=100.0, g_a=1.0))
    assert lambda_te(2, 0, c) == 0.0
    assert lambda_tm(2, 0, c) == pytest.approx(0.7 ** 5, rel=1e-14)


# --- finite-frequency terms ---

def test_vacuum_gives_zero():
    c = cfg(model=ConstantIndex(1.0))
    ev = mode_eigenvalues(3, 2, c)
    assert ev.lambda_tm == 0.0 and ev.lambda_te == 0.0


def test_regime_agreement_at_crossover():
    # both evaluation paths agree near the direct/asymptotic boundary
    c = cfg(d_over_a=0.15, t=1.0, model=ConstantIndex(1.3))
    direct = SummationPolicy(crossover_x=1e9, crossover_l=10 ** 6)
    debye_only = SummationPolicy(crossover_x=1e-9, crossover_l=0)
    for (l, m) in [(8, 9), (9, 10), (10, 9), (12, 11), (9, 11), (11, 2)]:
        a = mode_eigenvalues(l, m, c, direct)
        b = mode_eigenvalues(l, m, c, debye_only)
        assert b.lambda_tm == pytest.approx(a.lambda_tm, rel=1e-6)
        assert b.lambda_te == pytest.approx(a.lambda_te, rel=1e-6)


@given(l=st.integers(min_value=1, max_value=40),
       m=st.integers(min_value=1, max_value=30),
       n=st.floats(min_value=1.0, max_value=10.0))
@settings(max_examples=120, deadline=None)
def test_eigenvalues_in_unit_interval(l, m, n):
    c = cfg(d_over_a=0.3, t=0.7, model=ConstantIndex(n))
    ev = mode_eigenvalues(l, m, c)
    assert 0.0 <= ev.lambda_tm < 1.0
    assert 0.0 <= ev.lambda_te < 1.0


def test_monotone_decay_and_exponent_bound():
    c = cfg(d_over_a=0.25, t=2.0)
    U, CT = debye.generate_polynomials().float_arrays()
    prev_tm = prev_te = None
    for l in range(3, 60):
        ev = mode_eigenvalues(l, 2, c)
        if prev_tm is not None:
            assert ev.lambda_tm < prev_tm
            assert ev.lambda_te < prev_te
        prev_tm, prev_te = ev.lambda_tm, ev.lambda_te
        # log lambda + 2 nu (eta(y) - eta(x)) stays bounded: the product
        # carries exactly that exponential factor
        nu = l + 0.5
        x = 2.0 * c.t
        _, _, ex = _kernels.frame_vals(x, nu)
        _, _, ey = _kernels.frame_vals(x / c.alpha, nu)
        if ev.lambda_tm > 0.0:
            bound = math.log(ev.lambda_tm) + 2.0 * nu * (ey - ex)
            assert abs(bound) < 10.0


def test_degenerate_gap_warns_and_vanishes():
    class Degenerate:
        alpha = 1.0
        t = 1.0
        model = ConstantIndex(1.5)
    with pytest.warns(UserWarning):
        ev = mode_eigenvalues(2, 1, Degenerate())
    assert ev.lambda_tm == 0.0 and ev.lambda_te == 0.0


def test_input_validation():
    c = cfg()
    with pytest.raises(ValueError):
        mode_eigenvalues(0, 1, c)
    with pytest.raises(ValueError):
        mode_eigenvalues(1, -1, c)
