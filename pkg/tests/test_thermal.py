"""Free-energy assembly: sign and monotonicity, mode split, metal
options, the static-term ratio, internal energy and the T = 0 limit."""

import math
from dataclasses import replace

import pytest

from casphere.dispersion import (ConstantIndex, Drude, IdealMetal,
                                 MetalOption, Plasma, UnsupportedModelError)
from casphere.thermal import (Config, SummationPolicy, free_energy,
                              free_energy_ideal_metal, free_energy_m0,
                              free_energy_zero_temperature, internal_energy,
                              y_ratio)

# brute-force oracle of the conventional static metal sum, frozen from
# sum_{l>=1} (2l+1) ln(1 - alpha^{2l+1}) with terms below 1e-30 dropped
EQ_STATIC_CONVENTIONAL = {
    0.3: -0.096008391215374597,
    0.5: -0.63943212741857293,
    0.9: -52.077487676750335,
}

FAST = SummationPolicy(rel_tol=1e-7)


def test_vacuum_vanishes():
    r = free_energy(Config.from_width(0.1, 1.0, ConstantIndex(1.0)))
    assert r.beta_F == 0.0
    assert r.converged


def test_config_validation():
    with pytest.raises(ValueError):
        Config(alpha=1.2, t=1.0, model=ConstantIndex(1.1))
    with pytest.raises(ValueError):
        Config(alpha=0.5, t=0.0, model=ConstantIndex(1.1))
    with pytest.raises(ValueError):
        Config.from_width(-0.1, 1.0, ConstantIndex(1.1))


def test_policy_validation():
    with pytest.raises(ValueError):
        SummationPolicy(rel_tol=0.5)
    with pytest.raises(ValueError):
        SummationPolicy(l_cap=0)
    with pytest.raises(ValueError):
        SummationPolicy(summation_scheme="fast-and-loose")


def test_sign_and_mode_split():
    r = free_energy(Config.from_width(0.2, 1.0, ConstantIndex(1.5)), FAST)
    assert r.beta_F < 0.0
    assert r.beta_F_tm < 0.0 and r.beta_F_te < 0.0
    assert r.beta_F == r.beta_F_tm + r.beta_F_te
    assert r.beta_F_m0 >= r.beta_F
    assert r.converged


def test_monotone_in_width_and_index():
    t = 1.0
    vals_d = [abs(free_energy(Config.from_width(d, t, ConstantIndex(1.5)), FAST).beta_F)
              for d in (0.1, 0.2, 0.4, 0.8)]
    assert all(a > b for a, b in zip(vals_d, vals_d[1:]))
    vals_n = [abs(free_energy(Config.from_width(0.2, t, ConstantIndex(n)), FAST).beta_F)
              for n in (1.1, 1.5, 2.0, 4.0)]
    assert all(a < b for a, b in zip(vals_n, vals_n[1:]))


def test_half_weight_identity():
    # applying half weight equals doubling then subtracting one copy
    cfg = Config.from_width(0.3, 2.0, ConstantIndex(2.0))
    r = free_energy(cfg, FAST)
    m0_full = 2.0 * free_energy_m0(cfg, FAST)
    assert r.beta_F_m0 == pytest.approx(m0_full - free_energy_m0(cfg, FAST), rel=1e-14)


def test_static_metal_oracle_values():
    tight = SummationPolicy(rel_tol=1e-12)
    for alpha, want in EQ_STATIC_CONVENTIONAL.items():
        cfg = Config(alpha=alpha, t=1.0, model=IdealMetal(option=MetalOption.A))
        got = free_energy_m0(cfg, tight)
        assert got == pytest.approx(want, rel=1e-9)
        # option B keeps only the TM half
        cfg_b = Config(alpha=alpha, t=1.0, model=IdealMetal(option=MetalOption.B))
        assert free_energy_m0(cfg_b, tight) == pytest.approx(0.5 * want, rel=1e-9)


def test_metal_options_differ_by_static_te():
    tight = SummationPolicy(rel_tol=1e-12)
    cfg = Config(alpha=0.5, t=1.0, model=IdealMetal())
    ra = free_energy_ideal_metal(cfg, tight, MetalOption.A)
    rb = free_energy_ideal_metal(cfg, tight, MetalOption.B)
    want = 0.5 * EQ_STATIC_CONVENTIONAL[0.5]
    assert ra.beta_F - rb.beta_F == pytest.approx(want, rel=1e-10)
    # m >= 1 terms identical between options
    assert ra.beta_F - ra.beta_F_m0 == pytest.approx(rb.beta_F - rb.beta_F_m0, rel=1e-14)


def test_metal_limit_of_dielectric():
    cfg = Config(alpha=1 / 1.2, t=1.0, model=ConstantIndex(1e6))
    rd = free_energy(cfg, FAST)
    rb = free_energy_ideal_metal(cfg, FAST, MetalOption.B)
    assert rd.beta_F == pytest.approx(rb.beta_F, rel=1e-4)


def test_m0_unsupported_for_dispersive():
    cfg = Config(alpha=0.5, t=1.0, model=Drude(x_p=10.0, g_a=1.0))
    with pytest.raises(UnsupportedModelError):
        free_energy_m0(cfg)


def test_dispersive_models_run():
    drude = Config(alpha=0.6, t=1.0, model=Drude(x_p=50.0, g_a=2.0))
    plasma = Config(alpha=0.6, t=1.0, model=Plasma(x_p=50.0))
    metal = Config(alpha=0.6, t=1.0, model=IdealMetal(option=MetalOption.A))
    fd = free_energy(drude, FAST).beta_F
    fp = free_energy(plasma, FAST).beta_F
    fm = free_energy_ideal_metal(metal, FAST, MetalOption.A).beta_F
    assert fd < 0 and fp < 0
    # finite conductivity weakens the attraction below the ideal metal
    assert abs(fd) < abs(fm)
    assert abs(fp) < abs(fm)
    # Drude drops the static TE term, plasma keeps most of it
    assert abs(fd) < abs(fp)


def test_determinism_across_workers():
    cfg = Config.from_width(0.2, 0.5, ConstantIndex(1.5))
    pol = SummationPolicy(rel_tol=1e-8)
    r1 = free_energy(cfg, pol, jobs=1)
    r2 = free_energy(cfg, pol, jobs=2)
    assert r1.beta_F == r2.beta_F  # bit-for-bit
    assert r1.terms_used == r2.terms_used
    assert r1.max_m_reached == r2.max_m_reached


def test_caps_give_unconverged_not_exception():
    cfg = Config.from_width(0.05, 0.05, ConstantIndex(1.5))
    r = free_energy(cfg, SummationPolicy(rel_tol=1e-9, m_cap=5, l_cap=10))
    assert not r.converged
    assert r.terms_used > 0
    assert r.beta_F < 0.0


def test_y_ratio_limits():
    model = ConstantIndex(1.1)
    lo = y_ratio(Config.from_width(0.1, 0.05, model), FAST)
    hi = y_ratio(Config.from_width(0.1, 200.0, model), FAST)
    assert 0.0 < lo < 0.2
    assert 0.8 < hi <= 1.0


def test_y_ratio_guards():
    with pytest.raises(UnsupportedModelError):
        y_ratio(Config(alpha=0.5, t=1.0, model=IdealMetal()))
    with pytest.raises(ValueError):
        y_ratio(Config(alpha=0.5, t=1.0, model=ConstantIndex(1.0)))


def test_classical_limit_is_static_term():
    cfg = Config.from_width(0.2, 500.0, ConstantIndex(1.4))
    r = free_energy(cfg, FAST)
    assert r.beta_F == pytest.approx(r.beta_F_m0, rel=1e-3)


def test_internal_energy_vacuum_and_signs():
    r = internal_energy(Config.from_width(0.2, 1.0, ConstantIndex(1.0)))
    assert r.a_E == 0.0
    r = internal_energy(Config.from_width(0.2, 1.0, ConstantIndex(1.5)), FAST)
    assert r.converged
    assert r.step_agreement < 0.01
    assert r.a_E < 0.0


def test_internal_energy_low_t_matches_quadrature():
    # at low t, a E -> (beta F t(limit)) / (2 pi)
    model = ConstantIndex(1.5)
    e = internal_energy(Config.from_width(0.3, 0.2, model), FAST)
    lim = free_energy_zero_temperature(0.769230769, model, FAST) / (2.0 * math.pi)
    # not exactly at t -> 0 yet, a few percent is expected
    assert e.a_E == pytest.approx(lim, rel=0.05)


def test_zero_temperature_self_consistency():
    model = ConstantIndex(1.1)
    alpha = 1.0 / 1.1
    v6 = free_energy_zero_temperature(alpha, model, quad_rel_tol=1e-6)
    v5 = free_energy_zero_temperature(alpha, model, quad_rel_tol=1e-5)
    assert v5 == pytest.approx(v6, rel=1e-4)
    assert v6 < 0.0


def test_zero_temperature_guards():
    assert free_energy_zero_temperature(0.5, ConstantIndex(1.0)) == 0.0
    with pytest.raises(UnsupportedModelError):
        free_energy_zero_temperature(0.5, IdealMetal())
    with pytest.raises(ValueError):
        free_energy_zero_temperature(1.5, ConstantIndex(1.1))
