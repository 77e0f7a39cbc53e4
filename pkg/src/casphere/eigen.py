"""TM and TE mode eigenvalues for one (m, l) term.

Each eigenvalue is a product of two function ratios whose net
exponential factor e^{-2 nu (eta(y) - eta(x))} is assembled from
exponents, never from overflowing intermediates; the direct regime
cancels all e^{+-x} scalings symbolically. The m = 0 term always goes
through the analytic small-argument limits (the ratio machinery is 0/0
there).
"""

import math
import warnings
from dataclasses import dataclass

from . import _kernels, debye
from .dispersion import (ConstantIndex, Drude, IdealMetal, MetalOption,
                         Plasma, epsilon)


class EigenvalueRangeError(ArithmeticError):
    """An eigenvalue left [0, 1); ln(1 - lambda) would be invalid."""


@dataclass(frozen=True)
class GammaDelta:
    """Index-mismatch coefficients of the eigenvalue ratio formulas."""

    gamma_c: float
    delta_c: float


def gamma_delta(x: float, y: float, nu: float, n: float) -> GammaDelta:
    """gamma = sqrt((1+(x/nu)^2)/(1+(nx/nu)^2)) and the y-analogue delta.

    Both equal 1 at n = 1 and fall to 0 as n -> inf at fixed positive
    argument; a vanishing n*x drives them back to 1.
    """
    if n < 1.0:
        raise ValueError(f"refractive index must be >= 1, got {n}")
    zx = x / nu
    zy = y / nu
    g = math.sqrt((1.0 + zx * zx) / (1.0 + (n * zx) ** 2))
    d = math.sqrt((1.0 + zy * zy) / (1.0 + (n * zy) ** 2))
    return GammaDelta(gamma_c=g, delta_c=d)


@dataclass(frozen=True)
class ModeEigenvalues:
    """Both mode eigenvalues for one (m, l) term."""

    m: int
    l: int
    lambda_tm: float
    lambda_te: float


def _index_at(model, x: float) -> float:
    """Refractive index n(i x); inf flags the conducting limit."""
    if isinstance(model, IdealMetal):
        return math.inf
    return math.sqrt(epsilon(model, x))


def _check(value: float, mode: str, l: int, m: int) -> float:
    if not 0.0 <= value < 1.0:
        raise EigenvalueRangeError(
            f"lambda_{mode}(l={l}, m={m}) = {value} outside [0, 1)")
    return value


def lambda_tm_m0(l: int, alpha: float, n: float) -> float:
    """Static TM eigenvalue for a constant index (analytic limit).

    (a/b)^{2l+1} l(l+1)(n^2-1)^2 / ((n^2 l + l + 1)(n^2 (l+1) + l)):
    vanishes at n = 1 and tends to (a/b)^{2l+1} as n -> inf.
    """
    return _kernels.lambda_tm_static(l, alpha, n)


def static_eigenvalues(l: int, config) -> ModeEigenvalues:
    """m = 0 eigenvalues by the per-model analytic limit."""
    alpha = config.alpha
    model = config.model
    g = alpha ** (2 * l + 1)
    if isinstance(model, ConstantIndex):
        tm = lambda_tm_m0(l, alpha, model.n)
        te = 0.0
    elif isinstance(model, IdealMetal):
        tm = g
        te = g if model.option is MetalOption.A else 0.0
    elif isinstance(model, Drude):
        # n w -> 0: the TE mode drops out, the TM mode keeps its
        # conducting value
        tm = g
        te = 0.0
    elif isinstance(model, Plasma):
        # n w -> omega_p: the material side freezes at x_p
        tm = g
        U, CT = debye.generate_polynomials().float_arrays()
        te = _kernels.lambda_te_static_plasma(l, alpha, model.x_p, 10.0, 9, U, CT)
    else:
        raise TypeError(f"unknown model {model!r}")
    return ModeEigenvalues(m=0, l=l,
                           lambda_tm=_check(tm, "tm", l, 0),
                           lambda_te=_check(te, "te", l, 0))


def mode_eigenvalues(l: int, m: int, config, policy=None) -> ModeEigenvalues:
    """Eigenvalue pair at Matsubara index m >= 0 and multipole l >= 1."""
    if l < 1:
        raise ValueError(f"multipole order must be >= 1, got l={l}")
    if m < 0:
        raise ValueError(f"Matsubara index must be >= 0, got m={m}")
    if config.alpha >= 1.0:
        # zero-width vacuum gap: no mutual-energy interpretation
        warnings.warn("degenerate geometry a = b; returning vanishing eigenvalues")
        return ModeEigenvalues(m=m, l=l, lambda_tm=0.0, lambda_te=0.0)
    if m == 0:
        return static_eigenvalues(l, config)
    if policy is None:
        from .thermal import SummationPolicy
        policy = SummationPolicy()
    x = m * config.t
    y = x / config.alpha
    n = _index_at(config.model, x)
    U, CT = debye.generate_polynomials(policy.debye_k_max).float_arrays()
    tm, te = _kernels.lambda_pair(l, x, y, n,
                                  policy.crossover_x, policy.crossover_l, U, CT)
    return ModeEigenvalues(m=m, l=l,
                           lambda_tm=_check(tm, "tm", l, m),
                           lambda_te=_check(te, "te", l, m))


def lambda_tm(l: int, m: int, config, policy=None) -> float:
    """TM eigenvalue in [0, 1)."""
    return mode_eigenvalues(l, m, config, policy).lambda_tm


def lambda_te(l: int, m: int, config, policy=None) -> float:
    """TE eigenvalue in [0, 1); identically 0 at m = 0 for any finite
    constant index."""
    return mode_eigenvalues(l, m, config, policy).lambda_te
