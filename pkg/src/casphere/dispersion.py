"""Permittivity models on the imaginary frequency axis.

The solver core is nondimensional (hbar = c = k_B = 1, frequencies as
x = w a / c); models constructed from laboratory parameters keep their
SI values alongside so the conductivity and planar reflection
diagnostics can be reported in physical units. All SI constants are
pinned in one table below (CODATA 2018).
"""

import math
from dataclasses import dataclass
from enum import Enum

# --- pinned SI constants (CODATA 2018) ---
C_LIGHT = 2.99792458e8        # m / s
HBAR = 1.054571817e-34        # J s
K_BOLTZMANN = 1.380649e-23    # J / K
EPSILON_0 = 8.8541878128e-12  # F / m


class MetalOption(str, Enum):
    """Order of the double limit (index -> inf, frequency -> 0).

    A takes the index limit first and keeps the static TE mode at its
    conducting value; B takes the static limit first and drops it.
    """

    A = "A"
    B = "B"


class UnsupportedModelError(TypeError):
    """Operation not defined for this dispersion model."""


@dataclass(frozen=True)
class ConstantIndex:
    """Nondispersive medium with refractive index n >= 1."""

    n: float

    def __post_init__(self):
        if self.n < 1.0:
            raise ValueError(f"refractive index must be >= 1, got {self.n}")

    def describe(self) -> str:
        return f"constant(n={self.n})"


@dataclass(frozen=True)
class Plasma:
    """Collisionless free-electron response, eps = 1 + (x_p/x)^2.

    x_p = omega_p a / c is the nondimensional plasma parameter; omega_p
    (s^-1) is retained when constructed from SI values.
    """

    x_p: float
    omega_p: float | None = None

    def __post_init__(self):
        if self.x_p <= 0.0:
            raise ValueError(f"plasma parameter must be positive, got {self.x_p}")

    @classmethod
    def from_si(cls, omega_p: float, a: float) -> "Plasma":
        return cls(x_p=omega_p * a / C_LIGHT, omega_p=omega_p)

    def describe(self) -> str:
        return f"plasma(x_p={self.x_p:g})"


@dataclass(frozen=True)
class Drude:
    """Damped free-electron response, eps = 1 + x_p^2 / (x (x + g_a)).

    g_a = gamma_relax a / c is the nondimensional relaxation offset; the
    SI pair (omega_p, gamma_relax) is retained when available.
    """

    x_p: float
    g_a: float
    omega_p: float | None = None
    gamma_relax: float | None = None

    def __post_init__(self):
        if self.x_p <= 0.0:
            raise ValueError(f"plasma parameter must be positive, got {self.x_p}")
        if self.g_a < 0.0:
            raise ValueError(f"relaxation offset must be >= 0, got {self.g_a}")

    @classmethod
    def from_si(cls, omega_p: float, gamma_relax: float, a: float) -> "Drude":
        return cls(x_p=omega_p * a / C_LIGHT, g_a=gamma_relax * a / C_LIGHT,
                   omega_p=omega_p, gamma_relax=gamma_relax)

    def describe(self) -> str:
        return f"drude(x_p={self.x_p:g}, g_a={self.g_a:g})"


@dataclass(frozen=True)
class IdealMetal:
    """Perfect conductor; the static TE mode follows the chosen option."""

    option: MetalOption = MetalOption.B

    def __post_init__(self):
        object.__setattr__(self, "option", MetalOption(self.option))

    def describe(self) -> str:
        return f"ideal-metal({self.option.value})"


DispersionModel = ConstantIndex | Plasma | Drude | IdealMetal


class StaticLimit(Enum):
    """Classification of eps(i w) as w -> 0, used by the m = 0 paths."""

    FINITE = "finite"          # constant index: eps -> n^2
    CONDUCTOR = "conductor"    # Drude: eps ~ sigma/(eps0 w), n w -> 0
    DIVERGENT = "divergent"    # plasma: eps ~ (x_p/x)^2, n w -> omega_p
    IDEAL = "ideal"


def static_limit(model: DispersionModel) -> StaticLimit:
    """Tag the w = 0 behaviour of the model."""
    if isinstance(model, ConstantIndex):
        return StaticLimit.FINITE
    if isinstance(model, Drude):
        return StaticLimit.CONDUCTOR
    if isinstance(model, Plasma):
        return StaticLimit.DIVERGENT
    if isinstance(model, IdealMetal):
        return StaticLimit.IDEAL
    raise UnsupportedModelError(f"unknown model {model!r}")


def epsilon(model: DispersionModel, x: float) -> float:
    """eps(i x) at nondimensional frequency x = w a / c >= 0.

    At x = 0 the finite cases return their limit; Drude, plasma and the
    ideal metal return inf (classify with static_limit() instead of
    branching on the value).
    """
    if x < 0.0:
        raise ValueError(f"imaginary frequency must be >= 0, got {x}")
    if isinstance(model, ConstantIndex):
        return model.n * model.n
    if isinstance(model, IdealMetal):
        return math.inf
    if x == 0.0:
        return math.inf
    if isinstance(model, Plasma):
        return 1.0 + (model.x_p / x) ** 2
    if isinstance(model, Drude):
        return 1.0 + model.x_p ** 2 / (x * (x + model.g_a))
    raise UnsupportedModelError(f"unknown model {model!r}")


def _require_si(model):
    if isinstance(model, (Plasma, Drude)) and model.omega_p is not None:
        return
    raise UnsupportedModelError(
        f"{model!r} carries no SI parameters; construct it with from_si()")


def epsilon_si(model: DispersionModel, omega_hat: float) -> float:
    """eps(i w) at w in s^-1 for a model built from SI parameters."""
    if omega_hat < 0.0:
        raise ValueError(f"imaginary frequency must be >= 0, got {omega_hat}")
    if isinstance(model, ConstantIndex):
        return model.n * model.n
    if isinstance(model, IdealMetal) or omega_hat == 0.0:
        return math.inf
    _require_si(model)
    if isinstance(model, Plasma):
        return 1.0 + (model.omega_p / omega_hat) ** 2
    return 1.0 + model.omega_p ** 2 / (omega_hat * (omega_hat + model.gamma_relax))


def effective_conductivity(model: Drude, omega_hat: float) -> float:
    """sigma(i w) = eps0 omega_p^2 / (w + gamma), in S/m.

    sigma(0) is the static conductivity; the value decreases with
    frequency.
    """
    if not isinstance(model, Drude):
        raise UnsupportedModelError("conductivity is defined for the Drude model only")
    _require_si(model)
    if omega_hat < 0.0:
        raise ValueError(f"imaginary frequency must be >= 0, got {omega_hat}")
    return EPSILON_0 * model.omega_p ** 2 / (omega_hat + model.gamma_relax)


def matsubara_omega(T: float, m: int) -> float:
    """m-th imaginary frequency 2 pi k_B T m / hbar, in s^-1."""
    if T <= 0.0:
        raise ValueError(f"temperature must be positive, got {T}")
    if m < 0:
        raise ValueError(f"Matsubara index must be >= 0, got {m}")
    return 2.0 * math.pi * K_BOLTZMANN * T * m / HBAR


def reduced_temperature(T: float, a: float) -> float:
    """Nondimensional temperature t = 2 pi a k_B T / (hbar c)."""
    if T <= 0.0 or a <= 0.0:
        raise ValueError("temperature and radius must be positive")
    return 2.0 * math.pi * a * K_BOLTZMANN * T / (HBAR * C_LIGHT)


@dataclass(frozen=True)
class PlanarPoint:
    """One evaluation point of the planar reflection diagnostic."""

    omega_hat: float  # s^-1
    k_perp: float     # m^-1
    p: float
    s: float


def lifshitz_variables(model: DispersionModel, omega_hat: float, k_perp: float) -> PlanarPoint:
    """Conventional planar variables: k_perp = (w/c) sqrt(p^2 - 1),
    s = sqrt(eps - 1 + p^2)."""
    if k_perp <= 0.0:
        raise ValueError(f"transverse wavenumber must be positive, got {k_perp}")
    if omega_hat <= 0.0:
        raise ValueError(f"imaginary frequency must be positive, got {omega_hat}")
    ratio = k_perp * C_LIGHT / omega_hat
    p = math.sqrt(1.0 + ratio * ratio)
    eps = epsilon_si(model, omega_hat)
    s = math.sqrt(eps - 1.0 + p * p)
    return PlanarPoint(omega_hat=omega_hat, k_perp=k_perp, p=p, s=s)


def r2_perpendicular(model: DispersionModel, omega_hat: float, k_perp: float) -> float:
    """Perpendicular-polarisation reflection coefficient (p - s)/(p + s).

    Evaluated as -(eps - 1)/(p + s)^2, which is exact and avoids the
    cancellation of p - s at small frequency. Negative for eps > 1; the
    Drude value vanishes linearly in w/gamma while the plasma value
    approaches a constant of magnitude -> 1 for k_perp c << omega_p.
    """
    pt = lifshitz_variables(model, omega_hat, k_perp)
    eps = epsilon_si(model, omega_hat)
    return -(eps - 1.0) / (pt.p + pt.s) ** 2
