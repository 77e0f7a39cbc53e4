"""Casimir mutual free energy between concentric spherical dielectrics.

Finite-temperature Matsubara summation over spherical TM/TE modes for
constant-index, plasma, Drude and ideal-metal media, built on
overflow-free scaled Riccati-Bessel functions and high-order uniform
asymptotics.
"""

from .dispersion import (ConstantIndex, Drude, IdealMetal, MetalOption,
                         Plasma, UnsupportedModelError, effective_conductivity,
                         epsilon, epsilon_si, matsubara_omega,
                         r2_perpendicular, reduced_temperature)
from .thermal import (Config, FreeEnergyResult, InternalEnergyResult,
                      SummationPolicy, free_energy, free_energy_ideal_metal,
                      free_energy_m0, free_energy_zero_temperature,
                      internal_energy, y_ratio)

__version__ = "0.1.0"

__all__ = [
    "Config",
    "ConstantIndex",
    "Drude",
    "FreeEnergyResult",
    "IdealMetal",
    "InternalEnergyResult",
    "MetalOption",
    "Plasma",
    "SummationPolicy",
    "UnsupportedModelError",
    "effective_conductivity",
    "epsilon",
    "epsilon_si",
    "free_energy",
    "free_energy_ideal_metal",
    "free_energy_m0",
    "free_energy_zero_temperature",
    "internal_energy",
    "matsubara_omega",
    "r2_perpendicular",
    "reduced_temperature",
    "y_ratio",
    "__version__",
]
