"""Direct (non-asymptotic) Riccati-Bessel functions of imaginary argument.

s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x) grows like e^x and
e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x) decays like e^{-x}; everything here
is carried in exponentially scaled form (s e^{-x}, e e^{+x}) so raw
library-style values never appear. The pair is normalised to the
Wronskian s_l e_l' - s_l' e_l = -1.
"""

from dataclasses import dataclass

from . import _kernels

#: orders above this raise OrderCapacityError
L_CAP = 1_000_000


class OrderCapacityError(ValueError):
    """Requested order exceeds the supported range."""


@dataclass(frozen=True)
class ScaledRiccati:
    """Exponentially scaled function values at one (l, x).

    s_hat = s_l(x) e^{-x}, e_hat = e_l(x) e^{+x}, and ds_hat / de_hat the
    correspondingly scaled derivatives with respect to the whole
    argument. s_hat, e_hat, ds_hat are positive; de_hat is negative.
    """

    l: int
    x: float
    s_hat: float
    e_hat: float
    ds_hat: float
    de_hat: float

    def wronskian(self) -> float:
        """s_hat * de_hat - ds_hat * e_hat, exactly -1 in exact arithmetic."""
        return self.s_hat * self.de_hat - self.ds_hat * self.e_hat


def riccati_scaled(l: int, x: float) -> ScaledRiccati:
    """Evaluate the scaled Riccati-Bessel quadruple.

    The growing solution comes from its ascending series (positive
    terms, no cancellation), the decaying one from upward recurrence in
    the order. Derivatives follow the half-integer recurrences
    s_l' = s_{l-1} - (l/x) s_l and e_l' = -e_{l-1} - (l/x) e_l.
    """
    if x <= 0.0:
        raise ValueError(f"argument must be positive, got x={x}")
    if l < 0:
        raise ValueError(f"order must be nonnegative, got l={l}")
    if l > L_CAP:
        raise OrderCapacityError(f"order {l} exceeds cap {L_CAP}")
    s, e, ds, de = _kernels.riccati_direct(int(l), float(x))
    return ScaledRiccati(l=int(l), x=float(x), s_hat=s, e_hat=e, ds_hat=ds, de_hat=de)
