"""Domain types shared by all bound modules.

A ``Params`` value is a validated (a, b) shape pair for the beta family,
together with the derived centers that the bounds are built around.  Bound
evaluations are reported as ``BoundEval`` records carrying the value, the
direction in which the value bounds the target quantity, and whether the
evaluation point lies inside the bound's stated validity region.

Extended-real convention: a vanishing positive part in a denominator yields
``math.inf``.  NaN is never a legal value; any NaN is a defect and the
evaluators guard against producing one.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Direction(enum.Enum):
    """How a bound relates to the quantity it bounds."""

    LOWER = "lower"
    UPPER = "upper"
    EQUALITY = "equality"
    NOT_APPLICABLE = "n/a"


class BoundId(enum.Enum):
    """Every named bound known to the verification harness."""

    # bounds on the hypergeometric factor Q(a, b, x)
    SEGURA_LOWER = "segura_lower"
    SEGURA_UPPER = "segura_upper"
    S1 = "s1"
    S2 = "s2"
    Q1 = "q1"
    Q2 = "q2"
    Q3 = "q3"
    Q4 = "q4"
    Q5 = "q5"
    # gamma-limit bounds (scaled incomplete gamma targets)
    GAMMA_S = "gamma_s"
    GAMMA_1 = "gamma_1"
    GAMMA_2 = "gamma_2"
    GAMMA_3 = "gamma_3"
    GAMMA_4 = "gamma_4"
    GAMMA_5 = "gamma_5"
    GAMMA_SURV_S = "gamma_surv_s"
    GAMMA_SURV_1 = "gamma_surv_1"
    GAMMA_SURV_2 = "gamma_surv_2"
    # exponential tail bounds on the beta CDF / survival function
    KL_LEFT = "kl_left"
    KL_RIGHT = "kl_right"
    POWER_LEFT = "power_left"
    POWER_RIGHT = "power_right"
    TILTED_LEFT = "tilted_left"
    TILTED_RIGHT = "tilted_right"
    HALF_MEAN_LEFT = "half_mean_left"
    HALF_MEAN_RIGHT = "half_mean_right"
    BERNSTEIN_LEFT = "bernstein_left"
    BERNSTEIN_RIGHT = "bernstein_right"
    HOEFFDING_LEFT = "hoeffding_left"
    HOEFFDING_RIGHT = "hoeffding_right"
    MARCHAL_ARBEL_LEFT = "marchal_arbel_left"
    MARCHAL_ARBEL_RIGHT = "marchal_arbel_right"
    SKORSKI = "skorski"
    BERNSTEIN_IMPROVED = "bernstein_improved"
    FAR_TAIL = "far_tail"
    # Gaussian tail bounds
    GAUSS_LEFT = "gauss_left"
    GAUSS_RIGHT = "gauss_right"
    SYM_GAUSS_PHI = "sym_gauss_phi"
    SYM_GAUSS_EXP = "sym_gauss_exp"


def positive_part(z: float) -> float:
    """max(z, 0), the positive-part convention used in several bounds."""
    return z if z > 0.0 else 0.0


def _require_positive_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be a positive finite real, got {value!r}")
    return value


@dataclass(frozen=True)
class Params:
    """A beta shape pair (a, b) with a, b > 0 and its derived centers."""

    a: float
    b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _require_positive_finite("a", self.a))
        object.__setattr__(self, "b", _require_positive_finite("b", self.b))

    @property
    def p(self) -> float:
        """Mean a / (a + b), always in (0, 1)."""
        return self.a / (self.a + self.b)

    @property
    def p_left(self) -> float:
        """Left-tail center (a + 1) / (a + b)."""
        return (self.a + 1.0) / (self.a + self.b)

    @property
    def p_right(self) -> float:
        """Right-tail center (a - 1) / (a + b); nonpositive when a < 1."""
        return (self.a - 1.0) / (self.a + self.b)

    @property
    def p_mode(self) -> float:
        """Density mode (a - 1) / (a + b - 2); defined only for a + b > 2."""
        if self.a + self.b <= 2.0:
            raise ValueError("p_mode requires a + b > 2")
        return (self.a - 1.0) / (self.a + self.b - 2.0)

    @property
    def c_ab(self) -> float:
        """The coefficient (a + b) / (a + 1) of the Segura-type bounds."""
        return (self.a + self.b) / (self.a + 1.0)

    def swapped(self) -> "Params":
        """The pair with the roles of a and b exchanged."""
        return Params(self.b, self.a)


@dataclass(frozen=True)
class BoundEval:
    """One bound evaluated at one point.

    ``value`` may be +inf (positive-part conventions) but never NaN.
    ``region_ok`` records whether the point lies in the bound's stated
    validity region; out-of-region values are diagnostics only.
    """

    value: float
    direction: Direction
    region_ok: bool

    def __post_init__(self) -> None:
        if math.isnan(self.value):
            raise ValueError("bound evaluation produced NaN")
