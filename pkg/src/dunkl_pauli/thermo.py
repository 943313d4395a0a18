"""Canonical-ensemble thermodynamics of one fixed-(sector, ell) level ladder.

Everything is dimensionless: x = beta*omega_c, temperatures tau = 1/x, F and
U in units of omega_c, C and S in units of the Boltzmann constant.  The
ladder is E_n/omega_c = n + 1/2 + rho - m_s*eta, summed over n >= 0 and
m_s = +/-1, giving

    Z = exp(-x*rho) * cosh(x*eta) / sinh(x/2).

Two evaluation modes exist because the published internal-energy and entropy
expressions are not the beta-derivatives of the published free energy:
"consistent" derives U and S from Z (so F = U - T*S holds to machine
precision), "paper-faithful" transcribes the printed formulas (+rho in U
becomes -rho; tanh(x*eta) in the last entropy term becomes coth(x*eta)).
Z, F and C are identical in both modes.  All formulas are written in
log/ratio-stable form so every quantity stays finite over x in [1e-3, 700].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MODES = ("consistent", "paper-faithful")

_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class ThermoInputs:
    """Dimensionless evaluation point: x = beta*omega_c plus the ladder's
    (rho, eta) and the evaluation mode."""

    x: float
    rho: float
    eta: float
    mode: str = "consistent"

    def __post_init__(self):
        if not self.x > 0:
            raise ValueError(f"x = beta*omega_c must be positive, got {self.x}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


def _log_sinh(y: float) -> float:
    """log(sinh(y)) for y > 0, overflow-safe."""
    return y - _LOG2 + math.log(-math.expm1(-2.0 * y))

def _log_cosh(y: float) -> float:
    """log(cosh(y)), overflow-safe."""
    y = abs(y)
    return y - _LOG2 + math.log1p(math.exp(-2.0 * y))

def _y_over_sinh(y: float) -> float:
    """y/sinh(y) for y > 0 without overflow (underflows to 0 for huge y)."""
    return 2.0 * y * math.exp(-y) / -math.expm1(-2.0 * y)

def _y_over_cosh(y: float) -> float:
    """y/cosh(y) for y >= 0 without overflow."""
    return 2.0 * y * math.exp(-y) / (1.0 + math.exp(-2.0 * y))


def log_partition(inputs: ThermoInputs) -> float:
    """log Z = -x*rho + log cosh(x*eta) - log sinh(x/2); mode-independent."""
    x = inputs.x
    return -x * inputs.rho + _log_cosh(x * inputs.eta) - _log_sinh(0.5 * x)


def partition(inputs: ThermoInputs) -> float:
    """Closed-form Z; evaluated in log space so large x cannot overflow.
    (Z diverges like 2/x as x -> 0, which the x > 0 precondition excludes.)"""
    return math.exp(log_partition(inputs))


def direct_sum_partition(x: float, rho: float, eta: float,
                         n_max: int | None = None,
                         tail_rel: float = 1e-14) -> float:
    """Oracle Z: literal sum of exp(-x*E_n) over n <= n_max and m_s = +/-1.

    n_max defaults to the smallest value whose geometric tail is below
    tail_rel relative to the sum; an explicit n_max that misses that bound is
    an error.
    """
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    # tail over n > N, relative to Z:  <= exp(-x(N+1)) / (1 - exp(-x))
    need = math.ceil((-math.log(tail_rel) - math.log(-math.expm1(-x))) / x)
    need = max(need, 1)
    if n_max is None:
        if need > 10_000_000:
            raise ValueError("requested tail bound needs an impractical n_max; "
                             "use the closed form for very small x")
        n_max = need
    elif n_max < need:
        raise ValueError(f"n_max={n_max} insufficient for tail bound "
                         f"{tail_rel} (need {need})")
    total = 0.0
    for n in range(n_max + 1):
        for m_s in (-1, 1):
            total += math.exp(-x * (n + 0.5 + rho - m_s * eta))
    return total


def helmholtz(inputs: ThermoInputs) -> float:
    """F/omega_c = (log sinh(x/2) - log cosh(x*eta))/x + rho; identical in
    both modes (it is -log(Z)/x)."""
    x = inputs.x
    return (_log_sinh(0.5 * x) - _log_cosh(x * inputs.eta)) / x + inputs.rho


def internal_energy(inputs: ThermoInputs) -> float:
    """U/omega_c = (1/2)coth(x/2) - eta*tanh(x*eta) + rho.

    The +rho is what -d(log Z)/d(beta) gives; paper-faithful mode flips it to
    the printed -rho.
    """
    x = inputs.x
    u = 0.5 / math.tanh(0.5 * x) - inputs.eta * math.tanh(x * inputs.eta)
    return u + (inputs.rho if inputs.mode == "consistent" else -inputs.rho)


def heat_capacity(inputs: ThermoInputs) -> float:
    """C/K = (x/2)^2/sinh^2(x/2) + (x*eta)^2/cosh^2(x*eta); rho drops out of
    the second derivative, so the modes agree exactly."""
    x = inputs.x
    return _y_over_sinh(0.5 * x) ** 2 + _y_over_cosh(x * abs(inputs.eta)) ** 2


def entropy(inputs: ThermoInputs) -> float:
    """S/K = -log sinh(x/2) + (x/2)coth(x/2) + log cosh(x*eta) - x*eta*tanh(x*eta).

    That last factor is tanh as obtained from beta^2 dF/dbeta; paper-faithful
    mode uses the printed coth instead (their difference vanishes for large
    x*eta and blows the F = U - TS identity below it).

    Evaluated in the cancellation-free regrouping

        S/K = -log1p(-e^-x) + x e^-x/(1-e^-x)
              + log1p(e^-2xeta) + 2 x eta e^-2xeta/(1+e^-2xeta),

    whose terms stay order-1 or exponentially small, so S decays cleanly to 0
    at low temperature instead of through the difference of two huge numbers.
    """
    x = inputs.x
    q = math.exp(-x)
    s = -math.log1p(-q) + x * q / (1.0 - q)
    ye = x * inputs.eta
    p = math.exp(-2.0 * ye)
    if inputs.mode == "consistent":
        return s + math.log1p(p) + 2.0 * ye * p / (1.0 + p)
    if ye == 0:
        return s + _LOG2 - 1.0
    return s + math.log1p(p) - 2.0 * ye * p / (1.0 - p)


@dataclass(frozen=True)
class ThermoCurve:
    """One thermal quantity sampled on an ascending dimensionless temperature
    grid tau = KT/omega_c."""

    quantity: str
    grid: tuple[float, ...]
    values: tuple[float, ...]
    provenance: ThermoInputs

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.grid, self.grid[1:])):
            raise ValueError("temperature grid must be strictly ascending")
        if not all(math.isfinite(v) for v in self.values):
            raise ValueError("curve contains non-finite values")


QUANTITIES = {
    "Z": partition,
    "F": helmholtz,
    "U": internal_energy,
    "C": heat_capacity,
    "S": entropy,
}


def sweep(quantity: str, template: ThermoInputs, tau_grid) -> ThermoCurve:
    """Evaluate one quantity over a temperature grid with the template's
    (rho, eta, mode); deterministic in the grid order."""
    if quantity not in QUANTITIES:
        raise ValueError(f"quantity must be one of {sorted(QUANTITIES)}, "
                         f"got {quantity!r}")
    taus = tuple(float(t) for t in tau_grid)
    if any(t <= 0 for t in taus):
        raise ValueError("all temperatures must be positive")
    fn = QUANTITIES[quantity]
    values = tuple(
        fn(ThermoInputs(1.0 / t, template.rho, template.eta, template.mode))
        for t in taus)
    return ThermoCurve(quantity, taus, values, template)
