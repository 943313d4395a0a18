"""Closed-form level structure of the deformed Landau problem.

Energies split over four parity sectors labeled (eps1, eps2).  Every sector
energy has the compact form

    E = omega_c*(n + 1/2) + omega_c*rho - omega_c*m_s*eta,

where rho carries the orbital/deformation shift (through the signed angular
eigenvalue lam) and eta the sector-dependent Zeeman weight.  The literal
per-sector transcriptions are kept alongside as `energy_sector_form` so the
equivalence can be tested rather than assumed; the bridge between the two is
the exact radical identity sqrt((nu1 +/- nu2)^2 + lam^2) = 2*ell + nu1 + nu2
(positive branch).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from scipy.integrate import quad

from .algebra import WignerParams
from .angular import _validate_sector_ell, lambda_value


@dataclass(frozen=True)
class OscillatorScale:
    """Energy/length scales: cyclotron frequency, mass, spin g-factor.

    hbar = 1 throughout.  g_s defaults to exactly 2, the value for which the
    Zeeman coupling B*mu_B*g_s equals omega_c and the closed-form spectra are
    self-consistent; pass the physical 2.0023 only for oracle-style runs.
    """

    omega_c: float = 1.0
    mass: float = 1.0
    g_s: float = 2.0

    def __post_init__(self):
        if self.omega_c <= 0 or self.mass <= 0:
            raise ValueError("omega_c and mass must be positive")

    @property
    def zeeman_prefactor(self) -> float:
        """m * B * mu_B * g_s in units with hbar = 1: (g_s/2) * m * omega_c."""
        return 0.5 * self.g_s * self.mass * self.omega_c


@dataclass(frozen=True)
class SectorState:
    """Quantum numbers of one level: parity sector, radial n, angular ell,
    spin projection label m_s, and the sign branch of lam."""

    eps1: int
    eps2: int
    n: int
    ell: Fraction
    m_s: int
    branch: int = 1

    def __post_init__(self):
        if self.eps1 not in (1, -1) or self.eps2 not in (1, -1):
            raise ValueError(f"sector labels must be +/-1, got ({self.eps1}, {self.eps2})")
        if self.m_s not in (1, -1):
            raise ValueError(f"m_s must be +1 or -1, got {self.m_s}")
        if self.branch not in (1, -1):
            raise ValueError(f"branch must be +1 or -1, got {self.branch}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        object.__setattr__(self, "ell", Fraction(self.ell))
        _validate_sector_ell(self.ell, self.eps1 * self.eps2, allow_zero=True)

    @property
    def epsilon(self) -> int:
        return self.eps1 * self.eps2


def rho(ell, epsilon: int, branch: int, params: WignerParams) -> float:
    """Orbital/deformation shift rho_ell^eps = (lam + sqrt(D^2 + lam^2))/2
    with D = nu1 + nu2 in the even sector and nu1 - nu2 in the odd one.

    D is reduced in exact rational arithmetic first, so deformations with
    nu1 = -nu2 reproduce the undeformed shift bit for bit.
    """
    lam = lambda_value(ell, epsilon, branch, params)
    d = float(params.nu1 + params.nu2 if epsilon == 1 else params.nu1 - params.nu2)
    return 0.5 * (lam + math.sqrt(d * d + lam * lam))


def eta(eps1: int, eps2: int, params: WignerParams) -> float:
    """Sector Zeeman weight (1 + eps1*nu1 + eps2*nu2)/2, reduced exactly
    before float conversion (eta is 1/2 on the nose when eps1*nu1 = -eps2*nu2)."""
    if eps1 not in (1, -1) or eps2 not in (1, -1):
        raise ValueError(f"sector labels must be +/-1, got ({eps1}, {eps2})")
    return float((1 + eps1 * params.nu1 + eps2 * params.nu2) / 2)


def energy_over_omega_c(state: SectorState, params: WignerParams) -> float:
    """Dimensionless level energy E/omega_c in the compact (rho, eta) form."""
    return (state.n + 0.5
            + rho(state.ell, state.epsilon, state.branch, params)
            - state.m_s * eta(state.eps1, state.eps2, params))


def energy(state: SectorState, scale: OscillatorScale, params: WignerParams) -> float:
    """Level energy in physical units (hbar = 1)."""
    return scale.omega_c * energy_over_omega_c(state, params)


def energy_sector_form(state: SectorState, params: WignerParams) -> float:
    """E/omega_c from the literal per-sector closed forms.

    Kept as an independent transcription (not routed through rho/eta) so the
    compact form can be cross-checked against it.
    """
    nu1, nu2 = params.as_floats()
    lam = lambda_value(state.ell, state.epsilon, state.branch, params)
    ell = float(state.ell)
    ms = state.m_s
    common = state.n + (1.0 + lam + nu1 + nu2 + 2.0 * ell) / 2.0
    key = (state.eps1, state.eps2)
    if key == (1, 1):
        return common - ms * (1.0 + nu1 + nu2) / 2.0
    if key == (-1, -1):
        return common - ms * (1.0 - nu1 - nu2) / 2.0
    if key == (1, -1):
        return common - ms * (1.0 + nu1 - nu2) / 2.0
    return common - ms * (1.0 + nu2 - nu1) / 2.0


def radical_identity_check(ell, epsilon: int, params: WignerParams):
    """Both sides of sqrt(D^2 + lam^2) = 2*ell + nu1 + nu2 (positive branch).

    The identity is what collapses the per-sector energies into the compact
    (rho, eta) form; callers assert the two returned values agree.
    """
    lam = lambda_value(ell, epsilon, 1, params)
    nu1, nu2 = params.as_floats()
    d = nu1 + nu2 if epsilon == 1 else nu1 - nu2
    lhs = math.sqrt(d * d + lam * lam)
    rhs = 2.0 * float(Fraction(ell)) + nu1 + nu2
    return lhs, rhs


def hyp1f1(a: float, b: float, x: float, rtol: float = 1e-15,
           max_terms: int = 100_000) -> float:
    """Kummer confluent hypergeometric M(a, b, x) by the power series with
    term-ratio recurrence.

    Terminates exactly (degree-n polynomial) when a is a nonpositive integer
    -n.  A nonpositive-integer b is a pole unless a is a nonpositive integer
    of smaller magnitude, in which case the series stops first.
    """
    a_int = a == int(a)
    b_int = b == int(b)
    terminating = a_int and a <= 0
    if b_int and b <= 0 and not (terminating and -a < -b):
        raise ValueError(f"M(a,b,x) pole: b={b} is a nonpositive integer")
    if terminating:
        n = int(-a)
        acc = term = 1.0
        for k in range(n):
            term *= (a + k) / (b + k) * x / (k + 1)
            acc += term
        return acc
    acc = term = 1.0
    small = 0
    for k in range(max_terms):
        term *= (a + k) / (b + k) * x / (k + 1)
        acc += term
        small = small + 1 if abs(term) <= rtol * abs(acc) else 0
        if small >= 2:
            return acc
    raise ArithmeticError(f"series did not converge for M({a}, {b}, {x})")


def _hyp_parameters(state: SectorState, params: WignerParams):
    """(a, b) of the radial hypergeometric factor; a == -n for quantized E."""
    nu1, nu2 = params.as_floats()
    lam = lambda_value(state.ell, state.epsilon, state.branch, params)
    d = nu1 + nu2 if state.epsilon == 1 else nu1 - nu2
    root = math.sqrt(d * d + lam * lam)
    e_over_w = energy_over_omega_c(state, params)
    a = 0.5 * (1.0 + lam + root) - state.m_s * eta(state.eps1, state.eps2, params) - e_over_w
    return a, 1.0 + root


def radial_wavefunction(state: SectorState, scale: OscillatorScale,
                        params: WignerParams, r: float, norm: float = 1.0) -> float:
    """Unnormalized radial factor norm * exp(-m w r^2/4) r^(2 ell) M(a, b; m w r^2/2).

    The hypergeometric first argument reduces to -n when the energy is the
    quantized closed-form value, so the series terminates.
    """
    if r < 0:
        raise ValueError("radius must be nonnegative")
    a, b = _hyp_parameters(state, params)
    mw = scale.mass * scale.omega_c
    twol = 2.0 * float(state.ell)
    radial_power = 1.0 if twol == 0 else r ** twol
    return norm * math.exp(-0.25 * mw * r * r) * radial_power * hyp1f1(a, b, 0.5 * mw * r * r)


def radial_norm_constant(state: SectorState, scale: OscillatorScale,
                         params: WignerParams) -> float:
    """Normalization constant against the radial measure r^(1+2nu1+2nu2) dr.

    Quadrature on [0, R] with R grown adaptively until the Gaussian tail is
    negligible.
    """
    nu1, nu2 = params.as_floats()
    weight_pow = 1.0 + 2.0 * nu1 + 2.0 * nu2

    def integrand(r: float) -> float:
        f = radial_wavefunction(state, scale, params, r)
        return f * f * r ** weight_pow

    r_max = math.sqrt(2.0 / (scale.mass * scale.omega_c)) * 8.0
    total = 0.0
    while True:
        total, _ = quad(integrand, 0.0, r_max, limit=200)
        tail, _ = quad(integrand, r_max, 1.5 * r_max, limit=50)
        if abs(tail) <= 1e-14 * max(total, 1e-300):
            break
        r_max *= 1.5
    return 1.0 / math.sqrt(total)
