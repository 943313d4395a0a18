"""Exact Cartesian building blocks: Wigner parameters, sparse rational
bivariate polynomials, reflections and Dunkl derivatives.

Everything in this module is computed over the rationals (fractions.Fraction),
so operator identities can be asserted with zero tolerance.  A polynomial is a
sparse map from exponent pairs (i, j) to coefficients, representing
sum c_ij * x1^i * x2^j; zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class WignerParams:
    """Deformation pair (nu1, nu2), each constrained to nu > -1/2.

    Values are stored as exact Fractions; floats are converted to their exact
    binary value, so pass Fraction("2/5") (not 0.4) when exact decimal
    rationals matter.
    """

    nu1: Fraction
    nu2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "nu1", Fraction(self.nu1))
        object.__setattr__(self, "nu2", Fraction(self.nu2))
        if self.nu1 <= Fraction(-1, 2) or self.nu2 <= Fraction(-1, 2):
            raise ValueError(
                f"Wigner parameters must be > -1/2, got ({self.nu1}, {self.nu2})"
            )

    def nu(self, axis: int) -> Fraction:
        _check_axis(axis)
        return self.nu1 if axis == 1 else self.nu2

    def as_floats(self) -> tuple[float, float]:
        return float(self.nu1), float(self.nu2)


def _check_axis(axis: int) -> None:
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis}")


class BivarPoly:
    """Sparse exact polynomial in two variables with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial ({i}, {j})")
            c = Fraction(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "BivarPoly":
        return cls({})

    @classmethod
    def constant(cls, c) -> "BivarPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BivarPoly":
        return cls({(i, j): Fraction(c)})

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def total_degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((i + j for i, j in self._coeffs), default=0)

    def evaluate(self, x1, x2):
        return sum((c * x1**i * x2**j for (i, j), c in self._coeffs.items()),
                   start=Fraction(0) * x1)

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self._coeffs)
        for mono, c in other._coeffs.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return BivarPoly(out)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        out = dict(self._coeffs)
        for mono, c in other._coeffs.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return BivarPoly(out)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({m: -c for m, c in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, BivarPoly):
            out: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), c1 in self._coeffs.items():
                for (i2, j2), c2 in other._coeffs.items():
                    mono = (i1 + i2, j1 + j2)
                    out[mono] = out.get(mono, Fraction(0)) + c1 * c2
            return BivarPoly(out)
        if isinstance(other, Rational):
            c = Fraction(other)
            return BivarPoly({m: c * v for m, v in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "BivarPoly(0)"
        terms = []
        for (i, j) in sorted(self._coeffs, key=lambda m: (m[0] + m[1], m)):
            c = self._coeffs[(i, j)]
            body = "".join(f"*x{k}^{e}" for k, e in ((1, i), (2, j)) if e)
            terms.append(f"{c}{body}")
        return "BivarPoly(" + " + ".join(terms) + ")"


X1 = BivarPoly.monomial(1, 0)
X2 = BivarPoly.monomial(0, 1)
ONE = BivarPoly.constant(1)


def reflect(p: BivarPoly, axis: int) -> BivarPoly:
    """Reflection R_axis: negate the given coordinate (sign flip on odd powers)."""
    _check_axis(axis)
    k = 0 if axis == 1 else 1
    return BivarPoly({m: (-c if m[k] % 2 else c) for m, c in p.coeffs.items()})


def partial_derive(p: BivarPoly, axis: int) -> BivarPoly:
    """Plain partial derivative with respect to x_axis."""
    _check_axis(axis)
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in p.coeffs.items():
        e = i if axis == 1 else j
        if e == 0:
            continue
        mono = (i - 1, j) if axis == 1 else (i, j - 1)
        out[mono] = out.get(mono, Fraction(0)) + c * e
    return BivarPoly(out)


def dunkl_derive(p: BivarPoly, axis: int, params: WignerParams) -> BivarPoly:
    """Dunkl derivative D_j = d/dx_j + (nu_j/x_j)(1 - R_j).

    On a monomial x_j^e the reflection-difference term contributes
    2*nu_j*x_j^(e-1) for odd e and nothing for even e, so the division by x_j
    is an exact exponent decrement and the result is always a polynomial.
    """
    _check_axis(axis)
    nu = params.nu(axis)
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in p.coeffs.items():
        e = i if axis == 1 else j
        if e == 0:
            continue
        factor = e + (2 * nu if e % 2 else 0)
        if factor == 0:
            continue
        mono = (i - 1, j) if axis == 1 else (i, j - 1)
        out[mono] = out.get(mono, Fraction(0)) + c * factor
    return BivarPoly(out)


def commutator_xD(p: BivarPoly, i: int, j: int, params: WignerParams) -> BivarPoly:
    """Coordinate/Dunkl-derivative commutator applied to p, taken in the
    operator order D_j(x_i p) - x_i(D_j p) that satisfies the deformed
    Heisenberg relation: the result equals delta_ij*(p + 2*nu_j*R_j p).
    """
    _check_axis(i)
    _check_axis(j)
    xi = X1 if i == 1 else X2
    return dunkl_derive(xi * p, j, params) - xi * dunkl_derive(p, j, params)


def dunkl_laplacian(p: BivarPoly, params: WignerParams) -> BivarPoly:
    """Dunkl Laplacian as the composition D1(D1 p) + D2(D2 p)."""
    return (dunkl_derive(dunkl_derive(p, 1, params), 1, params)
            + dunkl_derive(dunkl_derive(p, 2, params), 2, params))


def dunkl_laplacian_expanded(p: BivarPoly, params: WignerParams) -> BivarPoly:
    """Dunkl Laplacian from its expanded display,

        d^2/dx1^2 + d^2/dx2^2 + (2 nu1/x1) d/dx1 + (2 nu2/x2) d/dx2
        - (nu1/x1^2)(1 - R1) - (nu2/x2^2)(1 - R2).

    The 1/x_j pieces are singular individually but their sum acts on a
    monomial x_j^e as 2*nu_j*(e - (e odd)) * x_j^(e-2), which never produces a
    negative exponent; the combined rule is applied per monomial.
    """
    out: dict[tuple[int, int], Fraction] = {}
    for (i, j), c in p.coeffs.items():
        for axis, e in ((1, i), (2, j)):
            nu = params.nu(axis)
            factor = e * (e - 1) + 2 * nu * (e - (e % 2))
            if factor == 0:
                continue
            if e < 2:
                raise ArithmeticError(
                    f"nonzero singular remainder on monomial ({i},{j})")
            mono = (i - 2, j) if axis == 1 else (i, j - 2)
            out[mono] = out.get(mono, Fraction(0)) + c * factor
    return BivarPoly(out)


def angular_momentum_action(p: BivarPoly, params: WignerParams,
                            as_printed: bool = False) -> BivarPoly:
    """Cartesian angular combination (x1 D2 - x2 D1) applied to p.

    With as_printed=True evaluates the variant (x1 D2 - x2 D2) instead, whose
    second index is a known misprint in the published Hamiltonian; the verify
    report uses the mismatch against the polar operator as machine evidence.
    """
    d2 = dunkl_derive(p, 2, params)
    second = d2 if as_printed else dunkl_derive(p, 1, params)
    return X1 * d2 - X2 * second
