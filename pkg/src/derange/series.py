"""Truncated formal power series over Fraction, and the EGF family table.

Every generating function here has the shape e^{cz} * (1-xz)^{-r}, possibly
with a z^r prefactor, so series division never appears: the 1/(1-xz)^r
factor is expanded by its closed binomial form (geom_pow) and everything
else is Cauchy products.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import factorial


class OrderMismatch(ValueError):
    """Arithmetic between two series of different truncation order."""


class InvalidFamilyParams(ValueError):
    """Family parameters outside the family's domain (e.g. r=0 r-derangement)."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of a power series in z, coeffs[n] = [z^n], up to a fixed order."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    if a.order != b.order:
        raise OrderMismatch(f"order {a.order} vs {b.order}")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(tuple(out))


def series_exp(c, order: int) -> TruncatedSeries:
    """e^{cz} truncated: coeffs[n] = c^n / n!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / n)
    return TruncatedSeries(tuple(coeffs))


def geom_pow(x, r: int, order: int) -> TruncatedSeries:
    """1/(1-xz)^r by the binomial expansion: coeffs[k] = r^(rising k) x^k / k!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if r < 0:
        raise ValueError("r must be >= 0")
    x = Fraction(x)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        # ratio of consecutive terms: (r+k-1) * x / k
        coeffs.append(coeffs[-1] * (r + k - 1) * x / k)
    return TruncatedSeries(tuple(coeffs))


class Family(enum.Enum):
    CLASSIC = "classic"
    ORDER_R_NUMBERS = "order-r"
    R_DERANGEMENT_NUMBERS = "r-derangement"
    R_DERANGEMENT_POLY = "r-derangement-poly"
    ORDER_R_POLY = "order-r-poly"
    CYCLIC = "cyclic"
    GENERALIZED = "generalized"


# families whose EGF carries an x (or z) parameter
_POLY_FAMILIES = {Family.R_DERANGEMENT_POLY, Family.ORDER_R_POLY, Family.GENERALIZED}
_R_DERANGEMENT = {Family.R_DERANGEMENT_NUMBERS, Family.R_DERANGEMENT_POLY}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    r: Optional[int] = None
    x: Optional[Fraction] = None

    def __post_init__(self):
        if self.family is Family.CLASSIC:
            if self.r is not None:
                raise InvalidFamilyParams("classic family takes no r")
        else:
            if self.r is None or self.r < 0:
                raise InvalidFamilyParams(f"{self.family.value} needs r >= 0")
            if self.family in _R_DERANGEMENT and self.r < 1:
                raise InvalidFamilyParams(f"{self.family.value} needs r >= 1")
            if self.family is Family.CYCLIC and self.r < 1:
                raise InvalidFamilyParams("cyclic family needs r >= 1")
        if self.family in _POLY_FAMILIES:
            if self.x is None:
                raise InvalidFamilyParams(f"{self.family.value} needs x")
            object.__setattr__(self, "x", Fraction(self.x))
        elif self.x is not None:
            raise InvalidFamilyParams(f"{self.family.value} takes no x")


def _family_series(spec: FamilySpec, order: int) -> TruncatedSeries:
    """The family's EGF, truncated; z^r prefactors handled by the caller."""
    f, r, x = spec.family, spec.r, spec.x
    if f is Family.CLASSIC:
        return series_mul(series_exp(-1, order), geom_pow(1, 1, order))
    if f is Family.ORDER_R_NUMBERS:
        return series_mul(series_exp(-1, order), geom_pow(1, r, order))
    if f is Family.R_DERANGEMENT_NUMBERS:
        return series_mul(series_exp(-1, order), geom_pow(1, r + 1, order))
    if f is Family.R_DERANGEMENT_POLY:
        return series_mul(series_exp(x, order), geom_pow(1, r + 1, order))
    if f is Family.ORDER_R_POLY:
        return series_mul(series_exp(x, order), geom_pow(1, r, order))
    if f is Family.CYCLIC:
        return series_mul(series_exp(-1, order), geom_pow(r, 1, order))
    if f is Family.GENERALIZED:
        return series_mul(series_exp(1, order), geom_pow(x, r, order))
    raise InvalidFamilyParams(f"unknown family {f!r}")


def egf_values(spec: FamilySpec, count: int) -> list:
    """First `count` values a_n = n! [z^n] F(z) of the family's EGF.

    For the r-derangement families the z^r prefactor becomes an index
    shift, so a_0 .. a_{r-1} are zero.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    order = count - 1
    base = _family_series(spec, order)
    shift = spec.r if spec.family in _R_DERANGEMENT else 0
    out = []
    for n in range(count):
        coeff = base[n - shift] if n >= shift else Fraction(0)
        out.append(factorial(n) * coeff)
    return out
