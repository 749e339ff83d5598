"""Dense polynomials over Fraction and the derangement-polynomial formulas.

Two families live here: the generalized polynomials (coefficient of x^k is
C(n,k) * rising(r,k)) and their reflections, the order-r derangement
polynomials.  The cross-order shift recurrences are exposed as a verifier
rather than a generator; the fixed-order convolution recurrences generate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence

from .exact import binomial, factorial, rising_factorial


class DegreeTooHigh(ValueError):
    pass


@dataclass(frozen=True)
class Polynomial:
    """coeffs[k] = coefficient of x^k; trailing zeros are ignored by ==."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return 0

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return _trim(self.coeffs) == _trim(other.coeffs)

    def __hash__(self):
        return hash(_trim(self.coeffs))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def generalized_D_poly(n: int, r: int) -> Polynomial:
    """Explicit formula: sum_k C(n,k) rising(r,k) x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Polynomial(tuple(
        Fraction(binomial(n, k) * rising_factorial(r, k)) for k in range(n + 1)
    ))


def order_d_poly(n: int, r: int) -> Polynomial:
    """Explicit formula: sum_k C(n,k) rising(r,k) x^{n-k} (reflection partner)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return reflect(generalized_D_poly(n, r), n)


def reflect(p: Polynomial, n: int) -> Polynomial:
    """Coefficient reversal x^n p(1/x); requires deg(p) <= n."""
    if p.degree > n:
        raise DegreeTooHigh(f"degree {p.degree} > {n}")
    return Polynomial(tuple(p[n - k] for k in range(n + 1)))


def eval_poly(p: Polynomial, x) -> Fraction:
    """Horner evaluation, exact."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def classic_derangement(n: int) -> int:
    """D_n = n! sum_k (-1)^k / k!, computed as an exact integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = Fraction(0)
    for k in range(n + 1):
        total += Fraction((-1) ** k, factorial(k))
    val = factorial(n) * total
    assert val.denominator == 1
    return val.numerator


def cyclic_derangement(n: int, r: int) -> int:
    """d_{n,r} = (-1)^n * generalized poly of order 1 evaluated at -r."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0, r >= 1")
    val = (-1) ** n * eval_poly(generalized_D_poly(n, 1), -r)
    assert val.denominator == 1
    return val.numerator


def generate_D_by_convolution(r: int, x, count: int) -> List[Fraction]:
    """Generalized-polynomial values at x by the fixed-order convolution
    recurrence: D_{n+1} = D_n + r x sum_k C(n,k) D_k x^{n-k} (n-k)!."""
    if count < 1:
        raise ValueError("count must be >= 1")
    x = Fraction(x)
    vals = [Fraction(1)]
    for n in range(count - 1):
        conv = sum(
            binomial(n, k) * vals[k] * x ** (n - k) * factorial(n - k)
            for k in range(n + 1)
        )
        vals.append(vals[n] + r * x * conv)
    return vals


def generate_d_by_convolution(r: int, x, count: int) -> List[Fraction]:
    """Order-r polynomial values at x by the reflected convolution
    recurrence: d_{n+1} = x d_n + r sum_k C(n,k) d_k (n-k)!."""
    if count < 1:
        raise ValueError("count must be >= 1")
    x = Fraction(x)
    vals = [Fraction(1)]
    for n in range(count - 1):
        conv = sum(
            binomial(n, k) * vals[k] * factorial(n - k) for k in range(n + 1)
        )
        vals.append(x * vals[n] + r * conv)
    return vals


@dataclass
class IdentityReport:
    """Outcome of an exact identity sweep; failures carry the offending cell."""

    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_shift_recurrences(n_max: int, r_max: int, xs: Sequence) -> IdentityReport:
    """Check the cross-order recurrences
    D_{n+1}^{(r)} = D_n^{(r)} + r x D_n^{(r+1)}  and
    d_{n+1}^{(r)} = x d_n^{(r)} + r d_n^{(r+1)}
    over the full (n, r, x) grid, exactly."""
    report = IdentityReport()
    xs = [Fraction(x) for x in xs]
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            Dn = generalized_D_poly(n, r)
            Dn_up = generalized_D_poly(n, r + 1)
            Dn1 = generalized_D_poly(n + 1, r)
            dn = order_d_poly(n, r)
            dn_up = order_d_poly(n, r + 1)
            dn1 = order_d_poly(n + 1, r)
            for x in xs:
                report.checked += 2
                lhs = eval_poly(Dn1, x)
                rhs = eval_poly(Dn, x) + r * x * eval_poly(Dn_up, x)
                if lhs != rhs:
                    report.failures.append(("D-shift", n, r, x, lhs, rhs))
                lhs = eval_poly(dn1, x)
                rhs = x * eval_poly(dn, x) + r * eval_poly(dn_up, x)
                if lhs != rhs:
                    report.failures.append(("d-shift", n, r, x, lhs, rhs))
    return report
