"""Recover HK(q) as an exact polynomial in q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from hkdet.closedforms import hk_closed


class PolynomialityError(ArithmeticError):
    """An interpolated polynomial disagrees with the function at a check point."""


@dataclass(frozen=True)
class ExactPolynomial:
    """Polynomial with rational coefficients, constant term first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (Fraction(0),)

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            mag = abs(c)
            body = str(mag) if k == 0 else ("" if mag == 1 else f"{mag}*") + (
                "q" if k == 1 else f"q^{k}"
            )
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}" if parts else ("-" + body if c < 0 else body))
        return " ".join(parts)


def newton_interpolate(xs: Sequence[int], ys: Sequence[int | Fraction]) -> ExactPolynomial:
    """Unique polynomial of degree < len(xs) through the points, over Q."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("need equally many (and at least one) nodes and values")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    k = len(xs)
    dd = [Fraction(y) for y in ys]
    for order in range(1, k):
        for i in range(k - 1, order - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - order])
    # expand the Newton form into monomial coefficients, innermost first
    coeffs = [dd[-1]]
    for i in range(k - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for d in range(len(coeffs)):
            shifted[d] -= xs[i] * coeffs[d]
        shifted[0] += dd[i]
        coeffs = shifted
    return ExactPolynomial(tuple(coeffs))


def interpolate_hk(m: int, n: int, check_upto: int | None = None) -> ExactPolynomial:
    """Fit HK(q) for the m x n determinantal ring on q = 1..m+n.

    The fit is checked against ``hk_closed`` at every q from m+n+1 through
    ``check_upto`` (default m+n+10) and must have degree m+n-1.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1; got m={m}, n={n}")
    nodes = list(range(1, m + n + 1))
    poly = newton_interpolate(nodes, [hk_closed(m, n, q) for q in nodes])
    last = m + n + 10 if check_upto is None else check_upto
    for q in range(m + n + 1, last + 1):
        expected = hk_closed(m, n, q)
        if poly(q) != expected:
            raise PolynomialityError(
                f"fit for m={m}, n={n} gives {poly(q)} at q={q}, expected {expected}"
            )
    if poly.degree != m + n - 1:
        raise PolynomialityError(
            f"fit for m={m}, n={n} has degree {poly.degree}, expected {m + n - 1}"
        )
    return poly


def leading_coefficient(p: ExactPolynomial) -> Fraction:
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading coefficient")
    return p.coefficients[-1]
