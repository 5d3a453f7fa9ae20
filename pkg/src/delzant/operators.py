"""Todd and A-hat operator calculus on volume polynomials.

The lattice point count of a Delzant polytope equals the product of Todd
series in the offset derivatives applied to the volume polynomial and
evaluated at the anchor (Khovanskii's formula); the boundary point count
likewise comes from a product of A-hat series times one reciprocal A-hat
series in the summed derivative, applied to the boundary volume.  All
series act exactly: the targets are polynomials, so every operator expansion
terminates at the target's degree and truncation is a hard precondition,
never a tolerance.

Series conventions (coefficients of x^j):

    Td(x)      = x / (1 - exp(-x))      -> b_j / j!, Bernoulli numbers with b_1 = +1/2
    Ahat(x)    = (x/2) / sinh(x/2)      -> series inverse of invAhat
    invAhat(x) = sinh(x/2) / (x/2)      -> 1 / (2^(2j) (2j+1)!) in degree 2j
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .counting import EhrhartPoly
from .errors import FormulaViolationError, TruncationError
from .polynomial import MultiPoly
from .volume import VolumePolynomial, boundary_volume_polynomial

SERIES_NAMES = ("Td", "Ahat", "invAhat")


def bernoulli_numbers(order: int) -> list[Fraction]:
    """B_0..B_order by the defining recurrence, with the B_1 = +1/2 convention."""
    if order < 0:
        raise ValueError("order must be >= 0")
    numbers: list[Fraction] = []
    for n in range(order + 1):
        acc = Fraction(n + 1)
        for j in range(n):
            acc -= comb(n + 1, j) * numbers[j]
        numbers.append(acc / (n + 1))
    return numbers


def series_multiply(a, b, order: int) -> list[Fraction]:
    """Cauchy product of two coefficient lists, truncated at the given order."""
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def series_invert(a, order: int) -> list[Fraction]:
    """Multiplicative inverse of a power series with nonzero constant term."""
    a0 = Fraction(a[0])
    if a0 == 0:
        raise ValueError("series has no inverse: constant term is zero")
    inv = [1 / a0]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            ai = Fraction(a[i]) if i < len(a) else Fraction(0)
            acc += ai * inv[n - i]
        inv.append(-acc / a0)
    return inv


def todd_denominator_series(order: int) -> list[Fraction]:
    """(1 - exp(-x)) / x, the reciprocal of Td; inversion oracle for tests."""
    return [Fraction((-1) ** n, factorial(n + 1)) for n in range(order + 1)]


@dataclass(frozen=True)
class SeriesSpec:
    name: str
    coefficients: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> Fraction:
        return self.coefficients[j] if j <= self.order else Fraction(0)


def series_coefficients(name: str, order: int) -> SeriesSpec:
    if order < 0:
        raise ValueError("order must be >= 0")
    if name == "Td":
        bernoulli = bernoulli_numbers(order)
        coeffs = [bernoulli[j] / factorial(j) for j in range(order + 1)]
    elif name == "invAhat":
        coeffs = [
            Fraction(1, 2**j * factorial(j + 1)) if j % 2 == 0 else Fraction(0)
            for j in range(order + 1)
        ]
    elif name == "Ahat":
        coeffs = series_invert(series_coefficients("invAhat", order).coefficients, order)
    else:
        raise ValueError(f"unknown series {name!r}; expected one of {SERIES_NAMES}")
    return SeriesSpec(name=name, coefficients=tuple(coeffs))


@dataclass(frozen=True)
class OperatorProduct:
    """Per-variable series in the single derivatives, times an optional
    series in the summed derivative.  Exact when truncation_order covers
    the degree of the target polynomial."""

    nvars: int
    per_variable: dict[int, SeriesSpec]
    sum_factor: SeriesSpec | None
    truncation_order: int


def todd_product(nvars: int, order: int) -> OperatorProduct:
    td = series_coefficients("Td", order)
    return OperatorProduct(
        nvars=nvars,
        per_variable={i: td for i in range(nvars)},
        sum_factor=None,
        truncation_order=order,
    )


def boundary_operator_product(nvars: int, order: int) -> OperatorProduct:
    ahat = series_coefficients("Ahat", order)
    return OperatorProduct(
        nvars=nvars,
        per_variable={i: ahat for i in range(nvars)},
        sum_factor=series_coefficients("invAhat", order),
        truncation_order=order,
    )


def _apply_single_variable(series: SeriesSpec, var: int, p: MultiPoly) -> MultiPoly:
    result = MultiPoly.zero(p.nvars)
    derivative = p
    j = 0
    while not derivative.is_zero() and j <= series.order:
        c = series.coefficients[j]
        if c != 0:
            result = result + derivative * c
        derivative = derivative.differentiate(var)
        j += 1
    return result


def _apply_sum_factor(series: SeriesSpec, p: MultiPoly) -> MultiPoly:
    result = MultiPoly.zero(p.nvars)
    derivative = p
    j = 0
    while not derivative.is_zero() and j <= series.order:
        c = series.coefficients[j]
        if c != 0:
            result = result + derivative * c
        summed = MultiPoly.zero(p.nvars)
        for var in range(p.nvars):
            summed = summed + derivative.differentiate(var)
        derivative = summed
        j += 1
    return result


def apply_operator_product(op: OperatorProduct, p: MultiPoly) -> MultiPoly:
    """Expand the operator product against a polynomial, exactly.

    The factors commute, so they are applied one variable at a time with
    the sum factor last; a truncation order below the target degree is an
    error rather than a silent cutoff.
    """
    if p.nvars != op.nvars:
        raise ValueError(f"operator is over {op.nvars} variables, polynomial over {p.nvars}")
    if op.truncation_order < p.total_degree:
        raise TruncationError(
            f"truncation order {op.truncation_order} is below the polynomial degree "
            f"{p.total_degree}; the expansion would be silently wrong"
        )
    for series in op.per_variable.values():
        if series.order < op.truncation_order:
            raise TruncationError(
                f"series {series.name} carries only order {series.order}, "
                f"needed {op.truncation_order}"
            )
    if op.sum_factor is not None and op.sum_factor.order < op.truncation_order:
        raise TruncationError(
            f"series {op.sum_factor.name} carries only order {op.sum_factor.order}, "
            f"needed {op.truncation_order}"
        )
    result = p
    for var in sorted(op.per_variable):
        result = _apply_single_variable(op.per_variable[var], var, result)
    if op.sum_factor is not None:
        result = _apply_sum_factor(op.sum_factor, result)
    return result


def _require_nonnegative_integer(value: Fraction, what: str, detail: str) -> int:
    if value.denominator != 1 or value < 0:
        raise FormulaViolationError(
            f"{what} evaluated to {value}, not a nonnegative integer; {detail}"
        )
    return int(value)


def khovanskii_count(spec, vol: VolumePolynomial) -> int:
    """Lattice point count via the Todd operator product on the volume."""
    applied = apply_operator_product(todd_product(vol.poly.nvars, vol.degree), vol.poly)
    value = applied.evaluate(vol.anchor)
    return _require_nonnegative_integer(
        value,
        "Todd operator count",
        f"operator-applied polynomial {applied.to_text()} at {vol.anchor}",
    )


def boundary_count_formula(spec, vol: VolumePolynomial) -> int:
    """Boundary lattice point count via the A-hat operator product."""
    boundary = boundary_volume_polynomial(vol)
    op = boundary_operator_product(vol.poly.nvars, max(vol.degree - 1, 0))
    applied = apply_operator_product(op, boundary.poly)
    value = applied.evaluate(vol.anchor)
    return _require_nonnegative_integer(
        value,
        "A-hat boundary count",
        f"operator-applied polynomial {applied.to_text()} at {vol.anchor}",
    )


def operator_applied_polynomial(spec, vol: VolumePolynomial, kind: str) -> MultiPoly:
    """The intermediate operator-applied polynomial, exposed for audit output."""
    if kind == "full":
        return apply_operator_product(todd_product(vol.poly.nvars, vol.degree), vol.poly)
    if kind == "boundary":
        boundary = boundary_volume_polynomial(vol)
        op = boundary_operator_product(vol.poly.nvars, max(vol.degree - 1, 0))
        return apply_operator_product(op, boundary.poly)
    raise ValueError(f"unknown kind {kind!r}; expected 'full' or 'boundary'")


def symbolic_ehrhart(spec, vol: VolumePolynomial, kind: str) -> EhrhartPoly:
    """Ehrhart polynomial via operators: apply, then substitute offsets -> k * anchor."""
    applied = operator_applied_polynomial(spec, vol, kind)
    return EhrhartPoly(poly=applied.substitute_dilation(vol.anchor), kind=kind)
