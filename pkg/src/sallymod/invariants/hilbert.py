"""Hilbert-Samuel data: exact values of λ(R/I^n) and the fitted polynomial.

Polynomials in n are written in the binomial basis
``P(n) = sum_i (-1)^i c_i C(n + D - 1 - i, D - i)`` where D is the degree.
The same fit serves the Hilbert-Samuel polynomial (D = d) and the
Sally-module lengths (D = d - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


class HilbertFitError(ValueError):
    """The sampled values do not pin down a polynomial of the expected degree."""

    def __init__(self, message: str, suggested_N: int | None = None):
        super().__init__(message if suggested_N is None else f"{message}; try N >= {suggested_N}")
        self.suggested_N = suggested_N


def binomial(x: int, k: int) -> int:
    """C(x, k) as a polynomial in x (so negative x is allowed); 0 for k < 0."""
    if k < 0:
        return 0
    num, den = 1, 1
    for j in range(k):
        num *= x - j
        den *= j + 1
    return num // den


def basis_value(n: int, D: int, i: int) -> int:
    return (-1) ** i * binomial(n + D - 1 - i, D - i)


def poly_value(coeffs: Sequence[int], n: int) -> int:
    D = len(coeffs) - 1
    return sum(c * basis_value(n, D, i) for i, c in enumerate(coeffs))


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    m = len(rows)
    a = [r[:] + [b] for r, b in zip(rows, rhs)]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col] != 0), None)
        if piv is None:
            raise HilbertFitError("singular fitting system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


def fit_binomial(points: Mapping[int, int], D: int, verify: int = 2) -> tuple[tuple[int, ...], int]:
    """Fit degree-D coefficients at the top D+1 points, verify on ``verify`` more.

    Returns ``(coeffs, start)`` where ``start`` is the least sampled n from
    which every sampled value agrees with the polynomial.
    """
    ns = sorted(points)
    if len(ns) < D + 1 + verify:
        raise HilbertFitError(
            f"need {D + 1 + verify} sample points for degree {D}, have {len(ns)}",
            suggested_N=(ns[-1] if ns else 0) + D + 1 + verify - len(ns))
    top = ns[-(D + 1):]
    rows = [[Fraction(basis_value(n, D, i)) for i in range(D + 1)] for n in top]
    sol = _solve(rows, [Fraction(points[n]) for n in top])
    if any(c.denominator != 1 for c in sol):
        raise HilbertFitError(f"non-integral coefficients {sol}", suggested_N=ns[-1] + 2)
    coeffs = tuple(int(c) for c in sol)
    lower = ns[:-(D + 1)]
    for n in lower[-verify:]:
        if poly_value(coeffs, n) != points[n]:
            raise HilbertFitError(
                f"fitted polynomial misses the value at n={n}: N too small",
                suggested_N=ns[-1] + verify + 1)
    start = top[0]
    for n in reversed(lower):
        if poly_value(coeffs, n) != points[n]:
            break
        start = n
    return coeffs, start


@dataclass(frozen=True)
class HilbertData:
    """λ(R/I^n) for n = 0..N with the fitted coefficients e_0..e_d."""

    values: tuple[int, ...]
    d: int
    coefficients: tuple[int, ...]
    postulation: int

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def e(self, i: int) -> int:
        return self.coefficients[i]

    def polynomial(self, n: int) -> int:
        return poly_value(self.coefficients, n)


def fit_hilbert(values: Sequence[int], d: int) -> HilbertData:
    """Fit the Hilbert-Samuel polynomial to ``values[n] = λ(R/I^n)``, n >= 0."""
    values = tuple(values)
    for n in range(2, len(values)):
        if values[n] <= values[n - 1]:
            raise ValueError(f"λ(R/I^n) not strictly increasing at n={n}")
    pts = {n: v for n, v in enumerate(values)}
    coeffs, start = fit_binomial(pts, d)
    return HilbertData(values, d, coeffs, start)


def hilbert_samuel(I, N: int, pair=None) -> HilbertData:
    """Compute λ(R/I^n) for n <= N and fit the polynomial."""
    from .pair import pair_data

    pd = pair if pair is not None else pair_data(I, None)
    if N < I.dim + 2:
        raise HilbertFitError(f"N={N} leaves no verification points", suggested_N=I.dim + 3)
    return fit_hilbert([pd.len_power(n) for n in range(N + 1)], I.dim)
