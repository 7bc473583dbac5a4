"""Truncated univariate power series over exact rationals.

Also builds the two characteristic series driving everything else: the
signature genus series sqrt(z)/tanh(sqrt(z)) and the A-hat genus series
(sqrt(z)/2)/sinh(sqrt(z)/2), both expanded in the squared variable z so that
all coefficients are rational.  They are produced by exact series division
of factorial series, never from closed-form Bernoulli expressions.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .formatting import signed_sum

__all__ = ["Series", "ahat_genus_series", "l_genus_series"]


class Series:
    """Power series truncated at a fixed order, with Fraction coefficients.

    Binary operations truncate the result to the smaller order of the two
    operands; scalar operations keep the order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients, order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self._coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self._coeffs[: order + 1], order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Series) and self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)], n)

    def __sub__(self, other: Series) -> Series:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self._coeffs[k] - other._coeffs[k] for k in range(n + 1)], n)

    def __neg__(self) -> Series:
        return Series([-c for c in self._coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.order, other.order)
            out = [Fraction(0)] * (n + 1)
            for i in range(n + 1):
                a = self._coeffs[i]
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b:
                        out[i + j] += a * b
            return Series(out, n)
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self._coeffs], self.order)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([other * c for c in self._coeffs], self.order)
        return NotImplemented

    def __pow__(self, exponent: int) -> Series:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"series exponent must be a nonnegative integer, got {exponent!r}")
        result = Series([1], self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> Series:
        """Multiplicative inverse; requires a nonzero constant term.

        Coefficients come from the standard recurrence
        b_0 = 1/a_0,  b_m = -(1/a_0) * sum_{k=1}^{m} a_k b_{m-k}.
        """
        c0 = self._coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term is not invertible")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c0
        for m in range(1, n + 1):
            acc = sum(self._coeffs[k] * out[m - k] for k in range(1, m + 1))
            out[m] = -acc / c0
        return Series(out, n)

    def exp(self) -> Series:
        """Exponential of a series with zero constant term."""
        if self._coeffs[0]:
            raise ValueError("exp requires a zero constant term")
        acc = Series([1], self.order)
        term = Series([1], self.order)
        for m in range(1, self.order + 1):
            term = term * self * Fraction(1, m)
            acc = acc + term
        return acc

    def log(self) -> Series:
        """Logarithm of a series with constant term 1."""
        if self._coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        x = self - Series([1], self.order)
        acc = Series([0], self.order)
        power = Series([1], self.order)
        for m in range(1, self.order + 1):
            power = power * x
            acc = acc + power * Fraction((-1) ** (m + 1), m)
        return acc

    def dilate(self, factor: Fraction | int) -> Series:
        """Substitute factor*z for z."""
        scale = Fraction(factor)
        return Series([c * scale**k for k, c in enumerate(self._coeffs)], self.order)

    def __str__(self) -> str:
        def mono(k: int) -> str:
            if k == 0:
                return ""
            return "z" if k == 1 else f"z^{k}"

        return signed_sum((c, mono(k)) for k, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self._coeffs)}])"


def l_genus_series(order: int) -> Series:
    """Signature genus series sqrt(z)/tanh(sqrt(z)) up to z^order.

    Computed as the exact quotient of cosh(t) by sinh(t)/t with t^2 = z,
    i.e. [sum z^k/(2k)!] / [sum z^k/(2k+1)!].
    """
    num = Series([Fraction(1, factorial(2 * k)) for k in range(order + 1)], order)
    den = Series([Fraction(1, factorial(2 * k + 1)) for k in range(order + 1)], order)
    return num * den.inverse()


def ahat_genus_series(order: int) -> Series:
    """A-hat genus series (sqrt(z)/2)/sinh(sqrt(z)/2) up to z^order.

    Computed as the exact inverse of sinh(t)/t with t = sqrt(z)/2,
    i.e. the inverse of sum z^k/(4^k (2k+1)!).
    """
    den = Series(
        [Fraction(1, 4**k * factorial(2 * k + 1)) for k in range(order + 1)], order
    )
    return den.inverse()
