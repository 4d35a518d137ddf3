"""Exact truncated power series in q over Python integers.

A series of order L carries the coefficients of q^0 .. q^(L-1); everything is
computed mod q^L with exact integer arithmetic.  Mixed-order operands truncate
to the smaller order, mirroring restriction along the chain of quotients by
the ideals (q^L).
"""

from __future__ import annotations

from fractions import Fraction

# Exact scalar field for pointwise operator checks: reduced fraction with
# positive denominator, arbitrary-precision integers.
ExactRational = Fraction


class QSeries:
    """Integer power series truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f"truncation order must be >= 1, got {order}")
        co = list(coeffs)[:order]
        for c in co:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        co.extend([0] * (order - len(co)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(co))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def _make(cls, order: int, co: list[int]) -> "QSeries":
        """Trusted constructor: `co` must already be a length-`order` int list."""
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(co))
        return self

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._make(order, [0] * order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls._make(order, [1] + [0] * (order - 1))

    def __repr__(self):
        return f"QSeries(order={self.order}, coeffs={list(self.coeffs)})"

    def __getitem__(self, exponent: int) -> int:
        if not 0 <= exponent < self.order:
            raise IndexError(f"exponent {exponent} outside stored range 0..{self.order - 1}")
        return self.coeffs[exponent]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def min_degree(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, or None for the zero series."""
        for e, c in enumerate(self.coeffs):
            if c:
                return e
        return None

    def truncate(self, order: int) -> "QSeries":
        """Restrict to a smaller (or equal) truncation order."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return QSeries._make(order, list(self.coeffs[:order]))

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k (k >= 0), truncating at the stored order."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if k == 0:
            return self
        n = self.order
        if k >= n:
            return QSeries.zero(n)
        return QSeries._make(n, [0] * k + list(self.coeffs[: n - k]))

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int):
            return QSeries(self.order, (other,))
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        n = min(self.order, g.order)
        return QSeries._make(n, [a + b for a, b in zip(self.coeffs, g.coeffs)][:n])

    __radd__ = __add__

    def __neg__(self):
        return QSeries._make(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries._make(self.order, [other * c for c in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        f, g = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            fi = f[i]
            if fi:
                for j in range(n - i):
                    out[i + j] += fi * g[j]
        return QSeries._make(n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = QSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse mod q^order; needs constant term 1 or -1."""
        f = self.coeffs
        f0 = f[0]
        if f0 not in (1, -1):
            raise ValueError(f"constant term must be 1 or -1 to invert over Z, got {f0}")
        n = self.order
        g = [0] * n
        g[0] = f0
        for e in range(1, n):
            s = 0
            for j in range(1, e + 1):
                if f[j]:
                    s += f[j] * g[e - j]
            g[e] = -f0 * s
        return QSeries._make(n, g)

    def __eq__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        n = min(self.order, g.order)
        return self.coeffs[:n] == g.coeffs[:n]

    # Equality compares at the common order, so hashing is unsound.
    __hash__ = None


def _multiply_geometric(co: list[int], k: int) -> None:
    """In place, multiply the coefficient list by 1/(1 - q^k)."""
    for e in range(k, len(co)):
        co[e] += co[e - k]


def macmahon_product(order: int) -> QSeries:
    """The product over n >= 1 of (1 - q^n)^(-n), mod q^order.

    Factors with n >= order are 1 mod q^order, so the product is finite.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    co = [0] * order
    co[0] = 1
    for n in range(1, order):
        for _ in range(n):
            _multiply_geometric(co, n)
    return QSeries._make(order, co)


def finite_grid_product(width: int, order: int) -> QSeries:
    """Product of 1/(1 - q^(n+m)) over the grid n in 1..width, m in 0..width-1.

    The exponent n+m = k occurs min(k, width, 2*width - k) times, so the
    product stabilizes to macmahon_product(order) once width >= order.
    """
    if width < 1:
        raise ValueError("grid width must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    co = [0] * order
    co[0] = 1
    for n in range(1, width + 1):
        for m in range(width):
            k = n + m
            if k < order:
                _multiply_geometric(co, k)
    return QSeries._make(order, co)
