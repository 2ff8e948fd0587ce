"""Truncated power/Laurent series in one formal variable over an exact ring.

A :class:`Series` stores coefficients for exponents ``low .. order`` together
with the validity order: coefficients above ``order`` are *unknown*, and
asking for them raises instead of silently returning garbage.  ``order=None``
marks an exact (polynomial/Laurent-polynomial) series.  Arithmetic propagates
the minimal valid order of its inputs; composition, reciprocal and friends
use the standard conservative rules.

Coefficients may be Fractions, ints, or any ring-like object supporting
``+``, ``-``, ``*`` with itself and with ints (e.g. MultiPoly, or another
Series for nested expansions).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .rationals import bernoulli


def is_zero_coeff(c) -> bool:
    if isinstance(c, (int, Fraction)):
        return c == 0
    z = getattr(c, "is_zero", None)
    if z is not None:
        return z() if callable(z) else z
    return c == 0


def _inv_coeff(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1) / c
    return c.reciprocal()


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    """Laurent series with explicit lowest exponent and validity order."""

    __slots__ = ("low", "coeffs", "order")

    def __init__(self, low, coeffs, order):
        coeffs = list(coeffs)
        # canonicalize: strip known-zero leading coefficients
        while coeffs and is_zero_coeff(coeffs[0]):
            coeffs.pop(0)
            low += 1
        if order is not None and coeffs and low + len(coeffs) - 1 > order:
            coeffs = coeffs[: order - low + 1]
        while coeffs and is_zero_coeff(coeffs[-1]):
            coeffs.pop()
        # for the zero series, low is kept as a known-zero lower bound
        self.low = low
        self.coeffs = coeffs
        self.order = order

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def power(coeffs, order=None):
        """Ordinary power series from a coefficient list starting at z^0."""
        return Series(0, coeffs, order)

    @staticmethod
    def laurent(low, coeffs, order=None):
        return Series(low, coeffs, order)

    @staticmethod
    def const(c, order=None):
        return Series(0, [c], order)

    @staticmethod
    def x(order=None):
        return Series(1, [Fraction(1)], order)

    @staticmethod
    def zero(order=None):
        return Series(0, [], order)

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        """Highest exponent with a stored coefficient."""
        return self.low + len(self.coeffs) - 1

    def valuation(self):
        if not self.coeffs:
            return None
        return self.low

    def coeff(self, k):
        """Coefficient of z^k; raises if k is beyond the validity order."""
        if self.order is not None and k > self.order:
            raise ValueError(f"coefficient z^{k} beyond validity order {self.order}")
        if k < self.low or k > self.high:
            return Fraction(0)
        return self.coeffs[k - self.low]

    def coeffs_through(self, lo, hi):
        return [self.coeff(k) for k in range(lo, hi + 1)]

    def residue(self):
        """Coefficient of z^{-1}."""
        if self.order is not None and self.order < -1:
            raise ValueError("validity order below -1; residue unknown")
        return self.coeff(-1)

    def __repr__(self):
        terms = ", ".join(
            f"z^{self.low + i}:{c}" for i, c in enumerate(self.coeffs) if not is_zero_coeff(c)
        )
        o = "exact" if self.order is None else f"O(z^{self.order + 1})"
        return f"Series({terms or '0'}; {o})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.low == other.low and self.coeffs == other.coeffs

    # -- arithmetic -----------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        return Series.const(other)

    def __add__(self, other):
        other = self._lift(other)
        order = _min_order(self.order, other.order)
        if self.is_zero():
            return Series(other.low, other.coeffs, order)
        if other.is_zero():
            return Series(self.low, self.coeffs, order)
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        if order is not None:
            high = min(high, order)
        out = []
        for k in range(low, high + 1):
            a = self.coeffs[k - self.low] if self.low <= k <= self.high else 0
            b = other.coeffs[k - other.low] if other.low <= k <= other.high else 0
            out.append(a + b)
        return Series(low, out, order)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.low, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, (int, Fraction)) and other == 0:
                return Series.zero(self.order)
            return Series(self.low, [c * other for c in self.coeffs], self.order)
        if self.is_zero() or other.is_zero():
            cand0 = []
            if self.order is not None:
                cand0.append(self.order + other.low)
            if other.order is not None:
                cand0.append(other.order + self.low)
            return Series(self.low + other.low, [], min(cand0) if cand0 else None)
        cand = []
        if self.order is not None:
            cand.append(self.order + other.low)
        if other.order is not None:
            cand.append(other.order + self.low)
        order = min(cand) if cand else None
        low = self.low + other.low
        high = self.high + other.high
        if order is not None:
            high = min(high, order)
        n = high - low + 1
        if n <= 0:
            return Series.zero(order)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if is_zero_coeff(a):
                continue
            ka = self.low + i
            for j, b in enumerate(other.coeffs):
                k = ka + other.low + j
                if k > high:
                    break
                if is_zero_coeff(b):
                    continue
                out[k - low] = out[k - low] + a * b
        return Series(low, out, order)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        result = Series.const(Fraction(1), None)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def shift(self, k: int):
        """Multiply by z^k."""
        return Series(
            self.low + k, list(self.coeffs), None if self.order is None else self.order + k
        )

    def truncate(self, order):
        """Restrict the validity order (never extends it)."""
        if self.order is not None and order is not None and order > self.order:
            order = self.order
        return Series(self.low, list(self.coeffs), order)

    def map_coeffs(self, fn):
        return Series(self.low, [fn(c) for c in self.coeffs], self.order)

    def differentiate(self):
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.low + i
            out.append(k * c)
        return Series(
            self.low - 1, out, None if self.order is None else self.order - 1
        )

    def reciprocal(self, order=None):
        """1/f.  The leading coefficient must be invertible in its ring."""
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero series")
        v = self.low
        if order is None:
            if self.order is None:
                if len(self.coeffs) == 1:
                    return Series(-v, [_inv_coeff(self.coeffs[0])], None)
                raise ValueError("reciprocal of an exact series needs an explicit order")
            order = self.order - 2 * v
        c0 = self.coeffs[0]
        inv0 = _inv_coeff(c0)
        # u = f / (c0 z^v) - 1 has positive valuation
        rel = order + v  # we need 1/f through z^order, i.e. unit part through order+v
        u_coeffs = [c * inv0 for c in self.coeffs[1:]]
        u = Series(1, u_coeffs, None if self.order is None else self.order - v)
        geom = Series.const(Fraction(1), rel)
        term = Series.const(Fraction(1), rel)
        k = 0
        while True:
            k += 1
            vu = u.valuation()
            if vu is None or k * vu > rel:
                break
            term = (term * (-u)).truncate(rel)
            geom = geom + term
        return Series(-v, [c * inv0 for c in geom.coeffs], order)

    def compose(self, g: "Series"):
        """f(g) for g with positive valuation (no constant term)."""
        if not g.is_zero() and g.low < 1:
            raise ValueError("compose: inner series must have zero constant term")
        if self.is_zero():
            if self.order is None:
                return Series.zero(None)
            glow = g.low if not g.is_zero() else 1
            return Series(self.low * glow, [], (self.order + 1) * glow - 1)
        acc = Series.zero(None)
        if g.is_zero():
            # f(0): only the constant term survives, and it is exactly known
            c = self.coeffs[0 - self.low] if self.low <= 0 <= self.high else Fraction(0)
            return Series.const(c, None)

        def stored(k):
            if self.low <= k <= self.high:
                return self.coeffs[k - self.low]
            return 0

        if self.low <= 0 <= self.high:
            acc = acc + Series.const(self.coeffs[0 - self.low], None)
        gpow = None
        for k in range(1, self.high + 1):
            gpow = g if gpow is None else gpow * g
            c = stored(k)
            if not is_zero_coeff(c):
                acc = acc + gpow * c
        if self.low < 0:
            ginv = g.reciprocal()
            p = Series.const(Fraction(1), None)
            for k in range(1, -self.low + 1):
                p = p * ginv
                c = stored(-k)
                if not is_zero_coeff(c):
                    acc = acc + p * c
        # error from unknown f-coefficients beyond f.order enters at g^{order+1}
        if self.order is not None:
            acc = acc.truncate((self.order + 1) * g.low - 1)
        return acc

    def exp(self):
        """exp(f) for f with positive valuation."""
        if not self.is_zero() and self.low < 1:
            raise ValueError("exp: series must have zero constant term")
        order = self.order
        acc = Series.const(Fraction(1), order)
        if self.is_zero():
            return acc
        term = Series.const(Fraction(1), order)
        k = 0
        while True:
            k += 1
            if order is not None and k * self.low > order:
                break
            if order is None and k * self.low > self.high:
                break
            term = (term * self) * Fraction(1, k)
            if order is not None:
                term = term.truncate(order)
            if term.is_zero() and order is None:
                break
            acc = acc + term
        return acc

    def log(self):
        """log(f) for f with constant term 1."""
        if self.low != 0 or self.coeffs[0] != 1:
            raise ValueError("log: series must have constant term 1")
        u = Series(self.low, list(self.coeffs), self.order) - 1
        order = self.order
        if order is None:
            raise ValueError("log of an exact series needs a finite order")
        acc = Series.zero(order)
        term = Series.const(Fraction(-1), order)
        k = 0
        while True:
            k += 1
            vu = u.valuation()
            if vu is None or k * vu > order:
                break
            term = (term * (-u)).truncate(order)
            acc = acc + term * Fraction(1, k)
        return acc

    def sqrt_unit(self):
        """sqrt(f) for f with constant term 1 (principal branch)."""
        return (self.log() * Fraction(1, 2)).exp()

    def reverse(self):
        """Compositional inverse of f with f(0)=0, f'(0) invertible."""
        if self.low != 1:
            raise ValueError("reverse: series must have valuation exactly 1")
        if self.order is None:
            raise ValueError("reverse needs a finite order")
        order = self.order
        f1 = self.coeffs[0]
        g = Series(1, [_inv_coeff(f1)], 1)
        prec = 1
        ident = Series.x(order)
        fprime = self.differentiate()
        while prec < order:
            prec = min(2 * prec, order)
            gw = g.truncate(prec)
            gw = Series(gw.low, list(gw.coeffs), prec)
            err = self.truncate(prec).compose(gw) - ident.truncate(prec)
            corr = err * fprime.truncate(prec).compose(gw).reciprocal()
            g = (gw - corr).truncate(prec)
        return g.truncate(order)


def eq_through(a: Series, b: Series, lo: int, hi: int) -> bool:
    """Compare coefficients on an exponent window (raises past validity)."""
    return all(a.coeff(k) == b.coeff(k) for k in range(lo, hi + 1))


# -- stock series -------------------------------------------------------------


def exp_series(order: int) -> Series:
    return Series.power([Fraction(1, factorial(k)) for k in range(order + 1)], order)


def log1p_series(order: int) -> Series:
    # log(1+z)
    return Series(
        1,
        [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)],
        order,
    )


def zeta_series(order: int) -> Series:
    """zeta(z) = e^{z/2} - e^{-z/2}, an odd series with leading term z."""
    coeffs = []
    for k in range(1, order + 1, 2):
        m = (k - 1) // 2
        coeffs.append(Fraction(1, 4**m * factorial(k)))
        coeffs.append(Fraction(0))
    return Series(1, coeffs[: order], order)


def zeta_over_z_log(order: int) -> Series:
    """log(zeta(z)/z) as an even power series."""
    z = zeta_series(order + 1)
    unit = Series(0, z.coeffs[0:], order)  # zeta/z
    return unit.log()


def bernoulli_exponent_series(order: int) -> Series:
    """sum_{n>=1} B_{2n}/(2n(2n-1)) z^{2n-1} through the given order."""
    coeffs = [Fraction(0)] * (order + 1)
    n = 1
    while 2 * n - 1 <= order:
        coeffs[2 * n - 1] = bernoulli(2 * n) / (2 * n * (2 * n - 1))
        n += 1
    return Series(0, coeffs, order)


def series_to_json(f: Series) -> dict:
    """Exact rational coefficient strings plus the validity order."""
    from .rationals import rational_to_str

    return {
        "low": f.low,
        "order": f.order,
        "coeffs": [rational_to_str(Fraction(c)) for c in f.coeffs],
    }


def series_from_json(data) -> Series:
    from .rationals import rational_from_str

    return Series(
        int(data["low"]),
        [rational_from_str(c) for c in data["coeffs"]],
        None if data["order"] is None else int(data["order"]),
    )


__all__ = [
    "Series",
    "eq_through",
    "is_zero_coeff",
    "exp_series",
    "log1p_series",
    "zeta_series",
    "zeta_over_z_log",
    "bernoulli_exponent_series",
    "series_to_json",
    "series_from_json",
]
