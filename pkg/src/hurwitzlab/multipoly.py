"""Exact multivariate polynomials over Fraction, plus a small univariate
rational-function type used where a quotient must stay symbolic."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .rationals import rational_from_str, rational_to_str


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[tuple(e)] = c

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MultiPoly":
        return MultiPoly(nvars)

    @staticmethod
    def const(nvars: int, c) -> "MultiPoly":
        return MultiPoly(nvars, {tuple([0] * nvars): Fraction(c)})

    @staticmethod
    def var(nvars: int, i: int, power: int = 1) -> "MultiPoly":
        e = [0] * nvars
        e[i] = power
        return MultiPoly(nvars, {tuple(e): Fraction(1)})

    # -- predicates / accessors -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, expts) -> Fraction:
        return self.terms.get(tuple(expts), Fraction(0))

    def degree(self, i: int) -> int:
        """Degree in variable i (-1 for the zero polynomial)."""
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for p in permutations(e):
                if self.terms.get(p, Fraction(0)) != c:
                    return False
        return True

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"t{i+1}^{p}" if p > 1 else f"t{i+1}" for i, p in enumerate(e) if p
            )
            bits.append(f"({c})" + ("*" + mono if mono else ""))
        return " + ".join(bits)

    # -- ring operations --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly(self.nvars)
            r = MultiPoly(self.nvars)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus / substitution -------------------------------------------------

    def deriv(self, i: int) -> "MultiPoly":
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                e2 = tuple(e2)
                s = out.get(e2, Fraction(0)) + c * e[i]
                if s:
                    out[e2] = s
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    def eval(self, values) -> Fraction:
        values = [Fraction(v) for v in values]
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, p in zip(values, e):
                if p:
                    t *= v**p
            acc += t
        return acc

    def subs_value(self, i: int, value) -> "MultiPoly":
        """Substitute a Fraction for variable i (variable count unchanged)."""
        value = Fraction(value)
        out = MultiPoly(self.nvars)
        for e, c in self.terms.items():
            e2 = list(e)
            p = e2[i]
            e2[i] = 0
            out = out + MultiPoly(self.nvars, {tuple(e2): c * value**p})
        return out

    def subs_var(self, i: int, j: int) -> "MultiPoly":
        """Rename variable i to variable j (merging exponents)."""
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[j] += e2[i]
            e2[i] = 0
            e2 = tuple(e2)
            s = out.get(e2, Fraction(0)) + c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        r = MultiPoly(self.nvars)
        r.terms = out
        return r

    def embed(self, nvars: int, mapping) -> "MultiPoly":
        """Re-index into a larger ring; mapping[i] is the new index of var i."""
        out = MultiPoly(nvars)
        for e, c in self.terms.items():
            e2 = [0] * nvars
            for i, p in enumerate(e):
                e2[mapping[i]] += p
            out.terms[tuple(e2)] = out.terms.get(tuple(e2), Fraction(0)) + c
        out.terms = {e: c for e, c in out.terms.items() if c}
        return out

    def as_poly_in(self, i: int):
        """Coefficients of powers of variable i, as polynomials in the rest.

        Returns a list indexed by the power of t_i; entries keep ``nvars``
        variables with the i-th exponent zeroed.
        """
        d = self.degree(i)
        out = [MultiPoly(self.nvars) for _ in range(d + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            p = e2[i]
            e2[i] = 0
            out[p].terms[tuple(e2)] = out[p].terms.get(tuple(e2), Fraction(0)) + c
        for q in out:
            q.terms = {e: c for e, c in q.terms.items() if c}
        return out

    def reciprocal(self):
        """Inverse of a constant or single-monomial polynomial only."""
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are invertible as polynomials")
        (e, c), = self.terms.items()
        if any(e):
            raise ZeroDivisionError("only constants are invertible as polynomials")
        return MultiPoly.const(self.nvars, Fraction(1) / c)

    # -- serialization ------------------------------------------------------------

    def to_json(self):
        return [
            {"exp": list(e), "coeff": rational_to_str(c)}
            for e, c in sorted(self.terms.items(), reverse=True)
        ]

    @staticmethod
    def from_json(nvars: int, data) -> "MultiPoly":
        return MultiPoly(
            nvars, {tuple(row["exp"]): rational_from_str(row["coeff"]) for row in data}
        )


def divexact_monomial(p: MultiPoly, i: int, power: int) -> MultiPoly:
    """Divide by t_i^power; every term must be divisible."""
    out = MultiPoly(p.nvars)
    for e, c in p.terms.items():
        if e[i] < power:
            raise ValueError("polynomial not divisible by the monomial")
        e2 = list(e)
        e2[i] -= power
        out.terms[tuple(e2)] = c
    return out


def divexact_linear_diff(p: MultiPoly, k: int, j: int) -> MultiPoly:
    """Exact division by (t_k - t_j); raises if the remainder is nonzero."""
    coeffs = p.as_poly_in(k)  # p = sum coeffs[d] * t_k^d
    d = len(coeffs) - 1
    tj = MultiPoly.var(p.nvars, j)
    quot = [MultiPoly(p.nvars) for _ in range(max(d, 0))]
    carry = MultiPoly(p.nvars)
    for power in range(d, 0, -1):
        q = coeffs[power] + carry
        quot[power - 1] = q
        carry = q * tj
    rem = coeffs[0] + carry if coeffs else carry
    if not rem.is_zero():
        raise ValueError("polynomial not divisible by (t_k - t_j)")
    out = MultiPoly(p.nvars)
    tk = MultiPoly.var(p.nvars, k)
    for power, q in enumerate(quot):
        out = out + q * tk**power
    return out


class RatFn:
    """Unreduced quotient of two polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def const(nvars: int, c) -> "RatFn":
        return RatFn(MultiPoly.const(nvars, c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFn):
            return other
        if isinstance(other, MultiPoly):
            return RatFn(other)
        if isinstance(other, (int, Fraction)):
            return RatFn.const(self.num.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RatFn(self.den, self.num)

    def deriv(self, i: int) -> "RatFn":
        return RatFn(
            self.num.deriv(i) * self.den - self.num * self.den.deriv(i),
            self.den * self.den,
        )

    def __eq__(self, other):
        other = self._coerce(other)
        return (self.num * other.den - other.num * self.den).is_zero()

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"


__all__ = ["MultiPoly", "RatFn", "divexact_monomial", "divexact_linear_diff"]
