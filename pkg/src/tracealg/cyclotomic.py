"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are polynomials in zeta_m with Fraction coefficients, reduced
modulo the m-th cyclotomic polynomial.  Just enough ring structure for
character values: add, multiply, compare, conjugate, divide by rationals.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple:
    """Integer coefficients of Phi_m, constant term first."""
    if m < 1:
        raise ValueError("m must be >= 1")
    # start from x^m - 1 and divide off Phi_d for proper divisors d
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d:
            continue
        phi_d = cyclotomic_polynomial(d)
        poly = _exact_div(poly, list(phi_d))
    return tuple(poly)


def _exact_div(num, den):
    """Quotient of integer polynomial division known to be exact."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], den[-1])
        assert r == 0
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    assert all(c == 0 for c in num)
    return out


class Cyc:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        phi = cyclotomic_polynomial(m)
        deg = len(phi) - 1
        work = [Fraction(c) for c in coeffs]
        # reduce modulo Phi_m (monic)
        for i in range(len(work) - 1, deg - 1, -1):
            q = work[i]
            if q:
                for j, c in enumerate(phi):
                    work[i - deg + j] -= q * c
        work = work[:deg]
        work += [Fraction(0)] * (deg - len(work))
        self.coeffs = tuple(work)

    @classmethod
    def rational(cls, m: int, value) -> "Cyc":
        return cls(m, [Fraction(value)])

    @classmethod
    def root(cls, m: int, power: int = 1) -> "Cyc":
        """zeta_m ** power."""
        power %= m
        return cls(m, [0] * power + [1])

    # -- coercion helpers -----------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Cyc):
            if other.m != self.m:
                raise ValueError("mixed cyclotomic moduli")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyc(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        n = len(self.coeffs)
        out = [Fraction(0)] * (2 * n)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Cyc(self.m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1) / Fraction(other)
            return Cyc(self.m, [a * inv for a in self.coeffs])
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def conjugate(self) -> "Cyc":
        """Complex conjugation, zeta -> zeta^(m-1)."""
        out = Cyc.rational(self.m, 0)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + c * Cyc.root(self.m, (-i) % self.m)
        return out

    def as_rational(self):
        """The Fraction value if the element is rational, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def __repr__(self):
        if self.as_rational() is not None:
            return f"Cyc({self.coeffs[0]})"
        return f"Cyc(m={self.m}, {list(self.coeffs)})"
