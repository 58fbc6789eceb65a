"""Characteristic-coefficient and Cayley-Hamilton trace polynomials.

Builds the formal coefficients sigma_i(x) from Newton's recursion between
power sums and elementary symmetric functions, the one-variable polynomial
CH_n(x), and the multilinear forms T_sigma, T_k and CH(x_1..x_n) obtained by
summing signed cycle products over symmetric groups.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .freetrace import TracePoly, least_rotation
from .mpoly import MPoly


def _psi(j: int) -> MPoly:
    return MPoly.var(f"psi{j}")


def _e(j: int) -> MPoly:
    return MPoly.var(f"e{j}")


@lru_cache(maxsize=None)
def elementary_from_powersums(k: int) -> MPoly:
    """e_k as a polynomial in the power sums psi_1..psi_k.

    Newton's recursion: (m+1) e_{m+1} = (-1)^m psi_{m+1}
                                        + sum_{i=1}^m (-1)^{i-1} psi_i e_{m+1-i}.
    """
    if k <= 0:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return _psi(1)
    m = k - 1
    acc = Fraction((-1) ** m) * _psi(m + 1)
    for i in range(1, m + 1):
        acc = acc + Fraction((-1) ** (i - 1)) * _psi(i) * elementary_from_powersums(m + 1 - i)
    return Fraction(1, m + 1) * acc


@lru_cache(maxsize=None)
def powersums_from_elementary(k: int) -> MPoly:
    """psi_k as a polynomial in e_1..e_k (the recursion solved the other way)."""
    if k <= 0:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return _e(1)
    m = k - 1
    acc = Fraction(m + 1) * _e(m + 1)
    for i in range(1, m + 1):
        acc = acc - Fraction((-1) ** (i - 1)) * powersums_from_elementary(i) * _e(m + 1 - i)
    return Fraction((-1) ** m) * acc


def _psi_monomial_to_traces(mono, coeff) -> TracePoly:
    traces = []
    for name, exp in mono:
        j = int(name[3:])
        traces.extend([(1,) * j] * exp)
    return TracePoly({((), tuple(sorted(traces, key=lambda t: (len(t), t)))): coeff})


@lru_cache(maxsize=None)
def sigma(i: int) -> TracePoly:
    """sigma_i(x): the i-th characteristic coefficient as a pure trace polynomial."""
    if i <= 0:
        raise ValueError("i must be a positive integer")
    ek = elementary_from_powersums(i)
    out = TracePoly.zero()
    for mono, c in ek.terms.items():
        out = out + _psi_monomial_to_traces(mono, c)
    return out


@lru_cache(maxsize=None)
def ch_poly(n: int) -> TracePoly:
    """CH_n(x) = x^n + sum_{i=1}^n (-1)^i sigma_i(x) x^{n-i}, in the variable x1."""
    if n <= 0:
        raise ValueError("n must be a positive integer")
    xw = TracePoly.variable(1)
    out = xw ** n
    for i in range(1, n + 1):
        out = out + Fraction((-1) ** i) * sigma(i) * xw ** (n - i)
    return out


@dataclass(frozen=True)
class PermCycles:
    """A permutation of {1..size} stored as disjoint cycles covering {1..size}."""

    size: int
    cycles: tuple

    def __post_init__(self):
        seen = sorted(v for cyc in self.cycles for v in cyc)
        if seen != list(range(1, self.size + 1)):
            raise ValueError("cycles must partition {1..size}")

    @property
    def sign(self) -> int:
        return (-1) ** (self.size - len(self.cycles))

    @classmethod
    def from_one_line(cls, images) -> "PermCycles":
        """From one-line notation: images[i] is the image of i+1."""
        n = len(images)
        remaining = set(range(1, n + 1))
        cycles = []
        while remaining:
            start = min(remaining)
            cyc = [start]
            remaining.discard(start)
            nxt = images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                remaining.discard(nxt)
                nxt = images[nxt - 1]
            cycles.append(tuple(cyc))
        return cls(n, tuple(cycles))


def t_sigma(perm: PermCycles, variables=None) -> TracePoly:
    """T_sigma: one trace symbol per cycle of the permutation."""
    if variables is None:
        variables = list(range(1, perm.size + 1))
    if len(variables) != perm.size:
        raise ValueError("variable list must match permutation size")
    out = TracePoly.one()
    for cyc in perm.cycles:
        word = tuple(variables[i - 1] for i in cyc)
        out = out * TracePoly.trace_symbol(word)
    return out


@lru_cache(maxsize=None)
def t_multilinear(k: int) -> TracePoly:
    """T_k(x_1..x_k) = sum over S_k of sign(sigma) T_sigma."""
    if k <= 0:
        raise ValueError("k must be a positive integer")
    out = TracePoly.zero()
    for images in permutations(range(1, k + 1)):
        perm = PermCycles.from_one_line(images)
        out = out + Fraction(perm.sign) * t_sigma(perm)
    return out


def _psi_sigma_term(perm: PermCycles, n: int) -> TracePoly:
    """The word-times-traces monomial of one permutation of S_{n+1}.

    The cycle containing n+1 is rotated so that n+1 comes last and then
    dropped; it contributes the word factor, the other cycles trace symbols.
    """
    word = ()
    traces = []
    for cyc in perm.cycles:
        if n + 1 in cyc:
            pos = cyc.index(n + 1)
            rotated = cyc[pos + 1:] + cyc[:pos]
            word = rotated
        else:
            traces.append(least_rotation(cyc))
    return TracePoly({(word, tuple(sorted(traces, key=lambda t: (len(t), t)))): Fraction(1)})


@lru_cache(maxsize=None)
def ch_multilinear(n: int) -> TracePoly:
    """The multilinear Cayley-Hamilton polynomial CH(x_1..x_n)."""
    if n <= 0:
        raise ValueError("n must be a positive integer")
    out = TracePoly.zero()
    for images in permutations(range(1, n + 2)):
        perm = PermCycles.from_one_line(images)
        out = out + Fraction(perm.sign) * _psi_sigma_term(perm, n)
    return Fraction((-1) ** n) * out


def polarize(p: TracePoly, variable: int = 1) -> TracePoly:
    """Full polarization of a homogeneous one-variable polynomial.

    Substitutes x -> x_1 + ... + x_k (k the homogeneous degree) and keeps the
    multilinear component; restitution then recovers k! times the input.
    """
    vars_used = p.variables()
    if vars_used - {variable}:
        raise ValueError("polarize expects a polynomial in a single variable")
    degrees = p.term_degrees()
    if len(degrees) != 1:
        raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degrees)}")
    k = degrees.pop()
    if k == 0:
        raise ValueError("cannot polarize a constant")
    total = TracePoly.zero()
    for i in range(1, k + 1):
        total = total + TracePoly.variable(i)
    expanded = p.substitute({variable: total})
    return expanded.multilinear_part(list(range(1, k + 1)))


def restitute(p: TracePoly, variable: int = 1) -> TracePoly:
    """Set every variable of p equal to the given one."""
    return p.substitute({v: TracePoly.variable(variable) for v in p.variables()})
