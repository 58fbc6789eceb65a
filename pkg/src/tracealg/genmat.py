"""Exact evaluation of trace polynomials on generic and concrete matrices.

Trace-identity checking is symbolic: a polynomial is an identity of n x n
matrices iff it vanishes on matrices of fresh commuting indeterminates.
Random rational search is only an accelerator for finding counterexamples;
every returned witness is re-verified exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .freetrace import TracePoly
from .mpoly import MPoly, PolyMatrix, resultant


def entry_name(i: int, h: int, k: int) -> str:
    """Variable name of the (h,k) entry of the i-th generic matrix."""
    return f"xi{i}_{h}_{k}"


def generic_matrix(i: int, n: int) -> PolyMatrix:
    """The n x n matrix of fresh commuting indeterminates for variable i."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    return PolyMatrix([[MPoly.var(entry_name(i, h, k)) for k in range(1, n + 1)]
                       for h in range(1, n + 1)])


def rational_matrix(rows) -> PolyMatrix:
    """A matrix of constants (ints or Fractions) as a PolyMatrix."""
    return PolyMatrix([[MPoly.const(x) for x in row] for row in rows])


def evaluate(p: TracePoly, assignment, n: int) -> PolyMatrix:
    """Evaluate p with each variable mapped to an n x n PolyMatrix.

    Words evaluate by matrix product, trace symbols by the matrix trace,
    and the empty trace symbol tr(1) by the scalar n.
    """
    for i, m in assignment.items():
        if m.size != n:
            raise ValueError(f"matrix for x{i} has size {m.size}, expected {n}")
    missing = sorted(v for v in p.variables() if v not in assignment)
    if missing:
        raise ValueError(f"variable x{missing[0]} has no matrix assigned")

    word_cache = {(): PolyMatrix.identity(n)}

    def word_value(w):
        got = word_cache.get(w)
        if got is None:
            got = word_value(w[:-1]) * assignment[w[-1]]
            word_cache[w] = got
        return got

    total = PolyMatrix.zero(n)
    for (w, traces), c in p.terms.items():
        scalar = MPoly.const(c)
        for t in traces:
            if not t:
                scalar = scalar * n
            else:
                scalar = scalar * word_value(t).trace()
        total = total + word_value(w) * scalar
    return total


def is_trace_identity(p: TracePoly, n: int) -> bool:
    """Exact symbolic check that p vanishes identically on n x n matrices."""
    assignment = {i: generic_matrix(i, n) for i in p.variables()}
    return evaluate(p, assignment, n).is_zero()


def random_counterexample(p: TracePoly, n: int, trials: int = 10, seed: int = 0,
                          entry_bound: int = 3):
    """Search for rational matrices where p does not vanish.

    Returns {variable: PolyMatrix} with a nonzero exact evaluation, or None.
    Finding nothing proves nothing; use is_trace_identity for certainty.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    variables = sorted(p.variables())
    for _ in range(trials):
        assignment = {
            i: rational_matrix([[rng.randint(-entry_bound, entry_bound)
                                 for _ in range(n)] for _ in range(n)])
            for i in variables
        }
        if not evaluate(p, assignment, n).is_zero():
            # re-check from scratch so a returned witness is self-contained
            assert not evaluate(p, assignment, n).is_zero()
            return assignment
    return None


# -- one-variable diagonal models ---------------------------------------------

@dataclass(frozen=True)
class DiagonalModel:
    """Diagonal matrix with variable x_i repeated a_i times, plus its
    characteristic coefficients alpha_1..alpha_n as polynomials in the x_i."""

    multiplicities: tuple
    size: int
    matrix: PolyMatrix
    charpoly_coeffs: tuple  # (alpha_1, ..., alpha_n), MPoly in x1..xp


def _elementary_symmetric(values, k: int) -> MPoly:
    """e_k of a list of MPoly values, by the standard product recursion."""
    coeffs = [MPoly.const(1)]
    for v in values:
        coeffs.append(MPoly.zero())
        for j in range(len(coeffs) - 1, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * v
    return coeffs[k] if k < len(coeffs) else MPoly.zero()


def diagonal_model(multiplicities) -> DiagonalModel:
    """Build the one-variable diagonal model for the given multiplicities.

    For multiplicities (1, 2) the three closed-form identities relating the
    characteristic coefficients to the eigenvalues, and the scaled degree-2
    minimal polynomial, are verified symbolically on construction.
    """
    mults = tuple(int(a) for a in multiplicities)
    if not mults or any(a < 1 for a in mults):
        raise ValueError("multiplicities must be positive integers")
    n = sum(mults)
    eigenvalues = []
    for idx, a in enumerate(mults, start=1):
        eigenvalues.extend([MPoly.var(f"x{idx}")] * a)
    diag = [[eigenvalues[i] if i == j else MPoly.zero() for j in range(n)]
            for i in range(n)]
    coeffs = tuple(_elementary_symmetric(eigenvalues, k) for k in range(1, n + 1))
    model = DiagonalModel(mults, n, PolyMatrix(diag), coeffs)
    if mults == (1, 2):
        _verify_two_eigenvalue_model(model)
    return model


def _verify_two_eigenvalue_model(model: DiagonalModel) -> None:
    u, v = MPoly.var("x1"), MPoly.var("x2")
    a, b, c = model.charpoly_coeffs
    d = u - v
    checks = [
        (a * a - 3 * b, d * d),
        (a * b - 9 * c, 2 * v * d * d),
        (9 * c + a ** 3 - 4 * a * b, u * d * d),
    ]
    for lhs, rhs in checks:
        if lhs != rhs:
            raise AssertionError(f"eigenvalue identity failed: {lhs} != {rhs}")
    # scaled minimal polynomial (a^2-3b)^2 (X-u)(X-v) kills every diagonal entry
    s = a * a - 3 * b
    for lam in (u, v):
        value = (s * lam - (9 * c + a ** 3 - 4 * a * b)) * \
                (s * lam - Fraction(1, 2) * (a * b - 9 * c))
        if not value.is_zero():
            raise AssertionError("scaled minimal polynomial does not vanish on the model")


def generic_discriminant(n: int) -> MPoly:
    """Discriminant of t^n - a1 t^{n-1} + a2 t^{n-2} - ... in symbols a1..an.

    Computed as (-1)^(n(n-1)/2) times the resultant of the polynomial and its
    t-derivative (the polynomial is monic).
    """
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    h = [MPoly.const(1)]
    for j in range(1, n + 1):
        h.append(Fraction((-1) ** j) * MPoly.var(f"a{j}"))
    hp = [Fraction(n - i) * h[i] for i in range(n)]
    res = resultant(h, hp)
    return (Fraction((-1) ** (n * (n - 1) // 2)) * res).primitive()


def discriminant_relation(multiplicities) -> MPoly:
    """A nonzero polynomial relation among the characteristic coefficients.

    The discriminant of the generic degree-n characteristic polynomial
    vanishes identically once some eigenvalue is repeated; the result is in
    the symbols a1..an, reduced to primitive integer-coefficient form, and
    its vanishing under the model substitution is checked before returning.
    """
    mults = tuple(int(a) for a in multiplicities)
    if all(a == 1 for a in mults):
        raise ValueError("no forced relation: all multiplicities are 1")
    model = diagonal_model(mults)
    n = model.size
    disc = generic_discriminant(n)
    substitution = {f"a{j}": model.charpoly_coeffs[j - 1] for j in range(1, n + 1)}
    if not disc.substitute(substitution).is_zero():
        raise AssertionError("discriminant did not vanish under the model substitution")
    return disc
