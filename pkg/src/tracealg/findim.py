"""Finite-dimensional algebras with trace, given by structure constants.

An algebra is a basis u_1..u_d, sparse structure constants for u_i u_j, a
unit vector and a trace vector t(u_i).  Construction validates associativity,
the unit law and trace symmetry exhaustively and reports a witness on
failure.  Subspaces are kept in reduced row echelon form so equality is
decidable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product

from . import linalg
from .chident import ch_multilinear
from .freetrace import TracePoly


class AlgebraValidationError(ValueError):
    """Structure-constant validation failure; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^d, canonical reduced-row-echelon basis."""

    ambient: int
    rows: tuple

    @classmethod
    def from_vectors(cls, ambient: int, vectors) -> "Subspace":
        ech, _ = linalg.rref([list(v) for v in vectors])
        return cls(ambient, tuple(tuple(r) for r in ech))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: int) -> "Subspace":
        return cls.from_vectors(ambient, linalg.identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def contains(self, vector) -> bool:
        if self.dim == 0:
            return all(x == 0 for x in vector)
        stacked, _ = linalg.rref([list(r) for r in self.rows] + [list(vector)])
        return len(stacked) == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_vectors(self.ambient, list(self.rows) + list(other.rows))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)


@dataclass(frozen=True)
class WeightedType:
    """Block sizes m_i with positive integer trace weights a_i; n = sum a_i m_i."""

    sizes: tuple
    weights: tuple

    def __post_init__(self):
        if len(self.sizes) != len(self.weights) or not self.sizes:
            raise ValueError("sizes and weights must be nonempty lists of equal length")
        if any(m < 1 for m in self.sizes) or any(a < 1 for a in self.weights):
            raise ValueError("sizes and weights must be positive")
        pairs = sorted(zip(self.sizes, self.weights))
        object.__setattr__(self, "sizes", tuple(m for m, _ in pairs))
        object.__setattr__(self, "weights", tuple(a for _, a in pairs))

    @property
    def n(self) -> int:
        return sum(m * a for m, a in zip(self.sizes, self.weights))

    def pairs(self):
        return tuple(zip(self.sizes, self.weights))


@dataclass(frozen=True)
class TraceAlgebra:
    """Associative algebra with an F-valued trace, all data exact rationals."""

    dim: int
    labels: tuple
    mul: tuple        # mul[i][j] = tuple of (k, coeff): u_i u_j = sum coeff u_k
    unit: tuple
    trace_vector: tuple
    blocks: tuple = field(default=None, compare=False)  # optional ((m, idxs), ...)

    # -- element arithmetic (coordinate vectors) -----------------------------
    def multiply(self, x, y):
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.mul[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for k, c in row[j]:
                    out[k] += xi * yj * c
        return tuple(out)

    def trace_of(self, x) -> Fraction:
        return sum((xi * t for xi, t in zip(x, self.trace_vector)), Fraction(0))

    def basis_vector(self, i):
        return tuple(Fraction(1) if j == i else Fraction(0) for j in range(self.dim))

    @property
    def trace_of_unit(self) -> Fraction:
        return self.trace_of(self.unit)

    def gram_matrix(self):
        """G[i][j] = t(u_i u_j), the matrix of the trace form."""
        basis = [self.basis_vector(i) for i in range(self.dim)]
        return [[self.trace_of(self.multiply(basis[i], basis[j]))
                 for j in range(self.dim)] for i in range(self.dim)]

    def element_is_nilpotent(self, x, max_power=None):
        """Smallest k <= max_power with x^k = 0, or None."""
        cap = max_power if max_power is not None else self.dim
        power = x
        for k in range(1, cap + 1):
            if all(c == 0 for c in power):
                return k
            power = self.multiply(power, x)
        return 1 if all(c == 0 for c in x) else (cap + 1 if all(c == 0 for c in power) else None)


def make_algebra(mul, unit, trace_vector, labels=None, blocks=None,
                 validate: bool = True) -> TraceAlgebra:
    """Validated constructor from dense or sparse structure constants.

    mul[i][j] may be a dense coefficient list of length d or a sparse list of
    (k, coeff) pairs.  Raises AlgebraValidationError naming the offending
    basis triple or pair.
    """
    d = len(mul)
    if labels is None:
        labels = tuple(f"u{i}" for i in range(d))
    sparse = []
    for i in range(d):
        row = []
        for j in range(d):
            cell = mul[i][j]
            if cell and isinstance(cell[0], (list, tuple)) and len(cell[0]) == 2:
                entries = tuple((int(k), Fraction(c)) for k, c in cell if Fraction(c) != 0)
            else:
                entries = tuple((k, Fraction(c)) for k, c in enumerate(cell) if Fraction(c) != 0)
            row.append(entries)
        sparse.append(tuple(row))
    algebra = TraceAlgebra(
        dim=d,
        labels=tuple(labels),
        mul=tuple(sparse),
        unit=tuple(Fraction(c) for c in unit),
        trace_vector=tuple(Fraction(c) for c in trace_vector),
        blocks=tuple((m, tuple(idxs)) for m, idxs in blocks) if blocks else None,
    )
    if validate:
        _validate(algebra)
    return algebra


def _validate(a: TraceAlgebra) -> None:
    basis = [a.basis_vector(i) for i in range(a.dim)]
    table = [[a.multiply(basis[i], basis[j]) for j in range(a.dim)] for i in range(a.dim)]
    for i in range(a.dim):
        if a.multiply(a.unit, basis[i]) != basis[i] or a.multiply(basis[i], a.unit) != basis[i]:
            raise AlgebraValidationError(
                f"unit law fails on basis element {a.labels[i]}", witness=(i,))
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                left = a.multiply(table[i][j], basis[k])
                right = a.multiply(basis[i], table[j][k])
                if left != right:
                    raise AlgebraValidationError(
                        "associativity fails on "
                        f"({a.labels[i]}, {a.labels[j]}, {a.labels[k]})",
                        witness=(i, j, k))
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            tij = a.trace_of(table[i][j])
            tji = a.trace_of(table[j][i])
            if tij != tji:
                raise AlgebraValidationError(
                    f"trace symmetry fails: t({a.labels[i]}*{a.labels[j]}) = {tij} "
                    f"but t({a.labels[j]}*{a.labels[i]}) = {tji}",
                    witness=(i, j))


def weighted_semisimple(wt) -> TraceAlgebra:
    """Block-diagonal sum of matrix algebras with weighted matrix traces.

    Basis elements are the matrix units of each block; the trace of a block
    element is its weight times the ordinary matrix trace, so t(1) = n.
    """
    if not isinstance(wt, WeightedType):
        wt = WeightedType(tuple(p[0] for p in wt), tuple(p[1] for p in wt))
    index = {}
    labels = []
    blocks = []
    pos = 0
    for b, (m, _a) in enumerate(wt.pairs()):
        idxs = []
        for r in range(m):
            for c in range(m):
                index[(b, r, c)] = pos
                labels.append(f"e{b}_{r}{c}")
                idxs.append(pos)
                pos += 1
        blocks.append((m, tuple(idxs)))
    d = pos
    mul = [[[] for _ in range(d)] for _ in range(d)]
    for b, (m, _a) in enumerate(wt.pairs()):
        for r in range(m):
            for c in range(m):
                for r2 in range(m):
                    for c2 in range(m):
                        if c == r2:
                            i, j = index[(b, r, c)], index[(b, r2, c2)]
                            mul[i][j] = [(index[(b, r, c2)], 1)]
    unit = [Fraction(0)] * d
    trace = [Fraction(0)] * d
    for b, (m, a) in enumerate(wt.pairs()):
        for r in range(m):
            unit[index[(b, r, r)]] = Fraction(1)
            trace[index[(b, r, r)]] = Fraction(a)
    return make_algebra(mul, unit, trace, labels=labels, blocks=blocks, validate=False)


# -- kernels ------------------------------------------------------------------

def trace_kernel(a: TraceAlgebra) -> Subspace:
    """Radical of the bilinear form t(xy): null space of the Gram matrix.

    The result is checked to be a two-sided ideal closed under trace.
    """
    gram = a.gram_matrix()
    kernel = Subspace.from_vectors(a.dim, linalg.nullspace(gram))
    basis = [a.basis_vector(i) for i in range(a.dim)]
    for row in kernel.rows:
        if a.trace_of(row) != 0:
            raise AssertionError("trace kernel is not trace-stable")
        for b in basis:
            if not kernel.contains(a.multiply(row, b)) or \
                    not kernel.contains(a.multiply(b, row)):
                raise AssertionError("trace kernel is not a two-sided ideal")
    return kernel


def check_ideal(a: TraceAlgebra, space: Subspace):
    """Witness (vector, basis index, side) if space is not a two-sided ideal."""
    for row in space.rows:
        for i in range(a.dim):
            b = a.basis_vector(i)
            if not space.contains(a.multiply(row, b)):
                return (row, i, "right")
            if not space.contains(a.multiply(b, row)):
                return (row, i, "left")
    return None


def radical_kernel(a: TraceAlgebra, ideal: Subspace) -> Subspace:
    """Preimage of the trace kernel of A/I; always contains I.

    For a proper ideal the scalar multiples of 1 meet I trivially, so the
    preimage condition t(x y) * 1 in I collapses to t(x y) = 0, giving
    K(I) = K_A + I; the whole algebra maps to itself.
    """
    if ideal.ambient != a.dim:
        raise ValueError("ideal has wrong ambient dimension")
    witness = check_ideal(a, ideal)
    if witness is not None:
        vec, i, side = witness
        raise AlgebraValidationError(
            f"not a two-sided ideal: {side} multiplication by {a.labels[i]} "
            f"leaves the subspace at {vec}", witness=witness)
    if ideal.contains(a.unit):
        return Subspace.whole(a.dim)
    return trace_kernel(a) + ideal


def quotient_algebra(a: TraceAlgebra, ideal: Subspace):
    """Quotient by a trace-stable two-sided ideal, with the induced trace.

    Returns (quotient, project) where project maps coordinate vectors of a
    to quotient coordinates.  Requires t(ideal) = 0 so the induced trace is
    well defined.
    """
    witness = check_ideal(a, ideal)
    if witness is not None:
        raise AlgebraValidationError("not a two-sided ideal", witness=witness)
    for row in ideal.rows:
        if a.trace_of(row) != 0:
            raise AlgebraValidationError(
                "ideal is not trace-stable; quotient trace undefined", witness=row)
    if ideal.dim == a.dim:
        raise ValueError("cannot form the zero quotient as a unital algebra")

    pivots = []
    col = 0
    for row in ideal.rows:
        while row[col] == 0:
            col += 1
        pivots.append(col)
    free = [j for j in range(a.dim) if j not in pivots]

    def project(vec):
        v = list(Fraction(x) for x in vec)
        for row, p in zip(ideal.rows, pivots):
            f = v[p]
            if f != 0:
                for j in range(a.dim):
                    v[j] -= f * row[j]
        return tuple(v[j] for j in free)

    def lift(small):
        v = [Fraction(0)] * a.dim
        for val, j in zip(small, free):
            v[j] = val
        return tuple(v)

    d = len(free)
    mul = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            prod_vec = a.multiply(lift([Fraction(1) if t == i else Fraction(0) for t in range(d)]),
                                  lift([Fraction(1) if t == j else Fraction(0) for t in range(d)]))
            mul[i][j] = list(project(prod_vec))
    unit = project(a.unit)
    trace = [a.trace_of(lift([Fraction(1) if t == i else Fraction(0) for t in range(d)]))
             for i in range(d)]
    quotient = make_algebra(mul, unit, trace,
                            labels=tuple(a.labels[j] for j in free), validate=False)
    return quotient, project


# -- Cayley-Hamilton degree ----------------------------------------------------

def evaluate_on_algebra(p: TracePoly, a: TraceAlgebra, assignment):
    """Evaluate a trace polynomial with variables sent to algebra elements.

    tr(1) evaluates to t(1) of the algebra.
    """
    cache = {(): a.unit}

    def word_value(w):
        got = cache.get(w)
        if got is None:
            got = a.multiply(word_value(w[:-1]), assignment[w[-1]])
            cache[w] = got
        return got

    total = [Fraction(0)] * a.dim
    for (w, traces), c in p.terms.items():
        scalar = c
        for t in traces:
            scalar *= a.trace_of_unit if not t else a.trace_of(word_value(t))
            if scalar == 0:
                break
        if scalar == 0:
            continue
        wv = word_value(w)
        for k in range(a.dim):
            total[k] += scalar * wv[k]
    return tuple(total)


def ch_identity_failure(a: TraceAlgebra, n: int):
    """Least basis multiset where the multilinear degree-n identity fails.

    The identity is multilinear and symmetric, so testing basis multisets is
    equivalent to testing all basis tuples.
    """
    poly = ch_multilinear(n)
    for combo in combinations_with_replacement(range(a.dim), n):
        assignment = {i + 1: a.basis_vector(b) for i, b in enumerate(combo)}
        value = evaluate_on_algebra(poly, a, assignment)
        if any(c != 0 for c in value):
            return combo
    return None


def ch_degree(a: TraceAlgebra, n_max: int, diagnostics=None):
    """Least n <= n_max with t(1) = n and the degree-n identity holding.

    A list passed as diagnostics collects one line per rejected n.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    t1 = a.trace_of_unit
    for n in range(1, n_max + 1):
        if t1 != n:
            if diagnostics is not None:
                diagnostics.append(f"n={n}: t(1) = {t1} != {n}")
            continue
        witness = ch_identity_failure(a, n)
        if witness is None:
            return n
        if diagnostics is not None:
            labels = ", ".join(a.labels[b] for b in witness)
            diagnostics.append(f"n={n}: identity fails on ({labels})")
    return None


# -- weights ------------------------------------------------------------------

def recover_weights(a: TraceAlgebra, blocks=None) -> WeightedType:
    """Recover the trace weights of a split semisimple algebra.

    The block decomposition (list of (m, basis-index tuple)) must be supplied
    or carried by the algebra.  Solves t on block identities; non-integral or
    non-positive weights mean the trace fits no matrix-size normalization.
    """
    blocks = blocks if blocks is not None else a.blocks
    if blocks is None:
        raise ValueError("recover_weights needs the block decomposition")
    sizes = []
    weights = []
    for m, idxs in blocks:
        m = int(m)
        if m * m != len(idxs):
            raise ValueError(f"block of size {m} must have {m * m} basis indices")
        block_unit = _block_identity(a, m, idxs)
        t = a.trace_of(block_unit)
        weight = t / m
        if weight.denominator != 1 or weight <= 0:
            raise AlgebraValidationError(
                f"trace is not n-CH for any n: block weight {weight} "
                "is not a positive integer", witness=(m, t))
        sizes.append(m)
        weights.append(int(weight))
    wt = WeightedType(tuple(sizes), tuple(weights))
    if a.trace_of_unit != wt.n:
        raise AlgebraValidationError(
            f"weights sum to {wt.n} but t(1) = {a.trace_of_unit}")
    return wt


def _block_identity(a: TraceAlgebra, m: int, idxs):
    """Unit of the block subalgebra spanned by the given basis indices."""
    rows = []
    rhs = []
    for j in idxs:
        bj = a.basis_vector(j)
        # e * u_j = u_j and u_j * e = u_j, with e supported on idxs
        for left in (True, False):
            for k in range(a.dim):
                row = []
                for i in idxs:
                    bi = a.basis_vector(i)
                    prod = a.multiply(bi, bj) if left else a.multiply(bj, bi)
                    row.append(prod[k])
                rows.append(row)
                rhs.append(bj[k])
    sol = linalg.solve(rows, rhs)
    if sol is None:
        raise AlgebraValidationError("block has no unit: not a matrix block")
    e = [Fraction(0)] * a.dim
    for val, i in zip(sol, idxs):
        e[i] = val
    return tuple(e)


def rescale_trace(a: TraceAlgebra, factor: int) -> TraceAlgebra:
    """Same algebra with trace multiplied by a positive integer."""
    if factor < 1:
        raise ValueError("scale factor must be a positive integer")
    return TraceAlgebra(
        dim=a.dim, labels=a.labels, mul=a.mul, unit=a.unit,
        trace_vector=tuple(factor * t for t in a.trace_vector),
        blocks=a.blocks,
    )


# -- trace-ideal arithmetic ------------------------------------------------------

def ideal_dot_product(a: TraceAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """I . J = IJ + A t(IJ): the product closed up under trace."""
    products = []
    any_trace = False
    for x in left.rows:
        for y in right.rows:
            p = a.multiply(x, y)
            products.append(p)
            if a.trace_of(p) != 0:
                any_trace = True
    span = Subspace.from_vectors(a.dim, products) if products else Subspace.zero(a.dim)
    if any_trace:
        span = span + Subspace.whole(a.dim)
    return span


# -- convenient small algebras ---------------------------------------------------

def dual_numbers(trace_of_unit=2, trace_of_eps=0) -> TraceAlgebra:
    """F[eps]/(eps^2) with a prescribed linear trace."""
    mul = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
    ]
    return make_algebra(mul, unit=[1, 0],
                        trace_vector=[trace_of_unit, trace_of_eps],
                        labels=("1", "eps"))
