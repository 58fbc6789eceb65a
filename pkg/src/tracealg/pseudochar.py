"""Pseudocharacters of finite groups.

A candidate degree-n central function passes when t(1) = n, t is constant on
products both ways round, and the (n+1)-fold alternating trace sum vanishes
on every tuple of group elements.  Passing tables induce a trace on the
group algebra whose quotient by the trace-form kernel is an algebra with
trace of degree n.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .chident import PermCycles
from .findim import (Subspace, TraceAlgebra, ch_degree, make_algebra,
                     quotient_algebra, trace_kernel)


class GroupValidationError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table on indices 0..order-1."""

    order: int
    table: tuple
    identity: int

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        row = self.table[a]
        for b in range(self.order):
            if row[b] == self.identity:
                return b
        raise GroupValidationError(f"element {a} has no inverse")

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mult(x, a)
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        return lcm(*[self.element_order(a) for a in range(self.order)])


def make_group(table, identity=None) -> FiniteGroup:
    """Validated group from a multiplication table.

    Checks the Latin square property, the identity law and associativity
    exhaustively.
    """
    g = len(table)
    table = tuple(tuple(int(x) for x in row) for row in table)
    for i, row in enumerate(table):
        if sorted(row) != list(range(g)):
            raise GroupValidationError(f"row {i} is not a permutation")
    for j in range(g):
        col = [table[i][j] for i in range(g)]
        if sorted(col) != list(range(g)):
            raise GroupValidationError(f"column {j} is not a permutation")
    if identity is None:
        identity = next((e for e in range(g)
                         if all(table[e][x] == x and table[x][e] == x for x in range(g))),
                        None)
        if identity is None:
            raise GroupValidationError("no identity element")
    else:
        if any(table[identity][x] != x or table[x][identity] != x for x in range(g)):
            raise GroupValidationError(f"element {identity} is not an identity")
    for a in range(g):
        for b in range(g):
            ab = table[a][b]
            for c in range(g):
                if table[ab][c] != table[a][table[b][c]]:
                    raise GroupValidationError(
                        f"associativity fails on ({a}, {b}, {c})")
    return FiniteGroup(order=g, table=table, identity=identity)


# -- group constructors -------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    return make_group([[(i + j) % n for j in range(n)] for i in range(n)])


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order
    idx = lambda a, b: a * n2 + b
    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g1.mult(a1, a2), g2.mult(b1, b2))
    return make_group(table)


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of the k-gon, order 2k; elements (r^i, r^i s)."""
    n = 2 * k

    def mult(a, b):
        ia, sa = a % k, a // k
        ib, sb = b % k, b // k
        if sa == 0:
            return ((ia + ib) % k) + k * sb
        return ((ia - ib) % k) + k * (1 - sb)

    return make_group([[mult(a, b) for b in range(n)] for a in range(n)])


def symmetric_group_3() -> FiniteGroup:
    return dihedral_group(3)


def quaternion_group() -> FiniteGroup:
    """Q8 = {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    sign = {n: (-1 if n.startswith("-") else 1) for n in names}
    base = {n: n.lstrip("-") for n in names}
    mul_base = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    table = []
    for a in names:
        row = []
        for b in names:
            s, base_prod = mul_base[(base[a], base[b])]
            s *= sign[a] * sign[b]
            row.append(names.index(base_prod if s == 1 else "-" + base_prod))
        table.append(row)
    return make_group(table)


def klein_four_group() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


# -- pseudocharacter checking ----------------------------------------------------

@dataclass(frozen=True)
class PseudoCharTable:
    group: FiniteGroup
    degree: int
    values: tuple  # Fraction or Cyc per element


@dataclass
class PseudoCheckReport:
    passed: bool
    degree: int
    axiom1_ok: bool
    axiom2_ok: bool
    axiom3_ok: bool
    axiom1_witness: object = None
    axiom2_witness: object = None   # (a, b) with t(ab) != t(ba)
    axiom3_witness: object = None   # least tuple where T_{n+1} != 0
    exhaustive: bool = True
    tuples_checked: int = 0


def _is_zero_value(v) -> bool:
    if isinstance(v, Fraction):
        return v == 0
    return v.is_zero()


@lru_cache(maxsize=None)
def _perm_cycle_data(k: int):
    """Signs and cycle index-tuples for all permutations of {1..k}."""
    data = []
    for images in permutations(range(1, k + 1)):
        perm = PermCycles.from_one_line(images)
        cycles = tuple(tuple(i - 1 for i in cyc) for cyc in perm.cycles)
        data.append((perm.sign, cycles))
    return tuple(data)


def multilinear_trace_sum(group: FiniteGroup, values, elements) -> object:
    """T_k evaluated through the table: sum over S_k of sign times the product
    of t(cycle products)."""
    k = len(elements)
    total = None
    for sign, cycles in _perm_cycle_data(k):
        term = Fraction(sign)
        for cyc in cycles:
            prod = elements[cyc[0]]
            for idx in cyc[1:]:
                prod = group.mult(prod, elements[idx])
            term = term * values[prod]
        total = term if total is None else total + term
    return total


def _scan_multiset_chunk(group, values, n, first):
    """Scan all multisets beginning with the given least element; returns
    (least witness or None, tuples scanned)."""
    count = 0
    for rest in combinations_with_replacement(range(first, group.order), n):
        elems = (first,) + rest
        count += 1
        if not _is_zero_value(multilinear_trace_sum(group, values, elems)):
            return elems, count
    return None, count


def check_pseudocharacter(p: PseudoCharTable, max_exhaustive: int = 300000,
                          sample_size: int = 20000, seed: int = 0,
                          workers: int = 0) -> PseudoCheckReport:
    """Verify the three degree-n axioms, reporting first witnesses.

    The tuple axiom is checked exhaustively whenever the number of basis
    multisets fits the budget (the sum is symmetric and multilinear, so
    multisets decide all tuples); larger inputs fall back to a clearly
    labeled random sample.  With workers >= 2 the exhaustive scan is chunked
    by least element and run on a thread pool; the chunking fixes the scan
    order, so the reported witness does not depend on the worker count.
    """
    g, n, values = p.group, p.degree, p.values
    report = PseudoCheckReport(passed=False, degree=n,
                               axiom1_ok=True, axiom2_ok=True, axiom3_ok=True)

    if values[g.identity] != n:
        report.axiom1_ok = False
        report.axiom1_witness = values[g.identity]

    for a in range(g.order):
        for b in range(a + 1, g.order):
            if values[g.mult(a, b)] != values[g.mult(b, a)]:
                report.axiom2_ok = False
                report.axiom2_witness = (a, b)
                break
        if not report.axiom2_ok:
            break

    n_multisets = 1
    for i in range(n + 1):
        n_multisets = n_multisets * (g.order + i) // (i + 1)
    if n_multisets > max_exhaustive:
        report.exhaustive = False
        rng = random.Random(seed)
        for _ in range(sample_size):
            elems = tuple(sorted(rng.randrange(g.order) for _ in range(n + 1)))
            report.tuples_checked += 1
            if not _is_zero_value(multilinear_trace_sum(g, values, elems)):
                report.axiom3_ok = False
                report.axiom3_witness = elems
                break
    elif workers >= 2:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda first: _scan_multiset_chunk(g, values, n, first),
                range(g.order)))
        for witness, count in results:
            report.tuples_checked += count
            if witness is not None:
                report.axiom3_ok = False
                report.axiom3_witness = witness
                break
    else:
        for first in range(g.order):
            witness, count = _scan_multiset_chunk(g, values, n, first)
            report.tuples_checked += count
            if witness is not None:
                report.axiom3_ok = False
                report.axiom3_witness = witness
                break

    report.passed = report.axiom1_ok and report.axiom2_ok and report.axiom3_ok
    return report


# -- the induced trace algebra -----------------------------------------------------

def group_algebra(p: PseudoCharTable) -> TraceAlgebra:
    """Q[G] with basis the group elements and trace from the table values."""
    g = p.group
    values = []
    for v in p.values:
        if isinstance(v, Fraction):
            values.append(v)
        else:
            r = v.as_rational()
            if r is None:
                raise ValueError(
                    "group-algebra construction needs rational trace values")
            values.append(r)
    mul = [[[(g.mult(a, b), 1)] for b in range(g.order)] for a in range(g.order)]
    unit = [Fraction(1) if a == g.identity else Fraction(0) for a in range(g.order)]
    return make_algebra(mul, unit, values,
                        labels=tuple(f"g{a}" for a in range(g.order)), validate=False)


def pseudochar_kernel(p: PseudoCharTable):
    """Kernel of the induced trace form on Q[G] and the quotient algebra.

    Requires the table to pass check_pseudocharacter; the quotient is
    asserted to have trace degree equal to the table degree.
    """
    report = check_pseudocharacter(p)
    if not report.passed:
        raise ValueError(f"not a pseudocharacter: {report}")
    algebra = group_algebra(p)
    kernel = trace_kernel(algebra)
    if kernel.dim == algebra.dim:
        raise ValueError("trace is identically zero; quotient undefined")
    quotient, _ = quotient_algebra(algebra, kernel)
    degree = ch_degree(quotient, p.degree)
    if degree != p.degree:
        raise AssertionError(
            f"quotient is not a degree-{p.degree} trace algebra (got {degree})")
    return kernel, quotient
