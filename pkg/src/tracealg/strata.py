"""Combinatorics of the stratification of matrix-tuple quotient varieties.

A stratum type is a multiset of (block size m, weight a) pairs with
sum m*a = n; it records the isomorphism type of the block-diagonal algebra
generated by a tuple lying on a closed orbit, together with the embedding
multiplicities.  The closure order is decided by searching for a
nonnegative-integer embedding matrix; dimensions come from closed formulas
in n, the block data and the number of tuple coordinates ell.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .findim import WeightedType


@dataclass(frozen=True)
class StratumType:
    """Canonical multiset of (m, a) pairs, sorted, with n = sum m*a."""

    pairs: tuple

    @classmethod
    def of(cls, pairs) -> "StratumType":
        pairs = tuple(sorted((int(m), int(a)) for m, a in pairs))
        if not pairs or any(m < 1 or a < 1 for m, a in pairs):
            raise ValueError("pairs must be positive (size, weight) entries")
        return cls(pairs)

    @property
    def n(self) -> int:
        return sum(m * a for m, a in self.pairs)

    @property
    def block_count(self) -> int:
        return len(self.pairs)

    def to_weighted_type(self) -> WeightedType:
        return WeightedType(tuple(m for m, _ in self.pairs),
                            tuple(a for _, a in self.pairs))

    @classmethod
    def from_weighted_type(cls, wt: WeightedType) -> "StratumType":
        return cls.of(tuple(zip(wt.sizes, wt.weights)))

    def label(self) -> str:
        return "+".join(f"{m}/{a}" for m, a in self.pairs)

    def __str__(self):
        return self.label()


def enumerate_types(n: int):
    """All stratum types with the given n, in canonical order."""
    if n < 1:
        raise ValueError("n must be >= 1")

    pairs = sorted((m, a) for m in range(1, n + 1) for a in range(1, n + 1)
                   if m * a <= n)

    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            out.append(StratumType.of(chosen))
            return
        for idx in range(start, len(pairs)):
            m, a = pairs[idx]
            if m * a <= remaining:
                rec(idx, remaining - m * a, chosen + [(m, a)])

    rec(0, n, [])
    return sorted(out, key=lambda s: s.pairs)


@dataclass(frozen=True)
class StratumDims:
    sheet_dim: int
    stratum_dim: int
    stabilizer_dim: int                # dim of the unit group of the centralizer
    projective_stabilizer_dim: int     # the same after killing scalars


def stratum_dims(s: StratumType, ell: int) -> StratumDims:
    """Dimension data of the stratum of type s for ell-tuples.

    sheet_dim counts the tuples themselves, stratum_dim their image in the
    quotient; both need ell >= 2.
    """
    if ell <= 1:
        raise ValueError("dimension formulas require ell >= 2")
    n = s.n
    sum_m2 = sum(m * m for m, _ in s.pairs)
    sum_a2 = sum(a * a for _, a in s.pairs)
    k = s.block_count
    return StratumDims(
        sheet_dim=n * n + (ell - 1) * sum_m2 - sum_a2 + k,
        stratum_dim=(ell - 1) * sum_m2 + k,
        stabilizer_dim=sum_a2,
        projective_stabilizer_dim=sum_a2 - 1,
    )


@lru_cache(maxsize=None)
def closure_leq(lower: StratumType, upper: StratumType, n: int = None) -> bool:
    """True iff the lower stratum lies in the closure of the upper one.

    Decided by searching for a nonnegative-integer matrix r with
    sum_j r[i][j] * m'_j = m_i for every block i of upper and
    a'_j = sum_i a_i * r[i][j] for every block j of lower: the embedding
    multiplicities of the lower block algebra inside the upper one.
    """
    if n is None:
        n = upper.n
    if lower.n != n or upper.n != n:
        raise ValueError(f"stratum types have mismatched n: {lower.n} vs {upper.n}")
    up = upper.pairs
    low = lower.pairs
    k_low = len(low)

    # all ways to write m as a nonnegative combination of the lower sizes
    @lru_cache(maxsize=None)
    def row_options(m):
        opts = []

        def rec(j, remaining, row):
            if j == k_low:
                if remaining == 0:
                    opts.append(tuple(row))
                return
            size = low[j][0]
            for count in range(remaining // size + 1):
                rec(j + 1, remaining - count * size, row + [count])

        rec(0, m, [])
        return opts

    target = tuple(a for _, a in low)

    def search(i, col_sums):
        if i == len(up):
            return col_sums == target
        m_i, a_i = up[i]
        for row in row_options(m_i):
            new_sums = tuple(c + a_i * r for c, r in zip(col_sums, row))
            if all(c <= t for c, t in zip(new_sums, target)):
                if search(i + 1, new_sums):
                    return True
        return False

    return search(0, tuple([0] * k_low))


def maximal_degenerations(s: StratumType, ell: int):
    """One-step degenerations: split one block or merge two equal-size blocks.

    Returns canonicalized (type, codimension) pairs, duplicates merged; the
    codimension of a split of (m, a) into (p, a), (q, a) is (ell-1)*2pq - 1,
    that of merging (m, a1), (m, a2) into (m, a1 + a2) is (ell-1)*m^2 + 1.
    """
    if ell <= 1:
        raise ValueError("degeneration codimensions require ell >= 2")
    found = {}
    pairs = list(s.pairs)
    for idx, (m, a) in enumerate(pairs):
        for p in range(1, m // 2 + 1):
            q = m - p
            new_type = StratumType.of(pairs[:idx] + pairs[idx + 1:] + [(p, a), (q, a)])
            found[new_type] = (ell - 1) * 2 * p * q - 1
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if pairs[i][0] == pairs[j][0]:
                m = pairs[i][0]
                merged = (m, pairs[i][1] + pairs[j][1])
                rest = [pairs[t] for t in range(len(pairs)) if t not in (i, j)]
                new_type = StratumType.of(rest + [merged])
                found[new_type] = (ell - 1) * m * m + 1
    return sorted(found.items(), key=lambda kv: kv[0].pairs)


@dataclass
class CoverEdge:
    lower: StratumType
    upper: StratumType
    codim: int
    flagged: bool  # codimension-1 exception


@dataclass
class StrataPoset:
    n: int
    ell: int
    nodes: list
    covers: list = field(default_factory=list)

    @property
    def flagged_edges(self):
        return [e for e in self.covers if e.flagged]

    def leq(self, lower: StratumType, upper: StratumType) -> bool:
        return closure_leq(lower, upper, self.n)

    def to_dot(self) -> str:
        lines = ["digraph strata {", "  rankdir=BT;"]
        for s in self.nodes:
            dims = stratum_dims(s, self.ell)
            lines.append(f'  "{s.label()}" [label="{s.label()}\\ndim {dims.stratum_dim}"];')
        for e in self.covers:
            style = ' [label="1", color=red, fontcolor=red]' if e.flagged \
                else f' [label="{e.codim}"]'
            lines.append(f'  "{e.lower.label()}" -> "{e.upper.label()}"{style};')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "ell": self.ell,
            "nodes": [
                {
                    "type": s.label(),
                    "pairs": list(list(p) for p in s.pairs),
                    "stratum_dim": stratum_dims(s, self.ell).stratum_dim,
                    "sheet_dim": stratum_dims(s, self.ell).sheet_dim,
                    "stabilizer_dim": stratum_dims(s, self.ell).stabilizer_dim,
                }
                for s in self.nodes
            ],
            "covers": [
                {"lower": e.lower.label(), "upper": e.upper.label(),
                 "codim": e.codim, "codim1_exception": e.flagged}
                for e in self.covers
            ],
        }, indent=2)


def _is_two_split(lower: StratumType, upper: StratumType) -> bool:
    """True iff lower is upper with one (2, a) block split into (1, a), (1, a)."""
    for idx, (m, a) in enumerate(upper.pairs):
        if m != 2:
            continue
        rest = list(upper.pairs[:idx]) + list(upper.pairs[idx + 1:])
        if StratumType.of(rest + [(1, a), (1, a)]) == lower:
            return True
    return False


def stratification_poset(n: int, ell: int) -> StrataPoset:
    """Closure poset of all stratum types for the given n and ell.

    Covering edges carry the dimension drop; every codimension-1 edge is
    checked to be the one known exception (ell = 2 and a 2x2 block splitting
    into two lines) and flagged.
    """
    if n < 1 or ell < 2:
        raise ValueError("need n >= 1 and ell >= 2")
    nodes = enumerate_types(n)
    below = {s: [t for t in nodes if t != s and closure_leq(t, s, n)] for s in nodes}
    covers = []
    for s in nodes:
        for t in below[s]:
            if any(u in below[s] and closure_leq(t, u, n) for u in below[s] if u != t):
                continue
            drop = stratum_dims(s, ell).stratum_dim - stratum_dims(t, ell).stratum_dim
            flagged = drop == 1
            if flagged and not (ell == 2 and _is_two_split(t, s)):
                raise AssertionError(
                    f"unexpected codimension-1 covering {t} < {s} at ell={ell}")
            covers.append(CoverEdge(lower=t, upper=s, codim=drop, flagged=flagged))
    covers.sort(key=lambda e: (e.upper.pairs, e.lower.pairs))
    return StrataPoset(n=n, ell=ell, nodes=nodes, covers=covers)
