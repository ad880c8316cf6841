"""NEPS graph products and their closed-form walk counts.

A NEPS is driven by a basis of 0/1 tuples: each tuple says, per
coordinate, whether a step stays put (0) or moves along an edge of that
factor (1). The walk formula sums over all length-r sequences of basis
tuples; the evaluator here aggregates those sequences by their column
sums with a dynamic program, so the cost is polynomial in r instead of
|B|^r. The naive enumeration is kept behind a flag as a cross-check.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from .errors import ArityMismatch, LengthTableTooShort, ProductTooLarge
from .graphs import DenseGraph, complete_walks

DEFAULT_PRODUCT_CAP = 1 << 12


class NepsBasis:
    """Non-empty set of distinct 0/1 n-tuples; the all-zero tuple is
    rejected because it would put a loop at every vertex."""

    def __init__(self, tuples):
        tuples = [tuple(int(v) for v in t) for t in tuples]
        if not tuples:
            raise ValueError("basis must be non-empty")
        n = len(tuples[0])
        for t in tuples:
            if len(t) != n:
                raise ValueError(f"mixed tuple lengths in basis: {tuples}")
            if any(v not in (0, 1) for v in t):
                raise ValueError(f"basis entries must be 0/1, got {t}")
            if not any(t):
                raise ValueError("all-zero tuple would create self-loops")
        if len(set(tuples)) != len(tuples):
            raise ValueError(f"duplicate tuples in basis: {tuples}")
        self.n = n
        self.tuples = tuple(sorted(tuples))

    @classmethod
    def standard(cls, n: int) -> "NepsBasis":
        """{e_1, ..., e_n}: the cartesian-sum (Hamming) basis."""
        return cls([tuple(int(i == j) for j in range(n)) for i in range(n)])

    @classmethod
    def parse(cls, literal: str) -> "NepsBasis":
        """Parse the CLI literal, e.g. "11", "10;01", "11;10;01"."""
        return cls([tuple(int(c) for c in part) for part in literal.split(";")])

    def __repr__(self):
        return f"NepsBasis({';'.join(''.join(map(str, t)) for t in self.tuples)})"

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __eq__(self, other):
        return isinstance(other, NepsBasis) and other.tuples == self.tuples

    def __hash__(self):
        return hash(self.tuples)


# --- product vertex indexing (lexicographic, leftmost factor most significant) ---

def vertex_tuple(index: int, sizes) -> tuple[int, ...]:
    out = []
    for s in reversed(sizes):
        out.append(index % s)
        index //= s
    return tuple(reversed(out))


def vertex_index(tup, sizes) -> int:
    idx = 0
    for v, s in zip(tup, sizes):
        idx = idx * s + v
    return idx


def agreement_pattern(sizes, vi: int, vj: int) -> tuple[bool, ...]:
    """Per-coordinate equality of two product vertices."""
    ti, tj = vertex_tuple(vi, sizes), vertex_tuple(vj, sizes)
    return tuple(a == b for a, b in zip(ti, tj))


def neps_construct(factors, basis: NepsBasis, cap: int = DEFAULT_PRODUCT_CAP) -> DenseGraph:
    """Build the NEPS adjacency as a sum of Kronecker products."""
    if basis.n != len(factors):
        raise ArityMismatch(
            f"basis arity {basis.n} != number of factors {len(factors)}"
        )
    total = math.prod(g.n for g in factors)
    if total > cap:
        raise ProductTooLarge(f"product has {total} vertices, cap is {cap}")
    acc = np.zeros((total, total), dtype=np.int64)
    for alpha in basis:
        term = np.ones((1, 1), dtype=np.int64)
        for g, a in zip(factors, alpha):
            mat = g.adj.astype(np.int64) if a else np.identity(g.n, dtype=np.int64)
            term = np.kron(term, mat)
        acc += term
    assert acc.max() <= 1, "distinct basis tuples must give disjoint edge sets"
    directed = any(g.directed for g in factors)
    return DenseGraph(acc, directed=directed)


def walk_table(G: DenseGraph, i: int, j: int, r: int) -> list[int]:
    """Walk counts between a fixed vertex pair for every length 0..r."""
    return [G.walk_count(length, i, j) for length in range(r + 1)]


@lru_cache(maxsize=None)
def _column_sum_multiplicities(tuples, r):
    """Multiplicity of each column-sum vector over all of B^r."""
    n = len(tuples[0])
    states = {(0,) * n: 1}
    for _ in range(r):
        nxt = {}
        for svec, mult in states.items():
            for beta in tuples:
                key = tuple(s + b for s, b in zip(svec, beta))
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    return states


def _check_tables(tables, n, r, pattern):
    if len(tables) != n:
        raise ArityMismatch(f"{len(tables)} walk tables for arity {n}")
    for t, tab in enumerate(tables):
        if len(tab) <= r:
            raise LengthTableTooShort(
                f"factor {t} table covers lengths < {r}"
            )
    if pattern is not None:
        if len(pattern) != n:
            raise ArityMismatch(f"pattern length {len(pattern)} != arity {n}")
        for t, agree in enumerate(pattern):
            expect = 1 if agree else 0
            if tables[t][0] != expect:
                raise ValueError(
                    f"factor {t} table has w(0)={tables[t][0]} but the "
                    f"agreement pattern says {expect}"
                )


def neps_walks(factor_walk_tables, basis: NepsBasis, r: int, pattern=None,
               method: str = "dp") -> int:
    """Walk count of a NEPS from per-factor walk tables for one vertex pair.

    factor_walk_tables[t][length] must be the factor-t walk count between
    the projected vertices, for every length 0..r.
    """
    tables = [list(tab) for tab in factor_walk_tables]
    _check_tables(tables, basis.n, r, pattern)
    if method == "naive":
        total = 0
        for seq in itertools.product(basis.tuples, repeat=r):
            term = 1
            for t in range(basis.n):
                term *= tables[t][sum(beta[t] for beta in seq)]
            total += term
        return total
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    total = 0
    for svec, mult in _column_sum_multiplicities(basis.tuples, r).items():
        term = mult
        for t, s in enumerate(svec):
            term *= tables[t][s]
            if term == 0:
                break
        total += term
    return total


def neps_complete_walks(m_list, basis: NepsBasis, r: int, pattern) -> int:
    """NEPS of complete graphs: factor walks come from the closed form."""
    if len(m_list) != basis.n:
        raise ArityMismatch(f"{len(m_list)} sizes for arity {basis.n}")
    tables = [
        [complete_walks(m, length, same) for length in range(r + 1)]
        for m, same in zip(m_list, pattern)
    ]
    return neps_walks(tables, basis, r, pattern=pattern)


def weak_compositions(total: int, parts: int):
    """Weak compositions of `total` into `parts` parts, colexicographic."""
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for rest in weak_compositions(total - last, parts - 1):
            yield rest + (last,)


def multinomial(parts) -> int:
    """Exact multinomial coefficient (sum parts)! / prod(part!)."""
    out, running = 1, 0
    for part in parts:
        running += part
        out *= math.comb(running, part)
    return out


def cartesian_sum_walks(factor_walk_tables, r: int, pattern=None) -> int:
    """Walks in the cartesian sum G_1 + ... + G_n via the multinomial sum.

    Independent of the DP path in neps_walks; the two must agree for the
    standard basis.
    """
    tables = [list(tab) for tab in factor_walk_tables]
    n = len(tables)
    _check_tables(tables, n, r, pattern)
    total = 0
    for comp in weak_compositions(r, n):
        term = multinomial(comp)
        for t, rt in enumerate(comp):
            term *= tables[t][rt]
            if term == 0:
                break
        total += term
    return total


def hamming_walks(b: int, q: int, r: int, zeros) -> int:
    """Walks in H(b,q) between vertices agreeing exactly where `zeros` is true.

    Only the number of agreeing coordinates matters; the pattern is
    canonicalized before evaluation, which makes the permutation
    invariance structural.
    """
    zeros = tuple(bool(z) for z in zeros)
    if len(zeros) != b:
        raise ArityMismatch(f"pattern length {len(zeros)} != b={b}")
    if b < 1 or q < 2 or r < 0:
        raise ValueError(f"bad Hamming parameters b={b}, q={q}, r={r}")
    canon = (True,) * sum(zeros) + (False,) * (b - sum(zeros))
    total = 0
    for comp in weak_compositions(r, b):
        term = multinomial(comp)
        for rt, agree in zip(comp, canon):
            term *= complete_walks(q, rt, agree)
            if term == 0:
                break
        total += term
    return total
