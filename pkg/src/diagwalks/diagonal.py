"""Exact solution counts for x_1^k + ... + x_s^k = alpha.

N_r counts solutions with every coordinate nonzero; M_s lets coordinates
range over the whole field. The closed formula for N_r multiplies k^r
into the Hamming walk count determined by the zero pattern of alpha's
subfield coordinates; M_s is assembled from the N_i by choosing which
coordinates vanish, plus the all-zero tuple when alpha = 0.

Two independent oracles ship alongside the formulas: a literal
enumeration of all tuples (vectorized, cached per distribution) and an
r-fold additive convolution over the group.
"""

from __future__ import annotations

import math

import numpy as np

from .divisibility import k_is_integer, remark_cases
from .errors import BadParameters, EnumerationTooLarge, KDoesNotDivide, KNotInteger
from .field import FieldElement, FiniteField, build_field, kth_power_residues
from .gp import HammingView, gp_graph
from .neps import hamming_walks

DEFAULT_ENUM_CAP = 10**8


def _as_index(field: FiniteField, x) -> int:
    if isinstance(x, FieldElement):
        if x.field.key != field.key:
            raise BadParameters("element belongs to a different field")
        return x.index
    x = int(x)
    if not 0 <= x < field.q:
        raise BadParameters(f"element index {x} out of range for q={field.q}")
    return x


class DiagonalSystem:
    """Counting context for fixed (p, a, b) with k = (p^{ab}-1)/(b(p^a-1))."""

    def __init__(self, p: int, a: int, b: int, field: FiniteField | None = None):
        if b < 2 or a < 1:
            raise BadParameters(f"need a >= 1 and b > 1, got a={a}, b={b}")
        if not k_is_integer(p, a, b):
            report = remark_cases(p, a, b)
            raise KNotInteger(
                f"(p^{{ab}}-1)/(b(p^a-1)) is not an integer for "
                f"p={p}, a={a}, b={b}",
                report=report,
            )
        self.p = p
        self.a = a
        self.b = b
        self.m = a * b
        if field is None:
            field = build_field(p, self.m)
        elif (field.p, field.m) != (p, self.m):
            raise BadParameters("field does not match (p, a*b)")
        self.field = field
        self.q = field.q
        self.k = (self.q - 1) // (b * (p**a - 1))
        self.view = HammingView(field, self.k, a, b)

    def count_nonzero(self, alpha, r: int) -> int:
        """N_r(alpha): k^r times the Hamming walk count for alpha's zero pattern."""
        if r < 0:
            raise BadParameters(f"r={r} must be >= 0")
        idx = _as_index(self.field, alpha)
        pattern = self.view.pattern_idx(idx)
        return self.k**r * hamming_walks(self.b, self.p**self.a, r, pattern)

    def count_all(self, alpha, s: int) -> int:
        """M_s(alpha): sum of binomial(s,i) N_i, plus 1 for the trivial
        solution when alpha = 0."""
        if s < 0:
            raise BadParameters(f"s={s} must be >= 0")
        idx = _as_index(self.field, alpha)
        total = 1 if idx == 0 else 0
        for i in range(1, s + 1):
            total += math.comb(s, i) * self.count_nonzero(idx, i)
        return total

    def __repr__(self):
        return (
            f"DiagonalSystem(p={self.p}, a={self.a}, b={self.b}, "
            f"q={self.q}, k={self.k})"
        )


def count_nonzero_formula(p: int, a: int, b: int, alpha, r: int) -> int:
    return DiagonalSystem(p, a, b).count_nonzero(alpha, r)


def count_all_formula(p: int, a: int, b: int, alpha, s: int) -> int:
    return DiagonalSystem(p, a, b).count_all(alpha, s)


# --- walk bridge ---

_gp_cache: dict = {}


def _gp_graph_cached(field: FiniteField, k: int):
    key = (field.key, k)
    if key not in _gp_cache:
        _gp_cache[key] = gp_graph(field, k)
    return _gp_cache[key]


def walk_solution_count(field: FiniteField, k: int, x, y, s: int) -> int:
    """k^s times the s-walk count from x to y on the GP-graph; equals the
    number of nonzero tuples with x + sum(x_i^k) = y."""
    if (field.q - 1) % k != 0:
        raise KDoesNotDivide(f"k={k} does not divide q-1={field.q - 1}")
    xi = _as_index(field, x)
    yi = _as_index(field, y)
    graph = _gp_graph_cached(field, k)
    return k**s * graph.walk_count(s, xi, yi)


# --- oracle 1: literal enumeration ---

_bf_cache: dict = {}


def brute_force_distribution(field: FiniteField, k: int, r: int,
                             restrict_nonzero: bool = True,
                             cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """Counts for every alpha at once, by enumerating all tuples.

    The enumeration is literal: the value sum of every tuple is
    materialized before a single histogram pass. Cached per
    (field, k, r, mode) so per-alpha queries do not re-enumerate.
    """
    key = (field.key, k, r, restrict_nonzero)
    if key in _bf_cache:
        return _bf_cache[key]
    q = field.q
    base = (q - 1) if restrict_nonzero else q
    if base**r > cap:
        raise EnumerationTooLarge(
            f"{base}^{r} tuples exceed the enumeration cap {cap}"
        )
    domain = range(1, q) if restrict_nonzero else range(q)
    powers = np.array([field.pow_idx(x, k) for x in domain], dtype=np.int64)
    add = field.add_table
    sums = np.zeros(1, dtype=add.dtype)
    for _ in range(r):
        sums = add[sums[:, None], powers[None, :]].ravel()
    dist = np.bincount(sums, minlength=q)
    _bf_cache[key] = dist
    return dist


def brute_force_count(field: FiniteField, k: int, alpha, r: int,
                      restrict_nonzero: bool = True,
                      cap: int = DEFAULT_ENUM_CAP) -> int:
    idx = _as_index(field, alpha)
    return int(brute_force_distribution(field, k, r, restrict_nonzero, cap)[idx])


# --- oracle 2: additive convolution ---

def convolution_distribution(field: FiniteField, k: int, r: int,
                             restrict_nonzero: bool = True) -> list[int]:
    """r-fold additive convolution of f(beta) = k*[beta in R_k]
    (+1 at beta = 0 when zeros are allowed); exact Python integers."""
    q = field.q
    residues = kth_power_residues(field, k)
    support = [(beta, k) for beta in residues.indices]
    if not restrict_nonzero:
        support.append((0, 1))
    g = [0] * q
    g[0] = 1
    for _ in range(r):
        nxt = [0] * q
        for alpha_idx, weight in enumerate(g):
            if weight:
                for beta, f in support:
                    nxt[field.add_idx(alpha_idx, beta)] += weight * f
        g = nxt
    return g


def convolution_count(field: FiniteField, k: int, alpha, r: int,
                      restrict_nonzero: bool = True) -> int:
    idx = _as_index(field, alpha)
    return convolution_distribution(field, k, r, restrict_nonzero)[idx]


def result_record(p, a, b, k, q, alpha_literal, n, mode, method, count) -> dict:
    """The JSON result payload; counts travel as decimal strings."""
    return {
        "p": p,
        "a": a,
        "b": b,
        "k": k,
        "q": q,
        "alpha": alpha_literal,
        "r_or_s": n,
        "mode": mode,
        "method": method,
        "count": str(count),
    }
