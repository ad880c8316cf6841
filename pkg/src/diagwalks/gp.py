"""Generalized Paley graphs and their Hamming-graph structure.

Gamma(k, p^m) is the Cayley graph on (F_{p^m}, +) whose connection set is
the k-th power residues. When u = (p^m-1)/k factors as b(p^a - 1) with
m = ab and b > 1, the graph is a Hamming graph H(b, p^a), with an explicit
coordinate isomorphism through the basis {1, w^k, ..., w^{(b-1)k}}.
"""

from __future__ import annotations

import numpy as np

from .errors import KDoesNotDivide
from .field import FieldElement, FiniteField, kth_power_residues, zero_pattern
from .graphs import DenseGraph


def is_primitive_divisor(u: int, p: int, m: int) -> bool:
    """u | p^m - 1 while u divides no smaller p^h - 1 (any h < m)."""
    if u < 1:
        raise ValueError(f"u={u} must be >= 1")
    if (p**m - 1) % u != 0:
        return False
    return all((p**h - 1) % u != 0 for h in range(1, m))


def gp_is_undirected(p: int, u: int) -> bool:
    """R_k is symmetric iff p = 2 or u is even."""
    return p == 2 or u % 2 == 0


def gp_graph(field: FiniteField, k: int) -> DenseGraph:
    """Cayley graph of the additive group with connection set R_k."""
    q = field.q
    if (q - 1) % k != 0:
        raise KDoesNotDivide(f"k={k} does not divide q-1={q - 1}")
    u = (q - 1) // k
    residues = kth_power_residues(field, k)
    rmask = np.zeros(q, dtype=bool)
    rmask[list(residues.indices)] = True
    # adj[i, j] = 1 iff (j - i) is a k-th power
    diff = field.add_table[field.neg_table[:, None], np.arange(q)[None, :]]
    adj = rmask[diff].astype(np.int8)
    return DenseGraph(adj, directed=not gp_is_undirected(field.p, u))


def hamming_parameters(p: int, m: int, k: int) -> list[tuple[int, int]]:
    """All (a, b) with m = ab, b > 1 and u = b(p^a - 1); may be empty.

    Every pair satisfying the arithmetic condition is returned; nothing
    here assumes uniqueness.
    """
    if (p**m - 1) % k != 0:
        raise KDoesNotDivide(f"k={k} does not divide p^m-1={p**m - 1}")
    u = (p**m - 1) // k
    out = []
    for a in range(1, m + 1):
        if m % a:
            continue
        b = m // a
        if b > 1 and u == b * (p**a - 1):
            out.append((a, b))
    return out


class HammingView:
    """The (a,b) coordinate view of a GP-graph as H(b, p^a)."""

    def __init__(self, field: FiniteField, k: int, a: int, b: int):
        if (a, b) not in hamming_parameters(field.p, field.m, k):
            raise ValueError(
                f"(a={a}, b={b}) is not a Hamming decomposition for "
                f"k={k} over GF({field.p}^{field.m})"
            )
        self.field = field
        self.k = k
        self.a = a
        self.b = b
        self.map = field.subfield_map(a, b, k)

    @property
    def alphabet_size(self) -> int:
        return self.field.p**self.a

    def coords_idx(self, x_idx: int) -> tuple[int, ...]:
        return self.map.coords_idx(x_idx)

    def coords(self, x: FieldElement) -> tuple[FieldElement, ...]:
        return self.map.coords(x)

    def pattern_idx(self, x_idx: int) -> tuple[bool, ...]:
        """Zero pattern of [x]: which Hamming coordinates vanish."""
        return zero_pattern(self.coords_idx(x_idx))

    def __repr__(self):
        return (
            f"HammingView(GF({self.field.p}^{self.field.m}), k={self.k}, "
            f"H({self.b},{self.alphabet_size}))"
        )


def build_hamming_view(field: FiniteField, k: int, a: int, b: int) -> HammingView:
    return HammingView(field, k, a, b)


def verify_isomorphism(view: HammingView, coords_fn=None) -> bool:
    """Exhaustively check: y - x in R_k  <=>  dist([x],[y]) = 1.

    coords_fn overrides the coordinate map (used as a negative control in
    tests); it defaults to the view's own map.
    """
    field = view.field
    coords_fn = coords_fn or view.coords_idx
    residues = kth_power_residues(field, view.k)
    coords = [coords_fn(x) for x in range(field.q)]
    for x in range(field.q):
        for y in range(field.q):
            adjacent = field.sub_idx(y, x) in residues
            dist = sum(a != b for a, b in zip(coords[x], coords[y]))
            if adjacent != (dist == 1):
                return False
    return True
