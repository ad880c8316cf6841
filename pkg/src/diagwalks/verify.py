"""Self-verification suites: every closed formula against an independent oracle.

Each suite returns CheckResult entries; a failure carries the first
counterexample in full so it can be reproduced from the command line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagonal import (
    DiagonalSystem,
    brute_force_distribution,
    convolution_distribution,
    walk_solution_count,
)
from .gp import build_hamming_view, verify_isomorphism
from .graphs import complete_graph, walk_count_power
from .neps import NepsBasis, neps_construct, neps_walks, walk_table

DEFAULT_ROSTER = [(3, 1, 2), (5, 1, 2), (7, 1, 2), (2, 2, 3), (3, 2, 2)]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}{suffix}"


def check_triple_agreement(roster=None, max_r=3, cap=10**8) -> list[CheckResult]:
    """Formula vs literal enumeration vs convolution, every alpha."""
    out = []
    for p, a, b in roster or DEFAULT_ROSTER:
        system = DiagonalSystem(p, a, b)
        field, k, q = system.field, system.k, system.q
        bad = None
        for r in range(max_r + 1):
            brute = brute_force_distribution(field, k, r, True, cap)
            conv = convolution_distribution(field, k, r, True)
            for alpha in range(q):
                formula = system.count_nonzero(alpha, r)
                if not (formula == int(brute[alpha]) == conv[alpha]):
                    bad = (
                        f"p={p} a={a} b={b} alpha={alpha} r={r}: "
                        f"formula={formula} brute={int(brute[alpha])} "
                        f"conv={conv[alpha]}"
                    )
                    break
            if bad:
                break
        out.append(
            CheckResult(
                f"triple-agreement p={p} a={a} b={b} (q={q}, k={k}, r<={max_r})",
                bad is None,
                bad or "",
            )
        )
    return out


def check_walk_bridge(roster=None, max_r=3) -> list[CheckResult]:
    """k^r * (matrix-power walks from 0 to alpha) must equal N_r(alpha)."""
    out = []
    for p, a, b in roster or DEFAULT_ROSTER:
        system = DiagonalSystem(p, a, b)
        bad = None
        for r in range(max_r + 1):
            for alpha in range(system.q):
                via_walks = walk_solution_count(system.field, system.k, 0, alpha, r)
                formula = system.count_nonzero(alpha, r)
                if via_walks != formula:
                    bad = (
                        f"p={p} a={a} b={b} alpha={alpha} r={r}: "
                        f"walks={via_walks} formula={formula}"
                    )
                    break
            if bad:
                break
        out.append(
            CheckResult(
                f"walk-bridge p={p} a={a} b={b} (r<={max_r})", bad is None, bad or ""
            )
        )
    return out


def check_isomorphisms(roster=None) -> list[CheckResult]:
    out = []
    for p, a, b in roster or DEFAULT_ROSTER:
        system = DiagonalSystem(p, a, b)
        view = build_hamming_view(system.field, system.k, a, b)
        ok = verify_isomorphism(view)
        out.append(
            CheckResult(
                f"isomorphism Gamma({system.k},{system.q}) ~ H({b},{p**a})", ok
            )
        )
    return out


def check_partition(roster=None, max_n=3) -> list[CheckResult]:
    """Sum over alpha of N_r is (q-1)^r; of M_s is q^s."""
    out = []
    for p, a, b in roster or DEFAULT_ROSTER:
        system = DiagonalSystem(p, a, b)
        q = system.q
        bad = None
        for n in range(max_n + 1):
            total_n = sum(system.count_nonzero(alpha, n) for alpha in range(q))
            total_m = sum(system.count_all(alpha, n) for alpha in range(q))
            if total_n != (q - 1) ** n or total_m != q**n:
                bad = (
                    f"p={p} a={a} b={b} n={n}: sum N={total_n} "
                    f"(want {(q - 1) ** n}), sum M={total_m} (want {q**n})"
                )
                break
        out.append(
            CheckResult(
                f"partition p={p} a={a} b={b} (n<={max_n})", bad is None, bad or ""
            )
        )
    return out


def random_graph(rng: random.Random, n: int):
    """Random simple undirected graph on n vertices."""
    import numpy as np

    adj = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                adj[i, j] = adj[j, i] = 1
    from .graphs import DenseGraph

    return DenseGraph(adj)


def random_neps_instance(rng: random.Random, max_factors=3, max_size=5, max_r=5):
    n = rng.randint(1, max_factors)
    sizes = [rng.randint(2, max_size) for _ in range(n)]
    factors = [
        complete_graph(m) if rng.random() < 0.4 else random_graph(rng, m)
        for m in sizes
    ]
    tuples = [t for t in _all_tuples(n) if any(t)]
    count = rng.randint(1, len(tuples))
    basis = NepsBasis(rng.sample(tuples, count))
    r = rng.randint(0, max_r)
    return factors, basis, r


def _all_tuples(n):
    out = [()]
    for _ in range(n):
        out = [t + (v,) for t in out for v in (0, 1)]
    return out


def check_neps_oracle(instances=50, seed=0, max_factors=3, max_size=5,
                      max_r=5) -> list[CheckResult]:
    """Walk formula from factor tables vs matrix power on random NEPS."""
    from .neps import vertex_tuple

    rng = random.Random(seed)
    bad = None
    for _ in range(instances):
        factors, basis, r = random_neps_instance(rng, max_factors, max_size, max_r)
        sizes = [g.n for g in factors]
        graph = neps_construct(factors, basis)
        cache = {}
        for i in range(graph.n):
            ti = vertex_tuple(i, sizes)
            for j in range(graph.n):
                tj = vertex_tuple(j, sizes)
                key = tuple(zip(ti, tj))
                if key not in cache:
                    tables = [
                        walk_table(g, a, b, r)
                        for g, (a, b) in zip(factors, key)
                    ]
                    cache[key] = neps_walks(tables, basis, r)
                if cache[key] != walk_count_power(graph, r, i, j):
                    bad = (
                        f"sizes={sizes} basis={basis} r={r} pair=({i},{j}): "
                        f"formula={cache[key]} "
                        f"power={walk_count_power(graph, r, i, j)}"
                    )
                    break
            if bad:
                break
        if bad:
            break
    return [CheckResult(f"neps-oracle ({instances} random instances)",
                        bad is None, bad or "")]


def check_example_closed_forms(max_r=8) -> list[CheckResult]:
    """The two K3 x K4 displays: Kronecker closed form and binomial sum."""
    from math import comb

    g1 = neps_construct([complete_graph(3), complete_graph(4)], NepsBasis([(1, 1)]))
    g2 = neps_construct(
        [complete_graph(3), complete_graph(4)], NepsBasis([(1, 0), (0, 1)])
    )
    bad = None
    for r in range(1, max_r + 1):
        closed = (6 ** (r - 1) + (-1) ** r * (2 ** (r - 1) + 3 ** (r - 1)) + 1) // 2
        assert (6 ** (r - 1) + (-1) ** r * (2 ** (r - 1) + 3 ** (r - 1)) + 1) % 2 == 0
        if closed != walk_count_power(g1, r, 0, 0):
            bad = f"Kronecker form fails at r={r}"
            break
        total = 0
        for ell in range(r + 1):
            from .graphs import complete_walks

            total += comb(r, ell) * complete_walks(3, ell, True) * complete_walks(
                4, r - ell, True
            )
        if total != walk_count_power(g2, r, 0, 0):
            bad = f"binomial form fails at r={r}"
            break
    return [CheckResult(f"example closed forms (r<={max_r})", bad is None, bad or "")]


def run_all(roster=None, max_r=3, cap=10**8, neps_instances=50,
            seed=0) -> list[CheckResult]:
    results = []
    results += check_triple_agreement(roster, max_r, cap)
    results += check_walk_bridge(roster, max_r)
    results += check_isomorphisms(roster)
    results += check_partition(roster, max_r)
    results += check_neps_oracle(neps_instances, seed)
    results += check_example_closed_forms()
    return results
