import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagwalks import (
    NepsBasis,
    cartesian_sum_walks,
    complete_graph,
    hamming_walks,
    neps_complete_walks,
    neps_construct,
    neps_walks,
    walk_count_power,
)
from diagwalks.errors import ArityMismatch, LengthTableTooShort, ProductTooLarge
from diagwalks.neps import (
    agreement_pattern,
    multinomial,
    vertex_index,
    vertex_tuple,
    walk_table,
    weak_compositions,
)


def test_basis_validation():
    with pytest.raises(ValueError):
        NepsBasis([])
    with pytest.raises(ValueError):
        NepsBasis([(0, 0)])
    with pytest.raises(ValueError):
        NepsBasis([(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        NepsBasis([(1, 0), (1,)])
    with pytest.raises(ValueError):
        NepsBasis([(2, 0)])


def test_basis_parse():
    assert NepsBasis.parse("11").tuples == ((1, 1),)
    assert NepsBasis.parse("10;01") == NepsBasis.standard(2)
    assert len(NepsBasis.parse("11;10;01")) == 3


def test_vertex_indexing_roundtrip():
    sizes = (3, 4, 2)
    for idx in range(24):
        assert vertex_index(vertex_tuple(idx, sizes), sizes) == idx
    # leftmost factor most significant
    assert vertex_tuple(0, sizes) == (0, 0, 0)
    assert vertex_tuple(23, sizes) == (2, 3, 1)


def test_kronecker_product_construction():
    g = neps_construct([complete_graph(3), complete_graph(4)], NepsBasis([(1, 1)]))
    assert g.n == 12
    assert all(g.out_degree(v) == 6 for v in range(12))


def test_unary_neps_is_identity():
    k5 = complete_graph(5)
    g = neps_construct([k5], NepsBasis([(1,)]))
    assert (g.adj == k5.adj).all()


def test_rooks_graph():
    g = neps_construct(
        [complete_graph(3), complete_graph(3)], NepsBasis.standard(2)
    )
    assert g.n == 9
    assert all(g.out_degree(v) == 4 for v in range(9))


def test_construct_errors():
    with pytest.raises(ArityMismatch):
        neps_construct([complete_graph(3)], NepsBasis([(1, 1)]))
    with pytest.raises(ProductTooLarge):
        neps_construct(
            [complete_graph(3), complete_graph(4)], NepsBasis([(1, 1)]), cap=10
        )


def test_single_tuple_basis_collapses_to_one_term():
    # basis {(1,1)}: the only column-sum vector is (r, r)
    tables = [[1, 0, 2, 2], [1, 0, 3, 6]]
    for r in range(4):
        assert neps_walks(tables, NepsBasis([(1, 1)]), r) == (
            tables[0][r] * tables[1][r]
        )


def test_zero_length_convention():
    basis = NepsBasis([(1, 1)])
    assert neps_walks([[1], [1]], basis, 0, pattern=(True, True)) == 1
    assert neps_walks([[0], [1]], basis, 0, pattern=(False, True)) == 0


def test_example_g1_closed_walks():
    sizes = [3, 4]
    basis = NepsBasis([(1, 1)])
    g = neps_construct([complete_graph(m) for m in sizes], basis)
    # closed 2-walks equal the degree: 6
    assert neps_complete_walks(sizes, basis, 2, (True, True)) == 6
    assert walk_count_power(g, 2, 0, 0) == 6


def test_example_g2_closed_walks():
    sizes = [3, 4]
    basis = NepsBasis([(1, 0), (0, 1)])
    g = neps_construct([complete_graph(m) for m in sizes], basis)
    # binomial expansion at r=2: 1*1*3 + 2*0*0 + 1*2*1 = 5
    assert neps_complete_walks(sizes, basis, 2, (True, True)) == 5
    assert walk_count_power(g, 2, 0, 0) == 5


def test_no_closed_walks_of_length_one():
    for sizes, basis in [
        ([3, 4], NepsBasis([(1, 1)])),
        ([3, 4], NepsBasis.standard(2)),
        ([2, 2, 2], NepsBasis([(1, 1, 1), (1, 0, 0)])),
    ]:
        assert neps_complete_walks(sizes, basis, 1, (True,) * len(sizes)) == 0


def test_single_factor_reduces_to_complete_walks():
    from diagwalks import complete_walks

    basis = NepsBasis([(1,)])
    for r in range(6):
        assert neps_complete_walks([5], basis, r, (True,)) == complete_walks(
            5, r, True
        )
        assert neps_complete_walks([5], basis, r, (False,)) == complete_walks(
            5, r, False
        )


def test_dp_equals_naive():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 3)
        tuples = [
            t
            for t in [
                tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(4)
            ]
            if any(t)
        ]
        if not tuples:
            continue
        basis = NepsBasis(set(tuples))
        r = rng.randint(0, 5)
        tables = [
            [1 if ell == 0 else rng.randint(0, 5) for ell in range(r + 1)]
            for _ in range(n)
        ]
        assert neps_walks(tables, basis, r, method="dp") == neps_walks(
            tables, basis, r, method="naive"
        )


def test_formula_matches_matrix_power_sampled():
    rng = random.Random(9)
    for sizes, basis in [
        ([3, 3], NepsBasis.standard(2)),
        ([3, 4], NepsBasis([(1, 1), (1, 0)])),
        ([2, 3, 4], NepsBasis([(1, 1, 1), (0, 1, 0), (1, 0, 1)])),
    ]:
        g = neps_construct([complete_graph(m) for m in sizes], basis)
        for r in range(5):
            for _ in range(10):
                i, j = rng.randrange(g.n), rng.randrange(g.n)
                pattern = agreement_pattern(sizes, i, j)
                assert neps_complete_walks(sizes, basis, r, pattern) == (
                    walk_count_power(g, r, i, j)
                )


def test_cartesian_sum_equals_standard_basis_neps():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(1, 3)
        r = rng.randint(0, 5)
        tables = [
            [1 if ell == 0 else rng.randint(0, 4) for ell in range(r + 1)]
            for _ in range(n)
        ]
        assert cartesian_sum_walks(tables, r) == neps_walks(
            tables, NepsBasis.standard(n), r
        )


def test_cartesian_sum_trivia():
    tables = [[1, 3, 9]]
    for r in range(3):
        assert cartesian_sum_walks(tables, r) == tables[0][r]
    # one step must move exactly one coordinate
    assert cartesian_sum_walks([[1, 0], [1, 0]], 1, (True, True)) == 0


def test_h23_common_neighbours():
    # rook's graph SRG(9,4,1,2): adjacent vertices share 1 common neighbour
    g = neps_construct(
        [complete_graph(3), complete_graph(3)], NepsBasis.standard(2)
    )
    assert cartesian_sum_walks(
        [[1, 0, 2], [0, 1, 1]], 2, (True, False)
    ) == 1
    assert walk_count_power(g, 2, 0, 1) == 1
    assert hamming_walks(2, 3, 2, (True, False)) == 1


def test_hamming_walks_trivia():
    assert hamming_walks(3, 4, 1, (True, True, False)) == 1
    assert hamming_walks(3, 4, 0, (True, True, True)) == 1
    assert hamming_walks(3, 4, 0, (True, False, True)) == 0


def test_hamming_pattern_permutation_invariance():
    for r in range(6):
        patterns = [
            (True, False, False),
            (False, True, False),
            (False, False, True),
        ]
        values = {hamming_walks(3, 4, r, pat) for pat in patterns}
        assert len(values) == 1


def test_hamming_matches_matrix_power():
    sizes = [4, 4, 4]
    g = neps_construct([complete_graph(4) for _ in sizes], NepsBasis.standard(3))
    for r in range(5):
        for i, j in [(0, 0), (0, 1), (0, 5), (0, 21)]:
            pattern = agreement_pattern(sizes, i, j)
            assert hamming_walks(3, 4, r, pattern) == walk_count_power(g, r, i, j)


def test_length_table_too_short():
    with pytest.raises(LengthTableTooShort):
        neps_walks([[1, 0]], NepsBasis([(1,)]), 2)


def test_weak_compositions_colex_and_count():
    comps = list(weak_compositions(3, 2))
    assert comps[0] == (3, 0)
    assert comps == sorted(comps, key=lambda c: tuple(reversed(c)))
    assert len(set(comps)) == len(comps) == 4
    assert all(sum(c) == 3 for c in comps)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(1, 4))
def test_multinomial_sums_to_power(total, parts):
    assert sum(multinomial(c) for c in weak_compositions(total, parts)) == (
        parts**total
    )


def test_walk_table_helper():
    g = complete_graph(4)
    assert walk_table(g, 0, 1, 3) == [0, 1, 2, 7]
    assert walk_table(g, 0, 0, 3) == [1, 0, 3, 6]
