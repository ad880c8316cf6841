import pytest

from diagwalks import (
    DiagonalSystem,
    brute_force_count,
    brute_force_distribution,
    build_field,
    convolution_count,
    convolution_distribution,
    count_all_formula,
    count_nonzero_formula,
    kth_power_residues,
    walk_solution_count,
)
from diagwalks.errors import BadParameters, EnumerationTooLarge, KNotInteger
from diagwalks.field import FiniteField


def test_spot_values_f9():
    # pre-verified with a standalone enumeration before the build
    assert count_nonzero_formula(3, 1, 2, 1, 2) == 4
    assert count_all_formula(3, 1, 2, 0, 2) == 17


def test_n1_residue_membership(roster_systems):
    system = roster_systems[(3, 1, 2)]
    residues = kth_power_residues(system.field, system.k)
    for alpha in range(9):
        expect = system.k if alpha in residues else 0
        assert system.count_nonzero(alpha, 1) == expect


def test_nonsquare_has_no_single_term_solution(roster_systems):
    system = roster_systems[(3, 1, 2)]
    nonsquares = set(range(1, 9)) - set(
        kth_power_residues(system.field, 2).indices
    )
    for nu in nonsquares:
        assert system.count_nonzero(nu, 1) == 0


def test_m1_zero_has_only_trivial_solution(roster_systems):
    for system in roster_systems.values():
        assert system.count_all(0, 1) == 1


def test_k_not_integer():
    with pytest.raises(KNotInteger) as excinfo:
        DiagonalSystem(2, 1, 2)
    assert excinfo.value.report is not None
    assert not excinfo.value.report.k_integer


def test_bad_parameters():
    with pytest.raises(BadParameters):
        DiagonalSystem(3, 1, 1)


def test_brute_force_r0(f9):
    assert brute_force_count(f9, 2, 0, 0) == 1
    assert brute_force_count(f9, 2, 1, 0) == 0


def test_brute_force_frozen_values(f9):
    assert brute_force_count(f9, 2, 1, 2) == 4
    assert brute_force_count(f9, 2, 0, 2) == 16


def test_enumeration_cap(f9):
    with pytest.raises(EnumerationTooLarge):
        brute_force_distribution(f9, 2, 12, cap=1000)


def test_convolution_r1_is_f(f9):
    residues = kth_power_residues(f9, 2)
    for alpha in range(9):
        expect = 2 if alpha in residues else 0
        assert convolution_count(f9, 2, alpha, 1) == expect


def test_oracle_mass_conservation(f9, f25):
    for field, k in [(f9, 2), (f25, 3)]:
        q = field.q
        for r in range(4):
            conv = convolution_distribution(field, k, r, True)
            assert sum(conv) == (q - 1) ** r
            brute = brute_force_distribution(field, k, r, True)
            assert int(brute.sum()) == (q - 1) ** r
            full = convolution_distribution(field, k, r, False)
            assert sum(full) == q**r


def test_oracles_agree_f64(f64):
    assert brute_force_count(f64, 7, 1, 3) == convolution_count(f64, 7, 1, 3)
    brute = brute_force_distribution(f64, 7, 3, True)
    conv = convolution_distribution(f64, 7, 3, True)
    assert list(brute) == conv


def test_walk_solution_count_conventions(f9):
    assert walk_solution_count(f9, 2, 3, 3, 0) == 1
    assert walk_solution_count(f9, 2, 3, 5, 0) == 0
    residues = kth_power_residues(f9, 2)
    for y in range(9):
        expect = 2 if y in residues else 0
        assert walk_solution_count(f9, 2, 0, y, 1) == expect


def test_walk_bridge_example(f9):
    assert walk_solution_count(f9, 2, 0, 1, 2) == 4


def test_k_power_divides_counts(roster_systems):
    for system in roster_systems.values():
        for r in range(4):
            for alpha in range(0, system.q, max(1, system.q // 11)):
                assert system.count_nonzero(alpha, r) % system.k**r == 0


def test_pattern_dependence(roster_systems):
    # alphas whose zero patterns have equally many zeros get equal counts
    for system in roster_systems.values():
        by_zeros = {}
        for alpha in range(system.q):
            z = sum(system.view.pattern_idx(alpha))
            by_zeros.setdefault(z, []).append(alpha)
        for r in range(4):
            for alphas in by_zeros.values():
                counts = {system.count_nonzero(alpha, r) for alpha in alphas}
                assert len(counts) == 1


def test_convolution_recurrence(roster_systems):
    # N_{r+1}(alpha) = sum over beta in R_k of k * N_r(alpha - beta)
    for key in [(3, 1, 2), (2, 2, 3)]:
        system = roster_systems[key]
        field, k = system.field, system.k
        residues = kth_power_residues(field, k)
        for r in range(3):
            for alpha in range(system.q):
                total = sum(
                    k * system.count_nonzero(field.sub_idx(alpha, beta), r)
                    for beta in residues.indices
                )
                assert system.count_nonzero(alpha, r + 1) == total


def test_partition_identities(roster_systems):
    for system in roster_systems.values():
        q = system.q
        for n in range(4):
            assert sum(
                system.count_nonzero(alpha, n) for alpha in range(q)
            ) == (q - 1) ** n
            assert sum(
                system.count_all(alpha, n) for alpha in range(q)
            ) == q**n


def _second_primitive(field: FiniteField) -> int:
    for idx in range(field.omega_idx + 1, field.q):
        if field._is_primitive(idx):
            return idx
    raise AssertionError("no second primitive element")


@pytest.mark.parametrize("p,a,b", [(3, 1, 2), (2, 2, 3)])
def test_representation_independence(p, a, b):
    system1 = DiagonalSystem(p, a, b)
    field2 = build_field(
        p, a * b, modulus=system1.field.modulus,
        omega=_second_primitive(system1.field),
    )
    system2 = DiagonalSystem(p, a, b, field=field2)
    assert system1.field.omega_idx != system2.field.omega_idx
    for r in range(4):
        for alpha in range(system1.q):
            assert system1.count_nonzero(alpha, r) == system2.count_nonzero(
                alpha, r
            )
            assert system1.count_all(alpha, r) == system2.count_all(alpha, r)


def test_nonzero_count_bounded(roster_systems):
    system = roster_systems[(5, 1, 2)]
    for r in range(4):
        for alpha in (0, 1, 7):
            assert 0 <= system.count_nonzero(alpha, r) <= (system.q - 1) ** r
