import random
from functools import reduce

import pytest

from ncmotives.errors import CapExceededError, InvariantError
from ncmotives.exactlin import matrix_rank
from ncmotives.supers import SuperSpace
from ncmotives.schur import (
    Partition, partitions_of, standard_tableau_count, character_table_row,
    central_idempotent, young_symmetrizer, GroupAlgebraElement,
    tensor_power_action, group_element_action, schur_dimension,
    super_schur_value, rectangle_criterion, is_schur_finite,
    compose_perm,
)


def test_character_trivial_and_sign():
    row = character_table_row((4,))
    assert all(v == 1 for v in row.values())
    row = character_table_row((1, 1, 1))
    assert row[(3,)] == 1 and row[(2, 1)] == -1 and row[(1, 1, 1)] == 1


def test_character_2_1_explicit():
    row = character_table_row((2, 1))
    assert row[(1, 1, 1)] == 2
    assert row[(2, 1)] == 0
    assert row[(3,)] == -1


def test_character_identity_is_hook_count():
    for n in range(1, 7):
        for parts in partitions_of(n):
            row = character_table_row(parts)
            assert row[tuple([1] * n)] == standard_tableau_count(parts)


def test_character_orthogonality_n5():
    """First orthogonality of S_5 characters: an independent global check."""
    from math import factorial
    n = 5
    # sizes of conjugacy classes by cycle type
    def class_size(ct):
        total = factorial(n)
        div = 1
        counts = {}
        for l in ct:
            div *= l
            counts[l] = counts.get(l, 0) + 1
        for l, m in counts.items():
            div *= factorial(m)
        return total // div

    rows = {parts: character_table_row(parts) for parts in partitions_of(n)}
    for p1 in partitions_of(n):
        for p2 in partitions_of(n):
            s = sum(class_size(ct) * rows[p1][ct] * rows[p2][ct]
                    for ct in partitions_of(n))
            assert s == (factorial(n) if p1 == p2 else 0)


def test_character_cap():
    with pytest.raises(CapExceededError):
        character_table_row((9,))


def test_central_idempotent_n1_and_n2():
    c = central_idempotent((1,))
    assert c.coeffs == {(0,): 1}
    from fractions import Fraction
    c2 = central_idempotent((2,))
    assert c2.coeffs == {(0, 1): Fraction(1, 2), (1, 0): Fraction(1, 2)}
    c11 = central_idempotent((1, 1))
    assert c11.coeffs == {(0, 1): Fraction(1, 2), (1, 0): Fraction(-1, 2)}


def test_central_idempotents_orthogonal_and_complete():
    for n in range(2, 6):
        cs = [central_idempotent(p) for p in partitions_of(n)]
        for i, a in enumerate(cs):
            for j, b in enumerate(cs):
                prod = a * b
                assert prod == (a if i == j else
                                GroupAlgebraElement(n, {}))
        total = reduce(lambda x, y: x + y, cs)
        assert total.coeffs == {tuple(range(n)): 1}


def test_young_symmetrizer_idempotent_and_matching_rank():
    v = SuperSpace(2, 0)
    for parts in ((2,), (1, 1), (2, 1)):
        y = young_symmetrizer(parts)
        assert y * y == y
        n = sum(parts)
        # the (non-central) symmetrizer cuts one irreducible copy:
        # rank = s_lambda(v), while the central block cuts f^lambda copies
        ry = matrix_rank(group_element_action(v, y))
        rc = schur_dimension(parts, v, force_matrix=True)
        assert rc == standard_tableau_count(parts) * ry


def test_tensor_power_action_identity_and_signs():
    v = SuperSpace(0, 1)
    assert tensor_power_action(v, 2, (0, 1)).entries == {(0, 0): 1}
    assert tensor_power_action(v, 2, (1, 0)).entries == {(0, 0): -1}
    v = SuperSpace(1, 1)
    m = tensor_power_action(v, 2, (1, 0))
    negs = [k for k, val in m.entries.items() if val < 0]
    assert negs == [(3, 3)]


def test_tensor_power_action_is_homomorphism():
    rng = random.Random(17)
    v = SuperSpace(1, 1)
    perms3 = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 0, 1), (1, 2, 0), (2, 1, 0)]
    for _ in range(12):
        p = perms3[rng.randrange(6)]
        q = perms3[rng.randrange(6)]
        mp = tensor_power_action(v, 3, p)
        mq = tensor_power_action(v, 3, q)
        mpq = tensor_power_action(v, 3, compose_perm(p, q))
        assert mp * mq == mpq


def test_schur_dimension_classical_cases():
    assert schur_dimension((2,), SuperSpace(2, 0)) == 3     # Sym^2 Q^2
    assert schur_dimension((1, 1), SuperSpace(1, 0)) == 0   # Lambda^2 of a line
    assert schur_dimension((1, 1), SuperSpace(2, 0)) == 1
    assert schur_dimension((2, 1), SuperSpace(2, 0)) == 4   # f^lambda = 2 times 2
    assert schur_dimension((2,), SuperSpace(0, 1)) == 0     # Sym^2 of odd line
    assert schur_dimension((1, 1), SuperSpace(0, 1)) == 1


def test_schur_dimension_two_paths_agree():
    """Trace formula vs honest matrix rank vs hook Schur oracle."""
    spaces = [SuperSpace(a, b) for a in range(3) for b in range(3) if a + b]
    for n in range(1, 5):
        for parts in partitions_of(n):
            for v in spaces:
                trace_path = schur_dimension(parts, v)
                matrix_path = schur_dimension(parts, v, force_matrix=True)
                oracle = super_schur_value(parts, v)
                assert trace_path == matrix_path == oracle, (parts, tuple(v))


def test_rectangle_criterion_matches_vanishing():
    spaces = [SuperSpace(a, b) for a in range(3) for b in range(3) if a + b]
    for n in range(1, 5):
        for parts in partitions_of(n):
            for v in spaces:
                vanishes = schur_dimension(parts, v) == 0
                assert vanishes == rectangle_criterion(parts, v)


def test_is_schur_finite_minimal_partitions():
    assert is_schur_finite(SuperSpace(1, 0)).parts == (1, 1)
    assert is_schur_finite(SuperSpace(0, 1)).parts == (2,)
    assert is_schur_finite(SuperSpace(1, 1)).parts == (2, 2)
    assert is_schur_finite(SuperSpace(2, 0)).parts == (1, 1, 1)
    assert is_schur_finite(SuperSpace(2, 1)).parts == (2, 2, 2)
    assert is_schur_finite(SuperSpace(0, 2)).parts == (3,)


def test_schur_finite_transport_under_collapse():
    """If S_lambda kills a graded space it kills its super collapse: the
    annihilating partition transports along the collapse realization."""
    from ncmotives.supers import GradedSpace
    for dims in ({0: 1, 1: 1}, {0: 2}, {-1: 1, 2: 1}, {0: 1, 1: 1, 2: 1}):
        g = GradedSpace(dims)
        v = g.collapse()
        # graded space realized with everything in its parity
        lam = is_schur_finite(v, search_cap=10)
        assert schur_dimension(lam, v) == 0


def test_partition_validation():
    with pytest.raises(InvariantError):
        Partition((1, 2))
    with pytest.raises(InvariantError):
        Partition((2, 0))
