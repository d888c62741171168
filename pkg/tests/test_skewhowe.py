import pytest

from glcrystals.base import transpose
from glcrystals.core import is_morphism
from glcrystals.goldens import (LAMBDA_A, MATRIX_A, MATRIX_A_P, MATRIX_A_Q,
                                TABLEAU_P, TABLEAU_Q)
from glcrystals.matrices import (Reps, bit_matrices, bit_matrix,
                                 matrix_col_crystal, matrix_row_crystal)
from glcrystals.skewhowe import (cf_max, doubly_extreme_shape, duality_inv,
                                 duality_iso, phi_inv, phi_map, psi_inv,
                                 psi_map, re_max, rotate90, verify_agreement,
                                 verify_corollary, verify_counting)
from glcrystals.tableaux import shape_of


def all_small_dims(max_cells):
    for n in range(1, max_cells + 1):
        for m in range(1, max_cells + 1):
            if n * m <= max_cells:
                yield n, m


# ---------------------------------------------------------------------------
# extremal forms

def test_re_max_golden():
    assert re_max(MATRIX_A) == MATRIX_A_P


def test_cf_max_golden():
    assert cf_max(MATRIX_A) == MATRIX_A_Q


def test_extremal_fixed_points():
    assert re_max(MATRIX_A_P) == MATRIX_A_P
    assert cf_max(MATRIX_A_Q) == MATRIX_A_Q


def test_extremal_maps_commute():
    for n, m in all_small_dims(9):
        for N in range(n * m + 1):
            for M in bit_matrices(n, m, N):
                assert cf_max(re_max(M)) == re_max(cf_max(M))


def test_extremal_maps_are_path_independent():
    # greedy raising lands on the component's unique extreme element, so
    # the scan order cannot matter
    from glcrystals.core import component
    for n, m in ((2, 3), (3, 3)):
        row = matrix_row_crystal(n, m)
        col = matrix_col_crystal(n, m)
        for N in range(n * m + 1):
            for M in bit_matrices(n, m, N):
                assert re_max(M) == component(row, M, row.nodes()).highest
                assert cf_max(M) == component(col, M, col.nodes()).lowest


def test_doubly_extreme_shapes():
    assert doubly_extreme_shape(bit_matrix([[1, 1], [0, 0]])) == (2,)
    corner = cf_max(re_max(MATRIX_A))
    assert doubly_extreme_shape(corner) == LAMBDA_A
    assert [sum(row) for row in reversed(corner)] == [5, 3, 1]
    assert doubly_extreme_shape(bit_matrix([[1, 1], [1, 1]])) == (2, 2)
    with pytest.raises(ValueError):
        doubly_extreme_shape(MATRIX_A)


# ---------------------------------------------------------------------------
# tableau readings

def test_phi_golden():
    assert phi_map(MATRIX_A_P) == TABLEAU_P


def test_psi_golden():
    assert psi_map(MATRIX_A_Q) == TABLEAU_Q


def test_phi_inverse_exhaustive():
    for N in range(10):
        for M in bit_matrices(3, 3, N):
            if all(Reps(M, i) == 0 for i in (1, 2)):
                assert phi_inv(phi_map(M), 3, 3) == M


def test_psi_inverse_golden():
    assert psi_inv(TABLEAU_Q, 5, 3) == MATRIX_A_Q
    assert phi_inv(TABLEAU_P, 3, 5) == MATRIX_A_P


def test_phi_requires_highest():
    with pytest.raises(ValueError):
        phi_map(MATRIX_A)
    with pytest.raises(ValueError):
        psi_map(MATRIX_A)


def test_phi_is_column_structure_morphism():
    # the R-highest subset is closed under the C operators, so the reading
    # map is total on its domain
    from glcrystals.tableaux import tableau_crystal
    for n, m in all_small_dims(9):
        col = matrix_col_crystal(n, m)
        tab = tableau_crystal(n)
        for N in range(n * m + 1):
            highest = [M for M in bit_matrices(n, m, N)
                       if all(Reps(M, i) == 0 for i in range(1, m))]
            rep = is_morphism(phi_map, col, tab, highest)
            assert rep.ok, (n, m, N, rep.witness)


def test_psi_is_row_structure_morphism():
    from glcrystals.matrices import Cphi
    from glcrystals.tableaux import tableau_crystal
    for n, m in all_small_dims(9):
        row = matrix_row_crystal(n, m)
        tab = tableau_crystal(m)
        for N in range(n * m + 1):
            lowest = [M for M in bit_matrices(n, m, N)
                      if all(Cphi(M, j) == 0 for j in range(1, n))]
            rep = is_morphism(psi_map, row, tab, lowest)
            assert rep.ok, (n, m, N, rep.witness)


# ---------------------------------------------------------------------------
# the packaged isomorphism

def test_duality_golden_round_trip():
    pair = duality_iso(MATRIX_A)
    assert (pair.p_matrix, pair.q_matrix) == (MATRIX_A_P, MATRIX_A_Q)
    assert (pair.t_p, pair.t_q) == (TABLEAU_P, TABLEAU_Q)
    assert pair.lam == LAMBDA_A
    assert duality_inv(pair) == MATRIX_A


def test_duality_empty():
    M = bit_matrix([[0, 0], [0, 0]])
    pair = duality_iso(M)
    assert pair.lam == () and pair.t_p == () and pair.t_q == ()
    assert duality_inv(pair) == M


def test_duality_bijective_on_15():
    seen = {}
    for M in bit_matrices(2, 3, 2):
        pair = duality_iso(M)
        key = (pair.t_p, pair.t_q)
        assert key not in seen
        seen[key] = M
        assert shape_of(pair.t_q) == transpose(pair.lam)
        assert duality_inv(pair) == M
    assert len(seen) == 15
    assert verify_counting(2, 3, 2).ok


def test_transpose_shape_relation():
    for n, m in all_small_dims(12):
        for N in range(n * m + 1):
            for M in bit_matrices(n, m, N):
                pair = duality_iso(M)
                assert shape_of(pair.t_q) == transpose(shape_of(pair.t_p))


def test_counting_identity_small():
    for n in (2, 3, 4):
        for m in (2, 3, 4):
            for N in range(n * m + 1):
                assert verify_counting(n, m, N).ok


# ---------------------------------------------------------------------------
# rotation

def test_rotate90_single_one():
    assert rotate90(bit_matrix([[1, 0], [0, 0]])) == ((0, 0), (1, 0))
    assert rotate90(bit_matrix([[1, 1, 0], [0, 0, 1]])) == (
        (0, 1), (1, 0), (1, 0))


def test_rotate90_index_identity():
    M = MATRIX_A  # 3 x 5
    R = rotate90(M)
    rows, cols = 3, 5
    for k in range(1, cols + 1):
        for j in range(1, rows + 1):
            assert R[k - 1][j - 1] == M[j - 1][cols - k]


# ---------------------------------------------------------------------------
# agreement and its rotated form

def test_agreement_small_exhaustive():
    for n, m in ((2, 2), (3, 3)):
        for N in range(n * m + 1):
            rep = verify_agreement(n, m, N)
            assert rep.ok, rep.witness


def test_corollary_small_exhaustive():
    for N in range(7):
        rep = verify_corollary(2, 3, N)
        assert rep.ok, rep.witness


def test_budget_guard_on_verifiers():
    with pytest.raises(ValueError):
        verify_agreement(4, 4, 8, budget=10)
