"""Tests for exact rational linear algebra.

The independent oracle here is a deliberately naive Gaussian elimination
written directly with fractions.Fraction.  Reduced row echelon form is
unique, so the library result must match the naive result cell for cell.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fsprim.ratlinalg import (
    RatMatrix,
    image_basis,
    kernel_basis,
    kernel_basis_from_triplets,
    rank,
    solve_membership,
)

# ---------------------------------------------------------------- oracle


def oracle_rref(rows):
    """Textbook row reduction with Fraction arithmetic, first-nonzero pivoting."""
    rows = [list(map(Fraction, r)) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return [tuple(row) for row in rows], tuple(pivots)


small_frac = st.fractions(
    min_value=-6, max_value=6, max_denominator=4)

matrices = st.integers(min_value=0, max_value=5).flatmap(
    lambda m: st.integers(min_value=0, max_value=5).flatmap(
        lambda n: st.lists(
            st.lists(small_frac, min_size=n, max_size=n),
            min_size=m, max_size=m)))

# ------------------------------------------------------------ construction


def test_entries_are_fractions_and_dense():
    M = RatMatrix([[1, Fraction(2, 4), "3/2"], [0, -1, 2]])
    assert M.rows == 2 and M.cols == 3
    assert M.entries[0] == (Fraction(1), Fraction(1, 2), Fraction(3, 2))
    assert all(isinstance(x, Fraction) for row in M.entries for x in row)


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        RatMatrix([[0.5]])


def test_ragged_rows_rejected():
    with pytest.raises(AssertionError):
        RatMatrix([[1, 2], [3]])


def test_from_triplets_accumulates_duplicates():
    M = RatMatrix.from_triplets(2, 2, [(0, 0, 1), (0, 0, 2), (1, 1, 1), (1, 1, -1)])
    assert M == RatMatrix([[3, 0], [0, 0]])


def test_triplet_and_dense_construction_agree():
    dense = RatMatrix([[0, 1, 0], [2, 0, -3]])
    trips = RatMatrix.from_triplets(2, 3, [(0, 1, 1), (1, 0, 2), (1, 2, -3)])
    assert dense == trips
    assert dense.entries == trips.entries


def test_from_columns():
    M = RatMatrix.from_columns(3, [(1, 0, 0), (1, 1, 0)])
    assert M.entries == ((Fraction(1), Fraction(1)),
                         (Fraction(0), Fraction(1)),
                         (Fraction(0), Fraction(0)))


def test_identity_and_zeros():
    assert RatMatrix.identity(3).entries == RatMatrix(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]).entries
    assert RatMatrix.zeros(2, 3).is_zero()
    assert RatMatrix.identity(0).rows == 0


# ------------------------------------------------------------------ rref


def test_rref_matches_oracle_fixed():
    cases = [
        [[1, 2, 3], [2, 4, 6], [0, 1, 1]],
        [[0, 0], [0, 0]],
        [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 5)]],
        [[2, 0, 1], [0, 3, 1]],
    ]
    for rows in cases:
        R, piv = RatMatrix(rows).rref()
        exp_rows, exp_piv = oracle_rref(rows)
        assert piv == exp_piv
        assert list(R.entries) == exp_rows


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rref_matches_oracle(rows):
    M = RatMatrix(rows)
    R, piv = M.rref()
    exp_rows, exp_piv = oracle_rref(rows)
    assert piv == exp_piv
    assert list(R.entries) == exp_rows


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_transpose_invariant(rows):
    M = RatMatrix(rows)
    assert rank(M) == rank(M.transpose())
    assert rank(M) <= min(M.rows, M.cols)


# ---------------------------------------------------------------- kernel


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_kernel_basis_properties(rows):
    M = RatMatrix(rows)
    K = kernel_basis(M)
    assert K.rows == M.cols
    assert K.cols == M.cols - rank(M)
    if M.rows and K.cols:
        assert (M @ K).is_zero()
    assert rank(K) == K.cols
    unit = K.unit_rows()
    if K.cols:
        assert unit is not None
        for k, i in enumerate(unit):
            row = K.row(i)
            assert row[k] == 1 and all(x == 0 for j, x in enumerate(row) if j != k)


def test_kernel_of_zero_map_is_identity():
    K = kernel_basis(RatMatrix.zeros(0, 4))
    assert K.entries == RatMatrix.identity(4).entries
    K2 = kernel_basis(RatMatrix.zeros(3, 4))
    assert K2.entries == RatMatrix.identity(4).entries


def test_kernel_of_injective_map_is_empty():
    K = kernel_basis(RatMatrix([[1, 0], [0, 1], [1, 1]]))
    assert K.cols == 0 and K.rows == 2


def test_kernel_canonical_free_column_form():
    # x + y + z = 0: pivots {0}, free {1, 2}
    K = kernel_basis(RatMatrix([[1, 1, 1]]))
    assert K.entries == ((Fraction(-1), Fraction(-1)),
                         (Fraction(1), Fraction(0)),
                         (Fraction(0), Fraction(1)))
    assert K.unit_rows() == (1, 2)


def test_kernel_from_triplets_matches_dense():
    rows = [[1, 2, 0, 1], [0, 0, 1, -1]]
    trips = [(i, j, v) for i, r in enumerate(rows) for j, v in enumerate(r) if v]
    K1 = kernel_basis(RatMatrix(rows))
    K2 = kernel_basis_from_triplets(2, 4, trips)
    assert K1.entries == K2.entries
    assert K1.unit_rows() == K2.unit_rows()


# ----------------------------------------------------------------- image


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_image_basis_properties(rows):
    M = RatMatrix(rows)
    B = image_basis(M)
    assert B.rows == M.rows
    assert B.cols == rank(M)
    assert rank(B) == B.cols
    # every original column lies in the span of the basis
    for j in range(M.cols):
        assert solve_membership(B, M.column(j)) is not None
    # and every basis column lies in the span of the original columns
    for j in range(B.cols):
        assert solve_membership(M, B.column(j)) is not None


def test_image_basis_is_canonical_under_column_operations():
    M = RatMatrix([[1, 3], [2, 6], [0, 1]])
    # same column span presented differently (scaled, reordered, mixed)
    N = RatMatrix([[3, 2, 1], [6, 4, 2], [1, 0, 0]])
    assert image_basis(M).entries == image_basis(N).entries


def test_image_basis_idempotent():
    M = RatMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    B = image_basis(M)
    assert image_basis(B).entries == B.entries


# ------------------------------------------------------------ membership


def test_membership_in_identity_span_returns_vector():
    v = (Fraction(1), Fraction(-2), Fraction(3, 5))
    assert solve_membership(RatMatrix.identity(3), v) == v


def test_membership_repeated_column():
    S = RatMatrix([[1], [1]])
    assert solve_membership(S, (3, 3)) == (Fraction(3),)
    assert solve_membership(S, (3, 4)) is None


def test_membership_dimension_mismatch_is_error():
    with pytest.raises(AssertionError):
        solve_membership(RatMatrix.identity(3), (1, 2))


def test_membership_empty_span():
    S = RatMatrix.zeros(3, 0)
    assert solve_membership(S, (0, 0, 0)) == ()
    assert solve_membership(S, (0, 1, 0)) is None


@settings(max_examples=80, deadline=None)
@given(matrices, st.integers(min_value=0, max_value=10 ** 6))
def test_membership_certificates_are_exact(rows, seed):
    M = RatMatrix(rows)
    x = solve_membership(M, _pseudo_vector(M.rows, seed))
    v = _pseudo_vector(M.rows, seed)
    if x is None:
        # certify non-membership: adjoining v must raise the rank
        if M.rows:
            aug = M.hstack(RatMatrix.from_columns(M.rows, [v]))
            assert rank(aug) == rank(M) + 1
    else:
        assert len(x) == M.cols
        assert M.mul_vector(x) == v


def _pseudo_vector(n, seed):
    out = []
    state = seed
    for _ in range(n):
        state = (state * 1103515245 + 12345) % 2 ** 31
        out.append(Fraction(state % 7 - 3, 1 + state % 3))
    return tuple(out)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_membership_of_actual_combination(rows):
    M = RatMatrix(rows)
    if M.cols == 0 or M.rows == 0:
        return
    combo = M.mul_vector([Fraction(j - 1, 2) for j in range(M.cols)])
    x = solve_membership(M, combo)
    assert x is not None
    assert M.mul_vector(x) == combo


def test_membership_fast_path_and_generic_path_agree():
    # a kernel basis has unit rows (fast path); destroy them by row-scaling
    M = RatMatrix([[1, 1, 1, 0], [0, 1, 1, 1]])
    K = kernel_basis(M)
    assert K.unit_rows() is not None
    scaled = RatMatrix([[x * 2 for x in row] for row in K.entries])
    assert scaled.unit_rows() is None
    v = K.mul_vector((1, 2))
    x_fast = solve_membership(K, v)
    x_generic = solve_membership(scaled, tuple(2 * c for c in v))
    assert x_fast == (Fraction(1), Fraction(2))
    assert x_generic == (Fraction(1), Fraction(2))


# ------------------------------------------------------------- det & misc


def test_det_known_values():
    assert RatMatrix([[2, 1], [1, 1]]).det() == 1
    assert RatMatrix([[1, 2], [2, 4]]).det() == 0
    assert RatMatrix([[Fraction(1, 2)]]).det() == Fraction(1, 2)
    assert RatMatrix.identity(0).det() == 1
    assert RatMatrix.identity(4).det() == 1


def test_det_matches_permutation_expansion():
    from itertools import permutations
    rows = [[1, 2, 0], [Fraction(1, 2), 1, 3], [0, -1, 1]]
    M = RatMatrix(rows)
    total = Fraction(0)
    for perm in permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        term = Fraction(sign)
        for i in range(3):
            term *= rows[i][perm[i]]
        total += term
    assert M.det() == total


def test_det_not_defined_for_rectangular():
    with pytest.raises(AssertionError):
        RatMatrix([[1, 2, 3]]).det()


def test_mul_vector_matches_dense_dot():
    M = RatMatrix([[1, 2], [3, 4], [0, Fraction(1, 2)]])
    v = (Fraction(1, 3), 2)
    expected = tuple(
        sum((row[j] * Fraction(v[j]) for j in range(2)), Fraction(0))
        for row in M.entries)
    assert M.mul_vector(v) == expected


def test_matmul_and_transpose():
    A = RatMatrix([[1, 2], [0, 1]])
    B = RatMatrix([[1, 0, 1], [2, 1, 0]])
    assert (A @ B).entries == ((Fraction(5), Fraction(2), Fraction(1)),
                               (Fraction(2), Fraction(1), Fraction(0)))
    assert A.transpose().entries == ((Fraction(1), Fraction(0)),
                                     (Fraction(2), Fraction(1)))
    with pytest.raises(AssertionError):
        B @ A


def test_add_sub_scale():
    A = RatMatrix([[1, 2], [3, 4]])
    B = RatMatrix([[0, 1], [1, 0]])
    assert (A + B).entries == ((Fraction(1), Fraction(3)),
                               (Fraction(4), Fraction(4)))
    assert (A - A).is_zero()
    assert A.scale(Fraction(1, 2)).entries == (
        (Fraction(1, 2), Fraction(1)), (Fraction(3, 2), Fraction(2)))


def test_hstack():
    A = RatMatrix([[1], [2]])
    B = RatMatrix([[3, 4], [5, 6]])
    assert A.hstack(B).entries == ((Fraction(1), Fraction(3), Fraction(4)),
                                   (Fraction(2), Fraction(5), Fraction(6)))


def test_unit_rows_detection():
    assert RatMatrix([[0, 1], [1, 0], [2, 3]]).unit_rows() == (1, 0)
    assert RatMatrix([[1, 1], [0, 1]]).unit_rows() is None
    assert RatMatrix([[2, 0], [0, 1]]).unit_rows() is None
    assert RatMatrix.identity(3).unit_rows() == (0, 1, 2)


def test_rows_dict_round_trip():
    M = RatMatrix([[0, Fraction(1, 2)], [0, 0], [3, 0]])
    assert M.rows_dict() == {0: {1: Fraction(1, 2)}, 2: {0: Fraction(3)}}


def test_repeated_calls_are_deterministic():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0]]
    a = kernel_basis(RatMatrix(rows))
    b = kernel_basis(RatMatrix(rows))
    assert a.entries == b.entries
    assert image_basis(RatMatrix(rows)).entries == image_basis(RatMatrix(rows)).entries


def test_permute_rows():
    M = RatMatrix([[1, 2], [3, 4], [5, 6]])
    # Row i of M becomes row dest[i]: dest = (2, 0, 1).
    P = M.permute_rows((2, 0, 1))
    assert P.entries == ((Fraction(3), Fraction(4)),
                         (Fraction(5), Fraction(6)),
                         (Fraction(1), Fraction(2)))
    with pytest.raises(AssertionError):
        M.permute_rows((0, 0, 1))


def test_select_rows():
    M = RatMatrix([[1, 2], [3, 4], [5, 6]])
    S = M.select_rows((2, 0, 0))
    assert S.entries == ((Fraction(5), Fraction(6)),
                         (Fraction(1), Fraction(2)),
                         (Fraction(1), Fraction(2)))
    assert M.select_rows(()).rows == 0


def test_sparse_columns():
    M = RatMatrix([[0, Fraction(1, 2)], [0, 0], [3, 0]])
    assert M.sparse_columns() == {1: {0: Fraction(1, 2)}, 0: {2: Fraction(3)}}
