"""Exact linear algebra: echelon forms, ranks, kernels, quotient maps.

Property-based over both coefficient fields with small random matrices;
every identity here is a standard rank/nullity fact, so the expected
values need no external oracle.
"""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from quiverhom import QQ, PrimeField
from quiverhom import linalg

GF5 = PrimeField(5)

FIELDS = st.sampled_from([QQ, GF5])


@st.composite
def matrix_and_field(draw, max_dim=5):
    F = draw(FIELDS)
    nrows = draw(st.integers(0, max_dim))
    ncols = draw(st.integers(0, max_dim))
    rows = [
        [F.of(draw(st.integers(-4, 4))) for _ in range(ncols)] for _ in range(nrows)
    ]
    return F, rows, ncols


@given(matrix_and_field())
def test_rref_is_idempotent(data):
    F, rows, ncols = data
    echelon, pivots = linalg.rref(rows, ncols, F)
    again, pivots2 = linalg.rref(echelon, ncols, F)
    assert again == echelon
    assert pivots2 == pivots


@given(matrix_and_field())
def test_rref_preserves_rowspace(data):
    F, rows, ncols = data
    echelon, pivots = linalg.rref(rows, ncols, F)
    for row in rows:
        reduced = linalg.reduce_mod_rowspace(row, echelon, pivots, F)
        assert all(F.is_zero(x) for x in reduced)
    assert linalg.rowspaces_equal(rows, echelon, ncols, F)


@given(matrix_and_field())
def test_rank_transpose_invariant(data):
    F, rows, ncols = data
    assert linalg.rank(rows, ncols, F) == linalg.rank(
        linalg.transpose(rows, ncols), len(rows), F
    )


@given(matrix_and_field())
def test_left_kernel_annihilates_and_fills_nullity(data):
    F, rows, ncols = data
    ker = linalg.left_kernel(rows, ncols, F)
    for y in ker:
        image = linalg.vec_mat(y, rows, ncols, F)
        assert all(F.is_zero(x) for x in image)
    assert len(ker) + linalg.rank(rows, ncols, F) == len(rows)
    assert linalg.rank(ker, len(rows), F) == len(ker)


@given(matrix_and_field())
def test_right_kernel_annihilates_and_fills_nullity(data):
    F, rows, ncols = data
    ker = linalg.right_kernel(rows, ncols, F)
    for x in ker:
        for row in rows:
            dot = F.zero
            for a, b in zip(row, x):
                dot = F.add(dot, F.mul(a, b))
            assert F.is_zero(dot)
    assert len(ker) + linalg.rank(rows, ncols, F) == ncols


@given(matrix_and_field())
def test_quotient_projection_kills_exactly_the_rowspace(data):
    F, rows, ncols = data
    echelon, pivots = linalg.rref(rows, ncols, F)
    proj = linalg.quotient_projection(echelon, pivots, ncols, F)
    qdim = ncols - len(pivots)
    assert len(proj) == ncols and all(len(r) == qdim for r in proj)
    for row in echelon:
        assert all(F.is_zero(x) for x in linalg.vec_mat(row, proj, qdim, F))
    assert linalg.rank(proj, qdim, F) == qdim


@settings(max_examples=60)
@given(matrix_and_field(max_dim=4), st.data())
def test_mat_mul_is_associative(data, draw):
    F, A, k = data
    m = draw.draw(st.integers(0, 4))
    n = draw.draw(st.integers(0, 4))
    B = [[F.of(draw.draw(st.integers(-3, 3))) for _ in range(m)] for _ in range(k)]
    C = [[F.of(draw.draw(st.integers(-3, 3))) for _ in range(n)] for _ in range(m)]
    left = linalg.mat_mul(linalg.mat_mul(A, B, m, F), C, n, F)
    right = linalg.mat_mul(A, linalg.mat_mul(B, C, n, F), n, F)
    assert left == right


@given(matrix_and_field())
def test_rowspace_membership_and_coords(data):
    F, rows, ncols = data
    space = linalg.RowSpace(rows, ncols, F)
    assert space.dim == linalg.rank(rows, ncols, F)
    for row in rows:
        assert space.contains(row)
        coeffs = space.coords(row)
        rebuilt = [F.zero] * ncols
        for c, orig in zip(coeffs, rows):
            rebuilt = linalg.vec_add(rebuilt, linalg.vec_scale(c, orig, F), F)
        assert rebuilt == list(row)
    outside = [F.one] + [F.zero] * (ncols - 1) if ncols else []
    if ncols and not space.contains(outside):
        assert space.coords(outside) is None


@given(matrix_and_field())
def test_rowspace_intersection_with_coordinate_block(data):
    F, rows, ncols = data
    keep_set = set(range(ncols // 2))
    inter, _ = linalg.rowspace_intersect_coords(rows, ncols, keep_set, F)
    space = linalg.RowSpace(rows, ncols, F)
    for v in inter:
        assert space.contains(v)
        for j, x in enumerate(v):
            if j not in keep_set:
                assert F.is_zero(x)


def test_rref_canonical_form_small_case():
    # pivots are 1 with cleared columns, rows ordered by pivot position
    rows = [
        [Fraction(2), Fraction(4), Fraction(2)],
        [Fraction(1), Fraction(2), Fraction(3)],
    ]
    echelon, pivots = linalg.rref(rows, 3, QQ)
    assert pivots == [0, 2]
    assert echelon == [
        [Fraction(1), Fraction(2), Fraction(0)],
        [Fraction(0), Fraction(0), Fraction(1)],
    ]


def test_prime_field_reduction_differs_from_rationals():
    rows = [[5, 10], [1, 3]]
    assert linalg.rank(rows, 2, GF5) == 1
    rows_q = [[Fraction(5), Fraction(10)], [Fraction(1), Fraction(3)]]
    assert linalg.rank(rows_q, 2, QQ) == 2
