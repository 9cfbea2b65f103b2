"""Exact linear algebra over Q and F_p: rank, nullspace, determinant,
incremental span tracking.  The rational path uses fraction-free elimination,
so it is cross-checked here against a plain field-division oracle."""

from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import fractions
from virfock.linalg import SpanBuilder, det, nullspace, rank
from virfock.scalars import GF, QQ
from virfock.verma import verma_module


def oracle_rank(rows, ring):
    """Plain Gaussian elimination with field division; shares nothing with
    the fraction-free implementation under test."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ring.one() / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def matrices(nrows, ncols, entries=None):
    entries = entries or fractions(max_num=9, max_den=4)
    return st.lists(
        st.lists(entries, min_size=ncols, max_size=ncols),
        min_size=nrows,
        max_size=nrows,
    )


# -------------------------------------------------------------- knowns

def test_rank_of_identity_and_singular_matrix():
    one, two, four = Fraction(1), Fraction(2), Fraction(4)
    assert rank([[one, 0], [0, one]], QQ) == 2
    assert rank([[one, two], [two, four]], QQ) == 1
    assert rank([], QQ) == 0
    assert rank([[Fraction(0), Fraction(0)]], QQ) == 0


def test_determinant_examples():
    assert det([[Fraction(3), Fraction(1)], [Fraction(5, 2), Fraction(-3, 2)]], QQ) == -7
    assert det([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]], QQ) == 1
    f = GF(7)
    assert det([[f.of_int(3), f.of_int(1)], [f.of_fraction(Fraction(5, 2)), f.of_fraction(Fraction(-3, 2))]], f) == f.zero()


def test_nullspace_of_singular_matrix():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    (vec,) = nullspace(rows, QQ)
    assert all(sum(r * x for r, x in zip(row, vec)) == 0 for row in rows)


def test_elimination_rescales_rows_with_zero_leading_entry():
    # Regression: fraction-free elimination must rescale every row below the
    # pivot on every step, including rows whose lead in the pivot column is
    # zero; skipping them silently corrupts the later exact divisions.
    rows = [
        [Fraction(2), Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(1)],
        [Fraction(1), Fraction(1), Fraction(1)],
    ]
    assert rank(rows, QQ) == 3
    assert nullspace(rows, QQ) == []
    assert det(rows, QQ) == 1
    assert oracle_rank(rows, QQ) == 3


def test_rank_of_gram_matrix_that_exposed_the_zero_lead_bug():
    # Degree-4 contravariant Gram matrix at (c, h) = (1/2, 1/16): rank 2 with
    # a three-dimensional radical.  The skipped-rescale bug reported rank 5.
    mod = verma_module(Fraction(1, 2), Fraction(1, 16), QQ)
    gram = mod.gram_matrix(4)
    assert rank(gram.rows(), QQ) == 2
    assert len(nullspace(gram.rows(), QQ)) == 3


# ---------------------------------------------------------- properties

@given(matrices(4, 3))
def test_rank_matches_field_division_oracle(rows):
    assert rank(rows, QQ) == oracle_rank(rows, QQ)


@given(matrices(3, 5))
def test_wide_matrices_match_oracle(rows):
    assert rank(rows, QQ) == oracle_rank(rows, QQ)


@given(matrices(4, 4))
def test_nullspace_vectors_annihilate_and_count_corank(rows):
    basis = nullspace(rows, QQ)
    assert rank(rows, QQ) + len(basis) == 4
    for vec in basis:
        for row in rows:
            assert sum(r * x for r, x in zip(row, vec)) == 0


@given(matrices(3, 3), matrices(3, 3))
def test_determinant_is_multiplicative(a, b):
    prod = [
        [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    assert det(prod, QQ) == det(a, QQ) * det(b, QQ)


@given(matrices(4, 4))
def test_zero_determinant_iff_rank_deficient(rows):
    assert (det(rows, QQ) == 0) == (rank(rows, QQ) < 4)


@given(st.lists(st.lists(st.integers(0, 12), min_size=3, max_size=3), min_size=4, max_size=4), st.sampled_from([3, 5, 7]))
def test_prime_field_rank_matches_oracle(ints, p):
    ring = GF(p)
    rows = [[ring.of_int(x) for x in row] for row in ints]
    assert rank(rows, ring) == oracle_rank(rows, ring)


# ---------------------------------------------------------- SpanBuilder

def test_span_builder_tracks_dimension():
    sb = SpanBuilder(QQ)
    assert sb.add([Fraction(1), Fraction(0), Fraction(2)])
    assert sb.add([Fraction(0), Fraction(1), Fraction(0)])
    assert not sb.add([Fraction(2), Fraction(3), Fraction(4)])
    assert sb.dim == 2
    assert sb.contains([Fraction(1), Fraction(1), Fraction(2)])
    assert not sb.contains([Fraction(0), Fraction(0), Fraction(1)])


@given(matrices(5, 4))
def test_span_builder_dimension_equals_rank(rows):
    sb = SpanBuilder(QQ)
    for row in rows:
        sb.add(row)
    assert sb.dim == rank(rows, QQ)
