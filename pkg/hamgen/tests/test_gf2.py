import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hamgen_errors import SpanError, WidthMismatchError
from hamgen_gf2 import (
    EdgeVector,
    GF2Matrix,
    chain_matrix,
    combine,
    direct_sum_split,
    in_span,
    independent_indices,
    invert,
    invert_5x5,
    rank,
    span_elements,
    submatrix,
)


def unit(width, i):
    return EdgeVector.from_support(width, [i])


@st.composite
def vector_lists(draw, max_width=20, max_count=8):
    width = draw(st.integers(min_value=1, max_value=max_width))
    count = draw(st.integers(min_value=1, max_value=max_count))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=width, max_size=width),
            min_size=count,
            max_size=count,
        )
    )
    return [EdgeVector.from_bits(r) for r in rows]


def test_from_support_toggles_repeated_indices():
    v = EdgeVector.from_support(5, [1, 1, 2])
    assert v.support() == (2,)
    assert v.to_string() == "00100"
    with pytest.raises(IndexError):
        EdgeVector.from_support(3, [3])


def test_vectors_wider_than_one_word():
    v = EdgeVector.from_support(130, [0, 64, 129])
    assert v[64] == 1
    assert v[63] == 0
    assert v.weight() == 3
    assert (v + unit(130, 0)).lowest() == 64
    assert EdgeVector.zeros(130).lowest() is None
    assert EdgeVector.zeros(130).is_zero()


def test_mixed_widths_are_rejected():
    with pytest.raises(WidthMismatchError):
        unit(4, 0) + unit(5, 0)
    with pytest.raises(WidthMismatchError):
        rank([unit(4, 0), unit(5, 0)])


def test_rank_and_independent_indices():
    a, b = unit(4, 0), unit(4, 2)
    vectors = [a, a, b, a + b, EdgeVector.zeros(4)]
    assert rank(vectors) == 2
    assert independent_indices(vectors) == [0, 2]
    assert rank([]) == 0


def test_in_span_returns_coefficients_or_none():
    a = EdgeVector.from_bits([1, 1, 0, 0])
    b = EdgeVector.from_bits([0, 1, 1, 0])
    assert in_span(EdgeVector.from_bits([1, 0, 1, 0]), [a, b]) == [1, 1]
    assert in_span(EdgeVector.from_bits([0, 0, 0, 1]), [a, b]) is None
    assert in_span(EdgeVector.zeros(4), [a, b]) == [0, 0]


def test_combine_needs_width_when_empty():
    with pytest.raises(ValueError):
        combine([], [])
    assert combine([], [], width=3).is_zero()


@settings(max_examples=80, deadline=None)
@given(vector_lists(), st.data())
def test_in_span_certificate_reproduces_target(gens, data):
    picks = data.draw(st.lists(st.integers(0, 1), min_size=len(gens), max_size=len(gens)))
    target = combine(gens, picks)
    coefficients = in_span(target, gens)
    assert coefficients is not None
    assert combine(gens, coefficients) == target


@settings(max_examples=60, deadline=None)
@given(vector_lists(max_count=6))
def test_span_size_is_two_to_the_rank(gens):
    assert len(span_elements(gens)) == 2 ** rank(gens)


@settings(max_examples=60, deadline=None)
@given(vector_lists())
def test_rank_matches_independent_indices(gens):
    picked = independent_indices(gens)
    assert len(picked) == rank(gens)
    assert rank([gens[i] for i in picked]) == len(picked)
    assert rank(gens) <= min(len(gens), gens[0].width)


@settings(max_examples=80, deadline=None)
@given(vector_lists(max_width=16, max_count=8), st.data())
def test_direct_sum_split_properties(gens, data):
    picks = data.draw(st.lists(st.integers(0, 1), min_size=len(gens), max_size=len(gens)))
    u0 = combine(gens, picks)
    assume(not u0.is_zero())
    b0 = u0.lowest()

    w_gens, cert = direct_sum_split(gens, b0, u0)

    assert all(not w[b0] for w in w_gens)
    assert rank(w_gens) == rank(gens) - 1
    assert span_elements(w_gens + [u0]) == span_elements(gens)
    assert set(cert.replaced) == {i for i, g in enumerate(gens) if g[b0]}


def test_direct_sum_split_preconditions():
    a = EdgeVector.from_bits([1, 1, 0])
    with pytest.raises(SpanError):
        direct_sum_split([a], 2, a)
    with pytest.raises(SpanError):
        direct_sum_split([a], 5, a)
    with pytest.raises(SpanError):
        direct_sum_split([a], 0, EdgeVector.from_bits([1, 0, 0]))


def test_matrix_labels_and_validation():
    m = GF2Matrix.from_strings(["10", "01"], ["e1", "e2"], ["c1", "c2"])
    assert m.transpose().row_labels == ("c1", "c2")
    with pytest.raises(ValueError):
        GF2Matrix([[1, 0]], ["a", "b"])
    with pytest.raises(ValueError):
        GF2Matrix([[1, 0], [0, 1]], ["a", "a"])
    with pytest.raises(ValueError):
        GF2Matrix([1, 0, 1])


def test_diff_lists_differing_cells():
    a = GF2Matrix.from_strings(["10", "01"])
    b = GF2Matrix.from_strings(["11", "01"])
    assert a.diff(b) == [("r0", "c1", 0)]
    assert a.diff(GF2Matrix.identity(3)) == [("shape", (2, 2), (3, 3))]


def test_chain_matrix_puts_vectors_in_columns():
    m = chain_matrix([EdgeVector.from_bits([1, 0, 1]), EdgeVector.from_bits([0, 1, 1])])
    assert m.shape == (3, 2)
    assert m.row_strings() == ["10", "01", "11"]
    assert submatrix(m, [2, 0]).row_strings() == ["11", "10"]
    with pytest.raises(ValueError):
        chain_matrix([])


def test_invert_known_matrix_and_singular():
    m = GF2Matrix.from_strings(["110", "011", "001"])
    inv = invert(m)
    assert (m @ inv).same_bits(GF2Matrix.identity(3))
    assert invert(GF2Matrix.from_strings(["11", "11"])) is None
    with pytest.raises(ValueError):
        invert(GF2Matrix.from_strings(["110", "011"]))


def test_invert_5x5_checks_shape():
    with pytest.raises(ValueError):
        invert_5x5(GF2Matrix.identity(4))
    assert invert_5x5(GF2Matrix.identity(5)).same_bits(GF2Matrix.identity(5))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_invert_round_trips_on_random_matrices(k, seed):
    rows = np.random.default_rng(seed).integers(0, 2, size=(k, k))
    m = GF2Matrix(rows)
    inv = invert(m)
    full = rank([EdgeVector.from_bits(r) for r in rows]) == k
    assert (inv is not None) == full
    if inv is not None:
        assert (m @ inv).same_bits(GF2Matrix.identity(k))
        assert (inv @ m).same_bits(GF2Matrix.identity(k))


def test_matmul_shape_mismatch():
    with pytest.raises(WidthMismatchError):
        GF2Matrix.identity(2) @ GF2Matrix.identity(3)


def test_transpose_swaps_labels():
    m = GF2Matrix([[1, 0, 1]], row_labels=["a"], col_labels=["x", "y", "z"])
    t = m.transpose()
    assert t.shape == (3, 1)
    assert t.row_labels == ("x", "y", "z")
    assert t.col_labels == ("a",)
    with pytest.raises(ValueError):
        GF2Matrix([[1, 0]], col_labels=["x", "x"])
