import itertools

import pytest
from hypothesis import given, strategies as st

from planepartitions import (
    SliceSequence,
    contains,
    count_plane_partitions,
    diagonal_slices,
    enumerate_partitions,
    interlaces,
    make_partition,
    make_plane_partition,
    partitions_of,
    plane_partitions_of,
    skew_ssyt_series,
    unslice,
    volume,
)

FIGURE = ((5, 3, 2, 1), (4, 2, 1), (2, 1, 1), (1, 1))
FIGURE_SLICES = ((1,), (2, 1), (4, 1), (5, 2, 1), (3, 1), (2,), (1,))


# ---------------------------------------------------------------------------
# partitions

def test_make_partition_canonical():
    assert make_partition([5, 2, 1]) == (5, 2, 1)
    assert make_partition([2, 0, 0]) == (2,)
    assert make_partition([]) == ()


def test_make_partition_rejects_increase():
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, 0, 1])


def test_make_partition_rejects_negative():
    with pytest.raises(ValueError):
        make_partition([3, -1])


def test_interlacing_examples():
    assert interlaces((5, 2, 1), (3, 1))
    assert interlaces((), ())
    assert not interlaces((3, 3), (1,))
    assert interlaces((1,), ())
    assert not interlaces((1, 1), ())


def _is_horizontal_strip(mu, nu):
    """Independent oracle: nu inside mu with no column hit twice by mu/nu."""
    if not contains(mu, nu):
        return False
    columns = [
        j
        for i in range(len(mu))
        for j in range(nu[i] if i < len(nu) else 0, mu[i])
    ]
    return len(columns) == len(set(columns))


def test_interlacing_equals_horizontal_strip_characterization():
    basis = enumerate_partitions(6)
    for mu in basis:
        for nu in basis:
            assert interlaces(mu, nu) == _is_horizontal_strip(mu, nu), (mu, nu)


def _partitions_by_composition_filter(n):
    """Recurrence-free census: filter the 2^(n-1) compositions of n."""
    if n == 0:
        return [()]
    found = []

    def grow(left, prefix):
        if left == 0:
            found.append(tuple(prefix))
            return
        for first in range(1, left + 1):
            prefix.append(first)
            grow(left - first, prefix)
            prefix.pop()

    grow(n, [])
    return [c for c in found if all(c[i] >= c[i + 1] for i in range(len(c) - 1))]


def test_partition_counts_against_composition_filter():
    for n in range(11):
        expected = len(_partitions_by_composition_filter(n))
        assert sum(1 for _ in partitions_of(n)) == expected


def test_enumerate_partitions_small():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(2) == [(), (1,), (1, 1), (2,)]
    assert len(enumerate_partitions(4)) == 12


def test_enumerate_partitions_order_and_uniqueness():
    out = enumerate_partitions(7)
    assert len(out) == len(set(out))
    sizes = [sum(mu) for mu in out]
    assert sizes == sorted(sizes)
    for a, b in zip(out, out[1:]):
        if sum(a) == sum(b):
            assert a < b


# ---------------------------------------------------------------------------
# plane partitions

def test_make_plane_partition_figure():
    assert make_plane_partition([[5, 3, 2, 1], [4, 2, 1], [2, 1, 1], [1, 1]]) == FIGURE


def test_make_plane_partition_strips_zeros():
    assert make_plane_partition([[2, 0], [1], []]) == ((2,), (1,))
    assert make_plane_partition([]) == ()


def test_make_plane_partition_rejects_column_increase():
    with pytest.raises(ValueError, match="column"):
        make_plane_partition([[1], [2]])
    with pytest.raises(ValueError, match="column"):
        make_plane_partition([[2], [1, 1]])


def test_make_plane_partition_rejects_row_increase():
    with pytest.raises(ValueError, match="row"):
        make_plane_partition([[1, 2]])


def test_volume():
    assert volume(FIGURE) == 24
    assert volume(()) == 0
    assert volume(((1,),)) == 1


def test_slice_figure():
    assert diagonal_slices(FIGURE).slices == FIGURE_SLICES


def test_slice_degenerate():
    assert diagonal_slices(()).slices == ((),)
    assert diagonal_slices(((2,),)).slices == ((2,),)


def test_unslice_figure():
    assert unslice(SliceSequence(FIGURE_SLICES)) == FIGURE


def test_unslice_degenerate():
    assert unslice(SliceSequence(((),))) == ()
    assert unslice(SliceSequence(((1,), (3,), (1,)))) == ((3, 1), (1,))


def test_slice_sequence_rejects_even_length():
    with pytest.raises(ValueError, match="odd"):
        SliceSequence(((1,), (1,)))


def test_slice_sequence_rejects_broken_interlacing():
    with pytest.raises(ValueError, match="t=0"):
        SliceSequence(((1,), (1,), (2,)))
    # a lone diagonal (1,1) slice cannot come from any plane partition
    with pytest.raises(ValueError):
        SliceSequence(((1, 1),))


def test_slice_sequence_indexing_and_trim():
    seq = SliceSequence(((), (1,), (1,)))
    assert seq[-1] == ()
    assert seq[0] == (1,)
    assert seq[1] == (1,)
    assert seq[5] == ()
    assert seq.trimmed().slices == seq.slices  # right end nonzero, nothing to trim
    padded = SliceSequence(((), (2,), ()))
    assert padded.trimmed().slices == ((2,),)


def test_round_trip_census_volume_at_most_8():
    census = 0
    for n in range(9):
        for pi in plane_partitions_of(n):
            seq = diagonal_slices(pi)
            SliceSequence(seq.slices)  # re-runs the single-peak validation
            assert seq.total_size() == n
            assert unslice(seq) == pi
            census += 1
    assert census == 342


def test_plane_partition_counts_small():
    assert count_plane_partitions(0) == 1
    assert count_plane_partitions(2) == 3
    assert [count_plane_partitions(n) for n in range(9)] == [1, 1, 3, 6, 13, 24, 48, 86, 160]


def test_plane_partition_listing_is_deterministic_and_valid():
    first = list(plane_partitions_of(5))
    second = list(plane_partitions_of(5))
    assert first == second
    assert len(first) == len(set(first))
    for pi in first:
        assert make_plane_partition(pi) == pi
        assert volume(pi) == 5


def test_listing_of_volume_two():
    assert set(plane_partitions_of(2)) == {((2,),), ((1, 1),), ((1,), (1,))}


# ---------------------------------------------------------------------------
# skew tableau census

def test_ssyt_single_box():
    assert skew_ssyt_series((1,), (), (1,), 8).coeffs == (0, 1, 0, 0, 0, 0, 0, 0)


def test_ssyt_column_needs_distinct_entries():
    assert skew_ssyt_series((1, 1), (), (1,), 8).is_zero()


def test_ssyt_two_standard_fillings():
    assert skew_ssyt_series((2, 1), (), (0, 0), 8) == 2


def test_ssyt_rejects_bad_shape():
    with pytest.raises(ValueError):
        skew_ssyt_series((1,), (2,), (1,), 8)


def test_ssyt_skew_shape_by_hand():
    # shape (2,1)/(1): two disconnected boxes filled independently from {1,2},
    # so weights (1,2) give (q+q^2)^2
    f = skew_ssyt_series((2, 1), (1,), (1, 2), 8)
    assert f.coeffs == (0, 0, 1, 2, 1, 0, 0, 0)


# ---------------------------------------------------------------------------
# property tests

partitions_st = st.lists(st.integers(1, 5), max_size=5).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


@given(partitions_st, partitions_st)
def test_interlacing_matches_strip_oracle(mu, nu):
    assert interlaces(mu, nu) == _is_horizontal_strip(mu, nu)


@st.composite
def plane_partitions_st(draw, max_rows=4, max_cols=4, max_height=4):
    rows = []
    bound = (max_height,) * max_cols
    for _ in range(draw(st.integers(0, max_rows))):
        row = []
        prev = None
        for j in range(len(bound)):
            cap = bound[j] if prev is None else min(bound[j], prev)
            v = draw(st.integers(0, cap))
            if v == 0:
                break
            row.append(v)
            prev = v
        if not row:
            break
        rows.append(tuple(row))
        bound = tuple(row)
    return make_plane_partition(rows)


@given(plane_partitions_st())
def test_slicing_round_trip(pi):
    seq = diagonal_slices(pi)
    assert seq.total_size() == volume(pi)
    assert unslice(seq) == pi


@given(plane_partitions_st())
def test_slices_interlace_single_peaked(pi):
    seq = diagonal_slices(pi)
    half = seq.half_width
    for t in range(-half - 1, half + 1):
        if t < 0:
            assert interlaces(seq[t + 1], seq[t])
        else:
            assert interlaces(seq[t], seq[t + 1])
