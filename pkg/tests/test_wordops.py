import pytest
from hypothesis import given

from mta.wordops import (
    PaddingError,
    concat,
    convolve,
    count_nwords,
    deconvolve,
    drop_component,
    enumerate_nwords,
    insert_component,
    parse_columns,
    reverse,
    words_upto,
)

from strategies import nwords


def test_convolution_example():
    assert convolve(("ab", "a", "")) == (("a", "a", "_"), ("b", "_", "_"))
    assert convolve(("", "")) == ()


def test_deconvolve_rejects_symbol_after_pad():
    with pytest.raises(PaddingError) as err:
        deconvolve(parse_columns(["a_", "ab"]))
    assert (err.value.track, err.value.column) == (2, 2)


def test_deconvolve_rejects_all_pad_column():
    with pytest.raises(ValueError):
        deconvolve(parse_columns(["a_", "__"]))


def test_empty_word_needs_arity():
    with pytest.raises(ValueError):
        deconvolve(())
    assert deconvolve((), 3) == ("", "", "")


def test_enumeration_counts():
    assert count_nwords(2, 2, 2) == 49
    assert len(list(enumerate_nwords("ab", 2, 2))) == 49
    assert list(words_upto("ab", 1)) == ["", "a", "b"]


def test_component_ops():
    x = ("ab", "c")
    assert drop_component(x, 1) == ("c",)
    assert insert_component(("c",), 1, "ab") == x
    assert reverse(x) == ("ba", "c")
    assert concat(x, ("b", "")) == ("abb", "c")


@given(nwords(3, 5))
def test_round_trip_property(x):
    assert deconvolve(convolve(x), 3) == x


@given(nwords(2, 4), nwords(2, 4))
def test_reverse_anti_distributes(x, y):
    assert reverse(concat(x, y)) == concat(reverse(y), reverse(x))


@given(nwords(3, 3))
def test_drop_insert_inverse(x):
    for k in (1, 2, 3):
        assert insert_component(drop_component(x, k), k, x[k - 1]) == x
