import pickle
from fractions import Fraction

import pytest
from hypothesis import given

from hecketrans import EMPTY, Multisegment, Scalar, Segment, make_segment
from hecketrans.errors import EmptyInput, NonIntegralDifference, ParseError
from hecketrans.segments import negate_conjugate, truncate_left, truncate_right

from conftest import scalars, segments


@pytest.mark.parametrize("text, re, im", [
    ("3", 3, 0),
    ("-1/2", Fraction(-1, 2), 0),
    ("i", 0, 1),
    ("-3/2i", 0, Fraction(-3, 2)),
    ("1/2+i", Fraction(1, 2), 1),
    ("1/2 + 1/3 i", Fraction(1, 2), Fraction(1, 3)),
    ("4/6-2i", Fraction(2, 3), -2),
])
def test_parse(text, re, im):
    s = Scalar.parse(text)
    assert (s.re, s.im) == (re, im)


@pytest.mark.parametrize("text", ["", "x", "1/2+", "1.5", "2j", "1/2+1/3"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        Scalar.parse(text)


def test_canonical_form():
    assert str(Scalar("6", "-4")) == "6-4i"
    assert str(Scalar(Fraction(4, -6))) == "-2/3"
    assert str(Scalar(0, Fraction(1, 2))) == "1/2i"


@given(scalars)
def test_text_roundtrip(s):
    assert Scalar.parse(str(s)) == s
    assert pickle.loads(pickle.dumps(s)) == s


@given(scalars, scalars)
def test_field_axioms(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
    if b:
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_real_scalars_hash_like_numbers():
    assert hash(Scalar(3)) == hash(3)
    assert Scalar("1/2") == Fraction(1, 2)
    assert len({Scalar(1), Scalar(1, 0), Scalar.parse("2/2")}) == 1


def test_ordering_is_total():
    xs = [Scalar(1, 1), Scalar(0, 5), Scalar(1, -1), Scalar(-1)]
    assert sorted(xs) == [Scalar(-1), Scalar(0, 5), Scalar(1, -1), Scalar(1, 1)]


# -- segments -----------------------------------------------------------------


def test_make_segment_examples():
    assert len(make_segment(Fraction(1, 2), Fraction(5, 2))) == 3
    assert make_segment(Fraction(3, 2), Fraction(1, 2)) is EMPTY
    with pytest.raises(NonIntegralDifference):
        make_segment(0, Fraction(1, 3))
    with pytest.raises(NonIntegralDifference):
        make_segment(Scalar(0, 1), Scalar(1))


def test_all_negative_lengths_share_one_empty():
    assert make_segment(5, 1) == make_segment(0, -1) == EMPTY == Segment.parse("[]")
    assert len(EMPTY) == 0 and EMPTY.points() == []


def test_truncations():
    seg = Segment.parse("[1/2,3/2]")
    assert truncate_left(seg) == Segment.parse("[3/2,3/2]")
    assert truncate_right(seg) == Segment.parse("[1/2,1/2]")
    assert truncate_left(Segment.parse("[1/2,1/2]")) is EMPTY
    assert truncate_right(Segment.parse("[i,i]")) is EMPTY
    for f in (truncate_left, truncate_right):
        with pytest.raises(EmptyInput):
            f(EMPTY)


def test_negate_conjugate_examples():
    assert negate_conjugate(Segment.parse("[1/2,3/2]")) == Segment.parse("[-3/2,-1/2]")
    # [i-1, i+1] -> [-conj(i+1), -conj(i-1)] = [-1+i, 1+i]
    assert negate_conjugate(Segment.parse("[-1+i,1+i]")) == Segment.parse("[-1+i,1+i]")
    assert negate_conjugate(Segment.parse("[i,1+i]")) == Segment.parse("[-1+i,i]")
    assert negate_conjugate(EMPTY) is EMPTY


@given(segments)
def test_segment_properties(seg):
    assert negate_conjugate(negate_conjugate(seg)) == seg
    assert len(truncate_left(seg)) == len(seg) - 1
    assert len(truncate_right(seg)) == len(seg) - 1
    assert seg.points()[0] == seg.start and seg.points()[-1] == seg.end
    assert Segment.parse(str(seg)) == seg


# -- multisegments ------------------------------------------------------------


def test_multisegment_canonical_order():
    a = Multisegment.parse("{[1/2,3/2],[1/2,1/2],[-1,0],[1/2i,1/2i]}")
    b = Multisegment.parse("{[1/2i,1/2i],[1/2,1/2],[-1,0],[1/2,3/2]}")
    assert a == b and hash(a) == hash(b)
    assert str(a) == "{[-1,0],[1/2i,1/2i],[1/2,1/2],[1/2,3/2]}"
    assert a.total_length == 6


def test_multisegment_drops_empties():
    ms = Multisegment([EMPTY, Segment.parse("[0,1]"), EMPTY])
    assert len(ms) == 1 and ms == Multisegment.parse("{[0,1]}")
    assert Multisegment.parse("{}") == Multisegment()


def test_multisegment_counts_multiplicity():
    ms = Multisegment.parse("{[0,1],[0,1],[2,2]}")
    assert ms.counts()[Segment.parse("[0,1]")] == 2
