"""
Segments ``[a, b] = {a, a+1, ..., b}`` in the Gaussian rationals, and
multisegments (finite multisets of nonempty segments).

Every ``[a, b]`` with ``b - a`` a negative integer collapses to the single
:data:`EMPTY` value.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyInput, NonIntegralDifference, ParseError
from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "Segment", "EMPTY", "Multisegment", "make_segment", "truncate_left",
    "truncate_right", "negate_conjugate", "integral_difference",
]


def integral_difference(a: Scalar, b: Scalar) -> Optional[int]:
    """Return ``b - a`` as an int if it is an integer, else None."""
    d = as_scalar(b) - as_scalar(a)
    if not d.is_integer():
        return None
    return int(d.re)


@dataclass(frozen=True)
class Segment:
    start: Optional[Scalar] = None
    end: Optional[Scalar] = None

    def __post_init__(self):
        if (self.start is None) != (self.end is None):
            raise ValueError("a segment has both endpoints or neither")
        if self.start is not None:
            object.__setattr__(self, "start", as_scalar(self.start))
            object.__setattr__(self, "end", as_scalar(self.end))
            d = integral_difference(self.start, self.end)
            if d is None:
                raise NonIntegralDifference(f"{self.end} - {self.start} is not an integer")
            if d < 0:
                raise ValueError("use make_segment to build possibly-empty segments")

    @property
    def is_empty(self) -> bool:
        return self.start is None

    def __len__(self) -> int:
        if self.start is None:
            return 0
        return integral_difference(self.start, self.end) + 1

    def points(self) -> list[Scalar]:
        if self.start is None:
            return []
        return [self.start + k for k in range(len(self))]

    def sort_key(self) -> tuple:
        return (self.start.re, self.start.im, self.end.re)

    def __str__(self) -> str:
        if self.start is None:
            return "[]"
        return f"[{self.start},{self.end}]"

    def __repr__(self) -> str:
        return f"Segment('{self}')"

    @classmethod
    def parse(cls, text: str) -> Segment:
        s = "".join(str(text).split())
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"bad segment {text!r}")
        body = s[1:-1]
        if not body:
            return EMPTY
        parts = body.split(",")
        if len(parts) != 2:
            raise ParseError(f"bad segment {text!r}")
        return make_segment(Scalar.parse(parts[0]), Scalar.parse(parts[1]))


EMPTY = Segment()


def make_segment(a, b) -> Segment:
    a, b = as_scalar(a), as_scalar(b)
    d = integral_difference(a, b)
    if d is None:
        raise NonIntegralDifference(f"{b} - {a} is not an integer")
    if d < 0:
        return EMPTY
    return Segment(a, b)


def truncate_left(seg: Segment) -> Segment:
    """``[a, b] -> [a+1, b]``."""
    if seg.is_empty:
        raise EmptyInput("cannot truncate the empty segment")
    return make_segment(seg.start + ONE, seg.end)


def truncate_right(seg: Segment) -> Segment:
    """``[a, b] -> [a, b-1]``."""
    if seg.is_empty:
        raise EmptyInput("cannot truncate the empty segment")
    return make_segment(seg.start, seg.end - ONE)


def negate_conjugate(seg: Segment) -> Segment:
    """``[a, b] -> [-conj(b), -conj(a)]``."""
    if seg.is_empty:
        return EMPTY
    return Segment(-seg.end.conjugate(), -seg.start.conjugate())


class Multisegment:
    """A multiset of nonempty segments, kept in canonical sorted order.

    Empty segments passed to the constructor are dropped.
    """

    __slots__ = ("segments", "_hash")

    def __init__(self, segments: Iterable[Segment] = ()):
        segs = tuple(sorted((s for s in segments if not s.is_empty), key=Segment.sort_key))
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "_hash", hash(segs))

    def __setattr__(self, name, value):
        raise AttributeError("Multisegment is immutable")

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Multisegment) -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return tuple(s.sort_key() for s in self.segments)

    @property
    def total_length(self) -> int:
        return sum(len(s) for s in self.segments)

    def counts(self) -> Counter:
        return Counter(self.segments)

    def union(self, other: Multisegment) -> Multisegment:
        return Multisegment(self.segments + other.segments)

    def replace(self, index: int, seg: Segment) -> Multisegment:
        """Swap the segment at ``index`` for ``seg`` (dropped if empty)."""
        segs = list(self.segments)
        segs[index] = seg
        return Multisegment(segs)

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.segments) + "}"

    def __repr__(self) -> str:
        return f"Multisegment('{self}')"

    @classmethod
    def parse(cls, text: str) -> Multisegment:
        s = "".join(str(text).split())
        if not (s.startswith("{") and s.endswith("}")):
            raise ParseError(f"bad multisegment {text!r}")
        body = s[1:-1]
        if not body:
            return cls()
        pieces = []
        depth_start = None
        for k, ch in enumerate(body):
            if ch == "[":
                depth_start = k
            elif ch == "]":
                if depth_start is None:
                    raise ParseError(f"bad multisegment {text!r}")
                pieces.append(Segment.parse(body[depth_start:k + 1]))
                depth_start = None
        return cls(pieces)
