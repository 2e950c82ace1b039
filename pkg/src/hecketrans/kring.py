"""
The Grothendieck ring of finite-dimensional graded Hecke algebra modules,
written as the polynomial ring over Z in the Steinberg classes ``[Delta]``.

A monomial is a :class:`Multisegment`; the empty multisegment is the unit
(the trivial module of the rank-zero algebra).  ``jac_k`` and ``cojac_k`` are
the derivations determined by removing the first (resp. last) point of a
segment starting (resp. ending) at ``a``.
"""

from __future__ import annotations

import json
from collections import Counter
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from .scalar import Scalar, as_scalar
from .segments import (
    Multisegment, Segment, negate_conjugate, truncate_left, truncate_right,
)

__all__ = [
    "KElement", "k_multiply", "jac_k", "cojac_k", "hermitian_dual_k", "k_dimension",
]


class KElement:
    """Integer combination of multisegment monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Multisegment, int] | Iterable = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            acc[mono] += int(c)
        self.terms: dict[Multisegment, int] = {
            k: v for k, v in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if v
        }

    @classmethod
    def one(cls) -> KElement:
        return cls({Multisegment(): 1})

    @classmethod
    def zero(cls) -> KElement:
        return cls()

    @classmethod
    def monomial(cls, segments: Iterable[Segment] | Multisegment, coeff: int = 1) -> KElement:
        ms = segments if isinstance(segments, Multisegment) else Multisegment(segments)
        return cls({ms: coeff})

    @classmethod
    def segment(cls, seg: Segment) -> KElement:
        """The class ``[seg]``; the empty segment gives the unit."""
        return cls.monomial([seg])

    # -- ring structure -------------------------------------------------------

    def __iter__(self) -> Iterator[tuple[Multisegment, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, KElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: KElement) -> KElement:
        return KElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> KElement:
        return KElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: KElement) -> KElement:
        return self + (-other)

    def __mul__(self, other) -> KElement:
        if isinstance(other, int):
            return KElement({k: other * v for k, v in self.terms.items()})
        return k_multiply(self, other)

    def __rmul__(self, other) -> KElement:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def degrees(self) -> set[int]:
        return {mono.total_length for mono in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degree in degs)

    # -- text / json ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms.items():
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"KElement({self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": c, "monomial": [str(s) for s in mono]}
            for mono, c in self.terms.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict] | str) -> KElement:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            (Multisegment(Segment.parse(s) for s in entry["monomial"]), entry["coeff"])
            for entry in data
        )


def k_multiply(x: KElement, y: KElement) -> KElement:
    acc: Counter = Counter()
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            acc[m1.union(m2)] += c1 * c2
    return KElement(acc)


def _derivation(x: KElement, hits, cut) -> KElement:
    acc: Counter = Counter()
    for mono, c in x.terms.items():
        for seg, mult in mono.counts().items():
            if not hits(seg):
                continue
            segs = list(mono.segments)
            segs.remove(seg)
            segs.append(cut(seg))
            acc[Multisegment(segs)] += c * mult
    return KElement(acc)


def jac_k(a, x: KElement) -> KElement:
    """Derivation sending ``[Delta]`` to ``[Delta minus its start]`` when Delta starts at ``a``."""
    a = as_scalar(a)
    return _derivation(x, lambda seg: seg.start == a, truncate_left)


def cojac_k(a, x: KElement) -> KElement:
    """Derivation sending ``[Delta]`` to ``[Delta minus its end]`` when Delta ends at ``a``."""
    a = as_scalar(a)
    return _derivation(x, lambda seg: seg.end == a, truncate_right)


def hermitian_dual_k(x: KElement) -> KElement:
    return KElement(
        (Multisegment(negate_conjugate(s) for s in mono), c)
        for mono, c in x.terms.items()
    )


def k_dimension(x: KElement) -> int:
    """Dimension of a virtual module: a product of Steinbergs on segments of
    lengths l_1..l_r has dimension (l_1 + ... + l_r)! / (l_1! ... l_r!)."""
    total = 0
    for mono, c in x.terms.items():
        lengths = [len(s) for s in mono]
        total += c * (factorial(sum(lengths)) // prod(factorial(l) for l in lengths))
    return total
