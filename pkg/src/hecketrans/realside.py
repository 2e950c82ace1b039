"""
Principal-series bookkeeping for GL(n, C).

A weight is a pair ``(lambdaL, lambdaR)`` of n-tuples with integral
difference ``mu = lambdaL - lambdaR``.  The Grothendieck group of the block is
free on principal-series symbols ``X(lambda)``; a symbol is identified with
all simultaneous permutations of its coordinate pairs, so symbols are stored
with the pairs sorted.

Indices ``i`` exposed by this module are 1-based, matching the usual
``e_1, ..., e_n`` notation.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import IndexOutOfRange, NonIntegralWeight
from .kring import KElement, cojac_k, jac_k
from .scalar import HALF, ONE, Scalar, as_scalar
from .segments import Multisegment, integral_difference, make_segment

__all__ = [
    "Direction", "Weight", "KHCElement", "integral_weyl_classes", "gamma_k",
    "translate_k", "multisegment_of", "weyl_orbit", "verify_kgroup_commutativity",
    "KCheckResult",
]


class Direction(enum.Enum):
    RAISE_RIGHT = "RaiseRight"
    LOWER_LEFT = "LowerLeft"

    @classmethod
    def parse(cls, text: str) -> Direction:
        key = text.replace("_", "").replace("-", "").lower()
        for d in cls:
            if d.value.lower() == key:
                return d
        raise ValueError(f"unknown direction {text!r}")


@dataclass(frozen=True)
class Weight:
    lambdaL: tuple[Scalar, ...]
    lambdaR: tuple[Scalar, ...]
    mu: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        left = tuple(as_scalar(x) for x in self.lambdaL)
        right = tuple(as_scalar(x) for x in self.lambdaR)
        if len(left) != len(right) or not left:
            raise ValueError("lambdaL and lambdaR must be nonempty and of equal length")
        mu = []
        for a, b in zip(left, right):
            d = integral_difference(b, a)
            if d is None:
                raise NonIntegralWeight(f"{a} - {b} is not an integer")
            mu.append(d)
        object.__setattr__(self, "lambdaL", left)
        object.__setattr__(self, "lambdaR", right)
        object.__setattr__(self, "mu", tuple(mu))

    @classmethod
    def of(cls, lambdaL: Iterable, lambdaR: Iterable) -> Weight:
        return cls(tuple(lambdaL), tuple(lambdaR))

    @property
    def n(self) -> int:
        return len(self.lambdaL)

    @property
    def nu(self) -> tuple[Scalar, ...]:
        return tuple(a + b for a, b in zip(self.lambdaL, self.lambdaR))

    @property
    def m_of(self) -> Optional[int]:
        """Sum of mu, defined only when every mu_k >= 0."""
        if any(x < 0 for x in self.mu):
            return None
        return sum(self.mu)

    def canonical(self) -> Weight:
        pairs = sorted(zip(self.lambdaL, self.lambdaR), key=lambda p: (p[0].key(), p[1].key()))
        return Weight(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    def segments(self):
        """``[lambdaR_k + 1/2, lambdaL_k - 1/2]`` for each k, possibly empty."""
        return [make_segment(r + HALF, l - HALF) for l, r in zip(self.lambdaL, self.lambdaR)]

    def shift(self, k: int, side: str, amount: int) -> Weight:
        """Add ``amount * e_k`` (k 1-based) to lambdaL (side 'L') or lambdaR ('R')."""
        if not 1 <= k <= self.n:
            raise IndexOutOfRange(f"index {k} outside 1..{self.n}")
        left, right = list(self.lambdaL), list(self.lambdaR)
        target = left if side == "L" else right
        target[k - 1] = target[k - 1] + amount
        return Weight(tuple(left), tuple(right))

    def permute_left(self, w: Sequence[int]) -> Weight:
        """``(w lambdaL, lambdaR)`` with ``(w lambdaL)_{w(j)} = lambdaL_j``, w 0-based one-line."""
        left = [None] * self.n
        for j, wj in enumerate(w):
            left[wj] = self.lambdaL[j]
        return Weight(tuple(left), self.lambdaR)

    def to_json(self) -> dict:
        return {
            "lambdaL": [str(x) for x in self.lambdaL],
            "lambdaR": [str(x) for x in self.lambdaR],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> Weight:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            tuple(Scalar.parse(x) for x in data["lambdaL"]),
            tuple(Scalar.parse(x) for x in data["lambdaR"]),
        )

    def __str__(self) -> str:
        left = ",".join(str(x) for x in self.lambdaL)
        right = ",".join(str(x) for x in self.lambdaR)
        return f"(({left}),({right}))"


class KHCElement:
    """Integer combination of principal-series symbols ``X(lambda)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | Iterable = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w.canonical()] += int(c)
        self.terms: dict[Weight, int] = {
            w: c for w, c in sorted(acc.items(), key=lambda kv: _weight_key(kv[0])) if c
        }

    @classmethod
    def symbol(cls, lam: Weight, coeff: int = 1) -> KHCElement:
        return cls({lam: coeff})

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KHCElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: KHCElement) -> KHCElement:
        return KHCElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> KHCElement:
        return KHCElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: KHCElement) -> KHCElement:
        return self + (-other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*X{w}" for w, c in self.terms.items())

    def __repr__(self) -> str:
        return f"KHCElement({self})"

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "weight": w.to_json()} for w, c in self.terms.items()]


def _weight_key(w: Weight) -> tuple:
    return tuple((a.key(), b.key()) for a, b in zip(w.lambdaL, w.lambdaR))


def _as_khc(x) -> KHCElement:
    return KHCElement.symbol(x) if isinstance(x, Weight) else x


def integral_weyl_classes(lambdaL: Sequence) -> list[list[int]]:
    """Partition of ``1..n`` into classes of coordinates with integral differences."""
    vals = [as_scalar(x) for x in lambdaL]
    classes: list[list[int]] = []
    for k, v in enumerate(vals, start=1):
        for cls_ in classes:
            if integral_difference(vals[cls_[0] - 1], v) is not None:
                cls_.append(k)
                break
        else:
            classes.append([k])
    return classes


def weyl_orbit(lam: Weight) -> list[tuple[int, ...]]:
    """Permutations ``w`` in W' (0-based one-line) giving distinct ``w lambdaL``."""
    classes = [[k - 1 for k in c] for c in integral_weyl_classes(lam.lambdaL)]
    seen = set()
    out = []
    for choice in itertools.product(*(itertools.permutations(c) for c in classes)):
        w = [0] * lam.n
        for cls_, img in zip(classes, choice):
            for src, dst in zip(cls_, img):
                w[src] = dst
        left = lam.permute_left(w).lambdaL
        if left not in seen:
            seen.add(left)
            out.append(tuple(w))
    return out


def gamma_k(x, m: int) -> KElement:
    """K-group image of the real-to-Hecke functor landing in degree ``m``."""
    acc: Counter = Counter()
    for lam, c in _as_khc(x):
        if any(v < 0 for v in lam.mu) or sum(lam.mu) != m:
            continue
        acc[Multisegment(lam.segments())] += c
    return KElement(acc)


def translate_k(x, i: int, direction: Direction, block: Optional[Weight] = None) -> KHCElement:
    """K-group shadow of the translation functor ``T_lambda^{lambda + e_i}``
    (RaiseRight) or ``T_lambda^{lambda_L - e_i, lambda_R}`` (LowerLeft).

    ``block`` is the weight ``lambda`` defining the functor; it defaults to
    ``x`` when ``x`` is a single :class:`Weight`.
    """
    if block is None:
        if not isinstance(x, Weight):
            raise ValueError("block weight required when translating a KHCElement")
        block = x
    if not 1 <= i <= block.n:
        raise IndexOutOfRange(f"index {i} outside 1..{block.n}")
    acc: list = []
    for lam, c in _as_khc(x):
        if lam.n != block.n:
            raise ValueError("symbol rank differs from block rank")
        if direction is Direction.RAISE_RIGHT:
            target = block.lambdaR[i - 1]
            hits = [k for k in range(lam.n) if lam.lambdaR[k] == target]
            acc.extend((lam.shift(k + 1, "R", 1), c) for k in hits)
        else:
            target = block.lambdaL[i - 1]
            hits = [k for k in range(lam.n) if lam.lambdaL[k] == target]
            acc.extend((lam.shift(k + 1, "L", -1), c) for k in hits)
    return KHCElement(acc)


def multisegment_of(w: Sequence[int], lam: Weight) -> Multisegment:
    """``{[lambdaR_i + 1/2, lambdaL_{w(i)} - 1/2]}`` with w 0-based one-line."""
    return Multisegment(
        make_segment(lam.lambdaR[k] + HALF, lam.lambdaL[w[k]] - HALF) for k in range(lam.n)
    )


@dataclass
class KCheckResult:
    weight: Weight
    i: int
    direction: Direction
    w: tuple[int, ...]
    pathA: KElement
    pathB: KElement

    @property
    def equal(self) -> bool:
        return self.pathA == self.pathB

    def to_json(self) -> dict:
        return {
            "case": f"{self.weight} i={self.i} {self.direction.value} w={list(self.w)}",
            "pathA": self.pathA.to_json(),
            "pathB": self.pathB.to_json(),
            "equal": self.equal,
        }


def verify_kgroup_commutativity(
    lam: Weight,
    i: int,
    direction: Direction = Direction.RAISE_RIGHT,
    perms: Optional[Iterable[Sequence[int]]] = None,
) -> list[KCheckResult]:
    """Compare Jac o Gamma with Gamma o T on each basis symbol ``X(w lambdaL, lambdaR)``."""
    if not 1 <= i <= lam.n:
        raise IndexOutOfRange(f"index {i} outside 1..{lam.n}")
    m = sum(lam.mu)
    if direction is Direction.RAISE_RIGHT:
        point = lam.lambdaR[i - 1] + HALF
        functor = jac_k
    else:
        point = lam.lambdaL[i - 1] - HALF
        functor = cojac_k
    results = []
    for w in (weyl_orbit(lam) if perms is None else perms):
        sym = lam.permute_left(w)
        path_a = functor(point, gamma_k(sym, m))
        path_b = gamma_k(translate_k(sym, i, direction, block=lam), m - 1)
        results.append(KCheckResult(lam, i, direction, tuple(w), path_a, path_b))
    return results
