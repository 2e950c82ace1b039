import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecketrans import (
    Direction, KElement, KHCElement, Multisegment, Scalar, Segment, Weight, gamma_k,
    integral_weyl_classes, multisegment_of, translate_k, verify_kgroup_commutativity,
)
from hecketrans.errors import IndexOutOfRange, NonIntegralWeight
from hecketrans.realside import weyl_orbit
from hecketrans.segments import make_segment

HALF = Fraction(1, 2)


def W(left, right):
    return Weight.of([Scalar.parse(str(x)) for x in left], [Scalar.parse(str(x)) for x in right])


def ms(text):
    return KElement.monomial(Multisegment.parse(text))


def test_weight_accessors():
    lam = W([2, 1], [0, -3])
    assert lam.mu == (2, 4) and lam.m_of == 6 and lam.n == 2
    assert lam.nu == (Scalar(2), Scalar(-2))
    assert W([0, 1], [0, 2]).m_of is None
    with pytest.raises(NonIntegralWeight):
        W(["1/3"], [0])
    assert Weight.from_json(lam.to_json()) == lam


def test_integral_weyl_classes():
    assert integral_weyl_classes([2, 1, Fraction(1, 3)]) == [[1, 2], [3]]
    assert integral_weyl_classes([0, Scalar(0, 1), 1]) == [[1, 3], [2]]
    assert integral_weyl_classes([5, 5, 5]) == [[1, 2, 3]]


def test_weyl_orbit_deduplicates_repeated_entries():
    assert weyl_orbit(W([1, 1], [0, 0])) == [(0, 1)]
    assert len(weyl_orbit(W([2, 1, "1/3"], [0, 0, "1/3"]))) == 2
    assert len(weyl_orbit(W([3, 2, 1], [0, 0, 0]))) == 6


def test_gamma_k_examples():
    lam = W([2, 1], [0, 0])
    assert gamma_k(lam, 3) == ms("{[1/2,3/2],[1/2,1/2]}")
    assert gamma_k(lam, 2) == 0
    assert gamma_k(W([0, 0, 0], [0, 0, 0]), 0) == KElement.one()
    assert gamma_k(W([2, -1], [0, 0]), 1) == 0


def test_translate_k_examples():
    lam = W([2, 1], [0, 0])
    assert translate_k(lam, 1, Direction.RAISE_RIGHT) == (
        KHCElement.symbol(W([2, 1], [1, 0])) + KHCElement.symbol(W([2, 1], [0, 1]))
    )
    assert translate_k(W([2, 1], [0, 5]), 1, Direction.RAISE_RIGHT) == KHCElement.symbol(W([2, 1], [1, 5]))
    assert translate_k(lam, 1, Direction.LOWER_LEFT) == KHCElement.symbol(W([1, 1], [0, 0]))
    with pytest.raises(IndexOutOfRange):
        translate_k(lam, 3, Direction.RAISE_RIGHT)
    with pytest.raises(IndexOutOfRange):
        verify_kgroup_commutativity(lam, 0)


def test_translate_lowers_degree():
    lam = W([3, 1, 2], [0, 0, 1])
    for sym, _ in translate_k(lam, 1, Direction.RAISE_RIGHT):
        assert sym.m_of == lam.m_of - 1


def test_multisegment_of():
    lam = W([2, 1], [0, 0])
    assert multisegment_of((0, 1), lam) == Multisegment.parse("{[1/2,3/2],[1/2,1/2]}")
    assert multisegment_of((1, 0), lam) == Multisegment.parse("{[1/2,1/2],[1/2,3/2]}")
    assert multisegment_of((0, 1), W([0, 1], [0, 1])) == Multisegment()


def test_symbol_canonicalization():
    a, b = W([2, 1], [0, 5]), W([1, 2], [5, 0])
    assert KHCElement.symbol(a) == KHCElement.symbol(b)
    assert gamma_k(a, a.m_of) == gamma_k(b, b.m_of)


# -- the commutative square against a hand-rolled oracle ---------------------


def oracle_paths(lam, i, w, direction):
    """Both composites from the explicit sums, without jac_k or translate_k."""
    left = list(lam.permute_left(w).lambdaL)
    right = list(lam.lambdaR)
    m = sum(lam.mu)

    def gamma(L, R, degree):
        mu = [int((l - r).re) for l, r in zip(L, R)]
        if min(mu) < 0 or sum(mu) != degree:
            return Counter()
        return Counter({Multisegment(make_segment(r + HALF, l - HALF) for l, r in zip(L, R)): 1})

    a_side, b_side = Counter(), Counter()
    for mono, c in gamma(left, right, m).items():
        for k, seg in enumerate(mono):
            hit = seg.start == lam.lambdaR[i - 1] + HALF if direction is Direction.RAISE_RIGHT \
                else seg.end == lam.lambdaL[i - 1] - HALF
            if hit:
                cut = make_segment(seg.start + 1, seg.end) if direction is Direction.RAISE_RIGHT \
                    else make_segment(seg.start, seg.end - 1)
                rest = list(mono.segments)
                rest[k] = cut
                a_side[Multisegment(rest)] += c
    for k in range(lam.n):
        if direction is Direction.RAISE_RIGHT and right[k] == lam.lambdaR[i - 1]:
            R = right.copy()
            R[k] = R[k] + 1
            b_side.update(gamma(left, R, m - 1))
        if direction is Direction.LOWER_LEFT and left[k] == lam.lambdaL[i - 1]:
            L = left.copy()
            L[k] = L[k] - 1
            b_side.update(gamma(L, right, m - 1))
    return KElement(a_side), KElement(b_side)


def test_commutativity_example():
    lam = W([2, 1], [0, 0])
    want = ms("{[3/2,3/2],[1/2,1/2]}") + ms("{[1/2,3/2]}")
    for res in verify_kgroup_commutativity(lam, 1, Direction.RAISE_RIGHT):
        if res.w == (0, 1):
            assert res.pathA == res.pathB == want
    (res,) = verify_kgroup_commutativity(W([1, 1], [0, 0]), 2, Direction.RAISE_RIGHT)
    assert res.equal and res.pathA == ms("{[1/2,1/2]}") * 2
    zero = verify_kgroup_commutativity(W([2, -1], [0, 0]), 1)
    assert all(r.pathA == r.pathB == 0 for r in zero)


weights = st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.lists(st.sampled_from(["0", "1/3", "1/2i"]), min_size=n, max_size=n),
    st.lists(st.integers(-1, 1), min_size=n, max_size=n),
    st.lists(st.integers(-1, 3), min_size=n, max_size=n),
)).map(lambda t: Weight.of(
    [Scalar.parse(o) + r + mu for o, r, mu in zip(*t)],
    [Scalar.parse(o) + r for o, r, _ in zip(*t)],
))


@settings(max_examples=150)
@given(weights, st.data())
def test_commutativity_matches_oracle(lam, data):
    i = data.draw(st.integers(1, lam.n))
    for direction in Direction:
        for res in verify_kgroup_commutativity(lam, i, direction):
            a, b = oracle_paths(lam, i, res.w, direction)
            assert res.pathA == a and res.pathB == b and res.equal


@given(weights)
def test_gamma_nonzero_iff_mu_nonnegative(lam):
    m = sum(lam.mu)
    assert bool(gamma_k(lam, m)) == (min(lam.mu) >= 0)
    for sigma in itertools.permutations(range(lam.n)):
        shuffled = Weight.of([lam.lambdaL[s] for s in sigma], [lam.lambdaR[s] for s in sigma])
        assert KHCElement.symbol(shuffled) == KHCElement.symbol(lam)
        assert gamma_k(shuffled, m) == gamma_k(lam, m)


def test_commutativity_report_json():
    (res,) = verify_kgroup_commutativity(W([1, 1], [0, 0]), 1)
    data = res.to_json()
    assert data["equal"] is True and data["pathA"] == data["pathB"]
    assert Segment.parse(data["pathA"][0]["monomial"][0]) == Segment.parse("[1/2,1/2]")
