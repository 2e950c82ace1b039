from fractions import Fraction

from hypothesis import strategies as st

from hecketrans import KElement, Scalar, make_segment

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, fractions, fractions)
# coordinates of the sort the suites use: a few classes, half-integral steps
offsets = st.sampled_from([Scalar(0), Scalar("1/3"), Scalar(0, "1/2"), Scalar("1/2", "-1")])
points = st.builds(lambda o, k: o + Fraction(k, 2), offsets, st.integers(-4, 4))
segments = st.builds(lambda a, L: make_segment(a, a + L - 1), points, st.integers(1, 3))
monomials = st.lists(segments, max_size=3)
kelements = st.lists(
    st.tuples(monomials, st.integers(-3, 3)), max_size=4
).map(lambda terms: sum((KElement.monomial(s, c) for s, c in terms), KElement()))


def dense_mul(A, B):
    """Schoolbook product of row lists; an oracle independent of linalg.Matrix."""
    n, k, p = len(A), len(B), len(B[0]) if B else 0
    zero = Scalar(0)
    out = []
    for r in range(n):
        row = []
        for c in range(p):
            acc = zero
            for t in range(k):
                acc = acc + A[r][t] * B[t][c]
            row.append(acc)
        out.append(row)
    return out


def dense_relations_hold(M) -> bool:
    """Every defining relation, evaluated on dense row lists."""
    S = [s.to_rows() for s in M.S]
    Y = [y.to_rows() for y in M.Y]
    n = M.dim
    one = [[Scalar(int(r == c)) for c in range(n)] for r in range(n)]

    def sub(A, B):
        return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

    for i, s in enumerate(S):
        if dense_mul(s, s) != one:
            return False
        if sub(dense_mul(s, Y[i]), dense_mul(Y[i + 1], s)) != one:
            return False
        for j, t in enumerate(S):
            if abs(i - j) >= 2 and dense_mul(s, t) != dense_mul(t, s):
                return False
            if j == i + 1 and dense_mul(dense_mul(s, t), s) != dense_mul(dense_mul(t, s), t):
                return False
        for j, y in enumerate(Y):
            if j not in (i, i + 1) and dense_mul(s, y) != dense_mul(y, s):
                return False
    for i, a in enumerate(Y):
        for b in Y[i + 1:]:
            if dense_mul(a, b) != dense_mul(b, a):
                return False
    return True
