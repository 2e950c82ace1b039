"""
Finite-dimensional modules over the graded Hecke algebra H_m of type A,
given by exact matrices for ``s_1..s_{m-1}`` and ``y_1..y_m``.

Defining relations (all checked by :func:`check_relations`)::

    s_i^2 = 1,  s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1},  s_i s_j = s_j s_i (|i-j| >= 2)
    s_i y_i - y_{i+1} s_i = 1,  s_i y_j = y_j s_i (j != i, i+1),  y_i y_j = y_j y_i

Parabolic induction ``M1 x M2`` is realized on ``span{d (x) v}`` where d runs
over minimal left-coset representatives of ``S_m / (S_m1 x S_m2)`` and v over
a basis of ``M1 (x) M2``.  The ``s_k`` action is a relabelling of cosets (or a
parabolic generator acting on v); ``y_j`` is pushed through a reduced word of
d with the exchange rules

    y_k s_k = s_k y_{k+1} + 1,   y_{k+1} s_k = s_k y_k - 1,   y_j s_k = s_k y_j otherwise.

Internally all generator indices are 0-based.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Mapping, Optional, Sequence

from .errors import (
    CandidateSetIncomplete, DimensionCap, InvarianceViolation, NegativeMu,
)
from .linalg import Matrix, SparseVec, add_into, generalized_eigenspace, restrict
from .perms import coset_basis, inverse, is_minimal_left, left_mul, longest_word
from .realside import Weight
from .scalar import ONE, Scalar, as_scalar
from .segments import Segment

__all__ = [
    "HModule", "RelationReport", "DEFAULT_DIM_CAP", "default_dim_cap",
    "trivial_module", "steinberg", "evaluation", "induce", "induce_all",
    "gamma_module", "gamma_dimension", "check_relations", "jacquet", "cojacquet",
    "hermitian_dual_mod", "y_weight_multiset", "spectrum_y1", "perturb",
]

DEFAULT_DIM_CAP = 2000


def default_dim_cap() -> int:
    return int(os.environ.get("HECKE_DIM_CAP", DEFAULT_DIM_CAP))


@dataclass(frozen=True)
class HModule:
    m: int
    dim: int
    S: tuple[Matrix, ...]
    Y: tuple[Matrix, ...]
    labels: tuple[str, ...]
    candidates: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.Y) != self.m or len(self.S) != max(self.m - 1, 0):
            raise ValueError("wrong number of generators")
        for mat in self.S + self.Y:
            if mat.shape != (self.dim, self.dim):
                raise ValueError("generator shape does not match dimension")
        if len(self.labels) != self.dim:
            raise ValueError("one label per basis vector required")

    def to_json(self) -> dict:
        def dense(mat: Matrix):
            return [[str(x) for x in row] for row in mat.to_rows()]

        return {
            "m": self.m,
            "dim": self.dim,
            "basis_labels": list(self.labels),
            "eigen_candidates": [str(c) for c in sorted(self.candidates)],
            "S": [dense(s) for s in self.S],
            "Y": [dense(y) for y in self.Y],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> HModule:
        if isinstance(data, str):
            data = json.loads(data)

        def mat(rows):
            if not rows:
                return Matrix(data["dim"], data["dim"])
            return Matrix.from_rows([[Scalar.parse(x) for x in row] for row in rows])

        return cls(
            m=data["m"],
            dim=data["dim"],
            S=tuple(mat(r) for r in data["S"]),
            Y=tuple(mat(r) for r in data["Y"]),
            labels=tuple(data.get("basis_labels") or [str(k) for k in range(data["dim"])]),
            candidates=frozenset(Scalar.parse(c) for c in data.get("eigen_candidates", [])),
        )


def trivial_module() -> HModule:
    """The one-dimensional module of H_0."""
    return HModule(0, 1, (), (), ("1",), frozenset())


def steinberg(seg: Segment) -> HModule:
    """One-dimensional module: every s_i by -1, y_j by the j-th point of seg."""
    if seg.is_empty:
        return trivial_module()
    pts = seg.points()
    m = len(pts)
    return HModule(
        m, 1,
        tuple(Matrix.identity(1, -1) for _ in range(m - 1)),
        tuple(Matrix.identity(1, p) for p in pts),
        (f"St{seg}",),
        frozenset(pts),
    )


def evaluation(c) -> HModule:
    c = as_scalar(c)
    return HModule(1, 1, (), (Matrix.identity(1, c),), (f"ev[{c}]",), frozenset([c]))


def _kron_cols(left: Optional[Matrix], right: Optional[Matrix], d1: int, d2: int) -> list[SparseVec]:
    """Columns of ``left (x) right`` with None standing for the identity."""
    cols = []
    for b1 in range(d1):
        lcol = {b1: ONE} if left is None else left.cols[b1]
        for b2 in range(d2):
            rcol = {b2: ONE} if right is None else right.cols[b2]
            col = {}
            for r1, v1 in lcol.items():
                for r2, v2 in rcol.items():
                    col[r1 * d2 + r2] = v1 * v2
            cols.append(col)
    return cols


def induce(M1: HModule, M2: HModule, dim_cap: Optional[int] = None) -> HModule:
    m1, m2 = M1.m, M2.m
    m = m1 + m2
    cosets = coset_basis(m1, m2)
    d1, d2 = M1.dim, M2.dim
    base = d1 * d2
    dim = len(cosets) * base
    cap = default_dim_cap() if dim_cap is None else dim_cap
    if dim > cap:
        raise DimensionCap(dim, cap)

    # generators of H_m1 (x) H_m2 on M1 (x) M2
    base_s = [_kron_cols(s, None, d1, d2) for s in M1.S]
    if m1 and m2:
        base_s.append(None)  # s_{m1} is not parabolic
    base_s += [_kron_cols(None, s, d1, d2) for s in M2.S]
    base_y = [_kron_cols(y, None, d1, d2) for y in M1.Y]
    base_y += [_kron_cols(None, y, d1, d2) for y in M2.Y]

    def block(di: int, vec: SparseVec) -> SparseVec:
        off = di * base
        return {off + r: v for r, v in vec.items()}

    S = []
    for k in range(m - 1):
        cols: list[SparseVec] = []
        for di, d in enumerate(cosets.reps):
            target = left_mul(k, d)
            if is_minimal_left(target, m1):
                dj = cosets.index[target]
                cols.extend({dj * base + b: ONE} for b in range(base))
            else:
                j = inverse(d)[k]  # s_k d = d s_j
                cols.extend(block(di, c) for c in base_s[j])
        S.append(Matrix(dim, dim, cols))

    ycols: list[list[SparseVec]] = [[{} for _ in range(dim)] for _ in range(m)]
    for di, d in enumerate(cosets.reps):
        word = cosets.words[di]
        if not word:
            for j in range(m):
                for b in range(base):
                    ycols[j][b] = block(di, base_y[j][b])
            continue
        k = word[0]
        dd = cosets.index[left_mul(k, d)]
        sk = S[k]
        for j in range(m):
            jj = k + 1 if j == k else k if j == k + 1 else j
            eps = 1 if j == k else -1 if j == k + 1 else 0
            for b in range(base):
                src = dd * base + b
                vec = sk.apply(ycols[jj][src])
                if eps:
                    add_into(vec, {src: Scalar(eps)})
                ycols[j][di * base + b] = vec
    Y = [Matrix(dim, dim, cols) for cols in ycols]

    labels = []
    for word in cosets.words:
        w = "".join(f"s{k + 1}" for k in word) or "e"
        for l1 in M1.labels:
            for l2 in M2.labels:
                labels.append(f"{w}*({l1}|{l2})")
    return HModule(m, dim, tuple(S), tuple(Y), tuple(labels), M1.candidates | M2.candidates)


def induce_all(factors: Sequence[HModule], dim_cap: Optional[int] = None) -> HModule:
    """Left-nested product ``((F1 x F2) x F3) x ...``."""
    out = trivial_module()
    for k, f in enumerate(factors):
        out = f if k == 0 else induce(out, f, dim_cap)
    return out


def gamma_dimension(lam: Weight) -> int:
    if any(x < 0 for x in lam.mu):
        return 0
    return factorial(sum(lam.mu)) // prod(factorial(x) for x in lam.mu)


def gamma_module(lam: Weight, dim_cap: Optional[int] = None) -> HModule:
    """Product of Steinbergs on ``[lambdaR_k + 1/2, lambdaL_k - 1/2]``, k = 1..n."""
    if any(x < 0 for x in lam.mu):
        raise NegativeMu(f"mu = {lam.mu} has a negative entry")
    cap = default_dim_cap() if dim_cap is None else dim_cap
    if gamma_dimension(lam) > cap:
        raise DimensionCap(gamma_dimension(lam), cap)
    factors = [steinberg(s) for s in lam.segments() if not s.is_empty]
    return induce_all(factors, cap)


# -- relations ----------------------------------------------------------------


@dataclass
class RelationReport:
    m: int
    dim: int
    checked: list[tuple[str, bool]]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checked)

    @property
    def first_failure(self) -> Optional[str]:
        for name, ok in self.checked:
            if not ok:
                return name
        return None

    def to_json(self) -> dict:
        return {
            "m": self.m, "dim": self.dim, "relations": len(self.checked),
            "passed": self.passed, "first_failure": self.first_failure,
        }


def check_relations(M: HModule) -> RelationReport:
    S, Y, m = M.S, M.Y, M.m
    one = Matrix.identity(M.dim)
    out: list[tuple[str, bool]] = []
    for i in range(m - 1):
        out.append((f"s{i + 1}^2=1", (S[i] @ S[i]) == one))
    for i in range(m - 2):
        lhs = S[i] @ S[i + 1] @ S[i]
        rhs = S[i + 1] @ S[i] @ S[i + 1]
        out.append((f"s{i + 1}s{i + 2}s{i + 1}=s{i + 2}s{i + 1}s{i + 2}", lhs == rhs))
    for i in range(m - 1):
        for j in range(i + 2, m - 1):
            out.append((f"s{i + 1}s{j + 1}=s{j + 1}s{i + 1}", S[i] @ S[j] == S[j] @ S[i]))
    for i in range(m - 1):
        lhs = S[i] @ Y[i] - Y[i + 1] @ S[i]
        out.append((f"s{i + 1}y{i + 1}-y{i + 2}s{i + 1}=1", lhs == one))
        for j in range(m):
            if j in (i, i + 1):
                continue
            out.append((f"s{i + 1}y{j + 1}=y{j + 1}s{i + 1}", S[i] @ Y[j] == Y[j] @ S[i]))
    for i in range(m):
        for j in range(i + 1, m):
            out.append((f"y{i + 1}y{j + 1}=y{j + 1}y{i + 1}", Y[i] @ Y[j] == Y[j] @ Y[i]))
    return RelationReport(m, M.dim, out)


def perturb(M: HModule, j: int = 1, amount=1) -> HModule:
    """Copy of M with ``y_{j+1}`` replaced by ``y_{j+1} + amount`` (negative control)."""
    Y = list(M.Y)
    Y[j] = Y[j] + Matrix.identity(M.dim, amount)
    return HModule(M.m, M.dim, M.S, tuple(Y), M.labels, M.candidates)


# -- Jacquet functors ---------------------------------------------------------


def _zero_module(m: int, candidates) -> HModule:
    z = Matrix(0, 0)
    return HModule(m, 0, (z,) * max(m - 1, 0), (z,) * m, (), frozenset(candidates))


def _eigen_restrict(M: HModule, which: Matrix, a, keep_s, keep_y) -> HModule:
    if M.m < 1:
        raise ValueError("Jacquet functors need m >= 1")
    basis, free = generalized_eigenspace(which, a)
    if basis.ncols == 0:
        return _zero_module(M.m - 1, M.candidates)
    gens = []
    for g in list(keep_s) + list(keep_y):
        r = restrict(g, basis, free)
        if r is None:
            raise InvarianceViolation(f"eigenspace for {a} is not invariant")
        gens.append(r)
    ns = len(keep_s)
    return HModule(
        M.m - 1, basis.ncols, tuple(gens[:ns]), tuple(gens[ns:]),
        tuple(M.labels[f] for f in free), M.candidates,
    )


def jacquet(M: HModule, a) -> HModule:
    """Generalized a-eigenspace of y_1 as an H_{m-1}-module via ``y_i -> y_{i+1}, s_i -> s_{i+1}``."""
    a = as_scalar(a)
    if M.m < 1:
        raise ValueError("Jacquet functors need m >= 1")
    return _eigen_restrict(M, M.Y[0], a, M.S[1:], M.Y[1:])


def cojacquet(M: HModule, a) -> HModule:
    """Generalized a-eigenspace of y_m as an H_{m-1}-module via the first m-1 generators."""
    a = as_scalar(a)
    if M.m < 1:
        raise ValueError("Jacquet functors need m >= 1")
    return _eigen_restrict(M, M.Y[-1], a, M.S[:-1], M.Y[:-1])


# -- Hermitian dual -----------------------------------------------------------


def hermitian_dual_mod(M: HModule) -> HModule:
    """Dual under ``s_i* = s_i``, ``y_i* = -w0 y_{m+1-i} w0^{-1}`` (conjugate linear).

    A generator h acts on the dual by the conjugate transpose of h* acting on M.
    """
    m = M.m
    word = longest_word(m)
    w0 = Matrix.identity(M.dim)
    w0_inv = Matrix.identity(M.dim)
    for k in word:
        w0 = w0 @ M.S[k]
    for k in reversed(word):
        w0_inv = w0_inv @ M.S[k]
    S = tuple(s.conj_transpose() for s in M.S)
    Y = tuple((-(w0 @ M.Y[m - 1 - i] @ w0_inv)).conj_transpose() for i in range(m))
    return HModule(
        m, M.dim, S, Y, tuple(f"{l}^*" for l in M.labels),
        frozenset(-c.conjugate() for c in M.candidates),
    )


# -- spectra ------------------------------------------------------------------


def _weights(mats: list[Matrix], cands: list[Scalar], dim: int) -> Counter:
    if dim == 0:
        return Counter()
    if not mats:
        return Counter({(): dim})
    out: Counter = Counter()
    total = 0
    for a in cands:
        basis, free = generalized_eigenspace(mats[0], a)
        if basis.ncols == 0:
            continue
        total += basis.ncols
        rest = []
        for x in mats[1:]:
            r = restrict(x, basis, free)
            if r is None:
                raise InvarianceViolation(f"y-eigenspace for {a} not stable under a commuting y")
            rest.append(r)
        for w, c in _weights(rest, cands, basis.ncols).items():
            out[(a,) + w] += c
        if total == dim:
            break
    if total != dim:
        raise CandidateSetIncomplete(f"eigenspaces cover {total} of {dim} dimensions")
    return out


def y_weight_multiset(M: HModule) -> Counter:
    """Multiset of simultaneous generalized eigenvalues of ``(y_1, ..., y_m)``."""
    return _weights(list(M.Y), sorted(M.candidates), M.dim)


def spectrum_y1(M: HModule) -> Counter:
    """Generalized-eigenspace dimensions of y_1 over the candidate set."""
    if M.m < 1:
        raise ValueError("spectrum_y1 needs m >= 1")
    weights = _weights([M.Y[0]], sorted(M.candidates), M.dim)
    return Counter({w[0]: c for w, c in weights.items()})
