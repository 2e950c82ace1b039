"""
Checks of the translation/Jacquet correspondence, at the level of K-groups
and on explicit modules, plus the random case generators that drive them.

Every check returns a :class:`Report`; a batch of checks is a
:class:`SuiteReport`.  Module-level checks fall back to the corresponding
K-group computation when the module would exceed the dimension cap, and
record which level ran.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Any, Callable, Optional, Sequence

from .kring import KElement, cojac_k, hermitian_dual_k, jac_k, k_dimension
from .modules import (
    HModule, check_relations, cojacquet, default_dim_cap, gamma_dimension,
    gamma_module, hermitian_dual_mod, induce, induce_all, jacquet, perturb,
    spectrum_y1, steinberg, y_weight_multiset,
)
from .perms import identity
from .realside import (
    Direction, Weight, gamma_k, verify_kgroup_commutativity, weyl_orbit,
)
from .scalar import HALF, Scalar, as_scalar
from .segments import Segment, make_segment, negate_conjugate

__all__ = [
    "SuiteConfig", "Check", "Report", "SuiteReport", "predicted_spectrum",
    "verify_kcase", "verify_theorem_main_k", "verify_theorem_main_module",
    "verify_eigenvalue_prop", "verify_leibniz_module", "verify_dual_suite",
    "verify_kring_intertwining", "verify_dimension_formula", "verify_jacquet_base",
    "verify_relations", "random_weight", "random_segment", "random_kelement",
    "run_suite",
]


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    n_max: int = 4
    m_max: int = 5
    entry_range: int = 1
    translation_classes: tuple[Scalar, ...] = (Scalar(0), Scalar("1/3"), Scalar(0, "1/2"))
    dim_cap: int = 2000
    case_count: int = 200

    def __post_init__(self):
        object.__setattr__(
            self, "translation_classes", tuple(as_scalar(c) for c in self.translation_classes)
        )
        if self.n_max < 1 or self.m_max < 0 or self.entry_range < 0:
            raise ValueError("n_max >= 1, m_max >= 0 and entry_range >= 0 required")
        if not self.translation_classes:
            raise ValueError("at least one translation class offset is required")
        if factorial(self.m_max) > self.dim_cap:
            raise ValueError(f"m_max! = {factorial(self.m_max)} exceeds dim_cap {self.dim_cap}")

    @property
    def module_cases(self) -> int:
        return max(1, self.case_count // 10)


# -- reports ------------------------------------------------------------------


def _jsonable(x: Any) -> Any:
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Scalar):
        return str(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, Counter):
        items = sorted(x.items(), key=lambda kv: _sort_key(kv[0]))
        return [[_jsonable(k), v] for k, v in items]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _sort_key(k: Any):
    if isinstance(k, Scalar):
        return (k.key(),)
    if isinstance(k, tuple):
        return tuple(_sort_key(v) for v in k)
    return (k,)


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any
    passed: Optional[bool] = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "pass": bool(self.passed),
        }


@dataclass
class Report:
    case: str
    inputs: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    level: str = "module"
    wall_time: Optional[float] = None
    outputs: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected: Any, actual: Any, passed: Optional[bool] = None) -> Check:
        c = Check(name, expected, actual, passed)
        self.checks.append(c)
        return c

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "case": self.case,
            "inputs": _jsonable(self.inputs),
            "level": self.level,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }
        if self.outputs:
            out["outputs"] = _jsonable(self.outputs)
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_text(self) -> str:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.case} ({self.level})"]
        for c in self.checks:
            mark = "ok " if c.passed else "BAD"
            lines.append(f"    {mark} {c.name}: expected={_brief(c.expected)} actual={_brief(c.actual)}")
        return "\n".join(lines)


def _brief(x: Any) -> str:
    s = str(_jsonable(x))
    return s if len(s) <= 120 else s[:117] + "..."


def _timed(fn: Callable[..., Report]) -> Callable[..., Report]:
    def wrapper(*args, **kwargs) -> Report:
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.wall_time = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@dataclass
class SuiteReport:
    name: str
    sections: dict[str, list[Report]] = field(default_factory=dict)
    config: Optional[SuiteConfig] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for reps in self.sections.values() for r in reps)

    def extend(self, section: str, reports: Sequence[Report]) -> None:
        self.sections.setdefault(section, []).extend(reports)

    def to_json(self, timing: bool = False) -> dict:
        out: dict = {"suite": self.name}
        if self.config is not None:
            c = self.config
            out["config"] = {
                "seed": c.seed, "n_max": c.n_max, "m_max": c.m_max,
                "entry_range": c.entry_range,
                "translation_classes": [str(x) for x in c.translation_classes],
                "dim_cap": c.dim_cap, "case_count": c.case_count,
            }
        out["pass"] = self.passed
        out["sections"] = {
            name: {
                "pass": all(r.passed for r in reps),
                "count": len(reps),
                "failed": sum(not r.passed for r in reps),
                "levels": dict(sorted(Counter(r.level for r in reps).items())),
                "reports": [r.to_json(timing) for r in reps],
            }
            for name, reps in self.sections.items()
        }
        return out

    def to_text(self) -> str:
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for name, reps in self.sections.items():
            bad = [r for r in reps if not r.passed]
            lines.append(f"  {name}: {len(reps) - len(bad)}/{len(reps)} passed")
            for r in bad:
                lines.append("    " + r.to_text().replace("\n", "\n    "))
        return "\n".join(lines)


# -- predictions --------------------------------------------------------------


def _multinomial(parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        return 0
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def predicted_spectrum(lam: Weight) -> Counter:
    """Generalized eigenvalues of y_1 on the Gamma-image of X(lambda):
    ``lambdaR_k + 1/2`` with multiplicity the multinomial of ``mu - e_k``."""
    out: Counter = Counter()
    if any(x < 0 for x in lam.mu):
        return out
    for k, mk in enumerate(lam.mu):
        if mk >= 1:
            reduced = list(lam.mu)
            reduced[k] -= 1
            out[lam.lambdaR[k] + HALF] += _multinomial(reduced)
    return out


def _summands(lam: Weight, i: int, direction: Direction) -> list[Weight]:
    if direction is Direction.RAISE_RIGHT:
        target = lam.lambdaR[i - 1]
        return [lam.shift(k + 1, "R", 1) for k in range(lam.n) if lam.lambdaR[k] == target]
    target = lam.lambdaL[i - 1]
    return [lam.shift(k + 1, "L", -1) for k in range(lam.n) if lam.lambdaL[k] == target]


def _jac_point(lam: Weight, i: int, direction: Direction) -> Scalar:
    if direction is Direction.RAISE_RIGHT:
        return lam.lambdaR[i - 1] + HALF
    return lam.lambdaL[i - 1] - HALF


def _weight_inputs(lam: Weight, **extra) -> dict:
    d = lam.to_json()
    d.update(extra)
    return d


# -- K-level ------------------------------------------------------------------


@_timed
def verify_kcase(lam: Weight, i: int, w: Sequence[int], direction: Direction) -> Report:
    rep = Report(
        f"kgroup {lam} i={i} w={list(w)} {direction.value}",
        _weight_inputs(lam, i=i, w=list(w), direction=direction.value),
        level="kgroup",
    )
    (res,) = verify_kgroup_commutativity(lam, i, direction, perms=[w])
    rep.add("Jac o Gamma == Gamma o T", res.pathA, res.pathB)
    return rep


def _pick_index(rng: random.Random, lam: Weight) -> int:
    # favour coordinates with mu_i >= 1, where both paths are usually nonzero
    positive = [k + 1 for k, x in enumerate(lam.mu) if x >= 1]
    if positive and rng.random() < 0.7:
        return rng.choice(positive)
    return rng.randint(1, lam.n)


def verify_theorem_main_k(config: SuiteConfig) -> list[Report]:
    """Both directions on ``case_count`` random ``(lambda, i, w)``."""
    rng = random.Random(config.seed)
    reports = []
    for _ in range(config.case_count):
        lam = random_weight(rng, config, allow_negative=True)
        i = _pick_index(rng, lam)
        w = rng.choice(weyl_orbit(lam))
        for direction in Direction:
            reports.append(verify_kcase(lam, i, w, direction))
    return reports


@_timed
def verify_kring_intertwining(x: KElement, a) -> Report:
    a = as_scalar(a)
    rep = Report(f"intertwining a={a}", {"x": x, "a": a}, level="kgroup")
    lhs = hermitian_dual_k(jac_k(a, x))
    rhs = cojac_k(-a.conjugate(), hermitian_dual_k(x))
    rep.add("dual o jac_a == cojac_{-conj a} o dual", lhs, rhs)
    return rep


# -- module level -------------------------------------------------------------


def _fingerprint_union(weights: Sequence[Weight], cap: int) -> Counter:
    out: Counter = Counter()
    for lam in weights:
        if any(x < 0 for x in lam.mu):
            continue
        out.update(y_weight_multiset(gamma_module(lam, cap)))
    return out


@_timed
def verify_theorem_main_module(
    lam: Weight,
    i: int,
    direction: Direction = Direction.RAISE_RIGHT,
    dim_cap: Optional[int] = None,
) -> Report:
    """Jacquet module of the Gamma-image against the translation summands."""
    cap = default_dim_cap() if dim_cap is None else dim_cap
    a = _jac_point(lam, i, direction)
    rep = Report(
        f"theorem-module {lam} i={i} {direction.value}",
        _weight_inputs(lam, i=i, direction=direction.value, a=a),
    )
    summands = _summands(lam, i, direction)
    expected_dim = sum(gamma_dimension(s) for s in summands)
    if any(x < 0 for x in lam.mu):
        rep.add("dim Jac(Gamma X) (Gamma X = 0)", expected_dim, 0)
        return rep
    if gamma_dimension(lam) > cap:
        rep.level = "kgroup"
        (res,) = verify_kgroup_commutativity(lam, i, direction, perms=[identity(lam.n)])
        rep.add("Jac o Gamma == Gamma o T", res.pathA, res.pathB)
        rep.add("dim of K-class", expected_dim, k_dimension(res.pathA))
        return rep
    M = gamma_module(lam, cap)
    if M.m == 0:
        rep.add("dim Jac(Gamma X) (m = 0)", expected_dim, 0)
        return rep
    J = jacquet(M, a) if direction is Direction.RAISE_RIGHT else cojacquet(M, a)
    rep.add("dim Jac(Gamma X) = sum of multinomials", expected_dim, J.dim)
    rep.add("y-weights of Jac(Gamma X) = union over summands",
            _fingerprint_union(summands, cap), y_weight_multiset(J))
    rel = check_relations(J)
    rep.add("Jacquet module satisfies relations", True, rel.passed)
    return rep


@_timed
def verify_eigenvalue_prop(lam: Weight, dim_cap: Optional[int] = None) -> Report:
    cap = default_dim_cap() if dim_cap is None else dim_cap
    rep = Report(f"eigenvalue {lam}", _weight_inputs(lam))
    expected = predicted_spectrum(lam)
    if sum(lam.mu) == 0 or any(x < 0 for x in lam.mu):
        rep.add("spectrum of y_1 (degenerate)", expected, Counter())
        return rep
    if gamma_dimension(lam) > cap:
        rep.level = "kgroup"
        gk = gamma_k(lam, sum(lam.mu))
        actual = Counter({a: k_dimension(jac_k(a, gk)) for a in expected})
        rep.add("K-class dims of jac_a(Gamma X)", expected, +actual)
        return rep
    rep.add("spectrum of y_1", expected, spectrum_y1(gamma_module(lam, cap)))
    return rep


@_timed
def verify_dimension_formula(lam: Weight, dim_cap: Optional[int] = None) -> Report:
    rep = Report(f"dimension {lam}", _weight_inputs(lam))
    M = gamma_module(lam, dim_cap)
    rep.add("dim = m!/prod(mu_k!)", _multinomial(lam.mu), M.dim)
    return rep


@_timed
def verify_jacquet_base(seg: Segment, c) -> Report:
    """Jacquet and co-Jacquet of a Steinberg module against truncated segments."""
    c = as_scalar(c)
    rep = Report(f"jacquet-base {seg} c={c}", {"segment": str(seg), "c": c})
    St = steinberg(seg)
    J = jacquet(St, c)
    if seg.start == c:
        rest = make_segment(seg.start + 1, seg.end)
        rep.add("Jac_c St = St(-Delta) (y-weights)",
                y_weight_multiset(steinberg(rest)), y_weight_multiset(J))
    else:
        rep.add("Jac_c St = 0", 0, J.dim)
    C = cojacquet(St, c)
    if seg.end == c:
        rest = make_segment(seg.start, seg.end - 1)
        rep.add("Jac^c St = St(Delta-) (y-weights)",
                y_weight_multiset(steinberg(rest)), y_weight_multiset(C))
    else:
        rep.add("Jac^c St = 0", 0, C.dim)
    return rep


@_timed
def verify_leibniz_module(M1: HModule, M2: HModule, a, dim_cap: Optional[int] = None) -> Report:
    a = as_scalar(a)
    rep = Report(
        f"leibniz m1={M1.m} m2={M2.m} a={a}",
        {"m1": M1.m, "m2": M2.m, "dim1": M1.dim, "dim2": M2.dim, "a": a},
    )
    M = induce(M1, M2, dim_cap)
    m, m1 = M.m, M1.m
    if m == 0:
        rep.add("nothing to check at m = 0", 0, 0)
        return rep
    j1 = jacquet(M1, a).dim if M1.m else 0
    j2 = jacquet(M2, a).dim if M2.m else 0
    left = comb(m - 1, m1 - 1) * j1 * M2.dim if m1 >= 1 else 0
    right = comb(m - 1, m1) * M1.dim * j2
    rep.add("dim Jac_a(M1 x M2) = Leibniz sum", left + right, jacquet(M, a).dim)
    return rep


@_timed
def verify_dual_suite(
    M: HModule,
    a,
    segments: Optional[Sequence[Segment]] = None,
    label: str = "",
) -> Report:
    """Hermitian dual against Jacquet functors, double dual, and product reversal.

    ``segments``, when given, must list the Steinberg factors of M in
    induction order.
    """
    a = as_scalar(a)
    inputs = {"m": M.m, "dim": M.dim, "a": a}
    if segments is not None:
        inputs["segments"] = [str(s) for s in segments]
    rep = Report(f"dual {label or f'm={M.m} dim={M.dim}'} a={a}", inputs)
    D = hermitian_dual_mod(M)
    rep.add("dual satisfies relations", True, check_relations(D).passed)
    if M.dim == 0:
        rep.add("0-dimensional module", 0, D.dim)
        return rep
    if M.m >= 1:
        J = jacquet(M, a)
        C = cojacquet(D, -a.conjugate())
        rep.add("dim Jac_a M = dim Jac^{-conj a} M*", J.dim, C.dim)
        rep.add("y-weights (Jac_a M)* = y-weights Jac^{-conj a} M*",
                y_weight_multiset(hermitian_dual_mod(J)), y_weight_multiset(C))
    rep.add("double dual y-weights", y_weight_multiset(M),
            y_weight_multiset(hermitian_dual_mod(D)))
    if segments is not None:
        rev = [steinberg(negate_conjugate(s)) for s in reversed(segments) if not s.is_empty]
        rep.add("product reversal y-weights",
                y_weight_multiset(induce_all(rev)), y_weight_multiset(D))
    return rep


@_timed
def verify_relations(M: HModule, label: str = "") -> Report:
    rep = Report(f"relations {label or f'm={M.m} dim={M.dim}'}", {"m": M.m, "dim": M.dim})
    rel = check_relations(M)
    rep.add("defining relations", None, rel.first_failure)
    return rep


# -- random cases -------------------------------------------------------------


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return [bounds[k + 1] - bounds[k] for k in range(parts)]


def random_weight(
    rng: random.Random,
    config: SuiteConfig,
    allow_negative: bool = False,
    m: Optional[int] = None,
) -> Weight:
    """lambdaR = class offset + integer; lambdaL = lambdaR + mu with |mu| <= m_max."""
    n = rng.randint(1, config.n_max)
    # a dominant class keeps repeated and integrally related entries common
    main = rng.choice(config.translation_classes)
    offsets = [
        main if rng.random() < 0.75 else rng.choice(config.translation_classes)
        for _ in range(n)
    ]
    right = [o + rng.randint(-config.entry_range, config.entry_range) for o in offsets]
    total = rng.randint(0, config.m_max) if m is None else m
    mu = _composition(rng, total, n)
    if allow_negative and rng.random() < 0.15:
        mu[rng.randrange(n)] = -rng.randint(1, 2)
    left = [r + x for r, x in zip(right, mu)]
    return Weight(tuple(left), tuple(right))


def random_segment(rng: random.Random, config: SuiteConfig, max_len: int = 3, min_len: int = 1) -> Segment:
    start = rng.choice(config.translation_classes) + rng.randint(-config.entry_range, config.entry_range) + HALF
    return make_segment(start, start + rng.randint(min_len, max_len) - 1)


def random_kelement(rng: random.Random, config: SuiteConfig, terms: int = 3, width: int = 3) -> KElement:
    x = KElement()
    for _ in range(rng.randint(0, terms)):
        segs = [random_segment(rng, config) for _ in range(rng.randint(0, width))]
        x = x + KElement.monomial(segs, rng.randint(-3, 3))
    return x


def _random_product(rng: random.Random, config: SuiteConfig, m: int) -> tuple[HModule, list[Segment]]:
    segs: list[Segment] = []
    left = m
    while left > 0:
        L = rng.randint(1, left)
        start = rng.choice(config.translation_classes) + rng.randint(-1, 1) + HALF
        segs.append(make_segment(start, start + L - 1))
        left -= L
    return induce_all([steinberg(s) for s in segs], config.dim_cap), segs


# -- full suite ---------------------------------------------------------------


def run_suite(config: SuiteConfig, inject_fault: bool = False) -> SuiteReport:
    """Every check family on cases drawn from ``config``; deterministic in the seed."""
    rng = random.Random(config.seed)
    suite = SuiteReport("hecketrans suite", config=config)
    nmod = config.module_cases
    mod_m = min(config.m_max, 5)

    corpus = []
    for _ in range(nmod):
        seg = random_segment(rng, config, max_len=4)
        corpus.append((f"St{seg}", steinberg(seg)))
        M, segs = _random_product(rng, config, rng.randint(1, mod_m))
        corpus.append(("x".join(map(str, segs)), M))
    if inject_fault:
        M, segs = _random_product(rng, config, 3)
        corpus.append(("perturbed " + "x".join(map(str, segs)), perturb(M)))
    suite.extend("relations", [verify_relations(M, name) for name, M in corpus])

    weights = [random_weight(rng, config, m=rng.randint(0, mod_m)) for _ in range(nmod)]
    suite.extend("dimension", [verify_dimension_formula(lam, config.dim_cap) for lam in weights])
    suite.extend("eigenvalue", [verify_eigenvalue_prop(lam, config.dim_cap) for lam in weights])

    base = []
    for _ in range(nmod):
        seg = random_segment(rng, config, max_len=4)
        c = rng.choice([seg.start, seg.end, seg.start + 1, seg.start - rng.choice(config.translation_classes)])
        base.append(verify_jacquet_base(seg, c))
    suite.extend("jacquet-base", base)

    suite.extend("theorem-k", verify_theorem_main_k(config))

    mod = []
    for _ in range(nmod):
        lam = random_weight(rng, config, m=rng.randint(1, mod_m))
        i = _pick_index(rng, lam)
        for direction in Direction:
            mod.append(verify_theorem_main_module(lam, i, direction, config.dim_cap))
    suite.extend("theorem-module", mod)

    leib = []
    for _ in range(nmod):
        total = rng.randint(1, min(config.m_max, 6))
        m1 = rng.randint(0, total)
        M1, s1 = _random_product(rng, config, m1)
        M2, s2 = _random_product(rng, config, total - m1)
        points = [s.start for s in s1 + s2] or [Scalar(0)]
        a = rng.choice(points + [points[0] + 1])
        leib.append(verify_leibniz_module(M1, M2, a, config.dim_cap))
    suite.extend("leibniz", leib)

    dual = []
    for _ in range(nmod):
        M, segs = _random_product(rng, config, rng.randint(1, min(mod_m, 4)))
        a = rng.choice([s.start for s in segs] + [segs[0].end])
        dual.append(verify_dual_suite(M, a, segs, "x".join(map(str, segs))))
    suite.extend("dual", dual)

    inter = []
    for _ in range(config.case_count):
        x = random_kelement(rng, config)
        starts = [s.start for mono, _ in x for s in mono] or [Scalar(0)]
        inter.append(verify_kring_intertwining(x, rng.choice(starts)))
    suite.extend("intertwining", inter)
    return suite
