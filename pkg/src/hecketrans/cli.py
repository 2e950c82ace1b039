"""
Command-line entry points.

Every subcommand prints one JSON (or text) report on stdout.  Exit status:
0 when every check passes, 1 when some check fails, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb, factorial, prod
from typing import Optional, Sequence

from .errors import HeckeError
from .modules import (
    HModule, check_relations, cojacquet, default_dim_cap, gamma_dimension, gamma_module,
    hermitian_dual_mod, induce, induce_all, jacquet, perturb, steinberg,
    y_weight_multiset,
)
from .realside import Direction, Weight, verify_kgroup_commutativity
from .scalar import Scalar
from .segments import Segment
from .verify import (
    Report, SuiteConfig, SuiteReport, verify_dual_suite, verify_relations,
    verify_theorem_main_module, run_suite,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _scalars(text: str) -> tuple[Scalar, ...]:
    return tuple(Scalar.parse(x) for x in text.split(",") if x.strip())


def _load_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _input_data(args) -> dict:
    return _load_json(args.input) if getattr(args, "input", None) else {}


def _weight(args, data: dict) -> Optional[Weight]:
    if args.lambdaL is not None or args.lambdaR is not None:
        if args.lambdaL is None or args.lambdaR is None:
            raise UsageError("--lambdaL and --lambdaR go together")
        return Weight(_scalars(args.lambdaL), _scalars(args.lambdaR))
    if "lambdaL" in data:
        return Weight.from_json(data)
    return None


def _module(args, data: dict) -> tuple[HModule, Optional[list[Segment]], str]:
    """Module from --module, --segments, an input file, or a weight (its Gamma-image)."""
    if getattr(args, "module", None):
        return HModule.from_json(_load_json(args.module)), None, args.module
    if getattr(args, "segments", None):
        segs = [Segment.parse(s) for s in args.segments]
        return induce_all([steinberg(s) for s in segs], args.dim_cap), segs, "x".join(args.segments)
    if "S" in data and "Y" in data:
        return HModule.from_json(data), None, args.input
    lam = _weight(args, data)
    if lam is None:
        raise UsageError("no module given: use --module, --segments, --input or --lambdaL/--lambdaR")
    segs = [s for s in lam.segments() if not s.is_empty]
    return gamma_module(lam, args.dim_cap), segs, f"Gamma X{lam}"


def _index(args, data: dict) -> Optional[int]:
    if args.i is not None:
        return args.i
    return data.get("i")


def _point(args, data: dict) -> Optional[Scalar]:
    if args.a is not None:
        return Scalar.parse(args.a)
    if "a" in data:
        return Scalar.parse(str(data["a"]))
    return None


# -- subcommands --------------------------------------------------------------


def cmd_relations(args):
    data = _input_data(args)
    M, _, label = _module(args, data)
    if args.perturb:
        if M.m < 2:
            raise UsageError("--perturb needs m >= 2")
        M = perturb(M)
        label = f"perturbed {label}"
    return verify_relations(M, label)


def cmd_gamma(args):
    data = _input_data(args)
    lam = _weight(args, data)
    if lam is None:
        raise UsageError("gamma needs --lambdaL/--lambdaR or --input")
    M = gamma_module(lam, args.dim_cap)
    rep = Report(f"gamma {lam}", lam.to_json())
    rep.add("dim = m!/prod(mu_k!)", gamma_dimension(lam), M.dim)
    rep.add("defining relations", None, check_relations(M).first_failure)
    rep.outputs["module"] = M
    return rep


def _jac_common(args, direction: Direction):
    data = _input_data(args)
    i, a = _index(args, data), _point(args, data)
    lam = _weight(args, data)
    if i is not None and a is None:
        if lam is None:
            raise UsageError("--i needs a weight (--lambdaL/--lambdaR)")
        rep = verify_theorem_main_module(lam, i, direction, args.dim_cap)
        if rep.level == "module" and not any(x < 0 for x in lam.mu) and sum(lam.mu):
            M = gamma_module(lam, args.dim_cap)
            a = rep.inputs["a"]
            J = jacquet(M, a) if direction is Direction.RAISE_RIGHT else cojacquet(M, a)
            rep.outputs["module"] = J
        return rep
    if a is None:
        raise UsageError("give --a (eigenvalue) or --i (translation index)")
    M, _, label = _module(args, data)
    if M.m < 1:
        raise UsageError("Jacquet functors need m >= 1")
    J = jacquet(M, a) if direction is Direction.RAISE_RIGHT else cojacquet(M, a)
    name = "jac" if direction is Direction.RAISE_RIGHT else "cojac"
    rep = Report(f"{name} {label} a={a}", {"m": M.m, "dim": M.dim, "a": a})
    rep.add("result satisfies relations", None, check_relations(J).first_failure)
    rep.outputs["dim"] = J.dim
    rep.outputs["y_weights"] = y_weight_multiset(J)
    rep.outputs["module"] = J
    return rep


def cmd_jac(args):
    return _jac_common(args, Direction.RAISE_RIGHT)


def cmd_cojac(args):
    return _jac_common(args, Direction.LOWER_LEFT)


def cmd_induce(args):
    if args.left and args.right:
        M1 = HModule.from_json(_load_json(args.left))
        M2 = HModule.from_json(_load_json(args.right))
        M = induce(M1, M2, args.dim_cap)
        label = f"{args.left} x {args.right}"
        expected = comb(M.m, M1.m) * M1.dim * M2.dim
    elif args.segments:
        segs = [Segment.parse(s) for s in args.segments]
        M = induce_all([steinberg(s) for s in segs], args.dim_cap)
        label = "x".join(args.segments)
        lengths = [len(s) for s in segs]
        expected = factorial(sum(lengths)) // prod(factorial(x) for x in lengths)
    else:
        raise UsageError("induce needs --left and --right, or --segments")
    rep = Report(f"induce {label}", {"m": M.m})
    rep.add("dim = binomial * dim * dim", expected, M.dim)
    rep.add("defining relations", None, check_relations(M).first_failure)
    rep.outputs["module"] = M
    return rep


def cmd_dual(args):
    data = _input_data(args)
    M, segs, label = _module(args, data)
    a = _point(args, data)
    if a is None:
        a = min(M.candidates) if M.candidates else Scalar(0)
    rep = verify_dual_suite(M, a, segs, label)
    rep.outputs["module"] = hermitian_dual_mod(M)
    return rep


def cmd_kcheck(args):
    data = _input_data(args)
    lam = _weight(args, data)
    i = _index(args, data)
    if lam is None or i is None:
        raise UsageError("kcheck needs a weight and --i")
    if args.direction == "both":
        directions = list(Direction)
    else:
        directions = [Direction.parse(args.direction)]
    suite = SuiteReport(f"kcheck {lam} i={i}")
    for direction in directions:
        reps = []
        for res in verify_kgroup_commutativity(lam, i, direction):
            rep = Report(
                f"{lam} i={i} w={list(res.w)} {direction.value}",
                {"w": list(res.w)}, level="kgroup",
            )
            rep.add("pathA == pathB", res.pathA, res.pathB)
            reps.append(rep)
        suite.extend(direction.value, reps)
    return suite


def cmd_suite(args):
    config = SuiteConfig(
        seed=args.seed,
        n_max=args.n_max,
        m_max=args.m_max,
        entry_range=args.entry_range,
        translation_classes=_scalars(args.classes),
        dim_cap=args.dim_cap,
        case_count=args.cases,
    )
    return run_suite(config, inject_fault=args.inject_fault)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hecketrans",
        description="Exact checks of translation functors against Jacquet functors.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--dim-cap", type=int, default=default_dim_cap())
    common.add_argument("--timing", action="store_true", help="include wall times in JSON")
    common.add_argument("--input", help="JSON input file ('-' for stdin)")

    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--lambdaL", help="comma-separated scalars, e.g. 2,1")
    weight.add_argument("--lambdaR", help="comma-separated scalars, e.g. 0,0")
    weight.add_argument("--i", type=int, help="1-based coordinate index")

    module = argparse.ArgumentParser(add_help=False)
    module.add_argument("--module", help="module JSON file")
    module.add_argument("--segments", nargs="+", help="Steinberg factors, e.g. [0,1] [0,0]")

    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("relations", parents=[common, weight, module], help="check defining relations")
    s.add_argument("--perturb", action="store_true", help="add 1 to y_2 first (negative control)")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("gamma", parents=[common, weight], help="build the Gamma-image of X(lambda)")
    s.set_defaults(func=cmd_gamma)

    for name, func in (("jac", cmd_jac), ("cojac", cmd_cojac)):
        s = sub.add_parser(name, parents=[common, weight, module], help=f"{name} functor")
        s.add_argument("--a", help="eigenvalue (overrides --i)")
        s.set_defaults(func=func)

    s = sub.add_parser("induce", parents=[common], help="parabolic induction")
    s.add_argument("--left", help="module JSON file")
    s.add_argument("--right", help="module JSON file")
    s.add_argument("--segments", nargs="+", help="Steinberg factors, induced left to right")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("dual", parents=[common, weight, module], help="Hermitian dual checks")
    s.add_argument("--a", help="eigenvalue for the Jacquet comparison")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("kcheck", parents=[common, weight], help="K-group commutativity over W'")
    s.add_argument("--direction", default="both", help="RaiseRight, LowerLeft or both")
    s.set_defaults(func=cmd_kcheck)

    s = sub.add_parser("suite", parents=[common], help="randomized run of every check")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=200)
    s.add_argument("--n-max", type=int, default=4)
    s.add_argument("--m-max", type=int, default=5)
    s.add_argument("--entry-range", type=int, default=1)
    s.add_argument("--classes", default="0,1/3,1/2i", help="translation class offsets")
    s.add_argument("--inject-fault", action="store_true", help="add a perturbed module")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, HeckeError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"hecketrans {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(result.to_json(timing=args.timing), indent=2))
    else:
        print(result.to_text())
    return EXIT_PASS if result.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
