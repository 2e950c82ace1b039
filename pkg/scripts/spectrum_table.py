"""Tabulate the y_1 spectrum of Gamma-images against the multinomial prediction.

Sweeps every mu with |mu| = m over a fixed lambdaR (repeated entries make
eigenvalues merge) and prints one row per weight.

    python scripts/spectrum_table.py --m 4 --lambdaR 0,0,1
"""

import argparse
import itertools
import time

from hecketrans import Scalar, Weight, gamma_module, spectrum_y1
from hecketrans.verify import predicted_spectrum


def compositions(total, parts):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cuts + (total + parts - 1,)
        yield tuple(bounds[k + 1] - bounds[k] - 1 for k in range(parts))


def fmt(counts):
    return " ".join(f"{a}:{c}" for a, c in sorted(counts.items()))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--lambdaR", default="0,0,1")
    args = p.parse_args()
    right = [Scalar.parse(x) for x in args.lambdaR.split(",")]

    bad = 0
    print(f"{'mu':<16}{'dim':>5}  {'computed':<28}{'predicted':<28}{'ms':>8}")
    for mu in compositions(args.m, len(right)):
        lam = Weight.of([r + k for r, k in zip(right, mu)], right)
        t0 = time.perf_counter()
        M = gamma_module(lam)
        got = spectrum_y1(M)
        ms = 1000 * (time.perf_counter() - t0)
        want = predicted_spectrum(lam)
        bad += got != want
        flag = "" if got == want else "  MISMATCH"
        print(f"{str(mu):<16}{M.dim:>5}  {fmt(got):<28}{fmt(want):<28}{ms:>8.1f}{flag}")
    print(f"{bad} mismatches")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
