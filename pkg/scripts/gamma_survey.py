"""Gamma factors of tame characters for small primes, with their Gauss-sum coefficients."""
from __future__ import annotations

import argparse

from monoidkit.padic import tate
from monoidkit.padic.schwartz import PAdicContext


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="*", default=[2, 3, 5, 7])
    args = parser.parse_args()
    for p in args.primes:
        ctx = PAdicContext(p)
        for index in range(p - 1):
            chi = tate.TameCharacter(p, index)
            g = tate.tate_gamma(ctx, chi)
            ok = g.gamma == tate.expected_gamma(ctx, chi)
            print(f"q={p} index={index}: independent={g.independent} tested={g.tested} "
                  f"closed form={'yes' if ok else 'NO'}  gamma={g.gamma.coefficient_arrays()}")


if __name__ == "__main__":
    main()
