"""Tabulate the Sym^n family: semigroup, ideal, resolution size, blow-ups and diagonal partition counts."""
from __future__ import annotations

import argparse

from monoidkit import cones as C
from monoidkit.basicfn import partition_table, quasi_polynomial_fit
from monoidkit.monoid import (ambient_blowup_count, character_semigroup, find_nu, sym_weights, toric_ideal,
                              weight_cone)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--bound", type=int, default=20)
    args = parser.parse_args()
    print(f"{'n':>2}  {'ideal':<8} {'rays':>4} {'blowups':>7}  diagonal counts")
    for n in range(1, args.max_n + 1):
        w = sym_weights(n)
        gens = character_semigroup(w).generators
        fan = C.resolve_to_smooth_fan(weight_cone(w))
        nu = tuple(int(x) for x in find_nu(w).coords)
        table = partition_table(gens, args.bound)
        diag = []
        k = 0
        while tuple(k * x for x in nu) in table.entries and k < 12:
            diag.append(table.entries[tuple(k * x for x in nu)])
            k += 1
        fit = quasi_polynomial_fit(table, n, 1, line=nu)
        tag = "certified" if fit.certified else "fit failed"
        print(f"{n:>2}  {str(toric_ideal(gens)):<8} {len(fan.rays):>4} {ambient_blowup_count(n):>7}  "
              f"{diag} ({tag})")


if __name__ == "__main__":
    main()
