#!/usr/bin/env python3
"""Sweep the closed-form total-rank table against the assembled complex.

The table has two advisory cells (tau > 0 with n < 2*tau, and tau < 0 with
n = 2*tau).  This sweep shows where they differ from the pairing pipeline:
the second cell disagrees only at p = 2, where the chord sequence
(rho_12, rho_1) has no matching multiplication and the long staircase
differential cannot exist.
"""

from __future__ import annotations

from collections import Counter

from cablefloer import compute_cable_hfk, synthesize_delta, table_rank, validate_thin


def main() -> None:
    header = f"{'tau':>4} {'s':>2} {'p':>2} {'n':>3} {'pipeline':>9} {'table':>6} {'cell':<10}"
    print(header)
    print("-" * len(header))
    outcomes: Counter[str] = Counter()
    for tau in (-2, -1, 0, 1, 2):
        for counts in ({}, {0: 1}):
            delta = synthesize_delta(tau, counts)
            s = validate_thin(delta, tau).s
            for p in (2, 3, 4):
                for n in range(-4, 5):
                    total = compute_cable_hfk(delta, tau, p, n).table.total
                    value, advisory = table_rank(tau, s, p, n)
                    cell = "advisory" if advisory else "exact"
                    status = "ok" if total == value else f"DIFF {total - value:+d}"
                    outcomes[f"{cell}:{status.split()[0]}"] += 1
                    if total != value:
                        print(f"{tau:>4} {s:>2} {p:>2} {n:>3} {total:>9} {value:>6} "
                              f"{cell:<10} {status}")
    print()
    for key in sorted(outcomes):
        print(f"{key:>16}: {outcomes[key]}")


if __name__ == "__main__":
    main()
