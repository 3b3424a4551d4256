"""Extended-chain trace and qubit-sector margins side by side.

Prints how the extended chain's LHS shrinks with n while its closing term
stays at 1, then the qubit-sector margin at increasing n for several window
widths, against its exact large-n limit 1 - cos(pi/gamma).
"""
import math

from chainbell.chain import zeno_limit_trace
from chainbell.qubit_sector import SectorScenario, large_n_limit, sector_chain_margin


def main():
    print("extended chain, d=3")
    print(f"{'n':>6} {'lhs':>12} {'rhs':>6} {'n*lhs':>10}")
    for r in zeno_limit_trace(3, [1, 2, 4, 8, 16, 32, 64, 128]):
        print(f"{r.scenario.n:6d} {r.lhs:12.8f} {r.rhs:6.3f} {r.scenario.n * r.lhs:10.6f}")
    print(f"n*lhs -> 4 pi^2/27 = {4 * math.pi**2 / 27:.6f}")

    print("\nqubit sector")
    print(f"{'gamma':>6} " + " ".join(f"n={n:<9d}" for n in (2, 10, 100, 10_000)) + "   limit")
    for gamma in (1, 2, 4, 8, 16):
        vals = [sector_chain_margin(SectorScenario(n, gamma), check=n <= 100)
                for n in (2, 10, 100, 10_000)]
        print(f"{gamma:6g} " + " ".join(f"{v:<11.6f}" for v in vals) + f" {large_n_limit(gamma):.6f}")


if __name__ == "__main__":
    main()
