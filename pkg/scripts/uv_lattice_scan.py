"""Half-chain entropy at fixed physical length while the lattice spacing shrinks."""

from zeromode.lattice import LatticeParams, half_chain_entropy


def main(length: float = 8.0, mass: float = 1.0):
    print(f"{'a':>8} {'N':>5} {'S':>12}")
    for a in (1.0, 0.5, 0.25, 0.125, 0.0625):
        n = int(round(length / a))
        print(f"{a:8.4f} {n:5d} {half_chain_entropy(LatticeParams(n, a, mass)).nats:12.6f}")


if __name__ == "__main__":
    main()
