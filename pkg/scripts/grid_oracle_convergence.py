"""Error of the brute-force grid entropy against the closed form as the grid is refined."""

from zeromode import closed_forms as cf


def main():
    print(f"{'R':>5} {'n':>6} {'S_grid':>20} {'|S_grid - S_closed|':>22}")
    for r in (0.05, 0.3, 0.5, 0.8):
        exact = cf.entropy_closed(r).nats
        for n in (64, 128, 256, 512, 1024):
            s = cf.grid_oracle_entropy(cf.CoupledPair.from_ratio(r), points=n).nats
            print(f"{r:5.2f} {n:6d} {s:20.15f} {abs(s - exact):22.3e}")


if __name__ == "__main__":
    main()
