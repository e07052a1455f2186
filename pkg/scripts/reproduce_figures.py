"""Write the data behind all four figures as CSV files.

    python3 scripts/reproduce_figures.py [outdir]

Each file has a header row; plot with any external tool.
"""

import pathlib
import sys

from zeromode import cli

JOBS = [
    ("fig1.csv", ["fig1", "--grid", "1e-4:1:400:geom"]),
    ("fig2.csv", ["fig2", "--grid", "1e-4:1:400:geom"]),
    ("fig3.csv", ["fig3", "--grid", "0:4:401", "--zeta", "1e-1,1e-2,1e-3"]),
    ("fig4.csv", ["fig4", "--grid", "0:0.5:101"]),
]


def main(outdir: str = "figures") -> int:
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, argv in JOBS:
        extra = ["--summary", str(out / "fig3_entropy.csv")] if argv[0] == "fig3" else []
        code = cli.main(argv + extra + ["--out", str(out / name)])
        if code:
            return code
        print(f"wrote {out / name}")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:2]))
