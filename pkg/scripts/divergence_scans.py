"""Rates at which the entropy diverges as each system approaches its zero-mode.

Prints the local slope dS/d(ln x) along each approach:

* two oscillators, x = R:              slope -> -1/2 (S ~ -(1/2) ln R + const)
* tri-partite, x = delta:              slope -> -1/4 (1 - xi ~ kappa2^(1/4))
* hydrogen, x = zeta:                  slope = -1 exactly
* mu-lattice, x = 1 - mu (N = 32):     slope -> -1/4
"""

import numpy as np

from zeromode import closed_forms as cf
from zeromode import hydrogen as hy
from zeromode import lattice as lt
from zeromode import tripartite as tp


def slopes(xs, fn):
    s = np.array([fn(x) for x in xs])
    return s, np.diff(s) / np.diff(np.log(xs))


def report(title, xs, fn):
    s, d = slopes(xs, fn)
    print(title)
    print(f"  {'x':>10} {'S':>12} {'dS/dlnx':>10}")
    for x, v, g in zip(xs[1:], s[1:], d):
        print(f"  {x:10.3e} {v:12.6f} {g:10.4f}")


def main():
    report("two oscillators (R)", np.geomspace(1e-1, 1e-8, 8), lambda r: cf.entropy_closed(r).nats)
    report("tri-partite, a = b = 1 (delta)", np.geomspace(1e-1, 1e-9, 9),
           lambda d: tp.entropy_x1((1.0, 1.0, 2.0 * (1.0 + d))).nats)
    report("hydrogen, eta = 1 (zeta)", np.geomspace(1e-1, 1e-8, 8), lambda z: hy.hydrogen_entropy(1.0, z).nats)
    report("mu-lattice, N = 32 (1 - mu)", np.geomspace(1e-1, 1e-7, 7), lambda x: lt.mu_entropy(1.0 - x, 32).nats)


if __name__ == "__main__":
    main()
