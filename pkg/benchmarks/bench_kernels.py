"""Compare the compiled kernels with the pure-Python reference.

    python3 benchmarks/bench_kernels.py [--dim 25 --degrees 5,5,5] [--repeat 3]

Times polynomial convolution and the associativity and pairing checks on the
structure-constant tensor of one ring, and confirms both backends agree.
"""

import argparse
import random
import timeit

from qchkit import _purekernels
from qchkit.grassmann import CIData
from qchkit.qring import _integer_tensor, build_ring

try:
    from qchkit import _speedups
except ImportError:
    _speedups = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=25)
    ap.add_argument("--degrees", default="5,5,5")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _speedups is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")

    ci = CIData(args.dim, tuple(int(x) for x in args.degrees.split(",")))
    ring = build_ring(ci)
    flat, _ = _integer_tensor(ring)
    size = ring.size
    gram = [int(v) for row in ring.gram for v in row]
    parity = [deg % 2 for deg in ring.degrees]
    rng = random.Random(0)
    small = [[rng.randint(-1000, 1000) for _ in range(400)] for _ in range(2)]
    big = [[rng.randint(-(10**30), 10**30) for _ in range(200)] for _ in range(2)]

    jobs = [
        ("convolve 400x400 (int64)", lambda m: m.convolve(*small)),
        ("convolve 200x200 (bignum)", lambda m: m.convolve(*big)),
        (f"associativity {size}^3", lambda m: m.associativity_defects(flat, size)),
        (f"pairing laws {size}^3", lambda m: m.pairing_defects(flat, gram, parity, size)),
    ]
    print(f"ring {ci.label()}: basis size {size}")
    print(f"{'kernel':<28}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, job in jobs:
        if job(_purekernels) != job(_speedups):
            raise SystemExit(f"backends disagree on {name}")
        tp = best(lambda: job(_purekernels), args.repeat)
        tc = best(lambda: job(_speedups), args.repeat)
        print(f"{name:<28}{tp:>10.4f}{tc:>12.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
