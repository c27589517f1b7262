"""Compiled vs pure-Python RNG core.

Times the raw kernels (uniform words, polar normals, Fisher-Yates) and one
SU training epoch on a synthetic source, once per backend. Both backends
produce identical numbers, so only wall time differs.

    python3 benchmarks/bench_core.py [--n 200000] [--repeats 3]
"""
import argparse
import time

import numpy as np

from semcomlab import su
from semcomlab.rng import Stream, Streams, get_backend
from semcomlab.semsource import Dataset


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def su_epoch(backend, n=2000):
    s = Stream(1, backend)
    z2 = s.integers(10, n)
    x = Stream(2, backend).normal((10, 128))[z2] + 0.5 * s.normal((n, 128))
    train = Dataset(x, z2 % 2, z2)
    streams = Streams(0, backend).child("su2")
    model = su.SuModel.build(2, 32, streams["init"])
    cfg = su.SuTrainConfig(epochs=1, dre_samples=500)
    return lambda: su.train_su(model.copy(), None, train, su.PriorMode("iopm_gaussian"), cfg, streams)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000, help="variates per kernel call")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    try:
        get_backend("compiled")
        backends = ("compiled", "python")
    except ImportError:
        print("compiled core not built; timing the Python fallback only")
        backends = ("python",)

    cases = {
        "uniform": lambda b: (lambda: Stream(0, b).uniform(args.n)),
        "normal": lambda b: (lambda: Stream(0, b).normal(args.n)),
        "permutation": lambda b: (lambda: Stream(0, b).permutation(args.n)),
        "su_epoch": su_epoch,
    }
    print(f"{'case':12s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, make in cases.items():
        t = [best_of(make(b), args.repeats) for b in backends]
        speed = f"{t[1] / t[0]:8.1f}x" if len(t) == 2 else ""
        print(f"{name:12s} " + " ".join(f"{v:9.4f}s" for v in t) + f"  {speed}")
    same = np.array_equal(Stream(9, backends[0]).normal(1000), Stream(9, backends[-1]).normal(1000))
    print(f"backends bit-identical on 1000 normals: {same}")


if __name__ == "__main__":
    main()
