"""Compare the compiled and pure-Python kernels on law checking and colour refinement.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from sammycat import kernels
from sammycat.fincat import chain, discrete, indiscrete
from sammycat.constructions import coproduct, product


def workloads():
    rng = random.Random(7)
    cats = {
        "chain(12)": chain(12),
        "indiscrete(7)": indiscrete(7),
        "chain(4)xchain(4)": product(chain(4), chain(4))[0],
        "discrete(40)+chain(8)": coproduct(discrete(40), chain(8))[0],
    }
    for name, c in cats.items():
        colors = [rng.randrange(3) for _ in range(c.n_mor)]
        yield name, c, colors


def bench(backend, repeat):
    kernels.use(backend)
    rows = []
    for name, c, colors in workloads():
        t_laws = min(timeit.repeat(lambda: kernels.check_laws(c.n_obj, c.src, c.tgt, c.ident, c.comp),
                                   number=5, repeat=repeat)) / 5
        t_ref = min(timeit.repeat(lambda: kernels.refine_signatures(colors, c.src, c.tgt, c.comp),
                                  number=5, repeat=repeat)) / 5
        rows.append((name, c.n_mor, t_laws, t_ref))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"]
    try:
        kernels.use("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled kernels unavailable; timing the pure-Python fallback only")
    results = {b: bench(b, args.repeat) for b in backends}
    print(f"{'workload':24} {'mor':>5} {'backend':>8} {'laws ms':>9} {'refine ms':>10}")
    for i, (name, n, _, _) in enumerate(results[backends[0]]):
        for b in backends:
            _, _, tl, tr = results[b][i]
            print(f"{name:24} {n:5d} {b:>8} {tl * 1e3:9.3f} {tr * 1e3:10.3f}")
    if len(backends) == 2:
        for i, (name, *_rest) in enumerate(results["cython"]):
            sl = results["python"][i][2] / results["cython"][i][2]
            sr = results["python"][i][3] / results["cython"][i][3]
            print(f"speedup {name}: laws x{sl:.1f}, refine x{sr:.1f}")


if __name__ == "__main__":
    main()
