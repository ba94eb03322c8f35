"""Compare the compiled and pure-Python float kernels.

    python benchmarks/bench_kernels.py [--n 200] [--repeat 3]

Times Sturm-count bisection for every eigenvalue of a random symmetric
tridiagonal matrix and a grid of float pseudo cosine sequences, once per
available backend, and checks the backends agree.
"""
import argparse
import random
import timeit

from drgtight.kernels import backends


def problem(n, seed=0):
    rng = random.Random(seed)
    diag = [rng.uniform(-5, 5) for _ in range(n)]
    offsq = [rng.uniform(0.5, 4) for _ in range(n - 1)]
    b = [rng.uniform(1, 3) for _ in range(n)] + [0.0]
    a = [rng.uniform(0, 2) for _ in range(n + 1)]
    c = [0.0] + [rng.uniform(1, 3) for _ in range(n)]
    return diag, offsq, (b, a, c)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=200, help="matrix size / diameter")
    parser.add_argument("--thetas", type=int, default=2000, help="points in the sequence grid")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    diag, offsq, (b, a, c) = problem(args.n)
    bound = 20.0
    grid = [-3 + 6 * j / (args.thetas - 1) for j in range(args.thetas)]
    results = {}
    print(f"n = {args.n}, sequence grid = {args.thetas} points, best of {args.repeat}")
    print(f"{'backend':<8} {'bisection (s)':>14} {'sequences (s)':>14}")
    for name, mod in sorted(backends().items()):
        t_bis = min(timeit.repeat(lambda: mod.bisect_eigenvalues(diag, offsq, -bound, bound, 0.0),
                                  number=1, repeat=args.repeat))
        t_seq = min(timeit.repeat(lambda: [mod.pcs_float(b, a, c, t) for t in grid],
                                  number=1, repeat=args.repeat))
        results[name] = (t_bis, t_seq, mod.bisect_eigenvalues(diag, offsq, -bound, bound, 0.0))
        print(f"{name:<8} {t_bis:>14.4f} {t_seq:>14.4f}")
    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        print(f"speedup: bisection {py[0] / cy[0]:.1f}x, sequences {py[1] / cy[1]:.1f}x")
        print(f"eigenvalues identical: {py[2] == cy[2]}")
    else:
        print("compiled kernels not available; only the Python backend was timed")


if __name__ == "__main__":
    main()
