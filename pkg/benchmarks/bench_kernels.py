"""Time the compiled and pure-Python integer kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--count 200]

Prints one row per kernel and matrix size with the best-of-repeat time per
call for each available backend and the speedup of the compiled one.
"""
import argparse
import random
import timeit

from nspairs import _pykernels
from nspairs.linking import LinkingMatrix, build_R


def random_skew(rng, k, lo=-9, hi=9):
    a = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            v = rng.randint(lo, hi)
            a[i][j], a[j][i] = v, -v
    return a


def workloads(rng, count):
    """(kernel name, size label, callable taking a backend module)."""
    jobs = []
    for k in (4, 8, 12):
        # small entries keep 12x12 minors inside int64 so no call falls back
        mats = [random_skew(rng, k, -4, 4) for _ in range(count)]
        jobs.append(("det", f"{k}x{k}", mats, lambda be, m: be.det(m)))
        jobs.append(("pfaffian", f"{k}x{k}", mats, lambda be, m: be.pfaffian(m)))
    for k in (2, 4, 6):
        mats = [build_R(LinkingMatrix.from_rows(random_skew(rng, k, -3, 3), -1)).to_rows()
                for _ in range(count)]
        size = 2 * k + 2
        jobs.append(("smith(R)", f"{size}x{size}", mats,
                     lambda be, m, n=size: be.smith_diagonal(m, n)))
    return jobs


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--count", type=int, default=200, help="matrices per workload")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    modules = {"python": _pykernels}
    try:
        from nspairs import _ckernels
        modules["cython"] = _ckernels
    except ImportError:
        print("compiled kernels not built; timing the Python fallback only")
    names = sorted(modules)
    header = f"{'kernel':<10} {'size':>6} " + " ".join(f"{n + ' us':>12}" for n in names)
    if len(names) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for kernel, size, mats, call in workloads(random.Random(args.seed), args.count):
        per_call = {}
        reference = None
        for name in names:
            mod = modules[name]
            results = [call(mod, m) for m in mats]
            if reference is None:
                reference = results
            elif results != reference:
                raise SystemExit(f"{kernel} {size}: backends disagree")
            best = min(timeit.repeat(lambda: [call(mod, m) for m in mats],
                                     number=1, repeat=args.repeat))
            per_call[name] = best / len(mats) * 1e6
        row = f"{kernel:<10} {size:>6} " + " ".join(f"{per_call[n]:12.1f}" for n in names)
        if len(names) == 2:
            row += f" {per_call['python'] / per_call['cython']:7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
