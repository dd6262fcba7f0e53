"""Compare the compiled and plain-numpy kernels on the two hot loops.

Runs the Jacobi eigensolver and the Cholesky factorization over a range of
dimensions, checks that both backends agree on the results, and prints a
timing table with the speedup of the compiled path.

Usage: python3 benchmarks/bench_backends.py [--dims 8,16,32,64,96] [--repeat 5]
"""

import argparse
import time

import numpy as np

from pickjet._backend import available_backends, load_backend


def random_hermitian(rng, n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return np.ascontiguousarray(0.5 * (m + m.conj().T))


def time_call(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def bench_jacobi(impl, h, repeat):
    def run():
        work = h.copy()
        v = np.eye(h.shape[0], dtype=np.complex128)
        impl.jacobi_sweeps(work, v, 1e-14 * np.linalg.norm(h), 50, 1e-30)
        return work

    elapsed = time_call(repeat, run)
    work = run()
    return elapsed, np.sort(work.diagonal().real)


def bench_cholesky(impl, h, repeat):
    spd = np.ascontiguousarray(h @ h.conj().T + h.shape[0] * np.eye(h.shape[0]))

    def run():
        l = np.zeros_like(spd)
        impl.cholesky_factor(spd, l, 1e-13)
        return l

    elapsed = time_call(repeat, run)
    return elapsed, run()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", default="8,16,32,64,96")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    dims = [int(d) for d in args.dims.split(",")]

    names = available_backends()
    impls = {name: load_backend(name) for name in names}
    print(f"backends: {', '.join(names)}")
    header = f"{'kernel':<10}{'dim':>5}" + "".join(f"{name + ' (ms)':>15}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    rng = np.random.default_rng(2024)
    for dim in dims:
        h = random_hermitian(rng, dim)
        for kernel, bench in (("jacobi", bench_jacobi), ("cholesky", bench_cholesky)):
            times = {}
            results = {}
            for name in names:
                times[name], results[name] = bench(impls[name], h, args.repeat)
            if len(names) == 2:
                a, b = (results[n] for n in names)
                gap = float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
                assert gap <= 1e-10 * max(1.0, float(np.linalg.norm(h))), (
                    f"backends disagree at dim {dim}: gap {gap:.3e}"
                )
            row = f"{kernel:<10}{dim:>5}" + "".join(
                f"{times[name] * 1e3:>15.3f}" for name in names
            )
            if len(names) == 2:
                row += f"{times[names[1]] / times[names[0]]:>10.1f}x"
            print(row)


if __name__ == "__main__":
    main()
