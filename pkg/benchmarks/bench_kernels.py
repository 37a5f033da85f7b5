"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on the addition/multiplication tables of a
catalog-sized ring and checks both backends return the same answer.
"""

import argparse
import timeit

import numpy as np

from ringlab import _pykernels, kernels
from ringlab.core import cyclic_ring, direct_product, matrix_ring, upper_triangular_ring


def workloads():
    F2 = cyclic_ring(2)
    rings = [
        ("Z/64", cyclic_ring(64)),
        ("M2(F2) x T2(F2)", direct_product([matrix_ring(F2, 2), upper_triangular_ring(F2, 2)])),
        ("M2(Z/3)", matrix_ring(cyclic_ring(3), 2)),
        ("T3(F2) x Z/4", direct_product([upper_triangular_ring(F2, 3), cyclic_ring(4)])),
    ]
    for name, R in rings:
        add = np.ascontiguousarray(R.add, dtype=np.int32)
        mul = np.ascontiguousarray(R.mul, dtype=np.int32)
        seed = np.zeros(R.order, dtype=np.uint8)
        seed[1] = 1
        ops = np.ascontiguousarray(np.concatenate([mul, mul.T]), dtype=np.int32)
        yield name, R.order, {
            "assoc": (mul,),
            "left_distrib": (add, mul),
            "quasi_regular": (add, mul, True),
            "closure": (add, seed, ops),
        }


FUNCS = {
    "assoc": "assoc_violations",
    "left_distrib": "left_distrib_violations",
    "quasi_regular": "quasi_regular_witnesses",
    "closure": "closure",
}


def same(a, b):
    if isinstance(a, tuple):
        return tuple(a) == tuple(b)
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    compiled = kernels.BACKENDS.get("cython")
    if compiled is None:
        print("compiled kernels are not built; only the fallback is available")
    print(f"{'ring':<18}{'order':>6}  {'kernel':<14}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for name, order, cases in workloads():
        for kernel, fargs in cases.items():
            fn = FUNCS[kernel]
            py = getattr(_pykernels, fn)
            t_py = min(timeit.repeat(lambda: py(*fargs), number=1, repeat=args.repeat)) * 1e3
            if compiled is None:
                print(f"{name:<18}{order:>6}  {kernel:<14}{t_py:>11.2f}{'-':>11}{'-':>9}")
                continue
            c = getattr(compiled, fn)
            assert same(py(*fargs), c(*fargs)), (name, kernel)
            t_c = min(timeit.repeat(lambda: c(*fargs), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<18}{order:>6}  {kernel:<14}{t_py:>11.2f}{t_c:>11.2f}{t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
