"""Numba vs numpy timings for the hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both paths are called explicitly (``use_numba=True/False``) so the
RADIOSES_DISABLE_NUMBA flag does not matter here, except that with the flag
set, or without numba installed, the "numba" column runs the plain-Python
body of the kernel and is expected to be slow.
"""
import argparse
import time

import numpy as np

from radioses._accel import HAVE_NUMBA, USE_NUMBA
from radioses.frontend._kernels import cfar_sums, dbscan_labels
from radioses.nn._kernels import lstm_backward, lstm_forward


def best_of(fn, repeat):
    fn()  # warm-up (and JIT compile)
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return min(ts)


def cases(rng):
    power = rng.exponential(size=(64, 61))
    yield "cfar 64x61", lambda nb: cfar_sums(power, 4, 4, 2, 2, use_numba=nb)

    pts = np.unique(rng.integers(0, 60, size=(600, 2)), axis=0)
    yield f"dbscan {len(pts)} pts", lambda nb: dbscan_labels(pts, (64, 61), 2.0, 3, use_numba=nb)

    for B, H, T in ((16, 32, 63), (256, 32, 63), (128, 128, 47)):
        xw = rng.standard_normal((T, B, 4 * H)).astype(np.float32)
        wh = (rng.standard_normal((H, 4 * H)) * 0.1).astype(np.float32)
        h0 = np.zeros((B, H), np.float32)
        c0 = np.zeros((B, H), np.float32)
        hs, cs, gates = lstm_forward(xw, wh, h0, c0, use_numba=False)
        dh = rng.standard_normal(hs.shape).astype(np.float32)
        yield f"lstm fwd B={B} H={H} T={T}", lambda nb: lstm_forward(xw, wh, h0, c0, use_numba=nb)
        yield f"lstm bwd B={B} H={H} T={T}", lambda nb: lstm_backward(dh, gates, cs, c0, wh, use_numba=nb)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    print(f"numba importable: {HAVE_NUMBA}   default path: {'numba' if USE_NUMBA else 'numpy'}")
    print(f"{'kernel':28s} {'numpy (s)':>11s} {'numba (s)':>11s} {'speedup':>8s}")
    rng = np.random.default_rng(0)
    rows = []
    for name, fn in cases(rng):
        t_np = best_of(lambda: fn(False), args.repeat)
        t_nb = best_of(lambda: fn(True), args.repeat)
        rows.append((name, t_np, t_nb))
        print(f"{name:28s} {t_np:11.2e} {t_nb:11.2e} {t_np / t_nb:8.2f}")
    return rows


if __name__ == "__main__":
    main()
