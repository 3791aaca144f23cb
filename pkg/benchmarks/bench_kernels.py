"""Compare the compiled and pure-Python multiplicity kernels.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N]``.  Each row
times one exhaustive verifier workload per backend and checks that both
backends produced identical reports.
"""

import argparse
import time

from symdefect import kernels, verify

WORKLOADS = [
    ("gl-o dim<=12", lambda b: verify.verify_gl_o(12, backend=b)),
    ("gl-o dim<=16", lambda b: verify.verify_gl_o(16, backend=b)),
    ("pi-pibar dim<=16", lambda b: verify.verify_pi_pibar(16, backend=b)),
    ("o-oxo dim<=12", lambda b: verify.verify_o_oxo(12, backend=b)),
    ("o-oxo dim<=16", lambda b: verify.verify_o_oxo(16, backend=b)),
    ("gl-vv half<=6", lambda b: verify.verify_gl_vv(6, backend=b)),
    ("gl-vv half<=8", lambda b: verify.verify_gl_vv(8, backend=b)),
]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = kernels.available()
    header = f"{'workload':<18} {'cases':>7} " + " ".join(f"{b + ' (s)':>12}" for b in backends)
    if len(backends) > 1:
        header += f" {'speedup':>8}"
    print(header)
    for name, run in WORKLOADS:
        times, records = [], []
        for b in backends:
            t, report = best_of(lambda: run(b), args.repeat)
            times.append(t)
            records.append(report.to_record())
        assert all(r == records[0] for r in records), f"backends disagree on {name}"
        row = f"{name:<18} {records[0]['cases']:>7} " + " ".join(f"{t:>12.4f}" for t in times)
        if len(times) > 1:
            row += f" {times[-1] / times[0]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
