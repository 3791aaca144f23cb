"""Exhaustive desk-scale checks of the negative-defect inequalities.

Every verifier enumerates all representations allowed by a theorem's
hypotheses up to a dimension bound and checks an integer inequality
``defect < bound`` (equivalently ``defect <= bound - 1``).  Enumeration
order is fixed, so reports are reproducible.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

import numpy as np

from . import kernels, oracle
from .reps import (
    GradedRep,
    UngradedRep,
    bar_sum_graded,
    bar_tensor_graded,
    closed_form_tensor_defect,
    closed_form_wedge2_defect,
    defect,
    dual,
    irrep,
    tensor,
    wedge2,
)

FAMILIES = ("gl-o", "o-oxo", "pi-pibar", "gl-vv", "closed-forms", "oracle")


@dataclass(frozen=True)
class GradedConstraint:
    require_self_dual: bool = False
    require_equal_parts: bool = False
    require_nonzero: bool = True


@dataclass
class VerifyReport:
    family: str
    range: dict
    cases_checked: int = 0
    violations: list = field(default_factory=list)
    min_margin: int | None = None
    backend: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations and self.cases_checked > 0

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        margins = [m for m in (self.min_margin, other.min_margin) if m is not None]
        return VerifyReport(
            family=self.family,
            range=self.range,
            cases_checked=self.cases_checked + other.cases_checked,
            violations=self.violations + other.violations,
            min_margin=min(margins) if margins else None,
            backend=self.backend or other.backend,
        )

    def to_record(self) -> dict:
        return {
            "family": self.family,
            "range": self.range,
            "cases": self.cases_checked,
            "violations": [list(v) for v in self.violations],
            "min_margin": self.min_margin,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    def to_text(self) -> str:
        rng = " ".join(f"{k}={v}" for k, v in self.range.items())
        lines = [
            f"family: {self.family}",
            f"range: {rng}",
            f"cases: {self.cases_checked}",
            f"violations: {len(self.violations)}",
        ]
        if self.min_margin is not None:
            lines.append(f"min_margin: {self.min_margin}")
        for case, value, bound in self.violations:
            lines.append(f"  VIOLATION {case}: {value} (bound {bound})")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


# -- enumeration ---------------------------------------------------------


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple]:
    """Partitions of ``n`` as non-increasing tuples, reverse-lexicographic."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _grouped(parts):
    """Partition parts -> [(lam, multiplicity)] with lam descending."""
    out = []
    for part in parts:
        lam = part - 1
        if out and out[-1][0] == lam:
            out[-1][1] += 1
        else:
            out.append([lam, 1])
    return out


def _ungraded_counts(n: int) -> Iterator[np.ndarray]:
    for parts in _partitions(n):
        u = np.zeros(n, dtype=np.int64)
        for part in parts:
            u[part - 1] += 1
        yield u


def enum_ungraded(n: int) -> Iterator[UngradedRep]:
    """Every ungraded representation of dimension exactly ``n``, once each."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for parts in _partitions(n):
        yield UngradedRep(p - 1 for p in parts)


def _graded_counts(n: int, c: GradedConstraint) -> Iterator[np.ndarray]:
    for parts in _partitions(n):
        groups = _grouped(parts)
        choices = []
        for lam, m in groups:
            if c.require_self_dual and lam % 2 == 1:
                # odd weights flip sign under duality, so the signs must pair up
                if m % 2:
                    break
                choices.append((m // 2,))
            else:
                choices.append(range(m, -1, -1))
        else:
            for plus_counts in product(*choices):
                a = np.zeros((n, 2), dtype=np.int64)
                even = 0
                for (lam, m), plus in zip(groups, plus_counts):
                    a[lam, 0] = plus
                    a[lam, 1] = m - plus
                    even += plus * ((lam + 2) // 2) + (m - plus) * ((lam + 1) // 2)
                if c.require_equal_parts and 2 * even != n:
                    continue
                yield a


def enum_graded(n: int, c: GradedConstraint = GradedConstraint()) -> Iterator[GradedRep]:
    """Every graded representation of dimension ``n`` satisfying ``c``, once each."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for a in _graded_counts(n, c):
        yield GradedRep.from_counts(a)


def partition_count(n: int) -> int:
    """Number of integer partitions of ``n``, by the coin-change recurrence."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


# -- chunk workers ------------------------------------------------------------


def _inequality_chunk(family: str, n: int, backend: str | None) -> VerifyReport:
    K = kernels.get(backend)
    if family == "gl-o":
        bound, cases = -1, ((u, K.bar_tensor_defect(u)) for u in _ungraded_counts(n))
    elif family == "pi-pibar":
        bound, cases = 0, ((u, K.bar_sum_defect(u)) for u in _ungraded_counts(n))
    elif family == "o-oxo":
        c = GradedConstraint(require_self_dual=True, require_equal_parts=True)
        bound, cases = 0, ((a, K.wedge2_defect(a)) for a in _graded_counts(n, c))
    elif family == "gl-vv":
        c = GradedConstraint(require_equal_parts=True)
        bound, cases = 0, ((a, K.tensor_defect(a, K.dual_counts(a))) for a in _graded_counts(n, c))
    else:
        raise ValueError(f"unknown family {family!r}")
    report = VerifyReport(family, {}, backend=K.BACKEND)
    worst = None
    for arr, d in cases:
        report.cases_checked += 1
        worst = d if worst is None else max(worst, d)
        if d > bound - 1:
            rep = UngradedRep({l: int(m) for l, m in enumerate(arr) if m}) if arr.ndim == 1 else GradedRep.from_counts(arr)
            report.violations.append((str(rep), d, bound))
    if worst is not None:
        report.min_margin = bound - worst
    return report


def _run(family, rng, chunks, worker, jobs):
    report = VerifyReport(family, rng)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(worker, *zip(*chunks)))
    else:
        parts = [worker(*args) for args in chunks]
    for part in parts:
        report = report.merge(part)
    report.range = rng
    return report


def verify_gl_o(max_dim: int = 12, jobs: int = 1, backend: str | None = None) -> VerifyReport:
    """``defect(pi (x) pibar) < -1`` for every ungraded ``pi`` with ``2 <= dim <= max_dim``."""
    if max_dim < 2:
        raise ValueError("max_dim must be >= 2")
    chunks = [("gl-o", n, backend) for n in range(2, max_dim + 1)]
    return _run("gl-o", {"min_dim": 2, "max_dim": max_dim}, chunks, _inequality_chunk, jobs)


def verify_pi_pibar(max_dim: int = 12, jobs: int = 1, backend: str | None = None) -> VerifyReport:
    """``defect(pi + pibar) < 0`` for every ungraded ``pi`` with ``1 <= dim <= max_dim``."""
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    chunks = [("pi-pibar", n, backend) for n in range(1, max_dim + 1)]
    return _run("pi-pibar", {"min_dim": 1, "max_dim": max_dim}, chunks, _inequality_chunk, jobs)


def verify_o_oxo(max_dim: int = 12, jobs: int = 1, backend: str | None = None) -> VerifyReport:
    """``defect(wedge2(pi)) < 0`` for nonzero self-dual graded ``pi`` with equal even and odd parts."""
    if max_dim < 2:
        raise ValueError("max_dim must be >= 2")
    chunks = [("o-oxo", n, backend) for n in range(2, max_dim + 1, 2)]
    return _run("o-oxo", {"min_dim": 2, "max_dim": max_dim}, chunks, _inequality_chunk, jobs)


def verify_gl_vv(max_half: int = 6, jobs: int = 1, backend: str | None = None) -> VerifyReport:
    """``defect(pi (x) pi*) < 0`` for graded ``pi`` with ``dim pi_0 = dim pi_1 <= max_half``.

    Graded sl2 maps into ``gl(V + V)`` with the block grading are graded
    representations ``W`` with equal even and odd parts, and the adjoint
    representation is ``End(W) = W (x) W*``.
    """
    if max_half < 1:
        raise ValueError("max_half must be >= 1")
    chunks = [("gl-vv", 2 * h, backend) for h in range(1, max_half + 1)]
    return _run("gl-vv", {"min_half": 1, "max_half": max_half}, chunks, _inequality_chunk, jobs)


def _closed_forms_chunk(l1: int, max_lambda: int) -> VerifyReport:
    report = VerifyReport("closed-forms", {})
    for w1 in (1, -1):
        for l2 in range(max_lambda + 1):
            for w2 in (1, -1):
                got = closed_form_tensor_defect(l1, w1, l2, w2)
                want = defect(tensor(irrep(l1, w1), irrep(l2, w2)))
                report.cases_checked += 1
                if got != want:
                    report.violations.append((f"tensor V({l1},{w1:+d}) V({l2},{w2:+d})", got, want))
        got = closed_form_wedge2_defect(l1, w1)
        want = defect(wedge2(irrep(l1, w1)))
        report.cases_checked += 1
        if got != want:
            report.violations.append((f"wedge2 V({l1},{w1:+d})", str(got), want))
    return report


def verify_closed_forms(max_lambda: int = 10, jobs: int = 1) -> VerifyReport:
    """Closed-form tensor and exterior-square defects against full expansion."""
    if max_lambda < 1:
        raise ValueError("max_lambda must be >= 1")
    chunks = [(l1, max_lambda) for l1 in range(max_lambda + 1)]
    return _run("closed-forms", {"max_lambda": max_lambda}, chunks, _closed_forms_chunk, jobs)


def _irreps(max_lambda):
    return [(lam, w) for lam in range(max_lambda + 1) for w in (1, -1)]


def _oracle_chunk(kind: str, arg, max_lambda: int, max_dim: int) -> VerifyReport:
    report = VerifyReport("oracle", {})

    def check(case, got, want):
        report.cases_checked += 1
        if got != want:
            report.violations.append((case, str(got), str(want)))

    if kind == "irrep":
        lam, w = arg
        m = oracle.build_irrep(lam, w)
        r = irrep(lam, w)
        name = f"V({lam},{w:+d})"
        check(f"decompose {name}", oracle.decompose(m), r)
        check(f"defect {name}", oracle.oracle_defect(m), defect(r))
        check(f"dual {name}", oracle.decompose(oracle.mdual(m)), dual(r))
        wm = oracle.mwedge2(m)
        check(f"wedge2 {name}", oracle.decompose(wm), wedge2(r))
        check(f"defect wedge2 {name}", oracle.oracle_defect(wm), defect(wedge2(r)))
    elif kind == "pair":
        (l1, w1), (l2, w2) = arg
        a, b = oracle.build_irrep(l1, w1), oracle.build_irrep(l2, w2)
        ra, rb = irrep(l1, w1), irrep(l2, w2)
        name = f"V({l1},{w1:+d}), V({l2},{w2:+d})"
        t = oracle.tprod(a, b)
        check(f"tensor {name}", oracle.decompose(t), tensor(ra, rb))
        check(f"defect tensor {name}", oracle.oracle_defect(t), defect(tensor(ra, rb)))
        if l1 + l2 + 2 <= max_dim:
            s = oracle.dsum(a, b)
            check(f"round-trip {name}", oracle.decompose(s), ra + rb)
        if l1 + l2 + 2 <= min(max_dim, 10):
            ws = oracle.mwedge2(oracle.dsum(a, b))
            check(f"wedge2 {name}", oracle.decompose(ws), wedge2(ra + rb))
            check(f"defect wedge2 {name}", oracle.oracle_defect(ws), defect(wedge2(ra + rb)))
    elif kind == "ungraded":
        p = arg
        name = str(p)
        bs = oracle.build_bar_sum(p)
        check(f"barsum {name}", oracle.decompose(bs), bar_sum_graded(p))
        check(f"defect barsum {name}", oracle.oracle_defect(bs), defect(bar_sum_graded(p)))
        bt = oracle.build_bar_tensor(p)
        check(f"bartensor {name}", oracle.decompose(bt), bar_tensor_graded(p))
        check(f"defect bartensor {name}", oracle.oracle_defect(bt), defect(bar_tensor_graded(p)))
    else:
        raise ValueError(kind)
    return report


def oracle_cases(max_lambda: int, max_dim: int):
    """The comparison grid: irreducibles, unordered pairs, and small ungraded reps."""
    irreps = _irreps(max_lambda)
    cases = [("irrep", key, max_lambda, max_dim) for key in irreps]
    for i, a in enumerate(irreps):
        for b in irreps[i:]:
            cases.append(("pair", (a, b), max_lambda, max_dim))
    for n in range(1, min(8, max_dim) + 1):
        for p in enum_ungraded(n):
            cases.append(("ungraded", p, max_lambda, max_dim))
    return cases


def verify_against_oracle(max_lambda: int = 8, max_dim: int = 40, jobs: int = 1) -> VerifyReport:
    """Formal calculus against explicit matrix models on a fixed grid."""
    if max_lambda < 1 or max_dim < 1:
        raise ValueError("bounds must be >= 1")
    return _run(
        "oracle",
        {"max_lambda": max_lambda, "max_dim": max_dim},
        oracle_cases(max_lambda, max_dim),
        _oracle_chunk,
        jobs,
    )
