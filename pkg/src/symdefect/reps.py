"""Formal calculus of Z/2-graded sl2 representations.

A graded representation is a finite multiset of irreducibles ``V(l,w)``:
highest weight ``l >= 0`` and ``w = +1/-1`` the parity sign of the highest
weight vector.  All operations are exact and return new immutable values.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import kernels

__all__ = [
    "Sign",
    "GradedIrrep",
    "GradedRep",
    "UngradedRep",
    "irrep",
    "dual",
    "tensor",
    "wedge2",
    "defect",
    "irrep_defect",
    "bar_sum_graded",
    "bar_tensor_graded",
    "closed_form_tensor_defect",
    "closed_form_wedge2_defect",
]


class Sign(enum.IntEnum):
    PLUS = 1
    MINUS = -1

    @classmethod
    def of(cls, value) -> "Sign":
        if isinstance(value, str):
            try:
                return {"+": cls.PLUS, "-": cls.MINUS}[value]
            except KeyError:
                raise ValueError(f"sign must be '+' or '-', got {value!r}") from None
        if value in (1, -1):
            return cls(int(value))
        raise ValueError(f"sign must be +1 or -1, got {value!r}")

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    def __str__(self) -> str:
        return self.symbol


class GradedIrrep(tuple):
    """The irreducible ``V(lam, w)``; a ``(lam, w)`` tuple."""

    __slots__ = ()

    def __new__(cls, lam: int, w) -> "GradedIrrep":
        lam = int(lam)
        if lam < 0:
            raise ValueError(f"highest weight must be >= 0, got {lam}")
        return tuple.__new__(cls, (lam, Sign.of(w)))

    @property
    def lam(self) -> int:
        return self[0]

    @property
    def w(self) -> Sign:
        return self[1]

    @property
    def dim(self) -> int:
        return self[0] + 1

    @property
    def dim_even(self) -> int:
        # weight vectors alternate parity starting from the highest one
        n = self[0] + 1
        return (n + 1) // 2 if self[1] == 1 else n // 2

    @property
    def dim_odd(self) -> int:
        return self.dim - self.dim_even

    def __repr__(self) -> str:
        return f"V({self[0]},{self[1].symbol})"


def _sort_key(key):
    lam, w = key
    return (lam, -w)


class GradedRep:
    """Immutable multiset of graded irreducibles.

    Canonical order is ascending highest weight, ``+`` before ``-``; it is
    used for equality, hashing and display.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, mult: Mapping | Iterable = ()):
        counts: dict[GradedIrrep, int] = {}
        pairs = mult.items() if isinstance(mult, Mapping) else ((k, 1) for k in mult)
        for key, m in pairs:
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {key!r}")
            if m:
                key = GradedIrrep(*key)
                counts[key] = counts.get(key, 0) + m
        self._items = tuple(sorted(counts.items(), key=lambda kv: _sort_key(kv[0])))
        self._hash = hash(self._items)

    @classmethod
    def of(cls, *keys) -> "GradedRep":
        """``GradedRep.of((3, 1), (1, -1))``: one copy of each listed irreducible."""
        return cls(keys)

    @classmethod
    def from_counts(cls, counts) -> "GradedRep":
        """Build from a kernel array of shape ``(L+1, 2)``."""
        mult = {}
        for lam, s in zip(*np.nonzero(counts)):
            mult[(int(lam), 1 - 2 * int(s))] = int(counts[lam, s])
        return cls(mult)

    def to_counts(self, max_lambda: int | None = None):
        top = self.max_lambda if max_lambda is None else max_lambda
        out = np.zeros((max(top, 0) + 1, 2), dtype=np.int64)
        for (lam, w), m in self._items:
            out[lam, 0 if w == 1 else 1] += m
        return out

    def items(self):
        return self._items

    def __iter__(self) -> Iterator[GradedIrrep]:
        """Iterate irreducible summands with repetition, in canonical order."""
        for key, m in self._items:
            for _ in range(m):
                yield key

    def __getitem__(self, key) -> int:
        key = GradedIrrep(*key)
        for k, m in self._items:
            if k == key:
                return m
        return 0

    def __len__(self) -> int:
        return sum(m for _, m in self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedRep):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "GradedRep") -> "GradedRep":
        merged = dict(self._items)
        for k, m in other._items:
            merged[k] = merged.get(k, 0) + m
        return GradedRep(merged)

    def __rmul__(self, k: int) -> "GradedRep":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return GradedRep({key: m * k for key, m in self._items})

    @property
    def max_lambda(self) -> int:
        return self._items[-1][0][0] if self._items else 0

    @property
    def dim(self) -> int:
        return sum(m * k.dim for k, m in self._items)

    @property
    def dim_even(self) -> int:
        return sum(m * k.dim_even for k, m in self._items)

    @property
    def dim_odd(self) -> int:
        return sum(m * k.dim_odd for k, m in self._items)

    def is_self_dual(self) -> bool:
        return dual(self) == self

    def __str__(self) -> str:
        if not self._items:
            return "0"
        parts = []
        for key, m in self._items:
            parts.append(repr(key) if m == 1 else f"{m}*{key!r}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GradedRep({self})"


class UngradedRep:
    """Immutable multiset of ungraded irreducibles ``V(lam)``."""

    __slots__ = ("_items", "_hash")

    def __init__(self, mult: Mapping | Iterable = ()):
        counts: dict[int, int] = {}
        pairs = mult.items() if isinstance(mult, Mapping) else ((k, 1) for k in mult)
        for lam, m in pairs:
            lam, m = int(lam), int(m)
            if lam < 0:
                raise ValueError(f"highest weight must be >= 0, got {lam}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for V({lam})")
            if m:
                counts[lam] = counts.get(lam, 0) + m
        self._items = tuple(sorted(counts.items()))
        self._hash = hash(("U",) + self._items)

    @classmethod
    def of(cls, *lams: int) -> "UngradedRep":
        return cls(lams)

    def to_counts(self):
        top = self._items[-1][0] if self._items else 0
        out = np.zeros(top + 1, dtype=np.int64)
        for lam, m in self._items:
            out[lam] += m
        return out

    def items(self):
        return self._items

    def __iter__(self) -> Iterator[int]:
        for lam, m in self._items:
            for _ in range(m):
                yield lam

    def __add__(self, other: "UngradedRep") -> "UngradedRep":
        merged = dict(self._items)
        for k, m in other._items:
            merged[k] = merged.get(k, 0) + m
        return UngradedRep(merged)

    def __rmul__(self, k: int) -> "UngradedRep":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return UngradedRep({lam: m * k for lam, m in self._items})

    def __eq__(self, other) -> bool:
        if not isinstance(other, UngradedRep):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._items)

    @property
    def dim(self) -> int:
        return sum(m * (lam + 1) for lam, m in self._items)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        return " + ".join(f"V({lam})" if m == 1 else f"{m}*V({lam})" for lam, m in self._items)

    def __repr__(self) -> str:
        return f"UngradedRep({self})"


def irrep(lam: int, w=1) -> GradedRep:
    return GradedRep({(lam, w): 1})


def dual(r: GradedRep) -> GradedRep:
    """``V(l,w)* = V(l, w*(-1)^l)``."""
    return GradedRep({(k.lam, k.w * (-1) ** k.lam): m for k, m in r.items()})


def tensor(a: GradedRep, b: GradedRep) -> GradedRep:
    """Graded Clebsch-Gordan product, extended bilinearly over multiplicities."""
    return GradedRep.from_counts(kernels.tensor_counts(a.to_counts(), b.to_counts()))


def wedge2(r: GradedRep) -> GradedRep:
    """Exterior square.

    Irreducible summands contribute ``V(2l-4i-2, -)`` for ``0 <= i <= (l-1)//2``;
    repeated and distinct summands contribute their tensor products.
    """
    return GradedRep.from_counts(kernels.wedge2_counts(r.to_counts()))


def irrep_defect(lam: int, w) -> int:
    w = int(Sign.of(w))
    even = 1 if lam % 2 == 0 else 0
    twice = lam * w + w * even - 1
    half, rem = divmod(twice, 2)
    assert rem == 0, (lam, w)
    return half


def defect(r: GradedRep) -> int:
    """``Tr(h | even part of ker e) - dim(odd part)``, summed over irreducibles."""
    return sum(m * irrep_defect(k.lam, k.w) for k, m in r.items())


def bar_sum_graded(p: UngradedRep) -> GradedRep:
    """``pi + pibar`` graded by the swap involution: each ``V(l)`` gives ``V(l,+) + V(l,-)``."""
    return GradedRep.from_counts(kernels.bar_sum_counts(p.to_counts()))


def bar_tensor_graded(p: UngradedRep) -> GradedRep:
    """``pi (x) pibar`` graded by ``s(v (x) w) = -w (x) v``.

    A diagonal block ``V(l) (x) V(l)bar`` is ``sum_i V(2l-2i, -)``.  Pairs of
    distinct summands are exchanged by ``s`` and so contribute every
    Clebsch-Gordan constituent once in each parity.
    """
    return GradedRep.from_counts(kernels.bar_tensor_counts(p.to_counts()))


def closed_form_tensor_defect(l1: int, w1, l2: int, w2) -> int:
    """Defect of ``V(l1,w1) (x) V(l2,w2)`` from the three-case closed form."""
    if l1 < 0 or l2 < 0:
        raise ValueError("highest weights must be >= 0")
    w = int(Sign.of(w1)) * int(Sign.of(w2))
    lo, hi = min(l1, l2), max(l1, l2)
    if (l1 - l2) % 2:
        inner = Fraction(w, 2) * (l1 + l2 + 1 + (-1) ** lo * (abs(l1 - l2) - 1))
        value = -Fraction(1, 2) * (lo + 1 - inner)
    elif l1 % 2 == 0:
        value = -Fraction(1, 2) * (lo + 1 - w * (hi + 1))
    else:
        value = -Fraction(1, 2) * (lo + 1 - w * (lo + 1))
    assert value.denominator == 1, (l1, w1, l2, w2, value)
    return int(value)


def closed_form_wedge2_defect(lam: int, w=1) -> Fraction:
    """Defect of ``wedge2(V(lam,w))`` from the closed form; independent of ``w``."""
    if lam < 0:
        raise ValueError("highest weight must be >= 0")
    Sign.of(w)
    return (
        -Fraction(lam * lam, 4)
        - Fraction(lam, 2)
        - Fraction(1 + (-1) ** (lam + 1), 8)
    )
