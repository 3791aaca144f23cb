"""Dense exact matrices over Q.

Entries are ``int`` or ``fractions.Fraction``; nothing is ever rounded.
Matrices are immutable tuples of row tuples.  Elimination skips zero
entries, which keeps the weight-basis matrices of the oracle cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"exact entries only, got {type(x).__name__}")


class ExactMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.rows = tuple(tuple(_norm(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)], ncols=m)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diag(cls, values) -> "ExactMatrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(map(str, r)) for r in self.rows]})"

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * a for a in r] for r in self.rows], self.ncols)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        m = other.ncols
        sparse_b = [[(j, x) for j, x in enumerate(r) if x] for r in other.rows]
        out = []
        for r in self.rows:
            acc = [0] * m
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse_b[k]:
                        acc[j] += a * b
            out.append(acc)
        return ExactMatrix(out, m)

    def apply(self, v: Sequence) -> list:
        return [sum(a * x for a, x in zip(r, v) if a and x) for r in self.rows]

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)] if self.rows else [], self.nrows)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([a * b for a in r for b in s])
        return ExactMatrix(out, self.ncols * other.ncols)

    def block_diag(self, other: "ExactMatrix") -> "ExactMatrix":
        n, m = self.ncols, other.ncols
        out = [list(r) + [0] * m for r in self.rows]
        out += [[0] * n + list(r) for r in other.rows]
        return ExactMatrix(out, n + m)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def trace(self):
        return _norm(sum(self.rows[i][i] for i in range(min(self.shape))))

    def rref(self):
        """Reduced row echelon form as ``(pivot_columns, sparse_rows)``.

        ``sparse_rows[k]`` is a ``{col: value}`` dict for the k-th pivot row,
        normalized so the pivot entry is 1.
        """
        work = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in self.rows]
        work = [r for r in work if r]
        pivots: list[int] = []
        reduced: list[dict] = []
        for col in range(self.ncols):
            idx = next((i for i, r in enumerate(work) if col in r), None)
            if idx is None:
                continue
            prow = work.pop(idx)
            inv = 1 / prow[col]
            prow = {j: x * inv for j, x in prow.items()}
            for bucket in (work, reduced):
                for i, r in enumerate(bucket):
                    f = r.get(col)
                    if f:
                        for j, x in prow.items():
                            y = r.get(j, 0) - f * x
                            if y:
                                r[j] = y
                            else:
                                r.pop(j, None)
            work = [r for r in work if r]
            pivots.append(col)
            reduced.append(prow)
        return pivots, reduced

    def rank(self) -> int:
        return len(self.rref()[0])

    def nullspace(self, with_free: bool = False):
        """Basis of the right kernel, one vector per free column.

        Basis vector ``k`` is 1 at the k-th free column and 0 at the other
        free columns, so coordinates in this basis can be read off there.
        With ``with_free`` the free columns are returned as well.
        """
        pivots, rows = self.rref()
        pivot_set = set(pivots)
        basis = []
        frees = [c for c in range(self.ncols) if c not in pivot_set]
        for free in frees:
            v = [0] * self.ncols
            v[free] = 1
            for p, r in zip(pivots, rows):
                c = r.get(free)
                if c:
                    v[p] = _norm(-c)
            basis.append(v)
        return (frees, basis) if with_free else basis

    def inverse(self) -> "ExactMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = ExactMatrix([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)], 2 * n)
        pivots, rows = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix([[r.get(n + j, 0) for j in range(n)] for r in rows[:n]], n)


def column_matrix(vectors: Sequence[Sequence], n: int) -> ExactMatrix:
    """Matrix whose columns are ``vectors`` (each of length ``n``)."""
    return ExactMatrix([[v[i] for v in vectors] for i in range(n)], len(vectors))
