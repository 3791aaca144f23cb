"""Brute-force oracle: graded sl2 representations as explicit exact matrices.

Everything here is computed from matrices, independently of the formulas
in :mod:`symdefect.reps`; the two are compared by the verifier and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .linalg import ExactMatrix, column_matrix
from .reps import GradedRep, Sign, UngradedRep


class NotGradedRepError(ValueError):
    """Raised when matrices violate the graded sl2 relations."""

    def __init__(self, reason: str):
        super().__init__(f"not a graded sl2 rep: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class MatrixRep:
    E: ExactMatrix
    H: ExactMatrix
    F: ExactMatrix
    parity: tuple

    @property
    def n(self) -> int:
        return len(self.parity)

    def validate(self) -> "MatrixRep":
        n = self.n
        for name in "EHF":
            if getattr(self, name).shape != (n, n):
                raise NotGradedRepError(f"{name} has shape {getattr(self, name).shape}, expected {(n, n)}")
        if any(p not in (0, 1) for p in self.parity):
            raise NotGradedRepError("parities must be 0 or 1")
        E, H, F = self.E, self.H, self.F
        if H @ E - E @ H != E.scale(2):
            raise NotGradedRepError("[H,E] != 2E")
        if H @ F - F @ H != F.scale(-2):
            raise NotGradedRepError("[H,F] != -2F")
        if E @ F - F @ E != H:
            raise NotGradedRepError("[E,F] != H")
        par = self.parity
        for name, flip in (("H", 0), ("E", 1), ("F", 1)):
            rows = getattr(self, name).rows
            for i, r in enumerate(rows):
                for j, x in enumerate(r):
                    if x and (par[i] ^ par[j]) != flip:
                        raise NotGradedRepError(
                            f"{name} maps parity {par[j]} to parity {par[i]}"
                        )
        return self


def build_irrep(lam: int, w=1) -> MatrixRep:
    """``V(lam, w)`` in the weight basis ``v_0..v_lam``.

    ``H v_k = (lam - 2k) v_k``, ``F v_k = v_{k+1}``,
    ``E v_k = k (lam - k + 1) v_{k-1}``; ``v_k`` has parity ``p + k``.
    """
    if lam < 0:
        raise ValueError("highest weight must be >= 0")
    p = 0 if Sign.of(w) == Sign.PLUS else 1
    n = lam + 1
    E = [[0] * n for _ in range(n)]
    F = [[0] * n for _ in range(n)]
    for k in range(1, n):
        E[k - 1][k] = k * (lam - k + 1)
        F[k][k - 1] = 1
    H = ExactMatrix.diag(lam - 2 * k for k in range(n))
    return MatrixRep(ExactMatrix(E, n), H, ExactMatrix(F, n), tuple((p + k) % 2 for k in range(n)))


def dsum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    return MatrixRep(
        a.E.block_diag(b.E), a.H.block_diag(b.H), a.F.block_diag(b.F), a.parity + b.parity
    )


def tprod(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """Tensor product: ``X -> X (x) 1 + 1 (x) X``, parities add mod 2."""
    ia, ib = ExactMatrix.identity(a.n), ExactMatrix.identity(b.n)

    def act(x, y):
        return x.kron(ib) + ia.kron(y)

    parity = tuple((p + q) % 2 for p in a.parity for q in b.parity)
    return MatrixRep(act(a.E, b.E), act(a.H, b.H), act(a.F, b.F), parity)


def mdual(a: MatrixRep) -> MatrixRep:
    """Contragredient: ``X -> -X^T``, parities unchanged."""
    return MatrixRep(-a.E.T, -a.H.T, -a.F.T, a.parity)


def mwedge2(a: MatrixRep) -> MatrixRep:
    """Action on ``Lambda^2`` in the basis ``e_i ^ e_j`` (i < j)."""
    n = a.n
    basis = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {ij: k for k, ij in enumerate(basis)}
    N = len(basis)

    def act(X):
        cols = X.T.rows  # cols[i][k] = X[k][i]
        out = [[0] * N for _ in range(N)]
        for c, (i, j) in enumerate(basis):
            # X e_i ^ e_j + e_i ^ X e_j
            for k, x in enumerate(cols[i]):
                if x and k != j:
                    r, sgn = ((k, j), 1) if k < j else ((j, k), -1)
                    out[index[r]][c] += sgn * x
            for k, x in enumerate(cols[j]):
                if x and k != i:
                    r, sgn = ((i, k), 1) if i < k else ((k, i), -1)
                    out[index[r]][c] += sgn * x
        return ExactMatrix(out, N)

    parity = tuple((a.parity[i] + a.parity[j]) % 2 for i, j in basis)
    assert N == comb(n, 2)
    return MatrixRep(act(a.E), act(a.H), act(a.F), parity)


def materialize(r: GradedRep) -> MatrixRep:
    """Block-diagonal matrix model of a formal graded representation."""
    blocks = [build_irrep(k.lam, k.w) for k in r]
    if not blocks:
        empty = ExactMatrix.zeros(0)
        return MatrixRep(empty, empty, empty, ())
    out = blocks[0]
    for b in blocks[1:]:
        out = dsum(out, b)
    return out


def _ungraded(p: UngradedRep):
    m = materialize(GradedRep({(lam, 1): k for lam, k in p.items()}))
    return m.E, m.H, m.F


def grade_by_involution(E, H, F, S) -> MatrixRep:
    """Regrade ``(E, H, F)`` by the involution ``S``.

    The +1 eigenspace of ``S`` becomes the even part and the -1 eigenspace
    the odd part; the result is expressed in a basis adapted to that split.
    """
    n = S.nrows
    one = ExactMatrix.identity(n)
    if S @ S != one:
        raise ValueError("S is not an involution")
    even = (S - one).nullspace()
    odd = (S + one).nullspace()
    P = column_matrix(even + odd, n)
    Pinv = P.inverse()
    parity = (0,) * len(even) + (1,) * len(odd)
    return MatrixRep(Pinv @ E @ P, Pinv @ H @ P, Pinv @ F @ P, parity)


def build_bar_sum(p: UngradedRep) -> MatrixRep:
    """``pi + pibar`` (``pibar`` negates e and f) graded by ``s(v + w) = w + v``."""
    E, H, F = _ungraded(p)
    n = E.nrows
    S = ExactMatrix([[1 if j == (i + n) % (2 * n) else 0 for j in range(2 * n)] for i in range(2 * n)], 2 * n)
    return grade_by_involution(E.block_diag(-E), H.block_diag(H), F.block_diag(-F), S)


def build_bar_tensor(p: UngradedRep) -> MatrixRep:
    """``pi (x) pibar`` graded by ``s(v (x) w) = -w (x) v``."""
    E, H, F = _ungraded(p)
    n = E.nrows
    one = ExactMatrix.identity(n)

    def act(x, xbar):
        return x.kron(one) + one.kron(xbar)

    S = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            S[j * n + i][i * n + j] = -1
    return grade_by_involution(act(E, -E), act(H, H), act(F, -F), ExactMatrix(S, n * n))


def _highest_weight_block(m: MatrixRep, p: int):
    """Matrix of H on ``ker E`` intersected with the parity-``p`` block."""
    cols = [i for i, q in enumerate(m.parity) if q == p]
    if not cols:
        return None
    free, kernel = m.E.submatrix(range(m.n), cols).nullspace(with_free=True)
    if not kernel:
        return None
    Hp = m.H.submatrix(cols, cols)
    images = [Hp.apply(v) for v in kernel]
    k = len(kernel)
    M = [[images[j][free[i]] for j in range(k)] for i in range(k)]
    for j, img in enumerate(images):
        recon = [sum(M[i][j] * kernel[i][t] for i in range(k)) for t in range(len(cols))]
        if recon != img:
            raise NotGradedRepError("H does not preserve ker E")
    return ExactMatrix(M, k)


def decompose(m: MatrixRep) -> GradedRep:
    """Highest-weight decomposition of a matrix representation."""
    m.validate()
    n = m.n
    mult = {}
    for p in (0, 1):
        M = _highest_weight_block(m, p)
        if M is None:
            continue
        k = M.nrows
        found = 0
        one = ExactMatrix.identity(k)
        for lam in range(-n, n + 1):
            mult_lam = k - (M - one.scale(lam)).rank()
            if not mult_lam:
                continue
            if lam < 0:
                raise NotGradedRepError(f"negative highest weight {lam}")
            mult[(lam, 1 if p == 0 else -1)] = mult_lam
            found += mult_lam
            if found == k:
                break
        if found != k:
            raise NotGradedRepError("H is not diagonalizable with integer eigenvalues on ker E")
    result = GradedRep(mult)
    if result.dim != n:
        raise NotGradedRepError(f"highest weight vectors generate dimension {result.dim}, not {n}")
    return result


def oracle_defect(m: MatrixRep) -> int:
    """``Tr(H | even part of ker E) - dim(odd part)``, computed literally."""
    m.validate()
    M = _highest_weight_block(m, 0)
    trace = 0 if M is None else M.trace()
    return int(trace) - sum(m.parity)
