"""Dense exact linear algebra over GF(q).

Matrices are 2-D integer numpy arrays of canonical field elements.
Elimination always takes the first nonzero entry at or below the current
row as pivot, so every result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .field import GF


def _as_matrix(F: GF, M) -> np.ndarray:
    A = np.array(M, dtype=F.dtype)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {A.shape}")
    return A


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    A = _as_matrix(F, M)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = F.mul(A[r], F.inv(lead))
        factors = A[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            A[hit] = F.sub(A[hit], F.mul(factors[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: GF, M) -> int:
    A = _as_matrix(F, M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def row_basis(F: GF, M) -> np.ndarray:
    """Nonzero rows of the RREF: a basis of the row space."""
    R, piv = rref(F, M)
    return R[: len(piv)]


def null_space(F: GF, M, ncols: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : M x = 0}``.

    ``ncols`` is only needed when ``M`` has no rows.
    """
    A = _as_matrix(F, M)
    n = A.shape[1] if A.shape[0] else (ncols if ncols is not None else A.shape[1])
    if A.shape[0] == 0:
        return F.identity(n)
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in set(piv)]
    N = F.zeros((len(free), n))
    for i, f in enumerate(free):
        N[i, f] = 1
        for row, pc in enumerate(piv):
            N[i, pc] = F.neg(int(R[row, f]))
    return N


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve`.

    ``x`` is one particular solution (``None`` when inconsistent); ``unique``
    is true only when the solution set is a single point.
    """

    status: Literal["unique", "underdetermined", "inconsistent"]
    x: np.ndarray | None
    rank: int

    @property
    def consistent(self) -> bool:
        return self.status != "inconsistent"

    @property
    def unique(self) -> bool:
        return self.status == "unique"


def solve(F: GF, A, b) -> LinearSolution:
    """Solve ``A x = b``; inconsistency is reported in the result, not raised."""
    A = _as_matrix(F, A)
    b = np.asarray(b, dtype=F.dtype).reshape(-1)
    rows, cols = A.shape
    if rows != b.size:
        raise ValueError(f"A has {rows} rows but b has length {b.size}")
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1) if rows else F.zeros((0, cols + 1))
    R, piv = rref(F, aug)
    if cols in piv:
        return LinearSolution("inconsistent", None, len(piv) - 1)
    x = F.zeros(cols)
    for row, pc in enumerate(piv):
        x[pc] = R[row, cols]
    status = "unique" if len(piv) == cols else "underdetermined"
    return LinearSolution(status, x, len(piv))


def inverse(F: GF, M) -> np.ndarray:
    A = _as_matrix(F, M)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError(f"not square: {A.shape}")
    R, piv = rref(F, np.concatenate([A, F.identity(n)], axis=1))
    if piv[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    return R[:, n:]


def extend_basis(F: GF, base, candidates) -> np.ndarray:
    """Rows of ``candidates`` that, added in order, raise the rank of ``base``."""
    base = _as_matrix(F, base)
    cand = _as_matrix(F, candidates)
    current = base
    r = rank(F, current) if current.size else 0
    picked = []
    for row in cand:
        trial = np.vstack([current, row]) if current.size else row.reshape(1, -1)
        tr = rank(F, trial)
        if tr > r:
            picked.append(row)
            current, r = trial, tr
    return np.array(picked, dtype=F.dtype).reshape(len(picked), cand.shape[1])
