"""Code transformations: delta -> 2 locality reduction, its column-difference
companion, and puncturing whole repair sets."""

from __future__ import annotations

import numpy as np

from ..algebra import GF, extend_basis, inverse, null_space, rank, row_basis, rref
from ..bounds import is_optimal, reduction_distance_floor
from .code import LrcCode, LrcError, LrcParams, block_coordinates, make_field


class ReductionError(LrcError):
    pass


def _split_parity(code: LrcCode) -> tuple[list[np.ndarray], np.ndarray]:
    """Local parity blocks (canonical RREF, one per repair set) and global rows completing them."""
    F = code.field
    n = code.n
    local_full = []
    blocks = []
    for idx, R in enumerate(code.repair_sets):
        L, piv = rref(F, code.local_checks[idx])
        L = L[: len(piv)]
        blocks.append((L, piv))
        rows = F.zeros((L.shape[0], n))
        rows[:, list(R)] = L
        local_full.append(rows)
    stacked = np.vstack(local_full) if local_full else F.zeros((0, n))
    global_rows = extend_basis(F, stacked, code.H)
    return [b for b in blocks], global_rows


def _require_mds_blocks(code: LrcCode) -> None:
    from ..verify import check_mds_partition

    report = check_mds_partition(code)
    if not report.ok:
        raise ReductionError(f"repair sets are not a partition into MDS blocks: {report.reason} ({report.witness})")


def delta_reduce(code: LrcCode) -> LrcCode:
    """Turn an (r, delta) code with MDS repair blocks into an [w(r+1), k] code with (r, 2)-locality.

    Each local check block is brought to the form (I_{delta-1} | P_i) and
    split after its first row and first r+1 columns.  The trailing
    (delta-2) x (delta-2) corner is invertible for an MDS block, which lets
    the last delta-2 columns of every block be eliminated from the first
    local row and from the global rows.
    """
    F = code.field
    r, delta = code.r, code.delta
    if delta <= 2:
        raise ReductionError(f"delta must exceed 2, got {delta}")
    _require_mds_blocks(code)
    blocks, Hg = _split_parity(code)
    w = len(code.repair_sets)
    keep = r + 1
    n_new = w * keep
    local_rows = F.zeros((w, n_new))
    global_rows = F.zeros((Hg.shape[0], n_new))
    for i, (R, (L, piv)) in enumerate(zip(code.repair_sets, blocks)):
        if piv != list(range(delta - 1)):
            raise ReductionError(f"local checks of repair set {i} have no (I | P) form")
        L11, L12 = L[:1, :keep], L[:1, keep:]
        L21, L22 = L[1:, :keep], L[1:, keep:]
        try:
            corr = F.matmul(inverse(F, L22), L21)
        except np.linalg.LinAlgError:
            raise ReductionError(f"trailing corner of repair set {i} is singular") from None
        Q1 = F.sub(L11, F.matmul(L12, corr))
        Hi = Hg[:, list(R)]
        H1 = F.sub(Hi[:, :keep], F.matmul(Hi[:, keep:], corr)) if Hg.shape[0] else Hi[:, :keep]
        if np.any(Q1 == 0):
            raise ReductionError(f"reduced local row of repair set {i} has a zero entry")
        cols = slice(i * keep, (i + 1) * keep)
        local_rows[i, cols] = Q1[0]
        global_rows[:, cols] = H1
    P = np.vstack([local_rows, global_rows])
    G_new = null_space(F, P)
    if G_new.shape[0] != code.k:
        raise ReductionError(f"reduced code has dimension {G_new.shape[0]}, expected {code.k}")
    params = None
    if code.params is not None:
        params = LrcParams(code.params.q, r, 2, code.params.v, code.params.w)
    return LrcCode(
        field=F,
        r=r,
        delta=2,
        G=G_new,
        H=row_basis(F, P),
        repair_sets=block_coordinates(w, keep),
        claimed_d=reduction_distance_floor(code.claimed_d, delta),
        params=params,
    )


def m2_reduce(code: LrcCode) -> np.ndarray:
    """Column-difference parity-check matrix of a [wr, k] code from an (r, 2) code.

    Columns are first rescaled so each local check row is all ones; then the
    global columns of each block are replaced by their differences with the
    block's first column.  Distance >= 2t+1 on the input gives >= t+1.
    """
    F = code.field
    r = code.r
    if code.delta != 2:
        raise ReductionError(f"needs (r, 2)-locality, got delta = {code.delta}")
    for i, R in enumerate(code.repair_sets):
        if len(R) != r + 1:
            raise ReductionError(f"repair set {i} has {len(R)} coordinates, expected r+1 = {r + 1}")
    blocks, Hg = _split_parity(code)
    if Hg.shape[0] == 0:
        raise ReductionError("no global parity rows: the difference matrix would be empty")
    diffs = []
    for i, (R, (L, _)) in enumerate(zip(code.repair_sets, blocks)):
        if L.shape[0] != 1 or np.any(L[0] == 0):
            raise ReductionError(f"repair set {i} does not have a single all-nonzero local check")
        h = F.mul(Hg[:, list(R)], F.inv(L[0])[None, :])
        diffs.append(F.sub(h[:, 1:], h[:, :1]))
    return np.hstack(diffs)


def puncture_reduce(code: LrcCode, d: int) -> LrcCode:
    """Delete the first eps = ceil((d-1)/(r+delta-1)) - 1 repair sets of an optimal code."""
    F = code.field
    r, delta = code.r, code.delta
    n, k = code.n, code.k
    block = r + delta - 1
    if d <= r + delta:
        raise ReductionError(f"needs d > r + delta = {r + delta}, got d = {d}")
    if k <= r:
        raise ReductionError(f"needs k > r, got k = {k}")
    if not is_optimal(n, k, r, delta, d):
        raise ReductionError(f"[{n}, {k}, {d}] does not meet the Singleton-type bound")
    eps = -(-(d - 1) // block) - 1
    if eps >= len(code.repair_sets):
        raise ReductionError(f"cannot remove {eps} of {len(code.repair_sets)} repair sets")
    removed = {x for R in code.repair_sets[:eps] for x in R}
    keep = [j for j in range(n) if j not in removed]
    G_new = code.G[:, keep]
    if rank(F, G_new) != k:
        raise ReductionError("punctured generator lost rank")
    index = {j: i for i, j in enumerate(keep)}
    sets = tuple(tuple(index[x] for x in R) for R in code.repair_sets[eps:])
    return LrcCode(
        field=F,
        r=r,
        delta=delta,
        G=G_new,
        H=null_space(F, G_new),
        repair_sets=sets,
        claimed_d=d - eps * block,
    )


def replicated_rs_fixture(q: int, points: int, copies: int) -> LrcCode:
    """Two-dimensional Reed-Solomon code with every symbol repeated ``copies`` times.

    Locality (1, copies) with the copy groups as repair sets, and distance
    copies * (points - 1).
    """
    if copies < 2:
        raise LrcError("copies must be >= 2")
    if not q > points >= 3:
        raise LrcError(f"need q > points >= 3, got q={q}, points={points}")
    F: GF = make_field(q)
    cols = [[1, x] for x in range(points) for _ in range(copies)]
    G = F.array(cols).T
    return LrcCode(
        field=F,
        r=1,
        delta=copies,
        G=G,
        H=null_space(F, G),
        repair_sets=block_coordinates(points, copies),
        claimed_d=copies * (points - 1),
    )
