"""Parameter sets, evaluation plans and the immutable code container."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from ..algebra import GF, field, rank
from ..designs import BlockFamily


class LrcError(ValueError):
    pass


class PlanError(LrcError):
    """The evaluation plan does not fit the parameters or the field."""


@dataclass(frozen=True)
class LrcParams:
    """Parameters of the construction: n = w(r+delta-1), k = (w-1)r + v."""

    q: int
    r: int
    delta: int
    v: int
    w: int

    def __post_init__(self):
        if self.r < 1:
            raise LrcError("r must be >= 1")
        if self.delta < 2:
            raise LrcError("delta must be >= 2")
        if not 1 <= self.v <= self.r:
            raise LrcError(f"v must satisfy 1 <= v <= r, got v={self.v}, r={self.r}")
        if self.w < 1:
            raise LrcError("w must be >= 1")

    @property
    def block(self) -> int:
        return self.r + self.delta - 1

    @property
    def n(self) -> int:
        return self.w * self.block

    @property
    def k(self) -> int:
        return (self.w - 1) * self.r + self.v

    @property
    def target_distance(self) -> int:
        return self.r - self.v + self.delta


@dataclass(frozen=True)
class EvaluationPlan:
    """The points alpha_1..alpha_{r-v} and evaluation sets S_1..S_w (ordered)."""

    alphas: tuple[int, ...]
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        object.__setattr__(self, "sets", tuple(tuple(int(x) for x in S) for S in self.sets))

    def validate(self, params: LrcParams) -> None:
        q = params.q
        if len(self.alphas) != params.r - params.v:
            raise PlanError(f"need {params.r - params.v} alphas, got {len(self.alphas)}")
        if len(set(self.alphas)) != len(self.alphas):
            raise PlanError("alphas are not distinct")
        if len(self.sets) != params.w:
            raise PlanError(f"need {params.w} evaluation sets, got {len(self.sets)}")
        alpha_set = set(self.alphas)
        for a in self.alphas:
            if not 0 <= a < q:
                raise PlanError(f"alpha {a} is not in GF({q})")
        for i, S in enumerate(self.sets):
            if len(S) != params.block:
                raise PlanError(f"S_{i + 1} has {len(S)} points, need r+delta-1 = {params.block}")
            if len(set(S)) != len(S):
                raise PlanError(f"S_{i + 1} repeats a point")
            if any(not 0 <= x < q for x in S):
                raise PlanError(f"S_{i + 1} leaves GF({q})")
            if alpha_set & set(S):
                raise PlanError(f"S_{i + 1} meets the alphas at {sorted(alpha_set & set(S))}")


def plan_from_family(params: LrcParams, family: BlockFamily) -> EvaluationPlan:
    """Evaluation plan from the first ``w`` blocks of a design.

    Points used by those blocks are relabelled 0, 1, ... in increasing order
    and mapped to the field elements with those codes; the alphas are the
    next ``r - v`` elements.  The alphas are then the smallest elements
    missed by every set, and point j lands on the (j+1)-th smallest element
    outside the alphas.
    """
    fam = family.take(params.w)
    used = fam.points_used
    relabel = {x: i for i, x in enumerate(used)}
    need = len(used) + params.r - params.v
    if need > params.q:
        raise PlanError(f"design uses {len(used)} points plus {params.r - params.v} alphas > q = {params.q}")
    sets = tuple(tuple(relabel[x] for x in b) for b in fam.blocks)
    alphas = tuple(range(len(used), need))
    plan = EvaluationPlan(alphas, sets)
    plan.validate(params)
    return plan


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LrcCode:
    """A linear code with a declared repair-set structure.

    ``params``/``plan`` are present only for codes produced by the
    evaluation-set construction; reductions and fixtures leave them unset.
    """

    field: GF
    r: int
    delta: int
    G: np.ndarray
    H: np.ndarray
    repair_sets: tuple[tuple[int, ...], ...]
    claimed_d: int
    params: LrcParams | None = None
    plan: EvaluationPlan | None = None

    def __post_init__(self):
        F = self.field
        G = F.array(self.G)
        H = F.array(self.H)
        if G.ndim != 2:
            raise LrcError("G must be a matrix")
        k, n = G.shape
        H = H.reshape(-1, n) if H.size else F.zeros((0, n))
        if H.shape[1] != n:
            raise LrcError(f"H has {H.shape[1]} columns, G has {n}")
        if rank(F, G) != k:
            raise LrcError("G is rank deficient")
        if H.shape[0] != n - k or rank(F, H) != n - k:
            raise LrcError(f"H must have full rank n-k = {n - k}")
        if np.any(F.matmul(G, H.T)):
            raise LrcError("G H^T != 0")
        sets = tuple(tuple(int(x) for x in R) for R in self.repair_sets)
        for R in sets:
            if any(not 0 <= x < n for x in R):
                raise LrcError(f"repair set {list(R)} leaves 0..{n - 1}")
        object.__setattr__(self, "G", _freeze(G))
        object.__setattr__(self, "H", _freeze(H))
        object.__setattr__(self, "repair_sets", sets)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    def set_of(self, coord: int) -> int:
        """Index of the first repair set containing ``coord``."""
        for i, R in enumerate(self.repair_sets):
            if coord in R:
                return i
        raise LrcError(f"coordinate {coord} lies in no repair set")

    @cached_property
    def local_checks(self) -> tuple[np.ndarray, ...]:
        """Parity-check matrix of each punctured code C|_R."""
        from ..algebra import null_space, row_basis

        F = self.field
        out = []
        for R in self.repair_sets:
            basis = row_basis(F, self.G[:, list(R)])
            out.append(null_space(F, basis, ncols=len(R)))
        return tuple(out)


def make_field(q: int) -> GF:
    return field(q)


def block_coordinates(w: int, size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(range(i * size, (i + 1) * size)) for i in range(w))


def as_word(F: GF, word: Sequence, n: int, erased: Sequence[int] = ()) -> np.ndarray:
    """Array form of a received word; entries at erased positions may be None."""
    if len(word) != n:
        raise LrcError(f"word has length {len(word)}, code length is {n}")
    erased = set(erased)
    vals = []
    for i, x in enumerate(word):
        if x is None:
            if i not in erased:
                raise LrcError(f"position {i} is blank but not marked erased")
            vals.append(0)
        else:
            vals.append(0 if i in erased else int(x))
    return F.array(vals)
