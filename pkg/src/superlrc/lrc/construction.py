"""Evaluation-set construction of (r, delta)-LRCs.

Information symbols are split into w-1 groups of r and one group of v.
Group i < w is interpolated at the first r points of S_i and the code
symbols are the evaluations on all of S_i.  Each such polynomial also
contributes a_{i,t} = f_i(alpha_t) / prod_{theta in S_i}(alpha_t - theta);
the last polynomial f_w is pinned by its v information symbols plus the
r - v conditions sum_i a_{i,t} = 0.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..algebra import GF, Poly, interpolate, null_space, solve
from ..designs import BlockFamily, identical, sunflower
from .code import (
    EvaluationPlan,
    LrcCode,
    LrcError,
    LrcParams,
    PlanError,
    block_coordinates,
    make_field,
    plan_from_family,
)


class SingularPlanError(PlanError):
    """The linear system fixing the last polynomial has no unique solution."""


def _set_product(F: GF, x: int, S: Sequence[int]) -> int:
    out = 1
    for theta in S:
        out = F.mul(out, F.sub(x, theta))
    return out


def auxiliary_values(F: GF, f: Poly, S: Sequence[int], alphas: Sequence[int]) -> list[int]:
    """a_t = f(alpha_t) / prod_{theta in S}(alpha_t - theta)."""
    return [F.div(f(a), _set_product(F, a, S)) for a in alphas]


def _last_polynomial(F: GF, params: LrcParams, plan: EvaluationPlan, info_tail, sums) -> Poly:
    r, v = params.r, params.v
    S = plan.sets[-1]
    nodes = list(S[:v]) + list(plan.alphas)
    values = [int(x) for x in info_tail]
    values += [F.mul(F.neg(s), _set_product(F, a, S)) for s, a in zip(sums, plan.alphas)]
    # Coefficients c_0..c_{r-1} with f(node) = value.
    V = np.array([[F.power(x, j) for j in range(r)] for x in nodes], dtype=F.dtype)
    sol = solve(F, V, values)
    if not sol.unique:
        raise SingularPlanError(
            f"last-set system is singular (rank {sol.rank} < {r}) for S_w={list(S)}, alphas={list(plan.alphas)}"
        )
    return Poly(F, tuple(int(c) for c in sol.x))


def construction_encode(F: GF, params: LrcParams, plan: EvaluationPlan, info: Sequence[int]) -> np.ndarray:
    """Run the three construction steps on one information vector."""
    r, w = params.r, params.w
    if len(info) != params.k:
        raise LrcError(f"info has length {len(info)}, expected k = {params.k}")
    info = [F.element(x) for x in info]
    word: list[int] = []
    sums = [0] * len(plan.alphas)
    for i in range(w - 1):
        S = plan.sets[i]
        f = interpolate(F, list(zip(S[:r], info[i * r:(i + 1) * r])))
        word.extend(f(x) for x in S)
        sums = [F.add(s, a) for s, a in zip(sums, auxiliary_values(F, f, S, plan.alphas))]
    f_last = _last_polynomial(F, params, plan, info[(w - 1) * r:], sums)
    word.extend(f_last(x) for x in plan.sets[-1])
    return F.array(word)


def construct(params: LrcParams, plan: EvaluationPlan) -> LrcCode:
    """Build the code: G row j is the encoding of the j-th unit vector."""
    plan.validate(params)
    F = make_field(params.q)
    k = params.k
    rows = []
    for j in range(k):
        e = [0] * k
        e[j] = 1
        rows.append(construction_encode(F, params, plan, e))
    G = np.array(rows, dtype=F.dtype).reshape(k, params.n)
    H = null_space(F, G)
    return LrcCode(
        field=F,
        r=params.r,
        delta=params.delta,
        G=G,
        H=H,
        repair_sets=block_coordinates(params.w, params.block),
        claimed_d=params.target_distance,
        params=params,
        plan=plan,
    )


def encode(code: LrcCode, info: Sequence[int]) -> np.ndarray:
    """info . G"""
    if len(info) != code.k:
        raise LrcError(f"info has length {len(info)}, expected k = {code.k}")
    F = code.field
    return F.matmul(F.array(list(info)).reshape(1, -1), code.G)[0]


def global_check_sums(code: LrcCode, word: Sequence[int], positions: Sequence[Sequence[int]] | None = None) -> list[int]:
    """Recompute sum_i a_{i,t} for each alpha_t from a codeword.

    Each f_i is re-interpolated from r symbols of S_i: ``positions[i]`` picks
    which (offsets into the set), defaulting to the first r.  Every entry of
    the result is zero for a codeword.
    """
    if code.params is None or code.plan is None:
        raise LrcError("check sums need a code built from an evaluation plan")
    F, params, plan = code.field, code.params, code.plan
    r, b = params.r, params.block
    sums = [0] * len(plan.alphas)
    for i, S in enumerate(plan.sets):
        pick = list(positions[i]) if positions is not None else list(range(r))
        if len(set(pick)) != r:
            raise LrcError(f"need r distinct positions for S_{i + 1}")
        f = interpolate(F, [(S[t], int(word[i * b + t])) for t in pick])
        sums = [F.add(s, a) for s, a in zip(sums, auxiliary_values(F, f, S, plan.alphas))]
    return sums


# -- plan helpers for the standard layouts ---------------------------------------


def identical_plan(params: LrcParams) -> EvaluationPlan:
    """All S_i equal to the r+delta-1 smallest elements."""
    return plan_from_family(params, identical(params.w, params.block))


def sunflower_plan(params: LrcParams) -> EvaluationPlan:
    """S_i share a core of delta-1 points; petals of r points are disjoint."""
    return plan_from_family(params, sunflower(params.w, params.r, params.delta - 1))


def construct_from_family(params: LrcParams, family: BlockFamily) -> LrcCode:
    return construct(params, plan_from_family(params, family))
