"""JSON form of codes.  Field elements are written as their base-p integer codes."""

from __future__ import annotations

import json
from typing import Any

from .lrc.code import EvaluationPlan, LrcCode, LrcError, LrcParams, make_field


class FormatError(ValueError):
    """The document is not a well-formed code description."""


def code_to_json(code: LrcCode) -> dict[str, Any]:
    F = code.field
    p, plan = code.params, code.plan
    return {
        "q": F.q,
        "p": F.p,
        "m": F.m,
        "r": code.r,
        "delta": code.delta,
        "v": p.v if p else None,
        "w": p.w if p else len(code.repair_sets),
        "alphas": list(plan.alphas) if plan else [],
        "sets": [list(S) for S in plan.sets] if plan else [],
        "G": code.G.tolist(),
        "H": code.H.tolist(),
        "repair_sets": [list(R) for R in code.repair_sets],
        "claimed_d": code.claimed_d,
    }


def dumps(code: LrcCode) -> str:
    return json.dumps(code_to_json(code), separators=(",", ":")) + "\n"


def _int(data: dict, key: str, optional: bool = False) -> int | None:
    if key not in data:
        raise FormatError(f"missing key {key!r}")
    val = data[key]
    if val is None and optional:
        return None
    if isinstance(val, bool) or not isinstance(val, int):
        raise FormatError(f"{key!r} must be an integer")
    return val


def _matrix(data: dict, key: str) -> list[list[int]]:
    val = data.get(key)
    if not isinstance(val, list) or not all(isinstance(row, list) for row in val):
        raise FormatError(f"{key!r} must be a list of rows")
    for row in val:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise FormatError(f"{key!r} must contain integers only")
    return val


def code_from_json(data: Any) -> LrcCode:
    """Rebuild and re-validate a code.  Raises FormatError on any inconsistency."""
    if not isinstance(data, dict):
        raise FormatError("code document must be a JSON object")
    q, r, delta = _int(data, "q"), _int(data, "r"), _int(data, "delta")
    try:
        F = make_field(q)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if data.get("p", F.p) != F.p or data.get("m", F.m) != F.m:
        raise FormatError(f"p, m do not match q = {q}")
    v, w = _int(data, "v", optional=True), _int(data, "w", optional=True)
    G, H = _matrix(data, "G"), _matrix(data, "H")
    sets = _matrix(data, "repair_sets")
    claimed = _int(data, "claimed_d")
    alphas = data.get("alphas", [])
    plan_sets = data.get("sets", [])
    try:
        n = len(G[0]) if G else 0
        params = plan = None
        if v is not None and w is not None:
            params = LrcParams(q, r, delta, v, w)
            if plan_sets:
                plan = EvaluationPlan(tuple(alphas), tuple(tuple(S) for S in plan_sets))
                plan.validate(params)
        code = LrcCode(F, r, delta, F.array(G).reshape(-1, n), F.array(H).reshape(-1, n) if H else F.zeros((0, n)),
                       tuple(tuple(R) for R in sets), claimed, params, plan)
    except (LrcError, ValueError, TypeError) as exc:
        raise FormatError(str(exc)) from None
    if params is not None and (code.n, code.k) != (params.n, params.k):
        raise FormatError(f"matrix shape [{code.n}, {code.k}] disagrees with parameters [{params.n}, {params.k}]")
    return code


def loads(text: str) -> LrcCode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return code_from_json(data)


def load(path: str) -> LrcCode:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
