"""Block families used as evaluation-set layouts, and their condition checkers.

Points are abstract indices ``0 .. ground_size - 1``; blocks keep the order
they were given in, because several operations (pruning, taking the first
``w`` blocks of a design) depend on that order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Sequence

from .algebra.field import is_prime

ENUMERATION_CAP = 10**7


class DesignError(ValueError):
    pass


@dataclass(frozen=True)
class BlockFamily:
    ground_size: int
    blocks: tuple[tuple[int, ...], ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = []
        for b in self.blocks:
            pts = sorted(int(x) for x in b)
            if len(set(pts)) != len(pts):
                raise DesignError(f"block {list(b)} repeats a point")
            if pts and (pts[0] < 0 or pts[-1] >= self.ground_size):
                raise DesignError(f"block {list(b)} leaves the ground set 0..{self.ground_size - 1}")
            blocks.append(tuple(pts))
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "_masks", tuple(sum(1 << x for x in b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def points_used(self) -> list[int]:
        union = 0
        for m in self._masks:
            union |= m
        return [i for i in range(self.ground_size) if union >> i & 1]

    def take(self, w: int) -> "BlockFamily":
        if w > len(self.blocks):
            raise DesignError(f"design has {len(self.blocks)} blocks, {w} requested")
        return BlockFamily(self.ground_size, self.blocks[:w])

    def to_json(self) -> dict[str, Any]:
        return {"ground_size": self.ground_size, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "BlockFamily":
        try:
            return cls(int(data["ground_size"]), tuple(tuple(b) for b in data["blocks"]))
        except (KeyError, TypeError) as exc:
            raise DesignError(f"malformed block family: {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class CheckResult:
    """Pass/fail verdict of a condition checker; ``witness`` names a violation."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _union(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def overlap(F: BlockFamily) -> int:
    """Sum of block sizes minus the size of their union."""
    return sum(len(b) for b in F.blocks) - _popcount(_union(F._masks))


def _guard(count: int, what: str) -> None:
    if count > ENUMERATION_CAP:
        raise DesignError(f"{what} needs {count} enumerations (cap {ENUMERATION_CAP})")


def check_mu_condition(F: BlockFamily, mu: int, delta: int) -> CheckResult:
    """Every mu blocks R and every S in R: |S & union(R - S)| < delta.

    With fewer than ``mu`` blocks the whole family is the only candidate R.
    Witness: ``(R, S)`` as block indices.
    """
    if mu < 1:
        raise DesignError("mu must be >= 1")
    size = min(mu, len(F))
    _guard(comb(len(F), size), "mu-condition check")
    masks = F._masks
    for R in combinations(range(len(F)), size):
        for s in R:
            rest = _union(masks[j] for j in R if j != s)
            if _popcount(masks[s] & rest) >= delta:
                return CheckResult(False, (R, s))
    return CheckResult(True)


def check_uibf(F: BlockFamily, s: int, t: int, delta: int) -> CheckResult:
    """Any s + t distinct blocks A, B: |union(A) & union(B)| < delta.

    Witness: ``(A, B)`` as block indices.
    """
    w = len(F)
    if s + t > w:
        raise DesignError(f"s + t = {s + t} exceeds the {w} blocks")
    _guard(comb(w, s) * comb(w - s, t), "UIBF check")
    masks = F._masks
    for A in combinations(range(w), s):
        ua = _union(masks[i] for i in A)
        rest = [j for j in range(w) if j not in A]
        for B in combinations(rest, t):
            if _popcount(ua & _union(masks[j] for j in B)) >= delta:
                return CheckResult(False, (A, B))
    return CheckResult(True)


def check_packing(F: BlockFamily, tau_plus_1: int) -> CheckResult:
    """No (tau+1)-subset of points lies in two blocks.

    Equivalent to every pairwise intersection having at most tau points.
    Witness: ``(i, j, points)`` with a shared (tau+1)-subset.
    """
    if tau_plus_1 < 2:
        raise DesignError("tau + 1 must be >= 2")
    masks = F._masks
    for i, j in combinations(range(len(F)), 2):
        common = masks[i] & masks[j]
        if _popcount(common) >= tau_plus_1:
            pts = [x for x in F.blocks[i] if common >> x & 1][:tau_plus_1]
            return CheckResult(False, (i, j, tuple(pts)))
    return CheckResult(True)


def _private_blocks(masks: Sequence[int]) -> list[bool]:
    """For each block: does it hold a point no other block covers?"""
    out = []
    for i, m in enumerate(masks):
        others = _union(masks[j] for j in range(len(masks)) if j != i)
        out.append(bool(m & ~others))
    return out


def check_ecf(F: BlockFamily) -> CheckResult:
    """Blocks cover the ground set and none of them is redundant.

    Witness: ``("uncovered", points)`` or ``("redundant", block index)``.
    """
    full = (1 << F.ground_size) - 1
    union = _union(F._masks)
    if union != full:
        return CheckResult(False, ("uncovered", [x for x in range(F.ground_size) if not union >> x & 1]))
    for i, private in enumerate(_private_blocks(F._masks)):
        if not private:
            return CheckResult(False, ("redundant", i))
    return CheckResult(True)


def prune_to_ecf(F: BlockFamily) -> BlockFamily:
    """Drop redundant blocks, highest index first, until none is redundant."""
    full = (1 << F.ground_size) - 1
    if _union(F._masks) != full:
        raise DesignError("blocks do not cover the ground set")
    keep = list(range(len(F)))
    masks = F._masks
    while True:
        for pos in range(len(keep) - 1, -1, -1):
            rest = _union(masks[j] for j in keep if j != keep[pos])
            if masks[keep[pos]] & ~rest == 0:
                del keep[pos]
                break
        else:
            return BlockFamily(F.ground_size, tuple(F.blocks[j] for j in keep))


# -- constructions ------------------------------------------------------------


def identical(w: int, size: int) -> BlockFamily:
    """``w`` copies of the block ``{0, .., size-1}``."""
    return BlockFamily(size, tuple(tuple(range(size)) for _ in range(w)))


def sunflower(w: int, petal: int, core: int) -> BlockFamily:
    """``w`` blocks sharing the core ``{0..core-1}`` with pairwise-disjoint petals."""
    base = tuple(range(core))
    blocks = tuple(base + tuple(range(core + i * petal, core + (i + 1) * petal)) for i in range(w))
    return BlockFamily(core + w * petal, blocks)


def steiner_triple_bose(n1: int) -> BlockFamily:
    """Bose construction of an STS(n1) for n1 = 3 (mod 6).

    Point ``(x, i)`` with ``x`` in Z_m (m = n1/3, odd) and ``i`` in Z_3 is
    encoded as ``i * m + x``.
    """
    if n1 % 6 != 3:
        raise DesignError(f"Bose construction needs n1 = 3 (mod 6), got {n1}")
    m = n1 // 3
    half = (m + 1) // 2  # inverse of 2 in Z_m
    blocks = [(x, m + x, 2 * m + x) for x in range(m)]
    for x, y in combinations(range(m), 2):
        mid = (x + y) * half % m
        for i in range(3):
            blocks.append((i * m + x, i * m + y, ((i + 1) % 3) * m + mid))
    return BlockFamily(n1, tuple(sorted(tuple(sorted(b)) for b in blocks)))


def affine_plane_lines(p: int) -> BlockFamily:
    """All p^2 + p lines of AG(2, p); point (a, b) is encoded as a*p + b."""
    if not is_prime(p):
        raise DesignError(f"{p} is not prime")
    lines = []
    for slope in range(p):
        for c in range(p):
            lines.append(tuple(sorted(a * p + (slope * a + c) % p for a in range(p))))
    for a in range(p):
        lines.append(tuple(a * p + b for b in range(p)))
    return BlockFamily(p * p, tuple(sorted(lines)))


def johnson_bound(n1: int, block: int, tau_plus_1: int) -> int:
    """Nested-floor upper bound on the blocks of a (tau+1)-(n1, block, 1) packing."""
    if not block >= tau_plus_1 >= 2:
        raise DesignError("need block >= tau + 1 >= 2")
    value = 1
    for i in range(tau_plus_1 - 1, -1, -1):
        value = (n1 - i) * value // (block - i)
    return value
