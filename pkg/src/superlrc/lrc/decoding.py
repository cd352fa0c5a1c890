"""Erasure recovery: inside one repair set, or globally through H."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ..algebra import GF, solve
from .code import LrcCode, LrcError, as_word


class DecodingError(LrcError):
    """Erasures cannot be filled in uniquely (or the word is not a codeword)."""

    def __init__(self, message: str, deficiency: int = 0):
        super().__init__(message)
        self.deficiency = deficiency


class LocalRepairError(DecodingError):
    """Some repair set holds delta or more erasures."""


def _fill(F: GF, H: np.ndarray, word: np.ndarray, erased: list[int]) -> np.ndarray:
    """Solve H[:, E] x = -H[:, K] word[K] and write x into a copy of ``word``."""
    out = word.copy()
    if not erased:
        return out
    known = [j for j in range(word.size) if j not in set(erased)]
    if known:
        rhs = F.neg(F.matmul(H[:, known], word[known].reshape(-1, 1))[:, 0])
    else:
        rhs = F.zeros(H.shape[0])
    sol = solve(F, H[:, erased], rhs)
    if not sol.consistent:
        raise DecodingError("surviving symbols are not consistent with any codeword")
    if not sol.unique:
        deficiency = len(erased) - sol.rank
        raise DecodingError(f"{len(erased)} erasures leave {deficiency} degrees of freedom", deficiency)
    out[erased] = sol.x
    return out


def _pattern(code: LrcCode, erased: Iterable[int]) -> list[int]:
    E = sorted(set(int(e) for e in erased))
    if any(not 0 <= e < code.n for e in E):
        raise LrcError(f"erasure positions must lie in 0..{code.n - 1}")
    return E


def local_repair(code: LrcCode, word: Sequence, erased: Iterable[int]) -> np.ndarray:
    """Fill erasures set by set, reading only the affected repair sets."""
    F = code.field
    E = _pattern(code, erased)
    w = as_word(F, word, code.n, E)
    groups: dict[int, list[int]] = {}
    for e in E:
        groups.setdefault(code.set_of(e), []).append(e)
    for idx, errs in groups.items():
        if len(errs) >= code.delta:
            raise LocalRepairError(
                f"repair set {idx} holds {len(errs)} erasures; local repair handles at most {code.delta - 1}"
            )
    out = w.copy()
    for idx, errs in sorted(groups.items()):
        R = list(code.repair_sets[idx])
        local = w[R]
        pos = [R.index(e) for e in errs]
        filled = _fill(F, code.local_checks[idx], local, pos)
        out[errs] = filled[pos]
    return out


def global_decode(code: LrcCode, word: Sequence, erased: Iterable[int]) -> np.ndarray:
    """The unique codeword agreeing with ``word`` off the erasures."""
    F = code.field
    E = _pattern(code, erased)
    return _fill(F, code.H, as_word(F, word, code.n, E), E)


def recover(code: LrcCode, word: Sequence, erased: Iterable[int]) -> tuple[np.ndarray, str]:
    """Local repair when every set allows it, global decoding otherwise."""
    erased = list(erased)
    try:
        return local_repair(code, word, erased), "local"
    except LocalRepairError:
        return global_decode(code, word, erased), "global"
