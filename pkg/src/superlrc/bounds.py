"""Distance and length bounds for codes with (r, delta)-locality.

Real-valued length bounds are floored exactly: a value ``A * q**(e/f) + B``
is compared against integer candidates in rational arithmetic, so no
floating-point rounding can move the result across an integer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Any


class BoundNotApplicable(ValueError):
    """The inputs fall outside the regime where the bound is stated."""


@dataclass(frozen=True)
class BoundInputs:
    q: int
    r: int
    delta: int
    k: int
    d: int | None = None
    n: int | None = None

    @property
    def u(self) -> int:
        return self.k // self.r

    @property
    def v(self) -> int:
        """k mod r, in 0..r-1 (not the construction's 1..r convention)."""
        return self.k % self.r

    @property
    def block(self) -> int:
        return self.r + self.delta - 1

    @property
    def w(self) -> int | None:
        if self.n is None or self.n % self.block:
            return None
        return self.n // self.block

    @property
    def m(self) -> int | None:
        return None if self.n is None else self.n % self.block

    @property
    def t(self) -> int | None:
        return None if self.d is None else (self.d - 1) // self.delta

    @property
    def a(self) -> int | None:
        return None if self.d is None else _mod4(self.d)

    @property
    def eps(self) -> int | None:
        return None if self.d is None else -(-(self.d - 1) // self.block) - 1


@dataclass(frozen=True)
class BoundReport:
    name: str
    value: int
    flags: dict[str, bool] = field(default_factory=dict)
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.flags.values())

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "value": self.value, "flags": dict(self.flags), "detail": dict(self.detail)}


def _mod4(d: int) -> int:
    a = d % 4
    return a if a else 4


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for integers x >= 0, k >= 1."""
    if x < 2 or k == 1:
        return x
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y**k > x:
        y -= 1
    while (y + 1) ** k <= x:
        y += 1
    return y


def floor_scaled_power(A: Fraction, q: int, num: int, den: int, B: Fraction = Fraction(0)) -> int:
    """floor(A * q**(num/den) + B) exactly, for A > 0 and den >= 1."""
    A, B = Fraction(A), Fraction(B)
    if A <= 0 or den < 1:
        raise ValueError("need A > 0 and den >= 1")
    radicand = A**den * Fraction(q) ** num
    base = _iroot(radicand.numerator // radicand.denominator, den)  # floor(A * y)

    def below(N: int) -> bool:  # N <= A*y + B
        z = (N - B) / A
        return z < 0 or z**den <= Fraction(q) ** num

    N = base + floor(B)
    while not below(N):
        N -= 1
    while below(N + 1):
        N += 1
    return N


def _hypothesis_flags(r: int, k: int | None) -> dict[str, bool]:
    if k is None:
        return {}
    u, v = divmod(k, r)
    return {"k_gt_r": k > r, "r_divides_k_or_u_ge_2(r+1-v)": v == 0 or u >= 2 * (r + 1 - v)}


def singleton_bound(n: int, k: int, r: int, delta: int) -> int:
    """Largest distance allowed for an [n, k] code with (r, delta)-locality."""
    if k < 1 or r < 1 or delta < 2:
        raise ValueError("need k >= 1, r >= 1, delta >= 2")
    return n - k + 1 - (ceil(k / r) - 1) * (delta - 1)


def is_optimal(n: int, k: int, r: int, delta: int, d: int) -> bool:
    return d == singleton_bound(n, k, r, delta)


def optimal_length(k: int, r: int, delta: int, d: int) -> int:
    """The n at which an [n, k, d] code with this locality meets the bound."""
    return d + k - 1 + (ceil(k / r) - 1) * (delta - 1)


def length_bound_delta2(q: int, r: int, d: int, k: int | None = None) -> BoundReport:
    """Length bound for optimal codes with (r, 2)-locality and d >= 5."""
    if d < 5:
        raise BoundNotApplicable(f"needs d >= 5, got d = {d}")
    a = _mod4(d)
    if a in (1, 2):
        coef = Fraction((d - a) * (r + 1), 4 * (q - 1) * r)
        value = floor_scaled_power(coef, q, 4 * (d - 2), d - a)
    else:
        coef = Fraction(r + 1, r) * Fraction(d - a, 4 * (q - 1))
        value = floor_scaled_power(coef, q, 4 * (d - 3), d - a, Fraction(r + 1, r))
    return BoundReport("length_bound_delta2", value, _hypothesis_flags(r, k), {"a": a})


def hamming_length_bound(q: int, r: int, delta: int, t: int, v: int, w_minus_u: int) -> int:
    """Odd/even-t length bound in terms of t, v = k mod r and w - u."""
    if 2 * t + 1 <= 4:
        raise BoundNotApplicable(f"needs 2t+1 > 4, got t = {t}")
    num = 2 * w_minus_u * r - 2 * v
    if t % 2:
        return floor_scaled_power(Fraction((t - 1) * (r + delta - 1), 2 * r * (q - 1)), q, num, t - 1)
    return floor_scaled_power(Fraction(t * (r + delta - 1), 2 * r * (q - 1)), q, num, t)


def length_bound_delta_gt2(q: int, r: int, delta: int, d: int, k: int) -> BoundReport:
    """Length bound via t = floor((d-1)/delta) and w - u = floor((d-1+v)/(r+delta-1))."""
    if delta < 2:
        raise ValueError("delta must be >= 2")
    t = (d - 1) // delta
    u, v = divmod(k, r)
    w_minus_u = (d - 1 + v) // (r + delta - 1)
    value = hamming_length_bound(q, r, delta, t, v, w_minus_u)
    flags = _hypothesis_flags(r, k)
    return BoundReport("length_bound_delta_gt2", value, flags, {"t": t, "v": v, "w_minus_u": w_minus_u})


def combined_bound(q: int, r: int, delta: int, d: int, k: int) -> BoundReport:
    """Puncture whole repair sets down to d' <= r + delta, then bound the rest."""
    block = r + delta - 1
    if d <= r + delta:
        raise BoundNotApplicable(f"needs d > r + delta = {r + delta}, got d = {d}")
    eps = -(-(d - 1) // block) - 1
    d_red = d - eps * block
    try:
        if delta == 2:
            inner = length_bound_delta2(q, r, d_red, k)
        else:
            inner = length_bound_delta_gt2(q, r, delta, d_red, k)
    except BoundNotApplicable as exc:
        raise BoundNotApplicable(f"inner bound at d' = {d_red} (eps = {eps}): {exc}") from None
    detail = {"eps": eps, "d_reduced": d_red, "inner": inner.name, "inner_value": inner.value}
    return BoundReport("combined_bound", eps * block + inner.value, dict(inner.flags), detail)


def reduction_distance_floor(d: int, delta: int) -> int:
    """Distance guaranteed after reducing (r, delta)-locality to (r, 2)."""
    if delta < 2:
        raise ValueError("delta must be >= 2")
    return 2 * ((d - 1) // delta) + 1


def bound_report(inputs: BoundInputs) -> dict[str, Any]:
    """Every bound that can be evaluated for ``inputs``, plus why others cannot."""
    q, r, delta, k, d = inputs.q, inputs.r, inputs.delta, inputs.k, inputs.d
    out: dict[str, Any] = {
        "inputs": {"q": q, "r": r, "delta": delta, "k": k, "d": d, "n": inputs.n},
        "derived": {"u": inputs.u, "v": inputs.v, "t": inputs.t, "a": inputs.a, "eps": inputs.eps},
        "bounds": [],
        "skipped": {},
    }
    bounds = out["bounds"]
    if inputs.n is not None:
        sb = singleton_bound(inputs.n, k, r, delta)
        bounds.append({"name": "singleton_bound", "value": sb, "flags": {}, "detail": {"n": inputs.n}})
    if d is None:
        return out
    bounds.append({"name": "optimal_length", "value": optimal_length(k, r, delta, d), "flags": {}, "detail": {}})
    bounds.append({"name": "reduction_distance_floor", "value": reduction_distance_floor(d, delta),
                   "flags": {}, "detail": {}})
    if delta == 2:
        evaluators = [("length_bound_delta2", lambda: length_bound_delta2(q, r, d, k))]
    else:
        evaluators = [("length_bound_delta_gt2", lambda: length_bound_delta_gt2(q, r, delta, d, k))]
    evaluators.append(("combined_bound", lambda: combined_bound(q, r, delta, d, k)))
    for name, fn in evaluators:
        try:
            bounds.append(fn().to_json())
        except BoundNotApplicable as exc:
            out["skipped"][name] = str(exc)
    return out
