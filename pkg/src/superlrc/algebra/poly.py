"""Univariate polynomials over GF(q) and Lagrange interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import GF


@dataclass(frozen=True)
class Poly:
    """Polynomial with coefficients low-order first; ``()`` is the zero polynomial."""

    field: GF
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [self.field.element(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, F: GF, c: int) -> "Poly":
        return cls(F, (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return Poly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        F = self.field
        if isinstance(other, int):
            return Poly(F, tuple(F.mul(c, other) for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return Poly(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, tuple(out))

    __rmul__ = __mul__


def vanishing(F: GF, roots: Iterable[int]) -> Poly:
    """prod (x - root)."""
    out = Poly(F, (1,))
    for r in roots:
        out = out * Poly(F, (F.neg(r), 1))
    return out


def lagrange_basis(F: GF, xs: Sequence[int]) -> list[Poly]:
    """Polynomials L_j with L_j(xs[i]) = [i == j], each of degree len(xs) - 1."""
    if len(set(xs)) != len(xs):
        raise ValueError(f"interpolation nodes are not distinct: {list(xs)}")
    basis = []
    for j, xj in enumerate(xs):
        num = Poly(F, (1,))
        denom = 1
        for i, xi in enumerate(xs):
            if i != j:
                num = num * Poly(F, (F.neg(xi), 1))
                denom = F.mul(denom, F.sub(xj, xi))
        basis.append(num * F.inv(denom))
    return basis


def interpolate(F: GF, points: Sequence[tuple[int, int]]) -> Poly:
    """The unique polynomial of degree < len(points) through ``points``."""
    xs = [F.element(x) for x, _ in points]
    ys = [F.element(y) for _, y in points]
    out = Poly(F, ())
    for y, L in zip(ys, lagrange_basis(F, xs)):
        if y:
            out = out + L * y
    return out
