"""Arithmetic in GF(q), q = p^m.

Elements are plain integers in ``[0, q)``.  For extension fields the
integer is read base ``p`` as the coefficient vector of the residue
polynomial (least significant digit = constant term), so an element
round-trips through JSON without any extra context beyond ``q``.

Every operation accepts either Python ints or integer numpy arrays and
returns the same kind, which lets the linear-algebra code run row
operations without a Python-level inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_EXTENSION_ORDER = 1 << 16


class FieldError(ValueError):
    """Raised for invalid field parameters or mixed-field operands."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, m)`` with ``q == p**m``; raise if not a prime power."""
    if q < 2:
        raise FieldError(f"field order must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return p, m


def next_prime_power(q: int) -> int:
    """Smallest prime power >= q."""
    n = max(q, 2)
    while True:
        try:
            prime_power(n)
            return n
        except FieldError:
            n += 1


# -- polynomials over GF(p) as little-endian coefficient tuples -------------

def _poly_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, degree: int):
    for low in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(low % p)
            low //= p
        yield coeffs + [1]


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod_p(coeffs, cand, p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``m`` over GF(p)."""
    for cand in _monic_polys(p, m):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # unreachable


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field; arithmetic refuses mixed fields."""

    field: "GF"
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.element(int(other))
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.power(self.value, e))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (GF({self.field.q}))"


class GF:
    """The finite field of order ``q``.

    Prime fields use modular arithmetic directly.  Extension fields
    (``q <= 2**16``) use the smallest-lexicographic irreducible modulus and
    exp/log tables built from the smallest primitive element.
    """

    def __init__(self, q: int):
        p, m = prime_power(q)
        if m > 1 and q > MAX_EXTENSION_ORDER:
            raise FieldError(f"extension fields are limited to q <= {MAX_EXTENSION_ORDER}")
        self.p, self.m, self.q = p, m, q
        self.modulus: tuple[int, ...] | None = None
        # int64 products must not overflow for prime fields
        self.dtype = np.int64 if p < (1 << 31) else object
        if m > 1:
            self.modulus = smallest_irreducible(p, m)
            self._build_tables()

    # -- construction ------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _from_digits(self, digits) -> int:
        value = 0
        for d in reversed(list(digits)):
            value = value * self.p + d
        return value

    def _slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod_p(prod, list(self.modulus), p)
        return self._from_digits(rem + [0] * (m - len(rem)))

    def _build_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._slow_mul(x, g)
            if len(powers) == q - 1:
                break
        else:
            raise FieldError(f"no primitive element found for GF({q})")  # unreachable
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self.primitive = g
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        self._pw = np.array([self.p**i for i in range(self.m)], dtype=np.int64)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self) -> int:
        return hash((self.q, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (GF, (self.q,))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, self.element(value))

    def element(self, value: int) -> int:
        value = int(value)
        if not 0 <= value < self.q:
            raise FieldError(f"{value} is not an element of GF({self.q})")
        return value

    def elements(self) -> range:
        return range(self.q)

    def array(self, values) -> np.ndarray:
        """Coerce to an array of canonical elements, validating the range."""
        arr = np.array(values, dtype=self.dtype)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise FieldError(f"entries outside GF({self.q})")
        return arr

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=self.dtype)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=self.dtype)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if _scalar(a) and _scalar(b):
            a, b = int(a), int(b)
            return self._from_digits((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))
        a, b = np.asarray(a), np.asarray(b)
        da = (a[..., None] // self._pw) % self.p
        db = (b[..., None] // self._pw) % self.p
        return ((da + db) % self.p * self._pw).sum(axis=-1)

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        if _scalar(a):
            a = int(a)
            return self._from_digits((-x) % self.p for x in self._digits(a))
        a = np.asarray(a)
        da = (a[..., None] // self._pw) % self.p
        return ((-da) % self.p * self._pw).sum(axis=-1)

    def sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        if _scalar(a) and _scalar(b):
            a, b = int(a), int(b)
            if a == 0 or b == 0:
                return 0
            return self._exp_list[self._log_list[a] + self._log_list[b]]
        a, b = np.asarray(a), np.asarray(b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        if _scalar(a):
            a = int(a)
            if a == 0:
                raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
            if self.m == 1:
                return pow(a, self.p - 2, self.p)
            return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            if self.dtype is object:
                return np.vectorize(lambda x: pow(int(x), self.p - 2, self.p), otypes=[object])(a)
            return _modpow_array(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inv(a), -e)
        if self.m == 1:
            return pow(int(a), e, self.p)
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def dot(self, a, b) -> int:
        """Inner product of two 1-D vectors."""
        a, b = np.asarray(a, dtype=self.dtype), np.asarray(b, dtype=self.dtype)
        if self.m == 1:
            return int(sum(int(x) * int(y) for x, y in zip(a, b)) % self.p)
        total = 0
        for x, y in zip(a.tolist(), b.tolist()):
            total = self.add(total, self.mul(x, y))
        return total

    def matmul(self, A, B) -> np.ndarray:
        A = np.asarray(A, dtype=self.dtype)
        B = np.asarray(B, dtype=self.dtype)
        if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
        if self.m == 1:
            if self.dtype is np.int64 and (self.p - 1) ** 2 * max(A.shape[1], 1) < (1 << 62):
                return (A @ B) % self.p
            return (A.astype(object) @ B.astype(object)) % self.p
        out = self.zeros((A.shape[0], B.shape[1]))
        for i in range(A.shape[1]):
            out = self.add(out, self.mul(A[:, i, None], B[None, i, :]))
        return out


def _scalar(a) -> bool:
    return isinstance(a, (int, np.integer))


def _modpow_array(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """Shared field instance for order ``q``."""
    return GF(q)
