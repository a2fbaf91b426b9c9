"""Small finite fields with log/antilog tables.

An element of GF(p^k) is an int in ``[0, q)`` whose base-``p`` digits are
the coefficients (lowest degree first) of its polynomial representative
modulo the field's defining polynomial.  So 0 is zero, 1 is one, and for
prime fields the element is just its residue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

MAX_PRIME = 2**16

# Conway polynomials, coefficients listed from the constant term up.
MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    9: (2, 2, 1),
    27: (1, 2, 0, 1),
    81: (2, 0, 0, 2, 1),
    25: (2, 4, 1),
    125: (3, 3, 0, 1),
    49: (3, 6, 1),
    121: (2, 7, 1),
}


class UnsupportedFieldError(ValueError):
    pass


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return ``(p, k)`` with ``q == p**k`` for prime ``p``, or ``None``."""
    if q < 2:
        return None
    n, p = q, 2
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        return (q, 1)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def _polymod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = [c % p for c in a]
    k = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(k + 1):
                a[i - k + j] = (a[i - k + j] - c * m[j]) % p
    return (a + [0] * k)[:k]


def _polymul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to ``deg(m) // 2``."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_polymod(list(m), tuple(tail) + (1,), p)):
                return False
    return True


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _encode(ds, p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(q) with ``q = p**k``; immutable once built by :func:`make_field`."""

    p: int
    k: int
    modulus: tuple[int, ...]
    generator: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    neg_table: np.ndarray = field(repr=False)
    add_table: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.add_table is None:
            return (a + b) % self.p
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.exp[(-int(self.log[a])) % (self.q - 1)])

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return int(self.exp[(int(self.log[a]) * n) % (self.q - 1)])

    def add_arr(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.add_table is None:
            return (a + b) % self.p
        return self.add_table[a, b]

    def mul_arr(self, a: np.ndarray, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.broadcast_to(np.asarray(b), a.shape)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out).astype(self.exp.dtype)

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, modulus={self.modulus}, generator={self.generator})"


def _multiplicative_order(x: int, mul, q: int) -> int:
    y, n = x, 1
    while y != 1:
        y = mul(y, x)
        n += 1
        if n > q:
            return 0
    return n


def make_field(q: int) -> FieldSpec:
    pk = prime_power(q)
    if pk is None:
        raise UnsupportedFieldError(f"{q} is not a prime power")
    p, k = pk
    if k == 1:
        if q > MAX_PRIME:
            raise UnsupportedFieldError(f"prime fields are limited to q <= {MAX_PRIME}")
        modulus: tuple[int, ...] = (0, 1)

        def mul(a: int, b: int) -> int:
            return a * b % p

    else:
        if q not in MODULI:
            raise UnsupportedFieldError(f"no modulus tabulated for q = {q}")
        modulus = MODULI[q]
        if not is_irreducible(modulus, p):
            raise UnsupportedFieldError(f"tabulated modulus for q = {q} is reducible")

        def mul(a: int, b: int) -> int:
            return _encode(_polymod(_polymul(_digits(a, p, k), _digits(b, p, k)), modulus, p), p)

    if q == 2:
        generator = 1
    else:
        generator = next(g for g in range(2, q) if _multiplicative_order(g, mul, q) == q - 1)

    dtype = np.uint8 if q <= 256 else np.uint32
    exp = np.zeros(q - 1, dtype=dtype)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        exp[i] = x
        log[x] = i
        x = mul(x, generator)
    if x != 1:
        raise AssertionError("generator order check failed")

    if k == 1:
        neg_table = ((-np.arange(q)) % p).astype(dtype)
        add_table = None
    else:
        digits = np.array([_digits(x, p, k) for x in range(q)], dtype=np.int64)
        powers = p ** np.arange(k)
        sums = (digits[:, None, :] + digits[None, :, :]) % p
        add_table = (sums @ powers).astype(dtype)
        neg_table = (((-digits) % p) @ powers).astype(dtype)

    F = FieldSpec(p, k, modulus, generator, exp, log, neg_table, add_table)
    _self_check(F, mul)
    return F


def _self_check(F: FieldSpec, slow_mul) -> None:
    q = F.q
    for x in range(1, q):
        if F.mul(x, F.inv(x)) != 1:
            raise AssertionError(f"inverse check failed at {x}")
    # Frobenius is additive and fixes every element after k steps.
    sample = range(q) if q <= 64 else range(0, q, max(1, q // 64))
    for x in sample:
        if F.pow(x, q) != x:
            raise AssertionError(f"x^q != x at {x}")
        y = (x * 7 + 3) % q
        if F.pow(F.add(x, y), F.p) != F.add(F.pow(x, F.p), F.pow(y, F.p)):
            raise AssertionError("Frobenius is not additive")
        if F.mul(x, y) != slow_mul(x, y):
            raise AssertionError("log tables disagree with polynomial multiplication")


def torus_points(F: FieldSpec) -> list[tuple[int, int]]:
    """All of (F*)^2 as pairs ``(g^i, g^j)``, row-major in the exponents ``(i, j)``."""
    e = [int(v) for v in F.exp]
    return [(a, b) for a in e for b in e]
