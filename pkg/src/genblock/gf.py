"""Finite fields GF(p^e) for small p and e.

Elements are the integers ``0 .. q-1``.  For ``e > 1`` the base-``p`` digits
of an element are the coefficients of a polynomial of degree ``< e``
(least significant digit = constant term), reduced modulo a fixed monic
irreducible polynomial.  Arithmetic goes through precomputed ``q x q``
numpy tables so that vectorised row operations are plain fancy indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapabilityError, DomainError

# Monic irreducible polynomials, coefficients from constant term upward.
# Each one is the irreducible of its degree with the smallest value
# sum(c_i * p**i).
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
}

SUPPORTED_PRIMES = (2, 3, 5, 7)


def _digits(x, p, e):
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p):
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


def _poly_mulmod(a, b, p, modulus):
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # modulus is monic: x^e = -(lower terms)
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(e):
                prod[k - e + i] = (prod[k - e + i] - c * modulus[i]) % p
    return prod[:e]


def _readonly(a):
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False, repr=False)
class Field:
    """The finite field of order ``q = p**e`` with a fixed element encoding.

    Use :func:`make_field` rather than calling the constructor.
    """

    p: int
    e: int
    modulus: tuple
    add_table: np.ndarray = field(compare=False)
    mul_table: np.ndarray = field(compare=False)
    neg_table: np.ndarray = field(compare=False)
    inv_table: np.ndarray = field(compare=False)
    primitive_element: int
    log_table: np.ndarray = field(compare=False)
    antilog_table: np.ndarray = field(compare=False)

    @property
    def q(self):
        return self.p ** self.e

    @property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    def __repr__(self):
        return f"GF({self.q})"

    def __reduce__(self):
        return (make_field, (self.p, self.e))

    # scalar helpers -------------------------------------------------------
    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise DomainError("0 has no multiplicative inverse")
        return int(self.inv_table[a])

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise DomainError("0 has no multiplicative inverse")
            return 1 if n == 0 else 0
        return int(self.antilog_table[(int(self.log_table[a]) * n) % (self.q - 1)])

    def log(self, a):
        if a == 0:
            raise DomainError("log of 0 is undefined")
        return int(self.log_table[a])

    def antilog(self, k):
        return int(self.antilog_table[k % (self.q - 1)])

    def frobenius(self, a):
        return self.pow(a, self.p)

    def coefficients(self, a):
        """Coefficient vector (constant term first) of element ``a`` over GF(p)."""
        return _digits(a, self.p, self.e)

    def from_coefficients(self, coeffs):
        return _undigits(list(coeffs), self.p)

    # vectorised helpers ---------------------------------------------------
    def vadd(self, a, b):
        return self.add_table[a, b]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def vsub(self, a, b):
        return self.add_table[a, self.neg_table[b]]


@lru_cache(maxsize=None)
def make_field(p, e=1):
    """Build GF(p^e) for ``p in {2,3,5,7}`` and ``e in {1,2,3}``.

    >>> F = make_field(2, 3)
    >>> F.q
    8
    """
    if p not in SUPPORTED_PRIMES or e not in (1, 2, 3) or p**e > 343:
        raise CapabilityError(f"GF({p}^{e}) is not supported")
    q = p**e
    modulus = (0, 1) if e == 1 else IRREDUCIBLE[(p, e)]
    elems = np.arange(q)
    if e == 1:
        add = (elems[:, None] + elems[None, :]) % p
        mul = (elems[:, None] * elems[None, :]) % p
    else:
        digs = [_digits(x, p, e) for x in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                s = _undigits([(x + y) % p for x, y in zip(digs[a], digs[b])], p)
                m = _undigits(_poly_mulmod(digs[a], digs[b], p, modulus), p)
                add[a, b] = add[b, a] = s
                mul[a, b] = mul[b, a] = m
    dtype = np.uint8 if q <= 256 else np.uint16
    neg = np.argmin(add, axis=1)  # add[a, neg[a]] == 0
    inv = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

    # smallest generator of the multiplicative group
    prim = None
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x = mul[x, g]
            order += 1
        if order == q - 1:
            prim = g
            break
    antilog = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for k in range(q - 1):
        antilog[k] = x
        log[x] = k
        x = mul[x, prim]

    return Field(
        p=p,
        e=e,
        modulus=tuple(modulus),
        add_table=_readonly(add.astype(dtype)),
        mul_table=_readonly(mul.astype(dtype)),
        neg_table=_readonly(neg.astype(dtype)),
        inv_table=_readonly(inv.astype(dtype)),
        primitive_element=prim,
        log_table=_readonly(log),
        antilog_table=_readonly(antilog),
    )


def field_of_order(q):
    """Return the supported field with ``q`` elements."""
    for p in SUPPORTED_PRIMES:
        e, x = 0, q
        while x % p == 0:
            x //= p
            e += 1
        if x == 1 and e >= 1:
            return make_field(p, e)
    if q < 2 or len({d for d in range(2, q + 1) if q % d == 0 and all(d % k for k in range(2, d))}) != 1:
        raise DomainError(f"{q} is not a prime power")
    raise CapabilityError(f"no supported field of order {q}")


def field_arith(F, op, a, b=None):
    """Evaluate ``op`` in ``{'add','mul','neg','inv','pow'}`` on field elements.

    For ``pow`` the second operand is an ordinary integer exponent.
    """
    for x in (a,) if op in ("neg", "inv", "pow") else (a, b):
        if not 0 <= x < F.q:
            raise DomainError(f"{x} is not an element of {F!r}")
    if op == "add":
        return F.add(a, b)
    if op == "mul":
        return F.mul(a, b)
    if op == "neg":
        return F.neg(a)
    if op == "inv":
        return F.inv(a)
    if op == "pow":
        return F.pow(a, b)
    raise DomainError(f"unknown field operation {op!r}")
