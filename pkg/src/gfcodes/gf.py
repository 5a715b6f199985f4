"""Arithmetic in GF(p^m).

Elements are integer codes in ``[0, q)``. For ``m == 1`` a code is the residue
itself. For ``m > 1`` the code ``c = sum(c_i * p**i)`` stands for the
polynomial ``sum(c_i * x**i)`` reduced modulo the field's modulus.

Built-in moduli
---------------
When no modulus is given, ``field_new`` uses the *smallest monic primitive
polynomial* of degree ``m`` over GF(p), where polynomials are ordered by their
base-p encoding ``sum(a_i * p**i)`` (coefficients low degree first). The rule
is deterministic, so element codes are stable across runs. A few entries::

    GF(4)   x^2 + x + 1         [1, 1, 1]
    GF(8)   x^3 + x + 1         [1, 1, 0, 1]
    GF(9)   x^2 + x + 2         [2, 1, 1]
    GF(16)  x^4 + x + 1         [1, 1, 0, 0, 1]
    GF(256) x^8 + x^4 + x^3 + x^2 + 1

Because the modulus is primitive, the class of ``x`` (code ``p``) generates the
multiplicative group and the log/antilog tables are built from it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

MAX_BUILTIN_ORDER = 1 << 16
# add/sub tables are materialized up to this order; larger fields go digit-wise
_TABLE_ORDER_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over GF(p), coefficient lists low degree first --------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    b = _poly_trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        f = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _poly_trim(a)
    return a


def _monic_polys(p: int, deg: int):
    """All monic polynomials of exact degree ``deg``, in base-p order."""
    for low in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(low % p)
            low //= p
        yield coeffs + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _poly_trim([c % p for c in poly])
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for cand in _monic_polys(p, d):
            if not _poly_mod(poly, cand, p):
                return False
    return True


def _antilog_from_x(modulus: Sequence[int], p: int) -> np.ndarray | None:
    """Powers of x modulo ``modulus`` as element codes, or None if x is not primitive."""
    m = len(modulus) - 1
    q = p**m
    inv_lead = pow(modulus[-1], p - 2, p)
    red = [(-c * inv_lead) % p for c in modulus[:-1]]  # x^m == sum red_i x^i
    weights = [p**i for i in range(m)]
    exp = np.zeros(q - 1, dtype=np.int64)
    digits = [0] * m
    digits[0] = 1
    for e in range(q - 1):
        code = sum(d * w for d, w in zip(digits, weights))
        if e > 0 and code == 1:
            return None
        exp[e] = code
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            digits = [(d + top * r) % p for d, r in zip(digits, red)]
    if sum(d * w for d, w in zip(digits, weights)) != 1:
        return None
    return exp


@lru_cache(maxsize=None)
def builtin_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree m over GF(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_BUILTIN_ORDER:
        raise ValueError(f"GF({p}^{m}) is outside the built-in modulus table (order > 2^16)")
    if m == 1:
        return (0, 1)
    for cand in _monic_polys(p, m):
        if cand[0] == 0:
            continue
        if _antilog_from_x(cand, p) is not None:
            return tuple(cand)
    raise AssertionError("no primitive polynomial found")  # pragma: no cover


class FieldCtx:
    """Immutable arithmetic context for GF(p^m).

    The scalar/array methods accept Python ints or integer numpy arrays and
    broadcast like numpy.
    """

    __slots__ = ("p", "m", "q", "modulus", "exp", "log", "_inv", "_add", "_neg", "_digit_w")

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = builtin_modulus(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        while modulus and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != m:
            raise ValueError(f"modulus must have degree {m}, got {len(modulus) - 1}")
        if m > 1 and not is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        q = self.q
        codes = np.arange(q, dtype=np.int64)

        if m == 1:
            self.exp = None
            self.log = None
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = pow(a, p - 2, p)
            self._inv = inv
            self._add = None
            self._neg = None
            self._digit_w = None
        else:
            exp = _antilog_from_x(modulus, p)
            if exp is None:
                exp = _antilog_from_generator(modulus, p)
            log = np.full(q, -1, dtype=np.int64)
            log[exp] = np.arange(q - 1)
            self.exp = exp
            self.log = log
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(-log[1:]) % (q - 1)]
            self._inv = inv
            self._digit_w = np.array([p**i for i in range(m)], dtype=np.int64)
            self._neg = self._digitwise(codes, None, lambda x, _: (-x) % p)
            if p != 2 and q <= _TABLE_ORDER_LIMIT:
                self._add = self._digitwise(codes[:, None], codes[None, :], lambda x, y: (x + y) % p)
            else:
                self._add = None
        for arr in (self.exp, self.log, self._inv, self._add, self._neg):
            if arr is not None:
                arr.setflags(write=False)

    # -- identity -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (FieldCtx, (self.p, self.m, self.modulus))

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- internals --------------------------------------------------------------
    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // w) % self.p for w in self._digit_w]

    def _digitwise(self, a, b, fn):
        da = self._digits(a)
        db = self._digits(b) if b is not None else [None] * self.m
        out = 0
        for x, y, w in zip(da, db, self._digit_w):
            out = out + fn(x, y) * w
        return np.asarray(out, dtype=np.int64)

    @staticmethod
    def _out(x, like):
        if np.ndim(like) == 0 and not isinstance(like, np.ndarray):
            return int(x)
        return x

    # -- arithmetic ---------------------------------------------------------------
    def add(self, a, b):
        if self.m == 1:
            r = (np.asarray(a, dtype=np.int64) + b) % self.p
        elif self.p == 2:
            r = np.bitwise_xor(np.asarray(a, dtype=np.int64), b)
        elif self._add is not None:
            r = self._add[a, b]
        else:
            r = self._digitwise(a, b, lambda x, y: (x + y) % self.p)
        return self._out(r, a if np.ndim(a) >= np.ndim(b) else b)

    def neg(self, a):
        if self.m == 1:
            r = (-np.asarray(a, dtype=np.int64)) % self.p
        elif self.p == 2:
            r = np.asarray(a, dtype=np.int64)
        else:
            r = self._neg[a]
        return self._out(r, a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            r = (np.asarray(a, dtype=np.int64) * b) % self.p
        else:
            a_ = np.asarray(a, dtype=np.int64)
            b_ = np.asarray(b, dtype=np.int64)
            r = self.exp[(self.log[a_] + self.log[b_]) % (self.q - 1)]
            r = np.where((a_ == 0) | (b_ == 0), 0, r)
        return self._out(r, a if np.ndim(a) >= np.ndim(b) else b)

    def inv(self, a):
        a_ = np.asarray(a, dtype=np.int64)
        if np.any(a_ == 0):
            raise ZeroDivisionError("0 has no inverse")
        return self._out(self._inv[a_], a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        a = int(a)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def dot(self, a, b, axis: int = -1):
        """Inner products along ``axis`` of broadcast arrays."""
        if self.m == 1:
            return np.sum(np.asarray(a, dtype=np.int64) * b, axis=axis) % self.p
        prod = self.mul(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        prod = np.moveaxis(prod, axis, 0)
        acc = prod[0]
        for term in prod[1:]:
            acc = self.add(acc, term)
        return acc

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over the field, batched over leading axes like ``np.matmul``."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return np.matmul(a, b) % self.p
        inner = a.shape[-1]
        out = None
        for i in range(inner):
            term = self.mul(a[..., :, i : i + 1], b[..., i : i + 1, :])
            out = term if out is None else self.add(out, term)
        if out is None:
            return np.zeros(a.shape[:-1] + b.shape[-1:], dtype=np.int64)
        return out

    def primitive_element(self) -> int:
        if self.m > 1:
            return int(self.exp[1])
        if self.q == 2:
            return 1
        order = self.q - 1
        factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
        for g in range(2, self.q):
            if all(pow(g, order // f, self.q) != 1 for f in factors):
                return g
        raise AssertionError("no generator")  # pragma: no cover


def _antilog_from_generator(modulus: Sequence[int], p: int) -> np.ndarray:
    """Log tables for an irreducible but non-primitive modulus: search a generator."""
    m = len(modulus) - 1
    q = p**m
    # naive polynomial multiplication over codes; only used at construction time
    def mulcode(a: int, b: int) -> int:
        da = [(a // p**i) % p for i in range(m)]
        db = [(b // p**i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, modulus, p)
        return sum(c * p**i for i, c in enumerate(rem))

    for g in range(2, q):
        exp = np.zeros(q - 1, dtype=np.int64)
        cur = 1
        ok = True
        for e in range(q - 1):
            if e > 0 and cur == 1:
                ok = False
                break
            exp[e] = cur
            cur = mulcode(cur, g)
        if ok and cur == 1:
            return exp
    raise AssertionError("no generator found")  # pragma: no cover


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def field_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Return the (cached) context for GF(p^m)."""
    return _cached_field(int(p), int(m), tuple(int(c) for c in modulus) if modulus is not None else None)


def gf(q: int) -> FieldCtx:
    """Context for GF(q) given the order; q must be a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return field_new(p, m)


def field_arith(ctx: FieldCtx, op: str, *operands):
    """Dispatch ``op`` in {add, sub, mul, inv, neg, pow} on ``ctx``."""
    elems = operands[:1] if op == "pow" else operands
    for x in elems:
        if not 0 <= int(x) < ctx.q:
            raise ValueError(f"operand {x} outside [0, {ctx.q})")
    fn = {"add": ctx.add, "sub": ctx.sub, "mul": ctx.mul, "inv": ctx.inv, "neg": ctx.neg, "pow": ctx.pow}
    try:
        return fn[op](*operands)
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
