"""Finite fields and univariate polynomials over them.

``GF(p)`` uses plain modular arithmetic.  ``GF(p, k)`` for ``k > 1`` encodes an
element as the integer whose base-``p`` digits are its coordinates over the
prime field, and does arithmetic through precomputed tables, so it is
limited to small orders (``p**k <= 256``).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_EXTENSION_ORDER = 256

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = False
    return np.flatnonzero(sieve).tolist()


class GF:
    """The field with ``p**k`` elements, elements being ints in ``range(order)``."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        self.p = p
        self.k = k
        self.order = p ** k
        self.modulus: tuple[int, ...] | None = None
        if k > 1:
            if self.order > MAX_EXTENSION_ORDER:
                raise ValueError(f"GF({p}^{k}) exceeds the table limit {MAX_EXTENSION_ORDER}")
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def _build_tables(self):
        p, k, q = self.p, self.k, self.order
        self.modulus = _smallest_irreducible(p, k)
        digits = np.array([[(a // p ** i) % p for i in range(k)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        sums = (digits[:, None, :] + digits[None, :, :]) % p
        self._add = (sums @ weights).tolist()
        self._neg = (((-digits) % p) @ weights).tolist()
        # discrete logarithms from a primitive element
        for g in range(2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - every finite field has a primitive element
            raise RuntimeError("no primitive element found")
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._exp = exp
        self._log = log

    def _mul_slow(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da = [(a // p ** i) % p for i in range(k)]
        db = [(b // p ** i) % p for i in range(k)]
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] += x * y
        mod = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k + 1):
                    prod[i - k + j] -= c * mod[j]
        return sum((prod[i] % p) * p ** i for i in range(k))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def from_int(self, n: int) -> int:
        """Image of an integer under the map Z -> prime field -> this field."""
        return n % self.p


@lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> GF:
    return GF(p, k)


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p with the smallest coefficient code."""
    f = GF(p)
    for code in range(p ** k):
        coeffs = [(code // p ** i) % p for i in range(k)] + [1]
        if coeffs[0] == 0:
            continue
        poly = UniPolyFp(f, coeffs)
        if len(ddf(poly)) == 1 and ddf(poly)[0][0] == k:
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


class UniPolyFp:
    """Univariate polynomial over a finite field, lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: GF, coeffs: Iterable[int] = ()):
        self.field = fld
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    @classmethod
    def from_ints(cls, p_or_field: int | GF, ints: Iterable[int]) -> "UniPolyFp":
        fld = p_or_field if isinstance(p_or_field, GF) else field(p_or_field)
        return cls(fld, [fld.from_int(int(c)) for c in ints])

    @classmethod
    def x(cls, fld: GF) -> "UniPolyFp":
        return cls(fld, [0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPolyFp) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs)))

    def __repr__(self):
        return f"UniPolyFp({self.field!r}, {self.coeffs})"

    def _check(self, other: "UniPolyFp"):
        if not isinstance(other, UniPolyFp):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"modulus mismatch: {self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPolyFp(f, out)

    def __neg__(self):
        return UniPolyFp(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return UniPolyFp(self.field, _mul(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "UniPolyFp":
        return UniPolyFp(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def monic(self) -> "UniPolyFp":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lc))

    def divmod(self, other: "UniPolyFp") -> tuple["UniPolyFp", "UniPolyFp"]:
        self._check(other)
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return UniPolyFp(self.field, q), UniPolyFp(self.field, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPolyFp") -> "UniPolyFp":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{self!r} is not divisible by {other!r}")
        return q

    __floordiv__ = exact_div

    def derivative(self) -> "UniPolyFp":
        f = self.field
        return UniPolyFp(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs) if i])

    def powmod(self, e: int, modulus: "UniPolyFp") -> "UniPolyFp":
        return UniPolyFp(self.field, _powmod(self.field, self.coeffs, e, modulus.coeffs))

    def gcd(self, other: "UniPolyFp") -> "UniPolyFp":
        """Monic gcd (zero only if both inputs are zero)."""
        self._check(other)
        return UniPolyFp(self.field, _gcd(self.field, self.coeffs, other.coeffs))

    def is_squarefree(self) -> bool:
        if not self.coeffs:
            raise ArithmeticError("the zero polynomial has no squarefree status")
        return self.gcd(self.derivative()).degree == 0

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc


def _mul(f: GF, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if f.k == 1:
        p = f.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return out


def _divmod(f: GF, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    db = len(b) - 1
    inv = f.inv(b[-1])
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1 - db, -1, -1):
        c = rem[i + db]
        if c == 0:
            continue
        t = f.mul(c, inv)
        quot[i] = t
        for j, y in enumerate(b):
            rem[i + j] = f.sub(rem[i + j], f.mul(t, y))
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _mod(f: GF, a, b):
    return _divmod(f, a, b)[1]


def _powmod(f: GF, base: Sequence[int], e: int, m: Sequence[int]) -> list[int]:
    result = [1]
    base = _mod(f, base, m)
    while e:
        if e & 1:
            result = _mod(f, _mul(f, result, base), m)
        e >>= 1
        if e:
            base = _mod(f, _mul(f, base, base), m)
    return _mod(f, result, m)


def _gcd(f: GF, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(f, a, b)
    if not a:
        return a
    inv = f.inv(a[-1])
    return [f.mul(inv, c) for c in a]


def ddf(g: UniPolyFp) -> list[tuple[int, UniPolyFp]]:
    """Distinct-degree factorization of a squarefree polynomial.

    Returns ``(d, g_d)`` pairs where ``g_d`` is the product of all monic
    irreducible factors of degree ``d``; pairs with trivial ``g_d`` are omitted.
    """
    fld = g.field
    f = g.monic().coeffs
    q = fld.order
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(fld, h, q, f)
        diff = _add_sub(fld, h, x)
        gd = _gcd(fld, f, diff)
        if len(gd) > 1:
            out.append((d, UniPolyFp(fld, gd)))
            f = _divmod(fld, f, gd)[0]
            h = _mod(fld, h, f)
    if len(f) > 1:
        out.append((len(f) - 1, UniPolyFp(fld, f)))
    return out


def _add_sub(f: GF, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [f.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out
