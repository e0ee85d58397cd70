"""Exact integer polynomials.

* ``UniPolyZ``   dense univariate, coefficient list indexed by degree.
* ``BiPolyZ``    bivariate in ``x`` and ``y``, stored sparsely, exported densely.
* ``MultiPolyZ`` polynomials in ``q`` and multilinear in ``v_0 .. v_{m-1}``;
  a term is keyed by ``(q_degree, v_mask)``.
* ``RankProfile`` the subset-to-exponent table that encodes a multivariate
  Tutte polynomial with every v-monomial carrying coefficient 1.

Finite-field polynomials live in :mod:`tutte_galois.ffield`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np


class PolynomialError(ArithmeticError):
    pass


class InexactDivision(PolynomialError):
    pass


class ArityError(PolynomialError):
    """A specialization would leave more than one free variable."""


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class UniPolyZ:
    """Univariate polynomial with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(_trim([int(c) for c in coeffs]))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "UniPolyZ":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPolyZ([other])
        return isinstance(other, UniPolyZ) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPolyZ({list(self.coeffs)})"

    def __str__(self):
        return format_univariate(self.coeffs, "x")

    @staticmethod
    def _coerce(other) -> "UniPolyZ":
        if isinstance(other, UniPolyZ):
            return other
        if isinstance(other, int):
            return UniPolyZ([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPolyZ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPolyZ(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPolyZ()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPolyZ([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPolyZ":
        return UniPolyZ(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "UniPolyZ") -> tuple["UniPolyZ", "UniPolyZ"]:
        """Division over the integers; raises if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq]
            if c == 0:
                continue
            if c % lc:
                raise InexactDivision(f"{self!r} is not divisible by {other!r} over the integers")
            t = c // lc
            quot[i] = t
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= t * b
        return UniPolyZ(quot), UniPolyZ(rem)

    def exact_div(self, other: "UniPolyZ") -> "UniPolyZ":
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"{self!r} is not divisible by {other!r}")
        return q

    __floordiv__ = exact_div

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "UniPolyZ":
        g = self.content()
        if g == 0:
            return self
        if self.lc < 0:
            g = -g
        return UniPolyZ(c // g for c in self.coeffs)

    def pseudo_rem(self, other: "UniPolyZ") -> "UniPolyZ":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq, lc = other.degree, other.lc
        while len(rem) - 1 >= dq and rem:
            c = rem[-1]
            shift = len(rem) - 1 - dq
            rem = [lc * r for r in rem]
            for j, b in enumerate(other.coeffs):
                rem[shift + j] -= c * b
            _trim(rem)
        return UniPolyZ(rem)

    def to_json(self, variable: str = "q") -> dict:
        return {"variable": variable, "coefficients": list(self.coeffs)}


def gcd_z(a: UniPolyZ, b: UniPolyZ) -> UniPolyZ:
    """Polynomial gcd over the integers by the primitive remainder sequence."""
    if a.is_zero():
        return b.primitive() * b.content() if b else b
    if b.is_zero():
        return a.primitive() * a.content()
    c = gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, (r.primitive() if r else r)
    return a.primitive() * c


def is_squarefree_z(f: UniPolyZ) -> bool:
    """True iff ``f`` has no repeated factor of positive degree."""
    if f.is_zero():
        raise PolynomialError("the zero polynomial has no squarefree status")
    if f.degree <= 1:
        return True
    return gcd_z(f, f.derivative()).degree == 0


def format_univariate(coeffs: Sequence[int], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


class BiPolyZ:
    """Integer polynomial in ``x`` and ``y``; ``terms[(i, j)]`` is the
    coefficient of ``x**i * y**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def x(cls) -> "BiPolyZ":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPolyZ":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c: int) -> "BiPolyZ":
        return cls({(0, 0): c})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "BiPolyZ":
        return cls({(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row)})

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPolyZ):
            return other
        if isinstance(other, int):
            return BiPolyZ.const(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        return other is not NotImplemented and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPolyZ({self.to_dense()})"

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPolyZ({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms.items():
            for (k, l), b in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BiPolyZ.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def to_dense(self) -> list[list[int]]:
        dx, dy = self.degree_x(), self.degree_y()
        rows = [[0] * (dy + 1) for _ in range(dx + 1)]
        for (i, j), c in self.terms.items():
            rows[i][j] = c
        return rows

    def at_y(self, y0: int) -> UniPolyZ:
        """Substitute ``y = y0``; the result is a polynomial in ``x``."""
        out = [0] * (self.degree_x() + 1)
        for (i, j), c in self.terms.items():
            out[i] += c * y0 ** j
        return UniPolyZ(out)

    def at_x(self, x0: int) -> UniPolyZ:
        out = [0] * (self.degree_y() + 1)
        for (i, j), c in self.terms.items():
            out[j] += c * x0 ** i
        return UniPolyZ(out)

    def to_json(self) -> dict:
        return {"variables": ["x", "y"], "coefficients": self.to_dense()}


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class MultiPolyZ:
    """Polynomial in ``q`` and multilinear in ``v_0 .. v_{nvars-1}``.

    ``terms[(d, mask)]`` is the coefficient of ``q**d * prod(v_e for e in mask)``.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, int], int] | None = None):
        self.nvars = nvars
        self.terms = {k: int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, nvars: int, c: int = 1) -> "MultiPolyZ":
        return cls(nvars, {(0, 0): c})

    @classmethod
    def q(cls, nvars: int) -> "MultiPolyZ":
        return cls(nvars, {(1, 0): 1})

    @classmethod
    def var(cls, e: int, nvars: int) -> "MultiPolyZ":
        if not 0 <= e < nvars:
            raise PolynomialError(f"variable v_{e} out of range")
        return cls(nvars, {(0, 1 << e): 1})

    def _coerce(self, other):
        if isinstance(other, MultiPolyZ):
            if other.nvars != self.nvars:
                raise PolynomialError("polynomials over different variable sets")
            return other
        if isinstance(other, int):
            return MultiPolyZ.const(self.nvars, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPolyZ.const(self.nvars, other)
        return isinstance(other, MultiPolyZ) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPolyZ({self.nvars}, {self.sorted_terms()})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (d, mask), c in sorted(self.terms.items(), key=lambda t: (-t[0][0], t[0][1])):
            factors = ([f"q^{d}" if d > 1 else "q"] if d else []) + [f"v{e}" for e in _bits(mask)]
            mono = "*".join(factors)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(d, mask, c) for (d, mask), c in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPolyZ(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolyZ(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Product; the factors must not share a v-variable in any pair of terms."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (d1, m1), a in self.terms.items():
            for (d2, m2), b in other.terms.items():
                if m1 & m2:
                    raise PolynomialError("product leaves the multilinear space")
                key = (d1 + d2, m1 | m2)
                out[key] = out.get(key, 0) + a * b
        return MultiPolyZ(self.nvars, out)

    __rmul__ = __mul__

    def q_degree(self) -> int:
        return max((d for d, _ in self.terms), default=-1)

    def q_slice(self, d: int) -> "MultiPolyZ":
        """Coefficient of ``q**d`` as a polynomial in the v-variables."""
        return MultiPolyZ(self.nvars, {(0, m): c for (k, m), c in self.terms.items() if k == d})

    def max_v_degree(self) -> int:
        # bitmask storage makes every term multilinear
        return 1 if any(m for _, m in self.terms) else 0

    def derivative(self, variable: str | int) -> "MultiPolyZ":
        """Formal partial derivative by ``"q"`` or by ``v_e`` given as ``e``."""
        out: dict[tuple[int, int], int] = {}
        if variable == "q":
            for (d, m), c in self.terms.items():
                if d:
                    out[(d - 1, m)] = out.get((d - 1, m), 0) + d * c
            return MultiPolyZ(self.nvars, out)
        e = int(variable)
        if not 0 <= e < self.nvars:
            raise PolynomialError(f"variable v_{e} out of range")
        bit = 1 << e
        for (d, m), c in self.terms.items():
            if m & bit:
                out[(d, m ^ bit)] = c
        return MultiPolyZ(self.nvars, out)

    def relabel(self, labels: Sequence[int], nvars: int) -> "MultiPolyZ":
        """Rename ``v_i`` to ``v_{labels[i]}`` inside a space of ``nvars`` variables."""
        out = {}
        for (d, m), c in self.terms.items():
            new = 0
            for e in _bits(m):
                new |= 1 << labels[e]
            out[(d, new)] = c
        return MultiPolyZ(nvars, out)

    def evaluate(self, q: int, values: Sequence[int]) -> int:
        total = 0
        for (d, m), c in self.terms.items():
            t = c * q ** d
            for e in _bits(m):
                t *= values[e]
            total += t
        return total

    def to_json(self) -> dict:
        return {
            "ground_size": self.nvars,
            "terms": [{"q": d, "vars": _bits(m), "coeff": c} for d, m, c in self.sorted_terms()],
        }


def elementary_symmetric(k: int, values: Sequence[int]) -> int:
    """``sigma_k`` of the given numbers; ``sigma_0 = 1``."""
    if not 0 <= k <= len(values):
        raise ValueError(f"k={k} outside [0, {len(values)}]")
    e = [1] + [0] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def elementary_symmetric_poly(k: int, variables: Sequence[int], nvars: int) -> MultiPolyZ:
    """``sigma_k`` in the named v-variables, as a MultiPolyZ."""
    if not 0 <= k <= len(variables):
        raise ValueError(f"k={k} outside [0, {len(variables)}]")
    from itertools import combinations

    terms = {}
    for combo in combinations(variables, k):
        mask = 0
        for e in combo:
            mask |= 1 << e
        terms[(0, mask)] = 1
    return MultiPolyZ(nvars, terms)


@dataclass(frozen=True, eq=False)
class RankProfile:
    """``exponents[A] = rank - r(A)`` for every subset ``A`` of the ground set.

    This is a lossless encoding of the multivariate Tutte polynomial: the
    v-monomial of ``A`` occurs exactly once, with coefficient 1, times
    ``q ** exponents[A]``.
    """

    ground_size: int
    rank: int
    exponents: np.ndarray

    def __post_init__(self):
        exps = np.asarray(self.exponents, dtype=np.int16)
        if exps.shape != (1 << self.ground_size,):
            raise PolynomialError("exponent table has the wrong length")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def from_rank_table(cls, ranks: np.ndarray, ground_size: int) -> "RankProfile":
        ranks = np.asarray(ranks, dtype=np.int16)
        total = int(ranks[-1])
        return cls(ground_size, total, total - ranks)

    def __eq__(self, other):
        return (isinstance(other, RankProfile) and self.ground_size == other.ground_size
                and self.rank == other.rank and np.array_equal(self.exponents, other.exponents))

    def exponent(self, mask: int) -> int:
        return int(self.exponents[mask])

    def q_degree(self) -> int:
        return int(self.exponents.max())

    def is_monic(self) -> bool:
        """Leading q-coefficient is 1, i.e. only the empty set has full corank."""
        return int(np.count_nonzero(self.exponents == self.rank)) == 1

    def to_multipoly(self) -> MultiPolyZ:
        return MultiPolyZ(self.ground_size,
                          {(int(d), a): 1 for a, d in enumerate(self.exponents.tolist())})

    @classmethod
    def from_multipoly(cls, p: MultiPolyZ, rank: int | None = None) -> "RankProfile":
        """Inverse of ``to_multipoly``; rejects polynomials that are not profiles."""
        m = p.nvars
        exps = np.full(1 << m, -1, dtype=np.int16)
        for (d, mask), c in p.terms.items():
            if c != 1 or exps[mask] != -1:
                raise PolynomialError("not a rank profile: v-monomial with coefficient other than 1")
            exps[mask] = d
        if (exps < 0).any():
            raise PolynomialError("not a rank profile: missing v-monomial")
        return cls(m, int(exps[0]) if rank is None else rank, exps)

    def coefficients_at(self, values: Sequence[int]) -> list[int]:
        """Coefficients (lowest q-degree first) after ``v_e <- values[e]``."""
        m = self.ground_size
        if len(values) != m:
            raise ArityError(f"need {m} values, got {len(values)}")
        prods = [1] * (1 << m)
        for i, x in enumerate(values):
            lo = 1 << i
            for a in range(lo):
                prods[lo | a] = prods[a] * x
        out = [0] * (self.q_degree() + 1)
        for a, d in enumerate(self.exponents.tolist()):
            out[d] += prods[a]
        return out

    def at_v(self, values: Sequence[int]) -> UniPolyZ:
        return UniPolyZ(self.coefficients_at(values))


def _product_table(subs: Sequence, one):
    prods = [one]
    for x in subs:
        prods = prods + [p * x for p in prods]
    return prods


def specialize(p, *, q=None, v=None, y=None, x=None):
    """Exact substitution of values for variables.

    ``RankProfile`` / ``MultiPolyZ``:
      * ``v`` a full sequence of integers  -> ``UniPolyZ`` in q (or its value if ``q`` is also an int)
      * ``q`` an integer, ``v`` omitted    -> ``MultiPolyZ`` with no q
      * ``q`` and every ``v_e`` polynomials in x,y (``BiPolyZ``) -> ``BiPolyZ``
    ``BiPolyZ``: give ``y`` or ``x`` as an integer -> ``UniPolyZ``.
    Any assignment that would leave several free variables of a kind the
    output type cannot hold raises ``ArityError``.
    """
    if isinstance(p, BiPolyZ):
        if (x is None) == (y is None):
            raise ArityError("specialize exactly one of x, y")
        return p.at_y(y) if y is not None else p.at_x(x)
    if isinstance(p, RankProfile):
        if v is not None and q is None and all(isinstance(t, int) for t in v):
            return p.at_v(v)
        p = p.to_multipoly()
    if not isinstance(p, MultiPolyZ):
        raise TypeError(f"cannot specialize {type(p).__name__}")
    m = p.nvars
    if v is None:
        if isinstance(q, int):
            out: dict[tuple[int, int], int] = {}
            for (d, mask), c in p.terms.items():
                out[(0, mask)] = out.get((0, mask), 0) + c * q ** d
            return MultiPolyZ(m, out)
        raise ArityError("the v-variables must all be assigned")
    v = list(v)
    if len(v) != m or any(t is None for t in v):
        raise ArityError(f"need a value for each of the {m} v-variables")
    if all(isinstance(t, int) for t in v) and (q is None or isinstance(q, int)):
        prods = _product_table(v, 1)
        coeffs: dict[int, int] = {}
        for (d, mask), c in p.terms.items():
            coeffs[d] = coeffs.get(d, 0) + c * prods[mask]
        poly = UniPolyZ([coeffs.get(d, 0) for d in range(max(coeffs, default=-1) + 1)])
        return poly if q is None else poly(q)
    if q is None:
        raise ArityError("q must be assigned when v is polynomial-valued")
    qb = BiPolyZ._coerce(q)
    vb = [BiPolyZ._coerce(t) for t in v]
    if qb is NotImplemented or any(t is NotImplemented for t in vb):
        raise TypeError("substitution values must be integers or BiPolyZ")
    uniform = all(t == vb[0] for t in vb)
    q_pows: dict[int, BiPolyZ] = {}
    result = BiPolyZ()
    if uniform and vb:
        v_pows: dict[int, BiPolyZ] = {}
        grouped: dict[tuple[int, int], int] = {}
        for (d, mask), c in p.terms.items():
            key = (d, bin(mask).count("1"))
            grouped[key] = grouped.get(key, 0) + c
        for (d, k), c in grouped.items():
            if d not in q_pows:
                q_pows[d] = qb ** d
            if k not in v_pows:
                v_pows[k] = vb[0] ** k
            result = result + c * q_pows[d] * v_pows[k]
        return result
    prods = _product_table(vb, BiPolyZ.const(1))
    for (d, mask), c in p.terms.items():
        if d not in q_pows:
            q_pows[d] = qb ** d
        result = result + c * q_pows[d] * prods[mask]
    return result
