"""Multivariate and bivariate Tutte polynomials, and the identity suite.

``zhat(M)`` is the sum over subsets ``A`` of ``q**(r(M) - r(A)) * prod(v_e, e in A)``.
Dividing by ``q**r(M)`` gives the Laurent form in ``1/q``; it carries the same
data and is not materialised separately.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import matroid as mat
from .matroid import ElementStatus, Matroid, MatroidError
from .poly import (BiPolyZ, MultiPolyZ, PolynomialError, RankProfile,
                   elementary_symmetric_poly, specialize)

SYMBOLIC_CAP = 16


class Strategy(str, enum.Enum):
    STATE_SUM = "state-sum"
    DELETION_CONTRACTION = "deletion-contraction"


@dataclass(frozen=True, eq=False)
class ZHat(RankProfile):
    """A rank profile tagged with the descriptor of the matroid it came from."""

    source: str = ""

    def to_json(self) -> dict:
        out = self.to_multipoly().to_json()
        out["rank"] = self.rank
        out["source"] = self.source
        return out


def _check_cap(m: Matroid, cap: int = mat.MAX_GROUND) -> None:
    if m.size > cap:
        raise MatroidError(f"ground set of {m.size} elements exceeds the cap of {cap}")


def zhat(m: Matroid, strategy: Strategy | str = Strategy.STATE_SUM, *, memoize: bool = True) -> ZHat:
    strategy = Strategy(strategy)
    _check_cap(m)
    if strategy is Strategy.STATE_SUM:
        prof = RankProfile.from_rank_table(m.rank_table, m.size)
        return ZHat(prof.ground_size, prof.rank, prof.exponents, m.key)
    poly = deletion_contraction(m, memoize=memoize)
    prof = RankProfile.from_multipoly(poly, m.total_rank)
    return ZHat(prof.ground_size, prof.rank, prof.exponents, m.key)


def deletion_contraction(m: Matroid, *, memoize: bool = True) -> MultiPolyZ:
    """Ẑ as a MultiPolyZ via deletion-contraction on the lowest live element.

    States are ``(deleted, contracted)`` masks of the original ground set, so
    the variables keep their original indices all the way down.
    """
    n = m.size
    ranks = m.rank_table
    full = m.full_mask
    memo: dict[tuple[int, int], MultiPolyZ] = {}

    def r(mask: int) -> int:
        return int(ranks[mask])

    def solve(deleted: int, contracted: int, e: int) -> MultiPolyZ:
        if e == n:
            return MultiPolyZ.const(n)
        key = (deleted, contracted)
        if memoize and key in memo:
            return memo[key]
        bit = 1 << e
        live = full & ~(deleted | contracted)
        base = r(contracted)
        ve = MultiPolyZ.var(e, n)
        if r(contracted | bit) == base:                       # loop in the minor
            result = (1 + ve) * solve(deleted | bit, contracted, e + 1)
        elif r(contracted | (live ^ bit)) == r(contracted | live) - 1:  # coloop
            result = (MultiPolyZ.q(n) + ve) * solve(deleted, contracted | bit, e + 1)
        else:
            result = solve(deleted | bit, contracted, e + 1) + ve * solve(deleted, contracted | bit, e + 1)
        if memoize:
            memo[key] = result
        return result

    return solve(0, 0, 0)


def rank_size_histogram(m: Matroid) -> np.ndarray:
    """``hist[k, s]`` = number of subsets of rank ``k`` and size ``s``."""
    ranks = np.asarray(m.rank_table, dtype=np.int64)
    sizes = np.bitwise_count(np.arange(ranks.shape[0], dtype=np.uint32)).astype(np.int64)
    width = m.size + 1
    flat = np.bincount(ranks * width + sizes, minlength=(m.total_rank + 1) * width)
    return flat.reshape(m.total_rank + 1, width)


def tutte_bivariate(m: Matroid) -> BiPolyZ:
    """Corank-nullity state sum, expanded exactly in ``x`` and ``y``."""
    _check_cap(m)
    hist = rank_size_histogram(m)
    r = m.total_rank
    # (x-1)^a (y-1)^b with binomial expansion, accumulated by exponent pair
    by_exp: dict[tuple[int, int], int] = {}
    for k in range(hist.shape[0]):
        for s in range(hist.shape[1]):
            c = int(hist[k, s])
            if c:
                key = (r - k, s - k)
                by_exp[key] = by_exp.get(key, 0) + c
    terms: dict[tuple[int, int], int] = {}
    for (a, b), c in by_exp.items():
        for i in range(a + 1):
            ci = c * comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                t = ci * comb(b, j) * (-1) ** (b - j)
                terms[(i, j)] = terms.get((i, j), 0) + t
    return BiPolyZ(terms)


def circuit_closed_form(m: int) -> ZHat:
    """``q^n + s1 q^(n-1) + ... + s_(n-1) q + (s_n + s_(n+1))`` with ``n = m - 1``,
    ``s_i`` the elementary symmetric polynomials in ``v_0 .. v_(m-1)``."""
    if m < 2:
        raise ValueError("a circuit closed form needs at least two elements")
    n = m - 1
    variables = list(range(m))
    poly = MultiPolyZ(m)
    for i in range(n):
        poly = poly + MultiPolyZ(m, {(n - i, mask): c for (_, mask), c in
                                     elementary_symmetric_poly(i, variables, m).terms.items()})
    poly = poly + elementary_symmetric_poly(n, variables, m) + elementary_symmetric_poly(m, variables, m)
    prof = RankProfile.from_multipoly(poly, n)
    return ZHat(prof.ground_size, prof.rank, prof.exponents, f"circuit({m})")


def coefficients_in_q(z: RankProfile) -> list[MultiPolyZ]:
    """``[a_0, ..., a_(n-1)]`` with ``Ẑ = q^n + a_(n-1) q^(n-1) + ... + a_0``."""
    if not z.is_monic():
        raise PolynomialError("Ẑ is not monic in q; the matroid has loops")
    poly = z.to_multipoly()
    return [poly.q_slice(d) for d in range(z.rank)]


def product_of_one_plus_v(nvars: int) -> MultiPolyZ:
    return MultiPolyZ(nvars, {(0, a): 1 for a in range(1 << nvars)})


def _lift(z: RankProfile, minor_m: mat.MinorMatroid, nvars: int) -> MultiPolyZ:
    return z.to_multipoly().relabel(minor_m.labels, nvars)


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    VACUOUS = "vacuous"


@dataclass
class IdentityCheck:
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass
class IdentityReport:
    source: str
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    def status(self, name: str) -> CheckStatus:
        return next(c.status for c in self.checks if c.name == name)

    def add(self, name: str, ok: bool | None, detail: str = "") -> None:
        status = CheckStatus.VACUOUS if ok is None else (CheckStatus.PASS if ok else CheckStatus.FAIL)
        self.checks.append(IdentityCheck(name, status, detail))

    def to_json(self) -> dict:
        return {
            "input": self.source,
            "passed": self.passed,
            "checks": {c.name: ({"status": c.status.value, "detail": c.detail} if c.detail
                                else {"status": c.status.value}) for c in self.checks},
        }


def check_identities(m: Matroid) -> IdentityReport:
    """Verify every polynomial identity relating Ẑ_M to its minors and
    specializations, symbolically."""
    _check_cap(m, SYMBOLIC_CAP)
    report = IdentityReport(m.key)
    n = m.size
    z = zhat(m, Strategy.STATE_SUM)
    zp = z.to_multipoly()
    dc = zhat(m, Strategy.DELETION_CONTRACTION)
    dc_plain = zhat(m, Strategy.DELETION_CONTRACTION, memoize=False)
    report.add("state_sum_equals_deletion_contraction", z == dc and dc == dc_plain)

    statuses = [mat.element_status(m, e) for e in range(n)]
    regular = [e for e in range(n) if statuses[e] is ElementStatus.REGULAR]
    bad = []
    for e in regular:
        d, c = mat.delete(m, e), mat.contract(m, e)
        rhs = _lift(zhat(d), d, n) + MultiPolyZ.var(e, n) * _lift(zhat(c), c, n)
        if zp != rhs:
            bad.append(e)
    report.add("deletion_contraction_regular", None if not regular else not bad,
               f"failed at {bad}" if bad else "")

    bad = []
    special = [e for e in range(n) if statuses[e] is not ElementStatus.REGULAR]
    for e in special:
        ve = MultiPolyZ.var(e, n)
        if statuses[e] is ElementStatus.LOOP:
            d = mat.delete(m, e)
            rhs = (1 + ve) * _lift(zhat(d), d, n)
        else:
            c = mat.contract(m, e)
            rhs = (MultiPolyZ.q(n) + ve) * _lift(zhat(c), c, n)
        if zp != rhs:
            bad.append(e)
    report.add("loop_coloop_products", None if not special else not bad,
               f"failed at {bad}" if bad else "")

    report.add("q_equals_one_product", specialize(zp, q=1) == product_of_one_plus_v(n))

    xm1 = BiPolyZ.x() - 1
    ym1 = BiPolyZ.y() - 1
    lhs = ym1 ** z.rank * tutte_bivariate(m)
    rhs = specialize(zp, q=xm1 * ym1, v=[ym1] * n)
    report.add("bivariate_substitution", lhs == rhs)

    sep = mat.find_separator(m) if n >= 2 else None
    if sep is None:
        report.add("direct_sum_factorization", None)
    else:
        a = mat.restrict(m, sep)
        b = mat.restrict(m, m.full_mask ^ sep)
        prod = _lift(zhat(a), a, n) * _lift(zhat(b), b, n)
        report.add("direct_sum_factorization", zp == prod, f"separator {sep:#x}")

    bad = []
    checked = 0
    for c in mat.circuits(m):
        k = bin(c).count("1")
        if k < 2:
            continue
        checked += 1
        zc = zhat(mat.restrict(m, c))
        if zc != circuit_closed_form(k):
            bad.append(c)
    report.add("circuit_closed_form", None if not checked else not bad,
               f"failed at {[hex(c) for c in bad]}" if bad else "")

    # a lone coloop is connected but deleting it drops the rank; both minor
    # properties are about connected matroids with at least two elements
    if n >= 2 and mat.is_connected(m):
        ok_ranks = all(mat.delete(m, e).total_rank == z.rank and mat.contract(m, e).total_rank == z.rank - 1
                       for e in range(n))
        ok_tutte = all(mat.is_connected(mat.delete(m, e)) or mat.is_connected(mat.contract(m, e))
                       for e in range(n))
        report.add("minor_ranks", ok_ranks)
        report.add("minor_connectivity", ok_tutte)
    else:
        report.add("minor_ranks", None)
        report.add("minor_connectivity", None)
    return report
