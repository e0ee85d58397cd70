"""Symmetric-group certificates for Galois groups from Frobenius cycle types.

Reducing a monic polynomial at a place where it stays separable can only
shrink its Galois group, and over a finite field the group is cyclic,
generated by Frobenius, whose cycle type is the list of irreducible factor
degrees.  Collecting three kinds of cycle types proves the group contains
``S_n``:

* a single ``n``-cycle (transitive),
* a prime cycle of length ``l`` with ``n/2 < l < n`` (with transitivity:
  primitive; the other parts are all shorter than ``l``, so a suitable power
  isolates the ``l``-cycle),
* exactly one 2-cycle with all other cycles odd (an odd power is a
  transposition); a primitive group with a transposition is symmetric.

For ``n = 2`` the 2-cycle alone suffices; for ``n = 3`` a transitive
subgroup of ``S_3`` containing a transposition is ``S_3``.
"""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass, field

from . import matroid as mat
from .ffield import GF, UniPolyFp, ddf, field as gf, is_prime, primes_up_to
from .matroid import Matroid, fraction_free_rank
from .poly import RankProfile, UniPolyZ, is_squarefree_z
from .tutte import coefficients_in_q, tutte_bivariate, zhat

DEFAULT_PRIME_BOUND = 10_000
DEFAULT_MAX_SAMPLES = 512
RETRY_CAP = 32


class Status(str, enum.Enum):
    SN = "Sn"
    INCONCLUSIVE = "Inconclusive"
    NOT_CONNECTED = "NotConnected"
    DEGENERATE = "Degenerate"


class DegenerateError(ValueError):
    """The polynomial (or every specialization tried) has a repeated factor."""


@dataclass(frozen=True)
class DegreePattern:
    """Sorted irreducible-factor degrees of a squarefree polynomial over ``GF(field_order)``."""

    parts: tuple[int, ...]
    prime: int
    field_order: int

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def to_json(self) -> list:
        return [self.field_order, list(self.parts)]


def degree_pattern(f: UniPolyFp) -> DegreePattern | None:
    """Cycle type of Frobenius on the roots of ``f``; None when ``f`` is not squarefree."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree >= 1 and not f.is_squarefree():
        return None
    parts: list[int] = []
    if f.degree >= 1:
        for d, g in ddf(f):
            parts.extend([d] * (g.degree // d))
    return DegreePattern(tuple(sorted(parts)), f.field.p, f.field.order)


def degree_pattern_mod_p(f: UniPolyZ, p: int) -> DegreePattern | None:
    """Pattern of ``f mod p``, or None (rejected) when ``p`` divides the leading
    coefficient or the reduction is not squarefree."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.lc % p == 0:
        return None
    return degree_pattern(UniPolyFp.from_ints(p, f.coeffs).monic())


def is_transitive_pattern(parts: tuple[int, ...], n: int) -> bool:
    return parts == (n,)


def is_transposition_pattern(parts: tuple[int, ...]) -> bool:
    return parts.count(2) == 1 and all(x % 2 == 1 for x in parts if x != 2)


def long_prime_cycle(parts: tuple[int, ...], n: int) -> int | None:
    """A part ``l`` that is prime with ``n/2 < l < n``, if any."""
    for x in sorted(parts, reverse=True):
        if 2 * x > n and x < n and is_prime(x):
            return x
    return None


def required_witnesses(n: int) -> tuple[str, ...]:
    if n <= 1:
        return ()
    if n == 2:
        return ("transitive",)
    if n == 3:
        return ("transitive", "transposition")
    return ("transitive", "transposition", "prime_cycle")


@dataclass
class SnCertificate:
    degree: int
    transitive: DegreePattern | None = None
    transposition: DegreePattern | None = None
    prime_cycle: DegreePattern | None = None
    prime_cycle_length: int | None = None

    def is_valid(self) -> bool:
        """Check each witness against its shape and that the degree's requirements are met."""
        n = self.degree
        need = required_witnesses(n)
        for name in need:
            if getattr(self, name) is None:
                return False
        if self.transitive is not None and not is_transitive_pattern(self.transitive.parts, n):
            return False
        if self.transposition is not None and (
                self.transposition.degree != n or not is_transposition_pattern(self.transposition.parts)):
            return False
        if self.prime_cycle is not None:
            ell = self.prime_cycle_length
            if (self.prime_cycle.degree != n or ell not in self.prime_cycle.parts
                    or long_prime_cycle((ell,), n) != ell):
                return False
        return True

    def to_json(self) -> dict:
        out: dict = {}
        if self.transitive is not None:
            out["transitive"] = self.transitive.to_json()
        if self.transposition is not None:
            out["transposition"] = self.transposition.to_json()
        if self.prime_cycle is not None:
            out["prime_cycle"] = self.prime_cycle.to_json() + [self.prime_cycle_length]
        return out


@dataclass
class Inconclusive:
    degree: int
    prime_bound: int
    partial: SnCertificate


class WitnessCollector:
    """Keeps the first pattern of each witness kind seen for degree ``n``."""

    def __init__(self, n: int):
        self.cert = SnCertificate(n)
        self.need = required_witnesses(n)

    def offer(self, pat: DegreePattern) -> None:
        c, n = self.cert, self.cert.degree
        if c.transitive is None and is_transitive_pattern(pat.parts, n):
            c.transitive = pat
        if "transposition" in self.need and c.transposition is None and is_transposition_pattern(pat.parts):
            c.transposition = pat
        if "prime_cycle" in self.need and c.prime_cycle is None:
            ell = long_prime_cycle(pat.parts, n)
            if ell is not None:
                c.prime_cycle = pat
                c.prime_cycle_length = ell

    @property
    def complete(self) -> bool:
        return all(getattr(self.cert, name) is not None for name in self.need)


def certify_sn(f: UniPolyZ, prime_bound: int = DEFAULT_PRIME_BOUND) -> SnCertificate | Inconclusive:
    """Scan primes up to ``prime_bound`` for witnesses that Gal(f/Q) = S_n.

    Never returns a certificate for a smaller group: every witness pattern is
    a genuine cycle type of an element of the group.
    """
    if f.degree < 1:
        raise ValueError("need a polynomial of positive degree")
    if not is_squarefree_z(f):
        raise DegenerateError(f"{f} is not squarefree")
    col = WitnessCollector(f.degree)
    if col.complete:
        return col.cert
    for p in primes_up_to(prime_bound):
        pat = degree_pattern_mod_p(f, p)
        if pat is None:
            continue
        col.offer(pat)
        if col.complete:
            return col.cert
    return Inconclusive(f.degree, prime_bound, col.cert)


@dataclass(frozen=True)
class Specialization:
    assignment: tuple[int, ...]
    poly: UniPolyZ
    attempts: int = 1


def rng_for(seed: int, *key) -> random.Random:
    """Independent, reproducible stream per (seed, input) pair."""
    return random.Random(":".join(map(str, (seed,) + key)))


def specialize_at(z: RankProfile, assignment) -> Specialization:
    """Specialize at a given integer point; DegenerateError if not squarefree."""
    f = z.at_v(list(assignment))
    if not is_squarefree_z(f):
        raise DegenerateError(f"specialization {list(assignment)} gives non-squarefree {f}")
    return Specialization(tuple(assignment), f)


def _squarefree_specializations(z: RankProfile, seed: int, key: str):
    """Squarefree specializations from the seeded stream, at most RETRY_CAP draws."""
    m = z.ground_size
    rng = rng_for(seed, key)
    for attempt in range(1, RETRY_CAP + 1):
        values = tuple(rng.sample(range(1, 10 * m + 1), m))
        f = z.at_v(values)
        if is_squarefree_z(f):
            yield Specialization(values, f, attempt)


def specialize_for_verification(z: RankProfile, seed: int = 0, key: str | None = None) -> Specialization:
    """Distinct pseudorandom integers ``v_e`` in ``[1, 10|E|]``; retried while
    the result is not squarefree, up to the retry cap."""
    key = key if key is not None else getattr(z, "source", "")
    for spec in _squarefree_specializations(z, seed, key):
        return spec
    raise DegenerateError(f"{RETRY_CAP} specializations were all non-squarefree")


INFERENCE_Q = ("a good reduction of the specialized polynomial has Frobenius elements whose cycle types "
               "force the specialized group to be S_n; specialization embeds that group into the generic "
               "group, which lies in S_n, so the generic group is S_n")
INFERENCE_FP = ("each squarefree sample over a finite field has cyclic group generated by Frobenius and "
                "embeds into the generic group; the pooled cycle types force S_n")


@dataclass
class VerificationReport:
    """``n`` is the graph order for graph inputs and the degree ``r(M)`` otherwise."""

    input: str
    n: int
    rank: int
    status: Status
    assignment: tuple[int, ...] | None = None
    y0: int | None = None
    characteristic: int = 0
    irreducible_witness_prime: int | None = None
    certificate: SnCertificate | None = None
    samples: int | None = None
    prime_bound: int | None = None
    inference: str = ""
    wall_time: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        out: dict = {"input": self.input, "n": self.n, "rank": self.rank}
        if self.y0 is not None:
            out["y0"] = self.y0
        else:
            out["assignment"] = list(self.assignment) if self.assignment is not None else None
        if self.characteristic:
            out["characteristic"] = self.characteristic
            out["samples"] = self.samples
        out["irreducible_witness_prime"] = self.irreducible_witness_prime
        out["certificate"] = self.certificate.to_json() if self.certificate is not None else None
        out["status"] = self.status.value
        if self.inference:
            out["inference"] = self.inference
        return out


def _connected(m: Matroid) -> bool:
    return m.size > 0 and mat.is_connected(m)


def _finish(report: VerificationReport, result, start: float) -> VerificationReport:
    if isinstance(result, SnCertificate):
        report.status = Status.SN
        report.certificate = result
        if result.transitive is not None:
            report.irreducible_witness_prime = result.transitive.field_order
    else:
        report.status = Status.INCONCLUSIVE
    report.wall_time = time.perf_counter() - start
    return report


def verify_theorem_main(m: Matroid, seed: int = 0, prime_bound: int = DEFAULT_PRIME_BOUND,
                        key: str | None = None) -> VerificationReport:
    """Certify Gal(Ẑ_M / Q(v)) = S_r(M) through one integer specialization."""
    start = time.perf_counter()
    key = key or m.key
    rank = m.total_rank if m.size else 0
    report = VerificationReport(key, rank, rank, Status.NOT_CONNECTED, prime_bound=prime_bound)
    if not _connected(m):
        return report
    z = zhat(m)
    # a certificate at any one place proves the generic statement, so an
    # exceptional specialization just moves us on to the next draw
    result = None
    for spec in _squarefree_specializations(z, seed, key):
        report.assignment = spec.assignment
        result = certify_sn(spec.poly, prime_bound)
        if isinstance(result, SnCertificate):
            break
    if result is None:
        report.status = Status.DEGENERATE
        return report
    report.inference = INFERENCE_Q
    return _finish(report, result, start)


def extension_degrees(p: int) -> list[int]:
    """Extension degrees cycled through when sampling in characteristic ``p``."""
    from .ffield import MAX_EXTENSION_ORDER

    ks = [1]
    while p ** (ks[-1] + 1) <= MAX_EXTENSION_ORDER:
        ks.append(ks[-1] + 1)
    return ks


def _specialize_over(z: RankProfile, fld: GF, values) -> UniPolyFp:
    m = z.ground_size
    prods = [1] * (1 << m)
    for i, x in enumerate(values):
        lo = 1 << i
        for a in range(lo):
            prods[lo | a] = fld.mul(prods[a], x)
    coeffs = [0] * (z.q_degree() + 1)
    for a, d in enumerate(z.exponents.tolist()):
        coeffs[d] = fld.add(coeffs[d], prods[a])
    return UniPolyFp(fld, coeffs)


def verify_theorem_mod_p(m: Matroid, p: int, seed: int = 0, max_samples: int = DEFAULT_MAX_SAMPLES,
                         key: str | None = None) -> VerificationReport:
    """Certify Gal(Ẑ_M / F_p(v)) = S_r(M) by pooling Frobenius cycle types of
    many specializations into finite fields of characteristic ``p``."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p}")
    start = time.perf_counter()
    key = key or m.key
    rank = m.total_rank if m.size else 0
    report = VerificationReport(key, rank, rank, Status.NOT_CONNECTED, characteristic=p, samples=0)
    if not _connected(m):
        return report
    z = zhat(m)
    n = z.rank
    report.inference = INFERENCE_FP
    col = WitnessCollector(n)
    rng = rng_for(seed, key, p)
    ks = extension_degrees(p)
    s = 0
    while not col.complete and s < max_samples:
        fld = gf(p, ks[s % len(ks)])
        s += 1
        if fld.order >= m.size:
            values = rng.sample(range(fld.order), m.size)
        else:
            values = [rng.randrange(fld.order) for _ in range(m.size)]
        pat = degree_pattern(_specialize_over(z, fld, values))
        if pat is not None:
            col.offer(pat)
    report.samples = s
    result = col.cert if col.complete else Inconclusive(n, 0, col.cert)
    report = _finish(report, result, start)
    # witnesses live in extension fields; their orders are in the certificate
    report.irreducible_witness_prime = None
    return report


def verify_conjecture_bivariate(m: Matroid, y0: int = 2, seed: int = 0,
                                prime_bound: int = DEFAULT_PRIME_BOUND, key: str | None = None,
                                order: int | None = None) -> VerificationReport:
    """Certify Gal(T_M(x, y) / Q(y)) = S_r(M) through a place ``y = y0, y0 + 1, ...``
    (skipping 1), moving on while the specialization is not squarefree or
    yields no certificate.  ``y0`` in the report is the place that was used.

    ``seed`` is accepted for interface symmetry; the procedure is deterministic.
    """
    if y0 == 1:
        raise ValueError("y0 = 1 collapses v_e <- y - 1 to zero")
    start = time.perf_counter()
    key = key or m.key
    report = VerificationReport(key, m.total_rank if order is None else order,
                                m.total_rank if m.size else 0, Status.NOT_CONNECTED, y0=y0,
                                prime_bound=prime_bound)
    if not _connected(m):
        return report
    t = tutte_bivariate(m)
    result = None
    y = y0
    for _ in range(RETRY_CAP):
        f = t.at_y(y)
        if is_squarefree_z(f):
            report.y0 = y
            result = certify_sn(f, prime_bound)
            if isinstance(result, SnCertificate):
                break
        y += 2 if y + 1 == 1 else 1
    if result is None:
        report.status = Status.DEGENERATE
        return report
    report.inference = INFERENCE_Q.replace("generic group", "group over Q(y)")
    return _finish(report, result, start)


@dataclass
class JacobianReport:
    input: str
    rank: int
    status: str
    points: list[tuple[int, ...]] = field(default_factory=list)
    ranks: list[int] = field(default_factory=list)

    @property
    def independent(self) -> bool:
        return self.status == "Independent"

    def to_json(self) -> dict:
        return {"input": self.input, "rank": self.rank, "status": self.status,
                "points": [list(p) for p in self.points], "ranks": self.ranks}


def jacobian_rows(m: Matroid, point) -> list[list[int]]:
    """``d a_i / d v_e`` at ``point``, rows ordered ``a_(n-1), ..., a_0``."""
    coeffs = coefficients_in_q(zhat(m))
    grads = [[a.derivative(e) for e in range(m.size)] for a in reversed(coeffs)]
    return [[g.evaluate(0, point) for g in row] for row in grads]


def jacobian_independence_check(m: Matroid, num_points: int = 5, seed: int = 0,
                                key: str | None = None) -> JacobianReport:
    """Generic Jacobian rank of the q-coefficients of Ẑ_M, sampled at integer points.

    Rank ``r(M)`` at any point implies the coefficients are algebraically
    independent over Q.
    """
    key = key or m.key
    if not _connected(m):
        return JacobianReport(key, m.total_rank if m.size else 0, Status.NOT_CONNECTED.value)
    n = m.total_rank
    coeffs = coefficients_in_q(zhat(m))
    grads = [[a.derivative(e) for e in range(m.size)] for a in reversed(coeffs)]
    rng = rng_for(seed, key, "jacobian")
    report = JacobianReport(key, n, "Dependent")
    for _ in range(num_points):
        point = tuple(rng.randint(1, 10 * m.size) for _ in range(m.size))
        rows = [[g.evaluate(0, point) for g in row] for row in grads]
        report.points.append(point)
        report.ranks.append(fraction_free_rank(rows))
    if n in report.ranks:
        report.status = "Independent"
    return report
