"""Acceptance criteria, one test each, at the stated tolerances.

Every test records a one-line PASS/FAIL verdict; pytest prints them in the
terminal summary, and running this file directly prints them as it goes.
"""

import contextlib
import io
import json
import random
import time

import pytest

from tutte_galois import graphs
from tutte_galois.cli import main
from tutte_galois.corpus import builtin_corpus
from tutte_galois.galois import (Inconclusive, SnCertificate, Status, certify_sn, degree_pattern_mod_p,
                                 jacobian_independence_check, verify_theorem_main, verify_theorem_mod_p)
from tutte_galois.graphs import complete, cycle, cycle_matroid
from tutte_galois.matroid import UniformMatroid, is_connected
from tutte_galois.poly import UniPolyZ
from tutte_galois.tutte import CheckStatus, check_identities, circuit_closed_form, zhat

import oracles

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def connected_loopless(max_rank=6):
    for name, m in builtin_corpus():
        if m.size and is_connected(m) and m.total_rank <= max_rank:
            yield name, m


def run_cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_criterion_1_identity_suite():
    start = time.perf_counter()
    failures = []
    for name, m in builtin_corpus():
        report = check_identities(m)
        failures += [f"{name}:{c.name}" for c in report.checks if c.status is CheckStatus.FAIL]
    circuits_ok = all(circuit_closed_form(k) == zhat(UniformMatroid(k - 1, k)) for k in range(2, 8))
    elapsed = time.perf_counter() - start
    ok = not failures and circuits_ok and elapsed < 30
    record(1, ok, f"{len(builtin_corpus())} corpus matroids, {len(failures)} failed checks, "
                  f"circuit forms m<=7 {'match' if circuits_ok else 'differ'}, {elapsed:.1f}s (< 30s)")


def test_criterion_2_theorem_over_q():
    bad, slowest, count = [], 0.0, 0
    for name, m in connected_loopless():
        start = time.perf_counter()
        report = verify_theorem_main(m, seed=0, prime_bound=10 ** 4)
        slowest = max(slowest, time.perf_counter() - start)
        count += 1
        if report.status is not Status.SN or not report.certificate.is_valid():
            bad.append((name, report.status.value))
    record(2, not bad and slowest < 1.0,
           f"{count} connected loopless matroids of rank <= 6, non-Sn {bad}, slowest {slowest:.2f}s (< 1s)")


def test_criterion_3_positive_characteristic():
    start = time.perf_counter()
    bad = []
    cases = {"C3": cycle(3), "C4": cycle(4), "C5": cycle(5), "K4": complete(4)}
    for name, g in cases.items():
        for p in (2, 3, 5, 7):
            report = verify_theorem_mod_p(cycle_matroid(g), p, seed=0, max_samples=512)
            if report.status is not Status.SN or not report.certificate.is_valid():
                bad.append((name, p))
    elapsed = time.perf_counter() - start
    record(3, not bad and elapsed < 30, f"16 (matroid, p) pairs, non-Sn {bad}, {elapsed:.1f}s (< 30s)")


@pytest.mark.parametrize("order,count", [(3, 1), (4, 3), (5, 10), (6, 56), (7, 468)])
def test_criterion_4_conjecture_experiment(order, count):
    start = time.perf_counter()
    code, out = run_cli("verify-conjecture", "--order", str(order), "--self-check")
    elapsed = time.perf_counter() - start
    lines = [json.loads(x) for x in out.splitlines()]
    reports, summary = lines[:-1], lines[-1]
    ok = (code == 0 and len(reports) == count and summary["oracle_count"] == count
          and all(r["status"] == "Sn" and r["rank"] == order - 1 and r["n"] == order for r in reports)
          and elapsed < 15 * 60)
    record(4, ok, f"N={order}: {len(reports)} graphs (expected {count}, oracle {summary.get('oracle_count')}), "
                  f"statuses {summary['statuses']}, {elapsed:.1f}s")


def test_criterion_4_graph6_file(tmp_path):
    path = tmp_path / "order5.g6"
    path.write_text("".join(g.to_graph6() + "\n" for g in graphs.enumerate_biconnected(5)))
    code_file, from_file = run_cli("verify-conjecture", "--graph6-file", str(path), "--jobs", "1")
    code_order, from_order = run_cli("verify-conjecture", "--order", "5", "--jobs", "1")
    record(4, code_file == 0 and from_file == from_order,
           "graph6 file input reproduces the --order 5 run byte for byte")


def test_criterion_5_jacobian():
    start = time.perf_counter()
    bad, count = [], 0
    for name, m in connected_loopless():
        report = jacobian_independence_check(m, num_points=5, seed=0)
        count += 1
        if report.status != "Independent" or max(report.ranks) != m.total_rank:
            bad.append(name)
    elapsed = time.perf_counter() - start
    record(5, not bad and elapsed < 10, f"{count} matroids reach rank r(M), failures {bad}, {elapsed:.1f}s (< 10s)")


def test_criterion_6_ddf_oracle():
    start = time.perf_counter()
    mismatches, checked = 0, 0
    for p in (2, 3, 5):
        irr = oracles.irreducibles(p, 5)
        for d in range(1, 6):
            for coeffs in oracles.monic_polys(p, d):
                expected = oracles.factor_degrees(coeffs, p, irr)
                if expected is None:
                    continue
                checked += 1
                pat = degree_pattern_mod_p(UniPolyZ(coeffs), p)
                if pat is None or pat.parts != expected:
                    mismatches += 1
    elapsed = time.perf_counter() - start
    record(6, mismatches == 0 and elapsed < 60,
           f"{checked} monic squarefree polynomials over F2, F3, F5, {mismatches} mismatches, {elapsed:.1f}s (< 60s)")


def test_criterion_7_soundness():
    x = UniPolyZ([0, 1])
    cyclic = certify_sn(x ** 3 - 3 * x - 1, 10 ** 5)
    rng = random.Random(0)
    unsound, certified, tried = 0, 0, 0
    while tried < 200:
        b, c, d = (rng.randint(-60, 60) for _ in range(3))
        disc = oracles.cubic_discriminant(b, c, d)
        if disc == 0:
            continue
        tried += 1
        result = certify_sn(UniPolyZ([d, c, b, 1]), 10 ** 4)
        if isinstance(result, SnCertificate):
            certified += 1
            unsound += oracles.is_square(disc)
    ok = isinstance(cyclic, Inconclusive) and unsound == 0
    record(7, ok, f"x^3-3x-1 {'Inconclusive' if isinstance(cyclic, Inconclusive) else 'CERTIFIED'} at 1e5; "
                  f"{certified}/200 random cubics certified, {unsound} with square discriminant")


def test_criterion_8_determinism():
    _, serial = run_cli("verify-conjecture", "--order", "5", "--jobs", "1")
    _, parallel = run_cli("verify-conjecture", "--order", "5", "--jobs", "4")
    record(8, serial == parallel and serial.count("\n") == 11,
           f"--jobs 1 vs --jobs 4 at N=5: {'byte-identical' if serial == parallel else 'DIFFERENT'}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
