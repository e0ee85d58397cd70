"""Command-line front end: ``tgl <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification yields a non-Sn or failing
status, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from multiprocessing import Pool
from pathlib import Path

from . import galois, graphs, tutte
from .corpus import builtin_corpus
from .graphs import GraphError
from .matroid import Matroid, MatroidError, from_json
from .poly import PolynomialError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("TGL_SEED")
    if raw is None or raw == "":
        return 0
    try:
        seed = int(raw)
    except ValueError:
        raise InputError(f"TGL_SEED must be a natural number, got {raw!r}") from None
    if seed < 0:
        raise InputError("TGL_SEED must be non-negative")
    return seed


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _load_matroid(path: str) -> Matroid:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tgl", description=__doc__.splitlines()[0])
    parser.add_argument("-o", "--output", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zhat", help="multivariate Tutte polynomial as JSON")
    p.add_argument("--matroid", required=True, metavar="FILE")
    p.add_argument("--strategy", choices=[s.value for s in tutte.Strategy], default="state-sum")

    p = sub.add_parser("tutte", help="bivariate Tutte polynomial as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STR")
    src.add_argument("--matroid", metavar="FILE")

    p = sub.add_parser("identities", help="run the identity suite")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", choices=["builtin"])
    src.add_argument("--matroid", metavar="FILE")

    p = sub.add_parser("verify-main", help="certify the Galois group of the multivariate polynomial")
    p.add_argument("--matroid", required=True, metavar="FILE")
    p.add_argument("--char", type=_natural, default=0, metavar="P", help="0 for Q, else a prime")
    p.add_argument("--seed", type=_natural)
    p.add_argument("--prime-bound", type=_positive, default=galois.DEFAULT_PRIME_BOUND)
    p.add_argument("--max-samples", type=_positive, default=galois.DEFAULT_MAX_SAMPLES)

    p = sub.add_parser("verify-conjecture", help="bivariate experiment over biconnected graphs (NDJSON)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--order", type=int, metavar="N")
    src.add_argument("--graph6-file", metavar="FILE")
    p.add_argument("--y0", type=int, default=2)
    p.add_argument("--seed", type=_natural)
    p.add_argument("--prime-bound", type=_positive, default=galois.DEFAULT_PRIME_BOUND)
    p.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: all cores)")
    p.add_argument("--self-check", action="store_true",
                   help="with --order, compare the count against the independent enumeration oracle")

    p = sub.add_parser("independence", help="Jacobian rank of the q-coefficients")
    p.add_argument("--matroid", required=True, metavar="FILE")
    p.add_argument("--points", type=_positive, default=5)
    p.add_argument("--seed", type=_natural)
    return parser


def _cmd_zhat(args) -> tuple[list[str], int]:
    m = _load_matroid(args.matroid)
    return [json.dumps(tutte.zhat(m, args.strategy).to_json())], EXIT_OK


def _cmd_tutte(args) -> tuple[list[str], int]:
    if args.graph6 is not None:
        g = graphs.parse_graph6(args.graph6)
        m = graphs.cycle_matroid(g)
        source = g.to_graph6()
    else:
        m = _load_matroid(args.matroid)
        source = m.key
    out = tutte.tutte_bivariate(m).to_json()
    out["source"] = source
    return [json.dumps(out)], EXIT_OK


def _cmd_identities(args) -> tuple[list[str], int]:
    if args.corpus:
        named = builtin_corpus()
    else:
        m = _load_matroid(args.matroid)
        named = ((m.key, m),)
    lines, ok = [], True
    for name, m in named:
        report = tutte.check_identities(m)
        report.source = name
        ok &= report.passed
        lines.append(_dump(report.to_json()))
    return lines, EXIT_OK if ok else EXIT_FAIL


def _cmd_verify_main(args) -> tuple[list[str], int]:
    m = _load_matroid(args.matroid)
    if args.char == 0:
        report = galois.verify_theorem_main(m, args.seed, args.prime_bound)
    else:
        if not galois.is_prime(args.char):
            raise InputError(f"--char must be 0 or a prime, got {args.char}")
        report = galois.verify_theorem_mod_p(m, args.char, args.seed, args.max_samples)
    code = EXIT_OK if report.status is galois.Status.SN else EXIT_FAIL
    return [json.dumps(report.to_json())], code


def _conjecture_task(task: tuple[str, int, int, int]) -> tuple[str, str]:
    """Worker: one graph6 record in, one NDJSON line and its status out."""
    g6, y0, seed, bound = task
    g = graphs.parse_graph6(g6)
    m = graphs.cycle_matroid(g)
    report = galois.verify_conjecture_bivariate(m, y0, seed, bound, key=g6, order=g.vertex_count)
    return _dump(report.to_json()), report.status.value


def _cmd_verify_conjecture(args) -> tuple[list[str], int]:
    if args.y0 == 1:
        raise InputError("--y0 must not be 1")
    if args.self_check and args.order is None:
        raise InputError("--self-check needs --order")
    if args.order is not None:
        if args.order not in graphs.ENUMERATION_ORDERS:
            r = graphs.ENUMERATION_ORDERS
            raise InputError(f"--order must lie in [{r.start}, {r.stop - 1}]")
        inputs = [g.to_graph6() for g in graphs.enumerate_biconnected(args.order)]
    else:
        try:
            inputs = [g.to_graph6() for g in graphs.read_graph6_file(args.graph6_file)]
        except OSError as exc:
            raise InputError(f"cannot read {args.graph6_file}: {exc.strerror}") from exc
    tasks = [(g6, args.y0, args.seed, args.prime_bound) for g6 in inputs]
    jobs = args.jobs or os.cpu_count() or 1
    if jobs == 1 or len(tasks) < 2:
        results = [_conjecture_task(t) for t in tasks]
    else:
        with Pool(min(jobs, len(tasks))) as pool:
            # imap keeps input order regardless of completion order
            results = list(pool.imap(_conjecture_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))
    lines = [line for line, _ in results]
    statuses = Counter(status for _, status in results)
    summary = {"summary": True, "count": len(results), "statuses": dict(sorted(statuses.items()))}
    ok = all(status == galois.Status.SN.value for _, status in results)
    if args.self_check:
        expected = graphs.oracle_biconnected_count(args.order)
        summary["oracle_count"] = expected
        ok &= expected == len(results)
    lines.append(_dump(summary))
    return lines, EXIT_OK if ok else EXIT_FAIL


def _cmd_independence(args) -> tuple[list[str], int]:
    m = _load_matroid(args.matroid)
    report = galois.jacobian_independence_check(m, args.points, args.seed)
    return [json.dumps(report.to_json())], EXIT_OK if report.independent else EXIT_FAIL


COMMANDS = {
    "zhat": _cmd_zhat,
    "tutte": _cmd_tutte,
    "identities": _cmd_identities,
    "verify-main": _cmd_verify_main,
    "verify-conjecture": _cmd_verify_conjecture,
    "independence": _cmd_independence,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        lines, code = COMMANDS[args.command](args)
    except (InputError, MatroidError, GraphError, PolynomialError, ValueError) as exc:
        print(f"tgl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = "".join(line + "\n" for line in lines)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            print(f"tgl: error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
