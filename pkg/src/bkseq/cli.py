"""Command-line interface.

    bkseq generate pow2 --n 10 --k 3
    bkseq generate bose_chowla --q 5 --k 2 | bkseq verify
    bkseq density --file seq.json
    bkseq selftest --max-n 30 --max-k 4

``verify`` exits 0 when the sequence is B_k, 1 on a collision, 2 on a
usage or parse error and 3 when the instance exceeds ``--limit``.
"""

import argparse
import sys
import time

from . import document
from .constructions import LABELS, construct
from .errors import BkError, InstanceTooLarge
from .primes import is_prime
from .verify import DEFAULT_LIMIT, density_report, verify_bk

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TOO_LARGE = 3

# Bose-Chowla fields above this size are skipped by selftest.
SELFTEST_FIELD_CAP = 1 << 16


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(message, status):
    print(f"bkseq: {message}", file=sys.stderr)
    return status


def _read_document(args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return document.from_document(document.loads(text))


def _sequence_text(seq):
    doc = document.to_document(seq)
    lines = [f"{key}: {value}" for key, value in doc.items() if key not in ("elements", "f")]
    if "f" in doc:
        lines.append("f: " + " ".join(str(c) for c in doc["f"]))
    lines.append("elements: " + " ".join(doc["elements"]))
    return "\n".join(lines)


def cmd_generate(args):
    if args.construction == "bose_chowla":
        if args.q is None:
            return _fail("bose_chowla needs --q", EXIT_USAGE)
    elif args.n is None:
        return _fail(f"{args.construction} needs --n", EXIT_USAGE)
    try:
        seq = construct(args.construction, n=args.n, k=args.k, q=args.q)
    except InstanceTooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    except BkError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.format == "text":
        print(_sequence_text(seq))
    else:
        print(document.dumps(document.to_document(seq)))
    return EXIT_OK


def cmd_verify(args):
    try:
        seq = _read_document(args)
        report = verify_bk(seq, limit=args.limit)
    except InstanceTooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    except (BkError, OSError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    if args.format == "text":
        line = f"ok={report.ok} sums_checked={report.sums_checked}"
        if report.witness:
            a, b = report.witness
            line += f" witness={list(a)} vs {list(b)}"
        print(line)
    else:
        print(document.dumps(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_density(args):
    try:
        seq = _read_document(args)
    except (BkError, OSError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    report = density_report(seq)
    if args.format == "text":
        for key, value in report.to_dict().items():
            print(f"{key}: {value}")
    else:
        print(document.dumps(report.to_dict()))
    return EXIT_OK if all(report.verdicts.values()) else EXIT_FAIL


def selftest_grid(max_n, max_k):
    """(label, n or q, k) triples covered by ``selftest``."""
    grid = []
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            grid.append(("pow2", n, k))
            grid.append(("pow3", n, k))
            if k >= 2:
                grid.append(("geometric", n, k))
    for k in range(2, max_k + 1):
        for q in range(2, max_n + 1):
            if is_prime(q) and q**k <= SELFTEST_FIELD_CAP:
                grid.append(("bose_chowla", q, k))
    return grid


def run_selftest(max_n, max_k, limit=DEFAULT_LIMIT):
    rows = []
    for label, size, k in selftest_grid(max_n, max_k):
        t0 = time.perf_counter()
        if label == "bose_chowla":
            seq = construct(label, q=size, k=k)
        else:
            seq = construct(label, n=size, k=k)
        build = time.perf_counter() - t0
        report = verify_bk(seq, limit=limit)
        density = density_report(seq)
        rows.append({
            "construction": label,
            "size": size,
            "k": k,
            "modulus": str(seq.modulus),
            "bk_ok": report.ok,
            "density_ok": all(density.verdicts.values()),
            "build_s": build,
            "verify_s": report.elapsed,
        })
    return rows


def cmd_selftest(args):
    if args.max_n < 1 or args.max_k < 1:
        return _fail("--max-n and --max-k must be >= 1", EXIT_USAGE)
    try:
        rows = run_selftest(args.max_n, args.max_k, args.limit)
    except InstanceTooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    passed = all(row["bk_ok"] and row["density_ok"] for row in rows)
    if args.format == "json":
        print(document.dumps({"ok": passed, "rows": rows}))
    else:
        print(f"{'construction':<12} {'n|q':>4} {'k':>2} {'B_k':>5} {'dens':>5}"
              f" {'build_ms':>9} {'verify_ms':>9}  modulus")
        for row in rows:
            print(f"{row['construction']:<12} {row['size']:>4} {row['k']:>2}"
                  f" {'pass' if row['bk_ok'] else 'FAIL':>5}"
                  f" {'pass' if row['density_ok'] else 'FAIL':>5}"
                  f" {row['build_s'] * 1e3:9.2f} {row['verify_s'] * 1e3:9.2f}  {row['modulus']}")
        failed = sum(not (row["bk_ok"] and row["density_ok"]) for row in rows)
        print(f"{len(rows)} cases, {failed} failed")
    return EXIT_OK if passed else EXIT_FAIL


def build_parser():
    parser = _Parser(prog="bkseq", description="Explicit B_k sequences and their verification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p, default="json"):
        p.add_argument("--format", choices=("json", "text"), default=default)

    gen = sub.add_parser("generate", help="build a sequence")
    gen.add_argument("construction", choices=LABELS)
    gen.add_argument("--n", type=int)
    gen.add_argument("--q", type=int)
    gen.add_argument("--k", type=int, required=True)
    add_format(gen)
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="brute-force check of the B_k property")
    ver.add_argument("--file", help="sequence document (default: stdin)")
    ver.add_argument("--limit", type=int, default=DEFAULT_LIMIT,
                     help="maximum number of multisets to enumerate")
    add_format(ver)
    ver.set_defaults(func=cmd_verify)

    den = sub.add_parser("density", help="compare the modulus against the density bounds")
    den.add_argument("--file", help="sequence document (default: stdin)")
    add_format(den)
    den.set_defaults(func=cmd_density)

    st = sub.add_parser("selftest", help="build, verify and density-check a grid")
    st.add_argument("--max-n", type=int, default=10)
    st.add_argument("--max-k", type=int, default=3)
    st.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    add_format(st, default="text")
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
