"""Command-line interface: ``circperm {count,list,table,verify,bijection,classes,occurrences}``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 refused resource bound, 4 I/O failure.
"""
import argparse
import csv
import io
import json
import sys
import time

from . import bijections as bj
from . import formulas
from .enumerator import count_avoiders, list_avoiders
from .model import (
    InvalidInputError,
    UnsupportedPatternError,
    canonicalize,
    contains_circular,
    contains_linear,
    count_occurrences_circular,
    occurrences_circular,
    parse_pattern,
    parse_word,
    pattern_classes,
)
from . import verify as suites

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_REFUSED = 3
EXIT_IO = 4

DEFAULT_MAX_BRUTE_N = 9
HARD_MAX_BRUTE_N = 11

TABLE_FIELDS = ("n", "pattern", "formula", "brute", "match")


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _fmt_word(w):
    return " ".join(map(str, w))


def _fmt_bits(b):
    return "".join(map(str, b))


def _patterns(text):
    try:
        if ";" in text:
            parts = text.split(";")
        elif "," in text and all(len(t.strip()) > 1 for t in text.split(",")):
            parts = text.split(",")
        else:
            parts = [text]
        return [parse_pattern(t) for t in parts if t.strip()]
    except InvalidInputError as exc:
        raise CliError(str(exc), EXIT_INVALID)


def _brute_cap(args):
    cap = args.max_brute_n
    if cap > HARD_MAX_BRUTE_N:
        raise CliError(f"--max-brute-n {cap} exceeds the hard ceiling {HARD_MAX_BRUTE_N}", EXIT_REFUSED)
    return cap


def _check_brute(args, n):
    cap = _brute_cap(args)
    if n > cap:
        raise CliError(
            f"brute force at n={n} exceeds --max-brute-n {cap}; raise the flag (at most "
            f"{HARD_MAX_BRUTE_N}) or use --method formula",
            EXIT_REFUSED,
        )


def _check_n(n):
    if n < 1:
        raise CliError("n must be >= 1", EXIT_INVALID)


def cmd_count(args, out):
    _check_n(args.n)
    (p,) = _patterns(args.pattern)
    methods = ("formula", "recurrence", "brute") if args.method == "all" else (args.method,)
    if "brute" in methods:
        _check_brute(args, args.n)
    values = {}
    unsupported = None
    for m in methods:
        try:
            if m == "formula":
                values[m] = formulas.count_for_pattern(args.n, p).count
            elif m == "recurrence":
                values[m] = formulas.recurrence(p, args.n)
            else:
                values[m] = count_avoiders(args.n, [p], workers=args.workers).count
        except UnsupportedPatternError as exc:
            unsupported = str(exc)
            print(f"{m}: unsupported ({exc})", file=out)
            continue
        print(f"{m}: {values[m]}", file=out)
    if unsupported is not None:
        raise CliError(f"unsupported pattern {p}: {unsupported}", EXIT_INVALID)
    if len(values) > 1:
        if len(set(values.values())) == 1:
            print("match", file=out)
        else:
            print("MISMATCH", file=out)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_list(args, out):
    _check_n(args.n)
    ps = _patterns(args.pattern)
    _check_brute(args, args.n)
    for c in list_avoiders(args.n, ps):
        print(_fmt_word(c), file=out)
    return EXIT_OK


def table_rows(patterns, n_max, brute_cap, workers=None):
    rows = []
    for p in patterns:
        for n in range(1, n_max + 1):
            try:
                f = formulas.count_for_pattern(n, p).count
            except UnsupportedPatternError:
                f = None
            b = count_avoiders(n, [p], workers=workers).count if n <= brute_cap else None
            match = f is not None and b is not None and f == b
            rows.append({"n": n, "pattern": str(p), "formula": f, "brute": b, "match": match})
    return rows


def render_table(rows, fmt):
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_FIELDS)
        for r in rows:
            w.writerow(["" if r[f] is None else str(r[f]).lower() if f == "match" else r[f]
                        for f in TABLE_FIELDS])
        return buf.getvalue()
    if fmt == "b-file":
        if len({r["pattern"] for r in rows}) > 1:
            raise CliError("b-file output holds one sequence; pass a single pattern", EXIT_INVALID)
        lines = []
        for r in rows:
            value = r["formula"] if r["formula"] is not None else r["brute"]
            lines.append(f"{r['n']} {value}")
        return "\n".join(lines) + "\n"
    raise CliError(f"unknown format {fmt!r}", EXIT_INVALID)


def _emit(text, path, out):
    if path is None or path == "-":
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO)


def cmd_table(args, out):
    _check_n(args.n_max)
    patterns = _patterns(args.patterns)
    cap = 0 if args.skip_brute else min(_brute_cap(args), args.n_max)
    rows = table_rows(patterns, args.n_max, cap, workers=args.workers)
    _emit(render_table(rows, args.format), args.output, out)
    bad = [r for r in rows if r["formula"] is not None and r["brute"] is not None and not r["match"]]
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_verify(args, out):
    _check_n(args.n_max)
    _check_brute(args, args.n_max)
    start = time.perf_counter()
    results = suites.run_all(args.n_max, workers=args.workers)
    for r in results:
        print(r.line(), file=out)
    ok = all(r.passed for r in results)
    elapsed = time.perf_counter() - start
    print(f"{'all suites passed' if ok else 'verification FAILED'} (n_max={args.n_max}, "
          f"{elapsed:.1f}s)", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bijection(args, out):
    try:
        if args.family == "prop1":
            if args.direction == "forward":
                w = bj.prop1_bits_to_perm(bj.as_bits(args.input))
                print(_fmt_word(w), file=out)
                avoids = not (contains_linear(w, bj.P213) or contains_linear(w, bj.P231))
                print(f"avoids 213 and 231: {'yes' if avoids else 'NO'}", file=out)
                return EXIT_OK if avoids else EXIT_MISMATCH
            print(_fmt_bits(bj.prop1_perm_to_bits(parse_word(args.input))), file=out)
            return EXIT_OK
        if args.family == "thm2":
            if args.direction == "forward":
                c = bj.thm2_word_to_perm(bj.as_bits(args.input))
                print(_fmt_word(c), file=out)
                avoids = not contains_circular(c, bj.P1342)
                print(f"avoids 1342: {'yes' if avoids else 'NO'}", file=out)
                return EXIT_OK if avoids else EXIT_MISMATCH
            print(_fmt_bits(bj.thm2_perm_to_word(canonicalize(parse_word(args.input)))), file=out)
            return EXIT_OK
        # thm1: Fibonacci words of even length 2n-4
        if args.direction == "forward":
            bits = bj.as_bits(args.input)
            if len(bits) % 2:
                raise InvalidInputError("Fibonacci word length must be even (2n-4)")
            c = bj.fib_word_to_1324(bits, len(bits) // 2 + 2)
            print(_fmt_word(c), file=out)
            avoids = not contains_circular(c, bj.P1324)
            print(f"avoids 1324: {'yes' if avoids else 'NO'}", file=out)
            return EXIT_OK if avoids else EXIT_MISMATCH
        word = bj.avoider_1324_to_fib_word(canonicalize(parse_word(args.input)))
        print(_fmt_bits(word) or "(empty)", file=out)
        return EXIT_OK
    except InvalidInputError as exc:
        raise CliError(f"invalid input: {exc}", EXIT_INVALID)


def cmd_classes(args, out):
    if not 1 <= args.k <= 6:
        raise CliError("k must be in 1..6", EXIT_INVALID)
    classes = pattern_classes(args.k)
    print(f"{len(classes)} rotation orbits of {args.k}-letter patterns", file=out)
    for cls in classes:
        members = " ".join(str(q) for q in sorted(cls.rotation_orbit))
        print(f"orbit {cls.representative}: {members}  (reversal -> {cls.reversal_partner_representative})",
              file=out)
    pairs = []
    for cls in classes:
        pair = tuple(sorted({cls.representative, cls.reversal_partner_representative}))
        if pair not in pairs:
            pairs.append(pair)
    print(f"{len(pairs)} classes up to rotation and reversal", file=out)
    for pair in pairs:
        label = ""
        if args.k == 4:
            members = set().union(*(c.rotation_orbit for c in classes if c.representative in pair))
            label = next(f"  [{f}]" for f in suites.FAMILY_NAMES if parse_pattern(f) in members)
        print("class " + " ~ ".join(map(str, pair)) + label, file=out)
    return EXIT_OK


def cmd_occurrences(args, out):
    try:
        c = canonicalize(parse_word(args.word))
    except InvalidInputError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    (p,) = _patterns(args.pattern)
    print(count_occurrences_circular(c, p), file=out)
    if args.witnesses:
        for wit in occurrences_circular(c, p):
            letters = [c[i - 1] for i in wit.positions]
            print(f"start {wit.start}: positions {_fmt_word(wit.positions)} letters {_fmt_word(letters)}",
                  file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="circperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def brute_flags(sp):
        sp.add_argument("--max-brute-n", type=int, default=DEFAULT_MAX_BRUTE_N,
                        help=f"largest n for brute force (default {DEFAULT_MAX_BRUTE_N}, "
                             f"ceiling {HARD_MAX_BRUTE_N})")
        sp.add_argument("--workers", type=int, default=None, help="processes for brute-force counting")

    sp = sub.add_parser("count", help="count avoiders of one pattern")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("formula", "recurrence", "brute", "all"), default="formula")
    brute_flags(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("list", help="list avoiders as canonical words")
    sp.add_argument("--pattern", "--patterns", dest="pattern", required=True)
    sp.add_argument("--n", type=int, required=True)
    brute_flags(sp)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("table", help="tabulate formula and brute-force counts")
    sp.add_argument("--patterns", "--pattern", dest="patterns", required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=("csv", "json", "b-file"), default="csv")
    sp.add_argument("--output", default=None, help="output path (default stdout)")
    sp.add_argument("--skip-brute", action="store_true", help="formula column only")
    brute_flags(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="run every cross-check against the oracle")
    sp.add_argument("--n-max", type=int, default=8)
    brute_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bijection", help="apply a bijection or its inverse")
    sp.add_argument("family", choices=("prop1", "thm1", "thm2"))
    sp.add_argument("direction", choices=("forward", "inverse"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("classes", help="rotation orbits and reversal pairs of k-letter patterns")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("occurrences", help="count circular occurrences of a pattern in a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--witnesses", action="store_true")
    sp.set_defaults(func=cmd_occurrences)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"circperm: {exc}", file=err)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
