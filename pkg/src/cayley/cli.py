"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or malformed input.

Codes given to ``decode --code`` are comma-separated values in ``[0, n)``.
With ``--prufer`` the same option takes a Pruefer sequence of 1-based labels.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, verify
from .errors import CayleyError
from .path_codec import Code, code_rank, decode, encode, unrank
from .prufer import PruferSequence, prufer_decode, prufer_encode
from .sampling import (
    SamplerConfig,
    TreeSampler,
    chi_square_uniformity,
    critical_value,
    degree_histogram,
    enumerate_trees,
)
from .textio import format_enumeration_line, format_tree, format_values, parse_graph, parse_tree, parse_values


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cayley", description="Labeled trees on n vertices: codecs, counts, sampling.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("count", help="print n^(n-2)")
    s.add_argument("n", type=int)

    s = sub.add_parser("count-graph", help="spanning trees of a graph file (matrix-tree theorem)")
    s.add_argument("file")

    s = sub.add_parser("verify", help="run the consistency checks up to n")
    s.add_argument("n", type=int)
    s.add_argument("--max-n", type=int, default=7, help="largest n checked exhaustively (default 7)")

    s = sub.add_parser("encode", help="tree file -> path code (or Pruefer sequence)")
    s.add_argument("file")
    s.add_argument("--prufer", action="store_true")

    s = sub.add_parser("decode", help="code -> tree file")
    s.add_argument("n", type=int)
    s.add_argument("--code", default="", help='comma-separated values, e.g. "2,2"')
    s.add_argument("--prufer", action="store_true", help="--code holds a Pruefer sequence")

    s = sub.add_parser("rank", help="tree file -> rank in [0, n^(n-2))")
    s.add_argument("file")

    s = sub.add_parser("unrank", help="rank -> tree file")
    s.add_argument("n", type=int)
    s.add_argument("r", type=int)

    s = sub.add_parser("enumerate", help="list trees as rank<TAB>code<TAB>edges")
    s.add_argument("n", type=int)
    s.add_argument("--from", dest="lo", type=int, default=0)
    s.add_argument("--to", dest="hi", type=int, default=None)

    s = sub.add_parser("sample", help="uniform random trees")
    s.add_argument("n", type=int)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--count", type=int, default=1)

    s = sub.add_parser("stats", help="degree histogram of a vertex (exhaustive unless --samples)")
    s.add_argument("n", type=int)
    s.add_argument("--vertex", type=int, required=True)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=_seed)

    s = sub.add_parser("chi2", help="chi-square uniformity test of the sampler")
    s.add_argument("n", type=int)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--critical", type=float, help="critical value (default: configured for the dof)")
    return p


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "count":
        out.write(f"{counting.closed_form(args.n)}\n")
    elif cmd == "count-graph":
        out.write(f"{counting.matrix_tree_count(parse_graph(_read(args.file)))}\n")
    elif cmd == "verify":
        checks = verify.run(args.n, args.max_n)
        for c in checks:
            out.write(c.line() + "\n")
        failed = sum(not c.ok for c in checks)
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
        return 1 if failed else 0
    elif cmd == "encode":
        t = parse_tree(_read(args.file))
        values = prufer_encode(t).values if args.prufer else encode(t).values
        out.write(format_values(values) + "\n")
    elif cmd == "decode":
        values = tuple(parse_values(args.code))
        t = prufer_decode(PruferSequence(args.n, values)) if args.prufer else decode(Code(args.n, values))
        out.write(format_tree(t))
    elif cmd == "rank":
        out.write(f"{code_rank(encode(parse_tree(_read(args.file))))}\n")
    elif cmd == "unrank":
        out.write(format_tree(unrank(args.n, args.r)))
    elif cmd == "enumerate":
        for r, code, t in enumerate_trees(args.n, args.lo, args.hi):
            out.write(format_enumeration_line(r, code.values, t) + "\n")
    elif cmd == "sample":
        sampler = TreeSampler(SamplerConfig(args.n, args.seed))
        for i, t in enumerate(sampler.samples(args.count)):
            out.write(f"# sample {i}\n")
            out.write(format_tree(t))
    elif cmd == "stats":
        if args.samples is not None:
            if args.seed is None:
                raise UsageError("stats: --samples requires --seed")
            trees = TreeSampler(SamplerConfig(args.n, args.seed)).samples(args.samples)
        else:
            trees = (t for _, _, t in enumerate_trees(args.n))
        for d, c in degree_histogram(trees, args.vertex).items():
            out.write(f"{d}\t{c}\n")
    elif cmd == "chi2":
        critical = args.critical
        if critical is None:
            critical = critical_value(counting.closed_form(args.n) - 1)
        stat, ok = chi_square_uniformity(args.n, args.samples, args.seed, critical)
        out.write(f"statistic\t{stat:.6f}\ncritical\t{critical}\nresult\t{'PASS' if ok else 'FAIL'}\n")
        return 0 if ok else 1
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out)
    except (UsageError, CayleyError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
