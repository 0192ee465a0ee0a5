"""Command-line front end: ``analyze``, ``mclass`` and ``verify``.

Exit codes: 0 pass, 1 predicate false or failed check, 2 usage, parse or
hypothesis error, 3 a corpus group failed to build.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import builtin_corpus
from .errors import GroupLabError
from .groupfile import parse_group_file
from .lattice import SubgroupRef, all_subgroups
from .msupp import MClassQuery, in_m_class
from .structure import center, derived_subgroup, frattini, o_p_prime

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUILD = 0, 1, 2, 3


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupLabError(f"cannot read {path}: {exc.strerror}") from None
    name, G = parse_group_file(text)
    return name, G


def _gens(H: SubgroupRef) -> str:
    L = all_subgroups(H.parent)
    return L.describe(L.pos(H))


def _primes(n: int) -> list[int]:
    out, p = [], 2
    while n > 1:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    return out


def cmd_analyze(args) -> int:
    name, G = _load(args.file)
    L = all_subgroups(G)
    print(f"group: {name}")
    print(f"order: {G.order}")
    print(f"degree: {G.degree}")
    print(f"subgroups: {len(L)}")
    print(f"center: {center(G).order}")
    print(f"derived: {derived_subgroup(G).order}")
    print(f"frattini: {frattini(L).order}")
    for p in _primes(G.order):
        pp = G.p_part(p)
        normal = any(L.normal_flags[i] for i in L.of_order(pp))
        print(f"p={p}: |G|_p={pp} |O_p'|={o_p_prime(L, p).order} normal_sylow={'yes' if normal else 'no'}")
    return EXIT_OK


def cmd_mclass(args) -> int:
    name, G = _load(args.file)
    q = MClassQuery(args.prime, args.exp)
    report = in_m_class(G, q)
    verdict = "holds" if report.holds else "fails"
    print(f"{name} in M({q.pk}) [{q}]: {verdict}")
    print(f"subgroups of order {q.pk}: {len(report.witnesses)}")
    if report.first_violation is not None:
        print(f"first violation: {_gens(report.first_violation)} has no M-supplement")
    if args.witnesses:
        for H, K in report.witnesses:
            print(f"  H={_gens(H)} K={'none' if K is None else _gens(K)}")
    return EXIT_OK if report.holds else EXIT_FALSE


def cmd_verify(args) -> int:
    from .suite import SuiteConfig, run_suite

    if args.corpus:
        root = Path(args.corpus)
        if not root.is_dir():
            raise GroupLabError(f"{root} is not a directory")
        sources = sorted(str(p) for p in root.glob("*.grp"))
    else:
        sources = builtin_corpus(args.max_order)
    config = SuiteConfig(max_order=args.max_order)
    report = run_suite(sources, config, jobs=args.jobs)
    csv_text = report.to_csv()
    if args.report:
        Path(args.report).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    t = report.totals
    print(
        f"{t['groups']} groups, {t['rows']} rows, {t['passed']} passed, "
        f"{t['failed']} failed, {t['build_errors']} build errors",
        file=sys.stderr,
    )
    for r in report.failed:
        print(f"FAIL {r.group} {r.theorem} p={r.p} k={r.k}: {r.detail}", file=sys.stderr)
    return report.exit_code()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouplab",
        description="Exhaustive checks of M-supplementation properties on small permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print structural data of a group file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mclass", help="decide whether a group lies in M(p^k)")
    p.add_argument("file")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--exp", type=int, required=True)
    p.add_argument("--witnesses", action="store_true", help="list a supplement for every subgroup")
    p.set_defaults(func=cmd_mclass)

    p = sub.add_parser("verify", help="run the property suite over a corpus")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--builtin", action="store_true", help="use the built-in corpus (default)")
    src.add_argument("--corpus", metavar="DIR", help="directory of .grp files")
    p.add_argument("--max-order", type=int, default=100)
    p.add_argument("--report", metavar="FILE", help="write the CSV here instead of stdout")
    p.add_argument("--json", metavar="FILE", help="also write a JSON copy of the report")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
