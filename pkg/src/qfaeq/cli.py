"""Command-line front end.

Subcommands and exit codes form a stable scripting contract: 0 means
equivalent or valid, 1 means inequivalent, 2 means a usage or input error.

    validate FILE                 check a document, violations on stderr
    prob FILE WORD                exact acceptance probability of WORD
    equiv FILE1 FILE2             equivalence check with witness report
        [--method algebraic|bruteforce] [--json]
    gen --states N --alphabet CSV --k K --seed S -o FILE
    bound FILE1 FILE2             print the guaranteed search depth
    bench --grid SPEC             decide vs brute force over a grid, CSV out

The bench grid SPEC is a semicolon-separated list of assignments, where n, m,
and k take comma-separated value lists and seeds/maxlen take one integer:

    n=1,2;m=1,2;k=1,2;seeds=3;maxlen=8
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import string
import sys
import time
from dataclasses import dataclass

from .equivalence import (
    _brute_force_counting,
    basis_search,
    join,
    theorem4_bound,
    verdict_from_search,
)
from .io import QfaFormatError, format_rational, load_qfa, save_qfa
from .qfa import Alphabet, KLetterQFA, accept_prob, random_qfa

__all__ = ["EquivReport", "cli_main", "main"]


@dataclass
class EquivReport:
    """One equivalence check, ready to print as text or JSON.

    p1 and p2 are rational strings so the report stays exact; wall_ms is the
    only field that varies between identical runs.
    """

    verdict: str
    method: str
    bound_used: int
    witness: str | None
    p1: str | None
    p2: str | None
    basis_sizes: dict | None
    nodes_processed: int
    wall_ms: float

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "bound_used": self.bound_used,
            "witness": self.witness,
            "p1": self.p1,
            "p2": self.p2,
            "stats": {
                "basis_sizes": self.basis_sizes,
                "nodes_processed": self.nodes_processed,
                "wall_ms": self.wall_ms,
            },
        }

    def render_text(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"method: {self.method}",
            f"bound_used: {self.bound_used}",
        ]
        if self.witness is not None:
            lines.append(f"witness: {self.witness!r}")
            lines.append(f"p1: {self.p1}")
            lines.append(f"p2: {self.p2}")
            if self.method == "algebraic":
                lines.append(
                    "note: witness is the least flagged word in word order, "
                    "not necessarily the shortest counterexample"
                )
        if self.basis_sizes is not None:
            sizes = ", ".join(
                f"{cls!r}={size}" for cls, size in sorted(self.basis_sizes.items())
            )
            lines.append(f"basis_sizes: {sizes}")
        lines.append(f"nodes_processed: {self.nodes_processed}")
        lines.append(f"wall_ms: {self.wall_ms}")
        return "\n".join(lines)


def _load_two(path1, path2) -> tuple[KLetterQFA, KLetterQFA]:
    a1 = load_qfa(path1)
    a2 = load_qfa(path2)
    if a1.alphabet != a2.alphabet:
        raise QfaFormatError(
            f"alphabet mismatch: {''.join(a1.alphabet)!r} vs "
            f"{''.join(a2.alphabet)!r}"
        )
    return a1, a2


def _cmd_validate(ns) -> int:
    load_qfa(ns.file)
    print(f"ok: {ns.file}")
    return 0


def _cmd_prob(ns) -> int:
    a = load_qfa(ns.file)
    try:
        p = accept_prob(a, ns.word)
    except ValueError as exc:
        raise QfaFormatError(str(exc)) from None
    print(f"{format_rational(p)} ~ {float(p):.12g}")
    return 0


def _cmd_equiv(ns) -> int:
    a1, a2 = _load_two(ns.file1, ns.file2)
    bound = theorem4_bound(a1.n, a2.n, len(a1.alphabet), max(a1.k, a2.k))
    start = time.perf_counter()
    if ns.method == "algebraic":
        joint = join(a1, a2)
        sbm = basis_search(joint)
        verdict = verdict_from_search(joint, sbm, a1, a2)
        basis_sizes = sbm.basis_sizes()
        nodes = sbm.processed
    else:
        # Without a cap the enumeration runs to the full bound, which is
        # astronomically slow for multi-symbol alphabets; --max-len keeps
        # the oracle usable there.
        verdict, nodes = _brute_force_counting(a1, a2, ns.max_len)
        basis_sizes = None
    wall_ms = round((time.perf_counter() - start) * 1000, 3)
    report = EquivReport(
        verdict="equivalent" if verdict.equivalent else "not_equivalent",
        method=ns.method,
        bound_used=bound,
        witness=verdict.witness,
        p1=None if verdict.p1 is None else format_rational(verdict.p1),
        p2=None if verdict.p2 is None else format_rational(verdict.p2),
        basis_sizes=basis_sizes,
        nodes_processed=nodes,
        wall_ms=wall_ms,
    )
    if ns.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.render_text())
    return 0 if verdict.equivalent else 1


def _cmd_gen(ns) -> int:
    try:
        alphabet = Alphabet(ns.alphabet.split(","))
    except ValueError as exc:
        raise QfaFormatError(f"alphabet: {exc}") from None
    if ns.states < 1 or ns.k < 1:
        raise QfaFormatError("states and k must be at least 1")
    a = random_qfa(ns.states, alphabet, ns.k, ns.seed)
    save_qfa(a, ns.output)
    print(f"wrote {ns.output}")
    return 0


def _cmd_bound(ns) -> int:
    a1, a2 = _load_two(ns.file1, ns.file2)
    print(theorem4_bound(a1.n, a2.n, len(a1.alphabet), max(a1.k, a2.k)))
    return 0


def _parse_grid(spec: str) -> dict:
    grid = {"n": [2], "m": [2], "k": [1], "seeds": 1, "maxlen": 8}
    listy = {"n", "m", "k"}
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise QfaFormatError(f"grid: cannot parse {part!r}")
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in grid:
            raise QfaFormatError(f"grid: unknown key {key!r}")
        try:
            if key in listy:
                grid[key] = [int(x) for x in value.split(",")]
            else:
                grid[key] = int(value)
        except ValueError:
            raise QfaFormatError(f"grid: bad value for {key!r}: {value!r}") from None
    for key in listy:
        if any(v < 1 for v in grid[key]):
            raise QfaFormatError(f"grid: {key} values must be positive")
    if max(grid["m"]) > len(string.ascii_lowercase):
        raise QfaFormatError("grid: m larger than 26 is not supported")
    if grid["seeds"] < 1 or grid["maxlen"] < 0:
        raise QfaFormatError("grid: seeds must be >= 1 and maxlen >= 0")
    return grid


def _cmd_bench(ns) -> int:
    grid = _parse_grid(ns.grid)
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "m", "k", "method", "verdict", "millis"])
    for n, m, k in itertools.product(grid["n"], grid["m"], grid["k"]):
        alphabet = Alphabet(string.ascii_lowercase[:m])
        for seed in range(grid["seeds"]):
            a1 = random_qfa(n, alphabet, k, 2 * seed)
            a2 = random_qfa(n, alphabet, k, 2 * seed + 1)
            start = time.perf_counter()
            joint = join(a1, a2)
            sbm = basis_search(joint)
            verdict = verdict_from_search(joint, sbm, a1, a2)
            millis = round((time.perf_counter() - start) * 1000, 3)
            writer.writerow(
                [n, m, k, "algebraic",
                 "equivalent" if verdict.equivalent else "not_equivalent",
                 millis]
            )
            start = time.perf_counter()
            verdict, _ = _brute_force_counting(a1, a2, grid["maxlen"])
            millis = round((time.perf_counter() - start) * 1000, 3)
            writer.writerow(
                [n, m, k, "bruteforce",
                 "equivalent" if verdict.equivalent else "not_equivalent",
                 millis]
            )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfaeq",
        description="Exact equivalence checking for k-letter quantum "
        "finite automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("prob", help="acceptance probability of a word")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("equiv", help="decide equivalence of two automata")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument(
        "--method",
        choices=("algebraic", "bruteforce"),
        default="algebraic",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--max-len",
        type=int,
        default=None,
        help="cap the bruteforce search depth (default: the full bound)",
    )
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("gen", help="write a seeded random automaton")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet", required=True, help="comma-separated symbols")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bound", help="print the guaranteed search depth")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("bench", help="time decide vs brute force over a grid")
    p.add_argument("--grid", required=True)
    p.set_defaults(func=_cmd_bench)

    return parser


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return ns.func(ns)
    except (OSError, QfaFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(cli_main())
