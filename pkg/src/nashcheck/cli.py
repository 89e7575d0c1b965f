"""Command-line front end.

Exit status: 0 on success, 1 when an input fails to load or validate,
2 when a structural theorem or the witness search contradicts the
pairwise engine.  With several inputs the worst status wins.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .engine import nn_matrix
from .errors import ValidationError
from .gauss import DEFAULT_MAX_N, full_rowsum_criterion, ladder, row_sums
from .generate import generate_random
from .model import canonical_vector, format_matrix_file, parse_matrix_file
from .structure import classify_matrix, theorem_battery
from .witness import BACKEND, DEFAULT_BOUND, PairStatus, cross_validate

MODES = ("validate", "nn", "classify", "oracle", "all")

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2


@dataclass
class RunConfig:
    inputs: list
    mode: str = "all"
    bound: int = DEFAULT_BOUND
    output_format: str = "text"
    gen: dict | None = None
    max_n: int = DEFAULT_MAX_N
    pruning: str = "propagate"


def parse_gen(text: str) -> dict:
    """``"n=5,d=2,seed=7"`` -> ``{"n": 5, "d": Fraction(2), "seed": 7}``."""
    out = {"n": None, "d": Fraction(1), "seed": 0}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in out:
            raise argparse.ArgumentTypeError(f"bad --gen item {part!r}; expected n=<n>,d=<d>,seed=<s>")
        try:
            out[key] = Fraction(value.strip()) if key == "d" else int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad value in --gen item {part!r}") from None
    if out["n"] is None or out["n"] < 1:
        raise argparse.ArgumentTypeError("--gen needs n >= 1")
    if out["d"] <= 0:
        raise argparse.ArgumentTypeError("--gen needs d > 0")
    return out


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser():
    p = argparse.ArgumentParser(
        prog="nashcheck",
        description="Decide the numerical Nash conditions for intersection matrices of resolution graphs.",
    )
    p.add_argument("inputs", nargs="*", help="matrix files ('-' for standard input)")
    p.add_argument("--mode", choices=MODES, default="all")
    p.add_argument("--bound", type=_positive_int, default=DEFAULT_BOUND, help="witness search bound (default %(default)s)")
    p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    p.add_argument("--gen", type=parse_gen, metavar="n=<n>,d=<d>,seed=<s>", help="analyse a random valid matrix instead of files")
    p.add_argument("--max-n", type=_positive_int, default=DEFAULT_MAX_N, help="largest n for subset enumeration (default %(default)s)")
    p.add_argument("--pruning", choices=("propagate", "rows"), default="propagate", help=argparse.SUPPRESS)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernel)")
    return p


def _fmt(x):
    return str(x)


def _load(source):
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def analyse(name, M, genus, config: RunConfig, generated=False):
    """Run the selected mode on a validated matrix; returns ``(status, report)``."""
    mode = config.mode
    report = {"path": name, "n": M.n, "valid": True}
    if generated:
        report["matrix"] = [[_fmt(x) for x in row] for row in M]
    if any(genus):
        report["genus"] = list(genus)
        report["notes"] = ["genus > 0: verdicts use the matrix criterion; --mode oracle certifies them directly"]
    status = EXIT_OK
    problems = []
    if mode == "validate":
        return status, report, problems

    N = nn_matrix(M)
    is_nash = N.all_true()
    report["nn"] = N.to_json()
    report["is_nash"] = is_nash

    if mode in ("classify", "all"):
        cls = classify_matrix(M)
        report["row_sums"] = [_fmt(s) for s in row_sums(M)]
        report["classification"] = {
            "leaves": sorted(k + 1 for k in cls.leaves),
            "is_tree": cls.is_tree,
            "is_cycle": cls.is_cycle,
            "is_generalized_cycle": cls.is_generalized_cycle,
            "star_root": cls.star_shape.root + 1 if cls.star_shape else None,
            "star_branches": [[v + 1 for v in b] for b in cls.star_shape.branches] if cls.star_shape else None,
            "polygon_root": cls.polygon_root + 1 if cls.polygon_root is not None else None,
            "generalized_cycles": [sorted(v + 1 for v in b) for b in cls.generalized_cycle_subgraphs],
            "multi_edges": [[u + 1, v + 1] for u, v in cls.multi_edges],
        }
        theorems = theorem_battery(M)
        report["theorems"] = [t.to_json() for t in theorems]
        for t in theorems:
            if not t.agrees_with(is_nash):
                status = EXIT_INCONSISTENT
                problems.append(f"theorem {t.theorem_id} says {t.verdict.value} but the pairwise engine says is_nash={is_nash}")
        if M.n <= config.max_n:
            report["ladder"] = ladder(M, config.max_n)
        else:
            report["ladder"] = None
            report.setdefault("notes", []).append(f"subset ladder skipped: n={M.n} exceeds --max-n {config.max_n}")
        report["full_rowsum_criterion"] = full_rowsum_criterion(M)

    if mode in ("oracle", "all"):
        C = canonical_vector(M, genus)
        cv = cross_validate(M, C, config.bound, config.pruning)
        report["oracle"] = cv.to_json()
        if cv.contradictions:
            status = EXIT_INCONSISTENT
            problems.append(f"{cv.contradictions} pair(s) have a witness although the engine says false")
    return status, report, problems


def render_text(report, mode):
    lines = []
    if not report.get("valid"):
        return ""
    if mode == "validate":
        if "matrix" in report:
            return None  # caller prints the file itself
        return f"valid: n={report['n']}\n"
    from .engine import NashVerdictMatrix

    N = NashVerdictMatrix.from_json(report["nn"])
    if mode == "nn":
        return N.to_text()
    if "matrix" in report:
        lines.append("matrix:")
        lines.extend("  " + " ".join(row) for row in report["matrix"])
    if mode == "all" or mode == "classify":
        lines.append("N:")
        lines.extend("  " + row for row in N.to_text().splitlines())
        lines.append(f"(NN): {'true' if report['is_nash'] else 'false'}")
        c = report["classification"]
        shape = []
        if c["is_tree"]:
            shape.append("tree")
        if c["is_cycle"]:
            shape.append("cycle")
        if c["is_generalized_cycle"]:
            shape.append("generalized cycle")
        lines.append(f"graph: {', '.join(shape) or 'general'}")
        lines.append(f"row sums: {' '.join(report['row_sums'])}")
        lines.append(f"leaves: {' '.join('E%d' % k for k in c['leaves']) or '-'}")
        if c["star_root"]:
            branches = " | ".join(" ".join(f"E{v}" for v in b) for b in c["star_branches"])
            lines.append(f"star root: E{c['star_root']}; branches: {branches}")
        if c["polygon_root"]:
            lines.append(f"polygon root: E{c['polygon_root']}")
        for block in c["generalized_cycles"]:
            lines.append("generalized cycle: " + " ".join(f"E{v}" for v in block))
        if c["multi_edges"]:
            lines.append("multiple intersections (treated as simple edges): " + ", ".join(f"E{u}-E{v}" for u, v in c["multi_edges"]))
        if report.get("ladder") is not None:
            lines.append(f"ladder levels: {' '.join(map(str, report['ladder'])) or '-'}")
        lines.append("theorems:")
        for t in report["theorems"]:
            lines.append(f"  {t['id']}: {t['verdict']}{'' if t['applicable'] else ' (not applicable)'}")
            lines.extend("    " + e for e in t["evidence"])
    if mode in ("oracle", "all"):
        o = report["oracle"]
        lines.append(
            f"oracle (bound {o['bound']}): {o['confirmed']} confirmed, {o['consistent_false']} consistent false, "
            f"{o['mismatches']} mismatches, {o['contradictions']} contradictions"
        )
        for pair in o["pairs"]:
            w = " ".join(map(str, pair["witness"])) if pair["witness"] else "-"
            lines.append(f"  ({pair['pair'][0]},{pair['pair'][1]}) {pair['status']}: {w}")
    for note in report.get("notes", []):
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def run(config: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    sources = []
    if config.gen is not None:
        g = config.gen
        name = f"generated n={g['n']} d={g['d']} seed={g['seed']}"
        sources.append((name, generate_random(g["n"], g["d"], g["seed"]), True))
    for path in config.inputs:
        sources.append((path, None, False))
    if not sources:
        print("error: no input files (give paths, '-' or --gen)", file=stderr)
        return EXIT_INVALID

    worst = EXIT_OK
    reports = []
    texts = []
    for name, M, generated in sources:
        try:
            if M is None:
                M, genus = parse_matrix_file(_load(name))
            else:
                genus = (0,) * M.n
        except OSError as exc:
            print(f"error: {name}: {exc.strerror or exc}", file=stderr)
            reports.append({"path": name, "valid": False, "errors": [str(exc)]})
            worst = max(worst, EXIT_INVALID)
            continue
        except ValidationError as exc:
            print(f"error: {name}: {exc}", file=stderr)
            reports.append({"path": name, "valid": False, "errors": [str(exc)], "error_type": type(exc).__name__})
            worst = max(worst, EXIT_INVALID)
            continue
        status, report, problems = analyse(name, M, genus, config, generated)
        for msg in problems:
            print(f"consistency error: {name}: {msg}", file=stderr)
        oracle = report.get("oracle")
        if oracle and oracle["mismatches"]:
            print(
                f"warning: {name}: {oracle['mismatches']} true verdict(s) without a witness up to bound {oracle['bound']}",
                file=stderr,
            )
        worst = max(worst, status)
        reports.append(report)
        if config.output_format == "text":
            text = render_text(report, config.mode)
            if text is None:
                text = format_matrix_file(M, genus, comment=f"{name}\nvalid")
            texts.append((name, text))

    if config.output_format == "json":
        payload = reports[0] if len(reports) == 1 else reports
        json.dump(payload, stdout, indent=2)
        stdout.write("\n")
    else:
        many = len(sources) > 1
        for name, text in texts:
            if many:
                stdout.write(f"== {name} ==\n")
            stdout.write(text)
    return worst


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        inputs=args.inputs,
        mode=args.mode,
        bound=args.bound,
        output_format=args.output_format,
        gen=args.gen,
        max_n=args.max_n,
        pruning=args.pruning,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
