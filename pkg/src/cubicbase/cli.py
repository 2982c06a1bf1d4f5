"""Command-line front end: construct, analyze, classify, sweep and verify."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path

from .analysis import classify
from .analysis.base import BASE_DEGREE_CAP, base_size
from .analysis.classify import check_preconditions
from .analysis.distinguishing import NOT_APPLICABLE, distinguishing_cost_witness, distinguishing_number
from .analysis.star import STAR_CAP
from .constructions import circular_ladder, moebius_ladder, px_graph, split_px, table1_graph, table1_names
from .corpus import corpus
from .errors import CapExceeded, HypothesisError
from .graphs import AUT_VERTEX_CAP, Graph, automorphism_group
from .graphs.formats import decode, encode, read_lines
from .graphs.symmetry import max_s_arc_transitivity

COMMANDS = ("construct", "analyze", "classify", "sweep", "verify")
FORMATS = ("json", "csv", "text")
CSV_FIELDS = ["graph", "n", "aut_order", "verdict", "base_size", "witness", "skipped", "error"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    target: str | None = None
    caps: dict = field(default_factory=lambda: {"base": BASE_DEGREE_CAP, "aut": AUT_VERTEX_CAP, "star": STAR_CAP})
    output: str | None = None
    format: str = "json"
    jobs: int = 1
    timings: bool = True
    encoding: str = "auto"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        for k, v in self.caps.items():
            if v < 1:
                raise UsageError(f"cap {k} must be positive")


def parse_caps(text: str) -> dict:
    caps = {"base": BASE_DEGREE_CAP, "aut": AUT_VERTEX_CAP, "star": STAR_CAP}
    if not text:
        return caps
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in caps:
            raise UsageError(f"bad cap {item!r}; expected base=INT, aut=INT or star=INT")
        try:
            caps[key] = int(value)
        except ValueError:
            raise UsageError(f"cap {key} needs an integer, got {value!r}") from None
    return caps


# ---- graph specs ------------------------------------------------------------------

_SPEC = re.compile(r"^(px|spx|ladder|moebius|table1):(.+)$")


def _ints(text: str, count: int, spec: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != count:
        raise UsageError(f"spec {spec!r} needs {count} integer parameter(s)")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"spec {spec!r} has a non-integer parameter") from None


def graph_from_spec(spec: str) -> Graph:
    """px:r,s  spx:r,s  ladder:n  moebius:n  table1:Name"""
    m = _SPEC.match(spec.strip())
    if not m:
        raise UsageError(f"malformed spec {spec!r}; use px:r,s, spx:r,s, ladder:n, moebius:n or table1:Name")
    kind, arg = m.groups()
    try:
        if kind == "px":
            return px_graph(*_ints(arg, 2, spec))
        if kind == "spx":
            return split_px(*_ints(arg, 2, spec))
        if kind == "ladder":
            return circular_ladder(*_ints(arg, 1, spec))
        if kind == "moebius":
            return moebius_ladder(*_ints(arg, 1, spec))
        if arg not in table1_names():
            raise UsageError(f"unknown exceptional graph {arg!r}; choose from {', '.join(table1_names())}")
        return table1_graph(arg)
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"spec {spec!r}: {exc}") from None


def _load_one(target: str) -> tuple[str, Graph]:
    if _SPEC.match(target):
        return target, graph_from_spec(target)
    path = Path(target)
    if not path.exists():
        raise UsageError(f"{target!r} is neither a graph spec nor a readable file")
    for lineno, text in read_lines(str(path)):
        return f"{path.name}:{lineno}", decode(text)
    raise UsageError(f"{target} contains no graph")


# ---- per-graph work ---------------------------------------------------------------


def _classify_record(task) -> dict:
    name, text, caps, timings = task
    try:
        g = decode(text) if isinstance(text, str) else text
    except ValueError as exc:
        return {"graph": name, "error": f"malformed graph: {exc}"}
    reason = check_preconditions(g)
    if reason:
        return {"graph": name, "n": g.n, "skipped": reason}
    try:
        rep = classify(g, name=name, aut_cap=caps["aut"], base_cap=caps["base"])
    except HypothesisError as exc:
        return {"graph": name, "n": g.n, "skipped": str(exc)}
    except CapExceeded as exc:
        return {"graph": name, "n": g.n, "skipped": f"cap exceeded: {exc}"}
    out = rep.to_json()
    if not rep.consistent():
        out["error"] = "verdict inconsistent with computed base size"
    if not timings:
        out.pop("timings_ms")
    return out


def _map(tasks, jobs: int):
    if jobs == 1:
        return [_classify_record(t) for t in tasks]
    with Pool(jobs) as pool:
        return pool.map(_classify_record, tasks, chunksize=1)


def _format_records(records, fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for r in records:
            row = dict(r)
            if row.get("witness") is not None:
                row["witness"] = " ".join(map(str, row["witness"]))
            w.writerow(row)
        return buf.getvalue()
    lines = []
    for r in records:
        if "error" in r:
            lines.append(f"{r['graph']}: error: {r['error']}")
        elif "skipped" in r:
            lines.append(f"{r['graph']}: skipped ({r['skipped']})")
        else:
            lines.append(f"{r['graph']}: {r['verdict']}  n={r['n']} |Aut|={r['aut_order']} base={r['base_size']}")
    return "".join(line + "\n" for line in lines)


def _write(cfg: RunConfig, text: str):
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


# ---- commands ---------------------------------------------------------------------


def cmd_construct(cfg: RunConfig) -> int:
    g = graph_from_spec(cfg.target)
    _write(cfg, encode(g, cfg.encoding) + "\n")
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    name, g = _load_one(cfg.target)
    reason = check_preconditions(g)
    rec = {"graph": name, "n": g.n}
    if reason:
        rec["skipped"] = reason
    else:
        G = automorphism_group(g, cap=cfg.caps["aut"])
        rec["aut_order"] = str(G.order())
        rec["stabiliser_order"] = str(G.point_stabiliser(0).order()) if G.is_transitive() else None
        rec["vertex_transitive"] = G.is_transitive()
        rec["s_arc_transitivity"] = max_s_arc_transitivity(g, G)
        try:
            b = base_size(G, degree_cap=cfg.caps["base"])
            rec["base_size"], rec["base"] = b.size, list(b.witness)
        except CapExceeded as exc:
            rec["base_size"], rec["base"] = None, f"cap exceeded: {exc}"
        try:
            rec["distinguishing_number"] = distinguishing_number(G)
            cost = distinguishing_cost_witness(G)
            rec["distinguishing_cost"] = None if cost is NOT_APPLICABLE else cost.cost
        except CapExceeded as exc:
            rec["distinguishing_number"] = f"cap exceeded: {exc}"
    if cfg.format == "json":
        _write(cfg, json.dumps(rec) + "\n")
    else:
        _write(cfg, "".join(f"{k}: {v}\n" for k, v in rec.items()))
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    path = Path(cfg.target)
    if not path.is_file():
        raise UsageError(f"cannot read {cfg.target!r}")
    tasks = []
    bad_lines = []
    try:
        lines = list(read_lines(str(path)))
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {cfg.target!r}: {exc}") from None
    for lineno, text in lines:
        name = f"{path.name}:{lineno}"
        try:
            decode(text)
        except ValueError as exc:
            bad_lines.append(lineno)
            print(f"{path}:{lineno}: malformed graph encoding: {exc}", file=sys.stderr)
        tasks.append((name, text, cfg.caps, cfg.timings))
    records = _map(tasks, cfg.jobs)
    _write(cfg, _format_records(records, cfg.format))
    inconsistent = [r for r in records if "error" in r and not r["error"].startswith("malformed")]
    if inconsistent:
        return EXIT_FAIL
    return EXIT_USAGE if bad_lines else EXIT_OK


def cmd_sweep(cfg: RunConfig) -> int:
    """Classify the built-in corpus."""
    aut_cap = max(cfg.caps["aut"], 5000)
    caps = dict(cfg.caps, aut=aut_cap)
    tasks = [(e.name, e.graph, caps, cfg.timings) for e in corpus()]
    records = _map(tasks, cfg.jobs)
    _write(cfg, _format_records(records, cfg.format))
    return EXIT_FAIL if any("error" in r for r in records) else EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    from . import verify

    if cfg.target != "all" and cfg.target not in verify.SUITES:
        raise UsageError(f"unknown suite {cfg.target!r}; choose from {', '.join(list(verify.SUITES) + ['all'])}")
    lines = []
    emit = lines.append if cfg.output else print
    ok = verify.run(cfg.target, emit=emit, star_cap=cfg.caps["star"])
    if cfg.output:
        Path(cfg.output).write_text("".join(line + "\n" for line in lines))
    return EXIT_OK if ok else EXIT_FAIL


HANDLERS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--caps", default="", help="search limits, e.g. base=200,aut=2000,star=50000")
    common.add_argument("--format", default="json", choices=FORMATS)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--output", "-o", default=None, help="write here instead of stdout")
    common.add_argument("--no-timings", action="store_true", help="omit timings_ms from reports")

    p = argparse.ArgumentParser(prog="cubicbase", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", parents=[common], help="write a built-in graph as graph6/sparse6")
    c.add_argument("spec", help="px:r,s | spx:r,s | ladder:n | moebius:n | table1:Name")
    c.add_argument("--encoding", default="auto", choices=["auto", "graph6", "sparse6"])
    a = sub.add_parser("analyze", parents=[common], help="invariants of one graph (spec or file)")
    a.add_argument("target")
    k = sub.add_parser("classify", parents=[common], help="classify every graph in a graph6/sparse6 file")
    k.add_argument("path")
    sub.add_parser("sweep", parents=[common], help="classify the built-in corpus")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        target = getattr(args, "spec", None) or getattr(args, "target", None) or getattr(args, "path", None) \
            or getattr(args, "suite", None)
        cfg = RunConfig(
            command=args.command,
            target=target,
            caps=parse_caps(args.caps),
            output=args.output,
            format=args.format,
            jobs=args.jobs,
            timings=not args.no_timings,
            encoding=getattr(args, "encoding", "auto"),
        )
        return HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"cubicbase: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
