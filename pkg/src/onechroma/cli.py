"""Batch command-line front end.

Exit codes are shared by every command::

    0  every check passed
    1  a check failed or a drawing has violations
    2  undecided: the exact solver ran out of budget
    3  input error (unreadable file, parse error, wrong format, bad flags)
    4  generation failure (attempt budget exhausted)
"""

from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import json
import os
import shlex
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from .coloring import (
    DEFAULT_BUDGET,
    ColorClass,
    CriticalVerdict,
    EdgeColoring,
    exact_chromatic_index,
    is_critical,
    verify_coloring,
    vizing_color,
)
from .discharge import EULER_TOTAL, DisconnectedError, apply_rules, format_ledger, ledger_to_dict
from .drawing import OnePlanarDrawing, planarize, validate_drawing
from .formats import ParseError, detect_format, format_coloring, format_opg, parse_edgelist, parse_opg
from .generator import GenerationError, GenSpec, Mode, gen_theorem1_instance
from .graph import Graph
from .lemmas import (
    LemmaReport,
    Verdict,
    check_critical_size,
    check_lemma1,
    check_lemma2,
    check_theorem1,
    check_vizing_adjacency,
)

EXIT_PASS, EXIT_FAIL, EXIT_UNKNOWN, EXIT_INPUT, EXIT_GENERATION = 0, 1, 2, 3, 4
BUDGET_ENV = "ONECHROMA_BUDGET"

_STATUS_EXIT = {"PASS": EXIT_PASS, "FAIL": EXIT_FAIL, "UNKNOWN": EXIT_UNKNOWN, "ERROR": EXIT_INPUT,
                "GENERATION_FAILURE": EXIT_GENERATION}
# most severe first
_SEVERITY = ["ERROR", "GENERATION_FAILURE", "FAIL", "UNKNOWN", "PASS"]


class InputError(Exception):
    pass


def _worst(statuses) -> str:
    statuses = set(statuses)
    for s in _SEVERITY:
        if s in statuses:
            return s
    return "PASS"


# ---------------------------------------------------------------------------
# per-file jobs; plain dicts so they cross process boundaries


def _read(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{path}: not UTF-8 text") from None
    digest = hashlib.sha256(data).hexdigest()
    try:
        obj = parse_opg(text, path) if detect_format(text) == "opg" else parse_edgelist(text, path)
    except ParseError as exc:
        raise InputError(str(exc)) from None
    return obj, digest


def _need_drawing(obj, command: str) -> OnePlanarDrawing:
    if not isinstance(obj, OnePlanarDrawing):
        raise InputError(f"{command} needs a .opg drawing, got an edge list")
    return obj


def _graph_of(obj) -> Graph:
    return obj.graph if isinstance(obj, OnePlanarDrawing) else obj


def _require_valid(d: OnePlanarDrawing) -> None:
    report = validate_drawing(d)
    if not report.ok:
        kinds = ", ".join(report.kinds())
        raise InputError(f"invalid drawing ({kinds}); run validate for details")


def _job_validate(obj, opts):
    d = _need_drawing(obj, "validate")
    report = validate_drawing(d)
    payload = {"violations": [{"kind": v.kind, "detail": v.detail} for v in report.violations]}
    if report.ok:
        p = planarize(d)
        payload.update(n=d.graph.n, edges=d.graph.num_edges, crossings=len(d.crossings),
                       planarized_vertices=p.num_vertices, faces=p.num_faces)
        text = f"OK n={d.graph.n} e={d.graph.num_edges} crossings={len(d.crossings)} faces={p.num_faces}"
        return "PASS", payload, text
    lines = ["INVALID"] + [f"  {v.kind}: {v.detail}" for v in report.violations]
    return "FAIL", payload, "\n".join(lines)


def _coloring_dict(c: EdgeColoring):
    return [[u, v, k] for (u, v), k in sorted(c.colors.items())]


def _job_color(obj, opts):
    g = _graph_of(obj)
    delta = g.max_degree()
    if opts["method"] == "vizing":
        c = vizing_color(g) if g.num_edges else EdgeColoring({}, 0)
        status, klass, index = "PASS", None, None
        if c.k == delta:
            klass, index = ColorClass.ONE.value, delta
    else:
        res = exact_chromatic_index(g, opts["budget"])
        c = res.witness
        klass, index = res.klass.value, res.chromatic_index
        status = "PASS" if res.known else "UNKNOWN"
    check = verify_coloring(g, c)
    if not check.ok:
        status = "FAIL"
    payload = {
        "method": opts["method"], "max_degree": delta, "colors": c.k, "proper": check.ok,
        "class": klass, "chromatic_index": index, "coloring": _coloring_dict(c),
    }
    lines = [format_coloring(c).rstrip("\n"), f"max_degree {delta}"]
    if opts["method"] == "exact":
        lines.append(f"class {klass}")
        lines.append(f"chromatic_index {index if index is not None else 'unknown'}")
    else:
        lines.append(f"bounds {delta} <= chromatic_index <= {c.k}")
    if not check.ok:
        lines.append(f"IMPROPER: {len(check.conflicts)} conflicting pairs")
    return status, payload, "\n".join(lines)


def _job_discharge(obj, opts):
    d = _need_drawing(obj, "discharge")
    _require_valid(d)
    p = planarize(d)
    try:
        ledger = apply_rules(p, d.graph)
    except DisconnectedError as exc:
        raise InputError(str(exc)) from None
    ok = ledger.conserved and ledger.replay() == ledger.final and ledger.initial_total == EULER_TOTAL
    return ("PASS" if ok else "FAIL"), ledger_to_dict(ledger), format_ledger(ledger).rstrip("\n")


def _lemma3_4(g: Graph, which: set, budget: int) -> list[LemmaReport]:
    out = []
    delta = g.max_degree()
    crit = None

    def criticality():
        nonlocal crit
        if crit is None:
            crit = is_critical(g, budget)
        return crit

    def gated(tag: str, run):
        c = criticality()
        if c.verdict is CriticalVerdict.UNKNOWN:
            return LemmaReport(tag, Verdict.UNKNOWN, note=f"criticality undecided: {c.reason}")
        if c.verdict is CriticalVerdict.NOT_CRITICAL:
            reason = "class ONE" if c.reason == "class ONE" else "not critical"
            return LemmaReport(tag, Verdict.NOT_APPLICABLE, note=reason)
        return run()

    if "3" in which:
        out.append(gated("lemma3", lambda: check_vizing_adjacency(g, assume_critical=True)))
    if "4" in which:
        if delta < 8:
            out.append(LemmaReport("lemma4", Verdict.NOT_APPLICABLE, note=f"k = max degree {delta} < 8"))
        else:
            out.append(gated("lemma4", lambda: check_critical_size(g, delta, assume_k_critical=True)))
    return out


def _job_check(obj, opts):
    which = set(opts["lemmas"])
    g = _graph_of(obj)
    d = obj if isinstance(obj, OnePlanarDrawing) else None
    if d is not None:
        _require_valid(d)
    reports: list[LemmaReport] = []
    if which & {"1", "2"}:
        if d is None:
            for t in sorted(which & {"1", "2"}):
                reports.append(LemmaReport(f"lemma{t}", Verdict.NOT_APPLICABLE, note="no drawing supplied"))
        else:
            p = planarize(d)
            if "1" in which:
                reports.append(check_lemma1(p, g))
            if "2" in which:
                reports.append(check_lemma2(p, g))
    reports.extend(_lemma3_4(g, which, opts["budget"]))
    if opts["theorem1"]:
        if d is None:
            reports.append(LemmaReport("theorem1", Verdict.NOT_APPLICABLE, note="no drawing supplied"))
        else:
            reports.append(check_theorem1(g, d, opts["budget"]))
    verdicts = {r.verdict for r in reports}
    status = "FAIL" if Verdict.FAIL in verdicts else "UNKNOWN" if Verdict.UNKNOWN in verdicts else "PASS"
    lines = []
    for r in reports:
        head = f"{r.tag} {r.verdict.value}"
        if r.note:
            head += f" ({r.note})"
        lines.append(head)
        lines.extend(f"  violation {v}" for v in r.violations)
        lines.extend(f"  caveat {c}" for c in r.caveats if r.verdict is Verdict.FAIL)
    return status, {"reports": [r.to_dict() for r in reports]}, "\n".join(lines)


_JOBS = {"validate": _job_validate, "color": _job_color, "discharge": _job_discharge, "check": _job_check}


def _run_file(task) -> dict:
    command, path, opts = task
    result = {"path": path, "sha256": None}
    try:
        obj, digest = _read(path)
        result["sha256"] = digest
        status, payload, text = _JOBS[command](obj, opts)
    except InputError as exc:
        status, payload, text = "ERROR", {"error": str(exc)}, f"error: {exc}"
    result.update(status=status, result=payload, text=text)
    return result


def _run_gen(task) -> dict:
    spec_fields, out = task
    result = {"path": out, "sha256": None}
    try:
        spec = GenSpec(**spec_fields)
    except ValueError as exc:
        result.update(status="ERROR", result={"error": str(exc)}, text=f"error: {exc}")
        return result
    try:
        inst = gen_theorem1_instance(spec)
    except GenerationError as exc:
        result.update(status="GENERATION_FAILURE", result={"error": str(exc)}, text=f"generation failure: {exc}")
        return result
    meta = inst.metadata()
    data = format_opg(inst.drawing, header=meta).encode()
    try:
        Path(out).write_bytes(data)
    except OSError as exc:
        result.update(status="ERROR", result={"error": str(exc)}, text=f"error: {out}: {exc.strerror or exc}")
        return result
    result.update(
        sha256=hashlib.sha256(data).hexdigest(), status="PASS", result=meta,
        text=" ".join(f"{k}={v}" for k, v in meta.items()),
    )
    return result


# ---------------------------------------------------------------------------
# driver


def _budget(value: Optional[int]) -> int:
    if value is not None:
        if value < 1:
            raise InputError("--budget must be positive")
        return value
    env = os.environ.get(BUDGET_ENV)
    if env is None or env == "":
        return DEFAULT_BUDGET
    try:
        b = int(env)
    except ValueError:
        raise InputError(f"{BUDGET_ENV}={env!r} is not an integer") from None
    if b < 1:
        raise InputError(f"{BUDGET_ENV} must be positive")
    return b


def _map(fn, tasks, jobs: int):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def _tasks(args) -> tuple:
    if args.command == "gen":
        base = {"seed": args.seed, "n": args.n, "target_delta": args.delta,
                "crossings": args.crossings, "mode": args.mode}
        if args.count == 1:
            return _run_gen, [(base, args.out)]
        outdir = Path(args.out)
        try:
            outdir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise InputError(f"{outdir}: {exc.strerror or exc}") from None
        return _run_gen, [
            (dict(base, seed=args.seed + i), str(outdir / f"seed{args.seed + i}.opg")) for i in range(args.count)
        ]
    opts = {}
    if args.command == "color":
        opts = {"method": "vizing" if args.vizing else "exact", "budget": _budget(args.budget)}
    elif args.command == "check":
        lemmas = [] if args.lemma is None else (["1", "2", "3", "4"] if args.lemma == "all" else [args.lemma])
        if args.lemma is None and not args.theorem1:
            lemmas = ["1", "2", "3", "4"]
        opts = {"lemmas": lemmas, "theorem1": args.theorem1, "budget": _budget(args.budget)}
    return _run_file, [(args.command, p, opts) for p in args.paths]


def _render_text(report: dict) -> str:
    lines = [f"command {report['command']}"]
    if "timestamp" in report:
        lines.append(f"timestamp {report['timestamp']}")
    for r in report["results"]:
        lines.append(f"== {r['path']}")
        if r["sha256"]:
            lines.append(f"sha256 {r['sha256']}")
        lines.append(r["text"])
        lines.append(f"status {r['status']}")
    lines.append(f"exit {report['exit_code']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the run report as one JSON document")
    common.add_argument("--deterministic", action="store_true", help="omit the timestamp field")
    common.add_argument("--jobs", type=int, default=1, metavar="J", help="worker processes (default 1)")

    parser = argparse.ArgumentParser(prog="onechroma", description="Edge coloring and discharging checks "
                                     "for triangle-free 1-planar drawings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a drawing's structure")
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("color", parents=[common], help="edge-color a graph")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--exact", action="store_true", help="decide the chromatic index (default)")
    how.add_argument("--vizing", action="store_true", help="fast coloring with at most max degree + 1 colors")
    p.add_argument("--budget", type=int, help=f"search node budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("discharge", parents=[common], help="apply the charge rules and print the ledger")
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("check", parents=[common], help="run lemma and theorem checks")
    p.add_argument("--lemma", choices=["1", "2", "3", "4", "all"])
    p.add_argument("--theorem1", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("paths", nargs="+")

    p = sub.add_parser("gen", parents=[common], help="generate triangle-free 1-planar instances")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--crossings", type=int, default=0)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.BIPARTITE.value)
    p.add_argument("--count", type=int, default=1, help="seeds seed..seed+count-1; --out is then a directory")
    p.add_argument("--out", required=True)
    return parser


def main(argv: Optional[list] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code means UNKNOWN here
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_PASS
    report = {"command": "onechroma " + shlex.join(argv)}
    if not args.deterministic:
        report["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        if args.command == "gen" and args.count < 1:
            raise InputError("--count must be at least 1")
        fn, tasks = _tasks(args)
    except InputError as exc:
        print(f"onechroma: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = sorted(_map(fn, tasks, args.jobs), key=lambda r: r["path"])
    status = _worst(r["status"] for r in results)
    report.update(status=status, exit_code=_STATUS_EXIT[status], results=results)
    if args.json:
        for r in results:
            r.pop("text")
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render_text(report))
    return report["exit_code"]


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
