"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
3 vertex budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass

from .curves import PantsDecomposition, multicurve_from_json, pants_from_chords
from .errors import BudgetExceededError, PantsGraphError
from .farey import farey_exhaustion
from .normalization import normalize_edge, normalize_vertex, orbit_cover_check
from .pants_graph import build_Zn, cycles_of_length
from .rigid_sets import build_X5, build_Xn, default_budget, exhaustion_sequence
from .surface import ChordId
from . import verify as V

log = logging.getLogger("pantsgraph")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_SEED = 0


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    steps: int | None = None
    budget: int | None = None
    seed: int = DEFAULT_SEED
    export: str | None = None
    out: str | None = None


class UsageError(Exception):
    pass


def _dump(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_fragment(frag, args) -> None:
    if args.stats:
        _emit(_dump(frag.stats(), compact=True), None if args.export else args.out)
    if args.export == "json":
        _emit(_dump(frag.to_json()), args.out)
    elif args.export == "dot":
        _emit(frag.to_dot(), args.out)
    elif not args.stats:
        _emit(_dump(frag.stats(), compact=True), args.out)


def _load_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _pants_from_json(n: int, data) -> PantsDecomposition:
    if isinstance(data, dict) and "chords" in data and data["chords"] is not None:
        return PantsDecomposition(pants_from_chords(n, [ChordId(int(i), int(j)) for i, j in data["chords"]]).curves, n)
    return multicurve_from_json(n, data, PantsDecomposition)


# --------------------------------------------------------------------------
# commands

def cmd_build(args) -> int:
    if args.which == "zn":
        frag = build_Zn(args.n)
    elif args.which == "x5":
        if args.n not in (None, 5):
            raise UsageError("x5 lives on S_(0,5)")
        frag = build_X5()
    else:
        frag = build_Xn(args.n)
    _emit_fragment(frag, args)
    return EXIT_OK


def cmd_exhaust(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    stages = exhaustion_sequence(args.n, args.steps, budget)
    if args.export:
        _emit_fragment(stages[-1].fragment, args)
    else:
        _emit(_dump({"n": args.n, "budget": budget, "stages": [s.stats() for s in stages]}), args.out)
    return EXIT_OK


def cmd_normalize(args) -> int:
    data = _load_json(args.input)
    if not isinstance(data, dict) or "n" not in data:
        raise UsageError("input must be a JSON object with an 'n' field")
    n = int(data["n"])
    if args.which == "vertex":
        p = _pants_from_json(n, data.get("vertex", data))
        res = normalize_vertex(p)
        _emit(_dump({"n": n, **res.to_json()}), args.out)
    else:
        if "p1" not in data or "p2" not in data:
            raise UsageError("edge input needs 'p1' and 'p2'")
        p1, p2 = _pants_from_json(n, data["p1"]), _pants_from_json(n, data["p2"])
        res = normalize_edge(p1, p2)
        _emit(_dump({"n": n, **res.to_json()}), args.out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    rep = orbit_cover_check(args.n, args.trials, args.max_word, args.seed)
    _emit(_dump(rep.to_json()), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


def _alpha(args) -> ChordId:
    if not args.alpha:
        raise UsageError("this check needs --alpha I J")
    return ChordId(*args.alpha)


def cmd_verify(args) -> int:
    n = args.n
    if args.which == "all":
        reports = V.verify_all(n, seed=args.seed, trials=args.trials, max_word_len=args.max_word)
    elif args.which == "z5":
        reports = [V.verify_z5_pentagon()]
    elif args.which == "x5":
        reports = [V.verify_x5_shape()]
    elif args.which == "overlap":
        reports = [V.verify_overlap_n5(_alpha(args), args.sign)]
    elif args.which == "restriction":
        reports = [V.verify_chain_restriction(n, _alpha(args))]
    elif args.which == "overlap-contains":
        reports = [V.verify_overlap_contains(n, _alpha(args), args.sign)]
    elif args.which == "coverage":
        reports = [V.verify_exhaustion_coverage(n, args.depth)]
    else:
        reports = [V.verify_farey()]
    out = []
    for r in reports:
        d = r.to_json(with_runtime=args.with_runtime)
        d["params"] = {**d["params"], "seed": args.seed}
        out.append(d)
    _emit(_dump(out), args.out)
    failed = [r for r in reports if not r.ok]
    for r in failed:
        log.warning("check %s %s failed", r.check, r.params)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_farey(args) -> int:
    stages = farey_exhaustion(steps=args.steps)
    if args.export == "json":
        _emit(_dump(stages[-1].to_json()), args.out)
    elif args.export == "dot":
        _emit(stages[-1].to_dot(), args.out)
    else:
        _emit(_dump({"stages": [g.stats() for g in stages]}), args.out)
    return EXIT_OK


def _fragment_for(args):
    if args.which == "zn":
        return build_Zn(args.n)
    if args.which == "x5":
        return build_X5()
    if args.which == "xn":
        return build_Xn(args.n)
    return exhaustion_sequence(args.n, args.steps, args.budget)[-1].fragment


def cmd_export(args) -> int:
    frag = _fragment_for(args)
    _emit(frag.to_dot() if args.format == "dot" else _dump(frag.to_json()), args.out)
    return EXIT_OK


def cmd_stats(args) -> int:
    frag = _fragment_for(args)
    degrees: dict = {}
    for k in frag.vertices:
        d = frag.degree(k)
        degrees[d] = degrees.get(d, 0) + 1
    info = {
        **frag.stats(),
        "connected": frag.is_connected(),
        "degree_histogram": {str(d): c for d, c in sorted(degrees.items())},
        "triangles": len(cycles_of_length(frag, 3)),
    }
    if len(frag) <= 2000:
        info["pentagons"] = len(cycles_of_length(frag, 5))
    _emit(_dump(info), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pantsgraph", description="Finite pieces of pants graphs of punctured spheres.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, n_required=True):
        sp.add_argument("--n", type=int, required=n_required)
        sp.add_argument("--out", "-o")

    def frag_out(sp):
        sp.add_argument("--export", choices=("dot", "json"))
        sp.add_argument("--stats", action="store_true")

    b = sub.add_parser("build", help="build Z_n, X_5 or X_n")
    b.add_argument("which", choices=("zn", "x5", "xn"))
    common(b, n_required=False)
    frag_out(b)
    b.set_defaults(func=cmd_build)

    e = sub.add_parser("exhaust", help="half-twist exhaustion stages")
    common(e)
    e.add_argument("--steps", type=int, required=True)
    e.add_argument("--budget", type=int)
    frag_out(e)
    e.set_defaults(func=cmd_exhaust)

    nm = sub.add_parser("normalize", help="move a vertex or edge into Z_n")
    nm.add_argument("which", choices=("vertex", "edge"))
    nm.add_argument("--in", dest="input", required=True)
    nm.add_argument("--out", "-o")
    nm.set_defaults(func=cmd_normalize)

    o = sub.add_parser("orbit-check", help="randomized normalization check")
    common(o)
    o.add_argument("--trials", type=int, default=100)
    o.add_argument("--max-word", type=int, default=6)
    o.add_argument("--seed", type=int, default=DEFAULT_SEED)
    o.set_defaults(func=cmd_orbit)

    v = sub.add_parser("verify", help="structural checks")
    v.add_argument("which", choices=("all", "z5", "x5", "overlap", "restriction", "overlap-contains", "coverage", "farey"))
    common(v, n_required=False)
    v.add_argument("--alpha", type=int, nargs=2, metavar=("I", "J"))
    v.add_argument("--sign", type=int, choices=(1, -1), default=1)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--max-word", type=int, default=6)
    v.add_argument("--depth", type=int, default=2)
    v.add_argument("--with-runtime", action="store_true", help="include timings (breaks byte-identical output)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("farey-exhaust", help="triangle exhaustion of the Farey graph")
    f.add_argument("--steps", type=int, required=True)
    f.add_argument("--export", choices=("dot", "json"))
    f.add_argument("--out", "-o")
    f.set_defaults(func=cmd_farey)

    for name, func, helptext in (("export", cmd_export, "write a fragment as DOT or JSON"),
                                 ("stats", cmd_stats, "summary statistics of a fragment")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("which", choices=("zn", "x5", "xn", "stage"))
        common(sp, n_required=False)
        sp.add_argument("--steps", type=int, default=1)
        sp.add_argument("--budget", type=int)
        if name == "export":
            sp.add_argument("--format", choices=("dot", "json"), default="json")
        sp.set_defaults(func=func)
    return p


def _check_args(args) -> None:
    which = getattr(args, "which", None)
    if args.command in ("verify",) and which in ("all", "restriction", "overlap-contains", "coverage") and args.n is None:
        raise UsageError("--n is required for this check")
    if args.command in ("build", "export", "stats") and which in ("zn", "xn", "stage") and args.n is None:
        raise UsageError("--n is required")
    if getattr(args, "budget", None) is not None and args.budget <= 0:
        raise UsageError("--budget must be positive")
    if getattr(args, "steps", None) is not None and args.steps < 0:
        raise UsageError("--steps must be nonnegative")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        _check_args(args)
        cfg = RunConfig(args.command, getattr(args, "n", None), getattr(args, "steps", None),
                        getattr(args, "budget", None), getattr(args, "seed", DEFAULT_SEED),
                        getattr(args, "export", None) or getattr(args, "format", None), getattr(args, "out", None))
        log.info("run %s", asdict(cfg))
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"pantsgraph: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, PantsGraphError, ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"pantsgraph: error: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
