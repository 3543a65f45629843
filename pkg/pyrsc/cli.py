"""
Command-line interface.

Complex files (``.cplx``) are plain text: ``#`` starts a comment, the first
data line is ``n <n_vertices>`` and every further line lists the vertices of
one facet in ascending order. Wherever a complex is expected, the name of a
bundled triangulation (torus, rp2, dunce_hat, cp2, klein_bottle, wedge,
empty_triangle) works as well.

Exit codes: 0 success, 1 computational failure (including an unreached
collapse), 2 usage, input or parse error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .calculus import fn_params, fowler_table
from .cohomology import Field, betti, cup_length, steenrod_nontrivial_on_components
from .errors import (
    CochainInputError,
    ComplexInputError,
    ExperimentConfigError,
    ParamError,
    PyrscError,
)
from .experiments import (
    ResultJSONEncoder,
    export_csv,
    export_summary_json,
    load_config,
    plot_all,
    result_to_dict,
    run,
)
from .experiments.config import __doc__ as CONFIG_SCHEMA
from .sampling import ModelKind, ParamVector, SampleSeed, TailPolicy, sample_complex
from .simplicial import (
    BUNDLED,
    SimplicialComplex,
    collapse_to_dim,
    count_subcomplex_copies,
    dump_complex,
    load_bundled,
    load_complex,
    prime_suspension,
    save_complex,
    strong_components,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Raised for flag combinations argparse cannot check on its own"""

    pass


def _floats(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _load(spec: str) -> SimplicialComplex:
    path = Path(spec)
    if path.exists():
        return load_complex(path)
    if spec in BUNDLED:
        return load_bundled(spec)
    raise UsageError(f"{spec}: no such file or bundled complex")


def _emit(data: Any) -> None:
    print(json.dumps(data, cls=ResultJSONEncoder, indent=2, sort_keys=True))


def _write_or_print(K: SimplicialComplex, out: Optional[str], comment: str) -> None:
    if out:
        save_complex(K, out, comment)
    else:
        sys.stdout.write(dump_complex(K, comment))


def _params(args: argparse.Namespace) -> ParamVector:
    tail = TailPolicy(args.tail)
    if (args.alpha is None) == (args.p is None):
        raise UsageError("give exactly one of --alpha or --p")
    if args.alpha is not None:
        return ParamVector.from_alphas(args.alpha, tail, args.dim_cap)
    return ParamVector.from_probabilities(args.p, tail, args.dim_cap)


# Subcommands


def cmd_sample(args: argparse.Namespace) -> int:
    params = _params(args)
    K = sample_complex(
        ModelKind(args.model), args.n, params, SampleSeed(args.seed, args.trial), args.max_simplices
    )
    comment = f"{args.model} model, n={args.n}, seed={args.seed}, trial={args.trial}"
    if args.json:
        if args.out:
            save_complex(K, args.out, comment)
        _emit({"n_vertices": K.n_vertices, "f_vector": list(K.f_vector), "out": args.out})
        return EXIT_OK
    _write_or_print(K, args.out, comment)
    if args.out:
        print(f"f-vector: {K.f_vector}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    K = _load(args.input)
    field = Field.parse(args.field)
    chosen = args.betti or args.cup_length or args.sq or args.components or args.collapse
    report: Dict[str, Any] = {"n_vertices": K.n_vertices, "f_vector": list(K.f_vector)}
    if args.betti or not chosen:
        report["betti"] = betti(K, field)
    if args.cup_length or not chosen:
        report["cup_length"] = cup_length(K, field)
    if args.sq:
        report["sq"] = {
            f"Sq{i}->H{d}": steenrod_nontrivial_on_components(K, i, d)
            for d in range(1, K.dim + 1)
            for i in range(1, d + 1)
        }
    if args.components is not None:
        comps = strong_components(K, args.components)
        report["strong_components"] = [list(c.f_vector) for c in comps]
    collapse_failed = False
    if args.collapse is not None:
        reached, ok = collapse_to_dim(K, args.collapse, seed=args.seed, restarts=args.restarts)
        report["collapse"] = {
            "target": args.collapse,
            "success": ok,
            "reached_dimension": reached.dim,
            "f_vector": list(reached.f_vector),
        }
        collapse_failed = not ok

    if args.json:
        report["field"] = str(field)
        _emit(report)
    else:
        print(f"f-vector: {K.f_vector}")
        if "betti" in report:
            print(f"betti over {field}: {tuple(report['betti'])}")
        if "cup_length" in report:
            print(f"cup length over {field}: {report['cup_length']}")
        for key, fired in report.get("sq", {}).items():
            print(f"{key}: {'nonzero' if fired else 'zero'}")
        if "strong_components" in report:
            print(f"strong {args.components}-components: {len(report['strong_components'])}")
            for fv in report["strong_components"]:
                print(f"  f-vector {tuple(fv)}")
        if "collapse" in report:
            c = report["collapse"]
            state = "success" if c["success"] else "failure"
            reached_dim = c["reached_dimension"]
            print(f"collapse to dimension {args.collapse}: {state} (reached {reached_dim})")
    return EXIT_FAILURE if collapse_failed else EXIT_OK


def cmd_thresholds(args: argparse.Namespace) -> int:
    tail = TailPolicy(args.tail)
    table = fowler_table(args.alpha, args.kmax, tail)
    fn = fn_params(args.alpha, args.D, tail) if args.fn else None
    if args.json:
        _emit({"fowler": table, "farber_nowik": fn})
        return EXIT_OK
    print(f"{'k':>3} {'s1':>10} {'s2':>10}  region")
    for row in table:
        flag = "  (s1 = 1)" if row.s1_boundary else ""
        print(f"{row.k:>3} {row.s1:>10.6g} {row.s2:>10.6g}  {row.region.value}{flag}")
    if fn is not None:
        print(f"beta = {fn.beta:.6g}, l = {fn.l}, l' = {fn.l_prime}, boundary = {fn.boundary}")
        for k in range(1, fn.D + 1):
            print(f"  k={k}: gamma={fn.gamma(k):.6g} nu={fn.nu(k):.6g} e={fn.e(k):.6g}")
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    result = run(
        config, workers=args.workers, archive_dir=args.archive_dir, silent=not args.verbose
    )
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        export_csv(result, out_dir / f"{config.name}.csv")
        export_summary_json(result, out_dir / f"{config.name}.json")
        if args.plots:
            plot_all(result, out_dir)
    if args.json:
        _emit(result_to_dict(result))
    else:
        for s in result.summaries:
            print(
                f"n={s.n:<4} {s.label:<28} mean={s.mean:.4g} sd={s.sd:.4g} "
                f"success={s.success_fraction:.3f}±{s.success_sd:.3f} "
                f"trials={s.trials} censored={s.censored}"
            )
        for path in result.counterexamples:
            print(f"counterexample: {path}")
    if args.check:
        missed = [m.label for m in config.measurements if not result.meets_bar(m.label)]
        if missed:
            logger.warning(f"Below the success bar at the largest n: {missed}")
            return EXIT_FAILURE
    return EXIT_OK


def cmd_suspend(args: argparse.Namespace) -> int:
    K = _load(args.input)
    S = prime_suspension(K, args.r)
    comment = f"prime suspension (r={args.r}) of {args.input}"
    if args.json:
        if args.out:
            save_complex(S, args.out, comment)
        _emit({"n_vertices": S.n_vertices, "f_vector": list(S.f_vector), "out": args.out})
        return EXIT_OK
    _write_or_print(S, args.out, comment)
    return EXIT_OK


def cmd_collapse(args: argparse.Namespace) -> int:
    K = _load(args.input)
    reached, ok = collapse_to_dim(K, args.d, seed=args.seed, restarts=args.restarts)
    if args.out:
        save_complex(reached, args.out, f"collapse of {args.input} towards dimension {args.d}")
    if args.json:
        _emit({"success": ok, "reached_dimension": reached.dim, "f_vector": list(reached.f_vector)})
    else:
        state = "success" if ok else "failure"
        print(f"collapse to dimension {args.d}: {state}; best f-vector {reached.f_vector}")
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_count(args: argparse.Namespace) -> int:
    pattern = _load(args.pattern)
    host = _load(args.host)
    embeddings, automorphisms, copies = count_subcomplex_copies(pattern, host)
    if args.json:
        _emit({"embeddings": embeddings, "automorphisms": automorphisms, "copies": copies})
    else:
        print(f"{embeddings} {automorphisms} {copies}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pyrsc",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("sample", help="sample a random complex")
    p.add_argument("--model", choices=[m.value for m in ModelKind], default="lower")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=_floats, help="exponents alpha_1,...,alpha_D")
    p.add_argument("--p", type=_floats, help="fixed probabilities p_1,...,p_D")
    p.add_argument("--tail", choices=[t.value for t in TailPolicy], default="zero")
    p.add_argument("--dim-cap", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trial", type=int, default=0)
    p.add_argument("--max-simplices", type=int, default=None)
    p.add_argument("--out", help="output .cplx file (stdout if omitted)")
    add_json(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("analyze", help="cohomology and structure of a complex")
    p.add_argument("input", help=".cplx file or bundled name")
    p.add_argument("--field", default="q", help="q, f2, f3, f5, ...")
    p.add_argument("--betti", action="store_true")
    p.add_argument("--cup-length", action="store_true")
    p.add_argument("--sq", action="store_true", help="Sq^i nontriviality matrix over F2")
    p.add_argument("--components", type=int, metavar="D", help="strong D-components")
    p.add_argument("--collapse", type=int, metavar="D", help="try to collapse onto dimension D")
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    add_json(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("thresholds", help="Fowler regions and upper-model exponents")
    p.add_argument("--alpha", type=_floats, required=True)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--tail", choices=[t.value for t in TailPolicy], default="zero")
    p.add_argument("--fn", action="store_true", help="also print upper-model exponents")
    p.add_argument("--D", type=int, default=None, help="dimensions for --fn")
    add_json(p)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser(
        "experiment",
        help="run a Monte Carlo experiment",
        description=CONFIG_SCHEMA,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("config", help="experiment JSON file")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir", help="directory for <name>.csv and <name>.json")
    p.add_argument("--archive-dir", help="directory for counterexample complexes")
    p.add_argument("--plots", action="store_true", help="write SVG trend plots to --out-dir")
    p.add_argument("--check", action="store_true", help="exit 1 when a bar is missed")
    add_json(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("suspend", help="iterated prime suspension")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--out")
    add_json(p)
    p.set_defaults(func=cmd_suspend)

    p = sub.add_parser("collapse", help="randomized greedy collapse")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=16)
    p.add_argument("--out")
    add_json(p)
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("count", help="copies of a pattern in a host complex")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    add_json(p)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return int(args.func(args))
    except (
        UsageError,
        ComplexInputError,
        ParamError,
        CochainInputError,
        ExperimentConfigError,
        OSError,
    ) as e:
        print(f"pyrsc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PyrscError as e:
        print(f"pyrsc: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
