"""Command-line front end: example check, Monte Carlo runs, figure export."""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from .core import (
    ConditionalStrategy,
    FrequencyTriple,
    ONE_THIRD,
    compute_omega,
    solve_optimal_frequencies,
)
from .experiments import CLASS_FILTERS, MODELS, run_experiment
from .report import SvgOptions, emit_csv, emit_svg

# The known optimal strategy at q = (20/24, 1/24, 3/24) used as a self-check.
EXAMPLE_STRATEGY = ConditionalStrategy(
    3 / 10, 17 / 40, 1 / 2, 1 / 2, 1 / 3, 1 / 3
)
EXAMPLE_FREQUENCIES = FrequencyTriple(20 / 24, 1 / 24, 3 / 24)

# Figure panels: scatter of solved triples per (model, class filter).
# Figures 1-3 contrast classical (left) and quantum (right); figure 4 shows
# quantum transitive strategies under both preference relations.
FIGURE_PANELS = {
    (1, "left"): ("classical", "all"),
    (1, "right"): ("quantum", "all"),
    (2, "left"): ("classical", "intransitive1"),
    (2, "right"): ("quantum", "intransitive1"),
    (3, "left"): ("classical", "intransitive2"),
    (3, "right"): ("quantum", "intransitive2"),
    (4, "left"): ("quantum", "transitive1"),
    (4, "right"): ("quantum", "transitive2"),
}


def _cmd_verify_example(args) -> int:
    omega = compute_omega(EXAMPLE_STRATEGY, EXAMPLE_FREQUENCIES)
    solved = solve_optimal_frequencies(EXAMPLE_STRATEGY)
    omega_dev = max(abs(w - ONE_THIRD) for w in omega.as_tuple())
    freq_dev = max(
        abs(a - b)
        for a, b in zip(solved.as_tuple(), EXAMPLE_FREQUENCIES.as_tuple())
    )
    print(f"strategy free coordinates: {EXAMPLE_STRATEGY.free_coords()}")
    print(f"diet frequencies: {omega.as_tuple()}")
    print(f"max |omega - 1/3| = {omega_dev:.3g}")
    print(f"solved frequency triple: {solved.as_tuple()}")
    print(f"expected frequency triple: {EXAMPLE_FREQUENCIES.as_tuple()}")
    print(f"max |q - expected| = {freq_dev:.3g}")
    ok = omega_dev <= 1e-12 and freq_dev <= 1e-10
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _summarize(records, n: int) -> str:
    reasons = Counter(r.reject_reason for r in records if r.reject_reason)
    kept = sum(1 for r in records if r.frequencies is not None)
    parts = [f"{kept} in-simplex records kept of {n} draws"]
    for reason, count in sorted(reasons.items()):
        parts.append(f"{count} rejected ({reason})")
    return "; ".join(parts)


def _cmd_sample(args) -> int:
    records = run_experiment(
        args.model,
        args.n,
        args.seed,
        class_filter=args.class_filter,
        partitions=args.partitions,
    )
    emit_csv(records, args.csv)
    print(f"wrote {args.csv}")
    if args.svg:
        emit_svg(records, args.svg, SvgOptions(color_by=args.color_by))
        print(f"wrote {args.svg}")
    print(_summarize(records, args.n))
    return 0


def _cmd_figure(args) -> int:
    model, class_filter = FIGURE_PANELS[(args.number, args.panel)]
    records = run_experiment(model, args.n, args.seed, class_filter=class_filter)
    emit_svg(records, args.out)
    print(f"figure {args.number} ({args.panel} panel): model={model} "
          f"class={class_filter}")
    print(_summarize(records, args.n))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foodgame",
        description="Three-food choice game: strategy sampling and simplex maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify-example",
        help="check the built-in worked optimal strategy",
    )
    verify.set_defaults(func=_cmd_verify_example)

    sample = sub.add_parser("sample", help="run a Monte Carlo experiment")
    sample.add_argument("--model", choices=MODELS, required=True)
    sample.add_argument("--n", type=int, default=10_000)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument(
        "--class",
        dest="class_filter",
        choices=CLASS_FILTERS,
        default="all",
    )
    sample.add_argument("--partitions", type=int, default=1)
    sample.add_argument("--csv", required=True)
    sample.add_argument("--svg")
    sample.add_argument("--color-by", choices=("type1", "type2"))
    sample.set_defaults(func=_cmd_sample)

    figure = sub.add_parser(
        "figure", help="render one panel of the four coverage figures"
    )
    figure.add_argument("--number", type=int, choices=(1, 2, 3, 4), required=True)
    figure.add_argument("--panel", choices=("left", "right"), required=True)
    figure.add_argument("--n", type=int, default=10_000)
    figure.add_argument("--seed", type=int, required=True)
    figure.add_argument("--out", required=True)
    figure.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
