import argparse
import sys
from typing import List, Optional

from dotenv import load_dotenv
from rich.markup import escape

from utils.config_utils import apply_env_overrides, get_config
from utils.report_utils import emit_document, render_json
from utils.rich_utils import err_console
from weil_matrix_lab.weil_matrix_lab_types import CocycleObstruction
from weil_tools.weil_tools_types import (
    EVEN_PRIME_COMMANDS,
    EXIT_FAIL,
    EXIT_USAGE,
    OUTPUT_FORMATS,
    RunConfig,
)
from weil_tools.weil_tools_utils import (
    ExitPayload,
    cmd_audit,
    cmd_branch,
    cmd_brauer,
    cmd_classify,
    cmd_dim,
    cmd_report,
    cmd_weights,
    cmd_weilcheck,
    emit_result,
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS)
    common.add_argument("--config", dest="config_path", help="path to a config.toml")
    common.add_argument("--parallelism", type=int)
    common.add_argument("--output", dest="output_path", help="write the JSON document here")
    common.add_argument("--no-timings", action="store_true", help="omit wall-clock seconds")
    common.add_argument(
        "--omega-cn-strict",
        action="store_true",
        help="leave the boundary entry ω_3 out of the C_3 table",
    )

    parser = argparse.ArgumentParser(
        prog="weil_tools",
        description="Multiplicity-one classification and Weil representation checks",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser(
        "classify", parents=[common], help="decide multiplicity one for a highest weight"
    )
    classify.add_argument("family")
    classify.add_argument("rank", type=int)
    classify.add_argument("p", type=int)
    classify.add_argument("weight", help="e.g. 0,0,0,1 or ω_1+2ω_3, or ω′ / ω″ for type C")

    for name, help_text in (
        ("weights", "characteristic-zero weight system of V(λ)"),
        ("dim", "Weyl dimension and number of distinct weights"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("family")
        sub.add_argument("rank", type=int)
        sub.add_argument("weight")
        sub.add_argument("--p", type=int, help="prime for the ω′ / ω″ shortcuts")

    branch = commands.add_parser(
        "branch", parents=[common], help="Levi and subgroup branching of the Weil weights"
    )
    branch.add_argument("n", type=int)
    branch.add_argument("p", type=int)
    branch.add_argument("--k", type=int, help="single Levi split; all splits when omitted")

    weilcheck = commands.add_parser(
        "weilcheck", parents=[common], help="build the Weil representation and verify it"
    )
    weilcheck.add_argument("n", type=int)
    weilcheck.add_argument("p", type=int)
    weilcheck.add_argument("--samples", type=int, default=1000)

    brauer = commands.add_parser(
        "brauer", parents=[common], help="Brauer character comparison for SL_2(p)"
    )
    brauer.add_argument("p", type=int)

    audit = commands.add_parser(
        "audit", parents=[common], help="cross-check classify on a grid of weights"
    )
    audit.add_argument("family")
    audit.add_argument("rank", type=int)
    audit.add_argument("p", type=int)
    audit.add_argument("--bound", type=int, help="largest coordinate on the grid")
    audit.add_argument("--export", help="write the grid to a .csv or .parquet file")

    report = commands.add_parser("report", parents=[common], help="run the acceptance grid")
    report.add_argument("--quick", action="store_true", help="smaller grids, n = 1 Weil sizes")

    return parser


def load_run_config(args: argparse.Namespace) -> RunConfig:
    """Defaults, then config file, then environment, then command-line flags."""
    section = apply_env_overrides(get_config(args.command, args.config_path))
    config = RunConfig.from_dict(section, allow_even_prime=args.command in EVEN_PRIME_COMMANDS)
    return config.with_overrides(
        output_format=args.output_format,
        parallelism=args.parallelism,
        output_path=args.output_path,
        omega_cn_strict=True if args.omega_cn_strict else None,
        timings=False if args.no_timings else None,
    )


def dispatch(args: argparse.Namespace, config: RunConfig) -> ExitPayload:
    match args.command:
        case "classify":
            return cmd_classify(config, args.family, args.rank, args.p, args.weight)
        case "weights":
            return cmd_weights(config, args.family, args.rank, args.weight, args.p)
        case "dim":
            return cmd_dim(config, args.family, args.rank, args.weight, args.p)
        case "branch":
            return cmd_branch(config, args.n, args.p, args.k)
        case "weilcheck":
            return cmd_weilcheck(config, args.n, args.p, args.samples)
        case "brauer":
            return cmd_brauer(config, args.p)
        case "audit":
            return cmd_audit(config, args.family, args.rank, args.p, args.bound, args.export)
        case "report":
            return cmd_report(config, args.quick)
    raise ValueError(f"Unknown command '{args.command}'")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    output_path = args.output_path
    try:
        load_dotenv(override=True)
        config = load_run_config(args)
        payload, exit_code = dispatch(args, config)
        emit_result(args.command, payload, config)
        return exit_code

    except CocycleObstruction as e:
        err_console.print(f"[bold red]Cocycle obstruction:[/] {escape(str(e))}")
        emit_document(render_json(args.command, {"obstruction": e, "passed": False}), output_path)
        return EXIT_FAIL
    except (ValueError, KeyError, FileNotFoundError) as e:
        err_console.print(f"[bold red]Fatal error:[/] {escape(str(e))}")
        return EXIT_USAGE
    except Exception as e:
        err_console.print(f"[bold red]Fatal error:[/] {escape(str(e))}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
