# adapters/inbound/cli/parser.py
import argparse
import sys
from typing import List, NoReturn, Optional, Sequence

from core.exceptions import CommandValidationError


class UsageErrorArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2 (reserved for Inconclusive)"""

    def error(self, message: str) -> NoReturn:
        raise CommandValidationError({"usage": message, "prog": self.prog})

    def parse_known_args(self, args: Optional[Sequence[str]] = None, namespace=None):
        if args is None:
            args = sys.argv[1:]
        return super().parse_known_args(self.attach_dash_values(args), namespace)

    def attach_dash_values(self, args: Sequence[str]) -> List[str]:
        """Rewrite "--xi -1/2" as "--xi=-1/2" for this parser's single-value options.

        argparse reads any value that starts with "-" and is not a plain number,
        such as "-1+2i" or "-5:0", as an option.
        """
        takes_value = {
            option
            for action in self._actions
            if action.option_strings and action.nargs is None
            for option in action.option_strings
        }

        joined: List[str] = []
        i = 0
        while i < len(args):
            token = args[i]
            if token == "--":
                joined.extend(args[i:])
                break

            following = args[i + 1] if i + 1 < len(args) else None
            if (
                token in takes_value
                and following is not None
                and following.startswith("-")
                and not following.startswith("--")
                and following not in self._option_string_actions
            ):
                joined.append(f"{token}={following}")
                i += 2
            else:
                joined.append(token)
                i += 1
        return joined


def _add_shaft_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", required=True, help="damping coefficient")
    parser.add_argument("--omega", required=True, help="undamped oscillation frequency")
    parser.add_argument("--big-omega", dest="big_omega", required=True, help="angular velocity")


def _add_gains(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kp", required=True, help="proportional gain")
    parser.add_argument("--ki", required=True, help="integral gain")


def _add_polynomial(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--coeffs", required=True, help="comma-separated descending coefficients, e.g. '3+0i,3+1i'")
    parser.add_argument("--leading", help="leading coefficient; the list is divided by it")
    parser.add_argument("--mode", choices=["auto", "exact", "float"], default="auto")
    parser.add_argument("--tol", dest="tolerance", type=float, help="relative sign tolerance in float mode")


def create_parser() -> argparse.ArgumentParser:
    """Parser for the five subcommands"""
    parser = UsageErrorArgumentParser(
        prog="routh-hurwitz",
        description="Generalized Routh-Hurwitz stability toolkit",
    )
    parser.add_argument("--log-level", dest="log_level", help="override the configured log level")
    parser.add_argument("--environment", help="settings environment (config/environments/<name>.yaml)")

    subparsers = parser.add_subparsers(dest="command", metavar="{check,table,shaft,sweep,simulate}")
    subparsers.required = True

    check = subparsers.add_parser("check", help="Hurwitz verdict of a complex polynomial")
    _add_polynomial(check)
    check.add_argument("--xi", help="test the half-plane Re(s) < xi instead of Re(s) < 0")

    table = subparsers.add_parser("table", help="full generalized Routh-Hurwitz table")
    _add_polynomial(table)

    shaft = subparsers.add_parser("shaft", help="stability conditions of the PI-controlled shaft")
    _add_shaft_params(shaft)
    _add_gains(shaft)
    shaft.add_argument("--oracle", action="store_true", help="cross-check with the root oracle")

    sweep = subparsers.add_parser("sweep", help="stability map over the (kI, kp) plane")
    _add_shaft_params(sweep)
    sweep.add_argument("--ki-range", dest="ki_range", help="lo:hi")
    sweep.add_argument("--kp-range", dest="kp_range", help="lo:hi")
    sweep.add_argument("--res", dest="resolution", help="N or NxM samples per axis")
    sweep.add_argument("--out", required=True, help="grid CSV path")
    sweep.add_argument("--svg", help="optional heatmap path")
    sweep.add_argument("--margin", type=float, help="abscissa band treated as boundary")

    simulate = subparsers.add_parser("simulate", help="RK4 simulation of the closed loop")
    _add_shaft_params(simulate)
    _add_gains(simulate)
    simulate.add_argument("--x-ref", dest="x_ref", help="reference position (complex)")
    simulate.add_argument("--x0", default="0")
    simulate.add_argument("--v0", default="0")
    simulate.add_argument("--l0", default="0")
    simulate.add_argument("--horizon", type=float)
    simulate.add_argument("--dt", type=float)
    simulate.add_argument("--sample-every", dest="sample_every", type=int)
    simulate.add_argument("--out", help="trajectory CSV path")

    return parser
