# hypothesis.py
"""Binds the test command"""

import argparse
from typing import Optional

from content import hypothesis
from resources import settings, strings


def positive_float(value: str) -> float:
    """argparse type for numbers > 0"""
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} is not a number')
    if not number > 0:
        raise argparse.ArgumentTypeError(f'{value} is not > 0')
    return number


def cx_policy(value: str) -> Optional[float]:
    """argparse type for --cx: auto or a number > 0"""
    if value.lower() == 'auto':
        return None
    return positive_float(value)


class HypothesisCommand():
    """Command that tests whether the frontier of a series is affine"""
    name = 'test'

    def __init__(self, app):
        self.app = app

    def register(self, subparsers: argparse._SubParsersAction) -> None:
        parser = subparsers.add_parser(self.name, help=strings.SUBCOMMANDS[self.name],
                                       description=strings.SUBCOMMANDS[self.name])
        parser.add_argument('--data', required=True, help='Delimited text file with label and value columns')
        parser.add_argument('--h', type=positive_float, default=settings.H_DEFAULT, help='Bandwidth of the statistic')
        parser.add_argument('--h1', type=positive_float, default=None,
                            help='Bandwidth of the residuals, defaults to --h')
        parser.add_argument('--k', type=int, default=settings.K_DEFAULT, help='Order statistic depth of the scale estimate')
        parser.add_argument('--level', type=float, default=settings.LEVEL_DEFAULT, help='Test level')
        parser.add_argument('--gamma', type=positive_float, default=None, help='Known scale gamma')
        parser.add_argument('--a1', type=positive_float, default=settings.A1_DEFAULT, help='Calibration constant A1')
        parser.add_argument('--cx', type=cx_policy, default=None, help='auto or a fixed design constant C_x')
        parser.add_argument('--json', action='store_true', help='Print the report as JSON')
        parser.set_defaults(command=self)

    def run(self, args: argparse.Namespace) -> int:
        h1 = args.h if args.h1 is None else args.h1
        report = hypothesis.command_test(args.data, args.h, h1, args.k, args.level, gamma=args.gamma,
                                         a1=args.a1, cx=args.cx)
        self.app.output(report.to_json() if args.json else hypothesis.render_test(report))
        if report.result['reject1'] or report.result['reject2']:
            return settings.EXIT_CODES.rejected
        return settings.EXIT_CODES.accepted


# Initialization
def setup(app):
    app.add_command(HypothesisCommand(app))
