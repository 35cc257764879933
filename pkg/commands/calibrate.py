# calibrate.py
"""Binds the calibrate command"""

import argparse

from commands.hypothesis import positive_float
from content import calibrate
from resources import settings, strings


def replicate_count(value: str) -> int:
    """argparse type for --reps: an integer >= 2"""
    try:
        reps = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} is not an integer')
    if reps < 2:
        raise argparse.ArgumentTypeError(strings.ERROR_TOO_FEW_REPS.format(reps=reps))
    return reps


def even_count(value: str) -> int:
    """argparse type for --grid-n: a positive even integer"""
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{value!r} is not an integer')
    if number < 2 or number % 2:
        raise argparse.ArgumentTypeError(f'{value} is not a positive even number')
    return number


class CalibrateCommand():
    """Command that estimates A1 by Poisson simulation"""
    name = 'calibrate'

    def __init__(self, app):
        self.app = app

    def register(self, subparsers: argparse._SubParsersAction) -> None:
        parser = subparsers.add_parser(self.name, help=strings.SUBCOMMANDS[self.name],
                                       description=strings.SUBCOMMANDS[self.name])
        parser.add_argument('--reps', type=replicate_count, default=settings.A1_REPS_DEFAULT, help='Replicates, >= 2')
        parser.add_argument('--seed', type=int, default=settings.SEED_DEFAULT, help='Master seed (env GOF_SEED)')
        parser.add_argument('--gamma', type=positive_float, default=1.0,
                            help='Frontier scale gamma, the processes have intensity gamma/2')
        parser.add_argument('--depth', type=positive_float, default=None,
                            help=f'Truncation depth, defaults to {settings.DEPTH_FACTOR}/gamma')
        parser.add_argument('--grid-n', type=even_count, default=settings.GRID_N_DEFAULT, help='Simpson intervals')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes')
        parser.add_argument('--json', action='store_true', help='Print the report as JSON')
        parser.set_defaults(command=self)

    def run(self, args: argparse.Namespace) -> int:
        report = calibrate.command_calibrate(args.reps, args.seed, gamma=args.gamma, depth=args.depth,
                                             grid_n=args.grid_n, workers=args.workers)
        self.app.output(report.to_json() if args.json else calibrate.render_calibrate(report))
        return settings.EXIT_CODES.accepted


# Initialization
def setup(app):
    app.add_command(CalibrateCommand(app))
