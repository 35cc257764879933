# experiment.py
"""Binds the experiment command"""

import argparse

from content import experiment
from resources import settings, strings


class ExperimentCommand():
    """Command that runs size and power experiments from a spec file"""
    name = 'experiment'

    def __init__(self, app):
        self.app = app

    def register(self, subparsers: argparse._SubParsersAction) -> None:
        parser = subparsers.add_parser(self.name, help=strings.SUBCOMMANDS[self.name],
                                       description=strings.SUBCOMMANDS[self.name])
        parser.add_argument('--spec', required=True, help='JSON or key = value file with one or more specs')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes')
        parser.add_argument('--json', action='store_true', help='Print one JSON report per line')
        parser.set_defaults(command=self)

    def run(self, args: argparse.Namespace) -> int:
        experiment_reports = experiment.command_experiment(args.spec, workers=args.workers)
        if args.json:
            self.app.output('\n'.join(report.to_json() for report in experiment_reports))
        else:
            self.app.output('\n\n'.join(experiment.render_experiment(report) for report in experiment_reports))
        return settings.EXIT_CODES.accepted


# Initialization
def setup(app):
    app.add_command(ExperimentCommand(app))
