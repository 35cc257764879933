# gof.py

import argparse
import importlib
import sys
from typing import Dict, List, Optional, TextIO

from data import errors
from resources import exceptions, logs, settings, strings


EXTENSIONS = [
        'commands.hypothesis',
        'commands.calibrate',
        'commands.experiment',
    ]


class App():
    """Command line front end. Commands are added by the setup function of each extension."""
    def __init__(self, stdout: TextIO = None, stderr: TextIO = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.parser = argparse.ArgumentParser(
            prog='gof',
            description='Tests whether the upper boundary of a regression with one-sided errors is affine.'
        )
        self.subparsers = self.parser.add_subparsers(dest='command_name', required=True)
        self.commands: Dict[str, object] = {}

    def add_command(self, command) -> None:
        command.register(self.subparsers)
        self.commands[command.name] = command

    def load_extension(self, name: str) -> None:
        importlib.import_module(name).setup(self)

    def output(self, text: str) -> None:
        print(text, file=self.stdout)

    def run(self, argv: List[str]) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as error:
            return settings.EXIT_CODES.accepted if not error.code else settings.EXIT_CODES.error
        command_line = ' '.join(['gof', *argv])
        logs.logger.info(f'Running {command_line}')
        try:
            return args.command.run(args)
        except exceptions.GofError as error:
            errors.log_error(error, command_line)
            if error.stage is not None:
                message = strings.MSG_ERROR_STAGE.format(stage=error.stage, error=error)
            else:
                message = strings.MSG_ERROR.format(error=error)
            print(message, file=self.stderr)
        except OSError as error:
            errors.log_error(error, command_line)
            print(strings.MSG_ERROR.format(error=error), file=self.stderr)
        return settings.EXIT_CODES.error


def main(argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    """Runs the command line and returns the exit code: 0 accepted, 1 rejected, 2 error"""
    app = App(stdout=stdout, stderr=stderr)
    for extension in EXTENSIONS:
        app.load_extension(extension)
    return app.run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
