import sys

from cli.commands import run_command
from cli.render import render_json, render_text
from core.config.config_env import config_env
from core.config.settings import Settings
from core.utils.log import configure_logging


def main(argv: list[str]) -> int:
    settings = Settings.from_env()
    configure_logging(settings.log_level)
    report, code, as_json = run_command(argv, settings)
    if report is not None:
        sys.stdout.write(render_json(report) + "\n" if as_json else render_text(report))
    return code


if __name__ == "__main__":
    config_env()
    sys.exit(main(sys.argv[1:]))
