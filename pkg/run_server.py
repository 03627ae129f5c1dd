from cli.commands import RunOptions
from core.config.config_env import config_env
from core.config.settings import Settings
from core.utils.log import configure_logging
from server.mserver import MServer


def main(settings: Settings):
    configure_logging(settings.log_level)
    cm_closure_server = MServer(settings.host, settings.port, options=RunOptions.from_settings(settings))
    cm_closure_server.run()


if __name__ == "__main__":
    config_env()
    main(Settings.from_env())
