"""
@description: Loads environment variables from a .env file through python-dotenv.
             Settings (core.config.settings) reads the resulting environment.
"""
from dotenv import load_dotenv


def config_env(path: str = ".env") -> None:
    """
    Load environment variables from ``path``. A missing file is not an error.
    :example:
        # .env
        # CM_CLOSURE_ENUMERATION_CAP=18
        config_env()
        settings = Settings.from_env()
    :return: None
    """
    load_dotenv(path)
