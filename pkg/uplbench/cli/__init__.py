from .cli_module import run, main, build_parser, EXIT_POSITIVE, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_INPUT_ERROR
from .config_module import CliConfig, STANDARD
